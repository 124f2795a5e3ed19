//! Parapolytopes over a direct-sum decomposition `R^d = R^{d_1} ⊕ … ⊕ R^{d_r}`:
//! fibers, the mitosis operations `M_i`, L_i-classes, and the balanced and
//! admissible predicates.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Face, Halfspace, HPolytope};
use crate::paramitosis::{self, Box, BoxFace, Status};
use crate::rational::{int, Point, Scalar};
use crate::weyl::{RootDatum, WeylGroup};

/// The summands of the decomposition and the reduced word they come from.
///
/// Flat coordinates follow the `y`-order: `y_{d−j+1} = x^{i_j}_{p_j}` with
/// `p_j = #{k ≥ j : i_k = i_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub dims: Vec<usize>,
    pub word: Vec<usize>,
}

impl Decomposition {
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let r = word.iter().copied().max().unwrap_or(0);
        let mut dims = vec![0; r];
        for &i in word {
            if i == 0 {
                return Err(Error::InvalidLabel("letter 0".into()));
            }
            dims[i - 1] += 1;
        }
        if dims.contains(&0) {
            return Err(Error::Invalid("every letter must occur in the word".into()));
        }
        Ok(Decomposition {
            dims,
            word: word.to_vec(),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let other = Decomposition::from_word(&self.word)?;
        if other.dims != self.dims {
            return Err(Error::Invalid("dims disagree with the word".into()));
        }
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.word.len()
    }

    pub fn r(&self) -> usize {
        self.dims.len()
    }

    /// Flat (0-based) index of `x^i_l` (both 1-based).
    pub fn flat(&self, i: usize, l: usize) -> Result<usize> {
        let d = self.d();
        let mut seen = 0;
        for j in (0..d).rev() {
            if self.word[j] == i {
                seen += 1;
                if seen == l {
                    return Ok(d - 1 - j);
                }
            }
        }
        Err(Error::InvalidLabel(format!("x^{i}_{l}")))
    }

    /// The label `(i, l)` of a flat index.
    pub fn label(&self, flat: usize) -> (usize, usize) {
        let j = self.d() - 1 - flat;
        let i = self.word[j];
        let l = self.word[j..].iter().filter(|&&k| k == i).count();
        (i, l)
    }

    /// Flat indices of block `i`, ordered `x^i_1, x^i_2, …`.
    pub fn block(&self, i: usize) -> Vec<usize> {
        (1..=self.dims[i - 1])
            .map(|l| self.flat(i, l).expect("label in range"))
            .collect()
    }

    /// `σ_i(x)`, the coordinate sum over block `i`.
    pub fn sigma(&self, i: usize, x: &[Scalar]) -> Scalar {
        self.block(i).into_iter().map(|k| x[k].clone()).sum()
    }
}

/// A polytope or cone together with its decomposition.
#[derive(Clone, Debug)]
pub struct Parapolytope {
    pub poly: HPolytope,
    pub decomp: Decomposition,
}

/// `P ∩ (c + R^{d_i}) = c + Π(μ_c, ν_c)`, with the box in absolute
/// coordinates of the block.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub coords: Vec<usize>,
    pub boxed: Box,
}

impl Fiber {
    /// `Γ_c`: the face of the box in whose relative interior `c` lies.
    pub fn face_at(&self, c: &[Scalar]) -> BoxFace {
        BoxFace(
            self.coords
                .iter()
                .enumerate()
                .map(|(j, &k)| {
                    if self.boxed.is_pinched(j) {
                        Status::Pinched
                    } else if c[k] == self.boxed.mu()[j] {
                        Status::Low
                    } else if Some(&c[k]) == self.boxed.nu()[j].as_ref() {
                        Status::High
                    } else {
                        Status::Free
                    }
                })
                .collect(),
        )
    }

    /// A point in the relative interior of the box face `f`, with the
    /// coordinates outside the block taken from `c`.
    pub fn lift(&self, c: &[Scalar], f: &BoxFace) -> Point {
        let mut x = c.to_vec();
        for (j, &k) in self.coords.iter().enumerate() {
            let mu = &self.boxed.mu()[j];
            x[k] = match (f.0[j], &self.boxed.nu()[j]) {
                (Status::Low | Status::Pinched, _) => mu.clone(),
                (Status::High, Some(nu)) => nu.clone(),
                (Status::Free, Some(nu)) => (mu + nu) / int(2),
                (Status::Free, None) => mu + Scalar::one(),
                (Status::High, None) => unreachable!("validated box face"),
            };
        }
        x
    }

    pub fn sigma_mu(&self) -> Scalar {
        self.boxed.mu().iter().cloned().sum()
    }

    pub fn sigma_nu(&self) -> Option<Scalar> {
        self.boxed.nu().iter().cloned().sum()
    }
}

impl Parapolytope {
    pub fn new(poly: HPolytope, decomp: Decomposition) -> Result<Self> {
        decomp.validate()?;
        if poly.dim() != decomp.d() {
            return Err(Error::DimensionMismatch {
                expected: decomp.d(),
                got: poly.dim(),
            });
        }
        Ok(Parapolytope { poly, decomp })
    }

    pub fn origin(&self) -> Point {
        vec![Scalar::zero(); self.poly.dim()]
    }

    /// The vertex `0` as a face.
    pub fn origin_face(&self) -> Result<Face> {
        let f = self.poly.minimal_face_containing(&self.origin())?;
        if f.dim != 0 {
            return Err(Error::Invalid("the origin is not a vertex".into()));
        }
        Ok(f)
    }

    /// The fiber through `c` in direction `R^{d_i}`, or `None` if empty.
    pub fn fiber(&self, i: usize, c: &[Scalar]) -> Result<Option<Fiber>> {
        if i == 0 || i > self.decomp.r() {
            return Err(Error::InvalidLabel(format!("summand {i}")));
        }
        let coords = self.decomp.block(i);
        let fail = |msg: &str| Error::NotParapolytope(format!("{}: {msg}", fmt_point(c)));
        let mut rows = Vec::new();
        for h in self.poly.halfspaces() {
            let normal: Vec<Scalar> = coords.iter().map(|&k| h.normal[k].clone()).collect();
            let mut rest = h.offset.clone();
            for (k, a) in h.normal.iter().enumerate() {
                if !coords.contains(&k) {
                    rest += a * &c[k];
                }
            }
            if normal.iter().all(Zero::is_zero) {
                if rest.is_negative() {
                    return Ok(None);
                }
            } else {
                rows.push(Halfspace::new(normal, rest));
            }
        }
        let di = coords.len();
        if rows.is_empty() {
            return Err(fail("fiber is a whole subspace"));
        }
        let fp = HPolytope::new(di, rows)?;
        let g = match fp.generators() {
            Ok(g) => g,
            Err(Error::NotPointed) => return Err(fail("fiber has a lineality space")),
            Err(e) => return Err(e),
        };
        if g.vertices.is_empty() {
            return Ok(None);
        }
        let mut mu = Vec::with_capacity(di);
        let mut nu = Vec::with_capacity(di);
        for j in 0..di {
            mu.push(g.vertices.iter().map(|v| v[j].clone()).min().unwrap());
            if g.rays.iter().any(|r| r[j].is_negative()) {
                return Err(fail("fiber unbounded below"));
            }
            if g.rays.iter().any(|r| r[j].is_positive()) {
                nu.push(None);
            } else {
                nu.push(Some(g.vertices.iter().map(|v| v[j].clone()).max().unwrap()));
            }
        }
        let boxed = Box::new(mu, nu).map_err(|e| fail(&e.to_string()))?;
        // Certificate: every corner of the box lies in the fiber, and an
        // unbounded first coordinate is a recession direction.
        if boxed.nu()[0].is_none() && fp.halfspaces().iter().any(|h| h.normal[0].is_negative()) {
            return Err(fail("unbounded direction is not a recession direction"));
        }
        let corners = (0..di).map(|j| {
            let mut opts = vec![boxed.mu()[j].clone()];
            if let Some(n) = &boxed.nu()[j] {
                if *n != boxed.mu()[j] {
                    opts.push(n.clone());
                }
            }
            opts
        });
        for corner in itertools::Itertools::multi_cartesian_product(corners) {
            if !fp.contains(&corner) {
                return Err(fail("fiber is not a box"));
            }
        }
        Ok(Some(Fiber { coords, boxed }))
    }

    fn fiber_through(&self, i: usize, c: &[Scalar]) -> Result<Fiber> {
        self.fiber(i, c)?
            .ok_or_else(|| Error::Invalid("point outside the polytope".into()))
    }

    /// `M_i(g)` computed at the point `c ∈ g°`.
    pub fn mitosis_at(&self, i: usize, g: &Face, c: &[Scalar]) -> Result<BTreeSet<Face>> {
        let fib = self.fiber_through(i, c)?;
        let gc = fib.face_at(c);
        paramitosis::mitosis(&fib.boxed, &gc)?
            .iter()
            .map(|f| {
                let out = self.poly.minimal_face_containing(&fib.lift(c, f))?;
                debug_assert_eq!(out.dim, g.dim + 1);
                Ok(out)
            })
            .collect()
    }

    /// `M_i(g)`, using the barycenter of `g`.
    pub fn mitosis_i(&self, i: usize, g: &Face) -> Result<BTreeSet<Face>> {
        let c = self.poly.interior_point(g)?;
        self.mitosis_at(i, g, &c)
    }

    /// `M_i(S)`, the union over the members of `S`.
    pub fn mitosis_set(&self, i: usize, s: &BTreeSet<Face>) -> Result<BTreeSet<Face>> {
        let mut out = BTreeSet::new();
        for g in s {
            out.extend(self.mitosis_i(i, g)?);
        }
        Ok(out)
    }

    pub fn is_l_i_reduced(&self, i: usize, g: &Face) -> Result<bool> {
        let c = self.poly.interior_point(g)?;
        let fib = self.fiber_through(i, &c)?;
        Ok(paramitosis::reduced_partition(&fib.boxed, &fib.face_at(&c))?.is_some())
    }

    pub fn l_class_i(&self, i: usize, g: &Face) -> Result<BTreeSet<Face>> {
        let c = self.poly.interior_point(g)?;
        let fib = self.fiber_through(i, &c)?;
        paramitosis::l_class(&fib.boxed, &fib.face_at(&c))?
            .iter()
            .map(|f| self.poly.minimal_face_containing(&fib.lift(&c, f)))
            .collect()
    }

    /// Points at which fiber-wise properties are certified: the relative
    /// interior points of every face, and every lattice point when bounded.
    pub fn sample_points(&self) -> Result<Vec<Point>> {
        let mut pts: BTreeSet<Point> = BTreeSet::new();
        for f in self.poly.face_lattice()? {
            pts.insert(self.poly.interior_point(&f)?);
        }
        if !self.poly.is_cone() && self.poly.generators()?.rays.is_empty() {
            for x in self.poly.lattice_points()? {
                pts.insert(x.into_iter().map(int).collect());
            }
        }
        Ok(pts.into_iter().collect())
    }

    /// Checks that every fiber through every sample point is a box.
    pub fn certify(&self) -> Result<()> {
        for c in self.sample_points()? {
            for i in 1..=self.decomp.r() {
                self.fiber_through(i, &c)?;
            }
        }
        Ok(())
    }

    /// `σ_i(μ_c) + σ_i(ν_c) = (−w_0λ − Σ_{j≠i} σ_j(c) α_j, α_i^∨)` at every
    /// sample point and for every `i`.
    pub fn is_balanced(&self, lambda: &[i64], rd: &RootDatum) -> Result<bool> {
        if rd.rank() != self.decomp.r() {
            return Err(Error::DimensionMismatch {
                expected: self.decomp.r(),
                got: rd.rank(),
            });
        }
        let w0l = WeylGroup::new(rd).longest().act(lambda);
        for c in self.sample_points()? {
            for i in 1..=self.decomp.r() {
                let fib = self.fiber_through(i, &c)?;
                let Some(nu) = fib.sigma_nu() else {
                    return Ok(false);
                };
                let lhs = fib.sigma_mu() + nu;
                let mut rhs = int(-rd.pairing(&w0l, i));
                for j in 1..=self.decomp.r() {
                    if j != i {
                        rhs -= self.decomp.sigma(j, &c) * int(rd.cartan(i, j));
                    }
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every fiber through `0` has dimension at most one.
    pub fn is_admissible(&self) -> Result<bool> {
        let o = self.origin();
        for i in 1..=self.decomp.r() {
            let fib = self.fiber_through(i, &o)?;
            if fib.boxed.dim() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p(x) = Σ σ_i(x) α_i` for an integral point.
    pub fn weight_of(&self, rd: &RootDatum, x: &[i64]) -> Vec<i64> {
        let mut w = vec![0; rd.lattice_dim()];
        for i in 1..=self.decomp.r() {
            let s: i64 = self.decomp.block(i).iter().map(|&k| x[k]).sum();
            for (a, b) in w.iter_mut().zip(rd.root(i)) {
                *a += s * b;
            }
        }
        w
    }
}

fn fmt_point(c: &[Scalar]) -> String {
    format!(
        "({})",
        c.iter().map(crate::rational::format_scalar).collect::<Vec<_>>().join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::point;

    #[test]
    fn sp4_relabeling() {
        let d = Decomposition::from_word(&[2, 1, 2, 1]).unwrap();
        assert_eq!(d.dims, vec![2, 2]);
        // (y1, y2, y3, y4) = (x¹₁, x²₁, x¹₂, x²₂)
        assert_eq!(d.block(1), vec![0, 2]);
        assert_eq!(d.block(2), vec![1, 3]);
        for k in 0..4 {
            let (i, l) = d.label(k);
            assert_eq!(d.flat(i, l).unwrap(), k);
        }
    }

    #[test]
    fn gz_relabeling() {
        let d = Decomposition::from_word(&[1, 2, 1]).unwrap();
        assert_eq!(d.dims, vec![2, 1]);
        assert_eq!(d.block(1), vec![0, 2]);
        assert_eq!(d.block(2), vec![1]);
        let d = Decomposition::from_word(&[1, 2, 1, 3, 2, 1]).unwrap();
        assert_eq!(d.block(1), vec![0, 3, 5]);
        assert_eq!(d.block(2), vec![1, 4]);
        assert_eq!(d.block(3), vec![2]);
    }

    fn square_single() -> Parapolytope {
        let hs = vec![
            Halfspace::from_ints(&[1, 0], 0),
            Halfspace::from_ints(&[-1, 0], 1),
            Halfspace::from_ints(&[0, 1], 0),
            Halfspace::from_ints(&[0, -1], 1),
        ];
        Parapolytope::new(
            HPolytope::new(2, hs).unwrap(),
            Decomposition::from_word(&[1, 1]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn square_is_not_admissible() {
        let p = square_single();
        assert!(!p.is_admissible().unwrap());
        p.certify().unwrap();
        let full = p.poly.full_face().unwrap();
        assert!(p.mitosis_i(1, &full).unwrap().is_empty());
        assert!(p.is_l_i_reduced(1, &full).unwrap());
    }

    #[test]
    fn empty_fiber() {
        let p = square_single();
        assert!(p.fiber(1, &point(&[5, 5])).unwrap().is_some());
        let seg = Parapolytope::new(
            HPolytope::new(
                2,
                vec![
                    Halfspace::from_ints(&[1, 0], 0),
                    Halfspace::from_ints(&[-1, 0], 1),
                    Halfspace::from_ints(&[0, 1], 0),
                    Halfspace::from_ints(&[0, -1], 1),
                ],
            )
            .unwrap(),
            Decomposition::from_word(&[1, 2]).unwrap(),
        )
        .unwrap();
        assert!(seg.fiber(1, &point(&[3, 0])).unwrap().is_none());
        let f = seg.fiber(1, &point(&[0, 1])).unwrap().unwrap();
        assert_eq!(f.coords, vec![1]);
    }

    #[test]
    fn rhombus_is_not_a_parapolytope() {
        // A triangle viewed as a single two-dimensional summand.
        let hs = vec![
            Halfspace::from_ints(&[1, 0], 0),
            Halfspace::from_ints(&[0, 1], 0),
            Halfspace::from_ints(&[-1, -1], 2),
        ];
        let tri = Parapolytope::new(
            HPolytope::new(2, hs).unwrap(),
            Decomposition::from_word(&[1, 1]).unwrap(),
        )
        .unwrap();
        assert!(matches!(tri.certify(), Err(Error::NotParapolytope(_))));
    }
}
