//! Mitosis chains from the vertex `0`, the hypothesis checks that make each
//! step a Demazure step, face characters, and the `Sp_4` catalog of
//! generalized Newton–Okounkov polytopes.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Face, UnionOfFaces};
use crate::instances::Instance;
use crate::parapolytope::{Fiber, Parapolytope};
use crate::rational::{Point, Scalar};
use crate::weyl::{demazure, Character, RootDatum, WeylElement, WeylGroup};

/// `e^{w_0 λ} Σ_{x ∈ Σ ∩ Z^d} e^{p(x)}` for the union `Σ` of `faces`.
pub fn face_character<'a>(
    para: &Parapolytope,
    faces: impl IntoIterator<Item = &'a Face>,
    lambda: &[i64],
    rd: &RootDatum,
) -> Result<Character> {
    let u = UnionOfFaces::new(faces.into_iter().cloned());
    let w0l = WeylGroup::new(rd).longest().act(lambda);
    let mut ch = Character::zero();
    for x in u.lattice_points(&para.poly)? {
        let w: Vec<i64> = para
            .weight_of(rd, &x)
            .iter()
            .zip(&w0l)
            .map(|(a, b)| a + b)
            .collect();
        ch.add_term(w, 1);
    }
    Ok(ch)
}

/// Outcome of the four conditions under which one mitosis step realizes a
/// Demazure operator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub contains_origin: bool,
    pub l_class_closed: bool,
    pub empty_mitosis_covered: bool,
    pub projections_agree: bool,
    pub witnesses: Vec<String>,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.contains_origin && self.l_class_closed && self.empty_mitosis_covered && self.projections_agree
    }
}

fn fiber_corners(fib: &Fiber) -> Vec<Vec<Scalar>> {
    let opts = (0..fib.coords.len()).map(|j| {
        let mu = fib.boxed.mu()[j].clone();
        match &fib.boxed.nu()[j] {
            Some(nu) if *nu != mu => vec![mu, nu.clone()],
            _ => vec![mu],
        }
    });
    itertools::Itertools::multi_cartesian_product(opts).collect()
}

fn place(c: &[Scalar], coords: &[usize], z: &[Scalar]) -> Point {
    let mut x = c.to_vec();
    for (&k, v) in coords.iter().zip(z) {
        x[k] = v.clone();
    }
    x
}

/// Whether some face of `s` meets the fiber through `c`.
fn meets_fiber(para: &Parapolytope, fib: &Fiber, c: &[Scalar], s: &BTreeSet<Face>) -> bool {
    let corners = fiber_corners(fib);
    s.iter().any(|f| {
        corners
            .iter()
            .any(|z| para.poly.face_contains(f, &place(c, &fib.coords, z)))
    })
}

/// Checks conditions (1)–(4) for the step `S ↦ M_i(S)`.
pub fn check_theorem_hypotheses(para: &Parapolytope, i: usize, s: &BTreeSet<Face>) -> Result<HypothesisReport> {
    let mut rep = HypothesisReport {
        contains_origin: true,
        l_class_closed: true,
        empty_mitosis_covered: true,
        projections_agree: true,
        witnesses: Vec::new(),
    };
    let origin = para.origin();
    let mut images = Vec::with_capacity(s.len());
    for f in s {
        if !para.poly.face_contains(f, &origin) {
            rep.contains_origin = false;
            rep.witnesses.push(format!("(1) face {f} misses 0"));
        }
        if !para.is_l_i_reduced(i, f)? {
            rep.l_class_closed = false;
            rep.witnesses.push(format!("(2) face {f} is not reduced"));
        } else {
            for g in para.l_class_i(i, f)? {
                if !s.contains(&g) {
                    rep.l_class_closed = false;
                    rep.witnesses.push(format!("(2) {g} in the class of {f} is missing"));
                }
            }
        }
        images.push(para.mitosis_i(i, f)?);
    }
    for (f, img) in s.iter().zip(&images) {
        if !img.is_empty() {
            continue;
        }
        let c = para.poly.interior_point(f)?;
        let fib = para
            .fiber(i, &c)?
            .ok_or_else(|| Error::Invalid("face outside the polytope".into()))?;
        let fc = fib.face_at(&c);
        let f_points: Vec<Point> = fiber_corners(&fib)
            .into_iter()
            .map(|z| place(&c, &fib.coords, &z))
            .filter(|x| para.poly.face_contains(f, x))
            .collect();
        let unbounded = fib.boxed.nu()[0].is_none() && fc.0[0] == crate::paramitosis::Status::Free;
        let covered = images.iter().flatten().any(|g| {
            f_points.iter().all(|x| para.poly.face_contains(g, x))
                && (!unbounded
                    || g.tight
                        .iter()
                        .all(|&k| para.poly.halfspaces()[k].normal[fib.coords[0]].is_zero()))
        });
        if !covered {
            rep.empty_mitosis_covered = false;
            rep.witnesses.push(format!("(3) no face of M_i(S) covers {f}"));
        }
    }
    let m: BTreeSet<Face> = images.into_iter().flatten().collect();
    for c in para.sample_points()? {
        let Some(fib) = para.fiber(i, &c)? else { continue };
        if meets_fiber(para, &fib, &c, s) != meets_fiber(para, &fib, &c, &m) {
            rep.projections_agree = false;
            rep.witnesses
                .push(format!("(4) projections differ over {:?}", c.iter().map(ToString::to_string).collect::<Vec<_>>()));
            break;
        }
    }
    Ok(rep)
}

/// `D_{α_i}` of the character of `S` against the character of `M_i(S)`.
pub fn verify_demazure_step(inst: &Instance, i: usize, s: &BTreeSet<Face>) -> Result<bool> {
    let lhs = demazure(&inst.rd, i, &face_character(&inst.para, s, &inst.lambda, &inst.rd)?);
    let m = inst.para.mitosis_set(i, s)?;
    let rhs = face_character(&inst.para, &m, &inst.lambda, &inst.rd)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    pub letter: usize,
    pub input: BTreeSet<Face>,
    pub output: BTreeSet<Face>,
    pub report: HypothesisReport,
}

#[derive(Clone, Debug)]
pub struct MitosisChainResult {
    /// Reduced word of `w_0 w w_0^{-1}` taken from the decomposition's word.
    pub subword: Vec<usize>,
    pub steps: Vec<ChainStep>,
    pub sigma: UnionOfFaces,
}

impl MitosisChainResult {
    pub fn hypotheses_hold(&self) -> bool {
        self.steps.iter().all(|s| s.report.all_hold())
    }
}

/// Applies `M_{j_ℓ}, …, M_{j_1}` to `{0}`, where `(j_1, …, j_ℓ)` is the
/// chosen subword.
pub fn mitosis_chain(para: &Parapolytope, group: &WeylGroup, w: &WeylElement) -> Result<MitosisChainResult> {
    let subword = group.subword_reduced_word(w, &para.decomp.word)?;
    chain_along(para, &subword)
}

/// Runs the chain for an explicit letter sequence (applied right to left).
pub fn chain_along(para: &Parapolytope, subword: &[usize]) -> Result<MitosisChainResult> {
    let mut current: BTreeSet<Face> = BTreeSet::from([para.origin_face()?]);
    let mut steps = Vec::new();
    for &i in subword.iter().rev() {
        let report = check_theorem_hypotheses(para, i, &current)?;
        let output: BTreeSet<Face> = UnionOfFaces::new(para.mitosis_set(i, &current)?)
            .faces()
            .clone();
        steps.push(ChainStep {
            letter: i,
            input: current,
            output: output.clone(),
            report,
        });
        current = output;
    }
    Ok(MitosisChainResult {
        subword: subword.to_vec(),
        steps,
        sigma: UnionOfFaces::new(current),
    })
}

/// Constraint indices of the facets `H_k^±` of `SP_λ`.
pub mod sp4 {
    use super::*;
    use crate::instances::SP4_FACETS;

    pub fn facet(name: &str) -> Result<usize> {
        SP4_FACETS
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| Error::InvalidLabel(name.to_string()))
    }

    /// The union for `w`, as lists of facet names to intersect.
    pub fn catalog(word: &[usize]) -> Option<Vec<Vec<&'static str>>> {
        Some(match word {
            [] => vec![vec!["H1+", "H2+", "H3+", "H4+"]],
            [1] => vec![vec!["H2+", "H3+", "H4+"]],
            [2] => vec![vec!["H1+", "H3+", "H4+"]],
            [2, 1] => vec![vec!["H3+", "H4+"]],
            [1, 2] => vec![vec!["H1+", "H4+"], vec!["H2+", "H4+"]],
            [1, 2, 1] => vec![vec!["H4+"]],
            [2, 1, 2] => vec![vec!["H1+"], vec!["H2+"], vec!["H3+"]],
            [1, 2, 1, 2] => vec![vec![]],
            _ => return None,
        })
    }

    /// Linear relations among facet classes, `Σ c·[H] = [H']`.
    pub const FACET_RELATIONS: [(&[(i64, &str)], &str); 4] = [
        (&[(1, "H1+"), (1, "H2-")], "H1-"),
        (&[(2, "H2+"), (1, "H3-")], "H2-"),
        (&[(1, "H2+"), (1, "H3-")], "H3+"),
        (&[(2, "H3+"), (1, "H4-")], "H4+"),
    ];

    /// Alternative unions transverse to the catalog, keyed by word.
    pub const ALTERNATIVES: [(&[usize], &[&str]); 2] =
        [(&[1, 2, 1], &["H2-", "H3-", "H4-"]), (&[2, 1, 2], &["H1-"])];

    pub fn union_of(para: &Parapolytope, facets: &[Vec<&str>]) -> Result<UnionOfFaces> {
        let mut faces = Vec::new();
        for names in facets {
            let tight = names.iter().map(|n| facet(n)).collect::<Result<Vec<_>>>()?;
            let f = para
                .poly
                .canonical_face(&tight)?
                .ok_or_else(|| Error::Invalid(format!("empty face {names:?}")))?;
            faces.push(f);
        }
        Ok(UnionOfFaces::new(faces))
    }

    /// `Δ_w` for `w` given by its lex-least reduced word.
    pub fn delta(para: &Parapolytope, w: &WeylElement) -> Result<UnionOfFaces> {
        let facets = catalog(w.word()).ok_or_else(|| Error::InvalidLabel(w.to_string()))?;
        union_of(para, &facets)
    }

    /// `Δ_{s1s2s1} ∩ Δ_{s2s1s2} = Δ_{s1s2} ∪ Δ_{s2s1}` as point sets, with
    /// an optional replacement catalog for `Δ_{s2s1}`.
    pub fn intersection_identity(para: &Parapolytope, s2s1: Option<Vec<Vec<&str>>>) -> Result<bool> {
        let get = |w: &[usize]| union_of(para, &catalog(w).expect("catalogued"));
        let lhs = get(&[1, 2, 1])?.intersect(&get(&[2, 1, 2])?, &para.poly)?;
        let d21 = match s2s1 {
            Some(facets) => union_of(para, &facets)?,
            None => get(&[2, 1])?,
        };
        let rhs = get(&[1, 2])?.union(&d21);
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gz_instance, sp4_instance};

    fn names(_para: &Parapolytope, faces: &BTreeSet<Face>) -> BTreeSet<Vec<&'static str>> {
        faces
            .iter()
            .map(|f| {
                f.tight
                    .iter()
                    .map(|&k| crate::instances::SP4_FACETS[k])
                    .collect()
            })
            .collect()
    }

    #[test]
    fn sp4_chain_examples() {
        let inst = sp4_instance(1, 1).unwrap();
        let p = &inst.para;
        let o = BTreeSet::from([p.origin_face().unwrap()]);
        let m1 = p.mitosis_set(1, &o).unwrap();
        assert_eq!(names(p, &m1), BTreeSet::from([vec!["H2+", "H4+", "H3+"]]));
        let m2 = p.mitosis_set(2, &o).unwrap();
        assert_eq!(names(p, &m2), BTreeSet::from([vec!["H1+", "H4+", "H3+"]]));
        let m12 = p.mitosis_set(1, &m2).unwrap();
        assert_eq!(
            names(p, &m12),
            BTreeSet::from([vec!["H2+", "H4+"], vec!["H1+", "H4+"]])
        );
        assert!(p.mitosis_set(1, &m1).unwrap().is_empty());
    }

    #[test]
    fn trivial_chains() {
        let inst = sp4_instance(1, 1).unwrap();
        let g = WeylGroup::new(&inst.rd);
        let id = mitosis_chain(&inst.para, &g, g.identity()).unwrap();
        assert_eq!(id.sigma, UnionOfFaces::new([inst.para.origin_face().unwrap()]));
        let top = mitosis_chain(&inst.para, &g, g.longest()).unwrap();
        assert_eq!(top.sigma, UnionOfFaces::new([inst.para.poly.full_face().unwrap()]));
        assert_eq!(
            face_character(&inst.para, id.sigma.faces(), &inst.lambda, &inst.rd).unwrap(),
            Character::monomial(g.longest().act(&inst.lambda), 1)
        );
        let full = face_character(&inst.para, top.sigma.faces(), &inst.lambda, &inst.rd).unwrap();
        assert_eq!(full.coefficient_sum(), 16);
    }

    #[test]
    fn first_step_from_origin() {
        let inst = sp4_instance(1, 1).unwrap();
        let o = BTreeSet::from([inst.para.origin_face().unwrap()]);
        assert!(check_theorem_hypotheses(&inst.para, 1, &o).unwrap().all_hold());
        assert!(verify_demazure_step(&inst, 1, &o).unwrap());
        let ch = face_character(&inst.para, &inst.para.mitosis_set(1, &o).unwrap(), &inst.lambda, &inst.rd).unwrap();
        let w0l = WeylGroup::new(&inst.rd).longest().act(&inst.lambda);
        let expect = Character::monomial(w0l.clone(), 1).add(&Character::monomial(
            w0l.iter().zip(inst.rd.root(1)).map(|(a, b)| a + b).collect(),
            1,
        ));
        assert_eq!(ch, expect);
    }

    #[test]
    fn degenerate_weight_step() {
        // (λ, α_2) = 0 pinches the fiber through 0 in direction 2: D_2 fixes
        // e^{w_0λ} but M_2 has nothing to produce, and condition (3) flags it.
        let inst = sp4_instance(1, 0).unwrap();
        let o = BTreeSet::from([inst.para.origin_face().unwrap()]);
        assert!(inst.para.mitosis_set(2, &o).unwrap().is_empty());
        let ch = face_character(&inst.para, &o, &inst.lambda, &inst.rd).unwrap();
        assert_eq!(demazure(&inst.rd, 2, &ch), ch);
        let rep = check_theorem_hypotheses(&inst.para, 2, &o).unwrap();
        assert!(!rep.empty_mitosis_covered);
        assert!(!verify_demazure_step(&inst, 2, &o).unwrap());
    }

    #[test]
    fn violated_origin_condition() {
        let inst = sp4_instance(1, 1).unwrap();
        let far = inst.para.poly.canonical_face(&[1, 6]).unwrap().unwrap();
        let rep = check_theorem_hypotheses(&inst.para, 1, &BTreeSet::from([far])).unwrap();
        assert!(!rep.contains_origin);
        assert!(!rep.all_hold());
    }

    #[test]
    fn gl3_chain_ends_at_full_polytope() {
        let inst = gz_instance(&[0, 1, 2]).unwrap();
        let res = chain_along(&inst.para, &[1, 2, 1]).unwrap();
        assert_eq!(res.sigma, UnionOfFaces::new([inst.para.poly.full_face().unwrap()]));
        assert!(res.hypotheses_hold());
    }

    #[test]
    fn catalog_and_identity() {
        let inst = sp4_instance(1, 1).unwrap();
        let g = WeylGroup::new(&inst.rd);
        for w in g.elements() {
            let d = sp4::delta(&inst.para, w).unwrap();
            let chain = mitosis_chain(&inst.para, &g, w).unwrap();
            assert_eq!(chain.sigma, d, "{w}");
        }
        assert!(sp4::intersection_identity(&inst.para, None).unwrap());
        assert!(!sp4::intersection_identity(&inst.para, Some(vec![vec!["H2+", "H4+"]])).unwrap());
    }
}
