//! Mitosis on coordinate boxes `Π(μ, ν)`: essential edges, the operation `M`,
//! reduced faces and their partitions, L-classes, the operator `T_Π`, and the
//! exponential sums `χ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Scalar};

/// Position of one coordinate of a box face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Low,
    High,
    Free,
    /// The coordinate is degenerate (`μ_i = ν_i`), so both bounds are tight.
    Pinched,
}

/// The box `{μ ≤ x ≤ ν}`; only the first coordinate may lack an upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Box {
    mu: Vec<Scalar>,
    nu: Vec<Option<Scalar>>,
}

/// A face of a box, one status per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxFace(pub Vec<Status>);

/// Partition `0 ≤ j_1 < … < j_k ≤ n` (1-based coordinate indices) certifying
/// that a face is reduced.
pub type Partition = Vec<usize>;

impl Box {
    pub fn new(mu: Vec<Scalar>, nu: Vec<Option<Scalar>>) -> Result<Self> {
        if mu.len() != nu.len() {
            return Err(Error::InvalidBox("μ and ν have different lengths".into()));
        }
        for (i, (m, n)) in mu.iter().zip(&nu).enumerate() {
            match n {
                Some(n) if n < m => {
                    return Err(Error::InvalidBox(format!("μ_{} > ν_{}", i + 1, i + 1)))
                }
                None if i != 0 => {
                    return Err(Error::InvalidBox(
                        "only the first coordinate may be unbounded".into(),
                    ))
                }
                _ => {}
            }
        }
        Ok(Box { mu, nu })
    }

    pub fn bounded(mu: Vec<Scalar>, nu: Vec<Scalar>) -> Result<Self> {
        Box::new(mu, nu.into_iter().map(Some).collect())
    }

    pub fn from_ints(mu: &[i64], nu: &[i64]) -> Result<Self> {
        Box::bounded(rational::point(mu), rational::point(nu))
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[Scalar] {
        &self.mu
    }

    pub fn nu(&self) -> &[Option<Scalar>] {
        &self.nu
    }

    pub fn is_pinched(&self, i: usize) -> bool {
        self.nu[i].as_ref() == Some(&self.mu[i])
    }

    pub fn is_bounded(&self) -> bool {
        self.nu.iter().all(Option::is_some)
    }

    pub fn dim(&self) -> usize {
        (0..self.n()).filter(|&i| !self.is_pinched(i)).count()
    }

    /// The vertex `μ` as a face.
    pub fn low_vertex(&self) -> BoxFace {
        BoxFace(
            (0..self.n())
                .map(|i| if self.is_pinched(i) { Status::Pinched } else { Status::Low })
                .collect(),
        )
    }

    /// The box itself as a face.
    pub fn full(&self) -> BoxFace {
        BoxFace(
            (0..self.n())
                .map(|i| if self.is_pinched(i) { Status::Pinched } else { Status::Free })
                .collect(),
        )
    }

    /// Checks that `g` is a face of this box.
    pub fn validate(&self, g: &BoxFace) -> Result<()> {
        if g.0.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: g.0.len(),
            });
        }
        for (i, s) in g.0.iter().enumerate() {
            let ok = match s {
                Status::Pinched => self.is_pinched(i),
                Status::High => !self.is_pinched(i) && self.nu[i].is_some(),
                _ => !self.is_pinched(i),
            };
            if !ok {
                return Err(Error::InvalidBox(format!(
                    "status {s:?} not allowed at coordinate {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    fn edge_in(&self, range: std::ops::Range<usize>, i: usize) -> Vec<Status> {
        range
            .map(|j| {
                if self.is_pinched(j) {
                    Status::Pinched
                } else if j < i {
                    Status::Low
                } else if j == i {
                    Status::Free
                } else {
                    Status::High
                }
            })
            .collect()
    }

    fn essential_in(&self, range: std::ops::Range<usize>) -> Vec<Vec<Status>> {
        range
            .clone()
            .filter(|&i| !self.is_pinched(i))
            .map(|i| self.edge_in(range.clone(), i))
            .collect()
    }
}

impl BoxFace {
    pub fn dim(&self) -> usize {
        self.0.iter().filter(|s| **s == Status::Free).count()
    }

    /// The `2 × n` table: the first row marks coordinates at their lower
    /// bound, the second those at their upper bound.
    pub fn render(&self) -> String {
        let row = |low: bool| {
            self.0
                .iter()
                .map(|s| {
                    let filled = match s {
                        Status::Pinched => true,
                        Status::Low => low,
                        Status::High => !low,
                        Status::Free => false,
                    };
                    if filled {
                        "+"
                    } else {
                        "."
                    }
                })
                .join(" ")
        };
        format!("{}\n{}", row(true), row(false))
    }
}

impl fmt::Display for BoxFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .0
            .iter()
            .map(|s| match s {
                Status::Low => 'L',
                Status::High => 'H',
                Status::Free => 'F',
                Status::Pinched => 'P',
            })
            .collect::<String>();
        f.write_str(&s)
    }
}

/// The essential edges of `b`, one per non-degenerate coordinate, forming a
/// broken line from `μ` to `ν`.
pub fn essential_edges(b: &Box) -> BTreeSet<BoxFace> {
    b.essential_in(0..b.n()).into_iter().map(BoxFace).collect()
}

/// The mitosis `M(g)` of a face of `b`.
pub fn mitosis(b: &Box, g: &BoxFace) -> Result<BTreeSet<BoxFace>> {
    b.validate(g)?;
    let start = g
        .0
        .iter()
        .rposition(|s| !matches!(s, Status::Low | Status::Pinched))
        .map_or(0, |k| k + 1);
    let tail = b.essential_in(start..b.n());
    Ok(tail
        .into_iter()
        .map(|e| BoxFace(g.0[..start].iter().copied().chain(e).collect()))
        .collect())
}

/// The partition witnessing that `g` is reduced, or `None` if it is not.
pub fn reduced_partition(b: &Box, g: &BoxFace) -> Result<Option<Partition>> {
    b.validate(g)?;
    let seq: Vec<(usize, Status)> = g
        .0
        .iter()
        .enumerate()
        .filter(|(_, s)| **s != Status::Pinched)
        .map(|(i, s)| (i + 1, *s))
        .collect();
    let mut pos = 0;
    let mut lead = 0;
    while pos < seq.len() && seq[pos].1 == Status::High {
        lead = seq[pos].0;
        pos += 1;
    }
    let mut parts = vec![lead];
    loop {
        let mut q = pos;
        while q < seq.len() && seq[q].1 == Status::Low {
            q += 1;
        }
        if q == seq.len() {
            return Ok(Some(parts));
        }
        if seq[q].1 != Status::Free {
            return Ok(None);
        }
        let mut end = seq[q].0;
        q += 1;
        while q < seq.len() && seq[q].1 == Status::High {
            end = seq[q].0;
            q += 1;
        }
        parts.push(end);
        pos = q;
    }
}

/// All reduced faces sharing the partition of `g`.
pub fn l_class(b: &Box, g: &BoxFace) -> Result<BTreeSet<BoxFace>> {
    let parts = reduced_partition(b, g)?.ok_or(Error::NotReduced)?;
    let n = b.n();
    let lead: Vec<Status> = (0..parts[0])
        .map(|j| if b.is_pinched(j) { Status::Pinched } else { Status::High })
        .collect();
    let last = *parts.last().unwrap();
    let trail: Vec<Status> = (last..n)
        .map(|j| if b.is_pinched(j) { Status::Pinched } else { Status::Low })
        .collect();
    let blocks: Vec<Vec<Vec<Status>>> = parts
        .windows(2)
        .map(|w| b.essential_in(w[0]..w[1]))
        .collect();
    Ok(blocks
        .into_iter()
        .multi_cartesian_product()
        .map(|choice| {
            let mut v = lead.clone();
            for c in choice {
                v.extend(c);
            }
            v.extend(trail.iter().copied());
            BoxFace(v)
        })
        .collect())
}

/// Laurent polynomial in one variable `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let c = self.0.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, i64> {
        &self.0
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(e, c);
        }
        out
    }

    /// `Σ_{i=lo}^{hi} t^i`.
    pub fn range(lo: i64, hi: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for e in lo..=hi {
            p.add_term(e, 1);
        }
        p
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s = self.0.iter().map(|(e, c)| format!("{c}*t^{e}")).join(" + ");
        f.write_str(&s)
    }
}

fn integral_bounds(b: &Box) -> Result<(Vec<i64>, Vec<i64>)> {
    let conv = |x: &Scalar| {
        rational::to_i64(x).ok_or_else(|| Error::InvalidBox("bounds must be integers".into()))
    };
    let mu = b.mu.iter().map(conv).collect::<Result<Vec<_>>>()?;
    let nu = b
        .nu
        .iter()
        .map(|n| n.as_ref().ok_or(Error::Unbounded).and_then(conv))
        .collect::<Result<Vec<_>>>()?;
    Ok((mu, nu))
}

/// `T_Π f = (f − t·s(f)) / (1 − t)` with `s(t^k) = t^{2C−k}` and
/// `2C = Σ (μ_i + ν_i)`.
pub fn t_operator(b: &Box, f: &LaurentPoly) -> Result<LaurentPoly> {
    let (mu, nu) = integral_bounds(b)?;
    let two_c: i64 = mu.iter().chain(&nu).sum();
    let mut g = f.clone();
    for (&e, &c) in &f.0 {
        g.add_term(two_c - e + 1, -c);
    }
    // (1 − t) h = g  ⇔  h_k = Σ_{j ≤ k} g_j.
    let mut h = LaurentPoly::zero();
    let (Some((&lo, _)), Some((&hi, _))) = (g.0.first_key_value(), g.0.last_key_value()) else {
        return Ok(h);
    };
    let mut acc = 0;
    for e in lo..=hi {
        acc += g.0.get(&e).copied().unwrap_or(0);
        h.add_term(e, acc);
    }
    if acc != 0 {
        return Err(Error::InexactDivision);
    }
    Ok(h)
}

/// Integer points of a face of an integral box, sorted.
pub fn face_points(b: &Box, g: &BoxFace) -> Result<Vec<Vec<i64>>> {
    b.validate(g)?;
    let (mu, nu) = integral_bounds(b)?;
    let ranges: Vec<Vec<i64>> = g
        .0
        .iter()
        .enumerate()
        .map(|(i, s)| match s {
            Status::Low | Status::Pinched => vec![mu[i]],
            Status::High => vec![nu[i]],
            Status::Free => (mu[i]..=nu[i]).collect(),
        })
        .collect();
    Ok(ranges.into_iter().multi_cartesian_product().collect())
}

/// `χ(A) = Σ_{x ∈ A ∩ Z^n} t^{σ(x)}` for the union `A` of the given faces.
pub fn chi<'a>(b: &Box, faces: impl IntoIterator<Item = &'a BoxFace>) -> Result<LaurentPoly> {
    let mut pts = BTreeSet::new();
    for g in faces {
        pts.extend(face_points(b, g)?);
    }
    let mut p = LaurentPoly::zero();
    for x in pts {
        p.add_term(x.iter().sum(), 1);
    }
    Ok(p)
}

/// Parses the compact form used in tests and the CLI, e.g. `"LFPH"`.
pub fn parse_face(s: &str) -> Result<BoxFace> {
    s.chars()
        .map(|c| match c {
            'L' => Ok(Status::Low),
            'H' => Ok(Status::High),
            'F' => Ok(Status::Free),
            'P' => Ok(Status::Pinched),
            _ => Err(Error::Parse(format!("unknown status {c:?}"))),
        })
        .collect::<Result<Vec<_>>>()
        .map(BoxFace)
}
