//! Cross diagrams encoding faces through the lowest vertex: skew pipe dreams
//! for the `Sp_{2n}` adapted-string cone and classical pipe dreams for
//! Gelfand–Zetlin polytopes, each with its combinatorial mitosis.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Face;
use crate::instances::{gz_lower_constraint, sp2n_adapted_cone};
use crate::parapolytope::Parapolytope;

/// A `(2n−1) × n` table of crosses; cell `(i, j)` may hold a cross only when
/// `n − j < i < n + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPipeDream {
    n: usize,
    crosses: BTreeSet<(usize, usize)>,
}

/// `{"n": 3, "crosses": [[i, j], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DreamJson {
    pub n: usize,
    pub crosses: Vec<[usize; 2]>,
}

pub fn skew_allowed(n: usize, i: usize, j: usize) -> bool {
    (1..=n).contains(&j) && i + j > n && i < n + j
}

impl SkewPipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let crosses: BTreeSet<(usize, usize)> = crosses.into_iter().collect();
        if let Some(&(i, j)) = crosses.iter().find(|&&(i, j)| !skew_allowed(n, i, j)) {
            return Err(Error::Invalid(format!("cell ({i},{j}) is not allowed")));
        }
        Ok(SkewPipeDream { n, crosses })
    }

    pub fn empty(n: usize) -> Self {
        SkewPipeDream {
            n,
            crosses: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        let crosses = (1..2 * n)
            .cartesian_product(1..=n)
            .filter(|&(i, j)| skew_allowed(n, i, j))
            .collect();
        SkewPipeDream { n, crosses }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.crosses.contains(&(i, j))
    }

    /// Rows top to bottom; `+` is a cross, `.` an empty allowed cell, and a
    /// blank stands for a cell outside the diagram.
    pub fn render(&self) -> String {
        (1..2 * self.n)
            .map(|i| {
                let row = (1..=self.n)
                    .map(|j| {
                        if !skew_allowed(self.n, i, j) {
                            " "
                        } else if self.has(i, j) {
                            "+"
                        } else {
                            "."
                        }
                    })
                    .join(" ");
                row.trim_end().to_string()
            })
            .join("\n")
    }

    pub fn to_json(&self) -> DreamJson {
        DreamJson {
            n: self.n,
            crosses: self.crosses.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_json(j: &DreamJson) -> Result<Self> {
        SkewPipeDream::new(j.n, j.crosses.iter().map(|c| (c[0], c[1])))
    }
}

/// Cell of the coordinate `x^k_l` in a skew pipe dream of size `n`.
pub fn skew_cell_of(k: usize, l: usize, n: usize) -> Result<(usize, usize)> {
    let size = if k == 1 { n } else { 2 * (n + 1).saturating_sub(k) };
    if k == 0 || k > n || l == 0 || l > size {
        return Err(Error::InvalidLabel(format!("x^{k}_{l}")));
    }
    Ok(if k == 1 {
        (n, l)
    } else if l % 2 == 1 {
        (n + k - 1, k + (l - 1) / 2)
    } else {
        (n - k + 1, k + l / 2 - 1)
    })
}

/// Inverse of [`skew_cell_of`].
pub fn skew_label_of_cell(cell: (usize, usize), n: usize) -> Result<(usize, usize)> {
    for k in 1..=n {
        let size = if k == 1 { n } else { 2 * (n - k + 1) };
        for l in 1..=size {
            if skew_cell_of(k, l, n)? == cell {
                return Ok((k, l));
            }
        }
    }
    Err(Error::Invalid(format!("cell {cell:?} is not allowed")))
}

/// The diagram of a face of the adapted-string cone of size `n`.
pub fn face_to_skew(cone: &Parapolytope, n: usize, face: &Face) -> Result<SkewPipeDream> {
    let cells = face
        .tight
        .iter()
        .map(|&t| {
            let (k, l) = cone.decomp.label(t);
            skew_cell_of(k, l, n)
        })
        .collect::<Result<Vec<_>>>()?;
    SkewPipeDream::new(n, cells)
}

pub fn skew_to_face(cone: &Parapolytope, d: &SkewPipeDream) -> Result<Face> {
    let tight = d
        .crosses
        .iter()
        .map(|&c| {
            let (k, l) = skew_label_of_cell(c, d.n)?;
            cone.decomp.flat(k, l)
        })
        .collect::<Result<Vec<usize>>>()?;
    let tight: Vec<usize> = tight.into_iter().sorted().collect();
    let face = cone
        .poly
        .canonical_face(&tight)?
        .ok_or_else(|| Error::Invalid("empty face".into()))?;
    if face.tight != tight {
        return Err(Error::Invalid("diagram does not describe a canonical face".into()));
    }
    Ok(face)
}

/// Constraints of `SP_λ` tight at its lowest vertex, listed in the order of
/// the constraints of the `n = 2` adapted-string cone.
pub const SP4_ORIGIN_FACETS: [usize; 4] = [0, 3, 7, 5];

/// The skew pipe dream of a face of `SP_λ`, or `None` when the face misses
/// the lowest vertex.
pub fn sp4_face_to_skew(face: &Face) -> Result<Option<SkewPipeDream>> {
    let Some(tight) = face
        .tight
        .iter()
        .map(|k| SP4_ORIGIN_FACETS.iter().position(|f| f == k))
        .collect::<Option<Vec<usize>>>()
    else {
        return Ok(None);
    };
    let cone = sp2n_adapted_cone(2)?;
    let cells = tight
        .iter()
        .map(|&t| {
            let (k, l) = cone.decomp.label(t);
            skew_cell_of(k, l, 2)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(SkewPipeDream::new(2, cells)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Minus,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Offspring {
    pub side: Side,
    pub p: usize,
    pub dream: SkewPipeDream,
}

/// The column from which the offspring columns are searched, together with
/// `J^−` and `J^+`.
pub fn skew_start(d: &SkewPipeDream, i: usize) -> (usize, Vec<usize>, Vec<usize>) {
    let n = d.n;
    let (u, v) = (n - i + 1, n + i - 1);
    // Cells outside the diagram count as empty.
    let rightmost_empty = |row: usize| (1..=n).rev().find(|&j| !d.has(row, j)).unwrap_or(0);
    let start = rightmost_empty(u).max(rightmost_empty(v).saturating_sub(1));
    let minus = (start + 1..=n)
        .filter(|&p| d.has(u, p) && !d.has(u + 1, p))
        .collect();
    let plus = (start + 1..=n)
        .filter(|&p| d.has(v, p) && !d.has(v + 1, p))
        .collect();
    (start, minus, plus)
}

/// Offspring `D_p^±` of `mitosis_i(D)`, labelled by side and column.
pub fn skew_offspring(d: &SkewPipeDream, i: usize) -> Result<Vec<Offspring>> {
    let n = d.n;
    if i == 0 || i > n {
        return Err(Error::InvalidLabel(format!("mitosis index {i}")));
    }
    let (u, v) = (n - i + 1, n + i - 1);
    let (_, minus, plus) = skew_start(d, i);
    let build = |side: Side, p: usize| {
        let mut c = d.crosses.clone();
        c.remove(&if side == Side::Minus { (u, p) } else { (v, p) });
        for &j in minus.iter().filter(|&&j| j > p) {
            c.remove(&(u, j));
            c.insert((u + 1, j));
        }
        for &j in plus.iter().filter(|&&j| j > p) {
            c.remove(&(v, j));
            c.insert((v + 1, j));
        }
        if side == Side::Plus && i != 1 && minus.contains(&p) {
            c.remove(&(u, p));
            c.insert((u + 1, p));
        }
        SkewPipeDream::new(n, c)
    };
    let mut out = Vec::new();
    for &p in &minus {
        out.push(Offspring {
            side: Side::Minus,
            p,
            dream: build(Side::Minus, p)?,
        });
    }
    for &p in &plus {
        out.push(Offspring {
            side: Side::Plus,
            p,
            dream: build(Side::Plus, p)?,
        });
    }
    Ok(out)
}

pub fn skew_mitosis(d: &SkewPipeDream, i: usize) -> Result<BTreeSet<SkewPipeDream>> {
    Ok(skew_offspring(d, i)?.into_iter().map(|o| o.dream).collect())
}

/// A classical pipe dream of size `n`: crosses at `(i, j)` with `i + j ≤ n`.
/// Cell `(k, j)` records the tightness of `x^{k−1}_j ≤ x^k_j` in the
/// Gelfand–Zetlin table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlPipeDream {
    n: usize,
    crosses: BTreeSet<(usize, usize)>,
}

impl GlPipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let crosses: BTreeSet<(usize, usize)> = crosses.into_iter().collect();
        if let Some(&(i, j)) = crosses.iter().find(|&&(i, j)| i == 0 || j == 0 || i + j > n) {
            return Err(Error::Invalid(format!("cell ({i},{j}) is not allowed")));
        }
        Ok(GlPipeDream { n, crosses })
    }

    pub fn full(n: usize) -> Self {
        let crosses = (1..n)
            .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
            .collect();
        GlPipeDream { n, crosses }
    }

    pub fn crosses(&self) -> &BTreeSet<(usize, usize)> {
        &self.crosses
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.crosses.contains(&(i, j))
    }

    /// Rows `1..n−1`, mirrored left to right: column `c` of row `k` shows
    /// cell `(k, n − c)`, and columns `c < k` are outside the diagram.
    pub fn render(&self) -> String {
        (1..self.n)
            .map(|k| {
                (1..self.n)
                    .map(|c| {
                        if c < k {
                            " "
                        } else if self.has(k, self.n - c) {
                            "+"
                        } else {
                            "."
                        }
                    })
                    .join(" ")
                    .trim_end()
                    .to_string()
            })
            .join("\n")
    }
}

/// The pipe dream of a Gelfand–Zetlin face through the lowest vertex.
pub fn gl_face_to_dream(gz: &Parapolytope, n: usize, face: &Face) -> Result<GlPipeDream> {
    let mut crosses = Vec::new();
    for k in 1..n {
        for j in 1..=n - k {
            if face.is_tight(gz_lower_constraint(n, k, j)) {
                crosses.push((k, j));
            }
        }
    }
    let back = gl_dream_to_face(gz, &GlPipeDream::new(n, crosses.clone())?)?;
    if back != *face {
        return Err(Error::Invalid(format!("face {face} does not contain the lowest vertex")));
    }
    GlPipeDream::new(n, crosses)
}

pub fn gl_dream_to_face(gz: &Parapolytope, d: &GlPipeDream) -> Result<Face> {
    let tight: Vec<usize> = d
        .crosses
        .iter()
        .map(|&(k, j)| gz_lower_constraint(d.n, k, j))
        .sorted()
        .collect();
    gz.poly
        .canonical_face(&tight)?
        .ok_or_else(|| Error::Invalid("empty face".into()))
}

/// Mitosis on row `i`: with `start` the leftmost empty column of row `i`,
/// each `p < start` with `(i+1, p)` empty yields an offspring that drops
/// `(i, p)` and moves the crosses `(i, j)`, `j < p`, `(i+1, j)` empty, one
/// row down.
pub fn gl_pipe_mitosis(d: &GlPipeDream, i: usize) -> Result<BTreeSet<GlPipeDream>> {
    let n = d.n;
    if i == 0 || i >= n {
        return Err(Error::InvalidLabel(format!("mitosis index {i}")));
    }
    let start = (1..=n - i).find(|&j| !d.has(i, j)).unwrap_or(n - i + 1);
    let open: Vec<usize> = (1..start).filter(|&j| !d.has(i + 1, j)).collect();
    open.iter()
        .map(|&p| {
            let mut c = d.crosses.clone();
            c.remove(&(i, p));
            for &j in open.iter().filter(|&&j| j < p) {
                c.remove(&(i, j));
                c.insert((i + 1, j));
            }
            GlPipeDream::new(n, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gz_polytope, sp2n_adapted_cone};
    use crate::rational::point;

    #[test]
    fn cells_of_coordinates() {
        assert_eq!(skew_cell_of(1, 1, 3).unwrap(), (3, 1));
        assert_eq!(skew_cell_of(2, 2, 3).unwrap(), (2, 2));
        assert_eq!(skew_cell_of(3, 1, 3).unwrap(), (5, 3));
        assert_eq!(skew_cell_of(2, 2, 2).unwrap(), (1, 2));
        assert_eq!(skew_cell_of(1, 2, 2).unwrap(), (2, 2));
        assert!(skew_cell_of(3, 3, 3).is_err());
        for n in 1..=4 {
            let cells: BTreeSet<(usize, usize)> = (1..=n)
                .flat_map(|k| {
                    let size = if k == 1 { n } else { 2 * (n - k + 1) };
                    (1..=size).map(move |l| skew_cell_of(k, l, n).unwrap())
                })
                .collect();
            assert_eq!(cells.len(), n * n);
            assert!(cells.iter().all(|&(i, j)| skew_allowed(n, i, j)));
        }
    }

    #[test]
    fn skew_face_bijection() {
        for n in 1..=3 {
            let cone = sp2n_adapted_cone(n).unwrap();
            for f in cone.poly.face_lattice().unwrap() {
                let d = face_to_skew(&cone, n, &f).unwrap();
                assert_eq!(skew_to_face(&cone, &d).unwrap(), f);
            }
            let full = cone.poly.full_face().unwrap();
            assert_eq!(face_to_skew(&cone, n, &full).unwrap(), SkewPipeDream::empty(n));
            let o = cone.origin_face().unwrap();
            assert_eq!(face_to_skew(&cone, n, &o).unwrap(), SkewPipeDream::full(n));
        }
    }

    #[test]
    fn worked_face_diagram() {
        let cone = sp2n_adapted_cone(3).unwrap();
        let d = &cone.decomp;
        // 0 = x¹₁; 0 = x²₂ = x¹₂; 0 = x³₂; x²₃ = x³₁.
        let tight: Vec<usize> = [(1, 1), (2, 2), (1, 2), (3, 2), (3, 1)]
            .iter()
            .map(|&(k, l)| d.flat(k, l).unwrap())
            .sorted()
            .collect();
        let f = cone.poly.canonical_face(&tight).unwrap().unwrap();
        let dream = face_to_skew(&cone, 3, &f).unwrap();
        assert_eq!(dream.render(), "    +\n  + .\n+ + .\n  . .\n    +");
    }

    #[test]
    fn worked_mitosis_columns() {
        let d = SkewPipeDream::new(3, [(1, 3), (2, 2), (2, 3), (4, 2), (4, 3), (5, 3)]).unwrap();
        let (start, minus, plus) = skew_start(&d, 2);
        assert_eq!((start, minus, plus), (1, vec![2, 3], vec![2]));
        let full = SkewPipeDream::full(2);
        assert!(skew_mitosis(&SkewPipeDream::empty(2), 1).unwrap().is_empty());
        assert_eq!(skew_mitosis(&full, 1).unwrap().len(), 1);
    }

    #[test]
    fn json_roundtrip() {
        let d = SkewPipeDream::new(2, [(2, 1), (1, 2)]).unwrap();
        let j = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(j, r#"{"n":2,"crosses":[[1,2],[2,1]]}"#);
        let back = SkewPipeDream::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, d);
        assert!(SkewPipeDream::new(2, [(1, 1)]).is_err());
    }

    #[test]
    fn gl_encoding_and_render() {
        let gz = gz_polytope(&point(&[0, 1, 2])).unwrap();
        let o = gz.origin_face().unwrap();
        let d = gl_face_to_dream(&gz, 3, &o).unwrap();
        assert_eq!(d, GlPipeDream::full(3));
        assert_eq!(d.render(), "+ +\n  +");
        let full = gz.poly.full_face().unwrap();
        assert_eq!(gl_face_to_dream(&gz, 3, &full).unwrap().render(), ". .\n  .");
    }

    #[test]
    fn gl_mitosis_rows() {
        let d = GlPipeDream::full(3);
        let m1 = gl_pipe_mitosis(&d, 1).unwrap();
        assert_eq!(m1.iter().map(|x| x.render()).collect::<Vec<_>>(), vec![". +\n  +"]);
        let m2 = gl_pipe_mitosis(&d, 2).unwrap();
        assert_eq!(m2.iter().map(|x| x.render()).collect::<Vec<_>>(), vec!["+ +\n  ."]);
    }
}
