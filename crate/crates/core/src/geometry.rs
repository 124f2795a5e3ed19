//! Exact H-representation polyhedra: vertices and rays, faces as canonical
//! tight-constraint sets, lattice points, and point-set comparisons.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, dot, int, Point, Scalar};

/// The constraint `normal · x + offset >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
}

impl Halfspace {
    pub fn new(normal: Vec<Scalar>, offset: Scalar) -> Self {
        Halfspace { normal, offset }
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Self {
        Halfspace::new(rational::point(normal), int(offset))
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        dot(&self.normal, x) + &self.offset
    }

    /// Value of the linear part only, used on recession directions.
    pub fn eval_direction(&self, r: &[Scalar]) -> Scalar {
        dot(&self.normal, r)
    }
}

/// Vertices and extreme rays of a pointed polyhedron, with the constraints
/// tight on each of them.
#[derive(Clone, Debug)]
pub struct Generators {
    pub vertices: Vec<Point>,
    pub rays: Vec<Point>,
    pub vertex_tight: Vec<BTreeSet<usize>>,
    pub ray_tight: Vec<BTreeSet<usize>>,
}

/// A polyhedron `{x : normal_k · x + offset_k >= 0 for all k}`.
///
/// Polytopes must be bounded; cones are created with [`HPolytope::cone`] and
/// only support the face machinery.
#[derive(Clone, Debug)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
    cone: bool,
    generators: OnceLock<Result<Generators>>,
    lattice: OnceLock<Result<Vec<Vec<i64>>>>,
}

impl PartialEq for HPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.cone == other.cone && self.halfspaces == other.halfspaces
    }
}

impl Eq for HPolytope {}

/// A nonempty face, identified by the inclusion-maximal set of constraints
/// vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub tight: Vec<usize>,
    pub dim: usize,
}

impl Face {
    /// `self ⊆ other` as point sets (same polytope).
    pub fn is_subface_of(&self, other: &Face) -> bool {
        other.tight.iter().all(|k| self.tight.binary_search(k).is_ok())
    }

    pub fn is_tight(&self, k: usize) -> bool {
        self.tight.binary_search(&k).is_ok()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.tight.iter().join(","))
    }
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        Self::build(dim, halfspaces, false)
    }

    pub fn cone(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        Self::build(dim, halfspaces, true)
    }

    fn build(dim: usize, halfspaces: Vec<Halfspace>, cone: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        let mut unique = Vec::with_capacity(halfspaces.len());
        for h in halfspaces {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: h.normal.len(),
                });
            }
            if seen.insert(h.clone()) {
                unique.push(h);
            }
        }
        Ok(HPolytope {
            dim,
            halfspaces: unique,
            cone,
            generators: OnceLock::new(),
            lattice: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn is_cone(&self) -> bool {
        self.cone
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.halfspaces.iter().all(|h| !h.eval(x).is_negative())
    }

    pub fn generators(&self) -> Result<&Generators> {
        self.generators
            .get_or_init(|| enumerate_generators(self.dim, &self.halfspaces))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn require_bounded(&self) -> Result<&Generators> {
        if self.cone {
            return Err(Error::Unbounded);
        }
        let g = self.generators()?;
        if !g.rays.is_empty() {
            return Err(Error::Unbounded);
        }
        Ok(g)
    }

    /// All vertices, sorted lexicographically.
    pub fn vertices(&self) -> Result<Vec<Point>> {
        let mut v = self.require_bounded()?.vertices.clone();
        v.sort();
        Ok(v)
    }

    /// Canonical face cut out by turning the constraints in `tight` into
    /// equalities; `None` when that face is empty.
    pub fn canonical_face(&self, tight: &[usize]) -> Result<Option<Face>> {
        let g = self.generators()?;
        let within = |set: &BTreeSet<usize>| tight.iter().all(|k| set.contains(k));
        let verts: Vec<usize> = (0..g.vertices.len())
            .filter(|&i| within(&g.vertex_tight[i]))
            .collect();
        if verts.is_empty() {
            return Ok(None);
        }
        let rays: Vec<usize> = (0..g.rays.len())
            .filter(|&i| within(&g.ray_tight[i]))
            .collect();
        let mut closed = g.vertex_tight[verts[0]].clone();
        for &i in &verts[1..] {
            closed.retain(|k| g.vertex_tight[i].contains(k));
        }
        for &i in &rays {
            closed.retain(|k| g.ray_tight[i].contains(k));
        }
        let dim = span_dim(
            verts.iter().map(|&i| &g.vertices[i]),
            rays.iter().map(|&i| &g.rays[i]),
        );
        Ok(Some(Face {
            tight: closed.into_iter().collect(),
            dim,
        }))
    }

    /// The whole polyhedron as a face.
    pub fn full_face(&self) -> Result<Face> {
        self.canonical_face(&[])?
            .ok_or_else(|| Error::Invalid("empty polyhedron".into()))
    }

    /// Every nonempty face (including the polyhedron and its vertices).
    pub fn face_lattice(&self) -> Result<Vec<Face>> {
        let g = self.generators()?;
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<BTreeSet<usize>> = g.vertex_tight.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some(t) = queue.pop_front() {
            let key: Vec<usize> = t.iter().copied().collect();
            if !seen.insert(key.clone()) {
                continue;
            }
            out.push(
                self.canonical_face(&key)?
                    .expect("intersection of vertex tight sets is nonempty"),
            );
            for other in g.vertex_tight.iter().chain(&g.ray_tight) {
                let next: BTreeSet<usize> = t.intersection(other).copied().collect();
                if !seen.contains(&next.iter().copied().collect::<Vec<_>>()) {
                    queue.push_back(next);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The unique face whose relative interior contains `x`.
    pub fn minimal_face_containing(&self, x: &[Scalar]) -> Result<Face> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut tight = Vec::new();
        for (k, h) in self.halfspaces.iter().enumerate() {
            let v = h.eval(x);
            if v.is_negative() {
                return Err(Error::PointOutside);
            }
            if v.is_zero() {
                tight.push(k);
            }
        }
        let face = self
            .canonical_face(&tight)?
            .ok_or(Error::PointOutside)?;
        debug_assert_eq!(face.tight, tight);
        Ok(face)
    }

    pub fn face_vertices(&self, f: &Face) -> Result<Vec<Point>> {
        let g = self.generators()?;
        Ok((0..g.vertices.len())
            .filter(|&i| f.tight.iter().all(|k| g.vertex_tight[i].contains(k)))
            .map(|i| g.vertices[i].clone())
            .sorted()
            .collect())
    }

    pub fn face_rays(&self, f: &Face) -> Result<Vec<Point>> {
        let g = self.generators()?;
        Ok((0..g.rays.len())
            .filter(|&i| f.tight.iter().all(|k| g.ray_tight[i].contains(k)))
            .map(|i| g.rays[i].clone())
            .sorted()
            .collect())
    }

    /// Barycenter of the face's vertices, plus the sum of its rays when the
    /// face is unbounded. Always lies in the relative interior.
    pub fn interior_point(&self, f: &Face) -> Result<Point> {
        self.weighted_interior_point(f, |_| Scalar::one())
    }

    /// A second relative-interior point with distinct positive weights, for
    /// checking that constructions do not depend on the chosen point.
    pub fn alternate_interior_point(&self, f: &Face) -> Result<Point> {
        self.weighted_interior_point(f, |i| int(i as i64 + 1))
    }

    fn weighted_interior_point(&self, f: &Face, weight: impl Fn(usize) -> Scalar) -> Result<Point> {
        let verts = self.face_vertices(f)?;
        let rays = self.face_rays(f)?;
        let mut total = Scalar::zero();
        let mut x = vec![Scalar::zero(); self.dim];
        for (i, v) in verts.iter().enumerate() {
            let w = weight(i);
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += &w * vi;
            }
            total += w;
        }
        for xi in x.iter_mut() {
            *xi /= &total;
        }
        for (i, r) in rays.iter().enumerate() {
            let w = weight(i);
            for (xi, ri) in x.iter_mut().zip(r) {
                *xi += &w * ri;
            }
        }
        Ok(x)
    }

    pub fn face_contains(&self, f: &Face, x: &[Scalar]) -> bool {
        self.contains(x) && f.tight.iter().all(|&k| self.halfspaces[k].eval(x).is_zero())
    }

    pub fn intersect_faces(&self, a: &Face, b: &Face) -> Result<Option<Face>> {
        let tight: Vec<usize> = a.tight.iter().chain(&b.tight).copied().sorted().dedup().collect();
        self.canonical_face(&tight)
    }

    /// Integer points, sorted lexicographically.
    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        self.lattice
            .get_or_init(|| self.scan_lattice())
            .clone()
    }

    fn scan_lattice(&self) -> Result<Vec<Vec<i64>>> {
        let g = self.require_bounded()?;
        if g.vertices.is_empty() {
            return Ok(Vec::new());
        }
        let overflow = || Error::Invalid("coordinates too large for lattice enumeration".into());
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let min = g.vertices.iter().map(|v| &v[j]).min().unwrap();
            let max = g.vertices.iter().map(|v| &v[j]).max().unwrap();
            lo.push(rational::ceil_i64(min).ok_or_else(overflow)?);
            hi.push(rational::floor_i64(max).ok_or_else(overflow)?);
        }
        let rows = integer_rows(&self.halfspaces).ok_or_else(overflow)?;
        // Each constraint is checked as soon as its last coordinate is fixed.
        let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); self.dim];
        for (k, (normal, _)) in rows.iter().enumerate() {
            let last = normal.iter().rposition(|a| *a != 0).unwrap_or(0);
            by_last[last].push(k);
        }
        let mut out = Vec::new();
        let mut x = vec![0i64; self.dim];
        scan(0, &lo, &hi, &rows, &by_last, &mut x, &mut out);
        Ok(out)
    }

    /// Image under `x ↦ matrix · x + shift` for an invertible `matrix`.
    pub fn affine_image(&self, matrix: &[Vec<Scalar>], shift: &[Scalar]) -> Result<HPolytope> {
        let inv = linalg::inverse(matrix)
            .ok_or_else(|| Error::Invalid("affine map is not invertible".into()))?;
        let hs = self
            .halfspaces
            .iter()
            .map(|h| {
                let normal: Vec<Scalar> = (0..self.dim)
                    .map(|j| (0..self.dim).map(|i| &h.normal[i] * &inv[i][j]).sum())
                    .collect();
                let offset = &h.offset - dot(&normal, shift);
                Halfspace::new(normal, offset)
            })
            .collect();
        HPolytope::build(self.dim, hs, self.cone)
    }

    pub fn translate(&self, shift: &[Scalar]) -> Result<HPolytope> {
        let id: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        self.affine_image(&id, shift)
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| {
                    h.normal
                        .iter()
                        .chain(std::iter::once(&h.offset))
                        .map(rational::format_scalar)
                        .collect()
                })
                .collect(),
            cone: self.cone,
        }
    }

    pub fn from_json(j: &PolytopeJson) -> Result<HPolytope> {
        let hs = j
            .halfspaces
            .iter()
            .map(|row| {
                if row.len() != j.dim + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: j.dim + 1,
                        got: row.len(),
                    });
                }
                let vals = row
                    .iter()
                    .map(|s| rational::parse_scalar(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Halfspace::new(vals[..j.dim].to_vec(), vals[j.dim].clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        HPolytope::build(j.dim, hs, j.cone)
    }
}

/// `{"dim": d, "halfspaces": [[a_1,…,a_d,b],…]}` with rationals as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub halfspaces: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cone: bool,
}

/// True iff the two bounded polytopes are the same point set.
pub fn polytopes_equal(p: &HPolytope, q: &HPolytope) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    let pv = p.vertices()?;
    let qv = q.vertices()?;
    Ok(pv.iter().all(|v| q.contains(v)) && qv.iter().all(|v| p.contains(v)))
}

fn span_dim<'a>(
    verts: impl Iterator<Item = &'a Point>,
    rays: impl Iterator<Item = &'a Point>,
) -> usize {
    let verts: Vec<&Point> = verts.collect();
    let mut rows: Vec<Vec<Scalar>> = verts[1..]
        .iter()
        .map(|v| v.iter().zip(verts[0]).map(|(a, b)| a - b).collect())
        .collect();
    rows.extend(rays.cloned());
    if rows.is_empty() {
        0
    } else {
        linalg::rank(&rows)
    }
}

fn enumerate_generators(dim: usize, hs: &[Halfspace]) -> Result<Generators> {
    let normals: Vec<Vec<Scalar>> = hs.iter().map(|h| h.normal.clone()).collect();
    if linalg::rank(&normals) < dim {
        return Err(Error::NotPointed);
    }
    let mut vertices = BTreeSet::new();
    for subset in (0..hs.len()).combinations(dim) {
        let a: Vec<Vec<Scalar>> = subset.iter().map(|&k| hs[k].normal.clone()).collect();
        let b: Vec<Scalar> = subset.iter().map(|&k| -hs[k].offset.clone()).collect();
        if let Some(x) = linalg::solve(&a, &b) {
            if hs.iter().all(|h| !h.eval(&x).is_negative()) {
                vertices.insert(x);
            }
        }
    }
    let mut rays = BTreeSet::new();
    if !vertices.is_empty() {
        for subset in (0..hs.len()).combinations(dim - 1) {
            let a: Vec<Vec<Scalar>> = subset.iter().map(|&k| hs[k].normal.clone()).collect();
            let ns = linalg::nullspace(&a, dim);
            if ns.len() != 1 {
                continue;
            }
            let r = rational::primitive(&ns[0]);
            let neg: Vec<Scalar> = r.iter().map(|x| -x).collect();
            for cand in [r, neg] {
                if hs.iter().all(|h| !h.eval_direction(&cand).is_negative()) {
                    rays.insert(cand);
                }
            }
        }
    }
    let vertices: Vec<Point> = vertices.into_iter().collect();
    let rays: Vec<Point> = rays.into_iter().collect();
    let vertex_tight = vertices
        .iter()
        .map(|v| (0..hs.len()).filter(|&k| hs[k].eval(v).is_zero()).collect())
        .collect();
    let ray_tight = rays
        .iter()
        .map(|r| (0..hs.len()).filter(|&k| hs[k].eval_direction(r).is_zero()).collect())
        .collect();
    Ok(Generators {
        vertices,
        rays,
        vertex_tight,
        ray_tight,
    })
}

type IntRow = (Vec<i128>, i128);

fn integer_rows(hs: &[Halfspace]) -> Option<Vec<IntRow>> {
    hs.iter()
        .map(|h| {
            let lcm = h
                .normal
                .iter()
                .chain(std::iter::once(&h.offset))
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let conv = |x: &Scalar| (x * &lcm).to_integer().to_i128();
            let normal = h.normal.iter().map(conv).collect::<Option<Vec<_>>>()?;
            Some((normal, conv(&h.offset)?))
        })
        .collect()
}

fn scan(
    j: usize,
    lo: &[i64],
    hi: &[i64],
    rows: &[IntRow],
    by_last: &[Vec<usize>],
    x: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if j == lo.len() {
        out.push(x.clone());
        return;
    }
    for v in lo[j]..=hi[j] {
        x[j] = v;
        let ok = by_last[j].iter().all(|&k| {
            let (normal, offset) = &rows[k];
            let s: i128 = normal
                .iter()
                .zip(x.iter())
                .take(j + 1)
                .map(|(a, &xi)| a * xi as i128)
                .sum();
            s + offset >= 0
        });
        if ok {
            scan(j + 1, lo, hi, rows, by_last, x, out);
        }
    }
}

/// An inclusion-reduced set of faces of one polytope, read as the union of
/// its members.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnionOfFaces {
    faces: BTreeSet<Face>,
}

impl UnionOfFaces {
    pub fn new(faces: impl IntoIterator<Item = Face>) -> Self {
        let all: BTreeSet<Face> = faces.into_iter().collect();
        let faces = all
            .iter()
            .filter(|f| !all.iter().any(|g| g != *f && f.is_subface_of(g)))
            .cloned()
            .collect();
        UnionOfFaces { faces }
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains_point(&self, p: &HPolytope, x: &[Scalar]) -> bool {
        self.faces.iter().any(|f| p.face_contains(f, x))
    }

    /// Lattice points of the union, each once, sorted.
    pub fn lattice_points(&self, p: &HPolytope) -> Result<Vec<Vec<i64>>> {
        let rows = p.halfspaces();
        Ok(p
            .lattice_points()?
            .into_iter()
            .filter(|x| {
                let xq: Point = x.iter().map(|&v| int(v)).collect();
                self.faces
                    .iter()
                    .any(|f| f.tight.iter().all(|&k| rows[k].eval(&xq).is_zero()))
            })
            .collect())
    }

    pub fn union(&self, other: &UnionOfFaces) -> UnionOfFaces {
        UnionOfFaces::new(self.faces.iter().chain(&other.faces).cloned())
    }

    /// Point-set intersection, as the union of pairwise face intersections.
    pub fn intersect(&self, other: &UnionOfFaces, p: &HPolytope) -> Result<UnionOfFaces> {
        let mut out = Vec::new();
        for a in &self.faces {
            for b in &other.faces {
                if let Some(f) = p.intersect_faces(a, b)? {
                    out.push(f);
                }
            }
        }
        Ok(UnionOfFaces::new(out))
    }
}

impl FromIterator<Face> for UnionOfFaces {
    fn from_iter<T: IntoIterator<Item = Face>>(iter: T) -> Self {
        UnionOfFaces::new(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{point, ratio};

    pub(crate) fn cube(d: usize) -> HPolytope {
        let mut hs = Vec::new();
        for i in 0..d {
            let mut e = vec![0i64; d];
            e[i] = 1;
            hs.push(Halfspace::from_ints(&e, 0));
            e[i] = -1;
            hs.push(Halfspace::from_ints(&e, 1));
        }
        HPolytope::new(d, hs).unwrap()
    }

    #[test]
    fn unit_square_vertices_and_faces() {
        let sq = cube(2);
        assert_eq!(
            sq.vertices().unwrap(),
            vec![point(&[0, 0]), point(&[0, 1]), point(&[1, 0]), point(&[1, 1])]
        );
        assert_eq!(sq.lattice_points().unwrap().len(), 4);
        assert_eq!(sq.face_lattice().unwrap().len(), 9);
        assert_eq!(cube(1).face_lattice().unwrap().len(), 3);
    }

    #[test]
    fn minimal_faces_of_square() {
        let sq = cube(2);
        let f = sq.minimal_face_containing(&[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(f.dim, 2);
        assert!(f.tight.is_empty());
        let e = sq.minimal_face_containing(&[int(0), ratio(1, 2)]).unwrap();
        assert_eq!(e.dim, 1);
        assert_eq!(e.tight, vec![0]);
        assert_eq!(
            sq.minimal_face_containing(&[int(2), int(0)]),
            Err(Error::PointOutside)
        );
    }

    #[test]
    fn interior_points() {
        let seg = cube(1);
        let full = seg.full_face().unwrap();
        assert_eq!(seg.interior_point(&full).unwrap(), vec![ratio(1, 2)]);
        let v = seg.minimal_face_containing(&[int(1)]).unwrap();
        assert_eq!(seg.interior_point(&v).unwrap(), vec![int(1)]);
    }

    #[test]
    fn equality_and_translation() {
        let sq = cube(2);
        assert!(polytopes_equal(&sq, &sq).unwrap());
        let moved = sq.translate(&point(&[1, 0])).unwrap();
        assert!(!polytopes_equal(&sq, &moved).unwrap());
        assert!(moved.contains(&point(&[2, 1])));
        assert!(polytopes_equal(&sq, &cube(3)).is_err());
    }

    #[test]
    fn unbounded_is_refused() {
        let quadrant = HPolytope::new(
            2,
            vec![Halfspace::from_ints(&[1, 0], 0), Halfspace::from_ints(&[0, 1], 0)],
        )
        .unwrap();
        assert_eq!(quadrant.vertices(), Err(Error::Unbounded));
        let cone = HPolytope::cone(
            2,
            vec![Halfspace::from_ints(&[1, 0], 0), Halfspace::from_ints(&[-1, 1], 0)],
        )
        .unwrap();
        assert_eq!(cone.lattice_points(), Err(Error::Unbounded));
        let g = cone.generators().unwrap();
        assert_eq!(g.rays, vec![point(&[0, 1]), point(&[1, 1])]);
        let faces = cone.face_lattice().unwrap();
        assert_eq!(faces.len(), 4);
        let ray_face = cone.minimal_face_containing(&point(&[3, 3])).unwrap();
        assert_eq!(ray_face.dim, 1);
        let x = cone.interior_point(&ray_face).unwrap();
        assert_eq!(cone.minimal_face_containing(&x).unwrap(), ray_face);
    }

    #[test]
    fn duplicate_constraints_are_dropped() {
        let p = HPolytope::new(
            1,
            vec![
                Halfspace::from_ints(&[1], 0),
                Halfspace::from_ints(&[1], 0),
                Halfspace::from_ints(&[-1], 2),
            ],
        )
        .unwrap();
        assert_eq!(p.halfspaces().len(), 2);
    }

    #[test]
    fn json_roundtrip() {
        let p = HPolytope::new(
            2,
            vec![
                Halfspace::new(vec![ratio(1, 2), int(0)], int(0)),
                Halfspace::from_ints(&[-1, 0], 1),
                Halfspace::from_ints(&[0, 1], 0),
                Halfspace::from_ints(&[0, -1], 1),
            ],
        )
        .unwrap();
        let j = p.to_json();
        assert_eq!(j.halfspaces[0], vec!["1/2", "0", "0"]);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"dim":2,"halfspaces":[["1/2","0","0"],["-1","0","1"],["0","1","0"],["0","-1","1"]]}"#
        );
        let back = HPolytope::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn union_intersection() {
        let sq = cube(2);
        let left = sq.canonical_face(&[0]).unwrap().unwrap();
        let bottom = sq.canonical_face(&[2]).unwrap().unwrap();
        let corner = sq.canonical_face(&[0, 2]).unwrap().unwrap();
        let u = UnionOfFaces::new([left.clone(), corner.clone()]);
        assert_eq!(u.len(), 1);
        let w = UnionOfFaces::new([bottom]);
        let i = u.intersect(&w, &sq).unwrap();
        assert_eq!(i, UnionOfFaces::new([corner]));
        let both = UnionOfFaces::new([left, sq.canonical_face(&[2]).unwrap().unwrap()]);
        // (0,0) is shared by both edges and counted once.
        assert_eq!(both.lattice_points(&sq).unwrap().len(), 3);
    }
}
