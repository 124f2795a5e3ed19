//! Root data, Weyl groups, the group algebra of the weight lattice, and
//! Demazure operators in the lowest-weight convention
//! `D_α e^μ = (e^μ − e^α e^{s_α μ}) / (1 − e^α)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Scalar;

pub type Weight = Vec<i64>;

/// How the simple roots of `C_n` are numbered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpLabeling {
    /// `α_1, …, α_{n−1}` short, `α_n = 2ε_n` long.
    ShortFirst,
    /// The reverse numbering: `α_1 = 2ε_n` long, `α_n = ε_1 − ε_2`.
    LongFirst,
}

/// Simple roots and coroots realized in `Z^m` with the coroot pairing given
/// by the dot product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    roots: Vec<Weight>,
    coroots: Vec<Weight>,
    fundamental: Vec<Weight>,
}

fn unit(m: usize, i: usize) -> Weight {
    let mut v = vec![0; m];
    v[i] = 1;
    v
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootDatum {
    /// `GL_n` on `Z^n` with `α_i = e_i − e_{i+1}`.
    pub fn gl(n: usize) -> RootDatum {
        assert!(n >= 1);
        let roots: Vec<Weight> = (0..n - 1)
            .map(|i| {
                let mut v = unit(n, i);
                v[i + 1] = -1;
                v
            })
            .collect();
        let fundamental = (0..n - 1)
            .map(|i| (0..n).map(|j| i64::from(j <= i)).collect())
            .collect();
        RootDatum {
            name: format!("GL{n}"),
            coroots: roots.clone(),
            roots,
            fundamental,
        }
    }

    /// `Sp_{2n}` on `Z^n` (coordinates `ε_1, …, ε_n`).
    pub fn sp(n: usize, labeling: SpLabeling) -> RootDatum {
        assert!(n >= 1);
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut fundamental = Vec::new();
        for i in 0..n - 1 {
            let mut v = unit(n, i);
            v[i + 1] = -1;
            roots.push(v.clone());
            coroots.push(v);
        }
        let mut long = vec![0; n];
        long[n - 1] = 2;
        roots.push(long);
        coroots.push(unit(n, n - 1));
        for i in 0..n {
            fundamental.push((0..n).map(|j| i64::from(j <= i)).collect());
        }
        if labeling == SpLabeling::LongFirst {
            roots.reverse();
            coroots.reverse();
            fundamental.reverse();
        }
        RootDatum {
            name: format!("Sp{}", 2 * n),
            roots,
            coroots,
            fundamental,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn lattice_dim(&self) -> usize {
        self.fundamental
            .first()
            .or(self.roots.first())
            .map_or(1, Vec::len)
    }

    /// Simple root `α_i`, 1-based.
    pub fn root(&self, i: usize) -> &Weight {
        &self.roots[i - 1]
    }

    pub fn coroot(&self, i: usize) -> &Weight {
        &self.coroots[i - 1]
    }

    /// `(χ, α_i^∨)`.
    pub fn pairing(&self, chi: &[i64], i: usize) -> i64 {
        dot(chi, self.coroot(i))
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.pairing(self.root(j), i)
    }

    /// `Σ c_i ω_i`.
    pub fn from_fundamental(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        let mut w = vec![0; self.lattice_dim()];
        for (c, om) in coeffs.iter().zip(&self.fundamental) {
            for (a, b) in w.iter_mut().zip(om) {
                *a += c * b;
            }
        }
        Ok(w)
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        (1..=self.rank()).all(|i| self.pairing(lambda, i) >= 0)
    }

    pub fn reflect(&self, i: usize, chi: &[i64]) -> Weight {
        let k = self.pairing(chi, i);
        chi.iter().zip(self.root(i)).map(|(c, a)| c - k * a).collect()
    }

    fn reflection_matrix(&self, i: usize) -> Matrix {
        let m = self.lattice_dim();
        (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| i64::from(a == b) - self.root(i)[a] * self.coroot(i)[b])
                    .collect()
            })
            .collect()
    }

    /// Positive roots, as the orbit closure of the simple roots.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let mut found: BTreeSet<Weight> = self.roots.iter().cloned().collect();
        let mut frontier: Vec<Weight> = found.iter().cloned().collect();
        while let Some(beta) = frontier.pop() {
            for i in 1..=self.rank() {
                if &beta == self.root(i) {
                    continue;
                }
                let img = self.reflect(i, &beta);
                if found.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        found.into_iter().collect()
    }
}

type Matrix = Vec<Vec<i64>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// A Weyl group element: its lexicographically least reduced word and its
/// action on the weight lattice. Equality is by action.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Matrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, chi: &[i64]) -> Weight {
        self.matrix.iter().map(|row| dot(row, chi)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.matrix.len())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&self.word.iter().map(|i| format!("s{i}")).join(""))
        }
    }
}

/// The finite Weyl group of a root datum, enumerated by breadth-first search.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: RootDatum,
    elements: Vec<WeylElement>,
    index: HashMap<Matrix, usize>,
}

impl WeylGroup {
    pub fn new(datum: &RootDatum) -> WeylGroup {
        let m = datum.lattice_dim();
        let gens: Vec<Matrix> = (1..=datum.rank()).map(|i| datum.reflection_matrix(i)).collect();
        let mut index = HashMap::new();
        let mut elements = vec![WeylElement {
            word: vec![],
            matrix: identity(m),
        }];
        index.insert(identity(m), 0);
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &e in &layer {
                for (g, s) in gens.iter().enumerate() {
                    let matrix = mat_mul(&elements[e].matrix, s);
                    if index.contains_key(&matrix) {
                        continue;
                    }
                    let mut word = elements[e].word.clone();
                    word.push(g + 1);
                    index.insert(matrix.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(WeylElement { word, matrix });
                }
            }
            // Processing each layer in lexicographic word order makes the
            // first word found for an element its lex-least reduced word.
            next.sort_by(|a, b| elements[*a].word.cmp(&elements[*b].word));
            layer = next;
        }
        WeylGroup {
            datum: datum.clone(),
            elements,
            index,
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.iter().max_by_key(|e| e.length()).unwrap()
    }

    fn canonical(&self, matrix: &Matrix) -> WeylElement {
        self.elements[self.index[matrix]].clone()
    }

    /// The element `s_{w_1} ⋯ s_{w_k}`.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut m = identity(self.datum.lattice_dim());
        for &i in word {
            if i == 0 || i > self.datum.rank() {
                return Err(Error::InvalidLabel(format!("s{i}")));
            }
            m = mat_mul(&m, &self.datum.reflection_matrix(i));
        }
        Ok(self.canonical(&m))
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.canonical(&mat_mul(&a.matrix, &b.matrix))
    }

    pub fn inverse(&self, a: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = a.word.iter().rev().copied().collect();
        self.from_word(&rev).expect("letters already validated")
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.from_word(word)?.length() == word.len())
    }

    /// Parses `e`, `w0`, or a product such as `s2s1`.
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
        match t.as_str() {
            "e" | "id" | "1" => return Ok(self.identity().clone()),
            "w0" => return Ok(self.longest().clone()),
            _ => {}
        }
        let mut word = Vec::new();
        for part in t.split('s').skip(1) {
            word.push(
                part.parse::<usize>()
                    .map_err(|_| Error::InvalidLabel(s.to_string()))?,
            );
        }
        if word.is_empty() || !t.starts_with('s') {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        self.from_word(&word)
    }

    /// A reduced word for `w_0 · target · w_0^{-1}` occurring as a subword of
    /// `ambient`; the lexicographically first choice of positions wins.
    pub fn subword_reduced_word(&self, target: &WeylElement, ambient: &[usize]) -> Result<Vec<usize>> {
        self.compatible_subwords(target, ambient)?
            .into_iter()
            .next()
            .ok_or(Error::NoCompatibleSubword)
    }

    /// Every distinct reduced word for `w_0 · target · w_0^{-1}` that is a
    /// subword of `ambient`, in order of first occurrence.
    pub fn compatible_subwords(&self, target: &WeylElement, ambient: &[usize]) -> Result<Vec<Vec<usize>>> {
        let w0 = self.longest();
        if self.from_word(ambient)? != *w0 || ambient.len() != w0.length() {
            return Err(Error::NotReducedWord(ambient.to_vec()));
        }
        let u = self.multiply(&self.multiply(w0, target), &self.inverse(w0));
        let mut out: Vec<Vec<usize>> = Vec::new();
        for pos in (0..ambient.len()).combinations(u.length()) {
            let word: Vec<usize> = pos.iter().map(|&p| ambient[p]).collect();
            if self.from_word(&word)? == u && !out.contains(&word) {
                out.push(word);
            }
        }
        Ok(out)
    }

    /// `ρ`, doubled so that it is integral.
    fn two_rho(&self) -> Weight {
        let mut r = vec![0; self.datum.lattice_dim()];
        for beta in self.datum.positive_roots() {
            for (a, b) in r.iter_mut().zip(&beta) {
                *a += b;
            }
        }
        r
    }

    /// `dim V_λ` by the Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<i64> {
        if !self.datum.is_dominant(lambda) {
            return Err(Error::NotDominant(format!("{lambda:?}")));
        }
        let two_rho = self.two_rho();
        let mut num = Scalar::from_integer(1.into());
        for beta in self.datum.positive_roots() {
            // β^∨ = 2β/(β,β) in these realizations; the common factor cancels.
            let a = dot(lambda, &beta) * 2 + dot(&two_rho, &beta);
            let b = dot(&two_rho, &beta);
            num *= Scalar::new(a.into(), b.into());
        }
        crate::rational::to_i64(&num).ok_or_else(|| Error::Invalid("non-integral dimension".into()))
    }

    /// `D_{α_{w_1}} ⋯ D_{α_{w_k}} e^{w_0 λ}`.
    pub fn demazure_character(&self, word: &[usize], lambda: &[i64]) -> Result<Character> {
        if !self.datum.is_dominant(lambda) {
            return Err(Error::NotDominant(format!("{lambda:?}")));
        }
        if !self.is_reduced(word)? {
            return Err(Error::NotReducedWord(word.to_vec()));
        }
        let mut f = Character::monomial(self.longest().act(lambda), 1);
        for &i in word.iter().rev() {
            f = demazure(&self.datum, i, &f);
        }
        Ok(f)
    }
}

/// Element of the group algebra `Z[Λ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(BTreeMap<Weight, i64>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub weight: Weight,
    pub coeff: i64,
}

impl Character {
    pub fn zero() -> Character {
        Character::default()
    }

    pub fn monomial(weight: Weight, coeff: i64) -> Character {
        let mut c = Character::zero();
        c.add_term(weight, coeff);
        c
    }

    pub fn add_term(&mut self, weight: Weight, coeff: i64) {
        let e = self.0.entry(weight.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&weight);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.0
    }

    pub fn coeff(&self, weight: &[i64]) -> i64 {
        self.0.get(weight).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut out = Character::zero();
        for (w, c) in &self.0 {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::zero();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }

    /// Multiplication by `e^μ`.
    pub fn shift(&self, mu: &[i64]) -> Character {
        self.mul(&Character::monomial(mu.to_vec(), 1))
    }

    pub fn to_json(&self) -> Vec<CharacterTerm> {
        self.0
            .iter()
            .map(|(w, c)| CharacterTerm {
                weight: w.clone(),
                coeff: *c,
            })
            .collect()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s = self
            .0
            .iter()
            .map(|(w, c)| format!("{c}*e^({})", w.iter().join(",")))
            .join(" + ");
        f.write_str(&s)
    }
}

/// The Demazure operator `D_{α_i}`, extended linearly from the closed form
/// on monomials with `k = (μ, α_i^∨)`:
/// `k ≤ 0 ↦ Σ_{j=0}^{−k} e^{μ+jα}`, `k = 1 ↦ 0`, `k ≥ 2 ↦ −Σ_{j=1}^{k−1} e^{μ−jα}`.
pub fn demazure(rd: &RootDatum, i: usize, f: &Character) -> Character {
    let alpha = rd.root(i);
    let step = |mu: &Weight, j: i64| -> Weight { mu.iter().zip(alpha).map(|(m, a)| m + j * a).collect() };
    let mut out = Character::zero();
    for (mu, &c) in f.terms() {
        let k = rd.pairing(mu, i);
        if k <= 0 {
            for j in 0..=-k {
                out.add_term(step(mu, j), c);
            }
        } else {
            for j in 1..k {
                out.add_term(step(mu, -j), -c);
            }
        }
    }
    out
}

/// Exponent-wise reflection `e^μ ↦ e^{s_i μ}`.
pub fn reflect_character(rd: &RootDatum, i: usize, f: &Character) -> Character {
    let mut out = Character::zero();
    for (mu, &c) in f.terms() {
        out.add_term(rd.reflect(i, mu), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sp4() -> RootDatum {
        RootDatum::sp(2, SpLabeling::ShortFirst)
    }

    #[test]
    fn group_orders() {
        assert_eq!(WeylGroup::new(&RootDatum::gl(3)).order(), 6);
        assert_eq!(WeylGroup::new(&RootDatum::gl(4)).order(), 24);
        let g = WeylGroup::new(&sp4());
        assert_eq!(g.order(), 8);
        assert_eq!(g.longest().length(), 4);
        assert!(g.is_reduced(&[2, 1, 2, 1]).unwrap());
        assert_eq!(g.from_word(&[2, 1, 2, 1]).unwrap(), *g.longest());
        assert!(!g.is_reduced(&[1, 1]).unwrap());
    }

    #[test]
    fn cartan_matrices() {
        let c = sp4();
        // α_1 short, α_2 long.
        assert_eq!((c.cartan(1, 1), c.cartan(1, 2), c.cartan(2, 1)), (2, -2, -1));
        let c = RootDatum::sp(2, SpLabeling::LongFirst);
        assert_eq!((c.cartan(1, 2), c.cartan(2, 1)), (-1, -2));
        let a = RootDatum::gl(3);
        assert_eq!((a.cartan(1, 2), a.cartan(2, 1)), (-1, -1));
    }

    #[test]
    fn lex_least_words() {
        let g = WeylGroup::new(&RootDatum::gl(3));
        let w = g.from_word(&[2, 1, 2]).unwrap();
        assert_eq!(w.word(), &[1, 2, 1]);
        assert_eq!(g.parse("w0").unwrap(), w);
        assert_eq!(g.parse("s2s1").unwrap().word(), &[2, 1]);
        assert!(g.parse("s3").is_err());
        assert!(g.parse("x").is_err());
    }

    #[test]
    fn weyl_dimensions() {
        let sp = WeylGroup::new(&sp4());
        assert_eq!(sp.weyl_dim(&[0, 0]).unwrap(), 1);
        let rho = sp4().from_fundamental(&[1, 1]).unwrap();
        assert_eq!(rho, vec![2, 1]);
        assert_eq!(sp.weyl_dim(&rho).unwrap(), 16);
        let gl = WeylGroup::new(&RootDatum::gl(3));
        // The adjoint representation of SL_3.
        assert_eq!(gl.weyl_dim(&[2, 1, 0]).unwrap(), 8);
        assert!(gl.weyl_dim(&[0, 1, 2]).is_err());
    }

    /// `(1 − e^α) D f = f − e^α s(f)`.
    fn division_identity(rd: &RootDatum, i: usize, f: &Character) -> bool {
        let alpha = Character::monomial(rd.root(i).clone(), 1);
        let one_minus = Character::monomial(vec![0; rd.lattice_dim()], 1).add(&alpha.scale(-1));
        let lhs = one_minus.mul(&demazure(rd, i, f));
        let rhs = f.add(&alpha.mul(&reflect_character(rd, i, f)).scale(-1));
        lhs == rhs
    }

    #[test]
    fn demazure_examples() {
        let rd = RootDatum::gl(2);
        let mu = vec![0, 2];
        // k = (μ, α^∨) = −2.
        let d = demazure(&rd, 1, &Character::monomial(mu, 1));
        let expect = Character::monomial(vec![0, 2], 1)
            .add(&Character::monomial(vec![1, 1], 1))
            .add(&Character::monomial(vec![2, 0], 1));
        assert_eq!(d, expect);
        assert_eq!(
            demazure(&rd, 1, &Character::monomial(vec![3, 3], 1)),
            Character::monomial(vec![3, 3], 1)
        );
        let sp = WeylGroup::new(&sp4());
        let full = sp.demazure_character(&[1, 2, 1, 2], &[2, 1]).unwrap();
        assert_eq!(full.coefficient_sum(), 16);
        assert_eq!(
            sp.demazure_character(&[], &[2, 1]).unwrap(),
            Character::monomial(vec![-2, -1], 1)
        );
        assert!(matches!(
            sp.demazure_character(&[1, 1], &[2, 1]),
            Err(Error::NotReducedWord(_))
        ));
    }

    #[test]
    fn full_character_matches_dimension_and_braids() {
        for (rd, lambdas) in [
            (RootDatum::gl(2), vec![vec![3, 0], vec![1, 1]]),
            (RootDatum::gl(3), vec![vec![2, 1, 0], vec![3, 1, 0], vec![2, 2, 0]]),
            (RootDatum::gl(4), vec![vec![2, 1, 1, 0], vec![3, 2, 1, 0]]),
            (sp4(), vec![vec![2, 1], vec![3, 1], vec![1, 0], vec![2, 2]]),
        ] {
            let g = WeylGroup::new(&rd);
            for lambda in lambdas {
                let dim = g.weyl_dim(&lambda).unwrap();
                let mut chars = BTreeSet::new();
                for word in reduced_words(&g, g.longest()) {
                    let ch = g.demazure_character(&word, &lambda).unwrap();
                    assert_eq!(ch.coefficient_sum(), dim);
                    assert!(ch.terms().values().all(|&c| c > 0));
                    chars.insert(ch);
                }
                assert_eq!(chars.len(), 1, "braid relations for {}", rd.name());
                // The full character is Weyl-invariant.
                let ch = chars.into_iter().next().unwrap();
                for i in 1..=rd.rank() {
                    assert_eq!(reflect_character(&rd, i, &ch), ch);
                }
            }
        }
    }

    fn reduced_words(g: &WeylGroup, w: &WeylElement) -> Vec<Vec<usize>> {
        let r = g.datum().rank();
        (0..w.length())
            .map(|_| 1..=r)
            .multi_cartesian_product()
            .filter(|word| g.from_word(word).unwrap() == *w)
            .collect()
    }

    #[test]
    fn braid_compatibility_for_every_element() {
        let g = WeylGroup::new(&sp4());
        for w in g.elements() {
            let chars: BTreeSet<Character> = reduced_words(&g, w)
                .iter()
                .map(|word| g.demazure_character(word, &[3, 1]).unwrap())
                .collect();
            assert_eq!(chars.len(), 1);
        }
    }

    #[test]
    fn subwords() {
        let g = WeylGroup::new(&sp4());
        let amb = [2, 1, 2, 1];
        assert_eq!(g.subword_reduced_word(g.identity(), &amb).unwrap(), Vec::<usize>::new());
        assert_eq!(g.subword_reduced_word(g.longest(), &amb).unwrap(), amb.to_vec());
        let s1 = g.parse("s1").unwrap();
        // w_0 is central in type C, so the conjugate is s_1 itself.
        assert_eq!(g.subword_reduced_word(&s1, &amb).unwrap(), vec![1]);
        let gl = WeylGroup::new(&RootDatum::gl(3));
        let s1 = gl.parse("s1").unwrap();
        assert_eq!(gl.subword_reduced_word(&s1, &[1, 2, 1]).unwrap(), vec![2]);
        assert!(matches!(
            gl.subword_reduced_word(&s1, &[1, 1, 2]),
            Err(Error::NotReducedWord(_))
        ));
    }

    proptest! {
        #[test]
        fn demazure_divides_exactly(
            terms in prop::collection::vec((prop::collection::vec(-4i64..5, 2), -3i64..4), 1..6),
            i in 1usize..3,
        ) {
            let rd = sp4();
            let mut f = Character::zero();
            for (w, c) in terms {
                f.add_term(w, c);
            }
            prop_assert!(division_identity(&rd, i, &f));
            let d = demazure(&rd, i, &f);
            prop_assert_eq!(demazure(&rd, i, &d), d);
        }

        #[test]
        fn reflections_are_involutions(chi in prop::collection::vec(-20i64..20, 3), i in 1usize..3) {
            let rd = RootDatum::gl(3);
            prop_assert_eq!(rd.reflect(i, &rd.reflect(i, &chi)), chi);
        }
    }
}
