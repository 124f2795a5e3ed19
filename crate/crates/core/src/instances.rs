//! The concrete polytopes and cones: Gelfand–Zetlin polytopes, the
//! symplectic DDO polytope `SP_λ`, the adapted-string cone of `Sp_{2n}`, and
//! the valuation body `Δ_v(λ)` with its unimodular map `φ`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{HPolytope, Halfspace};
use crate::parapolytope::{Decomposition, Parapolytope};
use crate::rational::{int, Point, Scalar};
use crate::weyl::{RootDatum, SpLabeling, Weight};

/// A parapolytope with the root datum and dominant weight it is balanced for.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub para: Parapolytope,
    pub rd: RootDatum,
    pub lambda: Weight,
}

/// The reduced word `(s_1)(s_2 s_1)…(s_{n−1}…s_1)` of the longest element of
/// `S_n`.
pub fn gz_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// Flat coordinate holding the table entry `x^k_j` (row `k`, position `j`).
/// Within a row the labels of the decomposition run in reverse.
pub fn gz_coordinate(d: &Decomposition, n: usize, k: usize, j: usize) -> usize {
    d.flat(k, n - k + 1 - j).expect("entry in range")
}

/// Index of the constraint `x^{k−1}_j ≤ x^k_j`; the opposite constraint
/// `x^k_j ≤ x^{k−1}_{j+1}` comes right after it.
pub fn gz_lower_constraint(n: usize, k: usize, j: usize) -> usize {
    let before: usize = (1..k).map(|r| n - r).sum();
    2 * (before + j - 1)
}

/// `GZ_λ − a_λ` for a non-decreasing `λ`, so that its lowest vertex is `0`.
pub fn gz_polytope(lambda: &[Scalar]) -> Result<Parapolytope> {
    let n = lambda.len();
    if n < 2 {
        return Err(Error::Invalid("need at least two entries".into()));
    }
    if lambda.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Invalid("λ must be non-decreasing".into()));
    }
    let decomp = Decomposition::from_word(&gz_word(n))?;
    let d = decomp.d();
    let coord = |k: usize, j: usize| gz_coordinate(&decomp, n, k, j);
    let mut hs = Vec::new();
    for k in 1..n {
        for j in 1..=n - k {
            // Shifted coordinates z^k_j = x^k_j − λ_j.
            let mut lower = vec![Scalar::zero(); d];
            let mut upper = vec![Scalar::zero(); d];
            lower[coord(k, j)] = int(1);
            upper[coord(k, j)] = int(-1);
            let gap = &lambda[j] - &lambda[j - 1];
            if k > 1 {
                lower[coord(k - 1, j)] = int(-1);
                upper[coord(k - 1, j + 1)] = int(1);
            }
            hs.push(Halfspace::new(lower, Scalar::zero()));
            hs.push(Halfspace::new(upper, gap));
        }
    }
    Parapolytope::new(HPolytope::new(d, hs)?, decomp)
}

/// The dominant weight `Λ` with `(Λ, α_k) = λ_{k+1} − λ_k`.
pub fn gz_weight(lambda: &[i64]) -> Weight {
    let top = *lambda.last().unwrap();
    lambda.iter().map(|l| top - l).collect()
}

pub fn gz_instance(lambda: &[i64]) -> Result<Instance> {
    let para = gz_polytope(&lambda.iter().map(|&l| int(l)).collect::<Vec<_>>())?;
    Ok(Instance {
        name: format!("GZ{:?}", lambda),
        para,
        rd: RootDatum::gl(lambda.len()),
        lambda: gz_weight(lambda),
    })
}

/// The lowest vertex `a_λ` in unshifted table coordinates.
pub fn gz_lowest_vertex(lambda: &[Scalar]) -> Point {
    let n = lambda.len();
    let decomp = Decomposition::from_word(&gz_word(n)).expect("valid word");
    let mut a = vec![Scalar::zero(); decomp.d()];
    for k in 1..n {
        for j in 1..=n - k {
            a[gz_coordinate(&decomp, n, k, j)] = lambda[j - 1].clone();
        }
    }
    a
}

/// Names of the eight `SP_λ` constraints, in index order.
pub const SP4_FACETS: [&str; 8] = ["H1+", "H1-", "H2-", "H2+", "H3-", "H4+", "H4-", "H3+"];

/// `SP_λ` for `λ = λ_1 ω_1 + λ_2 ω_2`:
/// `0 ≤ y_1 ≤ λ_1`, `y_2 ≤ y_1 + λ_2`, `y_3 ≤ 2y_2`, `y_3 ≤ y_2 + λ_2`,
/// `0 ≤ y_4 ≤ λ_2`, `y_4 ≤ y_3/2`.
pub fn sp4_ddo(l1: &Scalar, l2: &Scalar) -> Result<Parapolytope> {
    if l1.is_negative() || l2.is_negative() {
        return Err(Error::NotDominant(format!("({l1}, {l2})")));
    }
    let z = Scalar::zero;
    let row = |a: [i64; 4], b: Scalar| Halfspace::new(a.iter().map(|&v| int(v)).collect(), b);
    let hs = vec![
        row([1, 0, 0, 0], z()),
        row([-1, 0, 0, 0], l1.clone()),
        row([1, -1, 0, 0], l2.clone()),
        row([0, 2, -1, 0], z()),
        row([0, 1, -1, 0], l2.clone()),
        row([0, 0, 0, 1], z()),
        row([0, 0, 0, -1], l2.clone()),
        row([0, 0, 1, -2], z()),
    ];
    Parapolytope::new(HPolytope::new(4, hs)?, Decomposition::from_word(&[2, 1, 2, 1])?)
}

pub fn sp4_instance(l1: i64, l2: i64) -> Result<Instance> {
    let rd = RootDatum::sp(2, SpLabeling::ShortFirst);
    Ok(Instance {
        name: format!("SP({l1},{l2})"),
        para: sp4_ddo(&int(l1), &int(l2))?,
        lambda: rd.from_fundamental(&[l1, l2])?,
        rd,
    })
}

/// The word `(s_n … s_2 s_1 s_2 … s_n) … (s_2 s_1 s_2)(s_1)`.
pub fn sp2n_word(n: usize) -> Vec<usize> {
    (1..=n)
        .rev()
        .flat_map(|m| (1..=m).rev().chain(2..=m))
        .collect()
}

/// The labels `(k, l)` of chain `i`, listed from bottom (`≥ 0`) to top.
pub fn sp2n_chain(i: usize) -> Vec<(usize, usize)> {
    let mut c: Vec<(usize, usize)> = (0..i.saturating_sub(1))
        .map(|m| (i - m, 2 * m + 2))
        .collect();
    c.push((1, i));
    c.extend((2..=i).map(|m| (m, 2 * (i - m) + 1)));
    c
}

/// The adapted-string cone `C_0 ⊂ R^{n²}`. Constraint `t` says that flat
/// coordinate `t` is at least its lower neighbour in its chain (or `0`).
pub fn sp2n_adapted_cone(n: usize) -> Result<Parapolytope> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let decomp = Decomposition::from_word(&sp2n_word(n))?;
    let d = decomp.d();
    let mut hs: Vec<Option<Halfspace>> = vec![None; d];
    for i in 1..=n {
        let chain = sp2n_chain(i);
        for (pos, &(k, l)) in chain.iter().enumerate() {
            let t = decomp.flat(k, l)?;
            let mut a = vec![Scalar::zero(); d];
            a[t] = int(1);
            if pos > 0 {
                let (k2, l2) = chain[pos - 1];
                a[decomp.flat(k2, l2)?] = int(-1);
            }
            hs[t] = Some(Halfspace::new(a, Scalar::zero()));
        }
    }
    let hs = hs
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("chains do not cover every coordinate".into()))?;
    Parapolytope::new(HPolytope::cone(d, hs)?, decomp)
}

/// `Δ_v(λ)`: `y ≥ 0`, `y_1 ≤ λ_1`, `2(y_1+y_2)+y_3+2y_4 ≤ 2(λ_1+λ_2)`,
/// `y_1+y_2+y_3+2y_4 ≤ λ_1+2λ_2`, `y_4 ≤ λ_2`.
pub fn sp4_no_body(l1: &Scalar, l2: &Scalar) -> Result<HPolytope> {
    let row = |a: [i64; 4], b: Scalar| Halfspace::new(a.iter().map(|&v| int(v)).collect(), b);
    let hs = vec![
        row([1, 0, 0, 0], Scalar::zero()),
        row([0, 1, 0, 0], Scalar::zero()),
        row([0, 0, 1, 0], Scalar::zero()),
        row([0, 0, 0, 1], Scalar::zero()),
        row([-1, 0, 0, 0], l1.clone()),
        row([-2, -2, -1, -2], int(2) * (l1 + l2)),
        row([-1, -1, -1, -2], l1 + int(2) * l2),
        row([0, 0, 0, -1], l2.clone()),
    ];
    HPolytope::new(4, hs)
}

/// Matrix of `φ(y) = (−y_1, −y_1−y_2, y_3+2y_4, y_4)`.
pub fn phi_matrix() -> Vec<Vec<Scalar>> {
    [[-1, 0, 0, 0], [-1, -1, 0, 0], [0, 0, 1, 2], [0, 0, 0, 1]]
        .iter()
        .map(|r| r.iter().map(|&v| int(v)).collect())
        .collect()
}

pub fn phi(y: &[Scalar]) -> Point {
    phi_matrix()
        .iter()
        .map(|r| crate::rational::dot(r, y))
        .collect()
}

/// The translation `(λ_1, λ_1+λ_2, 0, 0)` taking `φ(Δ_v(λ))` onto `SP_λ`.
pub fn phi_shift(l1: &Scalar, l2: &Scalar) -> Point {
    vec![l1.clone(), l1 + l2, Scalar::zero(), Scalar::zero()]
}
