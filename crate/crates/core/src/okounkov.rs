//! Lowest-term valuations of polynomials in `x, y, z, t` and the section
//! bases whose valuations fill out `Δ_v(ρ)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Scalar};

pub type Exponent = [u32; 4];

/// Polynomial in `x, y, z, t` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly4(BTreeMap<Exponent, Scalar>);

impl Poly4 {
    pub fn zero() -> Self {
        Poly4::default()
    }

    pub fn term(coeff: i64, exp: Exponent) -> Self {
        let mut p = Poly4::zero();
        p.add_term(exp, int(coeff));
        p
    }

    pub fn constant(c: i64) -> Self {
        Poly4::term(c, [0, 0, 0, 0])
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0; 4];
        e[k] = 1;
        Poly4::term(1, e)
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: Scalar) {
        let c = self.0.entry(exp).or_insert_with(Scalar::zero);
        *c += coeff;
        if c.is_zero() {
            self.0.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Scalar> {
        &self.0
    }

    pub fn neg(&self) -> Poly4 {
        Poly4(self.0.iter().map(|(e, c)| (*e, -c)).collect())
    }
}

impl std::ops::Add for &Poly4 {
    type Output = Poly4;
    fn add(self, other: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, other: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &Poly4 {
    type Output = Poly4;
    fn mul(self, other: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars = ['x', 'y', 'z', 't'];
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(e, c)| {
                let mono: String = e
                    .iter()
                    .zip(vars)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono
                } else {
                    format!("{c}{mono}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The exponent of the lowest monomial, where `x^k ≻ x^l` iff `k` exceeds
/// `l` at the first differing position. The lowest is thus the
/// lexicographically smallest exponent.
pub fn lex_lowest_valuation(f: &Poly4) -> Result<Exponent> {
    f.0.keys().next().copied().ok_or(Error::ZeroPolynomial)
}

fn x() -> Poly4 {
    Poly4::var(0)
}
fn y() -> Poly4 {
    Poly4::var(1)
}
fn z() -> Poly4 {
    Poly4::var(2)
}
fn t() -> Poly4 {
    Poly4::var(3)
}

/// Sections for `ω_1`: `1, −x, y + xz, z`.
pub fn basis_omega1() -> Vec<Poly4> {
    vec![Poly4::constant(1), x().neg(), &y() + &(&x() * &z()), z()]
}

/// Sections for `ω_2`: `1, −(y + 2xz + x²t), z + xt, yt − z², t`.
pub fn basis_omega2() -> Vec<Poly4> {
    let two_xz = &Poly4::constant(2) * &(&x() * &z());
    let x2t = &(&x() * &x()) * &t();
    vec![
        Poly4::constant(1),
        (&(&y() + &two_xz) + &x2t).neg(),
        &z() + &(&x() * &t()),
        &(&y() * &t()) - &(&z() * &z()),
        t(),
    ]
}

/// Valuations of all products of a section for `ω_1` with one for `ω_2`.
pub fn valuation_points_rho() -> BTreeSet<Exponent> {
    let mut out = BTreeSet::new();
    for f in basis_omega1() {
        for g in basis_omega2() {
            out.insert(lex_lowest_valuation(&(&f * &g)).expect("nonzero sections"));
        }
    }
    out
}

pub fn valuation_additivity_check(f: &Poly4, g: &Poly4) -> Result<bool> {
    let vf = lex_lowest_valuation(f)?;
    let vg = lex_lowest_valuation(g)?;
    let vfg = lex_lowest_valuation(&(f * g))?;
    Ok(vfg == [vf[0] + vg[0], vf[1] + vg[1], vf[2] + vg[2], vf[3] + vg[3]])
}
