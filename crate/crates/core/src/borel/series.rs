//! Normal-ordered elements `Σ c·V^ε H^m X^n` of the undeformed Borel algebra,
//! truncated on the weight `ε + 2n`.
//!
//! Relations: `XH = (H − 1)X`, `HV = V(H + ½)`, `VV = ¼X`, `XV = VX`. The
//! weight is an exact grading, so truncation is a quotient by an ideal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rewrite::{RewriteSystem, Rule};
use crate::ring::{q, qi, Ring, Q};
use crate::scalar::{self, Scalar};
use crate::superpoly::{SuperPoly, Word};

/// The monomial `V^v H^h X^x`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono {
    pub v: u8,
    pub h: u32,
    pub x: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { v: 0, h: 0, x: 0 };

    pub fn new(v: u8, h: u32, x: u32) -> Self {
        assert!(v <= 1, "V occurs at most once in a normal monomial");
        Mono { v, h, x }
    }

    pub fn weight(&self) -> u32 {
        self.v as u32 + 2 * self.x
    }

    pub fn grade(&self) -> u8 {
        self.v
    }
}

// Coefficients of (H + shift)^m, lowest power first.
fn shifted_power(shift: &Q, m: u32) -> Vec<Q> {
    let mut out = vec![Q::one()];
    for _ in 0..m {
        let mut next = vec![Q::zero(); out.len() + 1];
        for (i, c) in out.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * shift;
        }
        out = next;
    }
    out
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Product of two normal monomials as a normal-ordered sum.
///
/// `V^a H^m X^n · V^b H^k X^l = V^a V^b (H + b/2)^m (H − n)^k X^(n+l)`; when
/// `a = b = 1` the factor `VV = ¼X` is moved right past the `H` polynomial.
pub fn mono_mul(x: &Mono, y: &Mono) -> Vec<(Mono, Q)> {
    let both = x.v == 1 && y.v == 1;
    let shift = if both { qi(-1) } else { Q::zero() };
    let left = shifted_power(&(q(y.v as i64, 2) + &shift), x.h);
    let right = shifted_power(&(-qi(x.x as i64) + &shift), y.h);
    let factor = if both { q(1, 4) } else { Q::one() };
    let v = if both { 0 } else { x.v + y.v };
    let xs = x.x + y.x + both as u32;
    poly_mul(&left, &right)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(h, c)| (Mono { v, h: h as u32, x: xs }, c * &factor))
        .collect()
}

#[derive(Clone, PartialEq, Debug)]
pub struct BorelSeries {
    order: u32,
    terms: BTreeMap<Mono, Scalar>,
}

impl BorelSeries {
    pub fn zero(order: u32) -> Self {
        BorelSeries { order, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, order: u32) -> Self {
        Self::monomial(Mono::ONE, c, order)
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Scalar::one(), order)
    }

    pub fn monomial(m: Mono, c: Scalar, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(m, c);
        s
    }

    pub fn v(order: u32) -> Self {
        Self::monomial(Mono::new(1, 0, 0), Scalar::one(), order)
    }

    pub fn h(order: u32) -> Self {
        Self::monomial(Mono::new(0, 1, 0), Scalar::one(), order)
    }

    pub fn x(order: u32) -> Self {
        Self::monomial(Mono::new(0, 0, 1), Scalar::one(), order)
    }

    /// `Σ c_n X^n`.
    pub fn from_x_coeffs(coeffs: &[Scalar], order: u32) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in coeffs.iter().enumerate() {
            s.add_term(Mono::new(0, 0, n as u32), c.clone());
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·m`, dropping it when its weight exceeds the order.
    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() || m.weight() > self.order {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Scalar::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn truncated(&self, order: u32) -> Self {
        let mut s = Self::zero(order);
        for (m, c) in &self.terms {
            s.add_term(*m, c.clone());
        }
        s
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut s = Self::zero(self.order);
        for (m, d) in &self.terms {
            s.add_term(*m, d.clone() * c.clone());
        }
        s
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The coefficients `c_n` of `X^n` when the series involves `X` alone.
    pub fn x_coeffs(&self) -> Option<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); (self.order / 2 + 1) as usize];
        for (m, c) in &self.terms {
            if m.v != 0 || m.h != 0 {
                return None;
            }
            out[m.x as usize] = c.clone();
        }
        Some(out)
    }

    fn require_x_only(&self) -> Result<Vec<Scalar>> {
        self.x_coeffs().ok_or_else(|| Error::Parse("series must involve X alone".into()))
    }

    /// Multiplicative inverse of a series in `X` with unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let f = self.require_x_only()?;
        let inv0 = f[0].unit_inverse().ok_or(Error::NotInvertible)?;
        let mut g = vec![Scalar::zero(); f.len()];
        g[0] = inv0.clone();
        for n in 1..f.len() {
            let mut acc = Scalar::zero();
            for i in 1..=n {
                acc = acc + f[i].clone() * g[n - i].clone();
            }
            g[n] = -(acc * inv0.clone());
        }
        Ok(Self::from_x_coeffs(&g, self.order))
    }

    /// Square root of a series in `X` whose constant term is a square in the
    /// coefficient ring; every step is an exact division.
    pub fn sqrt(&self) -> Result<Self> {
        let f = self.require_x_only()?;
        let r0 = scalar::sqrt(&f[0]).filter(|r| !r.is_zero()).ok_or(Error::NoSquareRoot)?;
        let two_r0 = r0.clone() + r0.clone();
        let mut r = vec![Scalar::zero(); f.len()];
        r[0] = r0;
        for n in 1..f.len() {
            let mut acc = f[n].clone();
            for i in 1..n {
                acc = acc - r[i].clone() * r[n - i].clone();
            }
            r[n] = scalar::div_exact(&acc, &two_r0)?;
        }
        Ok(Self::from_x_coeffs(&r, self.order))
    }

    /// Formal `d/dX` of a series in `X`.
    pub fn derivative(&self) -> Result<Self> {
        let f = self.require_x_only()?;
        let d: Vec<Scalar> = f.iter().enumerate().skip(1).map(|(n, c)| c.scale(&qi(n as i64))).collect();
        Ok(Self::from_x_coeffs(&d, self.order))
    }

    /// `f / X` for a series in `X` with zero constant term. The result is
    /// exact only below weight `order − 2`.
    pub fn div_x(&self) -> Result<Self> {
        let f = self.require_x_only()?;
        if !f[0].is_zero() {
            return Err(Error::NotDivisible(format!("{} / X", self)));
        }
        Ok(Self::from_x_coeffs(&f[1..], self.order))
    }

    /// Exact quotient `f / g` of series in `X`, with `g(0) ≠ 0` dividing
    /// each coefficient step.
    pub fn div_exact(&self, g: &Self) -> Result<Self> {
        let f = self.require_x_only()?;
        let g = g.require_x_only()?;
        if g[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = f.len().min(g.len());
        let mut h = vec![Scalar::zero(); n];
        for k in 0..n {
            let mut acc = f[k].clone();
            for i in 1..=k {
                acc = acc - g[i].clone() * h[k - i].clone();
            }
            h[k] = scalar::div_exact(&acc, &g[0])?;
        }
        Ok(Self::from_x_coeffs(&h, self.order.min(2 * (n as u32 - 1) + 1)))
    }

    /// Specialization `p ↦ value`.
    pub fn specialize(&self, value: &Q) -> Self {
        let mut s = Self::zero(self.order);
        for (m, c) in &self.terms {
            s.add_term(*m, scalar::specialize(c, value));
        }
        s
    }
}

impl Add for &BorelSeries {
    type Output = BorelSeries;
    fn add(self, o: &BorelSeries) -> BorelSeries {
        let mut s = self.truncated(self.order.min(o.order));
        for (m, c) in &o.terms {
            s.add_term(*m, c.clone());
        }
        s
    }
}

impl Add for BorelSeries {
    type Output = BorelSeries;
    fn add(self, o: BorelSeries) -> BorelSeries {
        &self + &o
    }
}

impl Neg for &BorelSeries {
    type Output = BorelSeries;
    fn neg(self) -> BorelSeries {
        BorelSeries { order: self.order, terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for BorelSeries {
    type Output = BorelSeries;
    fn neg(self) -> BorelSeries {
        -&self
    }
}

impl Sub for &BorelSeries {
    type Output = BorelSeries;
    fn sub(self, o: &BorelSeries) -> BorelSeries {
        self + &(-o)
    }
}

impl Sub for BorelSeries {
    type Output = BorelSeries;
    fn sub(self, o: BorelSeries) -> BorelSeries {
        &self - &o
    }
}

impl Mul for &BorelSeries {
    type Output = BorelSeries;
    fn mul(self, o: &BorelSeries) -> BorelSeries {
        let order = self.order.min(o.order);
        let mut s = BorelSeries::zero(order);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1.weight() + m2.weight() > order {
                    continue;
                }
                let c = c1.clone() * c2.clone();
                for (m, k) in mono_mul(m1, m2) {
                    s.add_term(m, c.scale(&k));
                }
            }
        }
        s
    }
}

impl Mul for BorelSeries {
    type Output = BorelSeries;
    fn mul(self, o: BorelSeries) -> BorelSeries {
        &self * &o
    }
}

impl fmt::Display for BorelSeries {
    /// One `(ε,m,n): coefficient` entry per monomial, in key order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("({},{},{}): {}", m.v, m.h, m.x, scalar::format_scalar(c))).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Letters `V < H < X` for word-level rewriting.
pub fn ordering_alphabet() -> Alphabet {
    Alphabet::new(&[("V", 1), ("H", 0), ("X", 0)])
}

/// Rewriting rules `XH → HX − X`, `HV → VH + ½V`, `VV → ¼X`, `XV → VX`,
/// an independent route to the normal order.
pub fn ordering_system() -> RewriteSystem<Scalar> {
    let w = |l: &[u8]| SuperPoly::<Scalar>::word(Word::new(l));
    let (v, h, x) = (0u8, 1u8, 2u8);
    let rule = |lhs: &[u8], rhs: SuperPoly<Scalar>| Rule { lhs: Word::new(lhs), rhs };
    RewriteSystem::from_rules(vec![
        rule(&[x, h], w(&[h, x]) - w(&[x])),
        rule(&[h, v], w(&[v, h]) + w(&[v]).scale_q(&q(1, 2))),
        rule(&[v, v], w(&[x]).scale_q(&q(1, 4))),
        rule(&[x, v], w(&[v, x])),
    ])
    .expect("the ordering rules are decreasing")
}

/// The word `V^ε H^m X^n`.
pub fn mono_word(m: &Mono) -> Word {
    let mut l = vec![0u8; m.v as usize];
    l.extend(std::iter::repeat(1u8).take(m.h as usize));
    l.extend(std::iter::repeat(2u8).take(m.x as usize));
    Word::new(&l)
}

/// Reads a normal word back as a monomial.
pub fn word_mono(w: &Word) -> Option<Mono> {
    let l = w.letters();
    let v = l.iter().take_while(|&&c| c == 0).count();
    let h = l[v..].iter().take_while(|&&c| c == 1).count();
    let x = l[v + h..].iter().take_while(|&&c| c == 2).count();
    (v <= 1 && v + h + x == l.len()).then(|| Mono::new(v as u8, h as u32, x as u32))
}

pub fn to_poly(s: &BorelSeries) -> SuperPoly<Scalar> {
    SuperPoly::from_terms(s.terms().map(|(m, c)| (mono_word(m), c.clone())))
}

/// Converts a polynomial in normal form; `None` if some word is not normal.
pub fn from_poly(x: &SuperPoly<Scalar>, order: u32) -> Option<BorelSeries> {
    let mut s = BorelSeries::zero(order);
    for (w, c) in x.terms() {
        s.add_term(word_mono(w)?, c.clone());
    }
    Some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{p, p_pow};

    #[test]
    fn defining_relations_hold() {
        let n = 8;
        let (v, h, x) = (BorelSeries::v(n), BorelSeries::h(n), BorelSeries::x(n));
        let half = BorelSeries::constant(scalar::rat(q(1, 2)), n);
        assert_eq!(&x * &h, &(&h - &BorelSeries::one(n)) * &x);
        assert_eq!(&h * &v, &v * &(&h + &half));
        assert_eq!(&v * &v, x.scale(&scalar::rat(q(1, 4))));
        assert_eq!(&x * &v, &v * &x);
    }

    #[test]
    fn sqrt_of_one_plus_px() {
        let f = BorelSeries::from_x_coeffs(&[Scalar::one(), p()], 8);
        let r = f.sqrt().unwrap();
        let c = r.x_coeffs().unwrap();
        assert_eq!(c[1], p_pow(q(1, 2), 1));
        assert_eq!(c[2], p_pow(q(-1, 8), 2));
        assert_eq!(&r * &r, f);
    }

    #[test]
    fn inverse_of_one() {
        assert_eq!(BorelSeries::one(8).inverse().unwrap(), BorelSeries::one(8));
    }

    #[test]
    fn sqrt_needs_a_square_constant() {
        let f = BorelSeries::from_x_coeffs(&[Scalar::zero(), p()], 8);
        assert_eq!(f.sqrt(), Err(Error::NoSquareRoot));
    }

    #[test]
    fn closed_form_agrees_with_rewriting() {
        let rs = ordering_system();
        let monos: Vec<Mono> = (0..2).flat_map(|v| (0..3).flat_map(move |h| (0..3).map(move |x| Mono::new(v, h, x)))).collect();
        for a in &monos {
            for b in &monos {
                let closed = &BorelSeries::monomial(*a, Scalar::one(), 64) * &BorelSeries::monomial(*b, Scalar::one(), 64);
                let word = rs.normal_form(&SuperPoly::word(mono_word(a).concat(&mono_word(b))));
                assert_eq!(from_poly(&word, 64).unwrap(), closed, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn truncation_drops_heavy_terms() {
        let x = BorelSeries::x(4);
        assert!(x.pow(3).is_zero());
        assert_eq!(x.pow(2).num_terms(), 1);
    }
}
