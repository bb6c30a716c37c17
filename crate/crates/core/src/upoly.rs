//! Dense univariate polynomials over a coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Field, Ring, Q};

/// `coeffs[k]` is the coefficient of `p^k`; trailing zeros are never stored.
#[derive(Clone, PartialEq, Default)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> UPoly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c·p^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.coeffs.len() {
            0 => Some(F::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Substitutes `p ↦ c·p`.
    pub fn rescale_var(&self, c: &F) -> Self {
        let mut pow = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        Self::from_coeffs(out)
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> UPoly<F> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().and_then(|c| c.inv()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().cloned().unwrap() * lead_inv.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (qt, r) = self.div_rem(d);
        r.is_zero().then_some(qt)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading().and_then(|c| c.inv()) {
            Some(inv) => self.clone() * Self::constant(inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.make_monic()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Q::from_integer((k as i64).into())))
                .collect(),
        )
    }
}

impl<F: Ring> Add for UPoly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() { (self.coeffs, o.coeffs) } else { (o.coeffs, self.coeffs) };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Self::from_coeffs(long)
    }
}

impl<F: Ring> Sub for UPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Ring> Neg for UPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        UPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Ring> Mul for UPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }
}

// Coefficients from the constant term up, e.g. `[0, 1/2, -1/2]`.
impl<F: fmt::Debug> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<F: Ring> Zero for UPoly<F> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Ring> One for UPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Ring for UPoly<F> {
    fn from_rational(q: &Q) -> Self {
        Self::constant(F::from_rational(q))
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inv().map(Self::constant)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q, qi};

    fn poly(c: &[i64]) -> UPoly<Q> {
        UPoly::from_coeffs(c.iter().map(|&x| qi(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = poly(&[-1, 0, 1]); // p² − 1
        let b = poly(&[1, 1]); // p + 1
        assert_eq!(a.div_exact(&b), Some(poly(&[-1, 1])));
        assert_eq!(poly(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(UPoly::gcd(&a, &poly(&[2, 2])), b);
    }

    #[test]
    fn eval_and_rescale() {
        let a = poly(&[0, 0, 1]).scale(&q(1, 2)); // p²/2
        assert_eq!(a.eval(&qi(2)), qi(2));
        assert_eq!(a.rescale_var(&qi(3)).eval(&qi(1)), q(9, 2));
        assert!(poly(&[0, 0, 0]).is_zero());
    }
}
