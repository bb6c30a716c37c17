//! Commutative multivariate polynomials, used for the symbolic parameters
//! `x, y, z` of the classical r-matrix families.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Field, Ring, Q};

/// Exponent vectors are stored without trailing zeros, so the number of
/// variables never has to be declared.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct MPoly<F> {
    terms: BTreeMap<Vec<u16>, F>,
}

fn trim(mut e: Vec<u16>) -> Vec<u16> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl<F: Ring> MPoly<F> {
    pub fn constant(c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        MPoly { terms: BTreeMap::from([(e, F::one())]) }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &F)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, e: Vec<u16>, c: F) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Evaluates every variable; `values[i]` is substituted for variable `i`.
    pub fn eval(&self, values: &[F]) -> F {
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * values[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<F: Ring> Add for MPoly<F> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<F: Ring> Sub for MPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Ring> Neg for MPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<F: Ring> Mul for MPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let n = e1.len().max(e2.len());
                let e = (0..n).map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0)).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Ring> Zero for MPoly<F> {
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Ring> One for MPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Ring for MPoly<F> {
    fn from_rational(q: &Q) -> Self {
        Self::constant(F::from_rational(q))
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant().and_then(|c| c.inv()).map(Self::constant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;

    #[test]
    fn binomial_square() {
        let x = MPoly::<Q>::var(0);
        let y = MPoly::<Q>::var(1);
        let s = (x.clone() + y.clone()) * (x.clone() + y.clone());
        let expect = x.clone() * x.clone() + MPoly::from_i64(2) * x.clone() * y.clone() + y.clone() * y.clone();
        assert_eq!(s, expect);
        assert_eq!(s.eval(&[qi(2), qi(3)]), qi(25));
        assert!((x.clone() - x).is_zero());
    }
}
