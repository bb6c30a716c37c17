//! Rational functions `num/den` in one indeterminate over a field.
//!
//! Used only where genuinely generic-parameter linear algebra is needed: the
//! symbolic pass of span comparison and the metric solve.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Field, Ring, Q};
use crate::upoly::UPoly;

/// Invariant: `den` is monic and coprime to `num`; zero is `0/1`.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F> {
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = UPoly::gcd(&num, &den);
        let (mut n, mut d) = (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap());
        let lead = d.leading().unwrap().inv().unwrap();
        n = n * UPoly::constant(lead.clone());
        d = d * UPoly::constant(lead);
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: UPoly<F>) -> Self {
        RatFunc { num: p, den: UPoly::one() }
    }

    pub fn num(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<F> {
        &self.den
    }

    /// The polynomial value, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&UPoly<F>> {
        self.den.is_one().then_some(&self.num)
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num + o.num, self.den);
        }
        Self::new(self.num * o.den.clone() + o.num * self.den.clone(), self.den * o.den)
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num * o.num, den: self.den };
        }
        Self::new(self.num * o.num, self.den * o.den)
    }
}

impl<F: Field> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc { num: UPoly::zero(), den: UPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RatFunc<F> {
    fn one() -> Self {
        RatFunc { num: UPoly::one(), den: UPoly::one() }
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn from_rational(q: &Q) -> Self {
        Self::from_poly(UPoly::from_rational(q))
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl<F: Field> Field for RatFunc<F> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;

    #[test]
    fn field_axioms_on_samples() {
        let p = RatFunc::<Q>::from_poly(UPoly::var());
        let one = RatFunc::one();
        let x = (p.clone() + one.clone()).inv().unwrap(); // 1/(p+1)
        assert_eq!(x.clone() * (p.clone() + one.clone()), one);
        let y = x.clone() + x.clone();
        assert_eq!(y, RatFunc::from_poly(UPoly::constant(qi(2))) * x);
        assert!((p.clone() - p).is_zero());
    }
}
