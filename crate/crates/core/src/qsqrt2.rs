//! The quadratic field Q(√2), elements `a + b·s` with `s² = 2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{qi, Field, Ring, Q};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt2 {
    pub fn new(a: Q, b: Q) -> Self {
        QSqrt2 { a, b }
    }

    pub fn rational(a: Q) -> Self {
        QSqrt2 { a, b: Q::zero() }
    }

    /// The adjoined square root of two.
    pub fn sqrt2() -> Self {
        QSqrt2 { a: Q::zero(), b: Q::one() }
    }

    pub fn conj(&self) -> Self {
        QSqrt2 { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Q {
        &self.a * &self.a - qi(2) * &self.b * &self.b
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Square root inside Q(√2), when one exists.
    ///
    /// Solves `(x + y s)² = a + b s`, i.e. `x² + 2y² = a`, `2xy = b`.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // x² is a root of t² − a t + b²/2 = 0.
        let a = &self.a;
        let disc = a * a - qi(2) * &self.b * &self.b;
        let d = rational_sqrt(&disc)?;
        for cand in [(a + &d) / qi(2), (a - &d) / qi(2)] {
            if let Some(x) = rational_sqrt(&cand) {
                for x in [x.clone(), -x] {
                    let y = if x.is_zero() {
                        match rational_sqrt(&((a - &x * &x) / qi(2))) {
                            Some(y) => y,
                            None => continue,
                        }
                    } else {
                        &self.b / (qi(2) * &x)
                    };
                    let r = QSqrt2::new(x, y);
                    if &(r.clone() * r.clone()) == self {
                        return Some(normalize_root(r));
                    }
                }
            }
        }
        None
    }
}

// Prefer the root with positive leading rational part, for determinism.
fn normalize_root(r: QSqrt2) -> QSqrt2 {
    let positive = if !r.a.is_zero() { r.a > Q::zero() } else { r.b > Q::zero() };
    if positive {
        r
    } else {
        -r
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x < &Q::zero() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Q::new(rn, rd))
    } else {
        None
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        let a = &self.a * &o.a + qi(2) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        QSqrt2 { a, b }
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 { a: -self.a, b: -self.b }
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        QSqrt2 { a: Q::zero(), b: Q::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        QSqrt2 { a: Q::one(), b: Q::zero() }
    }
}

impl Ring for QSqrt2 {
    fn from_rational(q: &Q) -> Self {
        QSqrt2::rational(q.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QSqrt2 { a: c.a / &n, b: c.b / n })
    }
}

impl Field for QSqrt2 {}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*s", self.b),
            (false, false) => write!(f, "{} + {}*s", self.a, self.b),
        }
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn s_squared_is_two() {
        let s = QSqrt2::sqrt2();
        assert_eq!(s.clone() * s, QSqrt2::rational(qi(2)));
    }

    #[test]
    fn inverse_via_conjugate() {
        let x = QSqrt2::new(qi(3), q(1, 2));
        let y = x.inv().unwrap();
        assert_eq!(x * y, QSqrt2::one());
    }

    #[test]
    fn square_roots() {
        assert_eq!(QSqrt2::rational(qi(2)).sqrt(), Some(QSqrt2::sqrt2()));
        assert_eq!(QSqrt2::rational(q(9, 4)).sqrt(), Some(QSqrt2::rational(q(3, 2))));
        // (1 + s)² = 3 + 2s
        assert_eq!(
            QSqrt2::new(qi(3), qi(2)).sqrt(),
            Some(QSqrt2::new(qi(1), qi(1)))
        );
        assert_eq!(QSqrt2::rational(qi(3)).sqrt(), None);
        assert_eq!(QSqrt2::rational(qi(-1)).sqrt(), None);
    }
}
