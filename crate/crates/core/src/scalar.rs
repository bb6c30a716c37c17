//! The coefficient ring `Q[s, p]/(s² − 2)`, realised as `Q(√2)[p]`.
//!
//! `p` is the deformation parameter and stays formal in every verification
//! path; evaluation at rational points exists for acceleration only.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qsqrt2::QSqrt2;
use crate::ring::{Ring, Q};
use crate::upoly::UPoly;

pub type Scalar = UPoly<QSqrt2>;

/// The deformation parameter `p`.
pub fn p() -> Scalar {
    UPoly::var()
}

/// The adjoined square root of two.
pub fn s() -> Scalar {
    UPoly::constant(QSqrt2::sqrt2())
}

pub fn rat(q: Q) -> Scalar {
    UPoly::constant(QSqrt2::rational(q))
}

/// `c·p^k` with rational `c`.
pub fn p_pow(c: Q, k: usize) -> Scalar {
    UPoly::monomial(QSqrt2::rational(c), k)
}

/// Evaluation `p ↦ value`; a ring homomorphism into Q(√2).
pub fn eval_p(x: &Scalar, value: &Q) -> QSqrt2 {
    x.eval(&QSqrt2::rational(value.clone()))
}

/// Evaluation `p ↦ value` that stays inside the polynomial ring.
pub fn specialize(x: &Scalar, value: &Q) -> Scalar {
    UPoly::constant(eval_p(x, value))
}

/// `Some(q)` when the scalar is a rational constant.
pub fn as_rational(x: &Scalar) -> Option<Q> {
    x.as_constant().and_then(|c| c.as_rational().cloned())
}

pub fn div_exact(x: &Scalar, d: &Scalar) -> Result<Scalar> {
    x.div_exact(d).ok_or_else(|| Error::NotDivisible(format!("({}) / ({})", format_scalar(x), format_scalar(d))))
}

/// Exact square root in `Q(√2)[p]`, if one exists.
pub fn sqrt(x: &Scalar) -> Option<Scalar> {
    let Some(deg) = x.degree() else {
        return Some(Scalar::zero());
    };
    if deg % 2 == 1 {
        return None;
    }
    let half = deg / 2;
    let top = x.leading()?.sqrt()?;
    let two_top_inv = (top.clone() + top.clone()).unit_inverse()?;
    // Fill coefficients of the root from the top down.
    let mut r = vec![QSqrt2::zero(); half + 1];
    r[half] = top;
    for k in (0..half).rev() {
        // Coefficient of p^(half + k) in r² involves r[k]·r[half] twice plus known terms.
        let target = x.coeff(half + k);
        let mut known = QSqrt2::zero();
        for i in (k + 1)..=half {
            let j = half + k - i;
            if j > k && j <= half {
                known = known + r[i].clone() * r[j].clone();
            }
        }
        r[k] = (target - known) * two_top_inv.clone();
    }
    let root = Scalar::from_coeffs(r);
    (root.clone() * root.clone() == *x).then_some(root)
}

/// Signed rational coefficient and monomial text (`s`, `p^2`, `s*p`, or empty).
pub(crate) fn scalar_terms(x: &Scalar) -> Vec<(Q, String)> {
    let mut out = Vec::new();
    for k in (0..x.coeffs().len()).rev() {
        let c = &x.coeffs()[k];
        let pk = match k {
            0 => String::new(),
            1 => "p".to_string(),
            _ => format!("p^{k}"),
        };
        if !c.a.is_zero() {
            out.push((c.a.clone(), pk.clone()));
        }
        if !c.b.is_zero() {
            let m = if pk.is_empty() { "s".to_string() } else { format!("s*{pk}") };
            out.push((c.b.clone(), m));
        }
    }
    out
}

pub(crate) fn term_body(c: &Q, mono: &str) -> String {
    let mag = c.abs();
    match (mag.is_one(), mono.is_empty()) {
        (true, true) => "1".to_string(),
        (true, false) => mono.to_string(),
        (false, true) => mag.to_string(),
        (false, false) => format!("{mag}*{mono}"),
    }
}

pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut s = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => s.push_str(&body),
            (0, true) => {
                s.push('-');
                s.push_str(&body);
            }
            (_, false) => {
                s.push_str(" + ");
                s.push_str(&body);
            }
            (_, true) => {
                s.push_str(" - ");
                s.push_str(&body);
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Canonical text form, e.g. `1/2*p^2 - p + s`.
pub fn format_scalar(x: &Scalar) -> String {
    join_terms(scalar_terms(x).into_iter().map(|(c, m)| (c.is_negative(), term_body(&c, &m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q, qi};

    #[test]
    fn s_times_s_is_two() {
        assert_eq!(s() * s(), rat(qi(2)));
    }

    #[test]
    fn half_p_times_two_is_p() {
        assert_eq!(p_pow(q(1, 2), 1) * rat(qi(2)), p());
    }

    #[test]
    fn eval_half_p_squared_at_two() {
        assert_eq!(eval_p(&p_pow(q(1, 2), 2), &qi(2)), QSqrt2::rational(qi(2)));
    }

    #[test]
    fn eval_is_a_homomorphism_on_samples() {
        let x = p() * p() + s() * p() - rat(q(3, 4));
        let y = s() * p() + rat(qi(5));
        for v in [qi(0), q(-2, 3), qi(7)] {
            assert_eq!(eval_p(&(x.clone() * y.clone()), &v), eval_p(&x, &v) * eval_p(&y, &v));
            assert_eq!(eval_p(&(x.clone() + y.clone()), &v), eval_p(&x, &v) + eval_p(&y, &v));
        }
    }

    #[test]
    fn polynomial_square_roots() {
        let four_p2 = p_pow(qi(4), 2);
        assert_eq!(sqrt(&four_p2), Some(p_pow(qi(2), 1)));
        let x = p() + rat(qi(1));
        assert_eq!(sqrt(&(x.clone() * x.clone())), Some(x));
        assert_eq!(sqrt(&p()), None);
        assert_eq!(sqrt(&rat(qi(2))), Some(s()));
    }

    #[test]
    fn division_only_when_exact() {
        assert_eq!(div_exact(&p_pow(qi(4), 2), &p_pow(qi(2), 1)).unwrap(), p_pow(qi(2), 1));
        assert!(div_exact(&rat(qi(1)), &p()).is_err());
    }

    #[test]
    fn canonical_text() {
        let x = p_pow(q(1, 2), 2) - p() + s();
        assert_eq!(format_scalar(&x), "1/2*p^2 - p + s");
        assert_eq!(format_scalar(&(-p())), "-p");
        assert_eq!(format_scalar(&Scalar::zero()), "0");
    }
}
