//! `R⁺·L⁺₁·L⁺₂ = L⁺₂·L⁺₁·R⁺` for the upper-triangular `L⁺`.

use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::classical;
use crate::error::Result;
use crate::ring::{q, Q};
use crate::scalar::{self, p, p_pow, Scalar};
use crate::span::{self, SpanReport};
use crate::supermatrix::{SuperMatrix, G3};
use crate::superpoly::graded_commutator;
use crate::{Poly, PolyMatrix, ScalarMatrix};

pub const LA: u8 = 0;
pub const LB: u8 = 1;
/// The corner entry, named `CL` to keep it apart from the metric.
pub const LC: u8 = 2;
pub const LE: u8 = 3;
pub const LF: u8 = 4;

pub fn alphabet() -> Alphabet {
    Alphabet::new(&[("A", 0), ("B", 1), ("CL", 0), ("E", 1), ("F", 0)])
}

fn l(id: u8) -> Poly {
    Poly::letter(id)
}

/// `[[A, B, CL], [0, 1, E], [0, 0, F]]`.
pub fn l_plus() -> PolyMatrix {
    let z = Poly::zero();
    SuperMatrix::from_rows3([[l(LA), l(LB), l(LC)], [z.clone(), Poly::one(), l(LE)], [z.clone(), z, l(LF)]])
}

/// The graded flip `v_i ⊗ v_j ↦ (−1)^{|i||j|} v_j ⊗ v_i`.
pub fn graded_flip() -> ScalarMatrix {
    SuperMatrix::from_fn(crate::supermatrix::tensor_grading(2), |r, c| {
        let (i, j) = (c / 3, c % 3);
        if r != 3 * j + i {
            return Scalar::zero();
        }
        if G3[i] * G3[j] == 1 {
            -Scalar::one()
        } else {
            Scalar::one()
        }
    })
}

/// `R₂₁ = P·R·P`.
pub fn flipped(r: &ScalarMatrix) -> ScalarMatrix {
    let pm = graded_flip();
    &(&pm * r) * &pm
}

/// `R⁺ = R₂₁`, which equals `R⁻¹`.
pub fn r_plus() -> ScalarMatrix {
    flipped(&classical::quantum_r())
}

/// The nonzero entries of `R⁺·L⁺₁·L⁺₂ − L⁺₂·L⁺₁·R⁺`.
pub fn rll_residuals(r: &ScalarMatrix) -> Vec<Poly> {
    let rp: PolyMatrix = r.map(|x| Poly::constant(x.clone()));
    let lp = l_plus();
    let (l1, l2) = (lp.embed_left(), lp.embed_right());
    let lhs = &(&rp * &l1) * &l2;
    let rhs = &(&l2 * &l1) * &rp;
    (lhs - rhs).entries().iter().filter(|x| !x.is_zero()).cloned().collect()
}

fn comm(x: u8, y: u8) -> Poly {
    let al = alphabet();
    graded_commutator(&l(x), &l(y), al.grade(x) * al.grade(y) == 1)
}

/// The listed relations of the dual algebra, each as `lhs − rhs`.
pub fn listed_relations() -> Vec<(&'static str, Poly)> {
    let pp = Poly::constant(p());
    let hp = Poly::constant(p_pow(q(1, 2), 1));
    let one = Poly::one();
    let (a, b, e, f) = (l(LA), l(LB), l(LE), l(LF));
    vec![
        ("[A,CL]", comm(LA, LC) - &pp * &(&a * &f - &a * &a)),
        ("[CL,F]", comm(LC, LF) - &pp * &(&f * &f - &a * &f)),
        ("[A,F]", comm(LA, LF)),
        ("[CL,A]-[CL,F]", comm(LC, LA) - comm(LC, LF) - (&e * &e - &hp * &(&f * &f) + &hp * &(&a * &a) + &b * &b)),
        ("[A,B]", comm(LA, LB)),
        ("[B,F]", comm(LB, LF)),
        ("[A,E]", comm(LA, LE)),
        ("[E,F]", comm(LE, LF)),
        ("[B,CL]", comm(LB, LC) - &pp * &(&b * &f - &b * &a - e.clone())),
        ("[CL,E]", comm(LC, LE) - &pp * &(&f * &e + b.clone() - &a * &e)),
        ("B^2", &b * &b - &hp * &(&a * &a - one.clone())),
        ("{B,E}", comm(LB, LE) - &pp * &(a.clone() - f.clone())),
        ("E^2", &e * &e - &hp * &(one - &f * &f)),
    ]
}

pub fn listed_polys() -> Vec<Poly> {
    listed_relations().into_iter().map(|(_, r)| r).collect()
}

/// Span comparison of the residuals against the listed relations at degree 2.
pub fn rll_span(r: &ScalarMatrix, points: &[Q]) -> Result<SpanReport> {
    span::span_equal(&rll_residuals(r), &listed_polys(), 2, points)
}

/// Graded commutativity of the five letters, with `B² = E² = 0`.
pub fn graded_commutative_relations() -> Vec<Poly> {
    let al = alphabet();
    let mut v = Vec::new();
    for x in 0..5u8 {
        for y in x..5u8 {
            let odd = al.grade(x) * al.grade(y) == 1;
            if x != y || odd {
                v.push(graded_commutator(&l(x), &l(y), odd));
            }
        }
    }
    v
}

/// At `p = 0` the residual span against graded commutativity.
pub fn classical_rll_span() -> Result<bool> {
    let zero = Q::zero();
    let res: Vec<Poly> = rll_residuals(&r_plus()).iter().map(|x| x.map_coeffs(|c| scalar::specialize(c, &zero))).collect();
    Ok(span::span_equal(&res, &graded_commutative_relations(), 2, &[])?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_is_an_involution() {
        let pm = graded_flip();
        assert!((&pm * &pm).is_identity());
    }

    #[test]
    fn r_plus_is_the_inverse() {
        let r = classical::quantum_r();
        assert!((&r * &r_plus()).is_identity());
    }
}
