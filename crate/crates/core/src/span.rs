//! Equality of relation sets as degree-bounded ideal slices.
//!
//! For a set `S` of polynomials of degree at most `D`, its slice `V_D(S)` is
//! the smallest subspace of polynomials of degree at most `D` that contains
//! `S` and is closed under multiplication by letters on either side, as long
//! as the degree stays at most `D`. Two relation sets are span-equal when
//! their slices coincide.
//!
//! The slice is computed by degree-bounded completion over a field, which is
//! row reduction of the bounded Macaulay matrix with pivots on leading
//! monomials: every rule produced lies in `V_D(S)`, and once all
//! ambiguities up to degree `D` resolve, `V_D(S)` is exactly the set of
//! polynomials of degree at most `D` whose normal form vanishes.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::qsqrt2::QSqrt2;
use crate::ratfunc::RatFunc;
use crate::rewrite::RewriteSystem;
use crate::ring::{Field, Q};
use crate::scalar::{self, Scalar};
use crate::superpoly::SuperPoly;
use crate::upoly::UPoly;

/// Outcome of a span comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanReport {
    /// The verdict, taken from the symbolic pass.
    pub equal: bool,
    /// Verdicts at each rational specialization of `p`.
    pub points: Vec<(Q, bool)>,
    /// Rules in the bounded basis of each side (symbolic pass).
    pub basis_sizes: (usize, usize),
}

/// Completion-based slice comparison over a field.
pub fn slices_equal<F: Field>(s1: &[SuperPoly<F>], s2: &[SuperPoly<F>], degree_bound: usize) -> Result<(bool, usize, usize)> {
    let g1 = RewriteSystem::complete(s1, degree_bound)?;
    let g2 = RewriteSystem::complete(s2, degree_bound)?;
    let inside = |s: &[SuperPoly<F>], g: &RewriteSystem<F>| s.par_iter().all(|x| g.normal_form(x).is_zero());
    Ok((inside(s1, &g2) && inside(s2, &g1), g1.len(), g2.len()))
}

/// Whether every element of `s` lies in the slice `V_D(t)`.
pub fn contained_in<F: Field>(s: &[SuperPoly<F>], t: &[SuperPoly<F>], degree_bound: usize) -> Result<bool> {
    let g = RewriteSystem::complete(t, degree_bound)?;
    Ok(s.par_iter().all(|x| g.normal_form(x).is_zero()))
}

pub fn to_frac(x: &SuperPoly<Scalar>) -> SuperPoly<RatFunc<QSqrt2>> {
    x.map_coeffs(|c| RatFunc::from_poly(c.clone()))
}

pub fn at_point(x: &SuperPoly<Scalar>, p: &Q) -> SuperPoly<QSqrt2> {
    x.map_coeffs(|c| scalar::eval_p(c, p))
}

/// Span equality of two relation sets in the slice of degree `degree_bound`.
///
/// Runs one pass at each rational value in `points` and a symbolic pass over
/// Q(√2)(p); the verdict is the symbolic one, so the points never change it.
pub fn span_equal(s1: &[SuperPoly<Scalar>], s2: &[SuperPoly<Scalar>], degree_bound: usize, points: &[Q]) -> Result<SpanReport> {
    let mut pts = Vec::new();
    for v in points {
        let a: Vec<_> = s1.iter().map(|x| at_point(x, v)).collect();
        let b: Vec<_> = s2.iter().map(|x| at_point(x, v)).collect();
        pts.push((v.clone(), slices_equal(&a, &b, degree_bound)?.0));
    }
    let a: Vec<_> = s1.iter().map(to_frac).collect();
    let b: Vec<_> = s2.iter().map(to_frac).collect();
    let (equal, n1, n2) = slices_equal(&a, &b, degree_bound)?;
    Ok(SpanReport { equal, points: pts, basis_sizes: (n1, n2) })
}

/// The polynomial coefficients of a symbolic result, when all denominators are trivial.
pub fn from_frac(x: &SuperPoly<RatFunc<QSqrt2>>) -> Option<SuperPoly<Scalar>> {
    let mut out = SuperPoly::zero();
    for (w, c) in x.terms() {
        let p: &UPoly<QSqrt2> = c.as_poly()?;
        out.add_term(w.clone(), p.clone());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q, qi};
    use crate::scalar::p;
    use crate::superpoly::Word;

    fn w(l: &[u8]) -> SuperPoly<Scalar> {
        SuperPoly::word(Word::new(l))
    }

    #[test]
    fn reflexive_and_sign_sensitive() {
        let s = vec![w(&[1, 0]) - w(&[0, 1]) - w(&[0]).scale(&p()), w(&[2, 0]) - w(&[0, 2])];
        assert!(span_equal(&s, &s, 3, &[qi(3)]).unwrap().equal);
        let flipped = vec![w(&[1, 0]) - w(&[0, 1]) + w(&[0]).scale(&p()), w(&[2, 0]) - w(&[0, 2])];
        let r = span_equal(&s, &flipped, 3, &[qi(3)]).unwrap();
        assert!(!r.equal);
        assert_eq!(r.points, vec![(qi(3), false)]);
    }

    #[test]
    fn closure_sees_consequences() {
        // {ba − ab, bb − a} and {ba − ab, bb − a, bba − abb} have the same slice.
        let s = vec![w(&[1, 0]) - w(&[0, 1]), w(&[1, 1]) - w(&[0])];
        let mut t = s.clone();
        t.push(w(&[1, 1, 0]) - w(&[0, 1, 1]));
        let r = span_equal(&s, &t, 3, &[q(5, 7)]).unwrap();
        assert!(r.equal);
        assert_eq!(r.points, vec![(q(5, 7), true)]);
    }
}
