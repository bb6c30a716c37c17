//! Graded tensor powers of an algebra with a monomial basis.
//!
//! The product follows the Koszul rule
//! `(x₁⊗…⊗xₙ)(y₁⊗…⊗yₙ) = (−1)^{Σ_{i<j} |x_j||y_i|} x₁y₁⊗…⊗xₙyₙ`.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rewrite::RewriteSystem;
use crate::ring::Ring;
use crate::superpoly::{SuperPoly, Word};

/// Multiplication and grading of basis monomials of one tensor leg.
pub trait LegAlgebra<K, R> {
    fn grade(&self, k: &K) -> u8;
    fn mul(&self, x: &K, y: &K) -> Vec<(K, R)>;
}

/// The free algebra: products are concatenations.
pub struct FreeLegs<'a>(pub &'a Alphabet);

impl<R: Ring> LegAlgebra<Word, R> for FreeLegs<'_> {
    fn grade(&self, k: &Word) -> u8 {
        k.grade(self.0)
    }
    fn mul(&self, x: &Word, y: &Word) -> Vec<(Word, R)> {
        vec![(x.concat(y), R::one())]
    }
}

/// The quotient algebra: products are reduced to normal form.
pub struct ReducedLegs<'a, R>(pub &'a Alphabet, pub &'a RewriteSystem<R>);

impl<R: Ring> LegAlgebra<Word, R> for ReducedLegs<'_, R> {
    fn grade(&self, k: &Word) -> u8 {
        k.grade(self.0)
    }
    fn mul(&self, x: &Word, y: &Word) -> Vec<(Word, R)> {
        self.1.normal_form(&SuperPoly::word(x.concat(y))).into_terms().into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<K: Ord, R> {
    arity: usize,
    terms: BTreeMap<Vec<K>, R>,
}

impl<K: Ord + Clone, R: Ring> Tensor<K, R> {
    pub fn zero(arity: usize) -> Self {
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<K>, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, legs: Vec<K>, c: R) {
        assert_eq!(legs.len(), self.arity, "leg count must match arity");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, c);
            }
        }
    }

    /// `x₁ ⊗ … ⊗ xₙ` for linear combinations `xᵢ` given as term lists.
    pub fn from_factors(factors: &[Vec<(K, R)>]) -> Self {
        let mut acc: Vec<(Vec<K>, R)> = vec![(Vec::new(), R::one())];
        for f in factors {
            let mut next = Vec::new();
            for (legs, c) in &acc {
                for (k, d) in f {
                    let mut l = legs.clone();
                    l.push(k.clone());
                    next.push((l, c.clone() * d.clone()));
                }
            }
            acc = next;
        }
        let mut t = Tensor::zero(factors.len());
        for (legs, c) in acc {
            t.add_term(legs, c);
        }
        t
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut t = Tensor::zero(self.arity);
        for (legs, v) in &self.terms {
            t.add_term(legs.clone(), c.clone() * v.clone());
        }
        t
    }

    /// Graded product in the given leg algebra.
    pub fn mul(&self, other: &Self, alg: &impl LegAlgebra<K, R>) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = Tensor::zero(self.arity);
        for (xs, c1) in &self.terms {
            let xg: Vec<u8> = xs.iter().map(|k| alg.grade(k)).collect();
            for (ys, c2) in &other.terms {
                let mut odd = false;
                for i in 0..self.arity {
                    if alg.grade(&ys[i]) == 1 {
                        odd ^= xg[i + 1..].iter().filter(|&&g| g == 1).count() % 2 == 1;
                    }
                }
                let mut partial: Vec<(Vec<K>, R)> = vec![(Vec::new(), if odd { -(c1.clone() * c2.clone()) } else { c1.clone() * c2.clone() })];
                for i in 0..self.arity {
                    let prod = alg.mul(&xs[i], &ys[i]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (legs, c) in &partial {
                        for (k, d) in &prod {
                            let mut l = legs.clone();
                            l.push(k.clone());
                            next.push((l, c.clone() * d.clone()));
                        }
                    }
                    partial = next;
                }
                for (legs, c) in partial {
                    out.add_term(legs, c);
                }
            }
        }
        Ok(out)
    }

    /// Replaces leg `i` by a linear image of itself.
    pub fn map_leg(&self, i: usize, f: &impl Fn(&K) -> Vec<(K, R)>) -> Self {
        let mut out = Tensor::zero(self.arity);
        for (legs, c) in &self.terms {
            for (k, d) in f(&legs[i]) {
                let mut l = legs.clone();
                l[i] = k;
                out.add_term(l, c.clone() * d);
            }
        }
        out
    }

    /// Applies a scalar-valued map to leg `i` and removes the leg.
    pub fn collapse_leg(&self, i: usize, f: &impl Fn(&K) -> R) -> Self {
        let mut out = Tensor::zero(self.arity - 1);
        for (legs, c) in &self.terms {
            let mut l = legs.clone();
            let k = l.remove(i);
            out.add_term(l, c.clone() * f(&k));
        }
        out
    }

    /// Splits leg `i` with an even map into tensors of arity 2.
    pub fn expand_leg(&self, i: usize, f: &impl Fn(&K) -> Tensor<K, R>) -> Self {
        let mut out = Tensor::zero(self.arity + 1);
        for (legs, c) in &self.terms {
            for (pair, d) in f(&legs[i]).terms {
                let mut l = legs[..i].to_vec();
                l.extend(pair);
                l.extend_from_slice(&legs[i + 1..]);
                out.add_term(l, c.clone() * d);
            }
        }
        out
    }
}

impl<R: Ring> Tensor<Word, R> {
    /// `x₁ ⊗ … ⊗ xₙ` for polynomials.
    pub fn from_polys(parts: &[SuperPoly<R>]) -> Self {
        let f: Vec<Vec<(Word, R)>> = parts.iter().map(|p| p.terms().map(|(w, c)| (w.clone(), c.clone())).collect()).collect();
        Self::from_factors(&f)
    }

    /// Reduces every leg to normal form.
    pub fn reduce(&self, rs: &RewriteSystem<R>) -> Self {
        let mut out = self.clone();
        for i in 0..self.arity {
            out = out.map_leg(i, &|w: &Word| rs.normal_form(&SuperPoly::word(w.clone())).into_terms().into_iter().collect());
        }
        out
    }
}

impl<K: Ord + Clone, R: Ring> Add for Tensor<K, R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        assert_eq!(self.arity, o.arity, "tensor arity mismatch");
        for (legs, c) in o.terms {
            self.add_term(legs, c);
        }
        self
    }
}

impl<K: Ord + Clone, R: Ring> Sub for Tensor<K, R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<K: Ord + Clone, R: Ring> Neg for Tensor<K, R> {
    type Output = Self;
    fn neg(self) -> Self {
        Tensor { arity: self.arity, terms: self.terms.into_iter().map(|(l, c)| (l, -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Q;
    use num_traits::One;

    type P = SuperPoly<Q>;

    fn alpha() -> Alphabet {
        Alphabet::new(&[("a", 0), ("b", 0), ("alpha", 1)])
    }

    #[test]
    fn odd_past_odd_sign() {
        let al = alpha();
        let x = Tensor::from_polys(&[P::one(), P::letter(2)]);
        let y = Tensor::from_polys(&[P::letter(2), P::one()]);
        let z = x.mul(&y, &FreeLegs(&al)).unwrap();
        assert_eq!(z, -Tensor::from_polys(&[P::letter(2), P::letter(2)]));
    }

    #[test]
    fn even_legs_have_no_sign() {
        let al = alpha();
        let x = Tensor::from_polys(&[P::letter(0), P::one()]);
        let y = Tensor::from_polys(&[P::one(), P::letter(1)]);
        assert_eq!(x.mul(&y, &FreeLegs(&al)).unwrap(), Tensor::from_polys(&[P::letter(0), P::letter(1)]));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let al = alpha();
        let x = Tensor::from_polys(&[P::one(), P::one()]);
        let y = Tensor::from_polys(&[P::one(), P::one(), P::one()]);
        assert_eq!(x.mul(&y, &FreeLegs(&al)), Err(Error::ArityMismatch(2, 3)));
    }
}
