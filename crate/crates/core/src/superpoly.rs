//! Noncommutative polynomials over a graded alphabet.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::ring::{Ring, Q};

/// A word over letter ids, ordered degree-first and then lexicographically
/// by letter rank.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(SmallVec<[u8; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn new(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Sum of letter grades mod 2.
    pub fn grade(&self, alpha: &Alphabet) -> u8 {
        self.0.iter().map(|&l| alpha.grade(l)).sum::<u8>() & 1
    }

    /// First position where `sub` occurs as a factor.
    pub fn find(&self, sub: &[u8]) -> Option<usize> {
        if sub.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - sub.len()).find(|&i| &self.0[i..i + sub.len()] == sub)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::new(&self.0[from..to])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite linear combination of words; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct SuperPoly<R> {
    terms: BTreeMap<Word, R>,
}

impl<R: Ring> SuperPoly<R> {
    pub fn constant(c: R) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn letter(id: u8) -> Self {
        Self::term(Word::new(&[id]), R::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, R::one())
    }

    pub fn term(w: Word, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        SuperPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, R)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, R> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> R {
        self.terms.get(w).cloned().unwrap_or_else(R::zero)
    }

    /// Largest degree of a monomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// Leading monomial with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &R)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn pop_leading(&mut self) -> Option<(Word, R)> {
        self.terms.pop_last()
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), c.clone() * v.clone())))
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.scale(&R::from_rational(c))
    }

    /// Grade of a homogeneous element; zero counts as even.
    pub fn grade(&self, alpha: &Alphabet) -> Result<u8> {
        let mut g = None;
        for w in self.terms.keys() {
            let gw = w.grade(alpha);
            match g {
                None => g = Some(gw),
                Some(x) if x != gw => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(g.unwrap_or(0))
    }

    /// Applies a letter substitution; unmapped letters stay as they are.
    pub fn substitute(&self, map: &impl Fn(u8) -> Option<SuperPoly<R>>) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &l in w.letters() {
                acc = acc * map(l).unwrap_or_else(|| Self::letter(l));
            }
            out = out + acc;
        }
        out
    }

    /// Evaluates in an arbitrary target algebra, one image per letter.
    pub fn eval_in<T>(&self, image: &impl Fn(u8) -> T, scalar: &impl Fn(&R) -> T) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T> + Zero,
    {
        let mut out = T::zero();
        for (w, c) in &self.terms {
            let mut acc = scalar(c);
            for &l in w.letters() {
                acc = acc * image(l);
            }
            out = out + acc;
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> SuperPoly<S> {
        SuperPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Drops every monomial of degree above `d`.
    pub fn truncate_degree(&self, d: usize) -> Self {
        SuperPoly { terms: self.terms.iter().filter(|(w, _)| w.len() <= d).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// Sorted list of the letters that occur.
    pub fn letters_used(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.terms.keys().flat_map(|w| w.letters().to_vec()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl<R: Ring> Add for SuperPoly<R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        if self.terms.len() < o.terms.len() {
            return o + self;
        }
        for (w, c) in o.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<R: Ring> Sub for SuperPoly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Neg for SuperPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        SuperPoly { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<R: Ring> Mul for SuperPoly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<R: Ring> Mul for &SuperPoly<R> {
    type Output = SuperPoly<R>;
    fn mul(self, o: &SuperPoly<R>) -> SuperPoly<R> {
        let mut out = SuperPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Ring> Zero for SuperPoly<R> {
    fn zero() -> Self {
        SuperPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for SuperPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Ring for SuperPoly<R> {
    fn from_rational(q: &Q) -> Self {
        Self::constant(R::from_rational(q))
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.len() {
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                if w.is_empty() {
                    c.unit_inverse().map(Self::constant)
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

/// `[x, y]` for `x` and `y` not both odd, `{x, y}` otherwise.
pub fn graded_commutator<R: Ring>(x: &SuperPoly<R>, y: &SuperPoly<R>, both_odd: bool) -> SuperPoly<R> {
    if both_odd {
        x * y + y * x
    } else {
        x * y - y * x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;

    type P = SuperPoly<Q>;

    #[test]
    fn words_are_degree_lex() {
        assert!(Word::new(&[2, 2]) < Word::new(&[0, 0, 0]));
        assert!(Word::new(&[0, 1]) < Word::new(&[1, 0]));
        assert_eq!(Word::new(&[1, 2, 3]).find(&[2, 3]), Some(1));
    }

    #[test]
    fn free_product_does_not_reorder() {
        let (a, al) = (P::letter(0), P::letter(1));
        let lhs = (a.clone() + al.clone()) * (a.clone() - al.clone());
        let rhs = a.clone() * a.clone() - a.clone() * al.clone() + al.clone() * a.clone() - al.clone() * al.clone();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 4);
    }

    #[test]
    fn grades() {
        let alpha = Alphabet::new(&[("a", 0), ("alpha", 1)]);
        assert_eq!(P::letter(1).grade(&alpha), Ok(1));
        assert_eq!((P::letter(1) * P::letter(1)).grade(&alpha), Ok(0));
        assert_eq!((P::letter(0) + P::letter(1)).grade(&alpha), Err(Error::NotHomogeneous));
    }

    #[test]
    fn substitution() {
        let x = P::letter(0) * P::letter(1);
        let y = x.substitute(&|l| (l == 1).then(|| P::letter(0) + P::constant(qi(2))));
        assert_eq!(y, P::letter(0) * P::letter(0) + P::letter(0).scale_q(&qi(2)));
    }
}
