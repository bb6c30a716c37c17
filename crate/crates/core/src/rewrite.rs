//! Degree-lex rewriting modulo a two-sided ideal of the free algebra.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::superpoly::{SuperPoly, Word};

#[derive(Clone, Debug, PartialEq)]
pub struct Rule<R> {
    pub lhs: Word,
    pub rhs: SuperPoly<R>,
}

impl<R: Ring> Rule<R> {
    /// The relation `lhs − rhs` represented by the rule.
    pub fn relation(&self) -> SuperPoly<R> {
        SuperPoly::word(self.lhs.clone()) - self.rhs.clone()
    }
}

/// An ambiguity whose two reductions disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Overlap<R> {
    pub word: Word,
    pub difference: SuperPoly<R>,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem<R> {
    rules: Vec<Rule<R>>,
    index: HashMap<Word, usize>,
    lengths: Vec<usize>,
}

/// Turns `x` into a rule `lead → rest`, provided the leading coefficient is a unit.
pub fn orient<R: Ring>(x: &SuperPoly<R>) -> Result<Option<Rule<R>>> {
    let Some((w, c)) = x.leading() else {
        return Ok(None);
    };
    let inv = c.unit_inverse().ok_or_else(|| Error::NonUnitLeading(format!("{c:?}")))?;
    let mut rest = x.clone();
    rest.pop_leading();
    Ok(Some(Rule { lhs: w.clone(), rhs: rest.scale(&(-inv)) }))
}

impl<R: Ring> RewriteSystem<R> {
    pub fn empty() -> Self {
        Self::from_rules(Vec::new()).unwrap()
    }

    /// Checks that every rule is order-decreasing and that left sides are distinct.
    pub fn from_rules(mut rules: Vec<Rule<R>>) -> Result<Self> {
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        let mut index = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            if let Some((w, _)) = r.rhs.leading() {
                if *w >= r.lhs {
                    return Err(Error::Parse(format!("rule {:?} is not order-decreasing", r.lhs)));
                }
            }
            if index.insert(r.lhs.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate left side {:?}", r.lhs)));
            }
        }
        let mut lengths: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        lengths.sort_unstable();
        lengths.dedup();
        Ok(RewriteSystem { rules, index, lengths })
    }

    /// Orients each relation after reducing it by the ones before; no completion.
    pub fn from_relations(rels: &[SuperPoly<R>]) -> Result<Self> {
        let mut rs = Self::empty();
        for r in rels {
            let x = rs.normal_form(r);
            if let Some(rule) = orient(&x)? {
                let mut rules = rs.rules.clone();
                rules.push(rule);
                rs = Self::from_rules(rules)?;
            }
        }
        Ok(rs)
    }

    pub fn rules(&self) -> &[Rule<R>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// The same system with one rule removed.
    pub fn without_rule(&self, i: usize) -> Self {
        let mut rules = self.rules.clone();
        rules.remove(i);
        Self::from_rules(rules).unwrap()
    }

    fn find_rule(&self, w: &Word) -> Option<(usize, &Rule<R>)> {
        let letters = w.letters();
        for &len in &self.lengths {
            if len > letters.len() {
                break;
            }
            for i in 0..=letters.len() - len {
                if let Some(&k) = self.index.get(&Word::new(&letters[i..i + len])) {
                    return Some((i, &self.rules[k]));
                }
            }
        }
        None
    }

    /// Whether no left side occurs inside `w`.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_rule(w).is_none()
    }

    /// Normal form: repeatedly rewrites the largest reducible monomial.
    pub fn normal_form(&self, x: &SuperPoly<R>) -> SuperPoly<R> {
        let mut work: BTreeMap<Word, R> = x.clone().into_terms();
        let mut done = Vec::new();
        while let Some((w, c)) = work.pop_last() {
            match self.find_rule(&w) {
                None => done.push((w, c)),
                Some((i, rule)) => {
                    let prefix = w.slice(0, i);
                    let suffix = w.slice(i + rule.lhs.len(), w.len());
                    for (rw, rc) in rule.rhs.terms() {
                        let nw = prefix.concat(rw).concat(&suffix);
                        let nc = c.clone() * rc.clone();
                        match work.get_mut(&nw) {
                            Some(v) => {
                                *v = v.clone() + nc;
                                if v.is_zero() {
                                    work.remove(&nw);
                                }
                            }
                            None => {
                                if !nc.is_zero() {
                                    work.insert(nw, nc);
                                }
                            }
                        }
                    }
                }
            }
        }
        SuperPoly::from_terms(done)
    }

    /// Both one-step resolutions of every ambiguity between left sides,
    /// restricted to ambiguity words of length at most `max_degree`.
    fn ambiguities(&self, max_degree: usize) -> Vec<(Word, SuperPoly<R>)> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (l1, l2) = (r1.lhs.letters(), r2.lhs.letters());
                // suffix of l1 equal to prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let word = r1.lhs.concat(&Word::new(&l2[k..]));
                        if word.len() > max_degree {
                            continue;
                        }
                        let left = &r1.rhs * &SuperPoly::word(Word::new(&l2[k..]));
                        let right = &SuperPoly::word(Word::new(&l1[..l1.len() - k])) * &r2.rhs;
                        out.push((word, left - right));
                    }
                }
                // l1 strictly inside l2
                if l1.len() < l2.len() && l2.len() <= max_degree {
                    if let Some(i) = r2.lhs.find(l1) {
                        let pre = SuperPoly::word(r2.lhs.slice(0, i));
                        let post = SuperPoly::word(r2.lhs.slice(i + l1.len(), l2.len()));
                        out.push((r2.lhs.clone(), &(&pre * &r1.rhs) * &post - r2.rhs.clone()));
                    }
                }
            }
        }
        out
    }

    /// Ambiguities up to `max_degree` whose two reductions do not agree.
    pub fn overlap_check(&self, max_degree: usize) -> Vec<Overlap<R>> {
        let amb = self.ambiguities(max_degree);
        let mut out: Vec<Overlap<R>> = amb
            .into_par_iter()
            .filter_map(|(word, s)| {
                let d = self.normal_form(&s);
                (!d.is_zero()).then_some(Overlap { word, difference: d })
            })
            .collect();
        out.sort_by(|a, b| a.word.cmp(&b.word));
        out
    }

    /// Degree-bounded completion: orients the relations, interreduces, and adds
    /// every unresolved ambiguity up to `max_degree` as a new rule until none remain.
    pub fn complete(rels: &[SuperPoly<R>], max_degree: usize) -> Result<Self> {
        let mut rules: Vec<Rule<R>> = Vec::new();
        let mut pending: Vec<SuperPoly<R>> = rels.to_vec();
        for _round in 0..64 {
            while !pending.is_empty() {
                // Smallest leading word first keeps intermediate rules short.
                let k = (0..pending.len()).min_by(|&i, &j| pending[i].leading().map(|t| t.0).cmp(&pending[j].leading().map(|t| t.0))).unwrap();
                let x = pending.swap_remove(k);
                let rs = Self::from_rules(rules.clone())?;
                let x = rs.normal_form(&x);
                let Some(rule) = orient(&x)? else { continue };
                // Rules whose left side contains the new one go back to the queue.
                let mut kept = Vec::new();
                for r in rules.drain(..) {
                    if r.lhs.find(rule.lhs.letters()).is_some() {
                        pending.push(r.relation());
                    } else {
                        kept.push(r);
                    }
                }
                kept.push(rule);
                let rs = Self::from_rules(kept.clone())?;
                rules = kept.into_iter().map(|r| Rule { rhs: rs.normal_form(&r.rhs), lhs: r.lhs }).collect();
            }
            let rs = Self::from_rules(rules.clone())?;
            let bad = rs.overlap_check(max_degree);
            if bad.is_empty() {
                return Ok(rs);
            }
            pending.extend(bad.into_iter().map(|o| o.difference));
        }
        Err(Error::Incomplete(max_degree))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Q;

    type P = SuperPoly<Q>;

    fn w(l: &[u8]) -> P {
        P::word(Word::new(l))
    }

    #[test]
    fn commutative_triangle_is_confluent() {
        // a=0, b=1, c=2: ba→ab, cb→bc, ca→ac
        let rs = RewriteSystem::from_relations(&[w(&[1, 0]) - w(&[0, 1]), w(&[2, 1]) - w(&[1, 2]), w(&[2, 0]) - w(&[0, 2])]).unwrap();
        assert!(rs.overlap_check(4).is_empty());
        assert_eq!(rs.normal_form(&w(&[2, 1, 0])), w(&[0, 1, 2]));
    }

    #[test]
    fn completion_adds_missing_consequence() {
        // ba→ab and bb→a give b·ba = bab two ways.
        let rels = [w(&[1, 0]) - w(&[0, 1]), w(&[1, 1]) - w(&[0])];
        let rs = RewriteSystem::complete(&rels, 4).unwrap();
        assert!(rs.overlap_check(4).is_empty());
        for r in &rels {
            assert!(rs.normal_form(r).is_zero());
        }
    }

    #[test]
    fn non_unit_leading_coefficient_is_rejected() {
        use crate::scalar::{p, Scalar};
        let x = SuperPoly::<Scalar>::word(Word::new(&[1, 1])).scale(&p());
        assert!(orient(&x).is_err());
    }
}
