//! Canonical text form of polynomials and matrices.
//!
//! A polynomial is written as a signed sum of terms, each term a `*`-joined
//! product of a rational magnitude, `s`, `p^k` and letter names, e.g.
//! `a*b - p*a*a + p`. Terms appear in decreasing monomial order.
//! A matrix is its dimension on the first line followed by one entry per line
//! in row-major order.

use num_traits::{One, Signed, Zero};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::qsqrt2::QSqrt2;
use crate::ring::Q;
use crate::scalar::{join_terms, scalar_terms, term_body, Scalar};
use crate::supermatrix::SuperMatrix;
use crate::superpoly::{SuperPoly, Word};

pub fn format_word(w: &Word, alpha: &Alphabet) -> String {
    w.letters().iter().map(|&l| alpha.name(l)).collect::<Vec<_>>().join("*")
}

pub fn format_poly(x: &SuperPoly<Scalar>, alpha: &Alphabet) -> String {
    let mut parts = Vec::new();
    for (w, c) in x.terms().rev() {
        let ws = format_word(w, alpha);
        for (q, m) in scalar_terms(c) {
            let mono = match (m.is_empty(), ws.is_empty()) {
                (true, _) => ws.clone(),
                (false, true) => m,
                (false, false) => format!("{m}*{ws}"),
            };
            parts.push((q.is_negative(), term_body(&q, &mono)));
        }
    }
    join_terms(parts)
}

fn parse_rational(t: &str) -> Option<Q> {
    let t = t.trim();
    if t.is_empty() || !t.chars().all(|c| c.is_ascii_digit() || c == '/') {
        return None;
    }
    t.parse::<Q>().ok()
}

fn parse_term(t: &str, alpha: &Alphabet) -> Result<SuperPoly<Scalar>> {
    let mut coeff = Scalar::one();
    let mut word = Vec::new();
    for f in t.split('*').map(str::trim) {
        if f.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{t}`")));
        }
        if let Some(q) = parse_rational(f) {
            coeff = coeff * Scalar::constant(QSqrt2::rational(q));
        } else if f == "s" {
            coeff = coeff * crate::scalar::s();
        } else if f == "p" {
            coeff = coeff * crate::scalar::p();
        } else if let Some(k) = f.strip_prefix("p^") {
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
            coeff = coeff * Scalar::monomial(QSqrt2::one(), k);
        } else {
            word.push(alpha.id(f)?);
        }
    }
    Ok(SuperPoly::term(Word::new(&word), coeff))
}

pub fn parse_poly(s: &str, alpha: &Alphabet) -> Result<SuperPoly<Scalar>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut out = SuperPoly::zero();
    let mut negative = false;
    let mut current = String::new();
    let flush = |cur: &mut String, neg: bool, out: &mut SuperPoly<Scalar>| -> Result<()> {
        let t = cur.trim();
        if t.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        let term = parse_term(t, alpha)?;
        *out = out.clone() + if neg { -term } else { term };
        cur.clear();
        Ok(())
    };
    for (i, ch) in s.char_indices() {
        match ch {
            '+' | '-' if i == 0 => negative = ch == '-',
            '+' | '-' => {
                flush(&mut current, negative, &mut out)?;
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    flush(&mut current, negative, &mut out)?;
    Ok(out)
}

pub fn format_matrix(m: &SuperMatrix<SuperPoly<Scalar>>, alpha: &Alphabet) -> String {
    let mut s = format!("{}\n", m.dim());
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            s.push_str(&format_poly(m.get(i, j), alpha));
            s.push('\n');
        }
    }
    s
}

pub fn format_scalar_matrix(m: &SuperMatrix<Scalar>) -> String {
    let mut s = format!("{}\n", m.dim());
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            s.push_str(&crate::scalar::format_scalar(m.get(i, j)));
            s.push('\n');
        }
    }
    s
}

/// Parses a matrix; the grading is supplied by the caller.
pub fn parse_matrix(s: &str, alpha: &Alphabet, grading: Vec<u8>) -> Result<SuperMatrix<SuperPoly<Scalar>>> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines.next().ok_or_else(|| Error::Parse("missing dimension".into()))?.parse().map_err(|_| Error::Parse("bad dimension".into()))?;
    if grading.len() != n {
        return Err(Error::Parse(format!("grading has {} entries for dimension {n}", grading.len())));
    }
    let entries = lines.map(|l| parse_poly(l, alpha)).collect::<Result<Vec<_>>>()?;
    if entries.len() != n * n {
        return Err(Error::Parse(format!("expected {} entries, found {}", n * n, entries.len())));
    }
    Ok(SuperMatrix::from_vec(n, grading, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q, qi};
    use crate::scalar::{p, rat};

    fn al() -> Alphabet {
        Alphabet::new(&[("c", 0), ("delta", 1), ("a", 0), ("d", 0), ("alpha", 1), ("b", 0)])
    }

    #[test]
    fn canonical_relation_text() {
        let al = al();
        let a = al.id("a").unwrap();
        let b = al.id("b").unwrap();
        let ab = SuperPoly::word(Word::new(&[a, b]));
        let aa = SuperPoly::word(Word::new(&[a, a]));
        let x = ab - aa.scale(&p()) + SuperPoly::constant(p());
        assert_eq!(format_poly(&x, &al), "a*b - p*a*a + p");
        assert_eq!(parse_poly("a*b - p*a*a + p", &al).unwrap(), x);
    }

    #[test]
    fn composite_coefficients_round_trip() {
        let al = al();
        let c = al.id("c").unwrap();
        let cc = SuperPoly::word(Word::new(&[c, c]));
        let x = cc.scale(&(p() * p() * rat(q(1, 2)) - rat(qi(3)) + crate::scalar::s()));
        let t = format_poly(&x, &al);
        assert_eq!(t, "1/2*p^2*c*c - 3*c*c + s*c*c");
        assert_eq!(parse_poly(&t, &al).unwrap(), x);
        assert_eq!(format_poly(&SuperPoly::zero(), &al), "0");
        assert!(parse_poly("a*zeta", &al).is_err());
        assert!(parse_poly("a +", &al).is_err());
    }
}
