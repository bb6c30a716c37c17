//! Z2-graded alphabets. A letter's index is its rank in the monomial order.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub name: String,
    /// 0 for even, 1 for odd.
    pub grade: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
    index: HashMap<String, u8>,
}

impl Alphabet {
    /// Letters listed from smallest to largest in the monomial order.
    pub fn new(letters: &[(&str, u8)]) -> Self {
        assert!(letters.len() < 256, "alphabet too large");
        let letters: Vec<Letter> = letters.iter().map(|&(n, g)| Letter { name: n.to_string(), grade: g & 1 }).collect();
        let index: HashMap<String, u8> = letters.iter().enumerate().map(|(i, l)| (l.name.clone(), i as u8)).collect();
        assert_eq!(index.len(), letters.len(), "duplicate letter names");
        Alphabet { letters, index }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, id: u8) -> &Letter {
        &self.letters[id as usize]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn name(&self, id: u8) -> &str {
        &self.letters[id as usize].name
    }

    pub fn grade(&self, id: u8) -> u8 {
        self.letters[id as usize].grade
    }

    pub fn id(&self, name: &str) -> Result<u8> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_and_grades() {
        let a = Alphabet::new(&[("c", 0), ("delta", 1), ("a", 0)]);
        assert_eq!(a.id("delta").unwrap(), 1);
        assert_eq!(a.grade(1), 1);
        assert_eq!(a.name(2), "a");
        assert!(a.id("zeta").is_err());
    }
}
