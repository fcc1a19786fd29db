//! Generator symbols and the two kinds of words everything else is built on:
//! positive words (free monoid) and signed words (free group).

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;

/// A generator, interned to a dense index within one presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u32);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Sign of a letter in a signed word, or of a quandle operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// One letter of a signed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: Gen) -> Letter {
        Letter { gen, sign: Sign::Pos }
    }

    pub fn neg(gen: Gen) -> Letter {
        Letter { gen, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }
}

/// Interning table mapping generator names to dense ids.
///
/// Names are pairwise distinct; ids are `0..len()` in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Symbols {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl Symbols {
    pub fn new() -> Symbols {
        Symbols::default()
    }

    pub fn from_names<I, S>(names: I) -> Result<Symbols, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut syms = Symbols::new();
        for n in names {
            syms.declare(n.into())?;
        }
        Ok(syms)
    }

    pub fn declare(&mut self, name: String) -> Result<Gen, Error> {
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateGenerator(name));
        }
        let id = self.names.len() as u32;
        self.index.insert(name.clone(), id);
        self.names.push(name);
        Ok(Gen(id))
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        self.index.get(name).copied().map(Gen)
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.names.len() as u32).map(Gen)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A word in the free monoid on the generators. The empty word is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveWord(pub Vec<Gen>);

impl PositiveWord {
    pub fn empty() -> PositiveWord {
        PositiveWord(Vec::new())
    }

    pub fn single(g: Gen) -> PositiveWord {
        PositiveWord(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PositiveWord(v)
    }

    pub fn pow(&self, k: usize) -> PositiveWord {
        let mut v = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        PositiveWord(v)
    }

    pub fn reversed(&self) -> PositiveWord {
        PositiveWord(self.0.iter().rev().copied().collect())
    }

    pub fn to_group_word(&self) -> GroupWord {
        GroupWord(self.0.iter().map(|&g| Letter::pos(g)).collect())
    }

    /// Shortlex order: by length first, then letterwise.
    pub fn shortlex_cmp(&self, other: &PositiveWord) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn display<'a>(&'a self, syms: &'a Symbols) -> impl fmt::Display + 'a {
        DisplayPositive { word: self, syms }
    }
}

struct DisplayPositive<'a> {
    word: &'a PositiveWord,
    syms: &'a Symbols,
}

impl fmt::Display for DisplayPositive<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.syms.name(*g))?;
        }
        Ok(())
    }
}

/// A word in the free monoid on the generators and their formal inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn empty() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Formal inverse: reverse the order and flip every sign.
    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupWord(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| l.sign == Sign::Pos)
    }

    pub fn to_positive(&self) -> Option<PositiveWord> {
        if self.is_positive() {
            Some(PositiveWord(self.0.iter().map(|l| l.gen).collect()))
        } else {
            None
        }
    }

    pub fn display<'a>(&'a self, syms: &'a Symbols) -> impl fmt::Display + 'a {
        DisplayGroup { word: self, syms }
    }
}

struct DisplayGroup<'a> {
    word: &'a GroupWord,
    syms: &'a Symbols,
}

impl fmt::Display for DisplayGroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.syms.name(l.gen))?;
            if l.sign == Sign::Neg {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Cancel every adjacent `s s^-1` and `s^-1 s` pair. The result represents
/// the same element of the free group.
pub fn free_reduce(w: &GroupWord) -> GroupWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.0.len());
    for &l in &w.0 {
        match out.last() {
            Some(&top) if top.gen == l.gen && top.sign == l.sign.flip() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    GroupWord(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms2() -> Symbols {
        Symbols::from_names(["a", "b"]).unwrap()
    }

    #[test]
    fn free_reduce_cancels_adjacent_pairs() {
        let s = syms2();
        let a = s.lookup("a").unwrap();
        let b = s.lookup("b").unwrap();
        // a a^-1 b -> b
        let w = GroupWord(vec![Letter::pos(a), Letter::neg(a), Letter::pos(b)]);
        assert_eq!(free_reduce(&w), GroupWord(vec![Letter::pos(b)]));
        // empty -> empty
        assert_eq!(free_reduce(&GroupWord::empty()), GroupWord::empty());
        // a b b^-1 a^-1 -> empty
        let w = GroupWord(vec![
            Letter::pos(a),
            Letter::pos(b),
            Letter::neg(b),
            Letter::neg(a),
        ]);
        assert_eq!(free_reduce(&w), GroupWord::empty());
    }

    #[test]
    fn inverse_is_an_involution() {
        let s = syms2();
        let a = s.lookup("a").unwrap();
        let b = s.lookup("b").unwrap();
        let w = GroupWord(vec![Letter::pos(a), Letter::neg(b), Letter::pos(b)]);
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        assert!(Symbols::from_names(["x", "x"]).is_err());
    }
}
