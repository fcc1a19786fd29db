//! Presentations of monoids, groups and quandles, plus the complement
//! table attached to complemented monoid presentations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::term::QuandleRelation;
use crate::words::{Gen, GroupWord, PositiveWord, Symbols};

/// The table `(s, t) -> f(s, t)` of positive words with `s f(s,t) = t f(t,s)`
/// as defining relations; `f(s,t)` is empty exactly on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complement {
    n: usize,
    table: Vec<Option<PositiveWord>>,
}

impl Complement {
    pub fn new(n: usize) -> Complement {
        let mut table = vec![None; n * n];
        for s in 0..n {
            table[s * n + s] = Some(PositiveWord::empty());
        }
        Complement { n, table }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, s: Gen, t: Gen, w: PositiveWord) -> Result<()> {
        if s == t {
            if !w.is_empty() {
                return Err(Error::InvalidComplement(
                    "diagonal entries must be empty".into(),
                ));
            }
            return Ok(());
        }
        if w.is_empty() {
            return Err(Error::InvalidComplement(
                "off-diagonal entries must be nonempty".into(),
            ));
        }
        self.table[s.index() * self.n + t.index()] = Some(w);
        Ok(())
    }

    pub fn get(&self, s: Gen, t: Gen) -> Option<&PositiveWord> {
        self.table[s.index() * self.n + t.index()].as_ref()
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().all(|e| e.is_some())
    }

    /// Every entry has the same length as its transpose.
    pub fn is_homogeneous(&self) -> bool {
        for s in 0..self.n {
            for t in 0..self.n {
                match (&self.table[s * self.n + t], &self.table[t * self.n + s]) {
                    (Some(a), Some(b)) if a.len() != b.len() => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// The defining relations `s f(s,t) = t f(t,s)` over all unordered pairs.
    pub fn relations(&self) -> Vec<(PositiveWord, PositiveWord)> {
        let mut rels = Vec::new();
        for s in 0..self.n {
            for t in (s + 1)..self.n {
                if let (Some(fst), Some(fts)) =
                    (&self.table[s * self.n + t], &self.table[t * self.n + s])
                {
                    let lhs = PositiveWord::single(Gen(s as u32)).concat(fst);
                    let rhs = PositiveWord::single(Gen(t as u32)).concat(fts);
                    rels.push((lhs, rhs));
                }
            }
        }
        rels
    }
}

/// A monoid presentation, optionally complemented and optionally carrying
/// a declared Garside element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidPresentation {
    pub symbols: Symbols,
    pub relations: Vec<(PositiveWord, PositiveWord)>,
    pub complement: Option<Complement>,
    pub delta: Option<PositiveWord>,
}

impl MonoidPresentation {
    pub fn new(symbols: Symbols) -> MonoidPresentation {
        MonoidPresentation {
            symbols,
            relations: Vec::new(),
            complement: None,
            delta: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.symbols.len()
    }

    pub fn complement(&self) -> Result<&Complement> {
        self.complement.as_ref().ok_or(Error::MissingComplement)
    }

    /// Every relation has equal lengths on both sides. This decides
    /// homogeneity for presentations on the atom set, since homogeneity is
    /// equivalent to word length being an invariant of the monoid element.
    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|(a, b)| a.len() == b.len())
    }

    /// The anti-isomorphic presentation with every relation word reversed.
    /// Left-divisibility questions here become right-divisibility questions
    /// in the mirror and vice versa.
    ///
    /// A complement for the mirror is reused verbatim when the relation set
    /// is closed under word reversal (every catalog monoid with a left route
    /// is); otherwise the caller must supply one.
    pub fn mirror(&self) -> MonoidPresentation {
        let relations: Vec<_> = self
            .relations
            .iter()
            .map(|(a, b)| (a.reversed(), b.reversed()))
            .collect();
        let palindromic = {
            let orig: BTreeSet<(Vec<Gen>, Vec<Gen>)> = self
                .relations
                .iter()
                .flat_map(|(a, b)| {
                    [(a.0.clone(), b.0.clone()), (b.0.clone(), a.0.clone())]
                })
                .collect();
            relations.iter().all(|(a, b)| {
                orig.contains(&(a.0.clone(), b.0.clone()))
                    || orig.contains(&(b.0.clone(), a.0.clone()))
            })
        };
        MonoidPresentation {
            symbols: self.symbols.clone(),
            relations,
            complement: if palindromic { self.complement.clone() } else { None },
            delta: self.delta.as_ref().map(|d| d.reversed()),
        }
    }

    /// View as a group presentation: one relator `u v^-1` per relation.
    pub fn to_group(&self) -> GroupPresentation {
        let relators = self
            .relations
            .iter()
            .map(|(u, v)| u.to_group_word().concat(&v.to_group_word().inverse()))
            .collect();
        GroupPresentation {
            symbols: self.symbols.clone(),
            relators,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.rank() as u32;
        let check_pos = |w: &PositiveWord| -> Result<()> {
            if w.0.iter().any(|g| g.0 >= n) {
                return Err(Error::Unsupported("relation uses undeclared generator".into()));
            }
            Ok(())
        };
        for (a, b) in &self.relations {
            check_pos(a)?;
            check_pos(b)?;
        }
        if let Some(c) = &self.complement {
            if c.rank() != self.rank() {
                return Err(Error::InvalidComplement("rank mismatch".into()));
            }
        }
        if let Some(d) = &self.delta {
            check_pos(d)?;
        }
        Ok(())
    }
}

/// A group presentation by relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub symbols: Symbols,
    pub relators: Vec<GroupWord>,
}

impl GroupPresentation {
    pub fn new(symbols: Symbols) -> GroupPresentation {
        GroupPresentation { symbols, relators: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.symbols.len()
    }
}

/// A quandle presentation by relations between left-associated terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandlePresentation {
    pub symbols: Symbols,
    pub relations: Vec<QuandleRelation>,
}

impl QuandlePresentation {
    pub fn new(symbols: Symbols) -> QuandlePresentation {
        QuandlePresentation { symbols, relations: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.symbols.len()
    }

    /// Canonicalized relation set with trivial relations removed.
    pub fn canonical_set(&self) -> BTreeSet<QuandleRelation> {
        self.relations
            .iter()
            .map(|r| r.canon())
            .filter(|r| r.lhs != r.rhs)
            .collect()
    }

    /// Same presented quandle relations as a deduplicated, sorted vector.
    pub fn canonicalized(&self) -> QuandlePresentation {
        QuandlePresentation {
            symbols: self.symbols.clone(),
            relations: self.canonical_set().into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Letter;

    #[test]
    fn complement_diagonal_is_empty_and_fixed() {
        let mut c = Complement::new(2);
        let a = Gen(0);
        let b = Gen(1);
        assert_eq!(c.get(a, a), Some(&PositiveWord::empty()));
        assert!(c.set(a, b, PositiveWord::empty()).is_err());
        c.set(a, b, PositiveWord(vec![b])).unwrap();
        assert_eq!(c.get(a, b).unwrap().len(), 1);
    }

    #[test]
    fn mirror_keeps_complement_for_palindromic_relations() {
        // x x = y y y is closed under reversal.
        let symbols = Symbols::from_names(["x", "y"]).unwrap();
        let x = Gen(0);
        let y = Gen(1);
        let mut m = MonoidPresentation::new(symbols);
        m.relations.push((
            PositiveWord(vec![x, x]),
            PositiveWord(vec![y, y, y]),
        ));
        let mut c = Complement::new(2);
        c.set(x, y, PositiveWord(vec![x])).unwrap();
        c.set(y, x, PositiveWord(vec![y, y])).unwrap();
        m.complement = Some(c);
        let mir = m.mirror();
        assert!(mir.complement.is_some());
        assert_eq!(mir.relations[0].0, PositiveWord(vec![x, x]));
    }

    #[test]
    fn monoid_to_group_builds_relators() {
        let symbols = Symbols::from_names(["a", "b"]).unwrap();
        let a = Gen(0);
        let b = Gen(1);
        let mut m = MonoidPresentation::new(symbols);
        m.relations.push((PositiveWord(vec![a, b]), PositiveWord(vec![b, a])));
        let g = m.to_group();
        assert_eq!(
            g.relators[0].0,
            vec![Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]
        );
    }
}
