//! Word reversing for complemented presentations: the rewriting
//! `s^-1 t -> f(s,t) f(t,s)^-1` and everything built on it — residues,
//! divisibility tests and the double-reversing equality test.

use crate::error::{Error, Result};
use crate::presentation::{Complement, MonoidPresentation};
use crate::words::{Gen, GroupWord, Letter, PositiveWord, Sign};

/// Default rewriting budget for one top-level operation.
pub const DEFAULT_BUDGET: u64 = 100_000;

/// A step counter shared by nested reversing calls. Exhaustion is reported
/// as a distinct error, never swallowed.
///
/// Rewriting steps are the budgeted unit; a divergent reversing also blows
/// up the intermediate word, so cumulative splice work and word length are
/// capped alongside (at a fixed multiple of the step limit) to keep
/// non-terminating complements from stalling on long words.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
    work: u64,
}

const WORK_FACTOR: u64 = 64;
const MAX_REVERSING_WORD: usize = 65_536;

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0, work: 0 }
    }

    pub fn standard() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }

    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used += n;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { steps: self.used })
        } else {
            Ok(())
        }
    }

    fn charge_work(&mut self, n: u64) -> Result<()> {
        self.work += n;
        if self.work > self.limit.saturating_mul(WORK_FACTOR) {
            Err(Error::BudgetExceeded { steps: self.used })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Which `s^-1 t` factor to rewrite first. Leftmost is the default;
/// rightmost exists to cross-check confluence on verified presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A right fraction `numerator * denominator^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub numerator: PositiveWord,
    pub denominator: PositiveWord,
}

impl Fraction {
    pub fn is_trivial(&self) -> bool {
        self.numerator.is_empty() && self.denominator.is_empty()
    }
}

fn complement_entry<'a>(f: &'a Complement, s: Gen, t: Gen) -> Result<&'a PositiveWord> {
    f.get(s, t)
        .ok_or_else(|| Error::ComplementEntryMissing(format!("{}", s.0), format!("{}", t.0)))
}

/// Reverse a signed word into a right fraction equal to it in the group of
/// fractions. Rewrites one `s^-1 t` factor per step until none remains.
pub fn reverse(
    w: &GroupWord,
    f: &Complement,
    budget: &mut Budget,
    strategy: Strategy,
) -> Result<Fraction> {
    let mut word: Vec<Letter> = w.0.clone();
    // Leftmost scans keep the invariant that no (-,+) boundary exists
    // before `hint`, so each step restarts one position left of the splice.
    let mut hint = 0usize;
    loop {
        let found = match strategy {
            Strategy::Leftmost => (hint..word.len().saturating_sub(1))
                .find(|&i| word[i].sign == Sign::Neg && word[i + 1].sign == Sign::Pos),
            Strategy::Rightmost => (0..word.len().saturating_sub(1))
                .rev()
                .find(|&i| word[i].sign == Sign::Neg && word[i + 1].sign == Sign::Pos),
        };
        let Some(i) = found else { break };
        budget.charge(1)?;
        let s = word[i].gen;
        let t = word[i + 1].gen;
        let fst = complement_entry(f, s, t)?.clone();
        let fts = complement_entry(f, t, s)?.clone();
        let mut repl: Vec<Letter> = Vec::with_capacity(fst.len() + fts.len());
        repl.extend(fst.0.iter().map(|&g| Letter::pos(g)));
        repl.extend(fts.0.iter().rev().map(|&g| Letter::neg(g)));
        budget.charge_work((word.len() + repl.len()) as u64)?;
        word.splice(i..i + 2, repl);
        if word.len() > MAX_REVERSING_WORD {
            return Err(Error::BudgetExceeded { steps: budget.used() });
        }
        hint = i.saturating_sub(1);
    }
    // No (-,+) boundary remains, so the word is a positive prefix followed
    // by a negative suffix.
    let split = word.iter().position(|l| l.sign == Sign::Neg).unwrap_or(word.len());
    debug_assert!(word[split..].iter().all(|l| l.sign == Sign::Neg));
    let numerator = PositiveWord(word[..split].iter().map(|l| l.gen).collect());
    let denominator = PositiveWord(word[split..].iter().rev().map(|l| l.gen).collect());
    Ok(Fraction { numerator, denominator })
}

/// `u^-1 v` as a signed word.
fn quotient_word(u: &PositiveWord, v: &PositiveWord) -> GroupWord {
    u.to_group_word().inverse().concat(&v.to_group_word())
}

/// Both residues at once: reversing `u^-1 v` yields `(u\v)(v\u)^-1`.
pub fn residue_pair(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &Complement,
    budget: &mut Budget,
) -> Result<(PositiveWord, PositiveWord)> {
    let fr = reverse(&quotient_word(u, v), f, budget, Strategy::Leftmost)?;
    Ok((fr.numerator, fr.denominator))
}

/// The right residue `u \ v`.
pub fn residue(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &Complement,
    budget: &mut Budget,
) -> Result<PositiveWord> {
    Ok(residue_pair(u, v, f, budget)?.0)
}

/// Whether `u` is a left divisor of `v`: reversing `u^-1 v` leaves an empty
/// denominator.
pub fn left_divides(
    u: &PositiveWord,
    v: &PositiveWord,
    f: &Complement,
    budget: &mut Budget,
) -> Result<bool> {
    Ok(residue_pair(u, v, f, budget)?.1.is_empty())
}

/// Whether a signed word represents the identity, by double reversing:
/// first `w = y z^-1`, then `y = z` iff both residues of the pair vanish.
pub fn word_problem_trivial(w: &GroupWord, f: &Complement, budget: &mut Budget) -> Result<bool> {
    let fr = reverse(w, f, budget, Strategy::Leftmost)?;
    words_equal_in_monoid(&fr.numerator, &fr.denominator, f, budget)
}

/// Whether two positive words represent the same monoid element.
pub fn words_equal_in_monoid(
    a: &PositiveWord,
    b: &PositiveWord,
    f: &Complement,
    budget: &mut Budget,
) -> Result<bool> {
    let (x, y) = residue_pair(a, b, f, budget)?;
    Ok(x.is_empty() && y.is_empty())
}

/// The unique generator a positive word is equal to, if any.
pub fn as_generator(
    w: &PositiveWord,
    m: &MonoidPresentation,
    budget: &mut Budget,
) -> Result<Option<Gen>> {
    let f = m.complement()?;
    let mut hit = None;
    for g in m.symbols.gens() {
        if words_equal_in_monoid(w, &PositiveWord::single(g), f, budget)? {
            if hit.is_some() {
                // Left cancellativity makes this impossible on a valid
                // complemented presentation; a second hit means bad input.
                return Err(Error::InvalidComplement(
                    "two distinct generators represent the same element".into(),
                ));
            }
            hit = Some(g);
        }
    }
    Ok(hit)
}

/// Right-divisibility through the mirror presentation: `v = q u` for some
/// positive `q`, returned as the quotient when it exists.
pub fn right_divides_quotient(
    u: &PositiveWord,
    v: &PositiveWord,
    mirror: &MonoidPresentation,
    budget: &mut Budget,
) -> Result<Option<PositiveWord>> {
    let f = mirror.complement()?;
    let (q, r) = residue_pair(&u.reversed(), &v.reversed(), f, budget)?;
    if r.is_empty() {
        Ok(Some(q.reversed()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn braid3() -> MonoidPresentation {
        catalog::braid_monoid(3)
    }

    fn torus_knot() -> MonoidPresentation {
        catalog::torus_knot_monoid(2, 3)
    }

    fn pw(m: &MonoidPresentation, names: &[&str]) -> PositiveWord {
        PositiveWord(names.iter().map(|n| m.symbols.lookup(n).unwrap()).collect())
    }

    #[test]
    fn reversing_identity_factor() {
        let m = braid3();
        let f = m.complement().unwrap();
        let s = m.symbols.lookup("s1").unwrap();
        let w = GroupWord(vec![Letter::neg(s), Letter::pos(s)]);
        let fr = reverse(&w, f, &mut Budget::standard(), Strategy::Leftmost).unwrap();
        assert!(fr.is_trivial());
    }

    #[test]
    fn reversing_braid_pair() {
        // s1^-1 s2 -> (s2 s1)(s1 s2)^-1 in the 3-strand braid monoid.
        let m = braid3();
        let f = m.complement().unwrap();
        let s1 = m.symbols.lookup("s1").unwrap();
        let s2 = m.symbols.lookup("s2").unwrap();
        let w = GroupWord(vec![Letter::neg(s1), Letter::pos(s2)]);
        let fr = reverse(&w, f, &mut Budget::standard(), Strategy::Leftmost).unwrap();
        assert_eq!(fr.numerator, pw(&m, &["s2", "s1"]));
        assert_eq!(fr.denominator, pw(&m, &["s1", "s2"]));
    }

    #[test]
    fn reversing_torus_knot_pair() {
        // x^-1 y -> x (y y)^-1 in <x, y | x x = y y y>.
        let m = torus_knot();
        let f = m.complement().unwrap();
        let x = m.symbols.lookup("x").unwrap();
        let y = m.symbols.lookup("y").unwrap();
        let w = GroupWord(vec![Letter::neg(x), Letter::pos(y)]);
        let fr = reverse(&w, f, &mut Budget::standard(), Strategy::Leftmost).unwrap();
        assert_eq!(fr.numerator, pw(&m, &["x"]));
        assert_eq!(fr.denominator, pw(&m, &["y", "y"]));
    }

    #[test]
    fn residue_examples() {
        let m = braid3();
        let f = m.complement().unwrap();
        let mut b = Budget::standard();
        assert_eq!(
            residue(&pw(&m, &["s1"]), &pw(&m, &["s2"]), f, &mut b).unwrap(),
            pw(&m, &["s2", "s1"])
        );
        assert_eq!(
            residue(&pw(&m, &["s1"]), &pw(&m, &["s1"]), f, &mut b).unwrap(),
            PositiveWord::empty()
        );
        assert_eq!(
            residue(&pw(&m, &["s1", "s2"]), &pw(&m, &["s1"]), f, &mut b).unwrap(),
            PositiveWord::empty()
        );
        assert_eq!(
            residue(&pw(&m, &["s1"]), &pw(&m, &["s1", "s2"]), f, &mut b).unwrap(),
            pw(&m, &["s2"])
        );
    }

    #[test]
    fn divisibility_examples() {
        let m = braid3();
        let f = m.complement().unwrap();
        let mut b = Budget::standard();
        let long = pw(&m, &["s1", "s2", "s1"]);
        assert!(left_divides(&pw(&m, &["s1"]), &long, f, &mut b).unwrap());
        assert!(left_divides(&pw(&m, &["s2"]), &long, f, &mut b).unwrap());
        let tk = torus_knot();
        let ftk = tk.complement().unwrap();
        assert!(!left_divides(&pw(&tk, &["x"]), &pw(&tk, &["y"]), ftk, &mut b).unwrap());
    }

    #[test]
    fn word_problem_examples() {
        let m = braid3();
        let f = m.complement().unwrap();
        let mut b = Budget::standard();
        let s1 = m.symbols.lookup("s1").unwrap();
        let s2 = m.symbols.lookup("s2").unwrap();
        // s1 s2 s1 (s2 s1 s2)^-1 is trivial
        let w = pw(&m, &["s1", "s2", "s1"])
            .to_group_word()
            .concat(&pw(&m, &["s2", "s1", "s2"]).to_group_word().inverse());
        assert!(word_problem_trivial(&w, f, &mut b).unwrap());
        // s1 s2^-1 is not
        let w = GroupWord(vec![Letter::pos(s1), Letter::neg(s2)]);
        assert!(!word_problem_trivial(&w, f, &mut b).unwrap());
        // x x (y y y)^-1 is trivial in the torus knot monoid
        let tk = torus_knot();
        let ftk = tk.complement().unwrap();
        let w = pw(&tk, &["x", "x"])
            .to_group_word()
            .concat(&pw(&tk, &["y", "y", "y"]).to_group_word().inverse());
        assert!(word_problem_trivial(&w, ftk, &mut b).unwrap());
    }

    #[test]
    fn strategies_agree_on_verified_presentations() {
        let m = braid3();
        let f = m.complement().unwrap();
        let s1 = m.symbols.lookup("s1").unwrap();
        let s2 = m.symbols.lookup("s2").unwrap();
        let w = GroupWord(vec![
            Letter::neg(s1),
            Letter::neg(s2),
            Letter::pos(s1),
            Letter::pos(s2),
        ]);
        let a = reverse(&w, f, &mut Budget::standard(), Strategy::Leftmost).unwrap();
        let b = reverse(&w, f, &mut Budget::standard(), Strategy::Rightmost).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let m = braid3();
        let f = m.complement().unwrap();
        let s1 = m.symbols.lookup("s1").unwrap();
        let s2 = m.symbols.lookup("s2").unwrap();
        let mut w = GroupWord::empty();
        for _ in 0..6 {
            w = w.concat(&GroupWord(vec![Letter::neg(s1), Letter::pos(s2)]));
        }
        let mut tiny = Budget::new(2);
        match reverse(&w, f, &mut tiny, Strategy::Leftmost) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
