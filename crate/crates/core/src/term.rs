//! Quandle terms in left-associated normal form, nested term expressions,
//! and the structural rewriting that flattens nested products.

use std::cmp::Ordering;
use std::fmt;

use crate::words::{free_reduce, Gen, GroupWord, Letter, Sign, Symbols};

/// A left-associated product `base *^{e1} t1 *^{e2} t2 ... *^{en} tn`
/// with every `ti` a generator. Every quandle element over a generating
/// set can be written this way.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuandleTerm {
    pub base: Gen,
    pub tail: Vec<Letter>,
}

impl QuandleTerm {
    pub fn gen(base: Gen) -> QuandleTerm {
        QuandleTerm { base, tail: Vec::new() }
    }

    pub fn new(base: Gen, tail: Vec<Letter>) -> QuandleTerm {
        QuandleTerm { base, tail }
    }

    pub fn len(&self) -> usize {
        1 + self.tail.len()
    }

    pub fn is_gen(&self) -> bool {
        self.tail.is_empty()
    }

    /// Append one operation `*^sign g`.
    pub fn push(&mut self, g: Gen, sign: Sign) {
        self.tail.push(Letter { gen: g, sign });
    }

    /// The word `w` with `term = w * base * w^-1` in any conjugation quandle:
    /// the tail read right to left.
    pub fn conjugator(&self) -> GroupWord {
        GroupWord(self.tail.iter().rev().copied().collect())
    }

    /// The tail as a right-action word (applied left to right).
    pub fn action(&self) -> &[Letter] {
        &self.tail
    }

    /// Cancel adjacent `*g *^-1 g` pairs in the tail and strip leading tail
    /// letters equal to the base (x*x = x and its inverse form x*^-1 x = x).
    pub fn canon(&self) -> QuandleTerm {
        let mut tail: Vec<Letter> = Vec::with_capacity(self.tail.len());
        for &l in &self.tail {
            match tail.last() {
                Some(&top) if top.gen == l.gen && top.sign == l.sign.flip() => {
                    tail.pop();
                }
                _ => tail.push(l),
            }
        }
        let mut start = 0;
        while start < tail.len() && tail[start].gen == self.base {
            start += 1;
        }
        QuandleTerm { base: self.base, tail: tail[start..].to_vec() }
    }

    /// Shortlex comparison: total length, then base, then tail letters.
    pub fn shortlex_cmp(&self, other: &QuandleTerm) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.base.cmp(&other.base))
            .then_with(|| self.tail.cmp(&other.tail))
    }

    pub fn display<'a>(&'a self, syms: &'a Symbols) -> impl fmt::Display + 'a {
        DisplayTerm { term: self, syms }
    }
}

struct DisplayTerm<'a> {
    term: &'a QuandleTerm,
    syms: &'a Symbols,
}

impl fmt::Display for DisplayTerm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.syms.name(self.term.base))?;
        for l in &self.term.tail {
            let op = match l.sign {
                Sign::Pos => "*",
                Sign::Neg => "*-",
            };
            write!(f, " {} {}", op, self.syms.name(l.gen))?;
        }
        Ok(())
    }
}

/// An equation between two left-associated terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuandleRelation {
    pub lhs: QuandleTerm,
    pub rhs: QuandleTerm,
}

impl QuandleRelation {
    pub fn new(lhs: QuandleTerm, rhs: QuandleTerm) -> QuandleRelation {
        QuandleRelation { lhs, rhs }
    }

    /// Canonical storage form: both sides reduced, the shortlex-smaller
    /// side first. Used for set comparisons of presentations.
    pub fn canon(&self) -> QuandleRelation {
        let a = self.lhs.canon();
        let b = self.rhs.canon();
        if b.shortlex_cmp(&a) == Ordering::Less {
            QuandleRelation { lhs: b, rhs: a }
        } else {
            QuandleRelation { lhs: a, rhs: b }
        }
    }

    pub fn is_trivial(&self) -> bool {
        let c = self.canon();
        c.lhs == c.rhs
    }

    pub fn display<'a>(&'a self, syms: &'a Symbols) -> impl fmt::Display + 'a {
        DisplayRelation { rel: self, syms }
    }
}

impl PartialOrd for QuandleRelation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuandleRelation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lhs
            .shortlex_cmp(&other.lhs)
            .then_with(|| self.rhs.shortlex_cmp(&other.rhs))
    }
}

struct DisplayRelation<'a> {
    rel: &'a QuandleRelation,
    syms: &'a Symbols,
}

impl fmt::Display for DisplayRelation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Longer side first, the way presentations are usually written.
        let (a, b) = if self.rel.lhs.len() >= self.rel.rhs.len() {
            (&self.rel.lhs, &self.rel.rhs)
        } else {
            (&self.rel.rhs, &self.rel.lhs)
        };
        write!(f, "{} = {}", a.display(self.syms), b.display(self.syms))
    }
}

/// A not-yet-flattened product of terms under `*` and `*^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermExpr {
    Atom(Gen),
    Op(Box<TermExpr>, Sign, Box<TermExpr>),
}

impl TermExpr {
    pub fn atom(g: Gen) -> TermExpr {
        TermExpr::Atom(g)
    }

    pub fn op(lhs: TermExpr, sign: Sign, rhs: TermExpr) -> TermExpr {
        TermExpr::Op(Box::new(lhs), sign, Box::new(rhs))
    }
}

/// Append to `acc` the tail letters realizing `acc *^sign rhs` where `rhs`
/// is an already flattened term: conjugate into position, apply the base,
/// conjugate back.
fn apply_flat(acc: &mut Vec<Letter>, sign: Sign, rhs: &QuandleTerm) {
    for l in rhs.tail.iter().rev() {
        acc.push(l.inverse());
    }
    acc.push(Letter { gen: rhs.base, sign });
    acc.extend_from_slice(&rhs.tail);
}

/// Flatten a nested product into a single left-associated term. Evaluation
/// agrees with the input in every quandle.
pub fn rewrite_left_associated(expr: &TermExpr) -> QuandleTerm {
    fn flatten(e: &TermExpr) -> QuandleTerm {
        match e {
            TermExpr::Atom(g) => QuandleTerm::gen(*g),
            TermExpr::Op(l, sign, r) => {
                let mut left = flatten(l);
                let right = flatten(r);
                apply_flat(&mut left.tail, *sign, &right);
                left
            }
        }
    }
    flatten(expr).canon()
}

/// The left-associated term denoting `w * base * w^-1`: the letters of `w`
/// listed right to left in the tail, signs kept.
pub fn conjugation_to_term(base: Gen, w: &GroupWord) -> QuandleTerm {
    let reduced = free_reduce(w);
    QuandleTerm {
        base,
        tail: reduced.0.iter().rev().copied().collect(),
    }
    .canon()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::quandle::{core_quandle, FiniteQuandle};
    use crate::words::Symbols;

    fn eval(q: &FiniteQuandle, assign: &[usize], t: &QuandleTerm) -> usize {
        let mut x = assign[t.base.index()];
        for l in &t.tail {
            let y = assign[l.gen.index()];
            x = match l.sign {
                Sign::Pos => q.op(x, y),
                Sign::Neg => q.op_inv(x, y),
            };
        }
        x
    }

    fn eval_expr(q: &FiniteQuandle, assign: &[usize], e: &TermExpr) -> usize {
        match e {
            TermExpr::Atom(g) => assign[g.index()],
            TermExpr::Op(l, s, r) => {
                let a = eval_expr(q, assign, l);
                let b = eval_expr(q, assign, r);
                match s {
                    Sign::Pos => q.op(a, b),
                    Sign::Neg => q.op_inv(a, b),
                }
            }
        }
    }

    #[test]
    fn conjugation_to_term_examples() {
        let syms = Symbols::from_names(["s", "s1", "s2"]).unwrap();
        let s = syms.lookup("s").unwrap();
        let s1 = syms.lookup("s1").unwrap();
        let s2 = syms.lookup("s2").unwrap();
        // w = s1 s2^-1 gives s *- s2 * s1
        let w = GroupWord(vec![Letter::pos(s1), Letter::neg(s2)]);
        let t = conjugation_to_term(s, &w);
        assert_eq!(t.base, s);
        assert_eq!(t.tail, vec![Letter::neg(s2), Letter::pos(s1)]);
        // empty conjugator gives the bare generator
        let t = conjugation_to_term(s, &GroupWord::empty());
        assert!(t.is_gen());
    }

    #[test]
    fn conjugation_to_term_braid_pattern() {
        let syms = Symbols::from_names(["g1", "g2"]).unwrap();
        let g1 = syms.lookup("g1").unwrap();
        let g2 = syms.lookup("g2").unwrap();
        let w = GroupWord(vec![Letter::pos(g1), Letter::pos(g2)]);
        let t = conjugation_to_term(g1, &w);
        assert_eq!(t.tail, vec![Letter::pos(g2), Letter::pos(g1)]);
    }

    #[test]
    fn flatten_checked_against_core_z5_on_all_assignments() {
        // (a*b) * (c*b) flattened, compared by evaluation over all 125
        // assignments into the dihedral quandle on Z5.
        let syms = Symbols::from_names(["a", "b", "c"]).unwrap();
        let a = syms.lookup("a").unwrap();
        let b = syms.lookup("b").unwrap();
        let c = syms.lookup("c").unwrap();
        let expr = TermExpr::op(
            TermExpr::op(TermExpr::atom(a), Sign::Pos, TermExpr::atom(b)),
            Sign::Pos,
            TermExpr::op(TermExpr::atom(c), Sign::Pos, TermExpr::atom(b)),
        );
        let flat = rewrite_left_associated(&expr);
        let q = core_quandle(5);
        for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    let assign = [x, y, z];
                    assert_eq!(eval_expr(&q, &assign, &expr), eval(&q, &assign, &flat));
                }
            }
        }
    }

    #[test]
    fn flatten_telescopes_alternating_products() {
        // (u*f2*f1) * (f3*f2*f1) = u*f3*f2*f1 after cancellation.
        let syms = Symbols::from_names(["u", "f1", "f2", "f3"]).unwrap();
        let u = syms.lookup("u").unwrap();
        let f1 = syms.lookup("f1").unwrap();
        let f2 = syms.lookup("f2").unwrap();
        let f3 = syms.lookup("f3").unwrap();
        let left = QuandleTerm::new(u, vec![Letter::pos(f2), Letter::pos(f1)]);
        let right = QuandleTerm::new(f3, vec![Letter::pos(f2), Letter::pos(f1)]);
        let mut acc = left.clone();
        apply_flat(&mut acc.tail, Sign::Pos, &right);
        let got = acc.canon();
        assert_eq!(
            got,
            QuandleTerm::new(u, vec![Letter::pos(f3), Letter::pos(f2), Letter::pos(f1)])
        );
    }

    #[test]
    fn trivial_products_collapse() {
        let syms = Symbols::from_names(["a"]).unwrap();
        let a = syms.lookup("a").unwrap();
        let t = QuandleTerm::new(a, vec![Letter::pos(a), Letter::pos(a)]).canon();
        assert_eq!(t, QuandleTerm::gen(a));
    }

    #[test]
    fn relation_canon_orders_sides() {
        let syms = Symbols::from_names(["a", "b"]).unwrap();
        let a = syms.lookup("a").unwrap();
        let b = syms.lookup("b").unwrap();
        let long = QuandleTerm::new(a, vec![Letter::pos(b), Letter::pos(a)]);
        let rel = QuandleRelation::new(long.clone(), QuandleTerm::gen(b));
        let canon = rel.canon();
        assert_eq!(canon.lhs, QuandleTerm::gen(b));
        assert_eq!(canon.rhs, long);
    }
}
