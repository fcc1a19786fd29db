//! Bounded enumeration of finitely presented quandles by coset-style
//! coincidence processing.
//!
//! Elements are tracked as orbit points of the generator actions. Each
//! relation contributes a primary identification (its two sides denote the
//! same element) and a secondary family (its two sides act identically on
//! every element). Coincidences are processed through a union-find, always
//! merging toward the older record. When the table closes it is exactly the
//! presented quandle; the same machinery run without the closure requirement
//! is a sound semi-decision procedure for equality of terms.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::finite::quandle::FiniteQuandle;
use crate::presentation::QuandlePresentation;
use crate::term::{QuandleRelation, QuandleTerm};
use crate::words::{Gen, Letter, Sign};

const UNDEF: u32 = u32::MAX;

#[derive(Debug, Clone)]
enum DefRecord {
    Seed(Gen),
    Derived { parent: u32, letter: Letter },
}

/// Outcome of a closure run.
#[derive(Debug, Clone)]
pub enum EnumerateOutcome {
    Closed {
        quandle: FiniteQuandle,
        generator_images: Vec<usize>,
    },
    Exhausted {
        live_elements: usize,
        steps: u64,
    },
}

struct Engine {
    ngens: usize,
    parent: Vec<u32>,
    act: Vec<Vec<u32>>,
    def: Vec<DefRecord>,
    live: usize,
    max_elements: usize,
    max_steps: u64,
    steps: u64,
    pending: VecDeque<(u32, u32)>,
    // Compiled relations: primary element pairs and secondary action words.
    primary: Vec<(QuandleTerm, QuandleTerm)>,
    secondary: Vec<(Vec<Letter>, Vec<Letter>)>,
}

fn slot(l: Letter) -> usize {
    l.gen.index() * 2 + usize::from(l.sign == Sign::Neg)
}

/// The action word of a term used as an operator: conjugate into position,
/// apply the base generator, conjugate back.
fn operator_word(t: &QuandleTerm) -> Vec<Letter> {
    let mut w: Vec<Letter> = t.tail.iter().rev().map(|l| l.inverse()).collect();
    w.push(Letter::pos(t.base));
    w.extend_from_slice(&t.tail);
    w
}

impl Engine {
    fn new(rank: usize, relations: &[QuandleRelation], max_elements: usize, max_steps: u64) -> Engine {
        let mut primary = Vec::new();
        let mut secondary = Vec::new();
        for rel in relations {
            let c = rel.canon();
            if c.lhs == c.rhs {
                continue;
            }
            secondary.push((operator_word(&c.lhs), operator_word(&c.rhs)));
            primary.push((c.lhs, c.rhs));
        }
        let mut eng = Engine {
            ngens: rank,
            parent: Vec::new(),
            act: Vec::new(),
            def: Vec::new(),
            live: 0,
            max_elements,
            max_steps,
            steps: 0,
            pending: VecDeque::new(),
            primary,
            secondary,
        };
        for g in 0..rank as u32 {
            let e = eng.fresh(DefRecord::Seed(Gen(g))).expect("seed capacity");
            // x * x = x and x *^-1 x = x seed the idempotence of the whole
            // orbit: every derived element inherits it definitionally.
            eng.act[e as usize][slot(Letter::pos(Gen(g)))] = e;
            eng.act[e as usize][slot(Letter::neg(Gen(g)))] = e;
        }
        eng
    }

    fn fresh(&mut self, def: DefRecord) -> Result<u32> {
        if self.live >= self.max_elements {
            return Err(Error::NotClosed);
        }
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.act.push(vec![UNDEF; 2 * self.ngens]);
        self.def.push(def);
        self.live += 1;
        Ok(id)
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn charge(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max_steps {
            Err(Error::BudgetExceeded { steps: self.steps })
        } else {
            Ok(())
        }
    }

    /// Record `x . letter = y`, queueing a coincidence on conflict.
    fn set_arrow(&mut self, x: u32, l: Letter, y: u32) {
        let x = self.find(x);
        let y = self.find(y);
        let s = slot(l);
        let existing = self.act[x as usize][s];
        if existing != UNDEF {
            let e = self.find(existing);
            if e != y {
                self.pending.push_back((e, y));
            }
            return;
        }
        self.act[x as usize][s] = y;
        let back = slot(l.inverse());
        let existing_back = self.act[y as usize][back];
        if existing_back != UNDEF {
            let e = self.find(existing_back);
            if e != x {
                self.pending.push_back((e, x));
            }
        } else {
            self.act[y as usize][back] = x;
        }
    }

    /// Merge classes until the queue drains, folding the action tables of
    /// retired records into their survivors.
    fn process_coincidences(&mut self) -> Result<()> {
        while let Some((a, b)) = self.pending.pop_front() {
            self.charge()?;
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop as usize] = keep;
            self.live -= 1;
            let row = std::mem::take(&mut self.act[drop as usize]);
            for (s, &target) in row.iter().enumerate() {
                if target == UNDEF {
                    continue;
                }
                let l = Letter {
                    gen: Gen((s / 2) as u32),
                    sign: if s % 2 == 0 { Sign::Pos } else { Sign::Neg },
                };
                self.set_arrow(keep, l, target);
            }
        }
        Ok(())
    }

    /// Follow an action word from `start`, creating elements when allowed.
    fn trace(&mut self, start: u32, word: &[Letter], create: bool) -> Result<Option<u32>> {
        let mut x = self.find(start);
        for &l in word {
            self.charge()?;
            let s = slot(l);
            let next = self.act[x as usize][s];
            if next != UNDEF {
                x = self.find(next);
            } else if create {
                let y = self.fresh(DefRecord::Derived { parent: x, letter: l })?;
                self.act[x as usize][s] = y;
                self.act[y as usize][slot(l.inverse())] = x;
                x = y;
            } else {
                return Ok(None);
            }
        }
        Ok(Some(x))
    }

    fn seed(&mut self, g: Gen) -> u32 {
        self.find(g.0)
    }

    /// The element denoted by a term.
    fn element_of(&mut self, t: &QuandleTerm) -> Result<u32> {
        let start = self.seed(t.base);
        Ok(self
            .trace(start, &t.tail, true)?
            .expect("creating trace always lands"))
    }

    fn live_roots(&self) -> Vec<u32> {
        let n = self.parent.len() as u32;
        (0..n).filter(|&x| self.parent[x as usize] == x).collect()
    }

    /// Install the primary identifications.
    fn apply_primary(&mut self) -> Result<()> {
        let prim = self.primary.clone();
        for (l, r) in &prim {
            let a = self.element_of(l)?;
            let b = self.element_of(r)?;
            if self.find(a) != self.find(b) {
                self.pending.push_back((a, b));
            }
            self.process_coincidences()?;
        }
        Ok(())
    }

    /// One full round: every relation instance at every live element, and
    /// every undefined action slot filled. Returns whether anything changed.
    fn round(&mut self, create: bool) -> Result<bool> {
        let before_elements = self.parent.len();
        let before_live = self.live;
        let mut merged = false;
        let sec = self.secondary.clone();
        for x in self.live_roots() {
            for (wl, wr) in &sec {
                if self.parent[x as usize] != x {
                    break;
                }
                let a = self.trace(x, wl, create)?;
                let b = self.trace(x, wr, create)?;
                if let (Some(a), Some(b)) = (a, b) {
                    if self.find(a) != self.find(b) {
                        self.pending.push_back((a, b));
                        merged = true;
                    }
                    self.process_coincidences()?;
                }
            }
        }
        if create {
            for x in self.live_roots() {
                for s in 0..2 * self.ngens {
                    if self.parent[x as usize] != x {
                        break;
                    }
                    if self.act[x as usize][s] == UNDEF {
                        let l = Letter {
                            gen: Gen((s / 2) as u32),
                            sign: if s % 2 == 0 { Sign::Pos } else { Sign::Neg },
                        };
                        let y = self.fresh(DefRecord::Derived { parent: x, letter: l })?;
                        self.act[x as usize][s] = y;
                        self.act[y as usize][slot(l.inverse())] = x;
                    }
                }
            }
        }
        Ok(merged || self.parent.len() != before_elements || self.live != before_live)
    }

    /// Defining word of an element back to its seed.
    fn defining_term(&self, mut x: u32) -> QuandleTerm {
        let mut letters = Vec::new();
        loop {
            match &self.def[x as usize] {
                DefRecord::Seed(g) => {
                    letters.reverse();
                    return QuandleTerm { base: *g, tail: letters };
                }
                DefRecord::Derived { parent, letter } => {
                    letters.push(*letter);
                    x = *parent;
                }
            }
        }
    }
}

/// Enumerate the presented quandle. If it has at most `max_elements`
/// elements discoverable within `max_steps` trace steps, the full operation
/// table is returned together with the generator images; otherwise the run
/// reports exhaustion. A returned table always satisfies the quandle axioms
/// and every presentation relation.
pub fn enumerate_quandle(
    q: &QuandlePresentation,
    max_elements: usize,
    max_steps: u64,
) -> Result<EnumerateOutcome> {
    let mut eng = Engine::new(q.rank(), &q.relations, max_elements, max_steps);
    let exhausted = |eng: &Engine| EnumerateOutcome::Exhausted {
        live_elements: eng.live,
        steps: eng.steps,
    };
    match eng.apply_primary() {
        Ok(()) => {}
        Err(Error::NotClosed) | Err(Error::BudgetExceeded { .. }) => return Ok(exhausted(&eng)),
        Err(e) => return Err(e),
    }
    loop {
        match eng.round(true) {
            Ok(true) => continue,
            Ok(false) => break,
            Err(Error::NotClosed) | Err(Error::BudgetExceeded { .. }) => {
                return Ok(exhausted(&eng))
            }
            Err(e) => return Err(e),
        }
    }
    // Closed: extract the table over the live roots. Extraction traces are
    // pure lookups on a total table and run outside the step budget.
    eng.max_steps = u64::MAX;
    let roots = eng.live_roots();
    let n = roots.len();
    let index_of = |eng: &mut Engine, x: u32| -> usize {
        let r = eng.find(x);
        roots.binary_search(&r).expect("root element")
    };
    let mut table = vec![0usize; n * n];
    let terms: Vec<QuandleTerm> = roots.iter().map(|&y| eng.defining_term(y)).collect();
    for (j, yt) in terms.iter().enumerate() {
        let word = operator_word(yt);
        for (i, &x) in roots.iter().enumerate() {
            let z = eng
                .trace(x, &word, false)
                .map_err(|_| Error::NotClosed)?
                .ok_or(Error::NotClosed)?;
            table[i * n + j] = index_of(&mut eng, z);
        }
    }
    let quandle = FiniteQuandle::from_table(n, table, None)
        .map_err(|_| Error::Unsupported("enumeration produced a non-quandle table".into()))?;
    // The table must satisfy every relation before we hand it out.
    let generator_images: Vec<usize> = (0..q.rank() as u32)
        .map(|g| index_of(&mut eng, g))
        .collect();
    for rel in &q.relations {
        let l = quandle.eval_term(&generator_images, &rel.lhs);
        let r = quandle.eval_term(&generator_images, &rel.rhs);
        if l != r {
            return Err(Error::Unsupported(
                "enumeration closed on a table violating a relation".into(),
            ));
        }
    }
    Ok(EnumerateOutcome::Closed { quandle, generator_images })
}

/// Sound semi-decision: do the two terms denote the same element of the
/// presented quandle? A `true` answer is a real derivation; `false` only
/// means none was found within the bounds.
pub fn terms_equal_bounded(
    rank: usize,
    relations: &[QuandleRelation],
    lhs: &QuandleTerm,
    rhs: &QuandleTerm,
    max_elements: usize,
    max_steps: u64,
) -> bool {
    let mut eng = Engine::new(rank, relations, max_elements, max_steps);
    let (a, b) = match (|| -> Result<(u32, u32)> {
        eng.apply_primary()?;
        let a = eng.element_of(lhs)?;
        let b = eng.element_of(rhs)?;
        Ok((a, b))
    })() {
        Ok(pair) => pair,
        Err(_) => return false,
    };
    loop {
        if eng.find(a) == eng.find(b) {
            return true;
        }
        match eng.round(true) {
            Ok(true) => continue,
            Ok(false) => return eng.find(a) == eng.find(b),
            Err(_) => return eng.find(a) == eng.find(b),
        }
    }
}
