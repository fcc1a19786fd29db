//! The Garside/Gaussian route: generator-valued conjugation data computed
//! from the complement by reversing, and the induced quandle presentations
//! on both sides.

use crate::error::{Error, Result};
use crate::presentation::{MonoidPresentation, QuandlePresentation};
use crate::reversing::{as_generator, left_divides, residue, Budget};
use crate::term::{QuandleRelation, QuandleTerm};
use crate::words::{Gen, Letter, PositiveWord, Sign, Symbols};

/// For each ordered generator pair: the letters of the selector word
/// `f(s,t)`, the generator `beta(s,t)` with `s f(s,t) = f(s,t) beta(s,t)`,
/// and on comparable pairs the generator `alpha(s,t)` equal to `s^-1 t s`.
#[derive(Debug, Clone)]
pub struct AlphaBetaTables {
    n: usize,
    pub alpha: Vec<Option<Gen>>,
    pub beta: Vec<Gen>,
    pub factors: Vec<Vec<Gen>>,
}

impl AlphaBetaTables {
    pub fn alpha_at(&self, s: Gen, t: Gen) -> Option<Gen> {
        self.alpha[s.index() * self.n + t.index()]
    }

    pub fn beta_at(&self, s: Gen, t: Gen) -> Gen {
        self.beta[s.index() * self.n + t.index()]
    }

    pub fn factors_at(&self, s: Gen, t: Gen) -> &[Gen] {
        &self.factors[s.index() * self.n + t.index()]
    }
}

fn generator_or_error(
    w: &PositiveWord,
    m: &MonoidPresentation,
    budget: &mut Budget,
) -> Result<Gen> {
    as_generator(w, m, budget)?.ok_or_else(|| Error::NotAGenerator {
        word: format!("{}", w.display(&m.symbols)),
    })
}

/// Compute the conjugation tables from the declared complement. Uniqueness
/// of the generator values is forced by cancellativity and asserted by the
/// lookup.
pub fn compute_alpha_beta(m: &MonoidPresentation, budget_limit: u64) -> Result<AlphaBetaTables> {
    let f = m.complement()?;
    let n = m.rank();
    let mut alpha = vec![None; n * n];
    let mut beta = vec![Gen(0); n * n];
    let mut factors = vec![Vec::new(); n * n];
    for s in m.symbols.gens() {
        for t in m.symbols.gens() {
            let idx = s.index() * n + t.index();
            if s == t {
                alpha[idx] = Some(s);
                beta[idx] = s;
                continue;
            }
            let fst = f.get(s, t).ok_or_else(|| {
                Error::ComplementEntryMissing(m.symbols.name(s).into(), m.symbols.name(t).into())
            })?;
            factors[idx] = fst.0.clone();
            let mut b = Budget::new(budget_limit);
            let lcm = PositiveWord::single(s).concat(fst);
            let z = residue(fst, &lcm, f, &mut b)?;
            beta[idx] = generator_or_error(&z, m, &mut b)?;
            // alpha exists only where s strictly divides t.
            let ws = PositiveWord::single(s);
            let wt = PositiveWord::single(t);
            if left_divides(&ws, &wt, f, &mut b)? {
                let r = residue(&ws, &wt, f, &mut b)?;
                let candidate = r.concat(&ws);
                alpha[idx] = Some(generator_or_error(&candidate, m, &mut b)?);
            }
        }
    }
    Ok(AlphaBetaTables { n, alpha, beta, factors })
}

/// The translation family of relations, one per (u, {s,t}) with s != t:
/// `u * f_n(s,t) * ... * f_1(s,t) * s = u * f_n(t,s) * ... * f_1(t,s) * t`.
/// Emitted lazily: there are |S|^2 (|S|-1) / 2 of them and most are
/// redundant, so consumers stream them.
pub fn translation_family<'a>(
    m: &'a MonoidPresentation,
    tables: &'a AlphaBetaTables,
) -> impl Iterator<Item = QuandleRelation> + 'a {
    let gens: Vec<Gen> = m.symbols.gens().collect();
    let pairs: Vec<(Gen, Gen)> = gens
        .iter()
        .flat_map(|&s| gens.iter().map(move |&t| (s, t)))
        .filter(|&(s, t)| s < t)
        .collect();
    let side = move |u: Gen, s: Gen, t: Gen| -> QuandleTerm {
        let mut term = QuandleTerm::gen(u);
        for &g in tables.factors_at(s, t).iter().rev() {
            term.push(g, Sign::Pos);
        }
        term.push(s, Sign::Pos);
        term
    };
    gens.into_iter().flat_map(move |u| {
        let side = side;
        pairs
            .clone()
            .into_iter()
            .map(move |(s, t)| QuandleRelation::new(side(u, s, t), side(u, t, s)))
    })
}

/// Emit the right-route presentation: the comparable-pair family, the
/// selector family `beta(s,t) * f_n(s,t) * ... * f_1(s,t) = s`, and the
/// translation family. On an atom generating set the first family is empty.
pub fn emit_right_presentation(
    m: &MonoidPresentation,
    tables: &AlphaBetaTables,
) -> QuandlePresentation {
    let mut q = QuandlePresentation::new(m.symbols.clone());
    for s in m.symbols.gens() {
        for t in m.symbols.gens() {
            if s == t {
                continue;
            }
            if let Some(a) = tables.alpha_at(s, t) {
                // alpha(s,t) * s = t
                q.relations.push(QuandleRelation::new(
                    QuandleTerm::new(a, vec![Letter::pos(s)]),
                    QuandleTerm::gen(t),
                ));
            }
            let mut lhs = QuandleTerm::gen(tables.beta_at(s, t));
            for &g in tables.factors_at(s, t).iter().rev() {
                lhs.push(g, Sign::Pos);
            }
            q.relations.push(QuandleRelation::new(lhs, QuandleTerm::gen(s)));
        }
    }
    q.relations.extend(translation_family(m, tables));
    q
}

/// Left-route data, derived from the mirror presentation: the left
/// selector letters and the left alpha/beta values for each ordered pair.
#[derive(Debug, Clone)]
pub struct LeftTables {
    n: usize,
    pub alpha: Vec<Option<Gen>>,
    pub beta: Vec<Gen>,
    pub factors: Vec<Vec<Gen>>,
}

impl LeftTables {
    pub fn alpha_at(&self, s: Gen, t: Gen) -> Option<Gen> {
        self.alpha[s.index() * self.n + t.index()]
    }
    pub fn beta_at(&self, s: Gen, t: Gen) -> Gen {
        self.beta[s.index() * self.n + t.index()]
    }
    pub fn factors_at(&self, s: Gen, t: Gen) -> &[Gen] {
        &self.factors[s.index() * self.n + t.index()]
    }
}

/// Compute the left-side tables on the mirror: left residues, lcms and
/// divisibility in the monoid are right ones in its mirror image.
pub fn compute_left_tables(m: &MonoidPresentation, budget_limit: u64) -> Result<LeftTables> {
    let mirror = m.mirror();
    if mirror.complement.is_none() {
        return Err(Error::MissingComplement);
    }
    let mt = compute_alpha_beta(&mirror, budget_limit)?;
    let n = m.rank();
    let mut alpha = vec![None; n * n];
    let mut beta = vec![Gen(0); n * n];
    let mut factors = vec![Vec::new(); n * n];
    for s in m.symbols.gens() {
        for t in m.symbols.gens() {
            let idx = s.index() * n + t.index();
            // left residue s/t mirrors to t \ s, so tables transpose.
            beta[idx] = mt.beta_at(t, s);
            alpha[idx] = mt.alpha_at(t, s);
            let mut w: Vec<Gen> = mt.factors_at(t, s).to_vec();
            w.reverse();
            factors[idx] = w;
        }
    }
    Ok(LeftTables { n, alpha, beta, factors })
}

/// Emit the left-route presentation:
/// `s * t = alpha(s,t)` when t right-divides s,
/// `t * f_n(s,t) * ... * f_1(s,t) = beta(s,t)`, and
/// `u * t * f_n(s,t) * ... * f_1(s,t) = u * s * f_n(t,s) * ... * f_1(t,s)`.
pub fn emit_left_presentation(m: &MonoidPresentation, budget_limit: u64) -> Result<QuandlePresentation> {
    let tables = compute_left_tables(m, budget_limit)?;
    let mut q = QuandlePresentation::new(m.symbols.clone());
    for s in m.symbols.gens() {
        for t in m.symbols.gens() {
            if s == t {
                continue;
            }
            if let Some(a) = tables.alpha_at(s, t) {
                q.relations.push(QuandleRelation::new(
                    QuandleTerm::new(s, vec![Letter::pos(t)]),
                    QuandleTerm::gen(a),
                ));
            }
            let mut lhs = QuandleTerm::gen(t);
            for &g in tables.factors_at(s, t).iter().rev() {
                lhs.push(g, Sign::Pos);
            }
            q.relations.push(QuandleRelation::new(
                lhs,
                QuandleTerm::gen(tables.beta_at(s, t)),
            ));
        }
    }
    let gens: Vec<Gen> = m.symbols.gens().collect();
    for &u in &gens {
        for &s in &gens {
            for &t in &gens {
                if s < t {
                    let side = |s: Gen, t: Gen| {
                        let mut term = QuandleTerm::gen(u);
                        term.push(t, Sign::Pos);
                        for &g in tables.factors_at(s, t).iter().rev() {
                            term.push(g, Sign::Pos);
                        }
                        term
                    };
                    q.relations.push(QuandleRelation::new(side(s, t), side(t, s)));
                }
            }
        }
    }
    Ok(q)
}

/// Closed-form presentation for a spherical Artin system: for each ordered
/// pair, `(s*t)_m = s` when `m_st` is even and `(t*s)_m = s` when odd.
/// Infinite entries are refused unless explicitly allowed; with
/// `conjectural` set, pairs without a relation simply contribute nothing,
/// and the output carries no correctness claim beyond the spherical case.
pub fn artin_closed_form(
    gen_names: &[String],
    coxeter: &[Vec<usize>],
    conjectural: bool,
) -> Result<QuandlePresentation> {
    let symbols = Symbols::from_names(gen_names.iter().cloned())?;
    let n = symbols.len();
    let mut q = QuandlePresentation::new(symbols);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = coxeter[i][j];
            if m == 0 {
                if conjectural {
                    continue;
                }
                return Err(Error::Unsupported(
                    "non-spherical system: infinite entry without the conjectural flag".into(),
                ));
            }
            if m < 2 {
                return Err(Error::Unsupported("off-diagonal entries must be >= 2".into()));
            }
            let s = Gen(i as u32);
            let t = Gen(j as u32);
            let (first, second) = if m % 2 == 0 { (s, t) } else { (t, s) };
            let mut lhs = QuandleTerm::gen(first);
            for k in 1..m {
                lhs.push(if k % 2 == 1 { second } else { first }, Sign::Pos);
            }
            q.relations.push(QuandleRelation::new(lhs, QuandleTerm::gen(s)));
        }
    }
    Ok(q)
}
