//! Divisor enumeration for a declared Garside element, and the induced
//! permutation of its divisor set.

use crate::error::{Error, Result};
use crate::presentation::MonoidPresentation;
use crate::reversing::{left_divides, residue, words_equal_in_monoid, Budget};
use crate::words::PositiveWord;

const MAX_DIVISORS: usize = 4096;

/// Canonical representatives of the left divisors of the declared element,
/// together with the mirrored right-divisor set and whether the two agree.
#[derive(Debug, Clone)]
pub struct DivisorSet {
    pub left: Vec<PositiveWord>,
    pub right: Vec<PositiveWord>,
    pub left_equals_right: bool,
}

impl DivisorSet {
    pub fn count(&self) -> usize {
        self.left.len()
    }
}

/// Breadth-first closure of the left divisors of `delta`: extend known
/// divisors by one atom on the right and keep the shortlex-least word of
/// each new monoid element. The search is level by level, so representatives
/// are shortest words and, among those, lexicographically least.
fn left_divisor_reps(
    m: &MonoidPresentation,
    delta: &PositiveWord,
    budget_limit: u64,
) -> Result<Vec<PositiveWord>> {
    let f = m.complement()?;
    let mut reps: Vec<PositiveWord> = vec![PositiveWord::empty()];
    let mut level: Vec<PositiveWord> = vec![PositiveWord::empty()];
    while !level.is_empty() {
        // Candidates of the next length, shortlex-ordered for determinism.
        let mut candidates: Vec<PositiveWord> = Vec::new();
        for d in &level {
            for g in m.symbols.gens() {
                let mut c = d.clone();
                c.0.push(g);
                let mut b = Budget::new(budget_limit);
                if left_divides(&c, delta, f, &mut b)? {
                    candidates.push(c);
                }
            }
        }
        candidates.sort_by(|a, b| a.shortlex_cmp(b));
        let mut next: Vec<PositiveWord> = Vec::new();
        'cand: for c in candidates {
            for known in next.iter().chain(reps.iter()) {
                let mut b = Budget::new(budget_limit);
                if words_equal_in_monoid(&c, known, f, &mut b)? {
                    continue 'cand;
                }
            }
            next.push(c);
            if reps.len() + next.len() > MAX_DIVISORS {
                return Err(Error::NotClosed);
            }
        }
        reps.extend(next.iter().cloned());
        level = next;
    }
    Ok(reps)
}

/// Enumerate left and right divisors of the declared Garside element and
/// compare the two sets up to monoid equality.
pub fn enumerate_divisors(m: &MonoidPresentation, budget_limit: u64) -> Result<DivisorSet> {
    let delta = m
        .delta
        .as_ref()
        .ok_or_else(|| Error::MissingData("no Garside element declared".into()))?
        .clone();
    let left = left_divisor_reps(m, &delta, budget_limit)?;
    let mirror = m.mirror();
    if mirror.complement.is_none() {
        return Err(Error::MissingComplement);
    }
    let right_mirrored = left_divisor_reps(&mirror, &delta.reversed(), budget_limit)?;
    let right: Vec<PositiveWord> = right_mirrored.iter().map(|w| w.reversed()).collect();
    // Set comparison up to monoid equality, in the original presentation.
    let f = m.complement()?;
    let mut left_equals_right = left.len() == right.len();
    if left_equals_right {
        'outer: for l in &left {
            for r in &right {
                let mut b = Budget::new(budget_limit);
                if words_equal_in_monoid(l, r, f, &mut b)? {
                    continue 'outer;
                }
            }
            left_equals_right = false;
            break;
        }
    }
    Ok(DivisorSet { left, right, left_equals_right })
}

/// The divisor permutation `x -> (x\delta)\delta`. The input must divide
/// the declared element.
pub fn phi(
    x: &PositiveWord,
    m: &MonoidPresentation,
    budget_limit: u64,
) -> Result<PositiveWord> {
    let delta = m
        .delta
        .as_ref()
        .ok_or_else(|| Error::MissingData("no Garside element declared".into()))?;
    let f = m.complement()?;
    let mut b = Budget::new(budget_limit);
    if !left_divides(x, delta, f, &mut b)? {
        return Err(Error::NotADivisor {
            word: format!("{}", x.display(&m.symbols)),
        });
    }
    let r1 = residue(x, delta, f, &mut b)?;
    let r2 = residue(&r1, delta, f, &mut b)?;
    Ok(r2)
}

/// Map a word to the index of its representative in a divisor list.
pub fn divisor_index(
    w: &PositiveWord,
    divisors: &[PositiveWord],
    m: &MonoidPresentation,
    budget_limit: u64,
) -> Result<Option<usize>> {
    let f = m.complement()?;
    for (i, d) in divisors.iter().enumerate() {
        let mut b = Budget::new(budget_limit);
        if words_equal_in_monoid(w, d, f, &mut b)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::reversing::DEFAULT_BUDGET;

    #[test]
    fn torus_knot_delta_has_five_divisors() {
        let m = catalog::torus_knot_monoid(2, 3);
        let ds = enumerate_divisors(&m, DEFAULT_BUDGET).unwrap();
        assert_eq!(ds.count(), 5);
        assert!(ds.left_equals_right);
    }

    #[test]
    fn braid3_delta_has_six_divisors() {
        let m = catalog::braid_monoid(3);
        let ds = enumerate_divisors(&m, DEFAULT_BUDGET).unwrap();
        assert_eq!(ds.count(), 6);
        assert!(ds.left_equals_right);
    }

    #[test]
    fn single_generator_delta() {
        let m = catalog::braid_monoid(2);
        let ds = enumerate_divisors(&m, DEFAULT_BUDGET).unwrap();
        // delta = s1: divisors are the empty word and s1.
        assert_eq!(ds.count(), 2);
        assert!(ds.left_equals_right);
    }

    #[test]
    fn phi_examples() {
        let m = catalog::torus_knot_monoid(2, 3);
        let x = m.symbols.lookup("x").unwrap();
        let y = m.symbols.lookup("y").unwrap();
        // Delta is central here, so phi fixes the divisors.
        let f = m.complement().unwrap();
        let img = phi(&PositiveWord::single(x), &m, DEFAULT_BUDGET).unwrap();
        let mut b = Budget::new(DEFAULT_BUDGET);
        assert!(words_equal_in_monoid(&img, &PositiveWord::single(x), f, &mut b).unwrap());
        let img = phi(&PositiveWord::empty(), &m, DEFAULT_BUDGET).unwrap();
        assert!(img.is_empty());
        let _ = y;

        // In the braid monoid, phi swaps the two atoms.
        let m = catalog::braid_monoid(3);
        let f = m.complement().unwrap();
        let s1 = m.symbols.lookup("s1").unwrap();
        let s2 = m.symbols.lookup("s2").unwrap();
        let img = phi(&PositiveWord::single(s1), &m, DEFAULT_BUDGET).unwrap();
        let mut b = Budget::new(DEFAULT_BUDGET);
        assert!(words_equal_in_monoid(&img, &PositiveWord::single(s2), f, &mut b).unwrap());
    }

    #[test]
    fn phi_rejects_non_divisors() {
        let m = catalog::torus_knot_monoid(2, 3);
        let y = m.symbols.lookup("y").unwrap();
        let w = PositiveWord(vec![y, y, y, y]);
        assert!(matches!(
            phi(&w, &m, DEFAULT_BUDGET),
            Err(Error::NotADivisor { .. })
        ));
    }

    #[test]
    fn phi_is_a_bijection_fixing_ends() {
        for m in [catalog::braid_monoid(3), catalog::torus_knot_monoid(2, 3)] {
            let ds = enumerate_divisors(&m, DEFAULT_BUDGET).unwrap();
            let n = ds.count();
            let mut seen = vec![false; n];
            for d in &ds.left {
                let img = phi(d, &m, DEFAULT_BUDGET).unwrap();
                let idx = divisor_index(&img, &ds.left, &m, DEFAULT_BUDGET)
                    .unwrap()
                    .expect("phi image is a divisor");
                assert!(!seen[idx], "phi must be injective");
                seen[idx] = true;
            }
            assert!(seen.iter().all(|&b| b));
            // Fixes the empty word and delta.
            let img = phi(&PositiveWord::empty(), &m, DEFAULT_BUDGET).unwrap();
            assert!(img.is_empty());
            let delta = m.delta.clone().unwrap();
            let img = phi(&delta, &m, DEFAULT_BUDGET).unwrap();
            let f = m.complement().unwrap();
            let mut b = Budget::new(DEFAULT_BUDGET);
            assert!(words_equal_in_monoid(&img, &delta, f, &mut b).unwrap());
        }
    }
}
