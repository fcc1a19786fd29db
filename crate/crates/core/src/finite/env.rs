//! The enveloping group of a presented quandle, and evaluation of group
//! presentations in finite quotients.

use crate::finite::group::{FiniteGroup, Perm};
use crate::presentation::{GroupPresentation, QuandlePresentation};
use crate::term::QuandleTerm;
use crate::words::{free_reduce, GroupWord, Symbols};

/// The conjugation word of a term: `w base w^-1` with `w` the reversed tail.
pub fn term_to_word(t: &QuandleTerm) -> GroupWord {
    let w = t.conjugator();
    let mut out = w.clone();
    out.0.push(crate::words::Letter::pos(t.base));
    out = out.concat(&w.inverse());
    free_reduce(&out)
}

/// Enveloping group presentation: one generator per quandle generator and,
/// for each relation, the relator equating the conjugation words of its two
/// sides. Trivial relators are dropped.
pub fn enveloping_presentation(q: &QuandlePresentation) -> GroupPresentation {
    let symbols = Symbols::from_names(q.symbols.names().iter().cloned())
        .expect("generator names are already distinct");
    let mut relators = Vec::new();
    for rel in &q.relations {
        let r = free_reduce(&term_to_word(&rel.lhs).concat(&term_to_word(&rel.rhs).inverse()));
        if !r.is_empty() {
            relators.push(r);
        }
    }
    GroupPresentation { symbols, relators }
}

/// Canonical form of a relator as an unoriented cyclic word: cyclically
/// reduce, then take the least rotation over the word and its inverse.
pub fn canonical_relator(r: &GroupWord) -> GroupWord {
    let mut w = free_reduce(r).0;
    while w.len() >= 2 && w[0] == w[w.len() - 1].inverse() {
        w = w[1..w.len() - 1].to_vec();
        w = free_reduce(&GroupWord(w)).0;
    }
    if w.is_empty() {
        return GroupWord::empty();
    }
    let mut best: Option<Vec<crate::words::Letter>> = None;
    for candidate in [w.clone(), GroupWord(w.clone()).inverse().0] {
        for shift in 0..candidate.len() {
            let mut rot = candidate[shift..].to_vec();
            rot.extend_from_slice(&candidate[..shift]);
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    GroupWord(best.unwrap())
}

/// Whether the given generator images define a homomorphism from the
/// presented group into the finite group: every relator maps to identity.
pub fn verify_group_hom(g: &GroupPresentation, group: &FiniteGroup, images: &[usize]) -> bool {
    g.relators
        .iter()
        .all(|r| group.eval_word(images, r) == group.identity())
}

/// Convenience: turn generator image permutations into a closed group plus
/// element indices.
pub fn group_from_images(images: Vec<Perm>) -> crate::error::Result<(FiniteGroup, Vec<usize>)> {
    let degree = images.first().map_or(1, |p| p.degree());
    let group = FiniteGroup::from_generators(degree, images.clone())?;
    let idx = images
        .iter()
        .map(|p| group.element_index(p).expect("generators are in their closure"))
        .collect();
    Ok((group, idx))
}
