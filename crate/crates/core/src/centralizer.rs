//! The centralizer route: a presentation of the Dehn quandle of a group
//! from a group presentation together with centralizer generating sets and
//! conjugator words on a spanning tree of each conjugacy class.

use crate::error::{Error, Result};
use crate::finite::env::group_from_images;
use crate::finite::group::Perm;
use crate::presentation::{GroupPresentation, QuandlePresentation};
use crate::term::{conjugation_to_term, QuandleRelation};
use crate::words::{Gen, GroupWord};

/// Generating sets `A_s` for the centralizers, indexed by generator.
/// Entries are required only for class roots.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CentralizerData {
    pub words: Vec<Vec<GroupWord>>,
}

impl CentralizerData {
    pub fn new(rank: usize) -> CentralizerData {
        CentralizerData { words: vec![Vec::new(); rank] }
    }
}

/// Conjugacy structure on the generators: spanning-tree edges `(t, s)` with
/// a word `f(t,s)` conjugating the parent `s` to the child `t`. The
/// remaining conjugators of the theorem are recovered by composing along
/// tree paths, so the cocycle identities hold by construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConjugacyData {
    pub edges: Vec<(Gen, Gen, GroupWord)>,
}

impl ConjugacyData {
    /// Partition the generators into classes following the edges; returns
    /// `(class_of, roots)` where the root of a class is its unique member
    /// that is never a child.
    pub fn classes(&self, rank: usize) -> Result<(Vec<usize>, Vec<Gen>)> {
        let mut parent: Vec<usize> = (0..rank).collect();
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut is_child = vec![false; rank];
        for (t, s, _) in &self.edges {
            if is_child[t.index()] {
                return Err(Error::MissingData(format!(
                    "generator {} is a child of two tree edges",
                    t.0
                )));
            }
            is_child[t.index()] = true;
            let (a, b) = (find(&mut parent, t.index()), find(&mut parent, s.index()));
            if a == b {
                return Err(Error::MissingData("conjugator edges contain a cycle".into()));
            }
            parent[a] = b;
        }
        let mut class_ids: Vec<usize> = Vec::new();
        let mut class_of = vec![usize::MAX; rank];
        let mut roots: Vec<Gen> = Vec::new();
        for g in 0..rank {
            let r = find(&mut parent, g);
            let id = match class_ids.iter().position(|&c| c == r) {
                Some(i) => i,
                None => {
                    class_ids.push(r);
                    roots.push(Gen(0)); // patched below
                    class_ids.len() - 1
                }
            };
            class_of[g] = id;
            if !is_child[g] {
                roots[id] = Gen(g as u32);
            }
        }
        Ok((class_of, roots))
    }
}

/// One finite quotient: named generator images as permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpec {
    pub name: String,
    pub images: Vec<Perm>,
}

/// Emit the Dehn quandle presentation: one relation per (generator,
/// relator) pair, one per centralizer word at each class root, and one per
/// spanning-tree edge.
pub fn emit_centralizer_presentation(
    g: &GroupPresentation,
    cent: &CentralizerData,
    conj: &ConjugacyData,
) -> Result<QuandlePresentation> {
    let rank = g.rank();
    if cent.words.len() != rank {
        return Err(Error::MissingData("centralizer table rank mismatch".into()));
    }
    let (_, roots) = conj.classes(rank)?;
    let mut q = QuandlePresentation::new(g.symbols.clone());
    for s in g.symbols.gens() {
        for r in &g.relators {
            q.relations.push(QuandleRelation::new(
                conjugation_to_term(s, r),
                crate::term::QuandleTerm::gen(s),
            ));
        }
    }
    for &root in &roots {
        let ws = &cent.words[root.index()];
        if ws.is_empty() {
            return Err(Error::MissingData(format!(
                "no centralizer generating set for class representative {}",
                g.symbols.name(root)
            )));
        }
        for w in ws {
            q.relations.push(QuandleRelation::new(
                conjugation_to_term(root, w),
                crate::term::QuandleTerm::gen(root),
            ));
        }
    }
    for (t, s, f) in &conj.edges {
        q.relations.push(QuandleRelation::new(
            conjugation_to_term(*s, f),
            crate::term::QuandleTerm::gen(*t),
        ));
    }
    Ok(q)
}

/// Per-quotient outcome of checking the theorem hypotheses in a finite
/// image. A failed relator is an error (the images are not a homomorphism);
/// failed conjugator or centralizer checks are reported entries.
#[derive(Debug, Clone)]
pub struct QuotientCheck {
    pub quotient: String,
    pub conjugators: Vec<((Gen, Gen), bool)>,
    pub centralizer_words: Vec<((Gen, usize), bool)>,
}

impl QuotientCheck {
    pub fn all_ok(&self) -> bool {
        self.conjugators.iter().all(|(_, ok)| *ok)
            && self.centralizer_words.iter().all(|(_, ok)| *ok)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub quotients: Vec<QuotientCheck>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.quotients.iter().all(|q| q.all_ok())
    }
}

/// Check, in each supplied finite quotient, that relators die, that each
/// tree conjugator conjugates its parent to its child, and that each
/// centralizer word commutes with its generator.
pub fn verify_conjugacy_data(
    g: &GroupPresentation,
    cent: &CentralizerData,
    conj: &ConjugacyData,
    quotients: &[QuotientSpec],
) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for spec in quotients {
        if spec.images.len() != g.rank() {
            return Err(Error::MissingData(format!(
                "quotient {} must supply one image per generator",
                spec.name
            )));
        }
        let (group, idx) = group_from_images(spec.images.clone())?;
        for r in &g.relators {
            if group.eval_word(&idx, r) != group.identity() {
                return Err(Error::RelatorViolated {
                    quotient: spec.name.clone(),
                    relator: format!("{}", r.display(&g.symbols)),
                });
            }
        }
        let mut check = QuotientCheck {
            quotient: spec.name.clone(),
            conjugators: Vec::new(),
            centralizer_words: Vec::new(),
        };
        for (t, s, f) in &conj.edges {
            let fw = group.eval_word(&idx, f);
            let conj_img = group.mul(group.mul(fw, idx[s.index()]), group.inv(fw));
            check
                .conjugators
                .push(((*t, *s), conj_img == idx[t.index()]));
        }
        for (gidx, ws) in cent.words.iter().enumerate() {
            for (wi, w) in ws.iter().enumerate() {
                let img = group.eval_word(&idx, w);
                let s_img = idx[gidx];
                let commutes = group.mul(img, s_img) == group.mul(s_img, img);
                check.centralizer_words.push(((Gen(gidx as u32), wi), commutes));
            }
        }
        report.quotients.push(check);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::group::FiniteGroup;
    use crate::words::{Letter, Symbols};

    fn gw(syms: &Symbols, spec: &[(&str, crate::words::Sign)]) -> GroupWord {
        GroupWord(
            spec.iter()
                .map(|(n, s)| Letter { gen: syms.lookup(n).unwrap(), sign: *s })
                .collect(),
        )
    }

    fn braid3_group() -> (GroupPresentation, CentralizerData, ConjugacyData) {
        use crate::words::Sign::{Neg, Pos};
        let symbols = Symbols::from_names(["s1", "s2"]).unwrap();
        let mut g = GroupPresentation::new(symbols.clone());
        g.relators.push(gw(
            &symbols,
            &[("s1", Pos), ("s2", Pos), ("s1", Pos), ("s2", Neg), ("s1", Neg), ("s2", Neg)],
        ));
        let mut cent = CentralizerData::new(2);
        cent.words[0] = vec![
            gw(&symbols, &[("s1", Pos)]),
            gw(&symbols, &[("s2", Pos), ("s1", Pos), ("s1", Pos), ("s2", Pos)]),
        ];
        let conj = ConjugacyData {
            edges: vec![(
                symbols.lookup("s2").unwrap(),
                symbols.lookup("s1").unwrap(),
                gw(&symbols, &[("s1", Pos), ("s2", Pos)]),
            )],
        };
        (g, cent, conj)
    }

    #[test]
    fn braid3_emits_the_expected_relation_count() {
        let (g, cent, conj) = braid3_group();
        let q = emit_centralizer_presentation(&g, &cent, &conj).unwrap();
        // 2 generators x 1 relator + 2 centralizer words + 1 tree edge.
        assert_eq!(q.relations.len(), 5);
    }

    #[test]
    fn braid3_data_verifies_in_s3() {
        let (g, cent, conj) = braid3_group();
        let images = FiniteGroup::transposition_images(3).unwrap();
        let spec = QuotientSpec { name: "s3".into(), images };
        let report = verify_conjugacy_data(&g, &cent, &conj, &[spec]).unwrap();
        assert!(report.all_ok());
    }

    #[test]
    fn corrupted_conjugator_is_reported() {
        use crate::words::Sign::Pos;
        let (g, cent, mut conj) = braid3_group();
        // Wrong conjugator: s2 s1 does not conjugate s1 to s2.
        conj.edges[0].2 = gw(&g.symbols, &[("s2", Pos), ("s1", Pos)]);
        let images = FiniteGroup::transposition_images(3).unwrap();
        let spec = QuotientSpec { name: "s3".into(), images };
        let report = verify_conjugacy_data(&g, &cent, &conj, &[spec]).unwrap();
        assert!(!report.all_ok());
    }
}
