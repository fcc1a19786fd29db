//! Finite-model invariants: conjugation terms evaluate to actual
//! conjugation, and bounded enumeration produces tables that agree with
//! coloring counts computed straight from the presentation.

use dehnq_core::catalog;
use dehnq_core::finite::enumerate::{enumerate_quandle, EnumerateOutcome};
use dehnq_core::finite::group::FiniteGroup;
use dehnq_core::finite::hom::{hom_count, hom_count_tables};
use dehnq_core::finite::quandle::{conjugation_dehn_quandle, core_quandle};
use dehnq_core::term::conjugation_to_term;
use dehnq_core::words::{Gen, GroupWord, Letter, Sign};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn conjugation_terms_evaluate_to_conjugation_in_symmetric_groups() {
    let mut rng = StdRng::seed_from_u64(718);
    for n in [3usize, 4, 5] {
        let group = FiniteGroup::symmetric(n).unwrap();
        let images: Vec<usize> = group.generator_elements().to_vec();
        let rank = images.len();
        for _ in 0..200 {
            let len = rng.gen_range(0..8);
            let word = GroupWord(
                (0..len)
                    .map(|_| Letter {
                        gen: Gen(rng.gen_range(0..rank) as u32),
                        sign: if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg },
                    })
                    .collect(),
            );
            let base = Gen(rng.gen_range(0..rank) as u32);
            let term = conjugation_to_term(base, &word);
            // Evaluate the term by conjugation.
            let mut x = images[term.base.index()];
            for l in &term.tail {
                let y = images[l.gen.index()];
                x = match l.sign {
                    Sign::Pos => group.conjugate(x, y),
                    Sign::Neg => group.mul(group.mul(group.inv(y), x), y),
                };
            }
            // Compare against w * base * w^-1 computed in the group.
            let w = group.eval_word(&images, &word);
            let direct = group.mul(group.mul(w, images[base.index()]), group.inv(w));
            assert_eq!(x, direct);
        }
    }
}

#[test]
fn enumerated_tables_agree_with_presented_coloring_counts() {
    for n in [3usize, 4, 5, 6] {
        let q = catalog::core_quandle_presentation(n);
        let EnumerateOutcome::Closed { quandle, generator_images } =
            enumerate_quandle(&q, 600, 5_000_000).unwrap()
        else {
            panic!("core presentation {n} did not close");
        };
        assert!(quandle.check_axioms().is_ok());
        for t in (1..=6).map(core_quandle) {
            assert_eq!(
                hom_count(&q, &t),
                hom_count_tables(&quandle, &generator_images, &t),
                "n = {n}, target order {}",
                t.order()
            );
        }
    }
}

#[test]
fn enumerated_tables_satisfy_their_relations_and_generate() {
    // The link quandle of the Hopf link is the trivial quandle on its two
    // meridian generators; the trefoil's, by contrast, is infinite.
    let q = catalog::link_quandle_presentation(2, 2);
    let EnumerateOutcome::Closed { quandle, generator_images } =
        enumerate_quandle(&q, 600, 5_000_000).unwrap()
    else {
        panic!("Hopf link quandle did not close");
    };
    assert_eq!(quandle.order(), 2);
    for rel in &q.relations {
        assert_eq!(
            quandle.eval_term(&generator_images, &rel.lhs),
            quandle.eval_term(&generator_images, &rel.rhs)
        );
    }
    let trefoil = catalog::link_quandle_presentation(2, 3);
    assert!(matches!(
        enumerate_quandle(&trefoil, 80, 200_000).unwrap(),
        EnumerateOutcome::Exhausted { .. }
    ));
}

#[test]
fn dihedral_reflection_closure_matches_the_group_theoretic_picture() {
    // The conjugation closure of one transposition in the symmetric group
    // has one element per transposition.
    for n in [3usize, 4, 5] {
        let g = FiniteGroup::symmetric(n).unwrap();
        let seed = g.generator_elements()[0];
        let q = conjugation_dehn_quandle(&g, &[seed]);
        assert_eq!(q.order(), n * (n - 1) / 2);
        assert!(q.check_axioms().is_ok());
    }
}
