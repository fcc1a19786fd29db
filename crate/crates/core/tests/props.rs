//! Property tests over randomly generated words and files.

use dehnq_core::format;
use dehnq_core::words::{free_reduce, Gen, GroupWord, Letter, Sign};

use proptest::prelude::*;

fn letters(rank: u32, len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0..rank, prop::bool::ANY).prop_map(|(g, s)| Letter {
            gen: Gen(g),
            sign: if s { Sign::Pos } else { Sign::Neg },
        }),
        0..len,
    )
}

proptest! {
    #[test]
    fn free_reduction_is_idempotent(ls in letters(4, 24)) {
        let w = GroupWord(ls);
        let once = free_reduce(&w);
        prop_assert_eq!(free_reduce(&once).0, once.0);
    }

    #[test]
    fn inverse_commutes_with_reduction(ls in letters(4, 24)) {
        let w = GroupWord(ls);
        prop_assert_eq!(free_reduce(&w.inverse()).0, free_reduce(&w).inverse().0);
    }

    #[test]
    fn concat_with_inverse_reduces_to_nothing(ls in letters(4, 16)) {
        let w = GroupWord(ls);
        prop_assert!(free_reduce(&w.concat(&w.inverse())).is_empty());
    }
}

fn gen_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn quandle_files_roundtrip(
        rank in 1usize..4,
        rels in prop::collection::vec(
            (prop::collection::vec((0u32..4, prop::bool::ANY), 0..5), 0u32..4,
             prop::collection::vec((0u32..4, prop::bool::ANY), 0..5), 0u32..4),
            0..6,
        ),
    ) {
        use dehnq_core::term::{QuandleRelation, QuandleTerm};
        let symbols = dehnq_core::Symbols::from_names(gen_names(rank)).unwrap();
        let mut file = format::PresentationFile::new(format::Kind::Quandle, "t", symbols);
        for (ltail, lbase, rtail, rbase) in rels {
            let clamp = |g: u32| Gen(g % rank as u32);
            let mk = |base: u32, tail: &[(u32, bool)]| {
                QuandleTerm::new(
                    clamp(base),
                    tail.iter()
                        .map(|&(g, s)| Letter {
                            gen: clamp(g),
                            sign: if s { Sign::Pos } else { Sign::Neg },
                        })
                        .collect(),
                )
            };
            file.quandle_relations.push(QuandleRelation::new(
                mk(lbase, &ltail),
                mk(rbase, &rtail),
            ));
        }
        let text = format::print(&file);
        let parsed = format::parse(&text).unwrap();
        prop_assert_eq!(parsed, file);
    }
}
