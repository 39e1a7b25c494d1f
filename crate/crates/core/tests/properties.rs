use std::collections::HashSet;

use gproj_core::oracle::{random_algebras, RandomSpec};
use gproj_core::{fixtures, verify, Analysis, MonomialAlgebra};
use proptest::prelude::*;

fn random_algebra(seed: u64) -> MonomialAlgebra {
    random_algebras(seed, 1, &RandomSpec::default()).remove(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_is_subpath_closed(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        for p in alg.basis() {
            for a in 0..=p.len() {
                for b in a..=p.len() {
                    prop_assert!(alg.is_nonzero(&p.slice(a, b)));
                }
            }
        }
    }

    #[test]
    fn one_step_closure(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        for p in alg.basis() {
            for &a in alg.quiver().outgoing(p.target()) {
                let pa = p.concat(&alg.quiver().arrow_path(a)).unwrap();
                prop_assert_eq!(alg.is_nonzero(&pa), !alg.path_is_zero(&pa));
            }
        }
    }

    #[test]
    fn relations_are_minimal(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        let f = alg.relations();
        for (k, r) in f.iter().enumerate() {
            for (l, s) in f.iter().enumerate() {
                prop_assert!(k == l || !r.is_subpath_of(s));
            }
        }
    }

    #[test]
    fn successor_is_injective(seed in any::<u64>()) {
        let an = Analysis::new(random_algebra(seed)).unwrap();
        let recs = &an.perfect().records;
        let succ: HashSet<_> = recs.iter().map(|r| &r.successor).collect();
        let pred: HashSet<_> = recs.iter().map(|r| &r.predecessor).collect();
        prop_assert_eq!(succ.len(), recs.len());
        prop_assert_eq!(pred.len(), recs.len());
    }

    #[test]
    fn oracle_suite_passes(seed in any::<u64>()) {
        let an = Analysis::new(random_algebra(seed)).unwrap();
        for r in verify::verify_analysis(&an) {
            prop_assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn dimension_counts(m in 1usize..8, n in 1usize..6) {
        prop_assert_eq!(fixtures::loop_algebra(m).dimension(), m + 1);
        prop_assert_eq!(fixtures::nakayama(n, m).dimension(), n * (m + 1));
    }
}
