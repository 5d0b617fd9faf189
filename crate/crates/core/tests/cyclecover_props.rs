mod common;

use ellipstab::{
    is_semistable, is_unstable_deg0, pushforward_bundle, wedge_cycles, wedge_is_semistable,
    MultiDegree, Q,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn balanced(max_n: usize) -> impl Strategy<Value = MultiDegree> {
    (2..=max_n).prop_flat_map(|n| {
        let all = MultiDegree::all_balanced(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semistability_is_dihedral_invariant(d in balanced(8), by in 0usize..8) {
        let s = is_semistable(&d).unwrap();
        prop_assert_eq!(is_semistable(&d.rotate(by % d.len())).unwrap(), s);
        prop_assert_eq!(is_semistable(&d.reverse()).unwrap(), s);
        prop_assert_eq!(is_semistable(&d.negate()).unwrap(), s);
    }

    #[test]
    fn wedge_cycles_partition_subsets(d in balanced(8), k in 1usize..8) {
        let n = d.len();
        prop_assume!(k < n);
        let cycles = wedge_cycles(&d, k).unwrap();
        let count: usize = cycles.iter().map(|c| c.members.len()).sum();
        let mut binom = 1usize;
        for i in 0..k {
            binom = binom * (n - i) / (i + 1);
        }
        prop_assert_eq!(count, binom);
        for c in &cycles {
            prop_assert_eq!(c.degrees.iter().sum::<i64>() * n as i64 % c.members.len() as i64, 0);
        }
    }

    #[test]
    fn wedge_duality(d in balanced(8), k in 1usize..8) {
        let n = d.len();
        prop_assume!(k < n);
        prop_assert_eq!(
            wedge_is_semistable(&d, k).unwrap(),
            wedge_is_semistable(&d.negate(), n - k).unwrap()
        );
    }

    #[test]
    fn wedge_criterion_matches_bundles(d in balanced(5), k in 1usize..5, seed in any::<u64>()) {
        let n = d.len();
        prop_assume!(k < n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gluings: Vec<Q> = (0..n).map(|_| common::nonzero_rational(&mut rng)).collect();
        let v = pushforward_bundle(&d, &gluings).unwrap();
        prop_assert_eq!(v.degree(), 0);
        let oracle = !is_unstable_deg0(&v.wedge(k), seed).unwrap();
        prop_assert_eq!(oracle, wedge_is_semistable(&d, k).unwrap());
    }
}
