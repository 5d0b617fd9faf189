mod common;

use ellipstab::{parse, CurveKind};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn display_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 4, 64);
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e.clone());
        let spaced = text.replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }

    #[test]
    fn rank_matches_evaluation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 3, 16);
        prop_assert_eq!(e.evaluate(CurveKind::Nodal).unwrap().rank(), e.rank());
    }

    #[test]
    fn garbage_never_panics(s in "[a-zA-Z0-9(),*+ -]{0,24}") {
        let _ = parse(&s);
    }
}

#[test]
fn error_points_at_offending_token() {
    let err = parse("wedge(O(1)+O(-1),1)").unwrap_err();
    assert_eq!(err.position, 10);
    assert_eq!(err.found, "'+'");
    assert!(err.render("wedge(O(1)+O(-1),1)").contains('^'));
}
