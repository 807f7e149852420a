mod common;

use common::random::*;
use hpk::classify::wbar;
use hpk::loops::loop_groupoid;
use hpk::sgpd::pi0_sgpd;
use hpk::sset::{pi0_sset, validate_sset};
use hpk::two_gpd::{pi0_2gpd, validate_2gpd};
use hpk::Budget;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn budget() -> Budget {
    Budget::new(50_000_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wbar_is_a_simplicial_set_with_the_same_components(seed in any::<u64>()) {
        let a = random_sgpd(&mut ChaCha8Rng::seed_from_u64(seed), 2);
        prop_assert!(a.violations().is_empty());
        let w = wbar(&a, 3, &budget()).unwrap();
        prop_assert!(validate_sset(&w.sset).is_empty());
        prop_assert_eq!(w.sset.level_size(0), a.objects().len());
        prop_assert_eq!(pi0_sset(&w.sset).unwrap().count, pi0_sgpd(&a).count);
        // level one is every arrow of level zero
        prop_assert_eq!(w.sset.level_size(1), a.level(0).arrow_count());
    }

    #[test]
    fn loop_groupoids_satisfy_the_identities(seed in any::<u64>()) {
        let x = random_sset(&mut ChaCha8Rng::seed_from_u64(seed), 3);
        prop_assert!(validate_sset(&x).is_empty());
        let g = loop_groupoid(&x, 2).unwrap();
        prop_assert!(g.violations().is_empty(), "{:?}", g.violations());
        prop_assert_eq!(g.level(0).objects.len(), x.level_size(0));
        prop_assert_eq!(g.pi0().count, pi0_sset(&x).unwrap().count);
        if g.is_finite() {
            prop_assert!(g.to_finite().unwrap().violations().is_empty());
        }
    }

    #[test]
    fn nerves_are_simplicial_sets(seed in any::<u64>()) {
        let k = random_2gpd(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(validate_2gpd(&k).is_empty());
        let nk = hpk::two_gpd::nerve(&k, 3, &budget()).unwrap();
        prop_assert!(validate_sset(&nk.sset).is_empty());
        prop_assert_eq!(pi0_sset(&nk.sset).unwrap().count, pi0_2gpd(&k).count);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let x = random_sset(&mut ChaCha8Rng::seed_from_u64(seed), 3);
        let back = hpk::sset::TruncatedSimplicialSet::from_json(&x.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), x.to_json());
    }
}
