use codezeta::bounds::{g_poly, h_from_g, h_poly, subcode_average_identity};
use codezeta::code::{dual_code, weight_distribution};
use codezeta::enumerator::{macwilliams, normalize};
use codezeta::fixtures::random_code;
use codezeta::matroid::{check_greene, clifford_check, classify, rank_gen_poly, CliffordMode, CodeClass};
use codezeta::zeta::{check_functional_eq, zeta_of};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn code_params() -> impl Strategy<Value = (u32, usize, usize, u64)> {
    (prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]), 3usize..9, any::<u64>())
        .prop_flat_map(|(q, n, seed)| (Just(q), Just(n), 1..n, Just(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn macwilliams_is_an_involution((q, n, k, seed) in code_params()) {
        let c = random_code(&mut ChaCha8Rng::seed_from_u64(seed), q, n, k);
        let wd = weight_distribution(&c).unwrap();
        let dual = macwilliams(&wd).unwrap();
        prop_assert_eq!(&dual.counts, &weight_distribution(&dual_code(&c).unwrap()).unwrap().counts);
        prop_assert_eq!(macwilliams(&dual).unwrap().counts, wd.counts);
    }

    #[test]
    fn greene_holds_over_every_field((q, n, k, seed) in code_params()) {
        let c = random_code(&mut ChaCha8Rng::seed_from_u64(seed), q, n, k);
        let wd = weight_distribution(&c).unwrap();
        prop_assert!(check_greene(&wd, &rank_gen_poly(&c).unwrap()));
    }

    #[test]
    fn zeta_duality_and_g((q, n, k, seed) in code_params()) {
        let c = random_code(&mut ChaCha8Rng::seed_from_u64(seed), q, n, k);
        let wd = weight_distribution(&c).unwrap();
        prop_assume!(wd.d >= 2 && wd.d_dual >= 2);
        let pc = zeta_of(&wd).unwrap();
        let pd = zeta_of(&macwilliams(&wd).unwrap()).unwrap();
        prop_assert!(check_functional_eq(&pc, &pd));
        prop_assert!(check_functional_eq(&pd, &pc));
        let a = normalize(&wd);
        let g = g_poly(&a, wd.d_dual).unwrap();
        prop_assert!(wd.d as i64 - 2 <= g.degree());
        prop_assert!(subcode_average_identity(&a, wd.d_dual));
        for c in 1..=3usize.min(n) {
            let h = h_poly(&a, c, wd.d_dual).unwrap();
            prop_assert_eq!(h.h, h_from_g(&g, c));
        }
    }

    #[test]
    fn clifford_holds_when_dual_is_contained((q, n, k, seed) in code_params()) {
        let c = random_code(&mut ChaCha8Rng::seed_from_u64(seed), q, n, k);
        let r = clifford_check(&c, CliffordMode::Exhaustive).unwrap();
        if matches!(classify(&c).unwrap(), CodeClass::SelfDual | CodeClass::ContainsDual) {
            prop_assert!(r.passed());
        }
    }
}
