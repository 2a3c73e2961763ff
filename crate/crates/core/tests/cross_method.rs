use std::thread;

use bernoulli_core::irregular::{irregular_report, is_regular_mod_p};
use bernoulli_core::numeric::primes_up_to;
use bernoulli_core::*;
use proptest::prelude::*;

#[test]
fn zeta_method_matches_recurrence_to_two_hundred() {
    let t = bernoulli_table(200);
    for two_k in (2..=200u32).step_by(2) {
        assert_eq!(
            bernoulli_zeta(two_k.into()).unwrap(),
            t[two_k],
            "2k = {two_k}"
        );
    }
}

#[test]
fn independent_indices_in_parallel_threads() {
    let t = bernoulli_table(160);
    let results: Vec<(u32, Rational)> = thread::scope(|s| {
        let handles: Vec<_> = (140..=160u32)
            .step_by(4)
            .map(|n| s.spawn(move || (n, bernoulli_zeta(n.into()).unwrap())))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for (n, b) in results {
        assert_eq!(b, t[n]);
    }
}

#[test]
fn fast_and_exact_regularity_agree_to_five_hundred() {
    let exact = irregular_report(500);
    let fast: Vec<Regularity> = primes_up_to(500)
        .into_iter()
        .filter(|&p| p >= 5)
        .map(|p| is_regular_mod_p(p).unwrap())
        .filter(|r| !r.is_regular())
        .collect();
    assert_eq!(fast, exact);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn double_sum_matches_recurrence(n in 0u32..=60) {
        prop_assert_eq!(bernoulli_double_sum(n), bernoulli_recurrence(n));
    }

    #[test]
    fn reconstruction_survives_sub_margin_noise(two_k in (1u64..=40).prop_map(|k| 2 * k), noise in -1000i64..1000) {
        // perturb by noise/(4000 D), well inside the 1/(2D) margin
        let exact = bernoulli_recurrence(two_k as u32);
        let den = sc_denominator(two_k).unwrap();
        let shift = Rational::new(noise.into(), den * 4000);
        let approx = fixed_from_rational(&(&exact + shift), 160);
        prop_assert_eq!(reconstruct_from_approx(two_k, &approx).unwrap(), exact);
    }

    #[test]
    fn power_sums_are_consistent_across_conventions(n in 0u64..500, r in 0u32..15) {
        prop_assert_eq!(power_sum_inclusive(n, r).unwrap(), power_sum_exclusive(n + 1, r).unwrap());
    }
}
