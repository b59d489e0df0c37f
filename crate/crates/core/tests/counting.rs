use primeperm::count::{permanent_dp, permanent_ryser};
use primeperm::{
    build_adjacency, construct_prime_sum_permutation, count_solutions, enumerate_solutions,
    is_valid_solution, CountConfig, Method, PrimeSieve,
};
use proptest::prelude::*;

/// Counts of prime-sum permutations for n = 1..=22, computed once with an
/// independent script (trial-division primality, plain backtracking for
/// n <= 12 and a dictionary-based subset DP beyond) and frozen here.
const ORACLE_COUNTS: [u64; 22] = [
    1, 1, 1, 4, 1, 9, 4, 36, 36, 676, 400, 9216, 3600, 44100, 36100, 1223236, 583696, 14130081,
    5461569, 158180929, 96275344, 5486661184,
];

fn trial_division(m: usize) -> bool {
    m >= 2
        && (2..)
            .take_while(|d| d * d <= m)
            .all(|d| !m.is_multiple_of(d))
}

/// Test-side oracle: every permutation of 1..=n via recursion, primality by
/// trial division. Shares no code with the library.
fn brute_force(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let k = cur.len() + 1;
        if k > n {
            out.push(cur.clone());
            return;
        }
        for j in 1..=n {
            if !used[j] && trial_division(k + j) {
                used[j] = true;
                cur.push(j);
                go(n, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

#[test]
fn all_methods_match_brute_force() {
    let config = CountConfig::default();
    let strict = CountConfig {
        strict_all_permutations: true,
        ..CountConfig::default()
    };
    for n in 1..=9 {
        let sieve = PrimeSieve::for_problem_size(n).unwrap();
        let expected = brute_force(n);
        let listed: Vec<Vec<usize>> = enumerate_solutions(n, &sieve, None)
            .unwrap()
            .map(|p| p.into_image())
            .collect();
        assert_eq!(listed, expected, "n = {n}");
        for (method, cfg) in [
            (Method::Naive, &config),
            (Method::Naive, &strict),
            (Method::Dp, &config),
            (Method::Ryser, &config),
        ] {
            let c = count_solutions(n, method, &sieve, cfg).unwrap();
            assert_eq!(
                c.to_string(),
                expected.len().to_string(),
                "{method} n = {n}"
            );
        }
    }
}

#[test]
fn dp_and_ryser_match_frozen_counts() {
    let config = CountConfig::default();
    let sieve = PrimeSieve::for_problem_size(22).unwrap();
    for (i, &expected) in ORACLE_COUNTS.iter().enumerate() {
        let n = i + 1;
        let dp = count_solutions(n, Method::Dp, &sieve, &config).unwrap();
        assert_eq!(dp.to_string(), expected.to_string(), "dp n = {n}");
        if n <= 20 {
            let ryser = count_solutions(n, Method::Ryser, &sieve, &config).unwrap();
            assert_eq!(ryser, dp, "ryser n = {n}");
        }
    }
}

#[test]
fn enumeration_is_sorted_valid_and_complete() {
    let sieve = PrimeSieve::for_problem_size(12).unwrap();
    for n in 1..=12 {
        let all: Vec<_> = enumerate_solutions(n, &sieve, None).unwrap().collect();
        assert_eq!(all.len() as u64, ORACLE_COUNTS[n - 1], "n = {n}");
        assert!(all.windows(2).all(|w| w[0].image() < w[1].image()));
        assert!(all.iter().all(|p| is_valid_solution(p, &sieve).unwrap()));
        let witness = construct_prime_sum_permutation(n, &sieve).unwrap();
        assert!(all.contains(&witness), "witness missing for n = {n}");
    }
}

#[test]
fn enumeration_prefix_under_limit() {
    let sieve = PrimeSieve::for_problem_size(12).unwrap();
    let full: Vec<_> = enumerate_solutions(12, &sieve, None)
        .unwrap()
        .take(50)
        .collect();
    let limited: Vec<_> = enumerate_solutions(12, &sieve, Some(50)).unwrap().collect();
    assert_eq!(full, limited);
}

#[test]
fn enumeration_reaches_large_n() {
    let sieve = PrimeSieve::for_problem_size(300).unwrap();
    let first: Vec<_> = enumerate_solutions(300, &sieve, Some(3)).unwrap().collect();
    assert_eq!(first.len(), 3);
    assert!(first.iter().all(|p| is_valid_solution(p, &sieve).unwrap()));
    assert!(first.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn partitioning_does_not_change_counts() {
    let sieve = PrimeSieve::for_problem_size(18).unwrap();
    for n in [1, 7, 12, 18] {
        let adj = build_adjacency(n, &sieve).unwrap();
        let reference = permanent_dp(&adj, 1 << 14).unwrap();
        for chunk in [1, 3, 64, 1000, usize::MAX / 2] {
            assert_eq!(
                permanent_dp(&adj, chunk).unwrap(),
                reference,
                "dp n={n} chunk={chunk}"
            );
        }
        for chunk in [1u64, 5, 256, 1 << 20] {
            assert_eq!(
                permanent_ryser(&adj, chunk).unwrap(),
                reference,
                "ryser n={n} chunk={chunk}"
            );
        }
    }
}

#[test]
fn counts_are_positive() {
    let config = CountConfig::default();
    let sieve = PrimeSieve::for_problem_size(22).unwrap();
    for n in 0..=22 {
        let c = count_solutions(n, Method::Auto, &sieve, &config).unwrap();
        assert!(c.value() >= &1u32.into(), "n = {n}");
    }
}

proptest! {
    #[test]
    fn adjacency_is_symmetric(n in 1usize..200) {
        let sieve = PrimeSieve::for_problem_size(n).unwrap();
        prop_assert!(build_adjacency(n, &sieve).unwrap().is_symmetric());
    }

    #[test]
    fn sieve_matches_trial_division(limit in 0usize..3000) {
        let sieve = PrimeSieve::new(limit).unwrap();
        for m in 0..=limit {
            prop_assert_eq!(sieve.is_prime(m).unwrap(), trial_division(m));
        }
    }

    #[test]
    fn primes_below_steps_at_primes(bound in 0usize..5000) {
        let sieve = PrimeSieve::new(5000).unwrap();
        let here = sieve.count_primes_below(bound).unwrap();
        let next = sieve.count_primes_below(bound + 1).unwrap();
        prop_assert_eq!(next - here, usize::from(trial_division(bound)));
    }

    #[test]
    fn witness_is_valid_involution(n in 0usize..5000) {
        let sieve = PrimeSieve::for_problem_size(n).unwrap();
        let w = construct_prime_sum_permutation(n, &sieve).unwrap();
        prop_assert!(w.is_involution());
        prop_assert!((1..=n).all(|k| trial_division(k + w.apply(k))));
    }
}
