//! Brute force, the series solver and the closed forms must agree.

use coloured_dyck::colours::count_coloured_bruteforce;
use coloured_dyck::enumeration::*;
use coloured_dyck::paths::{count_family, enumerate_family};
use coloured_dyck::structures::{t_path_oracle, OracleLimits};
use coloured_dyck::{ColourSystem, Family};
use num_bigint::BigUint;

fn ubig(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

fn series(system: &ColourSystem, order: usize) -> Vec<BigUint> {
    master_coefficients(&system.weights(order).unwrap(), order)
}

/// Closed form for the coloured count at `n`, where one exists.
fn closed_form(system: &ColourSystem, n: usize) -> BigUint {
    match system {
        ColourSystem::Catalan => count_catalan_coloured(n),
        ColourSystem::BoundedAscent(m) => count_bounded(n, *m),
        ColourSystem::Fibonacci(m) => count_fibonacci(n, *m),
        ColourSystem::FibonacciFree => count_little_schroeder(n),
        ColourSystem::Schroeder => count_schroeder_coloured(n),
        ColourSystem::Trivial => count_bounded(n, 1),
        ColourSystem::Custom(_) => unreachable!(),
    }
}

#[test]
fn triple_agreement_up_to_eight() {
    for n in 0..=8 {
        let mut systems = vec![
            ColourSystem::Catalan,
            ColourSystem::FibonacciFree,
            ColourSystem::Schroeder,
            ColourSystem::Trivial,
        ];
        for m in [1, 2, 3, n.max(1)] {
            systems.push(ColourSystem::BoundedAscent(m));
            systems.push(ColourSystem::Fibonacci(m));
        }
        for system in &systems {
            let brute = count_coloured_bruteforce(n, system).unwrap();
            assert_eq!(series(system, 8)[n], brute, "{system} n={n}");
            assert_eq!(closed_form(system, n), brute, "{system} n={n}");
        }
    }
}

#[test]
fn published_prefixes() {
    let order = 9;
    assert_eq!(
        series(&ColourSystem::Catalan, order),
        ubig(&[1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675])
    );
    assert_eq!(
        series(&ColourSystem::FibonacciFree, order),
        ubig(&[1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049])
    );
    assert_eq!(
        series(&ColourSystem::Schroeder, order),
        ubig(&[1, 2, 10, 66, 498, 4066, 34970, 312066, 2862562, 26824386])
    );
    assert_eq!(
        series(&ColourSystem::Trivial, order),
        ubig(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862])
    );
}

#[test]
fn convention_regressions() {
    assert_eq!(count_fibonacci(2, 2), BigUint::from(3u32));
    assert_eq!(count_bounded(3, 2), BigUint::from(11u32));
    assert_eq!(count_fibonacci(3, 2), BigUint::from(10u32));
    assert_eq!(
        count_coloured_bruteforce(3, &ColourSystem::Fibonacci(2)).unwrap(),
        BigUint::from(10u32)
    );
}

#[test]
fn custom_weights_feed_the_series() {
    let ones = ColourSystem::Custom(ubig(&[1, 1, 1, 1, 1, 1]));
    assert_eq!(series(&ones, 5), ubig(&[1, 1, 2, 5, 14, 42]));
    // a_k = 0 for k ≥ 1: only the empty path
    let nothing = ColourSystem::Custom(ubig(&[1]));
    assert_eq!(series(&nothing, 5), ubig(&[1, 0, 0, 0, 0, 0]));
    for n in 0..=7 {
        let weights = ColourSystem::Custom(ubig(&[1, 2, 0, 3, 1, 4, 1, 5]));
        assert_eq!(
            series(&weights, 7)[n],
            count_coloured_bruteforce(n, &weights).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn family_sizes_match_closed_forms() {
    for n in 0..=8 {
        let listed = |f: Family| BigUint::from(enumerate_family(n, f).unwrap().count());
        assert_eq!(listed(Family::LittleSchroeder), count_little_schroeder(n));
        assert_eq!(listed(Family::TPath), count_schroeder_coloured(n));
        assert_eq!(
            count_family(n, Family::TPath).unwrap(),
            count_schroeder_coloured(n)
        );
        let free = if n == 0 { 1u64 } else { 1 << (n - 1) };
        assert_eq!(listed(Family::FibonacciFree), BigUint::from(free));
    }
    for n in 0..=6 {
        let oracle = t_path_oracle(n, &OracleLimits::default()).unwrap();
        assert_eq!(BigUint::from(oracle.len()), count_schroeder_coloured(n));
    }
}

#[test]
fn bounded_family_counts_equal_motzkin_style_filters() {
    // |M^m(n)| from the family walker against a plain filter of D(n)
    for n in 0..=8 {
        for m in 1..=4 {
            let filtered = coloured_dyck::paths::dyck_paths(n)
                .filter(|p| p.ascents().iter().all(|a| a.length <= m))
                .count();
            assert_eq!(
                count_family(n, Family::BoundedAscent(m)).unwrap(),
                BigUint::from(filtered)
            );
        }
    }
}
