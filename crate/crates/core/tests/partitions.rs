use std::collections::{BTreeMap, HashSet};

use pdo_core::identities::forms::{p1_product, p2_product, pdo_series};
use pdo_core::partitions::{
    bijection_forward, bijection_inverse, enumerate_pdo, p1_enumerated, p2_enumerated,
};
use pdo_core::{Error, Int, PdoPair, PdoPartition, Var};
use proptest::prelude::*;

fn pdo_partition() -> impl Strategy<Value = PdoPartition> {
    prop::collection::btree_map(0u32..12, (1u32..=6, any::<u32>()), 0..6).prop_map(|runs| {
        PdoPartition::from_runs(
            runs.into_iter()
                .map(|(i, (mult, seed))| (2 * i + 1, mult, seed % mult + 1)),
        )
        .unwrap()
    })
}

/// Partitions whose runs all have even length.
fn even_runs() -> impl Strategy<Value = PdoPartition> {
    prop::collection::btree_map(0u32..12, (1u32..=4, any::<u32>()), 0..6).prop_map(|runs| {
        PdoPartition::from_runs(
            runs.into_iter()
                .map(|(i, (half, seed))| (2 * i + 1, 2 * half, seed % (2 * half) + 1)),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn text_round_trip(lambda in pdo_partition()) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<PdoPartition>().unwrap(), lambda.clone());
        let json = serde_json::to_string(&lambda).unwrap();
        prop_assert_eq!(serde_json::from_str::<PdoPartition>(&json).unwrap(), lambda);
    }

    #[test]
    fn pair_round_trip(mu in pdo_partition(), nu in pdo_partition()) {
        let pair = PdoPair::new(mu, nu);
        prop_assert_eq!(pair.to_string().parse::<PdoPair>().unwrap(), pair.clone());
        let json = serde_json::to_string(&pair).unwrap();
        prop_assert_eq!(serde_json::from_str::<PdoPair>(&json).unwrap(), pair);
    }

    #[test]
    fn bijection_round_trip(lambda in even_runs()) {
        let pair = bijection_forward(&lambda).unwrap();
        let (s, ps) = (lambda.stats(), pair.stats());
        prop_assert_eq!(s.weight, 2 * ps.weight);
        prop_assert_eq!(s.ell_d, ps.ell_d_sum);
        prop_assert_eq!(ps.ell_r, 0);
        prop_assert_eq!(bijection_inverse(&pair).unwrap(), lambda);
    }

    #[test]
    fn inverse_round_trip(mu in pdo_partition(), nu in pdo_partition()) {
        let pair = PdoPair::new(mu, nu);
        match bijection_inverse(&pair) {
            Ok(lambda) => {
                prop_assert_eq!(pair.stats().ell_r, 0);
                prop_assert_eq!(lambda.stats().ell_d_odd, 0);
                prop_assert_eq!(bijection_forward(&lambda).unwrap(), pair);
            }
            Err(Error::SharedPartSize { size }) => {
                prop_assert!(pair.mu.contains_size(size) && pair.nu.contains_size(size));
            }
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn stats_agree_with_runs(lambda in pdo_partition()) {
        let s = lambda.stats();
        let weight: u64 = lambda.runs().map(|(size, r)| size as u64 * r.multiplicity as u64).sum();
        prop_assert_eq!(s.weight, weight);
        prop_assert_eq!(s.ell_d as usize, lambda.runs().count());
        prop_assert_eq!(s.ell_d_odd as usize, lambda.runs().filter(|(_, r)| r.multiplicity % 2 == 1).count());
    }
}

#[test]
fn parse_errors_name_the_problem() {
    for (text, needle) in [
        ("3+3+1'", "3"),
        ("3'+3'+1'", "3"),
        ("2'", "2"),
        ("x", "x"),
        ("3'++1'", "malformed"),
    ] {
        match text.parse::<PdoPartition>() {
            Err(Error::Parse(msg)) => assert!(msg.contains(needle), "{text}: {msg}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!("(1' | 3'".parse::<PdoPair>().is_err());
    assert!("(1' | 3' | 5')".parse::<PdoPair>().is_err());
}

#[test]
fn empty_sides_parse() {
    let pair: PdoPair = "( | 3')".parse().unwrap();
    assert!(pair.mu.is_empty());
    assert_eq!(pair.to_string(), "(∅ | 3')");
    assert_eq!("(∅|∅)".parse::<PdoPair>().unwrap(), PdoPair::default());
}

#[test]
fn parts_may_be_given_in_any_order() {
    let a: PdoPartition = "1'+3+1+3'".parse().unwrap();
    assert_eq!(a.to_string(), "3+3'+1'+1");
}

/// PDO(n) counted by a recurrence that shares no code with the enumerator.
fn pdo_dp(len: usize) -> Vec<u64> {
    let mut dp = vec![0u64; len];
    dp[0] = 1;
    for s in (1..len).step_by(2) {
        for n in (1..len).rev() {
            let mut t = 1;
            while t * s <= n {
                dp[n] += t as u64 * dp[n - t * s];
                t += 1;
            }
        }
    }
    dp
}

#[test]
fn enumeration_matches_recurrence_and_eta_quotient() {
    let dp = pdo_dp(30);
    let series = pdo_series(30).unwrap();
    for (n, want) in dp.iter().enumerate() {
        let listed = enumerate_pdo(n as u32);
        assert_eq!(listed.len() as u64, *want, "n = {n}");
        assert_eq!(series.coeff(n), Some(&Int::from(*want)));
        let distinct: HashSet<_> = listed.iter().collect();
        assert_eq!(distinct.len(), listed.len());
        assert!(listed.iter().all(|l| l.weight() == n as u64));
    }
}

#[test]
fn p1_specializes_to_pdo() {
    let p1 = p1_enumerated(30);
    let at_one = p1.eval(Var::X, &Int::ONE).eval(Var::Y, &Int::ONE);
    for (n, want) in pdo_dp(30).iter().enumerate() {
        assert_eq!(
            at_one.coeff(n).unwrap().as_constant(),
            Some(Int::from(*want))
        );
    }
}

#[test]
fn p1_matches_statistics_of_listed_partitions() {
    for n in 0..16u32 {
        let mut tally: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for lambda in enumerate_pdo(n) {
            let s = lambda.stats();
            *tally.entry((s.ell_d, s.ell_d_odd)).or_default() += 1;
        }
        let coeff = p1_enumerated(n as usize + 1)
            .coeff(n as usize)
            .unwrap()
            .clone();
        let terms: BTreeMap<(u32, u32), i64> = coeff
            .terms()
            .map(|(m, c)| ((m.dx, m.dy), c.to_i64().unwrap()))
            .collect();
        assert_eq!(terms, tally, "n = {n}");
    }
}

#[test]
fn p2_matches_listed_pairs() {
    for w in 0..10u32 {
        let mut tally: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for k in 0..=w {
            for mu in enumerate_pdo(k) {
                for nu in enumerate_pdo(w - k) {
                    let s = PdoPair::new(mu.clone(), nu).stats();
                    *tally.entry((s.ell_d_sum, 2 * s.ell_r)).or_default() += 1;
                }
            }
        }
        let coeff = p2_enumerated(w as usize + 1)
            .coeff(w as usize)
            .unwrap()
            .clone();
        let terms: BTreeMap<(u32, u32), i64> = coeff
            .terms()
            .map(|(m, c)| ((m.dx, m.dy), c.to_i64().unwrap()))
            .collect();
        assert_eq!(terms, tally, "w = {w}");
    }
}

#[test]
fn product_forms_low_order() {
    assert_eq!(p1_product(20).unwrap(), p1_enumerated(20));
    assert_eq!(p2_product(14).unwrap(), p2_enumerated(14));
}
