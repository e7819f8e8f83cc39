use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use seqlab::analysis::{expression_cycle, product_of_factorials, s_family, SKind};
use seqlab::concat::{g_addon, GeneratorSpec};
use seqlab::dynamics::{census, MapSpec};
use seqlab::numerics::smarandache_s_u64;
use seqlab::verify::{run_suite, CheckStatus, Suite};

fn brute_s(n: u64) -> u64 {
    let (mut f, mut m) = (1 % n, 1);
    while f != 0 {
        m += 1;
        f = f * m % n;
    }
    m
}

#[test]
fn s_family_matches_direct_construction() {
    for n in 2..=2000u64 {
        let s = brute_s(n);
        let q = |a: u64, b: u64| BigRational::new(BigInt::from(a), BigInt::from(b));
        let big = BigUint::from(n);
        assert_eq!(s_family(SKind::S1, &big).unwrap(), q(1, s));
        assert_eq!(s_family(SKind::S2, &big).unwrap(), q(s, n));
        assert_eq!(s_family(SKind::S3, &big).unwrap(), q(n, s));
    }
}

#[test]
fn factorial_products_exhaustive_to_a_million() {
    // reachable[n]: n is a product of factorials ≥ 2!, built bottom-up
    const N: usize = 1_000_000;
    let facts: Vec<usize> = (2..)
        .map(|k| (1..=k).product())
        .take_while(|&f| f <= N)
        .collect();
    let mut reachable = vec![false; N + 1];
    reachable[1] = true;
    for n in 2..=N {
        reachable[n] = facts.iter().any(|&f| n % f == 0 && reachable[n / f]);
    }
    for (n, &expect) in reachable.iter().enumerate().skip(1) {
        let got = product_of_factorials(&BigUint::from(n));
        assert_eq!(got.is_some(), expect, "n = {n}");
    }
}

#[test]
fn addon_terms_are_string_concatenations() {
    let odd = g_addon(&GeneratorSpec::Odd, 30).unwrap();
    let mut s = String::new();
    for (i, t) in odd.iter().enumerate() {
        s.push_str(&(2 * i + 1).to_string());
        assert_eq!(t.to_string(), s);
    }
    let custom = g_addon(
        &GeneratorSpec::Custom(vec![7u32.into(), 0u32.into(), 11u32.into()]),
        3,
    )
    .unwrap();
    assert_eq!(
        custom,
        vec![BigUint::from(7u32), 70u32.into(), 7011u32.into()]
    );
}

#[test]
fn expression_values() {
    let v =
        |xs: &[u32]| expression_cycle(&xs.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>());
    assert_eq!(v(&[3, 2]).unwrap(), BigUint::from(17u32));
    assert_eq!(v(&[2, 3, 5]).unwrap(), BigUint::from(8u32 + 243 + 25));
    assert!(v(&[6, 9, 15]).is_err());
}

#[test]
fn census_report_survives_json() {
    let rep = census(&MapSpec::reverse_subtract(4).unwrap(), 1000, 9999).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    let back = serde_json::from_str(&text).unwrap();
    assert_eq!(rep, back);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["map"]["kind"], "reverse-subtract");
    assert_eq!(v["domain"]["lo"], 1000);
    assert_eq!(v["classes"][0]["cycle"][0], 90);
}

#[test]
fn oracle_suite_passes() {
    let report = run_suite(Suite::Oracles, &Default::default()).unwrap();
    let bad: Vec<_> = report.failures().map(|c| c.id.clone()).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(report.checks.iter().all(|c| c.status == CheckStatus::Pass));
}

#[test]
fn kempner_agrees_with_factorial_oracle() {
    for n in 1..=5000u64 {
        assert_eq!(smarandache_s_u64(n).unwrap(), brute_s(n), "n = {n}");
    }
}
