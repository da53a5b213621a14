use num_bigint::BigInt;
use proptest::prelude::*;

use spin_kostka::cli::{poly_from_json, poly_to_json, SpinRecord};
use spin_kostka::straighten::{straighten_to_vacuum, AscentChoice, RewriteRule, Straightener};
use spin_kostka::{IntVector, LaurentPoly, Partition, SpinKostkaEngine, StrictPartition};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..12, any::<i64>(), 0u32..3), 0..6)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c, k)| (e, BigInt::from(c).pow(k + 1)))))
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..6).prop_map(Partition::from_unsorted)
}

fn strict_partition() -> impl Strategy<Value = StrictPartition> {
    prop::collection::btree_set(1u32..8, 0..4)
        .prop_map(|s| StrictPartition::new(s.into_iter().rev().collect()).expect("distinct parts"))
}

/// A strict ξ and some μ of the same weight, weight at most 8.
fn pair() -> impl Strategy<Value = (StrictPartition, Partition)> {
    (1u32..=8).prop_flat_map(|n| {
        let xis = StrictPartition::all(n);
        let mus = Partition::all(n);
        (prop::sample::select(xis), prop::sample::select(mus))
    })
}

proptest! {
    #[test]
    fn poly_json_roundtrip(p in poly()) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn record_json_roundtrip(xi in strict_partition(), mu in partition(6), p in poly()) {
        let r = SpinRecord { xi, mu, poly: p };
        prop_assert_eq!(SpinRecord::parse(&r.to_json().to_string()).unwrap(), r);
    }

    #[test]
    fn partition_text_roundtrip(mu in partition(9)) {
        prop_assert_eq!(mu.to_string().parse::<Partition>().unwrap(), mu);
    }

    #[test]
    fn straightening_is_confluent(v in prop::collection::vec(-3i64..8, 0..6)) {
        let nu = IntVector(v);
        let reference = straighten_to_vacuum(&nu);
        let rightmost = Straightener::with_strategy(AscentChoice::Rightmost, RewriteRule::Primitive);
        prop_assert_eq!(&*rightmost.straighten(&nu), &reference);
    }

    #[test]
    fn spin_kostka_divisibility_and_sign((xi, mu) in pair()) {
        let k = SpinKostkaEngine::new().spin_kostka(&xi, &mu);
        let two_l = BigInt::from(1) << xi.length();
        prop_assert!(k.div_exact_int(&two_l).is_some());
        prop_assert!(k.all_coeffs_nonnegative());
        let at_minus_one = k.eval_int(-1).unwrap();
        let expected = if xi.as_partition() == &mu { two_l } else { BigInt::from(0) };
        prop_assert_eq!(at_minus_one, expected.into());
    }
}
