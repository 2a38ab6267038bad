//! Brute-force enumeration against independent references.

use num_bigint::BigUint;
use tn_spectrum::{cayley_spectrum, partition_count, partitions, EnumerationConstraints, Error, Oracle};

// p(n) for n = 0..=40.
const PARTITION_NUMBERS: [u64; 41] = [
    1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627, 792,
    1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604, 6842, 8349, 10143, 12310, 14883, 17977,
    21637, 26015, 31185, 37338,
];

#[test]
fn counts_match_reference() {
    for (n, &want) in PARTITION_NUMBERS.iter().enumerate() {
        assert_eq!(partition_count(n), BigUint::from(want), "p({n})");
        let enumerated = partitions(n as u32, EnumerationConstraints::none()).count() as u64;
        assert_eq!(enumerated, want, "enumerated p({n})");
    }
    assert_eq!(partition_count(100), BigUint::from(190_569_292u64));
    assert_eq!(partition_count(48), BigUint::from(147_273u64));
    assert_eq!(partition_count(10_000).to_string().len(), 107);
}

#[test]
fn small_spectra() {
    let oracle = Oracle::new();
    let frozen: &[(u32, &[i64])] = &[
        (1, &[0]),
        (2, &[-1, 1]),
        (3, &[-3, 0, 3]),
        (4, &[-6, -2, 0, 2, 6]),
        (5, &[-10, -5, -2, 0, 2, 5, 10]),
        (6, &[-15, -9, -5, -3, 0, 3, 5, 9, 15]),
    ];
    for (n, values) in frozen {
        let s = oracle.spectrum(*n, EnumerationConstraints::none()).unwrap();
        assert_eq!(s.values, *values, "n={n}");
        let numeric = cayley_spectrum(*n).unwrap();
        assert_eq!(numeric.values, *values, "cayley n={n}");
    }
}

#[test]
fn symmetric_with_extremes() {
    let oracle = Oracle::new();
    for n in 1..=30u32 {
        let s = oracle.spectrum(n, EnumerationConstraints::none()).unwrap();
        let top = i64::from(n) * i64::from(n - 1) / 2;
        assert!(s.is_symmetric(), "n={n}");
        assert_eq!((s.min(), s.max()), (Some(-top), Some(top)));
        for (v, p) in s.witnesses.as_ref().unwrap() {
            assert_eq!(p.eigenvalue().unwrap().get(), *v);
        }
    }
}

#[test]
fn restricted_is_subset() {
    let oracle = Oracle::new();
    for n in 1..=20u32 {
        let full = oracle.spectrum(n, EnumerationConstraints::none()).unwrap();
        for m in 1..=n {
            let c = EnumerationConstraints::max_first_part(m);
            let r = oracle.spectrum(n, c).unwrap();
            assert!(r.values.iter().all(|&v| full.contains(v)));
            assert!(partitions(n, c).all(|p| p.first_part() <= m));
        }
        let r = oracle.spectrum(n, EnumerationConstraints::max_first_part(n)).unwrap();
        assert_eq!(r.values, full.values);
    }
}

#[test]
fn contains_and_witness() {
    let oracle = Oracle::new();
    let w = oracle.contains(6, 3).unwrap().unwrap();
    assert_eq!(w.eigenvalue().unwrap(), 3);
    assert!(w.parts() == [4, 1, 1] || w.parts() == [3, 3]);
    assert_eq!(oracle.contains(6, 4).unwrap(), None);
    assert_eq!(oracle.contains(6, 100).unwrap(), None);
    assert_eq!(
        oracle.contains(51, 0),
        Err(Error::OracleLimitExceeded { n: 51, limit: 50 })
    );
    assert!(Oracle::with_limit(67).is_err());
}

#[test]
fn deterministic_output() {
    let a = serde_json::to_string(&*Oracle::new().spectrum(18, EnumerationConstraints::none()).unwrap()).unwrap();
    let b = serde_json::to_string(&*Oracle::new().spectrum(18, EnumerationConstraints::none()).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn gap_below_quadratic_segment_at_48_is_filled() {
    let oracle = Oracle::new();
    let s = oracle.spectrum(48, EnumerationConstraints::none()).unwrap();
    assert!((49..=73).all(|k| s.contains(k)));
    assert!((74..=496).all(|k| s.contains(k)));
}
