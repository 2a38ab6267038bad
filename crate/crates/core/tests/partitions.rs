//! Eigenvalue identities: exhaustive for small n, sampled beyond.

use proptest::prelude::*;
use tn_spectrum::partition::compact_eigenvalue_ones;
use tn_spectrum::{
    compact_eigenvalue, eigenvalue_via_head, expand, partitions, CompactPartition,
    EnumerationConstraints, Error, Partition,
};

fn binom2(n: u64) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

#[test]
fn exhaustive_identities_up_to_12() {
    for n in 1..=12u32 {
        let top = binom2(u64::from(n));
        for p in partitions(n, EnumerationConstraints::none()) {
            let v = p.eigenvalue().unwrap().get();
            let c = p.conjugate();
            assert_eq!(c.eigenvalue().unwrap().get(), -v, "{p}");
            assert_eq!(c.conjugate(), p);
            assert_eq!(c.n(), p.n());
            if p.is_self_conjugate() {
                assert_eq!(v, 0, "{p}");
            }
            assert!(v.abs() <= top);
            let extreme = p == Partition::row(n) || p == Partition::column(n);
            assert_eq!(v.abs() == top, extreme, "{p}");
            if p.len() >= 2 {
                let h = eigenvalue_via_head(p.first_part(), &p.tail(), p.n()).unwrap();
                assert_eq!(h.get(), v);
            }
        }
    }
}

#[test]
fn eigenvalue_spot_values() {
    let cases: &[(&[u32], i64)] = &[
        (&[4, 1, 1], 3),
        (&[3, 3], 3),
        (&[1, 1, 1, 1], -6),
        (&[2, 2], 0),
        (&[5], 10),
        (&[3, 2, 1], 0),
    ];
    for (parts, want) in cases {
        assert_eq!(Partition::new(parts.to_vec()).unwrap().eigenvalue().unwrap(), *want);
    }
}

#[test]
fn invalid_inputs() {
    assert_eq!(Partition::new(vec![]), Err(Error::EmptyPartition));
    assert!(matches!(
        Partition::new(vec![1, 3]),
        Err(Error::NotNonincreasing { index: 1, .. })
    ));
    assert!(matches!(
        Partition::new(vec![2, 0]),
        Err(Error::NonPositivePart { index: 1 })
    ));
    assert!(matches!(
        CompactPartition::new(vec![3, 1], 2, 0),
        Err(Error::NotNonincreasing { .. })
    ));
    assert!(matches!(
        eigenvalue_via_head(2, &Partition::new(vec![3]).unwrap(), 5),
        Err(Error::HeadTooSmall { .. })
    ));
    assert!(matches!(
        eigenvalue_via_head(3, &Partition::new(vec![2]).unwrap(), 6),
        Err(Error::SumMismatch { .. })
    ));
}

#[test]
fn overflow_guard() {
    let p = Partition::new(vec![1; 100_001]).unwrap();
    assert!(matches!(p.eigenvalue(), Err(Error::Overflow { .. })));
}

/// A compact partition of some n in 1..=30: a random head trimmed to fit,
/// then as many twos as drawn, then ones for the rest.
fn compact_strategy() -> impl Strategy<Value = (Vec<u32>, u32, u32)> {
    (1u32..=30, prop::collection::vec(2u32..=12, 0..5), 0u32..=15).prop_map(|(n, mut head, t2)| {
        head.sort_unstable_by(|a, b| b.cmp(a));
        while head.iter().sum::<u32>() > n {
            head.remove(0);
        }
        let rest = n - head.iter().sum::<u32>();
        let t2 = t2.min(rest / 2);
        (head, t2, rest - 2 * t2)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn compact_matches_direct((head, t2, t1) in compact_strategy()) {
        let sum: u32 = head.iter().sum::<u32>() + 2 * t2 + t1;
        let compact = CompactPartition::new(head.clone(), t2, t1).unwrap();
        let full = expand(&compact);
        prop_assert_eq!(full.n(), u64::from(sum));
        prop_assert_eq!(compact_eigenvalue(&compact).unwrap(), full.eigenvalue().unwrap());
        if t2 == 0 {
            let h = Partition::with_empty(head).unwrap();
            prop_assert_eq!(compact_eigenvalue_ones(&h, t1).unwrap(), full.eigenvalue().unwrap());
        }
    }

    #[test]
    fn conjugation_negates(parts in prop::collection::vec(1u32..=40, 1..40)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        let c = p.conjugate();
        prop_assert_eq!(c.eigenvalue().unwrap().get(), -p.eigenvalue().unwrap().get());
        prop_assert_eq!(c.conjugate(), p);
    }
}
