//! Every family instance against direct evaluation and enumeration.

use tn_spectrum::families::{a1_values, a1_witness, a2_witness, s1_witness, s2_witness};
use tn_spectrum::{EnumerationConstraints, FamilyGroup, FamilyId, Oracle};

#[test]
fn every_instance_up_to_80_is_sound() {
    for family in FamilyId::all() {
        let mut seen = 0;
        for n in 1..=80 {
            let Some(range) = family.range_at(n) else {
                continue;
            };
            for lam in range.values() {
                let w = family.construct(n, lam).unwrap_or_else(|e| panic!("{family} {n} {lam}: {e}"));
                assert_eq!(w.partition.n(), u64::from(n));
                assert_eq!(w.partition.eigenvalue().unwrap().get(), lam, "{family} n={n}");
                assert_eq!(w.compact.expand(), w.partition);
                seen += 1;
            }
        }
        assert!(seen > 0, "{family} never applies");
    }
}

#[test]
fn range_edges_reject() {
    for family in FamilyId::all() {
        for n in family.n_min()..=80 {
            if let Some(r) = family.range_at(n) {
                assert!(family.construct(n, r.lo - 1).is_err());
                assert!(family.construct(n, r.hi + 1).is_err());
            }
        }
        assert!(family.range_at(family.n_min()).is_some(), "{family}");
        assert!((1..family.n_min()).all(|n| family.range_at(n).is_none()), "{family}");
    }
}

#[test]
fn first_part_bounds_31_to_80() {
    let mut tight = std::collections::BTreeMap::new();
    for n in 31..=80u32 {
        for family in FamilyId::all() {
            let Some(range) = family.range_at(n) else {
                continue;
            };
            let group = family.group();
            for lam in range.values() {
                let p = family.construct(n, lam).unwrap().partition;
                let c = p.conjugate();
                assert!(group.admits_first_part(n, p.first_part()), "{family} {n} {lam}");
                assert!(group.admits_first_part(n, c.first_part()), "{family} {n} {lam} conj");
                let slack = 2 * p.first_part().max(c.first_part()) as i64 - i64::from(n);
                let e = tight.entry(group).or_insert(i64::MIN);
                *e = (*e).max(slack);
            }
        }
    }
    // each bound is attained
    assert_eq!(tight[&FamilyGroup::S1], 1);
    assert_eq!(tight[&FamilyGroup::A2], 3);
    assert!(tight[&FamilyGroup::S2] <= 2 && tight[&FamilyGroup::A1] <= 2);
}

#[test]
fn witnesses_lie_in_enumerated_spectrum() {
    let oracle = Oracle::new();
    for n in 19..=45u32 {
        let s = oracle.spectrum(n, EnumerationConstraints::none()).unwrap();
        for family in FamilyId::all() {
            if let Some(range) = family.range_at(n) {
                for lam in range.values() {
                    assert!(s.contains(lam));
                    let _ = family.construct(n, lam).unwrap();
                }
            }
        }
    }
}

#[test]
fn cell_drivers() {
    let r = s1_witness(31, 7).unwrap();
    assert!(r.verified);
    let r = s2_witness(31, 20).unwrap();
    assert!(r.verified && r.family().starts_with("S2_Case"));
    for a in a1_values(31) {
        assert!(a1_witness(31, a).unwrap().verified);
    }
    assert!(a1_witness(31, 30).is_err());
    for a in 25..=31 {
        assert!(a2_witness(31, a).unwrap().verified);
    }
    assert!(a2_witness(31, 24).is_err());
}
