//! Brute-force ground truth: enumerate every partition of `n` and collect
//! the distinct eigenvalues.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{binom2, eigenvalue_of, Partition};

pub const DEFAULT_ORACLE_LIMIT: u32 = 50;

/// Hard ceiling for a configured oracle limit. `p(66)` is about 2.3 million
/// partitions, which takes seconds and a few hundred MB of witnesses.
pub const MAX_ORACLE_LIMIT: u32 = 66;

pub const MAX_COUNT_N: usize = 10_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumerationConstraints {
    pub max_first_part: Option<u32>,
    pub max_length: Option<u32>,
}

impl EnumerationConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn max_first_part(m: u32) -> Self {
        Self {
            max_first_part: Some(m),
            max_length: None,
        }
    }

    pub fn is_unconstrained(&self) -> bool {
        self.max_first_part.is_none() && self.max_length.is_none()
    }

    fn admits(&self, parts: &[u32]) -> bool {
        self.max_length.is_none_or(|l| parts.len() <= l as usize)
    }
}

/// Steps through partitions of `n` in reverse-lexicographic order without
/// allocating per step.
#[derive(Debug, Clone)]
pub struct PartitionCursor {
    parts: Vec<u32>,
    constraints: EnumerationConstraints,
    started: bool,
    done: bool,
}

impl PartitionCursor {
    pub fn new(n: u32, constraints: EnumerationConstraints) -> Self {
        let top = constraints.max_first_part.map_or(n, |m| m.min(n));
        let (parts, done) = if n == 0 {
            (Vec::new(), false)
        } else if top == 0 {
            (Vec::new(), true)
        } else {
            let mut parts = vec![top; (n / top) as usize];
            if !n.is_multiple_of(top) {
                parts.push(n % top);
            }
            (parts, false)
        };
        Self {
            parts,
            constraints,
            started: false,
            done,
        }
    }

    /// The next admitted partition, or `None` when exhausted.
    pub fn advance(&mut self) -> Option<&[u32]> {
        loop {
            if self.done {
                return None;
            }
            if self.started {
                self.step();
                if self.done {
                    return None;
                }
            }
            self.started = true;
            if self.constraints.admits(&self.parts) {
                return Some(&self.parts);
            }
        }
    }

    fn step(&mut self) {
        let Some(i) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return;
        };
        let mut rest = (self.parts.len() - i) as u32;
        self.parts[i] -= 1;
        let cap = self.parts[i];
        self.parts.truncate(i + 1);
        while rest >= cap {
            self.parts.push(cap);
            rest -= cap;
        }
        if rest > 0 {
            self.parts.push(rest);
        }
    }
}

/// Iterator form of [`PartitionCursor`].
#[derive(Debug, Clone)]
pub struct Partitions {
    cursor: PartitionCursor,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.cursor
            .advance()
            .map(|parts| Partition::with_empty(parts.to_vec()).expect("cursor yields partitions"))
    }
}

/// All partitions of `n` honoring `constraints`, in reverse-lexicographic
/// order, without an oracle-limit check.
pub fn partitions(n: u32, constraints: EnumerationConstraints) -> Partitions {
    Partitions {
        cursor: PartitionCursor::new(n, constraints),
    }
}

/// Exact `p(n)` by Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> BigUint {
    assert!(n <= MAX_COUNT_N, "partition_count supports n <= {MAX_COUNT_N}");
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::from(1u32));
    for i in 1..=n {
        let mut plus = BigUint::default();
        let mut minus = BigUint::default();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let bucket = if k % 2 == 1 { &mut plus } else { &mut minus };
            *bucket += &table[i - g1];
            if g2 <= i {
                *bucket += &table[i - g2];
            }
        }
        table.push(plus - minus);
    }
    table.swap_remove(n)
}

/// Distinct eigenvalues of `T_n`, optionally restricted by enumeration
/// constraints, with the first witness met for every value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSet {
    pub n: u32,
    pub values: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<i64, Partition>>,
}

impl SpectrumSet {
    pub fn contains(&self, k: i64) -> bool {
        self.values.binary_search(&k).is_ok()
    }

    pub fn witness(&self, k: i64) -> Option<&Partition> {
        self.witnesses.as_ref().and_then(|w| w.get(&k))
    }

    pub fn min(&self) -> Option<i64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.values.last().copied()
    }

    /// `v` present iff `-v` present.
    pub fn is_symmetric(&self) -> bool {
        self.values.iter().all(|&v| self.contains(-v))
    }

    pub fn without_witnesses(&self) -> SpectrumSet {
        SpectrumSet {
            n: self.n,
            values: self.values.clone(),
            witnesses: None,
        }
    }
}

fn compute_spectrum(n: u32, constraints: EnumerationConstraints) -> SpectrumSet {
    let mut witnesses: BTreeMap<i64, Partition> = BTreeMap::new();
    let mut cursor = PartitionCursor::new(n, constraints);
    while let Some(parts) = cursor.advance() {
        let value = eigenvalue_of(parts);
        witnesses
            .entry(value)
            .or_insert_with(|| Partition::with_empty(parts.to_vec()).expect("valid"));
    }
    SpectrumSet {
        n,
        values: witnesses.keys().copied().collect(),
        witnesses: Some(witnesses),
    }
}

/// Enumeration-backed spectrum queries with a per-`(n, constraints)` memo.
#[derive(Debug)]
pub struct Oracle {
    limit: u32,
    memo: Mutex<HashMap<(u32, EnumerationConstraints), Arc<SpectrumSet>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self {
            limit: DEFAULT_ORACLE_LIMIT,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_limit(limit: u32) -> Result<Self> {
        if limit == 0 || limit > MAX_ORACLE_LIMIT {
            return Err(Error::Config(format!(
                "oracle limit must be in 1..={MAX_ORACLE_LIMIT}, got {limit}"
            )));
        }
        Ok(Self {
            limit,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn limit(&self) -> u32 {
        self.limit
    }

    fn check(&self, n: u32) -> Result<()> {
        if n > self.limit {
            Err(Error::OracleLimitExceeded {
                n,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn enumerate(&self, n: u32, constraints: EnumerationConstraints) -> Result<Partitions> {
        self.check(n)?;
        Ok(partitions(n, constraints))
    }

    pub fn spectrum(&self, n: u32, constraints: EnumerationConstraints) -> Result<Arc<SpectrumSet>> {
        self.check(n)?;
        let key = (n, constraints);
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(Arc::clone(hit));
        }
        // Computed outside the lock; a concurrent duplicate computes the same value.
        let computed = Arc::new(compute_spectrum(n, constraints));
        let mut memo = self.memo.lock().expect("memo poisoned");
        Ok(Arc::clone(memo.entry(key).or_insert(computed)))
    }

    /// Whether `k` is an eigenvalue of `T_n`, with a witness when it is.
    pub fn contains(&self, n: u32, k: i64) -> Result<Option<Partition>> {
        self.contains_restricted(n, k, EnumerationConstraints::none())
    }

    pub fn contains_restricted(
        &self,
        n: u32,
        k: i64,
        constraints: EnumerationConstraints,
    ) -> Result<Option<Partition>> {
        if constraints.is_unconstrained() && k.abs() > binom2(u64::from(n)) {
            self.check(n)?;
            return Ok(None);
        }
        let spectrum = self.spectrum(n, constraints)?;
        Ok(spectrum.witness(k).cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: u32, c: EnumerationConstraints) -> Vec<Vec<u32>> {
        partitions(n, c).map(Partition::into_parts).collect()
    }

    #[test]
    fn enumerate_four_in_reverse_lex_order() {
        assert_eq!(
            all(4, EnumerationConstraints::none()),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn enumerate_with_max_first_part() {
        assert_eq!(
            all(5, EnumerationConstraints::max_first_part(2)),
            vec![vec![2, 2, 1], vec![2, 1, 1, 1], vec![1, 1, 1, 1, 1]]
        );
        assert_eq!(all(3, EnumerationConstraints::max_first_part(7)).len(), 3);
    }

    #[test]
    fn enumerate_with_max_length() {
        let c = EnumerationConstraints {
            max_first_part: None,
            max_length: Some(2),
        };
        assert_eq!(all(4, c), vec![vec![4], vec![3, 1], vec![2, 2]]);
    }

    #[test]
    fn enumerate_tiny() {
        assert_eq!(all(1, EnumerationConstraints::none()), vec![vec![1]]);
        assert_eq!(all(0, EnumerationConstraints::none()), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(4), BigUint::from(5u32));
        assert_eq!(partition_count(10), BigUint::from(42u32));
        assert_eq!(partition_count(48), BigUint::from(147_273u32));
        assert_eq!(partition_count(100), BigUint::from(190_569_292u64));
        let big = partition_count(MAX_COUNT_N);
        assert_eq!(big.to_string().len(), 107);
    }

    #[test]
    fn small_spectra() {
        let oracle = Oracle::new();
        let s3 = oracle.spectrum(3, EnumerationConstraints::none()).unwrap();
        assert_eq!(s3.values, vec![-3, 0, 3]);
        let s4 = oracle.spectrum(4, EnumerationConstraints::none()).unwrap();
        assert_eq!(s4.values, vec![-6, -2, 0, 2, 6]);
        let s6 = oracle.spectrum(6, EnumerationConstraints::none()).unwrap();
        let witness = s6.witness(3).unwrap().parts().to_vec();
        assert!(witness == [4, 1, 1] || witness == [3, 3]);
    }

    #[test]
    fn contains_queries() {
        let oracle = Oracle::new();
        assert_eq!(oracle.contains(4, 1).unwrap(), None);
        let w = oracle.contains(6, 3).unwrap().unwrap();
        assert_eq!(w.eigenvalue().unwrap(), 3);
        for n in 1..=12 {
            let top = binom2(u64::from(n));
            assert_eq!(oracle.contains(n, top).unwrap(), Some(Partition::row(n)));
        }
        assert_eq!(oracle.contains(5, 1000).unwrap(), None);
    }

    #[test]
    fn oracle_limit() {
        let oracle = Oracle::new();
        assert_eq!(
            oracle.contains(51, 0),
            Err(Error::OracleLimitExceeded { n: 51, limit: 50 })
        );
        assert!(oracle.enumerate(51, EnumerationConstraints::none()).is_err());
        assert!(Oracle::with_limit(67).is_err());
        assert_eq!(Oracle::with_limit(66).unwrap().limit(), 66);
    }

    #[test]
    fn spectrum_json_shape() {
        let oracle = Oracle::new();
        let s = oracle.spectrum(3, EnumerationConstraints::none()).unwrap();
        let json = serde_json::to_string(&*s).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"values":[-3,0,3],"witnesses":{"-3":[1,1,1],"0":[2,1],"3":[3]}}"#
        );
        let back: SpectrumSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, *s);
    }
}
