//! Drivers covering whole segments of the spectrum.
//!
//! * `[-n, n]` for `n >= 31`, by dispatching each target to one of the
//!   S1/A1/S2/A2 cells and conjugating for negative targets.
//! * `[y1, y2]` and its mirror for `n >= 48`, by choosing a head part `n1` and
//!   realizing the residual `k - C(n1, 2) + (n - n1)` inside `T_{n - n1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{a1_values, a1_witness, a2_witness, s1_upper, s1_witness, s2_witness};
use crate::oracle::{EnumerationConstraints, Oracle};
use crate::partition::{binom2, Partition};
use crate::witness::{ChainStep, WitnessRecord};

pub const THEOREM3_MIN_N: u32 = 31;
pub const THEOREM5_MIN_N: u32 = 48;

/// The four cells splitting `[0, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cell {
    S1,
    A1,
    S2,
    A2,
}

/// Inclusive bounds of each cell at one `n`; `a1` holds its three values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitting {
    pub n: u32,
    pub s1: (i64, i64),
    pub a1: [i64; 3],
    pub s2: (i64, i64),
    pub a2: (i64, i64),
}

impl Splitting {
    pub fn at(n: u32) -> Self {
        let m = i64::from(n);
        let s2 = if m % 2 == 1 {
            ((m + 7) / 2, m - 7)
        } else {
            ((m + 4) / 2, m - 6)
        };
        Self {
            n,
            s1: (0, s1_upper(n)),
            a1: a1_values(n),
            s2,
            a2: (m - 6, m),
        }
    }

    /// Every cell containing `k`, in column order.
    pub fn cells_of(&self, k: i64) -> Vec<Cell> {
        let mut cells = Vec::new();
        if k >= self.s1.0 && k <= self.s1.1 {
            cells.push(Cell::S1);
        }
        if self.a1.contains(&k) {
            cells.push(Cell::A1);
        }
        if k >= self.s2.0 && k <= self.s2.1 {
            cells.push(Cell::S2);
        }
        if k >= self.a2.0 && k <= self.a2.1 {
            cells.push(Cell::A2);
        }
        cells
    }

    /// The cell used for `k`: the first one in column order.
    pub fn classify(&self, k: i64) -> Option<Cell> {
        self.cells_of(k).first().copied()
    }
}

fn require(theorem: u8, n: u32, min: u32) -> Result<()> {
    if n < min {
        Err(Error::BelowTheoremRange { theorem, n, min })
    } else {
        Ok(())
    }
}

/// A verified witness for `k` in `[-n, n]`, `n >= 31`.
pub fn theorem3_witness(n: u32, k: i64) -> Result<WitnessRecord> {
    require(3, n, THEOREM3_MIN_N)?;
    let m = i64::from(n);
    if k.abs() > m {
        return Err(Error::TargetOutOfSegment {
            n,
            target: k,
            lo: -m,
            hi: m,
        });
    }
    if k < 0 {
        return theorem3_witness(n, -k)?.conjugated().into_verified();
    }
    let record = match Splitting::at(n).classify(k) {
        Some(Cell::S1) => s1_witness(n, k)?,
        Some(Cell::A1) => a1_witness(n, k)?,
        Some(Cell::S2) => s2_witness(n, k)?,
        Some(Cell::A2) => a2_witness(n, k)?,
        None => return Err(Error::DispatchGap { n, lam: k }),
    };
    record.into_verified()
}

/// Like [`theorem3_witness`], but below the theorem's range searches the
/// oracle instead of failing.
pub fn theorem3_witness_or_oracle(n: u32, k: i64, oracle: &Oracle) -> Result<WitnessRecord> {
    match theorem3_witness(n, k) {
        Err(Error::BelowTheoremRange { .. }) => oracle_witness(n, k, oracle),
        other => other,
    }
}

/// A witness for any `k` found by enumeration.
pub fn oracle_witness(n: u32, k: i64, oracle: &Oracle) -> Result<WitnessRecord> {
    let partition = oracle
        .contains(n, k)?
        .ok_or(Error::NotInSpectrum { n, target: k })?;
    WitnessRecord::new(n, k, partition, vec![ChainStep::Oracle]).into_verified()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageFailure {
    pub target: i64,
    pub error: String,
}

/// Per-target accounting of a segment sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub n: u32,
    pub segment: [i64; 2],
    pub covered: usize,
    pub failures: Vec<CoverageFailure>,
    pub histogram: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_first_part: Option<u32>,
    /// Successful witnesses sorted by target; exported as CSV, not JSON.
    #[serde(skip)]
    pub witnesses: Vec<WitnessRecord>,
}

impl CoverageReport {
    pub fn new(n: u32, lo: i64, hi: i64) -> Self {
        Self {
            n,
            segment: [lo, hi],
            covered: 0,
            failures: Vec::new(),
            histogram: BTreeMap::new(),
            max_first_part: None,
            witnesses: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        (self.segment[1] - self.segment[0] + 1).max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty() && self.covered == self.len()
    }

    pub fn record(&mut self, target: i64, outcome: Result<WitnessRecord>) {
        match outcome {
            Ok(record) => {
                self.covered += 1;
                *self.histogram.entry(record.family()).or_default() += 1;
                let first = record.partition.first_part();
                self.max_first_part = Some(self.max_first_part.map_or(first, |m| m.max(first)));
                self.witnesses.push(record);
            }
            Err(err) => self.failures.push(CoverageFailure {
                target,
                error: err.to_string(),
            }),
        }
    }

    /// Combines sweeps of disjoint target sets.
    pub fn merge(mut self, other: CoverageReport) -> CoverageReport {
        self.segment = [
            self.segment[0].min(other.segment[0]),
            self.segment[1].max(other.segment[1]),
        ];
        self.covered += other.covered;
        self.failures.extend(other.failures);
        for (family, count) in other.histogram {
            *self.histogram.entry(family).or_default() += count;
        }
        self.max_first_part = match (self.max_first_part, other.max_first_part) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.witnesses.extend(other.witnesses);
        self.failures.sort_by_key(|f| f.target);
        self.witnesses.sort_by_key(|w| w.target);
        self
    }
}

/// Witnesses for every `k` in `[-n, n]`.
pub fn theorem3_cover(n: u32) -> Result<CoverageReport> {
    require(3, n, THEOREM3_MIN_N)?;
    let m = i64::from(n);
    let mut report = CoverageReport::new(n, -m, m);
    for k in -m..=m {
        report.record(k, theorem3_witness(n, k));
    }
    Ok(report)
}

/// Endpoints of the quadratic segment and the head interval behind them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentBounds {
    pub n: u32,
    pub y1: i64,
    pub y2: i64,
    /// Smallest head, `ceil(n/3) + 1`.
    pub head_lo: u32,
    /// Largest head, `floor((2n+1)/3)`.
    pub head_hi: u32,
}

pub fn theorem5_bounds(n: u32) -> Result<SegmentBounds> {
    require(5, n, THEOREM5_MIN_N)?;
    let head_lo = n.div_ceil(3) + 1;
    let head_hi = (2 * n + 1) / 3;
    let y1 = binom2(u64::from(head_lo)) - 2 * (i64::from(2 * n / 3) - 1);
    let y2 = binom2(u64::from(head_hi));
    Ok(SegmentBounds {
        n,
        y1,
        y2,
        head_lo,
        head_hi,
    })
}

/// `[C(n1, 2) - 2(n - n1), C(n1, 2)]`: targets reachable from head `n1` with
/// a residual in `[-(n - n1), n - n1]`.
pub fn head_interval(n: u32, n1: u32) -> (i64, i64) {
    let top = binom2(u64::from(n1));
    (top - 2 * i64::from(n - n1), top)
}

/// A verified witness for `k` with `y1 <= |k| <= y2`, `n >= 48`.
///
/// Heads are tried in increasing order among those whose interval holds `k`.
/// A residual of size `m = n - n1 >= 31` comes from [`theorem3_witness`];
/// smaller residuals are looked up by enumeration of partitions of `m` with
/// first part at most `n1`. If no head in the interval admits a residual in
/// `[-m, m]`, residuals outside it are searched the same way.
pub fn theorem5_witness(n: u32, k: i64, oracle: &Oracle) -> Result<WitnessRecord> {
    let bounds = theorem5_bounds(n)?;
    if k.abs() < bounds.y1 || k.abs() > bounds.y2 {
        return Err(Error::TargetOutOfSegment {
            n,
            target: k,
            lo: bounds.y1,
            hi: bounds.y2,
        });
    }
    if k < 0 {
        return theorem5_witness(n, -k, oracle)?.conjugated().into_verified();
    }

    let heads: Vec<u32> = (bounds.head_lo..=bounds.head_hi)
        .filter(|&n1| {
            let (lo, hi) = head_interval(n, n1);
            lo <= k && k <= hi
        })
        .collect();
    if heads.is_empty() {
        return Err(Error::NoHeadFits { n, target: k });
    }

    let mut last_err = Error::NoHeadFits { n, target: k };
    for &n1 in &heads {
        match residual_witness(n, n1, k, oracle) {
            Ok(record) => return Ok(record),
            Err(err) => last_err = err,
        }
    }
    for n1 in bounds.head_lo..=bounds.head_hi {
        if heads.contains(&n1) {
            continue;
        }
        if let Ok(record) = residual_witness(n, n1, k, oracle) {
            return Ok(record);
        }
    }
    Err(last_err)
}

fn residual_witness(n: u32, n1: u32, k: i64, oracle: &Oracle) -> Result<WitnessRecord> {
    let m = n - n1;
    let r = k - binom2(u64::from(n1)) + i64::from(m);
    let inner = if m >= THEOREM3_MIN_N && r.abs() <= i64::from(m) {
        theorem3_witness(m, r)?
    } else {
        let tail = oracle
            .contains_restricted(m, r, EnumerationConstraints::max_first_part(n1))?
            .ok_or(Error::NotInSpectrum { n: m, target: r })?;
        WitnessRecord::new(m, r, tail, vec![ChainStep::Oracle])
    };
    if inner.partition.first_part() > n1 {
        return Err(Error::HeadTooSmall {
            head: n1,
            first_part: inner.partition.first_part(),
        });
    }
    let partition: Partition = inner.partition.prepend(n1)?;
    let mut chain = vec![ChainStep::Head(n1)];
    chain.extend(inner.family_chain);
    WitnessRecord::new(n, k, partition, chain).into_verified()
}

/// Witnesses for every `k` in `[y1, y2]`.
pub fn theorem5_cover(n: u32, oracle: &Oracle) -> Result<CoverageReport> {
    let bounds = theorem5_bounds(n)?;
    let mut report = CoverageReport::new(n, bounds.y1, bounds.y2);
    for k in bounds.y1..=bounds.y2 {
        report.record(k, theorem5_witness(n, k, oracle));
    }
    Ok(report)
}

/// The targets scanned by [`conjecture_scan`]: `[n+1, y1-1]` once the
/// quadratic segment exists, `[n+1, 2n]` before that.
pub fn conjecture_gap(n: u32) -> (i64, i64) {
    let m = i64::from(n);
    match theorem5_bounds(n) {
        Ok(bounds) => (m + 1, bounds.y1 - 1),
        Err(_) => (m + 1, 2 * m),
    }
}

/// Oracle membership for every target in the conjectured gap. Absent values
/// are listed as failures; nothing is asserted.
pub fn conjecture_scan(n: u32, oracle: &Oracle) -> Result<CoverageReport> {
    let (lo, hi) = conjecture_gap(n);
    let spectrum = oracle.spectrum(n, EnumerationConstraints::none())?;
    let mut report = CoverageReport::new(n, lo, hi);
    for k in lo..=hi {
        let outcome = match spectrum.witness(k) {
            Some(p) => WitnessRecord::new(n, k, p.clone(), vec![ChainStep::Oracle]).into_verified(),
            None => Err(Error::NotInSpectrum { n, target: k }),
        };
        report.record(k, outcome);
    }
    Ok(report)
}
