//! Exhaustive re-verification sweeps. Every check is a pure function of its
//! range; failures are data, not panics.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cayley::{cayley_spectrum, MAX_CAYLEY_N};
use crate::error::{Error, Result};
use crate::families::{FamilyGroup, FamilyId};
#[cfg(test)]
use crate::families::Parity;
use crate::oracle::{partition_count, partitions, EnumerationConstraints, Oracle};
use crate::partition::{
    binom2, compact_eigenvalue, compact_eigenvalue_ones, eigenvalue_via_head, Partition,
};
use crate::segment::{
    head_interval, theorem3_witness, theorem5_bounds, theorem5_witness, Cell, Splitting,
    THEOREM3_MIN_N, THEOREM5_MIN_N,
};

pub const MAX_FAILURE_SAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureSample {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub n_range: [u32; 2],
    pub cases_run: u64,
    pub cases_failed: u64,
    pub failure_samples: Vec<FailureSample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }

    /// The report without its timing, for byte-for-byte comparison.
    pub fn payload(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Some(map) = value.as_object_mut() {
            map.remove("elapsed_secs");
        }
        value
    }
}

struct Tally {
    check_id: String,
    n_range: [u32; 2],
    cases_run: u64,
    cases_failed: u64,
    samples: Vec<FailureSample>,
    notes: Vec<String>,
    started: Instant,
}

impl Tally {
    fn new(check_id: impl Into<String>, lo: u32, hi: u32) -> Self {
        Self {
            check_id: check_id.into(),
            n_range: [lo, hi],
            cases_run: 0,
            cases_failed: 0,
            samples: Vec::new(),
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    fn case(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> String,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) {
        self.cases_run += 1;
        if !ok {
            self.cases_failed += 1;
            if self.samples.len() < MAX_FAILURE_SAMPLES {
                self.samples.push(FailureSample {
                    inputs: inputs(),
                    expected: expected.to_string(),
                    got: got.to_string(),
                });
            }
        }
    }

    fn error(&mut self, inputs: impl FnOnce() -> String, expected: impl fmt::Display, err: &Error) {
        self.case(false, inputs, expected, format!("error: {err}"));
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check_id: self.check_id,
            n_range: self.n_range,
            cases_run: self.cases_run,
            cases_failed: self.cases_failed,
            failure_samples: self.samples,
            notes: self.notes,
            elapsed_secs: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// Every instance of `family` with `n` in `n_range`: sum, ordering,
/// eigenvalue by the defining sum and by the compact formula, and the
/// published closed forms where they exist.
pub fn verify_family(family: FamilyId, n_range: (u32, u32)) -> VerificationReport {
    let mut tally = Tally::new(format!("family:{family}"), n_range.0, n_range.1);
    for n in n_range.0.max(1)..=n_range.1 {
        let Some(range) = family.range_at(n) else {
            continue;
        };
        for lam in range.values() {
            let inputs = || format!("n={n} lambda={lam}");
            let w = match family.construct(n, lam) {
                Ok(w) => w,
                Err(err) => {
                    tally.error(inputs, lam, &err);
                    continue;
                }
            };
            let direct = w.partition.eigenvalue().map(|v| v.get());
            let compact = compact_eigenvalue(&w.compact).map(|v| v.get());
            let ordered = Partition::new(w.partition.parts().to_vec()).is_ok();
            let mut ok = ordered
                && w.partition.n() == u64::from(n)
                && direct == Ok(lam)
                && compact == Ok(lam);
            if w.compact.twos() == 0 {
                let head = Partition::with_empty(w.compact.head().to_vec()).expect("valid head");
                ok &= compact_eigenvalue_ones(&head, w.compact.ones()).map(|v| v.get()) == Ok(lam);
            }
            if let Some(forms) = family.closed_forms() {
                let (m, l) = (i64::from(n), lam);
                let head = Partition::with_empty(w.compact.head().to_vec()).expect("valid head");
                let head_value = head.eigenvalue().map(|v| 8 * v.get());
                let deduction = w.compact.deduction().map(|d| 8 * d);
                ok &= head_value == Ok(forms.head.numerator(m, l))
                    && deduction == Ok(forms.deduction.numerator(m, l));
            }
            tally.case(ok, inputs, lam, format!("{} -> {:?}", w.partition, direct));
        }
    }
    tally.finish()
}

/// Largest first part over every family output and its conjugate, per group,
/// against the bounds `(n+1)/2` (S1 and zero), `(n+2)/2` (S2, A1) and
/// `(n+3)/2` (A2).
pub fn verify_first_part_bounds(n_range: (u32, u32)) -> VerificationReport {
    let lo = n_range.0.max(THEOREM3_MIN_N);
    let mut tally = Tally::new("first-part-bounds", lo, n_range.1);
    let mut maxima: BTreeMap<FamilyGroup, (u32, u32, u32, String)> = BTreeMap::new();
    for n in lo..=n_range.1 {
        for family in FamilyId::all() {
            let Some(range) = family.range_at(n) else {
                continue;
            };
            let group = family.group();
            for lam in range.values() {
                let inputs = || format!("{family} n={n} lambda={lam}");
                let bound = format!("2*first <= n+{}", group.bound_offset());
                let w = match family.construct(n, lam) {
                    Ok(w) => w,
                    Err(err) => {
                        tally.error(inputs, bound, &err);
                        continue;
                    }
                };
                let first = w.partition.first_part();
                let conjugate_first = w.partition.len() as u32;
                let ok = group.admits_first_part(n, first)
                    && group.admits_first_part(n, conjugate_first);
                tally.case(ok, inputs, bound, format!("{first} / conjugate {conjugate_first}"));
                let entry = maxima
                    .entry(group)
                    .or_insert((0, 0, 0, String::new()));
                // largest 2*first - n, i.e. the tightest instance
                let slack = 2 * first.max(conjugate_first) + 1000 - n;
                if slack > entry.0 {
                    *entry = (slack, n, first.max(conjugate_first), w.partition.to_string());
                }
            }
        }
    }
    for (group, (_, n, first, partition)) in maxima {
        tally.notes.push(format!(
            "{}: tightest first part {first} at n={n} by {partition}",
            group.name()
        ));
    }
    tally.finish()
}

/// Brute-force ground truth against everything else, for `n` within the
/// oracle limit.
pub fn cross_check_oracle(n_range: (u32, u32), oracle: &Oracle) -> VerificationReport {
    let hi = n_range.1.min(oracle.limit());
    let lo = n_range.0.max(1);
    let mut tally = Tally::new("oracle", lo, hi);
    for n in lo..=hi {
        let spectrum = match oracle.spectrum(n, EnumerationConstraints::none()) {
            Ok(s) => s,
            Err(err) => {
                tally.error(|| format!("n={n}"), "spectrum", &err);
                continue;
            }
        };
        let top = binom2(u64::from(n));
        tally.case(
            spectrum.is_symmetric(),
            || format!("n={n} symmetry"),
            "closed under negation",
            "asymmetric",
        );
        tally.case(
            spectrum.min() == Some(-top) && spectrum.max() == Some(top),
            || format!("n={n} extremes"),
            format!("[-{top}, {top}]"),
            format!("{:?}..{:?}", spectrum.min(), spectrum.max()),
        );
        if n <= MAX_CAYLEY_N {
            match cayley_spectrum(n) {
                Ok(numeric) => tally.case(
                    numeric.values == spectrum.values,
                    || format!("n={n} cayley"),
                    format!("{:?}", spectrum.values),
                    format!("{:?}", numeric.values),
                ),
                Err(err) => tally.error(|| format!("n={n} cayley"), "integral spectrum", &err),
            }
        }
        if n >= THEOREM3_MIN_N {
            let m = i64::from(n);
            for k in -m..=m {
                let inputs = || format!("n={n} k={k} theorem3");
                match theorem3_witness(n, k) {
                    Ok(w) => tally.case(
                        w.verified && spectrum.contains(k),
                        inputs,
                        "member",
                        w.partition,
                    ),
                    Err(err) => tally.error(inputs, "member", &err),
                }
            }
        }
        if n >= THEOREM5_MIN_N {
            let bounds = theorem5_bounds(n).expect("n in range");
            for k in (bounds.y1..=bounds.y2).flat_map(|k| [k, -k]) {
                let inputs = || format!("n={n} k={k} theorem5");
                match theorem5_witness(n, k, oracle) {
                    Ok(w) => tally.case(
                        w.verified && spectrum.contains(k),
                        inputs,
                        "member",
                        w.partition,
                    ),
                    Err(err) => tally.error(inputs, "member", &err),
                }
            }
        }
    }
    tally.finish()
}

/// Every `k` in `[-n, n]` gets a witness with first part at most `(n+3)/2`,
/// and negating `k` conjugates the witness.
pub fn verify_theorem3(n_range: (u32, u32)) -> VerificationReport {
    let lo = n_range.0.max(THEOREM3_MIN_N);
    let mut tally = Tally::new("theorem3", lo, n_range.1);
    let mut max_first = i64::MIN;
    for n in lo..=n_range.1 {
        let m = i64::from(n);
        for k in 0..=m {
            let inputs = || format!("n={n} k=±{k}");
            let pair = theorem3_witness(n, k).and_then(|pos| Ok((theorem3_witness(n, -k)?, pos)));
            match pair {
                Ok((neg, pos)) => {
                    let firsts = pos.partition.first_part().max(neg.partition.first_part());
                    max_first = max_first.max(2 * i64::from(firsts) - i64::from(n));
                    let ok = pos.verified
                        && neg.verified
                        && 2 * firsts <= n + 3
                        && neg.partition == pos.partition.conjugate();
                    tally.case(ok, inputs, "verified, first part <= (n+3)/2", pos.partition);
                }
                Err(err) => tally.error(inputs, "witness", &err),
            }
        }
    }
    tally
        .notes
        .push(format!("max of 2*first_part - n over the sweep: {max_first}"));
    tally.finish()
}

/// Every `k` with `y1 <= |k| <= y2` gets a verified witness.
pub fn verify_theorem5(n_range: (u32, u32), oracle: &Oracle) -> VerificationReport {
    let lo = n_range.0.max(THEOREM5_MIN_N);
    let mut tally = Tally::new("theorem5", lo, n_range.1);
    let mut by_source: BTreeMap<String, u64> = BTreeMap::new();
    for n in lo..=n_range.1 {
        let bounds = match theorem5_bounds(n) {
            Ok(b) => b,
            Err(err) => {
                tally.error(|| format!("n={n}"), "bounds", &err);
                continue;
            }
        };
        for k in (bounds.y1..=bounds.y2).flat_map(|k| [k, -k]) {
            let inputs = || format!("n={n} k={k}");
            match theorem5_witness(n, k, oracle) {
                Ok(w) => {
                    if k > 0 {
                        let n1 = w.heads()[0];
                        let residual = w.partition.tail().eigenvalue().map_or(0, |v| v.get());
                        let within = residual.abs() <= i64::from(n - n1);
                        let key = match (w.family().as_str(), within) {
                            ("Oracle", true) => "oracle residual in [-m, m]".to_owned(),
                            ("Oracle", false) => "oracle residual outside [-m, m]".to_owned(),
                            _ => "theorem3 residual".to_owned(),
                        };
                        *by_source.entry(key).or_default() += 1;
                    }
                    tally.case(w.verified, inputs, k, w.partition);
                }
                Err(err) => tally.error(inputs, k, &err),
            }
        }
    }
    for (source, count) in by_source {
        tally.notes.push(format!("{source}: {count} positive targets"));
    }
    tally.finish()
}

/// The four cells cover `[0, n]` with no gaps; the only overlap is `n - 6`
/// for even `n`, shared by S2 and A2.
pub fn verify_tiling(n_range: (u32, u32)) -> VerificationReport {
    let lo = n_range.0.max(THEOREM3_MIN_N);
    let mut tally = Tally::new("tiling", lo, n_range.1);
    for n in lo..=n_range.1 {
        let split = Splitting::at(n);
        let m = i64::from(n);
        let mut overlaps = Vec::new();
        let mut gaps = Vec::new();
        for k in 0..=m {
            match split.cells_of(k).len() {
                0 => gaps.push(k),
                1 => {}
                _ => overlaps.push(k),
            }
        }
        let expected_overlaps = if n % 2 == 0 { vec![m - 6] } else { vec![] };
        let within = split.s1.0 >= 0
            && split.a2.1 <= m
            && split.a1.iter().all(|&a| (0..=m).contains(&a));
        let ok = gaps.is_empty() && overlaps == expected_overlaps && within;
        tally.case(
            ok,
            || format!("n={n}"),
            format!("no gaps, overlaps {expected_overlaps:?}"),
            format!("gaps {gaps:?}, overlaps {overlaps:?}"),
        );
        if n % 2 == 0 {
            tally.case(
                split.cells_of(m - 6) == [Cell::S2, Cell::A2],
                || format!("n={n} overlap cells"),
                "S2, A2",
                format!("{:?}", split.cells_of(m - 6)),
            );
        }
    }
    tally.finish()
}

/// Consecutive head intervals `[C(n1,2) - 2(n-n1), C(n1,2)]` reach down to
/// `C(n1-1, 2)`, so together they cover `[y1, y2]`.
pub fn verify_head_overlap(n_range: (u32, u32)) -> VerificationReport {
    let lo = n_range.0.max(THEOREM5_MIN_N);
    let mut tally = Tally::new("head-overlap", lo, n_range.1);
    for n in lo..=n_range.1 {
        let bounds = theorem5_bounds(n).expect("n in range");
        for n1 in bounds.head_lo + 1..=bounds.head_hi {
            let (bottom, _) = head_interval(n, n1);
            let previous_top = binom2(u64::from(n1 - 1));
            tally.case(
                bottom <= previous_top,
                || format!("n={n} n1={n1}"),
                format!("<= {previous_top}"),
                bottom,
            );
        }
        let first = head_interval(n, bounds.head_lo);
        let last = head_interval(n, bounds.head_hi);
        tally.case(
            first.0 == bounds.y1 && last.1 == bounds.y2,
            || format!("n={n} endpoints"),
            format!("[{}, {}]", bounds.y1, bounds.y2),
            format!("[{}, {}]", first.0, last.1),
        );
    }
    tally.finish()
}

/// Exhaustive identities over all partitions of small `n`: conjugation
/// negates, is an involution, fixes only zero-eigenvalue partitions; the head
/// decomposition agrees with the direct sum; `|lambda| <= C(n,2)` with
/// equality only at `(n)` and `(1 x n)`.
pub fn verify_conjugation(n_range: (u32, u32)) -> VerificationReport {
    let lo = n_range.0.max(1);
    let mut tally = Tally::new("conjugation", lo, n_range.1);
    for n in lo..=n_range.1 {
        let top = binom2(u64::from(n));
        for p in partitions(n, EnumerationConstraints::none()) {
            let value = p.eigenvalue().expect("small n").get();
            let conj = p.conjugate();
            let conj_value = conj.eigenvalue().expect("small n").get();
            let inputs = || format!("{p}");
            tally.case(conj_value == -value, inputs, -value, conj_value);
            tally.case(conj.conjugate() == p, inputs, &p, conj.conjugate());
            if conj == p {
                tally.case(value == 0, inputs, 0, value);
            }
            let extreme = p == Partition::row(n) || p == Partition::column(n);
            tally.case(
                value.abs() <= top && (value.abs() == top) == extreme,
                inputs,
                format!("|lambda| <= {top}, equality iff extreme"),
                value,
            );
            if p.len() >= 2 {
                let via_head = eigenvalue_via_head(p.first_part(), &p.tail(), p.n()).map(|v| v.get());
                tally.case(via_head == Ok(value), inputs, value, format!("{via_head:?}"));
            }
        }
    }
    tally.finish()
}

/// Enumeration agrees with the pentagonal count, is deterministic, and
/// restricted spectra are subsets of the full one (the latter for `n <= 20`).
pub fn verify_enumeration(n_range: (u32, u32), oracle: &Oracle) -> VerificationReport {
    let lo = n_range.0.max(1);
    let hi = n_range.1.min(oracle.limit());
    let mut tally = Tally::new("enumeration", lo, hi);
    for n in lo..=hi {
        let count = partitions(n, EnumerationConstraints::none()).count();
        let expected = partition_count(n as usize);
        tally.case(
            expected == count.into(),
            || format!("n={n} count"),
            &expected,
            count,
        );
        if n <= 20 {
            let first: Vec<Partition> = partitions(n, EnumerationConstraints::none()).collect();
            let second: Vec<Partition> = partitions(n, EnumerationConstraints::none()).collect();
            tally.case(first == second, || format!("n={n} determinism"), "equal", "differs");
            let full = oracle
                .spectrum(n, EnumerationConstraints::none())
                .expect("within limit");
            for m in 1..=n {
                let restricted = oracle
                    .spectrum(n, EnumerationConstraints::max_first_part(m))
                    .expect("within limit");
                let ok = restricted.values.iter().all(|&v| full.contains(v))
                    && restricted
                        .witnesses
                        .as_ref()
                        .is_some_and(|w| w.values().all(|p| p.first_part() <= m));
                tally.case(ok, || format!("n={n} max_first_part={m}"), "subset", "not a subset");
            }
        }
        if n <= 30 {
            let s = oracle
                .spectrum(n, EnumerationConstraints::none())
                .expect("within limit");
            let top = binom2(u64::from(n));
            tally.case(
                s.is_symmetric() && s.max() == Some(top) && s.min() == Some(-top),
                || format!("n={n} symmetric spectrum"),
                format!("symmetric with extremes ±{top}"),
                format!("{:?}..{:?}", s.min(), s.max()),
            );
        }
    }
    tally.finish()
}

/// Named checks runnable from [`run_checks`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// Every family, each clipped to its own limitations.
    Families,
    Family(FamilyId),
    FirstPartBounds,
    Oracle,
    Theorem3,
    Theorem5,
    Tiling,
    HeadOverlap,
    Conjugation,
    Enumeration,
}

impl CheckId {
    pub fn all() -> Vec<CheckId> {
        vec![
            CheckId::Conjugation,
            CheckId::Enumeration,
            CheckId::Families,
            CheckId::FirstPartBounds,
            CheckId::Tiling,
            CheckId::HeadOverlap,
            CheckId::Theorem3,
            CheckId::Theorem5,
            CheckId::Oracle,
        ]
    }

    /// Sweep range used when none is given.
    pub fn default_range(&self) -> (u32, u32) {
        match self {
            CheckId::Families | CheckId::Family(_) => (1, 80),
            CheckId::FirstPartBounds | CheckId::Theorem3 => (31, 80),
            CheckId::Oracle => (2, 45),
            CheckId::Theorem5 => (48, 60),
            CheckId::Tiling => (31, 200),
            CheckId::HeadOverlap => (48, 200),
            CheckId::Conjugation => (1, 12),
            CheckId::Enumeration => (1, 40),
        }
    }
}

impl std::str::FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "families" => CheckId::Families,
            "first-part-bounds" => CheckId::FirstPartBounds,
            "oracle" => CheckId::Oracle,
            "theorem3" => CheckId::Theorem3,
            "theorem5" => CheckId::Theorem5,
            "tiling" => CheckId::Tiling,
            "head-overlap" => CheckId::HeadOverlap,
            "conjugation" => CheckId::Conjugation,
            "enumeration" => CheckId::Enumeration,
            _ => match s.strip_prefix("family:") {
                Some(id) => CheckId::Family(id.parse()?),
                None => return Err(Error::Config(format!("unknown check {s:?}"))),
            },
        })
    }
}

fn run_one(check: &CheckId, range: (u32, u32), oracle: &Oracle) -> Vec<VerificationReport> {
    match check {
        CheckId::Families => FamilyId::all()
            .into_iter()
            .map(|family| verify_family(family, (range.0.max(family.n_min()), range.1)))
            .collect(),
        CheckId::Family(family) => vec![verify_family(*family, range)],
        CheckId::FirstPartBounds => vec![verify_first_part_bounds(range)],
        CheckId::Oracle => vec![cross_check_oracle(range, oracle)],
        CheckId::Theorem3 => vec![verify_theorem3(range)],
        CheckId::Theorem5 => vec![verify_theorem5(range, oracle)],
        CheckId::Tiling => vec![verify_tiling(range)],
        CheckId::HeadOverlap => vec![verify_head_overlap(range)],
        CheckId::Conjugation => vec![verify_conjugation(range)],
        CheckId::Enumeration => vec![verify_enumeration(range, oracle)],
    }
}

/// Runs `checks` concurrently; reports come back in the order requested.
/// `range` overrides every check's default sweep range.
pub fn run_checks(
    checks: &[CheckId],
    range: Option<(u32, u32)>,
    oracle: &Oracle,
) -> Vec<VerificationReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|check| {
                let range = range.unwrap_or_else(|| check.default_range());
                scope.spawn(move || run_one(check, range, oracle))
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("check panicked"))
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub check_id: String,
    pub n_range: [u32; 2],
    pub cases_run: u64,
    pub cases_failed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: Vec<SummaryRow>,
    pub total_cases: u64,
    pub total_failed: u64,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let checks: Vec<SummaryRow> = reports
            .iter()
            .map(|r| SummaryRow {
                check_id: r.check_id.clone(),
                n_range: r.n_range,
                cases_run: r.cases_run,
                cases_failed: r.cases_failed,
            })
            .collect();
        Self {
            total_cases: checks.iter().map(|c| c.cases_run).sum(),
            total_failed: checks.iter().map(|c| c.cases_failed).sum(),
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.total_failed == 0
    }

    pub fn to_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.check_id.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>9}  {:>10}  {:>8}  status",
            "check", "n range", "cases", "failed"
        );
        for c in &self.checks {
            let status = if c.cases_failed == 0 { "ok" } else { "FAIL" };
            let range = format!("{}..{}", c.n_range[0], c.n_range[1]);
            let _ = writeln!(
                out,
                "{:<width$}  {:>9}  {:>10}  {:>8}  {status}",
                c.check_id, range, c.cases_run, c.cases_failed
            );
        }
        let _ = writeln!(
            out,
            "total: {} cases, {} failed",
            self.total_cases, self.total_failed
        );
        out
    }
}
