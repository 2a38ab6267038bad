//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use tn_spectrum::cli::run_with;
use tn_spectrum::verify::{verify_family, verify_theorem3};
use tn_spectrum::{
    cayley_spectrum, conjecture_scan, partition_count, partitions, theorem5_bounds,
    theorem5_witness, EnumerationConstraints, FamilyId, Oracle, Partition,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        Ok(detail.into())
    } else {
        Err(detail.into())
    }
}

fn eigenvalue_ground_truth() -> Outcome {
    let a = Partition::new(vec![4, 1, 1]).unwrap().eigenvalue().unwrap().get();
    let b = Partition::new(vec![3, 3]).unwrap().eigenvalue().unwrap().get();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(["tnspec", "eig", "4", "1", "1"], &mut out, &mut err);
    let cli = String::from_utf8_lossy(&out).trim().to_owned();
    check(
        a == 3 && b == 3 && code == 0 && cli == "3",
        format!("(4,1,1) -> {a}, (3,3) -> {b}, cli -> {cli}"),
    )
}

fn dual_oracle_integrality() -> Outcome {
    let oracle = Oracle::new();
    for n in 2..=6 {
        let numeric = cayley_spectrum(n).map_err(|e| format!("n={n}: {e}"))?;
        let exact = oracle
            .spectrum(n, EnumerationConstraints::none())
            .map_err(|e| e.to_string())?;
        if numeric.values != exact.values {
            return Err(format!(
                "n={n}: numeric {:?} vs partitions {:?}",
                numeric.values, exact.values
            ));
        }
    }
    Ok("n = 2..6 integral and equal".into())
}

fn theorem3_reproof() -> Outcome {
    let r = verify_theorem3((31, 80));
    check(
        r.passed() && r.cases_run == (31..=80).map(|n| n + 1).sum::<u64>(),
        format!(
            "{} targets (paired with negation), {} failed; {}",
            r.cases_run * 2 - 50,
            r.cases_failed,
            r.notes.join("; ")
        ),
    )
}

fn theorem5_reproof() -> Outcome {
    let oracle = Oracle::new();
    let b = theorem5_bounds(48).map_err(|e| e.to_string())?;
    // ceil(48/3) + 1 = 17 and floor(97/3) = 32
    let y1 = 17 * 16 / 2 - 2 * (32 - 1);
    let y2 = 32 * 31 / 2;
    if (b.y1, b.y2) != (74, 496) || (y1, y2) != (74, 496) {
        return Err(format!("bounds ({}, {}) vs hand ({y1}, {y2})", b.y1, b.y2));
    }
    let mut cases = 0;
    for n in 48..=60 {
        let b = theorem5_bounds(n).map_err(|e| e.to_string())?;
        for k in (b.y1..=b.y2).flat_map(|k| [k, -k]) {
            let w = theorem5_witness(n, k, &oracle).map_err(|e| format!("n={n} k={k}: {e}"))?;
            if !w.verified || w.partition.eigenvalue().map(|v| v.get()) != Ok(k) {
                return Err(format!("n={n} k={k}: {} not verified", w.partition));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} targets, y1 = 74, y2 = 496 at n = 48"))
}

fn oracle_containment_48() -> Outcome {
    let mut values = std::collections::BTreeSet::new();
    let mut count = 0u64;
    for p in partitions(48, EnumerationConstraints::none()) {
        values.insert(p.eigenvalue().unwrap().get());
        count += 1;
    }
    if count != 147_273 || partition_count(48) != BigUint::from(count) {
        return Err(format!("enumerated {count}, recurrence {}", partition_count(48)));
    }
    let missing: Vec<i64> = (74..=496).filter(|k| !values.contains(k)).collect();
    check(
        missing.is_empty(),
        format!("p(48) = {count}; missing {missing:?}"),
    )
}

fn family_sweeps() -> Outcome {
    let mut cases = 0;
    for family in FamilyId::all() {
        let r = verify_family(family, (1, 80));
        if !r.passed() {
            return Err(format!("{}: {:?}", r.check_id, r.failure_samples));
        }
        cases += r.cases_run;
    }
    // first odd A1 row: 8 lambda(head) = n^2 - 24 n + 119
    let row1 = FamilyId::A1 {
        row: 1,
        parity: tn_spectrum::families::Parity::Odd,
    };
    for n in (25..=80u32).step_by(2) {
        let lam = row1.range_at(n).ok_or(format!("row 1 absent at n={n}"))?.lo;
        let w = row1.construct(n, lam).map_err(|e| e.to_string())?;
        let head = Partition::new(w.compact.head().to_vec()).unwrap();
        let m = i64::from(n);
        if 8 * head.eigenvalue().unwrap().get() != m * m - 24 * m + 119 {
            return Err(format!("row 1 head polynomial at n={n}"));
        }
    }
    Ok(format!("{cases} family instances"))
}

fn conjugation_and_symmetry() -> Outcome {
    let mut cases = 0;
    for n in 1..=12 {
        for p in partitions(n, EnumerationConstraints::none()) {
            let v = p.eigenvalue().unwrap().get();
            if p.conjugate().eigenvalue().unwrap().get() != -v {
                return Err(format!("{p}"));
            }
            cases += 1;
        }
    }
    let oracle = Oracle::new();
    for n in 1..=30 {
        let s = oracle
            .spectrum(n, EnumerationConstraints::none())
            .map_err(|e| e.to_string())?;
        if !s.is_symmetric() {
            return Err(format!("spectrum of T_{n} not symmetric"));
        }
    }
    Ok(format!("{cases} partitions, spectra n <= 30 symmetric"))
}

fn conjecture_report() -> Outcome {
    let first = conjecture_scan(48, &Oracle::new()).map_err(|e| e.to_string())?;
    let second = conjecture_scan(48, &Oracle::new()).map_err(|e| e.to_string())?;
    let json = |r: &tn_spectrum::CoverageReport| serde_json::to_string(r).unwrap();
    let complete = first.segment == [49, 73]
        && first.covered + first.failures.len() == first.len()
        && first.witnesses.iter().all(|w| w.verified);
    check(
        complete && json(&first) == json(&second) && first.witnesses == second.witnesses,
        format!(
            "[49, 73]: {} members, {} absent",
            first.covered,
            first.failures.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("eigenvalue ground truth", eigenvalue_ground_truth, Duration::from_millis(1)),
        ("dual-oracle integrality", dual_oracle_integrality, Duration::from_secs(60)),
        ("segment [-n, n] witnesses", theorem3_reproof, Duration::from_secs(10)),
        ("quadratic segment witnesses", theorem5_reproof, Duration::from_secs(30)),
        ("oracle containment n=48", oracle_containment_48, Duration::from_secs(60)),
        ("family sweeps", family_sweeps, Duration::from_secs(10)),
        ("conjugation and symmetry", conjugation_and_symmetry, Duration::from_secs(10)),
        ("conjecture scan n=48", conjecture_report, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over budget {budget:?}")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {}. {name} ({elapsed:.2?}): {detail}", i + 1);
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
