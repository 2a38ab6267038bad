//! `tnspec` command line. Exit status: 0 success, 1 domain failure (including
//! any failed verification case), 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cayley::cayley_spectrum;
use crate::error::{Error, Result};
use crate::oracle::{partition_count, EnumerationConstraints, Oracle, DEFAULT_ORACLE_LIMIT};
use crate::partition::Partition;
use crate::segment::{
    conjecture_scan, theorem3_cover, theorem3_witness, theorem3_witness_or_oracle,
    theorem5_bounds, theorem5_cover, theorem5_witness, CoverageReport, THEOREM3_MIN_N,
};
use crate::verify::{run_checks, CheckId, Summary};
use crate::witness::WitnessRecord;

#[derive(Debug, Parser)]
#[command(name = "tnspec", version, about = "Eigenvalues of the transposition graph T_n")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Directory for JSON/CSV artifacts.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest n the brute-force oracle will enumerate.
    #[arg(long, env = "TNSPEC_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT, global = true)]
    oracle_limit: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalue of a partition, e.g. `eig 4 1 1` or `eig 4,1,1`.
    Eig(PartsArg),
    /// Conjugate partition and both eigenvalues.
    Conj(PartsArg),
    /// Distinct eigenvalues of T_n by enumeration.
    Spectrum {
        n: u32,
        #[arg(long)]
        max_first_part: Option<u32>,
        /// Include the first witness found for each value.
        #[arg(long)]
        witnesses: bool,
    },
    /// Whether k is an eigenvalue of T_n.
    #[command(allow_negative_numbers = true)]
    Contains { n: u32, k: i64 },
    /// Constructive witness for k.
    #[command(allow_negative_numbers = true)]
    Witness {
        n: u32,
        k: i64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        theorem: Option<u8>,
        /// Use enumeration when n is below the constructive range.
        #[arg(long)]
        oracle_fallback: bool,
    },
    /// Witnesses for a whole segment.
    Cover {
        n: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=5))]
        theorem: u8,
    },
    /// Endpoints of the quadratic segment.
    Bounds { n: u32 },
    /// Run verification sweeps.
    Verify {
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, requires = "n_max")]
        n_min: Option<u32>,
        #[arg(long, requires = "n_min")]
        n_max: Option<u32>,
    },
    /// Oracle scan of the gap between n and the quadratic segment.
    Conjecture { n: u32 },
    /// Numeric spectrum of the n! x n! adjacency matrix.
    Cayley { n: u32 },
    /// Number of partitions p(n).
    Count { n: usize },
}

#[derive(Debug, Args)]
struct PartsArg {
    #[arg(required = true, num_args = 1..)]
    parts: Vec<String>,
}

impl PartsArg {
    fn partition(&self) -> Result<Partition> {
        let mut parts = Vec::new();
        for token in self.parts.iter().flat_map(|s| s.split(',')) {
            let token = token.trim().trim_matches(|c| c == '(' || c == ')');
            if token.is_empty() {
                continue;
            }
            let part: i64 = token
                .parse()
                .map_err(|_| Error::Config(format!("not an integer part: {token:?}")))?;
            if part <= 0 {
                return Err(Error::NonPositivePart { index: parts.len() });
            }
            let part = u32::try_from(part)
                .map_err(|_| Error::Config(format!("part too large: {part}")))?;
            parts.push(part);
        }
        Partition::new(parts)
    }
}

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Entry point with injectable output streams; returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let code = if matches!(e, Error::Config(_)) { 2 } else { 1 };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let oracle = Oracle::with_limit(cli.oracle_limit)?;
    let mut emitted = Emitter {
        format: cli.format,
        out,
    };
    match &cli.command {
        Command::Eig(parts) => {
            let p = parts.partition()?;
            let value = p.eigenvalue()?.get();
            emitted.emit(
                &serde_json::json!({ "n": p.n(), "partition": p, "eigenvalue": value }),
                || format!("{value}\n"),
                &[&["n", "partition", "eigenvalue"], &[&p.n().to_string(), &p.to_string(), &value.to_string()]],
            )?;
        }
        Command::Conj(parts) => {
            let p = parts.partition()?;
            let c = p.conjugate();
            let (pv, cv) = (p.eigenvalue()?.get(), c.eigenvalue()?.get());
            emitted.emit(
                &serde_json::json!({
                    "partition": p, "eigenvalue": pv, "conjugate": c, "conjugate_eigenvalue": cv,
                }),
                || format!("{c}\n{pv} -> {cv}\n"),
                &[
                    &["partition", "eigenvalue", "conjugate", "conjugate_eigenvalue"],
                    &[&p.to_string(), &pv.to_string(), &c.to_string(), &cv.to_string()],
                ],
            )?;
        }
        Command::Spectrum {
            n,
            max_first_part,
            witnesses,
        } => {
            let constraints = match max_first_part {
                Some(m) => EnumerationConstraints::max_first_part(*m),
                None => EnumerationConstraints::none(),
            };
            let full = oracle.spectrum(*n, constraints)?;
            let shown = if *witnesses {
                (*full).clone()
            } else {
                full.without_witnesses()
            };
            write_artifact(cli.out.as_deref(), &format!("spectrum_{n}.json"), &shown)?;
            let mut rows: Vec<Vec<String>> = vec![vec!["n".into(), "eigenvalue".into(), "witness".into()]];
            for &v in &full.values {
                let w = full.witness(v).map(ToString::to_string).unwrap_or_default();
                rows.push(vec![n.to_string(), v.to_string(), if *witnesses { w } else { String::new() }]);
            }
            let text = || {
                if *witnesses {
                    full.values
                        .iter()
                        .map(|v| format!("{v}\t{}\n", full.witness(*v).expect("witness recorded")))
                        .collect()
                } else {
                    let joined: Vec<String> = full.values.iter().map(ToString::to_string).collect();
                    format!("{}\n", joined.join(" "))
                }
            };
            emitted.emit_rows(&shown, text, &rows)?;
        }
        Command::Contains { n, k } => {
            let witness = oracle.contains(*n, *k)?;
            let text = || match &witness {
                Some(p) => format!("yes {p}\n"),
                None => "no\n".to_owned(),
            };
            let w = witness.as_ref().map(ToString::to_string).unwrap_or_default();
            emitted.emit(
                &serde_json::json!({ "n": n, "target": k, "member": witness.is_some(), "witness": witness }),
                text,
                &[&["n", "target", "member", "witness"], &[&n.to_string(), &k.to_string(), &witness.is_some().to_string(), &w]],
            )?;
        }
        Command::Witness {
            n,
            k,
            theorem,
            oracle_fallback,
        } => {
            let record = witness_for(*n, *k, *theorem, *oracle_fallback, &oracle)?;
            emitted.emit_rows(&record, || format!("{}\n", describe(&record)), &witness_rows(std::slice::from_ref(&record)))?;
        }
        Command::Cover { n, theorem } => {
            let report = match theorem {
                3 => theorem3_cover(*n)?,
                5 => theorem5_cover(*n, &oracle)?,
                other => return Err(Error::Config(format!("no segment driver for theorem {other}"))),
            };
            write_artifact(cli.out.as_deref(), &format!("cover_t{theorem}_{n}.json"), &report)?;
            write_csv_artifact(cli.out.as_deref(), &format!("cover_t{theorem}_{n}.csv"), &witness_rows(&report.witnesses))?;
            emitted.emit_rows(&report, || coverage_text(&report), &witness_rows(&report.witnesses))?;
            return Ok(if report.is_complete() { 0 } else { 1 });
        }
        Command::Bounds { n } => {
            let b = theorem5_bounds(*n)?;
            emitted.emit(
                &b,
                || format!("y1 = {}\ny2 = {}\nheads {}..={}\n", b.y1, b.y2, b.head_lo, b.head_hi),
                &[
                    &["n", "y1", "y2", "head_lo", "head_hi"],
                    &[&n.to_string(), &b.y1.to_string(), &b.y2.to_string(), &b.head_lo.to_string(), &b.head_hi.to_string()],
                ],
            )?;
        }
        Command::Verify {
            checks,
            n_min,
            n_max,
        } => {
            let ids = if checks.is_empty() {
                CheckId::all()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<Vec<_>>>()?
            };
            let range = match (n_min, n_max) {
                (Some(lo), Some(hi)) if lo <= hi => Some((*lo, *hi)),
                (Some(lo), Some(hi)) => {
                    return Err(Error::Config(format!("empty range {lo}..{hi}")));
                }
                _ => None,
            };
            let reports = run_checks(&ids, range, &oracle);
            let summary = Summary::of(&reports);
            if let Some(dir) = cli.out.as_deref() {
                for report in &reports {
                    let name = format!("{}.json", report.check_id.replace(':', "_"));
                    write_artifact(Some(dir), &name, report)?;
                }
                write_artifact(Some(dir), "summary.json", &summary)?;
                write_text(dir, "summary.txt", &summary.to_table())?;
            }
            let mut rows = vec![vec!["check_id".to_owned(), "n_min".into(), "n_max".into(), "cases_run".into(), "cases_failed".into()]];
            rows.extend(summary.checks.iter().map(|c| {
                vec![
                    c.check_id.clone(),
                    c.n_range[0].to_string(),
                    c.n_range[1].to_string(),
                    c.cases_run.to_string(),
                    c.cases_failed.to_string(),
                ]
            }));
            let text = || {
                let mut t = summary.to_table();
                for r in reports.iter().filter(|r| !r.passed()) {
                    for s in &r.failure_samples {
                        let _ = writeln!(t, "{}: {} expected {} got {}", r.check_id, s.inputs, s.expected, s.got);
                    }
                }
                t
            };
            emitted.emit_rows(&summary, text, &rows)?;
            return Ok(if summary.passed() { 0 } else { 1 });
        }
        Command::Conjecture { n } => {
            let report = conjecture_scan(*n, &oracle)?;
            write_artifact(cli.out.as_deref(), &format!("conjecture_{n}.json"), &report)?;
            emitted.emit_rows(&report, || coverage_text(&report), &witness_rows(&report.witnesses))?;
        }
        Command::Cayley { n } => {
            let s = cayley_spectrum(*n)?;
            let joined: Vec<String> = s.values.iter().map(ToString::to_string).collect();
            let mut rows = vec![vec!["n".to_owned(), "eigenvalue".into()]];
            rows.extend(s.values.iter().map(|v| vec![n.to_string(), v.to_string()]));
            emitted.emit_rows(&s, || format!("{}\n", joined.join(" ")), &rows)?;
        }
        Command::Count { n } => {
            if *n > crate::oracle::MAX_COUNT_N {
                return Err(Error::SizeLimitExceeded {
                    n: u32::try_from(*n).unwrap_or(u32::MAX),
                    limit: crate::oracle::MAX_COUNT_N as u32,
                });
            }
            let count = partition_count(*n).to_string();
            emitted.emit(
                &serde_json::json!({ "n": n, "count": count }),
                || format!("{count}\n"),
                &[&["n", "count"], &[&n.to_string(), &count]],
            )?;
        }
    }
    Ok(0)
}

fn witness_for(n: u32, k: i64, theorem: Option<u8>, fallback: bool, oracle: &Oracle) -> Result<WitnessRecord> {
    match theorem {
        Some(3) => theorem3_witness(n, k),
        Some(5) => theorem5_witness(n, k, oracle),
        Some(other) => Err(Error::Config(format!("no witness driver for theorem {other}"))),
        None if fallback && n < THEOREM3_MIN_N => theorem3_witness_or_oracle(n, k, oracle),
        None if k.abs() <= i64::from(n) => theorem3_witness(n, k),
        None => theorem5_witness(n, k, oracle),
    }
}

fn describe(r: &WitnessRecord) -> String {
    let mut s = format!("n={} k={} {} {}", r.n, r.target, r.family(), r.partition);
    if r.family_chain.len() > 1 {
        let chain: Vec<String> = r.family_chain.iter().map(ToString::to_string).collect();
        let _ = write!(s, " via {}", chain.join(" > "));
    }
    s.push_str(if r.verified { " verified" } else { " UNVERIFIED" });
    s
}

fn witness_rows(records: &[WitnessRecord]) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "n".to_owned(),
        "target".into(),
        "family".into(),
        "partition".into(),
        "verified".into(),
    ]];
    rows.extend(records.iter().map(|r| {
        vec![
            r.n.to_string(),
            r.target.to_string(),
            r.family(),
            r.partition.to_string(),
            r.verified.to_string(),
        ]
    }));
    rows
}

fn coverage_text(report: &CoverageReport) -> String {
    let mut t = format!(
        "n={} segment [{}, {}]: {} of {} covered\n",
        report.n,
        report.segment[0],
        report.segment[1],
        report.covered,
        report.len()
    );
    if let Some(m) = report.max_first_part {
        let _ = writeln!(t, "max first part {m}");
    }
    for (family, count) in &report.histogram {
        let _ = writeln!(t, "  {family:<20} {count}");
    }
    if !report.failures.is_empty() {
        let missing: Vec<String> = report.failures.iter().map(|f| f.target.to_string()).collect();
        let _ = writeln!(t, "missing: {}", missing.join(" "));
    }
    t
}

struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Emitter<'_> {
    fn emit(&mut self, json: &impl Serialize, text: impl FnOnce() -> String, rows: &[&[&str]]) -> Result<()> {
        let rows: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|s| (*s).to_owned()).collect())
            .collect();
        self.emit_rows(json, text, &rows)
    }

    fn emit_rows(&mut self, json: &impl Serialize, text: impl FnOnce() -> String, rows: &[Vec<String>]) -> Result<()> {
        let rendered = match self.format {
            Format::Text => text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(json).map_err(io_error)?;
                s.push('\n');
                s
            }
            Format::Csv => csv_string(rows)?,
        };
        self.out.write_all(rendered.as_bytes()).map_err(io_error)
    }
}

fn csv_string(rows: &[Vec<String>]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row).map_err(io_error)?;
    }
    let bytes = writer.into_inner().map_err(io_error)?;
    String::from_utf8(bytes).map_err(io_error)
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Config(format!("output failed: {e}"))
}

fn write_text(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir).map_err(io_error)?;
    fs::write(dir.join(name), contents).map_err(io_error)
}

fn write_artifact(dir: Option<&Path>, name: &str, value: &impl Serialize) -> Result<()> {
    let Some(dir) = dir else {
        return Ok(());
    };
    let mut json = serde_json::to_string_pretty(value).map_err(io_error)?;
    json.push('\n');
    write_text(dir, name, &json)
}

fn write_csv_artifact(dir: Option<&Path>, name: &str, rows: &[Vec<String>]) -> Result<()> {
    match dir {
        Some(dir) => write_text(dir, name, &csv_string(rows)?),
        None => Ok(()),
    }
}
