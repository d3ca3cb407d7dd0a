//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage errors
//! (bad arguments, unknown types, guard violations).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::duality::{verify_duality_bijection, DualityReport};
use crate::error::Error;
use crate::graded_oracle::{gl_report, GlReport};
use crate::ideals::{enumerate_ideals, generators, is_long_ideal, long_ideals,
    maximal_long_ideals, rootlet, AbelianIdeal};
use crate::rootsys::{Root, RootSystem, SimpleType};
use crate::verify::{verify_many, TypeVerification};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "abelian-ideals",
    version,
    about = "Abelian ideals of Borel subalgebras: enumeration, long ideals, rootlets, duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Print nothing on stdout; rely on the exit code (and --out).
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all Abelian ideals with word, long flag, rootlet and generators.
    Ideals {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
    },
    /// List the long Abelian ideals and check the count d^a.
    Long {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
    },
    /// Rootlet of every nontrivial ideal.
    Rootlets {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
    },
    /// Run the invariant suite for one type or for all types.
    Verify {
        #[arg(value_name = "TYPE", required_unless_present = "all", conflicts_with = "all")]
        ty: Option<SimpleType>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Long ideals versus commutative subalgebras of the dual little adjoint module.
    Dual {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
    },
    /// Brute-force count for gl_r x gl_(n-r) in gl_n against the closed formula.
    GlOracle { n: usize, r: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// One ideal in the machine-readable listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub roots: Vec<Root>,
    pub word: Vec<usize>,
    pub long: bool,
    pub rootlet: Option<Root>,
    pub generators: Vec<Root>,
}

impl IdealRecord {
    pub fn new(rs: &RootSystem, ideal: &AbelianIdeal) -> Self {
        Self {
            simple_type: rs.simple_type(),
            roots: ideal.roots().to_vec(),
            word: ideal.word().letters().to_vec(),
            long: is_long_ideal(rs, ideal),
            rootlet: rootlet(rs, ideal).ok(),
            generators: generators(rs, ideal),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongListing {
    pub ideals: Vec<IdealRecord>,
    pub maximal: Vec<IdealRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum ReportBody {
    Ideals(Vec<IdealRecord>),
    Long(LongListing),
    Rootlets(Vec<IdealRecord>),
    Verify(Vec<TypeVerification>),
    Dual(DualityReport),
    GlOracle(GlReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: Vec<String>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub simple_type: Option<String>,
    pub counts: BTreeMap<String, u64>,
    pub fixtures_passed: usize,
    pub fixtures_failed: usize,
    /// Wall-clock time; shown in text output only so JSON stays reproducible.
    #[serde(skip)]
    pub elapsed_ms: u128,
    pub body: ReportBody,
}

impl Report {
    fn new(command: Vec<String>, simple_type: Option<SimpleType>, body: ReportBody) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            simple_type: simple_type.map(|t| t.to_string()),
            counts: BTreeMap::new(),
            fixtures_passed: 0,
            fixtures_failed: 0,
            elapsed_ms: 0,
            body,
        }
    }

    fn count(mut self, key: &str, value: u64) -> Self {
        self.counts.insert(key.to_string(), value);
        self
    }

    fn fixture(&mut self, ok: bool) {
        if ok {
            self.fixtures_passed += 1;
        } else {
            self.fixtures_failed += 1;
        }
    }

    pub fn succeeded(&self) -> bool {
        self.fixtures_failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::ParseType(_)
            | Error::InadmissibleType { .. }
            | Error::GuardExceeded { .. }
            | Error::UnsupportedType(_)
            | Error::SimplyLaced(_)
            | Error::BlockShape { .. }
    )
}

fn ideals_report(command: Vec<String>, t: SimpleType) -> Result<Report, Error> {
    let rs = RootSystem::build(t)?;
    let ideals = enumerate_ideals(&rs);
    let records: Vec<IdealRecord> = ideals.iter().map(|i| IdealRecord::new(&rs, i)).collect();
    let long = records.iter().filter(|r| r.long).count() as u64;
    let mut report = Report::new(command, Some(t), ReportBody::Ideals(records))
        .count("ideals", ideals.len() as u64)
        .count("long_ideals", long);
    report.fixture(ideals.len() == 1 << rs.rank());
    Ok(report)
}

fn long_report(command: Vec<String>, t: SimpleType) -> Result<Report, Error> {
    let rs = RootSystem::build(t)?;
    let identity = rs.long_ideal_count_formula()?;
    let long = long_ideals(&rs)?;
    let maximal = maximal_long_ideals(&rs)?;
    let listing = LongListing {
        ideals: long.iter().map(|i| IdealRecord::new(&rs, i)).collect(),
        maximal: maximal.iter().map(|i| IdealRecord::new(&rs, i)).collect(),
    };
    let mut report = Report::new(command, Some(t), ReportBody::Long(listing))
        .count("long_ideals", long.len() as u64)
        .count("d", rs.length_ratio() as u64)
        .count("a", rs.long_simple_count() as u64)
        .count("d_pow_a", identity.power as u64);
    report.fixture(long.len() as i64 == identity.power);
    Ok(report)
}

fn rootlets_report(command: Vec<String>, t: SimpleType) -> Result<Report, Error> {
    let rs = RootSystem::build(t)?;
    let ideals = enumerate_ideals(&rs);
    let records: Vec<IdealRecord> = ideals
        .iter()
        .filter(|i| !i.is_empty())
        .map(|i| IdealRecord::new(&rs, i))
        .collect();
    let n = records.len() as u64;
    let mut report = Report::new(command, Some(t), ReportBody::Rootlets(records.clone()))
        .count("nontrivial_ideals", n);
    for r in &records {
        report.fixture(r.rootlet.as_ref().is_some_and(|tau| rs.is_long(tau)));
    }
    Ok(report)
}

fn verify_report(
    command: Vec<String>,
    ty: Option<SimpleType>,
    all: bool,
    max_rank: usize,
) -> Result<Report, Error> {
    let types = match ty {
        Some(t) if !all => vec![t],
        _ => SimpleType::catalogue(max_rank),
    };
    let results = verify_many(&types)?;
    let mut report = Report::new(command, ty.filter(|_| !all), ReportBody::Verify(Vec::new()))
        .count("types", results.len() as u64);
    for r in &results {
        for c in &r.checks {
            report.fixture(c.passed);
        }
    }
    report.body = ReportBody::Verify(results);
    Ok(report)
}

fn dual_report(command: Vec<String>, t: SimpleType) -> Result<Report, Error> {
    let d = verify_duality_bijection(t)?;
    let mut report = Report::new(command, Some(t), ReportBody::Dual(d.clone()))
        .count("long_ideals", d.long_ideals as u64)
        .count("dual_candidates", d.dual_candidates as u64);
    report.fixture(d.bijection);
    Ok(report)
}

fn gl_oracle_report(command: Vec<String>, n: usize, r: usize) -> Result<Report, Error> {
    let g = gl_report(n, r)?;
    let mut report = Report::new(command, None, ReportBody::GlOracle(g.clone()))
        .count("count", g.count)
        .count("formula", g.formula);
    report.fixture(g.ok);
    Ok(report)
}

fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(headers.to_vec());
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("  "));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn render_roots(rs: Option<&RootSystem>, roots: &[Root]) -> String {
    let parts: Vec<String> = roots
        .iter()
        .map(|r| rs.map_or_else(|| r.to_string(), |rs| rs.render(r)))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn render_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|l| format!("s{l}")).collect()
    }
}

fn ideal_rows(rs: Option<&RootSystem>, records: &[IdealRecord]) -> Vec<Vec<String>> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                i.to_string(),
                r.roots.len().to_string(),
                if r.long { "yes" } else { "no" }.to_string(),
                r.rootlet.as_ref().map_or("-".to_string(), |t| t.to_string()),
                render_word(&r.word),
                render_roots(rs, &r.roots),
                render_roots(rs, &r.generators),
            ]
        })
        .collect()
}

const IDEAL_HEADERS: [&str; 7] = ["#", "size", "long", "rootlet", "word", "roots", "generators"];

fn render_text(report: &Report) -> String {
    let rs = report
        .simple_type
        .as_ref()
        .and_then(|t| t.parse().ok())
        .and_then(|t| RootSystem::build(t).ok());
    let mut out = String::new();
    match &report.body {
        ReportBody::Ideals(records) => {
            out.push_str(&format!(
                "{}: {} Abelian ideals\n\n",
                report.simple_type.as_deref().unwrap_or("?"),
                records.len()
            ));
            out.push_str(&table(&IDEAL_HEADERS, &ideal_rows(rs.as_ref(), records)));
        }
        ReportBody::Long(listing) => {
            out.push_str(&format!(
                "{}: {} long Abelian ideals (d^a = {})\n\n",
                report.simple_type.as_deref().unwrap_or("?"),
                listing.ideals.len(),
                report.counts.get("d_pow_a").copied().unwrap_or(0)
            ));
            out.push_str(&table(&IDEAL_HEADERS, &ideal_rows(rs.as_ref(), &listing.ideals)));
            for m in &listing.maximal {
                out.push_str(&format!("\nmaximal: {}\n", render_roots(rs.as_ref(), &m.roots)));
            }
        }
        ReportBody::Rootlets(records) => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        render_roots(rs.as_ref(), &r.roots),
                        r.rootlet.as_ref().map_or("-".into(), |t| t.to_string()),
                        if r.long { "*" } else { "" }.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&["ideal", "rootlet", "long"], &rows));
        }
        ReportBody::Verify(results) => {
            let mut rows = Vec::new();
            for r in results {
                for c in &r.checks {
                    rows.push(vec![
                        r.simple_type.to_string(),
                        c.name.clone(),
                        if c.passed { "ok" } else { "FAIL" }.to_string(),
                        c.detail.clone(),
                    ]);
                }
            }
            out.push_str(&table(&["type", "check", "result", "detail"], &rows));
        }
        ReportBody::Dual(d) => {
            out.push_str(&format!(
                "{} long ideals: {}\n{} commutative b-stable subalgebras ({:?}): {}\nbijection: {}\n",
                d.simple_type, d.long_ideals, d.dual_type, d.target, d.dual_candidates, d.bijection
            ));
            if let Some(alt) = &d.alternate {
                out.push_str(&format!(
                    "note: predicate {:?} gives {} ({})\n",
                    alt.target,
                    alt.dual_candidates,
                    if alt.agrees { "agrees" } else { "disagrees" }
                ));
            }
            let rows: Vec<Vec<String>> = d
                .witnesses
                .iter()
                .map(|w| vec![render_roots(None, &w.ideal), render_roots(None, &w.dual)])
                .collect();
            out.push('\n');
            out.push_str(&table(&["ideal", "dual"], &rows));
        }
        ReportBody::GlOracle(g) => {
            out.push_str(&format!(
                "gl_{} / gl_{} x gl_{}: count={} formula={} {}\n",
                g.n,
                g.r,
                g.n - g.r,
                g.count,
                g.formula,
                if g.ok { "OK" } else { "MISMATCH" }
            ));
        }
    }
    out.push_str(&format!(
        "\nchecks: {} passed, {} failed ({} ms)\n",
        report.fixtures_passed, report.fixtures_failed, report.elapsed_ms
    ));
    out
}

fn render_csv(report: &Report) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let type_name = report.simple_type.clone().unwrap_or_default();
    let ideal_rows = |w: &mut csv::Writer<Vec<u8>>, records: &[IdealRecord]| -> Result<(), csv::Error> {
        w.write_record(["type", "ideal_index", "size", "long", "rootlet", "word"])?;
        for (i, r) in records.iter().enumerate() {
            let word: Vec<String> = r.word.iter().map(usize::to_string).collect();
            w.write_record([
                type_name.clone(),
                i.to_string(),
                r.roots.len().to_string(),
                r.long.to_string(),
                r.rootlet.as_ref().map_or(String::new(), Root::to_string),
                word.join(" "),
            ])?;
        }
        Ok(())
    };
    match &report.body {
        ReportBody::Ideals(records) | ReportBody::Rootlets(records) => ideal_rows(&mut w, records)?,
        ReportBody::Long(listing) => ideal_rows(&mut w, &listing.ideals)?,
        ReportBody::Verify(results) => {
            w.write_record(["type", "check", "passed", "detail"])?;
            for r in results {
                for c in &r.checks {
                    w.write_record([
                        r.simple_type.to_string(),
                        c.name.clone(),
                        c.passed.to_string(),
                        c.detail.clone(),
                    ])?;
                }
            }
        }
        ReportBody::Dual(d) => {
            w.write_record(["type", "long_ideals", "dual_candidates", "bijection"])?;
            w.write_record([
                d.simple_type.to_string(),
                d.long_ideals.to_string(),
                d.dual_candidates.to_string(),
                d.bijection.to_string(),
            ])?;
        }
        ReportBody::GlOracle(g) => {
            w.write_record(["n", "r", "count", "formula", "ok"])?;
            w.write_record([
                g.n.to_string(),
                g.r.to_string(),
                g.count.to_string(),
                g.formula.to_string(),
                g.ok.to_string(),
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Builds the report for already-parsed arguments.
fn execute(cli: &Cli, command: Vec<String>) -> Result<Report, Error> {
    match &cli.command {
        Command::Ideals { ty } => ideals_report(command, *ty),
        Command::Long { ty } => long_report(command, *ty),
        Command::Rootlets { ty } => rootlets_report(command, *ty),
        Command::Verify { ty, all, max_rank } => verify_report(command, *ty, *all, *max_rank),
        Command::Dual { ty } => dual_report(command, *ty),
        Command::GlOracle { n, r } => gl_oracle_report(command, *n, *r),
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report to `stdout` (or `--out`). Returns the process exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let command: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();

    let started = Instant::now();
    let mut report = match execute(&cli, command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if usage_error(&e) { 2 } else { 1 };
        }
    };
    report.elapsed_ms = started.elapsed().as_millis();

    let rendered = match cli.format {
        Format::Text => render_text(&report),
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => match render_csv(&report) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return 1;
            }
        },
    };

    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return 1;
            }
            if !cli.quiet {
                let _ = writeln!(stdout, "wrote {}", path.display());
            }
        }
        None if !cli.quiet => {
            let _ = write!(stdout, "{rendered}");
        }
        None => {}
    }

    if !report.succeeded() {
        for line in failure_lines(&report) {
            let _ = writeln!(stderr, "{line}");
        }
        return 1;
    }
    0
}

fn failure_lines(report: &Report) -> Vec<String> {
    match &report.body {
        ReportBody::Verify(results) => results
            .iter()
            .flat_map(|r| {
                r.failures()
                    .map(move |c| format!("FAIL {} {}: {}", r.simple_type, c.name, c.detail))
            })
            .collect(),
        _ => vec![format!("FAIL: {} check(s) failed", report.fixtures_failed)],
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["abelian-ideals"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gl_oracle_text() {
        let (code, out, _) = capture(&["gl-oracle", "4", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("count=12 formula=12 OK"), "{out}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(capture(&["ideals", "X9"]).0, 2);
        assert_eq!(capture(&["ideals", "B1"]).0, 2);
        assert_eq!(capture(&["frobnicate"]).0, 2);
        assert_eq!(capture(&["long", "A3"]).0, 2);
        assert_eq!(capture(&["gl-oracle", "9", "4"]).0, 2);
        assert_eq!(capture(&["gl-oracle", "3", "0"]).0, 2);
        assert_eq!(capture(&["dual", "D4"]).0, 2);
    }

    #[test]
    fn quiet_suppresses_output() {
        let (code, out, _) = capture(&["long", "C3", "--quiet"]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
    }

    #[test]
    fn csv_columns() {
        let (code, out, _) = capture(&["ideals", "C2", "--format", "csv"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("type,ideal_index,size,long,rootlet,word"));
        assert_eq!(lines.next(), Some("C2,0,0,true,,"));
        assert_eq!(lines.next(), Some("C2,1,1,true,2a1+a2,0"));
        assert_eq!(lines.next(), Some("C2,2,2,false,a2,1 0"));
    }
}
