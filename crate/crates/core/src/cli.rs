//! Command-line front end behind the `secinv` binary.
//!
//! Every subcommand writes a deterministic payload to stdout; errors go to
//! stderr and map to exit codes 1 (verification or consistency), 2 (input)
//! and 3 (resource caps).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{catalog_up_to, parse_group};
use crate::cyclo::{CycloElement, CycloField};
use crate::engine::{self, ClauseReport, ClauseStatus, Options, SecondaryResult, VerificationReport, VerifyOptions};
use crate::evalpoints::{build_point_set_with_cap, epsilon, DEFAULT_MAX_N};
use crate::monomials::count_canonical;
use crate::perm::PermGroup;
use crate::series::{binomial2, hilbert_series, secondary_spec};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "secinv",
    version,
    about = "Secondary invariants of permutation groups over the elementary symmetric polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute secondary and irreducible secondary invariants.
    Secondary(ComputeArgs),
    /// Print a prefix of the Hilbert series and the secondary numerator.
    Hilbert(HilbertArgs),
    /// Print the evaluation points, one per coset.
    Points(GroupArgs),
    /// Count canonical monomials under the staircase.
    CanonicalMonomials(GroupArgs),
    /// Compute and check the result clause by clause.
    Verify(VerifyArgs),
    /// Time the computation over a list of groups and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group name (S4, A3, C5, D6, trivial3), `n:(1 2)(3 4);(1 3)`, or JSON.
    #[arg(long, value_name = "NAME", required_unless_present = "group_file", conflicts_with = "group_file")]
    pub group: Option<String>,
    /// File holding a group specification.
    #[arg(long, value_name = "PATH")]
    pub group_file: Option<PathBuf>,
    /// JSON output (the default).
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable output.
    #[arg(long)]
    pub text: bool,
    /// Largest degree for which all n! evaluation words are enumerated.
    #[arg(long, value_name = "INT", default_value_t = DEFAULT_MAX_N)]
    pub max_n_cap: usize,
}

impl GroupArgs {
    fn load(&self) -> Result<PermGroup> {
        match (&self.group, &self.group_file) {
            (Some(text), _) => parse_group(text),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
                parse_group(&text)
            }
            (None, None) => Err(Error::Input("no group given".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Skip nonzero partitions among candidates (falls back if a degree comes up short).
    #[arg(long)]
    pub exclude_partitions: bool,
    /// Run verification after the computation.
    #[arg(long)]
    pub verify: bool,
    /// Worker threads for evaluation.
    #[arg(long, value_name = "INT", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallel: u16,
}

impl ComputeArgs {
    fn options(&self) -> Options {
        Options {
            exclude_partitions: self.exclude_partitions,
            parallelism: self.parallel as usize,
            max_n: self.group.max_n_cap,
        }
    }
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Number of series coefficients to print (default binom(n,2) + n + 1).
    #[arg(long, value_name = "INT")]
    pub terms: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub compute: ComputeArgs,
    /// Largest degree for which invariants are expanded and re-evaluated.
    #[arg(long, value_name = "INT", default_value_t = engine::DEFAULT_EXPANSION_MAX_N)]
    pub expansion_max_n: usize,
    /// Largest degree for the brute-force orbit-sum dimension check.
    #[arg(long, value_name = "INT", default_value_t = engine::DEFAULT_KEYLEMMA_MAX_N)]
    pub keylemma_max_n: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Newline-separated group specifications; defaults to the built-in catalog.
    #[arg(long, value_name = "PATH")]
    pub list: Option<PathBuf>,
    /// With the built-in catalog, only groups of degree at most this.
    #[arg(long, value_name = "INT", default_value_t = 7)]
    pub max_n: usize,
    /// Skip nonzero partitions among candidates.
    #[arg(long)]
    pub exclude_partitions: bool,
    /// Worker threads for evaluation.
    #[arg(long, value_name = "INT", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub parallel: u16,
    /// Largest degree for which all n! evaluation words are enumerated.
    #[arg(long, value_name = "INT", default_value_t = DEFAULT_MAX_N)]
    pub max_n_cap: usize,
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome {
                code: e.exit_code(),
                stdout,
                stderr,
            };
        }
    };
    let mut stderr = String::new();
    match execute(&cli.command, &mut stderr) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            Outcome {
                code: e.exit_code(),
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn execute(command: &Command, stderr: &mut String) -> Result<(i32, String)> {
    match command {
        Command::Secondary(args) => {
            let group = args.group.load()?;
            let result = engine::secondary_invariants(&group, &args.options())?;
            log_fallbacks(&result, stderr);
            let out = if args.group.text {
                secondary_text(&result)
            } else {
                secondary_json(&result)
            };
            let mut code = 0;
            if args.verify {
                let report = engine::verify(&result, &group);
                if !report.passed() {
                    let _ = write!(stderr, "{}", report_text(&report));
                    code = 1;
                }
            }
            Ok((code, out))
        }
        Command::Hilbert(args) => {
            let group = args.group.load()?;
            let spec = secondary_spec(&group)?;
            let terms = args.terms.unwrap_or(binomial2(group.degree()) + group.degree() + 1);
            let series = hilbert_series(&group, terms.saturating_sub(1))?;
            let prefix: Vec<u64> = series
                .to_naturals()
                .ok_or_else(|| Error::consistency("Hilbert series has a non-natural coefficient"))?;
            let mut prefix = prefix;
            prefix.resize(terms, 0);
            let out = HilbertJson {
                n: spec.n,
                group_order: spec.group_order,
                hilbert_prefix: prefix,
                secondary_numerator: spec.numerator_ints(),
                t: spec.t,
            };
            Ok((0, if args.group.text { hilbert_text(&out) } else { to_json(&out) }))
        }
        Command::Points(args) => {
            let group = args.load()?;
            let points = build_point_set_with_cap(&group, CycloField::get(group.degree()), args.max_n_cap)?;
            let out = PointsJson {
                n: group.degree(),
                group_order: group.order(),
                t: points.len(),
                points: points.points().iter().map(|p| p.0.clone()).collect(),
            };
            if args.text {
                let mut s = String::new();
                for p in &out.points {
                    let _ = writeln!(s, "{}", join(p, " "));
                }
                Ok((0, s))
            } else {
                Ok((0, to_json(&out)))
            }
        }
        Command::CanonicalMonomials(args) => {
            let group = args.load()?;
            let counts = count_canonical(&group);
            if args.text {
                let mut s = String::new();
                let _ = writeln!(s, "per degree: {}", join(&counts.per_degree, " "));
                let _ = writeln!(s, "C = {}", counts.c);
                let _ = writeln!(s, "C' = {}", counts.c_prime);
                Ok((0, s))
            } else {
                Ok((0, to_json(&counts)))
            }
        }
        Command::Verify(args) => {
            let group = args.compute.group.load()?;
            let result = engine::secondary_invariants(&group, &args.compute.options())?;
            log_fallbacks(&result, stderr);
            let opts = VerifyOptions {
                expansion_max_n: args.expansion_max_n,
                keylemma_max_n: args.keylemma_max_n,
            };
            let report = engine::verify_with(&result, &group, &opts);
            let code = if report.passed() { 0 } else { 1 };
            let out = if args.compute.group.text {
                report_text(&report)
            } else {
                to_json(&VerifyJson {
                    n: group.degree(),
                    group_order: group.order(),
                    t: result.t(),
                    passed: report.passed(),
                    clauses: &report.clauses,
                })
            };
            Ok((code, out))
        }
        Command::Bench(args) => bench(args, stderr),
    }
}

fn log_fallbacks(result: &SecondaryResult, stderr: &mut String) {
    for (d, st) in result.stats.iter().enumerate() {
        if st.fallback {
            let _ = writeln!(stderr, "note: degree {d} needed partition candidates");
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

#[derive(Serialize)]
struct SecondaryJson<'a> {
    n: usize,
    group_order: usize,
    t: usize,
    epsilon: i64,
    numerator: Vec<u64>,
    points: Vec<&'a [u32]>,
    irreducibles: Vec<IrreducibleJson<'a>>,
    secondaries: Vec<SecondaryEntryJson<'a>>,
}

#[derive(Serialize)]
struct IrreducibleJson<'a> {
    id: usize,
    degree: usize,
    monomial: &'a [u32],
    phi: &'a [CycloElement],
}

#[derive(Serialize)]
struct SecondaryEntryJson<'a> {
    degree: usize,
    factors: &'a [usize],
    phi: &'a [CycloElement],
}

/// The result in the stable JSON layout printed by `secinv secondary`.
pub fn secondary_json(result: &SecondaryResult) -> String {
    let out = SecondaryJson {
        n: result.n(),
        group_order: result.spec.group_order,
        t: result.t(),
        epsilon: epsilon(result.n()),
        numerator: result.spec.numerator_ints(),
        points: result.points.points().iter().map(|p| p.0.as_slice()).collect(),
        irreducibles: result
            .all_irreducibles()
            .map(|i| IrreducibleJson {
                id: i.id,
                degree: i.degree,
                monomial: &i.monomial.0,
                phi: i.phi.entries(),
            })
            .collect(),
        secondaries: result
            .all_secondaries()
            .map(|s| SecondaryEntryJson {
                degree: s.degree,
                factors: &s.factors,
                phi: s.phi.entries(),
            })
            .collect(),
    };
    to_json(&out)
}

fn numerator_text(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| match (d, c) {
            (0, c) => c.to_string(),
            (1, 1) => "z".into(),
            (1, c) => format!("{c}z"),
            (d, 1) => format!("z^{d}"),
            (d, c) => format!("{c}z^{d}"),
        })
        .collect();
    terms.join(" + ")
}

fn secondary_text(result: &SecondaryResult) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "group of order {} on {} points, t = {}, epsilon = {}",
        result.spec.group_order,
        result.n(),
        result.t(),
        epsilon(result.n())
    );
    let _ = writeln!(s, "numerator: {}", numerator_text(&result.spec.numerator_ints()));
    for irr in result.all_irreducibles() {
        let _ = writeln!(
            s,
            "irreducible {} (degree {}): orbit sum of x^({})",
            irr.id,
            irr.degree,
            join(&irr.monomial.0, ",")
        );
    }
    for sec in result.all_secondaries() {
        let body = if sec.factors.is_empty() {
            "1".to_string()
        } else {
            sec.factors.iter().map(|f| format!("η{f}")).collect::<Vec<_>>().join("·")
        };
        let _ = writeln!(s, "degree {}: {body}", sec.degree);
    }
    s
}

#[derive(Serialize)]
struct HilbertJson {
    n: usize,
    group_order: usize,
    hilbert_prefix: Vec<u64>,
    secondary_numerator: Vec<u64>,
    t: usize,
}

fn hilbert_text(h: &HilbertJson) -> String {
    format!(
        "hilbert series: {} ...\nsecondary numerator: {}\nt = {}\n",
        join(&h.hilbert_prefix, " "),
        numerator_text(&h.secondary_numerator),
        h.t
    )
}

#[derive(Serialize)]
struct PointsJson {
    n: usize,
    group_order: usize,
    t: usize,
    points: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    n: usize,
    group_order: usize,
    t: usize,
    passed: bool,
    clauses: &'a [ClauseReport],
}

fn report_text(report: &VerificationReport) -> String {
    let mut s = String::new();
    for c in &report.clauses {
        let status = match &c.status {
            ClauseStatus::Passed => "pass".to_string(),
            ClauseStatus::Failed(msg) => format!("FAIL: {msg}"),
            ClauseStatus::Skipped(why) => format!("skipped ({why})"),
        };
        let _ = writeln!(s, "({}) {}: {status}", c.clause, c.description);
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn bench(args: &BenchArgs, stderr: &mut String) -> Result<(i32, String)> {
    let groups: Vec<(String, PermGroup)> = match &args.list {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_group(l).map(|g| (l.to_string(), g)))
                .collect::<Result<_>>()?
        }
        None => catalog_up_to(args.max_n)?,
    };
    let options = Options {
        exclude_partitions: args.exclude_partitions,
        parallelism: args.parallel as usize,
        max_n: args.max_n_cap,
    };
    let mut out = String::from("name,n,order,t,seconds,peak_candidates\n");
    for (name, group) in &groups {
        let clock = Instant::now();
        let result = engine::secondary_invariants(group, &options)?;
        let seconds = (clock.elapsed() + group.closure_time()).as_secs_f64();
        log_fallbacks(&result, stderr);
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{}",
            csv_field(name),
            group.degree(),
            group.order(),
            result.t(),
            seconds,
            result.peak_candidates()
        );
    }
    Ok((0, out))
}
