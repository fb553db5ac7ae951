//! Command dispatch and output rendering for the `chernroots` binary.
//!
//! Exit statuses: 0 success, 1 verification failure, 2 usage or validation
//! error. CSV output has a header row and LF line endings; JSON output is a
//! single object with `command`, `parameters` and `results`.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use chernroots::catalog::{self, CatalogEntry, CoverageReport, Family};
use chernroots::exact::to_pq;
use chernroots::fourfold::{self, FourfoldFixedInvariants, TableRow};
use chernroots::identity::{self, Perturbation, VerificationReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PerturbArg {
    DropExpC1,
    SquaredNormalizer,
    RootScaleThree,
}

impl From<PerturbArg> for Perturbation {
    fn from(p: PerturbArg) -> Self {
        match p {
            PerturbArg::DropExpC1 => Perturbation::DropExpC1,
            PerturbArg::SquaredNormalizer => Perturbation::SquaredNormalizer,
            PerturbArg::RootScaleThree => Perturbation::RootScaleThree,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "chernroots",
    version,
    about = "Exact characteristic-class checks and fixed-surface tables"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the Todd / exterior-character / Â series identities
    Verify {
        /// Root counts to check, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = [1u32, 2, 3, 4],
              value_parser = clap::value_parser!(u32).range(1..))]
        roots: Vec<u32>,
        /// Truncation degree for the per-root and product checks
        #[arg(long, default_value_t = 8)]
        degree: u32,
        /// Deliberately break one factor of the identities (mutation testing)
        #[arg(long, value_enum)]
        perturb: Option<PerturbArg>,
    },
    /// The distinct (K², χ) pairs of fixed surfaces, with realizing traces
    Table,
    /// Fixed-surface invariants for one trace value
    Invariants {
        /// Trace of the involution on H^{1,1}
        #[arg(long, allow_negative_numbers = true)]
        trace: i64,
    },
    /// Example families and their invariants
    Catalog {
        /// Restrict to one family
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

fn document(command: &str, parameters: Value, results: Value) -> String {
    let doc = json!({
        "command": command,
        "parameters": parameters,
        "results": results,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify {
            roots,
            degree,
            perturb,
        } => {
            let p = perturb.map(Perturbation::from).unwrap_or_default();
            cmd_verify_with(roots, *degree, p, cli.format)
        }
        Command::Table => cmd_table(cli.format),
        Command::Invariants { trace } => cmd_invariants(*trace, cli.format),
        Command::Catalog { family } => cmd_catalog(family.as_deref(), cli.format),
    }
}

pub fn cmd_verify(roots: &[u32], degree: u32, format: Format) -> Outcome {
    cmd_verify_with(roots, degree, Perturbation::None, format)
}

pub fn cmd_verify_with(
    roots: &[u32],
    degree: u32,
    perturbation: Perturbation,
    format: Format,
) -> Outcome {
    if roots.contains(&0) {
        return Outcome::usage("root counts must be at least 1");
    }
    let roots: Vec<usize> = roots.iter().map(|&m| m as usize).collect();
    let reports = match identity::run_suite_with(&roots, degree as usize, perturbation) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let passed = reports.iter().all(|r| r.passed);
    let stdout = match format {
        Format::Text => verify_text(&reports, passed),
        Format::Csv => verify_csv(&reports),
        Format::Json => {
            let mut sorted = roots.clone();
            sorted.sort_unstable();
            sorted.dedup();
            document(
                "verify",
                json!({ "roots": sorted, "degree": degree, "perturbation": to_value(&perturbation) }),
                json!({ "passed": passed, "reports": to_value(&reports) }),
            )
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    }
}

fn verify_text(reports: &[VerificationReport], passed: bool) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(out, "{r}").unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if passed {
        writeln!(out, "all {} checks passed", reports.len()).unwrap();
    } else {
        writeln!(out, "{failed} of {} checks failed", reports.len()).unwrap();
    }
    out
}

fn verify_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("check,num_roots,trunc_degree,passed,degree,monomial,lhs,rhs\n");
    for r in reports {
        let (deg, mono, lhs, rhs) = match &r.first_discrepancy {
            Some(d) => (
                d.degree.to_string(),
                d.monomial.clone(),
                to_pq(&d.lhs),
                to_pq(&d.rhs),
            ),
            None => Default::default(),
        };
        writeln!(
            out,
            "{},{},{},{},{deg},{mono},{lhs},{rhs}",
            r.check_name, r.num_roots, r.trunc_degree, r.passed
        )
        .unwrap();
    }
    out
}

pub fn cmd_table(format: Format) -> Outcome {
    let rows = fourfold::corollary_table();
    let stdout = match format {
        Format::Text => table_text(&rows),
        Format::Csv => {
            let mut out = String::from("k2,chi,t_min,t_max\n");
            for r in &rows {
                let (lo, hi) = trace_bounds(r);
                writeln!(out, "{},{},{lo},{hi}", r.k2, r.chi).unwrap();
            }
            out
        }
        Format::Json => document("table", json!({}), to_value(&rows)),
    };
    Outcome::ok(stdout)
}

fn trace_bounds(row: &TableRow) -> (i64, i64) {
    (
        *row.traces.first().expect("every row has a trace"),
        *row.traces.last().expect("every row has a trace"),
    )
}

fn table_text(rows: &[TableRow]) -> String {
    let mut out = format!("{:>5} {:>5}  traces\n", "K^2", "chi");
    for r in rows {
        let ts: Vec<String> = r.traces.iter().map(|t| t.to_string()).collect();
        writeln!(out, "{:>5} {:>5}  {}", r.k2, r.chi, ts.join(", ")).unwrap();
    }
    out
}

const INVARIANT_HEADER: &str = "t,k2,chi,euler,signature,moduli_dim";

fn invariant_fields(inv: &FourfoldFixedInvariants) -> String {
    let s = &inv.surface;
    format!(
        "{},{},{},{},{},{}",
        inv.t, s.k2, s.chi, s.euler, s.signature, inv.moduli_dim
    )
}

pub fn cmd_invariants(t: i64, format: Format) -> Outcome {
    let inv = match fourfold::invariants_from_trace(t) {
        Ok(inv) => inv,
        Err(e) => return Outcome::usage(e),
    };
    let stdout = match format {
        Format::Text => {
            let s = &inv.surface;
            format!(
                "t = {}\nK^2 = {}\nchi(O) = {}\ne = {}\nsignature = {}\nA-hat = {}\nmoduli dimension = {}\n",
                inv.t, s.k2, s.chi, s.euler, s.signature, s.ahat, inv.moduli_dim
            )
        }
        Format::Csv => format!("{INVARIANT_HEADER}\n{}\n", invariant_fields(&inv)),
        Format::Json => document("invariants", json!({ "trace": t }), to_value(&inv)),
    };
    Outcome::ok(stdout)
}

pub fn cmd_catalog(family: Option<&str>, format: Format) -> Outcome {
    let (entries, coverage) = match family {
        Some(name) => match name.parse::<Family>() {
            Ok(f) => (catalog::family_entries(f), None),
            Err(e) => return Outcome::usage(e),
        },
        None => (catalog::all_entries(), Some(catalog::trace_coverage())),
    };
    let stdout = match format {
        Format::Text => catalog_text(&entries, coverage.as_ref()),
        Format::Csv => catalog_csv(&entries),
        Format::Json => {
            let mut results = json!({ "entries": to_value(&entries) });
            if let Some(c) = &coverage {
                results["coverage"] = to_value(c);
            }
            document("catalog", json!({ "family": family }), results)
        }
    };
    Outcome::ok(stdout)
}

fn parameters_field(e: &CatalogEntry) -> String {
    e.parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn components_field(e: &CatalogEntry) -> String {
    e.components
        .iter()
        .flatten()
        .map(|c| format!("{}:{}:{}", c.label, c.k2, c.chi))
        .collect::<Vec<_>>()
        .join(";")
}

fn catalog_csv(entries: &[CatalogEntry]) -> String {
    let mut out = format!("family,parameters,{INVARIANT_HEADER},components\n");
    for e in entries {
        writeln!(
            out,
            "{},{},{},{}",
            e.family,
            parameters_field(e),
            invariant_fields(&e.invariants),
            components_field(e)
        )
        .unwrap();
    }
    out
}

fn catalog_text(entries: &[CatalogEntry], coverage: Option<&CoverageReport>) -> String {
    let mut out = String::new();
    for e in entries {
        let s = &e.invariants.surface;
        let params = parameters_field(e);
        write!(
            out,
            "{:<20} {:<22} t={:>3}  K^2={:>3} chi={:>2} e={:>3} moduli={:>2}",
            e.family.as_str(),
            if params.is_empty() {
                "-".to_owned()
            } else {
                params
            },
            e.t,
            s.k2,
            s.chi,
            s.euler,
            e.invariants.moduli_dim
        )
        .unwrap();
        if let Some(parts) = &e.components {
            if parts.len() > 1 {
                let split: Vec<String> = parts
                    .iter()
                    .map(|c| format!("{}({}, {})", c.label, c.k2, c.chi))
                    .collect();
                write!(out, "  components {}", split.join(" + ")).unwrap();
            }
        }
        out.push('\n');
    }
    if let Some(c) = coverage {
        if c.complete {
            writeln!(
                out,
                "trace coverage: complete ({} values)",
                c.realized.len()
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "trace coverage: missing {:?}, surplus {:?}",
                c.missing, c.surplus
            )
            .unwrap();
        }
    }
    out
}
