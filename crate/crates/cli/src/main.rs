//! Command-line frontend for the order-type pipeline.
//!
//! Exit codes: `0` success, `2` verification failure, `3` infeasible target,
//! `4` input or configuration error.

mod output;
mod tables;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use ordertype::catalog::{Catalog, Side};
use ordertype::linsolve::{
    search, verify_certificate, CertificateEntry, MultiplicityCertificate, ScreenResult,
    SearchError, SearchOptions, SearchOutcome, VerificationReport,
};
use serde::Serialize;

use output::{csv_row, emit};
use tables::{
    render_side_table_csv, render_spectrum_csv, side_table, spectrum_report, SideTable,
};

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION_FAILED: i32 = 2;
const EXIT_INFEASIBLE: i32 = 3;
const EXIT_INPUT: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(
    name = "ordertype",
    version,
    about = "Order-type invariants of finite permutation groups and exact certificate search"
)]
struct Cli {
    /// Catalog file (defaults to the bundled catalog)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,

    /// Output format for reports and tables
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Bound on the target multiplicity retried by `search`
    #[arg(long, global = true, default_value_t = 8)]
    max_multiplicity: u64,

    /// Cap on the number of elements group enumeration may produce
    #[arg(long, global = true, default_value_t = 10_000)]
    enum_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Emit order, exponent, revolved, and valuation data for one group
    Spectrum {
        /// Group name (e.g. "GL(3,2)") or id (e.g. "(168,42)")
        selector: String,
    },
    /// Build the bundled two-sided certificate, verify it, and emit the
    /// exponent-type tables and factored products of both sides
    VerifyTheorem,
    /// Emit the exponent-type tables and product columns without verifying
    EmitTables,
    /// Least-squares screen of a target against the solvable corpus
    Screen { selector: String },
    /// Exact certificate search for a non-solvable target
    Search { selector: String },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List all catalog entries
    List,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let informational = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if informational { EXIT_OK } else { EXIT_INPUT };
        }
    };

    let catalog = match &cli.catalog {
        Some(path) => Catalog::load_with_cap(path, cli.enum_cap),
        None => Catalog::bundled_with_cap(cli.enum_cap),
    };
    let catalog = match catalog {
        Ok(catalog) => catalog,
        Err(err) => {
            eprintln!("catalog error: {err}");
            return EXIT_INPUT;
        }
    };

    let result = match &cli.command {
        Command::Catalog {
            action: CatalogAction::List,
        } => cmd_catalog_list(&cli, &catalog),
        Command::Spectrum { selector } => cmd_spectrum(&cli, &catalog, selector),
        Command::VerifyTheorem => cmd_verify_theorem(&cli, &catalog),
        Command::EmitTables => cmd_emit_tables(&cli, &catalog),
        Command::Screen { selector } => cmd_screen(&cli, &catalog, selector),
        Command::Search { selector } => cmd_search(&cli, &catalog, selector),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_INPUT
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

#[derive(Serialize)]
struct ListRow {
    id: ordertype::GroupId,
    name: String,
    degree: usize,
    side: String,
    multiplicity: u64,
    solvable: bool,
}

fn cmd_catalog_list(cli: &Cli, catalog: &Catalog) -> CmdResult {
    let rows: Vec<ListRow> = catalog
        .entries()
        .iter()
        .map(|e| ListRow {
            id: e.id,
            name: e.name.clone(),
            degree: e.degree,
            side: e.side.to_string(),
            multiplicity: e.multiplicity,
            solvable: e.solvable,
        })
        .collect();
    let rendered = match cli.format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut out = String::from("order,index,name,degree,side,multiplicity,solvable\n");
            for row in &rows {
                out.push_str(&csv_row([
                    row.id.0.to_string(),
                    row.id.1.to_string(),
                    row.name.clone(),
                    row.degree.to_string(),
                    row.side.clone(),
                    row.multiplicity.to_string(),
                    row.solvable.to_string(),
                ]));
                out.push('\n');
            }
            out
        }
    };
    emit(&cli.out, &rendered)?;
    Ok(EXIT_OK)
}

fn cmd_spectrum(cli: &Cli, catalog: &Catalog, selector: &str) -> CmdResult {
    let entry = match catalog.find(selector) {
        Ok(entry) => entry,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(EXIT_INPUT);
        }
    };
    let report = spectrum_report(entry, cli.enum_cap)?;
    let rendered = match cli.format {
        Format::Json => to_json(&report)?,
        Format::Csv => render_spectrum_csv(&report),
    };
    emit(&cli.out, &rendered)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TheoremOutput {
    tables: Vec<SideTable>,
    report: VerificationReport,
    all_passed: bool,
}

fn paper_certificate(catalog: &Catalog) -> MultiplicityCertificate {
    let entries = |side: Side| {
        catalog
            .side(side)
            .map(|e| CertificateEntry {
                id: e.id,
                mult: e.multiplicity,
            })
            .collect()
    };
    MultiplicityCertificate {
        side_a: entries(Side::G),
        side_b: entries(Side::H),
        verified: false,
        joint_exponent: 0,
    }
}

fn cmd_verify_theorem(cli: &Cli, catalog: &Catalog) -> CmdResult {
    if let Err(err) = catalog.require_full_tables() {
        eprintln!("error: {err}");
        return Ok(EXIT_INPUT);
    }
    let table_g = side_table(catalog, Side::G, cli.enum_cap)?;
    let table_h = side_table(catalog, Side::H, cli.enum_cap)?;
    let certificate = paper_certificate(catalog);
    let report = verify_certificate(&certificate, catalog, cli.enum_cap)?;
    let all_passed = report.all_passed();
    let first_fail = report
        .checks
        .iter()
        .find(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail));

    let rendered = match cli.format {
        Format::Json => to_json(&TheoremOutput {
            tables: vec![table_g, table_h],
            report,
            all_passed,
        })?,
        Format::Csv => {
            let mut out = String::new();
            render_side_table_csv(&table_g, &mut out);
            render_side_table_csv(&table_h, &mut out);
            out.push_str("# verification\n");
            out.push_str("check,pass,detail\n");
            for check in &report.checks {
                out.push_str(&csv_row([
                    check.name.clone(),
                    check.pass.to_string(),
                    check.detail.clone(),
                ]));
                out.push('\n');
            }
            out.push_str(&csv_row([
                "all_passed".to_string(),
                all_passed.to_string(),
                String::new(),
            ]));
            out.push('\n');
            out
        }
    };
    emit(&cli.out, &rendered)?;
    if all_passed {
        Ok(EXIT_OK)
    } else {
        if let Some(fail) = first_fail {
            eprintln!("verification failed at {fail}");
        }
        Ok(EXIT_VERIFICATION_FAILED)
    }
}

fn cmd_emit_tables(cli: &Cli, catalog: &Catalog) -> CmdResult {
    let table_g = side_table(catalog, Side::G, cli.enum_cap)?;
    let table_h = side_table(catalog, Side::H, cli.enum_cap)?;
    let rendered = match cli.format {
        Format::Json => to_json(&[&table_g, &table_h])?,
        Format::Csv => {
            let mut out = String::new();
            render_side_table_csv(&table_g, &mut out);
            render_side_table_csv(&table_h, &mut out);
            out
        }
    };
    emit(&cli.out, &rendered)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ScreenOutput {
    target: ordertype::GroupId,
    name: String,
    rows: usize,
    cols: usize,
    residual: f64,
    converged: bool,
    iterations: usize,
}

fn cmd_screen(cli: &Cli, catalog: &Catalog, selector: &str) -> CmdResult {
    let entry = match catalog.find(selector) {
        Ok(entry) => entry,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(EXIT_INPUT);
        }
    };
    let options = SearchOptions {
        max_multiplicity: cli.max_multiplicity,
        enum_cap: cli.enum_cap,
    };
    let (screen, rows, cols) = match ordertype::linsolve::screen_target(catalog, entry.id, options)
    {
        Ok(result) => result,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(EXIT_INPUT);
        }
    };
    let report = ScreenOutput {
        target: entry.id,
        name: entry.name.clone(),
        rows,
        cols,
        residual: screen.residual,
        converged: screen.converged,
        iterations: screen.iterations,
    };
    let rendered = match cli.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut out =
                String::from("target,name,rows,cols,residual,converged,iterations\n");
            out.push_str(&csv_row([
                report.target.to_string(),
                report.name.clone(),
                report.rows.to_string(),
                report.cols.to_string(),
                format!("{:e}", report.residual),
                report.converged.to_string(),
                report.iterations.to_string(),
            ]));
            out.push('\n');
            out
        }
    };
    emit(&cli.out, &rendered)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct WitnessEntry {
    n: u64,
    p: u64,
    coefficient: String,
}

#[derive(Serialize)]
struct InfeasibilityOutput {
    target: ordertype::GroupId,
    name: String,
    feasible: bool,
    screen_residual: f64,
    witness: Vec<WitnessEntry>,
}

fn cmd_search(cli: &Cli, catalog: &Catalog, selector: &str) -> CmdResult {
    let entry = match catalog.find(selector) {
        Ok(entry) => entry,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(EXIT_INPUT);
        }
    };
    let options = SearchOptions {
        max_multiplicity: cli.max_multiplicity,
        enum_cap: cli.enum_cap,
    };
    match search(catalog, entry.id, options) {
        Ok(SearchOutcome::Verified {
            certificate,
            report,
            screen,
            multiplicity_used,
        }) => {
            emit(&cli.out, &to_json(&certificate)?)?;
            summarize_search(&certificate, &report, screen, multiplicity_used);
            Ok(EXIT_OK)
        }
        Ok(SearchOutcome::VerificationFailed {
            certificate,
            report,
        }) => {
            emit(&cli.out, &to_json(&certificate)?)?;
            eprintln!("certificate FAILED verification:");
            for check in &report.checks {
                eprintln!("  {}: {} ({})", check.name, check.pass, check.detail);
            }
            Ok(EXIT_VERIFICATION_FAILED)
        }
        Ok(SearchOutcome::Infeasible {
            witness,
            row_index,
            screen,
        }) => {
            let witness_entries: Vec<WitnessEntry> = row_index
                .iter()
                .zip(&witness.coefficients)
                .filter(|(_, c)| !num::Zero::is_zero(*c))
                .map(|(&(n, p), c)| WitnessEntry {
                    n,
                    p,
                    coefficient: c.to_string(),
                })
                .collect();
            let report = InfeasibilityOutput {
                target: entry.id,
                name: entry.name.clone(),
                feasible: false,
                screen_residual: screen.residual,
                witness: witness_entries,
            };
            emit(&cli.out, &to_json(&report)?)?;
            eprintln!(
                "target {} is not in the rational span of the solvable corpus \
                 (screen residual {:.3}, witness on {} rows)",
                entry.name,
                screen.residual,
                report.witness.len()
            );
            Ok(EXIT_INFEASIBLE)
        }
        Err(SearchError::SolvableTarget { id }) => {
            eprintln!(
                "warning: target {id} is solvable; a coincidence with itself is degenerate, \
                 searches only make sense for non-solvable targets"
            );
            Ok(EXIT_INPUT)
        }
        Err(err) => {
            eprintln!("error: {err}");
            Ok(EXIT_INPUT)
        }
    }
}

fn summarize_search(
    certificate: &MultiplicityCertificate,
    report: &VerificationReport,
    screen: ScreenResult,
    multiplicity_used: u64,
) {
    eprintln!(
        "verified certificate: {} solvable groups vs {} groups, joint exponent {}, \
         target multiplicity {} (requested {multiplicity_used}), screen residual {:e}",
        certificate.side_a.len(),
        certificate.side_b.len(),
        certificate.joint_exponent,
        certificate.side_b.last().map_or(0, |e| e.mult),
        screen.residual
    );
    for check in &report.checks {
        eprintln!("  {}: {}", check.name, if check.pass { "ok" } else { "FAILED" });
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    serde_json::to_string_pretty(value).map(|mut s| {
        s.push('\n');
        s
    })
}
