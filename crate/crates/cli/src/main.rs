//! `cptg` — inspect the symmetry-group atlas and run its check suite.
//!
//! Exit codes: `0` when every requested check passes, `1` when at least
//! one check fails, `2` for anything that prevents the run itself
//! (unknown names, an unbuildable atlas, I/O errors).

use std::fmt::Write as _;
use std::io::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use cptg_core::atlas::Atlas;
use cptg_core::diagram::builtin_diagrams;
use cptg_core::group::fingerprint;
use cptg_core::verify::{all_checks, run_checks, CheckStatus, VerificationReport};
use cptg_core::CayleyTable;

#[derive(Parser)]
#[command(
    name = "cptg",
    version,
    about = "Exact finite-group atlas for spinor and field-transformation symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suite against a freshly built atlas.
    Verify {
        /// Emit the report as JSON instead of one line per check.
        #[arg(long)]
        json: bool,
        /// Run only the check with this id.
        #[arg(long, value_name = "CHECK_ID")]
        only: Option<String>,
        /// Cap on closure sizes while building the atlas.
        #[arg(long, value_name = "N")]
        max_order: Option<usize>,
    },
    /// Print the multiplication table of a registered group.
    Table {
        /// Registered group name (see `cptg list groups`).
        name: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Name the isomorphism class of a registered group.
    Identify {
        /// Registered group name.
        name: String,
    },
    /// Print the invariant fingerprint of a registered group as JSON.
    Fingerprint {
        /// Registered group name.
        name: String,
    },
    /// Write a diagram in Graphviz DOT format.
    ExportDot {
        /// Diagram name (see `cptg list diagrams`).
        diagram: String,
        /// Output file; `-` writes to stdout.
        path: String,
    },
    /// List registered groups, maps, diagrams, or check ids.
    List {
        #[arg(value_enum)]
        what: Option<ListKind>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListKind {
    Groups,
    Maps,
    Diagrams,
    Checks,
}

fn main() {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match execute(cli, &mut out) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(err) = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
    {
        // A consumer that hangs up early (`cptg table Q | head`) is not an
        // error; anything else that loses output is.
        if err.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
    std::process::exit(code);
}

fn execute(cli: Cli, out: &mut String) -> Result<i32, String> {
    match cli.command {
        Command::Verify {
            json,
            only,
            max_order,
        } => {
            let atlas = build_atlas(max_order)?;
            let report = run_checks(&atlas, only.as_deref()).map_err(|e| e.to_string())?;
            if json {
                let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "{text}");
            } else {
                render_report(out, &report);
            }
            Ok(report.exit_code())
        }
        Command::Table { name, format } => {
            let atlas = build_atlas(None)?;
            let group = atlas.group(&name).map_err(|e| e.to_string())?;
            let table = group.cayley_table();
            match format {
                TableFormat::Text => render_text_table(out, &table),
                TableFormat::Csv => render_csv_table(out, &table),
                TableFormat::Json => {
                    let text = serde_json::to_string_pretty(&table).map_err(|e| e.to_string())?;
                    let _ = writeln!(out, "{text}");
                }
            }
            Ok(0)
        }
        Command::Identify { name } => {
            let atlas = build_atlas(None)?;
            let group = atlas.group(&name).map_err(|e| e.to_string())?;
            let class = atlas.catalog().identify(group).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "{name} ≅ {class} (order {})", group.order());
            let fp = serde_json::to_string(&fingerprint(group)).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "fingerprint: {fp}");
            Ok(0)
        }
        Command::Fingerprint { name } => {
            let atlas = build_atlas(None)?;
            let group = atlas.group(&name).map_err(|e| e.to_string())?;
            let fp = fingerprint(group);
            let text = serde_json::to_string_pretty(&fp).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "{text}");
            Ok(0)
        }
        Command::ExportDot { diagram, path } => {
            let atlas = build_atlas(None)?;
            let diagrams = builtin_diagrams(&atlas).map_err(|e| e.to_string())?;
            let found = diagrams
                .iter()
                .find(|d| d.name == diagram)
                .ok_or_else(|| format!("unknown diagram {diagram:?}"))?;
            let dot = found.to_dot();
            if path == "-" {
                out.push_str(&dot);
            } else {
                std::fs::write(&path, dot).map_err(|e| format!("{path}: {e}"))?;
            }
            Ok(0)
        }
        Command::List { what } => {
            let atlas = build_atlas(None)?;
            match what {
                Some(kind) => render_list(out, &atlas, kind)?,
                None => {
                    for (heading, kind) in [
                        ("groups:", ListKind::Groups),
                        ("maps:", ListKind::Maps),
                        ("diagrams:", ListKind::Diagrams),
                        ("checks:", ListKind::Checks),
                    ] {
                        let _ = writeln!(out, "{heading}");
                        render_list(out, &atlas, kind)?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn build_atlas(max_order: Option<usize>) -> Result<Atlas, String> {
    match max_order {
        Some(cap) => Atlas::build_with_cap(cap),
        None => Atlas::build(),
    }
    .map_err(|e| e.to_string())
}

fn render_report(out: &mut String, report: &VerificationReport) {
    for check in &report.checks {
        match check.status {
            CheckStatus::Pass => {
                let _ = writeln!(out, "[PASS] {}  {}", check.id, check.claim);
            }
            CheckStatus::Fail => {
                let _ = writeln!(out, "[FAIL] {}  {}", check.id, check.claim);
                let _ = writeln!(out, "       witness: {}", check.witness);
            }
        }
    }
    let _ = writeln!(
        out,
        "{} checks: {} passed, {} failed",
        report.summary.total, report.summary.passed, report.summary.failed
    );
}

fn render_text_table(out: &mut String, table: &CayleyTable) {
    let width = table
        .headers
        .iter()
        .chain(table.rows.iter().flatten())
        .map(|label| label.chars().count())
        .max()
        .unwrap_or(1);
    let pad = |label: &str| {
        let fill = width - label.chars().count();
        format!("{label}{}", " ".repeat(fill))
    };
    let _ = writeln!(out, "{} (order {})", table.name, table.headers.len());
    let header_line: Vec<String> = table.headers.iter().map(|h| pad(h)).collect();
    let _ = writeln!(out, "{} | {}", pad("·"), header_line.join("  "));
    let rule_len = width + 3 + (width + 2) * table.headers.len();
    let _ = writeln!(out, "{}", "-".repeat(rule_len));
    for (header, row) in table.headers.iter().zip(&table.rows) {
        let cells: Vec<String> = row.iter().map(|c| pad(c)).collect();
        let _ = writeln!(out, "{} | {}", pad(header), cells.join("  "));
    }
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

fn render_csv_table(out: &mut String, table: &CayleyTable) {
    let mut first_row = vec![csv_quote("·")];
    first_row.extend(table.headers.iter().map(|h| csv_quote(h)));
    let _ = writeln!(out, "{}", first_row.join(","));
    for (header, row) in table.headers.iter().zip(&table.rows) {
        let mut line = vec![csv_quote(header)];
        line.extend(row.iter().map(|c| csv_quote(c)));
        let _ = writeln!(out, "{}", line.join(","));
    }
}

fn render_list(out: &mut String, atlas: &Atlas, kind: ListKind) -> Result<(), String> {
    match kind {
        ListKind::Groups => {
            for name in atlas.group_names() {
                let group = atlas.group(name).map_err(|e| e.to_string())?;
                let _ = writeln!(out, "{name} (order {})", group.order());
            }
        }
        ListKind::Maps => {
            for name in atlas.map_names() {
                let map = atlas.map(name).map_err(|e| e.to_string())?;
                let _ = writeln!(
                    out,
                    "{name}: {} -> {}",
                    map.domain().name(),
                    map.codomain().name()
                );
            }
        }
        ListKind::Diagrams => {
            for diagram in builtin_diagrams(atlas).map_err(|e| e.to_string())? {
                let _ = writeln!(
                    out,
                    "{} ({} nodes, {} arrows, {} cells)",
                    diagram.name,
                    diagram.nodes.len(),
                    diagram.arrows.len(),
                    diagram.cells.len()
                );
            }
        }
        ListKind::Checks => {
            for check in all_checks(atlas) {
                let _ = writeln!(out, "{}: {}", check.id, check.claim);
            }
        }
    }
    Ok(())
}
