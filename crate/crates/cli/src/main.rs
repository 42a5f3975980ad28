//! Command line front end: decomposition tables, spin tables, coefficient
//! queries and the verification harness, with optional on-disk caching.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use spindec::partition::{partitions, strict_partitions, Partition};
use spindec::spin::{basic_spin_coeffs, epsilon_label, gab};
use spindec::tableaux::{lr_coefficient, shifted_lr_coefficient};
use spindec::verify::{default_bound, run_check, CheckReport, CHECK_IDS};
use spindec::Session;

#[derive(Parser)]
#[command(name = "spindec", version, about = "2-modular spin decomposition toolkit")]
struct Cli {
    /// Largest degree any command may touch; also the verify bound when set.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Directory for the on-disk result cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Seed for the randomized module chopping. Results never depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write a JSON report of the verification results to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 2-modular decomposition matrix of the symmetric group.
    Decomp { n: usize },

    /// Print the spin decomposition matrix, one row per 2-regular label,
    /// with the associate column.
    Spindecomp { n: usize },

    /// Run verification checks; with no ids, the whole registry.
    Verify { checks: Vec<String> },

    /// Direct coefficient queries.
    Coeff {
        #[command(subcommand)]
        kind: Coeff,
    },
}

#[derive(Subcommand)]
enum Coeff {
    /// Littlewood-Richardson coefficient of gamma in alpha * beta.
    Lr {
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
    },
    /// Shifted coefficient of a 2-regular content in a general shape.
    Shifted { shape: Partition, content: Partition },
    /// Binomial parity g_ab.
    Gab { a: usize, b: usize },
    /// Coefficients of the basic spin simple over the two-row permutation
    /// modules, indexed by the second row.
    Bsm { n: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if cli.max_n == Some(0) {
        bail!("--max-n must be at least 1");
    }
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    let session = match &cli.cache_dir {
        Some(dir) => Session::with_cache_dir(cli.seed, dir)
            .with_context(|| format!("opening cache directory {}", dir.display()))?,
        None => Session::new(cli.seed),
    };
    let limit = cli.max_n.unwrap_or(9);

    match &cli.command {
        Command::Decomp { n } => {
            if *n > limit {
                bail!("n={n} exceeds the resource bound --max-n {limit}");
            }
            if cli.format == Format::Json {
                writeln!(out, "{}", session.decomposition_value(*n)?)?;
            } else {
                let d = session.decomposition(*n)?;
                let cols = strict_partitions(*n);
                let rows = partitions(*n)
                    .into_iter()
                    .map(|la| {
                        let entries = cols.iter().map(|mu| d.entry(&la, mu)).collect();
                        (vec![la.to_string()], entries)
                    })
                    .collect();
                print_table(&mut out, cli.format, &["lambda"], &cols, rows)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spindecomp { n } => {
            if *n > limit {
                bail!("n={n} exceeds the resource bound --max-n {limit}");
            }
            let s = session.spin_decomposition(*n)?;
            check_doubled_diagonal(&s)?;
            if cli.format == Format::Json {
                writeln!(out, "{}", session.spin_decomposition_value(*n)?)?;
            } else {
                let cols = strict_partitions(*n);
                let rows = strict_partitions(*n)
                    .into_iter()
                    .map(|la| {
                        let entries = cols.iter().map(|mu| s.entry(&la, mu)).collect();
                        (vec![la.to_string(), epsilon_label(&la).to_string()], entries)
                    })
                    .collect();
                print_table(&mut out, cli.format, &["lambda", "eps"], &cols, rows)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { checks } => {
            let ids: Vec<&str> = if checks.is_empty() {
                CHECK_IDS.to_vec()
            } else {
                checks.iter().map(String::as_str).collect()
            };
            for id in &ids {
                if !CHECK_IDS.contains(id) {
                    bail!("unknown check id {id:?}; known ids: {}", CHECK_IDS.join(", "));
                }
            }
            let mut reports = Vec::new();
            let mut all_passed = true;
            for id in &ids {
                let bound = cli.max_n.unwrap_or_else(|| default_bound(id));
                let report = run_check(&session, id, bound)?;
                all_passed &= report.passed();
                if cli.format != Format::Json {
                    print_report(&mut out, &report)?;
                }
                reports.push(report);
            }
            if cli.format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&reports)?)?;
            }
            if let Some(path) = &cli.report {
                std::fs::write(path, serde_json::to_string_pretty(&reports)?)
                    .with_context(|| format!("writing report to {}", path.display()))?;
            }
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Coeff { kind } => {
            match kind {
                Coeff::Lr { alpha, beta, gamma } => {
                    writeln!(out, "{}", lr_coefficient(gamma, alpha, beta))?;
                }
                Coeff::Shifted { shape, content } => {
                    if !content.is_strict() {
                        bail!("content partition ({content}) must be 2-regular");
                    }
                    writeln!(out, "{}", shifted_lr_coefficient(shape, content))?;
                }
                Coeff::Gab { a, b } => writeln!(out, "{}", gab(*a, *b))?,
                Coeff::Bsm { n } => {
                    let coeffs = basic_spin_coeffs(*n);
                    if cli.format == Format::Json {
                        writeln!(out, "{}", serde_json::to_string(&coeffs)?)?;
                    } else {
                        let parts: Vec<String> =
                            coeffs.iter().map(|c| c.to_string()).collect();
                        writeln!(out, "{}", parts.join(","))?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The diagonal entry at a 2-regular doubled label must be the predicted
/// power of two; checked on every print so a bad cache or a regression
/// cannot emit a silently wrong table.
fn check_doubled_diagonal(s: &spindec::SpinDecompositionMatrix) -> Result<()> {
    for la in strict_partitions(s.n()) {
        let dbl = la.dbl();
        let Some(d) = dbl.as_partition() else { continue };
        if !d.is_strict() {
            continue;
        }
        let expected = 1u64 << (la.even_part_count() / 2);
        let got = s.entry(&la, &d);
        if got != expected {
            bail!("doubled diagonal mismatch at ({la}): entry {got}, expected {expected}");
        }
    }
    Ok(())
}

fn print_report(out: &mut impl Write, report: &CheckReport) -> io::Result<()> {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{}: {status} ({} instances, {} skipped, n <= {}, {} ms)",
        report.id, report.instances, report.skipped, report.bound, report.millis
    )?;
    for note in &report.notes {
        writeln!(out, "  note: {note}")?;
    }
    for failure in report.failures.iter().take(5) {
        writeln!(out, "  inputs: {}", failure.inputs)?;
        writeln!(out, "     lhs: {}", failure.lhs)?;
        writeln!(out, "     rhs: {}", failure.rhs)?;
    }
    if report.failures.len() > 5 {
        writeln!(out, "  ... and {} more failures", report.failures.len() - 5)?;
    }
    Ok(())
}

fn print_table(
    out: &mut impl Write,
    format: Format,
    corner: &[&str],
    columns: &[Partition],
    rows: Vec<(Vec<String>, Vec<u64>)>,
) -> io::Result<()> {
    let labels: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
    match format {
        Format::Json => unreachable!("handled by the caller"),
        Format::Csv => {
            let mut header: Vec<String> = corner.iter().map(|c| csv_cell(c)).collect();
            header.extend(labels.iter().map(|l| csv_cell(l)));
            writeln!(out, "{}", header.join(","))?;
            for (label_cells, entries) in rows {
                let mut cells: Vec<String> =
                    label_cells.iter().map(|c| csv_cell(c)).collect();
                cells.extend(entries.iter().map(|e| e.to_string()));
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        Format::Latex => {
            let mut header: Vec<String> = corner.iter().map(|c| c.to_string()).collect();
            header.extend(labels.iter().map(|l| format!("({l})")));
            writeln!(out, "{} \\\\", header.join(" & "))?;
            writeln!(out, "\\hline")?;
            for (label_cells, entries) in rows {
                let mut cells: Vec<String> = label_cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i == 0 { format!("({c})") } else { c.clone() })
                    .collect();
                cells.extend(entries.iter().map(|e| e.to_string()));
                writeln!(out, "{} \\\\", cells.join(" & "))?;
            }
        }
        Format::Text => {
            let mut widths: Vec<usize> = corner.iter().map(|c| c.len()).collect();
            for (label_cells, _) in &rows {
                for (i, cell) in label_cells.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut col_widths: Vec<usize> = labels.iter().map(|l| l.len()).collect();
            for (_, entries) in &rows {
                for (i, e) in entries.iter().enumerate() {
                    col_widths[i] = col_widths[i].max(e.to_string().len());
                }
            }
            let mut header: Vec<String> = corner
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
                .collect();
            header.extend(
                labels
                    .iter()
                    .enumerate()
                    .map(|(i, l)| format!("{:>w$}", l, w = col_widths[i])),
            );
            writeln!(out, "{}", header.join("  "))?;
            for (label_cells, entries) in rows {
                let mut cells: Vec<String> = label_cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
                    .collect();
                cells.extend(
                    entries
                        .iter()
                        .enumerate()
                        .map(|(i, e)| format!("{:>w$}", e, w = col_widths[i])),
                );
                writeln!(out, "{}", cells.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
