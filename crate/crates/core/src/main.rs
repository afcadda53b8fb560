use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use engel::graph::build_engel_graph;
use engel::io::{parse_group_spec, write_dot, write_report, write_survey};
use engel::survey::{analyze, survey, verify_theorems_with, FamilySelection, VerdictKind};

const FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "engel",
    version,
    about = "Engel graphs of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one group.
    Report {
        /// Group spec, e.g. S4, D12, T, S3xC2, @gens.txt
        #[arg(long)]
        group: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the Engel graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Survey every non-nilpotent catalog group up to an order.
    Survey {
        #[arg(long)]
        max_order: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for survey.json; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated: symmetric, alternating, dihedral, dicyclic,
        /// products, fixtures, nilpotent, all.
        #[arg(long, default_value = "all")]
        families: FamilySelection,
    },
    /// Run the theorem checks over the catalog.
    Verify {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), ExitCode> {
    std::fs::write(path, text).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        ExitCode::from(USAGE)
    })
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Report { group, json, dot } => {
            let spec = parse_group_spec(&group).map_err(|e| {
                eprintln!("error: group spec {group:?} {e}");
                ExitCode::from(USAGE)
            })?;
            let g = spec.build().map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(USAGE)
            })?;
            let report = analyze(&g);
            let text = write_report(&report);
            match json {
                Some(path) => write_file(&path, &format!("{text}\n"))?,
                None => println!("{text}"),
            }
            if let Some(path) = dot {
                let graph = build_engel_graph(&g).map_err(|e| {
                    eprintln!("error: {e}");
                    ExitCode::from(USAGE)
                })?;
                let labels: Vec<String> = graph
                    .labels()
                    .iter()
                    .map(|&x| g.element(x).to_string())
                    .collect();
                write_file(
                    &path,
                    &write_dot(&graph, &labels).expect("one label per vertex"),
                )?;
            }
            for (name, c) in report.failures() {
                eprintln!("FAIL {name}: {}", c.counterexample.as_deref().unwrap_or(""));
            }
            Ok(ExitCode::from(if report.all_passed() { 0 } else { FAILED }))
        }
        Command::Survey {
            max_order,
            jobs,
            out,
            families,
        } => {
            if max_order < 6 {
                eprintln!("error: --max-order must be at least 6");
                return Err(ExitCode::from(USAGE));
            }
            let result = survey(max_order, families, jobs);
            let text = write_survey(&result);
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir).map_err(|e| {
                        eprintln!("error: cannot create {}: {e}", dir.display());
                        ExitCode::from(USAGE)
                    })?;
                    write_file(&dir.join("survey.json"), &text)?;
                }
                None => print!("{text}"),
            }
            eprintln!(
                "{} groups surveyed up to order {max_order}",
                result.reports.len()
            );
            eprintln!("diameters: {:?}", result.summary.diameter_histogram);
            for name in &result.summary.disconnected_groups {
                eprintln!("FINDING: {name} has a disconnected Engel graph");
            }
            for f in &result.summary.failed_checks {
                eprintln!("FAIL {} {}: {}", f.group, f.check, f.counterexample);
            }
            Ok(ExitCode::from(if result.all_passed() { 0 } else { FAILED }))
        }
        Command::Verify { max_order, jobs } => {
            if max_order < 12 {
                eprintln!("error: --max-order must be at least 12");
                return Err(ExitCode::from(USAGE));
            }
            let verdicts = verify_theorems_with(max_order, jobs);
            for v in &verdicts {
                println!("{v}");
            }
            let ok = verdicts
                .iter()
                .all(|v| v.passed || v.kind == VerdictKind::Observation);
            Ok(ExitCode::from(if ok { 0 } else { FAILED }))
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli).unwrap_or_else(|code| code),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
