use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use twoweight::report::{
    error_exit_code, exit_code, run_charsums, run_sweep, Analysis, AnalysisReport, EmitKind,
    SweepConfig,
};
use twoweight::{build_tower, Result};

#[derive(Parser)]
#[command(name = "twoweight", version, about = "Trace codes from norm-trace defining sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one code and verify everything known about it.
    Analyze {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        s: u32,
        /// Canonical index of c in F_q.
        #[arg(long)]
        c: usize,
        #[arg(long, value_name = "PATH")]
        emit_graph: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        emit_set: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        emit_matrix: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Verify every admissible parameter set.
    Sweep {
        #[arg(long, default_value_t = 4096)]
        max_size: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        charsums: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Compare character sums with their closed forms.
    Charsums {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

fn print_analysis(r: &AnalysisReport) {
    let par = &r.params;
    println!(
        "p={} e={} s={} m={} q={} c={}",
        par.p, par.e, par.s, par.m, par.q, par.c_index
    );
    println!(
        "length {} (closed form {}), dimension {}",
        r.length.computed, r.length.closed_form, r.dimension
    );
    if let Some(t) = &r.length.table1 {
        println!(
            "reference row [{}, {}, {}], computed [{}, {}, {}]{}",
            t.row.length,
            t.row.dimension,
            t.row.min_distance,
            t.computed_length,
            t.computed_dimension,
            t.computed_min_distance,
            t.flag.as_ref().map(|f| format!(" ({f})")).unwrap_or_default()
        );
    }
    for w in &r.weights {
        println!("  A_{} = {} (closed form {})", w.w, w.count_bruteforce, w.count_theorem7);
    }
    println!("weight distribution matches closed form: {}", r.theorem7_match);
    let d = &r.dual;
    println!(
        "dual [{}, {}, {}], claimed d = {}",
        d.n,
        d.k_dual,
        d.d_dual,
        d.d_theorem8.map_or("-".into(), |v| v.to_string())
    );
    println!(
        "dual A2 = {} (closed {}), A3 = {} (closed {})",
        d.a2,
        d.a2_closed.as_deref().unwrap_or("-"),
        d.a3,
        d.a3_closed.as_deref().unwrap_or("-")
    );
    for m in &d.moment_checks {
        println!("  moment {}: {}", m.name, if m.holds { "holds" } else { "FAILS" });
    }
    for m in &d.variant_forms {
        println!("  variant {}: {}", m.name, if m.holds { "holds" } else { "fails" });
    }
    println!("projective: {}", r.projective);
    println!(
        "minimal: {} (w_min/w_max = {}/{})",
        r.minimal.holds, r.minimal.ratio.num, r.minimal.ratio.den
    );
    if let Some(srg) = &r.srg {
        match (&srg.counted, &srg.note) {
            (_, Some(note)) => println!("graph: {note}"),
            (Some(c), None) => println!(
                "graph: counted {:?}, predicted {:?}, family {:?}, match {}",
                c, srg.predicted, srg.family, srg.matches
            ),
            _ => {}
        }
    }
    println!("{}", if r.passed() { "PASS" } else { "FAIL" });
}

fn write_json(path: &Option<PathBuf>, json: String) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, json + "\n")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze {
            p,
            e,
            s,
            c,
            emit_graph,
            emit_set,
            emit_matrix,
            json,
        } => {
            let analysis = Analysis::new(p, e, s, c)?;
            let report = analysis.report()?;
            print_analysis(&report);
            for (kind, path) in [
                (EmitKind::Graph, emit_graph),
                (EmitKind::DefiningSet, emit_set),
                (EmitKind::Matrix, emit_matrix),
            ] {
                if let Some(path) = path {
                    analysis.emit(kind, &path)?;
                }
            }
            write_json(&json, report.to_json()?)?;
            Ok(exit_code(report.passed()))
        }
        Command::Sweep {
            max_size,
            threads,
            charsums,
            json,
        } => {
            let mut config = SweepConfig {
                max_ambient_size: max_size,
                include_charsums: charsums,
                ..SweepConfig::default()
            };
            if let Some(t) = threads {
                config.thread_count = t;
            }
            let report = run_sweep(&config)?;
            print!("{}", report.summary_table());
            println!(
                "{} cases, {}",
                report.cases.len(),
                if report.passed { "all PASS" } else { "FAIL" }
            );
            write_json(&json, report.to_json()?)?;
            Ok(exit_code(report.passed))
        }
        Command::Charsums { p, e, s, json } => {
            let tower = build_tower(p, e, s)?;
            let report = run_charsums(&tower)?;
            if report.b_sampled {
                println!("ambient size {} above exhaustive limit: b sampled", report.ambient);
            }
            for id in &report.identities {
                println!(
                    "{:<20} {:>10} cases  {}",
                    id.name,
                    id.cases,
                    if id.passed { "PASS".to_string() } else { format!("FAIL ({} mismatches)", id.mismatches) }
                );
                for c in &id.counterexamples {
                    println!(
                        "    inputs {:?}: brute force {}, closed form {}",
                        c.inputs, c.bruteforce, c.closed
                    );
                }
            }
            write_json(&json, serde_json::to_string_pretty(&report)?)?;
            Ok(exit_code(report.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            error_exit_code(&err)
        }
    };
    ExitCode::from(code as u8)
}
