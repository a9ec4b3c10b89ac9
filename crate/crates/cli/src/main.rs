//! Command-line surface for the cubewire library: wirelength engines,
//! Gray embeddings, θ oracles, type-sequence reduction certificates,
//! brute-force searches, verification suites, and the bundled worked
//! example.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on
//! usage or input-format errors. All numeric output is exact integers.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cubewire::embedding::{
    closed_form_wirelength, gray_embedding, load_embedding, save_embedding, wirelength_direct,
    wirelength_via_congestion, wirelength_via_cuts, EmbeddingMap, RoutingRule,
};
use cubewire::fixtures;
use cubewire::hypercube::{theta_min, theta_small_type, theta_type_lower_bound};
use cubewire::typeseq::extract_type_sequence;
use cubewire::verify::{
    brute_force_min_wirelength, brute_force_theta, brute_force_theta_type, sampled_min_wirelength,
    sequence_lower_bound_search, verify_engine_agreement, verify_gray_column_optimality,
    verify_identities,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "cubewire", version, about = "Hypercube-into-cylinder wirelength toolkit")]
struct Cli {
    /// Output format for structured results
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all three wirelength engines on an embedding file
    Wirelength {
        /// Embedding file (header `n n1 n2`, then 2^n labels in vertex order)
        #[arg(long)]
        input: PathBuf,
    },
    /// Emit the Gray embedding, or its wirelength when writing to a file
    Gray {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        /// Write the embedding file here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed-form minimum wirelength for a host
    Formula {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
    },
    /// θ(n, k), or θ(n, 2^{n-1}, t) with --type
    Theta {
        n: u32,
        k: u64,
        /// Type constraint (requires k = 2^{n-1}); big types report the
        /// lower bound
        #[arg(long = "type")]
        type_value: Option<u64>,
    },
    /// Extract the type sequence of an embedding and check admissibility
    Typeseq {
        #[arg(long)]
        input: PathBuf,
    },
    /// Reduce an embedding's type sequence to its base level, stage by stage
    Reduce {
        #[arg(long)]
        input: PathBuf,
        /// Write the certificate here as well as stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive or sampled searches against ground truth
    #[command(subcommand, name = "brute-force")]
    BruteForce(BruteForceCommand),
    /// Verification suites (exit status 1 on any failed check)
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Bundled worked-example data and its end-to-end check
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Subcommand)]
enum BruteForceCommand {
    /// Minimum wirelength over all bijections (n ≤ 3), or over samples
    Wirelength {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        /// Pin the all-zeros vertex to label 1
        #[arg(long)]
        prune_symmetry: bool,
        /// Sample this many random bijections instead of searching exhaustively
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the witness as an embedding file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive θ(n, k) over every k-subset (n ≤ 4)
    Theta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u64,
    },
    /// Exhaustive θ(n, 2^{n-1}, t) over typed half-size subsets (n ≤ 4)
    ThetaType {
        #[arg(long)]
        n: u32,
        #[arg(long = "type")]
        type_value: u64,
    },
    /// Exhaustive minimum θ-sum over admissible type sequences
    Seqmin {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Three-engine agreement on seeded random embeddings
    Engines {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Gray's column-cut terms attain the per-cut θ bounds
    Columns {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recurrence and summation identities of θ and E
    Identities {
        #[arg(long, default_value_t = 14)]
        max_n: u32,
        #[arg(long, default_value_t = 65536)]
        max_k: u64,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Run the bundled Q_7 example end to end and diff every reduction row
    Table1,
    /// Print the bundled embedding in the standard file format
    Embedding,
}

#[derive(Serialize)]
struct EngineRecord {
    engine: &'static str,
    n: u32,
    n1: u32,
    n2: u32,
    wirelength: u64,
}

#[derive(Serialize)]
struct ThetaRecord {
    n: u32,
    k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    type_value: Option<u64>,
    theta: u64,
    exact: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_embedding(path: &PathBuf) -> Result<EmbeddingMap, Box<dyn std::error::Error>> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(load_embedding(BufReader::new(file))?)
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

/// Renders records as CSV: one header, one row per record, fields in the
/// given order pulled from the JSON form so CSV and JSON carry identical
/// numeric content.
fn emit_csv<T: Serialize>(records: &[T], fields: &[&str]) {
    println!("{}", fields.join(","));
    for record in records {
        let value = serde_json::to_value(record).expect("serializable report");
        let row: Vec<String> = fields
            .iter()
            .map(|f| match &value[f] {
                serde_json::Value::Null => String::new(),
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Array(items) => items
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            })
            .collect();
        println!("{}", row.join(","));
    }
}

fn run(cli: Cli) -> Result<bool, Box<dyn std::error::Error>> {
    let format = cli.format;
    match cli.command {
        Command::Wirelength { input } => {
            let f = read_embedding(&input)?;
            let host = f.host();
            let records = vec![
                EngineRecord {
                    engine: "direct",
                    n: host.n(),
                    n1: host.n1(),
                    n2: host.n2(),
                    wirelength: wirelength_direct(&f),
                },
                EngineRecord {
                    engine: "cuts",
                    n: host.n(),
                    n1: host.n1(),
                    n2: host.n2(),
                    wirelength: wirelength_via_cuts(&f),
                },
                EngineRecord {
                    engine: "congestion",
                    n: host.n(),
                    n1: host.n1(),
                    n2: host.n2(),
                    wirelength: wirelength_via_congestion(&f, RoutingRule::default()),
                },
            ];
            match format {
                Format::Text => {
                    for r in &records {
                        println!("{}: {}", r.engine, r.wirelength);
                    }
                }
                Format::Json => emit_json(&records),
                Format::Csv => emit_csv(&records, &["engine", "n", "n1", "n2", "wirelength"]),
            }
            Ok(true)
        }
        Command::Gray { n1, n2, output } => {
            let f = gray_embedding(n1, n2)?;
            match output {
                Some(path) => {
                    let mut file = File::create(&path)?;
                    save_embedding(&f, &mut file)?;
                    let record = EngineRecord {
                        engine: "direct",
                        n: f.host().n(),
                        n1,
                        n2,
                        wirelength: wirelength_direct(&f),
                    };
                    match format {
                        Format::Text => println!("{}", record.wirelength),
                        Format::Json => emit_json(&record),
                        Format::Csv => {
                            emit_csv(&[record], &["engine", "n", "n1", "n2", "wirelength"])
                        }
                    }
                }
                None => {
                    let mut out = Vec::new();
                    save_embedding(&f, &mut out)?;
                    print!("{}", String::from_utf8(out).expect("ascii output"));
                }
            }
            Ok(true)
        }
        Command::Formula { n1, n2 } => {
            let record = EngineRecord {
                engine: "closed_form",
                n: n1 + n2,
                n1,
                n2,
                wirelength: closed_form_wirelength(n1, n2)?,
            };
            match format {
                Format::Text => println!("{}", record.wirelength),
                Format::Json => emit_json(&record),
                Format::Csv => emit_csv(&[record], &["engine", "n", "n1", "n2", "wirelength"]),
            }
            Ok(true)
        }
        Command::Theta { n, k, type_value } => {
            let record = match type_value {
                None => ThetaRecord {
                    n,
                    k,
                    type_value: None,
                    theta: theta_min(n, k)?,
                    exact: true,
                },
                Some(t) => {
                    if n < 1 || k != 1u64 << (n - 1) {
                        return Err(format!("--type requires k = 2^(n-1) = {}", 1u64 << (n - 1)).into());
                    }
                    match theta_small_type(n, t) {
                        Ok(theta) => ThetaRecord {
                            n,
                            k,
                            type_value: Some(t),
                            theta,
                            exact: true,
                        },
                        Err(_) => ThetaRecord {
                            n,
                            k,
                            type_value: Some(t),
                            theta: theta_type_lower_bound(n, t)?,
                            exact: false,
                        },
                    }
                }
            };
            match format {
                Format::Text => {
                    if record.exact {
                        println!("{}", record.theta);
                    } else {
                        println!("{} (lower bound)", record.theta);
                    }
                }
                Format::Json => emit_json(&record),
                Format::Csv => emit_csv(&[record], &["n", "k", "type_value", "theta", "exact"]),
            }
            Ok(true)
        }
        Command::Typeseq { input } => {
            let f = read_embedding(&input)?;
            let seq = extract_type_sequence(&f)?;
            let report = seq.check_condition();
            #[derive(Serialize)]
            struct TypeseqRecord<'a> {
                n: u32,
                n1: u32,
                n2: u32,
                entries: &'a [u64],
                condition: cubewire::typeseq::ConditionReport,
                satisfied: bool,
            }
            let record = TypeseqRecord {
                n: seq.n(),
                n1: seq.n1(),
                n2: seq.n2(),
                entries: seq.entries(),
                condition: report,
                satisfied: report.satisfied(),
            };
            match format {
                Format::Text => {
                    println!(
                        "type sequence (n={}, n1={}, n2={}): {:?}",
                        record.n, record.n1, record.n2, record.entries
                    );
                    println!("  continuity:        {}", report.continuity);
                    println!(
                        "  two large entries: {}{}",
                        report.two_large_entries,
                        if report.large_bound_vacuous {
                            " (bound vacuous)"
                        } else {
                            ""
                        }
                    );
                    println!("  within cap:        {}", report.within_cap);
                    println!("  admissible:        {}", record.satisfied);
                }
                Format::Json => emit_json(&record),
                Format::Csv => {
                    println!("n,n1,n2,continuity,two_large_entries,large_bound_vacuous,within_cap,satisfied,entries");
                    println!(
                        "{},{},{},{},{},{},{},{},{}",
                        record.n,
                        record.n1,
                        record.n2,
                        report.continuity,
                        report.two_large_entries,
                        report.large_bound_vacuous,
                        report.within_cap,
                        record.satisfied,
                        record
                            .entries
                            .iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
            Ok(true)
        }
        Command::Reduce { input, output } => {
            let f = read_embedding(&input)?;
            let seq = extract_type_sequence(&f)?;
            let reduction = seq.reduce_to_base()?;
            for (stage, condition) in reduction.stages.iter().zip(&reduction.conditions) {
                if !condition.satisfied() {
                    eprintln!(
                        "warning: stage {} (n={}, n2={}) is not admissible: {:?}",
                        stage.stage_name, stage.n, stage.n2, condition
                    );
                }
            }
            let rendered = render_reduction(format, &reduction);
            print!("{rendered}");
            if let Some(path) = output {
                File::create(&path)?.write_all(rendered.as_bytes())?;
            }
            Ok(true)
        }
        Command::BruteForce(cmd) => run_brute_force(format, cmd),
        Command::Verify(cmd) => run_verify(format, cmd),
        Command::Fixtures(cmd) => run_fixtures(format, cmd),
    }
}

fn render_reduction(format: Format, reduction: &cubewire::typeseq::Reduction) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out.push_str(
                &serde_json::to_string_pretty(&reduction.stages).expect("serializable stages"),
            );
            out.push('\n');
        }
        Format::Csv => {
            let width = reduction.stages[0].entries.len();
            let header: Vec<String> = (1..=width).map(|i| format!("e{i}")).collect();
            out.push_str(&format!("stage,n,n2,theta_sum,{}\n", header.join(",")));
            for stage in &reduction.stages {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    stage.stage_name,
                    stage.n,
                    stage.n2,
                    stage.theta_sum,
                    stage
                        .entries
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ));
            }
        }
        Format::Text => {
            for stage in &reduction.stages {
                out.push_str(&format!(
                    "{:<14} (n={}, n2={}) theta_sum={:<6} {:?}\n",
                    stage.stage_name, stage.n, stage.n2, stage.theta_sum, stage.entries
                ));
            }
            out.push_str(&format!("multiplier: {}\n", reduction.multiplier));
        }
    }
    out
}

fn run_brute_force(
    format: Format,
    cmd: BruteForceCommand,
) -> Result<bool, Box<dyn std::error::Error>> {
    match cmd {
        BruteForceCommand::Wirelength {
            n1,
            n2,
            prune_symmetry,
            trials,
            seed,
            output,
        } => {
            let report = match trials {
                Some(t) => sampled_min_wirelength(n1, n2, t, seed)?,
                None => brute_force_min_wirelength(n1, n2, prune_symmetry)?,
            };
            if let Some(path) = output {
                let host = cubewire::cylinder::HostGraph::new(n1, n2)?;
                let witness = EmbeddingMap::new(host, report.witness.clone())?;
                let mut file = File::create(&path)?;
                save_embedding(&witness, &mut file)?;
            }
            match format {
                Format::Text => {
                    println!(
                        "minimum {} over {} {} ({} optima, {} ms)",
                        report.minimum,
                        report.nodes_explored,
                        if report.exhaustive {
                            "bijections"
                        } else {
                            "samples"
                        },
                        report.optimum_count,
                        report.wall_ms
                    );
                    println!("witness: {:?}", report.witness);
                }
                Format::Json => emit_json(&report),
                Format::Csv => emit_csv(
                    &[report],
                    &[
                        "n1",
                        "n2",
                        "exhaustive",
                        "pruned",
                        "minimum",
                        "optimum_count",
                        "nodes_explored",
                        "witness",
                    ],
                ),
            }
            Ok(true)
        }
        BruteForceCommand::Theta { n, k } => {
            let record = ThetaRecord {
                n,
                k,
                type_value: None,
                theta: brute_force_theta(n, k)?,
                exact: true,
            };
            match format {
                Format::Text => println!("{}", record.theta),
                Format::Json => emit_json(&record),
                Format::Csv => emit_csv(&[record], &["n", "k", "theta", "exact"]),
            }
            Ok(true)
        }
        BruteForceCommand::ThetaType { n, type_value } => {
            match brute_force_theta_type(n, type_value)? {
                Some(theta) => {
                    let record = ThetaRecord {
                        n,
                        k: 1u64 << (n - 1),
                        type_value: Some(type_value),
                        theta,
                        exact: true,
                    };
                    match format {
                        Format::Text => println!("{theta}"),
                        Format::Json => emit_json(&record),
                        Format::Csv => {
                            emit_csv(&[record], &["n", "k", "type_value", "theta", "exact"])
                        }
                    }
                }
                None => println!("no half-size subset of Q_{n} has type {type_value}"),
            }
            Ok(true)
        }
        BruteForceCommand::Seqmin { n1, n2 } => {
            let report = sequence_lower_bound_search(n1, n2)?;
            match format {
                Format::Text => {
                    println!(
                        "minimum theta-sum {} (Gray value {}) over admissible sequences at (n1,n2)=({},{})",
                        report.minimum, report.gray_value, report.n1, report.n2
                    );
                    println!("witness: {:?}", report.witness);
                }
                Format::Json => emit_json(&report),
                Format::Csv => emit_csv(
                    &[report],
                    &["n1", "n2", "minimum", "gray_value", "nodes_explored", "witness"],
                ),
            }
            Ok(true)
        }
    }
}

fn run_verify(format: Format, cmd: VerifyCommand) -> Result<bool, Box<dyn std::error::Error>> {
    match cmd {
        VerifyCommand::Engines { n1, n2, trials, seed } => {
            let report = verify_engine_agreement(n1, n2, trials, seed)?;
            match format {
                Format::Text => println!(
                    "engine agreement on ({n1},{n2}) over {trials} embeddings (seed {seed}): {}",
                    if report.ok { "ok" } else { "FAILED" }
                ),
                Format::Json => emit_json(&report),
                Format::Csv => emit_csv(&[&report], &["n1", "n2", "trials", "seed", "ok"]),
            }
            Ok(report.ok)
        }
        VerifyCommand::Columns { n1, n2, trials, seed } => {
            let report = verify_gray_column_optimality(n1, n2, trials, seed)?;
            match format {
                Format::Text => {
                    println!(
                        "gray column-cut terms {:?} vs bounds {:?}: {}",
                        report.gray_terms,
                        report.bounds,
                        if report.gray_attains_bounds { "attained" } else { "MISSED" }
                    );
                    println!(
                        "random embeddings below a bound: {} / {}",
                        report.violations, report.trials
                    );
                }
                Format::Json => emit_json(&report),
                Format::Csv => emit_csv(
                    &[&report],
                    &["n1", "n2", "trials", "seed", "gray_attains_bounds", "violations", "ok"],
                ),
            }
            Ok(report.ok)
        }
        VerifyCommand::Identities { max_n, max_k } => {
            let report = verify_identities(max_n, max_k);
            match format {
                Format::Text => {
                    for check in &report.checks {
                        println!(
                            "{:<28} {:>9} cases  {}",
                            check.name,
                            check.cases,
                            if check.ok { "ok" } else { "FAILED" }
                        );
                    }
                }
                Format::Json => emit_json(&report),
                Format::Csv => emit_csv(&report.checks, &["name", "cases", "ok"]),
            }
            Ok(report.ok)
        }
    }
}

fn run_fixtures(format: Format, cmd: FixturesCommand) -> Result<bool, Box<dyn std::error::Error>> {
    match cmd {
        FixturesCommand::Embedding => {
            print!("{}", fixtures::EMBEDDING_TEXT);
            Ok(true)
        }
        FixturesCommand::Table1 => {
            let (_, reduction) = fixtures::bundled_reduction()?;
            let table = fixtures::bundled_reduction_table();
            let mut ok = reduction.stages.len() == table.len();
            #[derive(Serialize)]
            struct RowDiff<'a> {
                row: &'a str,
                stage_name: &'a str,
                expected: &'a [u64],
                computed: &'a [u64],
                matches: bool,
            }
            let mut diffs = Vec::new();
            for (stage, (row_name, expected)) in reduction.stages.iter().zip(&table) {
                let matches = stage.entries == *expected;
                ok &= matches;
                diffs.push(RowDiff {
                    row: row_name,
                    stage_name: &stage.stage_name,
                    expected,
                    computed: &stage.entries,
                    matches,
                });
            }
            match format {
                Format::Text => {
                    for d in &diffs {
                        println!(
                            "{:<3} {:<14} {} {:?}",
                            d.row,
                            d.stage_name,
                            if d.matches { "ok  " } else { "DIFF" },
                            d.computed
                        );
                    }
                    println!("table reproduction: {}", if ok { "exact" } else { "MISMATCH" });
                }
                Format::Json => emit_json(&diffs),
                Format::Csv => {
                    emit_csv(&diffs, &["row", "stage_name", "matches", "expected", "computed"])
                }
            }
            Ok(ok)
        }
    }
}
