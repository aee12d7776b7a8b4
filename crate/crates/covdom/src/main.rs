//! Command-line front end: exact domination solves, cover construction
//! and verification, bound reports, and the random-lift experiment
//! driver.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! (invalid cover, violated bound, ratio below an established floor),
//! 2 on usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use covdom::bounds::check_sandwich;
use covdom::cover::{lift, CoveringProjection, VoltageAssignment};
use covdom::domsolve::{domination_number, greedy_dominating_set, DominationKind};
use covdom::error::Error;
use covdom::graph::{parse_edge_list_text, Graph};
use covdom::graph6::{parse_graph6, to_graph6};
use covdom::harness::{
    self, fixture, persist, ratio_experiment, ExperimentSummary, Fixture, FIXTURE_NAMES,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "covdom",
    about = "k-fold graph covers and domination parameters",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Plain,
    Total,
    Connected,
}

impl From<KindArg> for DominationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Plain => DominationKind::Plain,
            KindArg::Total => DominationKind::Total,
            KindArg::Connected => DominationKind::Connected,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a domination number exactly and print the certificate.
    Dom {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Graph file (.g6 for graph6, anything else as edge-list text).
        #[arg(long)]
        input: PathBuf,
        /// Search budget in branch-and-bound nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Evaluate every applicable cover bound for a projection and check
    /// the inequalities against exact values.
    Bounds {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        total: PathBuf,
        /// Projection file: header "k n_total n_base", then vertex pairs.
        #[arg(long)]
        proj: PathBuf,
        /// Comma-separated subset of plain,total,connected.
        #[arg(long, value_delimiter = ',', default_values = ["plain", "total", "connected"])]
        kinds: Vec<KindArg>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Construct a k-fold cover from voltages (from file or seeded).
    Lift {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        source: VoltageSource,
        /// Output path for the covering graph (graph6).
        #[arg(long)]
        out: PathBuf,
        /// Output path for the projection file.
        #[arg(long)]
        proj_out: PathBuf,
    },
    /// Verify that a projection file is a genuine covering projection.
    VerifyCover {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        total: PathBuf,
        #[arg(long)]
        proj: PathBuf,
    },
    /// Run the greedy dominating-set heuristic and print its trace.
    Greedy {
        #[arg(long)]
        input: PathBuf,
    },
    /// Hunt for small domination ratios over random k-lifts.
    Hunt {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Output JSONL path, one record per line.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        /// Stamp records with the wall-clock time (breaks byte-for-byte
        /// reproducibility of the output file).
        #[arg(long)]
        stamp: bool,
    },
    /// List or export the named fixtures.
    Fixtures {
        #[arg(long)]
        list: bool,
        /// Write the named fixture's files (graph6 + projection).
        #[arg(long, conflicts_with = "list")]
        dump: Option<String>,
        #[arg(long, requires = "dump")]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VoltageSource {
    /// Voltage file: one "u v p_0 … p_{k-1}" line per base edge.
    #[arg(long)]
    voltages: Option<PathBuf>,
    /// Seed for uniformly random permutations.
    #[arg(long)]
    seed: Option<u64>,
}

/// What a successfully parsed-and-executed command reports.
enum Outcome {
    Pass,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|ext| ext == "g6") {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        parse_graph6(line)
    } else {
        parse_edge_list_text(&text)
    }
}

fn read_projection(proj: &Path, total: Graph, base: Graph) -> Result<CoveringProjection, Error> {
    let text = std::fs::read_to_string(proj)?;
    CoveringProjection::parse(&text, total, base)
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Dom {
            kind,
            input,
            budget,
        } => {
            let g = read_graph(&input)?;
            let cert = domination_number(&g, kind.into(), budget)?;
            println!("{}", serde_json::to_string(&cert).expect("serializable"));
            Ok(Outcome::Pass)
        }

        Command::Bounds {
            base,
            total,
            proj,
            kinds,
            budget,
        } => {
            let projection = read_projection(&proj, read_graph(&total)?, read_graph(&base)?)?;
            let kinds: Vec<DominationKind> = kinds.into_iter().map(Into::into).collect();
            let report = check_sandwich(&projection, &kinds, budget)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
            if report.all_hold() {
                Ok(Outcome::Pass)
            } else {
                for violation in &report.violations {
                    eprintln!("BOUND VIOLATION: {violation}");
                }
                Ok(Outcome::CheckFailed)
            }
        }

        Command::Lift {
            base,
            k,
            source,
            out,
            proj_out,
        } => {
            let base = read_graph(&base)?;
            let voltages = match (source.voltages, source.seed) {
                (Some(path), None) => {
                    let v = VoltageAssignment::parse(&std::fs::read_to_string(path)?, base)?;
                    if v.k() != k {
                        return Err(Error::VoltageEdgeMismatch {
                            detail: format!("voltage file encodes fold {} but --k is {k}", v.k()),
                        });
                    }
                    v
                }
                (None, Some(seed)) => VoltageAssignment::random(base, k, seed)?,
                _ => unreachable!("clap enforces exactly one source"),
            };
            let (total, projection) = lift(&voltages)?;
            std::fs::write(&out, to_graph6(&total) + "\n")?;
            std::fs::write(&proj_out, projection.to_text())?;
            println!(
                "lifted: {} vertices, {} edges, {} component(s); wrote {} and {}",
                total.n(),
                total.edge_count(),
                total.components().len(),
                out.display(),
                proj_out.display()
            );
            Ok(Outcome::Pass)
        }

        Command::VerifyCover { base, total, proj } => {
            let projection = read_projection(&proj, read_graph(&total)?, read_graph(&base)?)?;
            let verdict = projection.verify();
            println!("{verdict}");
            if verdict.is_valid() {
                Ok(Outcome::Pass)
            } else {
                Ok(Outcome::CheckFailed)
            }
        }

        Command::Greedy { input } => {
            let g = read_graph(&input)?;
            let trace = greedy_dominating_set(&g);
            println!("{}", serde_json::to_string(&trace).expect("serializable"));
            Ok(Outcome::Pass)
        }

        Command::Hunt {
            base,
            k,
            trials,
            seed,
            out,
            budget,
            stamp,
        } => {
            let base = read_graph(&base)?;
            let mut records = ratio_experiment(&base, k, trials, seed, budget)?;
            if stamp {
                let now = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs().to_string())
                    .unwrap_or_default();
                for record in &mut records {
                    record.timestamp = Some(now.clone());
                }
            }
            persist(&records, &out)?;
            let summary =
                ExperimentSummary::from_records(&records, &base).expect("trials >= 1 recorded");
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("serializable")
            );
            if summary.violations.is_empty() {
                Ok(Outcome::Pass)
            } else {
                for violation in &summary.violations {
                    eprintln!("================ BOUND VIOLATION ================");
                    eprintln!("{violation}");
                    eprintln!("=================================================");
                }
                Ok(Outcome::CheckFailed)
            }
        }

        Command::Fixtures {
            list,
            dump,
            out_dir,
        } => {
            if let Some(name) = dump {
                let dir = out_dir.unwrap_or_else(|| PathBuf::from("."));
                std::fs::create_dir_all(&dir)?;
                match fixture(&name)? {
                    Fixture::Graph(g) => {
                        let path = dir.join(format!("{name}.g6"));
                        std::fs::write(&path, to_graph6(&g) + "\n")?;
                        println!("wrote {}", path.display());
                    }
                    Fixture::Cover {
                        base,
                        total,
                        projection,
                    } => {
                        for (suffix, text) in [
                            ("base.g6", to_graph6(&base) + "\n"),
                            ("total.g6", to_graph6(&total) + "\n"),
                            ("proj.txt", projection.to_text()),
                        ] {
                            let path = dir.join(format!("{name}.{suffix}"));
                            std::fs::write(&path, text)?;
                            println!("wrote {}", path.display());
                        }
                    }
                }
            } else {
                // Default to listing; `--list` is accepted explicitly too.
                let _ = list;
                for name in FIXTURE_NAMES {
                    let shape = match harness::fixture(name)? {
                        Fixture::Graph(g) => format!("graph, n={}", g.n()),
                        Fixture::Cover { projection, .. } => format!(
                            "cover, k={}, n_base={}, n_total={}",
                            projection.k(),
                            projection.base().n(),
                            projection.total().n()
                        ),
                    };
                    println!("{name}  ({shape})");
                }
            }
            Ok(Outcome::Pass)
        }
    }
}
