mod commands;
mod error;
mod model;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ortho_core::boundary::DEFAULT_LATTICE_CAP;
use ortho_core::Budget;

use commands::{Candidate, Ctx, FunctionArgs, FunctionMode, Seeds, TranslateTarget};
use error::CliError;
use report::Report;

/// Checks orthogonality relations and the structures they induce.
#[derive(Debug, Parser)]
#[command(name = "ortho", version)]
struct Cli {
    /// Largest ground set searched exhaustively.
    #[arg(long, env = "BUDGET_N", global = true)]
    budget_n: Option<usize>,
    /// Window of the truncated oracle on the symbolic line.
    #[arg(long, env = "ORACLE_WINDOW", default_value_t = 10_000, global = true)]
    oracle_window: i64,
    /// Number of levels of chain functions.
    #[arg(long, env = "RESOLUTION", default_value_t = 4, global = true)]
    resolution: u32,
    /// Largest lattice built when computing boundaries.
    #[arg(long, env = "LATTICE_CAP", default_value_t = DEFAULT_LATTICE_CAP, global = true)]
    lattice_cap: usize,
    /// Graph ball radius, overriding the model.
    #[arg(long, env = "RADIUS", global = true)]
    radius: Option<u32>,
    /// Print the report as JSON.
    #[arg(long, env = "JSON", global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, env = "SEED", default_value_t = Budget::default().seed, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Checks the axioms of an orthogonality relation.
    CheckAxioms { model: PathBuf },
    /// Prints the scale class and bounded points.
    Classify { model: PathBuf },
    /// Checks the four separation properties.
    Profile { model: PathBuf },
    /// Prints the induced topology.
    Topology { model: PathBuf },
    /// Prints the orthogonal complement of a named subset.
    Perp {
        model: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Translates into an equivalent structure and back.
    Translate {
        model: PathBuf,
        #[arg(long, value_enum)]
        to: TranslateTarget,
    },
    /// Checks that a named map is continuous.
    MapCheck {
        model: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Builds the quotient relation along a surjection.
    Quotient {
        model: PathBuf,
        #[arg(long)]
        map: String,
    },
    /// Checks that two subsets or two maps are parallel.
    Parallel {
        model: PathBuf,
        #[arg(long, value_delimiter = ',', conflicts_with = "maps")]
        sets: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        maps: Option<Vec<String>>,
    },
    /// Separates, pastes or extends chain functions.
    Functions {
        model: PathBuf,
        #[arg(value_enum)]
        mode: FunctionMode,
        #[arg(long, value_delimiter = ',')]
        sets: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        functions: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        cuts: Option<Vec<u32>>,
        /// Level given to components the partial function misses.
        #[arg(long, default_value_t = 0)]
        default: u32,
    },
    /// Estimates hyperbolicity and tests Gromov-product orthogonality.
    Hyperbolic {
        model: PathBuf,
        #[arg(long, value_delimiter = ',')]
        sets: Option<Vec<String>>,
        #[arg(long, default_value = "1")]
        threshold: String,
    },
    /// Counts the ends of a graph.
    Ends {
        model: PathBuf,
        #[arg(long, default_value_t = 5)]
        k_min: u32,
    },
    /// Computes the boundary at infinity.
    Boundary {
        model: PathBuf,
        #[arg(long, value_enum)]
        seeds: Option<Seeds>,
    },
    /// Verifies a large-scale compactification.
    VerifyCompactification {
        model: PathBuf,
        #[arg(long, value_enum, default_value_t = Candidate::Ends)]
        candidate: Candidate,
    },
    /// Cross-checks against brute-force oracles or replays a report.
    Oracle {
        model: PathBuf,
        #[arg(long)]
        replay: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckAxioms { .. } => "check-axioms",
            Command::Classify { .. } => "classify",
            Command::Profile { .. } => "profile",
            Command::Topology { .. } => "topology",
            Command::Perp { .. } => "perp",
            Command::Translate { .. } => "translate",
            Command::MapCheck { .. } => "map-check",
            Command::Quotient { .. } => "quotient",
            Command::Parallel { .. } => "parallel",
            Command::Functions { .. } => "functions",
            Command::Hyperbolic { .. } => "hyperbolic",
            Command::Ends { .. } => "ends",
            Command::Boundary { .. } => "boundary",
            Command::VerifyCompactification { .. } => "verify-compactification",
            Command::Oracle { .. } => "oracle",
        }
    }

    fn model(&self) -> &PathBuf {
        match self {
            Command::CheckAxioms { model }
            | Command::Classify { model }
            | Command::Profile { model }
            | Command::Topology { model }
            | Command::Perp { model, .. }
            | Command::Translate { model, .. }
            | Command::MapCheck { model, .. }
            | Command::Quotient { model, .. }
            | Command::Parallel { model, .. }
            | Command::Functions { model, .. }
            | Command::Hyperbolic { model, .. }
            | Command::Ends { model, .. }
            | Command::Boundary { model, .. }
            | Command::VerifyCompactification { model, .. }
            | Command::Oracle { model, .. } => model,
        }
    }
}

impl Cli {
    fn ctx(&self) -> Ctx {
        let mut budget = Budget {
            seed: self.seed,
            ..Budget::default()
        };
        if let Some(n) = self.budget_n {
            budget.exhaustive_n = n;
            budget.triple_n = budget.triple_n.min(n);
        }
        Ctx {
            budget,
            oracle_window: self.oracle_window,
            resolution: self.resolution,
            lattice_cap: self.lattice_cap,
        }
    }
}

fn run(cli: &Cli, model: &model::Model) -> Result<Report, CliError> {
    let ctx = cli.ctx();
    match &cli.command {
        Command::CheckAxioms { .. } => commands::check_axioms(model, &ctx),
        Command::Classify { .. } => commands::classify(model),
        Command::Profile { .. } => commands::profile(model, &ctx),
        Command::Topology { .. } => commands::topology(model, &ctx),
        Command::Perp { set, .. } => commands::perp_cmd(model, set),
        Command::Translate { to, .. } => commands::translate(model, *to, &ctx),
        Command::MapCheck { map, .. } => commands::map_check(model, map, &ctx),
        Command::Quotient { map, .. } => commands::quotient(model, map, &ctx),
        Command::Parallel { sets, maps, .. } => {
            commands::parallel(model, sets.as_deref(), maps.as_deref(), &ctx)
        }
        Command::Functions {
            mode,
            sets,
            functions,
            cuts,
            default,
            ..
        } => {
            let args = FunctionArgs {
                mode: *mode,
                sets: sets.as_deref(),
                functions,
                cuts: cuts.as_deref(),
                default: *default,
            };
            commands::functions(model, &args, &ctx)
        }
        Command::Hyperbolic {
            sets, threshold, ..
        } => commands::hyperbolic(model, sets.as_deref(), threshold),
        Command::Ends { k_min, .. } => commands::ends(model, *k_min),
        Command::Boundary { seeds, .. } => commands::boundary_cmd(model, *seeds, &ctx),
        Command::VerifyCompactification { candidate, .. } => {
            commands::verify_compactification(model, *candidate, &ctx)
        }
        Command::Oracle {
            replay, samples, ..
        } => match replay {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                let earlier: Report =
                    serde_json::from_str(&text).map_err(|e| CliError::Schema {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                commands::replay(model, &earlier, &ctx)
            }
            None => commands::oracle(model, *samples, &ctx),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = cli.command.name();
    let report = match model::load(cli.command.model(), cli.radius) {
        Err(e) => Report::failed(command, "unknown", &e),
        Ok(m) => match run(&cli, &m) {
            Ok(r) => r.finish(),
            Err(e) => Report::failed(command, m.kind.name(), &e),
        },
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.status.exit_code() as u8)
}
