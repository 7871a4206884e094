//! `pfcond` command line: family generators, matching counts, Pfaffians, Kasteleyn
//! orientations and randomized identity checks.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use pfcond::families::{generate, FamilySpec, WeightMode};
use pfcond::formats::{parse_embedding, parse_graph, parse_orientation, parse_skew, write_embedding, write_graph, write_orientation};
use pfcond::identities::{run_trials, IdentityKind};
use pfcond::kasteleyn::{count_via_pfaffian, kasteleyn_orient, verify_admissible, CheckMode, Embedding, PlaneGraph};
use pfcond::pfaffian::pfaffian;
use pfcond::{matching_gf, OrderedGraph, PfMethod, SkewArray};

#[derive(Parser)]
#[command(name = "pfcond", version, about = "Exact Pfaffians, perfect matchings and graphical condensation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated family as a graph file.
    Gen {
        #[arg(long)]
        family: FamilySpec,
        #[command(flatten)]
        weights: WeightArgs,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the embedding of a planar family to this file.
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
    /// Weighted count of perfect matchings.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = CountMethod::Enumerate)]
        method: CountMethod,
    },
    /// Pfaffian of a skew-array file.
    Pf {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "eliminate")]
        method: PfMethod,
    },
    /// Kasteleyn orientation of a plane graph.
    Orient {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the clockwise-odd condition of an orientation (computed if not given).
    VerifyOrientation {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[arg(long, default_value = "faces")]
        mode: CheckMode,
    },
    /// Seeded random trials of one identity.
    Verify {
        #[arg(long)]
        identity: IdentityKind,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "PFCOND_SEED", default_value_t = 0)]
        seed: u64,
        /// Ambient size for Pfaffian identities, vertex budget for planar ones.
        #[arg(long)]
        size: Option<usize>,
    },
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long, default_value = "unit")]
    weights: WeightMode,
    #[arg(long, env = "PFCOND_SEED", default_value_t = 0)]
    seed: u64,
}

/// A graph either generated (`--family`) or read from files (`--in`, `--embedding`).
#[derive(Args)]
struct Source {
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    family: Option<FamilySpec>,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, requires = "input")]
    embedding: Option<PathBuf>,
    #[command(flatten)]
    weights: WeightArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Enumerate,
    Pfaffian,
}

type CliResult = Result<ExitCode, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn rational(g: &OrderedGraph<BigInt>) -> OrderedGraph<BigRational> {
    g.map_weights(|w| BigRational::from_integer(w.clone()))
}

impl Source {
    fn load(&self) -> Result<(OrderedGraph<BigRational>, Option<Embedding>), String> {
        if let Some(spec) = &self.family {
            let fam = generate(spec, &self.weights.weights, self.weights.seed).map_err(|e| e.to_string())?;
            return Ok((rational(&fam.graph), fam.embedding));
        }
        let path = self.input.as_ref().expect("clap requires --family or --in");
        let g: OrderedGraph<BigRational> = parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
        let emb = match &self.embedding {
            Some(p) => Some(parse_embedding(&g, &read(p)?).map_err(|e| format!("{}: {e}", p.display()))?),
            None => None,
        };
        Ok((g, emb))
    }
}

fn need_embedding(emb: Option<Embedding>) -> Result<Embedding, String> {
    emb.ok_or_else(|| "this command needs a plane embedding (a planar --family or --embedding FILE)".to_string())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen { family, weights, out, embedding } => {
            let fam = generate(&family, &weights.weights, weights.seed).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &write_graph(&fam.graph))?;
            if let Some(path) = embedding {
                let emb = need_embedding(fam.embedding)?;
                emit(Some(&path), &write_embedding(&fam.graph, &emb))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { source, method } => {
            let (g, emb) = source.load()?;
            let value = match method {
                CountMethod::Enumerate => matching_gf(&g),
                CountMethod::Pfaffian => {
                    let emb = need_embedding(emb)?;
                    let pg = PlaneGraph::new(&g, &emb).map_err(|e| e.to_string())?;
                    count_via_pfaffian(&pg).map_err(|e| e.to_string())?
                }
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Pf { file, method } => {
            let a: SkewArray<BigRational> = parse_skew(&read(&file)?).map_err(|e| format!("{}: {e}", file.display()))?;
            println!("{}", pfaffian(&a, method).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Orient { source, out } => {
            let (g, emb) = source.load()?;
            let emb = need_embedding(emb)?;
            let pg = PlaneGraph::new(&g, &emb).map_err(|e| e.to_string())?;
            let xi = kasteleyn_orient(&pg).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &write_orientation(&g, &xi))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyOrientation { source, orientation, mode } => {
            let (g, emb) = source.load()?;
            let emb = need_embedding(emb)?;
            let pg = PlaneGraph::new(&g, &emb).map_err(|e| e.to_string())?;
            let xi = match orientation {
                Some(p) => parse_orientation(&g, &read(&p)?).map_err(|e| format!("{}: {e}", p.display()))?,
                None => kasteleyn_orient(&pg).map_err(|e| e.to_string())?,
            };
            let report = verify_admissible(&pg, &xi, mode).map_err(|e| e.to_string())?;
            println!("{report}");
            Ok(if report.is_admissible() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { identity, trials, seed, size } => {
            let size = size.unwrap_or_else(|| identity.default_size());
            let mut passed = 0;
            for (i, outcome) in run_trials(identity, seed, trials, size).into_iter().enumerate() {
                match outcome {
                    Ok(t) => {
                        passed += usize::from(t.pass());
                        println!("{t}");
                    }
                    Err(e) => println!("FAIL {identity} {} error: {e}", seed.wrapping_add(i as u64)),
                }
            }
            println!("SUMMARY {identity} {passed}/{trials}");
            Ok(if passed == trials { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
