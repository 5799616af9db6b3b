use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use confspace::complex::ComplexFile;
use confspace::harness::{run_suite, RunOptions, SuiteFile};
use confspace::invariants::{abelianization, homology, pi1_presentation, SkeletonView};
use confspace::local::local_homotopical_dimension;
use confspace::quotient::braid_model;
use confspace::retract::delta_model;
use confspace::{corpus, Error, SimplicialComplex};

/// Simplicial models of configuration spaces with bounded collisions.
#[derive(Parser)]
#[command(name = "confspace", version)]
struct Cli {
    /// Run sequentially even when built with the parallel feature.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a complex file describes a simplicial complex.
    Validate {
        #[arg(long)]
        input: String,
    },
    /// Ordered model: flags of X^n simplices avoiding the fat diagonal.
    DeltaModel(ModelArgs),
    /// Unordered model: the ordered one, subdivided and divided by S_n.
    BraidModel(ModelArgs),
    /// Integral homology table.
    Homology {
        #[arg(long)]
        input: String,
        #[arg(long)]
        up_to: usize,
        #[arg(long)]
        reduced: bool,
    },
    /// Edge-path presentation of the fundamental group.
    Pi1 {
        #[arg(long)]
        input: String,
    },
    /// Local homotopical dimension with its witness.
    Localdim {
        #[arg(long)]
        input: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-case ceiling in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// JSON report path; defaults to `<suite>-report.json`.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    /// Enumerate simplices up to this dimension; defaults to the full model.
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Core,
    Paper,
    Stretch,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Paper => "paper",
            Suite::Stretch => "stretch",
        }
    }
}

/// A library error caused by what the user supplied.
#[derive(Debug)]
struct InputError(Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for InputError {}

fn is_input_error(e: &anyhow::Error) -> bool {
    e.chain().any(|c| c.is::<InputError>())
}

fn input<T>(r: confspace::Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Irregular { .. } | Error::BoundarySquare(_) | Error::FactorOverflow => {
            anyhow::Error::new(e)
        }
        _ => anyhow::Error::new(InputError(e)),
    })
}

/// `builtin:NAME` or a path to a complex file.
fn load(source: &str) -> Result<(SimplicialComplex, Option<usize>)> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return Ok((input(corpus::by_name(name))?, None));
    }
    let file =
        input(ComplexFile::read(Path::new(source))).with_context(|| format!("reading {source}"))?;
    let k = input(file.to_complex()).with_context(|| format!("loading {source}"))?;
    Ok((k, file.skeleton_bound))
}

fn default_max_dim(x: &SimplicialComplex, n: usize) -> usize {
    x.dimension().max(0) as usize * n
}

fn write_model(k: &SimplicialComplex, bound: Option<usize>, out: &Path) -> Result<()> {
    input(ComplexFile::from_complex(k, bound).write(out))
        .with_context(|| format!("writing {}", out.display()))?;
    println!("{}: f-vector {:?}", k.name(), k.f_vector());
    if let Some(b) = bound {
        println!("enumerated through dimension {b} only");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    confspace::par::set_parallel(!cli.sequential);
    match cli.command {
        Command::Validate { input: source } => {
            let (k, _) = match load(&source) {
                Ok(k) => k,
                Err(e)
                    if e.chain().any(|c| {
                        matches!(
                            c.downcast_ref::<InputError>(),
                            Some(InputError(Error::Invalid(_)))
                        )
                    }) =>
                {
                    println!("invalid: {e:#}");
                    return Ok(false);
                }
                Err(e) => return Err(e),
            };
            match k.validate() {
                Ok(()) => {
                    println!("ok: {} with f-vector {:?}", k.name(), k.f_vector());
                    Ok(true)
                }
                Err(v) => {
                    println!("invalid: {v}");
                    Ok(false)
                }
            }
        }
        Command::DeltaModel(a) => {
            let (x, _) = load(&a.input)?;
            let max_dim = a.max_dim.unwrap_or_else(|| default_max_dim(&x, a.n));
            let m = input(delta_model(&x, a.n, a.d, max_dim))?;
            write_model(&m.w, m.skeleton_bound, &a.out)?;
            Ok(true)
        }
        Command::BraidModel(a) => {
            let (x, _) = load(&a.input)?;
            let max_dim = a.max_dim.unwrap_or_else(|| default_max_dim(&x, a.n));
            let q = input(braid_model(&x, a.n, a.d, max_dim))?;
            write_model(&q.quotient, q.skeleton_bound, &a.out)?;
            Ok(true)
        }
        Command::Homology {
            input: source,
            up_to,
            reduced,
        } => {
            let (k, bound) = load(&source)?;
            let h = input(homology(
                &SkeletonView { complex: &k, bound },
                up_to,
                reduced,
            ))?;
            print!("{}", h.table());
            Ok(true)
        }
        Command::Pi1 { input: source } => {
            let (k, _) = load(&source)?;
            let p = input(pi1_presentation(&k, 0))?;
            let ab = abelianization(&p);
            println!("generators: {}", p.generators.len());
            println!("relators: {}", p.relators.len());
            let mut parts: Vec<String> = Vec::new();
            if ab.rank > 0 {
                parts.push(if ab.rank == 1 {
                    "Z".into()
                } else {
                    format!("Z^{}", ab.rank)
                });
            }
            parts.extend(ab.torsion.iter().map(|t| format!("Z/{t}")));
            println!(
                "abelianization: {}",
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(" + ")
                }
            );
            println!("trivial by elimination: {}", p.trivial_by_elimination());
            Ok(true)
        }
        Command::Localdim { input: source } => {
            let (k, _) = load(&source)?;
            let ld = input(local_homotopical_dimension(&k))?;
            let label = |s: &[u32]| k.simplex_label(s);
            if ld.r == confspace::invariants::ACYCLIC {
                println!("r: unbounded");
            } else {
                println!("r: {}", ld.r);
            }
            println!("witness: {}", label(&ld.witness));
            match ld.combinatorial() {
                Some(c) => println!("chamber criterion: {c}"),
                None => println!("chamber criterion: undecided"),
            }
            if ld.proxy.is_empty() {
                println!("proxy: none");
            } else {
                let list: Vec<String> = ld.proxy.iter().map(|s| label(s)).collect();
                println!("proxy (homological only): {}", list.join(" "));
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            jobs,
            budget,
            json,
        } => {
            let file = input(SuiteFile::builtin(suite.name()))?;
            let report = run_suite(&file, RunOptions { jobs, budget });
            print!("{}", report.table());
            let path =
                json.unwrap_or_else(|| PathBuf::from(format!("{}-report.json", suite.name())));
            std::fs::write(&path, serde_json::to_string_pretty(&report)?)
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_input_error(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
