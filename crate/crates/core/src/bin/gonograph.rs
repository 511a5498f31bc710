use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gonograph::divisor::{gonality_dhar, q_reduce, rank, Divisor};
use gonograph::fibzeck::zeckendorf_encode;
use gonograph::jacobian::{cyclic_model, smith_invariants};
use gonograph::verify::{render, run_check, CheckParams, Format, CHECKS};
use gonograph::{Error, Family, Multigraph, Result};

#[derive(Parser)]
#[command(
    name = "gonograph",
    version,
    about = "Exact divisor theory on strip and fan graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph family: strip or fan.
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    /// JSON graph file, instead of --family/--n.
    #[arg(long, conflicts_with_all = ["family", "n"])]
    graph: Option<PathBuf>,
}

impl GraphArgs {
    fn load(&self) -> Result<Multigraph> {
        match (&self.graph, self.family, self.n) {
            (Some(path), _, _) => Multigraph::from_json(&fs::read_to_string(path)?),
            (None, Some(family), Some(n)) => family.build(n),
            _ => Err(Error::InvalidArgument(
                "give either --graph FILE or both --family and --n".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sumset,
    Dhar,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a family graph as JSON.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-forest count kappa(i, j).
    Kappa {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Smith invariants and the cyclic model.
    Jacobian {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// q-reduce a divisor, printing each Dhar firing.
    Reduce {
        #[command(flatten)]
        graph: GraphArgs,
        /// Divisor as "c@i,...", e.g. "2@0,2@2".
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long)]
        base: usize,
    },
    /// Baker-Norine rank of a divisor.
    Rank {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Gonality (or r-gonality) with a witness.
    Gonality {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "sumset")]
        method: Method,
        #[arg(long, default_value_t = 1)]
        rank: u32,
    },
    /// The m-fold sumset of the Jacobian generators with Zeckendorf forms.
    Sumset {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: u32,
    },
    /// Run verification sweeps.
    Verify {
        /// Check id, or `all`.
        #[arg(long)]
        check: Vec<String>,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Include wall-clock times (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        /// List registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

/// `Ok(false)` means a verification mismatch.
fn run(cli: Cli, out: &mut String) -> Result<bool> {
    match cli.command {
        Command::Gen {
            family,
            n,
            out: file,
        } => {
            let json = family.build(n)?.to_json();
            match file {
                Some(path) => fs::write(path, json)?,
                None => out.push_str(&json),
            }
        }
        Command::Kappa { graph, i, j } => {
            writeln!(out, "{}", graph.load()?.two_forest_count(i, j)?).unwrap();
        }
        Command::Jacobian { graph } => {
            let g = graph.load()?;
            let s = smith_invariants(&g)?;
            writeln!(out, "invariants: {:?}", s.factors).unwrap();
            writeln!(out, "order: {}", s.order()?).unwrap();
            match cyclic_model(&g) {
                Ok(model) => {
                    writeln!(out, "cyclic model: Z/{}", model.modulus()).unwrap();
                    writeln!(out, "generator images: {:?}", model.generator_images()).unwrap();
                    writeln!(out, "A: {}", model.additive_set()).unwrap();
                }
                Err(Error::NonCyclicModel {
                    kappa_11,
                    kappa,
                    gcd,
                }) => {
                    writeln!(
                        out,
                        "cyclic model: none (gcd(kappa_11 = {kappa_11}, kappa = {kappa}) = {gcd})"
                    )
                    .unwrap();
                }
                Err(e) => return Err(e),
            }
        }
        Command::Reduce {
            graph,
            divisor,
            base,
        } => {
            let g = graph.load()?;
            let d = Divisor::parse(&divisor, g.vertex_count())?;
            let red = q_reduce(&g, &d, base)?;
            for step in &red.dhar_steps {
                writeln!(out, "fire {:?} -> {}", step.fired, step.result).unwrap();
            }
            writeln!(out, "reduced: {}", red.divisor).unwrap();
            writeln!(out, "firing vector: {:?}", red.certificate.firing_vector).unwrap();
        }
        Command::Rank { graph, divisor } => {
            let g = graph.load()?;
            let d = Divisor::parse(&divisor, g.vertex_count())?;
            writeln!(out, "{}", rank(&g, &d)?).unwrap();
        }
        Command::Gonality {
            graph,
            method,
            rank,
        } => {
            let g = graph.load()?;
            match method {
                Method::Dhar => {
                    let w = gonality_dhar(&g, i64::from(rank))?;
                    writeln!(out, "gonality: {}", w.degree).unwrap();
                    writeln!(out, "witness: {}", w.divisor).unwrap();
                }
                Method::Sumset => {
                    let model = cyclic_model(&g)?;
                    let s = model.additive_set().gonality(rank)?;
                    writeln!(out, "gonality: {}", s.degree).unwrap();
                    writeln!(out, "witness: D = {} mod {}", s.witness, model.modulus()).unwrap();
                }
            }
        }
        Command::Sumset { graph, m } => {
            let g = graph.load()?;
            let model = cyclic_model(&g)?;
            let set = model.additive_set().iterated_sumset(m)?;
            writeln!(
                out,
                "# {m}A mod {}: {} elements",
                model.modulus(),
                set.len()
            )
            .unwrap();
            for x in set.iter() {
                writeln!(out, "{x}\t{}", zeckendorf_encode(i128::from(x))?).unwrap();
            }
        }
        Command::Verify {
            check,
            n_min,
            n_max,
            format,
            timing,
            list,
        } => {
            if list {
                for c in CHECKS {
                    writeln!(
                        out,
                        "{:<24} n = {}..={}  {}",
                        c.id, c.default.0, c.default.1, c.summary
                    )
                    .unwrap();
                }
                return Ok(true);
            }
            if check.is_empty() {
                return Err(Error::InvalidArgument("give --check ID (or `all`)".into()));
            }
            let ids: Vec<&str> = if check.iter().any(|c| c == "all") {
                CHECKS.iter().map(|c| c.id).collect()
            } else {
                check.iter().map(String::as_str).collect()
            };
            let params = CheckParams { n_min, n_max };
            let reports = ids
                .iter()
                .map(|id| run_check(id, &params))
                .collect::<Result<Vec<_>>>()?;
            out.push_str(&render(&reports, format.into(), timing)?);
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // a closed pipe (e.g. `| head`) is not an error
    match io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        _ => {}
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
