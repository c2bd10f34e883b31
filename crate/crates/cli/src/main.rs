use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, error::ErrorKind};
use serde::Serialize;

use lieblocks::zigzag::{Graph, ZigzagAlgebra};
use lieblocks::{DynkinType, Exec, RootSystem, Weight, integral, kfunctor, primid, subalg, verify};

const TYPE_HELP: &str = "Dynkin type: A<n> (n>=1), B<n>/C<n> (n>=2), D<n> (n>=4), E6, E7, E8, F4, G2";

/// Root-system, subalgebra and block computations with JSON reports.
///
/// Weights are given in fundamental-weight coordinates as a comma-separated
/// list of integers or fractions p/q, e.g. `1/2,0,0,0`.
#[derive(Parser)]
#[command(name = "lieblocks", version)]
struct Cli {
    /// Run every batch loop on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system summary.
    Info {
        #[arg(long = "type", help = TYPE_HELP)]
        dtype: DynkinType,
    },
    /// Levi and Borel-de Siebenthal subalgebra classes.
    Subalg {
        #[arg(long = "type", help = TYPE_HELP)]
        dtype: DynkinType,
        /// Only the classes of maximal dimension.
        #[arg(long)]
        max: bool,
        #[arg(long)]
        tsv: bool,
    },
    /// Zigzag algebra of a Dynkin diagram or of an explicit graph.
    Zigzag {
        #[arg(long = "type", help = TYPE_HELP, required_unless_present = "edges")]
        dtype: Option<DynkinType>,
        /// Edges as 1-based pairs, e.g. `1-2,2-3,2-4`.
        #[arg(long, conflicts_with = "dtype")]
        edges: Option<String>,
        /// Multiplication table instead of the report.
        #[arg(long)]
        tsv: bool,
    },
    /// Translation, wall-crossing and projection matrices.
    Kfunctor {
        #[arg(long = "type", help = TYPE_HELP)]
        dtype: DynkinType,
    },
    /// Primitive ideal labels on the minimal cell.
    Primid {
        #[arg(long = "type", help = TYPE_HELP)]
        dtype: DynkinType,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Compare d = dim g - dim g^Z with m = min orbit dimension.
    Dichotomy {
        #[arg(long = "type", help = TYPE_HELP)]
        dtype: DynkinType,
    },
    /// Block status of the finite-dimensional quotient at lambda.
    Status {
        #[arg(long = "type", help = TYPE_HELP)]
        dtype: DynkinType,
        #[arg(long)]
        lambda: String,
    },
    /// Run the full verification suite.
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

fn usage(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn weight(s: &str, rank: usize) -> Weight {
    let w = Weight::parse(s).unwrap_or_else(|e| usage(ErrorKind::ValueValidation, e));
    if w.rank() != rank {
        usage(
            ErrorKind::ValueValidation,
            format!("lambda has {} coordinates, expected {rank}", w.rank()),
        );
    }
    w
}

fn edges(s: &str) -> Graph {
    let pair = |p: &str| -> Option<(usize, usize)> {
        let (u, v) = p.trim().split_once('-')?;
        let (u, v): (usize, usize) = (u.trim().parse().ok()?, v.trim().parse().ok()?);
        (u > 0 && v > 0).then(|| (u - 1, v - 1))
    };
    let es: Vec<(usize, usize)> = s
        .split(',')
        .map(pair)
        .collect::<Option<_>>()
        .unwrap_or_else(|| usage(ErrorKind::ValueValidation, format!("invalid edge list {s:?}")));
    let n = es.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::new(n, &es).unwrap_or_else(|e| usage(ErrorKind::ValueValidation, e))
}

fn json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("reports serialize"));
}

/// Prints `failed` identities to stderr and picks the exit code.
fn verdict(failed: &[String]) -> ExitCode {
    for f in failed {
        eprintln!("FAILED: {f}");
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> lieblocks::Result<ExitCode> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match cli.cmd {
        Cmd::Info { dtype } => json(&RootSystem::build(dtype)?.summary()),
        Cmd::Subalg { dtype, max, tsv } => {
            let rs = RootSystem::build(dtype)?;
            let mut rep = subalg::report(&rs, exec)?;
            if max {
                rep.classes.retain(|c| c.maximal_by_dim);
            }
            if tsv {
                println!("class\tdim\tcodim\tconstruction\tmaximal_by_dim\tmaximal_by_inclusion");
                for c in &rep.classes {
                    let cons: Vec<String> = c.realized_by.iter().map(|(k, n)| format!("{k}:{n}")).collect();
                    println!(
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        c.class.label,
                        c.class.dim,
                        c.class.codim,
                        cons.join(","),
                        c.maximal_by_dim,
                        c.maximal_by_inclusion
                    );
                }
            } else {
                json(&rep);
            }
        }
        Cmd::Zigzag { dtype, edges: es, tsv } => {
            let graph = match (dtype, es) {
                (Some(t), _) => Graph::dynkin(&RootSystem::build(t)?),
                (None, Some(s)) => edges(&s),
                (None, None) => unreachable!("clap requires one of --type/--edges"),
            };
            let alg = ZigzagAlgebra::new(graph);
            if tsv {
                print!("{}", alg.tsv());
                return Ok(ExitCode::SUCCESS);
            }
            let rep = alg.report(exec);
            json(&rep);
            let mut failed = Vec::new();
            for (ok, name) in [
                (rep.associative, "associativity"),
                (rep.identity, "identity element"),
                (rep.cartan_matrix_is_2i_plus_adjacency, "Cartan matrix = 2I + adjacency"),
                (rep.radical_series[3] == 0, "rad^3 = 0"),
                (rep.ext1_diagonal_zero, "Ext^1 diagonal zero"),
                (rep.frobenius, "Frobenius pairing"),
            ] {
                if !ok {
                    failed.push(name.to_string());
                }
            }
            return Ok(verdict(&failed));
        }
        Cmd::Kfunctor { dtype } => {
            let rs = RootSystem::build(dtype)?;
            let rep = kfunctor::k_report(&rs, exec)?;
            json(&rep);
            let lattice = rep.orbit_lattice.iter().flat_map(|c| c.checks.iter());
            let failed: Vec<String> = rep
                .k0_checks
                .iter()
                .chain(lattice)
                .filter(|c| !c.ok)
                .map(|c| match c.beta {
                    Some(b) => format!("({}) alpha={} beta={b}", c.name, c.alpha),
                    None => format!("({}) alpha={}", c.name, c.alpha),
                })
                .collect();
            return Ok(verdict(&failed));
        }
        Cmd::Primid { dtype, lambda } => {
            let rs = RootSystem::build(dtype)?;
            let lambda = lambda.map(|s| weight(&s, rs.rank()));
            json(&primid::report(&rs, lambda.as_ref())?);
        }
        Cmd::Dichotomy { dtype } => {
            let rep = integral::dichotomy(&RootSystem::build(dtype)?)?;
            json(&rep);
            if !rep.matches_expected {
                let msg = format!("{dtype}: d = {}, m = {}, expected {}", rep.d, rep.m, rep.expected);
                return Ok(verdict(&[msg]));
            }
        }
        Cmd::Status { dtype, lambda } => {
            let rs = RootSystem::build(dtype)?;
            let lambda = weight(&lambda, rs.rank());
            json(&integral::fd_block_status(&rs, &lambda)?);
        }
        Cmd::VerifyAll { max_rank } => {
            let rep = verify::verify_all(max_rank, exec)?;
            json(&rep);
            let failed: Vec<String> = rep
                .criteria
                .iter()
                .flat_map(|c| c.failures.iter().map(move |f| format!("[{}] {}: {f}", c.id, c.name)))
                .collect();
            return Ok(verdict(&failed));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
