use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use thrackle_core::bounds::{self, decimal, ratio, BoundReport};
use thrackle_core::construction::{audit, chessboard};
use thrackle_core::doubling::conway_double;
use thrackle_core::search::{Outcome, SearchOptions};
use thrackle_core::witness::validate_witness;

use thrackle::campaign::run_campaign;
use thrackle::format::{parse_embedded_graph, parse_graph, parse_ratio, parse_witness, write_embedded_graph, write_witness};
use thrackle::parallel::{decide, RunOptions};

const PROGRESS_EVERY: Duration = Duration::from_secs(10);

#[derive(Parser)]
#[command(name = "thrackle", version, about = "Thrackle search, verification campaigns, density bounds and extremal constructions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a graph can be drawn as a thrackle.
    Check {
        graph: PathBuf,
        /// Use the six-cycle rotation rule.
        #[arg(long)]
        prune_c6: bool,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Validate a witness file.
    Validate { witness: PathBuf },
    /// Decide every dumbbell required for the bound tau(c, l).
    Campaign {
        #[arg(long)]
        c: u32,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Turn the six-cycle rotation rule off.
        #[arg(long)]
        no_prune_c6: bool,
    },
    /// Print tau(c, l), optionally evaluated at n.
    Bound {
        #[arg(long)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Pick campaign parameters with tau(c, l) <= 1 + eps.
    Epsilon {
        #[arg(long)]
        eps: String,
    },
    /// Print the Turan-type density coefficient.
    Turan {
        #[arg(long)]
        c1: i64,
        #[arg(long)]
        c2: i64,
        #[arg(long)]
        l: Option<i64>,
    },
    /// Generate a chessboard graph.
    Construct {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n0: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit an embedded graph against the chessboard conditions.
    Audit {
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: usize,
    },
    /// Apply Conway doubling to an odd cycle of a witness.
    Double {
        witness: PathBuf,
        #[arg(long, value_delimiter = ',')]
        cycle: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run_options(jobs: usize, budget: Option<u64>) -> Result<RunOptions> {
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    Ok(RunOptions {
        jobs,
        deadline: budget.map(|s| Instant::now() + Duration::from_secs(s)),
        progress: Some(PROGRESS_EVERY),
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Check {
            graph,
            prune_c6,
            node_limit,
            witness_out,
            jobs,
        } => {
            let g = parse_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            let opts = SearchOptions {
                prune_c6_rotation: prune_c6,
                node_limit,
                parallel_branching: jobs > 1,
                ..SearchOptions::default()
            };
            let d = decide(&g, &opts, &run_options(jobs, None)?);
            let s = &d.stats;
            let code = match &d.outcome {
                Outcome::Thrackleable(w) => {
                    println!("THRACKLEABLE");
                    if let Some(p) = &witness_out {
                        write(p, &write_witness(w))?;
                    }
                    0
                }
                Outcome::NotThrackleable { .. } => {
                    println!("NOT THRACKLEABLE");
                    0
                }
                Outcome::Inconclusive { .. } => {
                    println!("INCONCLUSIVE");
                    2
                }
            };
            println!(
                "nodes {} planarity-calls {} planarity-prunes {} rotation-prunes {} max-depth {}",
                s.nodes, s.planarity_calls, s.planarity_prunes, s.rotation_prunes, s.max_depth
            );
            Ok(code)
        }
        Cmd::Validate { witness } => {
            let w = parse_witness(&read(&witness)?).with_context(|| format!("parsing {}", witness.display()))?;
            let r = validate_witness(&w);
            if r.passed() {
                println!("VALID");
                Ok(0)
            } else {
                println!("INVALID");
                for f in &r.failures {
                    println!("failure {f}");
                }
                Ok(1)
            }
        }
        Cmd::Campaign {
            c,
            l,
            jobs,
            budget_secs,
            report,
            no_prune_c6,
        } => {
            let opts = SearchOptions {
                prune_c6_rotation: !no_prune_c6,
                parallel_branching: jobs > 1,
                ..SearchOptions::default()
            };
            let r = run_campaign(c, l, &opts, &run_options(jobs, budget_secs)?)?;
            let text = r.to_text();
            print!("{text}");
            if let Some(p) = &report {
                write(p, &text)?;
            }
            Ok(if r.report.certified { 0 } else { 2 })
        }
        Cmd::Bound { c, l, n } => {
            let r = BoundReport::tau(c, l, n)?;
            println!("{r}");
            if let Some((n, v)) = &r.at_n {
                println!("edges <= {} (~{}) at n={n}, asymptotically", ratio(v), decimal(v, 6));
            }
            Ok(0)
        }
        Cmd::Epsilon { eps } => {
            let e = parse_ratio(&eps).with_context(|| format!("bad rational '{eps}'"))?;
            let p = bounds::epsilon_plan(&e)?;
            println!(
                "epsilon {} c {} l {} tau {} (~{}) dumbbells {}",
                ratio(&e),
                p.c,
                p.l,
                ratio(&p.tau),
                decimal(&p.tau, 6),
                p.dumbbells
            );
            if p.l >= 0 {
                let r = (p.l / 2) as u64;
                match bounds::sufficient_c(r, &e) {
                    Ok(c) => println!("sufficient-c r {r} c {c}"),
                    Err(err) => println!("sufficient-c r {r} none ({err})"),
                }
            }
            Ok(0)
        }
        Cmd::Turan { c1, c2, l } => {
            println!("{}", BoundReport::turan(c1, c2, l)?);
            Ok(0)
        }
        Cmd::Construct { m, l, n0, out } => {
            let g = chessboard(m, l, n0)?;
            let text = write_embedded_graph(&g);
            match &out {
                Some(p) => {
                    write(p, &text)?;
                    println!(
                        "chessboard m {m} l {l} vertices {} edges {}",
                        g.graph.vertex_count(),
                        g.graph.edge_count()
                    );
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Audit { graph, m, l } => {
            if m < 1 || l < 3 {
                bail!("need m >= 1 and l >= 3");
            }
            let g = parse_embedded_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            let a = audit(&g, m, l);
            print!("{a}");
            println!("audit {}", if a.passed() { "pass" } else { "fail" });
            Ok(if a.passed() { 0 } else { 1 })
        }
        Cmd::Double { witness, cycle, out } => {
            let w = parse_witness(&read(&witness)?).with_context(|| format!("parsing {}", witness.display()))?;
            let d = conway_double(&w, &cycle)?;
            let valid = validate_witness(&d).passed();
            write(&out, &write_witness(&d))?;
            println!(
                "doubled vertices {} edges {} {}",
                d.graph.vertex_count(),
                d.graph.edge_count(),
                if valid { "VALID" } else { "INVALID" }
            );
            Ok(if valid { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
