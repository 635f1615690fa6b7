use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rpgraph::certificate::{certificate_from_json, certificate_to_json};
use rpgraph::conditions::{
    has_rp_spanning_tree, mod_cut_check, mod_cut_scan, spider_obstruction, tree_is_rp,
};
use rpgraph::graph::{hamiltonian_path, matching_status, metrics, toughness, MatchingStatus};
use rpgraph::partition::{is_ap, is_rp};
use rpgraph::semistar::SignatureSolver;
use rpgraph::{verify_certificate, Error, Graph, Result, SemistarEntries};
use rpgraph_cli::harness::{verify_paper, Harness, Suite};
use rpgraph_cli::input::{budget_from_env, load_graph, parse_vertex_list};

/// Exact RP/AP decisions, certificates and constructions for small graphs.
///
/// Graph arguments are either edge-list files or family expressions such
/// as `T(1,1,2)`, `K2(1,1,2,6,3)` or `join(P3,Kn2)`. Exit status is 0 when
/// the verdict is true, 1 when it is false and 2 on errors.
#[derive(Parser)]
#[command(name = "rpgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a graph property.
    Check {
        property: Property,
        graph: String,
        /// Write the RP certificate as JSON (rp only).
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Semistar signatures.
    #[command(subcommand)]
    Semistar(SemistarCommand),
    /// Independence number, degree sums, connectivity and toughness.
    Metrics { graph: String },
    /// Toughness with a minimising cut.
    Toughness { graph: String },
    /// Necessary conditions and tree criteria.
    #[command(subcommand)]
    Conditions(ConditionsCommand),
    /// Build a family member and print it as an edge list.
    Construct {
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the construction's RP certificate as JSON.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Certificate files.
    #[command(subcommand)]
    Cert(CertCommand),
    /// Reproduction suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Rp,
    Ap,
    Traceable,
    Matchable,
}

#[derive(Subcommand)]
enum SemistarCommand {
    /// Decide whether a signature is RP.
    Check {
        signature: String,
        /// Write the signature certificate as JSON.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// List the minimal RP signatures with the given centre and leaf count.
    Minimal {
        center: u32,
        k: usize,
        #[arg(long)]
        bound: u32,
    },
    /// Decide whether an RP signature is minimal.
    Minimality { signature: String },
}

#[derive(Subcommand)]
enum ConditionsCommand {
    /// Mod-k cut inequality: one cut, or the first violation of a scan.
    Modcut {
        graph: String,
        /// Comma-separated cut; scans all cuts when omitted.
        #[arg(long, requires = "k")]
        cut: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_cut: Option<usize>,
    },
    /// Cut obstruction to a spanning subdivided star with k legs.
    Spider {
        graph: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        max_cut: Option<usize>,
    },
    /// Closed-form RP verdict for a tree.
    Treerp { graph: String },
    /// Search for an RP spanning tree.
    Rpspan { graph: String },
}

#[derive(Subcommand)]
enum CertCommand {
    /// Check a certificate file against a graph.
    Verify { graph: String, cert: PathBuf },
}

#[derive(Subcommand)]
enum VerifyCommand {
    Paper(PaperArgs),
}

#[derive(Args)]
struct PaperArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Partition tables to check instead of the shipped file.
    #[arg(long)]
    tables_file: Option<PathBuf>,
    /// Tripode table to check instead of the shipped file.
    #[arg(long)]
    tripode_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Trees,
    Minimal,
    Bounds,
    All,
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::Invalid(format!("cannot write `{}`: {e}", path.display())))
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read `{}`: {e}", path.display())))
}

fn parse_signature(text: &str) -> Result<SemistarEntries> {
    text.parse()
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn max_cut(g: &Graph, requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| {
        if g.n() > rpgraph::conditions::SCAN_MAX_N {
            rpgraph::conditions::SCAN_FREE_CUT
        } else {
            g.n()
        }
    })
}

fn run(cli: Cli) -> Result<bool> {
    let budget = budget_from_env()?;
    match cli.command {
        Command::Check {
            property,
            graph,
            cert_out,
        } => {
            let g = load_graph(&graph)?;
            let g = g.graph();
            match property {
                Property::Rp => {
                    let v = is_rp(g, budget)?;
                    println!("rp: {}", yes(v.verdict));
                    if let (Some(path), Some(cert)) = (cert_out, &v.certificate) {
                        write_file(&path, &format!("{}\n", certificate_to_json(cert)))?;
                        println!("certificate: {}", path.display());
                    }
                    Ok(v.verdict)
                }
                Property::Ap => {
                    let v = is_ap(g, budget)?;
                    println!("ap: {}", yes(v.verdict));
                    if let Some(p) = &v.failing {
                        println!("unrealizable partition: {p}");
                    }
                    Ok(v.verdict)
                }
                Property::Traceable => {
                    let path = hamiltonian_path(g)?;
                    println!("traceable: {}", yes(path.is_some()));
                    if let Some(p) = &path {
                        let p: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                        println!("path: {}", p.join(" "));
                    }
                    Ok(path.is_some())
                }
                Property::Matchable => {
                    let status = matching_status(g);
                    let label = match status {
                        MatchingStatus::Perfect => "perfect",
                        MatchingStatus::NearPerfect => "near-perfect",
                        MatchingStatus::Neither => "none",
                    };
                    println!(
                        "matchable: {} ({label})",
                        yes(status != MatchingStatus::Neither)
                    );
                    Ok(status != MatchingStatus::Neither)
                }
            }
        }
        Command::Semistar(cmd) => {
            let mut solver = SignatureSolver::new();
            match cmd {
                SemistarCommand::Check {
                    signature,
                    cert_out,
                } => {
                    let sig = parse_signature(&signature)?.canonical();
                    let v = solver.decide(&sig);
                    println!("{sig}: {}", if v.verdict { "RP" } else { "not RP" });
                    if let (Some(path), Some(cert)) = (cert_out, &v.certificate) {
                        let text = serde_json::to_string_pretty(cert)
                            .map_err(|e| Error::Invalid(e.to_string()))?;
                        write_file(&path, &text)?;
                    }
                    Ok(v.verdict)
                }
                SemistarCommand::Minimal { center, k, bound } => {
                    let r = solver.enumerate_minimal(center, k, bound)?;
                    for s in &r.minimal_signatures {
                        println!("{s}");
                    }
                    println!(
                        "# bound={bound} exhaustive_below_bound={} candidates={} solved={}",
                        r.exhaustive_below_bound, r.candidates, r.solved
                    );
                    Ok(true)
                }
                SemistarCommand::Minimality { signature } => {
                    let sig = parse_signature(&signature)?.canonical();
                    let m = solver.check_minimality(&sig)?;
                    println!("{sig}: minimal {}", yes(m.is_minimal));
                    println!("dominated candidates: {}", m.candidates);
                    if let Some(w) = &m.witness {
                        println!("witness: {w}");
                    }
                    Ok(m.is_minimal)
                }
            }
        }
        Command::Metrics { graph } => {
            let g = load_graph(&graph)?;
            let m = metrics(g.graph())?;
            let opt = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
            println!("n: {}", g.graph().n());
            println!("edges: {}", g.graph().edge_count());
            println!("alpha: {}", m.alpha);
            println!("sigma2: {}", opt(m.sigma));
            println!("kappa: {}", opt(m.kappa));
            match &m.toughness {
                Some(t) => println!(
                    "toughness: {} cut {} components {}",
                    t.value, t.cut, t.components
                ),
                None => println!("toughness: none (complete graph)"),
            }
            Ok(true)
        }
        Command::Toughness { graph } => {
            let g = load_graph(&graph)?;
            match toughness(g.graph())? {
                Some(t) => println!(
                    "toughness: {}\ncut: {}\ncomponents: {}",
                    t.value, t.cut, t.components
                ),
                None => println!("toughness: none (complete graph)"),
            }
            Ok(true)
        }
        Command::Conditions(cmd) => match cmd {
            ConditionsCommand::Modcut {
                graph,
                cut,
                k,
                max_cut: requested,
            } => {
                let loaded = load_graph(&graph)?;
                let g = loaded.graph();
                let report = match (cut, k) {
                    (Some(cut), Some(k)) => {
                        Some(mod_cut_check(g, &parse_vertex_list(g.n(), &cut)?, k)?)
                    }
                    (None, Some(_)) => return Err(Error::Invalid("--k needs --cut".into())),
                    _ => mod_cut_scan(g, max_cut(g, requested))?,
                };
                match &report {
                    Some(r) => println!(
                        "cut: {}\nk: {}\nw_k: {}\nbound: {}\nsatisfied: {}",
                        r.cut,
                        r.k,
                        r.w_k,
                        r.bound,
                        yes(r.satisfied)
                    ),
                    None => println!("violation: none"),
                }
                Ok(report.is_none_or(|r| r.satisfied))
            }
            ConditionsCommand::Spider {
                graph,
                k,
                max_cut: requested,
            } => {
                let loaded = load_graph(&graph)?;
                let g = loaded.graph();
                let found = spider_obstruction(g, k, max_cut(g, requested))?;
                match &found {
                    Some(cut) => println!(
                        "obstruction: {cut}\ncomponents: {}",
                        g.components(cut)?.len()
                    ),
                    None => println!("obstruction: none"),
                }
                Ok(found.is_none())
            }
            ConditionsCommand::Treerp { graph } => {
                let g = load_graph(&graph)?;
                let v = tree_is_rp(g.graph())?;
                println!("rp: {}\nreason: {:?}", yes(v.is_rp), v.reason);
                Ok(v.is_rp)
            }
            ConditionsCommand::Rpspan { graph } => {
                let g = load_graph(&graph)?;
                let r = has_rp_spanning_tree(g.graph())?;
                println!("rp spanning tree: {}", yes(r.exists));
                if let Some(t) = &r.tree {
                    print!("{}", t.to_edge_list());
                }
                Ok(r.exists)
            }
        },
        Command::Construct {
            expr,
            out,
            cert_out,
        } => {
            let loaded = load_graph(&expr)?;
            let mut text = String::new();
            if let Some(f) = &loaded.built.provenance {
                text.push_str(&format!("# {f}\n"));
            }
            if let Some(cut) = &loaded.cut {
                text.push_str(&format!("# cut: {cut}\n"));
            }
            text.push_str(&loaded.graph().to_edge_list());
            match out {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            if let Some(path) = cert_out {
                let Some(cert) = &loaded.built.certificate else {
                    return Err(Error::Invalid(format!(
                        "no certificate is known for `{expr}`"
                    )));
                };
                write_file(&path, &format!("{}\n", certificate_to_json(cert)))?;
            }
            Ok(true)
        }
        Command::Cert(CertCommand::Verify { graph, cert }) => {
            let g = load_graph(&graph)?;
            let cert = certificate_from_json(&read_file(&cert)?)?;
            let check = verify_certificate(g.graph(), &cert);
            println!("valid: {}", yes(check.valid));
            if check.valid {
                println!("tier: {}", check.tier);
            }
            if let Some(reason) = &check.failure_reason {
                println!("reason: {reason}");
            }
            Ok(check.valid)
        }
        Command::Verify(VerifyCommand::Paper(args)) => {
            let suites: Vec<Suite> = match args.suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Tables => vec![Suite::Tables],
                SuiteArg::Trees => vec![Suite::Trees],
                SuiteArg::Minimal => vec![Suite::Minimal],
                SuiteArg::Bounds => vec![Suite::Bounds],
            };
            let tables = match &args.tables_file {
                Some(p) => read_file(p)?,
                None => rpgraph_cli::tables::PAPER_TABLES.to_string(),
            };
            let tripodes = match &args.tripode_file {
                Some(p) => read_file(p)?,
                None => rpgraph_cli::tables::TRIPODE_TABLE.to_string(),
            };
            let mut harness = Harness::new(tables, tripodes, budget);
            let mut ok = true;
            for report in verify_paper(&mut harness, &suites) {
                print!("{report}");
                ok &= report.passed();
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
