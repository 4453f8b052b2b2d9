//! `bbg`: check a defining graph, decide abelian splittings, print
//! presentations, and emit JSJ decompositions.
//!
//! Exit codes: 0 success, 1 hypothesis violation (witness printed),
//! 2 input/parse error, 3 internal limit exceeded. With `--format json`
//! stdout carries exactly one machine-parseable JSON document; diagnostics
//! go to stderr.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bbg_core::error::{Error, HypothesisViolation};
use bbg_core::flag::{flag_complex, h1_summary};
use bbg_core::graph::{Clique, SimplicialGraph};
use bbg_core::jsj::{export_dot, export_json, jsj_report, JsjReport, ReportCase};
use bbg_core::oracle::{sweep_small_graphs, SweepCheck, SweepConfig};
use bbg_core::presentation::{
    dicks_leary_presentation, generator_names, reduced_presentation, Flavor, GroupPresentation,
};
use bbg_core::splitting::{bbg_splitting_verdict, raag_splitting_verdict, SplitCase};
use bbg_core::ChordalityCertificate;

// kept in sync with bbg_core::FORMAT_SCHEMA_VERSION (asserted in tests)
const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (format schema 1)");

#[derive(Parser)]
#[command(name = "bbg", version = VERSION, about = "Abelian splittings and JSJ decompositions of graph groups")]
struct Cli {
    /// Worker threads for internally parallel operations; never changes
    /// output bytes.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum JsjFormat {
    Text,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Raag,
    Bbg,
}

impl Group {
    fn flavor(self) -> Flavor {
        match self {
            Group::Raag => Flavor::Raag,
            Group::Bbg => Flavor::Bbg,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report connectivity, cut vertices, chordality, the flag complex, H1,
    /// and which construction hypotheses the graph satisfies.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
        /// Write the f-vector and boundary matrices as JSON to this path
        /// ("-" for stdout, replacing the report).
        #[arg(long, value_name = "PATH")]
        emit_complex: Option<String>,
    },
    /// Decide abelian splittability with an explicit witness.
    Split {
        file: PathBuf,
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print the directed-edge presentation of the kernel group.
    Present {
        file: PathBuf,
        /// Reduce the generating set to a spanning tree.
        #[arg(long)]
        reduced: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Construct the abelian JSJ decomposition as a labeled tree.
    Jsj {
        file: PathBuf,
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long, value_enum, default_value = "text")]
        format: JsjFormat,
    },
    /// Run the brute-force cross-check sweep over small graphs.
    Oracle {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Check name to run (repeatable); defaults to all checks.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        /// Samples per graph size above the exhaustive range.
        #[arg(long, default_value_t = 50_000)]
        samples: usize,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Hypothesis(_) => 1,
        Error::SizeLimit(_) | Error::Internal(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<SimplicialGraph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    SimplicialGraph::parse(&text)
}

/// A connectivity violation carries no witness of its own; print the
/// components so every exit-1 response shows one.
fn print_disconnection_witness(g: &SimplicialGraph, err: Error) -> Error {
    if matches!(&err, Error::Hypothesis(HypothesisViolation::NotConnected)) {
        let components: Vec<String> = g
            .connected_components()
            .iter()
            .map(|c| g.names_of(c).join(" "))
            .collect();
        eprintln!("components: [{}]", components.join(" | "));
    }
    err
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check {
            file,
            format,
            emit_complex,
        } => {
            let g = load_graph(&file)?;
            cmd_check(&g, format, emit_complex.as_deref())
        }
        Command::Split {
            file,
            group,
            format,
        } => {
            let g = load_graph(&file)?;
            cmd_split(&g, group, format).map_err(|e| print_disconnection_witness(&g, e))
        }
        Command::Present {
            file,
            reduced,
            format,
        } => {
            let g = load_graph(&file)?;
            cmd_present(&g, reduced, format).map_err(|e| print_disconnection_witness(&g, e))
        }
        Command::Jsj {
            file,
            group,
            format,
        } => {
            let g = load_graph(&file)?;
            cmd_jsj(&g, group, format).map_err(|e| print_disconnection_witness(&g, e))
        }
        Command::Oracle {
            max_n,
            seed,
            checks,
            samples,
        } => cmd_oracle(max_n, seed, &checks, samples, cli.threads),
    }
}

#[derive(Serialize)]
struct ChordalityJson {
    chordal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    peo: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_cycle: Option<Vec<String>>,
}

#[derive(Serialize)]
struct HypothesesJson {
    finitely_generated: bool,
    finitely_presented: bool,
    splitting_characterization_applicable: bool,
    jsj_construction_applicable: bool,
}

#[derive(Serialize)]
struct CheckJson {
    schema: &'static str,
    vertices: usize,
    edges: usize,
    connected: bool,
    cut_vertices: Vec<String>,
    chordality: ChordalityJson,
    f_vector: Vec<usize>,
    euler_characteristic: i64,
    h1_rank: usize,
    h1_torsion: Vec<String>,
    hypotheses: HypothesesJson,
}

#[derive(Serialize)]
struct ComplexJson {
    f_vector: Vec<usize>,
    boundary_1: Vec<Vec<i64>>,
    boundary_2: Vec<Vec<i64>>,
}

fn cmd_check(
    g: &SimplicialGraph,
    format: TextFormat,
    emit_complex: Option<&str>,
) -> Result<ExitCode, Error> {
    let connected = g.is_connected();
    let cut_vertices: Vec<String> = if connected {
        g.cut_vertices()?
            .iter()
            .map(|&v| g.name(v).to_string())
            .collect()
    } else {
        Vec::new()
    };
    let cert = bbg_core::chordality(g);
    let complex = flag_complex(g)?;
    let h1 = h1_summary(&complex);

    if let Some(path) = emit_complex {
        let doc = ComplexJson {
            f_vector: complex.f_vector(),
            boundary_1: if complex.f_vector().len() >= 2 {
                complex.boundary_matrix(1)
            } else {
                Vec::new()
            },
            boundary_2: if complex.f_vector().len() >= 3 {
                complex.boundary_matrix(2)
            } else {
                Vec::new()
            },
        };
        let body = serde_json::to_string_pretty(&doc).expect("serializable");
        if path == "-" {
            println!("{body}");
            return Ok(ExitCode::SUCCESS);
        }
        std::fs::write(path, body + "\n").map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot write {path}: {e}"),
        })?;
    }

    let hypotheses = HypothesesJson {
        finitely_generated: connected,
        finitely_presented: connected && cert.is_chordal(),
        splitting_characterization_applicable: connected && cert.is_chordal(),
        jsj_construction_applicable: connected
            && cert.is_chordal()
            && cut_vertices.is_empty()
            && !g.is_complete(),
    };
    let all_core_hypotheses = hypotheses.finitely_presented;

    let doc = CheckJson {
        schema: bbg_core::FORMAT_SCHEMA_VERSION,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected,
        cut_vertices,
        chordality: match &cert {
            ChordalityCertificate::Peo(p) => ChordalityJson {
                chordal: true,
                peo: Some(g.names_of(p)),
                witness_cycle: None,
            },
            ChordalityCertificate::WitnessCycle(c) => ChordalityJson {
                chordal: false,
                peo: None,
                witness_cycle: Some(g.names_of(c)),
            },
        },
        f_vector: complex.f_vector(),
        euler_characteristic: h1.euler_characteristic,
        h1_rank: h1.h1_rank,
        h1_torsion: h1.h1_torsion.iter().map(|t| t.to_string()).collect(),
        hypotheses,
    };

    match format {
        TextFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
        TextFormat::Text => {
            let mut out = String::new();
            writeln!(out, "vertices: {}", doc.vertices).unwrap();
            writeln!(out, "edges: {}", doc.edges).unwrap();
            writeln!(out, "connected: {}", doc.connected).unwrap();
            writeln!(out, "cut vertices: {}", list_or_dash(&doc.cut_vertices)).unwrap();
            match (&doc.chordality.peo, &doc.chordality.witness_cycle) {
                (Some(peo), _) => {
                    writeln!(out, "chordal: yes (elimination order {})", peo.join(" ")).unwrap()
                }
                (_, Some(cycle)) => {
                    writeln!(out, "chordal: no (induced cycle {})", cycle.join(" ")).unwrap()
                }
                _ => unreachable!(),
            }
            writeln!(out, "flag complex f-vector: {:?}", doc.f_vector).unwrap();
            writeln!(out, "euler characteristic: {}", doc.euler_characteristic).unwrap();
            writeln!(
                out,
                "h1: rank {}{}",
                doc.h1_rank,
                if doc.h1_torsion.is_empty() {
                    ", no torsion".to_string()
                } else {
                    format!(", torsion {:?}", doc.h1_torsion)
                }
            )
            .unwrap();
            writeln!(
                out,
                "kernel group finitely generated: {}",
                doc.hypotheses.finitely_generated
            )
            .unwrap();
            writeln!(
                out,
                "kernel group finitely presented: {}",
                doc.hypotheses.finitely_presented
            )
            .unwrap();
            writeln!(
                out,
                "splitting characterization applicable: {}",
                doc.hypotheses.splitting_characterization_applicable
            )
            .unwrap();
            writeln!(
                out,
                "clique JSJ construction applicable directly: {}",
                doc.hypotheses.jsj_construction_applicable
            )
            .unwrap();
            print!("{out}");
        }
    }

    if all_core_hypotheses {
        Ok(ExitCode::SUCCESS)
    } else {
        let violation = if !connected {
            let components: Vec<String> = g
                .connected_components()
                .iter()
                .map(|c| g.names_of(c).join(" "))
                .collect();
            format!(
                "{} (components: [{}])",
                HypothesisViolation::NotConnected,
                components.join(" | ")
            )
        } else {
            match &cert {
                ChordalityCertificate::WitnessCycle(c) => format!(
                    "flag complex is not simply connected (induced cycle of length {}: {})",
                    c.len(),
                    g.names_of(c).join(" ")
                ),
                ChordalityCertificate::Peo(_) => unreachable!("connected and chordal"),
            }
        };
        eprintln!("hypothesis violation: {violation}");
        Ok(ExitCode::from(1))
    }
}

fn list_or_dash(items: &[String]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(" ")
    }
}

#[derive(Serialize)]
struct SplitJson {
    schema: &'static str,
    group: &'static str,
    splits: bool,
    case: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_group_rank_raag: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_group_rank_bbg: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    components: Vec<Vec<String>>,
}

fn clique_names(g: &SimplicialGraph, k: &Clique) -> Vec<String> {
    g.names_of(k.members())
}

fn cmd_split(g: &SimplicialGraph, group: Group, format: TextFormat) -> Result<ExitCode, Error> {
    let verdict = match group {
        Group::Bbg => bbg_splitting_verdict(g)?,
        Group::Raag => raag_splitting_verdict(g),
    };
    let (case, witness) = match &verdict.case {
        SplitCase::CutVertex(v) => (
            "cut_vertex".to_string(),
            Some(serde_json::json!(g.name(*v))),
        ),
        SplitCase::Complete(n) => ("complete".to_string(), Some(serde_json::json!(n))),
        SplitCase::SeparatingClique(k) => (
            "separating_clique".to_string(),
            Some(serde_json::json!(clique_names(g, k))),
        ),
        SplitCase::Disconnected => ("disconnected".to_string(), None),
        SplitCase::None => ("none".to_string(), None),
    };
    let doc = SplitJson {
        schema: bbg_core::FORMAT_SCHEMA_VERSION,
        group: group.flavor().as_str(),
        splits: verdict.splits,
        case,
        witness,
        edge_group_rank_raag: verdict.edge_group_rank_raag,
        edge_group_rank_bbg: verdict.edge_group_rank_bbg,
        components: verdict.components.iter().map(|c| g.names_of(c)).collect(),
    };
    match format {
        TextFormat::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
        TextFormat::Text => {
            println!("group: {}", doc.group);
            println!("splits: {}", if doc.splits { "yes" } else { "no" });
            match &verdict.case {
                SplitCase::CutVertex(v) => println!("case: cut vertex {}", g.name(*v)),
                SplitCase::Complete(n) => println!("case: complete graph on {n} vertices"),
                SplitCase::SeparatingClique(k) => {
                    println!(
                        "case: separating clique {{{}}}",
                        clique_names(g, k).join(", ")
                    )
                }
                SplitCase::Disconnected => println!("case: disconnected defining graph"),
                SplitCase::None => println!("case: no abelian splitting"),
            }
            if let Some(r) = doc.edge_group_rank_raag {
                println!("ambient group splits over: {}", rank_name(r));
            }
            if let Some(r) = doc.edge_group_rank_bbg {
                println!("kernel group splits over: {}", rank_name(r));
            }
            for (i, comp) in doc.components.iter().enumerate() {
                println!("component {}: {}", i, comp.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn rank_name(rank: usize) -> String {
    match rank {
        0 => "1 (trivial group)".to_string(),
        1 => "Z".to_string(),
        r => format!("Z^{r}"),
    }
}

#[derive(Serialize)]
struct PresentJson {
    schema: &'static str,
    reduced: bool,
    generators: Vec<GeneratorJson>,
    relators: Vec<Vec<LetterJson>>,
    abelianization: AbelianizationJson,
}

#[derive(Serialize)]
struct GeneratorJson {
    name: String,
    tail: String,
    head: String,
}

#[derive(Serialize)]
struct LetterJson {
    gen: String,
    exp: i8,
}

#[derive(Serialize)]
struct AbelianizationJson {
    rank: usize,
    torsion: Vec<String>,
}

fn cmd_present(g: &SimplicialGraph, reduced: bool, format: TextFormat) -> Result<ExitCode, Error> {
    let p: GroupPresentation = if reduced {
        reduced_presentation(g)?
    } else {
        dicks_leary_presentation(g)?
    };
    let names = generator_names(g, &p.generators);
    let (rank, torsion) = p.abelianization();
    match format {
        TextFormat::Text => {
            if names.is_empty() {
                println!("gen");
            } else {
                println!("gen {}", names.join(", "));
            }
            for r in &p.relators {
                let word: Vec<String> = r
                    .letters()
                    .iter()
                    .map(|&(gen, exp)| {
                        if exp == 1 {
                            names[gen].clone()
                        } else {
                            format!("{}^-1", names[gen])
                        }
                    })
                    .collect();
                println!("rel {}", word.join(" "));
            }
        }
        TextFormat::Json => {
            let doc = PresentJson {
                schema: bbg_core::FORMAT_SCHEMA_VERSION,
                reduced,
                generators: p
                    .generators
                    .iter()
                    .zip(&names)
                    .map(|(e, n)| GeneratorJson {
                        name: n.clone(),
                        tail: g.name(e.tail).to_string(),
                        head: g.name(e.head).to_string(),
                    })
                    .collect(),
                relators: p
                    .relators
                    .iter()
                    .map(|r| {
                        r.letters()
                            .iter()
                            .map(|&(gen, exp)| LetterJson {
                                gen: names[gen].clone(),
                                exp,
                            })
                            .collect()
                    })
                    .collect(),
                abelianization: AbelianizationJson {
                    rank,
                    torsion: torsion.iter().map(|t| t.to_string()).collect(),
                },
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_jsj(g: &SimplicialGraph, group: Group, format: JsjFormat) -> Result<ExitCode, Error> {
    let report: JsjReport = jsj_report(g, group.flavor())?;
    match format {
        JsjFormat::Json => println!("{}", export_json(&report.decomposition)),
        JsjFormat::Dot => print!("{}", export_dot(&report.decomposition)),
        JsjFormat::Text => {
            println!("flavor: {}", report.flavor.as_str());
            match &report.case {
                ReportCase::Complete { size } => {
                    println!("case: complete graph on {size} vertices (single vertex group)")
                }
                ReportCase::Direct => println!("case: clique tree construction"),
                ReportCase::BlockTree {
                    cut_vertices,
                    blocks,
                } => {
                    println!(
                        "case: block tree over cut vertices {} (extension beyond the \
                         no-cut-vertex construction)",
                        cut_vertices.join(" ")
                    );
                    for b in blocks {
                        println!(
                            "  block {{{}}}: {} piece(s)",
                            b.block.join(", "),
                            b.decomposition.vertex_count()
                        );
                    }
                }
            }
            println!("vertices:");
            for (i, v) in report.decomposition.vertices.iter().enumerate() {
                println!("  v{i}: piece {{{}}} group {}", v.piece.join(", "), v.group);
            }
            println!("edges:");
            for e in &report.decomposition.edges {
                println!(
                    "  v{} -- v{}: clique {{{}}} group {}",
                    e.from,
                    e.to,
                    e.clique.join(", "),
                    e.group
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(
    max_n: usize,
    seed: u64,
    check_names: &[String],
    samples: usize,
    threads: usize,
) -> Result<ExitCode, Error> {
    let checks = if check_names.is_empty() {
        SweepCheck::all()
    } else {
        let mut checks = Vec::new();
        for name in check_names {
            let check = SweepCheck::from_name(name).ok_or_else(|| Error::Parse {
                line: 0,
                message: format!(
                    "unknown check `{name}`; available: {}",
                    SweepCheck::all()
                        .iter()
                        .map(|c| c.name())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            })?;
            checks.push(check);
        }
        checks
    };
    let cfg = SweepConfig {
        min_n: 1,
        max_n,
        seed,
        checks,
        samples,
        threads,
    };
    let report = sweep_small_graphs(&cfg)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    if report.total_failures() == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{} cross-check failure(s)", report.total_failures());
        Ok(ExitCode::from(1))
    }
}
