use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ehcert::ceh::{ceh_cograph_traced, ceh_interval_traced, ceh_tk_traced, ceh_tk_weak_traced};
use ehcert::cograph::{conforming_subset, cotree_to_graph, recognize_cograph, Cotree, Recognition};
use ehcert::extremal::{
    expected_kab, gen_ceh_cograph, gen_ceh_interval, gen_lower_bound, gen_seh_chordal, gen_seh_cograph,
    gen_seh_interval, lower_bound_dims,
};
use ehcert::io::{self, InstanceFile};
use ehcert::normalize::{normalize_subtrees, perturb_intervals};
use ehcert::oracle::{max_balanced_biclique, max_colorful_biclique, DEFAULT_CAP};
use ehcert::random::RNG_NAME;
use ehcert::seh::{seh_chordal_traced, seh_cograph_traced, seh_interval_traced};
use ehcert::trace::Trace;
use ehcert::{verify_certificate, BicliqueCertificate, Error, Id, LabeledGraph, Part, Partition};

#[derive(Parser)]
#[command(
    name = "ehcert",
    version,
    about = "Certified balanced bi-cliques in interval, cograph and chordal instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree-3 ambient tree with unshared leaves, or distinct interval endpoints.
    Normalize {
        #[arg(long, value_enum)]
        class: NormalizeClass,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bi-clique in the graph or its complement.
    Seh {
        #[arg(long, value_enum)]
        class: SehClass,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        emit_trace: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bi-clique with side A in part 1 and side B in part 2.
    Ceh {
        #[arg(long, value_enum)]
        class: CehClass,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        allow_unbalanced: bool,
        #[arg(long)]
        emit_trace: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extremal and random instances.
    Gen {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact maximum bi-clique of a small instance.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Respect the part labels of the input.
        #[arg(long)]
        partition: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check a certificate against an instance.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, default_value_t = 0)]
        min_side: usize,
        /// Also require side A in part 1 and side B in part 2.
        #[arg(long)]
        partition: bool,
    },
    /// Expected number of K_{a,b} in a random bipartite graph.
    Exi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
    },
    /// Cograph recognition and conforming subsets.
    Cograph {
        #[command(subcommand)]
        action: CographAction,
    },
}

#[derive(Subcommand)]
enum CographAction {
    /// Cotree of a graph, or an induced P4.
    Recognize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Conforming subset of the given leaf ids.
    Conform {
        #[arg(long)]
        input: PathBuf,
        /// Comma- or space-separated ids.
        #[arg(long)]
        set: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum NormalizeClass {
    Subtree,
    Interval,
}

#[derive(Clone, Copy, ValueEnum)]
enum SehClass {
    Interval,
    Cograph,
    Chordal,
}

#[derive(Clone, Copy, ValueEnum)]
enum CehClass {
    Interval,
    Cograph,
    Tk,
    TkWeak,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    SehInterval,
    SehCograph,
    SehChordal,
    CehInterval,
    CehCograph,
    LowerBound,
}

enum Failed {
    Input(String),
    Verification(String),
    Internal(String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failed::Internal(e.to_string()),
            _ => Failed::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failed>;

fn read(path: &Path) -> std::result::Result<String, Failed> {
    fs::read_to_string(path).map_err(|e| Failed::Input(format!("{}: {e}", path.display())))
}

fn within(path: &Path, e: Error) -> Failed {
    match Failed::from(e) {
        Failed::Input(m) => Failed::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn emit(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failed::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_trace(cert: &BicliqueCertificate, trace: Option<Trace>) -> String {
    let mut out = io::format_certificate(cert);
    if let Some(t) = trace {
        for line in t.to_string().lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

fn labeled(file: &InstanceFile) -> LabeledGraph {
    match file {
        InstanceFile::Intervals(f) => f.labeled_graph(),
        InstanceFile::Subtrees(f) => f.labeled_graph(),
        InstanceFile::Cotree(ct, _) => cotree_to_graph(ct),
        InstanceFile::Graph(g, _) => LabeledGraph {
            ids: (0..g.n() as Id).collect(),
            graph: g.clone(),
        },
    }
}

fn partition_of(file: &InstanceFile) -> Option<Partition> {
    match file {
        InstanceFile::Intervals(f) => f.partition(),
        InstanceFile::Subtrees(f) => f.partition(),
        InstanceFile::Cotree(_, p) | InstanceFile::Graph(_, p) => p.clone(),
    }
}

fn require_partition(
    p: Option<Partition>,
    ids: &[Id],
    allow_unbalanced: bool,
) -> std::result::Result<Partition, Failed> {
    let p = p.ok_or_else(|| Failed::from(Error::MissingPartLabels("the input carries no part labels".into())))?;
    p.check_against(ids, allow_unbalanced)?;
    Ok(p)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Normalize { class, input, output } => {
            let text = read(&input)?;
            let out = match class {
                NormalizeClass::Subtree => {
                    let fam = io::parse_subtrees(&text).map_err(|e| within(&input, e))?;
                    io::format_subtrees(&normalize_subtrees(&fam))
                }
                NormalizeClass::Interval => {
                    let fam = io::parse_intervals(&text).map_err(|e| within(&input, e))?;
                    io::format_intervals(&perturb_intervals(&fam))
                }
            };
            emit(output.as_deref(), &out)
        }
        Command::Seh {
            class,
            input,
            emit_trace,
            output,
        } => {
            let text = read(&input)?;
            let (cert, trace) = match class {
                SehClass::Interval => seh_interval_traced(&io::parse_intervals(&text).map_err(|e| within(&input, e))?),
                SehClass::Cograph => {
                    let (ct, _) = io::parse_cotree_file(&text).map_err(|e| within(&input, e))?;
                    seh_cograph_traced(&ct)?
                }
                SehClass::Chordal => {
                    let fam = io::parse_subtrees(&text).map_err(|e| within(&input, e))?;
                    let (cert, trace) = seh_chordal_traced(&fam)?;
                    (cert, trace.table())
                }
            };
            emit(output.as_deref(), &with_trace(&cert, emit_trace.then_some(trace)))
        }
        Command::Ceh {
            class,
            input,
            allow_unbalanced,
            emit_trace,
            output,
        } => {
            let text = read(&input)?;
            let (cert, trace) = match class {
                CehClass::Interval => {
                    let fam = io::parse_intervals(&text).map_err(|e| within(&input, e))?;
                    require_partition(fam.partition(), &fam.ids(), allow_unbalanced)?;
                    ceh_interval_traced(&fam)?
                }
                CehClass::Cograph => {
                    let (ct, p) = io::parse_cotree_file(&text).map_err(|e| within(&input, e))?;
                    let p = require_partition(p, &ct.leaves(), allow_unbalanced)?;
                    ceh_cograph_traced(&ct, &p)?
                }
                CehClass::Tk | CehClass::TkWeak => {
                    let fam = io::parse_subtrees(&text).map_err(|e| within(&input, e))?;
                    require_partition(fam.partition(), &fam.ids(), allow_unbalanced)?;
                    let (cert, trace) = match class {
                        CehClass::Tk => ceh_tk_traced(&fam)?,
                        _ => ceh_tk_weak_traced(&fam)?,
                    };
                    (cert, trace.table())
                }
            };
            emit(output.as_deref(), &with_trace(&cert, emit_trace.then_some(trace)))
        }
        Command::Gen {
            which,
            k,
            n,
            seed,
            output,
        } => {
            let mut out = format!("# rng={RNG_NAME} seed={seed}\n");
            out += &match which {
                Which::SehInterval => io::format_intervals(&gen_seh_interval(k)),
                Which::SehCograph => io::format_cotree_file(&gen_seh_cograph(k), None),
                Which::SehChordal => io::format_subtrees(&gen_seh_chordal(k)),
                Which::CehInterval => io::format_intervals(&gen_ceh_interval(k)),
                Which::CehCograph => {
                    let (ct, p) = gen_ceh_cograph(k);
                    io::format_cotree_file(&ct, Some(&p))
                }
                Which::LowerBound => {
                    let n = n.ok_or_else(|| Failed::Input("--which lower-bound needs --n".into()))?;
                    let inst = gen_lower_bound(k, n, seed, None)?;
                    format!(
                        "# k={k} n={n} a={} b={}\n{}",
                        inst.a,
                        inst.b,
                        io::format_subtrees(&inst.family)
                    )
                }
            };
            emit(output.as_deref(), &out)
        }
        Command::Oracle { input, partition, cap } => {
            let file = io::parse_instance(&read(&input)?).map_err(|e| within(&input, e))?;
            let lg = labeled(&file);
            let (size, cert) = if partition {
                let p = require_partition(partition_of(&file), &lg.ids, true)?;
                let ones: Vec<bool> = lg.ids.iter().map(|&id| p.get(id) == Some(Part::One)).collect();
                max_colorful_biclique(&lg.graph, &ones, cap)?
            } else {
                max_balanced_biclique(&lg.graph, cap)?
            };
            let ids = |side: &[Id]| {
                let v: Vec<String> = side.iter().map(|&i| lg.ids[i as usize].to_string()).collect();
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.join(",")
                }
            };
            println!(
                "{size} {} {} {}",
                cert.kind.as_str(),
                ids(cert.side_a()),
                ids(cert.side_b())
            );
            Ok(())
        }
        Command::Verify {
            input,
            cert,
            min_side,
            partition,
        } => {
            let file = io::parse_instance(&read(&input)?).map_err(|e| within(&input, e))?;
            let c = io::parse_certificate(&read(&cert)?).map_err(|e| within(&cert, e))?;
            let p = if partition {
                let ids = labeled(&file).ids;
                Some(require_partition(partition_of(&file), &ids, true)?)
            } else {
                None
            };
            let report = match &file {
                InstanceFile::Intervals(f) => verify_certificate(f, &c, min_side, p.as_ref()),
                InstanceFile::Subtrees(f) => verify_certificate(f, &c, min_side, p.as_ref()),
                _ => verify_certificate(&labeled(&file), &c, min_side, p.as_ref()),
            }
            .map_err(|e| Failed::Verification(e.to_string()))?;
            if report.valid {
                println!("valid");
                Ok(())
            } else {
                let reasons: Vec<String> = report.failures.iter().map(|f| f.to_string()).collect();
                Err(Failed::Verification(reasons.join("; ")))
            }
        }
        Command::Exi { k, n, a, b } => {
            let (a, b) = match (a, b) {
                (Some(a), Some(b)) => (a, b),
                _ => lower_bound_dims(k, n),
            };
            let (_, value) = expected_kab(k, n, a, b);
            println!("{k} {n} {a} {b} {value}");
            Ok(())
        }
        Command::Cograph { action } => match action {
            CographAction::Recognize { input } => {
                let (g, _) = io::parse_graph(&read(&input)?).map_err(|e| within(&input, e))?;
                let lg = LabeledGraph {
                    ids: (0..g.n() as Id).collect(),
                    graph: g,
                };
                match recognize_cograph(&lg)? {
                    Recognition::Cotree(ct) => println!("{ct}"),
                    Recognition::P4([a, b, c, d]) => println!("P4 {a} {b} {c} {d}"),
                }
                Ok(())
            }
            CographAction::Conform { input, set } => {
                let (ct, _): (Cotree, _) = io::parse_cotree_file(&read(&input)?).map_err(|e| within(&input, e))?;
                let ids = set
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<Id>()
                            .map_err(|_| Failed::Input(format!("--set: `{s}` is not an id")))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                let w = conforming_subset(&ct, &ids)?;
                let w: Vec<String> = w.iter().map(|i| i.to_string()).collect();
                println!("{}", w.join(" "));
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failed::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failed::Verification(m)) => {
            eprintln!("invalid: {m}");
            ExitCode::from(3)
        }
        Err(Failed::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(4)
        }
    }
}
