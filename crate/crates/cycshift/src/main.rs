//! Command-line surface: conjugacy graphs, decompositions, Hasse diagrams,
//! the ι bijection, certificates, induction data, and the verification
//! suites. All emitters are byte-deterministic for a fixed invocation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cycshift::coxeter::{CartanType, CoxeterDatum, DiagramAutomorphism, Elt, SimpleSubset, WeylGroup, Word};
use cycshift::output::{
    self, element_label, word_string, CertificateJson, DatumJson, DecompositionJson, GraphJson,
    HasseJson, IotaJson, IotaPairJson,
};
use cycshift::{decomposition, parabolic, pieces, shift_graph, suites, Error};

#[derive(Parser)]
#[command(
    name = "cycshift",
    version,
    about = "Cyclic shift classes and combinatorial pieces in finite Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the (J, δ)-conjugacy graph, optionally one connected component
    Graph {
        #[command(flatten)]
        common: Common,
        /// Element as a comma-separated word, e.g. "1,2,3"
        #[arg(long)]
        w: Option<String>,
        /// Restrict to the connected component containing --w
        #[arg(long, requires = "w")]
        component: bool,
    },
    /// Emit the partial-conjugation decomposition of W for a subset J
    Decompose {
        #[command(flatten)]
        common: Common,
    },
    /// Emit the Hasse diagram of the partial order on minimal representatives
    Hasse {
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the left-right symmetry bijection ι
    Iota {
        #[command(flatten)]
        common: Common,
        /// Element of W^{δ(J)} as a comma-separated word
        #[arg(long, required_unless_present = "full", conflicts_with = "full")]
        w: Option<String>,
        /// Tabulate ι on all of W^{δ(J)}
        #[arg(long)]
        full: bool,
    },
    /// Emit the cyclic-shift certificate for a minimal piece (w, K)
    Certificate {
        #[command(flatten)]
        common: Common,
        /// Element as a comma-separated word
        #[arg(long)]
        w: String,
        /// Piece subset K ⊆ J as comma-separated labels
        #[arg(long = "K", default_value = "")]
        k: String,
    },
    /// Emit the induction datum for nested subsets J ⊆ J′
    Datum {
        #[command(flatten)]
        common: Common,
        /// Element of ʲW as a comma-separated word
        #[arg(long)]
        w: String,
        /// Enclosing subset J′ ⊇ J as comma-separated labels
        #[arg(long = "Jprime")]
        j_prime: String,
    },
    /// Run verification suites against the brute-force oracles
    Verify {
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated Cartan types overriding each suite's defaults
        #[arg(long)]
        types: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Cartan type, e.g. A3, B2, G2, or a product like A2xA1
    #[arg(long = "type")]
    cartan_type: String,
    /// Diagram automorphism: "id" or an image list like "1:3,2:2,3:1"
    #[arg(long, default_value = "id")]
    delta: String,
    /// Subset J of simple labels, e.g. "1,3"; empty means ∅
    /// (for `graph` the default is the full set S)
    #[arg(long = "J")]
    j: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

/// Context shared by every subcommand after parsing the common flags.
struct Scope {
    group: WeylGroup,
    delta: DiagramAutomorphism,
    j: SimpleSubset,
}

/// Errors from user-supplied specs exit with the usage code 2; everything
/// else (failed verification, violated precondition, internal check) is 1.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::UnsupportedType(_)
        | Error::InvalidCoxeterMatrix(_)
        | Error::LabelOutOfRange { .. }
        | Error::InvalidAutomorphism(_)
        | Error::Parse { .. } => 2,
        _ => 1,
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

fn scope(common: &Common, default_full: bool) -> Result<Scope, Error> {
    let ty: CartanType = common.cartan_type.parse()?;
    let group = WeylGroup::build(CoxeterDatum::new(ty))?;
    let delta = DiagramAutomorphism::parse(&common.delta, group.datum())?;
    let j = match &common.j {
        Some(spec) => SimpleSubset::parse(spec, group.rank())?,
        None if default_full => group.full_set(),
        None => SimpleSubset::EMPTY,
    };
    Ok(Scope { group, delta, j })
}

fn parse_elt(g: &WeylGroup, spec: &str) -> Result<Elt, Error> {
    g.element(&Word::parse(spec, g.rank())?)
}

fn emit(common: &Common, text: String) -> Result<ExitCode, Error> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Internal(format!(
            "cannot write {}: {e}",
            path.display()
        )))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn unsupported_format(command: &str) -> Error {
    Error::Parse {
        what: "format",
        msg: format!("dot output is not defined for `{command}`"),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Graph { common, w, component } => {
            let sc = scope(&common, true)?;
            let g = &sc.group;
            let graph = shift_graph::build_graph(g, &sc.delta, sc.j);
            let vertices: Vec<Elt> = match (&w, component) {
                (Some(spec), true) => graph.weak_component_of(parse_elt(g, spec)?),
                _ => g.elements().collect(),
            };
            let text = match common.format {
                Format::Dot => output::graph_dot(g, &graph, &vertices),
                Format::Json => output::to_json(&GraphJson::new(g, &graph, &vertices))?,
                Format::Table => {
                    let mut lines = String::new();
                    for &v in &vertices {
                        for &(s, to) in graph.edges(v) {
                            if vertices.contains(&to) {
                                lines.push_str(&format!(
                                    "{} --s{}--> {}\n",
                                    element_label(g, v),
                                    s.label(),
                                    element_label(g, to)
                                ));
                            }
                        }
                    }
                    lines
                }
            };
            emit(&common, text)
        }
        Command::Decompose { common } => {
            let sc = scope(&common, false)?;
            let g = &sc.group;
            let dec = decomposition::decompose(g, sc.j, &sc.delta)?;
            let text = match common.format {
                Format::Dot => return Err(unsupported_format("decompose")),
                Format::Json => output::to_json(&DecompositionJson::new(g, &sc.delta, &dec))?,
                Format::Table => {
                    let mut lines = String::new();
                    for b in &dec.blocks {
                        lines.push_str(&format!(
                            "w' = {:<12} I = {:<8} |orbit| = {}\n",
                            element_label(g, b.w_prime),
                            b.i.to_string(),
                            b.orbit.len()
                        ));
                    }
                    lines
                }
            };
            emit(&common, text)
        }
        Command::Hasse { common } => {
            let sc = scope(&common, false)?;
            let g = &sc.group;
            let reps = parabolic::j_w(g, sc.j);
            let covers = decomposition::hasse(g, sc.j, &sc.delta)?;
            let text = match common.format {
                Format::Dot => output::hasse_dot(g, &reps, &covers),
                Format::Json => {
                    output::to_json(&HasseJson::new(g, &sc.delta, sc.j, &reps, &covers))?
                }
                Format::Table => {
                    let mut lines = String::new();
                    for &(lo, hi) in &covers {
                        let kind = if g.bruhat_leq(lo, hi) { "bruhat" } else { "extra" };
                        lines.push_str(&format!(
                            "{} < {}  ({kind})\n",
                            element_label(g, lo),
                            element_label(g, hi)
                        ));
                    }
                    lines
                }
            };
            emit(&common, text)
        }
        Command::Iota { common, w, full } => {
            let sc = scope(&common, false)?;
            let g = &sc.group;
            let mut pairs = Vec::new();
            let mut certificate = None;
            if full {
                for v in parabolic::w_k(g, sc.delta.apply_subset(sc.j)) {
                    let (image, _) = decomposition::iota(g, sc.j, &sc.delta, v)?;
                    pairs.push(IotaPairJson {
                        w: word_string(g, v),
                        image: word_string(g, image),
                    });
                }
            } else {
                let v = parse_elt(g, w.as_deref().expect("clap enforces --w"))?;
                let (image, cert) = decomposition::iota(g, sc.j, &sc.delta, v)?;
                pairs.push(IotaPairJson {
                    w: word_string(g, v),
                    image: word_string(g, image),
                });
                certificate = Some(CertificateJson::new(g, &sc.delta, &cert));
            }
            let text = match common.format {
                Format::Dot => return Err(unsupported_format("iota")),
                Format::Json => output::to_json(&IotaJson {
                    cartan_type: g.cartan_type().to_string(),
                    delta: sc.delta.to_string(),
                    j: sc.j.labels(),
                    pairs,
                    certificate,
                })?,
                Format::Table => {
                    let mut lines = String::new();
                    for p in &pairs {
                        let v = g.element(&Word::parse(&p.w, g.rank())?)?;
                        let image = g.element(&Word::parse(&p.image, g.rank())?)?;
                        lines.push_str(&format!(
                            "{} -> {}\n",
                            element_label(g, v),
                            element_label(g, image)
                        ));
                    }
                    lines
                }
            };
            emit(&common, text)
        }
        Command::Certificate { common, w, k } => {
            let sc = scope(&common, false)?;
            let g = &sc.group;
            let elt = parse_elt(g, &w)?;
            let k = SimpleSubset::parse(&k, g.rank())?;
            let piece = pieces::make_piece(g, elt, k, &sc.delta)?;
            let cert = decomposition::theorem_cyc(g, sc.j, &sc.delta, piece)?;
            let json = CertificateJson::new(g, &sc.delta, &cert);
            let text = match common.format {
                Format::Dot => return Err(unsupported_format("certificate")),
                Format::Json => output::to_json(&json)?,
                Format::Table => {
                    let mut lines = String::new();
                    lines.push_str(&format!("w'     = {}\n", element_label(g, cert.w_prime)));
                    lines.push_str(&format!("x      = {}\n", element_label(g, cert.x)));
                    lines.push_str(&format!("u      = {}\n", element_label(g, cert.u)));
                    lines.push_str(&format!("K'     = {}\n", cert.k_prime));
                    lines.push_str(&format!("chain  = {} steps\n", cert.chain.len()));
                    lines
                }
            };
            emit(&common, text)
        }
        Command::Datum { common, w, j_prime } => {
            let sc = scope(&common, false)?;
            let g = &sc.group;
            let elt = parse_elt(g, &w)?;
            let j_prime = SimpleSubset::parse(&j_prime, g.rank())?;
            let datum = decomposition::induction_datum(g, sc.j, j_prime, &sc.delta, elt)?;
            let json = DatumJson::new(g, &sc.delta, &datum);
            let text = match common.format {
                Format::Dot => return Err(unsupported_format("datum")),
                Format::Json => output::to_json(&json)?,
                Format::Table => {
                    let mut lines = String::new();
                    lines.push_str(&format!("w'  = {}\n", element_label(g, datum.w_prime)));
                    lines.push_str(&format!("x   = {}\n", element_label(g, datum.x)));
                    lines.push_str(&format!("u   = {}\n", element_label(g, datum.u)));
                    lines.push_str(&format!("K   = {}\n", datum.k));
                    lines.push_str(&format!("K_1 = {}\n", datum.k1));
                    lines.push_str(&format!("K'  = {}\n", datum.k_prime));
                    lines
                }
            };
            emit(&common, text)
        }
        Command::Verify { suite, types } => {
            let selected: Vec<Box<dyn suites::VerifySuite>> = if suite == "all" {
                suites::registry()
            } else {
                match suites::find(&suite) {
                    Some(s) => vec![s],
                    None => {
                        let known: Vec<&str> =
                            suites::registry().iter().map(|s| s.name()).collect();
                        return Err(Error::Parse {
                            what: "suite",
                            msg: format!(
                                "unknown suite `{suite}`; known: {}",
                                known.join(", ")
                            ),
                        });
                    }
                }
            };
            let requested: Option<Vec<CartanType>> = match types {
                Some(spec) => Some(
                    spec.split(',')
                        .map(|t| t.trim().parse())
                        .collect::<Result<_, _>>()?,
                ),
                None => None,
            };
            let mut all_passed = true;
            for s in selected {
                let scope_types = requested.clone().unwrap_or_else(|| s.default_types());
                for outcome in s.run(&scope_types)? {
                    let status = if outcome.passed { "PASS" } else { "FAIL" };
                    println!("[{status}] {}: {}", outcome.label, outcome.detail);
                    all_passed &= outcome.passed;
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
