//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verified claim failed, 2 invalid usage or
//! input, 3 a request beyond a capability limit (degree or group size).

mod report;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::VerificationReport;
pub use verify::*;

use crate::constructs::{
    catalog, catalog_dimacs, catalog_graph, encode_cubic_graph, lemma5_language, prop4_language, theorem2_language,
    theorem3_language, theorem4_language, theorem5_language, theorem6_language, unary_language, SimpleGraph,
    TruncationSpec,
};
use crate::editdist::{distance_matrix, lev, lev_oracle, Weights};
use crate::error::{Error, Result};
use crate::isomgroup::{isometries, isometries_brute};
use crate::langlib::{growth, Language, Word};
use crate::rat::Rat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

/// Maps an error to its process exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegreeTooLarge { .. } | Error::GroupTooLarge { .. } => EXIT_CAPABILITY,
        _ => EXIT_USAGE,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "levisom",
    version,
    about = "Generalized Levenshtein distances and isometry groups of finite languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct WeightArgs {
    /// Indel weight, a positive rational such as `1` or `3/2`.
    #[arg(long, default_value = "1")]
    gamma: Rat,
    /// Substitution weight, a positive rational.
    #[arg(long, default_value = "1")]
    theta: Rat,
}

impl WeightArgs {
    fn weights(&self) -> Result<Weights> {
        Weights::new(self.gamma.clone(), self.theta.clone())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distance between two words (`<eps>` is the empty word).
    Dist {
        u: String,
        v: String,
        #[command(flatten)]
        weights: WeightArgs,
        /// Use the exhaustive edit-script enumerator (short words only).
        #[arg(long)]
        oracle: bool,
    },
    /// Pairwise distance matrix of a language file.
    Matrix {
        #[arg(long)]
        lang: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Tsv)]
        format: MatrixFormat,
    },
    /// Isometry group of a language, printed as JSON.
    Isom {
        #[arg(long)]
        lang: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
        /// Enumerate all permutations instead of searching.
        #[arg(long)]
        brute: bool,
    },
    /// Number of words of length at most `n`.
    Growth {
        #[arg(long)]
        lang: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Build one of the language families and write it in language-file format.
    Construct(ConstructArgs),
    /// List bundled cubic graphs, or print one in DIMACS format.
    Graphs {
        #[arg(long, value_name = "NAME")]
        export: Option<String>,
    },
    /// Check a claim and report violations.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MatrixFormat {
    Tsv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Lemma4,
    Theorem2,
    Theorem3,
    Theorem4,
    Theorem5,
    Lemma5,
    Theorem6,
    Unary,
    Prop4,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    /// Graph file (DIMACS) or catalog name; repeatable.
    #[arg(long = "graph")]
    graphs: Vec<String>,
    /// Truncation depth (number of layers above the base).
    #[arg(long)]
    depth: Option<usize>,
    /// Alphabet size for the Hamming-cube family.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Word-length bound for the two-letter unary family.
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// Base language file for the periodic-suffix family.
    #[arg(long)]
    lang: Option<PathBuf>,
    /// Comma-separated lengths for the unary family.
    #[arg(long, value_delimiter = ',')]
    lengths: Vec<usize>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Claim {
    Metric,
    Bounds,
    Homothety,
    Prop3,
    Prop4,
    Theorem1,
    Lemma3,
    Lemma4,
    Theorem2,
    Theorem3,
    Theorem4,
    Lemma5,
    Theorem5,
    Theorem6,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: Claim,
    #[arg(long)]
    gamma: Option<Rat>,
    #[arg(long)]
    theta: Option<Rat>,
    /// Comma-separated substitution weights for the stretching claim.
    #[arg(long, value_delimiter = ',')]
    thetas: Vec<Rat>,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    #[arg(long, default_value_t = 12)]
    max_size: usize,
    #[arg(long, default_value_t = 20240601)]
    seed: u64,
    #[arg(long = "graph")]
    graphs: Vec<String>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long)]
    lang: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

/// Runs the CLI on `std::env::args` and returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Runs the CLI on the given arguments (first item is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Resolves a graph argument: an existing file is read as DIMACS, anything
/// else is looked up in the catalog.
pub fn resolve_graph(arg: &str) -> Result<NamedGraph> {
    let path = Path::new(arg);
    if path.is_file() {
        let graph = SimpleGraph::load(path)?;
        let name = path.file_stem().map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(NamedGraph { name, graph, known_aut_order: None });
    }
    let e = catalog_graph(arg)?;
    Ok(NamedGraph { name: e.name.to_string(), graph: e.graph, known_aut_order: Some(e.aut_order) })
}

fn resolve_graphs(args: &[String], default: &[&str]) -> Result<Vec<NamedGraph>> {
    if args.is_empty() {
        default.iter().map(|g| resolve_graph(g)).collect()
    } else {
        args.iter().map(|g| resolve_graph(g)).collect()
    }
}

fn execute(command: Command) -> Result<i32> {
    let mut out = std::io::stdout().lock();
    match command {
        Command::Dist { u, v, weights, oracle } => {
            let (u, v, w) = (Word::parse(&u)?, Word::parse(&v)?, weights.weights()?);
            let d = if oracle { lev_oracle(&u, &v, &w)? } else { lev(&u, &v, &w) };
            writeln!(out, "{d}")?;
        }
        Command::Matrix { lang, weights, format } => {
            let lang = Language::load(&lang)?;
            let d = distance_matrix(&lang, &weights.weights()?);
            match format {
                MatrixFormat::Tsv => {
                    let header: Vec<String> = d.labels().iter().map(Word::to_string).collect();
                    writeln!(out, "\t{}", header.join("\t"))?;
                    for (label, row) in d.labels().iter().zip(d.entries()) {
                        let cells: Vec<String> = row.iter().map(Rat::to_string).collect();
                        writeln!(out, "{label}\t{}", cells.join("\t"))?;
                    }
                }
                MatrixFormat::Json => {
                    let json = serde_json::json!({ "words": d.labels(), "entries": d.entries() });
                    writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serializable"))?;
                }
            }
        }
        Command::Isom { lang, weights, brute } => {
            let lang = Language::load(&lang)?;
            let d = distance_matrix(&lang, &weights.weights()?);
            let group = if brute { isometries_brute(&d)? } else { isometries(&d) };
            writeln!(out, "{}", serde_json::to_string_pretty(&group.summary()).expect("serializable"))?;
        }
        Command::Growth { lang, n } => {
            writeln!(out, "{}", growth(&Language::load(&lang)?, n))?;
        }
        Command::Construct(args) => {
            let (lang, header) = construct(&args)?;
            eprintln!("{header}: {} words, lengths {:?}", lang.len(), lang.lengths());
            let text = lang.to_text(Some(&header));
            match &args.out {
                Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Graphs { export } => match export {
            Some(name) => out.write_all(catalog_dimacs(&name)?.as_bytes())?,
            None => {
                writeln!(out, "name\tvertices\tedges\taut_order\tdescription")?;
                for e in catalog() {
                    let (n, m) = (e.graph.n(), e.graph.edges().len());
                    writeln!(out, "{}\t{n}\t{m}\t{}\t{}", e.name, e.aut_order, e.description)?;
                }
            }
        },
        Command::Verify(args) => {
            let report = run_verify(&args)?;
            if args.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"))?;
            } else {
                writeln!(out, "{report}")?;
            }
            return Ok(if report.pass { EXIT_OK } else { EXIT_CLAIM_FAILED });
        }
    }
    Ok(EXIT_OK)
}

fn construct(args: &ConstructArgs) -> Result<(Language, String)> {
    let depth = |default: usize| TruncationSpec::new(args.depth.unwrap_or(default));
    let names = |gs: &[NamedGraph]| gs.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(",");
    let one_graph = || -> Result<NamedGraph> {
        match args.graphs.as_slice() {
            [g] => resolve_graph(g),
            [] => resolve_graph("k4"),
            _ => Err(Error::InvalidParameter("exactly one --graph expected".into())),
        }
    };
    Ok(match args.family {
        Family::Lemma4 => {
            let g = one_graph()?;
            (encode_cubic_graph(&g.graph)?, format!("graph encoding of {}", g.name))
        }
        Family::Theorem2 => {
            let g = one_graph()?;
            (theorem2_language(&g.graph)?, format!("stretched graph encoding of {}", g.name))
        }
        Family::Theorem3 => {
            let gs = resolve_graphs(&args.graphs, &["k4", "k33", "petersen"])?;
            let t = depth(gs.len())?;
            let plain: Vec<SimpleGraph> = gs.iter().map(|g| g.graph.clone()).collect();
            (theorem3_language(&plain, t)?, format!("layered graph language of {}, depth {}", names(&gs), t.depth()))
        }
        Family::Theorem4 => {
            let t = depth(1)?;
            (theorem4_language(args.k, t)?, format!("Hamming-cube layers, k = {}, depth {}", args.k, t.depth()))
        }
        Family::Theorem5 => {
            let gs = resolve_graphs(&args.graphs, &["k4", "k33"])?;
            let [g1, g2] = gs.as_slice() else {
                return Err(Error::InvalidParameter("exactly two --graph values expected".into()));
            };
            let t = depth(2)?;
            let lang = theorem5_language(&g1.graph, &g2.graph, t)?;
            (lang, format!("graph product language of {}, {}, depth {}", g1.name, g2.name, t.depth()))
        }
        Family::Lemma5 => {
            let base = match &args.lang {
                Some(p) => Language::load(p)?,
                None => Language::parse("00\n11\n")?,
            };
            let t = depth(3)?;
            (lemma5_language(&base, t)?, format!("periodic-suffix language, depth {}", t.depth()))
        }
        Family::Theorem6 => {
            let t = depth(3)?;
            (theorem6_language(t)?, format!("single-marker layers, depth {}", t.depth()))
        }
        Family::Unary => {
            if args.lengths.is_empty() {
                return Err(Error::InvalidParameter("--lengths is required".into()));
            }
            (unary_language(&args.lengths)?, format!("unary language, lengths {:?}", args.lengths))
        }
        Family::Prop4 => (prop4_language(args.n)?, format!("0^i and 1^i for i <= {}", args.n)),
    })
}

fn run_verify(a: &VerifyArgs) -> Result<VerificationReport> {
    let weights = |default_theta: i64| -> Result<Weights> {
        Weights::new(
            a.gamma.clone().unwrap_or_else(Rat::one),
            a.theta.clone().unwrap_or_else(|| Rat::from_integer(default_theta)),
        )
    };
    let opts = RandomOpts { samples: a.samples, max_len: a.max_len, seed: a.seed };
    let all_catalog = ["k4", "k33", "petersen", "frucht"];
    Ok(match a.claim {
        Claim::Metric => verify_metric(&opts),
        Claim::Bounds => verify_bounds(&opts),
        Claim::Homothety => verify_homothety(&opts),
        Claim::Prop3 => verify_prop3(a.samples, a.max_size, &a.theta.clone().unwrap_or_else(Rat::one), a.seed)?,
        Claim::Prop4 => verify_prop4(a.n, &weights(2)?)?,
        Claim::Theorem1 => {
            let path = a.lang.as_ref().ok_or_else(|| Error::InvalidParameter("--lang is required".into()))?;
            verify_theorem1(&Language::load(path)?, &weights(1)?)?
        }
        Claim::Lemma3 => {
            let thetas =
                if a.thetas.is_empty() { vec![a.theta.clone().unwrap_or_else(Rat::one)] } else { a.thetas.clone() };
            verify_lemma3(&opts, &thetas)?
        }
        Claim::Lemma4 => verify_lemma4(&resolve_graphs(&a.graphs, &all_catalog)?)?,
        Claim::Theorem2 => verify_theorem2(&resolve_graphs(&a.graphs, &all_catalog)?, &weights(1)?)?,
        Claim::Theorem3 => {
            let gs = resolve_graphs(&a.graphs, &["k4", "k33", "petersen"])?;
            verify_theorem3(&gs, a.depth.unwrap_or(gs.len()), &weights(1)?)?
        }
        Claim::Theorem4 => verify_theorem4(a.k, a.depth.unwrap_or(1), &weights(1)?)?,
        Claim::Lemma5 => {
            let base = match &a.lang {
                Some(p) => Language::load(p)?,
                None => Language::parse("00\n11\n")?,
            };
            verify_lemma5(&base, a.depth.unwrap_or(3), &weights(1)?)?
        }
        Claim::Theorem5 => {
            let gs = resolve_graphs(&a.graphs, &["k4", "k33"])?;
            let [g1, g2] = gs.as_slice() else {
                return Err(Error::InvalidParameter("exactly two --graph values expected".into()));
            };
            verify_theorem5(g1, g2, a.depth.unwrap_or(2), &weights(1)?)?
        }
        Claim::Theorem6 => verify_theorem6(a.depth.unwrap_or(3), &weights(1)?)?,
    })
}
