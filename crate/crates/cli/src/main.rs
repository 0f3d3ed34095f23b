use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cover_spectra::generators::{make, random_lift, Family};
use cover_spectra::local::{bs_histogram_with_cap, tree_ball_distribution, tv_distance, DEFAULT_CANON_CAP};
use cover_spectra::report::{
    tagged, CertificateReport, CoreReport, OrbitReport, RhoReport, SpectraReport, UnicyclicReport,
    SCHEMA,
};
use cover_spectra::rho::{RhoOptions, DEFAULT_ITERATION_CAP, DEFAULT_TOL};
use cover_spectra::spectra::{eigen_spectrum_with_cap, DEFAULT_ETA, DENSE_CAP};
use cover_spectra::{cover, gap, local, rho, two_core, MultiGraph};
use serde::Serialize;
use serde_json::json;

mod experiment;
mod verify;

#[derive(Parser)]
#[command(name = "cover-spectra", version, about = "Spectra of multigraphs against their universal cover tree")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file, or `-` for stdin.
    graph: PathBuf,
}

#[derive(Args)]
struct RhoArgs {
    /// Bisection tolerance on the bracket width.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_ITERATION_CAP)]
    iteration_cap: usize,
}

impl RhoArgs {
    fn options(&self) -> RhoOptions {
        RhoOptions { tol: self.tol, iteration_cap: self.iteration_cap, ..RhoOptions::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency spectrum, optionally with the weakly-Ramanujan fraction.
    Spectra {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_ETA)]
        eta: f64,
        #[arg(long, default_value_t = DENSE_CAP)]
        dense_cap: usize,
    },
    /// Spectral radius of the universal cover tree by certified bisection.
    Rho {
        #[command(flatten)]
        input: GraphArg,
        #[command(flatten)]
        rho: RhoArgs,
    },
    /// Fraction of eigenvalues with |λ| ≤ rho + eta. Without --rho the cover
    /// radius is computed.
    Wr {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_ETA)]
        eta: f64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Fraction of vertices whose radius-r ball is a tree.
    Treefrac {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        r: usize,
    },
    /// 2-core decomposition and half-edge orientation.
    Core {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Spectral-gap certificate for a multicyclic graph.
    Certify {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Test-vector lower bound on the cover radius of a unicyclic graph.
    Unicyclic {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = 10_000)]
        copies: u64,
        /// Also report `rho_tree` for comparison.
        #[arg(long)]
        compare: bool,
    },
    /// Backtracking (cover) and ordinary closed-walk counts at a vertex.
    Walks {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long)]
        k: usize,
    },
    /// Vertex classes by rooted universal-cover type.
    Orbits {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Two disjoint short cycles near a vertex.
    Bouquet {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "len")]
        len: usize,
    },
    /// Histogram of rooted r-ball types and its distance to the cover's.
    BsDist {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_CANON_CAP)]
        cap: usize,
        /// Also write the histogram as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write a member of a named family as a graph file.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Random n-lift of a graph.
    Lift {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Sweep sizes and seeds, writing one CSV row per sample.
    Experiment(experiment::ExperimentArgs),
    /// Exhaustive gap dichotomy check over all small connected multigraphs.
    VerifyThm2(verify::VerifyArgs),
}

#[derive(Args, Clone)]
pub struct FamilyArgs {
    /// cycle, path, complete, star, bowtie, theta, biregular, random_regular,
    /// two_cycles_glued.
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub lift: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl FamilyArgs {
    pub fn family(&self) -> Result<Family, Failure> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Failure::usage(format!("family {} needs --{flag}", self.family)))
        };
        Ok(match self.family.replace('-', "_").as_str() {
            "cycle" => Family::Cycle { n: need(self.n, "n")? },
            "path" => Family::Path { n: need(self.n, "n")? },
            "complete" => Family::Complete { n: need(self.n, "n")? },
            "star" => Family::Star { k: need(self.k, "k")? },
            "bowtie" => Family::Bowtie,
            "theta" => Family::Theta { a: need(self.a, "a")?, b: need(self.b, "b")?, c: need(self.c, "c")? },
            "biregular" => Family::Biregular {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
                lift: need(self.lift, "lift")?,
                seed: self.seed,
            },
            "random_regular" => {
                Family::RandomRegular { n: need(self.n, "n")?, d: need(self.d, "d")?, seed: self.seed }
            }
            "two_cycles_glued" => Family::TwoCyclesGlued { p: need(self.p, "p")?, q: need(self.q, "q")? },
            other => return Err(Failure::usage(format!("unknown family {other:?}"))),
        })
    }
}

/// A failed run: printed as one JSON line on stderr.
#[derive(Debug)]
pub struct Failure {
    kind: String,
    message: String,
    code: u8,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { kind: "usage".into(), message: message.into(), code: 2 }
    }

    pub fn io(path: &Path, e: io::Error) -> Self {
        Failure { kind: "io".into(), message: format!("{}: {e}", path.display()), code: 1 }
    }

    /// The computation ran but missed a tolerance or target.
    pub fn contract(message: impl Into<String>) -> Self {
        Failure { kind: "contract".into(), message: message.into(), code: 3 }
    }
}

impl From<cover_spectra::Error> for Failure {
    fn from(e: cover_spectra::Error) -> Self {
        Failure { kind: e.kind().into(), message: e.to_string(), code: 1 }
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(input: &GraphArg) -> Result<MultiGraph, Failure> {
    let path = &input.graph;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::io(path, e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::io(path, e))?
    };
    Ok(MultiGraph::parse(&text)?)
}

pub fn write_out(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::io(Path::new("<stdout>"), e))
        }
    }
}

fn strings<T: ToString>(v: Vec<T>) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

fn emit<T: Serialize>(report: &T) -> Outcome {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    write_out(None, &format!("{text}\n"))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Spectra { input, rho, eta, dense_cap } => {
            let g = read_graph(&input)?;
            let s = eigen_spectrum_with_cap(&g, dense_cap)?;
            let wr = match rho {
                Some(r) => Some((r, cover_spectra::wr_fraction(&s, r, eta)?)),
                None => None,
            };
            emit(&SpectraReport::new(&g, &s, wr, eta))
        }
        Command::Rho { input, rho } => {
            let g = read_graph(&input)?;
            let r = rho::rho_tree_with(&g, &rho.options())?;
            emit(&RhoReport::from(&r))
        }
        Command::Wr { input, rho, eta, tol } => {
            let g = read_graph(&input)?;
            let rho_used = match rho {
                Some(r) => r,
                None => rho::rho_tree(&g, tol)?.value,
            };
            let s = eigen_spectrum_with_cap(&g, DENSE_CAP)?;
            let f = cover_spectra::wr_fraction(&s, rho_used, eta)?;
            emit(&json!({
                "schema": SCHEMA,
                "wr_fraction": f,
                "rho_used": rho_used,
                "eta": eta,
                "lambda1": s.lambda1,
            }))
        }
        Command::Treefrac { input, r } => {
            let g = read_graph(&input)?;
            let f = local::tree_fraction(&g, r)?;
            emit(&json!({ "schema": SCHEMA, "r": r, "tree_fraction": f }))
        }
        Command::Core { input } => {
            let g = read_graph(&input)?;
            let c = two_core(&g)?;
            emit(&CoreReport::new(&g, &c))
        }
        Command::Certify { input, tol } => {
            let g = read_graph(&input)?;
            let c = gap::certify_gap(&g, tol)?;
            emit(&CertificateReport::from(&c))
        }
        Command::Unicyclic { input, copies, compare } => {
            let g = read_graph(&input)?;
            let d = gap::unicyclic_defect(&g, copies)?;
            let rho = if compare { Some(rho::rho_tree(&g, DEFAULT_TOL)?.value) } else { None };
            emit(&UnicyclicReport::new(&d, rho))
        }
        Command::Walks { input, vertex, k } => {
            let g = read_graph(&input)?;
            if vertex >= g.n() {
                return Err(cover_spectra::Error::VertexOutOfRange { vertex, n: g.n() }.into());
            }
            let backtracking = strings(cover::backtracking_walk_counts(&g, vertex, k));
            let closed = strings(cover_spectra::spectra::closed_walk_counts(&g, vertex, k));
            emit(&json!({
                "schema": SCHEMA,
                "vertex": vertex,
                "k": k,
                "backtracking": backtracking,
                "closed": closed,
            }))
        }
        Command::Orbits { input } => {
            let g = read_graph(&input)?;
            emit(&OrbitReport::from(&cover::orbit_distribution(&g)))
        }
        Command::Bouquet { input, vertex, k, len } => {
            let g = read_graph(&input)?;
            let b = local::find_bouquet(&g, vertex, k, len)?;
            emit(&json!({ "schema": SCHEMA, "vertex": vertex, "k": k, "len": len, "bouquet": b }))
        }
        Command::BsDist { input, r, cap, csv } => {
            let g = read_graph(&input)?;
            let h = bs_histogram_with_cap(&g, r, cap)?;
            let target = tree_ball_distribution(&g, r)?;
            if let Some(p) = &csv {
                write_out(Some(p), &h.to_csv())?;
            }
            emit(&tagged(json!({
                "radius": r,
                "histogram": h,
                "tv_to_cover": tv_distance(&h, &target),
            })))
        }
        Command::Gen { family, out } => {
            let f = family.family()?;
            let generated = make(&f)?;
            write_out(out.as_deref(), &format!("# {f}\n{}", generated.graph.to_text()))?;
            if generated.fallback {
                return Err(Failure::contract(format!("{f}: no simple connected sample, wrote the last attempt")));
            }
            Ok(())
        }
        Command::Lift { input, n, seed, out } => {
            let g = read_graph(&input)?;
            let l = random_lift(&g, n, seed)?;
            let header = format!("# lift n={n} seed={seed} components={}\n", l.components);
            write_out(out.as_deref(), &format!("{header}{}", l.graph.to_text()))
        }
        Command::Experiment(args) => experiment::run(&args),
        Command::VerifyThm2(args) => verify::run(&args),
    }
}

fn fail(f: &Failure) -> ExitCode {
    let line = json!({ "schema": SCHEMA, "error": f.kind, "message": f.message });
    eprintln!("{line}");
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("").trim_start_matches("error: ");
            return fail(&Failure::usage(first));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(&f),
    }
}
