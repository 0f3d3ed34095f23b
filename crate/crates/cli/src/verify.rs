use std::collections::BTreeMap;

use clap::Args;
use cover_spectra::gap::certify_gap;
use cover_spectra::generators::{corpus, CORPUS_MAX_EDGES, CORPUS_MAX_VERTICES};
use cover_spectra::rho::{rho_tree, DEFAULT_TOL};
use cover_spectra::{eigen_spectrum, CyclomaticClass, MultiGraph};
use rayon::prelude::*;

use crate::experiment::threads;
use crate::{write_out, Failure};

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = CORPUS_MAX_VERTICES)]
    max_n: usize,
    #[arg(long, default_value_t = CORPUS_MAX_EDGES)]
    max_m: usize,
    /// Bisection tolerance for the cover radius.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// `|λ1 − ρ(T)|` at or below this counts as no gap.
    #[arg(long, default_value_t = 1e-6)]
    gap_tol: f64,
    /// List every failing graph after the table.
    #[arg(long)]
    show_failures: bool,
}

/// `Ok(())` when the graph behaves as the dichotomy predicts.
fn check(g: &MultiGraph, tol: f64, gap_tol: f64) -> Result<(), String> {
    let class = g.cyclomatic_class().map_err(|e| e.to_string())?;
    let lambda1 = eigen_spectrum(g).map_err(|e| e.to_string())?.lambda1;
    let rho = rho_tree(g, tol).map_err(|e| e.to_string())?;
    let gap = lambda1 - rho.value;
    if class != CyclomaticClass::Multicyclic {
        return if gap.abs() <= gap_tol {
            Ok(())
        } else {
            Err(format!("{} graph with gap {gap:e}", class.name()))
        };
    }
    if gap.abs() <= gap_tol {
        return Err(format!("multicyclic graph with gap {gap:e}"));
    }
    let cert = certify_gap(g, tol).map_err(|e| e.to_string())?;
    if cert.margin <= 0.0 || rho.hi > lambda1 - cert.margin + gap_tol {
        return Err(format!("certificate margin {} against rho hi {}", cert.margin, rho.hi));
    }
    Ok(())
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    if args.max_n > 6 || args.max_m > 9 {
        return Err(Failure::usage("corpus is limited to --max-n 6 and --max-m 9"));
    }
    if args.tol.is_nan() || args.tol <= 0.0 || args.gap_tol.is_nan() || args.gap_tol <= 0.0 {
        return Err(Failure::usage("tolerances must be positive"));
    }
    let graphs = corpus(args.max_n, args.max_m);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads()?)
        .build()
        .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    let results: Vec<Result<(), String>> =
        pool.install(|| graphs.par_iter().map(|g| check(g, args.tol, args.gap_tol)).collect());

    let mut table: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (g, r) in graphs.iter().zip(&results) {
        let row = table.entry((g.n(), g.num_edges())).or_default();
        if r.is_ok() {
            row.0 += 1;
        } else {
            row.1 += 1;
        }
    }
    let mut out = String::from("n  m  graphs  pass  fail\n");
    for ((n, m), (pass, fail)) in &table {
        out.push_str(&format!("{n:<2} {m:<2} {:<7} {pass:<5} {fail}\n", pass + fail));
    }
    let failed = results.iter().filter(|r| r.is_err()).count();
    out.push_str(&format!("total {} pass {} fail {failed}\n", graphs.len(), graphs.len() - failed));
    if args.show_failures {
        for (g, r) in graphs.iter().zip(&results) {
            if let Err(why) = r {
                out.push_str(&format!("FAIL {:?}: {why}\n", g.sorted_edge_list()));
            }
        }
    }
    write_out(None, &out)?;
    if failed > 0 {
        return Err(Failure::contract(format!("{failed} of {} graphs failed", graphs.len())));
    }
    Ok(())
}
