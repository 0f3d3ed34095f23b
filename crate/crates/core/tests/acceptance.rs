//! Acceptance criteria, one test each. Every test prints a single
//! `criterion <id> PASS|FAIL <detail>` line and asserts on it.

mod common;

use std::time::{Duration, Instant};

use common::{bowtie, brute_force_backtracking, components, corpus, cycle, k4, median};
use cover_spectra::cover::{backtracking_walk_count, orbit_distribution};
use cover_spectra::gap::{certify_gap, unicyclic_defect};
use cover_spectra::generators::{make, random_lift, Family};
use cover_spectra::local::{cycle_stats, mass_transport_check, tree_fraction};
use cover_spectra::rho::{rho_ball_power, rho_lower_sequence, rho_tree};
use cover_spectra::spectra::{adjacency_eigenvalues, closed_walk_count, eigen_spectrum, wr_fraction};
use cover_spectra::{CyclomaticClass, MultiGraph};
use num_bigint::BigUint;
use num_rational::Ratio;

fn report(id: &str, pass: bool, detail: String) {
    println!("criterion {id} {} {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {id}: {detail}");
}

fn within(t: Instant, limit: Duration) -> (bool, String) {
    let e = t.elapsed();
    (e < limit, format!("runtime {e:.2?} (limit {limit:?})"))
}

fn random_cubic(n: usize, seed: u64) -> MultiGraph {
    let g = make(&Family::RandomRegular { n, d: 3, seed }).unwrap();
    assert!(!g.fallback);
    g.graph
}

#[test]
fn criterion_01_bowtie_numbers() {
    let t = Instant::now();
    let g = bowtie();
    let lambda1 = eigen_spectrum(&g).unwrap().lambda1;
    let rho = rho_tree(&g, 1e-9).unwrap().value;
    let want_l = (1.0 + 17f64.sqrt()) / 2.0;
    let want_r = (3f64.sqrt() + 11f64.sqrt()) / 2.0;
    let gap = lambda1 - rho;
    let (fast, time) = within(t, Duration::from_secs(1));
    let pass = (lambda1 - want_l).abs() <= 1e-6
        && (rho - want_r).abs() <= 1e-6
        && (gap - 0.0372150).abs() <= 1e-4
        && fast;
    report("1", pass, format!("lambda1 {lambda1:.10} rho {rho:.10} gap {gap:.7}; {time}"));
}

#[test]
fn criterion_02_regular_covers() {
    let target = 8f64.sqrt();
    let mut lines = Vec::new();
    let mut pass = true;
    for (name, g, want) in [
        ("K4", k4(), target),
        ("random cubic n=100", random_cubic(100, 1), target),
        ("C_7", cycle(7), 2.0),
        ("C_100", cycle(100), 2.0),
    ] {
        let t = Instant::now();
        let r = rho_tree(&g, 1e-9).unwrap().value;
        let (fast, time) = within(t, Duration::from_secs(1));
        pass &= (r - want).abs() <= 1e-8 && fast;
        lines.push(format!("{name}: {r:.12} ({time})"));
    }
    report("2", pass, lines.join("; "));
}

#[test]
fn criterion_03_gap_dichotomy_on_corpus() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let (mut multi, mut other) = (0, 0);
    for g in corpus() {
        let class = g.cyclomatic_class().unwrap();
        let lambda1 = eigen_spectrum(g).unwrap().lambda1;
        let rho = rho_tree(g, 1e-9).unwrap();
        let no_gap = (lambda1 - rho.value).abs() <= 1e-6;
        if class == CyclomaticClass::Multicyclic {
            multi += 1;
            let ok = !no_gap
                && certify_gap(g, 1e-9)
                    .map(|c| c.margin > 0.0 && rho.hi <= lambda1 - c.margin + 1e-6)
                    .unwrap_or(false);
            if !ok {
                bad.push(g.sorted_edge_list());
            }
        } else {
            other += 1;
            if !no_gap {
                bad.push(g.sorted_edge_list());
            }
        }
    }
    let (fast, time) = within(t, Duration::from_secs(600));
    report(
        "3",
        bad.is_empty() && fast,
        format!("{multi} multicyclic, {other} tree/unicyclic, failures {:?}; {time}", bad),
    );
}

#[test]
fn criterion_04_walk_count_oracle() {
    let t = Instant::now();
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for g in corpus() {
        for v in 0..g.n() {
            for k in 0..=8 {
                checked += 1;
                if backtracking_walk_count(g, v, k) != brute_force_backtracking(g, v, k) {
                    mismatches += 1;
                }
            }
        }
    }
    let mut regular_ok = true;
    let five = MultiGraph::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()).unwrap();
    let quartic = make(&Family::RandomRegular { n: 50, d: 4, seed: 3 }).unwrap().graph;
    for (g, d) in [(k4(), 3u32), (random_cubic(60, 2), 3), (five, 4), (quartic, 4)] {
        for v in 0..g.n() {
            regular_ok &= backtracking_walk_count(&g, v, 2) == BigUint::from(d);
            regular_ok &= backtracking_walk_count(&g, v, 4) == BigUint::from(d * (2 * d - 1));
        }
    }
    let (fast, time) = within(t, Duration::from_secs(60));
    report(
        "4",
        mismatches == 0 && regular_ok && fast,
        format!("{checked} counts, {mismatches} mismatches, regular N2/N4 ok: {regular_ok}; {time}"),
    );
}

#[test]
fn criterion_05_walk_inequalities() {
    let t = Instant::now();
    let mut violations = Vec::new();
    for g in corpus() {
        let n = g.n();
        let delta = BigUint::from(g.max_degree());
        let w: Vec<Vec<BigUint>> =
            (0..n).map(|v| (0..=12).map(|k| closed_walk_count(g, v, k)).collect()).collect();
        let orbits = orbit_distribution(g);
        for k in 0..=6 {
            for x in 0..n {
                let dist = g.distances_from(x);
                for y in 0..n {
                    let d = dist[y].unwrap() as u32;
                    if w[y][2 * k] > delta.pow(2 * d) * &w[x][2 * k] {
                        violations.push(format!("distance {:?} x{x} y{y} k{k}", g.edges()));
                    }
                }
                for j in 0..=(6 - k) {
                    if w[x][2 * k + 2 * j] > delta.pow(2 * j as u32) * &w[x][2 * k] {
                        violations.push(format!("length {:?} x{x} k{k} j{j}", g.edges()));
                    }
                }
            }
            // n · Σ_j p_j N_2k(v̂_j) = Σ_j |class_j| N_2k(rep_j) ≤ Σ_v W_2k(v).
            let lhs: BigUint = (0..n).map(|v| &w[v][2 * k]).sum();
            let rhs: BigUint = orbits
                .classes
                .iter()
                .map(|c| BigUint::from(c.members.len()) * backtracking_walk_count(g, c.representative, 2 * k))
                .sum();
            if lhs < rhs {
                violations.push(format!("average {:?} k{k}", g.edges()));
            }
        }
    }
    let (fast, time) = within(t, Duration::from_secs(60));
    report("5", violations.is_empty() && fast, format!("violations {violations:?}; {time}"));
}

#[test]
fn criterion_06a_lower_sequence_below_rho() {
    let t = Instant::now();
    let mut worst = f64::MIN;
    for g in corpus() {
        let rho = rho_tree(g, 1e-9).unwrap();
        for v in 0..g.n() {
            let lower = rho_lower_sequence(g, v, 6).unwrap().max();
            worst = worst.max(lower - rho.value);
        }
    }
    let (fast, time) = within(t, Duration::from_secs(120));
    report("6a", worst <= 1e-9 && fast, format!("max(lower - rho) = {worst:e}; {time}"));
}

#[test]
fn criterion_06b_ball_below_rho() {
    let t = Instant::now();
    let mut worst = f64::MIN;
    for g in corpus() {
        let rho = rho_tree(g, 1e-9).unwrap();
        for v in 0..g.n() {
            worst = worst.max(rho_ball_power(g, v, 10).unwrap() - rho.hi);
        }
    }
    let (fast, time) = within(t, Duration::from_secs(120));
    report("6b", worst <= 1e-9 && fast, format!("max(ball - rho.hi) = {worst:e}; {time}"));
}

#[test]
fn criterion_06c_cubic_ball_near_rho() {
    let t = Instant::now();
    let target = 8f64.sqrt() - 0.05;
    let mut values = Vec::new();
    for g in [k4(), random_cubic(100, 1)] {
        values.push(rho_ball_power(&g, 0, 12).unwrap());
    }
    let (fast, time) = within(t, Duration::from_secs(120));
    let pass = values.iter().all(|&v| v >= target) && fast;
    report("6c", pass, format!("R=12 ball values {values:?} vs 2√2 − 0.05 = {target:.6}; {time}"));
}

fn lambda1_any(g: &MultiGraph) -> f64 {
    adjacency_eigenvalues(g)[0]
}

fn proportions(g: &MultiGraph) -> Vec<Ratio<usize>> {
    let mut p: Vec<Ratio<usize>> =
        orbit_distribution(g).proportions().into_iter().map(|(s, n)| Ratio::new(s, n)).collect();
    p.sort();
    p
}

#[test]
fn criterion_07_lift_invariance() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut lifts = 0;
    for (name, base) in [("bowtie", bowtie()), ("K4", k4())] {
        let l_base = lambda1_any(&base);
        let p_base = proportions(&base);
        let r_base = rho_tree(&base, 1e-9).unwrap();
        for n in [2, 3, 5] {
            for seed in 0..3 {
                lifts += 1;
                let l = random_lift(&base, n, seed).unwrap();
                let tag = format!("{name} n={n} seed={seed}");
                if (lambda1_any(&l.graph) - l_base).abs() > 1e-8 {
                    failures.push(format!("{tag}: lambda1"));
                }
                if proportions(&l.graph) != p_base {
                    failures.push(format!("{tag}: orbit proportions"));
                }
                for c in components(&l.graph) {
                    let r = rho_tree(&c, 1e-9).unwrap();
                    if (r.value - r_base.value).abs() > r.width() + r_base.width() {
                        failures.push(format!("{tag}: rho {} vs {}", r.value, r_base.value));
                    }
                }
            }
        }
    }
    let (fast, time) = within(t, Duration::from_secs(60));
    report("7", failures.is_empty() && fast, format!("{lifts} lifts, failures {failures:?}; {time}"));
}

#[test]
fn criterion_08_random_cubic_trend() {
    let t = Instant::now();
    let rho = 8f64.sqrt();
    let mut medians = Vec::new();
    let mut min_wr = f64::MAX;
    let mut tree_2000 = 0.0;
    for n in [100, 500, 2000] {
        let mut wr = Vec::new();
        let mut tf = Vec::new();
        for seed in 0..5 {
            let g = random_cubic(n, seed);
            wr.push(wr_fraction(&eigen_spectrum(&g).unwrap(), rho, 0.01).unwrap());
            tf.push(tree_fraction(&g, 2).unwrap());
        }
        min_wr = min_wr.min(wr.iter().copied().fold(f64::MAX, f64::min));
        medians.push(median(&wr));
        tree_2000 = median(&tf);
    }
    let (fast, time) = within(t, Duration::from_secs(300));
    let monotone = medians.windows(2).all(|w| w[0] <= w[1]);
    let pass = min_wr >= 0.7 && monotone && tree_2000 >= 0.9 && fast;
    report(
        "8",
        pass,
        format!("min wr {min_wr:.4}, wr medians {medians:?}, tree fraction median at 2000 {tree_2000:.4}; {time}"),
    );
}

#[test]
fn criterion_09_mass_transport() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut bound_checked = 0;
    for g in corpus() {
        let delta = BigUint::from(g.max_degree());
        for len in 1..=5 {
            let stats = cycle_stats(g, len);
            for (v, &c) in stats.per_vertex.iter().enumerate() {
                if BigUint::from(c) > delta.pow(len as u32) {
                    failures.push(format!("{:?} vertex {v} has {c} {len}-cycles", g.edges()));
                }
            }
            for radius in 1..=3 {
                let m = mass_transport_check(g, radius, len);
                if !m.balanced() {
                    failures.push(format!("{:?} R={radius} l={len} unbalanced", g.edges()));
                }
                match m.bound_holds {
                    Some(true) => bound_checked += 1,
                    Some(false) => failures.push(format!("{:?} R={radius} l={len} N_R bound", g.edges())),
                    None => {}
                }
            }
        }
    }
    let (fast, time) = within(t, Duration::from_secs(60));
    report(
        "9",
        failures.is_empty() && fast,
        format!("{bound_checked} N_R instances, failures {failures:?}; {time}"),
    );
}

fn unicyclic_sample() -> Vec<&'static MultiGraph> {
    let all: Vec<&MultiGraph> =
        corpus().iter().filter(|g| g.cyclomatic_class().unwrap() == CyclomaticClass::Unicyclic).collect();
    assert!(all.len() >= 10);
    let step = all.len() / 10;
    (0..10).map(|i| all[i * step]).collect()
}

#[test]
fn criterion_10a_unicyclic_defect_tight() {
    let t = Instant::now();
    let mut worst = f64::MAX;
    for g in unicyclic_sample() {
        let d = unicyclic_defect(g, 10_000).unwrap().value;
        let rho = rho_tree(g, 1e-9).unwrap();
        worst = worst.min(d - (rho.lo - 1e-6));
    }
    let (fast, time) = within(t, Duration::from_secs(10));
    report("10a", worst >= 0.0 && fast, format!("min(defect - (rho.lo - 1e-6)) = {worst:e}; {time}"));
}

#[test]
fn criterion_10b_unicyclic_defect_close() {
    let t = Instant::now();
    let mut worst = 0.0f64;
    let mut monotone = true;
    for g in unicyclic_sample() {
        let d = unicyclic_defect(g, 10_000).unwrap().value;
        let rho = rho_tree(g, 1e-9).unwrap();
        worst = worst.max((d - rho.value).abs());
        let seq: Vec<f64> = [10, 100, 1000, 10_000].iter().map(|&n| unicyclic_defect(g, n).unwrap().value).collect();
        monotone &= seq.windows(2).all(|w| w[0] <= w[1]);
    }
    let (fast, time) = within(t, Duration::from_secs(10));
    report(
        "10b",
        worst <= 1e-3 && monotone && fast,
        format!("max |defect - rho| = {worst:e}, nondecreasing in N: {monotone}; {time}"),
    );
}
