//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.
//!
//! Run with `cargo test -p tripack --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

mod common;

use std::collections::BTreeSet;

use common::{family_small, larger, uniform_small, Case};
use tripack::cli;
use tripack::dp::{base_case, enumerate_states, DpValue};
use tripack::gen::{generate, GenParams, GenSpec, Model};
use tripack::graph::{
    build_overlap_graph, sweep_maximal_cliques, CliqueArrangement, MaximalClique,
};
use tripack::oracle::{brute_force_max_packing, verify_packing};
use tripack::{bench, solve, AdjacencyGraph, VertexId};

fn verdict(name: &str, ok: bool, detail: &str) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

fn solve_case(case: &Case) -> (CliqueArrangement, tripack::Solution) {
    let arr = sweep_maximal_cliques(&case.instance).unwrap();
    let sol = solve(&arr).unwrap_or_else(|e| panic!("{}: {e}", case.label));
    (arr, sol)
}

fn every_suite() -> Vec<Case> {
    let mut cases = uniform_small(1000);
    for model in [
        Model::UnitInterval,
        Model::NestedCliques,
        Model::DisjointTriangles,
        Model::SingleClique,
    ] {
        cases.extend(family_small(model, 200));
    }
    cases.extend(larger());
    cases
}

#[test]
fn oracle_equivalence() {
    let mut cases = uniform_small(1000);
    for model in [
        Model::UnitInterval,
        Model::NestedCliques,
        Model::DisjointTriangles,
        Model::SingleClique,
    ] {
        cases.extend(family_small(model, 200));
    }
    let mut mismatches = Vec::new();
    for case in &cases {
        let (_, sol) = solve_case(case);
        let oracle = brute_force_max_packing(&build_overlap_graph(&case.instance)).unwrap();
        if oracle.count != sol.count {
            mismatches.push(format!(
                "{} (dp {}, oracle {})",
                case.label, sol.count, oracle.count
            ));
        }
    }
    let detail = match mismatches.first() {
        None => format!("{} instances, all counts equal", cases.len()),
        Some(first) => format!(
            "{}/{} instances differ; first: {first}",
            mismatches.len(),
            cases.len()
        ),
    };
    verdict("oracle equivalence", mismatches.is_empty(), &detail);
}

#[test]
fn closed_form_families() {
    let mut bad = Vec::new();
    for n in 1..=60 {
        let inst = generate(&GenSpec::new(Model::SingleClique, n, n as u64)).unwrap();
        let sol = solve(&sweep_maximal_cliques(&inst).unwrap()).unwrap();
        if sol.count != n / 3 {
            bad.push(format!("single-clique n={n}: {}", sol.count));
        }
    }
    for m in 1..=20 {
        let inst = generate(&GenSpec::new(Model::DisjointTriangles, 3 * m, m as u64)).unwrap();
        let sol = solve(&sweep_maximal_cliques(&inst).unwrap()).unwrap();
        if sol.count != m {
            bad.push(format!("disjoint-triangles m={m}: {}", sol.count));
        }
    }
    verdict(
        "closed-form families",
        bad.is_empty(),
        &format!("80 instances, wrong: {bad:?}"),
    );
}

#[test]
fn base_case_law() {
    let mut bad = Vec::new();
    let mut checked = 0;
    for m in 1..=12usize {
        let clique = MaximalClique::new(1, (0..m).map(VertexId));
        let table = base_case(&clique);
        for s in enumerate_states(&clique) {
            checked += 1;
            let rest = m - s.len();
            // Covering C_1 \ S exactly: the rest must split into triangles.
            let complete = AdjacencyGraph::from_edges(
                rest,
                (0..rest).flat_map(|u| (u + 1..rest).map(move |v| (u, v))),
            );
            let best = brute_force_max_packing(&complete).unwrap().count;
            let exact_cover = 3 * best == rest;
            let expected = if s.len() == m % 3 {
                DpValue::Feasible((m / 3) as u32)
            } else {
                DpValue::Infeasible
            };
            let got = table.value(&s).unwrap();
            if got != expected || exact_cover != (s.len() == m % 3) {
                bad.push(format!("|C_1|={m} S={s}: {got:?}"));
            }
        }
    }
    verdict(
        "base-case law",
        bad.is_empty(),
        &format!("{checked} states checked, wrong: {bad:?}"),
    );
}

#[test]
fn packing_validity() {
    let cases = every_suite();
    let mut bad = Vec::new();
    for case in &cases {
        let (_, sol) = solve_case(case);
        let report = verify_packing(&build_overlap_graph(&case.instance), &sol.packing);
        if !report.is_valid() || sol.packing.len() != sol.count {
            bad.push(format!("{}: {:?}", case.label, report.violations));
        }
    }
    verdict(
        "packing validity",
        bad.is_empty(),
        &format!(
            "{} instances, {} violations {bad:?}",
            cases.len(),
            bad.len()
        ),
    );
}

#[test]
fn maximality_property() {
    let cases = every_suite();
    let mut bad = Vec::new();
    for case in &cases {
        let (arr, sol) = solve_case(case);
        let covered: BTreeSet<VertexId> = sol.packing.covered().into_iter().collect();
        for c in arr.cliques() {
            let uncovered = c.members().iter().filter(|v| !covered.contains(v)).count();
            if uncovered > 2 {
                bad.push(format!(
                    "{} clique {}: {uncovered} uncovered",
                    case.label, c.index
                ));
            }
        }
    }
    verdict(
        "maximality",
        bad.is_empty(),
        &format!(
            "{} instances, {} violations {bad:?}",
            cases.len(),
            bad.len()
        ),
    );
}

#[test]
fn complexity_tracks_work_term() {
    let config = bench::BenchConfig {
        sizes: vec![100, 200, 400, 800],
        model: Model::NestedCliques,
        seed: 7,
        reps: 2,
        params: GenParams::default(),
    };
    let rows = bench::run(&config).unwrap();
    // Fastest repetition per size.
    let best: Vec<&bench::BenchRow> = config
        .sizes
        .iter()
        .map(|&n| {
            rows.iter()
                .filter(|r| r.n == n)
                .min_by_key(|r| r.elapsed_ns)
                .unwrap()
        })
        .collect();
    let ratios: Vec<f64> = best.iter().map(|r| r.ratio()).collect();
    let spread = ratios.iter().cloned().fold(f64::MIN, f64::max)
        / ratios.iter().cloned().fold(f64::MAX, f64::min);
    let slope = bench::log_log_slope(
        &best
            .iter()
            .map(|r| (r.n as f64, r.elapsed_ns as f64))
            .collect::<Vec<_>>(),
    );
    let detail = format!(
        "ns/work {:?}, spread {spread:.2} (limit 4), log-log slope {slope:.2} (limit 5.5)",
        ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>()
    );
    verdict("complexity", spread <= 4.0 && slope <= 5.5, &detail);
}

fn run_cli(args: &[&str]) -> (u8, Vec<u8>) {
    let mut out = Vec::new();
    let code = cli::run(
        std::iter::once("tripack").chain(args.iter().copied()),
        &mut out,
    );
    (code, out)
}

#[test]
fn determinism() {
    let dir = tempfile::tempdir().unwrap();
    let mut bad = Vec::new();
    for model in Model::ALL {
        let n = if model == Model::DisjointTriangles {
            "30"
        } else {
            "31"
        };
        let mut files = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{model}-{run}.txt"));
            let (code, _) = run_cli(&[
                "gen",
                "--model",
                model.name(),
                "--n",
                n,
                "--seed",
                "99",
                "-o",
                path.to_str().unwrap(),
            ]);
            assert_eq!(code, 0);
            files.push(path);
        }
        if std::fs::read(&files[0]).unwrap() != std::fs::read(&files[1]).unwrap() {
            bad.push(format!("{model}: instance files differ"));
        }
        let mut reports = Vec::new();
        let mut packings = Vec::new();
        for path in &files {
            let (_, json) = run_cli(&["solve", path.to_str().unwrap(), "--json"]);
            let mut report: cli::SolveReport = serde_json::from_slice(&json).unwrap();
            report.elapsed_ms = 0.0;
            reports.push(report);
            packings.push(run_cli(&["solve", path.to_str().unwrap(), "--format", "packing"]).1);
        }
        if reports[0] != reports[1] {
            bad.push(format!("{model}: reports differ"));
        }
        if packings[0] != packings[1] {
            bad.push(format!("{model}: packings differ"));
        }
    }
    verdict(
        "determinism",
        bad.is_empty(),
        &format!("5 models x 2 runs, differences: {bad:?}"),
    );
}

fn invariance_cases() -> Vec<Case> {
    (0..100u64)
        .map(|seed| {
            let n = 5 + (seed % 20) as usize;
            let spec = GenSpec::new(Model::UniformRandom, n, 5000 + seed);
            Case {
                label: format!("uniform-random n={n} seed={}", 5000 + seed),
                instance: generate(&spec).unwrap(),
            }
        })
        .collect()
}

#[test]
fn invariance_relabeling() {
    let mut bad = Vec::new();
    for (i, case) in invariance_cases().iter().enumerate() {
        let n = case.instance.len();
        // Deterministic permutation: multiply by a unit mod n, then reverse.
        let step = (1..n).rev().find(|s| gcd(*s, n) == 1).unwrap_or(1);
        let perm: Vec<usize> = (0..n).map(|v| n - 1 - (v * step + i) % n).collect();
        let base = solve_case(case).1.count;
        let relabeled = Case {
            label: case.label.clone(),
            instance: case.instance.permuted(&perm),
        };
        let other = solve_case(&relabeled).1.count;
        if base != other {
            bad.push(format!("{}: {base} vs {other}", case.label));
        }
    }
    verdict(
        "invariance (relabeling)",
        bad.is_empty(),
        &format!("100 instances, {} differ {bad:?}", bad.len()),
    );
}

#[test]
fn invariance_reflection() {
    let mut bad = Vec::new();
    for case in invariance_cases() {
        let base = solve_case(&case).1.count;
        let mirrored = Case {
            label: case.label.clone(),
            instance: case.instance.reflected(),
        };
        let other = solve_case(&mirrored).1.count;
        if base != other {
            bad.push(format!("{}: {base} vs {other}", case.label));
        }
    }
    let detail = format!(
        "100 instances, {} differ; first: {:?}",
        bad.len(),
        bad.first()
    );
    verdict("invariance (reflection)", bad.is_empty(), &detail);
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
