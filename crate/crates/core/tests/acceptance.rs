//! Acceptance checks, one line per criterion.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;

use common::*;
use specpart::bounds::*;
use specpart::designs::*;
use specpart::graph::generators::*;
use specpart::partition::*;
use specpart::spectral::*;
use specpart::Graph;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn par() -> SolveOptions {
    SolveOptions::default()
}

fn table_closed_forms() -> Check {
    let sqrt = |x: f64| x.sqrt();
    let mut rows: Vec<(String, Graph, [f64; 4])> = Vec::new();
    for p in 2..=5 {
        for a in 2..=5 {
            let (pf, af) = (p as f64, a as f64);
            rows.push((
                format!("K_{{{p}x{a}}}"),
                complete_multipartite_uniform(p, a).unwrap(),
                [pf * (af - 1.0) + 1.0, af * af, (-1.0 + sqrt(8.0 * pf * af + 1.0)) / 2.0, af],
            ));
        }
    }
    for s in 2..=6 {
        let sf = s as f64;
        rows.push((
            format!("co-C_{}", 2 * s + 1),
            cycle_complement(2 * s + 1).unwrap(),
            [
                sf + 1.0,
                (4.0 * sf + 2.0) / sf,
                (-1.0 + sqrt(16.0 * sf + 9.0)) / 2.0,
                2.0 * (2.0 * std::f64::consts::PI / (2.0 * sf + 1.0)).cos() + 1.0,
            ],
        ));
    }
    for v in 4..=8 {
        let vf = v as f64;
        rows.push((format!("T({v})"), triangular(v).unwrap(), [vf, vf, vf - 1.0, 2.0]));
    }
    for v in 2..=8 {
        let vf = v as f64;
        let r = sqrt(8.0 * vf + 1.0);
        rows.push((
            format!("F_{v}"),
            friendship(v).unwrap(),
            [(-1.0 + r) / 2.0, (4.0 * vf - 1.0 + r) / 6.0, (-1.0 + sqrt(8.0 * vf + 9.0)) / 2.0, (-1.0 + r) / 2.0],
        ));
    }
    let mut worst = 0.0f64;
    for (name, g, expected) in &rows {
        let got = [
            cp_lower_bound(g).map_err(|e| format!("{name}: {e}"))?.raw,
            cp_via_pi_bound(g).map_err(|e| format!("{name}: {e}"))?.raw,
            hoffman_q_bound(g).map_err(|e| format!("{name}: {e}"))?.raw,
            hoffman_lambda_bound(g).map_err(|e| format!("{name}: {e}"))?.raw,
        ];
        for (k, (x, y)) in got.iter().zip(expected).enumerate() {
            let r = (x - y).abs();
            worst = worst.max(r);
            ensure(r <= 1e-6, || format!("{name} column {k}: evaluated {x}, closed form {y}"))?;
        }
    }
    Ok(format!("{} rows, max residual {worst:.1e}", rows.len()))
}

fn exact_values() -> Check {
    let chain = triangle_chain();
    let cp = solve_cp(&chain, &par()).map_err(|e| e.to_string())?.optimum;
    let pi = solve_pi(&chain, &par()).map_err(|e| e.to_string())?.optimum;
    let omega = specpart::cliques::clique_number(&chain);
    ensure((cp, pi, omega) == (3, 9, 3), || format!("triangle chain: cp {cp}, pi {pi}, omega {omega}"))?;
    for v in [4, 5] {
        let cp = solve_cp(&triangular(v).unwrap(), &par()).map_err(|e| e.to_string())?.optimum;
        ensure(cp == v, || format!("cp(T({v})) = {cp}"))?;
    }
    for v in [2, 3, 4] {
        let cp = solve_cp(&friendship(v).unwrap(), &par()).map_err(|e| e.to_string())?.optimum;
        ensure(cp == v, || format!("cp(F_{v}) = {cp}"))?;
    }
    for n in 2..=7 {
        let k = complete(n).unwrap();
        let plain = solve_cp(&k, &par()).map_err(|e| e.to_string())?.optimum;
        ensure(plain == 1, || format!("cp(K_{n}) = {plain}"))?;
        if n >= 3 {
            let ex = solve_cp(&k, &par().excluding_trivial()).map_err(|e| e.to_string())?.optimum;
            ensure(ex == n, || format!("cp(K_{n}) without the trivial partition = {ex}"))?;
        }
    }
    Ok("triangle chain (3, 9, ω 3), T(4..5), F_2..4, K_2..7 both ways".into())
}

fn expected_pattern(n: usize, t: usize, k: usize, v: usize) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for (value, mult) in [((k * (t - 1)) as f64, 1), (t as f64 - 1.0 - k as f64, v - 1), (-(k as f64), n - v)] {
        if mult == 0 {
            continue;
        }
        match out.iter_mut().find(|(x, _)| (*x - value).abs() < 1e-9) {
            Some(entry) => entry.1 += mult,
            None => out.push((value, mult)),
        }
    }
    out.sort_by(|a, b| b.0.total_cmp(&a.0));
    out
}

fn block_graph_equality() -> Check {
    let corpus: Vec<(String, Design)> = vec![
        ("pairs(4)".into(), trivial_pair_design(4).unwrap()),
        ("pairs(5)".into(), trivial_pair_design(5).unwrap()),
        ("pairs(6)".into(), trivial_pair_design(6).unwrap()),
        ("Fano".into(), projective_plane(2).unwrap()),
        ("AG(2,2)".into(), affine_plane(2).unwrap()),
        ("AG(2,3)".into(), affine_plane(3).unwrap()),
        ("PG(2,3)".into(), projective_plane(3).unwrap()),
        ("STS(9)".into(), bose_sts(9).unwrap()),
    ];
    let mut confirmed = 0;
    for (name, d) in &corpus {
        let params = validate_design(d).map_err(|e| format!("{name}: {e}"))?;
        let bg = block_graph(d).map_err(|e| format!("{name}: {e}"))?;
        let (g, t) = (&bg.graph, bg.t);
        ensure(t == params.r, || format!("{name}: t {t} != r {}", params.r))?;

        let bound = cp_t_lower_bound(g, t).map_err(|e| format!("{name}: {e}"))?;
        ensure((bound.raw - params.v as f64).abs() <= 1e-9 && bound.strengthened == params.v as i64, || {
            format!("{name}: bound {} vs v = {}", bound.raw, params.v)
        })?;
        if g.m() <= DEFAULT_EDGE_LIMIT {
            let exact = solve_cp_t(g, t, &par()).map_err(|e| format!("{name}: {e}"))?.optimum;
            ensure(exact == params.v, || format!("{name}: solver cp_t = {exact}, v = {}", params.v))?;
            confirmed += 1;
        }

        let report = classify_equality(g, t, EqualityTarget::CliqueCount, &par()).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.equality_diagnosis == EqualityDiagnosis::AttainedWithCertificate, || {
            format!("{name}: diagnosis {:?}", report.equality_diagnosis)
        })?;
        let Some(Certificate::Design(rebuilt)) = &report.certificate else {
            return Err(format!("{name}: no design certificate"));
        };
        let p2 = validate_design(rebuilt).map_err(|e| format!("{name}: rebuilt design invalid: {e}"))?;
        ensure(p2 == params, || format!("{name}: rebuilt {p2:?} vs {params:?}"))?;

        let k = g.min_degree() / (t - 1);
        let expected = expected_pattern(g.n(), t, k, params.v);
        let spectrum = graph_spectrum(g).map_err(|e| e.to_string())?;
        let grouped = spectrum.grouped();
        ensure(
            grouped.len() == expected.len()
                && grouped
                    .iter()
                    .zip(&expected)
                    .all(|(&(x, m), &(y, n))| (x - y).abs() <= TAU_GROUP && m == n),
            || format!("{name}: spectrum {grouped:?}, expected {expected:?}"),
        )?;
    }
    Ok(format!("{} designs attained, {confirmed} confirmed by the solver", corpus.len()))
}

fn total_size_equality() -> Check {
    let k7 = complete(7).unwrap();
    let oct = complete_multipartite(&[2, 2, 2]).unwrap();
    for (name, g, pi, kt) in [("K_7", &k7, 21, 7), ("K_{2,2,2}", &oct, 12, 4)] {
        let pi_bound = pi_t_lower_bound(g, 3).map_err(|e| e.to_string())?;
        let kt_bound = kt_upper_bound(g, 3).map_err(|e| e.to_string())?;
        let pi_exact = solve_pi_t(g, 3, &par()).map_err(|e| e.to_string())?.optimum;
        let kt_exact = solve_kt(g, 3, &par()).map_err(|e| e.to_string())?.optimum;
        ensure(
            (pi_bound.raw - pi as f64).abs() < 1e-9 && pi_exact == pi && (kt_bound.raw - kt as f64).abs() < 1e-9 && kt_exact == kt,
            || format!("{name}: pi_3 {pi_exact} vs bound {}, k_3 {kt_exact} vs bound {}", pi_bound.raw, kt_bound.raw),
        )?;
        for target in [EqualityTarget::TotalSize, EqualityTarget::Packing] {
            let r = classify_equality(g, 3, target, &par()).map_err(|e| e.to_string())?;
            ensure(r.equality_diagnosis == EqualityDiagnosis::AttainedWithCertificate, || {
                format!("{name} {target:?}: {:?}", r.equality_diagnosis)
            })?;
        }
    }
    let f2 = friendship(2).unwrap();
    let bound = pi_t_lower_bound(&f2, 3).map_err(|e| e.to_string())?.raw;
    let exact = solve_pi_t(&f2, 3, &par()).map_err(|e| e.to_string())?.optimum;
    let diag = classify_equality(&f2, 3, EqualityTarget::TotalSize, &par())
        .map_err(|e| e.to_string())?
        .equality_diagnosis;
    let expected = (1.0 + 17f64.sqrt()) / 2.0 + 3.0;
    ensure(
        (bound - expected).abs() < 1e-9 && exact == 6 && exact as f64 > bound + 1e-6 && diag == EqualityDiagnosis::NotAttained,
        || format!("F_2: pi_3 {exact}, bound {bound}, {diag:?}"),
    )?;
    Ok(format!("K_7 (21, 7), octahedron (12, 4) attained; F_2 6 > {bound:.4}"))
}

struct Solved {
    n: usize,
    cp3: usize,
    pi: usize,
}

fn oracle_equivalence(solved: &mut Vec<Solved>) -> Check {
    let mut rng = rng(0x5eed_0005);
    let mut graphs = 0;
    let mut comparisons = 0;
    while graphs < 200 {
        let g = random_connected(&mut rng, 3..=7, 21);
        graphs += 1;
        let omega = naive_omega(&g);
        let (cp, pi) = naive_cp_pi(&g, g.n());

        let mut ts: Vec<usize> = vec![2, 3, omega];
        ts.sort_unstable();
        ts.dedup();
        for &t in ts.iter().filter(|&&t| t >= 2) {
            let (want_cp, want_pi) = naive_cp_pi(&g, t);
            let got_cp = solve_cp_t(&g, t, &par()).map_err(|e| e.to_string())?;
            let got_pi = solve_pi_t(&g, t, &par()).map_err(|e| e.to_string())?;
            ensure(got_cp.optimum == want_cp && got_pi.optimum == want_pi, || {
                format!("{g:?} t = {t}: solver ({}, {}), naive ({want_cp}, {want_pi})", got_cp.optimum, got_pi.optimum)
            })?;
            for w in [&got_cp.witness, &got_pi.witness] {
                let cliques: Vec<Vec<usize>> = w.cliques().iter().map(|c| c.vertices().to_vec()).collect();
                ensure(gram_identities_hold(&g, &cliques), || format!("{g:?}: Gram identities fail"))?;
            }
            let lo_cp = cp_t_lower_bound(&g, t).map_err(|e| e.to_string())?;
            let lo_pi = pi_t_lower_bound(&g, t).map_err(|e| e.to_string())?;
            ensure(lo_cp.strengthened <= want_cp as i64 && lo_pi.strengthened <= want_pi as i64, || {
                format!("{g:?} t = {t}: bounds {} / {} above exact", lo_cp.strengthened, lo_pi.strengthened)
            })?;
            if t == 3 {
                solved.push(Solved { n: g.n(), cp3: want_cp, pi });
            }
            comparisons += 2;
        }
        for &t in ts.iter().filter(|&&t| t >= 3) {
            let want = naive_kt(&g, t);
            let got = solve_kt(&g, t, &par()).map_err(|e| e.to_string())?;
            ensure(got.optimum == want, || format!("{g:?} t = {t}: k_t solver {}, naive {want}", got.optimum))?;
            let up = kt_upper_bound(&g, t).map_err(|e| e.to_string())?;
            ensure(up.strengthened >= want as i64, || format!("{g:?}: kt bound {} < {want}", up.strengthened))?;
            comparisons += 1;
        }

        let facts = GraphFacts::compute(&g).map_err(|e| e.to_string())?;
        for r in [
            cp_lower_bound_with(&facts),
            cp_via_pi_bound_with(&facts),
            hoffman_eigencount_with(&facts),
            hoffman_min_eigenvalue_with(&facts),
        ] {
            let r = r.map_err(|e| e.to_string())?;
            ensure(r.strengthened <= cp as i64, || format!("{g:?}: {} = {} > cp {cp}", r.name.as_str(), r.strengthened))?;
        }
        let r = pi_lower_bound_with(&facts).map_err(|e| e.to_string())?;
        ensure(r.strengthened <= pi as i64, || format!("{g:?}: pi bound {} > {pi}", r.strengthened))?;
    }
    Ok(format!("{graphs} graphs, {comparisons} solver/oracle comparisons"))
}

fn upper_bound_sanity(solved: &[Solved]) -> Check {
    let mut count = 0;
    for s in solved {
        ensure(s.cp3 <= s.n * s.n / 4, || format!("cp_3 = {} > n²/4 at n = {}", s.cp3, s.n))?;
        ensure(2 * s.pi <= s.n * s.n, || format!("pi = {} > n²/2 at n = {}", s.pi, s.n))?;
        count += 1;
    }
    let families = [
        complete(7).unwrap(),
        complete_multipartite_uniform(3, 3).unwrap(),
        triangular(5).unwrap(),
        friendship(4).unwrap(),
        cycle_complement(7).unwrap(),
        petersen(),
        triangle_chain(),
    ];
    for g in &families {
        let n = g.n();
        let cp3 = solve_cp_t(g, 3, &par()).map_err(|e| e.to_string())?.optimum;
        let pi = solve_pi(g, &par()).map_err(|e| e.to_string())?.optimum;
        ensure(cp3 <= n * n / 4 && 2 * pi <= n * n, || format!("{g:?}: cp_3 {cp3}, pi {pi}"))?;
        count += 1;
    }
    Ok(format!("{count} solved instances"))
}

fn spectral_module() -> Check {
    let mut corpus: Vec<Graph> = (1..=7).flat_map(all_graphs).collect();
    let exhaustive = corpus.len();
    let mut rng = rng(0x5eed_0007);
    for _ in 0..300 {
        let p = rng.gen_range(0.1..0.9);
        corpus.push(random_graph(&mut rng, 8, p));
    }
    corpus.extend([
        complete(8).unwrap(),
        complete_multipartite(&[2, 3, 3]).unwrap(),
        cycle(8).unwrap(),
        cycle_complement(7).unwrap(),
        path(8).unwrap(),
        friendship(3).unwrap(),
        triangle_chain(),
    ]);

    let mut worst = 0.0f64;
    for g in &corpus {
        let got = graph_spectrum(g).map_err(|e| e.to_string())?;
        let want = oracle_eigenvalues(&adjacency(g));
        ensure(got.eigenvalues().len() == want.len(), || format!("{g:?}: length mismatch"))?;
        for (x, y) in got.eigenvalues().iter().zip(&want) {
            worst = worst.max((x - y).abs());
        }
        ensure(worst <= 1e-7, || format!("{g:?}: eigenvalue error {worst:.2e}"))?;

        if g.n() >= 2 && is_connected(g) {
            let rho = got.largest();
            let n1 = (g.n() - 1) as f64;
            let complete = g.m() == g.n() * (g.n() - 1) / 2;
            ensure(rho <= n1 + TAU_EIG && ((n1 - rho).abs() <= TAU_EIG) == complete, || {
                format!("{g:?}: ρ = {rho} against n - 1")
            })?;
            let a = SymMatrix::adjacency(g);
            let r = max_row_sum(&a).map_err(|e| e.to_string())?;
            let sums = a.row_sums();
            let equal_rows = sums.iter().all(|s| (s - sums[0]).abs() <= TAU_EIG);
            ensure(rho <= r + TAU_EIG && ((r - rho).abs() <= TAU_EIG) == equal_rows, || {
                format!("{g:?}: ρ = {rho}, max row sum {r}")
            })?;
        }
    }

    for trial in 0..100 {
        let n = rng.gen_range(2..=8);
        let mut ia = vec![vec![0i64; n]; n];
        let mut ib = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                ia[i][j] = rng.gen_range(-4..=4);
                ia[j][i] = ia[i][j];
                ib[i][j] = rng.gen_range(-4..=4);
                ib[j][i] = ib[i][j];
            }
        }
        let sum: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| ia[i][j] + ib[i][j]).collect()).collect();
        let (ea, eb, es) = (oracle_eigenvalues(&ia), oracle_eigenvalues(&ib), oracle_eigenvalues(&sum));
        let a = SymMatrix::from_upper(n, |i, j| ia[i][j] as f64);
        let b = SymMatrix::from_upper(n, |i, j| ib[i][j] as f64);
        for i in 1..=n {
            for j in 1..=n {
                // Oracle side, 1-indexed descending eigenvalues.
                if j <= i {
                    ensure(es[i - 1] <= ea[j - 1] + eb[i - j] + 1e-9, || format!("trial {trial}: upper ({i},{j}) fails"))?;
                }
                if i <= j {
                    ensure(es[i - 1] >= ea[j - 1] + eb[i + n - j - 1] - 1e-9, || format!("trial {trial}: lower ({i},{j}) fails"))?;
                }
                let w = check_weyl(&a, &b, i, j).map_err(|e| e.to_string())?;
                ensure(w.upper != Some(false) && w.lower != Some(false), || format!("trial {trial}: library check ({i},{j}) fails"))?;
            }
        }
    }
    Ok(format!(
        "{} graphs ({exhaustive} = every graph up to isomorphism on n ≤ 7, plus n = 8 samples), max error {worst:.1e}, 100 Weyl trials",
        corpus.len()
    ))
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_specpart");
    let commands: &[&[&str]] = &[
        &["solve", "cp", "--family", "triangle-chain"],
        &["solve", "cp", "--family", "complete:7", "--exclude-trivial"],
        &["solve", "cp", "--family", "cycle-complement:9"],
        &["solve", "cp-t", "--t", "3", "--family", "triangular:5"],
        &["solve", "pi", "--family", "friendship:3"],
        &["solve", "pi-t", "--t", "3", "--family", "multipartite:2,2,2"],
        &["solve", "kt", "--t", "3", "--family", "complete:7"],
        &["solve", "kt", "--t", "3", "--family", "petersen"],
        &["solve", "kt", "--t", "4", "--family", "multipartite:4x3"],
        &["certify", "--t", "3", "--bound", "thm31", "--family", "complete:7"],
        &["certify", "--t", "4", "--bound", "thm31", "--family", "triangular:5"],
        &["certify", "--t", "4", "--bound", "thm31", "--family", "block-graph:sts:9"],
        &["certify", "--t", "3", "--bound", "thm41", "--family", "friendship:2"],
        &["certify", "--t", "3", "--bound", "prop42", "--family", "multipartite:2,2,2"],
    ];
    let run = |args: &[&str], workers: &str, via_env: bool| -> Result<Vec<u8>, String> {
        let mut cmd = Command::new(bin);
        cmd.args(args).args(["--format", "json"]);
        if via_env {
            cmd.env("SPECPART_WORKERS", workers);
        } else {
            cmd.env_remove("SPECPART_WORKERS").args(["--workers", workers]);
        }
        let out = cmd.output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited with {}", out.status))?;
        Ok(out.stdout)
    };
    let mut runs = 0;
    for args in commands {
        let reference = run(args, "1", false)?;
        for (workers, via_env) in [("1", false), ("2", false), ("2", false), ("8", false), ("8", false), ("8", true)] {
            let again = run(args, workers, via_env)?;
            runs += 1;
            ensure(again == reference, || format!("{args:?} differs with {workers} workers"))?;
        }
    }
    Ok(format!("{} commands, {runs} reruns byte-identical", commands.len()))
}

fn main() {
    let mut failures = 0;
    let mut report = |id: u32, title: &str, limit: Option<Duration>, check: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(detail) => println!("criterion {id} PASS  {title}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("criterion {id} FAIL  {title}: {why} [{elapsed:.2?}]");
            }
        }
    };
    let mut solved = Vec::new();
    report(1, "closed forms of the family table", Some(Duration::from_secs(10)), &mut table_closed_forms);
    report(2, "exact values", Some(Duration::from_secs(60)), &mut exact_values);
    report(3, "clique-count equality on block graphs", None, &mut block_graph_equality);
    report(4, "total-size and packing equality", None, &mut total_size_equality);
    report(5, "solvers against exhaustive oracles", Some(Duration::from_secs(300)), &mut || {
        oracle_equivalence(&mut solved)
    });
    report(6, "upper-bound sanity", None, &mut || upper_bound_sanity(&solved));
    report(7, "spectral module", None, &mut spectral_module);
    report(8, "determinism across runs and worker counts", None, &mut determinism);
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
