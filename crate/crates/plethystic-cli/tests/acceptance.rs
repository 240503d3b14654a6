//! End-to-end acceptance run: every criterion at zero tolerance, one line each.
//!
//! Runs without the libtest harness so the per-criterion lines always reach
//! the terminal; the process exits nonzero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use rayon::prelude::*;

use plethystic::oracle::{oracle_dual_pi_schur, oracle_pi_schur, oracle_plethysm, oracle_product, plethysm_alphabet};
use plethystic::series::{dual_pi_schur, pi_schur};
use plethystic::verifier::{
    verify_clifford, verify_inverse_series, verify_multivertex, verify_reordering, verify_theorem2,
    verify_zero_modes, CliffordConfig, InverseSeriesConfig, MultivertexConfig, ReorderingConfig, Suite,
    SuiteConfig, Theorem2Config, VerificationReport, ZeroModesConfig,
};
use plethystic::vertex::{vertex_string, ReorderCase};
use plethystic::{partitions_of, plethysm, Partition, SymFunc};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn all_partitions(max_weight: usize, max_length: Option<usize>) -> Vec<Partition> {
    (0..=max_weight).flat_map(|w| partitions_of(w, max_length, None)).collect()
}

fn nonempty_partitions(max_weight: usize) -> Vec<Partition> {
    (1..=max_weight).flat_map(|w| partitions_of(w, None, None)).collect()
}

fn report_verdict(report: plethystic::Result<VerificationReport>) -> Verdict {
    let report = report.map_err(|e| format!("error: {e}"))?;
    if report.passed() {
        Ok(format!("{} cases", report.cases_run))
    } else {
        let first = report.failures.first().map(|f| f.inputs.to_string()).unwrap_or_default();
        Err(format!("{} of {} cases failed, first {first}", report.failures.len(), report.cases_run))
    }
}

/// Fails with the count and the first (sorted) description of any mismatch.
fn tally<I>(checks: I) -> Verdict
where
    I: ParallelIterator<Item = Result<(), String>>,
{
    let mut failures: Vec<String> = checks.filter_map(|r| r.err()).collect();
    failures.sort();
    if failures.is_empty() {
        Ok(String::new())
    } else {
        Err(format!("{} mismatches, first {}", failures.len(), failures[0]))
    }
}

fn clifford() -> Verdict {
    let config = CliffordConfig::default();
    let expected: Vec<Partition> = [&[][..], &[2], &[1, 1], &[3], &[2, 1], &[4]].iter().map(|x| p(x)).collect();
    if config.pis != expected || config.modes != (-3, 3) || config.degree_bound != 5 || config.charges != (-1, 1) {
        return Err(format!("default configuration drifted: {config:?}"));
    }
    report_verdict(verify_clifford(&config))
}

fn reordering() -> Verdict {
    let config = ReorderingConfig::default();
    let max_pi = config.pis.iter().map(Partition::weight).max().unwrap_or(0);
    if config.cases != ReorderCase::ALL.to_vec()
        || max_pi != 4
        || config.pis.len() != nonempty_partitions(4).len()
        || config.i_range != (0, 4)
        || config.j_range != (0, 4)
        || config.test_degree != 5
    {
        return Err(format!("default configuration drifted: {config:?}"));
    }
    report_verdict(verify_reordering(&config))
}

fn zero_modes() -> Verdict {
    let config = ZeroModesConfig::default();
    if config.charges != (-3, 3) {
        return Err(format!("default configuration drifted: {config:?}"));
    }
    report_verdict(verify_zero_modes(&config))
}

fn multivertex() -> Verdict {
    let config = MultivertexConfig::default();
    if config.pis != vec![p(&[2]), p(&[2, 1])]
        || config.lengths != vec![2, 3]
        || config.duals != vec![false, true]
        || config.window.1 != 3
        || config.inputs != vec![p(&[]), p(&[1])]
    {
        return Err(format!("default configuration drifted: {config:?}"));
    }
    report_verdict(verify_multivertex(&config))
}

fn four_routes() -> Verdict {
    let config = Theorem2Config::default();
    if config.pis != nonempty_partitions(4) || config.max_weight != 6 || config.max_length != 3 || !config.oracle {
        return Err(format!("default configuration drifted: {config:?}"));
    }
    let routes = report_verdict(verify_theorem2(&config))?;
    // The dual function against the conjugate relation, from the skew route.
    let pairs: Vec<(Partition, Partition)> = config
        .pis
        .iter()
        .flat_map(|pi| all_partitions(6, Some(3)).into_iter().map(move |l| (pi.clone(), l)))
        .collect();
    tally(pairs.par_iter().map(|(pi, lambda)| {
        let dual = dual_pi_schur(pi, lambda).map_err(|e| e.to_string())?;
        let plain = pi_schur(pi, &lambda.conjugate()).map_err(|e| e.to_string())?;
        let expected = if lambda.weight() % 2 == 1 { -plain } else { plain };
        if dual == expected {
            Ok(())
        } else {
            Err(format!("π={pi} λ={lambda}"))
        }
    }))?;
    Ok(format!("{routes}, {} conjugate checks", pairs.len()))
}

fn classical() -> Verdict {
    let lambdas = all_partitions(6, Some(3));
    tally(lambdas.par_iter().map(|lambda| {
        let value = vertex_string(&Partition::empty(), lambda, false).map_err(|e| e.to_string())?;
        if value == SymFunc::schur(lambda.clone()) {
            Ok(())
        } else {
            Err(format!("λ={lambda} gave {value}"))
        }
    }))?;
    Ok(format!("{} strings", lambdas.len()))
}

fn inverse_series() -> Verdict {
    let config = InverseSeriesConfig::default();
    if config.max_sigma_weight != 3 || config.series_degree != 12 || config.hook_weight != 12 || config.max_pi_weight != 4 {
        return Err(format!("default configuration drifted: {config:?}"));
    }
    report_verdict(verify_inverse_series(&config))
}

fn oracle() -> Verdict {
    let mut products = Vec::new();
    for total in 0..=10 {
        for a in 0..=total {
            for mu in partitions_of(a, None, None) {
                for nu in partitions_of(total - a, None, None) {
                    products.push((mu.clone(), nu));
                }
            }
        }
    }
    tally(products.par_iter().map(|(mu, nu)| {
        let main = SymFunc::schur(mu.clone()).product(&SymFunc::schur(nu.clone()));
        match oracle_product(mu, nu) {
            Ok(o) if o == main => Ok(()),
            Ok(_) => Err(format!("product {mu}·{nu}")),
            Err(e) => Err(format!("product {mu}·{nu}: {e}")),
        }
    }))?;

    let mut pleths = Vec::new();
    for a in 1..=10 {
        for b in 1..=10 / a {
            for outer in partitions_of(a, None, None) {
                for inner in partitions_of(b, None, None) {
                    pleths.push((outer.clone(), inner));
                }
            }
        }
    }
    tally(pleths.par_iter().map(|(outer, inner)| {
        let main = plethysm(&SymFunc::schur(outer.clone()), &SymFunc::schur(inner.clone())).map_err(|e| e.to_string())?;
        match oracle_plethysm(outer, inner, plethysm_alphabet(outer, inner)) {
            Ok(o) if o == main => Ok(()),
            Ok(_) => Err(format!("plethysm {outer}[{inner}]")),
            Err(e) => Err(format!("plethysm {outer}[{inner}]: {e}")),
        }
    }))?;

    let mut schur = Vec::new();
    for pi in nonempty_partitions(3) {
        for lambda in all_partitions(5, None) {
            schur.push((pi.clone(), lambda));
        }
    }
    tally(schur.par_iter().map(|(pi, lambda)| {
        let n = lambda.len().max(1);
        let plain = pi_schur(pi, lambda).map_err(|e| e.to_string())?;
        let dual = dual_pi_schur(pi, lambda).map_err(|e| e.to_string())?;
        let o_plain = oracle_pi_schur(pi, lambda, n).map_err(|e| e.to_string())?;
        let o_dual = oracle_dual_pi_schur(pi, lambda, n).map_err(|e| e.to_string())?;
        if plain == o_plain && dual == o_dual {
            Ok(())
        } else {
            Err(format!("π={pi} λ={lambda}"))
        }
    }))?;
    Ok(format!("{} products, {} plethysms, {} π-Schur pairs", products.len(), pleths.len(), schur.len()))
}

fn littlewood() -> Verdict {
    let mut pairs = Vec::new();
    for a in 1..=10 {
        for b in 1..=10 / a {
            for mu in partitions_of(a, None, None) {
                for nu in partitions_of(b, None, None) {
                    pairs.push((mu.clone(), nu));
                }
            }
        }
    }
    tally(pairs.par_iter().map(|(mu, nu)| {
        let lhs = plethysm(&SymFunc::schur(mu.clone()), &SymFunc::schur(nu.clone())).map_err(|e| e.to_string())?.omega();
        let outer = if nu.weight() % 2 == 0 { mu.clone() } else { mu.conjugate() };
        let rhs = plethysm(&SymFunc::schur(outer), &SymFunc::schur(nu.conjugate())).map_err(|e| e.to_string())?;
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("μ={mu} ν={nu}"))
        }
    }))?;
    Ok(format!("{} pairs", pairs.len()))
}

fn mutation() -> Verdict {
    let mut lines = Vec::new();
    for suite in Suite::ALL {
        let report = SuiteConfig::default_for(suite).perturbed().run().map_err(|e| format!("{}: {e}", suite.name()))?;
        if report.passed() {
            return Err(format!("perturbed {} suite passed", suite.name()));
        }
        lines.push(format!("{} {}/{}", suite.name(), report.failures.len(), report.cases_run));
    }
    Ok(lines.join(", "))
}

fn determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_plethystic");
    let run = |suite: Suite, jobs: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(["verify", suite.name(), "--format", "json", "--no-timing", "--jobs", jobs])
            .env_remove("PLETHYSTIC_CONFIG")
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("{} --jobs {jobs} exited with {}", suite.name(), out.status));
        }
        Ok(out.stdout)
    };
    for suite in Suite::ALL {
        if run(suite, "1")? != run(suite, "8")? {
            return Err(format!("{} output differs between 1 and 8 workers", suite.name()));
        }
    }
    Ok(format!("{} suites", Suite::ALL.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("clifford anticommutators", clifford),
        ("reordering of skew past multiply", reordering),
        ("zero-mode identities", zero_modes),
        ("multi-vertex normal ordering", multivertex),
        ("four-route pi-Schur agreement", four_routes),
        ("classical Schur recovery", classical),
        ("inverse series and hook pairing", inverse_series),
        ("monomial oracle equivalence", oracle),
        ("conjugate plethysm", littlewood),
        ("mutation sensitivity", mutation),
        ("worker-count determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
