//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::time::Instant;

use frs_lab::bounds;
use frs_lab::recovery;
use frs_lab::suite::{self, Summary};
use frs_lab::{AlphaRule, FrsCode, Rational};

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    summary: String,
    /// Serialized reports, compared byte-for-byte by the determinism check.
    artifact: String,
}

fn small() -> FrsCode {
    FrsCode::new(13, 3, 3, 4, AlphaRule::Default).unwrap()
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap()
}

fn pruning() -> Outcome {
    let code = small();
    let eps = Rational::new(1, 4);
    let runs = suite::prune_suite(&code, &eps, 4096, 100, SEED).unwrap();
    let sound = runs.iter().filter(|r| r.sound).count();
    let complete = runs.iter().filter(|r| r.complete).count();
    let nonempty = runs.iter().filter(|r| r.oracle_size > 0).count();
    let rho = code.relative_distance() - eps.clone();
    let reports: Vec<_> = runs.iter().map(|r| r.report(&eps, &rho)).collect();
    Outcome {
        pass: sound == 100 && complete >= 99,
        summary: format!(
            "rho={rho} sound {sound}/100, complete {complete}/100, nonempty lists {nonempty}"
        ),
        artifact: json(&(runs, reports)),
    }
}

fn gw_containment() -> Outcome {
    let code = small();
    let reps = suite::gw_containment_suite(&code, 2, 1000, SEED).unwrap();
    let s = Summary::of(&reps);
    let max_dim = reps.iter().map(|r| r.lhs.clone()).max().unwrap();
    Outcome {
        pass: s.holds == 1000,
        summary: format!(
            "contained with dim <= 1 in {}/1000, max dim {max_dim}",
            s.holds
        ),
        artifact: json(&reps),
    }
}

fn gk_and_wronskian() -> Outcome {
    let code = small();
    let gk = suite::gk_suite(&code, &[1, 2, 3], 1000, SEED).unwrap();
    let wr = suite::wronskian_suite(&code, &[1, 2, 3], 200, SEED + 1).unwrap();
    let (sg, sw) = (Summary::of(&gk), Summary::of(&wr));
    let tight = gk.iter().filter(|r| r.lhs == r.rhs).count();
    Outcome {
        pass: sg.holds == 1000 && sw.holds == 200,
        summary: format!(
            "GK {}/1000 ({tight} tight), Wronskian {}/200",
            sg.holds, sw.holds
        ),
        artifact: json(&(gk, wr)),
    }
}

fn srivastava() -> Outcome {
    let code = small();
    let mut all = Vec::new();
    let mut lines = Vec::new();
    for r in 1..=code.s() {
        for t in r..=code.s() {
            let reps =
                suite::srivastava_suite(&code, r, t, 500, SEED + (10 * r + t) as u64).unwrap();
            let s = Summary::of(&reps);
            let max = reps.iter().map(|x| x.lhs.clone()).max().unwrap();
            lines.push(format!("(r={r},t={t}) {}/500 max {max}", s.holds));
            all.extend(reps);
        }
    }
    let s = Summary::of(&all);
    Outcome {
        pass: s.violations == 0 && s.holds == all.len(),
        summary: lines.join(", "),
        artifact: json(&all),
    }
}

fn chen_zhang() -> Outcome {
    let code = small();
    let rho = code.relative_distance() - Rational::new(1, 4);
    let edge = suite::cz_edge_suite(&code, &rho, 500, SEED).unwrap();
    let mut ok = Summary::of(&edge).holds == 500;
    let mut parts = vec![format!(
        "edge bound {}/500 at rho={rho}",
        Summary::of(&edge).holds
    )];
    let mut artifacts = vec![json(&edge)];
    for t in 1..=code.s() {
        let random = suite::cz_theorem_suite(&code, t, 500, SEED + t as u64).unwrap();
        let fuzzed = suite::fuzz(&code, t, 100, 60, SEED + 100 + t as u64).unwrap();
        let adversarial: Vec<_> = fuzzed
            .iter()
            .map(|o| {
                bounds::check_cz_theorem(&code, &o.y, t)
                    .unwrap()
                    .with_seed(o.seed)
            })
            .collect();
        let (sr, sa) = (Summary::of(&random), Summary::of(&adversarial));
        let worst = fuzzed.iter().map(|o| o.list_size).max().unwrap();
        ok &= sr.holds == 500 && sa.holds == 100;
        parts.push(format!(
            "t={t}: random {}/500, fuzzed {}/100 (max list {worst})",
            sr.holds, sa.holds
        ));
        artifacts.push(json(&(random, adversarial)));
    }
    Outcome {
        pass: ok,
        summary: parts.join("; "),
        artifact: artifacts.join("\n"),
    }
}

fn parameter_chain() -> Outcome {
    let start = Instant::now();
    let eps = [
        Rational::new(1, 2),
        Rational::new(1, 4),
        Rational::new(1, 8),
    ];
    let reps = suite::parameter_chain_grid(&eps).unwrap();
    let elapsed = start.elapsed();
    let s = Summary::of(&reps);
    Outcome {
        pass: s.total == 60 && s.holds == 60 && elapsed.as_secs_f64() < 1.0,
        summary: format!(
            "{}/60 hold in regime, {:.1} ms",
            s.holds,
            elapsed.as_secs_f64() * 1e3
        ),
        artifact: json(&reps),
    }
}

fn list_recovery() -> Outcome {
    let code = FrsCode::new(13, 5, 2, 6, AlphaRule::Default).unwrap();
    let mut ok = true;
    let mut parts = Vec::new();
    let mut checks = Vec::new();
    for (ell, expected) in [(2usize, 4usize), (3, 9)] {
        let scalars: Vec<u64> = (1..=ell as u64).collect();
        let fam = recovery::build_counterexample(&code, 2, &scalars).unwrap();
        let chk = recovery::measure(&fam).unwrap();
        let rep = recovery::verify_counterexample(&fam).unwrap();
        ok &= chk.p == 4
            && chk.family_size == expected
            && chk.per_coord_sizes.len() == 4
            && chk.per_coord_sizes.iter().all(|&c| c <= ell)
            && chk.basis_degrees.iter().all(|&d| d == Some(4))
            && chk.independence_witness
            && rep.holds;
        parts.push(format!(
            "ell={ell}: |G|={} per-coord {:?}",
            chk.family_size, chk.per_coord_sizes
        ));
        checks.push((chk, rep));
    }
    Outcome {
        pass: ok,
        summary: parts.join("; "),
        artifact: json(&checks),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("pruning matches the oracle", pruning),
        ("interpolation space contains the list", gw_containment),
        ("slice-dimension and Wronskian bounds", gk_and_wronskian),
        ("affine-subspace list bound", srivastava),
        ("edge bound and list-size theorem", chen_zhang),
        ("parameter chain", parameter_chain),
        ("list-recovery family", list_recovery),
    ];
    let mut failures = 0;
    let mut first_artifacts = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        failures += usize::from(!out.pass);
        println!(
            "criterion {} [{name}]: {verdict} {} ({:.2} s)",
            i + 1,
            out.summary,
            start.elapsed().as_secs_f64()
        );
        first_artifacts.push(out.artifact);
    }
    let start = Instant::now();
    let same = criteria
        .iter()
        .zip(&first_artifacts)
        .filter(|((_, f), art)| f().artifact == **art)
        .count();
    let pass = same == criteria.len();
    failures += usize::from(!pass);
    println!(
        "criterion 8 [determinism]: {} {same}/{} criteria byte-identical on rerun ({:.2} s)",
        if pass { "PASS" } else { "FAIL" },
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
