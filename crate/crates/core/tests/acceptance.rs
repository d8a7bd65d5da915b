//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use sncs_core::air::verify_air;
use sncs_core::codec::{
    build_code, decoding_plan, encode, encode_with_matrix, oracle_decode, receiver_decode,
    MessageBlock,
};
use sncs_core::field::PrimeField;
use sncs_core::golden::{verify, Check, Corpus};
use sncs_core::problem::{ProblemParams, Rate};
use sncs_core::simulate::simulate;

fn gf(q: u32) -> PrimeField {
    PrimeField::new(q).unwrap()
}

/// Every valid `(K, D, U)` with `K <= max_k`; `strict` drops the `U + D = K - 1` boundary.
fn instances(max_k: usize, strict: bool) -> Vec<ProblemParams> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for d in 0..k {
            for u in 0..=d {
                if u + d + 1 > k || (strict && u + d + 2 > k) {
                    continue;
                }
                out.push(ProblemParams::new(k, d, u).unwrap());
            }
        }
    }
    out
}

/// Runs the golden checks whose labels start with any of `prefixes`.
fn golden(corpus: &Corpus, prefixes: &[&str]) -> Vec<Check> {
    verify(corpus)
        .into_iter()
        .filter(|c| prefixes.iter().any(|p| c.label.starts_with(p)))
        .collect()
}

fn all_pass(checks: &[Check], expected: usize) -> Result<String, String> {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(Check::to_string)
        .collect();
    if checks.len() != expected {
        return Err(format!("expected {expected} checks, ran {}", checks.len()));
    }
    if failed.is_empty() {
        Ok(format!("{} checks", checks.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn criterion_1() -> Result<String, String> {
    let labels = [
        "air 8x7", "air 11x9", "air 8x5", "air 7x6", "air 11x8", "air 7x5", "air 9x8",
    ];
    all_pass(&golden(&Corpus::standard(), &labels), 7)
}

fn criterion_2() -> Result<String, String> {
    let fields = [gf(2), gf(3), gf(5)];
    let shapes: Vec<(usize, usize)> = (1..=64)
        .flat_map(|m| (1..=m).map(move |n| (m, n)))
        .collect();
    let bad: Vec<(usize, usize)> = shapes
        .par_iter()
        .filter(|&&(m, n)| !verify_air(m, n, &fields).unwrap())
        .copied()
        .collect();
    if bad.is_empty() {
        Ok(format!("{} shapes over GF(2), GF(3), GF(5)", shapes.len()))
    } else {
        Err(format!("not AIR: {bad:?}"))
    }
}

fn criterion_3() -> Result<String, String> {
    let mut checked = 0;
    for p in instances(40, false) {
        let d = p.derive();
        if d.rate() != p.capacity() {
            return Err(format!(
                "{p}: rate {} but capacity {}",
                d.rate(),
                p.capacity()
            ));
        }
        if !p.is_boundary() {
            let literal = Rate::new(d.dimension, d.k_a - d.delta);
            let eq2 = Rate::new(p.before() + 1, p.messages() - p.after() + p.before());
            if literal != eq2 {
                return Err(format!(
                    "{p}: u_a/(K_a - delta) = {literal}, capacity {eq2}"
                ));
            }
        }
        checked += 1;
    }
    let ex1 = ProblemParams::new(8, 2, 1).unwrap().derive().rate();
    let ex2 = ProblemParams::new(22, 7, 3).unwrap().derive().rate();
    if ex1 != Rate::new(2, 7) || ex2 != Rate::new(2, 9) {
        return Err(format!("example rates {ex1}, {ex2}"));
    }
    Ok(format!(
        "{checked} instances; (8,2,1) gives 2/7 and (22,7,3) gives 2/9"
    ))
}

fn criterion_4() -> Result<String, String> {
    let cases: Vec<(ProblemParams, u32)> = instances(30, false)
        .into_iter()
        .flat_map(|p| [(p, 2), (p, 3)])
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|&(p, q)| {
            let spec = build_code(p, gf(q)).unwrap();
            let mut rng = SplitMix64::seed_from_u64(
                (p.messages() * 10_000 + p.after() * 100 + p.before()) as u64,
            );
            for block in 0..200 {
                let m = MessageBlock::random(p, gf(q), &mut rng);
                if encode(&m, &spec).unwrap() != encode_with_matrix(&m, &spec).unwrap() {
                    return Some(format!("{p} q={q} block {block}"));
                }
            }
            None
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} instance/field pairs x 200 blocks", cases.len()))
    } else {
        Err(bad.join(", "))
    }
}

fn criterion_5() -> Result<String, String> {
    all_pass(
        &golden(
            &Corpus::standard(),
            &[
                "listing K=24 D=11 U=2",
                "listing K=7 D=2 U=0",
                "listing K=14 D=3 U=1",
                "listing K=22 D=7 U=3",
            ],
        ),
        4,
    )
}

fn criterion_6() -> Result<String, String> {
    all_pass(
        &golden(
            &Corpus::standard(),
            &["plan K=8 D=2 U=1", "plan K=22 D=7 U=3"],
        ),
        2,
    )
}

fn criterion_7() -> Result<String, String> {
    let cases: Vec<(ProblemParams, u32)> = instances(30, true)
        .into_iter()
        .flat_map(|p| [(p, 2), (p, 3), (p, 5)])
        .collect();
    let results: Vec<(usize, Vec<String>)> = cases
        .par_iter()
        .map(|&(p, q)| {
            let seed =
                (q as u64) << 32 | (p.messages() * 10_000 + p.after() * 100 + p.before()) as u64;
            let report = simulate(p, gf(q), 20, seed).unwrap();
            let failures = report
                .failures
                .iter()
                .map(|f| {
                    format!(
                        "{p} q={q} trial {} receiver {}: {}",
                        f.trial, f.receiver, f.reason
                    )
                })
                .collect();
            (report.decoded, failures)
        })
        .collect();
    let decoded: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    if failures.is_empty() {
        Ok(format!(
            "{} instance/field pairs, {decoded} receiver decodes",
            cases.len()
        ))
    } else {
        Err(format!(
            "{} failures, first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn criterion_8() -> Result<String, String> {
    for (k, d, u, want) in [
        (8, 2, 1, true),
        (22, 7, 3, true),
        (24, 11, 2, true),
        (12, 5, 3, true),
        (27, 8, 5, false),
    ] {
        let p = ProblemParams::new(k, d, u).unwrap();
        if p.minimality_certified() != want {
            return Err(format!("{p}: certified = {}", !want));
        }
    }
    Ok("(8,2,1), (22,7,3), (24,11,2), (12,5,3) certified; (27,8,5) uncertified".to_string())
}

fn criterion_9() -> Result<String, String> {
    let standard = Corpus::standard();
    let mut controls = 0;

    // Flip every bit of every golden matrix, one at a time.
    for i in 0..standard.air.len() {
        let g = &standard.air[i];
        for r in 0..g.rows {
            for c in 0..g.cols {
                let mut corpus = standard.clone();
                corpus.air[i].matrix[r][c] ^= 1;
                let label = corpus.air[i].label;
                if golden(&corpus, &[label]).iter().all(|c| c.passed) {
                    return Err(format!("{label}: flipping ({r}, {c}) went unnoticed"));
                }
                controls += 1;
            }
        }
    }
    for i in 0..standard.encoding.len() {
        let g = &standard.encoding[i];
        for r in 0..g.matrix.len() {
            for c in 0..g.matrix[r].len() {
                let mut corpus = standard.clone();
                corpus.encoding[i].matrix[r][c] ^= 1;
                let label = corpus.encoding[i].label;
                if golden(&corpus, &[label]).iter().all(|c| c.passed) {
                    return Err(format!("{label}: flipping ({r}, {c}) went unnoticed"));
                }
                controls += 1;
            }
        }
    }

    let mut corpus = standard.clone();
    let table = corpus
        .plans
        .iter_mut()
        .find(|t| t.label.starts_with("plan K=22"))
        .unwrap();
    table.rows[6].sum = vec![6, 7];
    if golden(&corpus, &["plan K=22"]).iter().all(|c| c.passed) {
        return Err("altered decoding sum S_6 for K=22 went unnoticed".to_string());
    }
    controls += 1;

    // Dropping the last broadcast symbol must defeat some receiver.
    for (k, d, u, q) in [(8, 2, 1, 3), (22, 7, 3, 2), (24, 11, 2, 5), (7, 2, 0, 2)] {
        let p = ProblemParams::new(k, d, u).unwrap();
        let spec = build_code(p, gf(q)).unwrap();
        let plan = decoding_plan(&spec).unwrap();
        let m = MessageBlock::random(p, gf(q), &mut SplitMix64::seed_from_u64(3));
        let mut codeword = encode(&m, &spec).unwrap();
        codeword.pop();
        let oracle_fails = (0..k)
            .any(|r| oracle_decode(r, &codeword, &m.side_information(r).unwrap(), &spec).is_err());
        let receiver_fails = (0..k).all(|r| {
            receiver_decode(r, &codeword, &m.side_information(r).unwrap(), &spec, &plan).is_err()
        });
        if !oracle_fails || !receiver_fails {
            return Err(format!("{p}: truncated codeword still decoded"));
        }
        controls += 1;
    }
    Ok(format!("{controls} perturbations all detected"))
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<String, String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "AIR golden matrices",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            2,
            "AIR property sweep m <= 64",
            Duration::from_secs(120),
            criterion_2,
        ),
        (
            3,
            "capacity identities K <= 40",
            Duration::from_secs(5),
            criterion_3,
        ),
        (
            4,
            "encoding equivalence K <= 30",
            Duration::from_secs(60),
            criterion_4,
        ),
        (
            5,
            "golden code listings",
            Duration::from_secs(1),
            criterion_5,
        ),
        (
            6,
            "decoding-sum tables",
            Duration::from_secs(1),
            criterion_6,
        ),
        (
            7,
            "end-to-end decoding K <= 30",
            Duration::from_secs(600),
            criterion_7,
        ),
        (
            8,
            "minimality certificates",
            Duration::from_secs(1),
            criterion_8,
        ),
        (9, "negative controls", Duration::from_secs(1), criterion_9),
    ];
    let mut failed = 0;
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(_) if elapsed > budget => ("FAIL", format!("over the {budget:?} budget")),
            Ok(detail) => ("PASS", detail),
            Err(detail) => ("FAIL", detail),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {n}: {verdict} {name} ({elapsed:.2?}): {detail}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
