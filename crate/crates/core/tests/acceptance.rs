//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always show up in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ocwords::oracle::suites::{
    central_semicentral_laws, closed_extension_laws, closedness_oracle, period_laws, prefix_shape,
    roundtrip, run_inequality, standard_laws, uniqueness, SuiteResult,
};
use ocwords::sturmian::{
    oc_closed_form, reversed_standard_half, run_lengths_closed_form, square_factorization,
    standard_prefix,
};
use ocwords::{
    compute_border_array, compute_oc_sequence, reconstruct, runs, DirectiveSequence, OcSequence,
    Word,
};

/// Wall-clock budgets. The linear-time check gets its one second times the
/// permitted slack of five.
const FIXTURE_BUDGET: Duration = Duration::from_secs(1);
const FIBONACCI_BUDGET: Duration = Duration::from_secs(1);
const CLOSED_FORM_BUDGET: Duration = Duration::from_secs(10);
const FACTORIZATION_BUDGET: Duration = Duration::from_secs(1);
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(60);
const LINEAR_TIME_BUDGET: Duration = Duration::from_secs(1);
const LINEAR_TIME_SLACK: u32 = 5;

const FIBONACCI_LEN: usize = 1000;
const RANDOM_DIRECTIVES: usize = 50;
const RANDOM_DIRECTIVE_LEN: usize = 2000;
const BOUNDARY_DIRECTIVES: usize = 20;
const BOUNDARY_LEN: usize = 1000;
const ROUNDTRIP_MAX_N: usize = 16;
const CENSUS_MAX_N: usize = 14;
const BINARY_MAX_N: usize = 14;
const TERNARY_MAX_N: usize = 9;
const SHAPE_MAX_N: usize = 16;
const LONG_INPUT: usize = 1_000_000;
const SEED: u64 = 0x5eed_0c5e;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dir(s: &str) -> DirectiveSequence {
    s.parse().unwrap()
}

fn random_directives(rng: &mut StdRng, count: usize, max_digit: u64) -> Vec<DirectiveSequence> {
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            let digits = (0..len).map(|_| rng.gen_range(1..=max_digit)).collect();
            DirectiveSequence::new(digits).unwrap()
        })
        .collect()
}

fn suites(results: Vec<SuiteResult>) -> Outcome {
    let checks: usize = results.iter().map(|r| r.checked).sum();
    match results.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(format!(
            "{} suites, {checks} checks, 0 violations",
            results.len()
        )),
    }
}

fn reference_fixtures() -> Outcome {
    let oc = |w: &str| compute_oc_sequence(&Word::from(w)).to_string();
    ensure(oc("abcab") == "10011", || {
        format!("oc(abcab) = {}", oc("abcab"))
    })?;
    ensure(oc("abaaab") == "101001", || {
        format!("oc(abaaab) = {}", oc("abaaab"))
    })?;
    let b: String = compute_border_array(&Word::from("abcaacab"))
        .entries()
        .iter()
        .map(|v| v.to_string())
        .collect();
    ensure(b == "00011012", || format!("B(abcaacab) = {b}"))?;
    ensure(oc("abcaacab") == "10010001", || {
        format!("oc(abcaacab) = {}", oc("abcaacab"))
    })?;
    let d = dir("2,2,1");
    let closed = oc_closed_form(&d, 15)
        .map_err(|e| e.to_string())?
        .to_string();
    let direct = compute_oc_sequence(&standard_prefix(&d, 15).unwrap()).to_string();
    ensure(closed == "110011110000111" && direct == closed, || {
        format!("(2,2,1): closed form {closed}, direct {direct}")
    })?;
    Ok("5 fixtures bit-exact".into())
}

fn fibonacci_doubled_runs() -> Outcome {
    let d = DirectiveSequence::fibonacci();
    let oc = compute_oc_sequence(&standard_prefix(&d, FIBONACCI_LEN).unwrap());
    let got = runs(&oc);
    let lengths = got.lengths();
    let head = [1, 1, 1, 1, 2, 2, 3, 3, 5, 5, 8, 8, 13, 13];
    ensure(lengths.starts_with(&head), || {
        format!("runs start {lengths:?}")
    })?;
    let ks = run_lengths_closed_form(&d, lengths.len()).map_err(|e| e.to_string())?;
    let runs = got.runs();
    for (i, run) in runs.iter().enumerate() {
        let k = &ks[i / 2];
        ensure(run.bit == (i % 2 == 0), || {
            format!("run {i} has the wrong bit")
        })?;
        let last = i + 1 == runs.len();
        // The final run may be cut by the prefix length.
        let ok = if last {
            BigUint::from(run.len) <= *k
        } else {
            BigUint::from(run.len) == *k
        };
        ensure(ok, || format!("run {i}: length {} but k = {k}", run.len))?;
    }
    Ok(format!(
        "{} runs, doubled Fibonacci up to {}",
        runs.len(),
        ks[runs.len() / 2 - 1]
    ))
}

fn closed_form_vs_direct() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let dirs = random_directives(&mut rng, RANDOM_DIRECTIVES, 4);
    for d in &dirs {
        let direct = compute_oc_sequence(&standard_prefix(d, RANDOM_DIRECTIVE_LEN).unwrap());
        let closed = oc_closed_form(d, RANDOM_DIRECTIVE_LEN).map_err(|e| e.to_string())?;
        ensure(direct == closed, || format!("directive {d} differs"))?;
    }
    Ok(format!(
        "{} directives at N = {RANDOM_DIRECTIVE_LEN}",
        dirs.len()
    ))
}

fn factorization() -> Outcome {
    for (d, depth) in [(DirectiveSequence::fibonacci(), 10), (dir("2,2,1"), 7)] {
        let f = square_factorization(&d, depth).map_err(|e| e.to_string())?;
        let full = standard_prefix(&d, f.word().len()).unwrap();
        let mut acc = f.head.clone();
        ensure(full.starts_with(&acc), || {
            format!("{d}: head {} is not a prefix", f.head)
        })?;
        for (i, h) in f.halves.iter().enumerate() {
            let n = i + 1;
            let expected = reversed_standard_half(&d, n).map_err(|e| e.to_string())?;
            ensure(*h == expected, || {
                format!("{d}: half {n} = {h}, expected {expected}")
            })?;
            acc = acc.concat(h).concat(h);
            ensure(full.starts_with(&acc), || {
                format!("{d}: {n} squares not a prefix")
            })?;
        }
    }
    let f = square_factorization(&DirectiveSequence::fibonacci(), 4).map_err(|e| e.to_string())?;
    let product = std::iter::once(f.head.to_string())
        .chain(f.squares().map(|s| s.to_string()))
        .collect::<Vec<_>>()
        .join("·");
    ensure(product == "ab·aa·baba·abaaba·baababaaba", || {
        product.clone()
    })?;
    Ok(format!("Fibonacci depth 10, (2,2,1) depth 7; {product}"))
}

fn round_trip() -> Outcome {
    suites(vec![roundtrip(ROUNDTRIP_MAX_N)])
}

fn uniqueness_census() -> Outcome {
    suites(vec![uniqueness(CENSUS_MAX_N)])
}

fn oracle_equivalence() -> Outcome {
    suites(vec![closedness_oracle(BINARY_MAX_N, TERNARY_MAX_N)])
}

fn structural_laws() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let dirs = random_directives(&mut rng, BOUNDARY_DIRECTIVES, 5);
    suites(vec![
        run_inequality(BINARY_MAX_N, TERNARY_MAX_N),
        closed_extension_laws(BINARY_MAX_N, TERNARY_MAX_N),
        period_laws(BINARY_MAX_N, TERNARY_MAX_N),
        central_semicentral_laws(BINARY_MAX_N),
        standard_laws(&dirs, BOUNDARY_LEN, BOUNDARY_LEN),
        prefix_shape(SHAPE_MAX_N),
    ])
}

fn linear_time() -> Outcome {
    let limit = LINEAR_TIME_BUDGET * LINEAR_TIME_SLACK;
    let w = standard_prefix(&dir("1,2,1,3"), LONG_INPUT).unwrap();

    let start = Instant::now();
    let oc = compute_oc_sequence(&w);
    let t_oc = start.elapsed();

    let start = Instant::now();
    let back = reconstruct(&oc).map_err(|e| e.to_string())?;
    let t_rec = start.elapsed();
    ensure(back == w, || "reconstruction differs from the input".into())?;

    // A word with long open runs and no structure.
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let noise = Word::from_symbols((0..LONG_INPUT).map(|_| rng.gen_range('a'..='d')).collect());
    let start = Instant::now();
    let noise_oc: OcSequence = compute_oc_sequence(&noise);
    let t_noise = start.elapsed();
    ensure(noise_oc.len() == LONG_INPUT, || "wrong length".into())?;

    let worst = t_oc.max(t_rec).max(t_noise);
    ensure(worst <= limit, || {
        format!("oc {t_oc:?}, reconstruct {t_rec:?}, random oc {t_noise:?} exceed {limit:?}")
    })?;
    Ok(format!(
        "|w| = {LONG_INPUT}: oc {t_oc:.2?}, reconstruct {t_rec:.2?}, random oc {t_noise:.2?} \
         (limit {limit:?})"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "reference fixtures", FIXTURE_BUDGET, reference_fixtures),
        (
            2,
            "Fibonacci doubled runs",
            FIBONACCI_BUDGET,
            fibonacci_doubled_runs,
        ),
        (
            3,
            "closed form vs direct",
            CLOSED_FORM_BUDGET,
            closed_form_vs_direct,
        ),
        (
            4,
            "square factorization",
            FACTORIZATION_BUDGET,
            factorization,
        ),
        (
            5,
            "round trip on balanced words",
            EXHAUSTIVE_BUDGET,
            round_trip,
        ),
        (6, "uniqueness census", EXHAUSTIVE_BUDGET, uniqueness_census),
        (
            7,
            "oracle equivalence",
            EXHAUSTIVE_BUDGET,
            oracle_equivalence,
        ),
        (8, "structural laws", EXHAUSTIVE_BUDGET, structural_laws),
        (
            9,
            "linear-time performance",
            LINEAR_TIME_BUDGET * LINEAR_TIME_SLACK,
            linear_time,
        ),
    ];
    let mut failed = 0;
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {id} PASS {title}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL {title}: {why} [{elapsed:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
