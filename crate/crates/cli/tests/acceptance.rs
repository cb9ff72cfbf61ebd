//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line each,
//! then fails if any criterion failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use hypermap_cli::args::Method;
use hypermap_cli::bench::time_method;
use hypermap_core::{
    avg_trace_power, avg_trace_power_alt, closed_form_p, connected_two_face_oracle, enumerate_p,
    factorial, permutations, recursion_p, recursion_stream, stirling_row, telescoping_check,
    two_face_gf, two_face_total, verify_certificate, BigInt, EnumOptions, Poly, Rational,
};

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn one() -> BigInt {
    BigInt::from(1)
}

fn recursion_upto(r_max: usize) -> Vec<Poly> {
    recursion_stream::<BigInt>()
        .take(r_max)
        .map(|item| item.unwrap().1)
        .collect()
}

fn base_cases() {
    let opts = EnumOptions::default();
    for (r, expected) in [(1, p("m*n")), (2, p("m^2*n + m*n^2"))] {
        assert_eq!(closed_form_p::<BigInt>(r).unwrap(), expected);
        assert_eq!(recursion_p::<BigInt>(r).unwrap(), expected);
        assert_eq!(enumerate_p::<BigInt>(r, &opts).unwrap(), expected);
    }
}

fn three_method_agreement() {
    let opts = EnumOptions::default();
    let rec = recursion_upto(9);
    for r in 1..=9 {
        let enumerated: Poly = enumerate_p(r, &opts).unwrap();
        let closed: Poly = closed_form_p(r).unwrap();
        assert_eq!(enumerated, closed, "r = {r}");
        assert_eq!(closed, rec[r - 1], "r = {r}");
    }
}

fn totals() {
    let rec = recursion_upto(13);
    let mut cumulative = BigInt::from(0);
    for r in 1..=13 {
        let closed: Poly = closed_form_p(r).unwrap();
        let fact = factorial::<BigInt>(r);
        assert_eq!(closed.eval(&one(), &one()), fact, "closed r = {r}");
        assert_eq!(rec[r - 1].eval(&one(), &one()), fact, "recursion r = {r}");
        cumulative += fact;
    }
    assert_eq!(cumulative, BigInt::from(6_749_977_113u64));
}

fn stirling_marginal() {
    for r in 1..=8 {
        let marginal: Vec<BigInt> = closed_form_p::<BigInt>(r).unwrap().at_n_one()[1..].to_vec();
        assert_eq!(marginal, stirling_row::<BigInt>(r).unwrap(), "r = {r}");
        let mut histogram = vec![0u64; r];
        for sigma in permutations(r) {
            histogram[sigma.cycle_count() - 1] += 1;
        }
        let histogram: Vec<BigInt> = histogram.into_iter().map(BigInt::from).collect();
        assert_eq!(marginal, histogram, "r = {r}");
    }
}

fn symmetry_and_parity() {
    for (idx, poly) in recursion_upto(20).iter().enumerate() {
        let r = idx as u32 + 1;
        assert_eq!(poly.swap_vars(), *poly, "r = {r}");
        for (e, v, _) in poly.terms() {
            assert_eq!((e + v) % 2, (r + 1) % 2, "r = {r}");
            assert!(e + v <= r + 1, "r = {r}");
        }
    }
}

fn certificates() {
    for r in 1..=8usize {
        for k in -1..=(r as i64 + 2) {
            assert!(verify_certificate::<BigInt>(r, k), "r = {r}, k = {k}");
        }
        assert!(telescoping_check::<BigInt>(r), "r = {r}");
    }
}

fn quantum_moments() {
    for r in 1..=12 {
        let poly: Poly = closed_form_p(r).unwrap();
        for m in 1..=8 {
            for n in 1..=8 {
                let direct: Rational =
                    hypermap_core::closed_form::avg_trace_power_from(&poly, m, n, r).unwrap();
                let alt: Rational = avg_trace_power_alt(m, n, r).unwrap();
                assert_eq!(direct, alt, "m = {m}, n = {n}, r = {r}");
                if (m == 1 && n == 1) || r == 1 {
                    assert!(direct.is_one(), "m = {m}, n = {n}, r = {r}");
                }
            }
        }
        assert_eq!(
            avg_trace_power::<BigInt>(3, 5, r).unwrap(),
            avg_trace_power_alt(3, 5, r).unwrap()
        );
    }
}

fn two_face() {
    let opts = EnumOptions::default();
    for r in 2..=8 {
        let res = two_face_gf::<BigInt>(r, &opts).unwrap();
        assert_eq!(
            res.gf,
            connected_two_face_oracle::<BigInt>(r, &opts).unwrap(),
            "r = {r}"
        );
        assert_eq!(res.total, two_face_total::<BigInt>(r).unwrap(), "r = {r}");
        let expected = match r {
            2 => Some(1),
            3 => Some(6),
            4 => Some(34),
            _ => None,
        };
        if let Some(total) = expected {
            assert_eq!(res.total, BigInt::from(total), "r = {r}");
        }
    }
}

fn performance_shape() {
    let start = Instant::now();
    let p13: Poly = closed_form_p(13).unwrap();
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "P_13 took {elapsed:?}");
    assert_eq!(p13.eval(&one(), &one()), factorial::<BigInt>(13));

    let p50: Poly = closed_form_p(50).unwrap();
    assert_eq!(p50.eval(&one(), &one()), factorial::<BigInt>(50));

    let opts = EnumOptions::default();
    let t10 = time_method(Method::Enumerate, 10, 3, &opts).unwrap();
    let t11 = time_method(Method::Enumerate, 11, 3, &opts).unwrap();
    let ratio = t11.wall_ms / t10.wall_ms;
    println!(
        "      enumerate r=10: {:.1} ms, r=11: {:.1} ms, ratio {ratio:.2} (must exceed 10)",
        t10.wall_ms, t11.wall_ms
    );
    assert!(!t10.below_resolution && !t11.below_resolution);
    assert!(ratio > 10.0, "ratio T(11)/T(10) = {ratio:.2}");
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_hypermap"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn determinism() {
    let single = run_cli(&["verify", "--threads", "1"]);
    let multi = run_cli(&["verify", "--threads", "4"]);
    assert_eq!(single, multi, "verify output differs across thread counts");
    for args in [
        ["poly", "--r", "9", "--method", "enumerate"],
        ["poly", "--r", "7", "--faces", "2"],
    ] {
        let single = run_cli(&[&args[..], &["--threads", "1"]].concat());
        let multi = run_cli(&[&args[..], &["--threads", "4"]].concat());
        assert_eq!(single, multi, "{args:?}");
        assert_eq!(single, run_cli(&[&args[..], &["--threads", "1"]].concat()));
    }
}

#[test]
fn acceptance_criteria() {
    type Criterion = (&'static str, fn(), Duration);
    let criteria: [Criterion; 10] = [
        (
            "AC1 base cases P_1, P_2 by all methods",
            base_cases,
            Duration::from_secs(1),
        ),
        (
            "AC2 three-method agreement r <= 9",
            three_method_agreement,
            Duration::from_secs(30),
        ),
        (
            "AC3 totals r! and cumulative 6749977113",
            totals,
            Duration::from_secs(5),
        ),
        (
            "AC4 Stirling marginal r <= 8",
            stirling_marginal,
            Duration::from_secs(10),
        ),
        (
            "AC5 symmetry and parity r <= 20",
            symmetry_and_parity,
            Duration::from_secs(5),
        ),
        (
            "AC6 certificate and telescoping r <= 8",
            certificates,
            Duration::from_secs(30),
        ),
        (
            "AC7 quantum moment cross-check",
            quantum_moments,
            Duration::from_secs(10),
        ),
        (
            "AC8 two-face gf, oracle and totals r <= 8",
            two_face,
            Duration::from_secs(60),
        ),
        ("AC9 performance shape", performance_shape, Duration::MAX),
        (
            "AC10 determinism across thread counts",
            determinism,
            Duration::MAX,
        ),
    ];
    let mut failures = Vec::new();
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let passed = outcome.is_ok() && elapsed < budget;
        let note = match (&outcome, elapsed < budget) {
            (Err(_), _) => "assertion failed".to_string(),
            (Ok(()), false) => format!("over budget {budget:?}"),
            (Ok(()), true) => String::new(),
        };
        println!(
            "[{}] {name} ({:.2} s) {note}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !passed {
            failures.push(name);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
