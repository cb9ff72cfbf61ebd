//! Cross-validation suite behind `hypermap verify`.
//!
//! Output contains no timings or thread-dependent data, so it is byte-identical
//! across runs and thread counts.

use std::ops::RangeInclusive;

use hypermap_core::{
    avg_trace_power, avg_trace_power_alt, closed_form_p, connected_two_face_oracle, enumerate_p,
    factorial, recursion_stream, stirling_row, telescoping_check, two_face_gf, two_face_total,
    verify_certificate, BigInt, EnumOptions, Poly,
};

use crate::commands::factorial_string;

/// Cumulative one-face count for r = 1..=13.
pub const CUMULATIVE_TO_THIRTEEN: u64 = 6_749_977_113;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}: {}\n", c.name, c.detail));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }
}

fn describe<T: std::fmt::Display, E: std::fmt::Display>(res: &Result<T, E>) -> String {
    match res {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

pub fn run(range: RangeInclusive<usize>, opts: &EnumOptions) -> Report {
    let mut report = Report::default();
    let r_max = *range.end();

    let recursive: Vec<Poly> = recursion_stream::<BigInt>()
        .take(r_max.max(13))
        .map(|item| item.map(|(_, p)| p).expect("recursion divides exactly"))
        .collect();
    let one = BigInt::from(1);

    for r in range.clone() {
        let closed = closed_form_p::<BigInt>(r);
        let rec = &recursive[r - 1];
        let closed_ok = closed.as_ref().map(|c| c == rec).unwrap_or(false);
        let enumerated = if opts.check(r).is_ok() {
            Some(enumerate_p::<BigInt>(r, opts))
        } else {
            None
        };
        match &enumerated {
            Some(e) => {
                let ok = closed_ok && e.as_ref().map(|e| e == rec).unwrap_or(false);
                report.record(
                    format!("methods agree r={r}"),
                    ok,
                    "enumerate = closed = recursion",
                );
            }
            None => report.record(
                format!("methods agree r={r}"),
                closed_ok,
                "closed = recursion (enumeration beyond ceiling)",
            ),
        }

        let total = rec.eval(&one, &one);
        report.record(
            format!("total r={r}"),
            total == factorial::<BigInt>(r),
            format!("P_r(1,1) = {total}, r! = {}", factorial_string(r)),
        );

        let marginal: Vec<BigInt> = rec.at_n_one().into_iter().skip(1).collect();
        let row = stirling_row::<BigInt>(r);
        let mut stirling_ok = row.as_ref().map(|row| *row == marginal).unwrap_or(false);
        if let Some(Ok(e)) = &enumerated {
            let oracle: Vec<BigInt> = e.at_n_one().into_iter().skip(1).collect();
            stirling_ok &= oracle == marginal;
        }
        report.record(
            format!("stirling r={r}"),
            stirling_ok,
            format!(
                "[{}]",
                marginal
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        );

        report.record(
            format!("symmetry r={r}"),
            rec.swap_vars() == *rec,
            "P_r(m,n) = P_r(n,m)",
        );

        let parity_ok = rec.terms().all(|(e, v, _)| {
            e >= 1 && v >= 1 && e + v <= r as u32 + 1 && (e + v) % 2 == (r as u32 + 1) % 2
        });
        report.record(
            format!("parity r={r}"),
            parity_ok,
            "e+v <= r+1 and e+v = r+1 (mod 2)",
        );

        let ks = -1..=(r as i64 + 2);
        let cert_ok = ks.clone().all(|k| verify_certificate::<BigInt>(r, k));
        let tele_ok = telescoping_check::<BigInt>(r);
        report.record(
            format!("certificate r={r}"),
            cert_ok && tele_ok,
            format!("k in {}..={}, telescoping", ks.start(), ks.end()),
        );

        if r >= 2 && opts.check(r).is_ok() {
            let gf = two_face_gf::<BigInt>(r, opts);
            let oracle = connected_two_face_oracle::<BigInt>(r, opts);
            let formula = two_face_total::<BigInt>(r);
            let ok = match (&gf, &oracle, &formula) {
                (Ok(gf), Ok(oracle), Ok(formula)) => gf.gf == *oracle && gf.total == *formula,
                _ => false,
            };
            report.record(
                format!("two-face r={r}"),
                ok,
                format!("total = {}", describe(&formula)),
            );
        }

        let mut moments_ok = true;
        for m in 1..=4 {
            for n in 1..=4 {
                let a = avg_trace_power::<BigInt>(m, n, r);
                let b = avg_trace_power_alt::<BigInt>(m, n, r);
                moments_ok &= matches!((a, b), (Ok(a), Ok(b)) if a == b);
            }
        }
        report.record(
            format!("avg-trace r={r}"),
            moments_ok,
            "both moment formulas agree for m, n <= 4",
        );
    }

    let cumulative: BigInt = recursive[..13].iter().map(|p| p.eval(&one, &one)).sum();
    report.record(
        "cumulative total r=1..13",
        cumulative == BigInt::from(CUMULATIVE_TO_THIRTEEN),
        cumulative.to_string(),
    );
    report
}
