//! Command implementations. Each returns the rendered output and whether every
//! requested computation or check succeeded; `main` handles I/O and exit codes.

use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use hypermap_core::{
    avg_trace_power, avg_trace_power_alt, closed_form_p, enumerate_p, factorial, recursion_p,
    recursion_stream, stirling_row, two_face_gf, two_face_total, BigInt, CoeffTable, EnumOptions,
    Poly,
};
use serde_json::json;

use crate::args::{AvgTraceArgs, BenchArgs, CommonArgs, Format, Method};
use crate::bench;
use crate::verify;

pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            success: true,
        }
    }
}

/// Resolved settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub range: RangeInclusive<usize>,
    pub faces: usize,
    pub method: Method,
    pub format: Format,
    pub opts: EnumOptions,
}

impl RunConfig {
    pub fn from_args(
        args: &CommonArgs,
        default_range: Option<RangeInclusive<usize>>,
    ) -> Result<Self> {
        let range = match (args.r, args.r_min, args.r_max) {
            (Some(r), None, None) => r..=r,
            (None, Some(lo), Some(hi)) => lo..=hi,
            (None, None, None) => match default_range {
                Some(range) => range,
                None => bail!("--r (or --r-min and --r-max) is required"),
            },
            _ => bail!("give either --r or both --r-min and --r-max"),
        };
        if *range.start() == 0 || range.start() > range.end() {
            bail!("invalid range {}..={}", range.start(), range.end());
        }
        let threads = match args.threads.as_str() {
            "auto" => None,
            t => match t.parse::<usize>() {
                Ok(n) if n > 0 => Some(n),
                _ => bail!("--threads must be a positive integer or `auto`, got {t:?}"),
            },
        };
        let single = range.start() == range.end();
        let method = args.method.unwrap_or(if single {
            Method::Closed
        } else {
            Method::Recursion
        });
        let opts = EnumOptions {
            ceiling: args.enum_ceiling,
            force: args.force,
            threads,
        };
        let faces = args.faces as usize;
        let needs_enumeration = method == Method::Enumerate || faces == 2;
        if needs_enumeration && *range.end() > opts.ceiling && opts.force {
            let r = *range.end();
            let work = (1..=r).fold(r as f64, |acc, i| acc * i as f64);
            eprintln!(
                "warning: enumerating r = {r} beyond the ceiling {}; projected work r*r! = {work:.3e}",
                opts.ceiling
            );
        }
        Ok(RunConfig {
            range,
            faces,
            method,
            format: args.format.unwrap_or(Format::Text),
            opts,
        })
    }

    fn is_single(&self) -> bool {
        self.range.start() == self.range.end()
    }
}

/// One-face polynomial by the chosen method.
pub fn one_face_poly(r: usize, method: Method, opts: &EnumOptions) -> Result<Poly> {
    Ok(match method {
        Method::Enumerate => enumerate_p(r, opts)?,
        Method::Closed => closed_form_p(r)?,
        Method::Recursion => recursion_p(r)?,
    })
}

fn polys(cfg: &RunConfig) -> Result<Vec<(usize, Poly)>> {
    if cfg.faces == 2 {
        if *cfg.range.start() < 2 {
            bail!("two-face polynomials need r >= 2");
        }
        return cfg
            .range
            .clone()
            .map(|r| Ok((r, two_face_gf::<BigInt>(r, &cfg.opts)?.gf)))
            .collect();
    }
    if cfg.method == Method::Recursion {
        return recursion_stream::<BigInt>()
            .take(*cfg.range.end())
            .skip(cfg.range.start() - 1)
            .map(|item| item.map_err(Into::into))
            .collect();
    }
    cfg.range
        .clone()
        .map(|r| Ok((r, one_face_poly(r, cfg.method, &cfg.opts)?)))
        .collect()
}

fn table_of(items: &[(usize, Poly)]) -> CoeffTable {
    let mut table = CoeffTable::default();
    for (r, poly) in items {
        table.push_poly(*r, poly);
    }
    table
}

pub fn cmd_poly(args: &CommonArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(args, None)?;
    let items = polys(&cfg)?;
    let text = match cfg.format {
        Format::Text if cfg.is_single() => format!("{}\n", items[0].1),
        Format::Text => items.iter().map(|(r, p)| format!("{r}: {p}\n")).collect(),
        Format::Csv => table_of(&items).to_csv(),
        Format::Json => table_of(&items).to_json(),
    };
    Ok(Output::ok(text))
}

pub fn cmd_table(args: &CommonArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(args, None)?;
    let table = table_of(&polys(&cfg)?);
    let text = match cfg.format {
        Format::Text => table.to_text(),
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    Ok(Output::ok(text))
}

fn render_pairs(cfg: &RunConfig, header: &str, key: &str, rows: &[(usize, String)]) -> String {
    match cfg.format {
        Format::Text if cfg.is_single() => format!("{}\n", rows[0].1),
        Format::Text => rows.iter().map(|(r, x)| format!("{r} {x}\n")).collect(),
        Format::Csv => {
            let mut out = format!("r,{header}\n");
            for (r, x) in rows {
                out.push_str(&format!("{r},{x}\n"));
            }
            out
        }
        Format::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|(r, x)| json!({ "r": r, key: x }))
                .collect();
            format!("{}\n", serde_json::Value::Array(entries))
        }
    }
}

pub fn cmd_count(args: &CommonArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(args, None)?;
    let mut rows = Vec::new();
    for r in cfg.range.clone() {
        let count = if cfg.faces == 2 {
            two_face_total::<BigInt>(r)?
        } else {
            one_face_poly(r, cfg.method, &cfg.opts)?.coefficient_sum()
        };
        rows.push((r, count.to_string()));
    }
    Ok(Output::ok(render_pairs(&cfg, "count", "count", &rows)))
}

pub fn cmd_stirling(args: &CommonArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(args, None)?;
    let rows: Vec<(usize, Vec<BigInt>)> = cfg
        .range
        .clone()
        .map(|r| Ok((r, stirling_row::<BigInt>(r)?)))
        .collect::<Result<_>>()?;
    let join = |row: &[BigInt]| {
        row.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let text = match cfg.format {
        Format::Text if cfg.is_single() => format!("{}\n", join(&rows[0].1)),
        Format::Text => rows
            .iter()
            .map(|(r, row)| format!("{r}: {}\n", join(row)))
            .collect(),
        Format::Csv => {
            let mut out = String::from("r,k,count\n");
            for (r, row) in &rows {
                for (k, c) in row.iter().enumerate() {
                    out.push_str(&format!("{r},{},{c}\n", k + 1));
                }
            }
            out
        }
        Format::Json => {
            let entries: Vec<_> = rows
                .iter()
                .map(|(r, row)| {
                    let row: Vec<String> = row.iter().map(ToString::to_string).collect();
                    json!({ "r": r, "row": row })
                })
                .collect();
            format!("{}\n", serde_json::Value::Array(entries))
        }
    };
    Ok(Output::ok(text))
}

pub fn cmd_avg_trace(args: &AvgTraceArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(&args.common, None)?;
    let mut rows = Vec::new();
    for r in cfg.range.clone() {
        let value = if args.alt {
            avg_trace_power_alt::<BigInt>(args.m, args.n, r)?
        } else {
            avg_trace_power::<BigInt>(args.m, args.n, r)?
        };
        rows.push((r, value.to_string()));
    }
    Ok(Output::ok(render_pairs(&cfg, "value", "value", &rows)))
}

pub fn cmd_verify(args: &CommonArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(args, Some(1..=9))?;
    let report = verify::run(cfg.range.clone(), &cfg.opts);
    Ok(Output {
        success: report.all_passed(),
        text: report.render(),
    })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(&args.common, Some(1..=10))?;
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let methods = match args.common.method {
        Some(m) => vec![m],
        None => vec![Method::Enumerate, Method::Closed, Method::Recursion],
    };
    let mut records = Vec::new();
    for method in methods {
        for r in cfg.range.clone() {
            if method == Method::Enumerate && cfg.opts.check(r).is_err() {
                continue;
            }
            let record = bench::time_method(method, r, args.reps, &cfg.opts)
                .with_context(|| format!("timing {} at r = {r}", method.name()))?;
            records.push(record);
        }
    }
    Ok(Output::ok(bench::to_csv(&records)))
}

/// `r!` as a string, for reports.
pub(crate) fn factorial_string(r: usize) -> String {
    factorial::<BigInt>(r).to_string()
}
