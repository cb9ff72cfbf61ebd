//! Coefficient tables `(r, e, v, count)` and their CSV / JSON forms.
//!
//! CSV: header `r,e,v,count`, one row per nonzero coefficient.
//! JSON: `[{"r":3,"terms":[{"e":3,"v":1,"c":"1"}, ...]}, ...]`, with counts as
//! decimal strings since they outgrow 64-bit numbers.
//! Rows are always sorted by `r` ascending, then `e` and `v` descending.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::scalar::Coefficient;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffRow {
    pub r: usize,
    pub e: u32,
    pub v: u32,
    pub count: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoeffTable {
    rows: Vec<CoeffRow>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: u32,
    v: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    r: usize,
    terms: Vec<JsonTerm>,
}

impl CoeffTable {
    pub fn from_poly<C: Coefficient>(r: usize, poly: &BivarPoly<C>) -> Self {
        let mut table = CoeffTable::default();
        table.push_poly(r, poly);
        table
    }

    /// Appends the terms of `poly` as rows for order `r`.
    pub fn push_poly<C: Coefficient>(&mut self, r: usize, poly: &BivarPoly<C>) {
        self.rows.extend(poly.terms().map(|(e, v, c)| CoeffRow {
            r,
            e,
            v,
            count: c.to_bigint(),
        }));
        self.sort();
    }

    fn sort(&mut self) {
        self.rows
            .sort_by(|a, b| a.r.cmp(&b.r).then(b.e.cmp(&a.e)).then(b.v.cmp(&a.v)));
    }

    pub fn rows(&self) -> &[CoeffRow] {
        &self.rows
    }

    /// Distinct orders present, ascending.
    pub fn orders(&self) -> Vec<usize> {
        let mut rs: Vec<usize> = self.rows.iter().map(|row| row.r).collect();
        rs.dedup();
        rs
    }

    /// The polynomial stored for order `r`.
    pub fn poly(&self, r: usize) -> BivarPoly<BigInt> {
        BivarPoly::from_terms(
            self.rows
                .iter()
                .filter(|row| row.r == r)
                .map(|row| (row.e, row.v, row.count.clone())),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,e,v,count\n");
        for row in &self.rows {
            writeln!(out, "{},{},{},{}", row.r, row.e, row.v, row.count).unwrap();
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some("r,e,v,count") => {}
            other => return Err(Error::Parse(format!("bad CSV header {other:?}"))),
        }
        let mut rows = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            let bad = || Error::Parse(format!("bad CSV row {} {line:?}", lineno + 2));
            if fields.len() != 4 {
                return Err(bad());
            }
            rows.push(CoeffRow {
                r: fields[0].parse().map_err(|_| bad())?,
                e: fields[1].parse().map_err(|_| bad())?,
                v: fields[2].parse().map_err(|_| bad())?,
                count: fields[3].parse().map_err(|_| bad())?,
            });
        }
        let mut table = CoeffTable { rows };
        table.sort();
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<JsonEntry> = self
            .orders()
            .into_iter()
            .map(|r| JsonEntry {
                r,
                terms: self
                    .rows
                    .iter()
                    .filter(|row| row.r == r)
                    .map(|row| JsonTerm {
                        e: row.e,
                        v: row.v,
                        c: row.count.to_string(),
                    })
                    .collect(),
            })
            .collect();
        let mut out = serde_json::to_string(&entries).expect("table serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<JsonEntry> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut rows = Vec::new();
        for entry in entries {
            for term in entry.terms {
                rows.push(CoeffRow {
                    r: entry.r,
                    e: term.e,
                    v: term.v,
                    count: term
                        .c
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad count {:?}", term.c)))?,
                });
            }
        }
        let mut table = CoeffTable { rows };
        table.sort();
        Ok(table)
    }

    /// Whitespace-aligned plain text with a header line.
    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|row| row.count.to_string().len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = format!("{:>4} {:>4} {:>4} {:>width$}\n", "r", "e", "v", "count");
        for row in &self.rows {
            writeln!(
                out,
                "{:>4} {:>4} {:>4} {:>width$}",
                row.r, row.e, row.v, row.count
            )
            .unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> BivarPoly<BigInt> {
        "m^3*n + 3*m^2*n^2 + m*n^3 + m*n".parse().unwrap()
    }

    #[test]
    fn csv_layout() {
        let mut t = CoeffTable::from_poly(3, &p3());
        t.push_poly(1, &"m*n".parse::<BivarPoly<BigInt>>().unwrap());
        assert_eq!(
            t.to_csv(),
            "r,e,v,count\n1,1,1,1\n3,3,1,1\n3,2,2,3\n3,1,3,1\n3,1,1,1\n"
        );
        assert_eq!(t.orders(), vec![1, 3]);
        assert_eq!(t.poly(3), p3());
    }

    #[test]
    fn json_layout() {
        let t = CoeffTable::from_poly(2, &"m^2*n + m*n^2".parse::<BivarPoly<BigInt>>().unwrap());
        assert_eq!(
            t.to_json(),
            "[{\"r\":2,\"terms\":[{\"e\":2,\"v\":1,\"c\":\"1\"},{\"e\":1,\"v\":2,\"c\":\"1\"}]}]\n"
        );
    }

    #[test]
    fn malformed_input() {
        assert!(CoeffTable::from_csv("a,b\n").is_err());
        assert!(CoeffTable::from_csv("r,e,v,count\n1,2,3\n").is_err());
        assert!(CoeffTable::from_csv("r,e,v,count\n1,2,x,4\n").is_err());
        assert!(CoeffTable::from_json("{}").is_err());
        assert!(
            CoeffTable::from_json("[{\"r\":1,\"terms\":[{\"e\":1,\"v\":1,\"c\":\"x\"}]}]").is_err()
        );
    }

    #[test]
    fn text_layout() {
        let t = CoeffTable::from_poly(1, &"m*n".parse::<BivarPoly<BigInt>>().unwrap());
        assert_eq!(t.to_text(), "   r    e    v count\n   1    1    1     1\n");
    }
}
