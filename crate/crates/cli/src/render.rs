//! Output formats. Text and CSV print polynomials in the input grammar, so
//! every coefficient can be fed back to the parser.

use clap::ValueEnum;
use motivic::quot::{HodgeEntry, OmegaList, StratumTable};
use motivic::verify::{CheckReport, Suite, VerifyConfig};
use motivic::Series;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn series(s: &Series, format: Format) -> String {
    match format {
        Format::Json => json(s),
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in s.coeffs().iter().enumerate() {
                out += &format!("{n},{}\n", csv_field(&c.to_string()));
            }
            out
        }
        Format::Text => s.coeffs().iter().enumerate().map(|(n, c)| format!("t^{n}: {c}\n")).collect(),
    }
}

pub fn hodge_table(rows: &[HodgeEntry], format: Format) -> String {
    match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut out = String::from("n,p,q,h\n");
            for e in rows {
                out += &format!("{},{},{},{}\n", e.n, e.p, e.q, e.h);
            }
            out
        }
        Format::Text => {
            let mut out = format!("{:>3} {:>3} {:>3} {:>8}\n", "n", "p", "q", "h");
            for e in rows {
                out += &format!("{:>3} {:>3} {:>3} {:>8}\n", e.n, e.p, e.q, e.h);
            }
            out
        }
    }
}

pub fn omegas(om: &OmegaList, format: Format) -> String {
    match format {
        Format::Json => json(om),
        Format::Csv => {
            let mut out = String::from("n,omega\n");
            for (i, c) in om.omegas().iter().enumerate() {
                out += &format!("{},{}\n", i + 1, csv_field(&c.to_string()));
            }
            out
        }
        Format::Text => om.omegas().iter().enumerate().map(|(i, c)| format!("Omega_{}: {c}\n", i + 1)).collect(),
    }
}

pub fn strata(table: &StratumTable, format: Format) -> String {
    match format {
        Format::Json => json(table),
        Format::Csv => {
            let mut out = String::from("partition,class\n");
            for row in &table.rows {
                out += &format!("{},{}\n", csv_field(&row.partition.to_string()), csv_field(&row.class.to_string()));
            }
            out
        }
        Format::Text => {
            let mut out: String = table.rows.iter().map(|row| format!("{}: {}\n", row.partition, row.class)).collect();
            out += &format!("total: {}\n", table.total());
            out
        }
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    suite: String,
    order: usize,
    seed: u64,
    instances: usize,
    passed: bool,
    checks: &'a [CheckReport],
}

pub fn verify(suite: Suite, config: &VerifyConfig, reports: &[CheckReport], format: Format) -> String {
    let passed = reports.iter().all(CheckReport::passed);
    match format {
        Format::Json => json(&VerifyReport {
            suite: suite.to_string(),
            order: config.order,
            seed: config.seed,
            instances: config.instances,
            passed,
            checks: reports,
        }),
        Format::Csv => {
            let mut out = String::from("check,status,first_mismatch\n");
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                let k = r.first_mismatch.map(|k| k.to_string()).unwrap_or_default();
                out += &format!("{},{status},{k}\n", r.check);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                match r.first_mismatch {
                    Some(k) => out += &format!("{status} {} (first mismatch at t^{k})\n", r.check),
                    None => out += &format!("{status} {}\n", r.check),
                }
            }
            let ok = reports.iter().filter(|r| r.passed()).count();
            out += &format!("{ok}/{} checks passed\n", reports.len());
            out
        }
    }
}
