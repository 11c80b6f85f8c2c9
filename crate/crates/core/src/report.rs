//! Rendering of check results as JSON, CSV or plain text, plus the exit
//! code convention shared by every subcommand.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::hook_gf::HookCount;
use crate::injections::VerificationReport;
use crate::theorems::{Mode, TheoremCheck};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "human" => Ok(Format::Human),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Unsupported(format!("unknown format {s:?}"))),
        }
    }
}

/// Something a subcommand can print and judge.
pub trait Report: Serialize {
    fn passed(&self) -> bool;
    fn csv_header() -> &'static str;
    fn csv_rows(&self) -> Vec<String>;
    fn human(&self) -> String;
}

/// Writes `reports` in `format`. JSON is a single object for one report
/// and an array otherwise; CSV shares one header.
pub fn emit<R: Report, W: Write>(reports: &[R], format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Json => {
            if let [one] = reports {
                serde_json::to_writer_pretty(&mut out, one)?;
            } else {
                serde_json::to_writer_pretty(&mut out, reports)?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "{}", R::csv_header())?;
            for r in reports {
                for row in r.csv_rows() {
                    writeln!(out, "{row}")?;
                }
            }
        }
        Format::Human => {
            for r in reports {
                write!(out, "{}", r.human())?;
            }
        }
    }
    out.flush()
}

/// 0 when every report passed, 1 otherwise.
pub fn exit_code<R: Report>(reports: &[R]) -> i32 {
    if reports.iter().all(Report::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

impl Report for VerificationReport {
    fn passed(&self) -> bool {
        self.passed
    }

    fn csv_header() -> &'static str {
        "map,t,n,domain_size,image_size,passed,violations"
    }

    fn csv_rows(&self) -> Vec<String> {
        vec![format!(
            "{},{},{},{},{},{},{}",
            self.map,
            self.t,
            self.n,
            self.domain_size,
            self.image_size,
            self.passed,
            self.violations.len()
        )]
    }

    fn human(&self) -> String {
        let mut s = format!(
            "{} t={} n={}: {} (domain {}, image {})\n",
            self.map,
            self.t,
            self.n,
            verdict(self.passed),
            self.domain_size,
            self.image_size
        );
        for v in &self.violations {
            let kind = serde_json::to_value(v.kind).expect("enum serializes");
            let _ = writeln!(
                s,
                "  {} {}: {}",
                kind.as_str().unwrap_or("?"),
                v.input,
                v.detail
            );
        }
        s
    }
}

impl Report for TheoremCheck {
    fn passed(&self) -> bool {
        TheoremCheck::passed(self)
    }

    fn csv_header() -> &'static str {
        "which,kind,t,n,k,value,reference"
    }

    fn csv_rows(&self) -> Vec<String> {
        let mut rows: Vec<String> = self
            .witnesses
            .iter()
            .map(|w| format!("{},witness,{},{},,{},", self.which, w.t, w.n, w.value))
            .collect();
        rows.extend(self.mismatches.iter().map(|m| {
            let k = m.k.map(|k| k.to_string()).unwrap_or_default();
            format!(
                "{},mismatch,{},{},{k},{},{}",
                self.which, m.t, m.n, m.left, m.right
            )
        }));
        rows
    }

    fn human(&self) -> String {
        let mode = match self.mode {
            Mode::Asserting => "",
            Mode::Informational => " [informational]",
        };
        let mut s = format!(
            "{} t={}..={} n={}..={}: {}{mode}\n",
            self.which,
            self.t_min,
            self.t_max,
            self.n_min,
            self.n_max,
            verdict(self.passed())
        );
        let pairs = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
        if !self.witnesses.is_empty() {
            let mut it = self
                .witnesses
                .iter()
                .map(|w| format!("({},{})={}", w.t, w.n, w.value));
            let _ = writeln!(s, "  witnesses: {}", pairs(&mut it));
        }
        if !self.expected.is_empty() {
            let mut it = self.expected.iter().map(|(t, n)| format!("({t},{n})"));
            let _ = writeln!(s, "  expected:  {}", pairs(&mut it));
        }
        for m in &self.mismatches {
            let k = m.k.map(|k| format!(" k={k}")).unwrap_or_default();
            let _ = writeln!(
                s,
                "  mismatch t={}{k} n={}: {} vs {}",
                m.t, m.n, m.left, m.right
            );
        }
        for note in &self.notes {
            let _ = writeln!(s, "  note: {note}");
        }
        s
    }
}

impl Report for HookCount {
    fn passed(&self) -> bool {
        true
    }

    fn csv_header() -> &'static str {
        "t,k,n,value"
    }

    fn csv_rows(&self) -> Vec<String> {
        vec![format!("{},{},{},{}", self.t, self.k, self.n, self.value)]
    }

    fn human(&self) -> String {
        format!("b_{{{},{}}}({}) = {}\n", self.t, self.k, self.n, self.value)
    }
}
