//! Command results in a form that serializes losslessly: every exact number
//! is a decimal string, polynomials are coefficient lists, lowest power first.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use msection::{BiPoly, CheckReport, Scalar, UniPoly};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    /// The command line that produced the report, minus global flags.
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: Vec<Output>,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            outputs: Vec::new(),
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, outcome: CheckOutcome) {
        self.passed &= outcome.passed;
        self.checks.push(outcome);
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Output {
    Section {
        m: u32,
        l: u32,
        p_prime: String,
        q_prime: String,
        r_prime: String,
        s_prime: String,
        numerator: Vec<String>,
        denominator: Vec<String>,
        display: String,
        terms: Vec<String>,
    },
    Ogf {
        numerator: Vec<String>,
        denominator: Vec<String>,
        display: String,
        terms: Vec<String>,
    },
    /// Coefficients in `x` (outer) of polynomials in `y` (inner).
    ChebyshevSection {
        m: u32,
        l: u32,
        numerator: Vec<Vec<String>>,
        denominator: Vec<Vec<String>>,
        display: String,
    },
    TriangleRow {
        n: usize,
        entries: Vec<String>,
        row_sum: String,
    },
    OeisMatch {
        a_number: String,
        provenance: String,
        offset: i64,
        skip: usize,
        compared: usize,
        match_length: usize,
    },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn single(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Self { name: name.into(), cases: 1, passed, counterexample: if passed { None } else { detail } }
    }
}

impl From<&CheckReport> for CheckOutcome {
    fn from(rep: &CheckReport) -> Self {
        Self {
            name: rep.name.clone(),
            cases: rep.cases,
            passed: rep.passed(),
            counterexample: rep.failure.as_ref().map(ToString::to_string),
        }
    }
}

pub fn scalars<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Vec<String> {
    values.into_iter().map(ToString::to_string).collect()
}

pub fn poly(p: &UniPoly) -> Vec<String> {
    scalars(p.coeffs())
}

pub fn bipoly(p: &BiPoly) -> Vec<Vec<String>> {
    p.x_coeffs().iter().map(poly).collect()
}

/// Plain-text rendering for terminals.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", report.command);
    for (k, v) in &report.inputs {
        let _ = writeln!(out, "  {k:<10} {v}");
    }
    for o in &report.outputs {
        let _ = write!(out, "{o}");
    }
    if !report.checks.is_empty() {
        let _ = writeln!(out, "checks:");
        let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &report.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            let _ = write!(out, "  {:<width$}  {status}  {:>8} cases", c.name, c.cases);
            if let Some(ce) = &c.counterexample {
                let _ = write!(out, "  {ce}");
            }
            out.push('\n');
        }
    }
    let _ = writeln!(out, "result: {}", if report.passed { "pass" } else { "FAIL" });
    out
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Section { m, l, p_prime, q_prime, r_prime, s_prime, display, terms, .. } => {
                writeln!(f, "section m={m} l={l}")?;
                writeln!(f, "  (p', q', r', s') = ({p_prime}, {q_prime}, {r_prime}, {s_prime})")?;
                writeln!(f, "  ogf   {display}")?;
                writeln!(f, "  terms {}", terms.join(", "))
            }
            Output::Ogf { display, terms, .. } => {
                writeln!(f, "ogf   {display}")?;
                writeln!(f, "terms {}", terms.join(", "))
            }
            Output::ChebyshevSection { m, l, display, .. } => writeln!(f, "GS m={m} l={l}: {display}"),
            Output::TriangleRow { n, entries, row_sum } => {
                writeln!(f, "{n:>4}: {}   (sum {row_sum})", entries.join(" "))
            }
            Output::OeisMatch { a_number, provenance, offset, skip, compared, match_length } => writeln!(
                f,
                "{a_number} ({provenance}, offset {offset}, skip {skip}): {match_length}/{compared} terms match"
            ),
        }
    }
}
