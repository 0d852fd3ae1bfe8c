use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use penta5_core::congruence::CongruenceReport;
use penta5_core::qexpr::IdentityReport;
use penta5_core::Valuation;

/// `+inf` in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Infinity {
    #[serde(rename = "+inf")]
    PlusInf,
}

/// A 5-adic valuation: a number, or the string "+inf" for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonValuation {
    Finite(u64),
    Infinite(Infinity),
}

impl From<Valuation> for JsonValuation {
    fn from(v: Valuation) -> Self {
        match v {
            Valuation::Finite(n) => JsonValuation::Finite(n),
            Valuation::Infinite => JsonValuation::Infinite(Infinity::PlusInf),
        }
    }
}

impl std::fmt::Display for JsonValuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            JsonValuation::Finite(n) => write!(f, "{n}"),
            JsonValuation::Infinite(_) => f.write_str("+inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCounterexample {
    pub n: u64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMismatch {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

/// One result row. Big integers are decimal strings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ResultEntry {
    pub id: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_valuation: Option<JsonValuation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<JsonCounterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub achieved_truncation: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<JsonMismatch>,
    /// `(k, A, B, alpha, n_max)` of a congruence check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub progression: Option<JsonProgression>,
    /// Exponent of the first entry of `coefficients`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valuations: Option<Vec<Vec<JsonValuation>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonProgression {
    pub colors: u32,
    pub modulus: u64,
    pub residue: u64,
    pub alpha: u32,
    pub n_max: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<ResultEntry>,
    pub version: String,
}

pub const PASS: &str = "pass";
pub const FAIL: &str = "fail";
pub const OK: &str = "ok";

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            params: BTreeMap::new(),
            results: Vec::new(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    /// True unless some result failed.
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.status != FAIL)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            render_entry(&mut out, r);
        }
        out
    }
}

impl From<&CongruenceReport> for ResultEntry {
    fn from(r: &CongruenceReport) -> Self {
        ResultEntry {
            id: r.label.clone(),
            status: r.status.as_str().into(),
            min_valuation: Some(r.min_valuation.into()),
            counterexample: r.counterexample.as_ref().map(|c| JsonCounterexample {
                n: c.n,
                value: c.value.to_string(),
            }),
            achieved_truncation: Some((r.modulus * r.n_max + r.residue + 1) as i64),
            progression: Some(JsonProgression {
                colors: r.colors,
                modulus: r.modulus,
                residue: r.residue,
                alpha: r.alpha,
                n_max: r.n_max,
            }),
            ..ResultEntry::default()
        }
    }
}

pub fn identity_entry(id: &str, r: &IdentityReport) -> ResultEntry {
    ResultEntry {
        id: id.into(),
        status: if r.equal { PASS } else { FAIL }.into(),
        achieved_truncation: Some(r.achieved_truncation),
        mismatch: r.mismatch.as_ref().map(|m| JsonMismatch {
            exponent: m.exponent,
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        }),
        ..ResultEntry::default()
    }
}

fn render_table<T: std::fmt::Display>(out: &mut String, rows: &[Vec<T>]) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
}

fn render_entry(out: &mut String, r: &ResultEntry) {
    if let Some(coeffs) = &r.coefficients {
        let offset = r.offset.unwrap_or(0);
        let last = offset + coeffs.len() as i64 - 1;
        if coeffs.is_empty() {
            let _ = writeln!(out, "(no coefficients)");
        } else {
            let _ = writeln!(out, "q^{offset}..q^{last}: {}", coeffs.join(", "));
        }
        if let Some(t) = r.achieved_truncation {
            let _ = writeln!(out, "exact below q^{t}");
        }
        return;
    }
    if let Some(rows) = &r.rows {
        render_table(out, rows);
        return;
    }
    if let Some(vals) = &r.valuations {
        render_table(out, vals);
        return;
    }
    let _ = write!(out, "{:<4} {}", r.status, r.id);
    if let Some(p) = &r.progression {
        let _ = write!(
            out,
            "  p_-{}({}n+{}) mod 5^{}, n <= {}",
            p.colors, p.modulus, p.residue, p.alpha, p.n_max
        );
    }
    if let Some(v) = &r.min_valuation {
        let _ = write!(out, ", min valuation {v}");
    }
    if let Some(c) = &r.counterexample {
        let _ = write!(out, ", first failure at n = {} (value {})", c.n, c.value);
    }
    if r.progression.is_none() {
        if let Some(t) = r.achieved_truncation {
            let _ = write!(out, ", compared below q^{t}");
        }
    }
    if let Some(m) = &r.mismatch {
        let _ = write!(
            out,
            ", first mismatch at q^{}: {} vs {}",
            m.exponent, m.lhs, m.rhs
        );
    }
    if let Some(n) = &r.note {
        let _ = write!(out, " ({n})");
    }
    out.push('\n');
}
