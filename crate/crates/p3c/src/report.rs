//! Machine-readable sweep reports.
//!
//! A sweep produces one [`InvariantRecord`] per tree plus a summary of
//! violations. JSON output is schema-versioned and round-trips byte for
//! byte; CSV output flattens each record to one row.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Version tag carried in every JSON report.
pub const SCHEMA: &str = "p3c/1";

/// Exact invariant values for one tree, with the checked inequalities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    /// graph6 string of the canonically labeled tree.
    pub tree_id: String,
    pub n: usize,
    /// Largest free set size.
    pub alpha: usize,
    /// Smallest over all vertices of the largest free set avoiding that
    /// vertex.
    pub alpha_star_min: usize,
    /// Largest anti-Radon set size for two parts.
    pub r2: usize,
    /// Largest anti-Radon multiset size per configured part count.
    pub rk: BTreeMap<u32, usize>,
    /// Per part count: `rk[k] <= (k-1) * r2`.
    pub thm1_ok: BTreeMap<u32, bool>,
    /// `r2 <= 2 * alpha`.
    pub thm2_ok: bool,
    /// `r2 >= alpha`.
    pub lower_ok: bool,
    /// Component recursions agreed with brute force at every vertex; true
    /// when the sweep did not exercise them.
    pub eq2_ok: bool,
    pub runtime_ms: u64,
}

impl InvariantRecord {
    /// Recomputes the checked inequalities from the raw values.
    pub fn refresh_checks(&mut self) {
        self.thm1_ok = self
            .rk
            .iter()
            .map(|(&k, &rk)| (k, rk <= (k as usize - 1) * self.r2))
            .collect();
        self.thm2_ok = self.r2 <= 2 * self.alpha;
        self.lower_ok = self.r2 >= self.alpha;
    }

    /// True when every checked inequality holds.
    pub fn all_ok(&self) -> bool {
        self.thm1_ok.values().all(|&b| b) && self.thm2_ok && self.lower_ok && self.eq2_ok
    }
}

/// Echo of the sweep parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Which sweep ran: `thm1`, `thm2`, or `recursions`.
    pub sweep: String,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub jobs: usize,
}

/// One failed check, with enough context to rerun it in isolation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tree_id: String,
    pub n: usize,
    /// Name of the failed check, e.g. `thm1[3]` or `radon_star[k=2,v=1]`.
    pub check: String,
    pub detail: String,
    /// Command line reproducing the computation on this tree.
    pub reproduce: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Number of trees checked.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

/// Full result of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: String,
    pub config: SweepConfig,
    pub records: Vec<InvariantRecord>,
    pub summary: Summary,
}

impl SweepReport {
    /// Serializes to the canonical single-line JSON form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Parses a JSON report.
    pub fn from_json(s: &str) -> Result<Self, crate::Error> {
        Ok(serde_json::from_str(s)?)
    }

    /// Renders the records as CSV, one row per tree, header first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "tree_id,n,alpha,alpha_star_min,r2,rk,thm1_ok,thm2_ok,lower_ok,eq2_ok,runtime_ms\n",
        );
        for r in &self.records {
            let rk = join_map(&r.rk);
            let thm1 = join_map(&r.thm1_ok);
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                csv_field(&r.tree_id),
                r.n,
                r.alpha,
                r.alpha_star_min,
                r.r2,
                csv_field(&rk),
                csv_field(&thm1),
                r.thm2_ok,
                r.lower_ok,
                r.eq2_ok,
                r.runtime_ms
            ));
        }
        out
    }
}

/// Renders a map as `k=v` pairs joined with `;`.
fn join_map<V: std::fmt::Display>(m: &BTreeMap<u32, V>) -> String {
    m.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Quotes a CSV field only when it contains a delimiter, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
