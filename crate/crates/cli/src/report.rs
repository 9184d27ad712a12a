use std::fmt::Write as _;

use serde::Serialize;
use travel_core::{AxiomReport, CrossValidation, OpTable, Tally};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Count,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass | Outcome::Count => 0,
            Outcome::Fail => 1,
            Outcome::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Count => "count",
            Outcome::Error => "error",
        }
    }
}

/// Everything one run reports. Both output formats are rendered from this.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub axioms: Vec<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub on_graph: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_validation: Option<CrossValidation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    /// `routing[u][v]` is the next hop from `u` toward `v`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routing: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationDetails {
    pub filter: travel_core::Filter,
    pub tally: Tally,
    /// Systems passing the filter.
    pub matching: u64,
}

impl RunReport {
    pub fn new(command: &'static str, inputs: Vec<String>) -> Self {
        RunReport {
            command,
            inputs,
            outcome: Outcome::Pass,
            message: None,
            axioms: Vec::new(),
            on_graph: None,
            classification: None,
            enumeration: None,
            cross_validation: None,
            output: None,
            routing: None,
        }
    }

    pub fn error(command: &'static str, inputs: Vec<String>, message: String) -> Self {
        RunReport { outcome: Outcome::Error, message: Some(message), ..RunReport::new(command, inputs) }
    }

    pub fn set_routing(&mut self, table: &OpTable) {
        let n = table.vertex_count();
        self.routing = Some((0..n).map(|u| table.row(u).to_vec()).collect());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.outcome.label());
        if let Some(message) = &self.message {
            let _ = writeln!(out, "  {message}");
        }
        let width = self
            .axioms
            .iter()
            .map(|r| r.axiom.name().len())
            .chain(self.on_graph.map(|_| "on-graph".len()))
            .max()
            .unwrap_or(0);
        for report in &self.axioms {
            let _ = writeln!(out, "  {:width$}  {}", report.axiom.name(), axiom_line(report));
        }
        if let Some(on_graph) = self.on_graph {
            let _ = writeln!(out, "  {:width$}  {}", "on-graph", mark(on_graph));
        }
        if let Some(classification) = &self.classification {
            let _ = writeln!(out, "classification: {classification}");
        }
        if let Some(e) = &self.enumeration {
            let _ = writeln!(out, "total {}", e.tally.total);
            let _ = writeln!(out, "simple {}", e.tally.simple);
            let _ = writeln!(out, "smooth {}", e.tally.smooth);
            let _ = writeln!(out, "semi-smooth {}", e.tally.semismooth);
        }
        if let Some(cv) = &self.cross_validation {
            let _ = writeln!(
                out,
                "oracle {}, csp {}, match {}",
                cv.oracle.total,
                cv.csp.total,
                mark(cv.passed())
            );
            let _ = writeln!(out, "  systems equal {}", mark(cv.sets_match));
            let _ = writeln!(out, "  tallies equal {}", mark(cv.tallies_match));
            for (side, t) in [("oracle", cv.oracle), ("csp", cv.csp)] {
                let _ = writeln!(
                    out,
                    "  {side:6} simple {} smooth {} semi-smooth {}",
                    t.simple, t.smooth, t.semismooth
                );
            }
        }
        if let Some(path) = &self.output {
            let _ = writeln!(out, "wrote {path}");
        }
        if let Some(rows) = &self.routing {
            out.push_str(&routing_text(rows));
        }
        out
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn axiom_line(report: &AxiomReport) -> String {
    if report.holds {
        return mark(true).to_string();
    }
    let noun = if report.violations == 1 { "violation" } else { "violations" };
    let shown: Vec<String> = report
        .witnesses
        .iter()
        .map(|w| format!("({})", w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    let more = if report.truncated() { " …" } else { "" };
    format!("{} {} {noun}: {}{more}", mark(false), report.violations, shown.join(" "))
}

fn routing_text(rows: &[Vec<usize>]) -> String {
    let n = rows.len();
    let width = n.saturating_sub(1).to_string().len().max(2);
    let mut out = String::from("next hop from u (row) toward v (column):\n");
    let _ = write!(out, "  {:>width$} |", "");
    for v in 0..n {
        let _ = write!(out, " {v:>width$}");
    }
    out.push('\n');
    for (u, row) in rows.iter().enumerate() {
        let _ = write!(out, "  {u:>width$} |");
        for hop in row {
            let _ = write!(out, " {hop:>width$}");
        }
        out.push('\n');
    }
    out
}
