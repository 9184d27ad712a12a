//! Axiom names and per-axiom check reports.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

/// Witness cap used when the caller does not pick one.
pub const DEFAULT_WITNESS_LIMIT: usize = 100;

/// Every condition this crate can check.
///
/// Witness tuple shapes, per axiom:
///
/// | axiom        | witness              |
/// |--------------|----------------------|
/// | t1, t2, t3   | `(u, v)`             |
/// | t4, t5       | `(u, v, w)`          |
/// | R1           | `(u, v)`             |
/// | R2, P2       | `(u, v, w)`, `u < v`, `w` in both cells |
/// | R3           | `(u, v, x, y)`       |
/// | R4           | `(u, v, x, y, z)`    |
/// | R5           | `(u, v, x, y, z, w)` |
/// | P0           | `(u, w)`, `w` not covered exactly once |
/// | P1a          | `(u)`                |
/// | P1b, P1c     | `(u, v)`             |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    T1,
    T2,
    T3,
    T4,
    T5,
    R1,
    R2,
    R3,
    R4,
    R5,
    P0,
    P1a,
    P1b,
    P1c,
    P2,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::T1 => "t1",
            Axiom::T2 => "t2",
            Axiom::T3 => "t3",
            Axiom::T4 => "t4",
            Axiom::T5 => "t5",
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::R3 => "R3",
            Axiom::R4 => "R4",
            Axiom::R5 => "R5",
            Axiom::P0 => "P0",
            Axiom::P1a => "P1a",
            Axiom::P1b => "P1b",
            Axiom::P1c => "P1c",
            Axiom::P2 => "P2",
        }
    }
}

impl Serialize for Axiom {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of checking one axiom.
///
/// `holds` is true iff `violations == 0`. `witnesses` holds the first
/// `min(violations, limit)` violating tuples in scan order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    pub violations: usize,
    pub witnesses: Vec<Vec<usize>>,
}

impl AxiomReport {
    /// Runs a violation scanner to completion, keeping up to `limit` witnesses.
    /// The limit is raised to 1 so that a failing report always carries one.
    pub(crate) fn collect<F>(axiom: Axiom, limit: usize, scan: F) -> Self
    where
        F: FnOnce(&mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()>,
    {
        let limit = limit.max(1);
        let mut violations = 0;
        let mut witnesses = Vec::new();
        let _ = scan(&mut |witness| {
            violations += 1;
            if witnesses.len() < limit {
                witnesses.push(witness.to_vec());
            }
            ControlFlow::Continue(())
        });
        AxiomReport { axiom, holds: violations == 0, violations, witnesses }
    }

    /// Whether the report's witness list was cut short by the limit.
    pub fn truncated(&self) -> bool {
        self.witnesses.len() < self.violations
    }
}

/// Runs a violation scanner only until the first violation.
pub(crate) fn holds<F>(scan: F) -> bool
where
    F: FnOnce(&mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()>,
{
    scan(&mut |_| ControlFlow::Break(())).is_continue()
}
