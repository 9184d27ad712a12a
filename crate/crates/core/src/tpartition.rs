//! T-partition systems: families of vertex subsets `V_{u,v}` indexed by
//! ordered vertex pairs.
//!
//! A system is stored densely, one sorted cell per ordered pair, including
//! the empty cells of non-adjacent pairs. The defining conditions
//! (P0), (P1a), (P1b), (P1c), (P2) are checked against a [`Graph`]; the
//! classification conditions (R3), (R4), (R5) and the translation-system
//! properties (R1), (R2) only look at the cells.
//!
//! (R4) and (R5) are stated with `x ∈ V_{y,z}` while the arguments that
//! use them work with `y ∈ V_{x,z}`. Both readings are available through
//! [`Reading`]; since `x` and `y` range symmetrically over `V_{u,v}` they
//! always agree, which debug builds assert on every check.

use std::fmt::{self, Write as _};
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Deserialize;

use crate::axiom::{self, Axiom, AxiomReport};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::groupoid::{OpTable, Sink};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPartitionSystem {
    n: usize,
    /// Row-major: `cells[u * n + v]` is `V_{u,v}`, strictly ascending.
    cells: Vec<Vec<Vertex>>,
}

/// Which membership the hypothesis of (R4)/(R5) tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// `x ∈ V_{y,z}` (and `x ∈ V_{z,w}` for R5).
    Statement,
    /// `y ∈ V_{x,z}` (and `y ∈ V_{z,w}` for R5).
    Proof,
}

impl TPartitionSystem {
    /// Builds a system from `rows[u][v] = V_{u,v}`. Cells are treated as
    /// sets: order and repetition in the input do not matter.
    pub fn new(rows: Vec<Vec<Vec<Vertex>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut cells = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::CellShape { expected: n, found: row.len() });
            }
            for mut cell in row {
                if let Some(&vertex) = cell.iter().find(|&&w| w >= n) {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
                cell.sort_unstable();
                cell.dedup();
                cells.push(cell);
            }
        }
        Ok(TPartitionSystem { n, cells })
    }

    pub(crate) fn from_sorted_cells(n: usize, cells: Vec<Vec<Vertex>>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert!(cells.iter().all(|c| c.windows(2).all(|w| w[0] < w[1])));
        TPartitionSystem { n, cells }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `V_{u,v}`, ascending.
    pub fn cell(&self, u: Vertex, v: Vertex) -> &[Vertex] {
        &self.cells[u * self.n + v]
    }

    /// `w ∈ V_{u,v}`.
    #[inline]
    pub fn contains(&self, u: Vertex, v: Vertex, w: Vertex) -> bool {
        self.cell(u, v).binary_search(&w).is_ok()
    }

    /// Rows of cells, `rows()[u][v] = V_{u,v}`.
    pub fn rows(&self) -> Vec<Vec<Vec<Vertex>>> {
        self.cells.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    fn same_size(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() == self.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch { left: self.n, right: g.vertex_count() })
        }
    }

    // -- right translation system properties -------------------------------

    fn scan_r1(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                if !self.cell(u, v).is_empty() && !self.contains(v, u, u) {
                    sink(&[u, v])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Disjointness of `V_{u,v}` and `V_{v,u}` for `u < v`; shared by (R2) and (P2).
    fn scan_opposite_disjoint(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in u + 1..self.n {
                for &w in self.cell(u, v) {
                    if self.contains(v, u, w) {
                        sink(&[u, v, w])?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// (R1): `V_{u,v} ≠ ∅` implies `u ∈ V_{v,u}`.
    pub fn check_r1(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::R1, limit, |s| self.scan_r1(s))
    }

    /// (R2): `V_{u,v} ∩ V_{v,u} = ∅` for `u ≠ v`.
    pub fn check_r2(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::R2, limit, |s| self.scan_opposite_disjoint(s))
    }

    pub fn satisfies_r1(&self) -> bool {
        axiom::holds(|s| self.scan_r1(s))
    }

    pub fn satisfies_r2(&self) -> bool {
        axiom::holds(|s| self.scan_opposite_disjoint(s))
    }

    pub fn satisfies_r1_r2(&self) -> bool {
        self.satisfies_r1() && self.satisfies_r2()
    }

    /// `V_{u,u} ⊆ {u}` for every `u`.
    pub fn has_trivial_diagonal(&self) -> bool {
        self.vertices().all(|u| self.cell(u, u).iter().all(|&w| w == u))
    }

    // -- defining conditions ------------------------------------------------

    fn scan_p0(&self, g: &Graph, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            let blocks = g.closed_neighborhood(u).expect("u in range");
            for w in self.vertices() {
                let covering = blocks.iter().filter(|&&v| self.contains(u, v, w)).count();
                if covering != 1 {
                    sink(&[u, w])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_p1a(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            if self.cell(u, u) != [u] {
                sink(&[u])?;
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_p1b(&self, g: &Graph, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                if u != v && self.contains(u, v, v) != g.has_edge(u, v) {
                    sink(&[u, v])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_p1c(&self, g: &Graph, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                if u != v && self.cell(u, v).is_empty() == g.has_edge(u, v) {
                    sink(&[u, v])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// (P0): for every `u`, `{V_{u,v} | v ∈ N[u]}` covers `V` and its members
    /// are pairwise disjoint. Nonemptiness of neighbor-indexed blocks is left
    /// to (P1b).
    pub fn check_p0(&self, g: &Graph, limit: usize) -> Result<AxiomReport> {
        self.same_size(g)?;
        Ok(AxiomReport::collect(Axiom::P0, limit, |s| self.scan_p0(g, s)))
    }

    /// (P1a): `V_{u,u} = {u}`.
    pub fn check_p1a(&self, g: &Graph, limit: usize) -> Result<AxiomReport> {
        self.same_size(g)?;
        Ok(AxiomReport::collect(Axiom::P1a, limit, |s| self.scan_p1a(s)))
    }

    /// (P1b): for `u ≠ v`, `v ∈ V_{u,v}` iff `{u, v}` is an edge.
    pub fn check_p1b(&self, g: &Graph, limit: usize) -> Result<AxiomReport> {
        self.same_size(g)?;
        Ok(AxiomReport::collect(Axiom::P1b, limit, |s| self.scan_p1b(g, s)))
    }

    /// (P1c): for `u ≠ v`, `V_{u,v} = ∅` iff `{u, v}` is not an edge.
    pub fn check_p1c(&self, g: &Graph, limit: usize) -> Result<AxiomReport> {
        self.same_size(g)?;
        Ok(AxiomReport::collect(Axiom::P1c, limit, |s| self.scan_p1c(g, s)))
    }

    /// (P2): `V_{u,v} ∩ V_{v,u} = ∅` for `u ≠ v`.
    pub fn check_p2(&self, g: &Graph, limit: usize) -> Result<AxiomReport> {
        self.same_size(g)?;
        Ok(AxiomReport::collect(Axiom::P2, limit, |s| self.scan_opposite_disjoint(s)))
    }

    /// Reports for P0, P1a, P1b, P1c, P2 in that order.
    pub fn check_definition(&self, g: &Graph, limit: usize) -> Result<Vec<AxiomReport>> {
        Ok(vec![
            self.check_p0(g, limit)?,
            self.check_p1a(g, limit)?,
            self.check_p1b(g, limit)?,
            self.check_p1c(g, limit)?,
            self.check_p2(g, limit)?,
        ])
    }

    /// The first defining condition that fails on `g`, if any.
    fn first_failure(&self, g: &Graph) -> Result<Option<Axiom>> {
        self.same_size(g)?;
        let failed = if !axiom::holds(|s| self.scan_p0(g, s)) {
            Some(Axiom::P0)
        } else if !axiom::holds(|s| self.scan_p1a(s)) {
            Some(Axiom::P1a)
        } else if !axiom::holds(|s| self.scan_p1b(g, s)) {
            Some(Axiom::P1b)
        } else if !axiom::holds(|s| self.scan_p1c(g, s)) {
            Some(Axiom::P1c)
        } else if !axiom::holds(|s| self.scan_opposite_disjoint(s)) {
            Some(Axiom::P2)
        } else {
            None
        };
        Ok(failed)
    }

    /// Whether this is a T-partition system on `g`.
    pub fn is_tpartition_system(&self, g: &Graph) -> Result<bool> {
        Ok(self.first_failure(g)?.is_none())
    }

    /// Checks all defining conditions against `g` and records the result.
    pub fn validate(self, g: &Graph) -> Result<ValidatedSystem> {
        match self.first_failure(g)? {
            Some(failed) => Err(Error::AxiomFailed(failed)),
            None => Ok(ValidatedSystem { system: self, graph: g.clone() }),
        }
    }

    /// The groupoid with `u * v` = the unique `w ∈ N[u]` such that
    /// `v ∈ V_{u,w}`.
    ///
    /// Fails with [`Error::NotAPartition`] at the first `(u, v)` where that
    /// vertex is missing or ambiguous, which cannot happen on a validated
    /// system.
    pub fn associated_groupoid(&self, g: &Graph) -> Result<OpTable> {
        self.same_size(g)?;
        let mut entries = vec![usize::MAX; self.n * self.n];
        let mut hits = vec![0usize; self.n];
        for u in self.vertices() {
            hits.iter_mut().for_each(|h| *h = 0);
            for w in g.closed_neighborhood(u).expect("u in range") {
                for &v in self.cell(u, w) {
                    entries[u * self.n + v] = w;
                    hits[v] += 1;
                }
            }
            if let Some(v) = hits.iter().position(|&h| h != 1) {
                return Err(Error::NotAPartition { u, v, count: hits[v] });
            }
        }
        OpTable::new(self.n, entries)
    }

    // -- classification conditions ----------------------------------------

    fn scan_r3(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                for x in self.vertices().filter(|&x| x != u && self.contains(v, x, u)) {
                    for y in self.vertices().filter(|&y| y != v && self.contains(u, y, v)) {
                        if !(self.contains(u, y, x) && self.contains(v, x, y)) {
                            sink(&[u, v, x, y])?;
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Whether the hypothesis membership `first, second ∈ V_{u,v}, first ∈ V_{second,z}`
    /// (statement reading) or `second ∈ V_{first,z}` (proof reading) holds.
    #[inline]
    fn step(&self, reading: Reading, x: Vertex, y: Vertex, z: Vertex) -> bool {
        match reading {
            Reading::Statement => self.contains(y, z, x),
            Reading::Proof => self.contains(x, z, y),
        }
    }

    #[inline]
    fn step_member(&self, reading: Reading, x: Vertex, y: Vertex, z: Vertex, w: Vertex) -> bool {
        match reading {
            Reading::Statement => self.contains(z, w, x),
            Reading::Proof => self.contains(z, w, y),
        }
    }

    fn scan_r4(&self, reading: Reading, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                let cell = self.cell(u, v);
                for &x in cell {
                    for &y in cell {
                        for z in self.vertices() {
                            if self.step(reading, x, y, z) && !self.contains(u, v, z) {
                                sink(&[u, v, x, y, z])?;
                            }
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_r5(&self, reading: Reading, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                let cell = self.cell(u, v);
                for &x in cell {
                    for &y in cell {
                        for z in self.vertices().filter(|&z| self.step(reading, x, y, z)) {
                            if self.contains(u, v, z) {
                                continue;
                            }
                            for w in self.vertices() {
                                if self.step_member(reading, x, y, z, w) && !self.contains(u, v, w) {
                                    sink(&[u, v, x, y, z, w])?;
                                }
                            }
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// (R3), simple systems: if `u ∈ V_{v,x}`, `v ∈ V_{u,y}`, `u ≠ x` and
    /// `v ≠ y`, then `x ∈ V_{u,y}` and `y ∈ V_{v,x}`.
    pub fn check_r3(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::R3, limit, |s| self.scan_r3(s))
    }

    /// (R4), smooth systems: if `x, y ∈ V_{u,v}` and `x ∈ V_{y,z}`, then
    /// `z ∈ V_{u,v}`.
    pub fn check_r4(&self, limit: usize) -> AxiomReport {
        let report = self.check_r4_reading(Reading::Statement, limit);
        debug_assert_eq!(report.holds, self.satisfies_r4_reading(Reading::Proof));
        report
    }

    pub fn check_r4_reading(&self, reading: Reading, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::R4, limit, |s| self.scan_r4(reading, s))
    }

    /// (R5), semi-smooth systems: if `x, y ∈ V_{u,v}` and
    /// `x ∈ V_{y,z} ∩ V_{z,w}`, then `z ∈ V_{u,v}` or `w ∈ V_{u,v}`.
    pub fn check_r5(&self, limit: usize) -> AxiomReport {
        let report = self.check_r5_reading(Reading::Statement, limit);
        debug_assert_eq!(report.holds, self.satisfies_r5_reading(Reading::Proof));
        report
    }

    pub fn check_r5_reading(&self, reading: Reading, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::R5, limit, |s| self.scan_r5(reading, s))
    }

    pub fn is_simple(&self) -> bool {
        axiom::holds(|s| self.scan_r3(s))
    }

    pub fn is_smooth(&self) -> bool {
        self.satisfies_r4_reading(Reading::Statement)
    }

    pub fn is_semismooth(&self) -> bool {
        self.satisfies_r5_reading(Reading::Statement)
    }

    pub fn satisfies_r4_reading(&self, reading: Reading) -> bool {
        axiom::holds(|s| self.scan_r4(reading, s))
    }

    pub fn satisfies_r5_reading(&self, reading: Reading) -> bool {
        axiom::holds(|s| self.scan_r5(reading, s))
    }

    /// Reports for R3, R4, R5 in that order.
    pub fn check_classes(&self, limit: usize) -> Vec<AxiomReport> {
        vec![self.check_r3(limit), self.check_r4(limit), self.check_r5(limit)]
    }
}

/// A system that passed all five defining conditions on `graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedSystem {
    system: TPartitionSystem,
    graph: Graph,
}

impl ValidatedSystem {
    pub fn system(&self) -> &TPartitionSystem {
        &self.system
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_system(self) -> TPartitionSystem {
        self.system
    }

    pub(crate) fn new_unchecked(system: TPartitionSystem, graph: Graph) -> Self {
        ValidatedSystem { system, graph }
    }
}

// -- file format -------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    n: usize,
    cells: Vec<Vec<Vec<Vertex>>>,
}

/// Parses the system file format: a JSON object `{"n": N, "cells": [...]}`
/// where `cells[u][v]` lists `V_{u,v}` strictly ascending.
pub fn parse_system(text: &str) -> Result<TPartitionSystem> {
    let file: SystemFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    let header_error = |message: String| Error::Parse { line: 1, message };
    if file.n == 0 {
        return Err(header_error("vertex count must be at least 1".into()));
    }
    if file.cells.len() != file.n {
        return Err(header_error(format!("expected {} rows of cells, found {}", file.n, file.cells.len())));
    }
    for (u, row) in file.cells.iter().enumerate() {
        if row.len() != file.n {
            return Err(header_error(format!("row {u} has {} cells, expected {}", row.len(), file.n)));
        }
        for (v, cell) in row.iter().enumerate() {
            if cell.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::UnsortedCell { u, v });
            }
        }
    }
    TPartitionSystem::new(file.cells)
}

impl TPartitionSystem {
    /// The same object as the file format, on a single line without spaces.
    pub fn to_json_line(&self) -> String {
        let rows = serde_json::to_string(&self.rows()).expect("integers serialize");
        format!("{{\"n\":{},\"cells\":{rows}}}", self.n)
    }
}

impl fmt::Display for TPartitionSystem {
    /// Canonical rendering, one row of cells per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{{")?;
        writeln!(f, "  \"n\": {},", self.n)?;
        writeln!(f, "  \"cells\": [")?;
        for u in self.vertices() {
            let mut line = String::from("    [");
            for v in self.vertices() {
                if v > 0 {
                    line.push_str(", ");
                }
                line.push('[');
                for (i, w) in self.cell(u, v).iter().enumerate() {
                    if i > 0 {
                        line.push_str(", ");
                    }
                    write!(line, "{w}")?;
                }
                line.push(']');
            }
            line.push(']');
            if u + 1 < self.n {
                line.push(',');
            }
            writeln!(f, "{line}")?;
        }
        writeln!(f, "  ]")?;
        writeln!(f, "}}")
    }
}

impl FromStr for TPartitionSystem {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_system(text)
    }
}
