//! Finite groupoids stored as operation tables, and the axioms of travel
//! groupoids and their simple, smooth and semi-smooth refinements.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::axiom::{self, Axiom, AxiomReport};
use crate::error::{Error, Result};
use crate::graph::{content_lines, parse_error, parse_header, Graph, Vertex};
use crate::tpartition::TPartitionSystem;

pub(crate) type Sink<'a> = &'a mut dyn FnMut(&[usize]) -> ControlFlow<()>;

/// An `n × n` operation table; entry `(u, v)` is `u * v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: usize,
    entries: Vec<Vertex>,
}

impl OpTable {
    /// Builds a table from row-major entries. Every entry must be `< n`.
    pub fn new(n: usize, entries: Vec<Vertex>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if entries.len() != n * n {
            return Err(Error::TableShape { expected: n * n, found: entries.len() });
        }
        if let Some(&vertex) = entries.iter().find(|&&e| e >= n) {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(OpTable { n, entries })
    }

    pub fn from_rows<R: AsRef<[Vertex]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if let Some(row) = rows.iter().find(|r| r.as_ref().len() != n) {
            return Err(Error::TableShape { expected: n, found: row.as_ref().len() });
        }
        OpTable::new(n, rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect())
    }

    pub fn from_fn(n: usize, mut op: impl FnMut(Vertex, Vertex) -> Vertex) -> Result<Self> {
        let entries = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).map(|(u, v)| op(u, v));
        OpTable::new(n, entries.collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `u * v`.
    #[inline]
    pub fn op(&self, u: Vertex, v: Vertex) -> Vertex {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[Vertex] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    pub fn entries(&self) -> &[Vertex] {
        &self.entries
    }

    fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    fn scan_t1(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                if self.op(self.op(u, v), u) != u {
                    sink(&[u, v])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_t2(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                if u != v && self.op(self.op(u, v), v) == u {
                    sink(&[u, v])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_t3(&self, sink: Sink) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                let vu = self.op(v, u);
                if vu != u && self.op(u, vu) != self.op(u, v) {
                    sink(&[u, v])?;
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Triples `(u, v, w)` with `u*v = u*w`, handed to `bad` for judgement.
    fn scan_equal_steps(
        &self,
        sink: Sink,
        bad: impl Fn(Vertex, Vertex, Vertex) -> bool,
    ) -> ControlFlow<()> {
        for u in self.vertices() {
            for v in self.vertices() {
                for w in self.vertices() {
                    if self.op(u, v) == self.op(u, w) && bad(u, v, w) {
                        sink(&[u, v, w])?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn scan_t4(&self, sink: Sink) -> ControlFlow<()> {
        self.scan_equal_steps(sink, |u, v, w| self.op(u, self.op(v, w)) != self.op(u, v))
    }

    fn scan_t5(&self, sink: Sink) -> ControlFlow<()> {
        self.scan_equal_steps(sink, |u, v, w| {
            let target = self.op(u, v);
            let vw = self.op(v, w);
            self.op(u, vw) != target && self.op(u, self.op(vw, w)) != target
        })
    }

    /// (t1): `(u*v)*u = u` for all `u, v`.
    pub fn check_t1(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::T1, limit, |s| self.scan_t1(s))
    }

    /// (t2): `(u*v)*v = u` implies `u = v`.
    pub fn check_t2(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::T2, limit, |s| self.scan_t2(s))
    }

    /// (t3), simplicity: `v*u ≠ u` implies `u*(v*u) = u*v`.
    pub fn check_simple(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::T3, limit, |s| self.scan_t3(s))
    }

    /// (t4), smoothness: `u*v = u*w` implies `u*(v*w) = u*v`.
    pub fn check_smooth(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::T4, limit, |s| self.scan_t4(s))
    }

    /// (t5), semi-smoothness: `u*v = u*w` implies `u*(v*w) = u*v` or
    /// `u*((v*w)*w) = u*v`.
    pub fn check_semismooth(&self, limit: usize) -> AxiomReport {
        AxiomReport::collect(Axiom::T5, limit, |s| self.scan_t5(s))
    }

    pub fn is_simple(&self) -> bool {
        axiom::holds(|s| self.scan_t3(s))
    }

    pub fn is_smooth(&self) -> bool {
        axiom::holds(|s| self.scan_t4(s))
    }

    pub fn is_semismooth(&self) -> bool {
        axiom::holds(|s| self.scan_t5(s))
    }

    /// A travel groupoid satisfies (t1) and (t2).
    pub fn is_travel_groupoid(&self) -> bool {
        axiom::holds(|s| self.scan_t1(s)) && axiom::holds(|s| self.scan_t2(s))
    }

    /// The same predicate decided through the right translation system:
    /// (R1), (R2) and `V_{u,u} ⊆ {u}`.
    ///
    /// (R1) and (R2) alone are not enough. The left projection `u*v = u` on
    /// two elements satisfies both but fails (t2): the argument turning a
    /// (t2) violation `(u*v)*v = u` into an (R2) violation needs `u*v ≠ u`,
    /// which is exactly what the diagonal condition supplies.
    pub fn is_travel_groupoid_via_translations(&self) -> bool {
        let system = self.right_translation_system();
        system.satisfies_r1_r2() && system.has_trivial_diagonal()
    }

    /// The graph with an edge `{u, v}` whenever `u ≠ v` and `u*v = v` or
    /// `v*u = u`. For travel groupoids the two conditions coincide.
    pub fn associated_graph(&self) -> Graph {
        let edges = self.vertices().flat_map(|u| (u + 1..self.n).map(move |v| (u, v)));
        let edges = edges.filter(|&(u, v)| self.op(u, v) == v || self.op(v, u) == u);
        Graph::from_edges(self.n, edges.collect::<Vec<_>>())
            .expect("edges are in range, loop-free and distinct")
    }

    /// Whether this groupoid is on `graph`, i.e. its associated graph is `graph`.
    pub fn is_on_graph(&self, graph: &Graph) -> Result<bool> {
        if graph.vertex_count() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: graph.vertex_count() });
        }
        Ok(self.associated_graph() == *graph)
    }

    /// The fibre family `V_{u,v} = {w | u*w = v}`.
    pub fn right_translation_system(&self) -> TPartitionSystem {
        let mut cells = vec![Vec::new(); self.n * self.n];
        for u in self.vertices() {
            for w in self.vertices() {
                cells[u * self.n + self.op(u, w)].push(w);
            }
        }
        TPartitionSystem::from_sorted_cells(self.n, cells)
    }
}

impl fmt::Display for OpTable {
    /// Renders the table file format: `n <N>` then one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for u in self.vertices() {
            let row: Vec<String> = self.row(u).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for OpTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_table(text)
    }
}

/// Parses the operation-table file format.
pub fn parse_table(text: &str) -> Result<OpTable> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut entries = Vec::with_capacity(n * n);
    let mut rows = 0;
    let mut last_line = 1;
    for (line, content) in lines {
        last_line = line;
        if rows == n {
            return Err(parse_error(line, format!("unexpected extra row `{content}`")));
        }
        let before = entries.len();
        for word in content.split_whitespace() {
            let value = word
                .parse::<Vertex>()
                .map_err(|_| parse_error(line, format!("invalid entry `{word}`")))?;
            if value >= n {
                return Err(parse_error(line, format!("entry {value} out of range for {n} vertices")));
            }
            entries.push(value);
        }
        let found = entries.len() - before;
        if found != n {
            return Err(parse_error(line, format!("expected {n} entries, found {found}")));
        }
        rows += 1;
    }
    if rows != n {
        return Err(parse_error(last_line, format!("expected {n} rows, found {rows}")));
    }
    OpTable::new(n, entries)
}
