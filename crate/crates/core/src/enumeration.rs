//! Exhaustive generation of all T-partition systems on a graph.
//!
//! A system is searched for in functional form: for each vertex `u` a next-hop
//! map `f_u`, with `V_{u,v} = {w | f_u(w) = v}`. The defining conditions fix
//! `f_u(u) = u` and `f_u(v) = v` for neighbors `v`, and force every other
//! `f_u(w)` into the open neighborhood of `u`. What remains is the
//! cross-vertex condition that `V_{u,v}` and `V_{v,u}` are disjoint, i.e. never
//! `f_u(w) = v` together with `f_v(w) = u`; it is propagated through a ban
//! ledger as assignments are made.
//!
//! Free slots `(u, w)` are assigned with `u` ascending, then `w` ascending,
//! trying neighbors in ascending order, so solutions come out in
//! lexicographic order of the flattened vector `f_0(0), f_0(1), …`.
//!
//! The oracle at the bottom of this module does not share any of this: it
//! scans whole operation tables and asks the groupoid checkers.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::correspondence::Class;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::groupoid::OpTable;
use crate::tpartition::TPartitionSystem;

/// Largest graph the table-scanning oracle accepts unless told otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 4;

/// Which systems to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    #[default]
    All,
    Simple,
    Smooth,
    SemiSmooth,
}

impl Filter {
    fn class(self) -> Option<Class> {
        match self {
            Filter::All => None,
            Filter::Simple => Some(Class::Simple),
            Filter::Smooth => Some(Class::Smooth),
            Filter::SemiSmooth => Some(Class::SemiSmooth),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub filter: Filter,
    /// Skip materializing items; counts are still computed.
    pub count_only: bool,
    /// Worker threads; `0` or `1` runs on the calling thread.
    pub jobs: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { filter: Filter::All, count_only: false, jobs: 1 }
    }
}

/// Counts per class over all systems on a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub total: u64,
    pub simple: u64,
    pub smooth: u64,
    pub semismooth: u64,
}

impl Tally {
    fn record(&mut self, simple: bool, smooth: bool, semismooth: bool) {
        self.total += 1;
        self.simple += u64::from(simple);
        self.smooth += u64::from(smooth);
        self.semismooth += u64::from(semismooth);
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.simple += other.simple;
        self.smooth += other.smooth;
        self.semismooth += other.semismooth;
        self
    }

    pub fn count(&self, filter: Filter) -> u64 {
        match filter {
            Filter::All => self.total,
            Filter::Simple => self.simple,
            Filter::Smooth => self.smooth,
            Filter::SemiSmooth => self.semismooth,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub graph: Graph,
    pub filter: Filter,
    pub tally: Tally,
    /// Systems passing the filter in canonical order; `None` in count-only mode.
    pub items: Option<Vec<TPartitionSystem>>,
}

/// The search state: a partial assignment of every `f_u` plus the ban ledger.
struct Search<'g> {
    graph: &'g Graph,
    n: usize,
    /// Free slots `(u, w)`, `w ∉ N[u]`, in search order.
    slots: Vec<(Vertex, Vertex)>,
    /// `assignment[u * n + w] = f_u(w)`; forced entries are pre-filled.
    assignment: Vec<Vertex>,
    /// `banned[(v * n + w) * n + u]`: `f_v(w) = u` is excluded because
    /// `f_u(w) = v` is currently assigned.
    banned: Vec<bool>,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph) -> Self {
        let n = graph.vertex_count();
        let mut assignment = vec![usize::MAX; n * n];
        let mut slots = Vec::new();
        for u in 0..n {
            for w in 0..n {
                if graph.in_closed_neighborhood(u, w) {
                    assignment[u * n + w] = w;
                } else {
                    slots.push((u, w));
                }
            }
        }
        Search { graph, n, slots, assignment, banned: vec![false; n * n * n] }
    }

    /// Forced entries already breaking disjointness, `f_u(w) = v` and
    /// `f_v(w) = u`. They never do for simple graphs; checked once anyway.
    fn forced_conflict(&self) -> bool {
        let n = self.n;
        (0..n).any(|u| {
            (0..n).filter(|&w| self.graph.in_closed_neighborhood(u, w)).any(|w| {
                let v = self.assignment[u * n + w];
                v != u && self.graph.in_closed_neighborhood(v, w) && self.assignment[v * n + w] == u
            })
        })
    }

    #[inline]
    fn ban_index(&self, v: Vertex, w: Vertex, u: Vertex) -> usize {
        (v * self.n + w) * self.n + u
    }

    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[Vertex])) {
        let Some(&(u, w)) = self.slots.get(depth) else {
            visit(&self.assignment);
            return;
        };
        let graph = self.graph;
        for &v in graph.neighbors_unchecked(u) {
            if self.banned[self.ban_index(u, w, v)] {
                continue;
            }
            self.assignment[u * self.n + w] = v;
            let ban = self.ban_index(v, w, u);
            self.banned[ban] = true;
            self.run(depth + 1, visit);
            self.banned[ban] = false;
        }
        self.assignment[u * self.n + w] = usize::MAX;
    }

    /// Fixes the first free slot to `value` and searches the rest.
    fn run_branch(&mut self, value: Vertex, visit: &mut dyn FnMut(&[Vertex])) {
        let (u, w) = self.slots[0];
        self.assignment[u * self.n + w] = value;
        let ban = self.ban_index(value, w, u);
        self.banned[ban] = true;
        self.run(1, visit);
        self.banned[ban] = false;
    }
}

fn system_from_assignment(n: usize, assignment: &[Vertex]) -> TPartitionSystem {
    let mut cells = vec![Vec::new(); n * n];
    for u in 0..n {
        for w in 0..n {
            cells[u * n + assignment[u * n + w]].push(w);
        }
    }
    TPartitionSystem::from_sorted_cells(n, cells)
}

/// Calls `visit` with every T-partition system on `graph`, in canonical
/// order, as its assignment vector `f_0(0), …, f_{n-1}(n-1)`.
pub fn for_each_assignment(graph: &Graph, mut visit: impl FnMut(&[Vertex])) {
    let mut search = Search::new(graph);
    if search.forced_conflict() {
        return;
    }
    search.run(0, &mut visit);
}

#[derive(Default)]
struct Partial {
    tally: Tally,
    items: Vec<TPartitionSystem>,
}

fn collect_leaf(n: usize, options: &EnumerationOptions, acc: &mut Partial, assignment: &[Vertex]) {
    let system = system_from_assignment(n, assignment);
    let simple = system.is_simple();
    let smooth = system.is_smooth();
    let semismooth = smooth || system.is_semismooth();
    acc.tally.record(simple, smooth, semismooth);
    if options.count_only {
        return;
    }
    let keep = match options.filter.class() {
        None => true,
        Some(Class::Simple) => simple,
        Some(Class::Smooth) => smooth,
        Some(Class::SemiSmooth) => semismooth,
    };
    if keep {
        acc.items.push(system);
    }
}

/// Enumerates every T-partition system on `graph` exactly once.
///
/// With `jobs > 1` the top-level choices for the first free slot are
/// searched in parallel and merged in order, so the output does not depend
/// on the worker count.
pub fn enumerate_systems(graph: &Graph, options: EnumerationOptions) -> EnumerationResult {
    let n = graph.vertex_count();
    let probe = Search::new(graph);
    let first_choices: Vec<Vertex> = match probe.slots.first() {
        Some(&(u, _)) if options.jobs > 1 && !probe.forced_conflict() => {
            graph.neighbors_unchecked(u).to_vec()
        }
        _ => Vec::new(),
    };

    let partial = if first_choices.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        let branches: Vec<Partial> = pool.install(|| {
            first_choices
                .par_iter()
                .map(|&value| {
                    let mut acc = Partial::default();
                    let mut search = Search::new(graph);
                    search.run_branch(value, &mut |a| collect_leaf(n, &options, &mut acc, a));
                    acc
                })
                .collect()
        });
        branches.into_iter().fold(Partial::default(), |mut all, part| {
            all.tally = all.tally.merge(part.tally);
            all.items.extend(part.items);
            all
        })
    } else {
        let mut acc = Partial::default();
        for_each_assignment(graph, |a| collect_leaf(n, &options, &mut acc, a));
        acc
    };

    EnumerationResult {
        graph: graph.clone(),
        filter: options.filter,
        tally: partial.tally,
        items: (!options.count_only).then_some(partial.items),
    }
}

/// `∏_u max(1, deg u)^(n - 1 - deg u)`: the number of assignments before
/// the disjointness condition is applied.
pub fn assignment_upper_bound(graph: &Graph) -> u128 {
    let n = graph.vertex_count();
    (0..n)
        .map(|u| {
            let deg = graph.degree(u).expect("u in range");
            (deg.max(1) as u128).pow((n - 1 - deg) as u32)
        })
        .product()
}

// -- oracle ------------------------------------------------------------------

/// Every travel groupoid on `graph`, by scanning operation tables.
///
/// `u*u = u` and `u*v = v` for adjacent `v` are fixed; each other entry
/// `u*w` ranges over the neighbors of `u`. Every completed table is judged
/// by [`OpTable::is_travel_groupoid`] and [`OpTable::is_on_graph`] alone.
/// Tables come out in lexicographic order of their entries.
pub fn oracle_enumerate(graph: &Graph, limit: usize) -> Result<Vec<OpTable>> {
    let n = graph.vertex_count();
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    let mut entries = vec![0; n * n];
    let mut free: Vec<(usize, &[Vertex])> = Vec::new();
    for u in 0..n {
        let neighbors = graph.open_neighborhood(u)?;
        for w in 0..n {
            if w == u || neighbors.contains(&w) {
                entries[u * n + w] = w;
            } else {
                if neighbors.is_empty() {
                    return Ok(Vec::new());
                }
                entries[u * n + w] = neighbors[0];
                free.push((u * n + w, neighbors));
            }
        }
    }

    let mut found = Vec::new();
    let mut digits = vec![0usize; free.len()];
    loop {
        let table = OpTable::new(n, entries.clone())?;
        if table.is_travel_groupoid() && table.is_on_graph(graph)? {
            found.push(table);
        }
        // Odometer with the last free entry as the fastest digit.
        let mut i = free.len();
        loop {
            if i == 0 {
                return Ok(found);
            }
            i -= 1;
            let (at, domain) = free[i];
            digits[i] += 1;
            if digits[i] < domain.len() {
                entries[at] = domain[digits[i]];
                break;
            }
            digits[i] = 0;
            entries[at] = domain[0];
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub oracle: Tally,
    pub csp: Tally,
    /// The right translation systems of the oracle's tables are exactly the
    /// systems the search produced.
    pub sets_match: bool,
    pub tallies_match: bool,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.sets_match && self.tallies_match
    }
}

/// Compares the search against the table-scanning oracle on `graph`. The
/// oracle side classifies with (t3)/(t4)/(t5), the search side with
/// (R3)/(R4)/(R5).
pub fn cross_validate(graph: &Graph, oracle_limit: usize) -> Result<CrossValidation> {
    let tables = oracle_enumerate(graph, oracle_limit)?;
    let mut oracle = Tally::default();
    for t in &tables {
        oracle.record(t.is_simple(), t.is_smooth(), t.is_semismooth());
    }
    let translated: BTreeSet<TPartitionSystem> =
        tables.iter().map(OpTable::right_translation_system).collect();

    let result = enumerate_systems(graph, EnumerationOptions::default());
    let items = result.items.expect("items requested");
    let searched: BTreeSet<TPartitionSystem> = items.iter().cloned().collect();

    Ok(CrossValidation {
        oracle,
        csp: result.tally,
        sets_match: translated == searched && items.len() == tables.len(),
        tallies_match: oracle == result.tally,
    })
}
