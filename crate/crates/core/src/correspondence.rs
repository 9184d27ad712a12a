//! The one-to-one correspondence between T-partition systems and travel
//! groupoids on a fixed graph.
//!
//! `phi` reads a validated system as a groupoid; `psi` takes a travel
//! groupoid to its right translation system. Both representations are
//! canonical (dense tables, sorted cells), so the round trips are checked by
//! plain equality.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::axiom::Axiom;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groupoid::OpTable;
use crate::tpartition::{TPartitionSystem, ValidatedSystem};

/// The groupoid associated with a validated system.
pub fn phi(system: &ValidatedSystem) -> OpTable {
    system
        .system()
        .associated_groupoid(system.graph())
        .expect("a validated system partitions every closed neighborhood")
}

/// The right translation system of a travel groupoid on `graph`.
///
/// Fails naming t1 or t2 when `table` is not a travel groupoid, or with a
/// size mismatch when it is not on `graph`.
pub fn psi(table: &OpTable, graph: &Graph) -> Result<ValidatedSystem> {
    if !table.check_t1(1).holds {
        return Err(Error::AxiomFailed(Axiom::T1));
    }
    if !table.check_t2(1).holds {
        return Err(Error::AxiomFailed(Axiom::T2));
    }
    if !table.is_on_graph(graph)? {
        return Err(Error::NotOnGraph);
    }
    let system = table.right_translation_system();
    debug_assert!(system.is_tpartition_system(graph).unwrap());
    Ok(ValidatedSystem::new_unchecked(system, graph.clone()))
}

/// One of the three refinements of travel groupoids and systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    Simple,
    Smooth,
    SemiSmooth,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::Simple, Class::Smooth, Class::SemiSmooth];

    /// Decided on the table through (t3), (t4), (t5).
    pub fn of_table(self, table: &OpTable) -> bool {
        match self {
            Class::Simple => table.is_simple(),
            Class::Smooth => table.is_smooth(),
            Class::SemiSmooth => table.is_semismooth(),
        }
    }

    /// Decided on the system through (R3), (R4), (R5).
    pub fn of_system(self, system: &TPartitionSystem) -> bool {
        match self {
            Class::Simple => system.is_simple(),
            Class::Smooth => system.is_smooth(),
            Class::SemiSmooth => system.is_semismooth(),
        }
    }
}

/// Which map broke a round trip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `psi(phi(system)) != system`, or the system is not valid on the graph.
    System(TPartitionSystem),
    /// `phi(psi(table)) != table`, or the table is not a travel groupoid on the graph.
    Groupoid(OpTable),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub graph: Graph,
    pub systems_checked: usize,
    pub groupoids_checked: usize,
    /// `psi(phi(P)) = P` for every system `P`.
    pub psi_phi_identity: bool,
    /// `phi(psi(T)) = T` for every groupoid `T`.
    pub phi_psi_identity: bool,
    /// First failure in input order, systems before groupoids.
    pub counterexample: Option<Counterexample>,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn system_round_trips(system: &TPartitionSystem, graph: &Graph) -> bool {
    let Ok(validated) = system.clone().validate(graph) else {
        return false;
    };
    let table = phi(&validated);
    table.is_travel_groupoid()
        && table.is_on_graph(graph).unwrap_or(false)
        && psi(&table, graph).is_ok_and(|back| back.system() == system)
}

fn groupoid_round_trips(table: &OpTable, graph: &Graph) -> bool {
    psi(table, graph).is_ok_and(|system| phi(&system) == *table)
}

/// Checks both round trips over populations of systems and groupoids on
/// `graph`. The reported counterexample is the first in input order,
/// independent of how the work is scheduled.
pub fn verify_roundtrip(
    graph: &Graph,
    systems: &[TPartitionSystem],
    groupoids: &[OpTable],
) -> CorrespondenceReport {
    let bad_system = systems.par_iter().find_first(|s| !system_round_trips(s, graph));
    let bad_groupoid = groupoids.par_iter().find_first(|t| !groupoid_round_trips(t, graph));
    let counterexample = bad_system
        .cloned()
        .map(Counterexample::System)
        .or_else(|| bad_groupoid.cloned().map(Counterexample::Groupoid));
    CorrespondenceReport {
        graph: graph.clone(),
        systems_checked: systems.len(),
        groupoids_checked: groupoids.len(),
        psi_phi_identity: bad_system.is_none(),
        phi_psi_identity: bad_groupoid.is_none(),
        counterexample,
    }
}

/// Checks that `phi` maps the systems of `class` exactly onto the groupoids
/// of `class`: `{phi(P) | P in systems, P in class}` equals
/// `{T | T in groupoids, T in class}`. Systems must be valid on `graph`.
pub fn class_preserved(
    graph: &Graph,
    class: Class,
    systems: &[TPartitionSystem],
    groupoids: &[OpTable],
) -> Result<bool> {
    let mut images = BTreeSet::new();
    for system in systems.iter().filter(|s| class.of_system(s)) {
        images.insert(phi(&system.clone().validate(graph)?));
    }
    let members: BTreeSet<OpTable> =
        groupoids.iter().filter(|t| class.of_table(t)).cloned().collect();
    Ok(images == members)
}
