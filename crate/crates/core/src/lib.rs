//! Travel groupoids on finite graphs and their characterization through
//! T-partition systems.
//!
//! A travel groupoid is a binary operation `*` on a vertex set with
//! `(u*v)*u = u` and `(u*v)*v = u ⇒ u = v`. Reading `u*v` as "the next hop
//! from `u` toward `v`", such an operation is a consistent next-hop routing
//! table, and it determines a graph (the edges `{u, v}` with `u*v = v`).
//!
//! The crate provides
//!
//! * [`graph`]: finite simple graphs and their text format;
//! * [`groupoid`]: operation tables and the axiom checkers t1–t5;
//! * [`tpartition`]: T-partition systems, conditions P0–P2 and R1–R5;
//! * [`correspondence`]: the bijection between the two on a fixed graph;
//! * [`enumeration`]: exhaustive generation plus an independent oracle.

pub mod axiom;
pub mod correspondence;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod groupoid;
pub mod tpartition;

pub use axiom::{Axiom, AxiomReport, DEFAULT_WITNESS_LIMIT};
pub use correspondence::{phi, psi, verify_roundtrip, Class, CorrespondenceReport, Counterexample};
pub use enumeration::{
    cross_validate, enumerate_systems, oracle_enumerate, CrossValidation, EnumerationOptions,
    EnumerationResult, Filter, Tally, DEFAULT_ORACLE_LIMIT,
};
pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, Vertex};
pub use groupoid::{parse_table, OpTable};
pub use tpartition::{parse_system, Reading, TPartitionSystem, ValidatedSystem};
