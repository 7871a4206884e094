//! Exact tools for graphical condensation: Pfaffians, perfect matchings, superpositions of
//! matchings, Kasteleyn orientations and randomized checks of Pfaffian identities.

pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod identities;
pub mod kasteleyn;
pub mod matchings;
pub mod pfaffian;
pub mod ring;
pub mod superposition;

pub use error::{Error, Result};
pub use graph::{setsum, sym_diff, Edge, OrderedGraph, OrderedVertexSet, VertexSubset};
pub use matchings::{enumerate_matchings, matching_gf, Matching};
pub use pfaffian::{pf_definition, pf_eliminate, PfMethod, SkewArray};
pub use ring::{Ring, Sign};
