//! Plane embeddings, Kasteleyn orientations and Pfaffian counting of perfect matchings.

mod embedding;
mod orient;
mod plane;

pub use embedding::{dart, dart_edge, twin, Embedding};
pub use orient::{
    count_via_pfaffian, inherited_admissibility_check, kasteleyn_matrix, kasteleyn_matrix_in_order, kasteleyn_orient,
    term_sign, verify_admissible, AdmissibilityReport, CheckMode, Orientation, Violation,
};
pub use plane::{Block, BlockDecomposition, BlockFace, BlockKind, Cycle, PlaneGraph};
