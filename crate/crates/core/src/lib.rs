//! Minimum-wirelength embedding of hypercubes into cylinders.
//!
//! The library provides the Gray-code embedding of Q_n into the cylinder
//! C_{2^{n1}} × P_{2^{n2}} (and its degenerate path/cycle hosts), three
//! independent wirelength engines, the edge-isoperimetric oracles for
//! hypercubes, the type-sequence reduction that certifies optimality, and
//! brute-force verifiers for desk-scale instances. All arithmetic is exact
//! integer arithmetic.

pub mod cylinder;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod graycode;
pub mod hypercube;
pub mod typeseq;
pub mod verify;

pub use error::{Error, Result};

pub use cylinder::{CutId, EdgeCut, HostGraph, HostKind, HostLabel};
pub use embedding::{
    closed_form_wirelength, edge_congestion, gray_embedding, load_embedding, save_embedding,
    wirelength_cut_sums, wirelength_direct, wirelength_via_congestion, wirelength_via_cuts,
    EmbeddingMap, RoutingRule,
};
pub use graycode::{g_value, gray_rank, gray_unrank, segment_set, GrayLabel};
pub use hypercube::{
    cubal_edge_count, make_cubal, theta_min, theta_small_type, theta_type_lower_bound, CubeVertex,
    ThetaProfile, VertexSubset,
};
pub use typeseq::{extract_type_sequence, ConditionReport, Reduction, Stage, TypeSeq};
