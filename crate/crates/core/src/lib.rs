//! Exact counting of non-intersecting path tuples in glued planar networks,
//! extension of those counts to negative powers through linear recurrences,
//! and checks of the resulting reciprocity identities, including the
//! bounded Dyck fan and skew Schur function applications.
//!
//! All arithmetic is over exact rationals.

pub mod builtin;
pub mod dyck;
pub mod error;
pub mod matrix;
pub mod netfile;
pub mod network;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod reciprocity;
pub mod recurrence;
pub mod schur;
pub mod subset;

pub use dyck::{
    alternating_sequence_count, build_dyck_network, check_dyck_reciprocity, d_value,
    enumerate_dyck_paths, enumerate_fans, fan_to_plane_partition, plane_partition_to_fan,
    proctor_count, DyckFan, DyckPath, DyckReport, HeightBound, PlanePartition,
};
pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use netfile::{
    matrix_to_json, network_to_json, parse_matrix_json, parse_network_file, NetworkFile,
};
pub use network::{
    oracle_nonintersecting_sum, Edge, NetworkSpec, PlanarNetwork, ValidationReport, ORACLE_CAPACITY,
};
pub use partition::{Partition, SkewShape};
pub use poly::{char_poly, RationalPolynomial};
pub use rational::{format_rational, parse_rational, Rational};
pub use reciprocity::{
    check_reciprocity, f_negative, f_recurrence, f_value, Engine, ReciprocityReport,
};
pub use recurrence::{LinearRecurrence, RationalGF};
pub use schur::{
    build_schur_network, check_schur_reciprocity, elementary_eval, homogeneous_eval, hook_content,
    power_sum_eval, schur_boundary_subsets, schur_eval, ssyt_enumerate, EvalPoint, SchurGrid,
    SchurReport, Tableau,
};
pub use subset::SubsetIndex;
