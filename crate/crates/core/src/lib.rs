//! Simplicial models of ordered and unordered configuration spaces on finite
//! abstract simplicial complexes.
//!
//! The crate builds ordered simplicial powers, fat diagonals, barycentric
//! subdivisions, simplicial differences and complement models; tracks
//! finite group actions through these constructions; forms quotients of
//! regular actions; and computes integer homology by Smith normal form.

pub mod actions;
pub mod complex;
pub mod constructions;
pub mod document;
pub mod error;
pub mod homology;
pub mod label;
pub mod nerve;
pub mod standard;

pub use actions::{
    induced_action, is_regular, is_semiregular, isotropy_subgroup, orbit_partition, quotient_complex,
    symmetric_group_action, ActionKind, IsotropySubgroup, Quotient, RegularityWitness, SimplicialAction,
    VertexPermutation,
};
pub use complex::{FVector, Simplex, SimplicialComplex, VertexId};
pub use constructions::{
    barycentric_subdivision, complement_model, conf_model, conf_model_bs, fat_diagonal, is_power_simplex,
    ordered_power, simplicial_difference, ComplementModel, PowerSimplexMatrix,
};
pub use error::{Error, Result};
pub use homology::{chain_complex, homology_profile, smith_normal_form, ChainComplex, HomologyProfile, IntMatrix};
pub use label::VertexLabel;
pub use nerve::{minimal_nonface_nerve, nerve_matches_difference, nerve_of_subcomplex_cover, CoverIndex};
