//! Gardens of generic real rational functions.
//!
//! A garden is a weighted, labeled, directed noncrossing chord diagram with a
//! weighted rooted tree attached to each face. Equivalence classes of gardens
//! of total weight `n` index the connected components of the space of generic
//! real rational functions of degree `n`.
//!
//! - [`garden`]: data model, validation, faces, pants and canonical keys.
//! - [`enumerate`]: exhaustive enumeration and component counts.
//! - [`hurwitz`]: exact real Hurwitz numbers with independent oracles.
//! - [`extract`]: numerical construction of the garden of a given function.
//! - [`cli`]: the `garden` command-line front end and its result cache.

pub mod enumerate;
pub mod garden;
pub mod cli;
pub mod extract;
pub mod hurwitz;

pub use garden::{
    are_equivalent, canonical_form, canonical_key, faces, pants_collection, total_weight,
    validate_garden, CanonicalKey, ChordDiagram, Direction, Edge, Face, Garden, GardenError,
    Pants, PantsCollection, Sign, TreeNode, ValidationReport, Violation, Weight, WeightedTree,
};
