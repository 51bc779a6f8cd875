//! Spectral radii of graph powers.
//!
//! The crate provides:
//!
//! - [`graph`]: simple undirected graphs, distances, powers, coalescence;
//! - [`graph6`]: the standard compact text encoding for interchange;
//! - [`spectral`]: a certified power-iteration solver and an exact
//!   characteristic-polynomial oracle for adjacency spectral radii;
//! - [`families`]: parameterized constructors for the extremal families that
//!   appear in the verified claims (paths, cycles, stars, tadpoles, brooms,
//!   cycle-stars, spiders, and stars with one extra edge);
//! - [`iso`]: canonical forms, subgraph containment, and minimal forbidden
//!   subgraph search;
//! - [`enumerate`]: exhaustive generation of trees, unicyclic graphs, and
//!   connected graphs up to isomorphism;
//! - [`verify`]: machine checks of spectral extremality claims over those
//!   enumerations, reported as structured, deterministic artifacts.

pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod spectral;
pub mod verify;

pub use graph::{coalesce, relocate_branch, Graph, GraphError};
pub use graph6::{from_graph6, to_graph6};

/// Runs every Rust snippet in the guide under `cargo test --doc`, one
/// module per chapter so a failure names its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spectral.md")]
    mod spectral {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
