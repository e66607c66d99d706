//! Constructive precoloring extension for edge colorings of Cartesian
//! products with bipartite base graphs.
//!
//! Given a bipartite graph `G` and a precolored induced matching in
//! `G □ K_{2m}`, `G □ Q_m`, `G □ K_{1,m}` or the hypercube `Q_d`, the
//! [`extension`] module builds a proper edge coloring with `χ'` colors that
//! keeps every prescribed color. Supporting pieces:
//!
//! - [`graph`]: immutable simple graphs, bipartition, vertex and edge distance.
//! - [`families`]: standard graphs, Cartesian products with layer/fiber
//!   metadata, and the star-into-hypercube embedding.
//! - [`coloring`]: König, Galvin kernel-method and exact list edge coloring,
//!   and round-robin 1-factorizations.
//! - [`oracle`]: exact extendability decisions, local obstruction
//!   certificates and provably non-extendable instances.
//! - [`explore`]: exhaustive/sampled search over `G □ K_{n,m}`.
//! - [`io`]: JSON documents and DOT export.

pub mod coloring;
pub mod error;
pub mod explore;
pub mod extension;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod random;

pub use coloring::{
    bkw_list_color, exact_list_color, galvin_list_color, konig_color, one_factorization,
    verify_proper, Color, ColoringReport, EdgeColoring, ListAssignment,
};
pub use error::{Error, Result};
pub use explore::{explore_conjecture11, ExplorationReport};
pub use extension::{
    classify_precolored, color_fibers, extend_hypercube, extend_over_complete,
    extend_over_hypercube, extend_over_star, reduce, validate_precoloring, Precoloring,
    PrecoloringReport, ReducedInstance,
};
pub use families::{cartesian_product, EdgeKind, Family, ProductGraph, StarEmbedding};
pub use graph::{Bipartition, Distance, EdgeId, Graph};
pub use oracle::{
    build_claim9_instance, check_local_obstruction, decide_extendable,
    find_covering_induced_matching, Claim9Instance, ObstructionCertificate, Verdict,
};
