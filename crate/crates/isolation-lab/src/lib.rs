//! Exact isolation-number computations on small graphs, the extremal
//! families built by gadget attachment, and an exhaustive verification
//! harness for the structural claims those families satisfy.
//!
//! A set `D` of vertices is *isolating* if the vertices outside the closed
//! neighborhood `N[D]` form an independent set; the isolation number
//! `iota(G)` is the minimum size of an isolating set. Connected graphs of
//! order `n >= 3` other than the 5-cycle satisfy `iota(G) <= n/3`, and the
//! trees, unicyclic graphs, and block graphs attaining the bound are
//! exactly the ones produced by attaching one rooted gadget (a path,
//! triangle, or one of four 6-vertex pieces) at every vertex of a
//! connected base graph — up to the two exceptional cycles `C6` and `C9`.
//! This crate makes all of that executable:
//!
//! - [`graph`]: immutable bitmask graphs (`n <= 64`), neighborhoods,
//!   connectivity, blocks and cut vertices;
//! - [`graph6`]: the standard graph6 text format, bit-exact;
//! - [`canon`]: canonical labeling and isomorphism keys (`n <= 16`);
//! - [`enumerate`]: all non-isomorphic connected graphs / trees /
//!   unicyclic graphs / block graphs up to desk-scale orders;
//! - [`solver`]: exact isolation and domination numbers with
//!   certificates, plus enumeration of all minimum isolating sets;
//! - [`families`]: the gadget catalog, attachment constructions, and
//!   structural recognizers with decomposition witnesses;
//! - [`verify`]: executable restatements of the structural claims,
//!   producing machine-readable pass/fail reports;
//! - [`cli`]: the `isolationlab` command-line front end.
//!
//! The `examples/` directory shows one runnable program per capability;
//! start with `compute_isolation` and `verify_claims`.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod verify;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{BlockDecomposition, Graph, VertexSet};
