//! Graph homology of oriented trivalent graphs, Lie algebra weight systems and
//! Rozansky-Witten invariants of compact hyperkahler manifolds, in exact rational
//! arithmetic.
#![no_std]

extern crate alloc;

pub mod canon;
pub mod chern;
pub mod class;
pub mod error;
pub mod genera;
pub mod graph;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod partition;
pub mod series;
pub mod spaces;

pub use canon::{canonicalize, GraphKey, SignedCanonical};
pub use class::{Atom, ClassName};
pub use error::{Error, Result};
pub use graph::OrientedGraph;
pub use homology::{GraphVector, HomologyBasis};
pub use linalg::Q;
pub use partition::Partition;
