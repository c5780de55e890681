//! Recognition of 1-perfectly orientable graphs, with deciders for the
//! Cartesian, lexicographic, direct and strong products of two graphs.
//!
//! A graph is 1-perfectly orientable (1-p.o.) if its edges can be directed so
//! that every out-neighbourhood is a clique. [`recognize::recognize_2sat`]
//! decides this for any graph; the functions in [`characterize`] decide it for
//! products directly from the factors and build certificates or
//! forbidden-structure witnesses.

pub mod characterize;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod minor;
pub mod orientation;
pub mod products;
pub mod recognize;
pub mod search;
pub mod selftest;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use orientation::Orientation;
pub use products::{PairIndex, ProductKind};
pub use recognize::{recognize_2sat, recognize_bruteforce, RecognitionResult};
pub use characterize::{decide_product, DecideOptions, Verdict, Witness};
