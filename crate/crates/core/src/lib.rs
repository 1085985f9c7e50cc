//! Colorful words, their simplicial complexes, and the Tverberg partitions
//! they describe.
//!
//! A word `W` over vertex labels determines the complex `Δ^d(W)` whose faces
//! are the alphabets of `d`-colorful subwords of `W`. For point sequences in
//! strong general position on the moment curve, the nerve of the convex hulls
//! of a partition equals `Δ^d` of the word obtained by reading the part labels
//! in order. The crate provides
//!
//! - [`complex`]: finite simplicial complexes stored by facets,
//! - [`words`]: colorful subword search, `Δ^d(W)`, and word constructions,
//! - [`geometry`]: exact rational linear feasibility and hull intersections,
//! - [`tverberg`]: partitions, nerves and minimal Tverberg partitions,
//! - [`gd`]: the bipartite graphs `G_d` and a bounded word search,
//! - [`format`] and [`cli`]: text formats and the `colorful` command.

pub mod cli;
pub mod complex;
mod enumerate;
pub mod error;
pub mod format;
pub mod gd;
pub mod geometry;
pub mod tverberg;
pub mod words;

pub use complex::{Face, SimplicialComplex, Vertex};
pub use error::{Error, Result};
pub use geometry::{Point, PointSequence, Rational};
pub use tverberg::{Partition, TverbergWitness};
pub use words::{delta_complex, find_colorful_subword, is_colorful, ColorfulCertificate, Word};
