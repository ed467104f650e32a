//! Box complexes of graphs, exact simplicial homology, and the topological
//! lower bounds on the chromatic number built from them.

pub mod bitset;
pub mod complexes;
pub mod graphs;
pub mod homology;
pub mod z2tools;
pub mod bounds;
pub mod verify;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/graphs.md")]
mod book_graphs {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/complexes.md")]
mod book_complexes {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/homology.md")]
mod book_homology {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/z2tools.md")]
mod book_z2tools {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/bounds.md")]
mod book_bounds {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
mod book_verification {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
