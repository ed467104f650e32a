//! Simplicial complexes built from graphs, posets, and the operations on
//! them.

mod complex;
mod constructions;
mod label;
mod ops;
mod poset;

pub use complex::{ComplexError, Z2Complex};
pub use constructions::{
    bicliques_closed, box0_complex, box_complex, closed_sets, hom_poset, neighborhood_complex, signed_simplex,
    signed_vertex, split_signed,
};
pub use label::Label;
pub use ops::{barycentric_subdivision, complex_join, cross_polytope_boundary, suspension};
pub use poset::{face_poset, label_subset, order_complex, Poset};
