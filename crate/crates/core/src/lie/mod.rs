//! Lie algebras by structure constants, their series, ideals and quotients.

mod algebra;
pub mod io;
mod ops;
mod series;

pub use algebra::{default_names, LieAlgebra};
pub use io::{format_structure_constants, parse_structure_constants};
pub use ops::{conjugate, direct_sum, ideal_closure, is_ideal, is_subalgebra, quotient};
pub use series::{
    bracket_with_algebra, center, derived_algebra, is_nilpotent, lower_central_series, preimage_of,
    upper_central_series,
};
