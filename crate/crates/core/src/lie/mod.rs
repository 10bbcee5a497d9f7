//! Free nilpotent Lie algebras over F_p in a Hall basis, with the
//! truncated BCH group law.

pub mod bch;
pub mod hall;
pub mod vector;

pub use bch::{bch_identity, bch_inverse, bch_multiply, bch_power};
pub use hall::{cmp_hall, hall_basis, witt_dimension, HallBasis, HallBasisElement, HallTree};
pub use vector::{LieAlgebra, LieVector};
