//! Exact finite-group arithmetic on multiplication tables.

pub mod hom;
pub mod semidirect;
pub mod standard;
pub mod subgroup;
pub mod table;

pub use hom::{
    automorphism_group, automorphisms, greedy_generators, homomorphisms, inner_automorphisms,
    is_isomorphic, isomorphisms, outer_automorphism_group, outer_order, Homomorphism,
};
pub use semidirect::{center_of_semidirect, SemidirectSpec};
pub use standard::{
    alternating, cyclic, dihedral, direct_product, quaternion, symmetric, trivial,
};
pub use subgroup::{
    center, closure, conjugacy_classes, index_two_abelian_subgroups, is_centerless,
    is_characteristic, is_decomposable, normal_subgroups, quotient, Subgroup,
};
pub use table::GroupTable;
