//! Permutations of a finite group's underlying set, regular
//! representations, holomorphs, and brute-force normalizers.

pub mod holomorph;
pub mod permutation;
pub mod psubgroup;

pub use holomorph::{
    centralizer_in_sym, hol, hol_with_inv, inhol, inhol_with_inv, inv_perm, lambda_rep, nhol,
    normalizer_in_alt, normalizer_in_sym, rho_rep, RegularEmbedding,
};
pub use permutation::{factorial, rank_lex, unrank_lex, Permutation};
pub use psubgroup::{closure_of_perms, is_regular, ElementSet, PermSubgroup};
