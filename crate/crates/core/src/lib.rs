//! Exact computational group theory: holomorphs and inner holomorphs as
//! permutation groups, regular subgroups from fixed-point-free pairs of
//! homomorphisms, free nilpotent Lie algebras over prime fields with
//! truncated BCH multiplication, the CS family of black-box groups, and
//! normalizer-quotient lifting between symmetric and alternating groups.
//!
//! Everything is exact integer/group arithmetic; the brute-force scans are
//! deliberate, they are the independent ground truth the faster routes are
//! checked against.

pub mod acceptance;
pub mod config;
pub mod cs;
pub mod error;
pub mod group;
pub mod lie;
pub mod lift;
pub mod perm;
pub mod regsub;
pub mod registry;
pub mod schema;

pub use config::Caps;
pub use error::{Error, Result};
