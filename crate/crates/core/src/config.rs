//! Caps for the exhaustive algorithms.
//!
//! Every enumeration that can explode has a cap with a stated default and
//! fails loudly with `Error::CapExceeded` instead of running away.

/// Hard ceiling on the Sym(d) scan degree; 11 and 12 are allowed only by
/// raising `max_degree` explicitly, never by default.
pub const DEGREE_HARD_LIMIT: usize = 12;

#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest group order accepted by the normal-subgroup machinery.
    pub max_table_order: usize,
    /// Budget for homomorphism enumeration: |G|^k image tuples.
    pub hom_tuple_budget: u64,
    /// Budget for the order-filtered isomorphism/automorphism tuple scan.
    pub iso_tuple_budget: u64,
    /// Largest degree for brute-force Sym(d) scans (normalizer, centralizer).
    pub max_degree: usize,
    /// Largest element count materialized for a permutation subgroup.
    pub max_materialized: usize,
    /// Largest |G| for the brute-force regular-subgroup enumeration.
    pub max_regular_base: usize,
    /// Largest |InHol(G)| for the brute-force regular-subgroup enumeration.
    pub max_regular_ambient: usize,
    /// Full associativity verification up to this order, sampled above.
    pub assoc_full_check: usize,
    /// Seeded triple count for sampled associativity checks.
    pub assoc_samples: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_table_order: 512,
            hom_tuple_budget: 100_000_000,
            iso_tuple_budget: 10_000_000,
            max_degree: 10,
            max_materialized: 1_000_000,
            max_regular_base: 12,
            max_regular_ambient: 10_000,
            assoc_full_check: 256,
            assoc_samples: 1_000_000,
        }
    }
}

impl Caps {
    /// Raise the scan degree; values beyond the hard limit are clamped to it.
    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = d.min(DEGREE_HARD_LIMIT);
        self
    }
}
