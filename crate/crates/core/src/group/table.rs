//! Finite groups as validated multiplication tables.
//!
//! The table convention is fixed once for the whole workspace:
//! `table[a][b] = a * b` (row index acts on the left), and element 0 is
//! always the identity. Constructors relabel the input if its identity
//! sits elsewhere.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Caps;
use crate::error::{Error, Result};

/// Seed for the sampled associativity check on large tables.
const ASSOC_SAMPLE_SEED: u64 = 0x1a71_5c0d;

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// Row-major, `table[a * order + b] = a * b`.
    table: Vec<u32>,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
    name: Option<String>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupTable({}, order {})",
            self.name.as_deref().unwrap_or("?"),
            self.order
        )
    }
}

impl GroupTable {
    /// Validate a square table and normalize it so the identity is element 0.
    pub fn from_table(rows: &[Vec<usize>], name: Option<&str>) -> Result<GroupTable> {
        Self::from_table_with(rows, name, &Caps::default())
    }

    pub fn from_table_with(rows: &[Vec<usize>], name: Option<&str>, caps: &Caps) -> Result<GroupTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "row {i} has length {} in an order-{n} table",
                    row.len()
                )));
            }
            if row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidParameter(format!(
                    "row {i} contains an out-of-range element index"
                )));
            }
        }

        // Two-sided identity, before anything else: Latin-ness of rows and
        // columns is only meaningful for a loop.
        let identity = (0..n)
            .find(|&e| (0..n).all(|b| rows[e][b] == b) && (0..n).all(|a| rows[a][e] == a))
            .ok_or(Error::NoIdentity)?;

        let mut seen = vec![false; n];
        for (a, row) in rows.iter().enumerate() {
            seen.fill(false);
            for &v in row {
                if seen[v] {
                    return Err(Error::NotLatinSquare { line: "row", index: a });
                }
                seen[v] = true;
            }
        }
        for b in 0..n {
            seen.fill(false);
            for a in 0..n {
                let v = rows[a][b];
                if seen[v] {
                    return Err(Error::NotLatinSquare { line: "column", index: b });
                }
                seen[v] = true;
            }
        }

        // Relabel so the identity is element 0 (swap labels 0 <-> identity).
        let relabel = |x: usize| -> usize {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }

        // Associativity: cubic scan up to the cap, seeded sampling above.
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        if n <= caps.assoc_full_check {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
            for _ in 0..caps.assoc_samples {
                let a = rng.random_range(0..n);
                let b = rng.random_range(0..n);
                let c = rng.random_range(0..n);
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }

        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == 0)
                .expect("Latin square row contains the identity");
            inverses[a] = inv as u32;
        }

        let mut element_orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1u32;
            while x != 0 {
                x = at(x, a);
                k += 1;
            }
            element_orders[a] = k;
        }

        Ok(GroupTable {
            order: n,
            table,
            inverses,
            element_orders,
            name: name.map(str::to_owned),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_owned());
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }

    /// `g * x * g^{-1}`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders, an isomorphism invariant.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Rows as nested vectors, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}
