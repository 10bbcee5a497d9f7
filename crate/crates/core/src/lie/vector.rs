//! Elements of the free nilpotent Lie algebra over F_p in a fixed Hall
//! basis, as sparse coefficient vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::lie::hall::{hall_basis, HallBasis};

/// A sparse vector over the Hall basis; absent index means zero. The
/// (n, c, p) tag guards against mixing bases or moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieVector {
    pub n: u32,
    pub c: u32,
    pub p: u64,
    /// basis index -> coefficient in [1, p); zeros are never stored
    pub coeffs: BTreeMap<u32, u64>,
}

impl LieVector {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest degree with a nonzero coefficient, None for zero.
    pub fn min_degree(&self, basis: &HallBasis) -> Option<u32> {
        self.coeffs.keys().map(|&i| basis.degree_of(i as usize)).min()
    }

    pub fn support_degrees(&self, basis: &HallBasis) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .coeffs
            .keys()
            .map(|&i| basis.degree_of(i as usize))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The algebra context: a shared Hall basis plus the prime modulus.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub basis: Arc<HallBasis>,
    pub p: u64,
}

impl LieAlgebra {
    pub fn new(n: u32, c: u32, p: u64) -> Result<LieAlgebra> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("modulus {p} is not a prime")));
        }
        Ok(LieAlgebra {
            basis: Arc::new(hall_basis(n, c)?),
            p,
        })
    }

    pub fn from_basis(basis: Arc<HallBasis>, p: u64) -> LieAlgebra {
        LieAlgebra { basis, p }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn zero(&self) -> LieVector {
        LieVector {
            n: self.basis.n,
            c: self.basis.c,
            p: self.p,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn generator(&self, i: usize) -> LieVector {
        self.basis_vector(i)
    }

    pub fn basis_vector(&self, i: usize) -> LieVector {
        assert!(i < self.basis.len());
        let mut v = self.zero();
        v.coeffs.insert(i as u32, 1);
        v
    }

    fn check(&self, v: &LieVector) -> Result<()> {
        if v.n != self.basis.n || v.c != self.basis.c || v.p != self.p {
            return Err(Error::BasisMismatch);
        }
        Ok(())
    }

    fn reduce(&self, x: i128) -> u64 {
        let p = self.p as i128;
        (((x % p) + p) % p) as u64
    }

    pub fn from_entries(&self, entries: &[(usize, u64)]) -> LieVector {
        let mut v = self.zero();
        for &(i, val) in entries {
            let val = val % self.p;
            if val != 0 {
                let slot = v.coeffs.entry(i as u32).or_insert(0);
                *slot = (*slot + val) % self.p;
                if *slot == 0 {
                    v.coeffs.remove(&(i as u32));
                }
            }
        }
        v
    }

    pub fn add(&self, a: &LieVector, b: &LieVector) -> LieVector {
        self.add_scaled(a, b, 1)
    }

    pub fn sub(&self, a: &LieVector, b: &LieVector) -> LieVector {
        self.add_scaled(a, b, self.p - 1)
    }

    pub fn neg(&self, a: &LieVector) -> LieVector {
        self.add_scaled(&self.zero(), a, self.p - 1)
    }

    /// a + s * b.
    pub fn add_scaled(&self, a: &LieVector, b: &LieVector, s: u64) -> LieVector {
        debug_assert!(self.check(a).is_ok() && self.check(b).is_ok());
        let mut out = a.clone();
        let s = s % self.p;
        for (&i, &val) in &b.coeffs {
            let add = (val as u128 * s as u128 % self.p as u128) as u64;
            if add == 0 {
                continue;
            }
            let slot = out.coeffs.entry(i).or_insert(0);
            *slot = (*slot + add) % self.p;
            if *slot == 0 {
                out.coeffs.remove(&i);
            }
        }
        out
    }

    pub fn scale(&self, a: &LieVector, s: u64) -> LieVector {
        self.add_scaled(&self.zero(), a, s)
    }

    /// Bilinear extension of the basis bracket table.
    pub fn bracket(&self, a: &LieVector, b: &LieVector) -> Result<LieVector> {
        self.check(a)?;
        self.check(b)?;
        let mut acc: BTreeMap<u32, u64> = BTreeMap::new();
        for (&i, &ca) in &a.coeffs {
            let di = self.basis.degree_of(i as usize);
            for (&j, &cb) in &b.coeffs {
                if di + self.basis.degree_of(j as usize) > self.basis.c {
                    continue;
                }
                let scale = (ca as u128 * cb as u128 % self.p as u128) as i128;
                for (t, s) in self.basis.bracket_indices(i as usize, j as usize) {
                    let add = self.reduce(s as i128 * scale);
                    if add == 0 {
                        continue;
                    }
                    let slot = acc.entry(t as u32).or_insert(0);
                    *slot = (*slot + add) % self.p;
                    if *slot == 0 {
                        acc.remove(&(t as u32));
                    }
                }
            }
        }
        let mut out = self.zero();
        out.coeffs = acc;
        Ok(out)
    }

    /// Modular inverse, requires gcd(x, p) = 1.
    pub fn inverse_mod(&self, x: u64) -> Result<u64> {
        let (mut r0, mut r1) = (self.p as i128, (x % self.p) as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return Err(Error::BadModulus { p: self.p });
        }
        Ok(self.reduce(s0))
    }

    /// Uniformly random coefficients on every basis index.
    pub fn random_vector<R: Rng>(&self, rng: &mut R) -> LieVector {
        let mut v = self.zero();
        for i in 0..self.basis.len() {
            let val = rng.random_range(0..self.p);
            if val != 0 {
                v.coeffs.insert(i as u32, val);
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bracket_is_alternating_on_generators() {
        let alg = LieAlgebra::new(3, 3, 5).unwrap();
        let x = alg.generator(0);
        assert!(alg.bracket(&x, &x).unwrap().is_zero());
        let y = alg.generator(1);
        let xy = alg.bracket(&x, &y).unwrap();
        let yx = alg.bracket(&y, &x).unwrap();
        assert_eq!(alg.neg(&xy), yx);
        // [x2, x1] is itself a basis element
        assert_eq!(yx, alg.basis_vector(alg.basis.index_of(&yx_tree()).unwrap()));
    }

    fn yx_tree() -> crate::lie::hall::HallTree {
        use crate::lie::hall::HallTree::*;
        Node(Box::new(Leaf(1)), Box::new(Leaf(0)))
    }

    #[test]
    fn basis_mismatch_detected() {
        let a5 = LieAlgebra::new(3, 3, 5).unwrap();
        let a7 = LieAlgebra::new(3, 3, 7).unwrap();
        let v = a7.generator(0);
        assert!(matches!(a5.bracket(&a5.generator(0), &v), Err(Error::BasisMismatch)));
    }

    #[test]
    fn seeded_random_bilinearity_alternating_jacobi() {
        let alg = LieAlgebra::new(3, 3, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x77a1);
        for _ in 0..1000 {
            let u = alg.random_vector(&mut rng);
            let v = alg.random_vector(&mut rng);
            let w = alg.random_vector(&mut rng);
            let s = rng.random_range(0..5);
            // alternating
            assert!(alg.bracket(&u, &u).unwrap().is_zero());
            // bilinear: [u + s v, w] = [u, w] + s [v, w]
            let lhs = alg.bracket(&alg.add_scaled(&u, &v, s), &w).unwrap();
            let rhs = alg.add_scaled(
                &alg.bracket(&u, &w).unwrap(),
                &alg.bracket(&v, &w).unwrap(),
                s,
            );
            assert_eq!(lhs, rhs);
            // Jacobi: [u,[v,w]] + [v,[w,u]] + [w,[u,v]] = 0
            let j = alg.add(
                &alg.add(
                    &alg.bracket(&u, &alg.bracket(&v, &w).unwrap()).unwrap(),
                    &alg.bracket(&v, &alg.bracket(&w, &u).unwrap()).unwrap(),
                ),
                &alg.bracket(&w, &alg.bracket(&u, &v).unwrap()).unwrap(),
            );
            assert!(j.is_zero(), "Jacobi residual must vanish");
        }
    }

    #[test]
    fn bracket_respects_degree_grading() {
        let alg = LieAlgebra::new(2, 4, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x13);
        for _ in 0..100 {
            let u = alg.random_vector(&mut rng);
            let v = alg.random_vector(&mut rng);
            let b = alg.bracket(&u, &v).unwrap();
            if let Some(d) = b.min_degree(&alg.basis) {
                let du = u.min_degree(&alg.basis).unwrap();
                let dv = v.min_degree(&alg.basis).unwrap();
                assert!(d >= du + dv);
            }
        }
    }
}
