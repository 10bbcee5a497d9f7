//! The CS family: given a group structure on the generator set T and a
//! prime p, build P ⋊ Q where P is the Lie model of the free exponent-p
//! class-n group on n = |T| generators modulo the relation space spanned
//! by the n-fold commutators
//!
//!   [t*t_1, t*t_2, ..., t*t_{n-1}, t*t_1]   (one per t in T),
//!
//! and Q = (F_p^x)^n acts diagonally by weights. The group is black-box:
//! elements are (canonical Lie vector, Q-tuple) pairs, never permutations.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;
use crate::lie::bch::{bch_multiply, bch_power};
use crate::lie::hall::HallBasis;
use crate::lie::vector::{LieAlgebra, LieVector};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parameters: T with its elements identified with the generators
/// t_1..t_n (t_1 = identity of T), and a prime p > n + 1.
#[derive(Debug, Clone)]
pub struct CsParams {
    pub t: GroupTable,
    pub p: u64,
}

impl CsParams {
    pub fn new(t: GroupTable, p: u64) -> Result<CsParams> {
        let n = t.order();
        if n <= 2 {
            return Err(Error::TTooSmall { n });
        }
        if n > 4 {
            return Err(Error::CapExceeded {
                what: "CS generator count (BCH class cap)",
                needed: n as u64,
                limit: 4,
            });
        }
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("p = {p} is not prime")));
        }
        if p <= n as u64 + 1 {
            return Err(Error::PTooSmall { p, min: n as u64 + 1 });
        }
        Ok(CsParams { t, p })
    }
}

/// An element (canonical Lie part, Q-tuple); q entries lie in [1, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsElement {
    pub lie: LieVector,
    pub q: Vec<u64>,
}

/// Factored order p^(D-r) * (p-1)^n.
#[derive(Debug, Clone, Serialize)]
pub struct CsOrder {
    pub p: u64,
    pub p_exponent: usize,
    pub q_base: u64,
    pub q_exponent: usize,
}

impl std::fmt::Display for CsOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}^{} * {}^{}",
            self.p, self.p_exponent, self.q_base, self.q_exponent
        )
    }
}

impl CsOrder {
    pub fn as_u128(&self) -> Option<u128> {
        let mut v: u128 = 1;
        for _ in 0..self.p_exponent {
            v = v.checked_mul(self.p as u128)?;
        }
        for _ in 0..self.q_exponent {
            v = v.checked_mul(self.q_base as u128)?;
        }
        Some(v)
    }
}

#[derive(Debug)]
pub struct CsGroup {
    pub params: CsParams,
    pub alg: LieAlgebra,
    /// raw relation vectors, one per element of T, in T's element order
    pub relations: Vec<LieVector>,
    /// row-reduced echelon basis of the relation space: (pivot, row with
    /// pivot coefficient 1), pivots strictly increasing
    rref: Vec<(u32, LieVector)>,
    pub rank: usize,
    pub total_dim: usize,
}

/// The scalar by which a = (a_1, ..., a_n) acts on a basis element of
/// weight (m_1, ..., m_n): product of a_i^(m_i).
pub fn weight_scalar(p: u64, a: &[u64], weight: &[u32]) -> u64 {
    let mut s: u64 = 1;
    for (&ai, &mi) in a.iter().zip(weight) {
        for _ in 0..mi {
            s = (s as u128 * ai as u128 % p as u128) as u64;
        }
    }
    s
}

/// Diagonal action of a Q-tuple on a Lie vector: each coefficient scaled
/// by the weight scalar of its basis element.
pub fn q_act(alg: &LieAlgebra, a: &[u64], v: &LieVector) -> LieVector {
    q_act_impl(alg, a, v)
}

pub fn build(params: CsParams) -> Result<CsGroup> {
    let n = params.t.order() as u32;
    let alg = LieAlgebra::new(n, n, params.p)?;
    let relations: Vec<LieVector> = params
        .t
        .elements()
        .map(|t| n_fold_commutator_vector(&alg, &params.t, t))
        .collect::<Result<_>>()?;
    let mut rref: Vec<(u32, LieVector)> = Vec::new();
    for rel in &relations {
        let mut v = reduce_mod_rows(&alg, &rref, rel);
        if let Some((&pivot, &lead)) = v.coeffs.iter().next() {
            let inv = alg.inverse_mod(lead)?;
            v = alg.scale(&v, inv);
            for (_, row) in rref.iter_mut() {
                if let Some(&c) = row.coeffs.get(&pivot) {
                    *row = alg.add_scaled(row, &v, alg.p - c);
                }
            }
            rref.push((pivot, v));
        }
    }
    rref.sort_by_key(|&(pivot, _)| pivot);
    let rank = rref.len();
    let total_dim = alg.basis.len();
    // relation vectors live purely in the top degree: n leaves each
    debug_assert!(relations
        .iter()
        .all(|r| r.support_degrees(&alg.basis).iter().all(|&d| d == n)));
    Ok(CsGroup {
        params,
        alg,
        relations,
        rref,
        rank,
        total_dim,
    })
}

fn reduce_mod_rows(alg: &LieAlgebra, rows: &[(u32, LieVector)], v: &LieVector) -> LieVector {
    let mut out = v.clone();
    for (pivot, row) in rows {
        if let Some(&c) = out.coeffs.get(pivot) {
            out = alg.add_scaled(&out, row, alg.p - c);
        }
    }
    out
}

/// The right-nested n-fold bracket [t*t_1, t*t_2, ..., t*t_(n-1), t*t_1]
/// expanded into the top-degree Hall component. Generator j (1-indexed)
/// is element j-1 of T.
pub fn n_fold_commutator_vector(alg: &LieAlgebra, t_table: &GroupTable, t: usize) -> Result<LieVector> {
    let n = t_table.order();
    let mut seq: Vec<usize> = (0..n - 1).map(|j| t_table.mul(t, j)).collect();
    seq.push(t_table.mul(t, 0));
    let mut acc = alg.generator(seq[n - 1]);
    for &g in seq[..n - 1].iter().rev() {
        acc = alg.bracket(&alg.generator(g), &acc)?;
    }
    Ok(acc)
}

impl CsGroup {
    pub fn n(&self) -> usize {
        self.params.t.order()
    }

    pub fn dims(&self) -> &[usize] {
        &self.alg.basis.dims
    }

    pub fn order(&self) -> CsOrder {
        CsOrder {
            p: self.params.p,
            p_exponent: self.total_dim - self.rank,
            q_base: self.params.p - 1,
            q_exponent: self.n(),
        }
    }

    pub fn basis(&self) -> &HallBasis {
        &self.alg.basis
    }

    /// Canonical representative modulo the relation space: pivot
    /// coordinates eliminated.
    pub fn canonicalize(&self, v: &LieVector) -> LieVector {
        reduce_mod_rows(&self.alg, &self.rref, v)
    }

    pub fn rref_rows(&self) -> impl Iterator<Item = &LieVector> {
        self.rref.iter().map(|(_, row)| row)
    }

    pub fn element(&self, lie: LieVector, q: Vec<u64>) -> Result<CsElement> {
        if lie.n != self.alg.basis.n || lie.c != self.alg.basis.c || lie.p != self.params.p {
            return Err(Error::GroupMismatch);
        }
        if q.len() != self.n() || q.iter().any(|&a| a == 0 || a >= self.params.p) {
            return Err(Error::GroupMismatch);
        }
        Ok(CsElement {
            lie: self.canonicalize(&lie),
            q,
        })
    }

    pub fn identity(&self) -> CsElement {
        CsElement {
            lie: self.alg.zero(),
            q: vec![1; self.n()],
        }
    }

    pub fn is_identity(&self, x: &CsElement) -> bool {
        x.lie.is_zero() && x.q.iter().all(|&a| a == 1)
    }

    fn check_element(&self, x: &CsElement) -> Result<()> {
        if x.lie.p != self.params.p || x.lie.n != self.alg.basis.n || x.q.len() != self.n() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// (u, q)(v, r) = (u . act(q, v), q r), Lie part canonicalized.
    pub fn multiply(&self, x: &CsElement, y: &CsElement) -> Result<CsElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let acted = q_act_impl(&self.alg, &x.q, &y.lie);
        let lie = self.canonicalize(&bch_multiply(&self.alg, &x.lie, &acted)?);
        let q = x
            .q
            .iter()
            .zip(&y.q)
            .map(|(&a, &b)| (a as u128 * b as u128 % self.params.p as u128) as u64)
            .collect();
        Ok(CsElement { lie, q })
    }

    /// (u, q)^{-1} = (act(q^{-1}, -u), q^{-1}).
    pub fn inverse(&self, x: &CsElement) -> Result<CsElement> {
        self.check_element(x)?;
        let qinv: Vec<u64> = x
            .q
            .iter()
            .map(|&a| self.alg.inverse_mod(a))
            .collect::<Result<_>>()?;
        let lie = self.canonicalize(&q_act_impl(&self.alg, &qinv, &self.alg.neg(&x.lie)));
        Ok(CsElement { lie, q: qinv })
    }

    pub fn power(&self, x: &CsElement, m: u64) -> Result<CsElement> {
        let mut acc = self.identity();
        for _ in 0..m {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// Basis elements of degree k fixed by all of Q: every weight
    /// multiplicity divisible by p - 1.
    pub fn q_fixed_basis_elements(&self, k: usize) -> Vec<usize> {
        q_fixed_basis_elements(&self.alg.basis, self.params.p, k)
    }

    /// Dimension of the Q-fixed subspace at degree k; the top degree is
    /// taken modulo the relation space.
    pub fn q_fixed_dimension(&self, k: usize) -> usize {
        let fixed = self.q_fixed_basis_elements(k);
        if k < self.n() {
            return fixed.len();
        }
        // top degree: span of canonical forms of the fixed basis elements
        let vectors: Vec<LieVector> = fixed
            .iter()
            .map(|&i| self.canonicalize(&self.alg.basis_vector(i)))
            .collect();
        rank_of(&self.alg, &vectors)
    }
}

/// Multiplicity criterion at an arbitrary (basis, p): used both by the
/// built groups and by out-of-range synthetic checks.
pub fn q_fixed_basis_elements(basis: &HallBasis, p: u64, k: usize) -> Vec<usize> {
    (0..basis.len())
        .filter(|&i| basis.degree_of(i) as usize == k)
        .filter(|&i| basis.elements[i].weight.iter().all(|&m| m as u64 % (p - 1) == 0))
        .collect()
}

fn rank_of(alg: &LieAlgebra, vectors: &[LieVector]) -> usize {
    let mut rows: Vec<(u32, LieVector)> = Vec::new();
    for v in vectors {
        let mut r = reduce_mod_rows(alg, &rows, v);
        if let Some((&pivot, &lead)) = r.coeffs.iter().next() {
            let inv = alg.inverse_mod(lead).expect("prime modulus");
            r = alg.scale(&r, inv);
            rows.push((pivot, r));
        }
    }
    rows.len()
}

fn q_act_impl(alg: &LieAlgebra, a: &[u64], v: &LieVector) -> LieVector {
    let mut out = alg.zero();
    for (&i, &coeff) in &v.coeffs {
        let s = weight_scalar(alg.p, a, &alg.basis.elements[i as usize].weight);
        let val = (coeff as u128 * s as u128 % alg.p as u128) as u64;
        if val != 0 {
            out.coeffs.insert(i, val);
        }
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    'outer: for g in 2..p {
        let mut x = 1u64;
        for _ in 0..p - 2 {
            x = (x as u128 * g as u128 % p as u128) as u64;
            if x == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    1
}

/// Machine-checkable record that Z(CS(T, p)) = 1.
#[derive(Debug, Clone, Serialize)]
pub struct CenterCertificate {
    pub n: usize,
    pub p: u64,
    pub dims: Vec<usize>,
    pub rank: usize,
    pub order_factored: String,
    /// Q-fixed dimension per degree 1..n (top degree in the quotient)
    pub q_fixed_levels: Vec<usize>,
    pub faithful_degree1: bool,
    pub q_abelian_and_argument_applies: bool,
    pub random_seed: u64,
    pub random_samples: usize,
    pub random_witnesses: usize,
}

/// The four-part center check: (a) no nonzero Q-fixed vectors at any
/// graded level, (b) Q faithful on degree 1, (c) Q abelian, so with (a)
/// and (b) the semidirect-center criterion leaves only the identity,
/// (d) a seeded randomized search for central elements finds none.
pub fn center_certificate(cs: &CsGroup, seed: u64) -> Result<CenterCertificate> {
    let n = cs.n();
    let q_fixed_levels: Vec<usize> = (1..=n).map(|k| cs.q_fixed_dimension(k)).collect();
    if q_fixed_levels.iter().any(|&d| d != 0) {
        return Err(Error::CertificateFailed {
            check: format!("Q-fixed subspace is nonzero: dims {q_fixed_levels:?}"),
        });
    }

    // degree-1 weights are the standard coordinate vectors, so the kernel
    // of a -> diag(a_1..a_n) is trivial
    let faithful = (0..n).all(|i| {
        cs.alg.basis.elements[i]
            .weight
            .iter()
            .enumerate()
            .all(|(j, &m)| (m == 1) == (i == j) && m <= 1)
    });
    if !faithful {
        return Err(Error::CertificateFailed {
            check: "Q-action on the degree-1 component is not visibly faithful".into(),
        });
    }

    // Q = (F_p^x)^n multiplies componentwise, so it is abelian; together
    // with (a) and (b) the componentwise center criterion for P x| Q
    // admits only the identity.
    let q_abelian = true;

    // randomized direct search
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = 1000usize;
    let mut witnesses = 0usize;
    let probes = probe_elements(cs);
    for _ in 0..samples {
        let x = loop {
            let lie = cs.canonicalize(&cs.alg.random_vector(&mut rng));
            let q: Vec<u64> = (0..n).map(|_| rng.random_range(1..cs.params.p)).collect();
            let cand = CsElement { lie, q };
            if !cs.is_identity(&cand) {
                break cand;
            }
        };
        let mut commutes_with_all = true;
        for probe in &probes {
            if cs.multiply(&x, probe)? != cs.multiply(probe, &x)? {
                commutes_with_all = false;
                break;
            }
        }
        if commutes_with_all {
            // try random probes before declaring a witness
            let mut saved = false;
            for _ in 0..100 {
                let lie = cs.canonicalize(&cs.alg.random_vector(&mut rng));
                let q: Vec<u64> = (0..n).map(|_| rng.random_range(1..cs.params.p)).collect();
                let probe = CsElement { lie, q };
                if cs.multiply(&x, &probe)? != cs.multiply(&probe, &x)? {
                    saved = true;
                    break;
                }
            }
            if !saved {
                witnesses += 1;
            }
        }
    }
    if witnesses > 0 {
        return Err(Error::CertificateFailed {
            check: format!("randomized center search found {witnesses} witnesses"),
        });
    }

    Ok(CenterCertificate {
        n,
        p: cs.params.p,
        dims: cs.dims().to_vec(),
        rank: cs.rank,
        order_factored: cs.order().to_string(),
        q_fixed_levels,
        faithful_degree1: faithful,
        q_abelian_and_argument_applies: q_abelian,
        random_seed: seed,
        random_samples: samples,
        random_witnesses: witnesses,
    })
}

/// Non-commuting partners for the randomized check: the pure-P generators
/// kill every element with a nontrivial Q-part, and the pure-Q primitive
/// coordinate tuples move every nonzero canonical Lie part.
fn probe_elements(cs: &CsGroup) -> Vec<CsElement> {
    let n = cs.n();
    let mut probes = Vec::with_capacity(2 * n);
    for i in 0..n {
        probes.push(CsElement {
            lie: cs.alg.generator(i),
            q: vec![1; n],
        });
    }
    let g = primitive_root(cs.params.p);
    for i in 0..n {
        let mut q = vec![1u64; n];
        q[i] = g;
        probes.push(CsElement {
            lie: cs.alg.zero(),
            q,
        });
    }
    probes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::standard::cyclic;

    fn cs_c3_5() -> CsGroup {
        build(CsParams::new(cyclic(3).unwrap(), 5).unwrap()).unwrap()
    }

    #[test]
    fn parameter_guards() {
        assert!(matches!(
            CsParams::new(cyclic(2).unwrap(), 7),
            Err(Error::TTooSmall { n: 2 })
        ));
        assert!(matches!(
            CsParams::new(cyclic(3).unwrap(), 3),
            Err(Error::PTooSmall { p: 3, min: 4 })
        ));
        assert!(matches!(
            CsParams::new(cyclic(5).unwrap(), 11),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            CsParams::new(cyclic(3).unwrap(), 9),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn weight_scalar_examples() {
        // identity tuple fixes everything
        assert_eq!(weight_scalar(5, &[1, 1, 1], &[2, 1, 0]), 1);
        // degree-1 element t_i is scaled by a_i
        assert_eq!(weight_scalar(7, &[3, 4, 5], &[0, 1, 0]), 4);
        // weight (2, 1, 0) under a = (2, 3, 1) mod 5: 4 * 3 = 12 = 2
        assert_eq!(weight_scalar(5, &[2, 3, 1], &[2, 1, 0]), 2);
    }

    #[test]
    fn cs_c3_5_build_shape() {
        let cs = cs_c3_5();
        assert_eq!(cs.dims(), &[3, 3, 8]);
        assert_eq!(cs.total_dim, 14);
        assert_eq!(cs.rank, 3);
        let order = cs.order();
        assert_eq!(order.p_exponent, 11);
        assert_eq!(order.to_string(), "5^11 * 4^3");
        assert_eq!(order.as_u128(), Some(48_828_125u128 * 64)); // 5^11 * 4^3
    }

    #[test]
    fn relation_vectors_are_top_degree_and_weight_homogeneous() {
        let cs = cs_c3_5();
        for (t, rel) in cs.relations.iter().enumerate() {
            assert!(!rel.is_zero(), "relation for t = {t} must be nonzero");
            assert_eq!(rel.support_degrees(&cs.alg.basis), vec![3]);
            // weight homogeneity: all supported basis elements share a weight
            let weights: Vec<&Vec<u32>> = rel
                .coeffs
                .keys()
                .map(|&i| &cs.alg.basis.elements[i as usize].weight)
                .collect();
            assert!(weights.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn n_fold_commutator_for_identity_of_c3() {
        // t = identity: [t1, [t2, t1]] = -[[t2,t1], t1]
        let cs = cs_c3_5();
        let v = n_fold_commutator_vector(&cs.alg, &cs.params.t, 0).unwrap();
        let inner = cs
            .alg
            .bracket(&cs.alg.generator(1), &cs.alg.generator(0))
            .unwrap();
        let expected = cs.alg.bracket(&cs.alg.generator(0), &inner).unwrap();
        assert_eq!(v, expected);
        assert!(!v.is_zero());
    }

    #[test]
    fn group_axioms_on_seeded_random_triples() {
        let cs = cs_c3_5();
        let mut rng = ChaCha8Rng::seed_from_u64(0xc5c5);
        let mut random_element = |rng: &mut ChaCha8Rng| {
            let lie = cs.canonicalize(&cs.alg.random_vector(rng));
            let q: Vec<u64> = (0..3).map(|_| rng.random_range(1..5)).collect();
            CsElement { lie, q }
        };
        for _ in 0..1000 {
            let x = random_element(&mut rng);
            let y = random_element(&mut rng);
            let z = random_element(&mut rng);
            let xy_z = cs.multiply(&cs.multiply(&x, &y).unwrap(), &z).unwrap();
            let x_yz = cs.multiply(&x, &cs.multiply(&y, &z).unwrap()).unwrap();
            assert_eq!(xy_z, x_yz);
            let xi = cs.inverse(&x).unwrap();
            assert!(cs.is_identity(&cs.multiply(&x, &xi).unwrap()));
            assert_eq!(cs.multiply(&x, &cs.identity()).unwrap(), x);
        }
    }

    #[test]
    fn pure_p_elements_have_exponent_p() {
        let cs = cs_c3_5();
        let mut rng = ChaCha8Rng::seed_from_u64(0xf00);
        for _ in 0..25 {
            let x = CsElement {
                lie: cs.canonicalize(&cs.alg.random_vector(&mut rng)),
                q: vec![1, 1, 1],
            };
            assert!(cs.is_identity(&cs.power(&x, 5).unwrap()));
        }
    }

    #[test]
    fn pure_q_elements_multiply_componentwise() {
        let cs = cs_c3_5();
        let a = cs.element(cs.alg.zero(), vec![2, 3, 4]).unwrap();
        let b = cs.element(cs.alg.zero(), vec![3, 3, 2]).unwrap();
        let ab = cs.multiply(&a, &b).unwrap();
        assert_eq!(ab.q, vec![1, 4, 3]);
        assert!(ab.lie.is_zero());
    }

    #[test]
    fn q_action_is_an_automorphism_of_the_bch_group() {
        let cs = cs_c3_5();
        let mut rng = ChaCha8Rng::seed_from_u64(0xab);
        for _ in 0..200 {
            let u = cs.alg.random_vector(&mut rng);
            let v = cs.alg.random_vector(&mut rng);
            let a: Vec<u64> = (0..3).map(|_| rng.random_range(1..5)).collect();
            // act(a, [u,v]) = [act(a,u), act(a,v)]
            let lhs = q_act_impl(&cs.alg, &a, &cs.alg.bracket(&u, &v).unwrap());
            let rhs = cs
                .alg
                .bracket(&q_act_impl(&cs.alg, &a, &u), &q_act_impl(&cs.alg, &a, &v))
                .unwrap();
            assert_eq!(lhs, rhs);
            // act(a, u . v) = act(a, u) . act(a, v)
            let lhs = q_act_impl(&cs.alg, &a, &bch_multiply(&cs.alg, &u, &v).unwrap());
            let rhs = bch_multiply(
                &cs.alg,
                &q_act_impl(&cs.alg, &a, &u),
                &q_act_impl(&cs.alg, &a, &v),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
            // composition convention: act(a*b, v) = act(a, act(b, v))
            let b: Vec<u64> = (0..3).map(|_| rng.random_range(1..5)).collect();
            let ab: Vec<u64> = a.iter().zip(&b).map(|(&x, &y)| x * y % 5).collect();
            assert_eq!(
                q_act_impl(&cs.alg, &ab, &u),
                q_act_impl(&cs.alg, &a, &q_act_impl(&cs.alg, &b, &u))
            );
        }
    }

    #[test]
    fn relation_space_is_q_stable() {
        let cs = cs_c3_5();
        let mut rng = ChaCha8Rng::seed_from_u64(0x51ab);
        for _ in 0..50 {
            let a: Vec<u64> = (0..3).map(|_| rng.random_range(1..5)).collect();
            for row in cs.rref_rows() {
                assert!(cs.canonicalize(&q_act_impl(&cs.alg, &a, row)).is_zero());
            }
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let cs = cs_c3_5();
        let mut rng = ChaCha8Rng::seed_from_u64(0x1d);
        for _ in 0..200 {
            let v = cs.alg.random_vector(&mut rng);
            let once = cs.canonicalize(&v);
            assert_eq!(cs.canonicalize(&once), once);
        }
    }

    #[test]
    fn q_fixed_subspaces_vanish_in_range() {
        let cs = cs_c3_5();
        for k in 1..=3 {
            assert_eq!(cs.q_fixed_dimension(k), 0, "degree {k}");
        }
    }

    /// Synthetic out-of-range check of the multiplicity criterion at p = 3:
    /// weight (1, 2) is moved, all-even weights are fixed, and the
    /// criterion matches a brute-force scan over all of Q.
    #[test]
    fn q_fixed_criterion_matches_brute_force_at_p3() {
        let alg = LieAlgebra::new(2, 4, 3).unwrap();
        let p = 3u64;
        // brute force: basis element fixed iff scaled trivially by all q
        let tuples: Vec<Vec<u64>> = (0..4)
            .map(|m| vec![1 + (m & 1) as u64, 1 + ((m >> 1) & 1) as u64])
            .collect();
        for k in 1..=4usize {
            let by_criterion = q_fixed_basis_elements(&alg.basis, p, k);
            let by_scan: Vec<usize> = (0..alg.basis.len())
                .filter(|&i| alg.basis.degree_of(i) as usize == k)
                .filter(|&i| {
                    tuples
                        .iter()
                        .all(|a| weight_scalar(p, a, &alg.basis.elements[i].weight) == 1)
                })
                .collect();
            assert_eq!(by_criterion, by_scan, "degree {k}");
        }
        // weight (1,2) element [x2,[x2,x1]] is not fixed at p = 3
        let idx = (0..alg.basis.len())
            .find(|&i| alg.basis.elements[i].weight == vec![1, 2])
            .unwrap();
        assert!(!q_fixed_basis_elements(&alg.basis, p, 3).contains(&idx));
        // the all-even weight (2,2) element in degree 4 is fixed
        let even = (0..alg.basis.len())
            .find(|&i| alg.basis.elements[i].weight == vec![2, 2])
            .unwrap();
        assert!(q_fixed_basis_elements(&alg.basis, p, 4).contains(&even));
    }

    #[test]
    fn center_certificate_for_cs_c3_5() {
        let cs = cs_c3_5();
        let cert = center_certificate(&cs, 7).unwrap();
        assert_eq!(cert.q_fixed_levels, vec![0, 0, 0]);
        assert!(cert.faithful_degree1);
        assert_eq!(cert.random_witnesses, 0);
        assert_eq!(cert.order_factored, "5^11 * 4^3");
    }

    #[test]
    fn center_certificate_for_cs_c4_7() {
        let cs = build(CsParams::new(cyclic(4).unwrap(), 7).unwrap()).unwrap();
        assert_eq!(cs.dims(), &[4, 6, 20, 60]);
        assert_eq!(cs.total_dim, 90);
        let cert = center_certificate(&cs, 7).unwrap();
        assert_eq!(cert.q_fixed_levels, vec![0, 0, 0, 0]);
        assert_eq!(cert.rank, cs.rank);
        assert_eq!(cert.order_factored, format!("7^{} * 6^4", 90 - cs.rank));
    }
}
