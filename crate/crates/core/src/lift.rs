//! Lifting normalizer quotients: embed H <= S_n into S_m as H x S_(m-n),
//! intersect with A_m, compare normalizer quotients, and assemble the
//! inner-holomorph construction H = <InHol(G), inv_G> with its normalizer
//! quotient measured against Out(G).

use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::hom::{is_isomorphic, outer_automorphism_group};
use crate::group::subgroup::{center, is_characteristic, quotient, Subgroup};
use crate::group::table::GroupTable;
use crate::perm::holomorph::{hol, hol_with_inv, inhol, inhol_with_inv, inv_perm, normalizer_in_alt, normalizer_in_sym};
use crate::perm::permutation::{factorial, Permutation};
use crate::perm::psubgroup::{group_table_from_perms, PermSubgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Ambient {
    Sym,
    Alt,
}

/// H <= S_n to be planted inside S_m on the first n points.
#[derive(Debug, Clone)]
pub struct LiftSpec {
    pub h: PermSubgroup,
    pub n: usize,
    pub m: usize,
}

impl LiftSpec {
    pub fn new(h: PermSubgroup, n: usize, m: usize) -> Result<LiftSpec> {
        if h.degree() != n {
            return Err(Error::InvalidParameter(format!(
                "subgroup degree {} does not match n = {n}",
                h.degree()
            )));
        }
        if m < 2 * n + 1 {
            return Err(Error::DegreeTooSmall { m, min: 2 * n + 1 });
        }
        Ok(LiftSpec { h, n, m })
    }
}

fn extend_to_degree(p: &Permutation, m: usize) -> Permutation {
    let mut images: Vec<u16> = p.images().to_vec();
    images.extend(p.degree() as u16..m as u16);
    Permutation::from_images(images).expect("extension by fixed points stays a bijection")
}

/// H_1 = H x S_(m-n): H on the first n points, the full symmetric group
/// on the rest.
pub fn embed(spec: &LiftSpec, caps: &Caps) -> Result<PermSubgroup> {
    let (n, m) = (spec.n, spec.m);
    let mut gens: Vec<Permutation> = spec
        .h
        .generators()
        .iter()
        .map(|g| extend_to_degree(g, m))
        .collect();
    let tail = m - n;
    if tail >= 2 {
        gens.push(Permutation::transposition(m, n, n + 1));
    }
    if tail >= 3 {
        gens.push(Permutation::cycle(m, &(n..m).collect::<Vec<_>>()));
    }
    let h1 = PermSubgroup::from_generators(m, gens)?;
    let expected = spec.h.order(caps)? as u64 * factorial(tail);
    assert_eq!(h1.order(caps)? as u64, expected, "|H1| must be |H| * (m-n)!");
    Ok(h1)
}

/// H_2 = H_1 of even parity.
pub fn intersect_alternating(h1: &PermSubgroup, caps: &Caps) -> Result<PermSubgroup> {
    let elems = h1.materialize(caps)?;
    let even: Vec<Permutation> = elems
        .perms()
        .iter()
        .filter(|p| p.parity_even())
        .cloned()
        .collect();
    PermSubgroup::from_elements(h1.degree(), even)
}

/// Brute-force normalizer of K in S_m or A_m, plus the quotient table
/// N(K)/K with the identity coset at index 0.
pub fn normalizer_quotient(
    ambient: Ambient,
    k: &PermSubgroup,
    caps: &Caps,
) -> Result<(GroupTable, PermSubgroup)> {
    let normalizer = match ambient {
        Ambient::Sym => normalizer_in_sym(k, caps)?,
        Ambient::Alt => normalizer_in_alt(k, caps)?,
    };
    let table = quotient_by_subgroup(&normalizer, k, caps)?;
    Ok((table, normalizer))
}

/// N/K for K contained in N, via the Cayley table of N's elements.
fn quotient_by_subgroup(n: &PermSubgroup, k: &PermSubgroup, caps: &Caps) -> Result<GroupTable> {
    let n_elems = n.materialize(caps)?;
    let k_elems = k.materialize(caps)?;
    let table = group_table_from_perms(n_elems.perms())?;
    let indices: Vec<usize> = k_elems
        .perms()
        .iter()
        .map(|p| {
            n_elems
                .perms()
                .binary_search(p)
                .map_err(|_| Error::NotNormalInNormalizer)
        })
        .collect::<Result<_>>()?;
    let sub = Subgroup::from_unsorted(indices);
    let (q, _) = quotient(&table, &sub).map_err(|_| Error::NotNormalInNormalizer)?;
    Ok(q)
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub pass: bool,
}

fn check(name: &str, pass: bool) -> CrossCheck {
    CrossCheck {
        name: name.to_owned(),
        pass,
    }
}

/// Outcome of one lifting experiment.
#[derive(Debug, Serialize)]
pub struct LiftReport {
    pub n: usize,
    pub m: usize,
    pub h_order: usize,
    pub h1_order: usize,
    pub h2_order: usize,
    pub sym_quotient_order: usize,
    pub alt_quotient_order: usize,
    pub sym_quotient_iso_to_expected: bool,
    pub alt_quotient_iso_to_expected: bool,
    pub cross_checks: Vec<CrossCheck>,
}

impl LiftReport {
    pub fn all_pass(&self) -> bool {
        self.sym_quotient_iso_to_expected
            && self.alt_quotient_iso_to_expected
            && self.cross_checks.iter().all(|c| c.pass)
    }
}

/// Computes both normalizer quotients of the lifted subgroup and tests
/// them against the expected group, with the structural cross-checks from
/// the lifting argument.
pub fn lift_check(
    h: &PermSubgroup,
    n: usize,
    m: usize,
    expected_t: &GroupTable,
    caps: &Caps,
) -> Result<LiftReport> {
    let spec = LiftSpec::new(h.clone(), n, m)?;
    let h1 = embed(&spec, caps)?;
    let h2 = intersect_alternating(&h1, caps)?;
    let (q1, n1) = normalizer_quotient(Ambient::Sym, &h1, caps)?;
    let (q2, _n2) = normalizer_quotient(Ambient::Alt, &h2, caps)?;

    let mut cross = Vec::new();

    // N_{S_m}(H1) = N_{S_n}(H) x S_{m-n}, matched against the brute scan
    let nh = normalizer_in_sym(h, caps)?;
    let product = direct_product_subgroup(&nh, n, m, caps)?;
    cross.push(check(
        "normalizer_of_h1_is_product",
        n1.same_set(&product, caps)?,
    ));

    // index-2 bookkeeping when H1 is not contained in A_m
    let h1_order = h1.order(caps)?;
    let h2_order = h2.order(caps)?;
    if h1_order != h2_order {
        cross.push(check("h2_has_index_two", h1_order == 2 * h2_order));
        let n1_even = n1
            .materialize(caps)?
            .perms()
            .iter()
            .filter(|p| p.parity_even())
            .count();
        cross.push(check(
            "normalizer_meets_alt_in_index_two",
            n1.order(caps)? == 2 * n1_even,
        ));
    }

    // the only H_i-invariant (m-n)-subset of points is the tail, n > 1
    if n > 1 {
        cross.push(check(
            "unique_invariant_tail_subset_h1",
            unique_invariant_subset(&h1, m - n, n, caps)?,
        ));
        cross.push(check(
            "unique_invariant_tail_subset_h2",
            unique_invariant_subset(&h2, m - n, n, caps)?,
        ));
    }

    // both quotients isomorphic to each other for lemma-shaped inputs
    cross.push(check(
        "sym_and_alt_quotients_isomorphic",
        is_isomorphic(&q1, &q2, caps)?.is_some(),
    ));

    Ok(LiftReport {
        n,
        m,
        h_order: h.order(caps)?,
        h1_order,
        h2_order,
        sym_quotient_order: q1.order(),
        alt_quotient_order: q2.order(),
        sym_quotient_iso_to_expected: is_isomorphic(&q1, expected_t, caps)?.is_some(),
        alt_quotient_iso_to_expected: is_isomorphic(&q2, expected_t, caps)?.is_some(),
        cross_checks: cross,
    })
}

/// N x S_(m-n) inside S_m as an explicit element set.
fn direct_product_subgroup(
    head: &PermSubgroup,
    n: usize,
    m: usize,
    caps: &Caps,
) -> Result<PermSubgroup> {
    let head_elems = head.materialize(caps)?;
    let tail_points: Vec<usize> = (n..m).collect();
    let mut tail_perms: Vec<Permutation> = vec![Permutation::identity(m)];
    if tail_points.len() >= 2 {
        let gens: Vec<Permutation> = vec![
            Permutation::transposition(m, n, n + 1),
            Permutation::cycle(m, &tail_points),
        ];
        tail_perms = crate::perm::psubgroup::closure_of_perms(m, &gens, None)
            .expect("no cap on the tail closure");
    }
    let mut out = Vec::with_capacity(head_elems.len() * tail_perms.len());
    for a in head_elems.perms() {
        let a_ext = extend_to_degree(a, m);
        for b in &tail_perms {
            out.push(a_ext.compose(b));
        }
    }
    PermSubgroup::from_elements(m, out)
}

/// True iff the tail {n..m-1} is the only invariant subset of its size.
fn unique_invariant_subset(
    h: &PermSubgroup,
    size: usize,
    n: usize,
    caps: &Caps,
) -> Result<bool> {
    let m = h.degree();
    let gens = h.generators();
    let _ = caps;
    let tail: Vec<usize> = (n..m).collect();
    let mut found = Vec::new();
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        let invariant = gens.iter().all(|g| {
            let mut image: Vec<usize> = subset.iter().map(|&x| g.apply(x)).collect();
            image.sort_unstable();
            image == subset
        });
        if invariant {
            found.push(subset.clone());
            if found.len() > 1 {
                return Ok(false);
            }
        }
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(found.len() == 1 && found[0] == tail);
            }
            i -= 1;
            if subset[i] < m - (size - i) {
                subset[i] += 1;
                for j in i + 1..size {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The assembled construction for a nonabelian centerless table group:
/// H = <InHol(G), inv_G>, its brute-force normalizer, and the quotient
/// compared against Out(G).
#[derive(Debug, Serialize)]
pub struct AssemblyReport {
    pub group_order: usize,
    pub h_order: usize,
    pub upper_order: usize,
    pub normalizer_order: usize,
    pub normalizer_equals_upper: bool,
    pub quotient_order: usize,
    pub out_order: usize,
    pub quotient_iso_to_out: bool,
    pub inv_outside_hol: bool,
    /// None when the automorphism scan of H exceeded its cap
    pub inhol_characteristic_in_h: Option<bool>,
    /// the normalizer identity is proved only for the CS family; for
    /// arbitrary table groups this report records observations
    pub exploratory: bool,
}

pub fn main_theorem_assembly(g: &GroupTable, caps: &Caps) -> Result<AssemblyReport> {
    if g.is_abelian() {
        return Err(Error::Abelian);
    }
    let z = center(g).len();
    if z != 1 {
        return Err(Error::NotCenterless { center_order: z });
    }
    let h = inhol_with_inv(g, caps)?;
    let h_order = h.order(caps)?;
    assert_eq!(h_order, 2 * g.order() * g.order(), "|H| = 2 |G| |Inn(G)|");

    let hol_sub = hol(g, caps)?;
    let inv_outside_hol = !hol_sub.contains(&inv_perm(g), caps)?;

    let upper = hol_with_inv(g, caps)?;
    let upper_order = upper.order(caps)?;

    let normalizer = normalizer_in_sym(&h, caps)?;
    let normalizer_order = normalizer.order(caps)?;
    let normalizer_equals_upper = normalizer.same_set(&upper, caps)?;

    let q = quotient_by_subgroup(&normalizer, &h, caps)?;
    let out = outer_automorphism_group(g, caps)?;
    let quotient_iso_to_out = is_isomorphic(&q, &out, caps)?.is_some();

    let inhol_characteristic_in_h = {
        let h_table = group_table_from_perms(h.materialize(caps)?.perms())?;
        let ih = inhol(g, caps)?;
        let ih_elems = ih.materialize(caps)?;
        let h_sorted = h.materialize(caps)?.perms();
        let indices: Vec<usize> = ih_elems
            .perms()
            .iter()
            .map(|p| h_sorted.binary_search(p).expect("InHol(G) lies inside H"))
            .collect();
        let sub = Subgroup::from_unsorted(indices);
        match is_characteristic(&sub, &h_table, caps) {
            Ok(b) => Some(b),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    };

    Ok(AssemblyReport {
        group_order: g.order(),
        h_order,
        upper_order,
        normalizer_order,
        normalizer_equals_upper,
        quotient_order: q.order(),
        out_order: out.order(),
        quotient_iso_to_out,
        inv_outside_hol,
        inhol_characteristic_in_h,
        exploratory: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::standard::{cyclic, symmetric, trivial};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn degree_too_small_rejected() {
        let h = PermSubgroup::trivial(2);
        assert!(matches!(
            LiftSpec::new(h, 2, 4),
            Err(Error::DegreeTooSmall { m: 4, min: 5 })
        ));
    }

    #[test]
    fn embed_orders() {
        let c = caps();
        // trivial <= S_2 into S_5: H1 = Sym{2,3,4} of order 6
        let spec = LiftSpec::new(PermSubgroup::trivial(2), 2, 5).unwrap();
        assert_eq!(embed(&spec, &c).unwrap().order(&c).unwrap(), 6);

        // <3-cycle> <= S_3 into S_7: |H1| = 3 * 24 = 72
        let h = PermSubgroup::from_generators(3, vec![Permutation::cycle(3, &[0, 1, 2])]).unwrap();
        let spec = LiftSpec::new(h, 3, 7).unwrap();
        assert_eq!(embed(&spec, &c).unwrap().order(&c).unwrap(), 72);
    }

    #[test]
    fn alternating_intersection() {
        let c = caps();
        let spec = LiftSpec::new(PermSubgroup::trivial(2), 2, 5).unwrap();
        let h1 = embed(&spec, &c).unwrap();
        let h2 = intersect_alternating(&h1, &c).unwrap();
        assert_eq!(h2.order(&c).unwrap(), 3);

        // already even: H1 = <3-cycle on tail> stays put
        let h = PermSubgroup::from_elements(
            5,
            crate::perm::psubgroup::closure_of_perms(
                5,
                &[Permutation::cycle(5, &[2, 3, 4])],
                None,
            )
            .unwrap(),
        )
        .unwrap();
        let h2 = intersect_alternating(&h, &c).unwrap();
        assert!(h2.same_set(&h, &c).unwrap());
    }

    #[test]
    fn normalizer_quotient_of_lifted_trivial_subgroup() {
        let c = caps();
        let spec = LiftSpec::new(PermSubgroup::trivial(2), 2, 5).unwrap();
        let h1 = embed(&spec, &c).unwrap();
        let (q, n) = normalizer_quotient(Ambient::Sym, &h1, &c).unwrap();
        // N = S_2 x S_3 of order 12, quotient of order 2
        assert_eq!(n.order(&c).unwrap(), 12);
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn lift_check_trivial_in_s2_to_s5_expect_c2() {
        let c = caps();
        let report = lift_check(
            &PermSubgroup::trivial(2),
            2,
            5,
            &cyclic(2).unwrap(),
            &c,
        )
        .unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.sym_quotient_order, 2);
        assert_eq!(report.alt_quotient_order, 2);
    }

    #[test]
    fn lift_check_full_s2_expect_trivial() {
        let c = caps();
        let full_s2 = PermSubgroup::from_generators(2, vec![Permutation::transposition(2, 0, 1)]).unwrap();
        let report = lift_check(&full_s2, 2, 5, &trivial(), &c).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.sym_quotient_order, 1);
    }

    #[test]
    fn assembly_for_s3_is_tight() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let report = main_theorem_assembly(&s3, &c).unwrap();
        assert_eq!(report.h_order, 72);
        assert_eq!(report.normalizer_order, 72);
        assert!(report.normalizer_equals_upper);
        assert_eq!(report.quotient_order, 1);
        assert_eq!(report.out_order, 1);
        assert!(report.quotient_iso_to_out);
        assert!(report.inv_outside_hol);
        // Aut(H) has an outer half that swaps lambda x rho with the other
        // index-2 copy of S3 x S3, so InHol(S3) is measurably not
        // characteristic here; the CS-family proof does not cover S3.
        assert_eq!(report.inhol_characteristic_in_h, Some(false));
    }

    #[test]
    fn assembly_guards() {
        let c = caps();
        assert!(matches!(
            main_theorem_assembly(&cyclic(4).unwrap(), &c),
            Err(Error::Abelian)
        ));
        let d4 = crate::group::standard::dihedral(4).unwrap();
        assert!(matches!(
            main_theorem_assembly(&d4, &c),
            Err(Error::NotCenterless { center_order: 2 })
        ));
    }
}
