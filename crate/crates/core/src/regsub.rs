//! Regular subgroups of the inner holomorph via fixed-point-free pairs of
//! homomorphisms, the centralizer pairing, and the minimality verdict for
//! the normalizer of InHol(G).

use rayon::prelude::*;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::hom::{homomorphisms, Homomorphism};
use crate::group::subgroup::center;
use crate::group::table::GroupTable;
use crate::perm::holomorph::{inhol, lambda_rep, rho_rep};
use crate::perm::permutation::Permutation;
use crate::perm::psubgroup::{closure_of_perms, is_regular_set, PermSubgroup};

/// A fixed-point-free pair of homomorphisms N -> G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpfPair {
    pub f: Homomorphism,
    pub g: Homomorphism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegClass {
    Lambda,
    Rho,
    Other,
}

/// A realized regular subgroup R_(f,g) = { lambda(f(x)) rho(g(x)) }.
#[derive(Debug, Clone)]
pub struct RegularWitness {
    pub pair: FpfPair,
    pub subgroup: PermSubgroup,
    pub classification: RegClass,
}

/// True iff f(x) = g(x) has no solution besides the identity.
pub fn is_fixed_point_free(f: &Homomorphism, g: &Homomorphism) -> Result<bool> {
    if f.domain_order() != g.domain_order() {
        return Err(Error::DomainMismatch);
    }
    Ok((1..f.domain_order()).all(|x| f.apply(x) != g.apply(x)))
}

fn fpf_violation(f: &Homomorphism, g: &Homomorphism) -> Option<usize> {
    (1..f.domain_order()).find(|&x| f.apply(x) == g.apply(x))
}

/// Shared scaffolding for realizing many pairs over the same codomain:
/// the regular representations and the materialized inner holomorph.
pub struct RealizationContext<'a> {
    g: &'a GroupTable,
    lambda: crate::perm::holomorph::RegularEmbedding,
    rho: crate::perm::holomorph::RegularEmbedding,
    inhol: PermSubgroup,
    lambda_set: Vec<Permutation>,
    rho_set: Vec<Permutation>,
}

impl<'a> RealizationContext<'a> {
    pub fn new(g: &'a GroupTable, caps: &Caps) -> Result<Self> {
        let lambda = lambda_rep(g);
        let rho = rho_rep(g);
        let lambda_set = lambda.subgroup.materialize(caps)?.perms().to_vec();
        let rho_set = rho.subgroup.materialize(caps)?.perms().to_vec();
        let inhol = inhol(g, caps)?;
        inhol.materialize(caps)?;
        Ok(RealizationContext {
            g,
            lambda,
            rho,
            inhol,
            lambda_set,
            rho_set,
        })
    }

    pub fn inhol(&self) -> &PermSubgroup {
        &self.inhol
    }

    /// Materializes R_(f,g) and checks the lemma-shaped postconditions:
    /// order |N|, regularity, containment in InHol(G).
    pub fn realize(&self, pair: &FpfPair, n: &GroupTable, caps: &Caps) -> Result<RegularWitness> {
        if let Some(at) = fpf_violation(&pair.f, &pair.g) {
            return Err(Error::NotFpf { at });
        }
        if n.order() != self.g.order() {
            return Err(Error::OrderMismatch {
                domain: n.order(),
                degree: self.g.order(),
            });
        }
        let mut perms: Vec<Permutation> = n
            .elements()
            .map(|x| self.lambda.perms[pair.f.apply(x)].compose(&self.rho.perms[pair.g.apply(x)]))
            .collect();
        perms.sort_unstable();
        perms.dedup();
        if perms.len() != n.order() || !is_regular_set(self.g.order(), &perms) {
            return Err(Error::CertificateFailed {
                check: "realization of a fixed-point-free pair must be regular of order |N|".into(),
            });
        }
        let ih_elems = self.inhol.materialize(caps)?;
        if !perms.iter().all(|p| ih_elems.contains(p)) {
            return Err(Error::CertificateFailed {
                check: "realization must lie inside InHol(G)".into(),
            });
        }
        let classification = if perms == self.lambda_set {
            RegClass::Lambda
        } else if perms == self.rho_set {
            RegClass::Rho
        } else {
            RegClass::Other
        };
        Ok(RegularWitness {
            pair: pair.clone(),
            subgroup: PermSubgroup::from_elements(self.g.order(), perms)?,
            classification,
        })
    }
}

/// One-shot convenience wrapper around `RealizationContext::realize`.
pub fn regular_from_pair(
    pair: &FpfPair,
    n: &GroupTable,
    g: &GroupTable,
    caps: &Caps,
) -> Result<RegularWitness> {
    RealizationContext::new(g, caps)?.realize(pair, n, caps)
}

/// All ordered fixed-point-free pairs (f, g) from Hom(N, G)^2, pairs in
/// lexicographic order of the underlying homomorphism scan.
pub fn enumerate_fpf_pairs(n: &GroupTable, g: &GroupTable, caps: &Caps) -> Result<Vec<FpfPair>> {
    let homs = homomorphisms(n, g, caps)?;
    let mut out = Vec::new();
    for f in &homs {
        for h in &homs {
            if is_fixed_point_free(f, h)? {
                out.push(FpfPair {
                    f: f.clone(),
                    g: h.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The centralizer criterion for two fixed-point-free pairs with a common
/// centerless codomain: images of f and f' commute elementwise, and images
/// of g and g' commute elementwise.
pub fn centralizer_pair_condition(p1: &FpfPair, p2: &FpfPair, g: &GroupTable) -> Result<bool> {
    let z = center(g).len();
    if z != 1 {
        return Err(Error::NotCenterless { center_order: z });
    }
    Ok(images_commute(&p1.f, &p2.f, g) && images_commute(&p1.g, &p2.g, g))
}

fn images_commute(a: &Homomorphism, b: &Homomorphism, g: &GroupTable) -> bool {
    let ia = a.image_set();
    let ib = b.image_set();
    let ok = ia
        .as_slice()
        .iter()
        .all(|&x| ib.as_slice().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    ok
}

/// All regular subgroups of InHol(G) by brute force: close every seed of
/// up to 3 elements of InHol(G), abort closures that grow past |G|, keep
/// the regular ones. Every group of order <= 12 is at most 3-generated,
/// so 3-element seeds are exhaustive at this cap.
pub fn enumerate_regular_subgroups_brute(g: &GroupTable, caps: &Caps) -> Result<Vec<PermSubgroup>> {
    let d = g.order();
    if d > caps.max_regular_base {
        return Err(Error::CapExceeded {
            what: "brute-force regular subgroup base order",
            needed: d as u64,
            limit: caps.max_regular_base as u64,
        });
    }
    let ih = inhol(g, caps)?;
    let elems = ih.materialize(caps)?;
    let m = elems.len();
    if m > caps.max_regular_ambient {
        return Err(Error::CapExceeded {
            what: "brute-force regular subgroup ambient order",
            needed: m as u64,
            limit: caps.max_regular_ambient as u64,
        });
    }
    let perms = elems.perms();
    let mut sets: Vec<Vec<Permutation>> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut local: Vec<Vec<Permutation>> = Vec::new();
            for j in i..m {
                for k in j..m {
                    let seed = [perms[i].clone(), perms[j].clone(), perms[k].clone()];
                    if let Some(mut cl) = closure_of_perms(d, &seed, Some(d)) {
                        if cl.len() == d {
                            cl.sort_unstable();
                            if is_regular_set(d, &cl) {
                                local.push(cl);
                            }
                        }
                    }
                }
            }
            local
        })
        .collect();
    sets.sort_unstable();
    sets.dedup();
    sets.into_iter()
        .map(|s| PermSubgroup::from_elements(d, s))
        .collect()
}

/// Verdict of the minimality question for N_Sym(G)(InHol(G)).
#[derive(Debug, Clone)]
pub enum Verdict {
    /// The normalizer is exactly <Hol(G), inv_G>.
    Minimal,
    /// A regular subgroup besides lambda and rho has its centralizer inside
    /// InHol(G); the normalizer is strictly larger.
    StrictlyLarger {
        witness: Box<(FpfPair, FpfPair)>,
    },
}

impl Verdict {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Verdict::Minimal)
    }
}

/// Decides whether N_Sym(G)(InHol(G)) = <Hol(G), inv_G> for centerless G,
/// purely through fixed-point-free pairs with domain G: the normalizer is
/// strictly larger iff some pair classified neither lambda nor rho admits
/// a partner pair satisfying the centralizer criterion.
pub fn minimality_verdict(g: &GroupTable, caps: &Caps) -> Result<Verdict> {
    let z = center(g).len();
    if z != 1 {
        return Err(Error::NotCenterless { center_order: z });
    }
    let pairs = enumerate_fpf_pairs(g, g, caps)?;
    let ctx = RealizationContext::new(g, caps)?;
    let witnesses: Vec<RegularWitness> = pairs
        .iter()
        .map(|p| ctx.realize(p, g, caps))
        .collect::<Result<_>>()?;
    for w in &witnesses {
        if w.classification != RegClass::Other {
            continue;
        }
        for partner in &pairs {
            if centralizer_pair_condition(&w.pair, partner, g)? {
                return Ok(Verdict::StrictlyLarger {
                    witness: Box::new((w.pair.clone(), partner.clone())),
                });
            }
        }
    }
    Ok(Verdict::Minimal)
}

/// Joint report of the minimality verdict against the decomposability
/// search, with the kernel decomposition recovered from the witness.
#[derive(Debug, Clone)]
pub struct Thm13Report {
    pub minimal: bool,
    pub decomposable: bool,
    /// minimal iff indecomposable
    pub dichotomy_holds: bool,
    /// present exactly when a witness exists
    pub kernels: Option<KernelDecomposition>,
}

#[derive(Debug, Clone)]
pub struct KernelDecomposition {
    pub ker_f_order: usize,
    pub ker_g_order: usize,
    pub trivial_intersection: bool,
    pub product_covers_group: bool,
    pub matches_direct_factors: bool,
}

pub fn thm13_check(g: &GroupTable, caps: &Caps) -> Result<Thm13Report> {
    let verdict = minimality_verdict(g, caps)?;
    let decomposition = crate::group::subgroup::is_decomposable(g, caps)?;
    let kernels = match &verdict {
        Verdict::Minimal => None,
        Verdict::StrictlyLarger { witness } => {
            let (p1, _) = witness.as_ref();
            let ker_f = p1.f.kernel();
            let ker_g = p1.g.kernel();
            let trivial_intersection = ker_f.elements().filter(|&x| ker_g.contains(x)).count() == 1;
            let product_covers_group = {
                let mut hit = vec![false; g.order()];
                for a in ker_f.elements() {
                    for b in ker_g.elements() {
                        hit[g.mul(a, b)] = true;
                    }
                }
                hit.iter().all(|&h| h)
            };
            let matches_direct_factors = decomposition.as_ref().is_some_and(|(h, k)| {
                let mut found = [h.len(), k.len()];
                let mut kers = [ker_f.len(), ker_g.len()];
                found.sort_unstable();
                kers.sort_unstable();
                found == kers
            });
            Some(KernelDecomposition {
                ker_f_order: ker_f.len(),
                ker_g_order: ker_g.len(),
                trivial_intersection,
                product_covers_group,
                matches_direct_factors,
            })
        }
    };
    let minimal = verdict.is_minimal();
    let decomposable = decomposition.is_some();
    Ok(Thm13Report {
        minimal,
        decomposable,
        dichotomy_holds: minimal == !decomposable,
        kernels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::hom::is_isomorphic;
    use crate::group::standard::{cyclic, dihedral, direct_product, symmetric};
    use crate::perm::holomorph::centralizer_in_sym;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn fpf_basics() {
        let id = Homomorphism::identity(6);
        let triv = Homomorphism::trivial(6);
        assert!(is_fixed_point_free(&id, &triv).unwrap());
        assert!(!is_fixed_point_free(&id, &id).unwrap());
        let short = Homomorphism::trivial(3);
        assert!(matches!(
            is_fixed_point_free(&id, &short),
            Err(Error::DomainMismatch)
        ));
    }

    #[test]
    fn projection_pair_on_s3xs3_is_fpf() {
        let s3 = symmetric(3).unwrap();
        let g = direct_product(&s3, &s3);
        // f(h, k) = (h, 1), g(h, k) = (1, k)
        let f = Homomorphism::new_unchecked(
            (0..36).map(|x| ((x / 6) * 6) as u32).collect(),
        );
        let h = Homomorphism::new_unchecked((0..36).map(|x| (x % 6) as u32).collect());
        assert!(f.is_homomorphism(&g, &g));
        assert!(h.is_homomorphism(&g, &g));
        assert!(is_fixed_point_free(&f, &h).unwrap());
        let w = regular_from_pair(&FpfPair { f, g: h }, &g, &g, &caps()).unwrap();
        assert_eq!(w.classification, RegClass::Other);
        assert_eq!(w.subgroup.order(&caps()).unwrap(), 36);
    }

    #[test]
    fn trivial_pairs_realize_lambda_and_rho() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let id = Homomorphism::identity(6);
        let triv = Homomorphism::trivial(6);
        let w = regular_from_pair(
            &FpfPair { f: id.clone(), g: triv.clone() },
            &s3,
            &s3,
            &c,
        )
        .unwrap();
        assert_eq!(w.classification, RegClass::Lambda);
        let w = regular_from_pair(&FpfPair { f: triv, g: id }, &s3, &s3, &c).unwrap();
        assert_eq!(w.classification, RegClass::Rho);
    }

    #[test]
    fn fpf_pair_enumeration_on_c2() {
        let c2 = cyclic(2).unwrap();
        let pairs = enumerate_fpf_pairs(&c2, &c2, &caps()).unwrap();
        assert_eq!(pairs.len(), 2);
        for p in &pairs {
            assert_ne!(p.f, p.g);
        }
    }

    /// Pair count agrees with an independent double loop over End(S3)^2.
    #[test]
    fn fpf_pair_count_matches_brute_filter_on_s3() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let endos = homomorphisms(&s3, &s3, &c).unwrap();
        assert_eq!(endos.len(), 10);
        let mut brute = 0usize;
        for f in &endos {
            for g in &endos {
                if (1..6).all(|x| f.apply(x) != g.apply(x)) {
                    brute += 1;
                }
            }
        }
        assert_eq!(enumerate_fpf_pairs(&s3, &s3, &c).unwrap().len(), brute);
    }

    #[test]
    fn centralizer_condition_examples() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let id = Homomorphism::identity(6);
        let triv = Homomorphism::trivial(6);
        let p_lambda = FpfPair { f: id.clone(), g: triv.clone() };
        let p_rho = FpfPair { f: triv, g: id };
        assert!(centralizer_pair_condition(&p_lambda, &p_rho, &s3).unwrap());
        // (id, triv) against itself fails: [G, G] != 1 for nonabelian G
        assert!(!centralizer_pair_condition(&p_lambda, &p_lambda, &s3).unwrap());
        // the lemma's hypothesis is enforced
        let c4 = cyclic(4).unwrap();
        let p = FpfPair {
            f: Homomorphism::identity(4),
            g: Homomorphism::trivial(4),
        };
        assert!(matches!(
            centralizer_pair_condition(&p, &p, &c4),
            Err(Error::NotCenterless { center_order: 4 })
        ));
        let _ = c;
    }

    /// Duality: when the criterion holds, the realizations are each
    /// other's centralizers in Sym(G).
    #[test]
    fn criterion_implies_centralizer_duality() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let g = direct_product(&s3, &s3);
        let f = Homomorphism::new_unchecked((0..36).map(|x| ((x / 6) * 6) as u32).collect());
        let h = Homomorphism::new_unchecked((0..36).map(|x| (x % 6) as u32).collect());
        let p1 = FpfPair { f: f.clone(), g: h.clone() };
        let p2 = FpfPair { f: h, g: f };
        assert!(centralizer_pair_condition(&p1, &p2, &g).unwrap());
        let w1 = regular_from_pair(&p1, &g, &g, &c).unwrap();
        let w2 = regular_from_pair(&p2, &g, &g, &c).unwrap();
        let c1 = centralizer_in_sym(&w1.subgroup, &c).unwrap();
        assert!(c1.same_set(&w2.subgroup, &c).unwrap());
        let c2 = centralizer_in_sym(&w2.subgroup, &c).unwrap();
        assert!(c2.same_set(&w1.subgroup, &c).unwrap());
    }

    #[test]
    fn kernels_of_fpf_pairs_intersect_trivially() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        for p in enumerate_fpf_pairs(&s3, &s3, &c).unwrap() {
            let kf = p.f.kernel();
            let kg = p.g.kernel();
            assert_eq!(kf.elements().filter(|&x| kg.contains(x)).count(), 1);
        }
    }

    #[test]
    fn verdict_minimal_for_s3() {
        let s3 = symmetric(3).unwrap();
        assert!(minimality_verdict(&s3, &caps()).unwrap().is_minimal());
    }

    #[test]
    fn verdict_strictly_larger_for_s3xs3_with_kernel_decomposition() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let g = direct_product(&s3, &s3);
        let report = thm13_check(&g, &c).unwrap();
        assert!(!report.minimal);
        assert!(report.decomposable);
        assert!(report.dichotomy_holds);
        let k = report.kernels.unwrap();
        assert!(k.trivial_intersection && k.product_covers_group && k.matches_direct_factors);
        assert_eq!(
            {
                let mut v = [k.ker_f_order, k.ker_g_order];
                v.sort_unstable();
                v
            },
            [6, 6]
        );
    }

    #[test]
    fn thm13_consistency_on_small_corpus() {
        let c = caps();
        for g in [symmetric(3).unwrap(), dihedral(5).unwrap()] {
            let report = thm13_check(&g, &c).unwrap();
            assert!(report.minimal && !report.decomposable && report.dichotomy_holds);
        }
    }

    /// Realizations over all N of order |G| equal the brute-force list of
    /// all regular subgroups of InHol(G): the parametrization is complete.
    #[test]
    fn realizations_exhaust_regular_subgroups_of_inhol_s3() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let c6 = cyclic(6).unwrap();
        let ctx = RealizationContext::new(&s3, &c).unwrap();
        let mut realized: Vec<Vec<Permutation>> = Vec::new();
        for n in [&c6, &s3] {
            for p in enumerate_fpf_pairs(n, &s3, &c).unwrap() {
                let w = ctx.realize(&p, n, &c).unwrap();
                let set = w.subgroup.materialize(&c).unwrap().perms().to_vec();
                if !realized.contains(&set) {
                    realized.push(set);
                }
            }
        }
        realized.sort_unstable();
        let brute = enumerate_regular_subgroups_brute(&s3, &c).unwrap();
        let mut brute_sets: Vec<Vec<Permutation>> = brute
            .iter()
            .map(|s| s.materialize(&c).unwrap().perms().to_vec())
            .collect();
        brute_sets.sort_unstable();
        assert_eq!(realized, brute_sets);
    }

    /// Every realization is isomorphic to its domain N.
    #[test]
    fn realizations_are_isomorphic_to_their_domain() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let c6 = cyclic(6).unwrap();
        let ctx = RealizationContext::new(&s3, &c).unwrap();
        for n in [&c6, &s3] {
            for p in enumerate_fpf_pairs(n, &s3, &c).unwrap().into_iter().take(8) {
                let w = ctx.realize(&p, n, &c).unwrap();
                let table = crate::perm::psubgroup::group_table_from_perms(
                    w.subgroup.materialize(&c).unwrap().perms(),
                )
                .unwrap();
                assert!(is_isomorphic(&table, n, &c).unwrap().is_some());
            }
        }
    }

    #[test]
    fn abelian_base_has_lambda_as_unique_regular_subgroup() {
        let c = caps();
        let g = cyclic(6).unwrap();
        let brute = enumerate_regular_subgroups_brute(&g, &c).unwrap();
        assert_eq!(brute.len(), 1);
        let l = lambda_rep(&g);
        assert!(brute[0].same_set(&l.subgroup, &c).unwrap());
    }
}
