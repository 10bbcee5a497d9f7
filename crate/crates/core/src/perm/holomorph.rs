//! Regular representations, holomorphs, and brute-force normalizers and
//! centralizers in Sym(d).
//!
//! The Sym(d) scans are the independent ground truth of this workspace:
//! they decide normalizers by definition, permutation by permutation, in
//! lexicographic rank order.

use rayon::prelude::*;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::hom::{automorphism_group, greedy_generators};
use crate::group::subgroup::center;
use crate::group::table::GroupTable;
use crate::perm::permutation::{factorial, unrank_lex, Permutation};
use crate::perm::psubgroup::{ElementSet, PermSubgroup};

/// A labeled embedding of a table group into Sym(|G|): `perms[g]` is the
/// permutation assigned to element g.
#[derive(Debug, Clone)]
pub struct RegularEmbedding {
    pub perms: Vec<Permutation>,
    pub subgroup: PermSubgroup,
}

/// Left regular representation: g -> (x -> g x).
pub fn lambda_rep(g: &GroupTable) -> RegularEmbedding {
    let perms: Vec<Permutation> = g
        .elements()
        .map(|a| {
            Permutation::from_images(g.elements().map(|x| g.mul(a, x) as u16).collect())
                .expect("rows of a Latin square are bijections")
        })
        .collect();
    let gens = generator_perms(g, &perms);
    RegularEmbedding {
        subgroup: PermSubgroup::from_elements_or_gens(g.order(), perms.clone(), gens),
        perms,
    }
}

/// Right regular representation: g -> (x -> x g^{-1}).
pub fn rho_rep(g: &GroupTable) -> RegularEmbedding {
    let perms: Vec<Permutation> = g
        .elements()
        .map(|a| {
            Permutation::from_images(g.elements().map(|x| g.mul(x, g.inv(a)) as u16).collect())
                .expect("columns of a Latin square are bijections")
        })
        .collect();
    let gens = generator_perms(g, &perms);
    RegularEmbedding {
        subgroup: PermSubgroup::from_elements_or_gens(g.order(), perms.clone(), gens),
        perms,
    }
}

fn generator_perms(g: &GroupTable, perms: &[Permutation]) -> Vec<Permutation> {
    let gens = greedy_generators(g);
    if gens.is_empty() {
        vec![Permutation::identity(g.order())]
    } else {
        gens.iter().map(|&i| perms[i].clone()).collect()
    }
}

impl PermSubgroup {
    /// Element set known up front but with a designated small generator
    /// list (smaller generator lists make normalizer scans cheaper).
    fn from_elements_or_gens(degree: usize, perms: Vec<Permutation>, gens: Vec<Permutation>) -> PermSubgroup {
        let sub = PermSubgroup::from_generators(degree, gens).expect("degrees match");
        sub.set_elements(ElementSet::from_perms(perms));
        sub
    }
}

/// The inversion permutation x -> x^{-1}.
pub fn inv_perm(g: &GroupTable) -> Permutation {
    Permutation::from_images(g.elements().map(|x| g.inv(x) as u16).collect())
        .expect("inversion is a bijection")
}

/// Hol(G) = <lambda(G), Aut(G)> acting on element indices;
/// |Hol(G)| = |G| * |Aut(G)| is asserted after materialization.
pub fn hol(g: &GroupTable, caps: &Caps) -> Result<PermSubgroup> {
    let lambda = lambda_rep(g);
    let (aut_table, _, auts) = automorphism_group(g, caps)?;
    let mut gens: Vec<Permutation> = lambda.subgroup.generators().to_vec();
    for idx in greedy_generators(&aut_table) {
        gens.push(
            Permutation::from_images(auts[idx].images().iter().map(|&v| v as u16).collect())
                .expect("automorphisms are bijections"),
        );
    }
    let sub = PermSubgroup::from_generators(g.order(), gens)?;
    let order = sub.order(caps)?;
    assert_eq!(
        order,
        g.order() * auts.len(),
        "holomorph order must be |G| * |Aut(G)|"
    );
    Ok(sub)
}

/// InHol(G) = lambda(G) rho(G); |InHol(G)| = |G|^2 / |Z(G)| is asserted.
pub fn inhol(g: &GroupTable, caps: &Caps) -> Result<PermSubgroup> {
    let lambda = lambda_rep(g);
    let rho = rho_rep(g);
    let mut gens = lambda.subgroup.generators().to_vec();
    gens.extend_from_slice(rho.subgroup.generators());
    let sub = PermSubgroup::from_generators(g.order(), gens)?;
    let order = sub.order(caps)?;
    assert_eq!(
        order,
        g.order() * g.order() / center(g).len(),
        "inner holomorph order must be |G|^2 / |Z(G)|"
    );
    Ok(sub)
}

/// <Hol(G), inv_G>, the upper bound of the normalizer comparison.
pub fn hol_with_inv(g: &GroupTable, caps: &Caps) -> Result<PermSubgroup> {
    let h = hol(g, caps)?;
    let mut gens = h.generators().to_vec();
    gens.push(inv_perm(g));
    PermSubgroup::from_generators(g.order(), gens)
}

/// <InHol(G), inv_G>, the subgroup H of the main assembly.
pub fn inhol_with_inv(g: &GroupTable, caps: &Caps) -> Result<PermSubgroup> {
    let h = inhol(g, caps)?;
    let mut gens = h.generators().to_vec();
    gens.push(inv_perm(g));
    PermSubgroup::from_generators(g.order(), gens)
}

/// Centralizer of R in Sym(d). For regular R the closed form is used: for
/// each point a there is exactly one commuting permutation sending 0 to a.
/// Otherwise an exhaustive scan over Sym(d) runs under the degree cap.
pub fn centralizer_in_sym(r: &PermSubgroup, caps: &Caps) -> Result<PermSubgroup> {
    let d = r.degree();
    let elems = r.materialize(caps)?;
    if crate::perm::psubgroup::is_regular_set(d, elems.perms()) {
        // reg[x] = the unique element of R with sigma(0) = x
        let mut reg: Vec<&Permutation> = vec![elems.perms().first().expect("nonempty"); d];
        for p in elems.perms() {
            reg[p.apply(0)] = p;
        }
        let perms: Vec<Permutation> = (0..d)
            .map(|a| {
                Permutation::from_images((0..d).map(|x| reg[x].apply(a) as u16).collect())
                    .expect("centralizer images are bijections")
            })
            .collect();
        let sub = PermSubgroup::from_elements(d, perms)?;
        debug_assert!(sub
            .materialize(caps)?
            .perms()
            .iter()
            .all(|c| r.generators().iter().all(|g| c.compose(g) == g.compose(c))));
        return Ok(sub);
    }
    if d > caps.max_degree {
        return Err(Error::CapExceeded {
            what: "centralizer scan degree",
            needed: d as u64,
            limit: caps.max_degree as u64,
        });
    }
    let gens = r.generators().to_vec();
    let found = scan_sym(d, None, move |p| gens.iter().all(|g| p.compose(g) == g.compose(p)));
    PermSubgroup::from_elements(d, found)
}

/// N_{Sym(d)}(H) by rank-ordered exhaustive scan. Membership uses only
/// generator conjugation: sigma^{-1} gen sigma in H for every generator.
pub fn normalizer_in_sym(h: &PermSubgroup, caps: &Caps) -> Result<PermSubgroup> {
    normalizer_scan(h, caps, false)
}

/// Same scan restricted to even permutations: N_{Alt(d)}(H).
pub fn normalizer_in_alt(h: &PermSubgroup, caps: &Caps) -> Result<PermSubgroup> {
    normalizer_scan(h, caps, true)
}

fn normalizer_scan(h: &PermSubgroup, caps: &Caps, even_only: bool) -> Result<PermSubgroup> {
    let d = h.degree();
    if d > caps.max_degree {
        return Err(Error::CapExceeded {
            what: "normalizer scan degree",
            needed: d as u64,
            limit: caps.max_degree as u64,
        });
    }
    let elems = h.materialize(caps)?;
    let keys = elems
        .packed_keys()
        .expect("degree <= 12 always has a packed index");
    let gens: Vec<&Permutation> = h.generators().iter().collect();
    let gen_images: Vec<&[u16]> = gens.iter().map(|g| g.images()).collect();

    let found = scan_sym(d, even_only.then_some(true), move |p| {
        let images = p.images();
        let mut inv = [0u16; 16];
        for (x, &y) in images.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        gen_images.iter().all(|g| {
            let mut key = 0u64;
            for (x, &px) in images.iter().enumerate() {
                let y = inv[g[px as usize] as usize];
                key |= (y as u64) << (4 * x);
            }
            keys.binary_search(&key).is_ok()
        })
    });
    let sub = PermSubgroup::from_elements(d, found)?;
    debug_assert!(sub.materialize(caps)?.len() % elems.len() == 0);
    Ok(sub)
}

/// Runs `test` over all of Sym(d) in lexicographic rank order, partitioned
/// into rank ranges processed in parallel and merged deterministically.
fn scan_sym<F>(d: usize, even_only: Option<bool>, test: F) -> Vec<Permutation>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    let total = factorial(d);
    let chunk: u64 = 1 << 15;
    let n_chunks = total.div_ceil(chunk);
    let results: Vec<Vec<Permutation>> = (0..n_chunks)
        .into_par_iter()
        .map(|ci| {
            let start = ci * chunk;
            let end = (start + chunk).min(total);
            let mut p = unrank_lex(d, start);
            let mut out = Vec::new();
            for _ in start..end {
                if (even_only != Some(true) || p.parity_even()) && test(&p) {
                    out.push(p.clone());
                }
                if !p.next_lex() {
                    break;
                }
            }
            out
        })
        .collect();
    results.concat()
}

/// NHol(G) = N_{Sym(G)}(Hol(G)), brute force; tiny degrees only.
pub fn nhol(g: &GroupTable, caps: &Caps) -> Result<PermSubgroup> {
    let h = hol(g, caps)?;
    normalizer_in_sym(&h, caps)
}
