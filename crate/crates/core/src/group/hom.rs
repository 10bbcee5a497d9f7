//! Homomorphisms between table groups: exhaustive enumeration from small
//! generating sequences, isomorphism search, automorphism groups.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::subgroup::{closure, quotient, Subgroup};
use crate::group::table::GroupTable;

/// A map between table groups, stored as the full image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Homomorphism {
    images: Vec<u32>,
}

impl Homomorphism {
    pub fn new_unchecked(images: Vec<u32>) -> Homomorphism {
        Homomorphism { images }
    }

    pub fn identity(order: usize) -> Homomorphism {
        Homomorphism {
            images: (0..order as u32).collect(),
        }
    }

    pub fn trivial(domain_order: usize) -> Homomorphism {
        Homomorphism {
            images: vec![0; domain_order],
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn domain_order(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_homomorphism(&self, domain: &GroupTable, codomain: &GroupTable) -> bool {
        self.images.len() == domain.order()
            && self.apply(0) == 0
            && domain.elements().all(|x| {
                domain
                    .elements()
                    .all(|y| self.apply(domain.mul(x, y)) == codomain.mul(self.apply(x), self.apply(y)))
            })
    }

    pub fn is_bijective(&self, codomain_order: usize) -> bool {
        if self.images.len() != codomain_order {
            return false;
        }
        let mut seen = vec![false; codomain_order];
        for &v in &self.images {
            if seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&v| v == 0)
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_unsorted(
            (0..self.images.len()).filter(|&x| self.apply(x) == 0).collect(),
        )
    }

    pub fn image_set(&self) -> Subgroup {
        let mut v: Vec<usize> = self.images.iter().map(|&x| x as usize).collect();
        v.sort_unstable();
        v.dedup();
        Subgroup::from_sorted(v)
    }

    /// self after other: x -> self(other(x)).
    pub fn compose(&self, other: &Homomorphism) -> Homomorphism {
        Homomorphism {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }
}

/// Small generating sequence found greedily: repeatedly add the element
/// whose adjunction most enlarges the closure, ties broken by smallest
/// element index. Empty for the trivial group.
pub fn greedy_generators(g: &GroupTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = closure(g, &[]);
    while span.len() < g.order() {
        let mut best: Option<(usize, usize)> = None;
        for x in g.elements() {
            if span.contains(x) {
                continue;
            }
            let mut seed: Vec<usize> = span.elements().collect();
            seed.push(x);
            let grown = closure(g, &seed).len();
            if best.map_or(true, |(b, _)| grown > b) {
                best = Some((grown, x));
            }
        }
        let (_, x) = best.expect("proper subgroup misses some element");
        gens.push(x);
        let mut seed: Vec<usize> = span.elements().collect();
        seed.push(x);
        span = closure(g, &seed);
    }
    gens
}

/// Every element expressed as parent * generator, in BFS discovery order.
struct WordChain {
    /// element indices in discovery order; [0] is the identity
    order: Vec<usize>,
    /// for x != identity: (parent element, generator position)
    expr: Vec<(usize, usize)>,
}

fn word_chain(g: &GroupTable, gens: &[usize]) -> WordChain {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut expr = vec![(usize::MAX, usize::MAX); n];
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (j, &gj) in gens.iter().enumerate() {
            let y = g.mul(x, gj);
            if !seen[y] {
                seen[y] = true;
                expr[y] = (x, j);
                order.push(y);
            }
        }
    }
    assert_eq!(order.len(), n, "generators must generate the whole group");
    WordChain { order, expr }
}

/// Extends a generator-image tuple to a full candidate map along the word
/// chain, then verifies phi(x * g_j) = phi(x) * phi(g_j) for all x and j,
/// which suffices for the homomorphism property.
fn extend_tuple(
    n: &GroupTable,
    g: &GroupTable,
    gens: &[usize],
    chain: &WordChain,
    tuple: &[usize],
    phi: &mut [u32],
) -> bool {
    phi[0] = 0;
    for &x in &chain.order[1..] {
        let (parent, j) = chain.expr[x];
        phi[x] = g.mul(phi[parent] as usize, tuple[j]) as u32;
    }
    for x in 0..n.order() {
        for (j, &gj) in gens.iter().enumerate() {
            if phi[n.mul(x, gj)] != g.mul(phi[x] as usize, tuple[j]) as u32 {
                return false;
            }
        }
    }
    true
}

/// All homomorphisms N -> G, in tuple-scan discovery order.
pub fn homomorphisms(n: &GroupTable, g: &GroupTable, caps: &Caps) -> Result<Vec<Homomorphism>> {
    let gens = greedy_generators(n);
    let k = gens.len() as u32;
    let tuples = (g.order() as u64).checked_pow(k);
    if tuples.map_or(true, |t| t > caps.hom_tuple_budget) {
        return Err(Error::CapExceeded {
            what: "homomorphism tuple scan",
            needed: tuples.unwrap_or(u64::MAX),
            limit: caps.hom_tuple_budget,
        });
    }
    let chain = word_chain(n, &gens);
    let mut out = Vec::new();
    let mut tuple = vec![0usize; gens.len()];
    let mut phi = vec![0u32; n.order()];
    loop {
        if extend_tuple(n, g, &gens, &chain, &tuple, &mut phi) {
            out.push(Homomorphism { images: phi.clone() });
        }
        // odometer
        let mut pos = tuple.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < g.order() {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// All bijective homomorphisms G -> H, found by the order-filtered tuple
/// scan over generator images.
pub fn isomorphisms(g: &GroupTable, h: &GroupTable, caps: &Caps) -> Result<Vec<Homomorphism>> {
    Ok(isomorphism_scan(g, h, caps, false)?.1)
}

/// First isomorphism G -> H in scan order, or None.
pub fn is_isomorphic(g: &GroupTable, h: &GroupTable, caps: &Caps) -> Result<Option<Homomorphism>> {
    Ok(isomorphism_scan(g, h, caps, true)?.1.into_iter().next())
}

fn isomorphism_scan(
    g: &GroupTable,
    h: &GroupTable,
    caps: &Caps,
    first_only: bool,
) -> Result<(usize, Vec<Homomorphism>)> {
    if g.order() != h.order() || g.order_multiset() != h.order_multiset() {
        return Ok((0, Vec::new()));
    }
    let gens = greedy_generators(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| {
            let ord = g.element_order(gen);
            h.elements().filter(|&y| h.element_order(y) == ord).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok((gens.len(), Vec::new()));
    }
    let mut budget: u64 = 1;
    for c in &candidates {
        budget = budget
            .checked_mul(c.len() as u64)
            .filter(|&b| b <= caps.iso_tuple_budget)
            .ok_or(Error::CapExceeded {
                what: "isomorphism tuple scan",
                needed: u64::MAX,
                limit: caps.iso_tuple_budget,
            })?;
    }
    let chain = word_chain(g, &gens);
    let mut out = Vec::new();
    let mut pick = vec![0usize; gens.len()];
    let mut phi = vec![0u32; g.order()];
    let mut tuple = vec![0usize; gens.len()];
    'scan: loop {
        for (j, &c) in pick.iter().enumerate() {
            tuple[j] = candidates[j][c];
        }
        if extend_tuple(g, h, &gens, &chain, &tuple, &mut phi) {
            let cand = Homomorphism { images: phi.clone() };
            if cand.is_bijective(h.order()) {
                out.push(cand);
                if first_only {
                    break 'scan;
                }
            }
        }
        let mut pos = pick.len();
        loop {
            if pos == 0 {
                break 'scan;
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < candidates[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
    Ok((gens.len(), out))
}

pub fn automorphisms(g: &GroupTable, caps: &Caps) -> Result<Vec<Homomorphism>> {
    isomorphisms(g, g, caps)
}

/// Conjugation maps x -> g x g^{-1}, one per distinct map.
pub fn inner_automorphisms(g: &GroupTable) -> Vec<Homomorphism> {
    let mut out: Vec<Homomorphism> = g
        .elements()
        .map(|c| Homomorphism {
            images: g.elements().map(|x| g.conjugate(c, x) as u32).collect(),
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn outer_order(g: &GroupTable, caps: &Caps) -> Result<usize> {
    let aut = automorphisms(g, caps)?.len();
    let inn = inner_automorphisms(g).len();
    debug_assert_eq!(aut % inn, 0);
    Ok(aut / inn)
}

/// Aut(G) as a table group (product = composition, identity map at index
/// 0), the inner automorphisms as a subgroup, and the element list.
pub fn automorphism_group(
    g: &GroupTable,
    caps: &Caps,
) -> Result<(GroupTable, Subgroup, Vec<Homomorphism>)> {
    let mut auts = automorphisms(g, caps)?;
    auts.sort(); // identity has the lexicographically smallest image array
    debug_assert_eq!(auts[0], Homomorphism::identity(g.order()));
    let index: std::collections::HashMap<&Homomorphism, usize> =
        auts.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let n = auts.len();
    let mut rows = vec![vec![0usize; n]; n];
    for (i, a) in auts.iter().enumerate() {
        for (j, b) in auts.iter().enumerate() {
            rows[i][j] = index[&a.compose(b)];
        }
    }
    let table = GroupTable::from_table(&rows, Some("Aut"))?;
    let inner = inner_automorphisms(g);
    let inn = Subgroup::from_unsorted(inner.iter().map(|a| index[a]).collect());
    Ok((table, inn, auts))
}

/// Out(G) = Aut(G)/Inn(G) as a table group.
pub fn outer_automorphism_group(g: &GroupTable, caps: &Caps) -> Result<GroupTable> {
    let (aut, inn, _) = automorphism_group(g, caps)?;
    let (out, _) = quotient(&aut, &inn)?;
    Ok(out.with_name("Out"))
}
