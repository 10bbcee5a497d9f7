//! Subgroups of a table group: closure, centers, normal subgroups,
//! quotients, decomposability and characteristic-subgroup tests.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::hom::{automorphisms, Homomorphism};
use crate::group::table::GroupTable;

/// A subgroup stored as a sorted list of element indices of its ambient
/// group. The ambient table is passed to the operations that need it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn from_sorted(elements: Vec<usize>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn from_unsorted(mut elements: Vec<usize>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn trivial() -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn full(g: &GroupTable) -> Subgroup {
        Subgroup {
            elements: (0..g.order()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elements
    }

    /// Verifies closure under product and inverse, and 0 ∈ H.
    pub fn is_subgroup_of(&self, g: &GroupTable) -> bool {
        self.contains(0)
            && self
                .elements
                .iter()
                .all(|&a| self.elements.iter().all(|&b| self.contains(g.mul(a, b))))
            && self.elements.iter().all(|&a| self.contains(g.inv(a)))
    }

    pub fn is_normal_in(&self, g: &GroupTable) -> bool {
        g.elements()
            .all(|c| self.elements.iter().all(|&x| self.contains(g.conjugate(c, x))))
    }

    /// Elementwise commutativity inside the subgroup.
    pub fn is_abelian_in(&self, g: &GroupTable) -> bool {
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }
}

/// Smallest subgroup containing `seed`, by worklist closure under product.
pub fn closure(g: &GroupTable, seed: &[usize]) -> Subgroup {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut elems = vec![0usize];
    let mut queue = vec![0usize];
    for &s in seed {
        if !member[s] {
            member[s] = true;
            elems.push(s);
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        // products with everything found so far, both sides
        let snapshot: Vec<usize> = elems.clone();
        for y in snapshot {
            for z in [g.mul(x, y), g.mul(y, x)] {
                if !member[z] {
                    member[z] = true;
                    elems.push(z);
                    queue.push(z);
                }
            }
        }
    }
    // closure under product in a finite group implies closure under inverse
    elems.sort_unstable();
    Subgroup::from_sorted(elems)
}

pub fn center(g: &GroupTable) -> Subgroup {
    let elems: Vec<usize> = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::from_sorted(elems)
}

pub fn is_centerless(g: &GroupTable) -> bool {
    center(g).len() == 1
}

/// Conjugacy classes as a partition; classes are sorted internally and
/// ordered by their smallest member.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|c| g.conjugate(c, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            assigned[y] = true;
        }
        classes.push(class);
    }
    classes
}

/// All normal subgroups, as unions of conjugacy classes closed under the
/// product: breadth-first from {identity}, extending by one class at a time.
pub fn normal_subgroups(g: &GroupTable, caps: &Caps) -> Result<Vec<Subgroup>> {
    if g.order() > caps.max_table_order {
        return Err(Error::CapExceeded {
            what: "normal-subgroup enumeration order",
            needed: g.order() as u64,
            limit: caps.max_table_order as u64,
        });
    }
    let classes = conjugacy_classes(g);
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial()];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(vec![0usize]);
    let mut frontier = vec![Subgroup::trivial()];
    while let Some(h) = frontier.pop() {
        for class in &classes {
            if h.contains(class[0]) {
                continue;
            }
            let mut seed: Vec<usize> = h.elements().collect();
            seed.extend_from_slice(class);
            let bigger = closure(g, &seed);
            let key: Vec<usize> = bigger.elements().collect();
            if seen.insert(key) {
                found.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    // The closure of a union of classes is class-closed, hence normal.
    debug_assert!(found.iter().all(|h| h.is_normal_in(g)));
    found.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    Ok(found)
}

/// A direct-product decomposition witness: proper nontrivial normal
/// subgroups with trivial intersection whose product is the whole group.
pub fn is_decomposable(g: &GroupTable, caps: &Caps) -> Result<Option<(Subgroup, Subgroup)>> {
    let normals = normal_subgroups(g, caps)?;
    for h in &normals {
        if h.len() == 1 || h.len() == g.order() {
            continue;
        }
        for k in &normals {
            if k.len() == 1 || k.len() == g.order() {
                continue;
            }
            if h.len() * k.len() != g.order() {
                continue;
            }
            let trivial_intersection = h.elements().filter(|&x| k.contains(x)).count() == 1;
            if trivial_intersection {
                // |HK| = |H||K| / |H∩K| = |G| forces HK = G
                return Ok(Some((h.clone(), k.clone())));
            }
        }
    }
    Ok(None)
}

/// Quotient G/N with the identity coset at index 0, together with the
/// projection homomorphism.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<(GroupTable, Homomorphism)> {
    if !n.is_subgroup_of(g) || !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for h in n.elements() {
            coset_of[g.mul(x, h)] = idx;
        }
    }
    // x = 0 is processed first, so the identity coset is index 0.
    let q = reps.len();
    let mut rows = vec![vec![0usize; q]; q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            rows[i][j] = coset_of[g.mul(a, b)];
        }
    }
    let table = GroupTable::from_table(&rows, Some("quotient"))?;
    let proj = Homomorphism::new_unchecked(coset_of.iter().map(|&c| c as u32).collect());
    debug_assert!(proj.is_homomorphism(g, &table));
    Ok((table, proj))
}

/// All abelian subgroups of index 2, via the abelianization: every index-2
/// subgroup is the preimage of a hyperplane of the 2-torsion quotient
/// Ab/(Ab squared), a vector space over the field with two elements.
pub fn index_two_abelian_subgroups(m: &GroupTable, caps: &Caps) -> Result<Vec<Subgroup>> {
    if m.order() % 2 != 0 {
        return Err(Error::OddOrder);
    }
    if m.order() > caps.max_table_order {
        return Err(Error::CapExceeded {
            what: "index-two subgroup search order",
            needed: m.order() as u64,
            limit: caps.max_table_order as u64,
        });
    }
    // commutator subgroup
    let comm_seed: Vec<usize> = m
        .elements()
        .flat_map(|a| m.elements().map(move |b| (a, b)))
        .map(|(a, b)| m.commutator(a, b))
        .collect();
    let derived = closure(m, &comm_seed);
    let (ab, to_ab) = quotient(m, &derived)?;
    // squares subgroup of the abelianization
    let squares: Vec<usize> = ab.elements().map(|x| ab.mul(x, x)).collect();
    let sq = closure(&ab, &squares);
    let (v, to_v) = quotient(&ab, &sq)?;
    // v is elementary abelian of order 2^r; pick a basis greedily
    let mut basis: Vec<usize> = Vec::new();
    let mut span = closure(&v, &[]);
    for x in v.elements() {
        if !span.contains(x) {
            basis.push(x);
            let mut seed: Vec<usize> = span.elements().collect();
            seed.push(x);
            span = closure(&v, &seed);
        }
    }
    let r = basis.len();
    debug_assert_eq!(1usize << r, v.order());
    // coordinates of each element of v over the basis
    let mut coords = vec![0u32; v.order()];
    for mask in 0u32..(1 << r) {
        let mut x = 0usize;
        for (i, &b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                x = v.mul(x, b);
            }
        }
        coords[x] = mask;
    }
    // hyperplanes = kernels of the nonzero functionals
    let mut out = Vec::new();
    for phi in 1u32..(1 << r) {
        let elems: Vec<usize> = m
            .elements()
            .filter(|&x| {
                let image = to_v.apply(to_ab.apply(x));
                (coords[image] & phi).count_ones() % 2 == 0
            })
            .collect();
        let h = Subgroup::from_sorted(elems);
        debug_assert_eq!(h.len() * 2, m.order());
        debug_assert!(h.is_subgroup_of(m));
        if h.is_abelian_in(m) {
            out.push(h);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// True iff every automorphism of G maps S onto itself.
pub fn is_characteristic(s: &Subgroup, g: &GroupTable, caps: &Caps) -> Result<bool> {
    let auts = automorphisms(g, caps)?;
    Ok(auts
        .iter()
        .all(|alpha| s.elements().all(|x| s.contains(alpha.apply(x)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::standard::{alternating, cyclic, dihedral, direct_product, quaternion, symmetric};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn closure_examples() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(closure(&s3, &[]).len(), 1);
        let three_cycle = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(closure(&s3, &[three_cycle]).len(), 3);
        let c6 = cyclic(6).unwrap();
        assert_eq!(closure(&c6, &[1]).len(), 6);
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(&cyclic(4).unwrap()).len(), 4);
        assert_eq!(center(&symmetric(3).unwrap()).len(), 1);
        assert_eq!(center(&dihedral(4).unwrap()).len(), 2);
    }

    #[test]
    fn normal_subgroup_orders() {
        let s3 = symmetric(3).unwrap();
        let mut orders: Vec<usize> = normal_subgroups(&s3, &caps()).unwrap().iter().map(Subgroup::len).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 3, 6]);

        let a5 = alternating(5).unwrap();
        let mut orders: Vec<usize> = normal_subgroups(&a5, &caps()).unwrap().iter().map(Subgroup::len).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 60]);

        let klein = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap());
        assert_eq!(normal_subgroups(&klein, &caps()).unwrap().len(), 5);
    }

    #[test]
    fn decomposability_verdicts() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        assert!(is_decomposable(&s3, &c).unwrap().is_none());

        let s3s3 = direct_product(&s3, &s3);
        let (h, k) = is_decomposable(&s3s3, &c).unwrap().unwrap();
        assert_eq!((h.len(), k.len()), (6, 6));
        assert_eq!(h.elements().filter(|&x| k.contains(x)).count(), 1);

        let c6 = cyclic(6).unwrap();
        let (h, k) = is_decomposable(&c6, &c).unwrap().unwrap();
        assert_eq!((h.len(), k.len()), (2, 3));
    }

    #[test]
    fn indecomposable_corpus() {
        let c = caps();
        for g in [
            cyclic(4).unwrap(),
            cyclic(8).unwrap(),
            cyclic(9).unwrap(),
            symmetric(3).unwrap(),
            dihedral(4).unwrap(),
            quaternion(),
            alternating(4).unwrap(),
            dihedral(5).unwrap(),
        ] {
            assert!(
                is_decomposable(&g, &c).unwrap().is_none(),
                "{g:?} should be indecomposable"
            );
        }
        for g in [
            direct_product(&symmetric(3).unwrap(), &symmetric(3).unwrap()),
            direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()),
            direct_product(&dihedral(5).unwrap(), &symmetric(3).unwrap()),
        ] {
            assert!(is_decomposable(&g, &c).unwrap().is_some(), "{g:?} should decompose");
        }
    }

    #[test]
    fn quotient_examples() {
        let s3 = symmetric(3).unwrap();
        let a3_elems: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) != 2).collect();
        let a3 = Subgroup::from_unsorted(a3_elems);
        let (q, proj) = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        // kernel is exactly A3
        let kernel: Vec<usize> = s3.elements().filter(|&x| proj.apply(x) == 0).collect();
        assert_eq!(kernel, a3.as_slice());

        let (q1, _) = quotient(&s3, &Subgroup::trivial()).unwrap();
        assert_eq!(q1.order(), 6);
        let (q2, _) = quotient(&s3, &Subgroup::full(&s3)).unwrap();
        assert_eq!(q2.order(), 1);

        // non-normal subgroup rejected
        let refl = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = closure(&s3, &[refl]);
        assert!(matches!(quotient(&s3, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn index_two_abelian_cases() {
        let c = caps();
        assert_eq!(index_two_abelian_subgroups(&cyclic(4).unwrap(), &c).unwrap().len(), 1);
        assert_eq!(index_two_abelian_subgroups(&dihedral(4).unwrap(), &c).unwrap().len(), 3);
        assert!(matches!(
            index_two_abelian_subgroups(&cyclic(5).unwrap(), &c),
            Err(Error::OddOrder)
        ));
    }

    /// For abelian M, agreement with direct enumeration of all index-2
    /// subgroups (found by closing every subset of up to 3 elements).
    #[test]
    fn index_two_matches_direct_enumeration_on_abelian_groups() {
        let c = caps();
        let c2 = cyclic(2).unwrap();
        let groups = vec![
            cyclic(4).unwrap(),
            cyclic(6).unwrap(),
            cyclic(8).unwrap(),
            cyclic(12).unwrap(),
            direct_product(&c2, &c2),
            direct_product(&c2, &cyclic(4).unwrap()),
            direct_product(&c2, &direct_product(&c2, &c2)),
        ];
        for m in groups {
            let fast = index_two_abelian_subgroups(&m, &c).unwrap();
            let mut brute: Vec<Subgroup> = Vec::new();
            let n = m.order();
            for a in 0..n {
                for b in a..n {
                    for d in b..n {
                        let h = closure(&m, &[a, b, d]);
                        if h.len() * 2 == n && !brute.contains(&h) {
                            brute.push(h);
                        }
                    }
                }
            }
            brute.sort();
            assert_eq!(fast, brute, "mismatch for {m:?}");
        }
    }

    #[test]
    fn characteristic_examples() {
        let c = caps();
        let s3 = symmetric(3).unwrap();
        let a3 = Subgroup::from_unsorted(s3.elements().filter(|&x| s3.element_order(x) != 2).collect());
        assert!(is_characteristic(&a3, &s3, &c).unwrap());

        let klein = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap());
        let factor = closure(&klein, &[klein.mul(1, 0)]);
        // a single C2 factor is moved by the coordinate swap
        assert!(!is_characteristic(&factor, &klein, &c).unwrap());

        let d4 = dihedral(4).unwrap();
        assert!(is_characteristic(&center(&d4), &d4, &c).unwrap());
    }
}
