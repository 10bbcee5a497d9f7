//! Finitely generated subgroups of Sym(d) with on-demand element
//! materialization and an exact membership index.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::perm::permutation::Permutation;

/// Materialized element set: permutations sorted lexicographically, plus
/// packed single-word keys when the degree allows it (<= 16).
#[derive(Debug, Clone)]
pub struct ElementSet {
    perms: Vec<Permutation>,
    packed: Option<Vec<u64>>,
}

impl ElementSet {
    pub fn from_perms(mut perms: Vec<Permutation>) -> ElementSet {
        perms.sort_unstable();
        perms.dedup();
        let packed = if perms.first().map_or(true, |p| p.degree() <= 16) {
            let mut keys: Vec<u64> = perms.iter().map(Permutation::pack).collect();
            keys.sort_unstable();
            Some(keys)
        } else {
            None
        };
        ElementSet { perms, packed }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    /// Membership by packed key; only valid when `packed_keys` is Some.
    #[inline]
    pub fn contains_packed(&self, key: u64) -> bool {
        self.packed
            .as_ref()
            .expect("packed index requires degree <= 16")
            .binary_search(&key)
            .is_ok()
    }

    pub fn packed_keys(&self) -> Option<&[u64]> {
        self.packed.as_deref()
    }

    pub fn same_set(&self, other: &ElementSet) -> bool {
        self.perms == other.perms
    }
}

/// A subgroup of Sym(d) given by generators; elements are materialized
/// lazily under a cap and cached.
#[derive(Debug)]
pub struct PermSubgroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<ElementSet>,
}

impl Clone for PermSubgroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(e.clone());
        }
        PermSubgroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements,
        }
    }
}

impl PermSubgroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<PermSubgroup> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidParameter("generator degree mismatch".into()));
        }
        Ok(PermSubgroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    /// Wraps an already-known full element set (e.g. a brute-force scan
    /// result). The set itself doubles as the generator list.
    pub fn from_elements(degree: usize, perms: Vec<Permutation>) -> Result<PermSubgroup> {
        let set = ElementSet::from_perms(perms);
        let sub = PermSubgroup {
            degree,
            generators: set.perms().to_vec(),
            elements: OnceLock::new(),
        };
        let _ = sub.elements.set(set);
        Ok(sub)
    }

    pub fn trivial(degree: usize) -> PermSubgroup {
        PermSubgroup::from_elements(degree, vec![Permutation::identity(degree)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Install a precomputed element set (no-op if already materialized).
    pub(crate) fn set_elements(&self, set: ElementSet) {
        let _ = self.elements.set(set);
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn materialize(&self, caps: &Caps) -> Result<&ElementSet> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let closed = closure_of_perms(self.degree, &self.generators, Some(caps.max_materialized))
            .ok_or(Error::CapExceeded {
                what: "permutation subgroup materialization",
                needed: caps.max_materialized as u64 + 1,
                limit: caps.max_materialized as u64,
            })?;
        let _ = self.elements.set(ElementSet::from_perms(closed));
        Ok(self.elements.get().expect("just set"))
    }

    pub fn order(&self, caps: &Caps) -> Result<usize> {
        Ok(self.materialize(caps)?.len())
    }

    pub fn contains(&self, p: &Permutation, caps: &Caps) -> Result<bool> {
        Ok(self.materialize(caps)?.contains(p))
    }

    pub fn same_set(&self, other: &PermSubgroup, caps: &Caps) -> Result<bool> {
        Ok(self.materialize(caps)?.same_set(other.materialize(caps)?))
    }
}

/// BFS closure of the seed under right multiplication. Returns None as soon
/// as the element count would exceed `abort_above`.
pub fn closure_of_perms(
    degree: usize,
    seed: &[Permutation],
    abort_above: Option<usize>,
) -> Option<Vec<Permutation>> {
    let cap = abort_above.unwrap_or(usize::MAX);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let identity = Permutation::identity(degree);
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    let mut all = Vec::new();
    while let Some(p) = frontier.pop() {
        all.push(p.clone());
        for g in seed {
            let q = p.compose(g);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(q.clone());
                frontier.push(q);
            }
        }
    }
    Some(all)
}

/// Cayley table of a closed set of permutations under composition. The
/// identity is the lexicographically smallest image array, so it lands at
/// index 0 without relabeling.
pub fn group_table_from_perms(perms: &[Permutation]) -> Result<crate::group::table::GroupTable> {
    let mut sorted = perms.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let index: std::collections::HashMap<&Permutation, usize> =
        sorted.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = sorted.len();
    let mut rows = vec![vec![0usize; n]; n];
    for (i, a) in sorted.iter().enumerate() {
        for (j, b) in sorted.iter().enumerate() {
            let c = a.compose(b);
            rows[i][j] = *index
                .get(&c)
                .ok_or_else(|| Error::InvalidParameter("permutation set is not closed".into()))?;
        }
    }
    crate::group::table::GroupTable::from_table(&rows, None)
}

/// Regularity: |R| equals the degree and evaluation at the base point 0 is
/// a bijection onto the points.
pub fn is_regular(r: &PermSubgroup, caps: &Caps) -> Result<bool> {
    let elems = r.materialize(caps)?;
    Ok(is_regular_set(r.degree(), elems.perms()))
}

pub(crate) fn is_regular_set(degree: usize, perms: &[Permutation]) -> bool {
    if perms.len() != degree {
        return false;
    }
    let mut hit = vec![false; degree];
    for p in perms {
        let v = p.apply(0);
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_a_three_cycle() {
        let c = Permutation::cycle(3, &[0, 1, 2]);
        let sub = PermSubgroup::from_generators(3, vec![c]).unwrap();
        assert_eq!(sub.order(&Caps::default()).unwrap(), 3);
    }

    #[test]
    fn sym4_from_coxeter_generators() {
        let gens = vec![
            Permutation::transposition(4, 0, 1),
            Permutation::cycle(4, &[0, 1, 2, 3]),
        ];
        let sub = PermSubgroup::from_generators(4, gens).unwrap();
        assert_eq!(sub.order(&Caps::default()).unwrap(), 24);
    }

    #[test]
    fn point_stabilizer_is_not_regular() {
        // stabilizer of 0 in Sym(3) = {id, (1 2)}
        let sub = PermSubgroup::from_generators(3, vec![Permutation::transposition(3, 1, 2)]).unwrap();
        assert!(!is_regular(&sub, &Caps::default()).unwrap());
    }

    #[test]
    fn closure_abort_threshold() {
        let gens = vec![
            Permutation::transposition(5, 0, 1),
            Permutation::cycle(5, &[0, 1, 2, 3, 4]),
        ];
        assert!(closure_of_perms(5, &gens, Some(20)).is_none());
        assert_eq!(closure_of_perms(5, &gens, Some(120)).unwrap().len(), 120);
    }
}
