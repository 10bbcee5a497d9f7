//! Hall bases of free nilpotent Lie algebras: basic commutators as binary
//! bracket trees, with integer structure constants obtained by rewriting
//! non-Hall brackets through antisymmetry and the Jacobi identity.
//!
//! Commutators are right-nested throughout: [g1, ..., gl] = [g1, [g2, ..., gl]].

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};

pub const MAX_RANK: u32 = 6;
pub const MAX_CLASS: u32 = 4;

/// A bracket tree over generator indices 0..n-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HallTree {
    Leaf(u32),
    Node(Box<HallTree>, Box<HallTree>),
}

impl HallTree {
    pub fn degree(&self) -> u32 {
        match self {
            HallTree::Leaf(_) => 1,
            HallTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// Bracket string over t_1..t_n (1-indexed for printing).
    pub fn to_string_t(&self) -> String {
        match self {
            HallTree::Leaf(i) => format!("t{}", i + 1),
            HallTree::Node(l, r) => format!("[{},{}]", l.to_string_t(), r.to_string_t()),
        }
    }
}

/// Total order on Hall trees: degree first, then recursive comparison of
/// subtrees. Generators compare by index.
pub fn cmp_hall(a: &HallTree, b: &HallTree) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| match (a, b) {
        (HallTree::Leaf(i), HallTree::Leaf(j)) => i.cmp(j),
        (HallTree::Node(a1, a2), HallTree::Node(b1, b2)) => {
            cmp_hall(a1, b1).then_with(|| cmp_hall(a2, b2))
        }
        // equal degree with mixed shapes cannot happen: leaves have degree 1
        _ => unreachable!("trees of equal degree have equal shape class"),
    })
}

/// The classical Hall condition for [u, v] with u, v already Hall:
/// u > v, and if u = [u1, u2] then u2 <= v.
fn is_hall_bracket(u: &HallTree, v: &HallTree) -> bool {
    cmp_hall(u, v) == Ordering::Greater
        && match u {
            HallTree::Leaf(_) => true,
            HallTree::Node(_, u2) => cmp_hall(u2, v) != Ordering::Greater,
        }
}

#[derive(Debug, Clone)]
pub struct HallBasisElement {
    pub tree: HallTree,
    pub degree: u32,
    /// multiplicity of each generator among the leaves
    pub weight: Vec<u32>,
}

/// The Hall basis of the free Lie algebra of rank n truncated at class c,
/// sorted by (degree, tree order), with integer structure constants for
/// every bracket of basis elements.
#[derive(Debug)]
pub struct HallBasis {
    pub n: u32,
    pub c: u32,
    pub elements: Vec<HallBasisElement>,
    /// per-degree dimensions, dims[k-1] = dim of the degree-k component
    pub dims: Vec<usize>,
    index: HashMap<HallTree, u32>,
    /// [el_i, el_j] for i > j with compatible degrees, as a sparse integer
    /// combination of basis elements
    structure: HashMap<(u32, u32), Vec<(u32, i64)>>,
}

pub fn hall_basis(n: u32, c: u32) -> Result<HallBasis> {
    if n == 0 || n > MAX_RANK {
        return Err(Error::CapExceeded {
            what: "Hall basis rank",
            needed: n as u64,
            limit: MAX_RANK as u64,
        });
    }
    if c == 0 || c > MAX_CLASS {
        return Err(Error::CapExceeded {
            what: "Hall basis class",
            needed: c as u64,
            limit: MAX_CLASS as u64,
        });
    }
    let mut elements: Vec<HallBasisElement> = (0..n)
        .map(|i| {
            let mut weight = vec![0u32; n as usize];
            weight[i as usize] = 1;
            HallBasisElement {
                tree: HallTree::Leaf(i),
                degree: 1,
                weight,
            }
        })
        .collect();
    let mut dims = vec![n as usize];
    let mut degree_start = vec![0usize, n as usize];
    for d in 2..=c {
        let mut level: Vec<HallBasisElement> = Vec::new();
        for du in 1..d {
            let dv = d - du;
            for ui in degree_start[du as usize - 1]..degree_start[du as usize] {
                for vi in degree_start[dv as usize - 1]..degree_start[dv as usize] {
                    let (u, v) = (&elements[ui], &elements[vi]);
                    if is_hall_bracket(&u.tree, &v.tree) {
                        let weight: Vec<u32> = u
                            .weight
                            .iter()
                            .zip(&v.weight)
                            .map(|(a, b)| a + b)
                            .collect();
                        level.push(HallBasisElement {
                            tree: HallTree::Node(Box::new(u.tree.clone()), Box::new(v.tree.clone())),
                            degree: d,
                            weight,
                        });
                    }
                }
            }
        }
        level.sort_by(|a, b| cmp_hall(&a.tree, &b.tree));
        dims.push(level.len());
        elements.extend(level);
        degree_start.push(elements.len());
    }
    let index: HashMap<HallTree, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.tree.clone(), i as u32))
        .collect();
    let mut basis = HallBasis {
        n,
        c,
        elements,
        dims,
        index,
        structure: HashMap::new(),
    };
    basis.fill_structure();
    Ok(basis)
}

impl HallBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        self.elements[i].degree
    }

    pub fn index_of(&self, tree: &HallTree) -> Option<usize> {
        self.index.get(tree).map(|&i| i as usize)
    }

    /// Structure constants of [el_i, el_j] for arbitrary i, j.
    pub fn bracket_indices(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Greater => self
                .structure
                .get(&(i as u32, j as u32))
                .map(|v| v.iter().map(|&(t, c)| (t as usize, c)).collect())
                .unwrap_or_default(),
            Ordering::Less => self
                .structure
                .get(&(j as u32, i as u32))
                .map(|v| v.iter().map(|&(t, c)| (t as usize, -c)).collect())
                .unwrap_or_default(),
        }
    }

    fn fill_structure(&mut self) {
        let mut memo: HashMap<(u32, u32), Vec<(u32, i64)>> = HashMap::new();
        for i in 0..self.elements.len() {
            for j in 0..i {
                if self.elements[i].degree + self.elements[j].degree <= self.c {
                    self.bracket_pair(i as u32, j as u32, &mut memo, 0);
                }
            }
        }
        self.structure = memo;
    }

    /// [el_i, el_j] for i > j, both basis elements: either directly a Hall
    /// element, or rewritten with [[a,b],v] = [a,[b,v]] - [b,[a,v]].
    fn bracket_pair(
        &self,
        i: u32,
        j: u32,
        memo: &mut HashMap<(u32, u32), Vec<(u32, i64)>>,
        depth: u32,
    ) -> Vec<(u32, i64)> {
        assert!(depth < 256, "Hall rewriting failed to terminate");
        debug_assert!(i > j);
        if let Some(v) = memo.get(&(i, j)) {
            return v.clone();
        }
        let (ti, tj) = (&self.elements[i as usize].tree, &self.elements[j as usize].tree);
        let result = if is_hall_bracket(ti, tj) {
            let node = HallTree::Node(Box::new(ti.clone()), Box::new(tj.clone()));
            vec![(self.index[&node], 1)]
        } else {
            // a leaf left factor of greater order always forms a Hall
            // bracket, so a non-Hall left factor is a node with u2 > v
            let HallTree::Node(a, b) = ti else {
                unreachable!("non-Hall bracket with leaf left factor")
            };
            let ia = self.index[a.as_ref()];
            let ib = self.index[b.as_ref()];
            let bj = self.bracket_any(ib, j, memo, depth + 1);
            let aj = self.bracket_any(ia, j, memo, depth + 1);
            let term1 = self.bracket_with_combination(ia, &bj, memo, depth + 1);
            let term2 = self.bracket_with_combination(ib, &aj, memo, depth + 1);
            combine(term1, term2, 1, -1)
        };
        memo.insert((i, j), result.clone());
        result
    }

    fn bracket_any(
        &self,
        i: u32,
        j: u32,
        memo: &mut HashMap<(u32, u32), Vec<(u32, i64)>>,
        depth: u32,
    ) -> Vec<(u32, i64)> {
        if i == j {
            return Vec::new();
        }
        let dsum = self.elements[i as usize].degree + self.elements[j as usize].degree;
        if dsum > self.c {
            return Vec::new();
        }
        if i > j {
            self.bracket_pair(i, j, memo, depth)
        } else {
            self.bracket_pair(j, i, memo, depth)
                .into_iter()
                .map(|(t, c)| (t, -c))
                .collect()
        }
    }

    fn bracket_with_combination(
        &self,
        i: u32,
        terms: &[(u32, i64)],
        memo: &mut HashMap<(u32, u32), Vec<(u32, i64)>>,
        depth: u32,
    ) -> Vec<(u32, i64)> {
        let mut acc: HashMap<u32, i64> = HashMap::new();
        for &(t, coeff) in terms {
            for (s, c) in self.bracket_any(i, t, memo, depth) {
                *acc.entry(s).or_insert(0) += coeff * c;
            }
        }
        let mut out: Vec<(u32, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    }
}

fn combine(a: Vec<(u32, i64)>, b: Vec<(u32, i64)>, ca: i64, cb: i64) -> Vec<(u32, i64)> {
    let mut acc: HashMap<u32, i64> = HashMap::new();
    for (t, c) in a {
        *acc.entry(t).or_insert(0) += ca * c;
    }
    for (t, c) in b {
        *acc.entry(t).or_insert(0) += cb * c;
    }
    let mut out: Vec<(u32, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
    out.sort_unstable();
    out
}

fn moebius(mut d: u64) -> i64 {
    let mut primes = 0;
    let mut q = 2u64;
    while q * q <= d {
        if d % q == 0 {
            d /= q;
            if d % q == 0 {
                return 0;
            }
            primes += 1;
        }
        q += 1;
    }
    if d > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Witt's formula: dim of the degree-k component of the free Lie algebra
/// of rank n, (1/k) * sum over d | k of mu(d) n^(k/d).
pub fn witt_dimension(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1);
    let mut sum: i64 = 0;
    for d in 1..=k {
        if k % d == 0 {
            sum += moebius(d) * (n as i64).pow((k / d) as u32);
        }
    }
    debug_assert!(sum >= 0 && sum % k as i64 == 0);
    (sum / k as i64) as u64
}
