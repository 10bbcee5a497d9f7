//! Semidirect products A ⋊ B from an explicit action, and the closed-form
//! center of such a product.

use crate::error::{Error, Result};
use crate::group::subgroup::{center, Subgroup};
use crate::group::table::GroupTable;

/// A ⋊ B where `action[b]` is the automorphism of A applied by b.
#[derive(Debug, Clone)]
pub struct SemidirectSpec {
    normal: GroupTable,
    acting: GroupTable,
    action: Vec<Vec<u32>>,
}

impl SemidirectSpec {
    /// Validates that every `action[b]` is an automorphism of `normal` and
    /// that `b -> action[b]` is a homomorphism sending the identity to the
    /// identity map.
    pub fn new(normal: GroupTable, acting: GroupTable, action: Vec<Vec<u32>>) -> Result<SemidirectSpec> {
        let na = normal.order();
        let nb = acting.order();
        if action.len() != nb {
            return Err(Error::InvalidParameter(format!(
                "need one automorphism per acting element: got {} for |B| = {nb}",
                action.len()
            )));
        }
        for (b, phi) in action.iter().enumerate() {
            if phi.len() != na {
                return Err(Error::InvalidParameter(format!(
                    "action[{b}] has length {} for |A| = {na}",
                    phi.len()
                )));
            }
            let mut seen = vec![false; na];
            for &v in phi {
                let v = v as usize;
                if v >= na || seen[v] {
                    return Err(Error::InvalidParameter(format!("action[{b}] is not a bijection")));
                }
                seen[v] = true;
            }
            for x in 0..na {
                for y in 0..na {
                    if phi[normal.mul(x, y)] != normal.mul(phi[x] as usize, phi[y] as usize) as u32 {
                        return Err(Error::InvalidParameter(format!(
                            "action[{b}] is not a homomorphism of A"
                        )));
                    }
                }
            }
        }
        if (0..na).any(|x| action[0][x] != x as u32) {
            return Err(Error::InvalidParameter("action[identity] must be the identity map".into()));
        }
        for b1 in 0..nb {
            for b2 in 0..nb {
                let prod = acting.mul(b1, b2);
                for x in 0..na {
                    if action[prod][x] != action[b1][action[b2][x] as usize] {
                        return Err(Error::InvalidParameter(
                            "action is not a homomorphism B -> Aut(A)".into(),
                        ));
                    }
                }
            }
        }
        Ok(SemidirectSpec { normal, acting, action })
    }

    pub fn normal_part(&self) -> &GroupTable {
        &self.normal
    }

    pub fn acting_part(&self) -> &GroupTable {
        &self.acting
    }

    /// Index of the pair (a, b) in the assembled table.
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        a * self.acting.order() + b
    }

    /// (a1, b1)(a2, b2) = (a1 * b1(a2), b1 b2); identity lands at index 0.
    pub fn assemble(&self) -> Result<GroupTable> {
        let na = self.normal.order();
        let nb = self.acting.order();
        let n = na * nb;
        let mut rows = vec![vec![0usize; n]; n];
        for a1 in 0..na {
            for b1 in 0..nb {
                for a2 in 0..na {
                    for b2 in 0..nb {
                        let a = self.normal.mul(a1, self.action[b1][a2] as usize);
                        let b = self.acting.mul(b1, b2);
                        rows[self.pair_index(a1, b1)][self.pair_index(a2, b2)] = self.pair_index(a, b);
                    }
                }
            }
        }
        let name = format!(
            "{}:{}",
            self.normal.name().unwrap_or("?"),
            self.acting.name().unwrap_or("?")
        );
        GroupTable::from_table(&rows, Some(&name))
    }
}

/// Center of A ⋊ B by the componentwise criterion: (a, b) is central iff
/// b ∈ Z(B), the B-orbit of a is {a}, and conjugation by ab fixes A
/// pointwise. Indices refer to the assembled table.
pub fn center_of_semidirect(spec: &SemidirectSpec) -> Subgroup {
    let a_tab = &spec.normal;
    let b_tab = &spec.acting;
    let zb = center(b_tab);
    let mut elems = Vec::new();
    for b in zb.elements() {
        for a in a_tab.elements() {
            let orbit_fixed = (0..b_tab.order()).all(|b1| spec.action[b1][a] as usize == a);
            if !orbit_fixed {
                continue;
            }
            // conj(ab)|_A = id: a * b(x) * a^{-1} = x for all x in A.
            let fixes_a = (0..a_tab.order()).all(|x| {
                let bx = spec.action[b][x] as usize;
                a_tab.mul(a_tab.mul(a, bx), a_tab.inv(a)) == x
            });
            if fixes_a {
                elems.push(spec.pair_index(a, b));
            }
        }
    }
    elems.sort_unstable();
    Subgroup::from_sorted(elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::standard::{cyclic, direct_product, symmetric};
    use crate::group::subgroup::center;

    fn inversion_action(g: &GroupTable) -> Vec<u32> {
        (0..g.order()).map(|a| g.inv(a) as u32).collect()
    }

    fn identity_action(g: &GroupTable) -> Vec<u32> {
        (0..g.order() as u32).collect()
    }

    #[test]
    fn trivial_action_center_is_product_of_centers() {
        let a = cyclic(4).unwrap();
        let b = symmetric(3).unwrap();
        let spec = SemidirectSpec::new(
            a.clone(),
            b.clone(),
            (0..b.order()).map(|_| identity_action(&a)).collect(),
        )
        .unwrap();
        let z = center_of_semidirect(&spec);
        // Z(C4 x S3) = C4 x 1
        assert_eq!(z.len(), 4);
        let m = spec.assemble().unwrap();
        assert_eq!(z, center(&m));
        let direct = direct_product(&a, &b);
        assert_eq!(m.rows(), direct.rows());
    }

    #[test]
    fn c3_by_c2_inversion_has_trivial_center() {
        let a = cyclic(3).unwrap();
        let b = cyclic(2).unwrap();
        let spec = SemidirectSpec::new(a.clone(), b, vec![identity_action(&a), inversion_action(&a)]).unwrap();
        let z = center_of_semidirect(&spec);
        assert_eq!(z.len(), 1);
        assert_eq!(z, center(&spec.assemble().unwrap()));
    }

    #[test]
    fn c4_by_c2_inversion_is_d4_with_center_of_order_two() {
        let a = cyclic(4).unwrap();
        let b = cyclic(2).unwrap();
        let spec = SemidirectSpec::new(a.clone(), b, vec![identity_action(&a), inversion_action(&a)]).unwrap();
        let z = center_of_semidirect(&spec);
        assert_eq!(z.len(), 2);
        assert_eq!(z, center(&spec.assemble().unwrap()));
    }

    #[test]
    fn rejects_non_homomorphic_action() {
        let a = cyclic(4).unwrap();
        let b = cyclic(2).unwrap();
        // x -> x+1 is a bijection of C4 but not an automorphism
        let shift: Vec<u32> = (0..4).map(|x| ((x + 1) % 4) as u32).collect();
        assert!(SemidirectSpec::new(a.clone(), b, vec![identity_action(&a), shift]).is_err());
    }
}
