//! Builders for the standard small groups and product constructions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::semidirect::SemidirectSpec;
use crate::group::table::GroupTable;

/// Largest n for which the factorial-sized S_n / A_n tables are built.
const MAX_SYMMETRIC_POINTS: usize = 6;

pub fn trivial() -> GroupTable {
    cyclic(1).unwrap().with_name("1")
}

/// C_n, addition mod n.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group needs n >= 1".into()));
    }
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupTable::from_table(&rows, Some(&format!("C{n}")))
}

fn perms_lex(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        if !next_perm_u8(&mut cur) {
            break;
        }
    }
    out
}

fn next_perm_u8(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn perm_parity(p: &[u8]) -> bool {
    // true = even
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0usize;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0usize;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn table_from_perm_list(perms: &[Vec<u8>], name: &str) -> Result<GroupTable> {
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = perms.len();
    let mut rows = vec![vec![0usize; n]; n];
    let mut buf = vec![0u8; perms[0].len()];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            // (pa . pb)(x) = pa(pb(x))
            for (x, slot) in buf.iter_mut().enumerate() {
                *slot = pa[pb[x] as usize];
            }
            rows[a][b] = *index
                .get(buf.as_slice())
                .expect("composition of permutations is a permutation of the same degree");
        }
    }
    GroupTable::from_table(&rows, Some(name))
}

/// S_n as a table over its n! permutations in lexicographic order.
pub fn symmetric(n: usize) -> Result<GroupTable> {
    if n == 0 || n > MAX_SYMMETRIC_POINTS {
        return Err(Error::InvalidParameter(format!(
            "symmetric group supported for 1 <= n <= {MAX_SYMMETRIC_POINTS}, got {n}"
        )));
    }
    table_from_perm_list(&perms_lex(n), &format!("S{n}"))
}

/// A_n: the even permutations, lexicographic order.
pub fn alternating(n: usize) -> Result<GroupTable> {
    if n == 0 || n > MAX_SYMMETRIC_POINTS {
        return Err(Error::InvalidParameter(format!(
            "alternating group supported for 1 <= n <= {MAX_SYMMETRIC_POINTS}, got {n}"
        )));
    }
    let perms: Vec<Vec<u8>> = perms_lex(n).into_iter().filter(|p| perm_parity(p)).collect();
    table_from_perm_list(&perms, &format!("A{n}"))
}

/// D_n of order 2n: C_n ⋊ C_2 with the inversion action.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("dihedral group needs n >= 1".into()));
    }
    let rot = cyclic(n)?;
    let flip = cyclic(2)?;
    let inversion: Vec<u32> = (0..n).map(|a| rot.inv(a) as u32).collect();
    let id: Vec<u32> = (0..n as u32).collect();
    let spec = SemidirectSpec::new(rot, flip, vec![id, inversion])?;
    Ok(spec.assemble()?.with_name(&format!("D{n}")))
}

/// The quaternion group Q_8. Elements indexed 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion() -> GroupTable {
    // unit axes: 0 = 1, 1 = i, 2 = j, 3 = k
    fn unit_mul(a: usize, b: usize) -> (i32, usize) {
        match (a, b) {
            (0, x) => (1, x),
            (x, 0) => (1, x),
            (x, y) if x == y => (-1, 0),
            (1, 2) => (1, 3),
            (2, 1) => (-1, 3),
            (2, 3) => (1, 1),
            (3, 2) => (-1, 1),
            (3, 1) => (1, 2),
            (1, 3) => (-1, 2),
            _ => unreachable!(),
        }
    }
    let idx = |sign: i32, axis: usize| -> usize { axis * 2 + usize::from(sign < 0) };
    let mut rows = vec![vec![0usize; 8]; 8];
    for a_axis in 0..4 {
        for a_sign in [1i32, -1] {
            for b_axis in 0..4 {
                for b_sign in [1i32, -1] {
                    let (s, axis) = unit_mul(a_axis, b_axis);
                    rows[idx(a_sign, a_axis)][idx(b_sign, b_axis)] = idx(a_sign * b_sign * s, axis);
                }
            }
        }
    }
    GroupTable::from_table(&rows, Some("Q8")).expect("quaternion table is a group")
}

/// G x H with pairs indexed `a * |H| + b`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    let mut rows = vec![vec![0usize; n]; n];
    for a1 in 0..ng {
        for b1 in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    rows[a1 * nh + b1][a2 * nh + b2] = g.mul(a1, a2) * nh + h.mul(b1, b2);
                }
            }
        }
    }
    let name = format!(
        "{}x{}",
        g.name().unwrap_or("?"),
        h.name().unwrap_or("?")
    );
    GroupTable::from_table(&rows, Some(&name)).expect("direct product of groups is a group")
}

/// Index of the pair (a, b) inside `direct_product(g, h)`.
pub fn product_index(h_order: usize, a: usize, b: usize) -> usize {
    a * h_order + b
}
