//! Built-in group registry: named constructions and `x` products, so the
//! test suites and the CLI need no external data files.
//!
//! Grammar (case-insensitive, optional `builtin:` prefix):
//!   spec    := atom ('x' atom)*
//!   atom    := 'C'<n> | 'S'<n> | 'A'<n> | 'D'<n> | 'Q8' | '1' | 'trivial'
//! with S_n, A_n for n <= 5 and D_n for n <= 6.

use crate::error::{Error, Result};
use crate::group::standard::{alternating, cyclic, dihedral, direct_product, quaternion, symmetric, trivial};
use crate::group::table::GroupTable;

pub fn builtin(spec: &str) -> Result<GroupTable> {
    let spec = spec.trim();
    let spec = spec.strip_prefix("builtin:").unwrap_or(spec);
    let atoms: Vec<&str> = spec.split(['x', 'X']).collect();
    if atoms.is_empty() || atoms.iter().any(|a| a.is_empty()) {
        return Err(Error::InvalidParameter(format!("cannot parse group spec '{spec}'")));
    }
    let mut tables = atoms.iter().map(|a| atom(a)).collect::<Result<Vec<_>>>()?;
    let mut acc = tables.remove(0);
    for t in tables {
        acc = direct_product(&acc, &t);
    }
    Ok(acc)
}

fn atom(a: &str) -> Result<GroupTable> {
    let a = a.trim();
    if a.eq_ignore_ascii_case("trivial") || a == "1" {
        return Ok(trivial());
    }
    if a.eq_ignore_ascii_case("Q8") {
        return Ok(quaternion());
    }
    let (kind, digits) = a.split_at(1);
    let n: usize = digits
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("cannot parse group atom '{a}'")))?;
    match kind {
        "C" | "c" => {
            if n == 0 || n > 512 {
                return Err(Error::InvalidParameter(format!("C{n} is out of range (1..=512)")));
            }
            cyclic(n)
        }
        "S" | "s" => {
            if n == 0 || n > 5 {
                return Err(Error::InvalidParameter(format!("S{n} is out of range (1..=5)")));
            }
            symmetric(n)
        }
        "A" | "a" => {
            if n == 0 || n > 5 {
                return Err(Error::InvalidParameter(format!("A{n} is out of range (1..=5)")));
            }
            alternating(n)
        }
        "D" | "d" => {
            if n == 0 || n > 6 {
                return Err(Error::InvalidParameter(format!("D{n} is out of range (1..=6)")));
            }
            dihedral(n)
        }
        _ => Err(Error::InvalidParameter(format!("unknown group atom '{a}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_atoms_and_products() {
        assert_eq!(builtin("C3").unwrap().order(), 3);
        assert_eq!(builtin("builtin:S3").unwrap().order(), 6);
        assert_eq!(builtin("S3xS3").unwrap().order(), 36);
        assert_eq!(builtin("S3xD5").unwrap().order(), 60);
        assert_eq!(builtin("Q8").unwrap().order(), 8);
        assert_eq!(builtin("trivial").unwrap().order(), 1);
        assert_eq!(builtin("C2xC2xC2").unwrap().order(), 8);
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(builtin("S7").is_err());
        assert!(builtin("D9").is_err());
        assert!(builtin("").is_err());
        assert!(builtin("Z5").is_err());
        assert!(builtin("SxS").is_err());
    }
}
