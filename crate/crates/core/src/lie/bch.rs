//! Truncated group multiplication on the Lie model: the closed BCH law
//! through class 4,
//!
//!   u . v = u + v + (1/2)[u,v] + (1/12)[u,[u,v]] - (1/12)[v,[u,v]]
//!                 - (1/24)[v,[u,[u,v]]]
//!
//! valid over F_p for p >= 5 and class c <= 4 < p. Identity is 0, the
//! inverse of u is -u, and p-fold powers vanish, so (vectors, .) models
//! the free exponent-p group of the matching class.

use crate::error::{Error, Result};
use crate::lie::vector::{LieAlgebra, LieVector};

fn require_good_modulus(alg: &LieAlgebra) -> Result<()> {
    if alg.p == 2 || alg.p == 3 {
        return Err(Error::BadModulus { p: alg.p });
    }
    Ok(())
}

pub fn bch_identity(alg: &LieAlgebra) -> LieVector {
    alg.zero()
}

pub fn bch_inverse(alg: &LieAlgebra, u: &LieVector) -> Result<LieVector> {
    require_good_modulus(alg)?;
    Ok(alg.neg(u))
}

pub fn bch_multiply(alg: &LieAlgebra, u: &LieVector, v: &LieVector) -> Result<LieVector> {
    require_good_modulus(alg)?;
    let c = alg.basis.c;
    let mut w = alg.add(u, v);
    if c >= 2 {
        let uv = alg.bracket(u, v)?;
        w = alg.add_scaled(&w, &uv, alg.inverse_mod(2)?);
        if c >= 3 {
            let uuv = alg.bracket(u, &uv)?;
            let vuv = alg.bracket(v, &uv)?;
            let inv12 = alg.inverse_mod(12)?;
            w = alg.add_scaled(&w, &uuv, inv12);
            w = alg.add_scaled(&w, &vuv, alg.p - inv12);
            if c >= 4 {
                let vuuv = alg.bracket(v, &uuv)?;
                let inv24 = alg.inverse_mod(24)?;
                w = alg.add_scaled(&w, &vuuv, alg.p - inv24);
            }
        }
    }
    Ok(w)
}

/// m-fold power under the BCH product.
pub fn bch_power(alg: &LieAlgebra, u: &LieVector, m: u64) -> Result<LieVector> {
    let mut acc = bch_identity(alg);
    for _ in 0..m {
        acc = bch_multiply(alg, &acc, u)?;
    }
    Ok(acc)
}
