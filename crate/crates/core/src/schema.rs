//! Serialization documents for the stable structured format. The shapes
//! here are frozen in docs/formats.md; the human text output is not a
//! contract.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::table::GroupTable;
use crate::lie::vector::LieVector;

/// {"name": str, "order": n, "table": [[int]]} with table[a][b] = a*b.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn from_group(g: &GroupTable) -> GroupDoc {
        GroupDoc {
            name: g.name().map(str::to_owned),
            order: g.order(),
            table: g.rows(),
        }
    }

    pub fn into_group(self) -> Result<GroupTable> {
        if self.table.len() != self.order {
            return Err(crate::error::Error::InvalidParameter(format!(
                "declared order {} does not match table size {}",
                self.order,
                self.table.len()
            )));
        }
        GroupTable::from_table(&self.table, self.name.as_deref())
    }
}

/// {n, c, p, coeffs: [[basis_index, value]]} with coefficients sorted by
/// basis index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieVectorDoc {
    pub n: u32,
    pub c: u32,
    pub p: u64,
    pub coeffs: Vec<(u32, u64)>,
}

impl LieVectorDoc {
    pub fn from_vector(v: &LieVector) -> LieVectorDoc {
        LieVectorDoc {
            n: v.n,
            c: v.c,
            p: v.p,
            coeffs: v.coeffs.iter().map(|(&i, &c)| (i, c)).collect(),
        }
    }
}

/// {lie: sparse coeffs, q: [values]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CsElementDoc {
    pub lie: Vec<(u32, u64)>,
    pub q: Vec<u64>,
}

/// Witness payload {pair: {f, g}, subgroup, classification}.
#[derive(Debug, Clone, Serialize)]
pub struct RegularWitnessDoc {
    pub pair: FpfPairDoc,
    pub subgroup: Vec<Vec<u16>>,
    pub classification: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FpfPairDoc {
    pub f: Vec<u32>,
    pub g: Vec<u32>,
}

impl FpfPairDoc {
    pub fn from_pair(p: &crate::regsub::FpfPair) -> FpfPairDoc {
        FpfPairDoc {
            f: p.f.images().to_vec(),
            g: p.g.images().to_vec(),
        }
    }
}
