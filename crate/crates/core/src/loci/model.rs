use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Signature;

/// A Brill-Noether query: genus `g`, degree `d`, index `r` and `l = h^0(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNParams {
    pub g: u32,
    pub d: u32,
    pub r: u32,
    pub l: u32,
}

impl BNParams {
    pub fn new(g: u32, d: u32, r: u32, l: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::Instance(format!("genus {g} < 2")));
        }
        if d < 1 || d + 1 > g {
            return Err(Error::Instance(format!("degree {d} outside [1, g-1] for g = {g}")));
        }
        if l < 1 {
            return Err(Error::Instance("l = h^0(L) must be at least 1".into()));
        }
        if r >= l {
            return Err(Error::Range(format!(
                "r = {r} must be below l = {l}; the index range 1..=l-r is empty"
            )));
        }
        Ok(BNParams { g, d, r, l })
    }

    /// Every parameter set with `2 <= g <= g_max`, `1 <= d <= g-1`,
    /// `1 <= l <= d+1` and `0 <= r < l`.
    pub fn grid(g_max: u32) -> impl Iterator<Item = BNParams> {
        (2..=g_max).flat_map(|g| {
            (1..g).flat_map(move |d| {
                (1..=d + 1).flat_map(move |l| (0..l).map(move |r| BNParams { g, d, r, l }))
            })
        })
    }
}

/// Local determinantal presentation of `W^r_d`: an `a x b` matrix with
/// `a = d + e + 1 - g`, `b = e`, whose `s x s` minors cut out the locus,
/// `s = e + d + 1 - g - r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantalModel {
    pub params: BNParams,
    pub e: u32,
    pub rows: usize,
    pub cols: usize,
    pub minor_size: usize,
}

impl DeterminantalModel {
    /// The smallest legal auxiliary degree, `e = 2g - d - 1`.
    pub fn minimal(params: BNParams) -> Self {
        Self::with_degree(params, 2 * params.g - params.d - 1).expect("minimal e is legal")
    }

    pub fn with_degree(params: BNParams, e: u32) -> Result<Self> {
        let BNParams { g, d, r, .. } = params;
        if e + d + 1 < 2 * g {
            return Err(Error::Model(format!("e = {e} below 2g - d - 1 = {}", 2 * g - d - 1)));
        }
        let rows = (d + e + 1 - g) as usize;
        let cols = e as usize;
        let minor_size = rows
            .checked_sub(r as usize)
            .filter(|&s| s >= 1 && s <= rows.min(cols))
            .ok_or_else(|| Error::Model(format!("minor size out of range for r = {r}")))?;
        Ok(DeterminantalModel {
            params,
            e,
            rows,
            cols,
            minor_size,
        })
    }

    /// Theta divisor model: `d = g - 1`, `r = 0`, square matrices.
    pub fn theta(g: u32, e: u32) -> Result<Self> {
        Self::with_degree(BNParams::new(g, g - 1, 0, 1)?, e)
    }
}

/// Input to the stratum dimension bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsQuery {
    pub params: BNParams,
    pub m: u32,
    /// Petri defects `d_1, d_2, ...`; empty means all zero.
    pub defects: Vec<u32>,
    /// Flag signature; `None` uses `kappa_j = n_{j+1}(lambda)`.
    pub signature: Option<Signature>,
}

impl BoundsQuery {
    pub fn new(params: BNParams, m: u32) -> Self {
        BoundsQuery {
            params,
            m,
            defects: Vec::new(),
            signature: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(BNParams::new(1, 1, 0, 1).is_err());
        assert!(BNParams::new(4, 4, 0, 1).is_err());
        assert!(BNParams::new(4, 0, 0, 1).is_err());
        assert!(matches!(BNParams::new(4, 3, 1, 1), Err(Error::Range(_))));
        assert!(BNParams::new(4, 3, 1, 2).is_ok());
    }

    #[test]
    fn minimal_model_shape() {
        let m = DeterminantalModel::minimal(BNParams::new(4, 3, 1, 2).unwrap());
        assert_eq!((m.e, m.rows, m.cols, m.minor_size), (4, 4, 4, 3));
        let m = DeterminantalModel::minimal(BNParams::new(5, 2, 0, 1).unwrap());
        assert_eq!((m.e, m.rows, m.cols, m.minor_size), (7, 5, 7, 5));
        assert!(DeterminantalModel::with_degree(BNParams::new(5, 2, 0, 1).unwrap(), 6).is_err());
    }

    #[test]
    fn grid_respects_invariants() {
        for p in BNParams::grid(6) {
            assert!(BNParams::new(p.g, p.d, p.r, p.l).is_ok(), "{p:?}");
        }
        assert_eq!(BNParams::grid(2).count(), 3);
    }
}
