use serde::Serialize;

use crate::error::{Error, Result};

/// What the jet dimensions describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityKind {
    /// A divisor in a smooth `n`-dimensional variety; dimensions are of jets
    /// over its singular locus.
    Divisor,
    /// A local complete intersection of dimension `n`.
    Lci,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityTag {
    TerminalEvidence,
    CanonicalEvidence,
    RationalEvidence,
    Violated,
    Inconclusive,
}

/// Tags singularities from `dim pi_m^{-1}(X_sing)` for `m = 1, 2, ...`.
///
/// For a divisor in dimension `n` the levels are compared with
/// `(m+1)(n-1) - 2` (terminal) and `(m+1)(n-1)` (canonical, strict); for
/// an lci of dimension `n` with `n(m+1)` (rational, strict). The evidence
/// only covers the supplied levels. Dimensions must grow by at least the
/// dimension of `X` per level.
pub fn classify_singularities(
    n: u32,
    sing_fiber_dims: &[i64],
    kind: SingularityKind,
) -> Result<SingularityTag> {
    let dim_x = match kind {
        SingularityKind::Divisor => n
            .checked_sub(1)
            .ok_or_else(|| Error::Input("a divisor needs ambient dimension >= 1".into()))?,
        SingularityKind::Lci => n,
    } as i64;
    for (k, w) in sing_fiber_dims.windows(2).enumerate() {
        if w[1] < w[0] + dim_x {
            return Err(Error::InconsistentInput(format!(
                "level {} has dimension {} < {} + {dim_x}",
                k + 2,
                w[1],
                w[0]
            )));
        }
    }
    if sing_fiber_dims.is_empty() {
        return Ok(SingularityTag::Inconclusive);
    }
    let levels = sing_fiber_dims
        .iter()
        .enumerate()
        .map(|(k, &dim)| (k as i64 + 2, dim));
    Ok(match kind {
        SingularityKind::Divisor => {
            let ceiling = |m1: i64| m1 * dim_x;
            if levels.clone().any(|(m1, dim)| dim >= ceiling(m1)) {
                SingularityTag::Violated
            } else if levels.clone().all(|(m1, dim)| dim <= ceiling(m1) - 2) {
                SingularityTag::TerminalEvidence
            } else {
                SingularityTag::CanonicalEvidence
            }
        }
        SingularityKind::Lci => {
            if levels.clone().any(|(m1, dim)| dim >= m1 * dim_x) {
                SingularityTag::Violated
            } else {
                SingularityTag::RationalEvidence
            }
        }
    })
}
