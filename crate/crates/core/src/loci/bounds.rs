//! Dimension bounds for jet strata of Brill-Noether loci.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::loci::BoundsQuery;
use crate::partitions::{all_partitions, Partition};

fn check_level(lambda: &Partition, m: u32) -> Result<()> {
    if lambda.cap() != m + 1 {
        return Err(Error::Instance(format!(
            "partition {lambda} does not have cap m + 1 = {}",
            m + 1
        )));
    }
    if lambda.is_empty() {
        return Err(Error::Instance("bound needs a nonempty partition".into()));
    }
    Ok(())
}

/// `mg - (sum lambda_i - r_{lambda_l}) + l - 1`, the dimension bound for the
/// type-`lambda` stratum of the theta divisor's m-jets over a point.
pub fn stratum_dim_bound_theta(lambda: &Partition, g: u32, m: u32) -> Result<i64> {
    check_level(lambda, m)?;
    let top_mult = lambda.r(lambda.largest()) as i64;
    Ok(m as i64 * g as i64 - (lambda.sum() as i64 - top_mult) + lambda.len() as i64 - 1)
}

/// Bound on the type-`lambda` stratum of `W^r_d` jets at level `m`,
/// assembled at `i = lambda_l - 1`:
/// `g i - sum_{j<=i} (kappa_j (g - d - 1 + n_j) - d_j) + g (m - i)`.
pub fn wrd_stratum_dim_bound(q: &BoundsQuery, lambda: &Partition) -> Result<i64> {
    check_level(lambda, q.m)?;
    let g = q.params.g as i64;
    let d = q.params.d as i64;
    let i = lambda.largest() as usize - 1;
    if !q.defects.is_empty() && q.defects.len() < i {
        return Err(Error::Input(format!(
            "{} Petri defects given, level {i} needs {i}",
            q.defects.len()
        )));
    }
    let signature = match &q.signature {
        Some(s) => {
            if !s.bounded_by(lambda) {
                return Err(Error::Instance(format!(
                    "signature {:?} exceeds n_(j+1) of {lambda}",
                    s.values()
                )));
            }
            s.clone()
        }
        None => lambda.signature(),
    };
    let penalty: i64 = (1..=i)
        .map(|j| {
            let kappa = signature.get(j) as i64;
            let defect = q.defects.get(j - 1).copied().unwrap_or(0) as i64;
            kappa * (g - d - 1 + lambda.n(j as u32) as i64) - defect
        })
        .sum();
    Ok(g * i as i64 - penalty + g * (q.m as i64 - i as i64))
}

/// Result of the singular-fiber maximization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberBound {
    pub bound: i64,
    pub ceiling: i64,
    pub tight_possible: bool,
    /// A maximizing `(l, lambda)`.
    pub argmax_l: u32,
    pub argmax: Partition,
}

/// Maximizes `(m+1)(g-1) - (sum lambda - m - 1) - (l - r_{lambda_l})` over
/// `l` in `[2, g-1]` and theta-admissible `lambda` of length `l`.
pub fn theta_sing_fiber_bound(g: u32, m: u32) -> Result<FiberBound> {
    if g < 3 {
        return Err(Error::Range(format!("genus {g} < 3")));
    }
    if m < 1 {
        return Err(Error::Range("jet level must be at least 1".into()));
    }
    let ceiling = (m as i64 + 1) * (g as i64 - 1);
    let mut best: Option<(i64, u32, Partition)> = None;
    for l in 2..g {
        for lambda in all_partitions(l as usize, m + 1) {
            let sum = lambda.sum() as i64;
            if sum < m as i64 + 1 {
                continue;
            }
            let top_mult = lambda.r(lambda.largest()) as i64;
            let value = ceiling - (sum - m as i64 - 1) - (l as i64 - top_mult);
            if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
                best = Some((value, l, lambda));
            }
        }
    }
    let (bound, argmax_l, argmax) = best.expect("l = 2 always has admissible partitions");
    let tight_possible = (2..g).any(|l| (m + 1).is_multiple_of(l));
    Ok(FiberBound {
        bound,
        ceiling,
        tight_possible,
        argmax_l,
        argmax,
    })
}

/// Upper bound on `dim W^r_d`: `d - 2r`, or `d - 2r - 1` off the hyperelliptic
/// locus. Requires `2 <= d <= g - 1` and `0 < 2r <= d`.
pub fn martens_bound(g: u32, d: u32, r: u32, hyperelliptic: bool) -> Result<i64> {
    if d < 2 || d + 1 > g {
        return Err(Error::Range(format!("need 2 <= d <= g - 1, got d = {d}, g = {g}")));
    }
    if r == 0 || 2 * r > d {
        return Err(Error::Range(format!("need 0 < 2r <= d, got r = {r}, d = {d}")));
    }
    let base = d as i64 - 2 * r as i64;
    Ok(if hyperelliptic { base } else { base - 1 })
}

/// Singular-locus jet dimensions of the theta divisor for `m = 1..=horizon`.
///
/// Level one is `dim Theta_sing + g` with `dim Theta_sing` the Martens bound
/// for `W^1_{g-1}`; each further level adds `g - 1`, the minimal growth
/// allowed for a complete intersection of dimension `g - 1`.
pub fn theta_sing_jet_dims(g: u32, hyperelliptic: bool, horizon: u32) -> Result<Vec<i64>> {
    let sing = martens_bound(g, g - 1, 1, hyperelliptic)?;
    let first = sing + g as i64;
    Ok((0..horizon as i64).map(|k| first + k * (g as i64 - 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loci::BNParams;
    use crate::partitions::Signature;

    fn part(p: &[u32], cap: u32) -> Partition {
        Partition::new(p.to_vec(), cap).unwrap()
    }

    #[test]
    fn theta_stratum_examples() {
        assert_eq!(stratum_dim_bound_theta(&part(&[1, 1], 2), 3, 1).unwrap(), 4);
        assert_eq!(stratum_dim_bound_theta(&part(&[2], 2), 3, 1).unwrap(), 2);
        // Equal parts c with l*c = m+1: mg - (m+1) + 2l - 1.
        let (g, m) = (5i64, 5u32);
        for (l, c) in [(2usize, 3u32), (3, 2), (6, 1)] {
            let lambda = part(&vec![c; l], m + 1);
            assert_eq!(
                stratum_dim_bound_theta(&lambda, g as u32, m).unwrap(),
                m as i64 * g - (m as i64 + 1) + 2 * l as i64 - 1
            );
        }
        assert!(stratum_dim_bound_theta(&part(&[1], 3), 3, 1).is_err());
    }

    #[test]
    fn empty_signature_gives_full_space() {
        let params = BNParams::new(5, 3, 1, 2).unwrap();
        let mut q = BoundsQuery::new(params, 4);
        q.signature = Some(Signature::new(vec![0; 4]).unwrap());
        assert_eq!(wrd_stratum_dim_bound(&q, &part(&[2, 4], 5)).unwrap(), 5 * 4);
    }

    #[test]
    fn theta_signature_matches_flag_count() {
        let (g, m) = (6u32, 5u32);
        let params = BNParams::new(g, g - 1, 0, 3).unwrap();
        for lambda in all_partitions(3, m + 1) {
            let top = lambda.largest() as usize;
            let mut q = BoundsQuery::new(params, m);
            q.signature = Some(Signature::new(vec![1; top - 1]).unwrap());
            let expect = (m * g) as i64
                - (1..top as u32).map(|k| lambda.n(k) as i64).sum::<i64>();
            assert_eq!(wrd_stratum_dim_bound(&q, &lambda).unwrap(), expect, "{lambda}");
        }
    }

    #[test]
    fn defects_shift_linearly() {
        let params = BNParams::new(7, 4, 1, 3).unwrap();
        let lambda = part(&[1, 3, 4], 5);
        let base = wrd_stratum_dim_bound(&BoundsQuery::new(params, 4), &lambda).unwrap();
        let mut q = BoundsQuery::new(params, 4);
        q.defects = vec![2, 0, 5];
        assert_eq!(wrd_stratum_dim_bound(&q, &lambda).unwrap(), base + 7);
        q.defects = vec![1];
        assert!(matches!(wrd_stratum_dim_bound(&q, &lambda), Err(Error::Input(_))));
    }

    #[test]
    fn oversized_signature_rejected() {
        let params = BNParams::new(5, 3, 0, 2).unwrap();
        let mut q = BoundsQuery::new(params, 2);
        q.signature = Some(Signature::new(vec![2, 2]).unwrap());
        assert!(wrd_stratum_dim_bound(&q, &part(&[1, 3], 3)).is_err());
    }

    #[test]
    fn fiber_bound_small_cases() {
        let b = theta_sing_fiber_bound(3, 1).unwrap();
        assert_eq!(b.bound, 4);
        assert!(b.tight_possible);
        assert_eq!(b.argmax, part(&[1, 1], 2));
        // m + 1 = 5 is prime and exceeds g - 1 = 3.
        let b = theta_sing_fiber_bound(4, 4).unwrap();
        assert!(!b.tight_possible);
        assert!(b.bound < b.ceiling);
        assert!(theta_sing_fiber_bound(2, 1).is_err());
    }

    #[test]
    fn martens_examples() {
        assert_eq!(martens_bound(3, 2, 1, true).unwrap(), 0);
        assert_eq!(martens_bound(4, 3, 1, false).unwrap(), 0);
        assert!(matches!(martens_bound(4, 3, 0, true), Err(Error::Range(_))));
        assert!(martens_bound(4, 3, 2, true).is_err());
        assert!(martens_bound(4, 4, 1, true).is_err());
    }

    #[test]
    fn first_jet_level_of_singular_locus() {
        for g in 3..10 {
            let gi = g as i64;
            assert_eq!(theta_sing_jet_dims(g, true, 1).unwrap(), vec![2 * (gi - 1) - 1]);
            assert_eq!(theta_sing_jet_dims(g, false, 1).unwrap(), vec![2 * (gi - 1) - 2]);
        }
    }
}
