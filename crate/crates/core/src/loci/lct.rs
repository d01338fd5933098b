//! Log canonical thresholds of Brill-Noether pairs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::loci::BNParams;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn check_range(p: &BNParams) -> Result<()> {
    if p.r >= p.l {
        return Err(Error::Range(format!(
            "index range 1..=l-r is empty for l = {}, r = {}",
            p.l, p.r
        )));
    }
    Ok(())
}

/// `min_{1 <= i <= l-r} (l+1-i)(g-d+l-i) / (l+1-r-i)` for a Petri-general curve.
pub fn lct_closed_form(p: &BNParams) -> Result<BigRational> {
    check_range(p)?;
    let (g, d, r, l) = (p.g as i64, p.d as i64, p.r as i64, p.l as i64);
    Ok((1..=l - r)
        .map(|i| ratio((l + 1 - i) * (g - d + l - i), l + 1 - r - i))
        .min()
        .expect("nonempty range"))
}

/// Minimum of `c . x` over `{x : A x >= b}` by enumerating basic feasible
/// solutions. Returns `None` when no vertex is feasible.
///
/// The caller guarantees the minimum is attained at a vertex, i.e. the
/// region is pointed and the objective is bounded below on it.
pub fn lp_min_by_vertices(
    objective: &[BigRational],
    constraints: &[(Vec<BigRational>, BigRational)],
) -> Option<(BigRational, Vec<BigRational>)> {
    let n = objective.len();
    let mut best: Option<(BigRational, Vec<BigRational>)> = None;
    let mut chosen = Vec::with_capacity(n);
    choose(constraints.len(), n, 0, &mut chosen, &mut |rows| {
        let Some(x) = solve_square(rows.iter().map(|&k| &constraints[k])) else {
            return;
        };
        let feasible = constraints.iter().all(|(a, b)| dot(a, &x) >= *b);
        if !feasible {
            return;
        }
        let value = dot(objective, &x);
        if best.as_ref().is_none_or(|(v, _)| value < *v) {
            best = Some((value, x));
        }
    });
    best
}

fn dot(a: &[BigRational], x: &[BigRational]) -> BigRational {
    a.iter()
        .zip(x)
        .fold(BigRational::zero(), |acc, (u, v)| acc + u * v)
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        choose(n, k, i + 1, cur, f);
        cur.pop();
    }
}

/// Solves the square system given by the selected constraints held at
/// equality; `None` when singular.
fn solve_square<'a>(
    rows: impl Iterator<Item = &'a (Vec<BigRational>, BigRational)>,
) -> Option<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .map(|(a, b)| {
            let mut row = a.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// The same threshold as the limit of a linear program: minimize
/// `sum_i b_i x_i`, `b_i = (g-d+l-i)(l-i+1)`, over `x >= 0` with
/// `sum_{i <= l-r} (l-i-r+1) x_i >= 1`, solved by vertex enumeration.
pub fn lct_lp_oracle(p: &BNParams) -> Result<BigRational> {
    check_range(p)?;
    let (g, d, r, l) = (p.g as i64, p.d as i64, p.r as i64, p.l as i64);
    let n = l as usize;
    let objective: Vec<BigRational> = (1..=l).map(|i| ratio((g - d + l - i) * (l - i + 1), 1)).collect();
    if objective.iter().any(Signed::is_negative) {
        return Err(Error::Instance("objective must be non-negative".into()));
    }
    let mut constraints = Vec::with_capacity(n + 1);
    for k in 0..n {
        let mut a = vec![BigRational::zero(); n];
        a[k] = ratio(1, 1);
        constraints.push((a, BigRational::zero()));
    }
    let cover: Vec<BigRational> = (1..=l)
        .map(|i| if i <= l - r { ratio(l - i - r + 1, 1) } else { BigRational::zero() })
        .collect();
    constraints.push((cover, ratio(1, 1)));
    let (value, _) = lp_min_by_vertices(&objective, &constraints)
        .ok_or_else(|| Error::Instance("linear program has no feasible vertex".into()))?;
    Ok(value)
}

/// Finite-horizon evaluation of `dim X - sup_m dim(jets)_m / (m+1)`.
///
/// The supremum runs over all `m`; with finitely many levels the value is an
/// estimate from the levels supplied, never a claim about the limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MustataEstimate {
    #[serde(serialize_with = "ser_ratio")]
    pub value: BigRational,
    /// Highest level `M` used.
    pub horizon: usize,
    /// Level attaining the maximum ratio (first one on ties).
    pub argmax: usize,
}

pub(crate) fn ser_ratio<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn mustata_lct(ambient_dim: u32, fiber_dims: &[i64]) -> Result<MustataEstimate> {
    if fiber_dims.is_empty() {
        return Err(Error::Input("no jet levels supplied".into()));
    }
    if let Some(bad) = fiber_dims.iter().find(|&&x| x < 0) {
        return Err(Error::Input(format!("negative fiber dimension {bad}")));
    }
    let (argmax, sup) = fiber_dims
        .iter()
        .enumerate()
        .map(|(m, &dim)| (m, ratio(dim, m as i64 + 1)))
        .fold(None::<(usize, BigRational)>, |best, (m, q)| match best {
            Some((bm, bq)) if bq >= q => Some((bm, bq)),
            _ => Some((m, q)),
        })
        .expect("nonempty");
    Ok(MustataEstimate {
        value: ratio(ambient_dim as i64, 1) - sup,
        horizon: fiber_dims.len() - 1,
        argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bn(g: u32, d: u32, r: u32, l: u32) -> BNParams {
        BNParams::new(g, d, r, l).unwrap()
    }

    #[test]
    fn theta_divisor_is_log_canonical() {
        for g in 2..9 {
            for l in 1..=g {
                let p = BNParams { g, d: g - 1, r: 0, l };
                assert_eq!(lct_closed_form(&p).unwrap(), ratio(1, 1));
                assert_eq!(lct_lp_oracle(&p).unwrap(), ratio(1, 1));
            }
        }
    }

    #[test]
    fn single_term_range() {
        for (g, d, l) in [(6, 3, 2), (9, 5, 3), (12, 7, 4)] {
            let p = bn(g, d, l - 1, l);
            let expect = ratio((l * (g - d + l - 1)) as i64, 1);
            assert_eq!(lct_closed_form(&p).unwrap(), expect);
        }
    }

    #[test]
    fn genus_four_example() {
        let p = bn(4, 3, 1, 2);
        assert_eq!(lct_closed_form(&p).unwrap(), ratio(4, 1));
        assert_eq!(lct_lp_oracle(&p).unwrap(), ratio(4, 1));
    }

    #[test]
    fn empty_range_is_an_error() {
        let p = BNParams { g: 4, d: 3, r: 2, l: 2 };
        assert!(matches!(lct_closed_form(&p), Err(Error::Range(_))));
        assert!(matches!(lct_lp_oracle(&p), Err(Error::Range(_))));
    }

    #[test]
    fn lp_solver_on_a_square() {
        // min x + 2y over x >= 1, y >= 1, x + y >= 3: attained at (2, 1) -> 4.
        let q = |n: i64| ratio(n, 1);
        let cons = vec![
            (vec![q(1), q(0)], q(1)),
            (vec![q(0), q(1)], q(1)),
            (vec![q(1), q(1)], q(3)),
        ];
        let (v, x) = lp_min_by_vertices(&[q(1), q(2)], &cons).unwrap();
        assert_eq!(v, q(4));
        assert_eq!(x, vec![q(2), q(1)]);
    }

    #[test]
    fn mustata_examples() {
        // Smooth hypersurface pattern: (m+1)(n-1) at every level.
        let n = 5u32;
        let dims: Vec<i64> = (0..6).map(|m| (m + 1) * (n as i64 - 1)).collect();
        let est = mustata_lct(n, &dims).unwrap();
        assert_eq!(est.value, ratio(1, 1));
        assert_eq!(est.horizon, 5);

        assert_eq!(mustata_lct(4, &[3, 6]).unwrap().value, ratio(1, 1));
        assert_eq!(mustata_lct(3, &[3]).unwrap().value, ratio(0, 1));
        assert_eq!(mustata_lct(4, &[0, 4]).unwrap().argmax, 1);
        assert!(mustata_lct(3, &[]).is_err());
        assert!(mustata_lct(3, &[-1]).is_err());
    }
}
