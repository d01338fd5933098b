use crate::error::{Error, Result};
use crate::jetlinalg::JetMatrix;
use crate::ring::JetScalar;

/// Determinant by cofactor expansion along the first row.
///
/// Deliberately the slow route: it shares no code with the normal form, so
/// it can serve as the oracle for every type-based criterion.
pub fn determinant(a: &JetMatrix) -> Result<JetScalar> {
    if a.rows() != a.cols() {
        return Err(Error::Input(format!(
            "determinant of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let idx: Vec<usize> = (0..a.rows()).collect();
    Ok(minor(a, &idx, &idx))
}

fn minor(a: &JetMatrix, rows: &[usize], cols: &[usize]) -> JetScalar {
    match rows.len() {
        1 => a.get(rows[0], cols[0]).clone(),
        2 => {
            let x = a.get(rows[0], cols[0]).mul(a.get(rows[1], cols[1]));
            let y = a.get(rows[0], cols[1]).mul(a.get(rows[1], cols[0]));
            x.sub(&y)
        }
        _ => {
            let mut acc = JetScalar::zero(a.field(), a.order());
            let sub_rows = &rows[1..];
            let mut sub_cols = Vec::with_capacity(cols.len() - 1);
            for (k, &c) in cols.iter().enumerate() {
                let entry = a.get(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                sub_cols.clear();
                sub_cols.extend(cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x));
                let term = entry.mul(&minor(a, sub_rows, &sub_cols));
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            if !go(i + 1, n, k, cur, f) {
                return false;
            }
            cur.pop();
        }
        true
    }
    go(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Whether every `s x s` minor of `a` is zero in `k[t]/(t^{m+1})`, by direct
/// expansion over all row and column subsets.
pub fn minors_vanish(a: &JetMatrix, s: usize) -> Result<bool> {
    let bound = a.rows().min(a.cols());
    if s == 0 || s > bound {
        return Err(Error::Range(format!("minor size {s} outside [1, {bound}]")));
    }
    let mut all_zero = true;
    for_each_subset(a.rows(), s, &mut |rows| {
        for_each_subset(a.cols(), s, &mut |cols| {
            if !minor(a, rows, cols).is_zero() {
                all_zero = false;
            }
            all_zero
        });
        all_zero
    });
    Ok(all_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    #[test]
    fn diag_t_t_mod_t2_has_vanishing_det() {
        let a = JetMatrix::diagonal_t_powers(Field::Prime(2), 1, &[1, 1]);
        assert!(minors_vanish(&a, 2).unwrap());
        assert!(!minors_vanish(&a, 1).unwrap());
    }

    #[test]
    fn identity_never_vanishes() {
        let a = JetMatrix::identity(3, Field::Prime(3), 2);
        for s in 1..=3 {
            assert!(!minors_vanish(&a, s).unwrap());
        }
    }

    #[test]
    fn single_t_is_nonzero() {
        let a = JetMatrix::diagonal_t_powers(Field::Prime(2), 1, &[1]);
        assert!(!minors_vanish(&a, 1).unwrap());
    }

    #[test]
    fn range_checked() {
        let a = JetMatrix::identity(2, Field::Rational, 1);
        assert!(matches!(minors_vanish(&a, 0), Err(Error::Range(_))));
        assert!(matches!(minors_vanish(&a, 3), Err(Error::Range(_))));
    }

    #[test]
    fn three_by_three_determinant() {
        // det [[1,2,3],[4,5,6],[7,8,10]] = -3
        let vals = [1, 2, 3, 4, 5, 6, 7, 8, 10];
        let a = JetMatrix::from_fn(3, 3, Field::Rational, 0, |i, j| {
            JetScalar::from_ints(Field::Rational, &[vals[i * 3 + j]]).unwrap()
        });
        assert_eq!(
            determinant(&a).unwrap(),
            JetScalar::from_ints(Field::Rational, &[-3]).unwrap()
        );
    }
}
