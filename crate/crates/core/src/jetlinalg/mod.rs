//! Matrices over `k[t]/(t^{m+1})`.
//!
//! Matrices act on column vectors, so the domain has dimension `cols`. Type,
//! minor vanishing and the kernel laws are all transpose-invariant, which is
//! what lets callers feed either orientation of a Brill-Noether matrix.

mod field_matrix;
mod minors;
mod snf;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Field, JetScalar, Scalar};

pub use field_matrix::FieldMatrix;
pub use minors::{determinant, minors_vanish};
pub use snf::{smith_normal_form, type_of, SnfResult};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JetMatrix {
    rows: usize,
    cols: usize,
    order: u32,
    field: Field,
    entries: Vec<JetScalar>,
}

impl JetMatrix {
    /// Row-major entries; all must live in the same ring.
    pub fn new(rows: usize, cols: usize, entries: Vec<JetScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Input("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Input(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let field = entries[0].field();
        let order = entries[0].order();
        if entries
            .iter()
            .any(|e| e.field() != field || e.order() != order)
        {
            return Err(Error::IncompatibleOperands(
                "matrix entries live in different rings".into(),
            ));
        }
        Ok(JetMatrix {
            rows,
            cols,
            order,
            field,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        order: u32,
        mut f: impl FnMut(usize, usize) -> JetScalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(e.field() == field && e.order() == order);
                entries.push(e);
            }
        }
        JetMatrix {
            rows,
            cols,
            order,
            field,
            entries,
        }
    }

    /// Integer coefficient lists, `coeffs[i][j]` holding `c_0..c_m` of entry `(i, j)`.
    pub fn from_int_coeffs(field: Field, order: u32, coeffs: &[Vec<Vec<i64>>]) -> Result<Self> {
        let rows = coeffs.len();
        let cols = coeffs.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for row in coeffs {
            if row.len() != cols {
                return Err(Error::Input("ragged matrix rows".into()));
            }
            for c in row {
                let mut c = c.clone();
                if c.len() > order as usize + 1 {
                    return Err(Error::Input(format!(
                        "entry has degree above the order {order}"
                    )));
                }
                c.resize(order as usize + 1, 0);
                entries.push(JetScalar::from_ints(field, &c)?);
            }
        }
        JetMatrix::new(rows, cols, entries)
    }

    pub fn zero(rows: usize, cols: usize, field: Field, order: u32) -> Self {
        Self::from_fn(rows, cols, field, order, |_, _| JetScalar::zero(field, order))
    }

    pub fn identity(n: usize, field: Field, order: u32) -> Self {
        Self::from_fn(n, n, field, order, |i, j| {
            if i == j {
                JetScalar::one(field, order)
            } else {
                JetScalar::zero(field, order)
            }
        })
    }

    /// `diag(d_0, d_1, ...)` padded with zeros to `rows x cols`.
    pub fn diagonal(rows: usize, cols: usize, diag: &[JetScalar]) -> Result<Self> {
        let first = diag
            .first()
            .ok_or_else(|| Error::Input("empty diagonal".into()))?;
        if diag.len() > rows.min(cols) {
            return Err(Error::Input("diagonal longer than the matrix allows".into()));
        }
        let (field, order) = (first.field(), first.order());
        let mut m = Self::zero(rows, cols, field, order);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        JetMatrix::new(rows, cols, m.entries)
    }

    /// Block-diagonal `diag(t^{o_1}, ..., t^{o_n})`; orders above `m` give zero.
    pub fn diagonal_t_powers(field: Field, order: u32, orders: &[u32]) -> Self {
        let n = orders.len();
        Self::from_fn(n, n, field, order, |i, j| {
            if i == j {
                JetScalar::t_power(field, order, orders[i])
            } else {
                JetScalar::zero(field, order)
            }
        })
    }

    /// Embeds a base-field matrix as the constant term.
    pub fn from_constant(c: &FieldMatrix, order: u32) -> Self {
        let field = c.field();
        Self::from_fn(c.rows(), c.cols(), field, order, |i, j| {
            JetScalar::constant(field, order, c.get(i, j).clone())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[JetScalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &JetScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: JetScalar) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn transpose(&self) -> JetMatrix {
        JetMatrix::from_fn(self.cols, self.rows, self.field, self.order, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, other: &JetMatrix) -> Result<JetMatrix> {
        if self.cols != other.rows || self.field != other.field || self.order != other.order {
            return Err(Error::IncompatibleOperands(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = JetScalar::zero(self.field, self.order);
        Ok(JetMatrix::from_fn(
            self.rows,
            other.cols,
            self.field,
            self.order,
            |i, j| {
                (0..self.cols).fold(zero.clone(), |acc, k| {
                    acc.add(&self.get(i, k).mul(other.get(k, j)))
                })
            },
        ))
    }

    /// Entrywise image in `k[t]/(t^{j+1})`.
    pub fn truncate(&self, j: u32) -> Result<JetMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.truncate(j))
            .collect::<Result<Vec<_>>>()?;
        JetMatrix::new(self.rows, self.cols, entries)
    }

    /// `A_k`, the coefficient matrix of `t^k`.
    pub fn coefficient(&self, k: u32) -> FieldMatrix {
        FieldMatrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.get(i, j).coeff(k as usize).clone()
        })
    }

    /// Constant term; the matrix is invertible over the ring iff this is.
    pub fn residue(&self) -> FieldMatrix {
        self.coefficient(0)
    }

    /// Square and invertible over `k[t]/(t^{m+1})`.
    pub fn is_unit(&self) -> bool {
        self.rows == self.cols && self.residue().rank() == self.rows
    }

    /// The base-field matrix of the k-linear map on coefficient vectors.
    ///
    /// Coordinate block `i` holds the coefficient of `t^{m-i}`, which makes
    /// the block `(i, j)` equal to `A_{j-i}` above the diagonal and zero
    /// below, so the result is block upper triangular.
    pub fn linearize(&self) -> FieldMatrix {
        let n = self.order as usize + 1;
        let (a, b) = (self.rows, self.cols);
        let mut out = FieldMatrix::zero(n * a, n * b, self.field);
        for bi in 0..n {
            for bj in bi..n {
                let k = bj - bi;
                for i in 0..a {
                    for j in 0..b {
                        let c = self.get(i, j).coeff(k);
                        if !c.is_zero() {
                            out.set(bi * a + i, bj * b + j, c.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// Dimension over `k` of the kernel of `A` as a map of free modules.
    pub fn module_kernel_dim(&self) -> usize {
        self.linearize().kernel_dim()
    }

    /// Row operation `row_dst += c * row_src`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &JetScalar) {
        for j in 0..self.cols {
            let delta = c.mul(self.get(src, j));
            let idx = dst * self.cols + j;
            self.entries[idx] = self.entries[idx].add(&delta);
        }
    }

    /// Column operation `col_dst += c * col_src`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &JetScalar) {
        for i in 0..self.rows {
            let delta = self.get(i, src).mul(c);
            let idx = i * self.cols + dst;
            self.entries[idx] = self.entries[idx].add(&delta);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &JetScalar) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.entries[idx] = c.mul(&self.entries[idx]);
        }
    }

    pub(crate) fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 != r2 {
            for j in 0..self.cols {
                self.entries.swap(r1 * self.cols + j, r2 * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 != c2 {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + c1, i * self.cols + c2);
            }
        }
    }

    /// `diag(I_k, self)`. Padding by units changes neither the type nor the
    /// corank.
    pub fn pad_with_identity(&self, k: usize) -> JetMatrix {
        let (field, order) = (self.field, self.order);
        JetMatrix::from_fn(self.rows + k, self.cols + k, field, order, |i, j| {
            match (i.checked_sub(k), j.checked_sub(k)) {
                (Some(ii), Some(jj)) => self.get(ii, jj).clone(),
                _ if i == j => JetScalar::one(field, order),
                _ => JetScalar::zero(field, order),
            }
        })
    }

    /// Scalar in the matrix's base field from an integer.
    pub fn scalar(&self, n: i64) -> Scalar {
        self.field.from_i64(n)
    }
}

impl fmt::Display for JetMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::Prime(p)
    }

    fn int(s: &[Vec<Vec<i64>>], p: u64, m: u32) -> JetMatrix {
        JetMatrix::from_int_coeffs(f(p), m, s).unwrap()
    }

    #[test]
    fn linearize_t_is_shift() {
        let a = int(&[vec![vec![0, 1]]], 2, 1);
        let expect = FieldMatrix::from_ints(f(2), 2, 2, &[0, 1, 0, 0]);
        assert_eq!(a.linearize(), expect);
    }

    #[test]
    fn linearize_constant_is_block_diagonal() {
        let a = int(&[vec![vec![1], vec![2]], vec![vec![0], vec![1]]], 5, 2);
        let lin = a.linearize();
        assert_eq!(lin.rows(), 6);
        for bi in 0..3 {
            for bj in 0..3 {
                for i in 0..2 {
                    for j in 0..2 {
                        let expected = if bi == bj {
                            a.get(i, j).coeff(0).clone()
                        } else {
                            f(5).zero()
                        };
                        assert_eq!(lin.get(bi * 2 + i, bj * 2 + j), &expected);
                    }
                }
            }
        }
    }

    #[test]
    fn linearize_upper_triangular_pattern() {
        // [[t, 1], [0, t]] over k[t]/(t^3): A_0 = [[0,1],[0,0]], A_1 = I, A_2 = 0.
        let a = int(
            &[vec![vec![0, 1], vec![1]], vec![vec![0], vec![0, 1]]],
            2,
            2,
        );
        #[rustfmt::skip]
        let expect = FieldMatrix::from_ints(f(2), 6, 6, &[
            0, 1, 1, 0, 0, 0,
            0, 0, 0, 1, 0, 0,
            0, 0, 0, 1, 1, 0,
            0, 0, 0, 0, 0, 1,
            0, 0, 0, 0, 0, 1,
            0, 0, 0, 0, 0, 0,
        ]);
        assert_eq!(a.linearize(), expect);
        assert_eq!(a.linearize().kernel_dim(), 2);
    }

    #[test]
    fn module_kernel_examples() {
        let d = JetMatrix::diagonal_t_powers(Field::Rational, 2, &[1, 2]);
        assert_eq!(d.module_kernel_dim(), 3);
        assert_eq!(JetMatrix::identity(3, f(3), 2).module_kernel_dim(), 0);
        assert_eq!(JetMatrix::zero(1, 1, f(2), 1).module_kernel_dim(), 2);
    }

    #[test]
    fn units() {
        assert!(JetMatrix::identity(2, f(2), 1).is_unit());
        assert!(!JetMatrix::diagonal_t_powers(f(2), 1, &[0, 1]).is_unit());
        assert!(!JetMatrix::zero(2, 3, f(2), 1).is_unit());
    }

    #[test]
    fn shape_errors() {
        assert!(JetMatrix::new(0, 1, vec![]).is_err());
        let x = JetScalar::zero(f(2), 1);
        assert!(JetMatrix::new(1, 2, vec![x.clone()]).is_err());
        let y = JetScalar::zero(f(3), 1);
        assert!(matches!(
            JetMatrix::new(1, 2, vec![x, y]),
            Err(Error::IncompatibleOperands(_))
        ));
    }
}
