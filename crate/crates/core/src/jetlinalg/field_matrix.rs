use std::fmt;

use crate::ring::{Field, Scalar};

/// Dense matrix over the base field, used for linearizations and ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl FieldMatrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        FieldMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FieldMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Row-major integers reduced into `field`.
    pub fn from_ints(field: Field, rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols);
        Self::from_fn(rows, cols, field, |i, j| field.from_i64(values[i * cols + j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = a[rank * cols + col].inv().expect("pivot is nonzero");
            for r in rank + 1..rows {
                let x = &a[r * cols + col];
                if x.is_zero() {
                    continue;
                }
                let factor = x.mul(&inv);
                for j in col..cols {
                    let delta = factor.mul(&a[rank * cols + j]);
                    a[r * cols + j] = a[r * cols + j].sub(&delta);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Nullity of the map on column vectors.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(FieldMatrix::zero(3, 5, Field::Prime(3)).kernel_dim(), 5);
    }

    #[test]
    fn identity_kernel_is_trivial() {
        assert_eq!(FieldMatrix::identity(4, Field::Rational).kernel_dim(), 0);
    }

    #[test]
    fn rank_over_different_fields() {
        // [[1, 1], [1, -1]] has determinant -2: singular only in characteristic 2.
        let vals = [1, 1, 1, -1];
        assert_eq!(FieldMatrix::from_ints(Field::Prime(2), 2, 2, &vals).rank(), 1);
        assert_eq!(FieldMatrix::from_ints(Field::Prime(3), 2, 2, &vals).rank(), 2);
        assert_eq!(FieldMatrix::from_ints(Field::Rational, 2, 2, &vals).rank(), 2);
    }
}
