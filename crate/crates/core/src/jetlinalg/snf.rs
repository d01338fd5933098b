use crate::jetlinalg::JetMatrix;
use crate::partitions::Partition;

/// Normal form `U A V = D` over the local ring `k[t]/(t^{m+1})`.
///
/// `D` is diagonal with entries `1, ..., 1, t^{lambda_1}, ..., t^{lambda_l}`
/// (zero standing in for `t^{m+1}`), so its type is `lambda` with cap `m + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: JetMatrix,
    pub v: JetMatrix,
    pub d: JetMatrix,
    pub unit_count: usize,
    pub partition: Partition,
}

impl SnfResult {
    /// t-orders along the diagonal of `D`, units included as 0.
    pub fn diagonal_orders(&self) -> Vec<u32> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).t_order())
            .collect()
    }
}

/// Reduces `a` by pivoting on a minimal-order entry at each step.
///
/// Every entry of the remaining block has order at least the pivot's, so
/// each elimination multiplier is `x / t^o`, which stays in the ring. Ties
/// pick the smallest row-major index.
pub fn smith_normal_form(a: &JetMatrix) -> SnfResult {
    let (rows, cols) = (a.rows(), a.cols());
    let (field, order) = (a.field(), a.order());
    let cap = order + 1;
    let mut d = a.clone();
    let mut u = JetMatrix::identity(rows, field, order);
    let mut v = JetMatrix::identity(cols, field, order);
    let steps = rows.min(cols);

    for k in 0..steps {
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for i in k..rows {
            for j in k..cols {
                let o = d.get(i, j).t_order();
                if best.is_none_or(|(bo, _, _)| o < bo) {
                    best = Some((o, i, j));
                    if o == 0 {
                        break 'search;
                    }
                }
            }
        }
        let (o, pi, pj) = best.expect("nonempty block");
        if o == cap {
            // The rest of the block is zero.
            break;
        }
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Normalize the pivot to exactly t^o.
        let unit = d.get(k, k).shift_down(o);
        let unit_inv = unit.invert().expect("pivot quotient is a unit");
        d.scale_row(k, &unit_inv);
        u.scale_row(k, &unit_inv);

        for i in k + 1..rows {
            let x = d.get(i, k);
            if x.is_zero() {
                continue;
            }
            let q = x.shift_down(o).neg();
            d.add_row_multiple(i, k, &q);
            u.add_row_multiple(i, k, &q);
        }
        for j in k + 1..cols {
            let y = d.get(k, j);
            if y.is_zero() {
                continue;
            }
            let q = y.shift_down(o).neg();
            d.add_col_multiple(j, k, &q);
            v.add_col_multiple(j, k, &q);
        }
    }

    let orders: Vec<u32> = (0..steps).map(|i| d.get(i, i).t_order()).collect();
    let unit_count = orders.iter().filter(|&&o| o == 0).count();
    let partition = Partition::new(orders.into_iter().filter(|&o| o > 0).collect(), cap)
        .expect("orders lie in [1, m+1]");
    SnfResult {
        u,
        v,
        d,
        unit_count,
        partition,
    }
}

/// The type `lambda` of `a`.
pub fn type_of(a: &JetMatrix) -> Partition {
    smith_normal_form(a).partition
}
