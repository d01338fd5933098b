use crate::error::{Error, Result};
use crate::jetlinalg::{minors_vanish, smith_normal_form, JetMatrix, SnfResult};
use crate::loci::DeterminantalModel;

/// Fast route to [`minors_vanish`]: all `s x s` minors vanish iff the `s`
/// smallest diagonal orders of the normal form (units as 0) sum to `m + 1`
/// or more.
pub fn minors_vanish_by_type(snf: &SnfResult, s: usize) -> Result<bool> {
    let orders = snf.diagonal_orders();
    if s == 0 || s > orders.len() {
        return Err(Error::Range(format!(
            "minor size {s} outside [1, {}]",
            orders.len()
        )));
    }
    let total: u64 = orders[..s].iter().map(|&o| o as u64).sum();
    Ok(total > snf.d.order() as u64)
}

/// Whether the jet `a` lies in the jet scheme of `W^r_d` under `model`.
///
/// Decided by the partition criterion on the type of `a`, then checked
/// against direct minor expansion; a disagreement is a bug and panics.
pub fn wrd_member(a: &JetMatrix, model: &DeterminantalModel) -> Result<bool> {
    let shape = (a.rows(), a.cols());
    if shape != (model.rows, model.cols) && shape != (model.cols, model.rows) {
        return Err(Error::Model(format!(
            "{}x{} matrix does not fit the {}x{} model",
            a.rows(),
            a.cols(),
            model.rows,
            model.cols
        )));
    }
    let snf = smith_normal_form(a);
    let lambda = &snf.partition;
    let r = model.params.r as usize;
    // With l <= r some s x s minor is a unit.
    let member = if r >= lambda.len() {
        false
    } else {
        lambda.wrd_jet_criterion(a.order(), r)?
    };
    let oracle = minors_vanish(a, model.minor_size)?;
    assert_eq!(
        member, oracle,
        "type criterion and minor expansion disagree on\n{a}"
    );
    Ok(member)
}

/// Least `m >= 1` whose jet fiber is a proper subset, given a monotone
/// predicate reporting whether the level-`m` fiber is everything.
pub fn multiplicity_from_jets(
    mut jet_fiber_is_full: impl FnMut(u32) -> Result<bool>,
    horizon: u32,
) -> Result<u32> {
    for m in 1..=horizon {
        if !jet_fiber_is_full(m)? {
            return Ok(m);
        }
    }
    Err(Error::Horizon(horizon))
}
