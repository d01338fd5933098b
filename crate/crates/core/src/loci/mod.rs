//! Calculators for Brill-Noether jet loci: membership through types,
//! dimension bounds, multiplicity from jets, log canonical thresholds and
//! jet-dimension singularity classifiers.

mod bounds;
mod classify;
mod lct;
mod membership;
mod model;

pub use bounds::{
    martens_bound, stratum_dim_bound_theta, theta_sing_fiber_bound, theta_sing_jet_dims,
    wrd_stratum_dim_bound, FiberBound,
};
pub use classify::{classify_singularities, SingularityKind, SingularityTag};
pub use lct::{lct_closed_form, lct_lp_oracle, lp_min_by_vertices, mustata_lct, MustataEstimate};
pub use membership::{minors_vanish_by_type, multiplicity_from_jets, wrd_member};
pub use model::{BNParams, BoundsQuery, DeterminantalModel};
