//! Jet-scheme invariants of determinantal loci.
//!
//! Exact arithmetic over `k[t]/(t^{m+1})` with `k` a prime field or the
//! rationals; Smith-type normal forms whose non-unit invariant orders form
//! the partition type of a jet matrix; the partition combinatorics that
//! govern jet membership, section counts and dimension bounds; closed-form
//! log canonical thresholds; and exhaustive census machinery that checks
//! every formula against brute force.

pub mod census;
pub mod error;
pub mod format;
pub mod jetlinalg;
pub mod loci;
pub mod partitions;
pub mod ring;

pub use error::{Error, Result};
pub use jetlinalg::{FieldMatrix, JetMatrix, SnfResult};
pub use partitions::{Partition, Signature};
pub use ring::{ArithOp, Field, JetScalar, Scalar};
