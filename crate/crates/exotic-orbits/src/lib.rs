//! Combinatorics of the Sp(2n, C) orbit classification on the exotic
//! nilpotent cone.
//!
//! The crate covers the discrete layer of that classification end to end:
//!
//! * [`partition`] — partitions, bipartitions, marked partitions, and
//!   segmented partitions, with validation and canonical enumerations;
//! * [`bijection`] — the explicit bijections between those families and the
//!   stratification by mark support, with closed-form stratum counts;
//! * [`normal_form`] — symbolic weight vectors, the block normal form
//!   attached to a marking, and its exact parser;
//! * [`reduction`] — the rewriting system that pushes an arbitrary
//!   generalized marking to its marked-partition normal form;
//! * [`oracle`] — an exact integer model of Sp(2n, C) acting on
//!   `C^2n (+) wedge^2 C^2n / C omega`, used to certify every rewriting step
//!   by an explicit group element;
//! * [`weyl`] — hyperoctahedral bookkeeping (group order, irreducible
//!   dimensions indexed by bipartitions);
//! * [`verify`] — exhaustive invariant sweeps tying everything together,
//!   with optional data parallelism;
//! * [`cli`] — the `exorbit` command-line interface over all of the above.
//!
//! Everything is exact: arithmetic is integer (arbitrary precision where
//! needed), enumeration orders are fixed and documented, and serialized
//! output is byte-stable across runs.

pub mod bijection;
pub mod cli;
pub mod exec;
pub mod normal_form;
pub mod oracle;
pub mod partition;
pub mod reduction;
pub mod verify;
pub mod weyl;

pub use partition::{
    BiPartition, MarkSupport, MarkedPartition, Partition, SegmentedPartition, Violation,
};

/// Serializes an arbitrary-precision unsigned integer as a plain JSON
/// number (serde_json is configured for arbitrary-precision numbers, so no
/// magnitude is ever truncated).
pub(crate) fn serialize_biguint<S: serde::Serializer>(
    x: &num_bigint::BigUint,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    use serde::Serialize as _;
    let number: serde_json::Number = x.to_string().parse().map_err(S::Error::custom)?;
    number.serialize(serializer)
}
