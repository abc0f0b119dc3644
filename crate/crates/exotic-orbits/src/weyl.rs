//! Hyperoctahedral bookkeeping: the Weyl group of type `C_n` has order
//! `2^n n!`, and its irreducible characters are indexed by bipartitions of
//! `n`. The dimension attached to a bipartition `(alpha, beta)` is
//!
//! `binomial(n, |alpha|) * f(alpha) * f(beta)`,
//!
//! where `f` counts standard Young tableaux by the hook-length formula.
//! The square-sum identity `sum over bipartitions of dim^2 = 2^n n!`
//! cross-checks everything.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::partition::{enumerate_bipartitions, BiPartition, Partition};

/// `2^n * n!`, the order of the type-`C_n` Weyl group.
pub fn weyl_order(n: usize) -> BigUint {
    let mut order = BigUint::one() << n;
    for k in 1..=n {
        order *= BigUint::from(k);
    }
    order
}

/// Number of standard Young tableaux of shape `lambda`, by the hook-length
/// formula `|lambda|! / prod(hooks)`. The division is exact.
pub fn tableau_count(lambda: &Partition) -> BigUint {
    let mut numerator = BigUint::one();
    for k in 1..=lambda.size() {
        numerator *= BigUint::from(k);
    }
    let mut hooks = BigUint::one();
    for p in 1..=lambda.len() {
        for c in 1..=lambda.part(p) {
            let arm = lambda.part(p) - c;
            let leg = (p + 1..=lambda.len())
                .take_while(|&q| lambda.part(q) >= c)
                .count();
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    let (q, r) = num_integer::div_rem(numerator, hooks);
    debug_assert!(r.is_zero(), "hook-length division is always exact");
    q
}

/// Dimension of the irreducible character indexed by a bipartition.
pub fn irr_dim(bp: &BiPartition) -> BigUint {
    let n = bp.size();
    let k = bp.first().size();
    binomial(BigUint::from(n), BigUint::from(k))
        * tableau_count(bp.first())
        * tableau_count(bp.second())
}

/// One row of the character-dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrRow {
    pub bipartition: BiPartition,
    #[serde(serialize_with = "crate::serialize_biguint")]
    pub dim: BigUint,
    /// Conventional character name, recorded for `n = 2` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<&'static str>,
}

/// Dimensions for all bipartitions of `n`, in the canonical bipartition
/// enumeration order.
pub fn irr_table(n: usize) -> Vec<IrrRow> {
    enumerate_bipartitions(n)
        .into_iter()
        .map(|bipartition| {
            let dim = irr_dim(&bipartition);
            let name = character_name(&bipartition);
            IrrRow {
                bipartition,
                dim,
                name,
            }
        })
        .collect()
}

/// Conventional names of the five characters of the rank-2 group.
fn character_name(bp: &BiPartition) -> Option<&'static str> {
    if bp.size() != 2 {
        return None;
    }
    let shape = (bp.first().parts(), bp.second().parts());
    match shape {
        ([2], []) => Some("Lsign"),
        ([1, 1], []) => Some("sign"),
        ([1], [1]) => Some("regular"),
        ([], [2]) => Some("triv"),
        ([], [1, 1]) => Some("Ssign"),
        _ => None,
    }
}
