//! Bijections between the three orbit-parameter families — marked
//! partitions, segmented partitions, and bipartitions — plus the
//! stratification of either side by support.
//!
//! The three families are linked through segmented partitions:
//!
//! * `sp_to_mp` / `mp_to_sp` translate between a segment list and a mark
//!   vector over the same `lambda`, working through the support one index
//!   at a time from the bottom of the partition upward;
//! * `p2_to_sp` / `sp_to_p2` translate between a bipartition
//!   `(gamma, mu)` and a segmented partition of `gamma + mu` (entrywise
//!   sum), by intersecting segments with prefixes of `[1, lambda_p]`;
//! * `mp_to_p2` / `p2_to_mp` are the composites.
//!
//! A [`Stratum`] fixes a partition `lambda` and a support `x`; the marked
//! and segmented representatives of a stratum are enumerated by brute
//! force, while [`Stratum::count`] evaluates the closed-form product
//! `lambda_{x_1} * prod_{i >= 2} (lambda_{x_i} - lambda_{x_{i-1}} - 1)`
//! (indices listed in decreasing order, so `x_1` is the bottommost marked
//! index). The two must agree; the exhaustive check lives in [`crate::verify`].

use crate::partition::{
    self, BiPartition, MarkSupport, MarkedPartition, Partition, SegmentedPartition, Violation,
};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Marks from segments over the same `lambda`.
///
/// Walking support indices `p` from largest to smallest, the mark is
/// `a_p = j + min(0, m)` where `[j, lambda_p]` is the segment ending at
/// `lambda_p` and `m = min { a_q - lambda_q - 1 : q > p marked }` (absent
/// minimum means `a_p = j`); unmarked indices get 0. Fails only if the
/// emitted marks were to violate the marked-partition conditions, which
/// would indicate an implementation bug.
pub fn sp_to_mp(sp: &SegmentedPartition) -> Result<MarkedPartition, Violation> {
    let lambda = sp.lambda();
    let mut left_end = vec![None; lambda.len() + 1];
    for (segment, &p) in sp.segments().iter().zip(sp.segment_support().indices()) {
        left_end[p] = Some(segment.0);
    }
    let mut marks = vec![0usize; lambda.len()];
    let mut m: Option<i64> = None;
    for p in (1..=lambda.len()).rev() {
        if let Some(j) = left_end[p] {
            let a = j as i64 + m.unwrap_or(0).min(0);
            debug_assert!(a >= 1);
            marks[p - 1] = a as usize;
        }
        if marks[p - 1] != 0 {
            let gap = marks[p - 1] as i64 - lambda.part(p) as i64 - 1;
            m = Some(m.map_or(gap, |cur| cur.min(gap)));
        }
    }
    MarkedPartition::new(lambda.clone(), marks)
}

/// Segments from marks over the same `lambda` — the inverse of
/// [`sp_to_mp`].
///
/// Each marked index `p` contributes the segment
/// `[a_p - min(0, m), lambda_p]` with the same minimum `m` as in
/// [`sp_to_mp`]; segments are listed in ascending order (marked indices
/// from largest to smallest). Fails only if the emitted segments were to
/// violate the segmented-partition conditions, which would indicate an
/// implementation bug.
pub fn mp_to_sp(mp: &MarkedPartition) -> Result<SegmentedPartition, Violation> {
    let lambda = mp.lambda();
    let mut segments = Vec::new();
    let mut m: Option<i64> = None;
    for p in (1..=lambda.len()).rev() {
        let a = mp.mark(p);
        if a != 0 {
            let j = a as i64 - m.unwrap_or(0).min(0);
            debug_assert!(j >= 1);
            segments.push((j as usize, lambda.part(p)));
            let gap = a as i64 - lambda.part(p) as i64 - 1;
            m = Some(m.map_or(gap, |cur| cur.min(gap)));
        }
    }
    SegmentedPartition::new(lambda.clone(), segments)
}

/// Segmented partition of `gamma + mu` from a bipartition `(gamma, mu)`.
///
/// With `lambda = gamma + mu` (entrywise), row `p` contributes the
/// interval `[gamma_p + mu_{p+1} + 1, gamma_p + mu_p]` (empty when
/// reversed); adjacent contributions merge into single segments. Fails
/// only if the merged intervals were to violate the segmented-partition
/// conditions, which would indicate an implementation bug.
pub fn p2_to_sp(bp: &BiPartition) -> Result<SegmentedPartition, Violation> {
    let (gamma, mu) = (bp.first(), bp.second());
    let lambda = partition::sum_partitions(gamma, mu);
    let rows = gamma.len().max(mu.len());
    let mut segments: Vec<(usize, usize)> = Vec::new();
    // Row p = rows produces the leftmost interval; walking p downward emits
    // intervals in ascending order, so merging only ever looks at the tail.
    for p in (1..=rows).rev() {
        let hi = gamma.part(p) + mu.part(p);
        let lo = gamma.part(p) + mu.part(p + 1) + 1;
        if lo > hi {
            continue;
        }
        match segments.last_mut() {
            Some(last) if last.1 + 1 == lo => last.1 = hi,
            _ => segments.push((lo, hi)),
        }
    }
    SegmentedPartition::new(lambda, segments)
}

/// Bipartition `(gamma, mu)` from a segmented partition — the inverse of
/// [`p2_to_sp`].
///
/// Row `p` reads `mu_p` = number of covered positions in `[1, lambda_p]`
/// and `gamma_p = lambda_p - mu_p`; trailing zeros are dropped. Fails only
/// if either component were not weakly decreasing, which would indicate an
/// implementation bug.
pub fn sp_to_p2(sp: &SegmentedPartition) -> Result<BiPartition, Violation> {
    let lambda = sp.lambda();
    let mut gamma = Vec::new();
    let mut mu = Vec::new();
    for p in 1..=lambda.len() {
        let covered = (1..=lambda.part(p)).filter(|&k| sp.covers(k)).count();
        mu.push(covered);
        gamma.push(lambda.part(p) - covered);
    }
    gamma.retain(|&part| part != 0);
    mu.retain(|&part| part != 0);
    Ok(BiPartition::new(
        Partition::new(gamma)?,
        Partition::new(mu)?,
    ))
}

/// Composite `sp_to_p2(mp_to_sp(mp))`.
pub fn mp_to_p2(mp: &MarkedPartition) -> Result<BiPartition, Violation> {
    sp_to_p2(&mp_to_sp(mp)?)
}

/// Composite `sp_to_mp(p2_to_sp(bp))`.
pub fn p2_to_mp(bp: &BiPartition) -> Result<MarkedPartition, Violation> {
    sp_to_mp(&p2_to_sp(bp)?)
}

/// A partition together with a support: the locus of marked partitions
/// `(lambda, a)` whose nonzero marks sit exactly at the indices of `x`,
/// equivalently of segmented partitions whose segments end exactly at the
/// parts indexed by `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stratum {
    lambda: Partition,
    support: MarkSupport,
}

impl Stratum {
    /// Fails if some support index exceeds the number of parts.
    pub fn new(lambda: Partition, support: MarkSupport) -> Result<Self, Violation> {
        if let Some(&bad) = support.indices().iter().find(|&&x| x > lambda.len()) {
            return Err(Violation::SupportRange {
                value: bad,
                parts: lambda.len(),
            });
        }
        Ok(Self { lambda, support })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn support(&self) -> &MarkSupport {
        &self.support
    }

    /// Closed-form cardinality of the stratum:
    /// `lambda_{x_1} * prod_{i >= 2} (lambda_{x_i} - lambda_{x_{i-1}} - 1)`
    /// over the decreasing support `x_1 > x_2 > ...`, and 0 whenever some
    /// factor is nonpositive or some supported part repeats below itself.
    pub fn count(&self) -> BigUint {
        let xs = self.support.indices();
        if xs
            .iter()
            .any(|&p| self.lambda.part(p + 1) == self.lambda.part(p))
        {
            return BigUint::zero();
        }
        let mut total = BigUint::one();
        for (i, &x) in xs.iter().enumerate() {
            let factor = if i == 0 {
                self.lambda.part(x) as i64
            } else {
                self.lambda.part(x) as i64 - self.lambda.part(xs[i - 1]) as i64 - 1
            };
            if factor <= 0 {
                return BigUint::zero();
            }
            total *= BigUint::from(factor as u64);
        }
        total
    }

    /// Brute-force marked members: all of `enumerate_marked(n)` restricted
    /// to this `lambda` and support, in the canonical enumeration order.
    pub fn marked_members(&self) -> Vec<MarkedPartition> {
        partition::enumerate_marked(self.lambda.size())
            .into_iter()
            .filter(|mp| mp.lambda() == &self.lambda && &mp.mark_support() == &self.support)
            .collect()
    }

    /// Brute-force segmented members: all of `enumerate_segmented(n)`
    /// restricted to this `lambda` and support, in the canonical
    /// enumeration order.
    pub fn segmented_members(&self) -> Vec<SegmentedPartition> {
        partition::enumerate_segmented(self.lambda.size())
            .into_iter()
            .filter(|sp| sp.lambda() == &self.lambda && &sp.segment_support() == &self.support)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_bipartitions, enumerate_marked, enumerate_segmented};

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(lambda: &[usize], marks: &[usize]) -> MarkedPartition {
        MarkedPartition::new(pt(lambda), marks.to_vec()).unwrap()
    }

    fn sp(lambda: &[usize], segments: &[(usize, usize)]) -> SegmentedPartition {
        SegmentedPartition::new(pt(lambda), segments.to_vec()).unwrap()
    }

    fn bp(first: &[usize], second: &[usize]) -> BiPartition {
        BiPartition::new(pt(first), pt(second))
    }

    /// The full translation table for n = 3, in canonical marked order.
    fn n3_table() -> Vec<(MarkedPartition, SegmentedPartition, BiPartition)> {
        vec![
            (mp(&[3], &[0]), sp(&[3], &[]), bp(&[3], &[])),
            (mp(&[3], &[1]), sp(&[3], &[(1, 3)]), bp(&[], &[3])),
            (mp(&[3], &[2]), sp(&[3], &[(2, 3)]), bp(&[1], &[2])),
            (mp(&[3], &[3]), sp(&[3], &[(3, 3)]), bp(&[2], &[1])),
            (mp(&[2, 1], &[0, 0]), sp(&[2, 1], &[]), bp(&[2, 1], &[])),
            (
                mp(&[2, 1], &[0, 1]),
                sp(&[2, 1], &[(1, 1)]),
                bp(&[1], &[1, 1]),
            ),
            (
                mp(&[2, 1], &[1, 0]),
                sp(&[2, 1], &[(1, 2)]),
                bp(&[], &[2, 1]),
            ),
            (
                mp(&[2, 1], &[2, 0]),
                sp(&[2, 1], &[(2, 2)]),
                bp(&[1, 1], &[1]),
            ),
            (
                mp(&[1, 1, 1], &[0, 0, 0]),
                sp(&[1, 1, 1], &[]),
                bp(&[1, 1, 1], &[]),
            ),
            (
                mp(&[1, 1, 1], &[0, 0, 1]),
                sp(&[1, 1, 1], &[(1, 1)]),
                bp(&[], &[1, 1, 1]),
            ),
        ]
    }

    #[test]
    fn n3_translation_table() {
        for (mp, sp, bp) in n3_table() {
            assert_eq!(mp_to_sp(&mp).unwrap(), sp, "mp_to_sp at {mp}");
            assert_eq!(sp_to_mp(&sp).unwrap(), mp, "sp_to_mp at {sp}");
            assert_eq!(sp_to_p2(&sp).unwrap(), bp, "sp_to_p2 at {sp}");
            assert_eq!(p2_to_sp(&bp).unwrap(), sp, "p2_to_sp at {bp}");
            assert_eq!(mp_to_p2(&mp).unwrap(), bp, "mp_to_p2 at {mp}");
            assert_eq!(p2_to_mp(&bp).unwrap(), mp, "p2_to_mp at {bp}");
        }
    }

    #[test]
    fn worked_two_row_case() {
        // (5,2) with marks (2,1): the lower mark contributes segment [1,2];
        // the upper one is pushed right to [4,5] by the gap below it.
        let marked = mp(&[5, 2], &[2, 1]);
        let segmented = sp(&[5, 2], &[(1, 2), (4, 5)]);
        assert_eq!(mp_to_sp(&marked).unwrap(), segmented);
        assert_eq!(sp_to_mp(&segmented).unwrap(), marked);
        // Four of the seven boxes are covered below the first row's top:
        // gamma = (5,2) - (4,2) componentwise.
        assert_eq!(sp_to_p2(&segmented).unwrap(), bp(&[1], &[4, 2]));
    }

    #[test]
    fn round_trips_exhaustive_small() {
        for n in 0..=7 {
            for mp in enumerate_marked(n) {
                assert_eq!(sp_to_mp(&mp_to_sp(&mp).unwrap()).unwrap(), mp);
                assert_eq!(p2_to_mp(&mp_to_p2(&mp).unwrap()).unwrap(), mp);
            }
            for sp in enumerate_segmented(n) {
                assert_eq!(mp_to_sp(&sp_to_mp(&sp).unwrap()).unwrap(), sp);
                assert_eq!(p2_to_sp(&sp_to_p2(&sp).unwrap()).unwrap(), sp);
            }
            for bp in enumerate_bipartitions(n) {
                assert_eq!(sp_to_p2(&p2_to_sp(&bp).unwrap()).unwrap(), bp);
                assert_eq!(mp_to_p2(&p2_to_mp(&bp).unwrap()).unwrap(), bp);
            }
        }
    }

    #[test]
    fn bijections_preserve_support_and_shape() {
        for n in 0..=7 {
            for mp in enumerate_marked(n) {
                let sp = mp_to_sp(&mp).unwrap();
                assert_eq!(sp.lambda(), mp.lambda());
                assert_eq!(sp.segment_support(), mp.mark_support());
                let bp = sp_to_p2(&sp).unwrap();
                assert_eq!(
                    partition::sum_partitions(bp.first(), bp.second()).parts(),
                    mp.lambda().parts()
                );
            }
        }
    }

    #[test]
    fn stratum_counts_match_brute_force() {
        let st = Stratum::new(pt(&[5, 3]), MarkSupport::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(st.count(), BigUint::from(3u32));
        assert_eq!(st.marked_members().len(), 3);
        assert_eq!(st.segmented_members().len(), 3);

        let st = Stratum::new(pt(&[3]), MarkSupport::new(vec![1]).unwrap()).unwrap();
        assert_eq!(st.count(), BigUint::from(3u32));

        // A support touching a repeated part is empty.
        let st = Stratum::new(pt(&[2, 2]), MarkSupport::new(vec![1]).unwrap()).unwrap();
        assert_eq!(st.count(), BigUint::zero());
        assert!(st.marked_members().is_empty());
        assert!(st.segmented_members().is_empty());

        // The empty support carries exactly the unmarked representative.
        let st = Stratum::new(pt(&[2, 2]), MarkSupport::new(vec![]).unwrap()).unwrap();
        assert_eq!(st.count(), BigUint::one());
        assert_eq!(st.marked_members().len(), 1);

        assert_eq!(
            Stratum::new(pt(&[2]), MarkSupport::new(vec![2]).unwrap()).unwrap_err(),
            Violation::SupportRange { value: 2, parts: 1 }
        );
    }
}
