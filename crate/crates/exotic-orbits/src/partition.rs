//! Partition families underlying the orbit classification: plain integer
//! partitions, bipartitions, marked partitions, and segmented partitions,
//! together with validation, canonical enumeration orders, and counting.
//!
//! All four families are value types with validating constructors: once a
//! value exists it satisfies its family's invariants, and the serde
//! implementations run the same validation on input, so downstream code
//! never re-checks. Canonical orders are fixed by the enumerators (see each
//! function); the derived `Ord` instances are structural and are only used
//! for deterministic sets and maps, not for the enumeration order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// First failed validity check for any of the partition-family types.
///
/// Validation scans invariants in a fixed documented order (lengths and
/// ranges first, then orderings, then cross conditions), so the reported
/// violation is deterministic. All indices in reports are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("nonpositive part: part {index} must be a positive integer")]
    NonpositivePart { index: usize },
    #[error("increasing parts: part {index} exceeds the part before it")]
    IncreasingParts { index: usize },
    #[error("mark count mismatch: {marks} marks for {parts} parts")]
    MarkCountMismatch { parts: usize, marks: usize },
    #[error("mark out of range: a_{index} exceeds lambda_{index}")]
    MarkTooLarge { index: usize },
    #[error("mark on repeated part: a_{index} must vanish because the next part equals lambda_{index}")]
    MarkOnRepeatedPart { index: usize },
    #[error("mark order: marked indices {p} < {q} need lambda_{p} - lambda_{q} > a_{p} - a_{q} > 0")]
    MarkOrder { p: usize, q: usize },
    #[error("segment reversed: [{}, {}] has its left endpoint past its right", segment.0, segment.1)]
    SegmentReversed { segment: (usize, usize) },
    #[error("segment out of range: [{}, {}] must lie inside [1, {max}]", segment.0, segment.1)]
    SegmentOutOfRange { segment: (usize, usize), max: usize },
    #[error("segment order: segment {index} does not come strictly after its predecessor")]
    SegmentOrder { index: usize },
    #[error("segment gap: [{}, {}] and [{}, {}] must leave at least one hole between them", left.0, left.1, right.0, right.1)]
    SegmentGap { left: (usize, usize), right: (usize, usize) },
    #[error("segment endpoint: right endpoint of [{}, {}] is not a part", segment.0, segment.1)]
    SegmentEndpoint { segment: (usize, usize) },
    #[error("support order: support indices must be strictly decreasing at position {index}")]
    SupportOrder { index: usize },
    #[error("support range: support index {value} exceeds the number of parts {parts}")]
    SupportRange { value: usize, parts: usize },
}

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
///
/// Serializes as a bare JSON array of parts, e.g. `[3,1]`; deserialization
/// re-validates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Violation> {
        for (k, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Violation::NonpositivePart { index: k + 1 });
            }
            if k > 0 && parts[k - 1] < part {
                return Err(Violation::IncreasingParts { index: k + 1 });
            }
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned (sum of all parts).
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 1-based part access; indices past the end read as 0.
    pub fn part(&self, p: usize) -> usize {
        if (1..=self.parts.len()).contains(&p) {
            self.parts[p - 1]
        } else {
            0
        }
    }

    /// Sum of the parts strictly before 1-based index `p` (0 for `p = 1`).
    pub fn sum_below(&self, p: usize) -> usize {
        self.parts.iter().take(p.saturating_sub(1)).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// An ordered pair of partitions; a bipartition of `n` when the sizes sum
/// to `n`. Serializes as `{"first": [...], "second": [...]}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    first: Partition,
    second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// A partition with one mark `0 <= a_p <= lambda_p` per part, subject to:
/// marks vanish on repeated parts (if the next part equals `lambda_p` then
/// `a_p = 0`), and any two marked indices `p < q` satisfy
/// `lambda_p - lambda_q > a_p - a_q > 0`.
///
/// Serializes as `{"lambda": [...], "marks": [...]}` with `marks` always the
/// same length as `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkedPartition {
    lambda: Partition,
    marks: Vec<usize>,
}

/// Checks the marked-partition conditions for a mark vector over `lambda`.
pub fn check_marks(lambda: &Partition, marks: &[usize]) -> Result<(), Violation> {
    if marks.len() != lambda.len() {
        return Err(Violation::MarkCountMismatch {
            parts: lambda.len(),
            marks: marks.len(),
        });
    }
    for k in 1..=marks.len() {
        if marks[k - 1] > lambda.part(k) {
            return Err(Violation::MarkTooLarge { index: k });
        }
    }
    for k in 1..=marks.len() {
        if marks[k - 1] != 0 && lambda.part(k + 1) == lambda.part(k) {
            return Err(Violation::MarkOnRepeatedPart { index: k });
        }
    }
    for p in 1..marks.len() {
        for q in (p + 1)..=marks.len() {
            if marks[p - 1] == 0 || marks[q - 1] == 0 {
                continue;
            }
            let da = marks[p - 1] as i64 - marks[q - 1] as i64;
            let dl = lambda.part(p) as i64 - lambda.part(q) as i64;
            if !(0 < da && da < dl) {
                return Err(Violation::MarkOrder { p, q });
            }
        }
    }
    Ok(())
}

impl MarkedPartition {
    pub fn new(lambda: Partition, marks: Vec<usize>) -> Result<Self, Violation> {
        check_marks(&lambda, &marks)?;
        Ok(Self { lambda, marks })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// 1-based mark access; indices past the end read as 0.
    pub fn mark(&self, p: usize) -> usize {
        if (1..=self.marks.len()).contains(&p) {
            self.marks[p - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// Indices carrying a nonzero mark, as a strictly decreasing sequence.
    pub fn mark_support(&self) -> MarkSupport {
        let indices = (1..=self.marks.len())
            .rev()
            .filter(|&p| self.marks[p - 1] != 0)
            .collect();
        MarkSupport { indices }
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, (", self.lambda)?;
        for (k, mark) in self.marks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{mark}")?;
        }
        write!(f, "))")
    }
}

impl<'de> Deserialize<'de> for MarkedPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lambda: Partition,
            marks: Vec<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        MarkedPartition::new(raw.lambda, raw.marks).map_err(D::Error::custom)
    }
}

/// A partition together with a set of closed intervals ("segments") inside
/// `[1, lambda_1]`, listed in ascending order, pairwise separated by at
/// least one hole, each ending at a value that occurs as a part.
///
/// Serializes as `{"lambda": [...], "segments": [[r, s], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SegmentedPartition {
    lambda: Partition,
    segments: Vec<(usize, usize)>,
}

/// Checks the segmented-partition conditions for a segment list over `lambda`.
pub fn check_segments(lambda: &Partition, segments: &[(usize, usize)]) -> Result<(), Violation> {
    let max = lambda.part(1);
    for &(r, s) in segments {
        if r > s {
            return Err(Violation::SegmentReversed { segment: (r, s) });
        }
        if r < 1 || s > max {
            return Err(Violation::SegmentOutOfRange {
                segment: (r, s),
                max,
            });
        }
    }
    for k in 1..segments.len() {
        let (left, right) = (segments[k - 1], segments[k]);
        if right.0 <= left.1 {
            return Err(Violation::SegmentOrder { index: k + 1 });
        }
        if right.0 == left.1 + 1 {
            return Err(Violation::SegmentGap { left, right });
        }
    }
    for &(r, s) in segments {
        if !lambda.parts().contains(&s) {
            return Err(Violation::SegmentEndpoint { segment: (r, s) });
        }
    }
    Ok(())
}

impl SegmentedPartition {
    pub fn new(lambda: Partition, segments: Vec<(usize, usize)>) -> Result<Self, Violation> {
        check_segments(&lambda, &segments)?;
        Ok(Self { lambda, segments })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn segments(&self) -> &[(usize, usize)] {
        &self.segments
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// Whether 1-based position `k` of `[1, lambda_1]` lies in some segment.
    pub fn covers(&self, k: usize) -> bool {
        self.segments.iter().any(|&(r, s)| r <= k && k <= s)
    }

    /// For each segment, the largest part index whose part equals the
    /// segment's right endpoint; a strictly decreasing sequence because
    /// right endpoints increase while parts weakly decrease.
    pub fn segment_support(&self) -> MarkSupport {
        let indices = self
            .segments
            .iter()
            .map(|&(_, s)| {
                let at = self
                    .lambda
                    .parts()
                    .iter()
                    .rposition(|&part| part == s)
                    .expect("validated segment endpoint occurs as a part");
                at + 1
            })
            .collect();
        MarkSupport { indices }
    }
}

impl fmt::Display for SegmentedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.lambda)?;
        for (k, (r, s)) in self.segments.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{r},{s}]")?;
        }
        write!(f, "}})")
    }
}

impl<'de> Deserialize<'de> for SegmentedPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lambda: Partition,
            segments: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        SegmentedPartition::new(raw.lambda, raw.segments).map_err(D::Error::custom)
    }
}

/// A strictly decreasing list of 1-based part indices — the common shape of
/// [`MarkedPartition::mark_support`] and
/// [`SegmentedPartition::segment_support`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkSupport {
    indices: Vec<usize>,
}

impl MarkSupport {
    pub fn new(indices: Vec<usize>) -> Result<Self, Violation> {
        for (k, &x) in indices.iter().enumerate() {
            if x == 0 {
                return Err(Violation::SupportRange { value: 0, parts: 0 });
            }
            if k > 0 && indices[k - 1] <= x {
                return Err(Violation::SupportOrder { index: k + 1 });
            }
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.indices.contains(&p)
    }
}

/// Entrywise sum of two partitions, padding the shorter with zeros.
pub fn sum_partitions(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    let parts = (1..=len).map(|p| a.part(p) + b.part(p)).collect();
    // Entrywise sums of weakly decreasing positive sequences stay weakly
    // decreasing and positive.
    Partition { parts }
}

/// All partitions of `n` in descending lexicographic order on part lists:
/// `(3)` before `(2,1)` before `(1,1,1)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            go(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n`: size of the first component descending from `n`
/// to 0, each component in descending lexicographic order.
pub fn enumerate_bipartitions(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for first in enumerate_partitions(k) {
            for second in enumerate_partitions(n - k) {
                out.push(BiPartition {
                    first: first.clone(),
                    second,
                });
            }
        }
    }
    out
}

/// All vectors `v` with `0 <= v[k] <= bounds[k]`, in ascending
/// lexicographic order (the last coordinate varies fastest).
pub(crate) fn bounded_vectors(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; bounds.len()];
    loop {
        out.push(cur.clone());
        let mut k = bounds.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < bounds[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}

/// All marked partitions of `n`: `lambda` in descending lexicographic
/// order; within a `lambda`, mark vectors in ascending lexicographic order.
pub fn enumerate_marked(n: usize) -> Vec<MarkedPartition> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        for marks in bounded_vectors(lambda.parts()) {
            if check_marks(&lambda, &marks).is_ok() {
                out.push(MarkedPartition {
                    lambda: lambda.clone(),
                    marks,
                });
            }
        }
    }
    out
}

/// All segmented partitions of `n`: `lambda` in descending lexicographic
/// order; within a `lambda`, by the flattened segment list in ascending
/// lexicographic order (so the empty segment list comes first).
pub fn enumerate_segmented(n: usize) -> Vec<SegmentedPartition> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        let lam1 = lambda.part(1);
        let mut per_lambda: Vec<Vec<(usize, usize)>> = (0u128..(1u128 << lam1))
            .filter_map(|mask| segments_from_mask(&lambda, mask, lam1))
            .collect();
        per_lambda.sort_by_key(|segments| {
            segments
                .iter()
                .flat_map(|&(r, s)| [r, s])
                .collect::<Vec<_>>()
        });
        for segments in per_lambda {
            out.push(SegmentedPartition {
                lambda: lambda.clone(),
                segments,
            });
        }
    }
    out
}

/// Decomposes a subset of `[1, lam1]` (bit `k-1` set means `k` is in the
/// subset) into maximal runs; `None` unless every run ends at a part value.
fn segments_from_mask(lambda: &Partition, mask: u128, lam1: usize) -> Option<Vec<(usize, usize)>> {
    let mut segments = Vec::new();
    let mut pos = 1usize;
    while pos <= lam1 {
        if (mask >> (pos - 1)) & 1 == 0 {
            pos += 1;
            continue;
        }
        let r = pos;
        while pos < lam1 && (mask >> pos) & 1 == 1 {
            pos += 1;
        }
        let s = pos;
        if !lambda.parts().contains(&s) {
            return None;
        }
        segments.push((r, s));
        pos += 1;
    }
    Some(segments)
}

/// `p(0), ..., p(n)` — the number of partitions of each `k <= n`, by the
/// standard one-part-size-at-a-time dynamic program (independent of the
/// enumerators).
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); n + 1];
    table[0] = BigUint::one();
    for part in 1..=n {
        for s in part..=n {
            table[s] = &table[s] + &table[s - part];
        }
    }
    table
}

/// Number of bipartitions of `n` as the convolution `sum_k p(k) p(n-k)`.
pub fn bipartition_count(n: usize) -> BigUint {
    let p = partition_counts(n);
    (0..=n).map(|k| &p[k] * &p[n - k]).sum()
}
