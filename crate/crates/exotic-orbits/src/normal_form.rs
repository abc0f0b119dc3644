//! Symbolic weight vectors and the block normal form attached to a marking.
//!
//! A [`WeightVector`] is an integer combination of formal weight symbols
//! over a rank-`n` torus: `V1` symbols `v[eps_i]` and `V2` symbols
//! `v[±eps_i ± eps_j]` with `i != j`. The normal form of a marking
//! `(lambda, a)` is the sum of one block vector per part,
//!
//! `v^(a_p)(lambda_p)` at position `lambda_1 + ... + lambda_{p-1}`,
//!
//! where the block of length `len`, mark `j`, position `i` is
//! `v[eps_{i+j}]` (omitted for `j = 0`) plus the simple-root chain
//! `v[alpha_{i+1}] + ... + v[alpha_{i+len-1}]`, `alpha_k = eps_k - eps_{k+1}`.
//!
//! [`parse_normal_form`] inverts the construction exactly: maximal runs of
//! consecutive `alpha` indices become chains, a lone `v[eps]` inside a
//! chain's footprint is its mark, stray `v[eps]` terms become marked
//! singleton blocks, and uncovered coordinates become unmarked singleton
//! blocks. Anything else (non-unit coefficients, `V2` terms that are not
//! simple roots, two marks in one chain) is a parse failure.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partition::Partition;

/// A formal weight symbol. `V2` sorts before `V1` so that iteration (and
/// the text notation) lists root-space terms before mark terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    /// `s_i * eps_i + s_j * eps_j` with `i < j`, signs in `{+1, -1}`.
    V2 { i: usize, j: usize, si: i8, sj: i8 },
    /// `eps_i`.
    V1 { i: usize },
}

impl Weight {
    pub fn eps(i: usize) -> Self {
        Weight::V1 { i }
    }

    /// The simple root `alpha_i = eps_i - eps_{i+1}`.
    pub fn alpha(i: usize) -> Self {
        Weight::V2 {
            i,
            j: i + 1,
            si: 1,
            sj: -1,
        }
    }

    /// `si * eps_i + sj * eps_j`, normalized so the smaller index is first.
    pub fn pair(i: usize, j: usize, si: i8, sj: i8) -> Result<Self, VectorError> {
        if i == j {
            return Err(VectorError::EqualPairIndices { index: i });
        }
        if !matches!(si, 1 | -1) || !matches!(sj, 1 | -1) {
            return Err(VectorError::BadSign);
        }
        let (i, j, si, sj) = if i < j { (i, j, si, sj) } else { (j, i, sj, si) };
        Ok(Weight::V2 { i, j, si, sj })
    }

    pub fn is_alpha(&self) -> bool {
        matches!(self, Weight::V2 { i, j, si: 1, sj: -1 } if *j == *i + 1)
    }

    /// Coordinate indices mentioned by the symbol.
    fn indices(&self) -> Vec<usize> {
        match *self {
            Weight::V1 { i } => vec![i],
            Weight::V2 { i, j, .. } => vec![i, j],
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Weight::V1 { i } => write!(f, "e{i}"),
            Weight::V2 { i, j, si, sj } => {
                if self.is_alpha() {
                    write!(f, "a{i}")
                } else {
                    if si < 0 {
                        write!(f, "-")?;
                    }
                    write!(f, "e{i}{}e{j}", if sj < 0 { "-" } else { "+" })
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VectorError {
    #[error("coordinate index {index} outside [1, {n}]")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("pair weight needs two distinct indices, got {index} twice")]
    EqualPairIndices { index: usize },
    #[error("signs must be +1 or -1")]
    BadSign,
    #[error("block of length 0")]
    EmptyBlock,
    #[error("mark {mark} exceeds block length {len}")]
    MarkExceedsLength { mark: usize, len: usize },
    #[error("block ends at coordinate {end}, past ambient rank {n}")]
    BlockOutOfRange { end: usize, n: usize },
    #[error("{marks} marks for {parts} parts")]
    MarkCountMismatch { parts: usize, marks: usize },
}

/// An integer combination of weight symbols over a fixed ambient rank `n`.
///
/// Zero-coefficient terms are never stored; equality is exact term-by-term
/// equality. Serializes as
/// `{"n": N, "v1": [[i, c], ...], "v2": [[i, j, si, sj, c], ...]}` with
/// both lists in canonical (ascending index) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    n: usize,
    terms: std::collections::BTreeMap<Weight, i64>,
}

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: Default::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Adds `c * w`, merging with any existing term and dropping zeros.
    /// Rejects symbols whose coordinate indices leave `[1, n]`.
    pub fn add_term(&mut self, w: Weight, c: i64) -> Result<(), VectorError> {
        for index in w.indices() {
            if index < 1 || index > self.n {
                return Err(VectorError::IndexOutOfRange { index, n: self.n });
            }
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
        Ok(())
    }

    /// Coordinate indices mentioned by any term, ascending.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|w| w.indices())
            .collect()
    }

    /// The `a<i>`/`e<i>` text notation: terms in canonical order joined by
    /// `" + "`, or `"0"` for the zero vector. Non-unit coefficients (which
    /// never occur in normal forms) render as `c*term`.
    pub fn text_notation(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, &c)| {
                if c == 1 {
                    w.to_string()
                } else {
                    format!("{c}*{w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text_notation())
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.n, rhs.n, "mismatched ambient ranks");
        let mut out = self.clone();
        for (&w, &c) in rhs.terms.iter() {
            out.add_term(w, c).expect("terms were already in range");
        }
        out
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;

    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.n, rhs.n, "mismatched ambient ranks");
        let mut out = self.clone();
        for (&w, &c) in rhs.terms.iter() {
            out.add_term(w, -c).expect("terms were already in range");
        }
        out
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            n: usize,
            v1: Vec<(usize, i64)>,
            v2: Vec<(usize, usize, i8, i8, i64)>,
        }
        let mut v1 = Vec::new();
        let mut v2 = Vec::new();
        for (&w, &c) in self.terms.iter() {
            match w {
                Weight::V1 { i } => v1.push((i, c)),
                Weight::V2 { i, j, si, sj } => v2.push((i, j, si, sj, c)),
            }
        }
        Raw { n: self.n, v1, v2 }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            #[serde(default)]
            v1: Vec<(usize, i64)>,
            #[serde(default)]
            v2: Vec<(usize, usize, i8, i8, i64)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut out = WeightVector::zero(raw.n);
        for (i, c) in raw.v1 {
            out.add_term(Weight::eps(i), c).map_err(D::Error::custom)?;
        }
        for (i, j, si, sj, c) in raw.v2 {
            let w = Weight::pair(i, j, si, sj).map_err(D::Error::custom)?;
            out.add_term(w, c).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

/// One block of a normal form: `len` consecutive coordinates starting
/// after `pos`, carrying a mark `0 <= mark <= len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub pos: usize,
    pub len: usize,
    pub mark: usize,
}

impl Block {
    pub fn new(pos: usize, len: usize, mark: usize) -> Result<Self, VectorError> {
        if len == 0 {
            return Err(VectorError::EmptyBlock);
        }
        if mark > len {
            return Err(VectorError::MarkExceedsLength { mark, len });
        }
        Ok(Self { pos, len, mark })
    }

    /// The block vector inside ambient rank `n`:
    /// `v[eps_{pos+mark}]` (omitted when unmarked) plus the chain
    /// `v[alpha_{pos+1}], ..., v[alpha_{pos+len-1}]`.
    pub fn vector(&self, n: usize) -> Result<WeightVector, VectorError> {
        if self.pos + self.len > n {
            return Err(VectorError::BlockOutOfRange {
                end: self.pos + self.len,
                n,
            });
        }
        let mut out = WeightVector::zero(n);
        if self.mark >= 1 {
            out.add_term(Weight::eps(self.pos + self.mark), 1)?;
        }
        for k in 1..self.len {
            out.add_term(Weight::alpha(self.pos + k), 1)?;
        }
        Ok(out)
    }

    /// Coordinates the block vector touches: `[pos+1, pos+len]`, except
    /// that an unmarked singleton block is the zero vector with empty
    /// support.
    pub fn support(&self) -> BTreeSet<usize> {
        if self.len == 1 && self.mark == 0 {
            return BTreeSet::new();
        }
        (self.pos + 1..=self.pos + self.len).collect()
    }
}

/// The normal form of a marking over `lambda`: one block per part, marks
/// bounded by part lengths (the full marked-partition conditions are not
/// required), block `p` at position `lambda_1 + ... + lambda_{p-1}` inside
/// ambient rank `n = |lambda|`.
pub fn build_normal_form(lambda: &Partition, marks: &[usize]) -> Result<WeightVector, VectorError> {
    if marks.len() != lambda.len() {
        return Err(VectorError::MarkCountMismatch {
            parts: lambda.len(),
            marks: marks.len(),
        });
    }
    let n = lambda.size();
    let mut out = WeightVector::zero(n);
    for p in 1..=lambda.len() {
        let block = Block::new(lambda.sum_below(p), lambda.part(p), marks[p - 1])?;
        out = &out + &block.vector(n)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("term {term} has coefficient {coeff}, expected 1")]
    NonUnitCoefficient { term: String, coeff: i64 },
    #[error("term {term} is not a simple root or a mark")]
    NonSimpleRootTerm { term: String },
    #[error("chain over [{lo}, {hi}] carries more than one mark")]
    ExtraMark { lo: usize, hi: usize },
    #[error("a mark term is present")]
    MarkTermPresent,
}

/// Recovers the unique block decomposition of a weight vector, or reports
/// why none exists. Blocks come back sorted by position and tile `[1, n]`.
pub fn parse_normal_form(x: &WeightVector) -> Result<Vec<Block>, ParseError> {
    let mut alphas = BTreeSet::new();
    let mut eps = BTreeSet::new();
    for (&w, &c) in x.terms() {
        if c != 1 {
            return Err(ParseError::NonUnitCoefficient {
                term: w.to_string(),
                coeff: c,
            });
        }
        match w {
            Weight::V1 { i } => {
                eps.insert(i);
            }
            _ if w.is_alpha() => {
                if let Weight::V2 { i, .. } = w {
                    alphas.insert(i);
                }
            }
            _ => {
                return Err(ParseError::NonSimpleRootTerm {
                    term: w.to_string(),
                })
            }
        }
    }

    let mut blocks = Vec::new();
    let mut covered = vec![false; x.n() + 1];
    // Maximal runs of consecutive alpha indices become chains.
    let mut run: Option<(usize, usize)> = None;
    let flush = |run: &mut Option<(usize, usize)>,
                     blocks: &mut Vec<Block>,
                     covered: &mut Vec<bool>|
     -> Result<(), ParseError> {
        if let Some((lo, hi)) = run.take() {
            // Chain footprint [lo, hi + 1]; at most one mark may sit on it.
            let marks: Vec<usize> = eps.range(lo..=hi + 1).copied().collect();
            if marks.len() > 1 {
                return Err(ParseError::ExtraMark { lo, hi: hi + 1 });
            }
            let mark = marks.first().map_or(0, |&m| m - (lo - 1));
            blocks.push(Block {
                pos: lo - 1,
                len: hi + 2 - lo,
                mark,
            });
            for k in lo..=hi + 1 {
                covered[k] = true;
            }
        }
        Ok(())
    };
    for &a in alphas.iter() {
        match run {
            Some((_, hi)) if hi + 1 == a => run = Some((run.unwrap().0, a)),
            None => run = Some((a, a)),
            _ => {
                flush(&mut run, &mut blocks, &mut covered)?;
                run = Some((a, a));
            }
        }
    }
    flush(&mut run, &mut blocks, &mut covered)?;

    // Stray mark terms are marked singletons; leftover coordinates are
    // unmarked singletons.
    for &m in eps.iter() {
        if !covered[m] {
            blocks.push(Block {
                pos: m - 1,
                len: 1,
                mark: 1,
            });
            covered[m] = true;
        }
    }
    for k in 1..=x.n() {
        if !covered[k] {
            blocks.push(Block {
                pos: k - 1,
                len: 1,
                mark: 0,
            });
        }
    }
    blocks.sort();
    Ok(blocks)
}

/// Reads a block list back as a marking `(lambda, marks)`; `None` unless
/// the block lengths are weakly decreasing (so that they form a partition).
pub fn blocks_to_marking(blocks: &[Block]) -> Option<(Partition, Vec<usize>)> {
    let lens: Vec<usize> = blocks.iter().map(|b| b.len).collect();
    let marks: Vec<usize> = blocks.iter().map(|b| b.mark).collect();
    let lambda = Partition::new(lens).ok()?;
    Some((lambda, marks))
}

/// The slice label of a pure simple-root sum: block lengths in descending
/// order. Fails on any mark term or on any vector that does not parse.
pub fn ohta_slice_label(x: &WeightVector) -> Result<Partition, ParseError> {
    if x.terms().any(|(w, _)| matches!(w, Weight::V1 { .. })) {
        return Err(ParseError::MarkTermPresent);
    }
    let mut lens: Vec<usize> = parse_normal_form(x)?.iter().map(|b| b.len).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition::new(lens).expect("sorted positive lengths form a partition"))
}
