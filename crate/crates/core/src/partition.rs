//! Partitions, compositions and the diagram calculus used throughout the
//! crate: conjugation, dominance, row/column slicing, doubling maps and
//! deterministic enumeration.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! Partitions are immutable values; every operation returns a fresh one.
//! The `Ord` instance sorts by *descending lexicographic* comparison of the
//! parts, so `(n)` comes first among partitions of `n` and a `BTreeMap`
//! keyed by partitions iterates in the canonical presentation order.

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotMonotone(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A finite sequence of nonnegative parts, not necessarily monotone.
///
/// Produced by [`Partition::dbl`], whose image may fail to be a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

/// Row or column range selector for [`Partition::slice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cut {
    All,
    /// Indices `<= m` (1-based).
    Le(usize),
    /// Indices `> m` (1-based).
    Gt(usize),
}

impl Partition {
    /// Builds a partition, panicking unless parts are positive and weakly
    /// decreasing. Use [`Partition::try_new`] for fallible construction.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("invalid partition")
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().map_or(true, |&p| p > 0);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotMonotone(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(part^rows)`; `(2^3)` is `(2,2,2)`.
    pub fn rectangle(rows: usize, part: usize) -> Self {
        if part == 0 {
            return Self::empty();
        }
        Partition { parts: vec![part; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `i`-th part, 0-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `h(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.part(0));
        for j in 0..self.part(0) {
            parts.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Partition { parts }
    }

    /// Number of parts `>= k`, i.e. the `k`-th part of the conjugate
    /// (1-based, zero for `k = 0` is not allowed).
    pub fn conjugate_part(&self, k: usize) -> usize {
        assert!(k >= 1);
        self.parts.iter().take_while(|&&p| p >= k).count()
    }

    /// Dominance order: every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other`.
    ///
    /// Panics if the sizes differ; dominance only compares partitions of
    /// the same number.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size(), "dominance needs equal sizes");
        self.dominates_seq(&other.parts)
    }

    /// Prefix-sum comparison against an arbitrary nonnegative sequence of
    /// the same total. Used where the right-hand side is a composition.
    pub fn dominates_seq(&self, seq: &[usize]) -> bool {
        let mut a = 0usize;
        let mut b = 0usize;
        for k in 0..self.parts.len().max(seq.len()) {
            a += self.part(k);
            b += seq.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All parts distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `a(λ)`: 0 when the number of even parts is even, 1 otherwise.
    /// Equals `(|λ| - h(λ)) mod 2`.
    pub fn parity_a(&self) -> usize {
        self.even_part_count() % 2
    }

    /// `h_2(λ)`: number of even parts.
    pub fn even_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Per-part doubling `λ_i -> (⌈(λ_i+1)/2⌉, ⌊(λ_i-1)/2⌋)`, concatenated,
    /// trailing zeros dropped. The result need not be a partition.
    pub fn dbl(&self) -> Composition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push((p + 2) / 2);
            parts.push(p.saturating_sub(1) / 2);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    /// Per-part doubling `λ_i -> (⌈λ_i/2⌉, ⌊λ_i/2⌋)` with zeros dropped.
    ///
    /// Errors when the concatenation is not weakly decreasing (which happens
    /// exactly when some odd part repeats); for strict input it always
    /// succeeds.
    pub fn dblbar(&self) -> Result<Partition, PartitionError> {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push((p + 1) / 2);
            if p / 2 > 0 {
                parts.push(p / 2);
            }
        }
        Partition::try_new(parts)
    }

    /// Containment of diagrams: `other_i <= self_i` for all rows.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Sub-diagram selected by a row condition and a column condition, with
    /// the surviving cells re-anchored at the origin. Both conditions apply
    /// to the original diagram before re-anchoring.
    pub fn slice(&self, rows: Cut, cols: Cut) -> Partition {
        let mut parts = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let keep_row = match rows {
                Cut::All => true,
                Cut::Le(m) => i + 1 <= m,
                Cut::Gt(m) => i + 1 > m,
            };
            if !keep_row {
                continue;
            }
            let width = match cols {
                Cut::All => p,
                Cut::Le(m) => p.min(m),
                Cut::Gt(m) => p.saturating_sub(m),
            };
            if width > 0 {
                parts.push(width);
            }
        }
        Partition { parts }
    }

    /// `λ^{r<=m}`.
    pub fn rows_up_to(&self, m: usize) -> Partition {
        self.slice(Cut::Le(m), Cut::All)
    }

    /// `λ^{r>m}`.
    pub fn rows_after(&self, m: usize) -> Partition {
        self.slice(Cut::Gt(m), Cut::All)
    }

    /// `λ^{c<=m}`.
    pub fn cols_up_to(&self, m: usize) -> Partition {
        self.slice(Cut::All, Cut::Le(m))
    }

    /// `λ^{c>m}`.
    pub fn cols_after(&self, m: usize) -> Partition {
        self.slice(Cut::All, Cut::Gt(m))
    }

    /// Multiset union of parts, sorted decreasingly.
    pub fn union_sorted(&self, other: &Partition) -> Partition {
        let mut parts = [self.parts.as_slice(), other.parts.as_slice()].concat();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Componentwise sum of parts.
    pub fn add(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len().max(other.len()));
        for i in 0..self.len().max(other.len()) {
            parts.push(self.part(i) + other.part(i));
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    /// Canonical text form `4,3,1`; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::try_new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

impl Ord for Partition {
    /// Descending lexicographic order on parts: `(4) < (3,1) < (2,2)`.
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Partition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of weakly decreasing positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element()? {
                    parts.push(p);
                }
                Partition::try_new(parts).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Reinterpret as a partition when the parts (after stripping trailing
    /// zeros) are weakly decreasing and positive.
    pub fn as_partition(&self) -> Option<Partition> {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::try_new(parts).ok()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

fn push_partitions(n: usize, max: usize, strict: bool, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    let hi = n.min(max);
    for p in (1..=hi).rev() {
        prefix.push(p);
        let next_max = if strict { p.saturating_sub(1) } else { p };
        push_partitions(n - p, next_max, strict, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    push_partitions(n, n, false, &mut Vec::new(), &mut out);
    out
}

/// All strict (2-regular) partitions of `n` in descending lexicographic order.
pub fn strict_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    push_partitions(n, n, true, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with all parts odd, in descending lexicographic order.
pub fn odd_part_partitions(n: usize) -> Vec<Partition> {
    partitions(n)
        .into_iter()
        .filter(|p| p.parts.iter().all(|&x| x % 2 == 1))
        .collect()
}
