use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros. The empty partition has weight zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Partition);

/// An arbitrary finite integer sequence; zeros and negative entries are kept
/// verbatim.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct IntVector(pub Vec<i64>);

fn invalid(parts: &[u32], reason: &str) -> Error {
    Error::InvalidPartition {
        input: format!("{parts:?}"),
        reason: reason.to_string(),
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails when the parts are
    /// not weakly decreasing or a zero sits before a positive part.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(invalid(&parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(&parts, "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The parts after position `k` (1-based count): `(λ_{k+1}, λ_{k+2}, ...)`.
    pub fn tail(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts.get(k..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Removes the part at 0-based position `i`.
    pub fn remove_part(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.remove(i);
        Partition { parts }
    }

    /// Adds `r` to the first part.
    pub fn add_to_first(&self, r: u32) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(p) => *p += r,
            None => parts.push(r),
        }
        Partition { parts }
    }

    /// True when this diagram contains `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Merges the parts of two partitions (the product `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.length() + other.length());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_int_vector(&self) -> IntVector {
        IntVector(self.parts.iter().map(|&p| p as i64).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(rem: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                current.push(p);
                rec(rem - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let p = Partition::new(parts)?;
        if !p.is_strict() {
            return Err(invalid(p.parts(), "parts must be strictly decreasing"));
        }
        Ok(StrictPartition(p))
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    pub fn length(&self) -> usize {
        self.0.length()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.part(i)
    }

    /// Removing a part keeps the sequence strict.
    pub fn remove_part(&self, i: usize) -> StrictPartition {
        StrictPartition(self.0.remove_part(i))
    }

    pub fn tail(&self, k: usize) -> StrictPartition {
        StrictPartition(self.0.tail(k))
    }

    pub fn add_to_first(&self, r: u32) -> StrictPartition {
        StrictPartition(self.0.add_to_first(r))
    }

    /// All strict partitions of `n`, largest first part first.
    pub fn all(n: u32) -> Vec<StrictPartition> {
        Partition::all(n)
            .into_iter()
            .filter(Partition::is_strict)
            .map(StrictPartition)
            .collect()
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self, Error> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(invalid(p.parts(), "parts must be strictly decreasing"))
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self, Error> {
        Partition::new(v)
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self, Error> {
        StrictPartition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0.parts
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

/// Parses the command-line syntax: comma-separated parts (`4,3,1`), with `-`
/// (or the empty string) spelling the empty partition.
fn parse_parts(s: &str) -> Result<Vec<u32>, Error> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|_| Error::InvalidPartition {
                input: s.to_string(),
                reason: format!("{:?} is not a nonnegative integer", tok.trim()),
            })
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Partition::new(parse_parts(s)?).map_err(|e| match e {
            Error::InvalidPartition { reason, .. } => Error::InvalidPartition {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let p: Partition = s.parse()?;
        StrictPartition::try_from(p).map_err(|e| match e {
            Error::InvalidPartition { reason, .. } => Error::InvalidPartition {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_parts(f, &self.parts)?;
        write!(f, ")")
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl IntVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Entrywise `self - other`, padding the shorter vector with zeros.
    pub fn sub(&self, other: &IntVector) -> IntVector {
        let n = self.len().max(other.len());
        IntVector(
            (0..n)
                .map(|i| self.0.get(i).copied().unwrap_or(0) - other.0.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }

    /// Interprets the vector as a partition when it is one (after dropping
    /// trailing zeros).
    pub fn as_partition(&self) -> Option<Partition> {
        let mut v = self.0.as_slice();
        while let [rest @ .., 0] = v {
            v = rest;
        }
        if v.iter().any(|&x| x <= 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::from_sorted_unchecked(v.iter().map(|&x| x as u32).collect()))
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

/// `λ ≥ μ` in dominance order: equal weights and every partial sum of `λ`
/// weakly exceeds the corresponding partial sum of `μ`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.weight() != mu.weight() {
        return false;
    }
    let n = lambda.length().max(mu.length());
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..n {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return false;
        }
    }
    true
}

#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("valid partition literal") };
}

#[macro_export]
macro_rules! strict {
    () => { $crate::StrictPartition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::StrictPartition::new(vec![$($p),+]).expect("valid strict partition literal") };
}
