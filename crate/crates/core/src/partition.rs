//! Integer partitions, used as the index set of Chern monomials.
//!
//! The partition `(3, 1)` stands for the monomial `c1*c3`. Ordering is
//! graded-lexicographic: first by weight, then lexicographically on the
//! descending part list.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are dropped
    /// (they stand for `c0 = 1`).
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single Chern class `c_k`.
    pub fn single(k: u32) -> Self {
        Partition::new([k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiset union; corresponds to multiplying Chern monomials.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Multiplicity of each part value, as `(value, count)` in descending value order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n`, in ascending graded-lex order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out.sort();
        out
    }

    /// Manifest key form: parts joined by commas, descending (`"2,1"`).
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Monomial form with ascending indices and powers (`"c1^2*c2"`); `"1"` when empty.
    pub fn monomial_label(&self) -> String {
        if self.parts.is_empty() {
            return "1".to_string();
        }
        self.multiplicities()
            .into_iter()
            .rev()
            .map(|(value, count)| {
                if count == 1 {
                    format!("c{value}")
                } else {
                    format!("c{value}^{count}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial_label())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a manifest key such as `"1,1"` or `"2"`. Parts must be positive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || Error::MalformedPartition(s.to_string());
        if s.trim().is_empty() {
            return Err(malformed());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let part: u32 = piece.trim().parse().map_err(|_| malformed())?;
            if part == 0 {
                return Err(malformed());
            }
            parts.push(part);
        }
        Ok(Partition::new(parts))
    }
}
