//! Integer partitions: generation, canonical encoding, dominance order,
//! conjugation, and hook lengths.
//!
//! Partitions index everything else in this crate: symmetric-function bases,
//! character tables, stable-partition types, and spider shapes. The canonical
//! encoding is a dense weakly decreasing sequence of positive parts with no
//! trailing zeros, and the fixed enumeration order is reverse-lexicographic:
//! `(n)` first, `(1,...,1)` last.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of a non-negative integer: weakly decreasing positive parts.
///
/// The weight (sum of parts) is cached at construction. The empty partition
/// (weight 0) is valid. Ordering follows the fixed enumeration order: weight
/// ascending, then reverse-lexicographic within a weight, so that sorted maps
/// iterate in the same order `partitions_of` generates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from its parts, validating the canonical form.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for window in parts.windows(2) {
            if window[0] < window[1] {
                return Err(Error::InvalidArgument("partition parts must be weakly decreasing"));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive"));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0 }
    }

    /// Builds a partition from an arbitrary bag of sizes: zeros are dropped
    /// and the rest sorted descending.
    pub fn from_unsorted(mut sizes: Vec<usize>) -> Self {
        sizes.retain(|&s| s > 0);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let weight = sizes.iter().sum();
        Partition { parts: sizes, weight }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight `n` (sum of parts).
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The conjugate (transposed Young diagram). An involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        let weight = self.weight;
        Partition { parts, weight }
    }

    /// Hook lengths of the Young diagram, row by row.
    ///
    /// The hook of cell `(i, j)` counts the cell itself, the cells to its
    /// right in row `i`, and the cells below it in column `j`.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j) + (conj.parts[j] - i) - 1)
                    .collect()
            })
            .collect()
    }

    /// Multiplicities of each part value: pairs `(value, multiplicity)` with
    /// values descending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

/// Canonical text form: comma-separated decimal parts, e.g. `"9,9,2"`.
/// The empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parse_err = |reason| Error::ParsePartition { text: s.to_owned(), reason };
        let mut parts = Vec::new();
        for field in s.split(',') {
            let p: usize = field
                .parse()
                .map_err(|_| parse_err("parts must be decimal integers"))?;
            if p == 0 {
                return Err(parse_err("parts must be positive"));
            }
            if let Some(&prev) = parts.last() {
                if prev < p {
                    return Err(parse_err("parts must be weakly decreasing"));
                }
            }
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order:
/// `(n)` first, `(1^n)` last. `partitions_of(0)` is the singleton list
/// holding the empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    generate(n, n, &mut stack, &mut out);
    out
}

fn generate(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
            weight: stack.iter().sum(),
        });
        return;
    }
    let mut p = remaining.min(max_part);
    while p >= 1 {
        stack.push(p);
        generate(remaining - p, p, stack, out);
        stack.pop();
        p -= 1;
    }
}

/// Dominance order: `lam` dominates `mu` iff every prefix sum of `lam` is at
/// least the corresponding prefix sum of `mu` (shorter sequence padded with
/// zeros). Defined only for partitions of equal weight.
pub fn dominates(lam: &Partition, mu: &Partition) -> Result<bool> {
    if lam.weight != mu.weight {
        return Err(Error::WeightMismatch(lam.weight, mu.weight));
    }
    let mut lam_sum = 0usize;
    let mut mu_sum = 0usize;
    let rows = lam.len().max(mu.len());
    for i in 0..rows {
        lam_sum += lam.parts.get(i).copied().unwrap_or(0);
        mu_sum += mu.parts.get(i).copied().unwrap_or(0);
        if lam_sum < mu_sum {
            return Ok(false);
        }
    }
    Ok(true)
}
