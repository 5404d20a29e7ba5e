//! Integer partitions and the box sets Λ_{m,n}.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be non-increasing: {0:?}")]
    NotSorted(Vec<usize>),
    #[error("partition {0} does not fit in the {1}x{2} box")]
    OutsideBox(Partition, usize, usize),
}

/// A partition: a non-increasing sequence of positive integers. Trailing
/// zeros are stripped, so the empty partition is `parts == []`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotSorted(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// The m×n rectangle λ_{m,n} = (n, n, ..., n) with m parts.
    pub fn rectangle(m: usize, n: usize) -> Self {
        if n == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![n; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (0-indexed), zero beyond the last.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fits_in_box(&self, m: usize, n: usize) -> bool {
        self.parts.len() <= m && self.part(0) <= n
    }

    pub fn check_in_box(&self, m: usize, n: usize) -> Result<(), PartitionError> {
        if self.fits_in_box(m, n) {
            Ok(())
        } else {
            Err(PartitionError::OutsideBox(self.clone(), m, n))
        }
    }

    /// The conjugate partition λ'.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// The complement λ^c = (n − λ_m, ..., n − λ_1) inside the m×n box.
    pub fn box_complement(&self, m: usize, n: usize) -> Result<Partition, PartitionError> {
        self.check_in_box(m, n)?;
        let mut parts: Vec<usize> = (0..m).rev().map(|i| n - self.part(i)).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// μ ⊆ λ as Young diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        (0..mu.len()).all(|i| mu.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions in Λ_{m,n} (at most m parts, each ≤ n), in ascending
/// lexicographic order of the padded part vector. This fixed order indexes
/// the rows/columns of every basis matrix in the crate.
pub fn partitions_in_box(m: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(m: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == m {
            return;
        }
        let hi = if cur.is_empty() {
            n
        } else {
            *cur.last().unwrap()
        };
        for p in 1..=hi {
            cur.push(p);
            out.push(Partition { parts: cur.clone() });
            rec(m, n, cur, out);
            cur.pop();
        }
    }
    out.push(Partition::empty());
    // Generate then sort into the documented order.
    rec(m, n, &mut cur, &mut out);
    out.sort_by(|a, b| {
        let pa: Vec<usize> = (0..m).map(|i| a.part(i)).collect();
        let pb: Vec<usize> = (0..m).map(|i| b.part(i)).collect();
        pa.cmp(&pb)
    });
    out
}
