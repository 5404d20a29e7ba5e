//! Exact symmetric-function engine: elementary/complete/power-sum values,
//! Schur polynomials, difference alphabets X − Σ, and evaluation at subsets
//! of the root set.

pub mod affine;
pub mod partition;
pub mod scalar;
pub mod sympoly;

#[cfg(test)]
pub(crate) mod ssyt_oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

pub use affine::{affine_elementary_substitution, AffineError};
pub use partition::{partitions_in_box, Partition, PartitionError};
pub use scalar::{
    complete_diff_pair, complete_difference, complete_values, elementary_values, power_values,
    schur_box_ratio, schur_difference, schur_values, ScalarError,
};
pub use sympoly::{Gen, MonomialPoly, SymPoly};

/// Hard ceiling on N for enumeration-heavy operations. Root subsets are
/// bitmasks over root indices, and state spaces grow as products of C(N, m),
/// so larger N is rejected up front rather than allowed to blow up.
pub const MAX_ROOTS: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSetError {
    #[error("need at least 2 roots, got {0}")]
    TooFew(usize),
    #[error("at most {MAX_ROOTS} roots supported, got {0}")]
    TooMany(usize),
    #[error("roots must be pairwise distinct, {0} repeats")]
    Repeated(Rational),
    #[error("scale factor a must be nonzero")]
    ZeroScale,
}

/// An ordered set of N pairwise distinct rationals, the ground alphabet of
/// the state calculus. Subsets are addressed as bitmasks over root indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct RootSet {
    roots: Vec<Rational>,
}

impl RootSet {
    pub fn new(roots: Vec<Rational>) -> Result<Self, RootSetError> {
        if roots.len() < 2 {
            return Err(RootSetError::TooFew(roots.len()));
        }
        if roots.len() > MAX_ROOTS {
            return Err(RootSetError::TooMany(roots.len()));
        }
        for (i, r) in roots.iter().enumerate() {
            if roots[i + 1..].contains(r) {
                return Err(RootSetError::Repeated(r.clone()));
            }
        }
        Ok(RootSet { roots })
    }

    /// The default root set {0, 1, ..., N−1}.
    pub fn standard(n: usize) -> Self {
        RootSet::new((0..n as i64).map(Rational::from_int).collect())
            .expect("standard root set is valid")
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Rational] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Rational {
        &self.roots[i]
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    /// Values of the subset encoded by `mask`, in root-index order.
    pub fn subset_values(&self, mask: u32) -> Vec<Rational> {
        (0..self.n())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.roots[i].clone())
            .collect()
    }

    /// All size-m subsets of the root set, as bitmasks in ascending numeric
    /// order. This fixed order indexes evaluation coordinates everywhere.
    pub fn subsets_of_size(&self, m: usize) -> Vec<u32> {
        subsets_of_size(self.n(), m)
    }

    /// The relabeled root set {a·r + b | r ∈ Σ}. Requires a ≠ 0.
    pub fn affine_image(&self, a: &Rational, b: &Rational) -> Result<RootSet, RootSetError> {
        if a.is_zero() {
            return Err(RootSetError::ZeroScale);
        }
        RootSet::new(self.roots.iter().map(|r| a * r + b).collect())
    }
}

impl TryFrom<Vec<Rational>> for RootSet {
    type Error = RootSetError;
    fn try_from(roots: Vec<Rational>) -> Result<Self, Self::Error> {
        RootSet::new(roots)
    }
}

impl From<RootSet> for Vec<Rational> {
    fn from(s: RootSet) -> Vec<Rational> {
        s.roots
    }
}

/// An alphabet: a finite set of degree-2 indeterminates, identified by name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    pub name: String,
    pub size: usize,
}

impl Alphabet {
    pub fn new(name: impl Into<String>, size: usize) -> Self {
        let a = Alphabet {
            name: name.into(),
            size,
        };
        assert!(a.size >= 1, "alphabet must have at least one indeterminate");
        a
    }
}

/// All size-m subsets of {0..n}, as bitmasks in ascending numeric order.
pub fn subsets_of_size(n: usize, m: usize) -> Vec<u32> {
    assert!(n <= MAX_ROOTS);
    let mut out = Vec::with_capacity(binomial(n, m));
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == m {
            out.push(mask);
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn rootset_validation() {
        assert!(RootSet::new(vec![int(0), int(1)]).is_ok());
        assert_eq!(
            RootSet::new(vec![int(3)]).unwrap_err(),
            RootSetError::TooFew(1)
        );
        assert_eq!(
            RootSet::new(vec![int(1), int(1)]).unwrap_err(),
            RootSetError::Repeated(int(1))
        );
    }

    #[test]
    fn subsets_and_masks() {
        let s = RootSet::standard(4);
        assert_eq!(s.subsets_of_size(2).len(), 6);
        assert_eq!(s.subset_values(0b0101), vec![int(0), int(2)]);
        assert_eq!(s.full_mask(), 0b1111);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn affine_image_permutes_roots() {
        let s = RootSet::standard(3);
        let t = s.affine_image(&int(-1), &int(2)).unwrap();
        assert_eq!(t.roots(), &[int(2), int(1), int(0)]);
        assert!(s.affine_image(&int(0), &int(1)).is_err());
    }
}
