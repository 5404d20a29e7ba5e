//! The ring of an m-colored circle: evaluation coordinates on size-m subsets
//! of Σ, the two Schur bases {S_λ(X)} and {S_λ(X−Σ)} for λ in the
//! (m, N−m)-box, and the ζ functional pairing them through complementary
//! partitions.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::rational::Rational;
use crate::symkit::partition::{partitions_in_box, Partition};
use crate::symkit::scalar::{complete_diff_pair, schur_values};
use crate::symkit::{binomial, RootSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("color m={m} out of range 1..={n}")]
    BadColor { m: usize, n: usize },
    #[error("partition {0} outside the ({1},{2}) box")]
    BoxViolation(Partition, usize, usize),
    #[error("elements belong to different rings")]
    RingMismatch,
}

/// Ring descriptor for an m-colored circle over the root set Σ.
#[derive(Debug)]
pub struct CircleRing {
    sigma: RootSet,
    m: usize,
    /// Size-m subsets of Σ, ascending bitmask order; coordinate index space.
    subsets: Vec<u32>,
    /// Λ_{m,N−m} in the fixed box order; Schur index space.
    schur_basis: Vec<Partition>,
    eval_matrix: OnceLock<RatMatrix>,
    diff_matrix: OnceLock<RatMatrix>,
}

/// A ring element in evaluation coordinates: its value at X = Ω for every
/// size-m subset Ω ⊆ Σ.
#[derive(Clone, Debug)]
pub struct CircleRingElement {
    ring: Arc<CircleRing>,
    coords: Vec<Rational>,
}

impl PartialEq for CircleRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.m == other.ring.m
            && self.ring.sigma == other.ring.sigma
            && self.coords == other.coords
    }
}

impl Eq for CircleRingElement {}

impl CircleRing {
    pub fn new(m: usize, sigma: RootSet) -> Result<Arc<Self>, RingError> {
        let n = sigma.n();
        if m == 0 || m > n {
            return Err(RingError::BadColor { m, n });
        }
        Ok(Arc::new(CircleRing {
            subsets: sigma.subsets_of_size(m),
            schur_basis: partitions_in_box(m, n - m),
            sigma,
            m,
            eval_matrix: OnceLock::new(),
            diff_matrix: OnceLock::new(),
        }))
    }

    pub fn dimension(&self) -> usize {
        self.subsets.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn sigma(&self) -> &RootSet {
        &self.sigma
    }

    pub fn subsets(&self) -> &[u32] {
        &self.subsets
    }

    pub fn schur_basis(&self) -> &[Partition] {
        &self.schur_basis
    }

    /// Quantum-filtration shift of the circle, recorded as metadata:
    /// the circle ring carries a global shift of −m(N−m).
    pub fn quantum_shift(&self) -> i64 {
        -((self.m * (self.n() - self.m)) as i64)
    }

    fn same_ring(a: &CircleRingElement, b: &CircleRingElement) -> Result<(), RingError> {
        if a.ring.m == b.ring.m && a.ring.sigma == b.ring.sigma {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    fn check_box(&self, lambda: &Partition) -> Result<(), RingError> {
        let n = self.n() - self.m;
        if lambda.fits_in_box(self.m, n) {
            Ok(())
        } else {
            Err(RingError::BoxViolation(lambda.clone(), self.m, n))
        }
    }

    /// S_λ(Ω−Σ) for a subset mask.
    fn schur_diff_at(&self, lambda: &Partition, omega: u32) -> Rational {
        complete_schur_diff(lambda, &self.sigma.subset_values(omega), self.sigma.roots())
    }

    /// The element with Ω-coordinate S_λ(Ω) (difference = false) or
    /// S_λ(Ω−Σ) (difference = true). λ must lie in Λ_{m,N−m}.
    pub fn from_schur(
        self: &Arc<Self>,
        lambda: &Partition,
        difference: bool,
    ) -> Result<CircleRingElement, RingError> {
        self.check_box(lambda)?;
        let coords = self
            .subsets
            .iter()
            .map(|&omega| {
                if difference {
                    self.schur_diff_at(lambda, omega)
                } else {
                    schur_values(lambda, &self.sigma.subset_values(omega))
                }
            })
            .collect();
        Ok(CircleRingElement {
            ring: Arc::clone(self),
            coords,
        })
    }

    pub fn zero(self: &Arc<Self>) -> CircleRingElement {
        CircleRingElement {
            ring: Arc::clone(self),
            coords: vec![Rational::zero(); self.dimension()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CircleRingElement {
        CircleRingElement {
            ring: Arc::clone(self),
            coords: vec![Rational::one(); self.dimension()],
        }
    }

    /// The idempotent e_Ω: indicator coordinates of one subset.
    pub fn idempotent(self: &Arc<Self>, omega: u32) -> CircleRingElement {
        let coords = self
            .subsets
            .iter()
            .map(|&o| {
                if o == omega {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        CircleRingElement {
            ring: Arc::clone(self),
            coords,
        }
    }

    pub fn from_coords(self: &Arc<Self>, coords: Vec<Rational>) -> CircleRingElement {
        assert_eq!(coords.len(), self.dimension());
        CircleRingElement {
            ring: Arc::clone(self),
            coords,
        }
    }

    /// Coordinate-wise product. Sound because elements are identified with
    /// their values under the evaluation homomorphisms at states.
    pub fn multiply(
        &self,
        a: &CircleRingElement,
        b: &CircleRingElement,
    ) -> Result<CircleRingElement, RingError> {
        Self::same_ring(a, b)?;
        Ok(CircleRingElement {
            ring: Arc::clone(&a.ring),
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).collect(),
        })
    }

    pub fn add(
        &self,
        a: &CircleRingElement,
        b: &CircleRingElement,
    ) -> Result<CircleRingElement, RingError> {
        Self::same_ring(a, b)?;
        Ok(CircleRingElement {
            ring: Arc::clone(&a.ring),
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        })
    }

    /// `M[Ω][λ] = S_λ(Ω)`: the transition between Schur coordinates and
    /// evaluation coordinates. Invertible (the Schur family is a basis);
    /// invertibility is asserted on first use.
    pub fn change_of_basis_matrix(self: &Arc<Self>) -> &RatMatrix {
        self.eval_matrix.get_or_init(|| {
            let m = RatMatrix::from_rows(
                self.subsets
                    .iter()
                    .map(|&omega| {
                        let values = self.sigma.subset_values(omega);
                        self.schur_basis
                            .iter()
                            .map(|lam| schur_values(lam, &values))
                            .collect()
                    })
                    .collect(),
            );
            assert!(!m.det().is_zero(), "Schur evaluation matrix is singular");
            m
        })
    }

    /// `M[Ω][λ] = S_λ(Ω−Σ)`: evaluation matrix of the difference Schur basis.
    pub fn difference_basis_matrix(self: &Arc<Self>) -> &RatMatrix {
        self.diff_matrix.get_or_init(|| {
            let m = RatMatrix::from_rows(
                self.subsets
                    .iter()
                    .map(|&omega| {
                        self.schur_basis
                            .iter()
                            .map(|lam| self.schur_diff_at(lam, omega))
                            .collect()
                    })
                    .collect(),
            );
            assert!(!m.det().is_zero(), "difference Schur matrix is singular");
            m
        })
    }

    /// The linear functional ζ_Σ, characterized by
    /// ζ(S_λ(X)·S_μ(X−Σ)) = δ_{μ,λ^c}: expand x in the basis {S_μ(X−Σ)}
    /// and read off the coefficient of the full-box partition.
    pub fn zeta(self: &Arc<Self>, x: &CircleRingElement) -> Result<Rational, RingError> {
        if x.ring.m != self.m || x.ring.sigma != self.sigma {
            return Err(RingError::RingMismatch);
        }
        let coeffs = self
            .difference_basis_matrix()
            .solve(&x.coords)
            .expect("difference Schur basis spans the ring");
        Ok(coeffs.last().cloned().unwrap_or_else(Rational::zero))
    }

    /// `P[λ][μ] = ζ(S_λ(X)·S_μ(X−Σ))`, the pairing matrix of the two bases.
    /// Equals the permutation matrix of λ ↦ λ^c.
    pub fn zeta_pairing_matrix(self: &Arc<Self>) -> Result<RatMatrix, RingError> {
        let d = self.dimension();
        let mut rows = Vec::with_capacity(d);
        for lam in &self.schur_basis {
            let a = self.from_schur(lam, false)?;
            let mut row = Vec::with_capacity(d);
            for mu in &self.schur_basis {
                let b = self.from_schur(mu, true)?;
                let prod = self.multiply(&a, &b)?;
                row.push(self.zeta(&prod)?);
            }
            rows.push(row);
        }
        Ok(RatMatrix::from_rows(rows))
    }

    /// Expected dimension C(N, m).
    pub fn expected_dimension(&self) -> usize {
        binomial(self.n(), self.m)
    }
}

impl CircleRingElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn ring(&self) -> &Arc<CircleRing> {
        &self.ring
    }
}

/// S_λ(Ω − Σ) with Ω given by values (wrapper for the scalar engine).
fn complete_schur_diff(lambda: &Partition, omega: &[Rational], sigma: &[Rational]) -> Rational {
    let rows = lambda.len();
    if rows == 0 {
        return Rational::one();
    }
    let m = RatMatrix::from_rows(
        (0..rows)
            .map(|i| {
                (0..rows)
                    .map(|j| {
                        let k = lambda.part(i) as i64 - i as i64 + j as i64;
                        complete_diff_pair(k, omega, sigma)
                    })
                    .collect()
            })
            .collect(),
    );
    m.det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ring(n: usize, m: usize) -> Arc<CircleRing> {
        CircleRing::new(m, RootSet::standard(n)).unwrap()
    }

    #[test]
    fn worked_example_n2_m1() {
        let r = ring(2, 1);
        assert_eq!(r.dimension(), 2);
        let lam1 = Partition::new(vec![1]).unwrap();
        let el = r.from_schur(&lam1, false).unwrap();
        assert_eq!(el.coords(), &[int(0), int(1)]);
        let m = r.change_of_basis_matrix();
        assert_eq!(
            m.to_rows(),
            vec![vec![int(1), int(0)], vec![int(1), int(1)]]
        );
    }

    #[test]
    fn box_violation_rejected() {
        let r = ring(3, 1);
        let lam = Partition::new(vec![3]).unwrap(); // Λ_{1,2} allows ≤ 2
        assert!(matches!(
            r.from_schur(&lam, false),
            Err(RingError::BoxViolation(..))
        ));
    }

    #[test]
    fn m_equals_n_is_one_dimensional() {
        let r = ring(3, 3);
        assert_eq!(r.dimension(), 1);
        assert_eq!(r.change_of_basis_matrix().to_rows(), vec![vec![int(1)]]);
    }

    #[test]
    fn empty_partition_is_all_ones() {
        for (n, m) in [(2, 1), (3, 2), (4, 2)] {
            let r = ring(n, m);
            for diff in [false, true] {
                let el = r.from_schur(&Partition::empty(), diff).unwrap();
                assert!(el.coords().iter().all(|c| c.is_one()));
            }
        }
    }

    #[test]
    fn multiplication_laws() {
        let r = ring(4, 2);
        let one = r.one();
        let subsets = r.subsets().to_vec();
        let a = r
            .from_schur(&Partition::new(vec![2, 1]).unwrap(), false)
            .unwrap();
        assert_eq!(r.multiply(&a, &one).unwrap(), a);
        for &o in &subsets {
            let e = r.idempotent(o);
            assert_eq!(r.multiply(&e, &e).unwrap(), e);
            for &o2 in &subsets {
                if o2 != o {
                    let e2 = r.idempotent(o2);
                    assert!(r.multiply(&e, &e2).unwrap().is_zero());
                }
            }
        }
        // commutative + associative on a few elements
        let b = r
            .from_schur(&Partition::new(vec![1]).unwrap(), true)
            .unwrap();
        let c = r
            .from_schur(&Partition::new(vec![2]).unwrap(), false)
            .unwrap();
        assert_eq!(r.multiply(&a, &b).unwrap(), r.multiply(&b, &a).unwrap());
        let ab_c = r.multiply(&r.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = r.multiply(&a, &r.multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn ring_mismatch_detected() {
        let r1 = ring(3, 1);
        let r2 = ring(3, 2);
        let a = r1.one();
        let b = r2.one();
        assert_eq!(r1.multiply(&a, &b), Err(RingError::RingMismatch));
    }

    #[test]
    fn zeta_duality_small() {
        // eq: ζ(S_λ(X)·S_μ(X−Σ)) = [μ = λ^c], checked for N=3, m=1.
        let r = ring(3, 1);
        let n_minus_m = 2;
        for (i, lam) in r.schur_basis().to_vec().iter().enumerate() {
            for (j, mu) in r.schur_basis().to_vec().iter().enumerate() {
                let prod = r
                    .multiply(
                        &r.from_schur(lam, false).unwrap(),
                        &r.from_schur(mu, true).unwrap(),
                    )
                    .unwrap();
                let z = r.zeta(&prod).unwrap();
                let expect = if *mu == lam.box_complement(1, n_minus_m).unwrap() {
                    int(1)
                } else {
                    int(0)
                };
                assert_eq!(z, expect, "λ idx {i}, μ idx {j}");
            }
        }
        assert_eq!(r.zeta(&r.zero()).unwrap(), int(0));
    }

    #[test]
    fn both_schur_families_have_full_rank() {
        for n in 2..=6usize {
            for m in 1..=n {
                let r = ring(n, m);
                assert_eq!(r.dimension(), r.expected_dimension());
                assert_eq!(r.change_of_basis_matrix().rank(), r.dimension());
                assert_eq!(r.difference_basis_matrix().rank(), r.dimension());
            }
        }
    }
}
