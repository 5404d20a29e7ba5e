//! Chen–Louck interpolation for symmetric polynomials over subsets of the
//! root set, and the interpolation idempotent basis.
//!
//! The basis element attached to a size-m subset Ω ⊆ Σ is
//!
//!   b_Ω(X) = ∏_{x∈X, r∈Σ∖Ω}(x−r) / ∏_{s∈Ω, r∈Σ∖Ω}(s−r),
//!
//! which takes value 1 at X = Ω and 0 at every other size-m subset of Σ.
//! Any symmetric polynomial with partial degrees ≤ 2(N−m) equals
//! Σ_Ω f(Ω)·b_Ω.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::rational::Rational;
use crate::symkit::sympoly::SymPoly;
use crate::symkit::RootSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InterpError {
    #[error("m={m} out of range 1..={n}")]
    BadSize { m: usize, n: usize },
    #[error("partial degree {got} in variable {var} exceeds the bound 2(N−m) = {bound}")]
    DegreeBound {
        var: usize,
        got: usize,
        bound: usize,
    },
}

/// One interpolation basis element: numerator polynomial (in the elementary
/// generators of a single alphabet of size m) and scalar denominator.
#[derive(Clone, Debug)]
pub struct InterpolationBasisElement {
    /// Subset of Σ as a bitmask over root indices.
    pub omega: u32,
    /// ∏_{x∈X, r∈Σ∖Ω}(x−r), expanded in elementary generators.
    pub numerator: SymPoly,
    /// ∏_{s∈Ω, r∈Σ∖Ω}(s−r). Nonzero since the roots are distinct.
    pub denominator: Rational,
}

impl InterpolationBasisElement {
    /// The full basis polynomial numerator/denominator.
    pub fn poly(&self) -> SymPoly {
        self.numerator.scale(&self.denominator.recip())
    }

    /// Value at the subset with the given values.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        self.numerator.eval_single(values) / self.denominator.clone()
    }
}

/// The interpolation basis for (m, Σ): one element per size-m subset of Σ,
/// in ascending bitmask order.
#[derive(Clone, Debug)]
pub struct InterpolationBasis {
    pub m: usize,
    pub sigma: RootSet,
    pub elements: Vec<InterpolationBasisElement>,
}

impl InterpolationBasis {
    fn build(m: usize, sigma: &RootSet) -> Self {
        let n = sigma.n();
        let mut elements = Vec::new();
        for omega in sigma.subsets_of_size(m) {
            let mut numerator = SymPoly::one();
            let mut denominator = Rational::one();
            let inside = sigma.subset_values(omega);
            for i in 0..n {
                if omega >> i & 1 == 1 {
                    continue;
                }
                let r = sigma.root(i);
                numerator = numerator.mul(&SymPoly::linear_factor(0, m, r));
                for s in &inside {
                    denominator *= s - r;
                }
            }
            elements.push(InterpolationBasisElement {
                omega,
                numerator,
                denominator,
            });
        }
        InterpolationBasis {
            m,
            sigma: sigma.clone(),
            elements,
        }
    }
}

type BasisCache = Mutex<HashMap<(usize, RootSet), Arc<InterpolationBasis>>>;

fn cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The interpolation basis for (m, Σ), computed once and shared.
pub fn basis(m: usize, sigma: &RootSet) -> Result<Arc<InterpolationBasis>, InterpError> {
    if m == 0 || m > sigma.n() {
        return Err(InterpError::BadSize { m, n: sigma.n() });
    }
    let key = (m, sigma.clone());
    let mut guard = cache().lock().unwrap();
    let entry = guard
        .entry(key)
        .or_insert_with(|| Arc::new(InterpolationBasis::build(m, sigma)));
    Ok(Arc::clone(entry))
}

/// Interpolates the unique symmetric polynomial of partial degrees ≤ 2(N−m)
/// through the values of `f` on all size-m subsets of Σ. Subsets are passed
/// to `f` in ascending bitmask order, as value lists in root-index order.
pub fn interpolate(
    m: usize,
    sigma: &RootSet,
    mut f: impl FnMut(u32, &[Rational]) -> Rational,
) -> Result<SymPoly, InterpError> {
    let basis = basis(m, sigma)?;
    let mut acc = SymPoly::zero();
    for el in &basis.elements {
        let values = sigma.subset_values(el.omega);
        let fv = f(el.omega, &values);
        if fv.is_zero() {
            continue;
        }
        acc = acc.add(&el.numerator.scale(&(fv / el.denominator.clone())));
    }
    Ok(acc)
}

/// Checks that `g` (symmetric, one alphabet of size m, partial degrees
/// within the bound) is reproduced identically by interpolation through its
/// own subset evaluations. Rejects polynomials violating the degree bound,
/// reporting the offending variable.
pub fn reconstruct_check(g: &SymPoly, m: usize, sigma: &RootSet) -> Result<bool, InterpError> {
    if m == 0 || m > sigma.n() {
        return Err(InterpError::BadSize { m, n: sigma.n() });
    }
    let bound = 2 * (sigma.n() - m);
    let partials = g.expand_single(m).partial_degrees();
    for (var, got) in partials.into_iter().enumerate() {
        if got > bound {
            return Err(InterpError::DegreeBound { var, got, bound });
        }
    }
    let rebuilt = interpolate(m, sigma, |_, values| g.eval_single(values))?;
    Ok(rebuilt == *g)
}

/// Σ_Ω b_Ω as a canonical-form polynomial; interpolating f ≡ 1 shows it
/// equals 1.
pub fn partition_of_unity(m: usize, sigma: &RootSet) -> Result<SymPoly, InterpError> {
    interpolate(m, sigma, |_, _| Rational::one())
}
