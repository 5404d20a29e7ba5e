//! Symbolic small-case reducer for the idempotent algebra.
//!
//! The evaluation-coordinate ring takes the direct-sum decomposition as
//! definitional, so these checks re-derive the algebra on the polynomial
//! side, as explicit ideal-membership certificates found by exact linear
//! solves. Per edge of color m the working ideal is
//! I = (h_{N+1−m}(X−Σ), ..., h_N(X−Σ)) in Sym(X), and the certificates are:
//!
//!   (A) b_Ω² − b_Ω ∈ I                    (idempotency),
//!   (B) b_Ω·b_Ω′ ∈ I for Ω ≠ Ω′          (orthogonality),
//!   (C) E_k·b_Ω − e_k(Ω)·b_Ω ∈ I          (multiplication rule),
//!   (D) Σ_Ω b_Ω = 1 exactly in Sym(X)     (partition of unity).
//!
//! Because Q_φ = ∏_e b_{φ(e)}(X_e) over disjoint alphabets, (A)–(C)
//! propagate factorwise: a product identity holds modulo the sum of the
//! per-edge ideals as soon as it holds per factor. The vanishing of Q_φ for
//! a non-admissible pre-state φ follows by locating a vertex where some
//! elementary symmetric value differs across the vertex (a divisor of a
//! vertex-ideal generator X̃_p − Ỹ_p) or some h_{N+1−p}(in-values − Σ) is
//! nonzero (a generator U_p up to nonzero scale), which rescales Q_φ into
//! the ideal. The located witness is returned for inspection.

use thiserror::Error;

use crate::diagrams::MoyGraph;
use crate::interp;
use crate::rational::Rational;
use crate::statecalc::{all_pre_states, is_state, State};
use crate::symkit::scalar::{complete_difference, elementary_values};
use crate::symkit::sympoly::SymPoly;
use crate::symkit::RootSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("no cofactor certificate: {0} is not exhibited inside the edge ideal")]
    NotInIdeal(String),
    #[error("partition of unity fails for m={m}")]
    PartitionOfUnity { m: usize },
    #[error("certificate verification failed for {0}")]
    BadCertificate(String),
    #[error("no vanishing witness found for a non-admissible pre-state (vertex sweep exhausted)")]
    NoVanishingWitness,
    #[error(transparent)]
    Interp(#[from] interp::InterpError),
}

/// An explicit ideal-membership certificate: target = Σ cofactor_i · gen_i,
/// verified by re-multiplication.
#[derive(Debug, Clone)]
pub struct IdealMembership {
    pub cofactors: Vec<SymPoly>,
}

/// Generators h_{N+1−m}(X−Σ), ..., h_N(X−Σ) of the edge ideal for color m,
/// in elementary generators of a single alphabet of size m.
pub fn edge_ideal_generators(m: usize, sigma: &RootSet) -> Vec<SymPoly> {
    let n = sigma.n();
    (n + 1 - m..=n)
        .map(|k| SymPoly::complete_minus_values(0, m, k, sigma.roots()))
        .collect()
}

/// All exponent vectors of E-monomials in m generators with doubled degree
/// ≤ `max_degree`, i.e. Σ 2·k·a_k ≤ max_degree.
fn monomial_exponents(m: usize, max_degree: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; m]];
    for k in 1..=m {
        let mut next = Vec::new();
        for exps in &out {
            let used: usize = exps
                .iter()
                .enumerate()
                .map(|(i, e)| 2 * (i + 1) * *e as usize)
                .sum();
            let mut a = 0u32;
            loop {
                if used + 2 * k * a as usize > max_degree {
                    break;
                }
                let mut v = exps.clone();
                v[k - 1] = a;
                next.push(v);
                a += 1;
            }
        }
        out = next;
    }
    out
}

fn monomial_poly(exps: &[u32]) -> SymPoly {
    let mut p = SymPoly::one();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            p = p.mul(&SymPoly::gen(0, i + 1));
        }
    }
    p
}

/// Searches for cofactors with Σ cofactor_i·gen_i = target by exact linear
/// solve over the E-monomial coefficient space, then verifies the found
/// certificate by re-multiplication.
pub fn prove_ideal_membership(
    target: &SymPoly,
    generators: &[SymPoly],
    m: usize,
    label: &str,
) -> Result<IdealMembership, SymbolicError> {
    if target.is_zero() {
        return Ok(IdealMembership {
            cofactors: vec![SymPoly::zero(); generators.len()],
        });
    }
    let degree = target.degree().unwrap_or(0);

    // Column space: one unknown per (generator, cofactor monomial).
    let mut columns: Vec<SymPoly> = Vec::new();
    let mut column_source: Vec<(usize, Vec<u32>)> = Vec::new();
    for (gi, g) in generators.iter().enumerate() {
        let gdeg = g.degree().unwrap_or(0);
        if gdeg > degree {
            continue;
        }
        for exps in monomial_exponents(m, degree - gdeg) {
            columns.push(monomial_poly(&exps).mul(g));
            column_source.push((gi, exps));
        }
    }

    // Row space: every E-monomial appearing anywhere.
    let mut rows: Vec<crate::symkit::sympoly::Mono> = Vec::new();
    for p in columns.iter().chain(std::iter::once(target)) {
        for (mono, _) in p.terms() {
            if !rows.contains(mono) {
                rows.push(mono.clone());
            }
        }
    }
    rows.sort();

    let coeff = |p: &SymPoly, mono: &crate::symkit::sympoly::Mono| -> Rational {
        p.terms()
            .find(|(m2, _)| *m2 == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    };
    let matrix = crate::linalg::RatMatrix::from_rows(
        rows.iter()
            .map(|mono| columns.iter().map(|col| coeff(col, mono)).collect())
            .collect(),
    );
    let rhs: Vec<Rational> = rows.iter().map(|mono| coeff(target, mono)).collect();
    let solution = matrix
        .solve(&rhs)
        .ok_or_else(|| SymbolicError::NotInIdeal(label.to_string()))?;

    let mut cofactors = vec![SymPoly::zero(); generators.len()];
    for (x, (gi, exps)) in solution.iter().zip(&column_source) {
        if !x.is_zero() {
            cofactors[*gi] = cofactors[*gi].add(&monomial_poly(exps).scale(x));
        }
    }
    // Verify the certificate independently of the solver.
    let mut rebuilt = SymPoly::zero();
    for (c, g) in cofactors.iter().zip(generators) {
        rebuilt = rebuilt.add(&c.mul(g));
    }
    if rebuilt != *target {
        return Err(SymbolicError::BadCertificate(label.to_string()));
    }
    Ok(IdealMembership { cofactors })
}

/// Certifies (A)–(D) above for one edge color m over Σ.
pub fn certify_edge_idempotents(m: usize, sigma: &RootSet) -> Result<(), SymbolicError> {
    let basis = interp::basis(m, sigma)?;
    let generators = edge_ideal_generators(m, sigma);
    let polys: Vec<(u32, SymPoly)> = basis
        .elements
        .iter()
        .map(|el| (el.omega, el.poly()))
        .collect();

    // (D) partition of unity, exact in Sym(X).
    let mut sum = SymPoly::zero();
    for (_, b) in &polys {
        sum = sum.add(b);
    }
    if sum != SymPoly::one() {
        return Err(SymbolicError::PartitionOfUnity { m });
    }

    for (i, (omega, b)) in polys.iter().enumerate() {
        // (A) idempotent
        let target = b.mul(b).sub(b);
        prove_ideal_membership(&target, &generators, m, &format!("b_{omega:b}^2 - b"))?;
        // (B) orthogonal
        for (omega2, b2) in polys.iter().skip(i + 1) {
            let target = b.mul(b2);
            prove_ideal_membership(
                &target,
                &generators,
                m,
                &format!("b_{omega:b} · b_{omega2:b}"),
            )?;
        }
        // (C) multiplication rule for each elementary generator
        let values = sigma.subset_values(*omega);
        for k in 1..=m {
            let scalar = elementary_values(k as i64, &values);
            let target = SymPoly::gen(0, k).mul(b).sub(&b.scale(&scalar));
            prove_ideal_membership(&target, &generators, m, &format!("E_{k}·b_{omega:b}"))?;
        }
    }
    Ok(())
}

/// The witness that rescales a non-admissible pre-state idempotent into the
/// graph ideal: a vertex and index p where either the elementary symmetric
/// values differ across the vertex or h_{N+1−p}(in-values − Σ) ≠ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishingWitness {
    ElementaryMismatch {
        vertex: usize,
        p: usize,
        scale: Rational,
    },
    CompleteNonzero {
        vertex: usize,
        p: usize,
        scale: Rational,
    },
}

/// Locates the vanishing witness for a pre-state that is not a state.
pub fn vanishing_witness(
    gamma: &MoyGraph,
    sigma: &RootSet,
    phi: &State,
) -> Result<VanishingWitness, SymbolicError> {
    let d = gamma.graph();
    let n = sigma.n() as i64;
    for (vi, v) in d.vertices().iter().enumerate() {
        let ins: Vec<Rational> = v
            .ins
            .iter()
            .flat_map(|&a| sigma.subset_values(phi.get(a)))
            .collect();
        let outs: Vec<Rational> = v
            .outs
            .iter()
            .flat_map(|&a| sigma.subset_values(phi.get(a)))
            .collect();
        for p in 1..=ins.len() {
            let diff = elementary_values(p as i64, &ins) - elementary_values(p as i64, &outs);
            if !diff.is_zero() {
                return Ok(VanishingWitness::ElementaryMismatch {
                    vertex: vi,
                    p,
                    scale: diff,
                });
            }
        }
        for p in 1..=ins.len() {
            let h = complete_difference(n + 1 - p as i64, &ins, sigma);
            if !h.is_zero() {
                return Ok(VanishingWitness::CompleteNonzero {
                    vertex: vi,
                    p,
                    scale: h,
                });
            }
        }
    }
    Err(SymbolicError::NoVanishingWitness)
}

/// Full symbolic verification of the idempotent algebra on a closed MOY
/// graph: per-edge certificates (A)–(D) for every color in use, and a
/// vanishing witness for every non-admissible pre-state.
pub fn certify_graph_idempotent_algebra(
    gamma: &MoyGraph,
    sigma: &RootSet,
) -> Result<(), SymbolicError> {
    let d = gamma.graph();
    let mut colors: Vec<usize> = d.colors().iter().copied().filter(|&c| c > 0).collect();
    colors.sort_unstable();
    colors.dedup();
    for m in colors {
        certify_edge_idempotents(m, sigma)?;
    }
    for phi in all_pre_states(d, sigma) {
        if !is_state(d, &phi) {
            vanishing_witness(gamma, sigma, &phi)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn ideal_membership_finds_and_rejects() {
        let sigma = RootSet::standard(3);
        let gens = edge_ideal_generators(1, &sigma); // (h_3(x − Σ)), degree 3
                                                     // x·h_3 is in the ideal.
        let target = SymPoly::gen(0, 1).mul(&gens[0]);
        prove_ideal_membership(&target, &gens, 1, "x·h3").unwrap();
        // The constant 1 is not (the quotient is 3-dimensional, not zero).
        assert!(matches!(
            prove_ideal_membership(&SymPoly::one(), &gens, 1, "1"),
            Err(SymbolicError::NotInIdeal(_))
        ));
    }

    #[test]
    fn edge_certificates_small() {
        for n in 2..=4usize {
            let sigma = RootSet::standard(n);
            for m in 1..=2.min(n) {
                certify_edge_idempotents(m, &sigma).unwrap_or_else(|e| {
                    panic!("certificates failed for N={n} m={m}: {e}");
                });
            }
        }
    }

    #[test]
    fn theta_graph_fully_certified() {
        let gamma = MoyGraph::theta(3, 1, 1).unwrap();
        certify_graph_idempotent_algebra(&gamma, &RootSet::standard(3)).unwrap();
    }

    #[test]
    fn witness_examples() {
        let gamma = MoyGraph::theta(3, 1, 1).unwrap();
        let sigma = RootSet::standard(3);
        // Out-edges repeat the root 0 while the in-edge carries {0,1}:
        // p = 1 elementary values are 1 (ins) vs 0 (outs) at vertex 0.
        let phi = State::new(vec![0b001, 0b001, 0b011]);
        let w = vanishing_witness(&gamma, &sigma, &phi).unwrap();
        assert_eq!(
            w,
            VanishingWitness::ElementaryMismatch {
                vertex: 0,
                p: 1,
                scale: int(1)
            }
        );
        // Matching unions but a repeated root: {0},{0} → edge {0,...}? Sizes
        // force distinct masks here, so craft ins {0},{1} vs out {0,2}:
        let phi = State::new(vec![0b001, 0b010, 0b101]);
        assert!(vanishing_witness(&gamma, &sigma, &phi).is_ok());
    }
}
