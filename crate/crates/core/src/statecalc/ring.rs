//! The idempotent ring of a closed MOY graph, realized in evaluation
//! coordinates on its states: an element is the vector of its values under
//! the per-state evaluation homomorphisms, and multiplication is pointwise.
//! The companion `symbolic` module re-derives the defining identities
//! without assuming this representation.

use std::collections::{BTreeMap, HashMap};

use crate::diagrams::{ArcId, MoyGraph};
use crate::interp;
use crate::rational::Rational;
use crate::statecalc::{enumerate_states, GradedStateSet, State, StateError};
use crate::symkit::sympoly::SymPoly;
use crate::symkit::RootSet;

/// Ring handle: the graph, its states, and the per-edge interpolation data.
pub struct StateRing {
    graph: MoyGraph,
    sigma: RootSet,
    states: GradedStateSet,
    /// Values b_Ω(Ω′) of the interpolation basis per edge color, computed
    /// once by evaluating the basis polynomials.
    basis_values: BTreeMap<usize, HashMap<(u32, u32), Rational>>,
}

/// An element of the ring in coordinates over the state list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateRingElement {
    coords: Vec<Rational>,
}

impl StateRingElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }
}

impl StateRing {
    /// Requires a closed MOY graph (no crossings; closedness is enforced by
    /// graph validation) with one marked point per edge.
    pub fn new(gamma: MoyGraph, sigma: &RootSet) -> Result<StateRing, StateError> {
        let states = enumerate_states(gamma.graph(), sigma)?;
        let mut basis_values: BTreeMap<usize, HashMap<(u32, u32), Rational>> = BTreeMap::new();
        for arc in 0..gamma.arc_count() {
            let m = gamma.color(arc);
            if m == 0 || basis_values.contains_key(&m) {
                continue;
            }
            let basis = interp::basis(m, sigma).expect("edge color within 1..=N");
            let mut table = HashMap::new();
            for el in &basis.elements {
                for &other in &sigma.subsets_of_size(m) {
                    table.insert((el.omega, other), el.eval(&sigma.subset_values(other)));
                }
            }
            basis_values.insert(m, table);
        }
        Ok(StateRing {
            graph: gamma,
            sigma: sigma.clone(),
            states,
            basis_values,
        })
    }

    pub fn graph(&self) -> &MoyGraph {
        &self.graph
    }

    pub fn states(&self) -> &GradedStateSet {
        &self.states
    }

    pub fn dimension(&self) -> usize {
        self.states.count()
    }

    pub fn zero(&self) -> StateRingElement {
        StateRingElement {
            coords: vec![Rational::zero(); self.dimension()],
        }
    }

    pub fn one(&self) -> StateRingElement {
        StateRingElement {
            coords: vec![Rational::one(); self.dimension()],
        }
    }

    pub fn add(&self, a: &StateRingElement, b: &StateRingElement) -> StateRingElement {
        StateRingElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn multiply(&self, a: &StateRingElement, b: &StateRingElement) -> StateRingElement {
        StateRingElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).collect(),
        }
    }

    pub fn scale(&self, a: &StateRingElement, c: &Rational) -> StateRingElement {
        StateRingElement {
            coords: a.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// The idempotent Q_φ of a pre-state φ, computed honestly: its
    /// coordinate at each state ψ is the product over edges of the
    /// interpolation basis element of φ(e) evaluated at ψ(e). For states φ
    /// this is the indicator vector; for pre-states outside S(Γ) it is zero.
    pub fn q_pre_state(&self, phi: &State) -> Result<StateRingElement, StateError> {
        crate::statecalc::is_pre_state(self.graph.graph(), phi)?;
        let d = self.graph.graph();
        let coords = self
            .states
            .states()
            .iter()
            .map(|psi| {
                let mut acc = Rational::one();
                for arc in 0..d.arc_count() {
                    if d.color(arc) == 0 {
                        continue; // the empty subset is forced; factor is 1
                    }
                    let table = &self.basis_values[&d.color(arc)];
                    acc *= table[&(phi.get(arc), psi.get(arc))].clone();
                    if acc.is_zero() {
                        break;
                    }
                }
                acc
            })
            .collect();
        Ok(StateRingElement { coords })
    }

    /// Reduces a product of per-edge symmetric polynomials: the coordinate
    /// at state ψ is ∏ f.eval(ψ(arc)). Each factor's polynomial reads its
    /// single alphabet as the alphabet of its arc.
    pub fn reduce(&self, factors: &[(ArcId, SymPoly)]) -> StateRingElement {
        let coords = self
            .states
            .states()
            .iter()
            .map(|psi| {
                factors
                    .iter()
                    .map(|(arc, f)| f.eval_single(&self.sigma.subset_values(psi.get(*arc))))
                    .product()
            })
            .collect();
        StateRingElement { coords }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::statecalc::all_pre_states;
    use crate::symkit::partition::Partition;
    use crate::symkit::scalar::schur_values;

    fn theta_ring() -> StateRing {
        let gamma = MoyGraph::theta(3, 1, 1).unwrap();
        StateRing::new(gamma, &RootSet::standard(3)).unwrap()
    }

    #[test]
    fn idempotent_algebra_in_evaluation_coordinates() {
        let ring = theta_ring();
        let states: Vec<State> = ring.states().states().to_vec();
        let mut sum = ring.zero();
        for (i, phi) in states.iter().enumerate() {
            let q = ring.q_pre_state(phi).unwrap();
            // indicator vector
            for (j, c) in q.coords().iter().enumerate() {
                assert_eq!(*c, if i == j { int(1) } else { int(0) });
            }
            assert_eq!(ring.multiply(&q, &q), q);
            sum = ring.add(&sum, &q);
            for other in states.iter().skip(i + 1) {
                let q2 = ring.q_pre_state(other).unwrap();
                assert!(ring.multiply(&q, &q2).is_zero());
            }
        }
        assert_eq!(sum, ring.one());
    }

    #[test]
    fn non_admissible_pre_states_reduce_to_zero() {
        let ring = theta_ring();
        let d = ring.graph().graph().clone();
        let mut non_admissible = 0;
        for phi in all_pre_states(&d, &RootSet::standard(3)) {
            let q = ring.q_pre_state(&phi).unwrap();
            if crate::statecalc::is_state(&d, &phi) {
                assert!(!q.is_zero());
            } else {
                non_admissible += 1;
                assert!(q.is_zero());
            }
        }
        assert!(non_admissible > 0);
    }

    #[test]
    fn reduce_evaluates_schur_factors() {
        let ring = theta_ring();
        let lam = Partition::new(vec![1]).unwrap();
        // S_λ on the 2-colored edge (arc 2).
        let f = SymPoly::schur(0, 2, &lam);
        let el = ring.reduce(&[(2, f)]);
        for (idx, psi) in ring.states().states().iter().enumerate() {
            let expect = schur_values(&lam, &ring.sigma.subset_values(psi.get(2)));
            assert_eq!(el.coords()[idx], expect);
        }
    }

    #[test]
    fn reduce_is_a_ring_homomorphism() {
        let ring = theta_ring();
        let f = SymPoly::gen(0, 1);
        let g = SymPoly::gen(0, 2).add(&SymPoly::constant(int(3)));
        // reduce(f·g) = reduce(f)·reduce(g) on the same edge
        let fg = ring.reduce(&[(2, f.mul(&g))]);
        let sep = ring.multiply(
            &ring.reduce(&[(2, f.clone())]),
            &ring.reduce(&[(2, g.clone())]),
        );
        assert_eq!(fg, sep);
        // and across different edges
        let cross = ring.reduce(&[(0, f.clone()), (1, g.clone())]);
        let sep2 = ring.multiply(&ring.reduce(&[(0, f)]), &ring.reduce(&[(1, g)]));
        assert_eq!(cross, sep2);
    }
}
