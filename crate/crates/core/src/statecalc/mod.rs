//! State calculus on colored diagrams: enumeration of pre-states,
//! quasi-states, and states; admissibility; homological gradings; crossing
//! resolutions; grading shifts; root relabeling; and state dualities.
//!
//! A state assigns to every arc a subset of Σ of size equal to the arc's
//! color, admissibly: at a vertex the in-subsets are pairwise disjoint, the
//! out-subsets are pairwise disjoint, and the two unions agree; at a
//! crossing the subset is constant along each strand. Quasi-states relax the
//! crossing rule to preserving only the union and intersection of the two
//! strands' subsets.

pub mod ring;
pub mod symbolic;
pub mod transport;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagrams::{ArcId, KnottedMoyGraph, MoyGraph, Sign};
use crate::rational::Rational;
use crate::symkit::scalar::{complete_difference, elementary_values};
use crate::symkit::{subsets_of_size, RootSet};

pub use ring::{StateRing, StateRingElement};

pub type RootSubset = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error("root set has {sigma} roots but the diagram expects N = {diagram}")]
    SigmaMismatch { sigma: usize, diagram: usize },
    #[error("arc {arc}: subset size {got} does not match color {color}")]
    NotAPreState {
        arc: ArcId,
        got: usize,
        color: usize,
    },
    #[error("state is not admissible at crossing {0}")]
    NotAdmissibleAtCrossing(usize),
    #[error("state is not admissible at vertex {0}")]
    NotAdmissibleAtVertex(usize),
    #[error("scale factor a must be nonzero")]
    ZeroScale,
    #[error("graph is not closed or not crossing-free")]
    NotClosedMoy,
}

/// An assignment of a root subset (bitmask over root indices) to every arc.
/// Also used for pre-states and quasi-states; validity is checked separately.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct State {
    assignment: Vec<RootSubset>,
}

impl State {
    pub fn new(assignment: Vec<RootSubset>) -> Self {
        State { assignment }
    }

    pub fn get(&self, arc: ArcId) -> RootSubset {
        self.assignment[arc]
    }

    pub fn masks(&self) -> &[RootSubset] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Root indices per arc, for serialization.
    pub fn index_lists(&self) -> Vec<Vec<usize>> {
        self.assignment
            .iter()
            .map(|&mask| (0..32).filter(|i| mask >> i & 1 == 1).collect())
            .collect()
    }
}

/// All states of a diagram together with their homological gradings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedStateSet {
    states: Vec<State>,
    gradings: Vec<i64>,
    histogram: BTreeMap<i64, usize>,
    sigma: RootSet,
}

impl GradedStateSet {
    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn count(&self) -> usize {
        self.states.len()
    }

    pub fn grading(&self, idx: usize) -> i64 {
        self.gradings[idx]
    }

    pub fn gradings(&self) -> &[i64] {
        &self.gradings
    }

    pub fn histogram(&self) -> &BTreeMap<i64, usize> {
        &self.histogram
    }

    pub fn sigma(&self) -> &RootSet {
        &self.sigma
    }

    fn build(mut states: Vec<State>, d: &KnottedMoyGraph, sigma: &RootSet) -> Self {
        states.sort();
        let gradings: Vec<i64> = states.iter().map(|s| homological_grading(d, s)).collect();
        let mut histogram = BTreeMap::new();
        for &h in &gradings {
            *histogram.entry(h).or_insert(0) += 1;
        }
        GradedStateSet {
            states,
            gradings,
            histogram,
            sigma: sigma.clone(),
        }
    }
}

fn check_sigma(d: &KnottedMoyGraph, sigma: &RootSet) -> Result<(), StateError> {
    if sigma.n() != d.n() {
        return Err(StateError::SigmaMismatch {
            sigma: sigma.n(),
            diagram: d.n(),
        });
    }
    Ok(())
}

/// Checks the pre-state size condition |ψ(e)| = color(e).
pub fn is_pre_state(d: &KnottedMoyGraph, psi: &State) -> Result<(), StateError> {
    for arc in 0..d.arc_count() {
        let got = psi.get(arc).count_ones() as usize;
        if got != d.color(arc) {
            return Err(StateError::NotAPreState {
                arc,
                got,
                color: d.color(arc),
            });
        }
    }
    Ok(())
}

/// Set-theoretic vertex admissibility: in-subsets pairwise disjoint,
/// out-subsets pairwise disjoint, unions equal.
fn vertex_admissible(d: &KnottedMoyGraph, vertex: usize, psi: &State) -> bool {
    let v = &d.vertices()[vertex];
    let side = |arcs: &[ArcId]| -> Option<RootSubset> {
        let mut union = 0u32;
        let mut total = 0u32;
        for &a in arcs {
            union |= psi.get(a);
            total += psi.get(a).count_ones();
        }
        (union.count_ones() == total).then_some(union)
    };
    match (side(&v.ins), side(&v.outs)) {
        (Some(i), Some(o)) => i == o,
        _ => false,
    }
}

fn crossing_admissible(d: &KnottedMoyGraph, crossing: usize, psi: &State) -> bool {
    let c = &d.crossings()[crossing];
    psi.get(c.a1()) == psi.get(c.a3()) && psi.get(c.a2()) == psi.get(c.a4())
}

fn crossing_quasi_admissible(d: &KnottedMoyGraph, crossing: usize, psi: &State) -> bool {
    let c = &d.crossings()[crossing];
    let (s1, s2, s3, s4) = (
        psi.get(c.a1()),
        psi.get(c.a2()),
        psi.get(c.a3()),
        psi.get(c.a4()),
    );
    s1 & s2 == s3 & s4 && s1 | s2 == s3 | s4
}

/// Full set-theoretic admissibility of a pre-state.
pub fn is_state(d: &KnottedMoyGraph, psi: &State) -> bool {
    is_pre_state(d, psi).is_ok()
        && (0..d.vertices().len()).all(|v| vertex_admissible(d, v, psi))
        && (0..d.crossings().len()).all(|c| crossing_admissible(d, c, psi))
}

pub fn is_quasi_state(d: &KnottedMoyGraph, psi: &State) -> bool {
    is_pre_state(d, psi).is_ok()
        && (0..d.vertices().len()).all(|v| vertex_admissible(d, v, psi))
        && (0..d.crossings().len()).all(|c| crossing_quasi_admissible(d, c, psi))
}

/// The homological grading h(ψ): a sum over crossings. A crossing between
/// strands of colors m, n and subsets A, B contributes
/// sign · (|A∩B| − m) when m = n, and sign · |A∩B| otherwise.
/// Vertices contribute nothing.
pub fn homological_grading(d: &KnottedMoyGraph, psi: &State) -> i64 {
    d.crossings()
        .iter()
        .map(|c| {
            let a = psi.get(c.a1());
            let b = psi.get(c.a2());
            let inter = (a & b).count_ones() as i64;
            let (m, n) = (d.color(c.a1()), d.color(c.a2()));
            let base = if m == n { inter - m as i64 } else { inter };
            c.sign.as_i64() * base
        })
        .sum()
}

/// Shared backtracking enumerator. For states, arcs joined through crossings
/// collapse to one variable per strand; for quasi-states, every arc is a
/// variable and crossings are checked with the relaxed rule.
struct Search<'a> {
    d: &'a KnottedMoyGraph,
    var_of_arc: Vec<usize>,
    candidates: Vec<Vec<u32>>,
    /// Earlier variables that must stay disjoint from this one (shared
    /// vertex side), for pruning.
    disjoint_with: Vec<Vec<usize>>,
    /// Vertices fully assigned once this variable is set.
    vertex_ready: Vec<Vec<usize>>,
    /// Crossings fully assigned once this variable is set (quasi mode only).
    crossing_ready: Vec<Vec<usize>>,
    quasi: bool,
    /// Some vertex side repeats a strand variable of positive color; no
    /// state can exist.
    infeasible: bool,
}

impl<'a> Search<'a> {
    fn new(d: &'a KnottedMoyGraph, sigma: &RootSet, quasi: bool) -> Self {
        let var_of_arc: Vec<usize> = if quasi {
            (0..d.arc_count()).collect()
        } else {
            let classes = d.strand_classes();
            let mut index: BTreeMap<usize, usize> = BTreeMap::new();
            classes
                .iter()
                .map(|&root| {
                    let next = index.len();
                    *index.entry(root).or_insert(next)
                })
                .collect()
        };
        let nvars = var_of_arc.iter().copied().max().map_or(0, |m| m + 1);
        let mut var_color = vec![0usize; nvars];
        for arc in 0..d.arc_count() {
            var_color[var_of_arc[arc]] = d.color(arc);
        }
        let candidates = var_color
            .iter()
            .map(|&c| subsets_of_size(sigma.n(), c))
            .collect();

        let last_var = |vars: &[usize]| vars.iter().copied().max().unwrap_or(0);
        let mut vertex_ready = vec![vec![]; nvars];
        for (vi, v) in d.vertices().iter().enumerate() {
            let vars: Vec<usize> = v
                .ins
                .iter()
                .chain(&v.outs)
                .map(|&a| var_of_arc[a])
                .collect();
            vertex_ready[last_var(&vars)].push(vi);
        }
        let mut crossing_ready = vec![vec![]; nvars];
        if quasi {
            for (ci, c) in d.crossings().iter().enumerate() {
                let vars: Vec<usize> = c.corners.iter().map(|&a| var_of_arc[a]).collect();
                crossing_ready[last_var(&vars)].push(ci);
            }
        }
        let mut infeasible = false;
        let mut disjoint_with = vec![vec![]; nvars];
        for v in d.vertices() {
            for side in [&v.ins, &v.outs] {
                for (i, &a) in side.iter().enumerate() {
                    for &b in &side[i + 1..] {
                        let (va, vb) = (var_of_arc[a], var_of_arc[b]);
                        if va != vb {
                            disjoint_with[va.max(vb)].push(va.min(vb));
                        } else if var_color[va] > 0 {
                            infeasible = true;
                        }
                    }
                }
            }
        }

        Search {
            d,
            var_of_arc,
            candidates,
            disjoint_with,
            vertex_ready,
            crossing_ready,
            quasi,
            infeasible,
        }
    }

    fn run(&self) -> Vec<State> {
        if self.infeasible {
            return vec![];
        }
        let nvars = self.candidates.len();
        let mut out = Vec::new();
        let mut assignment = vec![0u32; nvars];
        self.dfs(0, &mut assignment, &mut out);
        out
    }

    fn arcs_view(&self, assignment: &[u32]) -> State {
        State::new(self.var_of_arc.iter().map(|&v| assignment[v]).collect())
    }

    fn dfs(&self, var: usize, assignment: &mut Vec<u32>, out: &mut Vec<State>) {
        if var == self.candidates.len() {
            out.push(self.arcs_view(assignment));
            return;
        }
        'next: for &mask in &self.candidates[var] {
            assignment[var] = mask;
            for &earlier in &self.disjoint_with[var] {
                if assignment[earlier] & mask != 0 {
                    continue 'next;
                }
            }
            if !self.vertex_ready[var].is_empty()
                || (self.quasi && !self.crossing_ready[var].is_empty())
            {
                let full = self.arcs_view(assignment);
                for &vi in &self.vertex_ready[var] {
                    if !vertex_admissible(self.d, vi, &full) {
                        continue 'next;
                    }
                }
                for &ci in &self.crossing_ready[var] {
                    if !crossing_quasi_admissible(self.d, ci, &full) {
                        continue 'next;
                    }
                }
            }
            self.dfs(var + 1, assignment, out);
        }
        assignment[var] = 0;
    }
}

fn enumerate(d: &KnottedMoyGraph, sigma: &RootSet, quasi: bool) -> Vec<State> {
    Search::new(d, sigma, quasi).run()
}

/// Enumerates all states of a diagram, with homological gradings and the
/// grading histogram. Deterministic: states are sorted by their assignment
/// vectors.
pub fn enumerate_states(
    d: &KnottedMoyGraph,
    sigma: &RootSet,
) -> Result<GradedStateSet, StateError> {
    check_sigma(d, sigma)?;
    Ok(GradedStateSet::build(enumerate(d, sigma, false), d, sigma))
}

/// Enumerates all quasi-states. Every state is among them.
pub fn enumerate_quasi_states(
    d: &KnottedMoyGraph,
    sigma: &RootSet,
) -> Result<Vec<State>, StateError> {
    check_sigma(d, sigma)?;
    let mut qs = enumerate(d, sigma, true);
    qs.sort();
    Ok(qs)
}

/// Iterates every pre-state of the diagram (full product space). Intended
/// for exhaustive sweeps over small fixtures.
pub fn all_pre_states(d: &KnottedMoyGraph, sigma: &RootSet) -> Vec<State> {
    let per_arc: Vec<Vec<u32>> = (0..d.arc_count())
        .map(|a| subsets_of_size(sigma.n(), d.color(a)))
        .collect();
    let mut out = vec![State::new(vec![])];
    for masks in &per_arc {
        let mut next = Vec::with_capacity(out.len() * masks.len());
        for partial in &out {
            for &m in masks {
                let mut v = partial.assignment.clone();
                v.push(m);
                next.push(State::new(v));
            }
        }
        out = next;
    }
    out
}

/// The unique resolution of a state: each crossing is replaced by a square
/// of four edges, with the resolved values
/// φ(e1) = ψ(a2)∖ψ(a1), φ(e2) = ψ(a2)∩ψ(a1), φ(e3) = ψ(a1)∖ψ(a2),
/// φ(e4) = ψ(a1)∪ψ(a2).
///
/// New edges for crossing i sit at arc ids `arc_count + 4i .. arc_count + 4i+4`
/// in the order e1, e2, e3, e4.
pub fn resolve_state(d: &KnottedMoyGraph, psi: &State) -> Result<(MoyGraph, State), StateError> {
    is_pre_state(d, psi)?;
    for v in 0..d.vertices().len() {
        if !vertex_admissible(d, v, psi) {
            return Err(StateError::NotAdmissibleAtVertex(v));
        }
    }
    for c in 0..d.crossings().len() {
        if !crossing_admissible(d, c, psi) {
            return Err(StateError::NotAdmissibleAtCrossing(c));
        }
    }

    let mut colors = d.colors().to_vec();
    let mut vertices = d.vertices().to_vec();
    let mut assignment = psi.assignment.clone();
    for c in d.crossings() {
        let (s1, s2) = (psi.get(c.a1()), psi.get(c.a2()));
        let e1_val = s2 & !s1;
        let e2_val = s2 & s1;
        let e3_val = s1 & !s2;
        let e4_val = s1 | s2;
        let base = colors.len();
        let (e1, e2, e3, e4) = (base, base + 1, base + 2, base + 3);
        for v in [e1_val, e2_val, e3_val, e4_val] {
            colors.push(v.count_ones() as usize);
            assignment.push(v);
        }
        vertices.push(crate::diagrams::Vertex {
            ins: vec![c.a1(), e1],
            outs: vec![e4],
        });
        vertices.push(crate::diagrams::Vertex {
            ins: vec![c.a2()],
            outs: vec![e1, e2],
        });
        vertices.push(crate::diagrams::Vertex {
            ins: vec![e4],
            outs: vec![e3, c.a4()],
        });
        vertices.push(crate::diagrams::Vertex {
            ins: vec![e2, e3],
            outs: vec![c.a3()],
        });
    }
    let graph = MoyGraph::new(d.n(), colors, vertices)
        .expect("crossing resolution yields a valid MOY graph");
    let resolved = State::new(assignment);
    debug_assert!(is_state(graph.graph(), &resolved));
    Ok((graph, resolved))
}

fn crossing_shift(sign: Sign, over: usize, under: usize, n: usize) -> i64 {
    if over == under || over + under == n {
        0
    } else {
        sign.as_i64() * (n as i64 - 2 * over as i64)
    }
}

/// The grading shift s(D): a crossing between strands of colors m (over) and
/// n (under) contributes 0 when m = n or m + n = N, else sign·(N − 2m).
pub fn shift_s(d: &KnottedMoyGraph) -> i64 {
    assert!(d.is_link_diagram(), "s(D) is defined for link diagrams");
    d.crossings()
        .iter()
        .map(|c| {
            let (over, under) = match c.sign {
                Sign::Positive => (d.color(c.a1()), d.color(c.a2())),
                Sign::Negative => (d.color(c.a2()), d.color(c.a1())),
            };
            crossing_shift(c.sign, over, under, d.n())
        })
        .sum()
}

/// The companion shift s′(D), using the under-strand color instead.
pub fn shift_s_prime(d: &KnottedMoyGraph) -> i64 {
    assert!(d.is_link_diagram(), "s'(D) is defined for link diagrams");
    d.crossings()
        .iter()
        .map(|c| {
            let (over, under) = match c.sign {
                Sign::Positive => (d.color(c.a1()), d.color(c.a2())),
                Sign::Negative => (d.color(c.a2()), d.color(c.a1())),
            };
            crossing_shift(c.sign, under, over, d.n())
        })
        .sum()
}

/// Relabels every root r ↦ a·r + b. States keep their bitmasks (root i of
/// the old set corresponds to root i of the new set); gradings and the
/// histogram are unchanged.
pub fn relabel_sigma(
    states: &GradedStateSet,
    a: &Rational,
    b: &Rational,
) -> Result<GradedStateSet, StateError> {
    let sigma = states
        .sigma
        .affine_image(a, b)
        .map_err(|_| StateError::ZeroScale)?;
    Ok(GradedStateSet {
        states: states.states.clone(),
        gradings: states.gradings.clone(),
        histogram: states.histogram.clone(),
        sigma,
    })
}

/// The state ψ̄ on the reverse-mirrored diagram: subsets are carried over
/// unchanged along corresponding arcs.
pub fn state_dual_bar(psi: &State) -> State {
    psi.clone()
}

/// The state ψ^op on the color-complemented diagram: every subset is
/// replaced by its complement in Σ.
pub fn state_dual_op(psi: &State, sigma: &RootSet) -> State {
    let full = sigma.full_mask();
    State::new(psi.assignment.iter().map(|&m| full & !m).collect())
}

/// Admissibility via evaluation at a MOY vertex (no crossings): for every
/// p = 1..m the p-th elementary symmetric values of the in- and out-value
/// multisets agree, and h_{N+1−p} of (in-multiset − Σ) vanishes. Agrees with
/// the set-theoretic criterion.
pub fn admissibility_via_evaluation(gamma: &MoyGraph, phi: &State, sigma: &RootSet) -> bool {
    let d = gamma.graph();
    if is_pre_state(d, phi).is_err() {
        return false;
    }
    let n = sigma.n() as i64;
    for v in d.vertices() {
        let collect = |arcs: &[ArcId]| -> Vec<Rational> {
            arcs.iter()
                .flat_map(|&a| sigma.subset_values(phi.get(a)))
                .collect()
        };
        let ins = collect(&v.ins);
        let outs = collect(&v.outs);
        let m = ins.len();
        debug_assert_eq!(m, outs.len());
        for p in 1..=m as i64 {
            if elementary_values(p, &ins) != elementary_values(p, &outs) {
                return false;
            }
        }
        for p in 1..=m as i64 {
            if !complete_difference(n + 1 - p, &ins, sigma).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests;
