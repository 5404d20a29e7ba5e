//! State transport under the local MOY moves: which states of the altered
//! diagram are hit with nonzero coefficient by the induced basis map.
//!
//! Each function takes the local subset data at the move site and returns
//! the possible completions on the altered diagram. Cardinalities: an edge
//! split produces C(m+n, m) states, a circle creation C(N, m); merges,
//! annihilations, χ-moves, and saddles produce at most one, with the
//! vanishing cases exactly as listed per move. All returned states are hit
//! with nonzero coefficients; the coefficient values themselves are not
//! represented.

use thiserror::Error;

use crate::statecalc::RootSubset;
use crate::symkit::{subsets_of_size, RootSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransportError {
    #[error("local data does not match the move pattern: {0}")]
    PatternMismatch(String),
}

fn require(cond: bool, msg: &str) -> Result<(), TransportError> {
    if cond {
        Ok(())
    } else {
        Err(TransportError::PatternMismatch(msg.into()))
    }
}

/// Edge split: an edge carrying Ω (color |Ω| = m+n) splits into parallel
/// edges of colors m and n. Returns all C(m+n, m) value pairs
/// (Ω₁, Ω∖Ω₁) with |Ω₁| = m.
pub fn edge_split(
    omega: RootSubset,
    m: usize,
) -> Result<Vec<(RootSubset, RootSubset)>, TransportError> {
    let total = omega.count_ones() as usize;
    require(m <= total, "split color exceeds the edge color")?;
    let bits: Vec<u32> = (0..32).filter(|i| omega >> i & 1 == 1).collect();
    let mut out = Vec::new();
    for pick in subsets_of_size(total, m) {
        let mut e1 = 0u32;
        for (j, &bit) in bits.iter().enumerate() {
            if pick >> j & 1 == 1 {
                e1 |= 1 << bit;
            }
        }
        out.push((e1, omega & !e1));
    }
    Ok(out)
}

/// Edge merge: parallel edges carrying Ω₁, Ω₂ merge into one edge. The
/// unique compatible state carries Ω₁ ∪ Ω₂ (the sets are disjoint on any
/// state of the split diagram).
pub fn edge_merge(omega1: RootSubset, omega2: RootSubset) -> Result<RootSubset, TransportError> {
    require(
        omega1 & omega2 == 0,
        "merged edges must carry disjoint subsets",
    )?;
    Ok(omega1 | omega2)
}

/// χ¹ move (wide edge contracted): given the four outer values of the wide
/// diagram, returns the value of the connecting edge e′ of the contracted
/// diagram, or `None` in the vanishing case ψ(e1) ∩ ψ(e4) ≠ ∅. The unique
/// compatible value is ψ(e3) ∖ ψ(e1) = ψ(e2) ∖ ψ(e4).
pub fn chi1(
    e1: RootSubset,
    e2: RootSubset,
    e3: RootSubset,
    e4: RootSubset,
) -> Result<Option<RootSubset>, TransportError> {
    require(
        e1 | e2 == e3 | e4,
        "strand unions must agree across the site",
    )?;
    require(
        e1 & e2 == 0 && e3 & e4 == 0,
        "incident subsets must be disjoint",
    )?;
    if e1 & e4 != 0 {
        return Ok(None);
    }
    Ok(Some(e3 & !e1))
}

/// χ⁰ move (connecting edge expanded): given ψ(e1), ψ(e4) and the value on
/// the connecting edge e′, returns the value on the wide edge, or `None` in
/// the vanishing case ψ(e1) ∩ ψ(e4) ≠ ∅.
pub fn chi0(
    e1: RootSubset,
    e4: RootSubset,
    e_prime: RootSubset,
) -> Result<Option<RootSubset>, TransportError> {
    require(
        e1 & e_prime == 0 && e4 & e_prime == 0,
        "connecting edge must be disjoint from its vertex partners",
    )?;
    if e1 & e4 != 0 {
        return Ok(None);
    }
    Ok(Some(e1 | e_prime | e4))
}

/// Circle creation: the new m-colored circle takes any size-m subset of Σ;
/// all C(N, m) completions appear.
pub fn circle_create(sigma: &RootSet, m: usize) -> Vec<RootSubset> {
    sigma.subsets_of_size(m)
}

/// Circle annihilation: the circle is forgotten; exactly one compatible
/// state remains.
pub fn circle_annihilate(_circle_value: RootSubset) -> usize {
    1
}

/// Saddle between same-colored arcs: compatible states exist only when the
/// two arcs carry equal subsets, and then the unique target value is that
/// common subset.
pub fn saddle(e1: RootSubset, e2: RootSubset) -> Option<RootSubset> {
    (e1 == e2).then_some(e1)
}
