//! Colored Rasmussen-invariant engine: exact values on the classes with
//! closed formulas (unknot, unlinks, negative braids and their mirrors),
//! rigorous interval bounds elsewhere, the symmetry relations, the
//! chirality criterion, and constant-state transport through cobordisms.
//!
//! Exact values, for color m at rank N with the shorthand g = m(N−m):
//! unknot 0; b-component unlink g(b−1); closed negative braid with b strands
//! and l crossings g(b−l−1); closed positive braid g(l−b+1) through the
//! mirror relation s(K) = −s(K_mir). Everything else gets an interval:
//! upper bound g(w+b−1) from the closed-braid representative, lower bound
//! g(w−b+1) = g(SL+1) from the same representative through the mirror, and
//! |s| ≤ 2g·g* when a slice-genus hint is supplied.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::diagrams::ColoredBraid;
use crate::statecalc::RootSubset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("color m={m} out of range 1..={max} (exclusive of N)")]
    BadColor { m: usize, max: usize },
    #[error("expected a single-component closure, got {0} components")]
    NotAKnot(usize),
    #[error("cobordism move list is malformed: {0}")]
    BadCobordism(String),
}

/// Result of an s-invariant computation: an exact value when a proven
/// formula applies, otherwise the tightest derived interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SInvariantResult {
    pub value: Option<i64>,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub provenance: Vec<String>,
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
}

impl SInvariantResult {
    fn exact(value: i64, provenance: &str, m: usize, n: usize) -> Self {
        SInvariantResult {
            value: Some(value),
            lower: Some(value),
            upper: Some(value),
            provenance: vec![provenance.to_string()],
            m,
            n,
        }
    }
}

fn check_color(m: usize, n: usize) -> Result<(), InvariantError> {
    if m == 0 || m >= n {
        return Err(InvariantError::BadColor { m, max: n - 1 });
    }
    Ok(())
}

/// Diagram classes with exact formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidClass {
    Unknot,
    Unlink { components: usize },
    NegativeBraid { strands: usize, crossings: usize },
    PositiveBraid { strands: usize, crossings: usize },
    Unrecognized,
}

/// Syntactic classification of a braid closure.
pub fn classify_braid(braid: &ColoredBraid) -> BraidClass {
    let (pos, neg) = (braid.positive_crossings(), braid.negative_crossings());
    if pos + neg == 0 {
        if braid.strands() == 1 {
            BraidClass::Unknot
        } else {
            BraidClass::Unlink {
                components: braid.strands(),
            }
        }
    } else if pos == 0 {
        BraidClass::NegativeBraid {
            strands: braid.strands(),
            crossings: neg,
        }
    } else if neg == 0 {
        BraidClass::PositiveBraid {
            strands: braid.strands(),
            crossings: pos,
        }
    } else {
        BraidClass::Unrecognized
    }
}

/// Exact value of the m-colored invariant for a recognized class; `None`
/// when no proven formula applies (callers fall back to `s_bounds`).
pub fn s_exact(
    class: &BraidClass,
    m: usize,
    n: usize,
) -> Result<Option<SInvariantResult>, InvariantError> {
    check_color(m, n)?;
    let g = (m * (n - m)) as i64;
    Ok(match class {
        BraidClass::Unknot => Some(SInvariantResult::exact(0, "unknot value", m, n)),
        BraidClass::Unlink { components } => Some(SInvariantResult::exact(
            g * (*components as i64 - 1),
            "unlink value",
            m,
            n,
        )),
        BraidClass::NegativeBraid { strands, crossings } => Some(SInvariantResult::exact(
            g * (*strands as i64 - *crossings as i64 - 1),
            "negative braid formula",
            m,
            n,
        )),
        BraidClass::PositiveBraid { strands, crossings } => Some(SInvariantResult::exact(
            g * (*crossings as i64 - *strands as i64 + 1),
            "mirror of negative braid formula",
            m,
            n,
        )),
        BraidClass::Unrecognized => None,
    })
}

/// Interval bounds from a braid representative whose components all carry
/// color m: upper m(N−m)(w+b−1), lower m(N−m)(w−b+1) via the mirror, both
/// sharpened by 2m(N−m)·g* when a slice-genus hint is given.
pub fn s_bounds(
    braid: &ColoredBraid,
    m: usize,
    n: usize,
    slice_genus_hint: Option<i64>,
) -> Result<SInvariantResult, InvariantError> {
    check_color(m, n)?;
    let g = (m * (n - m)) as i64;
    let w = braid.writhe();
    let b = braid.strands() as i64;
    let mut provenance = Vec::new();

    let mut upper = g * (w + b - 1);
    provenance.push(format!(
        "upper: self-linking bound on the representative (w={w}, b={b})"
    ));
    let mut lower = g * (w - b + 1);
    provenance.push(
        "lower: self-linking bound on the mirror representative (representative bound)".to_string(),
    );

    if let Some(genus) = slice_genus_hint {
        let cap = 2 * g * genus;
        if cap < upper {
            upper = cap;
            provenance.push(format!("upper tightened by slice genus hint g*={genus}"));
        }
        if -cap > lower {
            lower = -cap;
            provenance.push(format!("lower tightened by slice genus hint g*={genus}"));
        }
    }

    let value = (lower == upper).then_some(lower);
    Ok(SInvariantResult {
        value,
        lower: Some(lower),
        upper: Some(upper),
        provenance,
        m,
        n,
    })
}

/// Exact value when the class is recognized; interval otherwise.
pub fn s_invariant(
    braid: &ColoredBraid,
    m: usize,
    n: usize,
    slice_genus_hint: Option<i64>,
) -> Result<SInvariantResult, InvariantError> {
    match s_exact(&classify_braid(braid), m, n)? {
        Some(exact) => Ok(exact),
        None => s_bounds(braid, m, n, slice_genus_hint),
    }
}

/// A knot variant appearing in the symmetry chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum KnotVariant {
    /// K itself.
    Plain,
    /// −K: all orientations reversed.
    Reversed,
    /// K̄ = −K_mir.
    ReversedMirror,
    /// K_mir.
    Mirror,
}

impl KnotVariant {
    /// Sign of s relative to s(K): reversal preserves, mirroring negates.
    fn sign(self) -> i64 {
        match self {
            KnotVariant::Plain | KnotVariant::Reversed => 1,
            KnotVariant::ReversedMirror | KnotVariant::Mirror => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryViolation {
    pub lhs: String,
    pub rhs: String,
    pub lhs_value: i64,
    pub rhs_value: i64,
}

/// Checks every instance of the relation chain
/// s^(m)(K) = s^(N−m)(K) = s^(m)(−K) = −s^(m)(K̄) = −s^(m)(K_mir)
/// among the supplied values. Keys are (variant, color); both colors m and
/// N−m may appear. Returns the violated instances (expected none).
pub fn symmetry_relations(
    m: usize,
    n: usize,
    values: &BTreeMap<(KnotVariant, usize), i64>,
) -> Result<Vec<SymmetryViolation>, InvariantError> {
    check_color(m, n)?;
    let mut violations = Vec::new();
    let entries: Vec<((KnotVariant, usize), i64)> = values.iter().map(|(k, v)| (*k, *v)).collect();
    for (i, ((va, ca), xa)) in entries.iter().enumerate() {
        for ((vb, cb), xb) in entries.iter().skip(i + 1) {
            // Every pair is related: colors m and N−m are interchangeable,
            // and variants fix the sign.
            let expected_equal = va.sign() * xa == vb.sign() * xb;
            if !expected_equal {
                violations.push(SymmetryViolation {
                    lhs: format!("s^({ca})({va:?})"),
                    rhs: format!("s^({cb})({vb:?})"),
                    lhs_value: *xa,
                    rhs_value: *xb,
                });
            }
        }
    }
    Ok(violations)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChiralityVerdict {
    Chiral,
    Inconclusive,
}

/// Chirality certificate: a knot with a closed-braid representative of
/// self-linking number ≥ 0 has strictly positive invariant, which an
/// amphicheiral knot cannot have.
pub fn chirality_certificate(braid: &ColoredBraid) -> Result<ChiralityVerdict, InvariantError> {
    let comps = braid.components().len();
    if comps != 1 {
        return Err(InvariantError::NotAKnot(comps));
    }
    if braid.self_linking() >= 0 {
        Ok(ChiralityVerdict::Chiral)
    } else {
        Ok(ChiralityVerdict::Inconclusive)
    }
}

/// Elementary cobordism moves. Circles in the evolving diagram are tracked
/// by index; `Saddle(i, j)` merges circles i and j when i ≠ j and splits
/// circle i in two when i = j; `Annihilate(i)` removes circle i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CobordismMove {
    Reidemeister,
    CircleCreate,
    CircleAnnihilate(usize),
    Saddle(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismTransport {
    /// Euler characteristic of the traced surface.
    pub chi: i64,
    /// The unique constant compatible state on the target: every target
    /// component carries the source subset. `None` if obstructed.
    pub target_state: Option<Vec<RootSubset>>,
    /// Components of the surface with no boundary on either end.
    pub closed_components: usize,
    /// Components touching only one end.
    pub semi_closed_components: usize,
    pub target_component_count: usize,
}

/// Transports a constant state (common subset on every source component)
/// through a movie of elementary moves. The transport is the unique
/// constant compatible state when the traced surface has neither closed nor
/// semi-closed components; otherwise the obstruction counts are reported
/// and no state is returned.
pub fn cobordism_constant_state_transport(
    moves: &[CobordismMove],
    source_components: usize,
    subset: RootSubset,
) -> Result<CobordismTransport, InvariantError> {
    // Surface components as a union-find over lifeline ids.
    let mut parent: Vec<usize> = (0..source_components).collect();
    let mut touches_source = vec![true; source_components];
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    // Active circles, by lifeline id.
    let mut active: Vec<usize> = (0..source_components).collect();
    let mut chi: i64 = 0;
    let mut dead_lifelines: Vec<usize> = Vec::new();

    for (step, mv) in moves.iter().enumerate() {
        match *mv {
            CobordismMove::Reidemeister => {}
            CobordismMove::CircleCreate => {
                let id = parent.len();
                parent.push(id);
                touches_source.push(false);
                active.push(id);
                chi += 1;
            }
            CobordismMove::CircleAnnihilate(i) => {
                if i >= active.len() {
                    return Err(InvariantError::BadCobordism(format!(
                        "move {step}: annihilate index {i} out of range"
                    )));
                }
                let id = active.remove(i);
                dead_lifelines.push(id);
                chi += 1;
            }
            CobordismMove::Saddle(i, j) => {
                if i >= active.len() || j >= active.len() {
                    return Err(InvariantError::BadCobordism(format!(
                        "move {step}: saddle indices ({i}, {j}) out of range"
                    )));
                }
                chi -= 1;
                if i != j {
                    // merge circles i and j
                    let (ri, rj) = (find(&mut parent, active[i]), find(&mut parent, active[j]));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                    let hi = i.max(j);
                    active.remove(hi);
                } else {
                    // split circle i: the new circle shares its lifeline
                    let id = parent.len();
                    let root = find(&mut parent, active[i]);
                    parent.push(root);
                    touches_source.push(false);
                    active.push(id);
                }
            }
        }
    }

    // Classify surface components.
    let mut reaches_source: BTreeMap<usize, bool> = BTreeMap::new();
    let mut reaches_target: BTreeMap<usize, bool> = BTreeMap::new();
    let ids: Vec<usize> = (0..parent.len()).collect();
    for id in ids {
        let root = find(&mut parent, id);
        *reaches_source.entry(root).or_insert(false) |= touches_source[id];
        reaches_target.entry(root).or_insert(false);
    }
    for &id in &active {
        let root = find(&mut parent, id);
        reaches_target.insert(root, true);
    }
    let mut closed = 0;
    let mut semi_closed = 0;
    for (root, src) in &reaches_source {
        let tgt = reaches_target[root];
        match (src, tgt) {
            (false, false) => closed += 1,
            (true, true) => {}
            _ => semi_closed += 1,
        }
    }

    let target_state = (closed == 0 && semi_closed == 0).then(|| vec![subset; active.len()]);
    Ok(CobordismTransport {
        chi,
        target_state,
        closed_components: closed,
        semi_closed_components: semi_closed,
        target_component_count: active.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::parse_braid;

    fn braid(b: usize, word: &str, m: usize, n: usize) -> ColoredBraid {
        let comps = crate::diagrams::braid::closure_component_count(
            b,
            &word
                .split_whitespace()
                .map(|t| t.parse().unwrap())
                .collect::<Vec<i64>>(),
        );
        parse_braid(b, word, &vec![m; comps], n).unwrap()
    }

    #[test]
    fn exact_values() {
        // Left trefoil at (m=1, N=2): −2.
        let tre = braid(2, "-1 -1 -1", 1, 2);
        let r = s_invariant(&tre, 1, 2, None).unwrap();
        assert_eq!(r.value, Some(-2));

        // Right trefoil at (m=1, N=3): +4.
        let tre_r = braid(2, "1 1 1", 1, 3);
        assert_eq!(s_invariant(&tre_r, 1, 3, None).unwrap().value, Some(4));

        // Unknot: 0 for every color.
        let unknot = braid(1, "", 1, 4);
        for m in 1..4 {
            assert_eq!(s_invariant(&unknot, m, 4, None).unwrap().value, Some(0));
        }

        // 3-component unlink at (m=2, N=4): 2·2·2 = 8.
        let unlink = braid(3, "", 2, 4);
        assert_eq!(s_invariant(&unlink, 2, 4, None).unwrap().value, Some(8));

        assert!(matches!(
            s_exact(&BraidClass::Unknot, 2, 2),
            Err(InvariantError::BadColor { .. })
        ));
    }

    #[test]
    fn mirror_negates() {
        for (b, word, mirror_word) in [(2, "-1 -1 -1", "1 1 1"), (2, "-1 -1 -1 -1 -1", "1 1 1 1 1")]
        {
            for n in 2..=5 {
                for m in 1..n {
                    let neg = s_invariant(&braid(b, word, m, n), m, n, None).unwrap();
                    let pos = s_invariant(&braid(b, mirror_word, m, n), m, n, None).unwrap();
                    assert_eq!(neg.value.unwrap(), -pos.value.unwrap());
                }
            }
        }
    }

    #[test]
    fn bounds_bracket_and_pin() {
        // Right trefoil σ1³: lower 2, upper 4; genus hint 1 pins the value 2.
        let tre = braid(2, "1 1 1", 1, 2);
        let open = s_bounds(&tre, 1, 2, None).unwrap();
        assert_eq!(open.lower, Some(2));
        assert_eq!(open.upper, Some(4));
        assert_eq!(open.value, None);
        let pinned = s_bounds(&tre, 1, 2, Some(1)).unwrap();
        assert_eq!(pinned.value, Some(2));

        // Unknot as a closed 1-braid: bounds already pin 0.
        let unknot = braid(1, "", 1, 2);
        let r = s_bounds(&unknot, 1, 2, None).unwrap();
        assert_eq!(r.value, Some(0));

        // Bounds bracket the exact negative-braid value.
        let tre_l = braid(2, "-1 -1 -1", 1, 2);
        let exact = s_invariant(&tre_l, 1, 2, None).unwrap().value.unwrap();
        let bounds = s_bounds(&tre_l, 1, 2, None).unwrap();
        assert!(bounds.lower.unwrap() <= exact && exact <= bounds.upper.unwrap());
    }

    #[test]
    fn symmetry_detector() {
        // True trefoil values at N = 3: −4 at both colors 1 and N−1.
        let tre = |word: &str, m: usize| {
            s_invariant(&braid(2, word, m, 3), m, 3, None)
                .unwrap()
                .value
                .unwrap()
        };
        let mut values = BTreeMap::new();
        values.insert((KnotVariant::Plain, 1), tre("-1 -1 -1", 1));
        values.insert((KnotVariant::Plain, 2), tre("-1 -1 -1", 2));
        values.insert((KnotVariant::Reversed, 1), tre("-1 -1 -1", 1));
        values.insert((KnotVariant::Mirror, 1), tre("1 1 1", 1));
        values.insert((KnotVariant::ReversedMirror, 1), tre("1 1 1", 1));
        assert_eq!(values[&(KnotVariant::Plain, 1)], -4);
        assert_eq!(values[&(KnotVariant::Plain, 2)], -4);
        assert!(symmetry_relations(1, 3, &values).unwrap().is_empty());
        values.insert((KnotVariant::Mirror, 2), -4i64); // inconsistent sign
        let violations = symmetry_relations(1, 3, &values).unwrap();
        assert!(!violations.is_empty());
    }

    #[test]
    fn chirality_examples() {
        let pos_tre = braid(2, "1 1 1", 1, 2);
        assert_eq!(
            chirality_certificate(&pos_tre).unwrap(),
            ChiralityVerdict::Chiral
        );
        let neg_tre = braid(2, "-1 -1 -1", 1, 2);
        assert_eq!(
            chirality_certificate(&neg_tre).unwrap(),
            ChiralityVerdict::Inconclusive
        );
        // Figure-eight standard braid representative has SL < 0.
        let fig8 = braid(3, "1 -2 1 -2", 1, 2);
        assert_eq!(
            chirality_certificate(&fig8).unwrap(),
            ChiralityVerdict::Inconclusive
        );
        let hopf = braid(2, "1 1", 1, 2);
        assert!(matches!(
            chirality_certificate(&hopf),
            Err(InvariantError::NotAKnot(2))
        ));
    }

    #[test]
    fn cobordism_transport() {
        // Punctured disc: unknot → b-unlink by b−1 splitting saddles.
        let b = 4;
        let moves: Vec<CobordismMove> = (0..b - 1).map(|i| CobordismMove::Saddle(i, i)).collect();
        let t = cobordism_constant_state_transport(&moves, 1, 0b01).unwrap();
        assert_eq!(t.chi, 1 - b as i64);
        assert_eq!(t.target_component_count, b);
        assert_eq!(t.target_state, Some(vec![0b01; b]));

        // Merging saddle between two source circles.
        let t =
            cobordism_constant_state_transport(&[CobordismMove::Saddle(0, 1)], 2, 0b10).unwrap();
        assert_eq!(t.chi, -1);
        assert_eq!(t.target_state, Some(vec![0b10]));

        // Creation followed by a merging saddle: the circle joins the
        // source component, the constant state is selected on the target.
        let t = cobordism_constant_state_transport(
            &[CobordismMove::CircleCreate, CobordismMove::Saddle(0, 1)],
            1,
            0b01,
        )
        .unwrap();
        assert_eq!(t.chi, 0);
        assert_eq!(t.target_state, Some(vec![0b01]));

        // A created circle never touching the source is semi-closed.
        let t =
            cobordism_constant_state_transport(&[CobordismMove::CircleCreate], 1, 0b01).unwrap();
        assert_eq!(t.semi_closed_components, 1);
        assert_eq!(t.target_state, None);

        // Created then annihilated: a closed component.
        let t = cobordism_constant_state_transport(
            &[
                CobordismMove::CircleCreate,
                CobordismMove::CircleAnnihilate(1),
            ],
            1,
            0b01,
        )
        .unwrap();
        assert_eq!(t.closed_components, 1);
        assert_eq!(t.chi, 2);
        assert_eq!(t.target_state, None);

        // Bad index reported.
        assert!(matches!(
            cobordism_constant_state_transport(&[CobordismMove::Saddle(0, 5)], 1, 0b01),
            Err(InvariantError::BadCobordism(_))
        ));
    }
}
