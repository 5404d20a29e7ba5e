//! Shared test and verification fixtures: Reidemeister move pairs, MOY
//! graphs for admissibility sweeps, and seeded random braid generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagrams::braid::closure_component_count;
use crate::diagrams::{ColoredBraid, KnottedMoyGraph, MoyGraph, Vertex};

/// A pair of diagrams related by Reidemeister moves, with a label.
pub struct MovePair {
    pub label: String,
    pub lhs: KnottedMoyGraph,
    pub rhs: KnottedMoyGraph,
    pub n: usize,
}

fn braid(b: usize, word: &[i64], colors: &[usize], n: usize) -> KnottedMoyGraph {
    ColoredBraid::new(b, word.to_vec(), colors.to_vec(), n)
        .expect("fixture braid is valid")
        .closure()
}

/// Reidemeister fixture pairs. Both sides of each pair close to the same
/// link: R1 pairs differ by a kink (Markov stabilization), R2/R3 pairs are
/// equal words in the braid group. Covers positive and negative variants
/// and colors (1,1), (1,2), (2,2) at N ∈ {3,4}.
pub fn reidemeister_pairs() -> Vec<MovePair> {
    let mut pairs = Vec::new();
    for &n in &[3usize, 4] {
        // R1: unknot with and without a kink, both signs, colors 1 and 2.
        for m in [1usize, 2] {
            for (sign, word) in [("+", vec![1i64]), ("-", vec![-1i64])] {
                pairs.push(MovePair {
                    label: format!("R1{sign} color {m} N={n}"),
                    lhs: braid(1, &[], &[m], n),
                    rhs: braid(2, &word, &[m], n),
                    n,
                });
            }
        }
        // R2: σ1 σ1⁻¹ against the trivial 2-braid, on two components.
        for (ma, mb) in [(1usize, 1usize), (1, 2), (2, 2)] {
            pairs.push(MovePair {
                label: format!("R2 colors ({ma},{mb}) N={n}"),
                lhs: braid(2, &[], &[ma, mb], n),
                rhs: braid(2, &[1, -1], &[ma, mb], n),
                n,
            });
            pairs.push(MovePair {
                label: format!("R2' colors ({ma},{mb}) N={n}"),
                lhs: braid(2, &[], &[ma, mb], n),
                rhs: braid(2, &[-1, 1], &[ma, mb], n),
                n,
            });
        }
        // R3: braid relation words; closures have two components.
        for (ma, mb) in [(1usize, 1usize), (1, 2), (2, 2)] {
            pairs.push(MovePair {
                label: format!("R3 colors ({ma},{mb}) N={n}"),
                lhs: braid(3, &[1, 2, 1], &[ma, mb], n),
                rhs: braid(3, &[2, 1, 2], &[ma, mb], n),
                n,
            });
            pairs.push(MovePair {
                label: format!("R3- colors ({ma},{mb}) N={n}"),
                lhs: braid(3, &[-1, -2, -1], &[ma, mb], n),
                rhs: braid(3, &[-2, -1, -2], &[ma, mb], n),
                n,
            });
            pairs.push(MovePair {
                label: format!("R3± colors ({ma},{mb}) N={n}"),
                lhs: braid(3, &[-2, 1, 2], &[ma, mb], n),
                rhs: braid(3, &[1, 2, -1], &[ma, mb], n),
                n,
            });
        }
    }
    pairs
}

/// Small closed MOY graphs for exhaustive admissibility sweeps (≤ 8 edges).
pub fn admissibility_fixtures(n: usize) -> Vec<MoyGraph> {
    let mut out = vec![
        MoyGraph::circle(n, 1).unwrap(),
        MoyGraph::circle(n, 2).unwrap(),
        MoyGraph::theta(n, 1, 1).unwrap(),
        MoyGraph::theta(n, 1, 2).unwrap(),
    ];
    // Disjoint union of a theta and a circle.
    out.push(
        MoyGraph::theta(n, 1, 1)
            .unwrap()
            .disjoint_union(&MoyGraph::circle(n, 1).unwrap())
            .unwrap(),
    );
    // Two thetas.
    out.push(
        MoyGraph::theta(n, 1, 1)
            .unwrap()
            .disjoint_union(&MoyGraph::theta(n, 1, 1).unwrap())
            .unwrap(),
    );
    // Three-valent vertex pair: (1,1,1) → 3 → (1,1,1).
    if n >= 3 {
        out.push(
            MoyGraph::new(
                n,
                vec![1, 1, 1, 3],
                vec![
                    Vertex {
                        ins: vec![0, 1, 2],
                        outs: vec![3],
                    },
                    Vertex {
                        ins: vec![3],
                        outs: vec![0, 1, 2],
                    },
                ],
            )
            .unwrap(),
        );
    }
    // Square: four vertices around alternating colors 1, 2.
    out.push(
        MoyGraph::new(
            n,
            vec![1, 1, 2, 2, 1, 1],
            vec![
                Vertex {
                    ins: vec![0, 1],
                    outs: vec![2],
                },
                Vertex {
                    ins: vec![2],
                    outs: vec![4, 5],
                },
                Vertex {
                    ins: vec![4, 5],
                    outs: vec![3],
                },
                Vertex {
                    ins: vec![3],
                    outs: vec![0, 1],
                },
            ],
        )
        .unwrap(),
    );
    // Double theta: two vertices joined by (1,1,2) with doubled 1-edge.
    out.push(
        MoyGraph::new(
            n,
            vec![1, 1, 1, 1, 2],
            vec![
                Vertex {
                    ins: vec![0, 1],
                    outs: vec![4],
                },
                Vertex {
                    ins: vec![4],
                    outs: vec![2, 3],
                },
                Vertex {
                    ins: vec![2, 3],
                    outs: vec![0, 1],
                },
            ],
        )
        .unwrap_or_else(|e| panic!("double theta fixture: {e}")),
    );
    // Ladder: the closed-up resolution square of a (1,1) crossing with
    // k = 1, including a 0-colored rung. Arcs: 0 = left strand, 1 = right
    // strand, 2 = e1 (1), 3 = e2 (0), 4 = e3 (1), 5 = e4 (2).
    out.push(
        MoyGraph::new(
            n,
            vec![1, 1, 1, 0, 1, 2],
            vec![
                Vertex {
                    ins: vec![0, 2],
                    outs: vec![5],
                },
                Vertex {
                    ins: vec![1],
                    outs: vec![2, 3],
                },
                Vertex {
                    ins: vec![5],
                    outs: vec![4, 0],
                },
                Vertex {
                    ins: vec![3, 4],
                    outs: vec![1],
                },
            ],
        )
        .unwrap_or_else(|e| panic!("ladder fixture: {e}")),
    );
    out
}

/// Seeded random colored braids: strand count ≤ `max_strands`, word length
/// ≤ `max_len`, colors uniform in 0..=N.
pub fn random_braids(
    seed: u64,
    count: usize,
    max_strands: usize,
    max_len: usize,
    max_n: usize,
) -> Vec<ColoredBraid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let b = rng.gen_range(1..=max_strands);
        let n = rng.gen_range(2..=max_n);
        let len = if b < 2 { 0 } else { rng.gen_range(0..=max_len) };
        let word: Vec<i64> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..b) as i64;
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let comps = closure_component_count(b, &word);
        let colors: Vec<usize> = (0..comps).map(|_| rng.gen_range(0..=n)).collect();
        out.push(ColoredBraid::new(b, word, colors, n).expect("random braid is valid"));
    }
    out
}

/// Seeded random negative braids with uniform color, as
/// (braid, strands, crossings).
pub fn random_negative_braids(
    seed: u64,
    count: usize,
    max_strands: usize,
    max_len: usize,
    color: usize,
    n: usize,
) -> Vec<(ColoredBraid, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let b = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(1..=max_len);
        let word: Vec<i64> = (0..len).map(|_| -(rng.gen_range(1..b) as i64)).collect();
        let comps = closure_component_count(b, &word);
        let braid = ColoredBraid::new(b, word, vec![color; comps], n).expect("valid");
        out.push((braid, b, len));
    }
    out
}
