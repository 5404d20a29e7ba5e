//! Colored braid words and their closures.

use thiserror::Error;

use crate::diagrams::{Crossing, KnottedMoyGraph, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("bad braid token {0:?}")]
    BadToken(String),
    #[error("generator index {0} out of range for {1} strands")]
    GeneratorOutOfRange(i64, usize),
    #[error("need at least 1 strand")]
    NoStrands,
    #[error("{expected} closure components but {got} colors supplied")]
    ColorCount { expected: usize, got: usize },
    #[error("color {0} exceeds N = {1}")]
    ColorOutOfRange(usize, usize),
    #[error("braid file: {0}")]
    BadFile(String),
}

/// A braid word on `strands` strands whose closure components carry colors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredBraid {
    strands: usize,
    word: Vec<i64>,
    /// One color per closure component, components ordered by smallest
    /// strand index.
    colors: Vec<usize>,
    n: usize,
}

/// Parses a whitespace-separated signed braid word, e.g. `"-1 -1 -1"`.
/// `colors` are indexed by closure component (ordered by smallest strand).
pub fn parse_braid(
    strands: usize,
    text: &str,
    colors: &[usize],
    n: usize,
) -> Result<ColoredBraid, BraidError> {
    let mut word = Vec::new();
    for tok in text.split_whitespace() {
        let v: i64 = tok
            .parse()
            .map_err(|_| BraidError::BadToken(tok.to_string()))?;
        word.push(v);
    }
    ColoredBraid::new(strands, word, colors.to_vec(), n)
}

/// Number of closure components of a braid word, without building the braid.
pub fn closure_component_count(strands: usize, word: &[i64]) -> usize {
    let mut pos: Vec<usize> = (0..strands).collect();
    for &w in word {
        let i = w.unsigned_abs() as usize - 1;
        pos.swap(i, i + 1);
    }
    let mut perm = vec![0; strands];
    for (p, &s) in pos.iter().enumerate() {
        perm[s] = p;
    }
    let mut seen = vec![false; strands];
    let mut count = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur];
        }
    }
    count
}

impl ColoredBraid {
    /// A braid whose closure components all carry the same color.
    pub fn uniform(
        strands: usize,
        word: Vec<i64>,
        color: usize,
        n: usize,
    ) -> Result<Self, BraidError> {
        for &w in &word {
            if strands == 0 || w == 0 || w.unsigned_abs() as usize >= strands {
                return Err(BraidError::GeneratorOutOfRange(w, strands));
            }
        }
        let comps = closure_component_count(strands, &word);
        ColoredBraid::new(strands, word, vec![color; comps], n)
    }

    pub fn new(
        strands: usize,
        word: Vec<i64>,
        colors: Vec<usize>,
        n: usize,
    ) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &w in &word {
            if w == 0 || w.unsigned_abs() as usize >= strands {
                return Err(BraidError::GeneratorOutOfRange(w, strands));
            }
        }
        let braid = ColoredBraid {
            strands,
            word,
            colors,
            n,
        };
        let comps = braid.components();
        if braid.colors.len() != comps.len() {
            return Err(BraidError::ColorCount {
                expected: comps.len(),
                got: braid.colors.len(),
            });
        }
        for &c in &braid.colors {
            if c > n {
                return Err(BraidError::ColorOutOfRange(c, n));
            }
        }
        Ok(braid)
    }

    /// Parses the three-line braid file format:
    /// line 1 `b=<int> N=<int>`, line 2 the signed word, line 3
    /// comma-separated component colors.
    pub fn parse_file(contents: &str) -> Result<Self, BraidError> {
        let mut lines = contents.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| BraidError::BadFile("missing header line".into()))?;
        let mut b = None;
        let mut n = None;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| BraidError::BadFile(format!("bad header field {field:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| BraidError::BadFile(format!("bad header value {value:?}")))?;
            match key {
                "b" => b = Some(value),
                "N" => n = Some(value),
                _ => return Err(BraidError::BadFile(format!("unknown header key {key:?}"))),
            }
        }
        let b = b.ok_or_else(|| BraidError::BadFile("header missing b=".into()))?;
        let n = n.ok_or_else(|| BraidError::BadFile("header missing N=".into()))?;
        let word_line = lines.next().unwrap_or("");
        let colors_line = lines
            .next()
            .ok_or_else(|| BraidError::BadFile("missing colors line".into()))?;
        let colors: Vec<usize> = colors_line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| BraidError::BadFile(format!("bad color {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        parse_braid(b, word_line, &colors, n)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i64] {
        &self.word
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|w| w.signum()).sum()
    }

    pub fn positive_crossings(&self) -> usize {
        self.word.iter().filter(|w| **w > 0).count()
    }

    pub fn negative_crossings(&self) -> usize {
        self.word.iter().filter(|w| **w < 0).count()
    }

    /// Self-linking number of the closed braid: writhe − strand count.
    pub fn self_linking(&self) -> i64 {
        self.writhe() - self.strands as i64
    }

    /// The underlying permutation: `perm[i]` is the final position of the
    /// strand starting at position i (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect(); // strand at each position
        for &w in &self.word {
            let i = w.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (p, &strand) in pos.iter().enumerate() {
            perm[strand] = p;
        }
        perm
    }

    /// Closure components as cycles of starting positions, ordered by their
    /// smallest strand index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut comps = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![];
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = perm[cur];
            }
            comps.push(cycle);
        }
        comps
    }

    /// The component index of each strand.
    pub fn component_of_strand(&self) -> Vec<usize> {
        let comps = self.components();
        let mut out = vec![0; self.strands];
        for (ci, comp) in comps.iter().enumerate() {
            for &s in comp {
                out[s] = ci;
            }
        }
        out
    }

    pub fn mirror(&self) -> ColoredBraid {
        ColoredBraid {
            word: self.word.iter().map(|w| -w).collect(),
            ..self.clone()
        }
    }

    /// The closure as a knotted MOY graph, one arc per inter-crossing strand
    /// segment (a crossing-free component closes into a single circle arc).
    pub fn closure(&self) -> KnottedMoyGraph {
        let comp_of_strand = self.component_of_strand();
        let mut colors: Vec<usize> = (0..self.strands)
            .map(|s| self.colors[comp_of_strand[s]])
            .collect();

        // cur[p] = arc currently occupying position p; arcs 0..strands are
        // the circle-closing arcs at the braid axis.
        let mut cur: Vec<usize> = (0..self.strands).collect();
        let mut crossings = Vec::new();
        for &w in &self.word {
            let i = w.unsigned_abs() as usize - 1;
            let (a1, a2) = (cur[i], cur[i + 1]);
            // Strand at position i continues to position i+1 (corner a3);
            // strand at position i+1 continues to position i (corner a4).
            let a3 = colors.len();
            colors.push(colors[a1]);
            let a4 = colors.len();
            colors.push(colors[a2]);
            crossings.push(Crossing {
                sign: if w > 0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                },
                corners: [a1, a2, a3, a4],
            });
            cur[i] = a4;
            cur[i + 1] = a3;
        }

        // Close up: the arc leaving position p rejoins the initial arc p.
        let mut rename: Vec<usize> = (0..colors.len()).collect();
        for p in 0..self.strands {
            if cur[p] != p {
                rename[cur[p]] = p;
            }
        }
        // Drop the renamed final arcs, compacting ids.
        let keep: Vec<usize> = (0..colors.len()).filter(|&a| rename[a] == a).collect();
        let mut compact = vec![usize::MAX; colors.len()];
        for (new_id, &old) in keep.iter().enumerate() {
            compact[old] = new_id;
        }
        let map = |a: usize| compact[rename[a]];
        let final_colors: Vec<usize> = keep.iter().map(|&a| colors[a]).collect();
        let final_crossings: Vec<Crossing> = crossings
            .iter()
            .map(|c| Crossing {
                sign: c.sign,
                corners: [map(c.a1()), map(c.a2()), map(c.a3()), map(c.a4())],
            })
            .collect();
        KnottedMoyGraph::new(self.n, final_colors, vec![], final_crossings)
            .expect("braid closure yields a valid closed diagram")
    }
}
