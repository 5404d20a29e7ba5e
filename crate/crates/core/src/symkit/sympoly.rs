//! Symmetric polynomials in elementary-symmetric generators.
//!
//! A `SymPoly` is a sparse polynomial in generators E_k(A), the k-th
//! elementary symmetric polynomial of alphabet A. Symmetry in each alphabet
//! is structural: the representation is a free commutative polynomial ring
//! on the generators, so canonical-form equality is polynomial equality.
//! Degrees follow the doubled convention: E_k has degree 2k.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;
use crate::symkit::partition::Partition;
use crate::symkit::scalar::elementary_values;

/// Generator id: E_k of the alphabet with index `alphabet`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Gen {
    pub alphabet: usize,
    pub k: usize,
}

/// A monomial in the generators: sorted (generator, exponent) pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Mono(Vec<(Gen, u32)>);

impl Mono {
    fn one() -> Self {
        Mono(Vec::new())
    }

    fn gen(g: Gen) -> Self {
        Mono(vec![(g, 1)])
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut map: BTreeMap<Gen, u32> = self.0.iter().cloned().collect();
        for (g, e) in &other.0 {
            *map.entry(*g).or_insert(0) += e;
        }
        Mono(map.into_iter().collect())
    }

    /// Doubled degree: Σ 2·k·exp.
    fn degree(&self) -> usize {
        self.0.iter().map(|(g, e)| 2 * g.k * *e as usize).sum()
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.0
    }
}

/// A polynomial in elementary-symmetric generators, canonical form
/// (no zero coefficients stored).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Mono, Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        SymPoly { terms }
    }

    /// The generator E_k of `alphabet`. E_0 = 1; k is not range-checked
    /// against an alphabet size here (callers construct only valid k).
    pub fn gen(alphabet: usize, k: usize) -> Self {
        if k == 0 {
            return SymPoly::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Mono::gen(Gen { alphabet, k }), Rational::one());
        SymPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.0.is_empty())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c.clone();
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        SymPoly { terms }
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut terms: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        SymPoly { terms }
    }

    /// Doubled total degree (deg E_k = 2k); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Mono::degree).max()
    }

    /// Evaluates at rational points: alphabet `i` is substituted by
    /// `values[i]`, so E_k of alphabet i evaluates at `values[i]`.
    pub fn eval(&self, values: &[&[Rational]]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (g, e) in &m.0 {
                let v = elementary_values(g.k as i64, values[g.alphabet]);
                if v.is_zero() {
                    term = Rational::zero();
                    break;
                }
                term *= v.pow(*e);
            }
            total += term;
        }
        total
    }

    /// Evaluates a single-alphabet polynomial at one value list.
    pub fn eval_single(&self, values: &[Rational]) -> Rational {
        self.eval(&[values])
    }

    /// ∏_{x ∈ A}(x − r) as a polynomial in the generators of `alphabet`
    /// (size m): Σ_k E_k · (−r)^{m−k}.
    pub fn linear_factor(alphabet: usize, m: usize, r: &Rational) -> SymPoly {
        let mut acc = SymPoly::zero();
        for k in 0..=m {
            let coeff = (-r).pow((m - k) as u32);
            acc = acc.add(&SymPoly::gen(alphabet, k).scale(&coeff));
        }
        acc
    }

    /// h_k of `alphabet` (size m) in elementary generators, via
    /// h_k = Σ_{j≥1} (−1)^{j−1} E_j h_{k−j}.
    pub fn complete(alphabet: usize, m: usize, k: usize) -> SymPoly {
        let mut hs: Vec<SymPoly> = vec![SymPoly::one()];
        for kk in 1..=k {
            let mut acc = SymPoly::zero();
            for j in 1..=kk.min(m) {
                let term = SymPoly::gen(alphabet, j).mul(&hs[kk - j]);
                if j % 2 == 1 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            hs.push(acc);
        }
        hs.pop().unwrap()
    }

    /// p_k of `alphabet` (size m) in elementary generators, via Newton's
    /// identity p_k = (−1)^{k−1} k·E_k + Σ_{j=1}^{k−1} (−1)^{j−1} E_j p_{k−j}.
    pub fn power(alphabet: usize, m: usize, k: usize) -> SymPoly {
        let mut ps: Vec<SymPoly> = vec![SymPoly::constant(Rational::from_int(m as i64))];
        for kk in 1..=k {
            let mut acc = if kk <= m {
                let lead = Rational::from_int(if kk % 2 == 1 { kk as i64 } else { -(kk as i64) });
                SymPoly::gen(alphabet, kk).scale(&lead)
            } else {
                SymPoly::zero()
            };
            for j in 1..kk.min(m + 1) {
                let term = SymPoly::gen(alphabet, j).mul(&ps[kk - j]);
                if j % 2 == 1 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            ps.push(acc);
        }
        ps.pop().unwrap()
    }

    /// h_k(A − Ω) for a rational value multiset Ω:
    /// Σ_i h_{k−i}(A) · (−1)^i e_i(Ω).
    pub fn complete_minus_values(
        alphabet: usize,
        m: usize,
        k: usize,
        omega: &[Rational],
    ) -> SymPoly {
        let mut acc = SymPoly::zero();
        for i in 0..=k {
            let c = elementary_values(i as i64, omega);
            if c.is_zero() {
                continue;
            }
            let c = if i % 2 == 0 { c } else { -c };
            acc = acc.add(&SymPoly::complete(alphabet, m, k - i).scale(&c));
        }
        acc
    }

    /// S_λ of `alphabet` (size m) via the dual Jacobi–Trudi determinant
    /// det(E_{λ'_i − i + j}).
    pub fn schur(alphabet: usize, m: usize, lambda: &Partition) -> SymPoly {
        let conj = lambda.conjugate();
        let rows = conj.len();
        let entry = |i: usize, j: usize| -> SymPoly {
            let k = conj.part(i) as i64 - i as i64 + j as i64;
            if k < 0 || k as usize > m {
                SymPoly::zero()
            } else {
                SymPoly::gen(alphabet, k as usize)
            }
        };
        det_sympoly(rows, &entry)
    }

    /// Substitutes each generator by another polynomial.
    pub fn substitute(&self, map: &dyn Fn(Gen) -> SymPoly) -> SymPoly {
        let mut total = SymPoly::zero();
        for (mono, c) in &self.terms {
            let mut term = SymPoly::constant(c.clone());
            for (g, e) in mono.factors() {
                let img = map(*g);
                for _ in 0..*e {
                    term = term.mul(&img);
                }
            }
            total = total.add(&term);
        }
        total
    }

    /// Expands a single-alphabet polynomial into monomials in m variables.
    pub fn expand_single(&self, m: usize) -> MonomialPoly {
        let mut total = MonomialPoly::zero(m);
        for (mono, c) in &self.terms {
            let mut term = MonomialPoly::constant(m, c.clone());
            for (g, e) in &mono.0 {
                assert_eq!(g.alphabet, 0, "expand_single needs a single alphabet");
                let ek = MonomialPoly::elementary(m, g.k);
                for _ in 0..*e {
                    term = term.mul(&ek);
                }
            }
            total = total.add(&term);
        }
        total
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (g, e) in &m.0 {
                write!(f, "·E{}[a{}]", g.k, g.alphabet)?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Cofactor-expansion determinant for small matrices of ring elements.
fn det_sympoly(n: usize, entry: &dyn Fn(usize, usize) -> SymPoly) -> SymPoly {
    if n == 0 {
        return SymPoly::one();
    }
    let mat: Vec<Vec<SymPoly>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    fn rec(mat: &[Vec<SymPoly>], cols: &[usize]) -> SymPoly {
        let row = mat.len() - cols.len();
        if cols.is_empty() {
            return SymPoly::one();
        }
        let mut acc = SymPoly::zero();
        for (idx, &col) in cols.iter().enumerate() {
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let sub = rec(mat, &minor_cols);
            let term = mat[row][col].mul(&sub);
            if idx % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }
    rec(&mat, &(0..n).collect::<Vec<_>>())
}

/// Dense-ish sparse polynomial in m ordinary variables x_1..x_m, used as the
/// monomial-expansion oracle and for partial-degree checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MonomialPoly {
    pub fn zero(vars: usize) -> Self {
        MonomialPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        MonomialPoly::from_exponents(vars, vec![0; vars], c)
    }

    pub fn from_exponents(vars: usize, exponents: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exponents.len(), vars);
        let mut p = MonomialPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// e_k(x_1..x_m) expanded.
    pub fn elementary(vars: usize, k: usize) -> Self {
        let mut p = MonomialPoly::zero(vars);
        if k > vars {
            return p;
        }
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let mut exp = vec![0u32; vars];
            for &i in &subset {
                exp[i] = 1;
            }
            p.terms.insert(exp, Rational::one());
            // next k-combination
            let mut i = k;
            loop {
                if i == 0 {
                    return p;
                }
                i -= 1;
                if subset[i] != i + vars - k {
                    break;
                }
                if i == 0 {
                    return p;
                }
            }
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }

    pub fn add(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.vars, other.vars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c.clone();
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        MonomialPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.vars, other.vars);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        MonomialPoly {
            vars: self.vars,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Doubled partial degree in each variable (deg x = 2).
    pub fn partial_degrees(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.vars];
        for m in self.terms.keys() {
            for (i, e) in m.iter().enumerate() {
                out[i] = out[i].max(2 * *e as usize);
            }
        }
        out
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars);
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in values.iter().zip(m) {
                term *= v.pow(*e);
            }
            total += term;
        }
        total
    }
}
