//! Affine substitution on elementary symmetric polynomials.

use thiserror::Error;

use crate::rational::Rational;
use crate::symkit::binomial;
use crate::symkit::sympoly::SymPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AffineError {
    #[error("scale factor a must be nonzero")]
    ZeroScale,
    #[error("index i={i} out of range 1..={m}")]
    IndexOutOfRange { i: usize, m: usize },
}

/// The i-th elementary symmetric polynomial of {a·x_1 + b, ..., a·x_m + b},
/// written in the elementary symmetric polynomials of {x_1, ..., x_m}:
///
///   ψ(X̂_i) = Σ_{j=0}^{i} C(m−j, i−j) a^j b^{i−j} X_j.
///
/// The leading term is a^i X_i; all other terms involve only X_0..X_{i−1}.
pub fn affine_elementary_substitution(
    i: usize,
    m: usize,
    a: &Rational,
    b: &Rational,
) -> Result<SymPoly, AffineError> {
    if a.is_zero() {
        return Err(AffineError::ZeroScale);
    }
    if i == 0 || i > m {
        return Err(AffineError::IndexOutOfRange { i, m });
    }
    let mut acc = SymPoly::zero();
    for j in 0..=i {
        let c = Rational::from_int(binomial(m - j, i - j) as i64)
            * a.pow(j as u32)
            * b.pow((i - j) as u32);
        acc = acc.add(&SymPoly::gen(0, j).scale(&c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::symkit::sympoly::MonomialPoly;

    fn monomial_x(m: usize, v: usize) -> MonomialPoly {
        let mut exp = vec![0u32; m];
        exp[v] = 1;
        MonomialPoly::from_exponents(m, exp, Rational::one())
    }

    /// Oracle: expand e_i({a·x_v + b}) directly as a sum over i-subsets.
    fn oracle(i: usize, m: usize, a: &Rational, b: &Rational) -> MonomialPoly {
        let shifted: Vec<MonomialPoly> = (0..m)
            .map(|v| {
                monomial_x(m, v)
                    .mul(&MonomialPoly::constant(m, a.clone()))
                    .add(&MonomialPoly::constant(m, b.clone()))
            })
            .collect();
        fn rec(
            shifted: &[MonomialPoly],
            start: usize,
            left: usize,
            acc: MonomialPoly,
            total: &mut MonomialPoly,
        ) {
            if left == 0 {
                *total = total.add(&acc);
                return;
            }
            for pos in start..=shifted.len() - left {
                rec(shifted, pos + 1, left - 1, acc.mul(&shifted[pos]), total);
            }
        }
        let mut total = MonomialPoly::zero(m);
        rec(
            &shifted,
            0,
            i,
            MonomialPoly::constant(m, Rational::one()),
            &mut total,
        );
        total
    }

    #[test]
    fn identity_substitution() {
        for m in 1..=4 {
            for i in 1..=m {
                let p = affine_elementary_substitution(i, m, &int(1), &int(0)).unwrap();
                assert_eq!(p, SymPoly::gen(0, i));
            }
        }
    }

    #[test]
    fn worked_examples() {
        // i=1, m=2, (a,b) = (2,3): 2·X1 + 6
        let p = affine_elementary_substitution(1, 2, &int(2), &int(3)).unwrap();
        let expect = SymPoly::gen(0, 1)
            .scale(&int(2))
            .add(&SymPoly::constant(int(6)));
        assert_eq!(p, expect);
        // i=2, m=2, (a,b) = (1,1): X2 + X1 + 1
        let p = affine_elementary_substitution(2, 2, &int(1), &int(1)).unwrap();
        let expect = SymPoly::gen(0, 2)
            .add(&SymPoly::gen(0, 1))
            .add(&SymPoly::one());
        assert_eq!(p, expect);
        assert_eq!(
            affine_elementary_substitution(1, 2, &int(0), &int(1)),
            Err(AffineError::ZeroScale)
        );
        assert_eq!(
            affine_elementary_substitution(3, 2, &int(1), &int(1)),
            Err(AffineError::IndexOutOfRange { i: 3, m: 2 })
        );
    }

    #[test]
    fn against_monomial_oracle() {
        for m in 1..=3usize {
            for i in 1..=m {
                for (a, b) in [(int(2), int(3)), (int(-1), rat(1, 2)), (rat(1, 2), int(0))] {
                    let sym = affine_elementary_substitution(i, m, &a, &b).unwrap();
                    assert_eq!(sym.expand_single(m), oracle(i, m, &a, &b), "i={i} m={m}");
                }
            }
        }
    }

    #[test]
    fn composition_law() {
        // Substituting (a,b) into the generators of the (a',b') result equals
        // the single substitution (a'·a, a'·b + b').
        let (a, b) = (int(2), int(1));
        let (a2, b2) = (int(-1), int(3));
        for m in 1..=4usize {
            for i in 1..=m {
                let outer = affine_elementary_substitution(i, m, &a2, &b2).unwrap();
                let composed =
                    outer.substitute(&|g| affine_elementary_substitution(g.k, m, &a, &b).unwrap());
                let single =
                    affine_elementary_substitution(i, m, &(&a2 * &a), &(&a2 * &b + &b2)).unwrap();
                assert_eq!(composed, single, "i={i} m={m}");
            }
        }
    }
}
