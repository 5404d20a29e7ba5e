//! Scalar symmetric-function values at rational points: truncated power
//! series, complete/elementary symmetric values, difference alphabets, and
//! Schur values via Jacobi–Trudi determinants.

use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::rational::Rational;
use crate::symkit::partition::Partition;
use crate::symkit::RootSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("omega sets must be disjoint, both contain {0}")]
    OverlappingOmegas(Rational),
    #[error("values must be pairwise distinct, {0} repeats")]
    RepeatedValue(Rational),
    #[error("expected {expected} values, got {got}")]
    SizeMismatch { expected: usize, got: usize },
}

/// Coefficients `c[0..=deg]` of a truncated power series in t.
fn series_mul(a: &[Rational], b: &[Rational], deg: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); deg + 1];
    for (i, ai) in a.iter().enumerate().take(deg + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(deg + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Multiplicative inverse of a series with constant term 1, to order `deg`.
fn series_inv(a: &[Rational], deg: usize) -> Vec<Rational> {
    debug_assert!(a[0].is_one());
    let mut inv = vec![Rational::zero(); deg + 1];
    inv[0] = Rational::one();
    for k in 1..=deg {
        let mut acc = Rational::zero();
        for j in 1..=k {
            let aj = a.get(j).cloned().unwrap_or_else(Rational::zero);
            if !aj.is_zero() {
                acc += aj * &inv[k - j];
            }
        }
        inv[k] = -acc;
    }
    inv
}

/// ∏_{v ∈ values} (1 − v·t), truncated to order `deg`.
fn linear_product(values: &[Rational], deg: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); deg + 1];
    acc[0] = Rational::one();
    for v in values {
        let factor = [Rational::one(), -v.clone()];
        acc = series_mul(&acc, &factor, deg);
    }
    acc
}

/// h_k(Ω1 − Ω2) for multisets of rational values: the coefficient of t^k in
/// ∏_{r∈Ω2}(1−rt) / ∏_{s∈Ω1}(1−st).
pub fn complete_diff_pair(k: i64, omega1: &[Rational], omega2: &[Rational]) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let deg = k as usize;
    let num = linear_product(omega2, deg);
    let den = linear_product(omega1, deg);
    let series = series_mul(&num, &series_inv(&den, deg), deg);
    series[deg].clone()
}

/// h_k(Ω − Σ), where Ω is the multiset `values` and Σ the root set.
pub fn complete_difference(k: i64, values: &[Rational], sigma: &RootSet) -> Rational {
    complete_diff_pair(k, values, sigma.roots())
}

/// h_k at rational values (plain alphabet).
pub fn complete_values(k: i64, values: &[Rational]) -> Rational {
    complete_diff_pair(k, values, &[])
}

/// p_k at rational values: the k-th power sum. Zero for k < 0.
pub fn power_values(k: i64, values: &[Rational]) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    values.iter().map(|v| v.pow(k as u32)).sum()
}

/// e_k at rational values. Zero for k < 0 or k > |values|.
pub fn elementary_values(k: i64, values: &[Rational]) -> Rational {
    if k < 0 || k as usize > values.len() {
        return Rational::zero();
    }
    let deg = k as usize;
    // e_k(V) = (-1)^k [t^k] ∏ (1 - v t)
    let coeff = linear_product(values, deg)[deg].clone();
    if k % 2 == 0 {
        coeff
    } else {
        -coeff
    }
}

/// S_λ(Ω1 − Ω2) via the Jacobi–Trudi determinant
/// det(h_{λ_i − i + j}(Ω1 − Ω2)).
pub fn schur_difference(lambda: &Partition, omega1: &[Rational], omega2: &[Rational]) -> Rational {
    let rows = lambda.len();
    if rows == 0 {
        return Rational::one();
    }
    let m = RatMatrix::from_rows(
        (0..rows)
            .map(|i| {
                (0..rows)
                    .map(|j| {
                        let k = lambda.part(i) as i64 - i as i64 + j as i64;
                        complete_diff_pair(k, omega1, omega2)
                    })
                    .collect()
            })
            .collect(),
    );
    m.det()
}

/// S_λ at rational values (plain alphabet).
pub fn schur_values(lambda: &Partition, values: &[Rational]) -> Rational {
    schur_difference(lambda, values, &[])
}

fn check_distinct(values: &[Rational]) -> Result<(), ScalarError> {
    for (i, v) in values.iter().enumerate() {
        if values[i + 1..].contains(v) {
            return Err(ScalarError::RepeatedValue(v.clone()));
        }
    }
    Ok(())
}

/// S_{λ_{m,n}}(Ω1 − Ω2) for disjoint value sets with |Ω1| = m, |Ω2| = n.
/// The result equals ∏_{s∈Ω1, r∈Ω2}(s − r) and is nonzero; both facts are
/// asserted against the determinant evaluation.
pub fn schur_box_ratio(
    m: usize,
    n: usize,
    omega1: &[Rational],
    omega2: &[Rational],
) -> Result<Rational, ScalarError> {
    if omega1.len() != m {
        return Err(ScalarError::SizeMismatch {
            expected: m,
            got: omega1.len(),
        });
    }
    if omega2.len() != n {
        return Err(ScalarError::SizeMismatch {
            expected: n,
            got: omega2.len(),
        });
    }
    check_distinct(omega1)?;
    check_distinct(omega2)?;
    if let Some(v) = omega1.iter().find(|v| omega2.contains(v)) {
        return Err(ScalarError::OverlappingOmegas(v.clone()));
    }

    let det = schur_difference(&Partition::rectangle(m, n), omega1, omega2);
    let product: Rational = omega1
        .iter()
        .flat_map(|s| omega2.iter().map(move |r| s - r))
        .product();
    assert_eq!(det, product, "rectangular Schur factorization violated");
    assert!(!det.is_zero());
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::symkit::partition::partitions_in_box;

    fn vals(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn complete_difference_examples() {
        let sigma = RootSet::standard(3);
        // (1-t)(1-2t) = 1 - 3t + 2t^2
        assert_eq!(complete_difference(1, &vals(&[0]), &sigma), int(-3));
        assert_eq!(complete_difference(2, &vals(&[0]), &sigma), int(2));
        assert_eq!(complete_difference(3, &vals(&[0]), &sigma), int(0));
        assert_eq!(complete_difference(0, &vals(&[0, 2]), &sigma), int(1));
    }

    #[test]
    fn vanishing_above_box() {
        // h_k(Ω−Σ) = 0 for every Ω ⊆ Σ with |Ω| = m and k > N−m.
        for n in 2..=5usize {
            let sigma = RootSet::standard(n);
            for mask in 1u32..(1 << n) {
                let omega = sigma.subset_values(mask);
                let m = omega.len();
                for k in (n - m + 1)..=(n - m + 4) {
                    assert_eq!(
                        complete_difference(k as i64, &omega, &sigma),
                        int(0),
                        "N={n} mask={mask} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn complete_and_elementary_values() {
        // h_2(1,2) = 1 + 2 + 4 = 7
        assert_eq!(complete_values(2, &vals(&[1, 2])), int(7));
        assert_eq!(elementary_values(2, &vals(&[1, 2, 3])), int(11));
        assert_eq!(elementary_values(4, &vals(&[1, 2, 3])), int(0));
        assert_eq!(elementary_values(0, &vals(&[])), int(1));
        assert_eq!(complete_values(3, &[rat(1, 2)]), rat(1, 8));
    }

    #[test]
    fn schur_difference_examples() {
        let lam1 = Partition::new(vec![1]).unwrap();
        assert_eq!(schur_difference(&lam1, &vals(&[0]), &vals(&[1])), int(-1));
        assert_eq!(
            schur_difference(&Partition::empty(), &vals(&[5]), &vals(&[7])),
            int(1)
        );
        // Rectangular Schur of a difference vanishes when m > |X| and n > |Y|.
        let box32 = Partition::rectangle(3, 2);
        assert_eq!(
            schur_difference(&box32, &vals(&[1, 4]), &vals(&[2])),
            int(0)
        );
        let box22 = Partition::rectangle(2, 2);
        assert_eq!(schur_difference(&box22, &vals(&[3]), &vals(&[5])), int(0));
    }

    #[test]
    fn schur_box_ratio_examples() {
        assert_eq!(
            schur_box_ratio(1, 1, &vals(&[0]), &vals(&[1])).unwrap(),
            int(-1)
        );
        assert_eq!(
            schur_box_ratio(1, 2, &vals(&[3]), &vals(&[0, 1])).unwrap(),
            int(6)
        );
        assert_eq!(
            schur_box_ratio(1, 1, &vals(&[2]), &vals(&[2])),
            Err(ScalarError::OverlappingOmegas(int(2)))
        );
        assert_eq!(
            schur_box_ratio(2, 1, &vals(&[1, 1]), &vals(&[0])),
            Err(ScalarError::RepeatedValue(int(1)))
        );
    }

    #[test]
    fn schur_box_ratio_exhaustive_small() {
        // Product form over all disjoint nonempty pairs drawn from {0,...,5}.
        let pool: Vec<Rational> = (0..6).map(int).collect();
        let values = |mask: u32| -> Vec<Rational> {
            (0..6)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pool[i].clone())
                .collect()
        };
        let mut cases = 0;
        for mask1 in 1u32..(1 << 6) {
            for mask2 in 1u32..(1 << 6) {
                if mask1 & mask2 != 0 {
                    continue;
                }
                let (o1, o2) = (values(mask1), values(mask2));
                schur_box_ratio(o1.len(), o2.len(), &o1, &o2).unwrap();
                cases += 1;
            }
        }
        assert!(cases > 600);
    }

    #[test]
    fn schur_against_ssyt_oracle() {
        // Monomial-expansion oracle: S_λ(x_1..x_m) = Σ_{T semistandard} x^T,
        // evaluated at rational points.
        for m in 1..=3usize {
            let points: Vec<Rational> = vec![int(2), rat(1, 2), int(-3)][..m].to_vec();
            for lam in partitions_in_box(3, 3) {
                if lam.weight() > 6 {
                    continue;
                }
                let expected = crate::symkit::ssyt_oracle::schur_by_tableaux(&lam, &points);
                assert_eq!(schur_values(&lam, &points), expected, "λ={lam} m={m}");
            }
        }
    }

    #[test]
    fn schur_difference_against_tableau_oracle() {
        // S_λ(X−Y) = Σ_{μ⊆λ} (−1)^{|λ/μ|} s_μ(X) s_{λ'/μ'}(Y), with both skew
        // and straight Schur values expanded from tableaux.
        let xs = vals(&[2, 5]);
        let ys = vec![int(1), rat(1, 3), int(4)];
        for lam in partitions_in_box(3, 2) {
            let expected = crate::symkit::ssyt_oracle::schur_difference_by_tableaux(&lam, &xs, &ys);
            assert_eq!(schur_difference(&lam, &xs, &ys), expected, "λ={lam}");
        }
    }
}
