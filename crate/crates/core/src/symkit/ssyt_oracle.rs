//! Test-only brute-force oracle: Schur values by direct enumeration of
//! semistandard Young tableaux. Kept independent of the Jacobi–Trudi code
//! path on purpose.

use crate::rational::Rational;
use crate::symkit::partition::Partition;

/// Sum of x^T over semistandard fillings of the skew shape λ/μ with entries
/// in 1..=|points|, where x_i = points[i-1].
fn skew_schur_by_tableaux(lambda: &Partition, mu: &Partition, points: &[Rational]) -> Rational {
    assert!(lambda.contains(mu), "μ must sit inside λ");
    let n = points.len();
    let rows = lambda.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (i, j)))
        .collect();
    if cells.is_empty() {
        return Rational::one();
    }

    let mut grid: Vec<Vec<usize>> = (0..rows).map(|i| vec![0; lambda.part(i)]).collect();
    let mut total = Rational::zero();

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        lambda: &Partition,
        mu: &Partition,
        n: usize,
        points: &[Rational],
        acc: Rational,
        total: &mut Rational,
    ) {
        if idx == cells.len() {
            *total += acc;
            return;
        }
        let (i, j) = cells[idx];
        let mut lo = 1;
        if j > mu.part(i) {
            lo = lo.max(grid[i][j - 1]); // weakly increasing along rows
        }
        if i > 0 && j >= mu.part(i - 1) && j < lambda.part(i - 1) {
            lo = lo.max(grid[i - 1][j] + 1); // strictly increasing down columns
        }
        for v in lo..=n {
            grid[i][j] = v;
            rec(
                cells,
                idx + 1,
                grid,
                lambda,
                mu,
                n,
                points,
                &acc * &points[v - 1],
                total,
            );
        }
    }

    rec(
        &cells,
        0,
        &mut grid,
        lambda,
        mu,
        n,
        points,
        Rational::one(),
        &mut total,
    );
    total
}

/// S_λ at rational points by tableau enumeration.
pub fn schur_by_tableaux(lambda: &Partition, points: &[Rational]) -> Rational {
    skew_schur_by_tableaux(lambda, &Partition::empty(), points)
}

fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = vec![];
    let rows = lambda.len();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        lambda: &Partition,
        row: usize,
        rows: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let hi = lambda
            .part(row)
            .min(if row == 0 { usize::MAX } else { cur[row - 1] });
        for p in (0..=hi).rev() {
            cur.push(p);
            rec(lambda, row + 1, rows, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, rows, &mut cur, &mut out);
    out
}

/// S_λ(X−Y) by the tableau expansion
/// Σ_{μ⊆λ} (−1)^{|λ/μ|} s_μ(X) · s_{λ'/μ'}(Y).
pub fn schur_difference_by_tableaux(
    lambda: &Partition,
    xs: &[Rational],
    ys: &[Rational],
) -> Rational {
    let lam_conj = lambda.conjugate();
    let mut total = Rational::zero();
    for mu in subpartitions(lambda) {
        let skew_boxes = lambda.weight() - mu.weight();
        let x_part = schur_by_tableaux(&mu, xs);
        if x_part.is_zero() {
            continue;
        }
        let y_part = skew_schur_by_tableaux(&lam_conj, &mu.conjugate(), ys);
        let term = x_part * y_part;
        if skew_boxes % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn tableau_counts() {
        // s_(2,1)(1,1,1) counts SSYT of shape (2,1) with entries ≤ 3: 8 of them.
        let lam = Partition::new(vec![2, 1]).unwrap();
        let ones = vec![int(1); 3];
        assert_eq!(schur_by_tableaux(&lam, &ones), int(8));
        // Column of height 2 needs two distinct entries ≤ 1: impossible.
        let col = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(schur_by_tableaux(&col, &[int(5)]), int(0));
    }

    #[test]
    fn difference_reduces_to_plain() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let xs = vec![int(2), int(3)];
        assert_eq!(
            schur_difference_by_tableaux(&lam, &xs, &[]),
            schur_by_tableaux(&lam, &xs)
        );
    }
}
