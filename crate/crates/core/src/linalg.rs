//! Exact rational linear algebra: fraction-free determinants, Gaussian
//! elimination, rank, and linear solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Determinant by Bareiss fraction-free elimination on a denominator-cleared
    /// integer copy. Exact for any size; O(n^3) big-integer operations.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }

        // Clear denominators row by row, tracking the scale factor.
        let mut scale = BigRational::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            scale *= BigRational::new(BigInt::one(), lcm.clone());
            m.push(
                (0..n)
                    .map(|j| {
                        let r = self.get(i, j);
                        r.numer() * (&lcm / r.denom())
                    })
                    .collect(),
            );
        }

        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact by Bareiss
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det_int = m[n - 1][n - 1].clone() * BigInt::from(sign);
        Rational::from_big(BigRational::from_integer(det_int) * scale)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = m[rank][col].recip();
            for j in col..self.cols {
                m[rank][j] = &m[rank][j] * &inv;
            }
            for i in 0..self.rows {
                if i != rank && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in col..self.cols {
                        m[i][j] = &m[i][j] - &(&f * &m[rank][j]);
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Solves `self * x = b`. Returns `None` if the system is inconsistent;
    /// for underdetermined consistent systems, free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut m = self.to_rows();
        for (i, row) in m.iter_mut().enumerate() {
            row.push(b[i].clone());
        }
        let cols = self.cols;

        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].recip();
            for j in col..=cols {
                m[rank][j] = &m[rank][j] * &inv;
            }
            for i in 0..self.rows {
                if i != rank && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in col..=cols {
                        m[i][j] = &m[i][j] - &(&f * &m[rank][j]);
                    }
                }
            }
            pivot_of_col[col] = Some(rank);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }

        // Inconsistent if a zero row has nonzero rhs.
        for row in m.iter().skip(rank) {
            if row[..cols].iter().all(Rational::is_zero) && !row[cols].is_zero() {
                return None;
            }
        }

        let mut x = vec![Rational::zero(); cols];
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                x[col] = m[*r][cols].clone();
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[&[2]]).det(), int(2));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det(), int(-2));
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det(), int(0));
        // Vandermonde on 0,1,2,3: product of differences = 12.
        let v = RatMatrix::from_rows(
            (0..4)
                .map(|i: i64| (0..4).map(|j| int(i).pow(j)).collect())
                .collect(),
        );
        assert_eq!(v.det(), int(12));
    }

    #[test]
    fn det_rational_entries() {
        let a = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(a.det(), rat(1, 60));
    }

    #[test]
    fn solve_and_rank() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[int(5), int(10)]).unwrap();
        assert_eq!(x, vec![int(1), int(3)]);
        assert_eq!(a.rank(), 2);

        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.rank(), 1);
        assert!(singular.solve(&[int(1), int(3)]).is_none());
        assert!(singular.solve(&[int(1), int(2)]).is_some());
    }
}
