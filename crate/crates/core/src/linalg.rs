//! Dense exact linear algebra over rationals: Gaussian elimination for
//! solving linear systems and null-space extraction.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qcore::Rational;

/// Dense matrix of exact rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form in place; returns the pivot column of each
    /// pivot row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).clone().recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Solves `A x = b` exactly. Free variables (if any) are set to zero;
    /// returns `Err(SingularSystem)` when inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::SingularSystem);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Ok(x)
    }

    /// Exact basis of the null space, one vector per free column of the
    /// reduced row echelon form.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::from_integer(1.into());
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -m.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{rat, rat_int};

    fn from_rows(rows: &[&[Rational]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[test]
    fn solve_square() {
        let m = from_rows(&[
            &[rat_int(2), rat_int(1)],
            &[rat_int(1), rat_int(3)],
        ]);
        let x = m.solve(&[rat_int(5), rat_int(10)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(3)]);
    }

    #[test]
    fn solve_exact_fractions() {
        let m = from_rows(&[
            &[rat(1, 3), rat(2, 7)],
            &[rat(5, 2), rat(-1, 4)],
        ]);
        let x = m.solve(&[rat(1, 21), rat(9, 4)]).unwrap();
        // verify by substitution
        assert_eq!(&rat(1, 3) * &x[0] + &rat(2, 7) * &x[1], rat(1, 21));
        assert_eq!(&rat(5, 2) * &x[0] + &rat(-1, 4) * &x[1], rat(9, 4));
    }

    #[test]
    fn inconsistent_system() {
        let m = from_rows(&[
            &[rat_int(1), rat_int(1)],
            &[rat_int(2), rat_int(2)],
        ]);
        assert!(m.solve(&[rat_int(1), rat_int(3)]).is_err());
    }

    #[test]
    fn null_space_basis() {
        // x + y + z = 0 has a 2-dimensional kernel
        let m = from_rows(&[&[rat_int(1), rat_int(1), rat_int(1)]]);
        let basis = m.null_space();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let dot: Rational = v.iter().sum();
            assert_eq!(dot, rat_int(0));
        }
    }

    #[test]
    fn null_space_trivial() {
        let m = from_rows(&[
            &[rat_int(1), rat_int(0)],
            &[rat_int(0), rat_int(1)],
        ]);
        assert!(m.null_space().is_empty());
    }
}
