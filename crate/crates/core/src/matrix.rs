//! Exact matrices over `Scalar` or `MultiPoly` entries.
//!
//! Scalar determinants use fraction-free (Bareiss) elimination; polynomial
//! determinants use cofactor expansion with a column-subset table, which is
//! exact and division-free. Row reduction, rank and nullspace over a field
//! are also provided here since half the library needs them.

use crate::poly::MultiPoly;
use crate::scalar::{inv_factorial, Field, Scalar};

/// A dense rectangular matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl ExactMatrix<Scalar> {
    pub fn identity(n: usize, field: Field) -> Self {
        ExactMatrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Field::Rational.one();
        }
        let field = self.data[0].field();
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = field.one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = !sign;
                    }
                    None => return field.zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m
                        .at(k, k)
                        .mul(m.at(i, j))
                        .sub(&m.at(i, k).mul(m.at(k, j)))
                        .div(&prev);
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = field.zero();
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.at(r, c).inv();
            for j in c..self.cols {
                let v = self.at(r, j).mul(&inv);
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// A basis of the right nullspace `{x : Mx = 0}`, one vector per free
    /// column of the reduced echelon form.
    pub fn nullspace(&self, field: Field) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![field.zero(); self.cols];
            x[free] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = m.at(r, free).neg();
            }
            basis.push(x);
        }
        basis
    }

    /// Matrix product.
    pub fn matmul(&self, other: &ExactMatrix<Scalar>) -> ExactMatrix<Scalar> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let field = self.data.first().map_or(Field::Rational, Scalar::field);
        ExactMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = field.zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }
}

impl ExactMatrix<MultiPoly> {
    /// Exact determinant by cofactor expansion over column subsets.
    /// Division-free, so it works for any polynomial entries.
    pub fn det(&self) -> MultiPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n > 0, "empty polynomial determinant");
        let vars = self.data[0].vars().clone();
        let field = self.data[0].field();
        // table[mask] = det of the submatrix on rows 0..popcount(mask)
        // and the column set `mask`
        let mut table: Vec<Option<MultiPoly>> = vec![None; 1 << n];
        table[0] = Some(MultiPoly::one(&vars, field));
        for mask in 1usize..(1 << n) {
            let r = (mask.count_ones() - 1) as usize;
            let mut acc = MultiPoly::zero(&vars, field);
            let mut sign_pos = true;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = self.at(r, j);
                if !entry.is_zero() {
                    let sub = table[mask ^ (1 << j)].as_ref().unwrap();
                    let term = entry.mul(sub);
                    acc = if sign_pos { acc.add(&term) } else { acc.sub(&term) };
                }
                sign_pos = !sign_pos;
            }
            table[mask] = Some(acc);
        }
        table[(1 << n) - 1].take().unwrap()
    }
}

/// Builds the banded factorial matrix with entries `1/(r-c+1)!` (ones on
/// the superdiagonal, `1/2!, 1/3!, ...` running down the first column in
/// Toeplitz bands) and returns its determinant, which equals `1/s!`.
pub fn det_y_identity(s: usize) -> Scalar {
    assert!(s >= 1, "matrix size must be at least 1");
    let y = ExactMatrix::from_fn(s, s, |r, c| {
        inv_factorial(r as i64 - c as i64 + 1)
    });
    y.det()
}
