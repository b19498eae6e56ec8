//! Dense exact linear algebra over a [`Field`].

use super::field::Field;

/// Row-major dense matrix over `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(field: &K, rows: Vec<Vec<K::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        let _ = field;
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix<K>, field: &K) -> Matrix<K> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !field.is_zero(b) {
                        let v = field.add(out.get(i, j), &field.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn is_zero(&self, field: &K) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    /// Exact rank by Gaussian elimination on a copy.
    pub fn rank(&self, field: &K) -> usize {
        rank_of(field, self.rows, self.cols, self.data.clone())
    }
}

/// Exact rank of a dense row-major matrix.
pub fn rank<K: Field>(field: &K, m: &Matrix<K>) -> usize {
    m.rank(field)
}

fn rank_of<K: Field>(field: &K, rows: usize, cols: usize, mut data: Vec<K::Elem>) -> usize {
    if rows == 0 || cols == 0 {
        return 0;
    }
    // eliminate along the shorter side
    if cols > rows {
        let mut t = Vec::with_capacity(data.len());
        for c in 0..cols {
            for r in 0..rows {
                t.push(data[r * cols + c].clone());
            }
        }
        return rank_of(field, cols, rows, t);
    }
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !field.is_zero(&data[r * cols + col])) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                data.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = field.inv(&data[rank * cols + col]);
        for c in col..cols {
            let v = field.mul(&data[rank * cols + c], &inv);
            data[rank * cols + c] = v;
        }
        let (head, tail) = data.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        for r in 0..rows - rank - 1 {
            let row = &mut tail[r * cols..(r + 1) * cols];
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for c in col..cols {
                if !field.is_zero(&pivot_row[c]) {
                    row[c] = field.sub(&row[c], &field.mul(&factor, &pivot_row[c]));
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};

    #[test]
    fn identity_rank() {
        let q = Rationals;
        assert_eq!(Matrix::identity(&q, 2).rank(&q), 2);
    }

    #[test]
    fn zero_rank() {
        let q = Rationals;
        assert_eq!(Matrix::zeros(&q, 3, 4).rank(&q), 0);
        assert_eq!(Matrix::zeros(&q, 0, 4).rank(&q), 0);
    }

    #[test]
    fn dependent_rows_mod_five() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_rows(&f, vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&f, &m), 1);
    }

    #[test]
    fn wide_and_tall_agree() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(&f, vec![vec![1, 2, 3, 4], vec![2, 4, 6, 1], vec![3, 6, 2, 5]]);
        assert_eq!(m.rank(&f), m.transpose().rank(&f));
    }
}
