use crate::error::{Error, Result};
use crate::exactmath::{Int, Rational};
use num_traits::{One, Zero};

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| Rational::from_integer(x.clone())).collect(),
        }
    }

    /// Exact determinant (square matrices only), via the rational elimination.
    pub fn det(&self) -> Int {
        let d = self.to_rational().det();
        debug_assert!(d.is_integer());
        d.to_integer()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by Gaussian elimination with exact pivoting.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m[(r, col)].is_zero()) {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if pivot != col {
                for j in 0..n {
                    let a = m[(pivot, j)].clone();
                    let b = m[(col, j)].clone();
                    m[(pivot, j)] = b;
                    m[(col, j)] = a;
                }
                det = -det;
            }
            let p = m[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for j in col..n {
                    let sub = &factor * &m[(col, j)];
                    m[(r, j)] -= sub;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn invert(&self) -> Result<RationalMatrix> {
        if self.rows != self.cols {
            return Err(Error::SingularMatrix);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero()).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    m.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = m[(col, col)].clone();
            for j in 0..n {
                m[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in 0..n {
                    let a = &factor * &m[(col, j)];
                    m[(r, j)] -= a;
                    let b = &factor * &inv[(col, j)];
                    inv[(r, j)] -= b;
                }
            }
        }
        Ok(inv)
    }

    /// Exact rank by elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let pivot = match (rank..rows).find(|&r| !m[(r, col)].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            for j in 0..cols {
                m.data.swap(pivot * cols + j, rank * cols + j);
            }
            let p = m[(rank, col)].clone();
            for r in rank + 1..rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for j in col..cols {
                    let sub = &factor * &m[(rank, j)];
                    m[(r, j)] -= sub;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    fn scalar(n: usize, c: i64) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = rat_int(c);
        }
        m
    }

    #[test]
    fn invert_scalar_matrix() {
        let m = scalar(5, 5);
        let inv = m.invert().unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { rat(1, 5) } else { rat_int(0) };
                assert_eq!(inv[(i, j)], expect);
            }
        }
    }

    #[test]
    fn invert_two_by_two() {
        // cofactor formula by hand: inverse of [[3,0],[1,2]] is (1/6)[[2,0],[-1,3]]
        let m = IntMatrix::from_i64(&[&[3, 0], &[1, 2]]).to_rational();
        let inv = m.invert().unwrap();
        assert_eq!(inv[(0, 0)], rat(2, 6));
        assert_eq!(inv[(0, 1)], rat_int(0));
        assert_eq!(inv[(1, 0)], rat(-1, 6));
        assert_eq!(inv[(1, 1)], rat(3, 6));
        assert_eq!(m.mul(&inv), RationalMatrix::identity(2));
    }

    #[test]
    fn invert_identity() {
        let id = RationalMatrix::identity(4);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn invert_singular_fails() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).to_rational();
        assert_eq!(m.invert(), Err(Error::SingularMatrix));
    }

    #[test]
    fn invert_is_involutive() {
        let m = IntMatrix::from_i64(&[&[4, 1, 0], &[0, 3, 1], &[1, 0, 5]]).to_rational();
        assert_eq!(m.invert().unwrap().invert().unwrap(), m);
    }

    #[test]
    fn det_matches_cofactor() {
        let m = IntMatrix::from_i64(&[&[4, 1], &[2, 3]]);
        assert_eq!(m.det(), Int::from(10));
        let m = IntMatrix::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(m.det(), Int::from(-2));
    }

    #[test]
    fn rank_of_rank_deficient() {
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).to_rational();
        assert_eq!(m.rank(), 2);
    }
}
