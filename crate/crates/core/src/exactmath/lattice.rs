use crate::error::{Error, Result};
use crate::exactmath::{Int, IntMatrix};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Smith normal form `left * m * right = diag(d_1..d_n)` with unimodular
/// transforms and a divisibility chain `d_1 | d_2 | ... | d_n`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub diagonal: Vec<Int>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    pub fn diag_matrix(&self) -> IntMatrix {
        let n = self.diagonal.len();
        let mut d = IntMatrix::zero(n, n);
        for i in 0..n {
            d[(i, i)] = self.diagonal[i].clone();
        }
        d
    }
}

/// Smith normal form of a square nonsingular integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithDecomposition> {
    if m.rows() != m.cols() {
        return Err(Error::SingularMatrix);
    }
    let snf = smith_general(m);
    if snf.diagonal.iter().any(|d| d.is_zero()) {
        return Err(Error::SingularMatrix);
    }
    Ok(snf)
}

/// Smith form of an arbitrary rectangular integer matrix; the diagonal has
/// min(rows, cols) entries, zeros trailing when the rank is deficient.
pub(crate) fn smith_general(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let steps = rows.min(cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);

    for t in 0..steps {
        loop {
            // move the minimal nonzero entry of the trailing block to (t,t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[(i, j)].is_zero()
                        && best
                            .map(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match best {
                Some(p) => p,
                None => {
                    // trailing block is zero; remaining diagonal entries stay 0
                    let diagonal: Vec<Int> = (0..steps).map(|i| a[(i, i)].clone()).collect();
                    return SmithDecomposition { diagonal, left, right };
                }
            };
            swap_rows(&mut a, t, pi);
            swap_rows(&mut left, t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut right, t, pj);

            let mut clean = true;
            for r in t + 1..rows {
                if !a[(r, t)].is_zero() {
                    let q = div_rounded(&a[(r, t)], &a[(t, t)]);
                    row_sub(&mut a, r, t, &q);
                    row_sub(&mut left, r, t, &q);
                    if !a[(r, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for c in t + 1..cols {
                if !a[(t, c)].is_zero() {
                    let q = div_rounded(&a[(t, c)], &a[(t, t)]);
                    col_sub(&mut a, c, t, &q);
                    col_sub(&mut right, c, t, &q);
                    if !a[(t, c)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let pivot = a[(t, t)].clone();
            let mut fixed = true;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !a[(r, c)].mod_floor(&pivot).is_zero() {
                        row_add(&mut a, t, r);
                        row_add(&mut left, t, r);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[(t, t)].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
    }

    let diagonal: Vec<Int> = (0..steps).map(|i| a[(i, i)].clone()).collect();
    debug_assert!(diagonal.windows(2).all(|w| w[1].is_zero() || w[1].mod_floor(&w[0]).is_zero()));
    SmithDecomposition { diagonal, left, right }
}

/// Canonical basis of `{ k in Z^n : A k = 0 (mod s) }`.
///
/// Solved through the Smith form of `A`: with `U A V = D`, the condition
/// becomes `d_i y_i = 0 (mod s)` on `y = V^{-1} k`, so each `y_i` runs over
/// multiples of `s / gcd(d_i, s)`.
pub fn congruence_kernel(a: &IntMatrix, s: &Int) -> IntMatrix {
    assert!(s.is_positive());
    let n = a.cols();
    let snf = smith_general(a);
    let mut scale = vec![Int::from(1); n];
    for (i, d) in snf.diagonal.iter().enumerate() {
        let g = d.gcd(s);
        scale[i] = s / g;
    }
    let mut gens = IntMatrix::zero(n, n);
    for j in 0..n {
        for i in 0..n {
            gens[(i, j)] = &snf.right[(i, j)] * &scale[j];
        }
    }
    hermite_normal_form(&gens).expect("kernel lattice has full rank")
}

/// Canonical (lower-triangular, column-style) Hermite basis of the lattice
/// spanned by the columns of `gens`.  Requires the lattice to have full rank,
/// which is how it is used here: every lattice handled by the symmetry code
/// contains the column span of an invertible exponent matrix.
pub fn hermite_normal_form(gens: &IntMatrix) -> Result<IntMatrix> {
    let n = gens.rows();
    let m = gens.cols();
    let mut a = gens.clone();
    for t in 0..n {
        loop {
            let mut best: Option<usize> = None;
            for j in t..m {
                if !a[(t, j)].is_zero()
                    && best.map(|b| a[(t, j)].abs() < a[(t, b)].abs()).unwrap_or(true)
                {
                    best = Some(j);
                }
            }
            let pj = best.ok_or(Error::SingularMatrix)?;
            swap_cols(&mut a, t, pj);
            let mut clean = true;
            for j in t + 1..m {
                if !a[(t, j)].is_zero() {
                    let q = div_rounded(&a[(t, j)], &a[(t, t)]);
                    col_sub(&mut a, j, t, &q);
                    if !a[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[(t, t)].is_negative() {
            negate_col(&mut a, t);
        }
        // canonical reduction of the earlier columns against this pivot
        for j in 0..t {
            let q = a[(t, j)].div_floor(&a[(t, t)]);
            if !q.is_zero() {
                col_sub(&mut a, j, t, &q);
            }
        }
    }
    let mut h = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = a[(i, j)].clone();
        }
    }
    Ok(h)
}

/// Does the (lower-triangular Hermite) basis `h` span a lattice containing `v`?
pub fn lattice_contains(h: &IntMatrix, v: &[Int]) -> bool {
    let n = h.rows();
    debug_assert_eq!(v.len(), n);
    let mut rem: Vec<Int> = v.to_vec();
    for i in 0..n {
        let (q, r) = rem[i].div_rem(&h[(i, i)]);
        if !r.is_zero() {
            return false;
        }
        for k in i..n {
            let s = &q * &h[(k, i)];
            rem[k] -= s;
        }
    }
    true
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m[(a, j)].clone();
        let y = m[(b, j)].clone();
        m[(a, j)] = y;
        m[(b, j)] = x;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m[(i, a)].clone();
        let y = m[(i, b)].clone();
        m[(i, a)] = y;
        m[(i, b)] = x;
    }
}

fn row_sub(m: &mut IntMatrix, r: usize, pivot: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        let s = q * &m[(pivot, j)];
        m[(r, j)] -= s;
    }
}

fn col_sub(m: &mut IntMatrix, c: usize, pivot: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        let s = q * &m[(i, pivot)];
        m[(i, c)] -= s;
    }
}

fn row_add(m: &mut IntMatrix, dst: usize, src: usize) {
    for j in 0..m.cols() {
        let s = m[(src, j)].clone();
        m[(dst, j)] += s;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        let v = -m[(r, j)].clone();
        m[(r, j)] = v;
    }
}

fn negate_col(m: &mut IntMatrix, c: usize) {
    for i in 0..m.rows() {
        let v = -m[(i, c)].clone();
        m[(i, c)] = v;
    }
}

/// Division with rounding to nearest, which keeps Euclidean reduction steps short.
fn div_rounded(a: &Int, b: &Int) -> Int {
    let (mut q, r) = a.div_rem(b);
    let two_r: Int = &r * 2;
    if two_r.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}
