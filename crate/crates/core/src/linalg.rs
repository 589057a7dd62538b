//! Small dense linear algebra over exact scalars, plus integer Smith normal form.
//!
//! Everything here is sized for root-system work (dimension at most a handful),
//! so the algorithms are the textbook ones: Gauss–Jordan elimination over a
//! field and a straightforward Smith reduction over the integers.

use std::fmt;

use num_traits::{Num, Signed, Zero};

use crate::Rational;

/// Scalar field the elimination routines work over.
///
/// `Rational` is what the library uses everywhere; `f64` also satisfies the
/// bound, which is convenient for quick numerical cross-checks in tests.
pub trait Scalar: Clone + PartialEq + PartialOrd + Num + Signed + fmt::Debug {}

impl<T> Scalar for T where T: Clone + PartialEq + PartialOrd + Num + Signed + fmt::Debug {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| &self.data[r * self.cols..(r + 1) * self.cols]))
            .finish()
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }
}

impl<T: Clone + Num> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self[(r, k)].clone() * other[(k, c)].clone())
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).fold(T::zero(), |acc, k| acc + self[(r, k)].clone() * v[k].clone()))
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row echelon form; returns the reduced matrix and its pivot columns.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        // largest magnitude pivot; exact for rationals, stable enough for floats
        let Some(p) = (row..a.rows)
            .filter(|&r| !a[(r, col)].is_zero())
            .max_by(|&x, &y| a[(x, col)].abs().partial_cmp(&a[(y, col)].abs()).unwrap())
        else {
            continue;
        };
        for c in 0..a.cols {
            a.data.swap(row * a.cols + c, p * a.cols + c);
        }
        let inv = T::one() / a[(row, col)].clone();
        for c in 0..a.cols {
            a[(row, c)] = a[(row, c)].clone() * inv.clone();
        }
        for r in 0..a.rows {
            if r != row && !a[(r, col)].is_zero() {
                let f = a[(r, col)].clone();
                for c in 0..a.cols {
                    a[(r, c)] = a[(r, c)].clone() - f.clone() * a[(row, c)].clone();
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<T: Scalar>(m: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows, b.len(), "dimension mismatch");
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |r, c| if c < m.cols { m[(r, c)].clone() } else { b[r].clone() });
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![T::zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[(r, m.cols)].clone();
    }
    Some(x)
}

pub fn inverse<T: Scalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    assert_eq!(m.rows, m.cols, "inverse of a non-square matrix");
    let n = m.rows;
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            T::one()
        } else {
            T::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
}

/// Basis of the null space `{x : m x = 0}`.
pub fn kernel<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (red, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); m.cols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red[(r, f)].clone();
            }
            v
        })
        .collect()
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with
/// `d[i] | d[i+1]`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: Matrix<i64>,
    pub d: Matrix<i64>,
    pub v: Matrix<i64>,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn smith_normal_form(a: &Matrix<i64>) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = Matrix::<i64>::identity(m);
    let mut v = Matrix::<i64>::identity(n);

    fn swap_rows(x: &mut Matrix<i64>, i: usize, j: usize) {
        for c in 0..x.cols {
            x.data.swap(i * x.cols + c, j * x.cols + c);
        }
    }
    fn swap_cols(x: &mut Matrix<i64>, i: usize, j: usize) {
        for r in 0..x.rows {
            x.data.swap(r * x.cols + i, r * x.cols + j);
        }
    }
    // row_i += k * row_j
    fn add_row(x: &mut Matrix<i64>, i: usize, j: usize, k: i64) {
        for c in 0..x.cols {
            x[(i, c)] += k * x[(j, c)];
        }
    }
    fn add_col(x: &mut Matrix<i64>, i: usize, j: usize, k: i64) {
        for r in 0..x.rows {
            x[(r, i)] += k * x[(r, j)];
        }
    }

    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block goes to (t, t)
            let Some((pr, pc)) = (t..m)
                .flat_map(|r| (t..n).map(move |c| (r, c)))
                .filter(|&(r, c)| d[(r, c)] != 0)
                .min_by_key(|&(r, c)| d[(r, c)].abs())
            else {
                return finish(u, d, v);
            };
            swap_rows(&mut d, t, pr);
            swap_rows(&mut u, t, pr);
            swap_cols(&mut d, t, pc);
            swap_cols(&mut v, t, pc);

            let p = d[(t, t)];
            let mut clean = true;
            for r in t + 1..m {
                let q = num_integer::Integer::div_floor(&d[(r, t)], &p);
                if q != 0 {
                    add_row(&mut d, r, t, -q);
                    add_row(&mut u, r, t, -q);
                }
                clean &= d[(r, t)] == 0;
            }
            for c in t + 1..n {
                let q = num_integer::Integer::div_floor(&d[(t, c)], &p);
                if q != 0 {
                    add_col(&mut d, c, t, -q);
                    add_col(&mut v, c, t, -q);
                }
                clean &= d[(t, c)] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into row t and retry
            if let Some(r) = (t + 1..m).find(|&r| (t + 1..n).any(|c| d[(r, c)] % p != 0)) {
                add_row(&mut d, t, r, 1);
                add_row(&mut u, t, r, 1);
                continue;
            }
            break;
        }
    }
    return finish(u, d, v);

    fn finish(mut u: Matrix<i64>, mut d: Matrix<i64>, v: Matrix<i64>) -> SmithForm {
        for i in 0..d.rows.min(d.cols) {
            if d[(i, i)] < 0 {
                for c in 0..d.cols {
                    d[(i, c)] = -d[(i, c)];
                }
                for c in 0..u.cols {
                    u[(i, c)] = -u[(i, c)];
                }
            }
        }
        SmithForm { u, d, v }
    }
}

/// An integer vector `y` with `a y = b`, if one exists.
pub fn solve_integer(a: &Matrix<i64>, b: &[Rational]) -> Option<Vec<i64>> {
    assert_eq!(a.rows, b.len(), "dimension mismatch");
    if b.iter().any(|x| !x.is_integer()) {
        return None;
    }
    let b: Vec<i64> = b.iter().map(|x| x.to_integer()).collect();
    let snf = smith_normal_form(a);
    // d z = u b, y = v z
    let ub = snf.u.mul_vec(&b);
    let mut z = vec![0i64; a.cols];
    for (i, &rhs) in ub.iter().enumerate() {
        let di = if i < a.cols { snf.d[(i, i)] } else { 0 };
        if di == 0 {
            if rhs != 0 {
                return None;
            }
        } else if rhs % di != 0 {
            return None;
        } else {
            z[i] = rhs / di;
        }
    }
    Some(snf.v.mul_vec(&z))
}

/// Saturated basis of the integer kernel `{y in Z^n : a y = 0}`.
pub fn integer_kernel(a: &Matrix<i64>) -> Vec<Vec<i64>> {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    (r..a.cols).map(|c| (0..a.cols).map(|i| snf.v[(i, c)]).collect()).collect()
}

pub fn to_rational(m: &Matrix<i64>) -> Matrix<Rational> {
    Matrix::from_fn(m.rows, m.cols, |r, c| Rational::from_integer(m[(r, c)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let m = Matrix::from_rows(&[vec![q(2, 1), q(-1, 1)], vec![q(-3, 1), q(2, 1)]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn float_and_rational_solve_agree() {
        let mq = Matrix::from_rows(&[vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]]);
        let mf = Matrix::from_rows(&[vec![2.0, -1.0], vec![-1.0, 2.0]]);
        let xq = solve(&mq, &[q(1, 1), q(0, 1)]).unwrap();
        let xf = solve(&mf, &[1.0, 0.0]).unwrap();
        assert_eq!(xq, vec![q(2, 3), q(1, 3)]);
        assert!((xf[0] - 2.0 / 3.0).abs() < 1e-12 && (xf[1] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn inconsistent_system() {
        let m = Matrix::from_rows(&[vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]]);
        assert!(solve(&m, &[q(1, 1), q(3, 1)]).is_none());
        assert_eq!(kernel(&m).len(), 1);
    }

    #[test]
    fn smith_of_a2_cartan() {
        let c = Matrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        let s = smith_normal_form(&c);
        assert_eq!(s.diagonal(), vec![1, 3]);
        assert_eq!(s.u.mul(&c).mul(&s.v), s.d);
    }

    #[test]
    fn smith_rectangular_and_divisibility() {
        let a = Matrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal(), vec![2, 6, 12]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    }

    #[test]
    fn integer_solutions() {
        let a = Matrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        assert!(solve_integer(&a, &[q(1, 1), q(1, 1)]).is_some());
        assert!(solve_integer(&a, &[q(1, 1), q(0, 1)]).is_none());
        assert!(solve_integer(&a, &[q(1, 2), q(0, 1)]).is_none());
        let y = solve_integer(&a, &[q(3, 1), q(0, 1)]).unwrap();
        assert_eq!(a.mul_vec(&y), vec![3, 0]);
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let a = Matrix::from_rows(&[vec![2, 4]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 1);
        assert_eq!(a.mul_vec(&k[0]), vec![0]);
        assert_eq!(num_integer::gcd(k[0][0], k[0][1]), 1);
    }
}
