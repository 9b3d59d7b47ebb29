//! Small dense matrices and index-addressed tensors over exact scalars.
//!
//! Everything here is sized for 3x3 and 6x6 problems; clarity and exactness
//! over generality. Structural accessors only need `Clone`, so the
//! containers also hold context-carrying entries such as polynomials and
//! rational functions; ring and field operations require the corresponding
//! scalar bounds.

use std::ops::Div;

use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::poly::Coeff;

/// Scalars that additionally support exact division.
pub trait FieldScalar: Coeff + Div<Output = Self> {}
impl<T: Coeff + Div<Output = T>> FieldScalar for T {}

/// A square matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Clone> SqMatrix<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SqMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SqMatrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        (0..self.n).map(|i| self.row(i))
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&S) -> T) -> SqMatrix<T> {
        SqMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }
}

impl<S: Clone + PartialEq> SqMatrix<S> {
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<S: Coeff> SqMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        SqMatrix { n, data: vec![S::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() + other.get(i, j).clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() - other.get(i, j).clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.n {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// `M^T T M`: the pullback of a bilinear form `T` along `M`.
    pub fn congruence(&self, t: &Self) -> Self {
        self.transpose().mul(t).mul(self)
    }

    /// Determinant by Laplace expansion with subset memoization; works over
    /// any commutative coefficient ring.
    pub fn det_ring(&self) -> S {
        let n = self.n;
        if n == 0 {
            return S::one();
        }
        // minor[mask] = determinant of the submatrix taken from the first
        // popcount(mask) rows and the column set `mask`
        let full = 1usize << n;
        let mut minor: Vec<Option<S>> = vec![None; full];
        minor[0] = Some(S::one());
        for mask in 1..full {
            let row = (mask as u32).count_ones() as usize - 1;
            let mut acc = S::zero();
            // expanding along row `row`: sign of column position p is (-1)^(row+p)
            let mut sign_pos = row % 2 == 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let sub = mask & !(1 << j);
                let m = minor[sub].clone().expect("filled in mask order");
                let term = self.get(row, j).clone() * m;
                acc = if sign_pos { acc + term } else { acc - term };
                sign_pos = !sign_pos;
            }
            minor[mask] = Some(acc);
        }
        minor[full - 1].clone().unwrap()
    }
}

impl<S: FieldScalar> SqMatrix<S> {
    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> S {
        let n = self.n;
        let mut m = self.clone();
        let mut det = S::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { return S::zero() };
            if p != col {
                for j in 0..n {
                    let a = m.get(p, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(p, j, b);
                    m.set(col, j, a);
                }
                det = -det;
            }
            let pv = m.get(col, col).clone();
            det = det * pv.clone();
            for r in (col + 1)..n {
                let factor = m.get(r, col).clone() / pv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(col, j).clone();
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Exact inverse, `None` for singular input.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let a = m.get(pivot, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(pivot, j, b);
                    m.set(col, j, a);
                    let a = inv.get(pivot, j).clone();
                    let b = inv.get(col, j).clone();
                    inv.set(pivot, j, b);
                    inv.set(col, j, a);
                }
            }
            let pv = m.get(col, col).clone();
            for j in 0..n {
                let v = m.get(col, j).clone() / pv.clone();
                m.set(col, j, v);
                let v = inv.get(col, j).clone() / pv.clone();
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(col, j).clone();
                    m.set(r, j, v);
                    let v = inv.get(r, j).clone() - factor.clone() * inv.get(col, j).clone();
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }
}

/// Reduced row echelon form in place; returns the pivot column of each row.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pv = rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = &*v / &pv;
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..ncols {
                let sub = &f * &rows[r][j];
                rows[i][j] = &rows[i][j] - &sub;
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

/// Basis of the right nullspace of a rectangular rational matrix.
pub fn nullspace(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[ri][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// A rank-3 array indexed `[a][b][c]` with uniform dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Clone> Tensor3<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    data.push(f(a, b, c));
                }
            }
        }
        Tensor3 { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &S {
        &self.data[(a * self.n + b) * self.n + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: S) {
        self.data[(a * self.n + b) * self.n + c] = v;
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&S) -> T) -> Tensor3<T> {
        Tensor3 { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl<S: Coeff> Tensor3<S> {
    pub fn zeros(n: usize) -> Self {
        Tensor3 { n, data: vec![S::zero(); n * n * n] }
    }

    pub fn is_zero_tensor(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

/// A rank-4 array indexed `[a][b][c][d]` with uniform dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor4<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Clone> Tensor4<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        data.push(f(a, b, c, d));
                    }
                }
            }
        }
        Tensor4 { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &S {
        &self.data[((a * self.n + b) * self.n + c) * self.n + d]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, v: S) {
        self.data[((a * self.n + b) * self.n + c) * self.n + d] = v;
    }
}

impl<S: Coeff> Tensor4<S> {
    pub fn zeros(n: usize) -> Self {
        Tensor4 { n, data: vec![S::zero(); n * n * n * n] }
    }

    pub fn is_zero_tensor(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

/// A rank-5 array indexed `[a][b][c][d][e]` with uniform dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor5<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Clone> Tensor5<S> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize, e: usize) -> &S {
        &self.data[(((a * self.n + b) * self.n + c) * self.n + d) * self.n + e]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, e: usize, v: S) {
        self.data[(((a * self.n + b) * self.n + c) * self.n + d) * self.n + e] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }
}

impl<S: Coeff> Tensor5<S> {
    pub fn zeros(n: usize) -> Self {
        Tensor5 { n, data: vec![S::zero(); n * n * n * n * n] }
    }

    pub fn is_zero_tensor(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}
