//! Dense row-major matrices over `ℚ(i)` and exact row reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::GaussianRational;

/// A column vector.
pub type Vector = Vec<GaussianRational>;

/// Dense `rows × cols` matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

/// Output of [`rref`]: rank together with echelon-normalized bases of the
/// kernel and of the image (column space).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub kernel_basis: Vec<Vector>,
    pub image_basis: Vec<Vector>,
}

/// Solution set of `A x = b`: one particular solution (if any) plus a basis of
/// the homogeneous solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Option<Vector>,
    pub kernel_basis: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &GaussianRational::one())
    }

    /// `c · I_n`.
    pub fn scalar(n: usize, c: &GaussianRational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    /// Builds a matrix from a row-major entry vector.
    ///
    /// # Panics
    /// Panics when `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix entry count mismatch");
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Self {
            rows: r,
            cols,
            data,
        }
    }

    /// Integer matrix from nested slices (convenience for tests and fixtures).
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&x| GaussianRational::from_int(x))
                    .collect()
            })
            .collect();
        Self::from_rows(rows, cols)
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// The `n × n` matrix unit `E_{ij}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, GaussianRational::one());
        m
    }

    /// Nilpotent Jordan block of size `n` (ones on the superdiagonal).
    pub fn jordan_block(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, GaussianRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// `M^e` for square `M` (`M^0 = I`).
    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(0, self.cols, other);
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum of the given matrices.
    pub fn block_diag(blocks: &[Matrix]) -> Self {
        let r = blocks.iter().map(Matrix::rows).sum();
        let c = blocks.iter().map(Matrix::cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut i, mut j) = (0, 0);
        for b in blocks {
            m.paste(i, j, b);
            i += b.rows;
            j += b.cols;
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(i0, j0)`.
    pub fn paste(&mut self, i0: usize, j0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.get(i, j).clone());
            }
        }
    }

    /// The `nr × nc` submatrix starting at `(i0, j0)`.
    pub fn submatrix(&self, i0: usize, j0: usize, nr: usize, nc: usize) -> Self {
        let mut m = Self::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                m.set(i, j, self.get(i0 + i, j0 + j).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend(self.row(i).iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Row-major flattening into a single vector (used for `vec(X)`).
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    /// Reduces `self` in place to reduced row echelon form and returns the
    /// pivot columns. Pivoting is deterministic: the first nonzero entry in
    /// column order is used.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..self.cols {
                    let v = self.get(r, j) * &inv;
                    self.set(r, j, v);
                }
            }
            let pivot_row: Vec<GaussianRational> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if pv.is_zero() {
                        continue;
                    }
                    let j = c + off;
                    let v = self.get(i, j) - &(&f * pv);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Echelon-normalized basis of `Ker self`.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut r = self.clone();
        let pivots = r.row_reduce();
        let raw = kernel_from_rref(&r, &pivots);
        echelonize(&raw, self.cols)
    }

    /// Echelon-normalized basis of the column space of `self`.
    pub fn image(&self) -> Vec<Vector> {
        let columns: Vec<Vector> = (0..self.cols).map(|j| self.column(j)).collect();
        echelonize(&columns, self.rows)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(n));
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solves `self · x = b`.
    pub fn solve(&self, b: &[GaussianRational]) -> LinearSolution {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let n = self.cols;
        let mut aug = self.hstack(&Matrix::from_columns(&[b.to_vec()], self.rows));
        let pivots = aug.row_reduce();
        let kernel_basis = self.kernel();
        if pivots.last() == Some(&n) {
            return LinearSolution {
                particular: None,
                kernel_basis,
            };
        }
        let mut x = vec![GaussianRational::zero(); n];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, n).clone();
        }
        LinearSolution {
            particular: Some(x),
            kernel_basis,
        }
    }
}

/// Returns `(rank, kernel basis, image basis)` of `m`.
pub fn rref(m: &Matrix) -> Rref {
    let kernel_basis = m.kernel();
    let image_basis = m.image();
    Rref {
        rank: image_basis.len(),
        kernel_basis,
        image_basis,
    }
}

/// Solves `a · x = b`; see [`Matrix::solve`].
pub fn solve_linear(a: &Matrix, b: &[GaussianRational]) -> LinearSolution {
    a.solve(b)
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vector> {
    let n = r.cols();
    let mut out = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![GaussianRational::zero(); n];
        v[f] = GaussianRational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, f);
        }
        out.push(v);
    }
    out
}

/// Replaces a spanning list by the nonzero rows of its reduced row echelon
/// form: the unique echelon-normalized basis of the span.
pub fn echelonize(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_rows(vectors.to_vec(), dim);
    let rank = m.row_reduce().len();
    (0..rank).map(|i| m.row(i).to_vec()).collect()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * rhs.cols + j] += &(a * b);
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: Matrix) -> Matrix {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: &Matrix) -> Matrix {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
