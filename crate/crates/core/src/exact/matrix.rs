//! Dense exact matrices, row reduction and nullspaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::vector::Vector3;
use super::Rational;
use crate::error::Error;

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    ///
    /// # Panics
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[Rational]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, a: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| a * x).collect(),
        }
    }

    /// `self · v`.
    ///
    /// # Panics
    ///
    /// Panics if `v.len() != self.cols()`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

/// Reduced row-echelon form.
///
/// The pivot of each column is the first nonzero entry at or below the
/// current row; exact arithmetic makes magnitude pivoting unnecessary.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a.get(row, col).recip().expect("pivot is nonzero");
        for j in col..a.cols {
            let v = a.get(row, j) * &inv;
            a.set(row, j, v);
        }
        for r in 0..a.rows {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for j in col..a.cols {
                let v = a.get(r, j) - &(&factor * a.get(row, j));
                a.set(r, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    let rank = pivots.len();
    Rref {
        matrix: a,
        pivots,
        rank,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Kernel basis of a matrix with any number of columns, one vector per free
/// column, read off the reduced row-echelon form.
pub fn kernel(m: &Matrix) -> Vec<Vec<Rational>> {
    let Rref { matrix, pivots, .. } = rref(m);
    (0..m.cols())
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(r, free);
            }
            v
        })
        .collect()
}

/// Nullspace of a matrix acting on `(λ1, λ2, λ3)`, in normal form.
///
/// # Panics
///
/// Panics if `m.cols() != 3`.
pub fn nullspace(m: &Matrix) -> SubspaceBasis {
    assert_eq!(m.cols(), 3, "nullspace expects three columns");
    let vectors: Vec<Vector3> = kernel(m)
        .into_iter()
        .map(|v| <[Rational; 3]>::try_from(v).expect("3 components"))
        .collect();
    SubspaceBasis::span(&vectors)
}

/// A subspace of the span of `e1, e2, e3` stored as the nonzero rows of the
/// reduced row-echelon form of any spanning set. Equal subspaces therefore
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SubspaceJson", into = "SubspaceJson")]
pub struct SubspaceBasis {
    vectors: Vec<Vector3>,
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    dim: usize,
    basis: Vec<Vector3>,
}

impl From<SubspaceBasis> for SubspaceJson {
    fn from(s: SubspaceBasis) -> Self {
        SubspaceJson {
            dim: s.dim(),
            basis: s.vectors,
        }
    }
}

impl TryFrom<SubspaceJson> for SubspaceBasis {
    type Error = String;
    fn try_from(j: SubspaceJson) -> Result<Self, String> {
        if j.dim != j.basis.len() {
            return Err(format!("dim {} but {} basis vectors", j.dim, j.basis.len()));
        }
        let s = SubspaceBasis::span(&j.basis);
        if s.vectors != j.basis {
            return Err("basis is not in normal form".to_string());
        }
        Ok(s)
    }
}

impl SubspaceBasis {
    pub fn zero() -> Self {
        SubspaceBasis { vectors: vec![] }
    }

    pub fn full() -> Self {
        SubspaceBasis::span(&[
            super::vector::basis(0),
            super::vector::basis(1),
            super::vector::basis(2),
        ])
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(vectors: &[Vector3]) -> Self {
        let reduced = rref(&Matrix::from_rows(vectors));
        let vectors = (0..reduced.rank)
            .map(|r| std::array::from_fn(|k| reduced.matrix.get(r, k).clone()))
            .collect();
        SubspaceBasis { vectors }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector3] {
        &self.vectors
    }

    pub fn contains(&self, v: &Vector3) -> bool {
        let mut rows = self.vectors.clone();
        rows.push(v.clone());
        rank(&Matrix::from_rows(&rows)) == self.dim()
    }
}
