//! Dense square matrices and the Laplacian.

use std::ops::{Add, Index, IndexMut, Sub};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;
pub type RealMatrix = Matrix<f64>;

impl<T: Clone + Default> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::default(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parameter("matrix rows must form a square".into()));
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Principal submatrix on `keep`, in the order given.
    pub fn principal(&self, keep: &[usize]) -> Result<Self> {
        if keep.iter().any(|&k| k >= self.n) {
            return Err(Error::Parameter("principal index out of range".into()));
        }
        Ok(Self::from_fn(keep.len(), |i, j| self[(keep[i], keep[j])].clone()))
    }

    pub fn map<U: Clone + Default>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn block_diag(blocks: &[Matrix<T>]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut out = Self::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    out[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.n;
        }
        out
    }
}

impl<T: Clone + Default + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl IntMatrix {
    pub fn to_real(&self) -> RealMatrix {
        self.map(|&x| x as f64)
    }
}

impl RealMatrix {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_symmetric_within(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Clone + Default + Add<Output = T>> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "matrix orders differ");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Clone + Default + Sub<Output = T>> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "matrix orders differ");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.order());
    for v in 0..g.order() {
        m[(v, v)] = g.degree(v) as i64;
    }
    for &(u, v) in g.edges() {
        m[(u, v)] = -1;
        m[(v, u)] = -1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_laplacians() {
        let k2 = laplacian(&Graph::complete(2).unwrap());
        assert_eq!(k2.rows(), vec![vec![1, -1], vec![-1, 1]]);
        let p3 = laplacian(&Graph::path(3).unwrap());
        assert_eq!(
            p3.rows(),
            vec![vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]
        );
    }

    #[test]
    fn principal_and_blocks() {
        let p3 = laplacian(&Graph::path(3).unwrap());
        assert_eq!(p3.principal(&[0, 2]).unwrap().rows(), vec![vec![1, 0], vec![0, 1]]);
        assert!(p3.principal(&[3]).is_err());
        let b = IntMatrix::block_diag(&[p3.principal(&[0]).unwrap(), p3.principal(&[1]).unwrap()]);
        assert_eq!(b.rows(), vec![vec![1, 0], vec![0, 2]]);
    }
}
