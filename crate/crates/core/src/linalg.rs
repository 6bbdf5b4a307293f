//! Exact dense linear algebra over the rationals.
//!
//! Every subspace computation in the crate (relation spans, Koszul spaces,
//! graded components) bottoms out here. Entries are arbitrary precision
//! rationals, so ranks and dimension counts are exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { left: cols, right: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| rat(x))
            })
            .collect();
        Self { rows: rows.len(), cols, data }
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

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { left: self.cols, right: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
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

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form with zero rows dropped, plus the pivot columns.
pub fn rref_with_pivots(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
        }
        let pivot_row: Vec<(usize, Rational)> =
            (c..cols).filter(|&j| !a[(r, j)].is_zero()).map(|j| (j, a[(r, j)].clone())).collect();
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for (j, v) in &pivot_row {
                let delta = &factor * v;
                a[(i, *j)] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.data.truncate(r * cols);
    a.rows = r;
    (a, pivots)
}

/// Reduced row-echelon form (zero rows removed) and rank.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
    let (r, pivots) = rref_with_pivots(m);
    (r, pivots.len())
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).1
}

/// Null space `{v : m v = 0}`.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    let cols = m.cols;
    let (r, pivots) = rref_with_pivots(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            let x = &r[(row, free)];
            if !x.is_zero() {
                v[p] = -x.clone();
            }
        }
        basis.push(v);
    }
    Subspace::from_vectors(cols, basis).expect("kernel vectors have the ambient length")
}

/// A subspace of `Q^ambient_dim`, canonicalized by its RREF basis.
///
/// Two subspaces are equal iff their RREF bases are equal, so derived
/// `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: RationalMatrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: RationalMatrix::identity(ambient_dim) }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let m = RationalMatrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &RationalMatrix) -> Self {
        let (basis, _) = rref(m);
        Self { ambient_dim: m.cols, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Subspace::from_vectors(self.ambient_dim, rows)
    }

    /// Annihilator under the coordinate dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let perp = self.orthogonal_complement().sum(&other.orthogonal_complement())?;
        Ok(perp.orthogonal_complement())
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: v.len() });
        }
        if v.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        let m = RationalMatrix::from_rows(self.ambient_dim, rows)?;
        Ok(rank(&m) == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let (r, rank) = rref(&RationalMatrix::identity(2));
        assert_eq!(rank, 2);
        assert_eq!(r, RationalMatrix::identity(2));
    }

    #[test]
    fn rref_dependent_rows() {
        let (r, rank) = rref(&RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(rank, 1);
        assert_eq!(r, RationalMatrix::from_i64(&[&[1, 2]]));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = RationalMatrix::from_i64(&[&[0, 2, 1, -1], &[3, 1, 0, 2], &[3, 3, 1, 1]]);
        let (r1, _) = rref(&m);
        let (r2, _) = rref(&r1);
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(kernel(&RationalMatrix::zeros(3, 3)).dim(), 3);
        assert_eq!(kernel(&RationalMatrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RationalMatrix::from_i64(&[&[1, 1, 0]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for i in 0..k.dim() {
            assert!(m.mul_vec(k.basis().row(i)).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn coordinate_axes() {
        let a = Subspace::from_vectors(2, vec![vec![rat(1), rat(0)]]).unwrap();
        let b = Subspace::from_vectors(2, vec![vec![rat(0), rat(1)]]).unwrap();
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn mismatched_ambient_dims_are_rejected() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(a.intersect(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.contains(&[rat(1)]).is_err());
    }

    #[test]
    fn membership_is_exact() {
        let s = Subspace::from_vectors(3, vec![vec![rat(1), ratio(1, 3), rat(0)]]).unwrap();
        assert!(s.contains(&[rat(3), rat(1), rat(0)]).unwrap());
        assert!(!s.contains(&[rat(3), ratio(1, 1) + ratio(1, 1000000), rat(0)]).unwrap());
    }
}
