//! Exact linear algebra over the rationals.
//!
//! Every subobject in the crate (derived subalgebras, centers, ideals, the
//! relation span of the exterior square) is a [`Subspace`] stored as the
//! reduced row-echelon form of a spanning set. Because the RREF of a row
//! space is unique, two subspaces are equal exactly when their stored bases
//! are equal.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Dense vector of rationals.
pub type RatVector = Vec<Rational>;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vector(len: usize) -> RatVector {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> RatVector {
    let mut v = zero_vector(len);
    v[index] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += scale * v`, skipping zero entries of `v`.
pub fn axpy(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if scale.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += scale * x;
        }
    }
}

pub fn scale_vector(scale: &Rational, v: &[Rational]) -> RatVector {
    v.iter().map(|x| scale * x).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p"` or `"p/q"` with decimal integers. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let valid_int = |x: &str| {
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num) {
        return Err(err());
    }
    let n = BigInt::from_str(num).map_err(|_| err())?;
    let d = match den {
        Some(d) if valid_int(d) => BigInt::from_str(d).map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed so that a zero-row matrix keeps its width.
    pub fn from_rows(cols: usize, rows: Vec<RatVector>) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::RaggedRows {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Integer matrix literal, mostly for tests. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix literal")
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

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                axpy(acc, a, other.row(k));
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<RatVector, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.row_vectors().map(|r| dot(r, v)).collect())
    }

    /// Row-vector product `v · self`.
    pub fn vec_mul(&self, v: &[Rational]) -> Result<RatVector, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = zero_vector(self.cols);
        for (x, r) in v.iter().zip(self.row_vectors()) {
            axpy(&mut out, x, r);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    /// Exact inverse by Gauss-Jordan elimination on `[self | I]`.
    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let augmented: Vec<RatVector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(n, i));
                r
            })
            .collect();
        let (reduced, pivots) = rref(&RatMatrix::from_rows(2 * n, augmented)?);
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return Err(LinalgError::Singular);
        }
        let rows = (0..n).map(|i| reduced.row(i)[n..].to_vec()).collect();
        RatMatrix::from_rows(n, rows)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.row_vectors() {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Rows are kept fully reduced after every insertion, so reducing a vector
/// takes a single pass over the rows.
#[derive(Debug, Clone)]
pub(crate) struct EchelonBasis {
    cols: usize,
    rows: Vec<(usize, RatVector)>,
}

impl EchelonBasis {
    pub(crate) fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts the span's contribution from `v`, leaving zeros at every pivot.
    pub(crate) fn reduce(&self, v: &mut [Rational]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -v[*p].clone();
                axpy(v, &c, row);
            }
        }
    }

    /// Adds `v` to the span. Returns whether the rank increased.
    pub(crate) fn insert(&mut self, mut v: RatVector) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &v);
            }
        }
        self.rows.push((p, v));
        true
    }

    pub(crate) fn into_subspace(mut self) -> Subspace {
        self.rows.sort_by_key(|(p, _)| *p);
        let pivots = self.rows.iter().map(|(p, _)| *p).collect();
        let rows = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace {
            ambient_dim: self.cols,
            basis: RatMatrix::from_rows(self.cols, rows).expect("echelon rows have uniform width"),
            pivots,
        }
    }
}

/// Reduced row-echelon form and pivot columns. The returned matrix has the
/// same shape as `m`, with zero rows at the bottom.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if sel != r {
            for j in 0..cols {
                a.data.swap(sel * cols + j, r * cols + j);
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] *= &inv;
            }
        }
        let pivot_row = a.row(r).to_vec();
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = -a[(i, c)].clone();
                axpy(&mut a.data[i * cols..(i + 1) * cols], &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Null space `{v : m·v = 0}` as a subspace of `cols(m)`-space.
pub fn kernel_basis(m: &RatMatrix) -> Subspace {
    let (reduced, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = EchelonBasis::new(n);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = unit_vector(n, free);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -reduced[(row, free)].clone();
        }
        basis.insert(v);
    }
    basis.into_subspace()
}

/// One exact solution of `m·x = rhs`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &RatMatrix, rhs: &[Rational]) -> Result<Option<RatVector>, LinalgError> {
    if rhs.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    let n = m.cols();
    let augmented = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(&RatMatrix::from_rows(n + 1, augmented)?);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vector(n);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(row, n)].clone();
    }
    Ok(Some(x))
}

/// A subspace of `ambient_dim`-space, stored by its RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RatMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        EchelonBasis::new(ambient_dim).into_subspace()
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors; zero and dependent vectors are dropped.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = RatVector>,
    {
        let mut basis = EchelonBasis::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            basis.insert(v);
        }
        Ok(basis.into_subspace())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// RREF basis matrix, one basis vector per row.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<RatVector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: RatVector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            axpy(&mut residual, &-c.clone(), row);
        }
        is_zero_vector(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        check_same_ambient(self, other)?;
        Subspace::span(
            self.ambient_dim,
            self.basis_vectors()
                .chain(other.basis_vectors())
                .map(<[Rational]>::to_vec),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        subspace_intersection(self, other)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

fn check_same_ambient(a: &Subspace, b: &Subspace) -> Result<(), LinalgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    Ok(())
}

/// `a ∩ b`, from the kernel of `[Aᵀ | −Bᵀ]`.
pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    check_same_ambient(a, b)?;
    let n = a.ambient_dim;
    let (da, db) = (a.dim(), b.dim());
    let mut stacked = RatMatrix::zeros(n, da + db);
    for (k, v) in a.basis_vectors().enumerate() {
        for i in 0..n {
            stacked[(i, k)] = v[i].clone();
        }
    }
    for (k, v) in b.basis_vectors().enumerate() {
        for i in 0..n {
            stacked[(i, da + k)] = -v[i].clone();
        }
    }
    let kernel = kernel_basis(&stacked);
    Subspace::span(
        n,
        kernel.basis_vectors().map(|coeffs| {
            let mut v = zero_vector(n);
            for (c, row) in coeffs[..da].iter().zip(a.basis_vectors()) {
                axpy(&mut v, c, row);
            }
            v
        }),
    )
}

/// The quotient of `ambient_dim`-space by the span of a set of relations.
///
/// Coordinates on the quotient are the non-pivot columns of the relation
/// span's RREF: the class of `v` has coordinates `(v - reduction)[section]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    relations: Subspace,
    section: Vec<usize>,
    projection: RatMatrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.section.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim
    }

    /// `dim × ambient_dim` matrix whose kernel is exactly the relation span.
    pub fn projection(&self) -> &RatMatrix {
        &self.projection
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient coordinates whose unit vectors represent the quotient basis.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn project(&self, v: &[Rational]) -> RatVector {
        self.projection
            .mul_vec(v)
            .expect("vector length must match the ambient dimension")
    }
}

/// Builds the quotient of `ambient_dim`-space by `span(relations)`.
pub fn quotient_map(ambient_dim: usize, relations: &[RatVector]) -> Result<Quotient, LinalgError> {
    if let Some(bad) = relations.iter().find(|r| r.len() != ambient_dim) {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient_dim,
            found: bad.len(),
        });
    }
    // The RREF of a span does not depend on insertion order, and sparse
    // relations first keep the intermediate rows short.
    let mut order: Vec<(usize, &RatVector)> = relations
        .iter()
        .map(|r| (r.iter().filter(|x| !x.is_zero()).count(), r))
        .filter(|(nnz, _)| *nnz > 0)
        .collect();
    order.sort_by_key(|(nnz, _)| *nnz);
    let mut basis = EchelonBasis::new(ambient_dim);
    for (_, r) in order {
        if basis.rank() == ambient_dim {
            break;
        }
        basis.insert(r.clone());
    }
    Ok(quotient_by(basis.into_subspace()))
}

pub(crate) fn quotient_by(relations: Subspace) -> Quotient {
    let n = relations.ambient_dim;
    let mut is_pivot = vec![false; n];
    for &p in &relations.pivots {
        is_pivot[p] = true;
    }
    let section: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut projection = RatMatrix::zeros(section.len(), n);
    for (q, &c) in section.iter().enumerate() {
        projection[(q, c)] = Rational::one();
        for (row, &p) in relations.basis_vectors().zip(&relations.pivots) {
            if !row[c].is_zero() {
                projection[(q, p)] = -row[c].clone();
            }
        }
    }
    Quotient {
        relations,
        section,
        projection,
    }
}

/// Integer vector literal helper.
pub fn int_vector(xs: &[i64]) -> RatVector {
    xs.iter().map(|&x| rat(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
        prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
            let rows = xs.chunks(cols).map(int_vector).collect();
            RatMatrix::from_rows(cols, rows).unwrap()
        })
    }

    /// Leibniz expansion, independent of elimination.
    fn determinant_by_permutations(m: &RatMatrix) -> Rational {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let sign = if inversions % 2 == 0 { rat(1) } else { rat(-1) };
                (0..n).fold(sign, |acc, i| acc * &m[(i, p[i])])
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    #[test]
    fn rref_identity() {
        let (r, p) = rref(&RatMatrix::identity(2));
        assert_eq!(r, RatMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = rref(&RatMatrix::from_i64(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, RatMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_of_invertible_is_identity() {
        let m = RatMatrix::from_i64(&[
            &[2, -1, 0, 3, 1],
            &[1, 1, 2, 0, -2],
            &[0, 3, -1, 1, 1],
            &[-2, 0, 1, 1, 0],
            &[1, 2, 1, -1, 3],
        ]);
        assert!(!determinant_by_permutations(&m).is_zero());
        let (r, p) = rref(&m);
        assert_eq!(r, RatMatrix::identity(5));
        assert_eq!(p, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMatrix::identity(3)).is_zero());
        assert_eq!(kernel_basis(&RatMatrix::zeros(3, 3)), Subspace::full(3));
        let m = RatMatrix::from_i64(&[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(is_zero_vector(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_map(3, &[]).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.projection(), &RatMatrix::identity(3));

        assert_eq!(quotient_map(3, &[int_vector(&[1, 0, 0])]).unwrap().dim(), 2);

        let rels = vec![
            int_vector(&[1, 1, 0, 0]),
            int_vector(&[0, 1, 1, 0]),
            int_vector(&[1, 0, -1, 0]),
        ];
        let q = quotient_map(4, &rels).unwrap();
        assert_eq!(q.dim(), 2);
        for r in &rels {
            assert!(is_zero_vector(&q.project(r)));
        }
        assert!(quotient_map(3, &[int_vector(&[1, 0])]).is_err());
    }

    #[test]
    fn intersection_examples() {
        let e = |i| unit_vector(3, i);
        let a = Subspace::span(3, [e(0), e(1)]).unwrap();
        let b = Subspace::span(3, [e(1), e(2)]).unwrap();
        assert_eq!(subspace_intersection(&a, &a).unwrap(), a);
        let x = Subspace::span(3, [e(0)]).unwrap();
        let y = Subspace::span(3, [e(1)]).unwrap();
        assert!(subspace_intersection(&x, &y).unwrap().is_zero());
        assert_eq!(subspace_intersection(&a, &b).unwrap(), y);
        assert!(subspace_intersection(&a, &Subspace::zero(4)).is_err());
    }

    #[test]
    fn solve_examples() {
        let v = int_vector(&[3, -1, 2]);
        assert_eq!(solve(&RatMatrix::identity(3), &v).unwrap(), Some(v));

        let m = RatMatrix::from_i64(&[&[1, 1]]);
        let x = solve(&m, &[rat(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], rat(2));

        let m = RatMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(solve(&m, &[rat(1), rat(2)]).unwrap(), None);
        assert!(solve(&m, &[rat(1)]).is_err());
    }

    #[test]
    fn inverse_round_trip_and_singular() {
        let m = RatMatrix::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(2));
        let s = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn parse_rational_literals() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational(" 0/5 ").unwrap(), rat(0));
        for bad in ["", "1/0", "a", "1.5", "1/", "/2", "--1", "1/-"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(4, 5)) {
            let (r, p) = rref(&m);
            let (rr, pp) = rref(&r);
            prop_assert_eq!(r, rr);
            prop_assert_eq!(p, pp);
        }

        #[test]
        fn rank_nullity(m in small_matrix(4, 6)) {
            prop_assert_eq!(m.rank() + kernel_basis(&m).dim(), m.cols());
        }

        #[test]
        fn quotient_kills_relations(m in small_matrix(3, 5)) {
            let rels: Vec<RatVector> = m.row_vectors().map(<[Rational]>::to_vec).collect();
            let q = quotient_map(5, &rels).unwrap();
            for r in &rels {
                prop_assert!(is_zero_vector(&q.project(r)));
            }
            prop_assert_eq!(q.projection().rank(), q.dim());
            prop_assert_eq!(q.dim(), 5 - m.rank());
        }

        #[test]
        fn echelon_span_matches_rref(m in small_matrix(4, 4)) {
            let s = Subspace::span(4, m.row_vectors().map(<[Rational]>::to_vec)).unwrap();
            let (r, p) = rref(&m);
            prop_assert_eq!(s.pivots(), &p[..]);
            for (i, row) in s.basis_vectors().enumerate() {
                prop_assert_eq!(row, r.row(i));
            }
        }
    }
}
