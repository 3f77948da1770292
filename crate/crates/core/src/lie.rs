//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Only the brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i]` is
//! derived by negation and `[e_i, e_i]` is zero, so antisymmetry cannot be
//! violated. The Jacobi identity is checked when an algebra is built.

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{
    axpy, is_zero_vector, kernel_basis, quotient_map, rat, unit_vector, zero_vector, LinalgError,
    RatMatrix, RatVector, Rational, Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("bracket entry ({i}, {j}) must satisfy i < j")]
    UnorderedPair { i: usize, j: usize },
    #[error("bracket entry ({i}, {j}) appears more than once")]
    DuplicatePair { i: usize, j: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket ({i}, {j}) has {found} coefficients, expected {dim}")]
    WrongLength {
        i: usize,
        j: usize,
        dim: usize,
        found: usize,
    },
    #[error("expected {dim} labels, found {found}")]
    LabelCount { dim: usize, found: usize },
    #[error(transparent)]
    Jacobi(#[from] JacobiViolation),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace lives in dimension {found}, algebra has dimension {dim}")]
    AmbientMismatch { dim: usize, found: usize },
    #[error("change of basis must be an invertible {dim}x{dim} matrix")]
    SingularChangeOfBasis { dim: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A basis triple on which the Jacobi identity fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

/// Unvalidated bracket table: the upper-triangular structure constants of a
/// candidate algebra. Turn it into a [`LieAlgebra`] with [`LieAlgebra::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    dim: usize,
    labels: Vec<String>,
    brackets: Vec<RatVector>,
}

impl BracketTable {
    /// All-zero table with labels `e1..en`.
    pub fn new(dim: usize) -> Self {
        Self::with_labels((1..=dim).map(|i| format!("e{i}")).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let dim = labels.len();
        Self {
            dim,
            labels,
            brackets: vec![zero_vector(dim); dim * dim.saturating_sub(1) / 2],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j]` for `i < j`.
    pub fn set(&mut self, i: usize, j: usize, value: RatVector) -> Result<(), LieError> {
        let dim = self.dim;
        for index in [i, j] {
            if index >= dim {
                return Err(LieError::IndexOutOfRange { index, dim });
            }
        }
        if i >= j {
            return Err(LieError::UnorderedPair { i, j });
        }
        if value.len() != dim {
            return Err(LieError::WrongLength {
                i,
                j,
                dim,
                found: value.len(),
            });
        }
        self.brackets[pair_index(dim, i, j)] = value;
        Ok(())
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> RatVector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => zero_vector(self.dim),
            Less => self.brackets[pair_index(self.dim, i, j)].clone(),
            Greater => self.brackets[pair_index(self.dim, j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
        }
    }

    fn bracket_with_basis(&self, x: &[Rational], j: usize) -> RatVector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() && i != j {
                axpy(&mut out, xi, &self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sum = zero_vector(n);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [e_a, [e_b, e_c]] = -[[e_b, e_c], e_a]
                        let inner = self.basis_bracket(b, c);
                        let outer = self.bracket_with_basis(&inner, a);
                        axpy(&mut sum, &rat(-1), &outer);
                    }
                    if !is_zero_vector(&sum) {
                        return Err(JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A validated finite-dimensional Lie algebra over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    table: BracketTable,
}

impl LieAlgebra {
    /// Validates the Jacobi identity and wraps the table.
    pub fn new(table: BracketTable) -> Result<Self, LieError> {
        table.validate()?;
        Ok(Self { table })
    }

    #[cfg(test)]
    pub(crate) fn new_unchecked(table: BracketTable) -> Self {
        Self { table }
    }

    /// Builds from a list of `(i, j, [e_i, e_j])` entries, rejecting duplicates.
    pub fn from_entries<I>(labels: Vec<String>, entries: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, RatVector)>,
    {
        let mut table = BracketTable::with_labels(labels);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, v) in entries {
            if !seen.insert((i, j)) {
                return Err(LieError::DuplicatePair { i, j });
            }
            table.set(i, j, v)?;
        }
        Self::new(table)
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    /// Always `Ok` for a constructed algebra; kept for symmetry with [`BracketTable::validate`].
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        self.table.validate()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> RatVector {
        self.table.basis_bracket(i, j)
    }

    /// The nonzero brackets `[e_i, e_j]` with `i < j`, in lexicographic order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &RatVector)> {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, &self.table.brackets[pair_index(n, i, j)]))
            .filter(|(_, _, v)| !is_zero_vector(v))
    }

    /// Structure constants are identical (labels are ignored).
    pub fn same_constants(&self, other: &LieAlgebra) -> bool {
        self.dim() == other.dim() && self.table.brackets == other.table.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.nonzero_brackets().next().is_none()
    }

    /// Bilinear extension of the basis brackets.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> RatVector {
        let n = self.dim();
        assert_eq!(x.len(), n, "bracket: left operand has wrong length");
        assert_eq!(y.len(), n, "bracket: right operand has wrong length");
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i == j || yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), &self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Span of all `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(n, self.nonzero_brackets().map(|(_, _, v)| v.clone()))
            .expect("brackets have length dim")
    }

    /// `[A, B]` for subspaces `A`, `B`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let n = self.dim();
        let products: Vec<RatVector> = a
            .basis_vectors()
            .flat_map(|x| b.basis_vectors().map(move |y| (x, y)))
            .map(|(x, y)| self.bracket(x, y))
            .collect();
        Subspace::span(n, products).expect("brackets have length dim")
    }

    /// Matrix of the linear map `x ↦ ([x, e_0], ..., [x, e_{n-1}])`, stacked.
    fn stacked_adjoint(&self) -> RatMatrix {
        let n = self.dim();
        let mut m = RatMatrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j).into_iter().enumerate() {
                    m[(j * n + k, i)] = c;
                }
            }
        }
        m
    }

    pub fn center(&self) -> Subspace {
        kernel_basis(&self.stacked_adjoint())
    }

    /// `L¹ = L, L^{i+1} = [L, L^i]`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.bracket_subspaces(&full, last);
            if next.dim() == last.dim() {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// `[e_i, s] ∈ S` for every basis vector `e_i` and every basis vector `s` of `S`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, LieError> {
        let n = self.dim();
        if s.ambient_dim() != n {
            return Err(LieError::AmbientMismatch {
                dim: n,
                found: s.ambient_dim(),
            });
        }
        Ok((0..n).all(|i| {
            let e = unit_vector(n, i);
            s.basis_vectors().all(|v| s.contains(&self.bracket(&e, v)))
        }))
    }

    /// Block-diagonal sum; labels get `.1` and `.2` suffixes.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let labels = self
            .labels()
            .iter()
            .map(|l| format!("{l}.1"))
            .chain(other.labels().iter().map(|l| format!("{l}.2")))
            .collect();
        let mut table = BracketTable::with_labels(labels);
        for (i, j, v) in self.nonzero_brackets() {
            let mut w = v.clone();
            w.resize(n, Rational::zero());
            table.set(i, j, w).expect("indices in range");
        }
        for (i, j, v) in other.nonzero_brackets() {
            let mut w = zero_vector(n1);
            w.extend(v.iter().cloned());
            table.set(n1 + i, n1 + j, w).expect("indices in range");
        }
        LieAlgebra { table }
    }

    /// Transports the structure to the basis `f_i = Σ_j P_ij e_j`.
    pub fn change_of_basis(&self, p: &RatMatrix) -> Result<LieAlgebra, LieError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(LieError::SingularChangeOfBasis { dim: n });
        }
        let inv = p
            .inverse()
            .map_err(|_| LieError::SingularChangeOfBasis { dim: n })?;
        let labels = (1..=n).map(|i| format!("f{i}")).collect();
        let mut table = BracketTable::with_labels(labels);
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket(p.row(a), p.row(b));
                table.set(a, b, inv.vec_mul(&v)?)?;
            }
        }
        Ok(LieAlgebra { table })
    }

    /// `L/N` with the canonical section of [`quotient_map`] as coset representatives.
    /// Also returns the projection `L → L/N`.
    pub fn quotient_algebra(&self, ideal: &Ideal) -> Result<(LieAlgebra, RatMatrix), LieError> {
        let s = ideal.subspace();
        if !self.is_ideal(s)? {
            return Err(LieError::NotAnIdeal);
        }
        let n = self.dim();
        let relations: Vec<RatVector> = s.basis_vectors().map(<[Rational]>::to_vec).collect();
        let q = quotient_map(n, &relations)?;
        let section = q.section().to_vec();
        let labels = section.iter().map(|&c| self.labels()[c].clone()).collect();
        let mut table = BracketTable::with_labels(labels);
        for (a, &ca) in section.iter().enumerate() {
            for (b, &cb) in section.iter().enumerate().skip(a + 1) {
                table.set(a, b, q.project(&self.basis_bracket(ca, cb)))?;
            }
        }
        // Induced brackets of a Lie algebra by an ideal satisfy Jacobi.
        debug_assert!(table.validate().is_ok());
        Ok((LieAlgebra { table }, q.projection().clone()))
    }
}

/// The abelian algebra `A(n)`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra {
        table: BracketTable::new(n),
    }
}

/// The Heisenberg algebra `H(m)` on `a1..am, b1..bm, z` with `[a_i, b_i] = z`.
///
/// Panics if `m == 0`.
pub fn heisenberg(m: usize) -> LieAlgebra {
    assert!(m >= 1, "H(m) requires m >= 1");
    let n = 2 * m + 1;
    let labels = (1..=m)
        .map(|i| format!("a{i}"))
        .chain((1..=m).map(|i| format!("b{i}")))
        .chain(std::iter::once("z".to_string()))
        .collect();
    let mut table = BracketTable::with_labels(labels);
    for i in 0..m {
        table
            .set(i, m + i, unit_vector(n, 2 * m))
            .expect("indices in range");
    }
    LieAlgebra { table }
}

/// Witness that a subspace is an ideal of the algebra it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    subspace: Subspace,
}

impl Ideal {
    pub fn new(algebra: &LieAlgebra, subspace: Subspace) -> Result<Self, LieError> {
        if algebra.is_ideal(&subspace)? {
            Ok(Self { subspace })
        } else {
            Err(LieError::NotAnIdeal)
        }
    }

    pub fn zero(algebra: &LieAlgebra) -> Self {
        Self {
            subspace: Subspace::zero(algebra.dim()),
        }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// Contained in the center of `algebra`.
    pub fn is_central_in(&self, algebra: &LieAlgebra) -> bool {
        self.subspace.ambient_dim() == algebra.dim()
            && self.subspace.is_subspace_of(&algebra.center())
    }
}
