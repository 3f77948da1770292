//! Explicit isomorphisms `L ≅ H(m) ⊕ A(k)` for nilpotent algebras with a
//! one-dimensional derived subalgebra.
//!
//! With `L² = span{z}` every bracket is `[x, y] = f(x, y)·z` for an
//! alternating form `f`. A symplectic basis of `f`, rescaled so that each
//! pair brackets to exactly `z`, followed by `z` and a complement of `z` in
//! the radical of `f`, is a basis in which `L` has the canonical constants
//! of `H(m) ⊕ A(k)`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::lie::{abelian, heisenberg, LieAlgebra};
use crate::linalg::{
    axpy, dot, is_zero_vector, kernel_basis, scale_vector, unit_vector, EchelonBasis, RatMatrix,
    RatVector, Rational, Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    /// `dim L² = 0`; abelian algebras are `A(n)` and are handled by the caller.
    #[error("abelian input of dimension {dim}")]
    Abelian { dim: usize },
    #[error("derived subalgebra has dimension {dim}; only dimension 1 is supported")]
    DerivedTooLarge { dim: usize },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("generator of the derived subalgebra is not central")]
    NonCentralGenerator,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("computed basis does not reproduce the canonical structure constants")]
    CertificationFailed,
}

/// Skew-symmetric bilinear form `f(x, y) = x·F·yᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingForm {
    matrix: RatMatrix,
}

impl AlternatingForm {
    pub fn new(matrix: RatMatrix) -> Result<Self, DecomposeError> {
        if matrix.is_skew_symmetric() {
            Ok(Self { matrix })
        } else {
            Err(DecomposeError::NotSkewSymmetric)
        }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let fy = self.matrix.mul_vec(y).expect("vector length matches form");
        dot(x, &fy)
    }

    /// `{x : f(x, ·) = 0}`.
    pub fn radical(&self) -> Subspace {
        kernel_basis(&self.matrix)
    }
}

/// The form `f` with `[e_i, e_j] = f(e_i, e_j)·z`, and the generator `z` of `L²`.
///
/// `z` is the RREF basis vector of `L²`, so its pivot entry is 1.
pub fn induced_form(algebra: &LieAlgebra) -> Result<(AlternatingForm, RatVector), DecomposeError> {
    let n = algebra.dim();
    let derived = algebra.derived_subalgebra();
    match derived.dim() {
        0 => return Err(DecomposeError::Abelian { dim: n }),
        1 => {}
        dim => return Err(DecomposeError::DerivedTooLarge { dim }),
    }
    if !algebra.is_nilpotent() {
        return Err(DecomposeError::NotNilpotent);
    }
    let z = derived.basis().row(0).to_vec();
    let pivot = derived.pivots()[0];
    let mut f = RatMatrix::zeros(n, n);
    for (i, j, v) in algebra.nonzero_brackets() {
        let c = v[pivot].clone();
        debug_assert_eq!(v, &scale_vector(&c, &z));
        f[(j, i)] = -c.clone();
        f[(i, j)] = c;
    }
    let ez = |j| algebra.bracket(&z, &unit_vector(n, j));
    if !(0..n).all(|j| is_zero_vector(&ez(j))) {
        return Err(DecomposeError::NonCentralGenerator);
    }
    Ok((AlternatingForm { matrix: f }, z))
}

/// Symplectic pairs `(a_i, b_i)` with `f(a_i, b_j) = δ_ij`, `f(a_i, a_j) = f(b_i, b_j) = 0`,
/// and the radical of the form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub pairs: Vec<(RatVector, RatVector)>,
    pub radical: Subspace,
}

/// Symplectic Gram-Schmidt over the standard basis.
///
/// Each step takes the first remaining vector that pairs nontrivially with
/// some other remaining vector, pairs it with the first such partner, scales
/// the partner so the pairing is 1, and projects the rest off the new pair.
pub fn symplectic_basis(form: &AlternatingForm) -> SymplecticBasis {
    let n = form.dim();
    let mut work: Vec<RatVector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut pairs = Vec::new();
    loop {
        let found = (0..work.len()).find_map(|u| {
            (0..work.len())
                .filter(|&v| v != u)
                .map(|v| (v, form.eval(&work[u], &work[v])))
                .find(|(_, c)| !c.is_zero())
                .map(|(v, c)| (u, v, c))
        });
        let Some((u, v, c)) = found else { break };
        let a = work[u].clone();
        let b = scale_vector(&c.recip(), &work[v]);
        debug_assert!(form.eval(&a, &b).is_one());
        work = work
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i != u && i != v)
            .map(|(_, mut w)| {
                // w ← w − f(w, b)·a + f(w, a)·b
                let wb = form.eval(&w, &b);
                let wa = form.eval(&w, &a);
                axpy(&mut w, &-wb, &a);
                axpy(&mut w, &wa, &b);
                w
            })
            .collect();
        pairs.push((a, b));
    }
    let radical = form.radical();
    debug_assert_eq!(Subspace::span(n, work).ok().as_ref(), Some(&radical));
    SymplecticBasis { pairs, radical }
}

/// Witness of `L ≅ H(m) ⊕ A(k)`: rows of `basis_change` are the new basis
/// `a_1..a_m, b_1..b_m, z, c_1..c_k` in the input coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: usize,
    pub k: usize,
    pub basis_change: RatMatrix,
}

impl Decomposition {
    /// The target algebra `H(m) ⊕ A(k)` in its canonical basis.
    pub fn canonical(&self) -> LieAlgebra {
        canonical_sum(self.m, self.k)
    }
}

/// `H(m) ⊕ A(k)`, or just `H(m)` when `k = 0`.
pub fn canonical_sum(m: usize, k: usize) -> LieAlgebra {
    if k == 0 {
        heisenberg(m)
    } else {
        heisenberg(m).direct_sum(&abelian(k))
    }
}

/// Decomposes a nilpotent algebra with `dim L² = 1` and certifies the result
/// by recomputing the structure constants in the new basis.
pub fn heisenberg_decompose(algebra: &LieAlgebra) -> Result<Decomposition, DecomposeError> {
    let n = algebra.dim();
    let (form, z) = induced_form(algebra)?;
    let SymplecticBasis { pairs, radical } = symplectic_basis(&form);
    let m = pairs.len();

    let mut rows: Vec<RatVector> = pairs.iter().map(|(a, _)| a.clone()).collect();
    rows.extend(pairs.iter().map(|(_, b)| b.clone()));
    rows.push(z.clone());

    let mut span_z = EchelonBasis::new(n);
    span_z.insert(z);
    for r in radical.basis_vectors() {
        if span_z.insert(r.to_vec()) {
            rows.push(r.to_vec());
        }
    }
    debug_assert_eq!(rows.len(), n);
    let k = n - 2 * m - 1;

    let basis_change = RatMatrix::from_rows(n, rows).expect("rows have length n");
    let decomposition = Decomposition { m, k, basis_change };
    let transported = algebra
        .change_of_basis(&decomposition.basis_change)
        .map_err(|_| DecomposeError::CertificationFailed)?;
    if !transported.same_constants(&decomposition.canonical()) {
        return Err(DecomposeError::CertificationFailed);
    }
    Ok(decomposition)
}
