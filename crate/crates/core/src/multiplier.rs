//! Closed-form Schur multiplier and exterior square dimensions for `A(n)`,
//! `H(m)` and their direct sums.

use thiserror::Error;

use crate::decompose::{heisenberg_decompose, DecomposeError};
use crate::lie::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplierError {
    #[error("H(m) requires m >= 1")]
    ZeroHeisenberg,
    #[error("derived subalgebra has dimension {0}; unsupported by classification, use the oracle")]
    Unsupported(usize),
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierReport {
    pub description: String,
    pub dim_multiplier: usize,
    /// Always `dim_multiplier + dim L²`.
    pub dim_exterior_square: usize,
    pub method: Method,
}

/// `dim M(A(n)) = n(n-1)/2`.
pub fn dim_multiplier_abelian(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `dim M(H(1)) = 2` and `dim M(H(m)) = 2m² - m - 1` for `m ≥ 2`.
pub fn dim_multiplier_heisenberg(m: usize) -> Result<usize, MultiplierError> {
    match m {
        0 => Err(MultiplierError::ZeroHeisenberg),
        1 => Ok(2),
        m => Ok(2 * m * m - m - 1),
    }
}

/// `dim M(L₁ ⊕ L₂) = dim M(L₁) + dim M(L₂) + dim(L₁/L₁²)·dim(L₂/L₂²)`.
pub fn dim_multiplier_direct_sum(dim_m1: usize, dim_m2: usize, ab1: usize, ab2: usize) -> usize {
    dim_m1 + dim_m2 + ab1 * ab2
}

/// `dim H(1)∧H(1) = 3` and `dim H(m)∧H(m) = 2m² - m` for `m ≥ 2`.
pub fn dim_exterior_square_heisenberg(m: usize) -> Result<usize, MultiplierError> {
    match m {
        0 => Err(MultiplierError::ZeroHeisenberg),
        1 => Ok(3),
        m => Ok(2 * m * m - m),
    }
}

/// Multiplier dimension of a nilpotent algebra with `dim L² ≤ 1`, computed by
/// decomposing it as `A(n)` or `H(m) ⊕ A(k)` and applying the closed forms.
pub fn dim_multiplier_classified(
    algebra: &LieAlgebra,
) -> Result<MultiplierReport, MultiplierError> {
    let n = algebra.dim();
    let derived = algebra.derived_subalgebra().dim();
    if derived >= 2 {
        return Err(MultiplierError::Unsupported(derived));
    }
    if !algebra.is_nilpotent() {
        return Err(MultiplierError::NotNilpotent);
    }
    let (description, dim_multiplier) = if derived == 0 {
        (format!("A({n})"), dim_multiplier_abelian(n))
    } else {
        let d = heisenberg_decompose(algebra)?;
        let (m, k) = (d.m, d.k);
        // dim(H(m)/H(m)²) = 2m, dim(A(k)/0) = k
        let dim = dim_multiplier_direct_sum(
            dim_multiplier_heisenberg(m)?,
            dim_multiplier_abelian(k),
            2 * m,
            k,
        );
        let description = if k == 0 {
            format!("H({m})")
        } else {
            format!("H({m})+A({k})")
        };
        (description, dim)
    };
    Ok(MultiplierReport {
        description,
        dim_multiplier,
        dim_exterior_square: dim_multiplier + derived,
        method: Method::Formula,
    })
}
