//! Brute-force non-abelian exterior square.
//!
//! `L∧L` is built as the quotient of the `n²`-dimensional span of symbols
//! `e_i⊗e_j` by the relations
//!
//! * `[e_i,e_j]⊗e_k − e_i⊗[e_j,e_k] + e_j⊗[e_i,e_k]`
//! * `e_i⊗[e_j,e_k] − [e_k,e_i]⊗e_j + [e_j,e_i]⊗e_k`
//! * `e_i⊗e_i` and `e_i⊗e_j + e_j⊗e_i`
//!
//! over all index triples. The commutator map `κ: x∧y ↦ [x, y]` onto `L²` has
//! kernel `M(L)`, and the exterior center `Z∧(L) = {x : x∧y = 0 ∀y}` is zero
//! exactly when `L` is capable. Nothing here assumes a classification.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lie::{Ideal, LieAlgebra, LieError};
use crate::linalg::{
    axpy, is_zero_vector, kernel_basis, quotient_map, LinalgError, Quotient, RatMatrix, RatVector,
    Rational, Subspace,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationFamily {
    /// `[x,y]⊗z = x⊗[y,z] − y⊗[x,z]`
    LeftAction,
    /// `x⊗[y,z] = [z,x]⊗y − [y,x]⊗z`
    RightAction,
    /// `x⊗x = 0`, `x⊗y = −y⊗x`
    Alternating,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// A relation does not vanish under `e_i⊗e_j ↦ [e_i, e_j]`, so `κ` would
    /// not be well defined. Never expected on valid input.
    #[error(
        "self-check failed: {family:?} relation ({i}, {j}, {k}) does not vanish under the bracket"
    )]
    SelfCheck {
        family: RelationFamily,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("commutator map is not surjective onto the derived subalgebra")]
    KappaNotSurjective,
    #[error("ideal is not central")]
    NotCentral,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An element of `L∧L` in quotient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeVector(pub RatVector);

impl WedgeVector {
    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }
}

#[derive(Debug, Clone)]
pub struct ExteriorSquare {
    source: LieAlgebra,
    derived: Subspace,
    quotient: Quotient,
    kappa: RatMatrix,
}

fn symbol(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// Adds `scale · (x ⊗ y)` to a symbol-space vector.
fn add_tensor(acc: &mut [Rational], n: usize, scale: i64, x: &[Rational], y: &[Rational]) {
    let s = Rational::from_integer(scale.into());
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let c = &s * xi;
        axpy(&mut acc[i * n..(i + 1) * n], &c, y);
    }
}

/// Integer vector in symbol space, accumulated densely.
type IntVector = Vec<BigInt>;

/// `acc[x ⊗ e_k] += sign · x` for an integer vector `x`.
fn add_left(acc: &mut [BigInt], n: usize, sign: i8, x: &[BigInt], k: usize) {
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            add_signed(&mut acc[symbol(n, i, k)], sign, xi);
        }
    }
}

/// `acc[e_i ⊗ y] += sign · y`.
fn add_right(acc: &mut [BigInt], n: usize, sign: i8, i: usize, y: &[BigInt]) {
    for (j, yj) in y.iter().enumerate() {
        if !yj.is_zero() {
            add_signed(&mut acc[symbol(n, i, j)], sign, yj);
        }
    }
}

fn add_signed(target: &mut BigInt, sign: i8, value: &BigInt) {
    if sign > 0 {
        *target += value;
    } else {
        *target -= value;
    }
}

struct Relation {
    family: RelationFamily,
    indices: (usize, usize, usize),
    vector: IntVector,
}

/// `D·[e_i, e_j]` for all `i, j`, where `D` is the least common denominator
/// of the structure constants. Relations are linear in the brackets, so
/// building them from the scaled table leaves their span unchanged while
/// keeping every entry integral.
fn scaled_brackets(algebra: &LieAlgebra) -> Vec<Vec<IntVector>> {
    let n = algebra.dim();
    let lcd = algebra
        .nonzero_brackets()
        .flat_map(|(_, _, v)| v.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    algebra
                        .basis_bracket(i, j)
                        .iter()
                        .map(|c| (c * &lcd).to_integer())
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Every relation vector, with the index triple it was instantiated from.
fn relations(n: usize, br: &[Vec<IntVector>], abelian: bool) -> Vec<Relation> {
    let ambient = n * n;
    let mut out = Vec::new();
    let mut push = |family, indices, vector: IntVector| {
        if vector.iter().any(|x| !x.is_zero()) {
            out.push(Relation {
                family,
                indices,
                vector,
            });
        }
    };
    if !abelian {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // [e_i,e_j]⊗e_k − e_i⊗[e_j,e_k] + e_j⊗[e_i,e_k]
                    let mut r = vec![BigInt::zero(); ambient];
                    add_left(&mut r, n, 1, &br[i][j], k);
                    add_right(&mut r, n, -1, i, &br[j][k]);
                    add_right(&mut r, n, 1, j, &br[i][k]);
                    push(RelationFamily::LeftAction, (i, j, k), r);

                    // e_i⊗[e_j,e_k] − [e_k,e_i]⊗e_j + [e_j,e_i]⊗e_k
                    let mut r = vec![BigInt::zero(); ambient];
                    add_right(&mut r, n, 1, i, &br[j][k]);
                    add_left(&mut r, n, -1, &br[k][i], j);
                    add_left(&mut r, n, 1, &br[j][i], k);
                    push(RelationFamily::RightAction, (i, j, k), r);
                }
            }
        }
    }
    for i in 0..n {
        let mut r = vec![BigInt::zero(); ambient];
        r[symbol(n, i, i)] = BigInt::one();
        push(RelationFamily::Alternating, (i, i, i), r);
        for j in i + 1..n {
            let mut r = vec![BigInt::zero(); ambient];
            r[symbol(n, i, j)] = BigInt::one();
            r[symbol(n, j, i)] = BigInt::one();
            push(RelationFamily::Alternating, (i, j, j), r);
        }
    }
    out
}

/// `Σ r_{ij} br[i][j]` for a symbol-space vector `r`.
fn symbol_bracket(n: usize, br: &[Vec<IntVector>], r: &[BigInt]) -> IntVector {
    let mut out = vec![BigInt::zero(); n];
    for (s, c) in r.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, b) in out.iter_mut().zip(&br[s / n][s % n]) {
            if !b.is_zero() {
                *o += c * b;
            }
        }
    }
    out
}

/// Divides out the content and fixes the sign of the leading entry, so that
/// vectors spanning the same line compare equal.
fn primitive(v: IntVector) -> IntVector {
    let content = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let lead_negative = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let divisor = if lead_negative { -content } else { content };
    v.into_iter().map(|x| x / &divisor).collect()
}

impl ExteriorSquare {
    /// Builds `L∧L`, checking that every relation lies in the kernel of the
    /// symbol-level bracket and that `κ` is onto `L²`.
    pub fn new(algebra: &LieAlgebra) -> Result<Self, OracleError> {
        let n = algebra.dim();
        let br = scaled_brackets(algebra);
        let rels = relations(n, &br, algebra.is_abelian());
        for rel in &rels {
            if symbol_bracket(n, &br, &rel.vector)
                .iter()
                .any(|x| !x.is_zero())
            {
                let (i, j, k) = rel.indices;
                return Err(OracleError::SelfCheck {
                    family: rel.family,
                    i,
                    j,
                    k,
                });
            }
        }
        let lines: BTreeSet<IntVector> = rels.into_iter().map(|r| primitive(r.vector)).collect();
        let vectors: Vec<RatVector> = lines
            .into_iter()
            .map(|v| v.into_iter().map(Rational::from_integer).collect())
            .collect();
        let quotient = quotient_map(n * n, &vectors)?;
        let derived = algebra.derived_subalgebra();
        let mut kappa = RatMatrix::zeros(derived.dim(), quotient.dim());
        for (q, &s) in quotient.section().iter().enumerate() {
            let coords = derived
                .coordinates(&algebra.basis_bracket(s / n, s % n))
                .expect("brackets lie in the derived subalgebra");
            for (row, c) in coords.into_iter().enumerate() {
                kappa[(row, q)] = c;
            }
        }
        if kappa.rank() != derived.dim() {
            return Err(OracleError::KappaNotSurjective);
        }
        Ok(Self {
            source: algebra.clone(),
            derived,
            quotient,
            kappa,
        })
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    /// `n²`, the number of symbols `e_i⊗e_j`.
    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn relation_rank(&self) -> usize {
        self.quotient.relations().dim()
    }

    /// `dim L∧L`.
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `dim L∧L × n²` projection from symbol space.
    pub fn projection(&self) -> &RatMatrix {
        self.quotient.projection()
    }

    /// `κ` as a `dim L² × dim L∧L` matrix, in the RREF coordinates of `L²`.
    pub fn kappa(&self) -> &RatMatrix {
        &self.kappa
    }

    pub fn derived_subalgebra(&self) -> &Subspace {
        &self.derived
    }

    /// `dim M(L) = dim ker κ`.
    pub fn multiplier_dim(&self) -> usize {
        kernel_basis(&self.kappa).dim()
    }

    pub fn wedge(&self, x: &[Rational], y: &[Rational]) -> WedgeVector {
        let n = self.source.dim();
        let mut t = vec![Rational::zero(); n * n];
        add_tensor(&mut t, n, 1, x, y);
        WedgeVector(self.quotient.project(&t))
    }

    /// `κ(w)` expressed in the ambient coordinates of `L`.
    pub fn commutator(&self, w: &WedgeVector) -> RatVector {
        let coords = self
            .kappa
            .mul_vec(&w.0)
            .expect("wedge vector has quotient length");
        self.derived
            .basis()
            .vec_mul(&coords)
            .expect("coordinates match derived dimension")
    }

    /// `Z∧(L)`: kernel of `x ↦ (x∧e_0, ..., x∧e_{n-1})`.
    pub fn exterior_center(&self) -> Subspace {
        let n = self.source.dim();
        let q = self.dim();
        let proj = self.projection();
        let mut stacked = RatMatrix::zeros(n * q, n);
        for j in 0..n {
            for row in 0..q {
                for i in 0..n {
                    stacked[(j * q + row, i)] = proj[(row, symbol(n, i, j))].clone();
                }
            }
        }
        kernel_basis(&stacked)
    }

    /// Image of `L∧N → L∧L`, spanned by `e_i∧u` for `u` in a basis of `N`.
    pub fn image_of_wedge_with(&self, ideal: &Ideal) -> Result<Subspace, OracleError> {
        ensure_central(&self.source, ideal)?;
        let n = self.source.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            let e = crate::linalg::unit_vector(n, i);
            for u in ideal.subspace().basis_vectors() {
                gens.push(self.wedge(&e, u).0);
            }
        }
        Ok(Subspace::span(self.dim(), gens)?)
    }
}

fn ensure_central(algebra: &LieAlgebra, ideal: &Ideal) -> Result<(), OracleError> {
    if ideal.is_central_in(algebra) && algebra.is_ideal(ideal.subspace())? {
        Ok(())
    } else {
        Err(OracleError::NotCentral)
    }
}

pub fn exterior_square(algebra: &LieAlgebra) -> Result<ExteriorSquare, OracleError> {
    ExteriorSquare::new(algebra)
}

/// `dim M(L)` from the explicit exterior square.
pub fn schur_multiplier_dim(algebra: &LieAlgebra) -> Result<usize, OracleError> {
    Ok(exterior_square(algebra)?.multiplier_dim())
}

pub fn exterior_center(algebra: &LieAlgebra) -> Result<Subspace, OracleError> {
    Ok(exterior_square(algebra)?.exterior_center())
}

/// `L` is capable iff `Z∧(L) = 0`.
pub fn is_capable(algebra: &LieAlgebra) -> Result<bool, OracleError> {
    Ok(exterior_center(algebra)?.is_zero())
}

/// `dim (L/N ∧ L/N)` for a central ideal `N`.
pub fn quotient_wedge_dim(algebra: &LieAlgebra, ideal: &Ideal) -> Result<usize, OracleError> {
    ensure_central(algebra, ideal)?;
    let (quotient, _) = algebra.quotient_algebra(ideal)?;
    Ok(exterior_square(&quotient)?.dim())
}

pub fn image_of_wedge_with(algebra: &LieAlgebra, ideal: &Ideal) -> Result<Subspace, OracleError> {
    exterior_square(algebra)?.image_of_wedge_with(ideal)
}

/// `N ⊆ Z∧(L)` iff the natural surjection `L∧L → L/N∧L/N` is injective,
/// i.e. iff both sides have the same dimension.
pub fn is_in_exterior_center_by_quotient(
    algebra: &LieAlgebra,
    ideal: &Ideal,
) -> Result<bool, OracleError> {
    ensure_central(algebra, ideal)?;
    Ok(exterior_square(algebra)?.dim() == quotient_wedge_dim(algebra, ideal)?)
}
