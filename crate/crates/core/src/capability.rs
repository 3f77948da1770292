//! Capability decisions.
//!
//! Nilpotent algebras with `dim L² ≤ 1` are classified as `A(n)` or
//! `H(m) ⊕ A(k)`, and their capability follows from the classification:
//! `A(n)` is capable iff `n ≥ 2`, and `H(m) ⊕ A(k)` is capable iff `m = 1`.
//! Every other algebra can only be decided by the exterior-square oracle,
//! and verdicts record which route produced them.

use thiserror::Error;

use crate::decompose::{canonical_sum, heisenberg_decompose, DecomposeError};
use crate::lie::{abelian, heisenberg, LieAlgebra};
use crate::oracle::{self, OracleError};
use crate::scramble::scramble;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraClass {
    Abelian(usize),
    HeisenbergSum { m: usize, k: usize },
    Unclassified,
}

/// Where a capability verdict comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Decided by the classification theorems.
    Classification,
    /// Decided only by computing `Z∧(L)`; no classification result covers the input.
    OracleOnly,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Classify,
    Oracle,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub class: AlgebraClass,
    pub capable: Option<bool>,
    pub provenance: Provenance,
    pub reasons: Vec<String>,
    /// `None` unless both routes produced a verdict.
    pub oracle_agreement: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapabilityError {
    #[error("classification says capable = {classified}, oracle says capable = {oracle}")]
    Discrepancy { classified: bool, oracle: bool },
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

const ABELIAN_RULE: &str = "A(n) is capable iff n >= 2";
const HEISENBERG_SUM_RULE: &str = "H(m)+A(k) is capable iff m = 1";
const DECOMPOSITION_RULE: &str =
    "nilpotent with dim L^2 = 1, hence isomorphic to H(m)+A(n-2m-1) (certified basis change)";

/// Classifies by the theorems alone; no oracle call.
pub fn classify(algebra: &LieAlgebra) -> Result<ClassVerdict, CapabilityError> {
    let n = algebra.dim();
    let derived = algebra.derived_subalgebra().dim();
    let unclassified = |reason: String| ClassVerdict {
        class: AlgebraClass::Unclassified,
        capable: None,
        provenance: Provenance::Undecided,
        reasons: vec![reason],
        oracle_agreement: None,
    };
    if !algebra.is_nilpotent() {
        return Ok(unclassified(
            "not nilpotent: outside the classification".into(),
        ));
    }
    match derived {
        0 => Ok(ClassVerdict {
            class: AlgebraClass::Abelian(n),
            capable: Some(n >= 2),
            provenance: Provenance::Classification,
            reasons: vec![ABELIAN_RULE.into()],
            oracle_agreement: None,
        }),
        1 => {
            let d = heisenberg_decompose(algebra)?;
            Ok(ClassVerdict {
                class: AlgebraClass::HeisenbergSum { m: d.m, k: d.k },
                capable: Some(d.m == 1),
                provenance: Provenance::Classification,
                reasons: vec![DECOMPOSITION_RULE.into(), HEISENBERG_SUM_RULE.into()],
                oracle_agreement: None,
            })
        }
        d => Ok(unclassified(format!(
            "dim L^2 = {d} >= 2: outside the classification"
        ))),
    }
}

fn oracle_reason(dim_exterior_center: usize) -> String {
    if dim_exterior_center == 0 {
        "oracle: Z^(L) = 0, so L is capable".into()
    } else {
        format!("oracle: dim Z^(L) = {dim_exterior_center}, so L is not capable")
    }
}

/// Decides capability by the requested route. In [`Mode::Both`], a
/// disagreement on a classified algebra is returned as
/// [`CapabilityError::Discrepancy`].
pub fn decide_capability(
    algebra: &LieAlgebra,
    mode: Mode,
) -> Result<ClassVerdict, CapabilityError> {
    let oracle_verdict = || -> Result<(bool, String), CapabilityError> {
        let zw = oracle::exterior_center(algebra)?.dim();
        Ok((zw == 0, oracle_reason(zw)))
    };
    match mode {
        Mode::Classify => classify(algebra),
        Mode::Oracle => {
            let (capable, reason) = oracle_verdict()?;
            let class = classify(algebra)?.class;
            Ok(ClassVerdict {
                class,
                capable: Some(capable),
                provenance: Provenance::OracleOnly,
                reasons: vec![reason],
                oracle_agreement: None,
            })
        }
        Mode::Both => {
            let mut verdict = classify(algebra)?;
            let (capable, reason) = oracle_verdict()?;
            verdict.reasons.push(reason);
            match verdict.capable {
                Some(classified) if classified != capable => {
                    return Err(CapabilityError::Discrepancy {
                        classified,
                        oracle: capable,
                    })
                }
                Some(_) => verdict.oracle_agreement = Some(true),
                None => {
                    verdict.capable = Some(capable);
                    verdict.provenance = Provenance::OracleOnly;
                }
            }
            Ok(verdict)
        }
    }
}

/// Which family a catalog member was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Abelian(usize),
    /// `H(m) ⊕ A(k)`; `k = 0` is `H(m)` itself.
    HeisenbergSum {
        m: usize,
        k: usize,
    },
    /// `H(1) ⊕ H(1)`, the one member with `dim L² = 2`.
    HeisenbergPair,
}

impl Family {
    pub fn build(self) -> LieAlgebra {
        match self {
            Family::Abelian(n) => abelian(n),
            Family::HeisenbergSum { m, k } => canonical_sum(m, k),
            Family::HeisenbergPair => heisenberg(1).direct_sum(&heisenberg(1)),
        }
    }

    pub fn name(self) -> String {
        match self {
            Family::Abelian(n) => format!("A({n})"),
            Family::HeisenbergSum { m, k: 0 } => format!("H({m})"),
            Family::HeisenbergSum { m, k } => format!("H({m})+A({k})"),
            Family::HeisenbergPair => "H(1)+H(1)".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    /// `None` for the canonical basis.
    pub scramble_seed: Option<u64>,
    pub algebra: LieAlgebra,
}

/// Seeds for the scrambled copies of every catalog family.
pub const SCRAMBLE_SEEDS: [u64; 10] = [
    0x5eed_0001,
    0x5eed_0002,
    0x5eed_0003,
    0x5eed_0005,
    0x5eed_0008,
    0x5eed_000d,
    0x5eed_0015,
    0x5eed_0022,
    0x5eed_0037,
    0x5eed_0059,
];

/// The catalog families in a fixed order: `A(1..6)`, `H(1..3)`,
/// `H(m)+A(k)` for `m, k ∈ 1..3`, and `H(1)+H(1)`.
pub fn catalog_families() -> Vec<Family> {
    let mut out: Vec<Family> = (1..=6).map(Family::Abelian).collect();
    out.extend((1..=3).map(|m| Family::HeisenbergSum { m, k: 0 }));
    for m in 1..=3 {
        out.extend((1..=3).map(|k| Family::HeisenbergSum { m, k }));
    }
    out.push(Family::HeisenbergPair);
    out
}

/// Seed for the `copy`-th scramble of the `member`-th family.
pub fn catalog_seed(member: usize, copy: usize) -> u64 {
    SCRAMBLE_SEEDS[copy] ^ ((member as u64) << 32)
}

/// Every catalog family in its canonical basis, followed by ten seeded scrambles of each.
pub fn catalog() -> Vec<CatalogEntry> {
    let families = catalog_families();
    let mut out: Vec<CatalogEntry> = families
        .iter()
        .map(|&family| CatalogEntry {
            name: family.name(),
            family,
            scramble_seed: None,
            algebra: family.build(),
        })
        .collect();
    for (member, &family) in families.iter().enumerate() {
        let base = family.build();
        for copy in 0..SCRAMBLE_SEEDS.len() {
            let seed = catalog_seed(member, copy);
            out.push(CatalogEntry {
                name: format!("{}#{seed:x}", family.name()),
                family,
                scramble_seed: Some(seed),
                algebra: scramble(&base, seed).0,
            });
        }
    }
    out
}
