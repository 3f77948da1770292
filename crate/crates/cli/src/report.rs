//! The `analyze` report.

use std::fmt::Write as _;

use nilcap::capability::{classify, decide_capability, AlgebraClass, Mode, Provenance};
use nilcap::decompose::DecomposeError;
use nilcap::multiplier::{dim_multiplier_classified, MultiplierError};
use nilcap::oracle::{exterior_square, OracleError};
use nilcap::LieAlgebra;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    Formula,
    Oracle,
    Both,
}

impl MethodArg {
    fn runs_formula(self) -> bool {
        self != MethodArg::Oracle
    }

    fn runs_oracle(self) -> bool {
        self != MethodArg::Formula
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Formula => "formula",
            MethodArg::Oracle => "oracle",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub algebra: usize,
    pub derived: usize,
    pub center: usize,
    pub lower_central_series: Vec<usize>,
    pub nilpotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub m: usize,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplierDims {
    pub formula: Option<usize>,
    pub oracle: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Capability {
    pub class: String,
    pub capable: Option<bool>,
    pub provenance: &'static str,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: String,
    pub method: &'static str,
    pub valid: bool,
    pub dims: Dims,
    pub decomposition: Option<DecompositionSummary>,
    pub multiplier: MultiplierDims,
    pub exterior_square: Option<usize>,
    pub exterior_center: Option<usize>,
    pub capability: Capability,
    pub oracle_agreement: Option<bool>,
}

/// Failures that indicate a defect or an inconsistency between routes; the
/// binary exits with status 3 on any of them.
#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
    #[error("decompose: {0}")]
    Decompose(#[from] DecomposeError),
    #[error("multiplier: {0}")]
    Multiplier(MultiplierError),
    #[error("capability: {0}")]
    Capability(nilcap::capability::CapabilityError),
    #[error("discrepancy: formula gives dim M = {formula}, oracle gives {oracle}")]
    MultiplierDiscrepancy { formula: usize, oracle: usize },
}

fn class_name(class: AlgebraClass) -> String {
    match class {
        AlgebraClass::Abelian(n) => format!("A({n})"),
        AlgebraClass::HeisenbergSum { m, k: 0 } => format!("H({m})"),
        AlgebraClass::HeisenbergSum { m, k } => format!("H({m})+A({k})"),
        AlgebraClass::Unclassified => "unclassified".into(),
    }
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Classification => "classification",
        Provenance::OracleOnly => "oracle-only",
        Provenance::Undecided => "undecided",
    }
}

pub fn analyze(
    input: &str,
    algebra: &LieAlgebra,
    method: MethodArg,
) -> Result<Report, AnalyzeError> {
    let derived = algebra.derived_subalgebra().dim();
    let dims = Dims {
        algebra: algebra.dim(),
        derived,
        center: algebra.center().dim(),
        lower_central_series: algebra
            .lower_central_series()
            .iter()
            .map(|s| s.dim())
            .collect(),
        nilpotent: algebra.is_nilpotent(),
    };

    let class = classify(algebra).map_err(AnalyzeError::Capability)?.class;
    let decomposition = match class {
        AlgebraClass::HeisenbergSum { m, k } => Some(DecompositionSummary { m, k }),
        _ => None,
    };

    let formula = if method.runs_formula() {
        match dim_multiplier_classified(algebra) {
            Ok(r) => Some(r.dim_multiplier),
            Err(MultiplierError::Unsupported(_) | MultiplierError::NotNilpotent) => None,
            Err(e) => return Err(AnalyzeError::Multiplier(e)),
        }
    } else {
        None
    };

    let (oracle, exterior_square_dim, exterior_center) = if method.runs_oracle() {
        let e = exterior_square(algebra)?;
        (
            Some(e.multiplier_dim()),
            Some(e.dim()),
            Some(e.exterior_center().dim()),
        )
    } else {
        (None, formula.map(|m| m + derived), None)
    };

    if let (Some(f), Some(o)) = (formula, oracle) {
        if f != o {
            return Err(AnalyzeError::MultiplierDiscrepancy {
                formula: f,
                oracle: o,
            });
        }
    }

    let mode = match method {
        MethodArg::Formula => Mode::Classify,
        MethodArg::Oracle => Mode::Oracle,
        MethodArg::Both => Mode::Both,
    };
    let verdict = decide_capability(algebra, mode).map_err(AnalyzeError::Capability)?;
    let mut reasons = verdict.reasons;
    if method.runs_formula() && formula.is_none() {
        reasons.push("multiplier formula not applicable: needs nilpotent with dim L^2 <= 1".into());
    }
    let oracle_agreement = match (formula, oracle, verdict.oracle_agreement) {
        (Some(_), Some(_), Some(agree)) => Some(agree),
        _ => None,
    };

    Ok(Report {
        input: input.to_string(),
        method: method.name(),
        valid: true,
        dims,
        decomposition,
        multiplier: MultiplierDims { formula, oracle },
        exterior_square: exterior_square_dim,
        exterior_center,
        capability: Capability {
            class: class_name(verdict.class),
            capable: verdict.capable,
            provenance: provenance_name(verdict.provenance),
            reasons,
        },
        oracle_agreement,
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let d = &self.dims;
        let series: Vec<String> = d
            .lower_central_series
            .iter()
            .map(|x| x.to_string())
            .collect();
        let _ = writeln!(s, "input: {}", self.input);
        let _ = writeln!(s, "method: {}", self.method);
        let _ = writeln!(s, "valid: {}", self.valid);
        let _ = writeln!(s, "dim L: {}", d.algebra);
        let _ = writeln!(s, "dim L^2: {}", d.derived);
        let _ = writeln!(s, "dim Z(L): {}", d.center);
        let _ = writeln!(s, "lower central series: {}", series.join(" > "));
        let _ = writeln!(s, "nilpotent: {}", d.nilpotent);
        let decomposition = self
            .decomposition
            .as_ref()
            .map(|x| format!("(m, k) = ({}, {})", x.m, x.k));
        let _ = writeln!(s, "decomposition: {}", opt(decomposition));
        let _ = writeln!(s, "dim M(L) formula: {}", opt(self.multiplier.formula));
        let _ = writeln!(s, "dim M(L) oracle: {}", opt(self.multiplier.oracle));
        let _ = writeln!(s, "dim L^L: {}", opt(self.exterior_square));
        let _ = writeln!(s, "dim Z^(L): {}", opt(self.exterior_center));
        let c = &self.capability;
        let _ = writeln!(s, "class: {}", c.class);
        let _ = writeln!(s, "capable: {} ({})", opt(c.capable), c.provenance);
        for r in &c.reasons {
            let _ = writeln!(s, "  because: {r}");
        }
        let _ = writeln!(s, "oracle agreement: {}", opt(self.oracle_agreement));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_algebra;

    fn run(expr: &str, method: MethodArg) -> Report {
        analyze(expr, &parse_algebra(expr).unwrap(), method).unwrap()
    }

    #[test]
    fn heisenberg_plus_line() {
        let r = run("H(1)+A(1)", MethodArg::Both);
        assert_eq!(
            r.multiplier,
            MultiplierDims {
                formula: Some(4),
                oracle: Some(4)
            }
        );
        assert_eq!(r.capability.capable, Some(true));
        assert_eq!(r.oracle_agreement, Some(true));
        assert_eq!(r.decomposition, Some(DecompositionSummary { m: 1, k: 1 }));
        assert_eq!(r.dims.lower_central_series, vec![4, 1, 0]);
    }

    #[test]
    fn formula_only_fills_exterior_square() {
        let r = run("H(2)", MethodArg::Formula);
        assert_eq!(r.exterior_square, Some(6));
        assert_eq!(r.exterior_center, None);
        assert_eq!(r.capability.capable, Some(false));
    }

    #[test]
    fn unclassified_pair() {
        let r = run("H(1)+H(1)", MethodArg::Both);
        assert_eq!(r.multiplier.formula, None);
        assert_eq!(r.capability.class, "unclassified");
        assert_eq!(r.capability.provenance, "oracle-only");
        assert_eq!(r.oracle_agreement, None);
        let r = run("H(1)+H(1)", MethodArg::Formula);
        assert_eq!(r.capability.capable, None);
    }
}
