//! Builtin algebra expressions: `A(n)` and `H(m)` terms joined by `+`,
//! for example `H(2)+A(3)`.

use nilcap::{abelian, heisenberg, LieAlgebra};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    Abelian(usize),
    Heisenberg(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("empty expression")]
    Empty,
    #[error("cannot parse term `{0}`: expected A(n) or H(m)")]
    BadTerm(String),
    #[error("H(0) is not defined; H(m) needs m >= 1")]
    ZeroHeisenberg,
}

pub fn parse(expr: &str) -> Result<Vec<Term>, ExprError> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ExprError::Empty);
    }
    compact.split('+').map(parse_term).collect()
}

fn parse_term(term: &str) -> Result<Term, ExprError> {
    let bad = || ExprError::BadTerm(term.to_string());
    let (kind, rest) = term.split_at(term.char_indices().nth(1).map_or(term.len(), |(i, _)| i));
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: usize = inner.parse().map_err(|_| bad())?;
    match kind {
        "A" => Ok(Term::Abelian(n)),
        "H" if n == 0 => Err(ExprError::ZeroHeisenberg),
        "H" => Ok(Term::Heisenberg(n)),
        _ => Err(bad()),
    }
}

pub fn build(terms: &[Term]) -> LieAlgebra {
    let one = |t: &Term| match *t {
        Term::Abelian(n) => abelian(n),
        Term::Heisenberg(m) => heisenberg(m),
    };
    let mut iter = terms.iter();
    let first = one(iter.next().expect("parse never returns an empty term list"));
    iter.fold(first, |acc, t| acc.direct_sum(&one(t)))
}

pub fn parse_algebra(expr: &str) -> Result<LieAlgebra, ExprError> {
    parse(expr).map(|terms| build(&terms))
}
