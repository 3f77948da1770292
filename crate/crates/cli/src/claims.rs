//! The claim table printed by `verify-paper`: each published dimension or
//! verdict next to the value recomputed by the oracle.

use nilcap::capability::{catalog_families, catalog_seed, decide_capability, Family, Mode};
use nilcap::decompose::{canonical_sum, heisenberg_decompose};
use nilcap::lie::{abelian, heisenberg, Ideal, LieAlgebra};
use nilcap::linalg::Subspace;
use nilcap::multiplier::{dim_multiplier_abelian, dim_multiplier_direct_sum};
use nilcap::oracle::{exterior_square, quotient_wedge_dim, ExteriorSquare};
use nilcap::scramble::scramble;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Claim {
    fn new(claim: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Self {
            claim: claim.into(),
            pass: expected == computed,
            expected,
            computed,
        }
    }
}

fn wedge(l: &LieAlgebra) -> Result<ExteriorSquare, String> {
    exterior_square(l).map_err(|e| format!("oracle: {e}"))
}

fn capable_word(capable: bool) -> &'static str {
    if capable {
        "capable"
    } else {
        "not capable"
    }
}

fn multipliers(out: &mut Vec<Claim>) -> Result<(), String> {
    for n in 1..=7 {
        out.push(Claim::new(
            format!("dim M(A({n})) = {n}({n}-1)/2"),
            dim_multiplier_abelian(n),
            wedge(&abelian(n))?.multiplier_dim(),
        ));
    }
    out.push(Claim::new(
        "dim M(H(1)) = 2",
        2,
        wedge(&heisenberg(1))?.multiplier_dim(),
    ));
    for m in 2..=3 {
        out.push(Claim::new(
            format!("dim M(H({m})) = 2*{m}^2-{m}-1"),
            2 * m * m - m - 1,
            wedge(&heisenberg(m))?.multiplier_dim(),
        ));
    }
    out.push(Claim::new(
        "dim H(1)∧H(1) = 3",
        3,
        wedge(&heisenberg(1))?.dim(),
    ));
    for m in 2..=3 {
        out.push(Claim::new(
            format!("dim H({m})∧H({m}) = 2*{m}^2-{m}"),
            2 * m * m - m,
            wedge(&heisenberg(m))?.dim(),
        ));
    }
    Ok(())
}

/// `(name, algebra, dim M, dim L/L²)` for the direct-sum sweep.
fn summand(name: &str) -> (LieAlgebra, usize, usize) {
    match name {
        "A(1)" => (abelian(1), 0, 1),
        "A(2)" => (abelian(2), 1, 2),
        "A(3)" => (abelian(3), 3, 3),
        "H(1)" => (heisenberg(1), 2, 2),
        "H(2)" => (heisenberg(2), 5, 4),
        _ => unreachable!("fixed summand list"),
    }
}

fn direct_sums(out: &mut Vec<Claim>) -> Result<(), String> {
    let names = ["A(1)", "A(2)", "A(3)", "H(1)", "H(2)"];
    for (p, a) in names.iter().enumerate() {
        for b in &names[p + 1..] {
            let (l1, m1, ab1) = summand(a);
            let (l2, m2, ab2) = summand(b);
            out.push(Claim::new(
                format!("dim M({a}+{b}) = {m1}+{m2}+{ab1}*{ab2}"),
                dim_multiplier_direct_sum(m1, m2, ab1, ab2),
                wedge(&l1.direct_sum(&l2))?.multiplier_dim(),
            ));
        }
    }
    out.push(Claim::new(
        "dim M(H(1)+A(1)) = 2+0+2 = 4",
        4,
        wedge(&canonical_sum(1, 1))?.multiplier_dim(),
    ));
    Ok(())
}

fn capability(out: &mut Vec<Claim>) -> Result<(), String> {
    let mut cases: Vec<(String, LieAlgebra, bool)> = vec![("A(1)".into(), abelian(1), false)];
    cases.extend((2..=6).map(|n| (format!("A({n})"), abelian(n), true)));
    cases.extend((1..=3).map(|m| (format!("H({m})"), heisenberg(m), m == 1)));
    for m in 1..=3 {
        for k in 1..=3 {
            cases.push((format!("H({m})+A({k})"), canonical_sum(m, k), m == 1));
        }
    }
    for (name, l, expected) in cases {
        let computed = match decide_capability(&l, Mode::Both) {
            Ok(v) => v.capable.map_or("undecided", capable_word).to_string(),
            Err(e) => format!("capability: {e}"),
        };
        out.push(Claim::new(
            format!("{name} is {}", capable_word(expected)),
            capable_word(expected),
            computed,
        ));
    }
    Ok(())
}

fn exterior_centers(out: &mut Vec<Claim>) -> Result<(), String> {
    let mut cases: Vec<(String, LieAlgebra, bool)> = (2..=6)
        .map(|n| (format!("A({n})"), abelian(n), false))
        .collect();
    cases.push(("H(1)".into(), heisenberg(1), false));
    cases.extend((2..=3).map(|m| (format!("H({m})"), heisenberg(m), true)));
    for (name, l, is_derived) in cases {
        let derived_name = format!("{name}^2");
        let expected = if is_derived {
            derived_name.as_str()
        } else {
            "0"
        };
        let zw = wedge(&l)?.exterior_center();
        let computed = if zw.is_zero() {
            "0".to_string()
        } else if zw == l.derived_subalgebra() {
            derived_name.clone()
        } else {
            format!("subspace of dim {}", zw.dim())
        };
        out.push(Claim::new(
            format!("Z∧({name}) = {expected}"),
            expected,
            computed,
        ));
    }
    Ok(())
}

fn sample_algebras() -> Vec<(String, LieAlgebra)> {
    let mut out = Vec::new();
    for (member, family) in catalog_families().into_iter().enumerate() {
        let base = family.build();
        let seed = catalog_seed(member, 0);
        out.push((family.name(), base.clone()));
        out.push((
            format!("{}#{seed:x}", family.name()),
            scramble(&base, seed).0,
        ));
    }
    out
}

fn quotient_identities(out: &mut Vec<Claim>) -> Result<(), String> {
    for (name, l) in sample_algebras() {
        let w = wedge(&l)?;
        let ideal = Ideal::new(&l, w.exterior_center()).map_err(|e| format!("lie: {e}"))?;
        let q = quotient_wedge_dim(&l, &ideal).map_err(|e| format!("oracle: {e}"))?;
        out.push(Claim::new(
            format!("dim L∧L = dim (L/Z∧)∧(L/Z∧) for {name}"),
            w.dim(),
            q,
        ));
    }
    Ok(())
}

fn exactness(out: &mut Vec<Claim>) -> Result<(), String> {
    let families = catalog_families();
    let mut count = 0;
    for (member, family) in families.into_iter().enumerate() {
        if count >= 20 {
            break;
        }
        let (l, _) = scramble(&family.build(), catalog_seed(member, 1));
        let center = l.center();
        let first = Subspace::span(l.dim(), center.basis_vectors().take(1).map(|v| v.to_vec()))
            .map_err(|e| format!("linalg: {e}"))?;
        for (label, n) in [
            ("Z(L)", center.clone()),
            ("first basis vector of Z(L)", first),
        ] {
            let repeat = label != "Z(L)" && center.dim() == 1;
            if n.is_zero() || repeat || count >= 20 {
                continue;
            }
            let ideal = Ideal::new(&l, n).map_err(|e| format!("lie: {e}"))?;
            let w = wedge(&l)?;
            let image = w
                .image_of_wedge_with(&ideal)
                .map_err(|e| format!("oracle: {e}"))?;
            let q = quotient_wedge_dim(&l, &ideal).map_err(|e| format!("oracle: {e}"))?;
            out.push(Claim::new(
                format!(
                    "dim L∧L = dim im(L∧N) + dim (L/N)∧(L/N) for scrambled {}, N = {label}",
                    family.name()
                ),
                w.dim(),
                image.dim() + q,
            ));
            count += 1;
        }
    }
    Ok(())
}

fn decompositions(out: &mut Vec<Claim>) {
    for m in 1..=3 {
        for k in 0..=3 {
            let target = canonical_sum(m, k);
            let seed = 0xdec0 + (m * 4 + k) as u64;
            let (l, _) = scramble(&target, seed);
            let computed = match heisenberg_decompose(&l) {
                Ok(d) => {
                    let certified = l
                        .change_of_basis(&d.basis_change)
                        .map(|c| c.same_constants(&target))
                        .unwrap_or(false);
                    if certified {
                        format!("({}, {})", d.m, d.k)
                    } else {
                        "uncertified basis change".into()
                    }
                }
                Err(e) => format!("decompose: {e}"),
            };
            out.push(Claim::new(
                format!(
                    "scrambled {} decomposes as (m, k) = ({m}, {k})",
                    Family::HeisenbergSum { m, k }.name()
                ),
                format!("({m}, {k})"),
                computed,
            ));
        }
    }
}

fn commutator_map(out: &mut Vec<Claim>) -> Result<(), String> {
    let mut failures = 0;
    let samples = sample_algebras();
    for (_, l) in &samples {
        let w = wedge(l)?;
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                let e = |t: usize| nilcap::linalg::unit_vector(n, t);
                let x = w.wedge(&e(i), &e(j));
                if w.commutator(&x) != l.bracket(&e(i), &e(j)) {
                    failures += 1;
                }
            }
        }
    }
    out.push(Claim::new(
        format!(
            "κ(x∧y) = [x, y] on basis pairs of {} sample algebras",
            samples.len()
        ),
        "0 failures",
        format!("{failures} failures"),
    ));
    Ok(())
}

/// Recomputes every claim. An `Err` means a module failed outright, which is
/// an internal defect rather than a mismatch.
pub fn verify_all() -> Result<Vec<Claim>, String> {
    let mut out = Vec::new();
    multipliers(&mut out)?;
    direct_sums(&mut out)?;
    capability(&mut out)?;
    exterior_centers(&mut out)?;
    quotient_identities(&mut out)?;
    exactness(&mut out)?;
    decompositions(&mut out);
    commutator_map(&mut out)?;
    Ok(out)
}
