//! Acceptance criteria. Run with `cargo test -p nilcap --test acceptance`.
//!
//! Every criterion is an exact identity; the only thresholds are the
//! wall-clock limits on the sweeps that have one.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nilcap::capability::{catalog, catalog_families, decide_capability, Mode};
use nilcap::decompose::{canonical_sum, heisenberg_decompose};
use nilcap::lie::{abelian, heisenberg, Ideal, LieAlgebra};
use nilcap::linalg::{rat, unit_vector, RatVector, Subspace};
use nilcap::multiplier::{
    dim_multiplier_abelian, dim_multiplier_direct_sum, dim_multiplier_heisenberg,
};
use nilcap::oracle::{exterior_square, quotient_wedge_dim};
use nilcap::scramble::{random_invertible, scramble};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

struct Wedge {
    dim: usize,
    multiplier: usize,
    exterior_center: Subspace,
}

fn wedge(l: &LieAlgebra) -> Result<Wedge, String> {
    let e = exterior_square(l).map_err(|err| err.to_string())?;
    Ok(Wedge {
        dim: e.dim(),
        multiplier: e.multiplier_dim(),
        exterior_center: e.exterior_center(),
    })
}

// dim M(A(n)) for n = 1..7
const ABELIAN_MULTIPLIERS: [usize; 7] = [0, 1, 3, 6, 10, 15, 21];

fn abelian_multipliers() -> Outcome {
    let start = Instant::now();
    for (n, &expected) in (1..=7).zip(&ABELIAN_MULTIPLIERS) {
        let w = wedge(&abelian(n))?;
        ensure(w.multiplier == expected, || {
            format!("dim M(A({n})) = {}, expected {expected}", w.multiplier)
        })?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("n = 1..7 in {:?}", start.elapsed()))
}

fn heisenberg_multipliers() -> Outcome {
    let start = Instant::now();
    for (m, expected) in [(1, 2), (2, 5), (3, 14)] {
        let w = wedge(&heisenberg(m))?;
        ensure(w.multiplier == expected, || {
            format!("dim M(H({m})) = {}, expected {expected}", w.multiplier)
        })?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("m = 1..3 in {:?}", start.elapsed()))
}

fn heisenberg_exterior_squares() -> Outcome {
    for (m, expected) in [(1, 3), (2, 6), (3, 15)] {
        let w = wedge(&heisenberg(m))?;
        ensure(w.dim == expected, || {
            format!("dim H({m})∧H({m}) = {}, expected {expected}", w.dim)
        })?;
    }
    Ok("m = 1..3".into())
}

fn direct_sum_formula() -> Outcome {
    let start = Instant::now();
    // (algebra, closed-form dim M, dim L/L²)
    let pool: Vec<(&str, LieAlgebra, usize, usize)> = vec![
        ("A(1)", abelian(1), dim_multiplier_abelian(1), 1),
        ("A(2)", abelian(2), dim_multiplier_abelian(2), 2),
        ("A(3)", abelian(3), dim_multiplier_abelian(3), 3),
        (
            "H(1)",
            heisenberg(1),
            dim_multiplier_heisenberg(1).unwrap(),
            2,
        ),
        (
            "H(2)",
            heisenberg(2),
            dim_multiplier_heisenberg(2).unwrap(),
            4,
        ),
    ];
    let mut checked = 0;
    for (i, (n1, l1, m1, ab1)) in pool.iter().enumerate() {
        for (j, (n2, l2, m2, ab2)) in pool.iter().enumerate() {
            if i == j {
                continue;
            }
            let sum = l1.direct_sum(l2);
            let oracle = wedge(&sum)?.multiplier;
            let formula = dim_multiplier_direct_sum(*m1, *m2, *ab1, *ab2);
            ensure(oracle == formula, || {
                format!("dim M({n1}+{n2}): oracle {oracle}, formula {formula}")
            })?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{checked} ordered pairs in {:?}", start.elapsed()))
}

fn h1_plus_a1() -> Outcome {
    let w = wedge(&canonical_sum(1, 1))?;
    ensure(w.multiplier == 4, || {
        format!("dim M(H(1)+A(1)) = {}", w.multiplier)
    })?;
    let formula = dim_multiplier_direct_sum(2, 0, 2, 1);
    ensure(formula == 4, || format!("formula gives {formula}"))?;
    Ok("2 + 0 + 2 = 4".into())
}

fn capability_verdicts() -> Outcome {
    let mut cases: Vec<(String, LieAlgebra, bool)> = vec![("A(1)".into(), abelian(1), false)];
    cases.extend((2..=6).map(|n| (format!("A({n})"), abelian(n), true)));
    cases.extend((1..=3).map(|m| (format!("H({m})"), heisenberg(m), m == 1)));
    for m in 1..=3 {
        for k in 1..=3 {
            cases.push((format!("H({m})+A({k})"), canonical_sum(m, k), m == 1));
        }
    }
    for (name, l, expected) in &cases {
        let v = decide_capability(l, Mode::Both).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.capable == Some(*expected), || {
            format!("{name}: capable {:?}, expected {expected}", v.capable)
        })?;
        ensure(v.oracle_agreement == Some(true), || {
            format!("{name}: routes disagree")
        })?;
    }
    Ok(format!("{} algebras, both routes agree", cases.len()))
}

fn exterior_center_identities() -> Outcome {
    for n in 2..=7 {
        let zw = wedge(&abelian(n))?.exterior_center;
        ensure(zw.is_zero(), || format!("Z∧(A({n})) has dim {}", zw.dim()))?;
    }
    let zw = wedge(&heisenberg(1))?.exterior_center;
    ensure(zw.is_zero(), || format!("Z∧(H(1)) has dim {}", zw.dim()))?;
    for m in 2..=3 {
        let h = heisenberg(m);
        let z = Subspace::span(2 * m + 1, [unit_vector(2 * m + 1, 2 * m)]).unwrap();
        ensure(h.derived_subalgebra() == z, || {
            format!("H({m})² is not span{{z}}")
        })?;
        let zw = wedge(&h)?.exterior_center;
        ensure(zw == z, || format!("Z∧(H({m})) = {zw:?}"))?;
    }
    Ok("A(2..7), H(1), H(2), H(3)".into())
}

fn exterior_center_quotient_identity() -> Outcome {
    let cat = catalog();
    for entry in &cat {
        let l = &entry.algebra;
        let w = wedge(l)?;
        ensure(w.exterior_center.is_subspace_of(&l.center()), || {
            format!("{}: Z∧ not central", entry.name)
        })?;
        let ideal = Ideal::new(l, w.exterior_center.clone())
            .map_err(|e| format!("{}: Z∧ is not an ideal: {e}", entry.name))?;
        let q = quotient_wedge_dim(l, &ideal).map_err(|e| format!("{}: {e}", entry.name))?;
        ensure(q == w.dim, || {
            format!("{}: dim L∧L = {}, dim L/Z∧ ∧ L/Z∧ = {q}", entry.name, w.dim)
        })?;
    }
    Ok(format!("{} catalog algebras", cat.len()))
}

fn random_central_ideal(l: &LieAlgebra, rng: &mut ChaCha8Rng) -> Subspace {
    let center = l.center();
    let n = l.dim();
    let count = rng.gen_range(1..=center.dim());
    let vectors: Vec<RatVector> = (0..count)
        .map(|_| {
            let mut v = vec![rat(0); n];
            for b in center.basis_vectors() {
                let c = rat(rng.gen_range(-3..=3));
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &c * y;
                }
            }
            v
        })
        .collect();
    Subspace::span(n, vectors).unwrap()
}

fn exactness_dimensions() -> Outcome {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(0xe8ac7);
    let mut nonzero = 0;
    for _ in 0..20 {
        let entry = &cat[rng.gen_range(0..cat.len())];
        let l = &entry.algebra;
        let n_ideal = random_central_ideal(l, &mut rng);
        nonzero += usize::from(!n_ideal.is_zero());
        let ideal = Ideal::new(l, n_ideal).map_err(|e| e.to_string())?;
        let e = exterior_square(l).map_err(|e| e.to_string())?;
        let image = e.image_of_wedge_with(&ideal).map_err(|e| e.to_string())?;
        let q = quotient_wedge_dim(l, &ideal).map_err(|e| e.to_string())?;
        ensure(e.dim() == image.dim() + q, || {
            format!(
                "{}: dim L∧L = {} but image {} + quotient {q}",
                entry.name,
                e.dim(),
                image.dim()
            )
        })?;
    }
    Ok(format!("20 random central ideals ({nonzero} nonzero)"))
}

fn decomposition_round_trip() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for m in 1..=3 {
        for k in 0..=3 {
            let target = canonical_sum(m, k);
            for s in 0..25u64 {
                let seed = 0xdec0_0000 + 1000 * m as u64 + 100 * k as u64 + s;
                let (l, _) = scramble(&target, seed);
                let d = heisenberg_decompose(&l)
                    .map_err(|e| format!("H({m})+A({k}) seed {seed}: {e}"))?;
                ensure((d.m, d.k) == (m, k), || {
                    format!(
                        "seed {seed}: recovered ({}, {}), expected ({m}, {k})",
                        d.m, d.k
                    )
                })?;
                let back = l
                    .change_of_basis(&d.basis_change)
                    .map_err(|e| e.to_string())?;
                ensure(back.same_constants(&target), || {
                    format!("seed {seed}: basis change does not give canonical constants")
                })?;
                count += 1;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{count} scrambles recovered in {:?}",
        start.elapsed()
    ))
}

fn basis_invariance() -> Outcome {
    let cat = catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(0xba515);
    let mut transforms = 0;
    for entry in &cat {
        let l = &entry.algebra;
        let base = wedge(l)?;
        let base_verdict = decide_capability(l, Mode::Classify).map_err(|e| e.to_string())?;
        let profile = |x: &LieAlgebra, w: &Wedge| {
            (
                x.derived_subalgebra().dim(),
                x.center().dim(),
                w.dim,
                w.multiplier,
                w.exterior_center.dim(),
                w.exterior_center.is_zero(),
            )
        };
        let expected = profile(l, &base);
        for _ in 0..10 {
            let p = random_invertible(l.dim(), &mut rng);
            let t = l.change_of_basis(&p).map_err(|e| e.to_string())?;
            let got = profile(&t, &wedge(&t)?);
            ensure(got == expected, || {
                format!("{}: invariants {expected:?} became {got:?}", entry.name)
            })?;
            let verdict = decide_capability(&t, Mode::Classify).map_err(|e| e.to_string())?;
            ensure(
                verdict.class == base_verdict.class && verdict.capable == base_verdict.capable,
                || format!("{}: classification changed under basis change", entry.name),
            )?;
            transforms += 1;
        }
    }
    Ok(format!(
        "{} algebras x 10 = {transforms} basis changes",
        cat.len()
    ))
}

fn oracle_self_check() -> Outcome {
    let cat = catalog();
    let mut extra: Vec<LieAlgebra> = catalog_families().into_iter().map(|f| f.build()).collect();
    extra.push(abelian(7));
    let mut built = 0;
    for l in cat.iter().map(|e| &e.algebra).chain(&extra) {
        // Construction runs the relation-by-relation check; κ must then agree
        // with the bracket on every symbol e_i⊗e_j.
        let e = exterior_square(l).map_err(|e| format!("self-check: {e}"))?;
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                let w = e.wedge(&unit_vector(n, i), &unit_vector(n, j));
                ensure(e.commutator(&w) == l.basis_bracket(i, j), || {
                    format!("κ(e{i}∧e{j}) differs from the bracket")
                })?;
            }
        }
        built += 1;
    }
    Ok(format!("{built} constructions"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("AC-01 abelian multipliers", abelian_multipliers),
        ("AC-02 Heisenberg multipliers", heisenberg_multipliers),
        (
            "AC-03 Heisenberg exterior squares",
            heisenberg_exterior_squares,
        ),
        ("AC-04 direct-sum multiplier formula", direct_sum_formula),
        ("AC-05 dim M(H(1)+A(1)) = 4", h1_plus_a1),
        ("AC-06 capability verdicts", capability_verdicts),
        (
            "AC-07 exterior-center identities",
            exterior_center_identities,
        ),
        (
            "AC-08 dim L∧L = dim L/Z∧ ∧ L/Z∧",
            exterior_center_quotient_identity,
        ),
        (
            "AC-09 exactness of L∧N → L∧L → L/N∧L/N",
            exactness_dimensions,
        ),
        ("AC-10 decomposition round trip", decomposition_round_trip),
        ("AC-11 basis invariance", basis_invariance),
        ("AC-12 oracle self-check", oracle_self_check),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
