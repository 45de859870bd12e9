//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so each criterion reports on its own
//! line; the process exits non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use supertrop::corpus::{zero_pattern_matrix, random_matrix, EntryMix, ZeroPattern};
use supertrop::determinant::{det_expand, is_singular, rank_defect_certificate};
use supertrop::digraph::max_multicycle_weight;
use supertrop::inverse::{is_pseudo_unit, pseudo_inverse};
use supertrop::linsys::{
    find_pure_real_solution, is_solution, LinearSystem, PureRealOutcome, SolutionKind, SolutionReport,
};
use supertrop::rank::{dependence_witness, is_dependent, rank, square_witness};
use supertrop::semiring::Rational;
use supertrop::{det, DetMethod, MaxPlusScalar, TropError, TropMatrix, TropScalar, TropVector};

const SEED: u64 = 20_240_601;
const PER_SIZE: usize = 1000;
const FAST_BUDGET: Duration = Duration::from_secs(1);

fn m(text: &str) -> TropMatrix {
    text.parse().unwrap()
}

fn ints(xs: &[MaxPlusScalar]) -> Vec<i64> {
    xs.iter()
        .map(|x| i64::try_from(x.value().expect("real coefficient").to_integer()).unwrap())
        .collect()
}

/// 1000 matrices for each n in 2..=5 over the default entry mix.
fn corpus() -> Vec<TropMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (2..=5)
        .flat_map(|n| (0..PER_SIZE).map(move |_| n))
        .map(|n| random_matrix(&mut rng, n, n, &EntryMix::default()))
        .collect()
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1_worked_golden() -> Outcome {
    let a = m("1 4 -1; 1 0 6; -4 1 3");
    let d = det(&a, DetMethod::Auto).map_err(|e| e.to_string())?;
    ensure(d == TropScalar::Ghost(Rational::from_integer(8.into())), format!("det {d}"))?;
    let w = square_witness(&a).map_err(|e| e.to_string())?;
    ensure(ints(&w.coefficients) == [7, 7, 10], format!("witness {w}"))?;
    let sums = w.combination(&a.row_vectors()).map_err(|e| e.to_string())?;
    ensure(sums.to_string() == "8g 11g 13g", format!("column sums {sums}"))?;
    ensure(oracle_combination_is_ghost(&a, &w.coefficients), "oracle rejects witness")?;
    let r = rank(&a).map_err(|e| e.to_string())?;
    ensure(r == 2, format!("rank {r}"))?;
    Ok(format!("det {d}, witness {w}, sums {sums}, rank {r}"))
}

fn c2_small_dependence() -> Outcome {
    let rows = |t: &str| m(t).row_vectors();
    let first = rows("0 1; 1 2");
    ensure(is_dependent(&first).unwrap(), "(0,1),(1,2) reported independent")?;
    let w1 = dependence_witness(&first).map_err(|e| e.to_string())?;
    ensure(w1.validate(&first), "witness for (0,1),(1,2) fails")?;
    ensure(
        oracle_combination_is_ghost(&m("0 1; 1 2"), &w1.coefficients),
        "oracle rejects (0,1),(1,2) witness",
    )?;
    let second = rows("0 1; 2 0");
    ensure(!is_dependent(&second).unwrap(), "(0,1),(2,0) reported dependent")?;
    ensure(
        dependence_witness(&second) == Err(TropError::NotDependent),
        "witness produced for independent pair",
    )?;
    let third = rows("1 1 -inf; 1 -inf 1; -inf 1 1");
    ensure(is_dependent(&third).unwrap(), "triple reported independent")?;
    let w3 = dependence_witness(&third).map_err(|e| e.to_string())?;
    ensure(ints(&w3.coefficients) == [0, 0, 0], format!("triple witness {w3}"))?;
    ensure(w3.validate(&third), "triple witness fails")?;
    Ok(format!("witness ({w1}) for the pair, ({w3}) for the triple"))
}

fn c3_determinant_methods(corpus: &[TropMatrix]) -> Outcome {
    let mut mismatches = 0;
    for a in corpus {
        let expected = oracle_det(a);
        let mut got = vec![
            det(a, DetMethod::Brute).unwrap(),
            det(a, DetMethod::Expand).unwrap(),
            det(a, DetMethod::Fast).unwrap(),
            det(a, DetMethod::Auto).unwrap(),
        ];
        got.extend((1..=a.rows()).map(|i| det_expand(a, i).unwrap()));
        mismatches += got.iter().filter(|d| **d != expected).count();
    }
    ensure(mismatches == 0, format!("{mismatches} mismatches"))?;
    Ok(format!("{} matrices, brute/expand/fast/every-row agree with enumeration", corpus.len()))
}

fn c4_rank_singularity(corpus: &[TropMatrix]) -> Outcome {
    let mut exceptions = 0;
    let mut singular = 0;
    for a in corpus {
        let s = is_singular(a).unwrap();
        singular += usize::from(s);
        let oracle = is_ghost_part(&oracle_det(a));
        if s != oracle || s != (rank(a).unwrap() < a.rows()) {
            exceptions += 1;
        }
    }
    ensure(exceptions == 0, format!("{exceptions} exceptions"))?;
    Ok(format!("{singular} singular of {}, zero exceptions", corpus.len()))
}

fn c5_witness_soundness(corpus: &[TropMatrix]) -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    for a in corpus.iter().filter(|a| is_ghost_part(&oracle_det(a))) {
        checked += 1;
        match square_witness(a) {
            Ok(w) if oracle_combination_is_ghost(a, &w.coefficients) => {}
            _ => failures += 1,
        }
    }
    ensure(failures == 0, format!("{failures} of {checked} failed"))?;
    Ok(format!("{checked} singular matrices, every witness validates"))
}

fn c6_pseudo_inverse(corpus: &[TropMatrix]) -> Outcome {
    let (mut nonsingular, mut singular, mut failures) = (0, 0, 0);
    for a in corpus.iter().filter(|a| a.rows() <= 4) {
        if is_ghost_part(&oracle_det(a)) {
            singular += 1;
            if pseudo_inverse(a) != Err(TropError::Singular) {
                failures += 1;
            }
            continue;
        }
        nonsingular += 1;
        let Ok(inv) = pseudo_inverse(a) else {
            failures += 1;
            continue;
        };
        let left = a.mat_mul(&inv).unwrap();
        let right = inv.mat_mul(a).unwrap();
        let ok = [&left, &right]
            .iter()
            .all(|p| is_pseudo_unit(p).unwrap().verdict && oracle_pseudo_unit(p));
        failures += usize::from(!ok);
    }
    ensure(failures == 0, format!("{failures} failures"))?;
    Ok(format!("{nonsingular} nonsingular inverted, {singular} singular refused"))
}

fn c7_neg_inf_certificates() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let (mut neg_inf, mut failures) = (0, 0);
    for _ in 0..500 {
        let n = rng.random_range(1..=5);
        let a = random_matrix(&mut rng, n, n, &EntryMix::sparse());
        let is_neg_inf = oracle_det(&a) == TropScalar::NegInf;
        neg_inf += usize::from(is_neg_inf);
        match rank_defect_certificate(&a).unwrap() {
            None => failures += usize::from(is_neg_inf),
            Some(cert) => {
                let k = cert.rows.len();
                let crossings_neg_inf = cert
                    .rows
                    .iter()
                    .all(|&i| cert.cols.iter().all(|&j| entry(&a, i - 1, j - 1).is_neg_inf()));
                let ok = is_neg_inf
                    && cert.verify(&a)
                    && (1..=n).contains(&k)
                    && cert.cols.len() == n + 1 - k
                    && crossings_neg_inf;
                failures += usize::from(!ok);
            }
        }
    }
    ensure(failures == 0, format!("{failures} failures"))?;
    Ok(format!("500 sparse matrices, {neg_inf} with det -inf, all certified"))
}

fn c8_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut failures = 0;
    for (r, c) in [(3, 5), (5, 3)] {
        for _ in 0..500 {
            let a = random_matrix(&mut rng, r, c, &EntryMix::default());
            if rank(&a).unwrap() != rank(&a.transpose()).unwrap() {
                failures += 1;
            }
        }
    }
    let mut extra = 0;
    for _ in 0..500 {
        let n = rng.random_range(1..=5);
        let vs: Vec<TropVector> = random_matrix(&mut rng, n + 1, n, &EntryMix::default()).row_vectors();
        let a = TropMatrix::from_vectors(&vs).unwrap();
        let ok = is_dependent(&vs).unwrap()
            && dependence_witness(&vs).is_ok_and(|w| oracle_combination_is_ghost(&a, &w.coefficients));
        extra += usize::from(!ok);
    }
    ensure(failures == 0, format!("{failures} transpose rank mismatches"))?;
    ensure(extra == 0, format!("{extra} row sets of size n+1 not witnessed"))?;
    Ok("1000 transpose checks, 500 witnessed n+1 row sets".into())
}

fn c9_semiring_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mix = EntryMix {
        denominator: 3,
        ..EntryMix::default()
    };
    let pi = |x: &TropScalar| x.realize();
    let mut failures = 0;
    for _ in 0..10_000 {
        let [a, b, c]: [TropScalar; 3] =
            std::array::from_fn(|_| supertrop::corpus::random_scalar(&mut rng, &mix));
        let checks = [
            a.oplus(&b).oplus(&c) == a.oplus(&b.oplus(&c)),
            a.otimes(&b).otimes(&c) == a.otimes(&b.otimes(&c)),
            a.oplus(&b) == b.oplus(&a),
            a.otimes(&b) == b.otimes(&a),
            a.otimes(&b.oplus(&c)) == a.otimes(&b).oplus(&a.otimes(&c)),
            a.oplus(&a) == a.ghost(),
            pi(&a.oplus(&b)) == pi(&a).max_with(&pi(&b)),
            pi(&a.otimes(&b)) == pi(&a).plus(&pi(&b)),
        ];
        failures += checks.iter().filter(|ok| !**ok).count();
    }
    ensure(failures == 0, format!("{failures} failed checks"))?;
    Ok("10000 triples, 8 identities each".into())
}

fn c10_zero_patterns(corpus: &[TropMatrix]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let mut failures = 0;
    for shape in [ZeroPattern::TwoZerosOrGhostZero, ZeroPattern::GhostZeroInEveryColumn] {
        for _ in 0..200 {
            let n = rng.random_range(1..=5);
            let a = zero_pattern_matrix(&mut rng, n, shape);
            let d = oracle_det(&a);
            let ok = !d.is_neg_inf() && is_ghost_part(&d) && is_singular(&a).unwrap();
            failures += usize::from(!ok);
        }
    }
    let mismatched = corpus
        .iter()
        .filter(|a| max_multicycle_weight(a, a.rows()).unwrap() != oracle_det(a))
        .count();
    ensure(failures == 0, format!("{failures} zero-pattern matrices not singular"))?;
    ensure(mismatched == 0, format!("{mismatched} multicycle weights differ from det"))?;
    Ok(format!("400 zero-pattern matrices singular, {} multicycle weights match", corpus.len()))
}

/// The reported point is real, solves the system exactly, and (when it is
/// integral) also passes the integer oracle.
fn pure_real_point_checks(a: &TropMatrix, report: &SolutionReport) -> bool {
    let exact = is_solution(&LinearSystem::new(a.clone()), &report.point).unwrap();
    let integral: Option<Vec<i64>> = report
        .point
        .entries()
        .iter()
        .map(|x| match x {
            TropScalar::Real(v) if v.is_integer() => i64::try_from(v.to_integer()).ok(),
            _ => None,
        })
        .collect();
    report.kind == SolutionKind::PureReal
        && exact.solves
        && integral.is_none_or(|x| grid_point_solves(&integer_entries(a), &x))
}

fn c11_pure_real_solutions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    let mut failures = 0;

    let mut singular = 0;
    while singular < 200 {
        let n = rng.random_range(2..=4);
        let a = random_matrix(&mut rng, n, n, &EntryMix::real_only(-9, 9));
        if !is_ghost_part(&oracle_det(&a)) {
            continue;
        }
        singular += 1;
        match find_pure_real_solution(&LinearSystem::new(a.clone())).unwrap() {
            PureRealOutcome::Found(report) if pure_real_point_checks(&a, &report) => {}
            _ => failures += 1,
        }
    }

    let mut nonsingular = 0;
    let mut grid_hits = 0;
    while nonsingular < 200 {
        let n = rng.random_range(2..=4);
        let a = random_matrix(&mut rng, n, n, &EntryMix::real_only(-9, 9));
        if is_ghost_part(&oracle_det(&a)) {
            continue;
        }
        nonsingular += 1;
        if find_pure_real_solution(&LinearSystem::new(a.clone())).unwrap() != PureRealOutcome::Nonsingular {
            failures += 1;
        }
        grid_hits += usize::from(grid_finds_pure_real_solution(&a));
    }

    // Singular systems over R ∪ {-inf} with no all -inf column: a pure-real
    // point need not exist, so the construction must agree with the grid.
    let mix = EntryMix {
        ghost: 0,
        ..EntryMix::default()
    };
    let (mut sparse, mut found, mut unattainable, mut disagreements) = (0, 0, 0, 0);
    while sparse < 200 {
        let n = rng.random_range(2..=4);
        let a = random_matrix(&mut rng, n, n, &mix);
        let has_empty_column = (0..n).any(|c| (0..n).all(|r| entry(&a, r, c).is_neg_inf()));
        if has_empty_column || !is_ghost_part(&oracle_det(&a)) {
            continue;
        }
        sparse += 1;
        match find_pure_real_solution(&LinearSystem::new(a.clone())).unwrap() {
            PureRealOutcome::Found(report) => {
                found += 1;
                disagreements += usize::from(!pure_real_point_checks(&a, &report));
            }
            PureRealOutcome::Unattainable { fallback, .. } => {
                unattainable += 1;
                disagreements += usize::from(!fallback.solves || grid_finds_pure_real_solution(&a));
            }
            PureRealOutcome::Nonsingular => disagreements += 1,
        }
    }

    ensure(failures == 0, format!("{failures} real systems mishandled"))?;
    ensure(grid_hits == 0, format!("grid found {grid_hits} pure-real solutions of nonsingular systems"))?;
    ensure(disagreements == 0, format!("{disagreements} disagreements on systems with -inf"))?;
    Ok(format!(
        "200 singular real systems solved, 200 nonsingular without grid solutions; \
         with -inf entries: {found} solved, {unattainable} without a pure-real point"
    ))
}

fn c12_performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 12);
    let a = random_matrix(&mut rng, 50, 50, &EntryMix::real_only(-1000, 1000));
    let start = Instant::now();
    let d = det(&a, DetMethod::Fast).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let guarded = matches!(det(&a, DetMethod::Brute), Err(TropError::SizeGuard { .. }));
    let auto = det(&a, DetMethod::Auto).map_err(|e| e.to_string())?;
    ensure(elapsed < FAST_BUDGET, format!("fast det took {elapsed:?}"))?;
    ensure(guarded, "brute force not guarded at n = 50")?;
    ensure(auto == d, "auto disagrees with fast")?;
    Ok(format!("50x50 det {d} in {elapsed:?} including uniqueness re-solves; brute refused"))
}

fn run(number: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(detail) => println!("criterion {number:>2} PASS  {name}: {detail} ({secs:.2}s)"),
        Err(detail) => println!("criterion {number:>2} FAIL  {name}: {detail} ({secs:.2}s)"),
    }
    outcome.is_ok()
}

fn main() {
    panic::set_hook(Box::new(|_| {}));
    let corpus = corpus();
    let results = [
        run(1, "worked example golden values", c1_worked_golden),
        run(2, "small dependence examples", c2_small_dependence),
        run(3, "determinant oracle equivalence", || c3_determinant_methods(&corpus)),
        run(4, "rank and singularity", || c4_rank_singularity(&corpus)),
        run(5, "witness soundness", || c5_witness_soundness(&corpus)),
        run(6, "pseudo-inverse", || c6_pseudo_inverse(&corpus)),
        run(7, "-inf determinant certificates", c7_neg_inf_certificates),
        run(8, "transpose and column duality", c8_duality),
        run(9, "semiring axioms and projection", c9_semiring_axioms),
        run(10, "zero-pattern singularity", || c10_zero_patterns(&corpus)),
        run(11, "pure-real solutions", c11_pure_real_solutions),
        run(12, "performance sanity", c12_performance),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
