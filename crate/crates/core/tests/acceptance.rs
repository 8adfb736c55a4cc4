//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use azumaya_core::arith::{bezout_uv, Sign};
use azumaya_core::engine::{
    admissible_parameters, build_connectivity_matrix, check_case1, check_case2, connectivity_sweep, decide,
    period_sweep, DecompositionProblem, Verdict,
};
use azumaya_core::fgab::{
    is_bijective_exhaustive, is_isomorphism, random_finite_group, random_map, smith_normal_form, FgabGroup,
    IntMatrix,
};
use azumaya_core::homotopy::{max_degree, pi, SpaceSpec};
use azumaya_core::induced;
use azumaya_core::matrix::{
    central_scalar, commutation_permutation, random_unitary, tensor, tolerance, tr_apply, CentralElement,
    ComplexMatrix, ShuffleHomotopy, TrParams, DEFAULT_DIM_CAP,
};
use azumaya_core::par::{map_range, trial_seed, Execution};
use num_bigint::BigInt;
use num_traits::Pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xACCE_5700;
const EXEC: Execution = Execution::Parallel;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// 1. Bézout witness and connectivity checks over a, b ≤ 2, m, n ≤ 6.
fn bezout_sweep() -> Outcome {
    let params = admissible_parameters(2, 6);
    ensure(!params.is_empty(), || "no admissible parameters".into())?;
    for outcome in connectivity_sweep(EXEC, &params) {
        ensure(outcome.passed(), || format!("{outcome:?}"))?;
    }
    // independent recomputation straight from the definitions
    for &[a, b, m, n] in &params {
        let w = bezout_uv(a, b, m, n).map_err(|e| e.to_string())?;
        let (am, bn) = (big(a * m), big(b * n));
        let s = BigInt::from(w.sign.as_i64());
        let lhs: BigInt = Pow::pow(&bn, n + 1) * &w.v - Pow::pow(&am, m + 1) * &w.u;
        ensure(lhs == s && w.u > BigInt::from(0) && w.v > BigInt::from(0), || format!("witness {w:?}"))?;
        let det = &bn * &w.v * Pow::pow(&bn, n) - &am * &w.u * Pow::pow(&am, m);
        ensure(det == s, || format!("({a},{b},{m},{n}): det {det} ≠ sign {s}"))?;
        ensure(check_case1(a, b, m, n, &w) == Ok(true), || format!("case 1 at ({a},{b},{m},{n})"))?;
        ensure(check_case2(a, b, m, n, &w).is_ok_and(|(ok, _)| ok), || format!("case 2 at ({a},{b},{m},{n})"))?;
    }
    Ok(format!("{} parameter sets", params.len()))
}

/// 2. The canonical example (1,1,2,3).
fn canonical_example() -> Outcome {
    let w = bezout_uv(1, 1, 2, 3).map_err(|e| e.to_string())?;
    ensure(w.u == big(10) && w.v == big(1) && w.sign == Sign::Plus, || format!("{w:?}"))?;
    let matrix = build_connectivity_matrix(1, 1, 2, 3, &w).map_err(|e| e.to_string())?;
    ensure(matrix == IntMatrix::from_rows(&[[3, 2], [40, 27]]), || format!("matrix {matrix}"))?;
    ensure(matrix.det() == Ok(big(1)), || "det ≠ 1".into())?;
    for (dim_x, want) in [(4, Verdict::LiftableUnique), (5, Verdict::LiftableNonUnique)] {
        let p = DecompositionProblem::new(1, 1, 2, 3, dim_x).map_err(|e| e.to_string())?;
        let cert = decide(&p).map_err(|e| e.to_string())?;
        ensure(cert.total_dim == big(67), || format!("N = {}", cert.total_dim))?;
        ensure(cert.verdict == want, || format!("dimX={dim_x}: {}", cert.verdict))?;
    }
    Ok("u=10 v=1 N=67 det=1".into())
}

/// 3. Numeric descent and homomorphism of Tr for (1,1,2,3).
fn tr_numeric() -> Outcome {
    let w = bezout_uv(1, 1, 2, 3).map_err(|e| e.to_string())?;
    let p = TrParams { a: 1, b: 1, m: 2, n: 3 };
    let tol = tolerance(67);
    ensure(tol <= 6.7e-8 * (1.0 + 1e-12), || format!("tolerance {tol}"))?;
    let tr = |x: &ComplexMatrix, y: &ComplexMatrix| tr_apply(x, y, &w, p, DEFAULT_DIM_CAP).map_err(|e| e.to_string());
    let mut worst_descent: f64 = 0.0;
    for alpha in 0..2 {
        for beta in 0..3 {
            let a = central_scalar(&CentralElement::new(2, alpha, 2).map_err(|e| e.to_string())?);
            let b = central_scalar(&CentralElement::new(3, beta, 3).map_err(|e| e.to_string())?);
            let dev = tr(&a, &b)?.distance(&ComplexMatrix::identity(67)).map_err(|e| e.to_string())?;
            ensure(dev < tol, || format!("descent (α={alpha}, β={beta}): {dev:e}"))?;
            worst_descent = worst_descent.max(dev);
        }
    }
    let devs = map_range(EXEC, 0..20, |k| -> Result<f64, String> {
        let s = trial_seed(SEED, k as u64);
        let (a, a2) = (random_unitary(2, trial_seed(s, 0)), random_unitary(2, trial_seed(s, 1)));
        let (b, b2) = (random_unitary(3, trial_seed(s, 2)), random_unitary(3, trial_seed(s, 3)));
        let lhs = tr(&a.mul(&a2).map_err(|e| e.to_string())?, &b.mul(&b2).map_err(|e| e.to_string())?)?;
        let rhs = tr(&a, &b)?.mul(&tr(&a2, &b2)?).map_err(|e| e.to_string())?;
        lhs.distance(&rhs).map_err(|e| e.to_string())
    });
    let mut worst_hom: f64 = 0.0;
    for dev in devs {
        let dev = dev?;
        ensure(dev < tol, || format!("homomorphism deviation {dev:e}"))?;
        worst_hom = worst_hom.max(dev);
    }
    Ok(format!("descent max {worst_descent:.1e}, homomorphism max {worst_hom:.1e}, tol {tol:.1e}"))
}

/// 4. Shuffle identity for m, n ≤ 8 and the shuffle homotopy.
fn shuffle_identity() -> Outcome {
    let pairs: Vec<(usize, usize)> = (1..=8).flat_map(|m| (1..=8).map(move |n| (m, n))).collect();
    let results = map_range(EXEC, 0..pairs.len(), |k| -> Result<f64, String> {
        let (m, n) = pairs[k];
        let err = |e: azumaya_core::Error| e.to_string();
        let p = commutation_permutation(m, n).map_err(err)?;
        let dense = p.to_matrix();
        let id = ComplexMatrix::identity(n);
        let tol = tolerance(m * n);
        let mut worst: f64 = 0.0;
        for trial in 0..100 {
            let a = random_unitary(m, trial_seed(SEED ^ 4, (k * 100 + trial) as u64));
            let lhs = tensor(&a, &id).map_err(err)?;
            let rhs = tensor(&id, &a).map_err(err)?;
            let dev = lhs.distance(&p.conjugate(&rhs).map_err(err)?).map_err(err)?;
            // dense P·X·Pᵀ as an independent route, once per pair
            let dev = if trial == 0 {
                let product = dense.mul(&rhs).map_err(err)?.mul(&dense.transpose()).map_err(err)?;
                dev.max(lhs.distance(&product).map_err(err)?)
            } else {
                dev
            };
            ensure(dev <= tol, || format!("shuffle ({m},{n}) trial {trial}: {dev:e}"))?;
            worst = worst.max(dev);
        }

        let h = ShuffleHomotopy::new(m, n).map_err(err)?;
        let a = random_unitary(m, trial_seed(SEED ^ 44, k as u64));
        let start = h.at(&a, 0.0).map_err(err)?.distance(&tensor(&id, &a).map_err(err)?).map_err(err)?;
        let end = h.at(&a, 1.0).map_err(err)?.distance(&tensor(&a, &id).map_err(err)?).map_err(err)?;
        ensure(start <= tol && end <= tol, || format!("homotopy endpoints ({m},{n}): {start:e}, {end:e}"))?;
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let dev = h.at(&a, t).map_err(err)?.unitary_deviation();
            ensure(dev <= tol, || format!("homotopy ({m},{n}) at t={t}: unitarity {dev:e}"))?;
            worst = worst.max(dev);
        }
        Ok(worst.max(start).max(end))
    });
    let mut worst: f64 = 0.0;
    for r in results {
        worst = worst.max(r?);
    }
    Ok(format!("64 pairs × 100 unitaries, worst deviation {worst:.1e}"))
}

/// 5. Closed-form induced maps against their composites.
fn induced_consistency() -> Outcome {
    let mut checked = 0;
    for m in 1..=8u64 {
        for n in m + 1..=8 {
            for i in 0..2 * m {
                let closed = induced::tensor_star(i, m, n).map_err(|e| e.to_string())?.map;
                let composite = induced::tensor_star_via_sums(i, m, n).map_err(|e| e.to_string())?.map;
                ensure(closed == composite, || format!("tensor (i={i}, m={m}, n={n}): {closed} vs {composite}"))?;
                if i % 2 == 1 {
                    let want = IntMatrix::from_big_rows(1, 2, vec![vec![big(n), big(m)]]).unwrap();
                    ensure(closed.matrix() == &want, || format!("tensor coefficients {closed}"))?;
                }
                checked += 1;
            }
        }
    }
    for n in 1..=5u64 {
        for r in 1..=4u64 {
            for i in 0..2 * n {
                let closed = induced::rtensor_star(i, n, r).map_err(|e| e.to_string())?.map;
                let composite = induced::rtensor_star_by_induction(i, n, r).map_err(|e| e.to_string())?.map;
                ensure(closed == composite, || format!("rtensor (i={i}, n={n}, r={r}): {closed} vs {composite}"))?;
                if i % 2 == 1 {
                    let coeff = big(r) * Pow::pow(&big(n), r - 1);
                    ensure(closed.matrix().get(0, 0) == &coeff, || format!("rtensor coefficient {closed}"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} maps"))
}

fn totient(k: u64) -> u64 {
    (1..=k).filter(|&x| num_integer::gcd(x, k) == 1).count() as u64
}

/// 6. Period bookkeeping for every class of period mn, mn ≤ 2000.
fn period_bookkeeping() -> Outcome {
    let sweep = period_sweep(EXEC, 2000);
    ensure(sweep.failures == 0, || format!("{} failures", sweep.failures))?;
    let mut pairs = 0;
    let mut classes = 0;
    for m in 1..=2000u64 {
        for n in 1..=2000 / m {
            if num_integer::gcd(m, n) == 1 {
                pairs += 1;
                classes += totient(m * n);
            }
        }
    }
    ensure(sweep.pairs == pairs && sweep.classes == classes, || {
        format!("covered {} pairs / {} classes, expected {pairs} / {classes}", sweep.pairs, sweep.classes)
    })?;
    Ok(format!("{pairs} pairs, {classes} classes"))
}

/// 7. Smith normal form and isomorphism testing against brute force.
fn fgab_oracles() -> Outcome {
    let oracle = map_range(EXEC, 0..500, |k| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(SEED ^ 7, k as u64));
        let src = random_finite_group(&mut rng, 200);
        let tgt = if k % 2 == 0 { src.canonicalize() } else { random_finite_group(&mut rng, 200) };
        let f = random_map(&mut rng, &src, &tgt, 5);
        let brute = is_bijective_exhaustive(&f);
        (brute == Some(is_isomorphism(&f).is_isomorphism), brute == Some(true), f.to_string())
    });
    let isos = oracle.iter().filter(|(_, iso, _)| *iso).count();
    if let Some((_, _, f)) = oracle.iter().find(|(ok, _, _)| !ok) {
        return Err(format!("disagreement on {f}"));
    }
    ensure(isos > 0, || "sample contains no isomorphisms".into())?;

    let snf = map_range(EXEC, 0..1000, |k| {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(SEED ^ 77, k as u64));
        let (rows, cols) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let data = (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.random_range(-50..=50))).collect()).collect();
        let m = IntMatrix::from_big_rows(rows, cols, data).expect("rectangular");
        smith_normal_form(&m).is_valid_for(&m)
    });
    ensure(snf.iter().all(|&ok| ok), || "SNF reconstruction failed".into())?;
    Ok(format!("500 maps ({isos} isomorphisms), 1000 SNFs"))
}

/// 8. Homotopy tables: spot values and consistency for degree ≤ 10.
fn homotopy_tables() -> Outcome {
    let z = FgabGroup::free(1);
    let spots = [
        (3, SpaceSpec::U { n: 2 }, z.clone()),
        (4, SpaceSpec::U { n: 2 }, FgabGroup::cyclic(2)),
        (6, SpaceSpec::U { n: 3 }, FgabGroup::cyclic(6)),
        (1, SpaceSpec::SU { n: 2 }, FgabGroup::trivial()),
        (1, SpaceSpec::SUQuot { a: 3, m: 2 }, FgabGroup::cyclic(2)),
        (1, SpaceSpec::UQuot { a: 3, m: 2 }, FgabGroup::with_cyclic(1, &[big(2)])),
        (1, SpaceSpec::PU { n: 2 }, FgabGroup::cyclic(2)),
    ];
    for (i, space, want) in &spots {
        let got = pi(*i, space).map_err(|e| e.to_string())?;
        ensure(&got == want, || format!("π_{i}({space}) = {got}, expected {want}"))?;
    }
    let mut checked = 0;
    for a in 1..=10u64 {
        for m in 1..=10 / a {
            let deg = a * m;
            let (su, suq, uq) = (SpaceSpec::SU { n: deg }, SpaceSpec::SUQuot { a, m }, SpaceSpec::UQuot { a, m });
            for i in 2..=2 * deg {
                ensure(pi(i, &suq) == pi(i, &su) && pi(i, &uq) == pi(i, &suq), || format!("quotients at i={i}"))?;
                checked += 1;
            }
            for s in [su, suq, uq, SpaceSpec::U { n: deg }, SpaceSpec::PU { n: deg }] {
                for i in 1..=max_degree(&s) + 1 {
                    let shifted = pi(i, &s.clone().classifying());
                    ensure(shifted == pi(i - 1, &s), || format!("B-shift for {s} at i={i}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{} spot values, {checked} consistency checks", spots.len()))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Bézout/connectivity sweep, exact", Duration::from_secs(10), bezout_sweep),
        ("canonical example (1,1,2,3), exact", Duration::from_secs(1), canonical_example),
        ("numeric Tr descent and homomorphism, tol 1e-9·67", Duration::from_secs(30), tr_numeric),
        ("shuffle identity and homotopy, m,n ≤ 8", Duration::from_secs(60), shuffle_identity),
        ("induced-map consistency, exact", Duration::from_secs(5), induced_consistency),
        ("period bookkeeping mn ≤ 2000, exact", Duration::from_secs(10), period_bookkeeping),
        ("fgab oracle equivalence, exact", Duration::from_secs(30), fgab_oracles),
        ("homotopy tables, exact", Duration::from_secs(1), homotopy_tables),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let timing = format!("{:.2}s, budget {}s", elapsed.as_secs_f64(), budget.as_secs());
        match outcome {
            Ok(detail) => println!("PASS  {}  {name}: {detail} ({timing})", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {}  {name}: {detail} ({timing})", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
