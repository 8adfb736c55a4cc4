//! Seeded property suites behind `azumaya verify`.
//!
//! Each property runs a number of independent checks (randomized trials or
//! an exhaustive sweep) and records how many failed and, for numeric ones,
//! the worst deviation seen relative to its tolerance.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::bezout_uv;
use crate::engine::{
    admissible_by_degree, check_parameters, connectivity_sweep, decide, period_sweep, tr_descriptor,
    DecompositionCertificate, DecompositionProblem,
};
use crate::fgab::{
    compose, direct_sum, is_bijective_exhaustive, is_isomorphism, random_finite_group, random_map,
    smith_normal_form, IntMatrix,
};
use crate::homotopy::{max_degree, pi, SpaceSpec};
use crate::induced;
use crate::matrix::{
    block_swap_permutation, central_scalar, commutation_permutation, dsum, ksum, ktensor,
    random_unitary, sj_embed, tensor, tolerance, tr_apply, tr_central, CentralElement, ComplexMatrix,
    ShuffleHomotopy, TrParams, UnitaryPath, DEFAULT_DIM_CAP,
};
use crate::par::{map_range, trial_seed, Execution};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Matrix,
    Fgab,
    Engine,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "matrix" => Ok(Suite::Matrix),
            "fgab" => Ok(Suite::Fgab),
            "engine" => Ok(Suite::Engine),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?} (matrix, fgab, engine, all)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    /// Multiplies every numeric tolerance.
    pub tol_scale: f64,
    pub exec: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 100, seed: DEFAULT_SEED, tol_scale: 1.0, exec: Execution::Parallel }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    /// Largest `deviation / tolerance` seen, for numeric properties.
    pub worst_ratio: Option<f64>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub results: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "seed={} trials={} tol-scale={}", c.seed, c.trials, c.tol_scale)?;
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status}  {:<7} {:<58} {:>7}/{:<7}", r.suite, r.name, r.checked - r.failed, r.checked)?;
            if let Some(ratio) = r.worst_ratio {
                write!(f, "  worst dev/tol {ratio:.2e}")?;
            }
            writeln!(f)?;
        }
        let failed = self.results.iter().filter(|r| !r.passed()).count();
        write!(f, "{} properties, {failed} failed", self.results.len())
    }
}

pub fn run(suite: Suite, config: &VerifyConfig) -> VerifyReport {
    let mut results = Vec::new();
    if matches!(suite, Suite::Matrix | Suite::All) {
        results.extend(matrix_suite(config));
    }
    if matches!(suite, Suite::Fgab | Suite::All) {
        results.extend(fgab_suite(config));
    }
    if matches!(suite, Suite::Engine | Suite::All) {
        results.extend(engine_suite(config));
    }
    VerifyReport { config: *config, results }
}

/// Outcome of one numeric check: the deviation and the tolerance it must
/// stay under.
#[derive(Debug, Clone, Copy)]
struct Numeric {
    deviation: f64,
    tol: f64,
}

fn numeric_property(
    name: impl Into<String>,
    config: &VerifyConfig,
    count: usize,
    check: impl Fn(usize) -> Vec<Numeric> + Sync + Send,
) -> PropertyResult {
    let outcomes: Vec<Numeric> = map_range(config.exec, 0..count, check).into_iter().flatten().collect();
    // NaN deviations count as failures
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    let failed = outcomes.iter().filter(|o| !(o.deviation <= o.tol * config.tol_scale)).count();
    let worst = outcomes.iter().map(|o| o.deviation / (o.tol * config.tol_scale)).fold(0.0, f64::max);
    PropertyResult {
        suite: "matrix",
        name: name.into(),
        checked: outcomes.len() as u64,
        failed: failed as u64,
        worst_ratio: Some(worst),
    }
}

fn exact_property(suite: &'static str, name: impl Into<String>, outcomes: Vec<bool>) -> PropertyResult {
    PropertyResult {
        suite,
        name: name.into(),
        checked: outcomes.len() as u64,
        failed: outcomes.iter().filter(|ok| !**ok).count() as u64,
        worst_ratio: None,
    }
}

fn dist(a: &ComplexMatrix, b: &ComplexMatrix) -> Numeric {
    Numeric { deviation: a.distance(b).unwrap_or(f64::INFINITY), tol: tolerance(a.dim()) }
}

fn unitarity(a: &ComplexMatrix) -> Numeric {
    Numeric { deviation: a.unitary_deviation(), tol: tolerance(a.dim()) }
}

fn failure() -> Numeric {
    Numeric { deviation: f64::INFINITY, tol: 1.0 }
}

const PATH_SAMPLES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn matrix_suite(c: &VerifyConfig) -> Vec<PropertyResult> {
    let seed = |property: u64, trial: usize| trial_seed(trial_seed(c.seed, property), trial as u64);
    let rng = |property: u64, trial: usize| ChaCha8Rng::seed_from_u64(seed(property, trial));
    let t = c.trials;
    let mut out = Vec::new();

    out.push(numeric_property("dsum/ksum/tensor/ktensor preserve unitarity", c, t, |k| {
        let mut r = rng(1, k);
        let (p, q, reps) = (r.random_range(1..=5), r.random_range(1..=5), r.random_range(1..=3));
        let a = random_unitary(p, r.random());
        let b = random_unitary(q, r.random());
        [dsum(&a, &b), ksum(&a, reps), tensor(&a, &b), ktensor(&a, reps)]
            .iter()
            .map(|x| x.as_ref().map_or_else(|_| failure(), unitarity))
            .collect()
    }));

    out.push(numeric_property("mixed product (A⊗B)(C⊗D) = AC⊗BD, dim ≤ 64", c, t, |k| {
        let mut r = rng(2, k);
        let (p, q) = (r.random_range(1..=8), r.random_range(1..=8));
        let [a, cc] = [0, 1].map(|_| random_unitary(p, r.random()));
        let [b, d] = [0, 1].map(|_| random_unitary(q, r.random()));
        let check = || -> crate::Result<Numeric> {
            let lhs = tensor(&a, &b)?.mul(&tensor(&cc, &d)?)?;
            Ok(dist(&lhs, &tensor(&a.mul(&cc)?, &b.mul(&d)?)?))
        };
        vec![check().unwrap_or_else(|_| failure())]
    }));

    let pairs: Vec<(usize, usize)> = (1..=8).flat_map(|m| (1..=8).map(move |n| (m, n))).collect();
    out.push(numeric_property("shuffle A⊗I_n = P(I_n⊗A)Pᵀ, all m,n ≤ 8", c, pairs.len() * t, |k| {
        let (m, n) = pairs[k / t.max(1)];
        let a = random_unitary(m, seed(3, k));
        let p = commutation_permutation(m, n).expect("positive sizes");
        let check = || -> crate::Result<Numeric> {
            let id = ComplexMatrix::identity(n);
            Ok(dist(&tensor(&a, &id)?, &p.conjugate(&tensor(&id, &a)?)?))
        };
        vec![check().unwrap_or_else(|_| failure())]
    }));

    out.push(numeric_property("adjacent block embeddings are conjugate", c, t, |k| {
        let mut r = rng(4, k);
        let (dim, blocks) = (r.random_range(1..=4), r.random_range(2..=5));
        let j = r.random_range(1..blocks);
        let a = random_unitary(dim, r.random());
        let check = || -> crate::Result<Numeric> {
            let p = block_swap_permutation(dim, blocks, j)?;
            Ok(dist(&p.conjugate(&sj_embed(&a, blocks, j)?)?, &sj_embed(&a, blocks, j + 1)?))
        };
        vec![check().unwrap_or_else(|_| failure())]
    }));

    out.push(numeric_property("unitary path: endpoints and unitarity at 5 times", c, t, |k| {
        let mut r = rng(5, k);
        let u = if k % 2 == 0 {
            random_unitary(r.random_range(1..=6), r.random())
        } else {
            commutation_permutation(r.random_range(1..=4), r.random_range(1..=4)).expect("positive").to_matrix()
        };
        let Ok(path) = UnitaryPath::new(&u) else { return vec![failure()] };
        let mut checks = vec![dist(&path.at(0.0), &ComplexMatrix::identity(u.dim())), dist(&path.at(1.0), &u)];
        checks.extend(PATH_SAMPLES.iter().map(|&s| unitarity(&path.at(s))));
        checks
    }));

    out.push(numeric_property("shuffle homotopy: endpoints and unitarity at 5 times", c, t, |k| {
        let mut r = rng(6, k);
        let (m, n) = (r.random_range(1..=5), r.random_range(1..=5));
        let a = random_unitary(m, r.random());
        let check = || -> crate::Result<Vec<Numeric>> {
            let h = ShuffleHomotopy::new(m, n)?;
            let id = ComplexMatrix::identity(n);
            let mut checks = vec![dist(&h.at(&a, 0.0)?, &tensor(&id, &a)?), dist(&h.at(&a, 1.0)?, &tensor(&a, &id)?)];
            for &s in &PATH_SAMPLES {
                checks.push(unitarity(&h.at(&a, s)?));
            }
            Ok(checks)
        };
        check().unwrap_or_else(|_| vec![failure()])
    }));

    let w = bezout_uv(1, 1, 2, 3).expect("coprime");
    let params = TrParams { a: 1, b: 1, m: 2, n: 3 };
    out.push(numeric_property("Tr homomorphism on (1,1,2,3), N = 67", c, t, |k| {
        let mut r = rng(7, k);
        let [a, a2] = [0, 1].map(|_| random_unitary(2, r.random()));
        let [b, b2] = [0, 1].map(|_| random_unitary(3, r.random()));
        let check = || -> crate::Result<Vec<Numeric>> {
            let tr = |x: &ComplexMatrix, y: &ComplexMatrix| tr_apply(x, y, &w, params, DEFAULT_DIM_CAP);
            let lhs = tr(&a.mul(&a2)?, &b.mul(&b2)?)?;
            let rhs = tr(&a, &b)?.mul(&tr(&a2, &b2)?)?;
            Ok(vec![dist(&lhs, &rhs), unitarity(&lhs)])
        };
        check().unwrap_or_else(|_| vec![failure()])
    }));

    out.push(numeric_property("Tr kills μ_2 × μ_3 on (1,1,2,3), numeric", c, 6, |k| {
        let (alpha, beta) = ((k / 3) as u64, (k % 3) as u64);
        let check = || -> crate::Result<Numeric> {
            let a = central_scalar(&CentralElement::new(2, alpha, 2)?);
            let b = central_scalar(&CentralElement::new(3, beta, 3)?);
            Ok(dist(&tr_apply(&a, &b, &w, params, DEFAULT_DIM_CAP)?, &ComplexMatrix::identity(67)))
        };
        vec![check().unwrap_or_else(|_| failure())]
    }));

    let symbolic: Vec<bool> = admissible_by_degree(6)
        .iter()
        .flat_map(|&[a, b, m, n]| {
            let w = bezout_uv(a, b, m, n).expect("admissible");
            let p = TrParams { a, b, m, n };
            (0..m).flat_map(move |x| (0..n).map(move |y| (x, y))).map(move |(x, y)| {
                let alpha = CentralElement::new(m, x, a * m).expect("positive");
                let beta = CentralElement::new(n, y, b * n).expect("positive");
                tr_central(&alpha, &beta, &w, p).is_ok_and(|(l, r)| l.is_identity() && r.is_identity())
            })
        })
        .collect();
    out.push(exact_property("matrix", "Tr kills μ_m × μ_n exactly, am,bn ≤ 6", symbolic));

    out.push(numeric_property("central scalars and random unitaries", c, t, |k| {
        let mut r = rng(8, k);
        let order = r.random_range(1..=12u64);
        let dim = r.random_range(1..=6u64);
        let zero = CentralElement::new(order, 0, dim).expect("positive");
        let u = random_unitary(dim as usize, seed(8, k));
        let root = CentralElement::new(order, 1, 1).expect("positive").root();
        let power = (0..order).fold(Complex64::new(1.0, 0.0), |acc, _| acc * root);
        vec![
            dist(&central_scalar(&zero), &ComplexMatrix::identity(dim as usize)),
            unitarity(&u),
            Numeric { deviation: (power - 1.0).norm(), tol: tolerance(1) },
        ]
    }));

    out
}

fn random_int_matrix(r: &mut ChaCha8Rng) -> IntMatrix {
    let (rows, cols) = (r.random_range(1..=6), r.random_range(1..=6));
    let data = (0..rows).map(|_| (0..cols).map(|_| BigInt::from(r.random_range(-50..=50))).collect()).collect();
    IntMatrix::from_big_rows(rows, cols, data).expect("rectangular")
}

fn fgab_suite(c: &VerifyConfig) -> Vec<PropertyResult> {
    let rng = |property: u64, trial: usize| {
        ChaCha8Rng::seed_from_u64(trial_seed(trial_seed(c.seed ^ 0xF6AB, property), trial as u64))
    };
    let t = c.trials;
    let mut out = Vec::new();

    let snf = map_range(c.exec, 0..t, |k| {
        let m = random_int_matrix(&mut rng(1, k));
        smith_normal_form(&m).is_valid_for(&m)
    });
    out.push(exact_property("fgab", "SNF: U·M·V = D, U and V unimodular, divisibility chain", snf));

    let oracle = map_range(c.exec, 0..t, |k| {
        let mut r = rng(2, k);
        let src = random_finite_group(&mut r, 200);
        let tgt = if k % 2 == 0 { src.canonicalize() } else { random_finite_group(&mut r, 200) };
        let f = random_map(&mut r, &src, &tgt, 5);
        is_bijective_exhaustive(&f) == Some(is_isomorphism(&f).is_isomorphism)
    });
    out.push(exact_property("fgab", "is_isomorphism agrees with exhaustive bijectivity", oracle));

    let assoc = map_range(c.exec, 0..t, |k| {
        let mut r = rng(3, k);
        let mut groups = Vec::new();
        for _ in 0..4 {
            let mut g = random_finite_group(&mut r, 30);
            g.rank = r.random_range(0..=2);
            groups.push(g);
        }
        let h = random_map(&mut r, &groups[0], &groups[1], 4);
        let g = random_map(&mut r, &groups[1], &groups[2], 4);
        let f = random_map(&mut r, &groups[2], &groups[3], 4);
        let left = compose(&f, &g).and_then(|fg| compose(&fg, &h));
        let right = compose(&g, &h).and_then(|gh| compose(&f, &gh));
        matches!((left, right), (Ok(l), Ok(r)) if l == r)
    });
    out.push(exact_property("fgab", "composition is associative", assoc));

    let sums = map_range(c.exec, 0..t, |k| {
        let mut r = rng(4, k);
        let a = random_finite_group(&mut r, 40);
        let b = random_finite_group(&mut r, 40);
        let f = random_map(&mut r, &a, &a.canonicalize(), 3);
        let g = random_map(&mut r, &b, &b, 3);
        let both = is_isomorphism(&f).is_isomorphism && is_isomorphism(&g).is_isomorphism;
        is_isomorphism(&direct_sum(&f, &g)).is_isomorphism == both
    });
    out.push(exact_property("fgab", "f ⊕ g is an isomorphism iff f and g are", sums));

    out
}

fn table_consistency() -> Vec<bool> {
    let mut out = Vec::new();
    for a in 1..=10u64 {
        for m in 1..=10 / a {
            let deg = a * m;
            let su = SpaceSpec::SU { n: deg };
            let suq = SpaceSpec::SUQuot { a, m };
            let uq = SpaceSpec::UQuot { a, m };
            for i in 2..=2 * deg {
                out.push(pi(i, &suq).ok() == pi(i, &su).ok());
                out.push(pi(i, &uq).ok() == pi(i, &suq).ok());
            }
            for s in [su, suq, uq, SpaceSpec::U { n: deg }, SpaceSpec::PU { n: deg }] {
                for i in 1..=max_degree(&s) + 1 {
                    out.push(pi(i, &s.clone().classifying()).ok() == pi(i - 1, &s).ok());
                }
                out.push(pi(max_degree(&s) + 1, &s).is_err());
            }
        }
    }
    out
}

fn induced_laws() -> Vec<bool> {
    let mut out = Vec::new();
    for m in 1..=8u64 {
        for n in m + 1..=8 {
            for i in 0..2 * m {
                let closed = induced::tensor_star(i, m, n).map(|f| f.map);
                let composite = induced::tensor_star_via_sums(i, m, n).map(|f| f.map);
                out.push(matches!((closed, composite), (Ok(x), Ok(y)) if x == y));
            }
        }
    }
    for n in 1..=5u64 {
        for r in 1..=4u64 {
            for i in 0..2 * n {
                let closed = induced::rtensor_star(i, n, r).map(|f| f.map);
                let composite = induced::rtensor_star_by_induction(i, n, r).map(|f| f.map);
                out.push(matches!((closed, composite), (Ok(x), Ok(y)) if x == y));
            }
        }
    }
    out
}

fn engine_suite(c: &VerifyConfig) -> Vec<PropertyResult> {
    let params = admissible_by_degree(12);
    let mut out = Vec::new();

    let sweep = connectivity_sweep(c.exec, &params);
    out.push(exact_property(
        "engine",
        "det = sign, case 1 and case 2 bijective, am,bn ≤ 12",
        sweep.iter().map(|o| o.passed()).collect(),
    ));

    let descriptors = params
        .iter()
        .map(|&[a, b, m, n]| {
            let Ok(w) = bezout_uv(a, b, m, n) else { return false };
            tr_descriptor(a, b, m, n, &w).is_ok_and(|d| {
                let last = &d.stages[2].dims;
                &last[0] + &last[1] == d.total_dim && d.stages[3].dims == vec![d.total_dim.clone()]
            })
        })
        .collect();
    out.push(exact_property("engine", "Tr stage dimensions sum to N", descriptors));

    let small = admissible_by_degree(6);
    let certs = map_range(c.exec, 0..small.len(), |k| {
        let [a, b, m, n] = small[k];
        (0..=2 * a * m + 2).all(|dim_x| {
            let Ok(p) = DecompositionProblem::new(a, b, m, n, dim_x) else { return false };
            match (decide(&p), decide(&p)) {
                (Ok(x), Ok(y)) => {
                    let json = x.to_json();
                    json == y.to_json() && DecompositionCertificate::from_json(&json).is_ok_and(|z| z == x)
                }
                _ => false,
            }
        })
    });
    out.push(exact_property("engine", "certificates deterministic and round-trip, am,bn ≤ 6", certs));

    let corrupted = params
        .iter()
        .take(40)
        .map(|&[a, b, m, n]| {
            let Ok(mut w) = bezout_uv(a, b, m, n) else { return false };
            w.u += 1;
            check_parameters([a, b, m, n]).is_ok_and(|o| o.passed())
                && !crate::engine::check_case1(a, b, m, n, &w).unwrap_or(true)
        })
        .collect();
    out.push(exact_property("engine", "a perturbed witness fails case 1", corrupted));

    let periods = period_sweep(c.exec, 2000);
    out.push(PropertyResult {
        suite: "engine",
        name: "period(n·cl) = m, period(m·cl) = n, all classes, mn ≤ 2000".into(),
        checked: periods.classes,
        failed: periods.failures,
        worst_ratio: None,
    });

    out.push(exact_property("engine", "induced maps match their composites", induced_laws()));
    out.push(exact_property("engine", "homotopy tables: quotients and B-shift, deg ≤ 10", table_consistency()));
    out
}
