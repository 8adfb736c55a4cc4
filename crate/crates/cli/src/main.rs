//! `azumaya`: certificates, homotopy tables, induced maps and verification
//! suites from the command line.
//!
//! Exit codes: 0 success, 1 precondition or check failure, 2 when
//! `decompose` cannot guarantee a lift, 64 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use azumaya_core::arith::bezout_uv;
use azumaya_core::engine::{decide, tr_descriptor, DecompositionProblem, Verdict};
use azumaya_core::homotopy::{pi, SpaceSpec};
use azumaya_core::induced::{self, InducedMap};
use azumaya_core::matrix::{
    central_scalar, random_unitary, tolerance, tr_blocks, tr_central, CentralElement, ComplexMatrix, TrImage,
    TrParams, UnitaryPath, DEFAULT_DIM_CAP,
};
use azumaya_core::par::{trial_seed, Execution};
use azumaya_core::verify::{self, Suite, VerifyConfig, DEFAULT_SEED};
use azumaya_core::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_FAILURE: u8 = 1;
const EXIT_NOT_GUARANTEED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "azumaya", version, about = "Splitting certificates for topological Azumaya algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a degree-abmn algebra over a complex of dimension dimX
    /// splits as a tensor product of degree am and bn algebras.
    Decompose {
        a: u64,
        b: u64,
        m: u64,
        n: u64,
        #[arg(value_name = "DIMX")]
        dim_x: u64,
        /// Print the certificate as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print a homotopy group from the tables.
    Pi {
        /// U, SU, SUquot, Uquot, PU, or any of these prefixed with B.
        family: String,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Print the map an operation induces on homotopy groups.
    Induced {
        op: InducedOp,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
    },
    /// Check the matrix homomorphism Tr numerically on random unitaries.
    Trcheck {
        a: u64,
        b: u64,
        m: u64,
        n: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest matrix dimension N that will be built.
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: usize,
    },
    /// Run property suites.
    Verify {
        #[arg(value_parser = ["matrix", "fgab", "engine", "all"])]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        /// Also check a unitary read from a matrix text file.
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum InducedOp {
    Dsum,
    Rsum,
    Tensor,
    Rtensor,
    Stab,
    Mult,
    Diagonal,
    TensorQuot,
    TensorQuotPi1,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// Writes to stdout, treating a closed pipe (`| head`) as success.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn required(name: &str, value: Option<u64>) -> std::result::Result<u64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{name} is required here")))
}

fn run(command: Command) -> std::result::Result<ExitCode, Failure> {
    match command {
        Command::Decompose { a, b, m, n, dim_x, json } => {
            let cert = decide(&DecompositionProblem::new(a, b, m, n, dim_x)?)?;
            if json {
                emit(&format!("{}\n", cert.to_json()));
            } else {
                emit(&cert.to_string());
            }
            Ok(match cert.verdict {
                Verdict::NotGuaranteed => ExitCode::from(EXIT_NOT_GUARANTEED),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Pi { family, i, n, a, m } => {
            let space = parse_space(&family, n, a, m)?;
            emit(&format!("{}\n", pi(i, &space)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Induced { op, i, m, n, r, a, b } => {
            emit(&format!("{}\n", induced_map(op, i, m, n, r, a, b)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Trcheck { a, b, m, n, trials, seed, cap } => {
            let report = trcheck(TrParams { a, b, m, n }, trials, seed, cap)?;
            emit(&report.to_string());
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILURE) })
        }
        Command::Verify { suite, trials, seed, tol_scale, matrix, sequential } => {
            let suite: Suite = suite.parse().map_err(Failure::Usage)?;
            #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
            if !(tol_scale > 0.0) {
                return Err(Failure::Usage("--tol-scale must be positive".into()));
            }
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let config = VerifyConfig { trials, seed, tol_scale, exec };
            let mut report = verify::run(suite, &config);
            if let Some(path) = matrix {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                report.results.push(check_matrix_file(&ComplexMatrix::parse_text(&text)?, tol_scale));
            }
            emit(&format!("{report}\n"));
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAILURE) })
        }
    }
}

fn parse_space(family: &str, n: Option<u64>, a: Option<u64>, m: Option<u64>) -> std::result::Result<SpaceSpec, Failure> {
    let lower = family.to_ascii_lowercase();
    let (classifying, base) = match lower.strip_prefix('b') {
        Some(rest) if !rest.is_empty() => (true, rest.to_string()),
        _ => (false, lower),
    };
    let space = match base.as_str() {
        "u" => SpaceSpec::U { n: required("n", n)? },
        "su" => SpaceSpec::SU { n: required("n", n)? },
        "pu" => SpaceSpec::PU { n: required("n", n)? },
        "suquot" => SpaceSpec::SUQuot { a: required("a", a)?, m: required("m", m)? },
        "uquot" => SpaceSpec::UQuot { a: required("a", a)?, m: required("m", m)? },
        _ => return Err(Failure::Usage(format!("unknown family {family:?} (U, SU, SUquot, Uquot, PU, B…)"))),
    };
    Ok(if classifying { space.classifying() } else { space })
}

fn induced_map(
    op: InducedOp,
    i: Option<u64>,
    m: Option<u64>,
    n: Option<u64>,
    r: Option<u64>,
    a: Option<u64>,
    b: Option<u64>,
) -> std::result::Result<InducedMap, Failure> {
    let i_ = || required("i", i);
    let m_ = || required("m", m);
    let n_ = || required("n", n);
    let r_ = || required("r", r);
    Ok(match op {
        InducedOp::Dsum => induced::dsum_star(i_()?, m_()?, n_()?)?,
        InducedOp::Rsum => induced::rsum_star(i_()?, n_()?, r_()?)?,
        InducedOp::Tensor => induced::tensor_star(i_()?, m_()?, n_()?)?,
        InducedOp::Rtensor => induced::rtensor_star(i_()?, n_()?, r_()?)?,
        InducedOp::Stab => induced::stab_star(i_()?, m_()?, n_()?)?,
        InducedOp::Mult => induced::mult_star(i_()?, n_()?, r_()?)?,
        InducedOp::Diagonal => induced::diagonal_star(i_()?, n_()?, r_()?)?,
        InducedOp::TensorQuot => induced::tensor_star_quot(i_()?, a.unwrap_or(1), b.unwrap_or(1), m_()?, n_()?)?,
        InducedOp::TensorQuotPi1 => induced::tensor_star_quot_pi1(a.unwrap_or(1), b.unwrap_or(1), m_()?, n_()?)?,
    })
}

struct TrReport {
    params: TrParams,
    seed: u64,
    trials: usize,
    dims_line: String,
    dim: usize,
    descent_symbolic: bool,
    descent_max: f64,
    homomorphism_max: f64,
    unitarity_max: f64,
}

impl TrReport {
    fn tol(&self) -> f64 {
        tolerance(self.dim)
    }

    fn passed(&self) -> bool {
        self.descent_symbolic
            && self.descent_max <= self.tol()
            && self.homomorphism_max <= self.tol()
            && self.unitarity_max <= self.tol()
    }
}

impl std::fmt::Display for TrReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = &self.params;
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        writeln!(f, "Tr for (a,b,m,n) = ({},{},{},{})  seed={} trials={}", p.a, p.b, p.m, p.n, self.seed, self.trials)?;
        writeln!(f, "dims           {}", self.dims_line)?;
        writeln!(f, "tolerance      {:.3e}", self.tol())?;
        writeln!(f, "descent exact  {}", mark(self.descent_symbolic))?;
        for (name, value) in [
            ("descent", self.descent_max),
            ("homomorphism", self.homomorphism_max),
            ("unitarity", self.unitarity_max),
        ] {
            writeln!(f, "{name:<14} max deviation {value:.3e}  {}", mark(value <= self.tol()))?;
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn tr_unitarity(image: &TrImage) -> f64 {
    let (l, r) = (image.left.unitary_deviation(), image.right.unitary_deviation());
    (image.left_reps as f64 * l * l + image.right_reps as f64 * r * r).sqrt()
}

fn trcheck(p: TrParams, trials: usize, seed: u64, cap: usize) -> Result<TrReport> {
    let w = bezout_uv(p.a, p.b, p.m, p.n)?;
    let descriptor = tr_descriptor(p.a, p.b, p.m, p.n, &w)?;
    let dim = descriptor.checked_dim(cap)?;
    let (am, bn) = (p.am() as usize, p.bn() as usize);
    let tr = |x: &ComplexMatrix, y: &ComplexMatrix| tr_blocks(x, y, &w, p, cap);

    let mut descent_symbolic = true;
    let mut descent_max: f64 = 0.0;
    for alpha in 0..p.m {
        for beta in 0..p.n {
            let ca = CentralElement::new(p.m, alpha, p.am())?;
            let cb = CentralElement::new(p.n, beta, p.bn())?;
            let (l, r) = tr_central(&ca, &cb, &w, p)?;
            descent_symbolic &= l.is_identity() && r.is_identity();
            let image = tr(&central_scalar(&ca), &central_scalar(&cb))?;
            descent_max = descent_max.max(image.identity_deviation());
        }
    }

    let (mut homomorphism_max, mut unitarity_max): (f64, f64) = (0.0, 0.0);
    for k in 0..trials as u64 {
        let s = trial_seed(seed, k);
        let (x, x2) = (random_unitary(am, trial_seed(s, 0)), random_unitary(am, trial_seed(s, 1)));
        let (y, y2) = (random_unitary(bn, trial_seed(s, 2)), random_unitary(bn, trial_seed(s, 3)));
        let lhs = tr(&x.mul(&x2)?, &y.mul(&y2)?)?;
        let rhs = tr(&x, &y)?.mul(&tr(&x2, &y2)?)?;
        homomorphism_max = homomorphism_max.max(lhs.distance(&rhs)?);
        unitarity_max = unitarity_max.max(tr_unitarity(&lhs));
    }

    Ok(TrReport {
        params: p,
        seed,
        trials,
        dims_line: descriptor.dims_line(),
        dim,
        descent_symbolic,
        descent_max,
        homomorphism_max,
        unitarity_max,
    })
}

fn check_matrix_file(u: &ComplexMatrix, tol_scale: f64) -> verify::PropertyResult {
    let tol = tolerance(u.dim()) * tol_scale;
    let mut deviations = vec![u.unitary_deviation()];
    if let Ok(path) = UnitaryPath::new(u) {
        deviations.push(path.at(0.0).distance(&ComplexMatrix::identity(u.dim())).unwrap_or(f64::INFINITY));
        deviations.push(path.at(1.0).distance(u).unwrap_or(f64::INFINITY));
        deviations.extend([0.25, 0.5, 0.75].map(|t| path.at(t).unitary_deviation()));
    }
    verify::PropertyResult {
        suite: "file",
        name: format!("supplied {0}x{0} matrix: unitary, path endpoints", u.dim()),
        checked: 6,
        failed: 6 - deviations.iter().filter(|&&d| d <= tol).count() as u64,
        worst_ratio: Some(deviations.iter().fold(0.0, |acc: f64, d| acc.max(d / tol))),
    }
}
