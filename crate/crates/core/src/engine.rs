//! The decomposition pipeline: Bézout data, the connectivity matrices of the
//! splitting map, the liftability verdict, and Brauer period bookkeeping,
//! packaged as a self-contained certificate.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use crate::arith::{bezout_uv, degrees, gcd_u64, BezoutWitness, BrauerClass};
use crate::error::{Error, Result};
use crate::fgab::{is_isomorphism, FgabGroup, FgabMap, IntMatrix};
use crate::par::{map_items, Execution};
use crate::serde_big;

/// Schema tag written into every serialized certificate.
pub const CERTIFICATE_SCHEMA: &str = "azumaya-decomposition-certificate/v1";

/// Degree `abmn` split as `am · bn`, over a complex of dimension `dim_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionProblem {
    pub a: u64,
    pub b: u64,
    pub m: u64,
    pub n: u64,
    #[serde(rename = "dimX")]
    pub dim_x: u64,
}

impl DecompositionProblem {
    pub fn new(a: u64, b: u64, m: u64, n: u64, dim_x: u64) -> Result<Self> {
        degrees(a, b, m, n)?;
        Ok(DecompositionProblem { a, b, m, n, dim_x })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// `dim X ≤ 2am`: a lift exists and is unique up to homotopy.
    LiftableUnique,
    /// `dim X = 2am + 1`: a lift exists but need not be unique.
    LiftableNonUnique,
    /// `dim X > 2am + 1`: nothing is claimed either way.
    NotGuaranteed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::LiftableUnique => "LiftableUnique",
            Verdict::LiftableNonUnique => "LiftableNonUnique",
            Verdict::NotGuaranteed => "NotGuaranteed",
        })
    }
}

/// Verdict for a `(2am+1)`-connected map into a complex of dimension `dim_x`.
pub fn verdict_for(dim_x: u64, am: u64) -> Verdict {
    let bijective_limit = am.saturating_mul(2);
    if dim_x <= bijective_limit {
        Verdict::LiftableUnique
    } else if dim_x == bijective_limit.saturating_add(1) {
        Verdict::LiftableNonUnique
    } else {
        Verdict::NotGuaranteed
    }
}

fn stable_powers(a: u64, b: u64, m: u64, n: u64) -> Result<(BigInt, BigInt, BigInt, BigInt)> {
    let (am, bn) = degrees(a, b, m, n)?;
    let left = Pow::pow(&am, m);
    let right = Pow::pow(&bn, n);
    Ok((am, bn, left, right))
}

/// `[[bn, am], [u(am)^m, v(bn)^n]]`, the action of the splitting map on the
/// odd stable homotopy groups `Z × Z → Z × Z`.
pub fn build_connectivity_matrix(a: u64, b: u64, m: u64, n: u64, w: &BezoutWitness) -> Result<IntMatrix> {
    let (am, bn, left, right) = stable_powers(a, b, m, n)?;
    IntMatrix::from_big_rows(2, 2, vec![vec![bn, am], vec![&w.u * left, &w.v * right]])
}

/// Whether the connectivity matrix is an automorphism of `Z²`.
pub fn check_case1(a: u64, b: u64, m: u64, n: u64, w: &BezoutWitness) -> Result<bool> {
    let matrix = build_connectivity_matrix(a, b, m, n, w)?;
    let f = FgabMap::new(FgabGroup::free(2), FgabGroup::free(2), matrix)?;
    Ok(is_isomorphism(&f).is_isomorphism)
}

/// The map on `π_2` of the classifying spaces,
/// `(Z ⊕ Z/m) ⊕ (Z ⊕ Z/n) → Z² ⊕ Z/mn`,
/// `(x, y, α, β) ↦ (bn·x + am·y, u(am)^m·x + v(bn)^n·y, nα + mβ)`.
///
/// Source generators are `(x, y, α, β)` (torsion ones dropped when `m` or
/// `n` is 1); target generators are the two free coordinates, then `Z/mn`.
pub fn case2_map(a: u64, b: u64, m: u64, n: u64, w: &BezoutWitness) -> Result<FgabMap> {
    if gcd_u64(m, n) != 1 {
        return Err(Error::NotCoprime {
            left: m.to_string(),
            right: n.to_string(),
            gcd: gcd_u64(m, n).to_string(),
        });
    }
    let (am, bn, left, right) = stable_powers(a, b, m, n)?;
    let left_group = FgabGroup::with_cyclic(1, &[BigInt::from(m)]);
    let right_group = FgabGroup::with_cyclic(1, &[BigInt::from(n)]);
    let (source, lpos, rpos) = left_group.direct_sum(&right_group);
    let target = FgabGroup::with_cyclic(2, &[BigInt::from(m) * n]);

    let mut matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
    matrix.set(0, lpos[0], bn);
    matrix.set(0, rpos[0], am);
    matrix.set(1, lpos[0], &w.u * left);
    matrix.set(1, rpos[0], &w.v * right);
    if let Some(&alpha) = lpos.get(1) {
        matrix.set(2, alpha, BigInt::from(n));
    }
    if let Some(&beta) = rpos.get(1) {
        matrix.set(2, beta, BigInt::from(m));
    }
    FgabMap::new(source, target, matrix)
}

/// [`case2_map`] together with whether it is an isomorphism.
pub fn check_case2(a: u64, b: u64, m: u64, n: u64, w: &BezoutWitness) -> Result<(bool, FgabMap)> {
    let f = case2_map(a, b, m, n, w)?;
    Ok((is_isomorphism(&f).is_isomorphism, f))
}

/// One stage of the `Tr` pipeline and the matrix sizes it produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrStage {
    pub operation: String,
    #[serde(with = "serde_big::vec")]
    pub dims: Vec<BigInt>,
}

/// `Tr = ⊕ ∘ (⊕^u × ⊕^v) ∘ (⊗^m × ⊗^n)` with the sizes at each stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrDescriptor {
    pub stages: Vec<TrStage>,
    #[serde(rename = "N", with = "serde_big")]
    pub total_dim: BigInt,
}

impl TrDescriptor {
    /// `N`, or `DimensionOverflow` when it exceeds `cap`.
    pub fn checked_dim(&self, cap: usize) -> Result<usize> {
        usize::try_from(&self.total_dim)
            .ok()
            .filter(|&d| d <= cap)
            .ok_or_else(|| Error::DimensionOverflow { dim: self.total_dim.to_string(), cap })
    }

    /// Sizes of the stages, e.g. `(2,3) → (4,27) → (40,27) → 67`.
    pub fn dims_line(&self) -> String {
        let parts: Vec<String> = self
            .stages
            .iter()
            .map(|s| match s.dims.as_slice() {
                [single] => single.to_string(),
                many => format!("({})", many.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
            })
            .collect();
        parts.join(" → ")
    }
}

pub fn tr_descriptor(a: u64, b: u64, m: u64, n: u64, w: &BezoutWitness) -> Result<TrDescriptor> {
    let (am, bn, left, right) = stable_powers(a, b, m, n)?;
    let left_sum = &w.u * &left;
    let right_sum = &w.v * &right;
    let total_dim = &left_sum + &right_sum;
    let stage = |operation: String, dims: Vec<BigInt>| TrStage { operation, dims };
    Ok(TrDescriptor {
        stages: vec![
            stage("input".into(), vec![am, bn]),
            stage(format!("tensor powers ⊗^{m} × ⊗^{n}"), vec![left, right]),
            stage(format!("block sums ⊕^{} × ⊕^{}", w.u, w.v), vec![left_sum, right_sum]),
            stage("direct sum".into(), vec![total_dim.clone()]),
        ],
        total_dim,
    })
}

/// Everything computed for one [`DecompositionProblem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionCertificate {
    pub schema: String,
    pub problem: DecompositionProblem,
    pub witness: BezoutWitness,
    #[serde(rename = "N", with = "serde_big")]
    pub total_dim: BigInt,
    #[serde(with = "serde_big::rows")]
    pub case1_matrix: Vec<Vec<BigInt>>,
    #[serde(with = "serde_big")]
    pub case1_det: BigInt,
    pub case1_iso: bool,
    pub case2_map: FgabMap,
    pub case2_iso: bool,
    pub connectivity: u64,
    pub tr: TrDescriptor,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl DecompositionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for DecompositionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.problem;
        writeln!(f, "problem     a={} b={} m={} n={} dimX={}", p.a, p.b, p.m, p.n, p.dim_x)?;
        let (am, bn) = (BigInt::from(p.a) * p.m, BigInt::from(p.b) * p.n);
        writeln!(f, "split       degree {} = {am} · {bn}", &am * &bn)?;
        writeln!(f, "witness     u={} v={} sign={:+}", self.witness.u, self.witness.v, self.witness.sign.as_i64())?;
        writeln!(f, "N           {}", self.total_dim)?;
        writeln!(f, "Tr dims     {}", self.tr.dims_line())?;
        let rows: Vec<String> = self
            .case1_matrix
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        writeln!(f, "case 1      [{}] det={} iso={}", rows.join("; "), self.case1_det, self.case1_iso)?;
        writeln!(f, "case 2      {} iso={}", self.case2_map, self.case2_iso)?;
        writeln!(f, "connected   {}", self.connectivity)?;
        writeln!(f, "verdict     {}", self.verdict)?;
        for reason in &self.reasons {
            writeln!(f, "  - {reason}")?;
        }
        Ok(())
    }
}

/// Runs the full pipeline. Fails only on the hard preconditions
/// `gcd(am, bn) = 1` and `am < bn`.
pub fn decide(problem: &DecompositionProblem) -> Result<DecompositionCertificate> {
    let DecompositionProblem { a, b, m, n, dim_x } = *problem;
    let w = bezout_uv(a, b, m, n)?;
    let overflow = || Error::InvalidParameter("degree does not fit in 64 bits".into());
    let am = a.checked_mul(m).ok_or_else(overflow)?;
    let bn = b.checked_mul(n).ok_or_else(overflow)?;
    if am >= bn {
        return Err(Error::NotOrdered { am, bn });
    }

    let matrix = build_connectivity_matrix(a, b, m, n, &w)?;
    let det = matrix.det()?;
    let case1_iso = check_case1(a, b, m, n, &w)?;
    let (case2_iso, case2_map) = check_case2(a, b, m, n, &w)?;
    let tr = tr_descriptor(a, b, m, n, &w)?;
    let connectivity = am.checked_mul(2).and_then(|x| x.checked_add(1)).ok_or_else(overflow)?;

    let mut reasons = vec![format!(
        "Bézout witness: {}·{} − {}·{} = {}",
        w.lhs_pow,
        w.v,
        w.rhs_pow,
        w.u,
        w.sign.as_i64()
    )];
    reasons.push(format!(
        "odd degrees below {}: connectivity matrix has determinant {det}, {}",
        2 * am,
        if case1_iso { "an automorphism of Z²" } else { "NOT invertible over Z" }
    ));
    reasons.push(format!(
        "degree 2: {} {}",
        case2_map,
        if case2_iso { "is an isomorphism" } else { "is NOT an isomorphism" }
    ));

    let verdict = if case1_iso && case2_iso {
        reasons.push(format!("the splitting map is {connectivity}-connected"));
        let v = verdict_for(dim_x, am);
        reasons.push(match v {
            Verdict::LiftableUnique => format!("dimX = {dim_x} ≤ {}: the lift exists and is unique up to homotopy", 2 * am),
            Verdict::LiftableNonUnique => format!("dimX = {dim_x} = {connectivity}: a lift exists but need not be unique"),
            Verdict::NotGuaranteed => format!("dimX = {dim_x} > {connectivity}: no claim is made either way"),
        });
        v
    } else {
        reasons.push("a connectivity check failed; no lift is certified".into());
        Verdict::NotGuaranteed
    };
    reasons.push(format!(
        "assumed, not re-verified: a PU_{} bundle whose class has period {} lifts to the SU quotient \
         (external lifting result); period bookkeeping is checked separately",
        BigInt::from(am) * bn,
        BigInt::from(m) * n
    ));

    Ok(DecompositionCertificate {
        schema: CERTIFICATE_SCHEMA.into(),
        problem: *problem,
        total_dim: tr.total_dim.clone(),
        witness: w,
        case1_matrix: matrix.row_vecs(),
        case1_det: det,
        case1_iso,
        case2_map,
        case2_iso,
        connectivity,
        tr,
        verdict,
        reasons,
    })
}

/// Splits a class of period `mn` in `Z/mn` into `(n·cl, m·cl)`, of periods
/// `m` and `n`.
pub fn brauer_split(cl: &BrauerClass, m: u64, n: u64) -> Result<(BrauerClass, BrauerClass)> {
    let g = gcd_u64(m, n);
    if g != 1 {
        return Err(Error::NotCoprime { left: m.to_string(), right: n.to_string(), gcd: g.to_string() });
    }
    let mn = m
        .checked_mul(n)
        .ok_or_else(|| Error::InvalidParameter("m·n overflows".into()))?;
    if cl.modulus() != mn {
        return Err(Error::InvalidParameter(format!("class lives in Z/{}, expected Z/{mn}", cl.modulus())));
    }
    if cl.period() != mn {
        return Err(Error::WrongPeriod { expected: mn, found: cl.period() });
    }
    let (cl_m, cl_n) = (cl.scale(n), cl.scale(m));
    for (part, want) in [(&cl_m, m), (&cl_n, n)] {
        if part.period() != want {
            return Err(Error::WrongPeriod { expected: want, found: part.period() });
        }
    }
    Ok((cl_m, cl_n))
}

/// Every `(a, b, m, n)` with `a, b ≤ max_ab`, `m, n ≤ max_mn`,
/// `gcd(am, bn) = 1` and `am < bn`.
pub fn admissible_parameters(max_ab: u64, max_mn: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for a in 1..=max_ab {
        for b in 1..=max_ab {
            for m in 1..=max_mn {
                for n in 1..=max_mn {
                    if a * m < b * n && gcd_u64(a * m, b * n) == 1 {
                        out.push([a, b, m, n]);
                    }
                }
            }
        }
    }
    out
}

/// Every admissible `(a, b, m, n)` with `am, bn ≤ max_degree`.
pub fn admissible_by_degree(max_degree: u64) -> Vec<[u64; 4]> {
    admissible_parameters(max_degree, max_degree)
        .into_iter()
        .filter(|&[a, b, m, n]| a * m <= max_degree && b * n <= max_degree)
        .collect()
}

/// Result of the exact checks for one parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub params: [u64; 4],
    pub witness_holds: bool,
    pub det_matches_sign: bool,
    pub case1: bool,
    pub case2: bool,
    pub free_part_matches: bool,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.witness_holds && self.det_matches_sign && self.case1 && self.case2 && self.free_part_matches
    }
}

pub fn check_parameters([a, b, m, n]: [u64; 4]) -> Result<SweepOutcome> {
    let w = bezout_uv(a, b, m, n)?;
    let matrix = build_connectivity_matrix(a, b, m, n, &w)?;
    let det_matches_sign = matrix.det()? == BigInt::from(w.sign.as_i64());
    let case1 = check_case1(a, b, m, n, &w)?;
    let (case2, map) = check_case2(a, b, m, n, &w)?;
    let free: Vec<Vec<BigInt>> = map.matrix().row_vecs()[..2].iter().map(|r| r[..2].to_vec()).collect();
    Ok(SweepOutcome {
        params: [a, b, m, n],
        witness_holds: w.holds(),
        det_matches_sign,
        case1,
        case2,
        free_part_matches: free == matrix.row_vecs(),
    })
}

/// Runs [`check_parameters`] over `params`; a parameter error counts as a
/// failed outcome.
pub fn connectivity_sweep(exec: Execution, params: &[[u64; 4]]) -> Vec<SweepOutcome> {
    map_items(exec, params, |&p| {
        check_parameters(p).unwrap_or(SweepOutcome {
            params: p,
            witness_holds: false,
            det_matches_sign: false,
            case1: false,
            case2: false,
            free_part_matches: false,
        })
    })
}

/// Counts from an exhaustive [`brauer_split`] sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PeriodSweep {
    pub pairs: u64,
    pub classes: u64,
    pub failures: u64,
}

/// Splits every class of period `mn` for every coprime `(m, n)` with
/// `mn ≤ max_mn`.
pub fn period_sweep(exec: Execution, max_mn: u64) -> PeriodSweep {
    let mut pairs = Vec::new();
    for m in 1..=max_mn {
        for n in 1..=max_mn / m {
            if gcd_u64(m, n) == 1 {
                pairs.push((m, n));
            }
        }
    }
    let per_pair = map_items(exec, &pairs, |&(m, n)| {
        let mn = m * n;
        let mut sweep = PeriodSweep { pairs: 1, ..Default::default() };
        for value in 0..mn {
            let cl = BrauerClass::new(mn, value).expect("positive modulus");
            if cl.period() != mn {
                continue;
            }
            sweep.classes += 1;
            let ok = matches!(
                brauer_split(&cl, m, n),
                Ok((cm, cn)) if cm.period() == m && cn.period() == n
                    && cm.value() == (n * value) % mn && cn.value() == (m * value) % mn
            );
            if !ok {
                sweep.failures += 1;
            }
        }
        sweep
    });
    per_pair.into_iter().fold(PeriodSweep::default(), |acc, s| PeriodSweep {
        pairs: acc.pairs + s.pairs,
        classes: acc.classes + s.classes,
        failures: acc.failures + s.failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::is_bijective_exhaustive;

    fn big_rows(rows: &[[i64; 2]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn connectivity_matrix_examples() {
        let w = bezout_uv(1, 1, 2, 3).unwrap();
        let mtx = build_connectivity_matrix(1, 1, 2, 3, &w).unwrap();
        assert_eq!(mtx.row_vecs(), big_rows(&[[3, 2], [40, 27]]));
        assert_eq!(mtx.det().unwrap(), BigInt::from(1));

        let w = bezout_uv(1, 1, 1, 2).unwrap();
        assert_eq!((w.u.clone(), w.v.clone()), (BigInt::from(7), BigInt::from(1)));
        let mtx = build_connectivity_matrix(1, 1, 1, 2, &w).unwrap();
        assert_eq!(mtx.row_vecs(), big_rows(&[[2, 1], [7, 4]]));
        assert_eq!(mtx.det().unwrap(), BigInt::from(1));
    }

    #[test]
    fn corrupted_witness_fails_case1() {
        let mut w = bezout_uv(1, 1, 2, 3).unwrap();
        assert!(check_case1(1, 1, 2, 3, &w).unwrap());
        w.u = BigInt::from(9);
        let mtx = build_connectivity_matrix(1, 1, 2, 3, &w).unwrap();
        assert_eq!(mtx.det().unwrap(), BigInt::from(9));
        assert!(!check_case1(1, 1, 2, 3, &w).unwrap());
        assert!(!check_case2(1, 1, 2, 3, &w).unwrap().0);
    }

    #[test]
    fn case2_examples() {
        let w = bezout_uv(1, 1, 2, 3).unwrap();
        let (iso, f) = check_case2(1, 1, 2, 3, &w).unwrap();
        assert!(iso);
        assert_eq!(f.to_string(), "[3 2 0 0; 40 27 0 0; 0 0 3 2] : Z^2 ⊕ Z/2 ⊕ Z/3 → Z^2 ⊕ Z/6");

        // the torsion restriction Z/2 ⊕ Z/3 → Z/6 is a bijection
        let torsion = FgabMap::new(
            FgabGroup::with_cyclic(0, &[BigInt::from(2), BigInt::from(3)]),
            FgabGroup::cyclic(6),
            IntMatrix::from_rows(&[[3, 2]]),
        )
        .unwrap();
        assert_eq!(is_bijective_exhaustive(&torsion), Some(true));

        let w = bezout_uv(1, 1, 1, 1).unwrap();
        let (iso, f) = check_case2(1, 1, 1, 1, &w).unwrap();
        assert!(iso);
        assert_eq!(f.source(), &FgabGroup::free(2));
        assert_eq!(f.matrix(), &build_connectivity_matrix(1, 1, 1, 1, &w).unwrap());

        assert!(matches!(check_case2(1, 1, 2, 4, &w), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn verdicts() {
        let cert = decide(&DecompositionProblem::new(1, 1, 2, 3, 4).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::LiftableUnique);
        assert_eq!(cert.total_dim, BigInt::from(67));
        assert_eq!(cert.connectivity, 5);
        assert_eq!(cert.case1_det, BigInt::from(cert.witness.sign.as_i64()));
        assert!(cert.case1_iso && cert.case2_iso);
        let cert = decide(&DecompositionProblem::new(1, 1, 2, 3, 5).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::LiftableNonUnique);
        let cert = decide(&DecompositionProblem::new(1, 1, 2, 3, 6).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::NotGuaranteed);
        assert!(cert.reasons.iter().any(|r| r.contains("assumed")));

        for dim_x in [0, 4, 9] {
            let p = DecompositionProblem::new(1, 1, 2, 4, dim_x).unwrap();
            assert!(matches!(decide(&p), Err(Error::NotCoprime { .. })));
            let p = DecompositionProblem::new(1, 1, 3, 2, dim_x).unwrap();
            assert_eq!(decide(&p).unwrap_err(), Error::NotOrdered { am: 3, bn: 2 });
        }
        assert!(DecompositionProblem::new(0, 1, 2, 3, 4).is_err());
    }

    #[test]
    fn decide_is_deterministic_and_round_trips() {
        let p = DecompositionProblem::new(2, 1, 1, 5, 3).unwrap();
        let json = decide(&p).unwrap().to_json();
        assert_eq!(json, decide(&p).unwrap().to_json());
        let back = DecompositionCertificate::from_json(&json).unwrap();
        assert_eq!(back, decide(&p).unwrap());
    }

    #[test]
    fn big_integers_are_bare_json_numbers() {
        let cert = decide(&DecompositionProblem::new(1, 1, 5, 6, 3).unwrap()).unwrap();
        let json = cert.to_json();
        assert!(!cert.total_dim.to_string().is_empty());
        assert!(json.contains(&format!("\"N\": {}", cert.total_dim)));
        assert!(json.contains(&format!("\"lhsPow\": {}", cert.witness.lhs_pow)));
        assert_eq!(DecompositionCertificate::from_json(&json).unwrap(), cert);
    }

    #[test]
    fn descriptor_examples() {
        let w = bezout_uv(1, 1, 2, 3).unwrap();
        let d = tr_descriptor(1, 1, 2, 3, &w).unwrap();
        assert_eq!(d.dims_line(), "(2,3) → (4,27) → (40,27) → 67");
        let w = bezout_uv(1, 1, 1, 2).unwrap();
        let d = tr_descriptor(1, 1, 1, 2, &w).unwrap();
        assert_eq!(d.dims_line(), "(1,2) → (1,4) → (7,4) → 11");
        assert_eq!(d.checked_dim(11), Ok(11));
        assert!(matches!(d.checked_dim(10), Err(Error::DimensionOverflow { .. })));
    }

    #[test]
    fn brauer_split_examples() {
        let (cm, cn) = brauer_split(&BrauerClass::new(6, 1).unwrap(), 2, 3).unwrap();
        assert_eq!((cm.value(), cm.period(), cn.value(), cn.period()), (3, 2, 2, 3));
        let (cm, _) = brauer_split(&BrauerClass::new(6, 5).unwrap(), 2, 3).unwrap();
        assert_eq!((cm.value(), cm.period()), (3, 2));
        assert_eq!(
            brauer_split(&BrauerClass::new(6, 0).unwrap(), 2, 3).unwrap_err(),
            Error::WrongPeriod { expected: 6, found: 1 }
        );
        assert!(matches!(brauer_split(&BrauerClass::new(8, 1).unwrap(), 2, 4), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn sweep_up_to_degree_twelve() {
        let params = admissible_by_degree(12);
        assert!(params.len() > 100);
        for outcome in connectivity_sweep(Execution::Parallel, &params) {
            assert!(outcome.passed(), "{outcome:?}");
        }
    }

    #[test]
    fn period_sweep_small() {
        let seq = period_sweep(Execution::Sequential, 200);
        assert_eq!(seq, period_sweep(Execution::Parallel, 200));
        assert_eq!(seq.failures, 0);
        assert!(seq.classes > 0);
    }
}
