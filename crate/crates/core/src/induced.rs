//! Homomorphisms induced on homotopy groups by the matrix operations, as
//! explicit [`FgabMap`]s in the stable range.
//!
//! Two kinds of function live here. The closed forms (`dsum_star`,
//! `tensor_star`, …) write the answer down directly. The `*_via_*` and
//! `*_by_induction` functions rebuild the same maps by composing simpler
//! pieces (stabilizations, block sums, the Eckmann–Hilton sum), and exist so
//! the closed forms can be checked against an independent route.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::fgab::{compose, direct_sum, FgabGroup, FgabMap, IntMatrix};
use crate::homotopy::{pi, SpaceSpec};

/// An induced map together with the factors of its source, for rendering
/// `[3 2] : Z×Z → Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    pub factors: Vec<FgabGroup>,
    pub map: FgabMap,
}

impl fmt::Display for InducedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .factors
            .iter()
            .map(|g| {
                let s = g.to_string();
                if self.factors.len() > 1 && s.contains('⊕') {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect();
        write!(f, "{} : {} → {}", self.map.matrix(), factors.join("×"), self.map.target())
    }
}

fn check_stable(i: u64, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("matrix size must be positive".into()));
    }
    if i >= 2 * n {
        return Err(Error::OutOfStableRange { degree: i, limit: 2 * n - 1 });
    }
    Ok(())
}

fn require_positive(name: &str, x: u64) -> Result<()> {
    if x == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

/// `π_i(U_n)` below `2n`: `Z` for odd `i`, else `0`.
fn stable_group(i: u64) -> FgabGroup {
    if i % 2 == 1 {
        FgabGroup::free(1)
    } else {
        FgabGroup::trivial()
    }
}

/// Map between products of copies of the stable group whose free part is
/// the integer matrix `rows` (the zero map when the groups are trivial).
fn stable_linear(i: u64, rows: Vec<Vec<BigInt>>) -> Result<InducedMap> {
    let g = stable_group(i);
    let (out_copies, in_copies) = (rows.len(), rows[0].len());
    let power = |k: usize| (1..k).fold(g.clone(), |acc, _| acc.direct_sum(&g).0);
    let (source, target) = (power(in_copies), power(out_copies));
    let matrix = if g.is_trivial() {
        IntMatrix::zeros(0, 0)
    } else {
        IntMatrix::from_big_rows(out_copies, in_copies, rows)?
    };
    Ok(InducedMap { factors: vec![g; in_copies], map: FgabMap::new(source, target, matrix)? })
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// Direct sum `π_i(U_m) × π_i(U_n) → π_i(U_{m+n})`, `(x, y) ↦ x + y`.
pub fn dsum_star(i: u64, m: u64, n: u64) -> Result<InducedMap> {
    require_positive("n", n)?;
    if m > n {
        return Err(Error::InvalidParameter(format!("direct sum needs m ≤ n, got {m} > {n}")));
    }
    check_stable(i, m)?;
    stable_linear(i, vec![vec![BigInt::one(), BigInt::one()]])
}

/// `r`-fold block sum `π_i(U_n) → π_i(U_{rn})`, `x ↦ rx`.
pub fn rsum_star(i: u64, n: u64, r: u64) -> Result<InducedMap> {
    require_positive("r", r)?;
    check_stable(i, n)?;
    stable_linear(i, vec![vec![big(r)]])
}

/// Tensor product `π_i(U_m) × π_i(U_n) → π_i(U_{mn})`, `(x, y) ↦ nx + my`.
pub fn tensor_star(i: u64, m: u64, n: u64) -> Result<InducedMap> {
    require_positive("m", m)?;
    if m >= n {
        return Err(Error::NotOrdered { am: m, bn: n });
    }
    check_stable(i, m)?;
    stable_linear(i, vec![vec![big(n), big(m)]])
}

/// `r`-fold tensor power `π_i(U_n) → π_i(U_{n^r})`, `x ↦ r n^{r-1} x`.
pub fn rtensor_star(i: u64, n: u64, r: u64) -> Result<InducedMap> {
    require_positive("r", r)?;
    check_stable(i, n)?;
    let coeff = big(r) * Pow::pow(&big(n), r - 1);
    stable_linear(i, vec![vec![coeff]])
}

/// Stabilization `A ↦ diag(A, I_n)`: the identity on `π_i` for `i < 2m`,
/// whatever the added size `n`.
pub fn stab_star(i: u64, m: u64, _n: u64) -> Result<InducedMap> {
    check_stable(i, m)?;
    stable_linear(i, vec![vec![BigInt::one()]])
}

/// Matrix multiplication `π_i(U_n)^r → π_i(U_n)`: the sum of the
/// coordinates.
pub fn mult_star(i: u64, n: u64, r: u64) -> Result<InducedMap> {
    require_positive("r", r)?;
    check_stable(i, n)?;
    stable_linear(i, vec![vec![BigInt::one(); r as usize]])
}

/// Diagonal `π_i(U_n) → π_i(U_n)^r`.
pub fn diagonal_star(i: u64, n: u64, r: u64) -> Result<InducedMap> {
    require_positive("r", r)?;
    check_stable(i, n)?;
    stable_linear(i, vec![vec![BigInt::one()]; r as usize])
}

fn check_quot_params(a: u64, b: u64, m: u64, n: u64) -> Result<(u64, u64)> {
    for (name, x) in [("a", a), ("b", b), ("m", m), ("n", n)] {
        require_positive(name, x)?;
    }
    let am = a.checked_mul(m).ok_or_else(|| Error::InvalidParameter("a·m overflows".into()))?;
    let bn = b.checked_mul(n).ok_or_else(|| Error::InvalidParameter("b·n overflows".into()))?;
    Ok((am, bn))
}

/// Tensor product on the central quotients in degree `i > 1`:
/// `(x, y) ↦ bn·x + am·y`.
pub fn tensor_star_quot(i: u64, a: u64, b: u64, m: u64, n: u64) -> Result<InducedMap> {
    let (am, bn) = check_quot_params(a, b, m, n)?;
    if i == 1 {
        return Err(Error::UseQuotPi1);
    }
    if am >= bn {
        return Err(Error::NotOrdered { am, bn });
    }
    check_stable(i, am)?;
    let mut out = stable_linear(i, vec![vec![big(bn), big(am)]])?;
    // label with the quotient groups; equal to the stable group here
    out.factors = vec![pi(i, &SpaceSpec::UQuot { a, m })?, pi(i, &SpaceSpec::UQuot { a: b, m: n })?];
    Ok(out)
}

/// Tensor product on fundamental groups of the central quotients:
/// `(Z ⊕ Z/m) × (Z ⊕ Z/n) → Z ⊕ Z/mn`,
/// `(x + α, y + β) ↦ (bn·x + am·y) + αβ`, where `αβ` is the CRT merge
/// `nα + mβ mod mn`.
///
/// Source generators are ordered `(x, y, α, β)`, with `α` or `β` omitted
/// when `m = 1` or `n = 1`.
pub fn tensor_star_quot_pi1(a: u64, b: u64, m: u64, n: u64) -> Result<InducedMap> {
    let (am, bn) = check_quot_params(a, b, m, n)?;
    let left = pi(1, &SpaceSpec::UQuot { a, m })?;
    let right = pi(1, &SpaceSpec::UQuot { a: b, m: n })?;
    let target = FgabGroup::with_cyclic(1, &[big(m) * n]);
    let (source, lpos, rpos) = left.direct_sum(&right);

    let mut matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
    matrix.set(0, lpos[0], big(bn));
    matrix.set(0, rpos[0], big(am));
    if target.torsion.len() == 1 {
        if m > 1 {
            matrix.set(1, lpos[1], big(n));
        }
        if n > 1 {
            matrix.set(1, rpos[1], big(m));
        }
    }
    Ok(InducedMap { factors: vec![left, right], map: FgabMap::new(source, target, matrix)? })
}

/// Direct sum rebuilt as `m_* ∘ (stab_{m,n} × stab_{n,m})`.
pub fn dsum_star_via_stabilization(i: u64, m: u64, n: u64) -> Result<InducedMap> {
    let dsum = dsum_star(i, m, n)?;
    let stabs = direct_sum(&stab_star(i, m, n)?.map, &stab_star(i, n, m)?.map);
    let sum = mult_star(i, m + n, 2)?.map;
    Ok(InducedMap { factors: dsum.factors, map: compose(&sum, &stabs)? })
}

/// Block sum rebuilt as `m_* ∘ ∏ s_j ∘ Δ`, each `s_j` acting as the
/// stabilization.
pub fn rsum_star_via_blocks(i: u64, n: u64, r: u64) -> Result<InducedMap> {
    let base = rsum_star(i, n, r)?;
    let diag = diagonal_star(i, n, r)?.map;
    let blocks = (1..r).try_fold(stab_star(i, n, (r - 1) * n)?.map, |acc, _| {
        Ok::<_, Error>(direct_sum(&acc, &stab_star(i, n, (r - 1) * n)?.map))
    })?;
    let sum = mult_star(i, r * n, r)?.map;
    Ok(InducedMap { factors: base.factors, map: compose(&sum, &compose(&blocks, &diag)?)? })
}

/// Tensor product of `U_p × U_q` rebuilt from block sums:
/// `⊗_*(x, y) = ⊕^q_*(x) + ⊕^p_*(y)`. Valid for `i < 2·min(p, q)`; no
/// ordering of `p` and `q` is needed.
pub fn tensor_star_via_sums(i: u64, p: u64, q: u64) -> Result<InducedMap> {
    check_stable(i, p.min(q))?;
    let blocks = direct_sum(&rsum_star(i, p, q)?.map, &rsum_star(i, q, p)?.map);
    let sum = mult_star(i, p * q, 2)?.map;
    Ok(InducedMap { factors: vec![stable_group(i); 2], map: compose(&sum, &blocks)? })
}

/// `r`-fold tensor power rebuilt inductively from
/// `A^{⊗r} = A^{⊗(r-1)} ⊗ A`:
/// `⊗^r_* = ⊗_* ∘ (⊗^{r-1}_* × id) ∘ Δ`.
pub fn rtensor_star_by_induction(i: u64, n: u64, r: u64) -> Result<InducedMap> {
    require_positive("r", r)?;
    check_stable(i, n)?;
    let mut current = FgabMap::identity(&stable_group(i));
    let mut power = n;
    for _ in 1..r {
        let pair = direct_sum(&current, &FgabMap::identity(&stable_group(i)));
        let step = tensor_star_via_sums(i, power, n)?.map;
        current = compose(&step, &compose(&pair, &diagonal_star(i, n, 2)?.map)?)?;
        power = power
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidParameter("n^r overflows".into()))?;
    }
    Ok(InducedMap { factors: vec![stable_group(i)], map: current })
}

/// True when every entry of the map is zero.
pub fn is_zero_map(f: &FgabMap) -> bool {
    f.matrix().row_vecs().iter().flatten().all(|x| x.is_zero())
}
