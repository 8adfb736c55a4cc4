//! Exact integer arithmetic: extended Euclid, the Bézout witness that seeds
//! the splitting homomorphism, CRT merging of root-of-unity exponents, and
//! periods of classes in a cyclic group.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Extended Euclid: returns `(g, s, t)` with `s*x + t*y = g = gcd(x, y)`.
pub fn ext_gcd(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (x.clone(), y.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Modular inverse of `x` modulo `modulus` in `[0, modulus)`, if it exists.
pub fn mod_inverse(x: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    if modulus.is_one() {
        return Some(BigInt::zero());
    }
    let (g, s, _) = ext_gcd(&x.mod_floor(modulus), modulus);
    g.is_one().then(|| s.mod_floor(modulus))
}

/// Sign of a Bézout identity. Serialized as the integer `1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i64", try_from = "i64")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.as_i64()
    }
}

impl TryFrom<i64> for Sign {
    type Error = String;

    fn try_from(x: i64) -> std::result::Result<Sign, String> {
        Sign::from_i64(x).ok_or_else(|| format!("sign must be 1 or -1, got {x}"))
    }
}

/// Positive `u`, `v` with `lhs_pow * v - rhs_pow * u = sign`, where
/// `lhs_pow = (bn)^(n+1)` and `rhs_pow = (am)^(m+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BezoutWitness {
    #[serde(with = "crate::serde_big")]
    pub u: BigInt,
    #[serde(with = "crate::serde_big")]
    pub v: BigInt,
    pub sign: Sign,
    #[serde(with = "crate::serde_big")]
    pub lhs_pow: BigInt,
    #[serde(with = "crate::serde_big")]
    pub rhs_pow: BigInt,
}

impl BezoutWitness {
    /// Checks the witness identity and positivity exactly.
    pub fn holds(&self) -> bool {
        self.u.is_positive()
            && self.v.is_positive()
            && &self.lhs_pow * &self.v - &self.rhs_pow * &self.u == BigInt::from(self.sign.as_i64())
    }
}

pub(crate) fn require_positive(params: &[(&str, u64)]) -> Result<()> {
    for (name, value) in params {
        if *value == 0 {
            return Err(Error::InvalidParameter(format!("{name} must be positive")));
        }
    }
    Ok(())
}

pub(crate) fn gcd_u64(x: u64, y: u64) -> u64 {
    x.gcd(&y)
}

/// `(am, bn)` as exact integers, rejecting zero parameters.
pub(crate) fn degrees(a: u64, b: u64, m: u64, n: u64) -> Result<(BigInt, BigInt)> {
    require_positive(&[("a", a), ("b", b), ("m", m), ("n", n)])?;
    Ok((BigInt::from(a) * m, BigInt::from(b) * n))
}

/// The canonical Bézout witness for `(a, b, m, n)`.
///
/// Among all positive solutions of `(bn)^(n+1) v - (am)^(m+1) u = ±1` this
/// picks the smallest `v`; when both signs are achievable at that `v`, `+1`
/// wins.
pub fn bezout_uv(a: u64, b: u64, m: u64, n: u64) -> Result<BezoutWitness> {
    let (am, bn) = degrees(a, b, m, n)?;
    let g = am.gcd(&bn);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            left: am.to_string(),
            right: bn.to_string(),
            gcd: g.to_string(),
        });
    }
    let lhs_pow: BigInt = Pow::pow(&bn, n + 1);
    let rhs_pow: BigInt = Pow::pow(&am, m + 1);
    // lhs_pow * v ≡ sign (mod rhs_pow)
    let inv = mod_inverse(&lhs_pow, &rhs_pow).expect("coprime powers are invertible");

    let solve = |sign: Sign| -> (BigInt, BigInt) {
        let s = BigInt::from(sign.as_i64());
        let mut v = (&inv * &s).mod_floor(&rhs_pow);
        if v.is_zero() {
            v = rhs_pow.clone();
        }
        loop {
            let u = (&lhs_pow * &v - &s) / &rhs_pow;
            if u.is_positive() {
                return (u, v);
            }
            v += &rhs_pow;
        }
    };

    let (u_plus, v_plus) = solve(Sign::Plus);
    let (u_minus, v_minus) = solve(Sign::Minus);
    let (u, v, sign) = if v_minus < v_plus {
        (u_minus, v_minus, Sign::Minus)
    } else {
        (u_plus, v_plus, Sign::Plus)
    };
    Ok(BezoutWitness { u, v, sign, lhs_pow, rhs_pow })
}

/// Exponent of `e^{2πi p/m} · e^{2πi q/n}` as an `mn`-th root of unity,
/// reduced to `[0, mn)`.
pub fn crt_merge(p: u64, m: u64, q: u64, n: u64) -> u64 {
    let mn = m as u128 * n as u128;
    ((n as u128 * (p % m) as u128 + m as u128 * (q % n) as u128) % mn) as u64
}

/// A class in the cyclic group `Z/modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrauerClass {
    modulus: u64,
    value: u64,
}

impl BrauerClass {
    pub fn new(modulus: u64, value: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        Ok(BrauerClass { modulus, value: value % modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `k · self`, in the same group.
    pub fn scale(&self, k: u64) -> BrauerClass {
        let value = (self.value as u128 * k as u128 % self.modulus as u128) as u64;
        BrauerClass { modulus: self.modulus, value }
    }

    /// Additive order of the class.
    pub fn period(&self) -> u64 {
        period(self)
    }
}

/// Order of `c` in `Z/k`: `k / gcd(value, k)`.
pub fn period(c: &BrauerClass) -> u64 {
    c.modulus / gcd_u64(c.value, c.modulus)
}
