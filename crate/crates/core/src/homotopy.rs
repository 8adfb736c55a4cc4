//! Homotopy groups of the unitary family and its central quotients in the
//! tabulated range, as [`FgabGroup`] values.
//!
//! * `π_i(U_n)`: `0` for even `i < 2n`, `Z` for odd `i < 2n`, `Z/n!` at `i = 2n`.
//! * `π_i(SU_n)`: `0` at `i = 1`, otherwise as `U_n`.
//! * `π_i(SU_{am}/μ_m)`: `Z/m` at `i = 1`, otherwise as `SU_{am}`.
//! * `π_i(U_{am}/μ_m)`: `Z ⊕ Z/m` at `i = 1`, otherwise as `SU_{am}/μ_m`.
//! * `PU_n = SU_n/μ_n`, and `π_i(BG) = π_{i-1}(G)`.
//!
//! Every listed group is connected, so `π_0` is trivial. Degrees above `2·deg`
//! are rejected rather than extrapolated.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fgab::FgabGroup;

/// A space from the cast: a matrix group or the classifying space of one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceSpec {
    U { n: u64 },
    SU { n: u64 },
    /// `SU_{am}/μ_m`
    SUQuot { a: u64, m: u64 },
    /// `U_{am}/μ_m`
    UQuot { a: u64, m: u64 },
    PU { n: u64 },
    B(Box<SpaceSpec>),
}

impl SpaceSpec {
    pub fn classifying(self) -> SpaceSpec {
        SpaceSpec::B(Box::new(self))
    }

    /// Matrix size of the underlying group.
    pub fn degree(&self) -> u64 {
        match self {
            SpaceSpec::U { n } | SpaceSpec::SU { n } | SpaceSpec::PU { n } => *n,
            SpaceSpec::SUQuot { a, m } | SpaceSpec::UQuot { a, m } => a.saturating_mul(*m),
            SpaceSpec::B(inner) => inner.degree(),
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = |name: &str, x: u64| {
            if x == 0 {
                Err(Error::InvalidParameter(format!("{name} must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            SpaceSpec::U { n } | SpaceSpec::SU { n } | SpaceSpec::PU { n } => positive("n", *n),
            SpaceSpec::SUQuot { a, m } | SpaceSpec::UQuot { a, m } => {
                positive("a", *a)?;
                positive("m", *m)?;
                a.checked_mul(*m)
                    .map(|_| ())
                    .ok_or_else(|| Error::InvalidParameter("a·m overflows".into()))
            }
            SpaceSpec::B(inner) => inner.validate(),
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::U { n } => write!(f, "U_{n}"),
            SpaceSpec::SU { n } => write!(f, "SU_{n}"),
            SpaceSpec::SUQuot { a, m } => write!(f, "SU_{}/μ_{m}", a * m),
            SpaceSpec::UQuot { a, m } => write!(f, "U_{}/μ_{m}", a * m),
            SpaceSpec::PU { n } => write!(f, "PU_{n}"),
            SpaceSpec::B(inner) => write!(f, "B{inner}"),
        }
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn unitary_pi(i: u64, n: u64) -> Result<FgabGroup> {
    let limit = 2 * n;
    if i > limit {
        return Err(Error::OutOfStableRange { degree: i, limit });
    }
    Ok(if i == limit {
        FgabGroup::cyclic(factorial(n))
    } else if i % 2 == 1 {
        FgabGroup::free(1)
    } else {
        FgabGroup::trivial()
    })
}

/// `π_i(s)`.
pub fn pi(i: u64, s: &SpaceSpec) -> Result<FgabGroup> {
    s.validate()?;
    match s {
        SpaceSpec::B(inner) => {
            if i == 0 {
                return Ok(FgabGroup::trivial());
            }
            pi(i - 1, inner).map_err(|e| match e {
                Error::OutOfStableRange { degree, limit } => {
                    Error::OutOfStableRange { degree: degree + 1, limit: limit + 1 }
                }
                other => other,
            })
        }
        _ if i == 0 => Ok(FgabGroup::trivial()),
        SpaceSpec::U { n } => unitary_pi(i, *n),
        SpaceSpec::SU { n } => {
            let g = unitary_pi(i, *n)?;
            Ok(if i == 1 { FgabGroup::trivial() } else { g })
        }
        SpaceSpec::SUQuot { a, m } => {
            let g = pi(i, &SpaceSpec::SU { n: a * m })?;
            Ok(if i == 1 { FgabGroup::cyclic(*m) } else { g })
        }
        SpaceSpec::UQuot { a, m } => {
            let g = pi(i, &SpaceSpec::SUQuot { a: *a, m: *m })?;
            Ok(if i == 1 { FgabGroup::with_cyclic(1, &[BigInt::from(*m)]) } else { g })
        }
        SpaceSpec::PU { n } => pi(i, &SpaceSpec::SUQuot { a: 1, m: *n }),
    }
}

/// Largest degree `i` for which [`pi`] answers.
pub fn max_degree(s: &SpaceSpec) -> u64 {
    match s {
        SpaceSpec::B(inner) => max_degree(inner) + 1,
        other => 2 * other.degree(),
    }
}
