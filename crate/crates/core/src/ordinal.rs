//! Ordinals below ω², written `ω·a + b`.
//!
//! Every game value produced by this crate is bounded by `ω·r + ℓ` for a
//! finitely generated abelian group of rank `r` and torsion length `ℓ`, so
//! the two-coefficient form is all that is ever needed.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `ω·omega_coeff + finite_part`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    omega_coeff: BigUint,
    finite_part: BigUint,
}

impl Ordinal {
    pub fn new(omega_coeff: impl Into<BigUint>, finite_part: impl Into<BigUint>) -> Self {
        Ordinal {
            omega_coeff: omega_coeff.into(),
            finite_part: finite_part.into(),
        }
    }

    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn finite(n: u64) -> Self {
        Ordinal::new(0u32, n)
    }

    /// The first infinite ordinal.
    pub fn omega() -> Self {
        Ordinal::new(1u32, 0u32)
    }

    pub fn omega_coeff(&self) -> &BigUint {
        &self.omega_coeff
    }

    pub fn finite_part(&self) -> &BigUint {
        &self.finite_part
    }

    pub fn is_finite(&self) -> bool {
        self.omega_coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.omega_coeff.is_zero() && self.finite_part.is_zero()
    }

    /// The value as a machine integer, when it is finite and fits.
    pub fn as_u64(&self) -> Option<u64> {
        if self.is_finite() {
            self.finite_part.to_u64()
        } else {
            None
        }
    }

    /// Hessenberg sum: coefficient-wise addition.
    pub fn natural_sum(&self, other: &Ordinal) -> Ordinal {
        Ordinal {
            omega_coeff: &self.omega_coeff + &other.omega_coeff,
            finite_part: &self.finite_part + &other.finite_part,
        }
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::finite(n)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.omega_coeff
            .cmp(&other.omega_coeff)
            .then_with(|| self.finite_part.cmp(&other.finite_part))
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Least ordinal missing from `values`. For a finite collection this is
/// always finite: it is the least natural number not among the finite members.
pub fn mex<'a, I>(values: I) -> Ordinal
where
    I: IntoIterator<Item = &'a Ordinal>,
{
    let finite: BTreeSet<&BigUint> = values
        .into_iter()
        .filter(|v| v.is_finite())
        .map(|v| &v.finite_part)
        .collect();
    let mut candidate = BigUint::zero();
    for v in finite {
        match v.cmp(&candidate) {
            Ordering::Equal => candidate += BigUint::one(),
            Ordering::Greater => break,
            Ordering::Less => {}
        }
    }
    Ordinal {
        omega_coeff: BigUint::zero(),
        finite_part: candidate,
    }
}

/// Machine-integer mex used on hot solver paths.
pub fn mex_u64<I>(values: I) -> u64
where
    I: IntoIterator<Item = u64>,
{
    let mut seen: Vec<u64> = values.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    let mut candidate = 0u64;
    for v in seen {
        if v == candidate {
            candidate += 1;
        } else if v > candidate {
            break;
        }
    }
    candidate
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.omega_coeff.is_zero() {
            return write!(f, "{}", self.finite_part);
        }
        if self.omega_coeff.is_one() {
            write!(f, "w")?;
        } else {
            write!(f, "w*{}", self.omega_coeff)?;
        }
        if !self.finite_part.is_zero() {
            write!(f, "+{}", self.finite_part)?;
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    /// Accepts `b`, `w`, `w+b`, `w*a`, `w*a+b`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("malformed ordinal {s:?}"));
        let digits = |t: &str| -> Result<BigUint> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigUint>().map_err(|_| bad())
        };
        let Some(rest) = text.strip_prefix('w') else {
            return Ok(Ordinal {
                omega_coeff: BigUint::zero(),
                finite_part: digits(&text)?,
            });
        };
        let (coeff_text, finite_text) = match rest.split_once('+') {
            Some((c, b)) => (c, Some(b)),
            None => (rest, None),
        };
        let omega_coeff = match coeff_text.strip_prefix('*') {
            Some(c) => digits(c)?,
            None if coeff_text.is_empty() => BigUint::one(),
            None => return Err(bad()),
        };
        let finite_part = match finite_text {
            Some(b) => digits(b)?,
            None => BigUint::zero(),
        };
        if omega_coeff.is_zero() {
            return Err(bad());
        }
        Ok(Ordinal {
            omega_coeff,
            finite_part,
        })
    }
}
