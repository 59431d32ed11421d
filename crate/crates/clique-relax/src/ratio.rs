//! Exact rational threshold `a/b` with `0 < a < b`, `gcd(a,b) = 1`.
//!
//! Degree thresholds like `ceil(gamma * (|S|-1))` are brittle under floating
//! point, so every comparison here stays in integer arithmetic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatioError {
    #[error("ratio must satisfy 0 < a < b, got {0}/{1}")]
    OutOfRange(u64, u64),
    #[error("malformed ratio '{0}', expected 'A/B' with integers A, B")]
    Malformed(String),
}

/// A rational strictly between 0 and 1, stored in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Ratio, RatioError> {
        if num == 0 || den == 0 || num >= den {
            return Err(RatioError::OutOfRange(num, den));
        }
        let g = gcd(num, den);
        Ok(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// `ceil(a * x / b)` on nonnegative integers, computed as
    /// `(a*x + b - 1) div b`.
    pub fn ceil_mul(&self, x: u64) -> u64 {
        let prod = (self.num as u128) * (x as u128);
        prod.div_ceil(self.den as u128) as u64
    }

    /// Whether `lhs >= a * x / b`, exactly: `lhs * b >= a * x`.
    pub fn le_times(&self, x: u64, lhs: u64) -> bool {
        (lhs as u128) * (self.den as u128) >= (self.num as u128) * (x as u128)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = RatioError;

    /// Accepts only the exact fraction form `A/B`; decimals are rejected to
    /// preserve exact-arithmetic semantics.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| RatioError::Malformed(s.to_string()))?;
        let num: u64 = a
            .trim()
            .parse()
            .map_err(|_| RatioError::Malformed(s.to_string()))?;
        let den: u64 = b
            .trim()
            .parse()
            .map_err(|_| RatioError::Malformed(s.to_string()))?;
        Ratio::new(num, den)
    }
}

impl TryFrom<String> for Ratio {
    type Error = RatioError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Ratio> for String {
    fn from(r: Ratio) -> String {
        r.to_string()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
