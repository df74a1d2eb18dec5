//! Exact arithmetic over Z[q, q^-1] and Q(q), plus quantum integers.

mod laurent;
mod rational;

pub use laurent::LaurentPoly;
pub use rational::RationalQ;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactqError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor} (remainder {remainder})")]
    Inexact {
        dividend: String,
        divisor: String,
        remainder: String,
    },
    #[error("cannot parse {input:?} at position {pos}: {msg}")]
    Parse { input: String, pos: usize, msg: String },
    #[error("q-double factorial needs an even nonnegative argument, got {0}")]
    OddDoubleFactorial(i64),
}

/// Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [-n] = -[n].
pub fn qint(n: i64) -> LaurentPoly {
    if n < 0 {
        return -qint(-n);
    }
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// [n]! for n >= 0.
pub fn qfact(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

/// [m][m-2]...[2] for even m >= 0.
pub fn qdblfact(m: i64) -> Result<LaurentPoly, ExactqError> {
    if m < 0 || m % 2 != 0 {
        return Err(ExactqError::OddDoubleFactorial(m));
    }
    Ok((1..=m / 2).fold(LaurentPoly::one(), |acc, k| &acc * &qint(2 * k)))
}

pub fn bar(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

pub fn exact_div(p: &LaurentPoly, d: &LaurentPoly) -> Result<LaurentPoly, ExactqError> {
    p.exact_div(d)
}
