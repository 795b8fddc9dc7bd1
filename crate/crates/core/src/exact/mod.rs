//! Exact scalar arithmetic: arbitrary-precision rationals, cyclotomic field
//! elements, and dense linear algebra over them.
//!
//! Every coefficient in the crate is a [`CycloNumber`], an element of some
//! cyclotomic field Q(zeta_N) stored in the power basis modulo the N-th
//! cyclotomic polynomial. Rationals are the order-1 case. Operations between
//! elements of different orders embed both into the compositum Q(zeta_lcm)
//! first, so mixed-order arithmetic is transparent.

mod cyclo;
mod matrix;

pub use cyclo::{frac_part, CycloNumber, Rational};
pub(crate) use cyclo::solve_rational;
pub use matrix::ExactMatrix;

use thiserror::Error;

/// Errors from exact arithmetic.
#[derive(Debug, Error)]
pub enum ExactError {
    /// Attempt to invert zero.
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    /// Linear system has no unique solution. Downstream this signals a
    /// degenerate pairing, i.e. a Poincaré-duality failure.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    /// Incompatible shapes.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Parse a rational from its canonical `p/q` (or `p`) form.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}
