//! Cyclotomic field elements.
//!
//! A [`CycloNumber`] of order N is a vector of phi(N) rationals c_0..c_{phi(N)-1}
//! representing sum_k c_k zeta_N^k in the power basis of Q(zeta_N) reduced
//! modulo the N-th cyclotomic polynomial. Since Phi_N is irreducible over Q
//! this representation is canonical at a fixed order; elements of different
//! orders are compared after embedding into the compositum Q(zeta_lcm).
//!
//! Conventions used throughout the crate:
//!   i       = zeta_4
//!   sqrt(2) = zeta_8 + zeta_8^-1   (the real-positive embedding)
//!   exp(2 pi i / 3) = zeta_3

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{divisors, euler_phi, ExactError};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Fractional part of a rational, in [0, 1).
pub fn frac_part(x: &Rational) -> Rational {
    let fl = x.floor();
    x - fl
}

// ---------------------------------------------------------------------------
// dense polynomial helpers over Rational (coefficients low-to-high)
// ---------------------------------------------------------------------------

fn poly_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    debug_assert!(m.last().map_or(false, |c| c.is_one()));
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() - 1 >= dm && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for k in 0..dm {
            let delta = &lead * &m[k];
            r[dr - dm + k] -= delta;
        }
        r.pop();
        poly_trim(&mut r);
        if dr == dm {
            break;
        }
    }
    r
}

/// Exact division of `a` by `b`, panicking if the division is not exact.
fn poly_exact_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_b = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead_b;
        q[dr - db] = c.clone();
        for k in 0..=db {
            let delta = &c * &b[k];
            r[dr - db + k] -= delta;
        }
        poly_trim(&mut r);
        if dr == db {
            break;
        }
    }
    assert!(
        r.len() == 1 && r[0].is_zero(),
        "poly_exact_div: division not exact"
    );
    if q.is_empty() {
        q.push(Rational::zero());
    }
    q
}

/// The N-th cyclotomic polynomial, monic, coefficients low-to-high.
///
/// Computed as (x^n - 1) / prod of Phi_d over proper divisors d of n,
/// memoized globally.
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Rational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![-Rational::one(), Rational::one()]
    } else {
        let mut num = vec![Rational::zero(); (n + 1) as usize];
        num[0] = -Rational::one();
        num[n as usize] = Rational::one();
        let mut out = num;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_poly(d);
            out = poly_exact_div(&out, &phi_d);
        }
        out
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Solve the (possibly overdetermined) rational system `A x = b`, returning
/// `None` when inconsistent. `A` is given by rows; columns of the solution
/// correspond to `A`'s columns.
pub(crate) fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for c in col..=cols {
            let v = &m[row][c] / &inv;
            m[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    // inconsistent if a zero row has nonzero rhs
    for r in row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// CycloNumber
// ---------------------------------------------------------------------------

/// An element of the cyclotomic field Q(zeta_N).
#[derive(Debug, Clone)]
pub struct CycloNumber {
    order: u64,
    /// Length euler_phi(order); coefficient k multiplies zeta_N^k.
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    fn from_poly(order: u64, poly: &[Rational]) -> Self {
        let phi = euler_phi(order) as usize;
        let reduced = poly_rem(poly, &cyclotomic_poly(order));
        let mut coeffs = reduced;
        coeffs.resize(phi, Rational::zero());
        CycloNumber { order, coeffs }
    }

    /// Zero, at order 1.
    pub fn zero() -> Self {
        CycloNumber {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    /// One, at order 1.
    pub fn one() -> Self {
        CycloNumber {
            order: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNumber {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// zeta_N^k in canonical form: the fraction k/N is reduced first, so the
    /// order of the result divides N (e.g. `root_of_unity(6, 24)` is returned
    /// at order 4, where it equals i).
    pub fn root_of_unity(k: i64, order: u64) -> Self {
        assert!(order >= 1, "root_of_unity: order must be >= 1");
        let k = k.rem_euclid(order as i64) as u64;
        if k == 0 {
            return Self::one();
        }
        let g = k.gcd(&order);
        let (k, order) = (k / g, order / g);
        let mut poly = vec![Rational::zero(); k as usize + 1];
        poly[k as usize] = Rational::one();
        Self::from_poly(order, &poly)
    }

    /// The imaginary unit, zeta_4.
    pub fn i() -> Self {
        Self::root_of_unity(1, 4)
    }

    /// sqrt(2) = zeta_8 + zeta_8^-1, the real-positive embedding.
    pub fn sqrt2() -> Self {
        &Self::root_of_unity(1, 8) + &Self::root_of_unity(7, 8)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// Embed into Q(zeta_target); `target` must be a multiple of the order.
    pub fn promote(&self, target: u64) -> Self {
        assert!(
            target % self.order == 0,
            "promote: {} does not divide {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let k = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * k] = c.clone();
        }
        Self::from_poly(target, &poly)
    }

    /// Embed both operands into the compositum Q(zeta_lcm).
    pub fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = a.order.lcm(&b.order);
        (a.promote(l), b.promote(l))
    }

    /// Rewrite at the smallest cyclotomic subfield containing the value.
    ///
    /// Tries each divisor d of the order and solves the linear system that
    /// expresses the value in the power basis of Q(zeta_d).
    pub fn canonicalized(&self) -> Self {
        for d in divisors(self.order) {
            if d == self.order {
                break;
            }
            let phi_d = euler_phi(d) as usize;
            let phi_n = self.coeffs.len();
            // column j = coefficients of zeta_n^(j * n/d)
            let mut cols = Vec::with_capacity(phi_d);
            for j in 0..phi_d {
                let mut poly = vec![Rational::zero(); j * (self.order / d) as usize + 1];
                *poly.last_mut().unwrap() = Rational::one();
                let reduced = Self::from_poly(self.order, &poly);
                cols.push(reduced.coeffs);
            }
            let rows: Vec<Vec<Rational>> = (0..phi_n)
                .map(|r| (0..phi_d).map(|c| cols[c][r].clone()).collect())
                .collect();
            if let Some(x) = solve_rational(&rows, &self.coeffs) {
                return CycloNumber {
                    order: d,
                    coeffs: x,
                };
            }
        }
        self.clone()
    }

    /// The value as a rational, when it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        let c = self.canonicalized();
        if c.order == 1 {
            Some(c.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // extended Euclid in Q[x] against Phi_N, which is irreducible
        let modulus = cyclotomic_poly(self.order);
        let mut r0 = modulus.clone();
        let mut r1 = self.coeffs.clone();
        poly_trim(&mut r1);
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            // r0 = q * r1 + r2
            let lead = r1.last().unwrap().clone();
            let d1 = r1.len() - 1;
            let mut q = vec![Rational::zero(); r0.len().saturating_sub(d1).max(1)];
            let mut r2 = r0.clone();
            while r2.len() - 1 >= d1 && !(r2.len() == 1 && r2[0].is_zero()) {
                let dr = r2.len() - 1;
                let c = &r2[dr] / &lead;
                q[dr - d1] = c.clone();
                for k in 0..=d1 {
                    let delta = &c * &r1[k];
                    r2[dr - d1 + k] -= delta;
                }
                poly_trim(&mut r2);
                if dr == d1 {
                    break;
                }
            }
            let qs1 = poly_mul(&q, &s1);
            let mut s2 = s0.clone();
            s2.resize(s2.len().max(qs1.len()), Rational::zero());
            for (k, c) in qs1.iter().enumerate() {
                s2[k] -= c;
            }
            poly_trim(&mut s2);
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant gcd; inverse = s0 / r0
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].clone();
        let inv_coeffs: Vec<Rational> = s0.iter().map(|c| c / &g).collect();
        Ok(Self::from_poly(self.order, &inv_coeffs))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Render to the canonical JSON form `{"order": N, "coeffs": ["p/q", ...]}`,
    /// at the minimal cyclotomic order.
    pub fn to_json(&self) -> serde_json::Value {
        let c = self.canonicalized();
        serde_json::json!({
            "order": c.order,
            "coeffs": c.coeffs.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (mut a, b) = CycloNumber::unify(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        let (mut a, b) = CycloNumber::unify(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c = -c.clone();
        }
        a
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.is_zero() || rhs.is_zero() {
            return CycloNumber::zero();
        }
        // fast path: both rational
        if self.order == 1 && rhs.order == 1 {
            return CycloNumber::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        if self.order == 1 {
            let mut out = rhs.clone();
            for c in out.coeffs.iter_mut() {
                *c *= &self.coeffs[0];
            }
            return out;
        }
        if rhs.order == 1 {
            return rhs * self;
        }
        let (a, b) = CycloNumber::unify(self, rhs);
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        CycloNumber::from_poly(a.order, &prod)
    }
}

impl Div for &CycloNumber {
    type Output = CycloNumber;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &CycloNumber) -> CycloNumber {
        self * &rhs.inv().expect("division by zero")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonicalized();
        if c.order == 1 {
            return write!(f, "{}", c.coeffs[0]);
        }
        let var = if c.order == 4 {
            "i".to_string()
        } else {
            format!("z{}", c.order)
        };
        let mut first = true;
        for (k, coeff) in c.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff.is_negative() { "-" } else { "+" };
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                let pow = if k == 1 {
                    var.clone()
                } else {
                    format!("{var}^{k}")
                };
                if mag.is_one() {
                    write!(f, "{pow}")?;
                } else {
                    write!(f, "{mag}*{pow}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let c = self.canonicalized();
        CycloRepr {
            order: c.order,
            coeffs: c.coeffs.iter().map(|r| r.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(deserializer)?;
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let phi = euler_phi(repr.order) as usize;
        if repr.coeffs.len() != phi {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for order {}, got {}",
                phi,
                repr.order,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<Rational>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycloNumber {
            order: repr.order,
            coeffs,
        })
    }
}
