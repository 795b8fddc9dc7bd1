//! Weighted-projective combinatorics.
//!
//! A weight system w = (w_0, ..., w_n) with gcd 1 determines the orbifold
//! P(w). This module provides:
//!
//! - the Gorenstein test (every w_i divides the weight sum) and the complete
//!   enumeration of Gorenstein weight systems in a fixed dimension via
//!   Egyptian fractions 1 = sum 1/x_i;
//! - ages and twisted sectors of P(w): the rationals gamma in [0,1) with
//!   gamma * w_i integral for some i, each carrying its fixed locus
//!   P(w_{I(g)}) and age(gamma) = sum_j { gamma * w_j };
//! - the fan of |P(w)| in Z^n, with rays g_0..g_n satisfying
//!   sum w_i g_i = 0 (for w_0 = 1 the normalization g_i = e_i,
//!   g_0 = -(w_1,...,w_n) is used so that coordinates match the usual
//!   pictures; otherwise the relation lattice is split by gcd elimination);
//! - stellar subdivision and validators certifying that a refinement is a
//!   smooth, crepant resolution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{frac_part, solve_rational, Rational};

#[derive(Debug, Error)]
pub enum WpsError {
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("weights are not well-formed: {0}")]
    NotWellFormed(String),
    #[error("no built-in resolution for weights {0}; supply subdivision rays explicitly")]
    UnsupportedFamily(String),
}

#[derive(Debug, Error)]
pub enum FanError {
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("ray {0:?} is not primitive")]
    NonPrimitiveRay(Vec<i64>),
    #[error("ray {0:?} lies outside the support of the fan")]
    RayOutsideSupport(Vec<i64>),
    #[error("not a refinement: {0}")]
    NotARefinement(String),
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

/// A weight system (w_0, ..., w_n), stored sorted ascending, with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weights {
    w: Vec<u64>,
}

impl Weights {
    pub fn new(mut w: Vec<u64>) -> Result<Self, WpsError> {
        if w.len() < 2 {
            return Err(WpsError::InvalidWeights(
                "need at least two weights".into(),
            ));
        }
        if w.iter().any(|&x| x == 0) {
            return Err(WpsError::InvalidWeights("weights must be positive".into()));
        }
        w.sort_unstable();
        let g = w.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(WpsError::InvalidWeights(format!(
                "gcd of weights is {g}, not 1 (not an orbifold)"
            )));
        }
        Ok(Weights { w })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.w
    }

    /// Dimension n of P(w); there are n + 1 weights.
    pub fn dim(&self) -> usize {
        self.w.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.w.iter().sum()
    }

    /// Gorenstein test: every w_i divides the weight sum.
    pub fn is_gorenstein(&self) -> bool {
        let s = self.total();
        self.w.iter().all(|&x| s % x == 0)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.w
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All Gorenstein weight systems of the given dimension.
///
/// Enumerates the solutions of 1 = 1/x_0 + ... + 1/x_n with x ascending,
/// maps x_i to L/x_i with L = lcm(x), divides by the gcd and deduplicates.
/// At each position the search range is max(previous, ceil(1/r)) ..
/// floor(m/r) for remaining value r and m terms left, which makes the
/// enumeration complete and finite.
pub fn enumerate_gorenstein(dim: usize) -> Vec<Weights> {
    assert!(dim >= 1);
    let mut solutions = Vec::new();
    let mut prefix = Vec::with_capacity(dim + 1);
    egyptian_search(&mut prefix, Rational::one(), dim + 1, &mut solutions);
    let mut out: BTreeSet<Vec<u64>> = BTreeSet::new();
    for xs in solutions {
        let l = xs.iter().fold(1u64, |acc, &x| acc.lcm(&x));
        let mut w: Vec<u64> = xs.iter().map(|&x| l / x).collect();
        let g = w.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        for x in w.iter_mut() {
            *x /= g;
        }
        w.sort_unstable();
        out.insert(w);
    }
    out.into_iter()
        .map(|w| Weights::new(w).expect("enumeration produces valid weights"))
        .collect()
}

fn egyptian_search(
    prefix: &mut Vec<u64>,
    remaining: Rational,
    terms_left: usize,
    out: &mut Vec<Vec<u64>>,
) {
    if terms_left == 0 {
        if remaining.is_zero() {
            out.push(prefix.clone());
        }
        return;
    }
    if remaining <= Rational::zero() {
        return;
    }
    let lo_bound = (Rational::one() / &remaining).ceil().to_integer();
    let lo = prefix
        .last()
        .copied()
        .unwrap_or(1)
        .max(u64::try_from(lo_bound).unwrap_or(1));
    let hi_bound = (Rational::from(BigInt::from(terms_left as u64)) / &remaining)
        .floor()
        .to_integer();
    let Ok(hi) = u64::try_from(hi_bound) else {
        return;
    };
    for x in lo..=hi {
        let term = Rational::new(BigInt::one(), BigInt::from(x));
        prefix.push(x);
        egyptian_search(prefix, &remaining - &term, terms_left - 1, out);
        prefix.pop();
    }
}

// ---------------------------------------------------------------------------
// Ages and twisted sectors
// ---------------------------------------------------------------------------

/// age(gamma) = sum_j { gamma * w_j }, the sum of fractional parts.
pub fn age(gamma: &Rational, w: &Weights) -> Rational {
    assert!(
        *gamma >= Rational::zero() && *gamma < Rational::one(),
        "age: gamma must lie in [0, 1)"
    );
    let mut total = Rational::zero();
    for &wi in w.as_slice() {
        total += frac_part(&(gamma * Rational::from(BigInt::from(wi))));
    }
    total
}

/// A twisted sector of P(w), indexed by gamma in [0,1).
#[derive(Debug, Clone, Serialize)]
pub struct Sector {
    /// gamma as a canonical rational in [0,1); serialized as "p/q".
    #[serde(serialize_with = "serialize_rational")]
    pub gamma: Rational,
    /// I(g) = { i : gamma * w_i is an integer }, indices into the sorted weights.
    pub fixed_indices: Vec<usize>,
    #[serde(serialize_with = "serialize_rational")]
    pub age: Rational,
    /// (w_i) for i in I(g); the sector is P(these weights).
    pub sector_weights: Vec<u64>,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// All twisted sectors of P(w), sorted by gamma. The untwisted sector
/// gamma = 0 comes first.
pub fn twisted_sectors(w: &Weights) -> Vec<Sector> {
    let mut gammas: BTreeSet<Rational> = BTreeSet::new();
    for &wi in w.as_slice() {
        for k in 0..wi {
            gammas.insert(Rational::new(BigInt::from(k), BigInt::from(wi)));
        }
    }
    gammas
        .into_iter()
        .map(|gamma| {
            let fixed_indices: Vec<usize> = w
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &wi)| (&gamma * Rational::from(BigInt::from(wi))).is_integer())
                .map(|(i, _)| i)
                .collect();
            debug_assert!(!fixed_indices.is_empty());
            let sector_weights = fixed_indices.iter().map(|&i| w.as_slice()[i]).collect();
            Sector {
                age: age(&gamma, w),
                gamma,
                fixed_indices,
                sector_weights,
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Fans
// ---------------------------------------------------------------------------

/// A complete simplicial fan in Z^n, given by primitive rays and maximal
/// cones of full dimension.
///
/// Validation certifies: primitive pairwise-distinct rays; each max cone
/// simplicial of full dimension; every wall ((n-1)-face of a max cone)
/// shared by exactly two max cones lying on opposite sides of its
/// hyperplane; and connectedness through walls. For a fan these conditions
/// mean that the support has no boundary, hence is all of Q^n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

fn vec_gcd(v: &[i64]) -> u64 {
    v.iter().fold(0u64, |acc, &x| acc.gcd(&(x.unsigned_abs())))
}

pub(crate) fn is_primitive(v: &[i64]) -> bool {
    vec_gcd(v) == 1
}

fn to_rational_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(BigInt::from(x))).collect()
}

/// Determinant of the integer matrix with the given rows.
fn int_det(rows: &[&[i64]]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| to_rational_vec(r)).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det *= &m[col][col];
        let pivot = m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// A nonzero rational vector orthogonal to all given (independent) rows.
fn kernel_vector(rows: &[Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    // eliminate to reduced echelon form, then set one free variable to 1
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for c in 0..n {
            m[row][c] = &m[row][c] / &pivot;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); n];
    v[free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][free].clone();
    }
    Some(v)
}

fn dot(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, &y)| x * Rational::from(BigInt::from(y)))
        .sum()
}

impl Fan {
    /// Build and validate a fan.
    pub fn new(
        dim: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Self, FanError> {
        let mut cones = max_cones;
        for cone in cones.iter_mut() {
            cone.sort_unstable();
        }
        let fan = Fan {
            dim,
            rays,
            max_cones: cones,
        };
        fan.validate()?;
        Ok(fan)
    }

    fn validate(&self) -> Result<(), FanError> {
        let n = self.dim;
        if n == 0 {
            return Err(FanError::InvalidFan("dimension must be positive".into()));
        }
        for ray in &self.rays {
            if ray.len() != n {
                return Err(FanError::InvalidFan(format!(
                    "ray {ray:?} has wrong dimension"
                )));
            }
            if !is_primitive(ray) {
                return Err(FanError::NonPrimitiveRay(ray.clone()));
            }
        }
        let distinct: BTreeSet<&Vec<i64>> = self.rays.iter().collect();
        if distinct.len() != self.rays.len() {
            return Err(FanError::InvalidFan("duplicate rays".into()));
        }
        if self.max_cones.is_empty() {
            return Err(FanError::InvalidFan("no maximal cones".into()));
        }
        for cone in &self.max_cones {
            if cone.len() != n {
                return Err(FanError::InvalidFan(format!(
                    "cone {cone:?} is not of full dimension {n}"
                )));
            }
            let set: BTreeSet<usize> = cone.iter().copied().collect();
            if set.len() != n || cone.iter().any(|&i| i >= self.rays.len()) {
                return Err(FanError::InvalidFan(format!("bad ray indices in {cone:?}")));
            }
            let rows: Vec<&[i64]> = cone.iter().map(|&i| self.rays[i].as_slice()).collect();
            if int_det(&rows).is_zero() {
                return Err(FanError::InvalidFan(format!(
                    "cone {cone:?} is degenerate"
                )));
            }
        }
        // wall condition: each (n-1)-face of a max cone belongs to exactly two
        // max cones, on opposite sides of the wall hyperplane
        let mut wall_map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, cone) in self.max_cones.iter().enumerate() {
            for omit in 0..n {
                let mut wall = cone.clone();
                wall.remove(omit);
                wall_map.entry(wall).or_default().push(ci);
            }
        }
        for (wall, cones) in &wall_map {
            if cones.len() != 2 {
                return Err(FanError::InvalidFan(format!(
                    "wall {wall:?} belongs to {} max cones (want 2): fan is not complete",
                    cones.len()
                )));
            }
            let rows: Vec<Vec<Rational>> = wall
                .iter()
                .map(|&i| to_rational_vec(&self.rays[i]))
                .collect();
            let normal = kernel_vector(&rows, n).ok_or_else(|| {
                FanError::InvalidFan(format!("wall {wall:?} spans too small a space"))
            })?;
            let mut signs = Vec::new();
            for &ci in cones {
                let extra = self.max_cones[ci]
                    .iter()
                    .find(|i| !wall.contains(i))
                    .unwrap();
                let s = dot(&normal, &self.rays[*extra]);
                if s.is_zero() {
                    return Err(FanError::InvalidFan(format!(
                        "cone {:?} is degenerate across wall {wall:?}",
                        self.max_cones[ci]
                    )));
                }
                signs.push(s.is_positive());
            }
            if signs[0] == signs[1] {
                return Err(FanError::InvalidFan(format!(
                    "cones overlap across wall {wall:?}"
                )));
            }
        }
        // connectivity through walls
        let mut seen = vec![false; self.max_cones.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for omit in 0..n {
                let mut wall = self.max_cones[c].clone();
                wall.remove(omit);
                for &other in &wall_map[&wall] {
                    if !seen[other] {
                        seen[other] = true;
                        stack.push(other);
                    }
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(FanError::InvalidFan("fan is not connected".into()));
        }
        Ok(())
    }

    /// All (n-1)-dimensional cones, each a sorted set of ray indices.
    pub fn walls(&self) -> Vec<Vec<usize>> {
        let mut set = BTreeSet::new();
        for cone in &self.max_cones {
            for omit in 0..self.dim {
                let mut wall = cone.clone();
                wall.remove(omit);
                set.insert(wall);
            }
        }
        set.into_iter().collect()
    }

    /// Barycentric coordinates of `v` in the max cone `cone` (indices into
    /// `rays`), when all coordinates are nonnegative.
    pub fn cone_coordinates(&self, cone: &[usize], v: &[i64]) -> Option<Vec<Rational>> {
        let n = self.dim;
        // rows of the system: coordinate k of sum a_i g_i = v
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|k| {
                cone.iter()
                    .map(|&i| Rational::from(BigInt::from(self.rays[i][k])))
                    .collect()
            })
            .collect();
        let rhs = to_rational_vec(v);
        let a = solve_rational(&rows, &rhs)?;
        if a.iter().all(|c| !c.is_negative()) {
            Some(a)
        } else {
            None
        }
    }

    /// The first max cone containing `v`, with its coordinates.
    pub fn find_containing_cone(&self, v: &[i64]) -> Option<(usize, Vec<Rational>)> {
        self.max_cones
            .iter()
            .enumerate()
            .find_map(|(ci, cone)| self.cone_coordinates(cone, v).map(|a| (ci, a)))
    }

    /// Index of a ray, if present.
    pub fn ray_index(&self, v: &[i64]) -> Option<usize> {
        self.rays.iter().position(|r| r == v)
    }
}

/// The fan of |P(w)| in Z^n.
///
/// For w_0 = 1 the normalization g_i = e_i (i >= 1), g_0 = -(w_1,...,w_n)
/// is used. Otherwise the rank-one relation lattice generated by w inside
/// Z^{n+1} is split off by unimodular row operations (gcd elimination, the
/// Smith normal form of the single column w), and the rays are the images
/// of the standard basis vectors.
pub fn build_wps_fan(w: &Weights) -> Result<Fan, WpsError> {
    let n = w.dim();
    let ws = w.as_slice();
    let rays: Vec<Vec<i64>> = if ws[0] == 1 {
        let mut rays = vec![ws[1..].iter().map(|&x| -(x as i64)).collect::<Vec<i64>>()];
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            rays.push(e);
        }
        rays
    } else {
        // gcd elimination: find unimodular U with U w = e_1, then take rows 2..
        let mut col: Vec<i64> = ws.iter().map(|&x| x as i64).collect();
        let m = col.len();
        let mut u: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                let mut row = vec![0i64; m];
                row[i] = 1;
                row
            })
            .collect();
        loop {
            let nonzero: Vec<usize> = (0..m).filter(|&i| col[i] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let &p = nonzero
                .iter()
                .min_by_key(|&&i| col[i].unsigned_abs())
                .unwrap();
            for &j in &nonzero {
                if j == p {
                    continue;
                }
                let q = col[j].div_euclid(col[p]);
                if q != 0 {
                    col[j] -= q * col[p];
                    for k in 0..m {
                        u[j][k] -= q * u[p][k];
                    }
                }
            }
        }
        let p = (0..m).find(|&i| col[i] != 0).expect("weights are nonzero");
        col.swap(0, p);
        u.swap(0, p);
        if col[0] < 0 {
            for k in 0..m {
                u[0][k] = -u[0][k];
            }
        }
        // rays are the columns of U with the first row dropped
        (0..m)
            .map(|i| (1..m).map(|r| u[r][i]).collect())
            .collect()
    };
    for ray in &rays {
        if !is_primitive(ray) {
            return Err(WpsError::NotWellFormed(format!(
                "ray {ray:?} of the fan of P{w} is not primitive"
            )));
        }
    }
    let max_cones: Vec<Vec<usize>> = (0..=n)
        .map(|omit| (0..=n).filter(|&i| i != omit).collect())
        .collect();
    Fan::new(n, rays, max_cones)
        .map_err(|e| WpsError::InvalidWeights(format!("fan of P{w} invalid: {e}")))
}

/// Stellar subdivision of a fan at a primitive ray in its support.
///
/// Every max cone containing the ray is replaced by the cones obtained by
/// swapping the new ray for one ray of the minimal face containing it.
/// Subdividing at an existing ray returns the fan unchanged.
pub fn stellar_subdivide(fan: &Fan, ray: &[i64]) -> Result<Fan, FanError> {
    if ray.len() != fan.dim {
        return Err(FanError::InvalidFan(format!(
            "ray {ray:?} has wrong dimension"
        )));
    }
    if !is_primitive(ray) {
        return Err(FanError::NonPrimitiveRay(ray.to_vec()));
    }
    let mut containing = Vec::new();
    for (ci, cone) in fan.max_cones.iter().enumerate() {
        if let Some(coords) = fan.cone_coordinates(cone, ray) {
            containing.push((ci, coords));
        }
    }
    if containing.is_empty() {
        return Err(FanError::RayOutsideSupport(ray.to_vec()));
    }
    let mut rays = fan.rays.clone();
    let new_index = fan.ray_index(ray).unwrap_or_else(|| {
        rays.push(ray.to_vec());
        rays.len() - 1
    });
    let replaced: BTreeSet<usize> = containing.iter().map(|&(ci, _)| ci).collect();
    let mut cones: Vec<Vec<usize>> = fan
        .max_cones
        .iter()
        .enumerate()
        .filter(|(ci, _)| !replaced.contains(ci))
        .map(|(_, c)| c.clone())
        .collect();
    let mut new_cones = BTreeSet::new();
    for (ci, coords) in &containing {
        let cone = &fan.max_cones[*ci];
        for (pos, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut sub: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != pos)
                .map(|(_, &i)| i)
                .collect();
            sub.push(new_index);
            sub.sort_unstable();
            new_cones.insert(sub);
        }
    }
    cones.extend(new_cones);
    Fan::new(fan.dim, rays, cones)
}

/// Validity report for a candidate resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResolutionReport {
    pub smooth: bool,
    pub crepant: bool,
}

/// Check that `refined` refines `original` and report smoothness (every max
/// cone unimodular) and crepancy (every ray of the refinement has
/// coefficient sum 1 in the original cone containing it).
pub fn validate_resolution(original: &Fan, refined: &Fan) -> Result<ResolutionReport, FanError> {
    if original.dim != refined.dim {
        return Err(FanError::NotARefinement("dimensions differ".into()));
    }
    // each refined max cone must sit inside an original max cone
    for cone in &refined.max_cones {
        let inside = original.max_cones.iter().any(|orig| {
            cone.iter()
                .all(|&i| original.cone_coordinates(orig, &refined.rays[i]).is_some())
        });
        if !inside {
            return Err(FanError::NotARefinement(format!(
                "refined cone {cone:?} is not contained in any original cone"
            )));
        }
    }
    let smooth = refined.max_cones.iter().all(|cone| {
        let rows: Vec<&[i64]> = cone.iter().map(|&i| refined.rays[i].as_slice()).collect();
        int_det(&rows).abs() == BigInt::one()
    });
    let mut crepant = true;
    for ray in &refined.rays {
        let (_, coords) = original
            .find_containing_cone(ray)
            .ok_or_else(|| FanError::NotARefinement(format!("ray {ray:?} outside support")))?;
        let total: Rational = coords.iter().sum();
        if total != Rational::one() {
            crepant = false;
        }
    }
    Ok(ResolutionReport { smooth, crepant })
}

/// Subdivision recipe file format: rays applied in order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubdivisionRecipe {
    pub rays: Vec<Vec<i64>>,
}

/// When w is of the form (1,...,1,n) with n >= 2 in dimension n, returns n.
pub fn is_one_one_n(w: &Weights) -> Option<u64> {
    let ws = w.as_slice();
    let n = *ws.last().unwrap();
    if n >= 2 && ws.len() == n as usize + 1 && ws[..ws.len() - 1].iter().all(|&x| x == 1) {
        Some(n)
    } else {
        None
    }
}

/// The subdivision rays of the built-in crepant resolutions.
pub fn builtin_subdivision_rays(w: &Weights) -> Result<Vec<Vec<i64>>, WpsError> {
    match w.as_slice() {
        [1, 1, 2, 2] => Ok(vec![vec![0, -1, -1]]),
        [1, 3, 4, 4] => Ok(vec![
            vec![0, -1, -1],
            vec![-1, -2, -2],
            vec![-2, -3, -3],
            vec![-1, -1, -1],
        ]),
        _ => {
            if let Some(n) = is_one_one_n(w) {
                let mut p = vec![0i64; n as usize];
                *p.last_mut().unwrap() = -1;
                Ok(vec![p])
            } else {
                Err(WpsError::UnsupportedFamily(w.to_string()))
            }
        }
    }
}

/// The built-in crepant resolution (Sigma, Sigma') for the supported
/// families, constructed by iterated stellar subdivision and certified by
/// the validators.
pub fn builtin_resolution(w: &Weights) -> Result<(Fan, Fan), WpsError> {
    let rays = builtin_subdivision_rays(w)?;
    let original = build_wps_fan(w)?;
    let mut refined = original.clone();
    for ray in &rays {
        refined = stellar_subdivide(&refined, ray)
            .map_err(|e| WpsError::InvalidWeights(format!("built-in subdivision failed: {e}")))?;
    }
    let report = validate_resolution(&original, &refined)
        .map_err(|e| WpsError::InvalidWeights(format!("built-in refinement invalid: {e}")))?;
    assert!(
        report.smooth && report.crepant,
        "built-in resolution of P{w} failed validation: {report:?}"
    );
    Ok((original, refined))
}
