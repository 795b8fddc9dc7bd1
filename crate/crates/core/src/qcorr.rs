//! Quantum corrections to the cup product of a crepant toric resolution.
//!
//! The contracted curve classes split into one transversal A_k chain
//! Gamma_1, ..., Gamma_k (curves over a singular line, recognized by the
//! negated Cartan pattern of the intersection matrix with their dual
//! exceptional divisors) and isolated classes (curves over point
//! singularities, whose quantum parameters are pinned to 0).
//!
//! For the chain, the genus-zero Gromov-Witten invariants without marked
//! points are 1/d^3 on multiples d*Gamma of connected sub-chains
//! Gamma = Gamma_mu + ... + Gamma_nu and vanish otherwise. With the divisor
//! axiom, the quantum 3-point function of degree-2 classes collapses to the
//! closed form
//!
//! ```text
//! <a1, a2, a3>_q = sum over sub-chains Gamma of
//!                  (int_Gamma a1)(int_Gamma a2)(int_Gamma a3) * q^Gamma / (1 - q^Gamma)
//! ```
//!
//! which is also how evaluations on the unit circle (e.g. at roots of
//! unity, where the underlying geometric series diverges) are understood:
//! the closed form is the analytic continuation, and an evaluation with
//! q^Gamma = 1 for some sub-chain is a pole and is rejected.
//!
//! The corrected product is defined against the Poincaré pairing: the
//! coordinates of a1 * a2 solve G x = v where v_k collects the classical
//! triple intersections with each basis element plus the quantum 3-point
//! values. The Gram matrix is inverted once per algebra.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::exact::{CycloNumber, ExactError, Rational};
use crate::toricring::{CurveClass, ToricCohomology, ToricError};

#[derive(Debug, Error)]
pub enum QcorrError {
    #[error("curve classes do not form one transversal A_k chain plus isolated classes: {0}")]
    PatternMismatch(String),
    #[error("quantum parameters hit a pole: q^Gamma = 1 on sub-chain {0}")]
    Pole(String),
    #[error("unsupported evaluation: {0}")]
    UnsupportedEvaluation(String),
    #[error("expected {expected} quantum parameters, got {got}")]
    WrongEvaluationLength { expected: usize, got: usize },
    #[error("non-rational intersection data: {0}")]
    NotRational(String),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Partition of the contracted-curve generators into the transversal chain
/// (ordered) and isolated classes.
#[derive(Debug, Clone)]
pub struct ChainConfig {
    /// Indices into the generator list, ordered along the A_k chain.
    pub chain: Vec<usize>,
    /// For each chain element, the position (into `added_rays`) of its dual
    /// exceptional divisor.
    pub chain_duals: Vec<usize>,
    /// Indices of the isolated generators.
    pub isolated: Vec<usize>,
    /// Intersection numbers int_{Gamma_l} e_j.
    pub intersections: Vec<Vec<Rational>>,
}

impl ChainConfig {
    pub fn generator_count(&self) -> usize {
        self.chain.len() + self.isolated.len()
    }
}

/// Detect the chain/isolated partition of the M_rho generators and verify
/// the negated A_k Cartan pattern.
///
/// The geometric side of the classification comes from the fan: an added
/// ray interior to a 2-dimensional cone of the original fan resolves a
/// singular curve (chain); interior to a full-dimensional cone it resolves
/// an isolated point. Anything in between is outside the scope of the
/// Gromov-Witten rule.
pub fn validate_chain(
    toric: &ToricCohomology,
    gens: &[CurveClass],
) -> Result<ChainConfig, QcorrError> {
    let n = toric.refined.dim;
    let d = toric.exceptional_count();
    // intersection matrix with the exceptional divisors
    let mut m = Vec::with_capacity(gens.len());
    for g in gens {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            row.push(toric.intersect(g, &toric.e_vector(j))?);
        }
        m.push(row);
    }
    // classify added rays by the dimension of the minimal original cone
    // containing them
    let mut chain_rays = Vec::new();
    let mut isolated_rays = Vec::new();
    for (j, &ri) in toric.added_rays.iter().enumerate() {
        let ray = &toric.refined.rays[ri];
        let (cone, coords) = toric
            .original
            .find_containing_cone(ray)
            .ok_or_else(|| QcorrError::PatternMismatch(format!("ray {ray:?} outside support")))?;
        let _ = cone;
        let support = coords.iter().filter(|c| !c.is_zero()).count();
        if support == n {
            isolated_rays.push(j);
        } else if support == 2 {
            chain_rays.push(j);
        } else {
            return Err(QcorrError::PatternMismatch(format!(
                "exceptional ray {ray:?} lies over a codimension-{support} stratum"
            )));
        }
    }
    // classify generators by which rays they pair with
    let mut chain_gens = Vec::new();
    let mut isolated_gens = Vec::new();
    for (l, row) in m.iter().enumerate() {
        let hits_chain = chain_rays.iter().any(|&j| !row[j].is_zero());
        let hits_isolated = isolated_rays.iter().any(|&j| !row[j].is_zero());
        match (hits_chain, hits_isolated) {
            (true, false) => chain_gens.push(l),
            (false, true) => isolated_gens.push(l),
            (true, true) => {
                return Err(QcorrError::PatternMismatch(format!(
                    "generator {l} meets both chain and isolated divisors"
                )))
            }
            (false, false) => {
                return Err(QcorrError::PatternMismatch(format!(
                    "generator {l} pairs to zero with every exceptional divisor"
                )))
            }
        }
    }
    if chain_gens.len() != chain_rays.len() {
        return Err(QcorrError::PatternMismatch(format!(
            "{} chain generators for {} chain divisors",
            chain_gens.len(),
            chain_rays.len()
        )));
    }
    // dual matching through the -2 diagonal
    let minus_two = Rational::from_integer((-2).into());
    let one = Rational::one();
    let mut dual = BTreeMap::new();
    for &l in &chain_gens {
        let duals: Vec<usize> = chain_rays
            .iter()
            .copied()
            .filter(|&j| m[l][j] == minus_two)
            .collect();
        if duals.len() != 1 {
            return Err(QcorrError::PatternMismatch(format!(
                "generator {l} has {} candidate dual divisors",
                duals.len()
            )));
        }
        if dual.values().any(|&v| v == duals[0]) {
            return Err(QcorrError::PatternMismatch(format!(
                "divisor {} is dual to two generators",
                duals[0]
            )));
        }
        dual.insert(l, duals[0]);
    }
    // adjacency graph from the +1 entries
    let k = chain_gens.len();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &a in &chain_gens {
        for &b in &chain_gens {
            if a == b {
                continue;
            }
            let v = &m[a][dual[&b]];
            let w = &m[b][dual[&a]];
            if v != w {
                return Err(QcorrError::PatternMismatch(format!(
                    "asymmetric intersections between generators {a} and {b}"
                )));
            }
            if *v == one {
                adj.entry(a).or_default().push(b);
            } else if !v.is_zero() {
                return Err(QcorrError::PatternMismatch(format!(
                    "off-diagonal intersection {v} between generators {a} and {b}"
                )));
            }
        }
    }
    // must be a single simple path
    let ordered: Vec<usize> = if k == 0 {
        Vec::new()
    } else if k == 1 {
        vec![chain_gens[0]]
    } else {
        let endpoints: Vec<usize> = chain_gens
            .iter()
            .copied()
            .filter(|g| adj.get(g).map_or(0, |v| v.len()) == 1)
            .collect();
        if endpoints.len() != 2
            || chain_gens
                .iter()
                .any(|g| adj.get(g).map_or(0, |v| v.len()) > 2)
        {
            return Err(QcorrError::PatternMismatch(
                "chain adjacency is not a single path".into(),
            ));
        }
        // orient from the endpoint with the smaller dual divisor
        let start = *endpoints
            .iter()
            .min_by_key(|g| dual[g])
            .expect("two endpoints");
        let mut path = vec![start];
        let mut prev = None;
        while path.len() < k {
            let cur = *path.last().unwrap();
            let next = adj[&cur]
                .iter()
                .copied()
                .find(|&x| Some(x) != prev)
                .ok_or_else(|| {
                    QcorrError::PatternMismatch("chain adjacency is not a single path".into())
                })?;
            prev = Some(cur);
            path.push(next);
        }
        path
    };
    // Cartan pattern on the ordered chain
    for (a, &ga) in ordered.iter().enumerate() {
        for (b, &gb) in ordered.iter().enumerate() {
            let v = &m[ga][dual[&gb]];
            let expected: Rational = if a == b {
                minus_two.clone()
            } else if a.abs_diff(b) == 1 {
                one.clone()
            } else {
                Rational::zero()
            };
            if *v != expected {
                return Err(QcorrError::PatternMismatch(format!(
                    "Cartan pattern violated at chain positions ({a},{b}): {v}"
                )));
            }
        }
    }
    let chain_duals = ordered.iter().map(|g| dual[g]).collect();
    Ok(ChainConfig {
        chain: ordered,
        chain_duals,
        isolated: isolated_gens,
        intersections: m,
    })
}

/// A connected sub-chain Gamma_mu + ... + Gamma_nu, by positions in the
/// ordered chain (inclusive).
pub type SubChain = (usize, usize);

/// A quantum 3-point function in closed form: a sum of terms
/// c * q^Gamma / (1 - q^Gamma) over connected sub-chains.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumCoefficient {
    pub terms: BTreeMap<SubChain, Rational>,
}

impl QuantumCoefficient {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact value at an evaluation of the chain parameters.
    pub fn evaluate(&self, cfg: &ChainConfig, q: &[CycloNumber]) -> Result<CycloNumber, QcorrError> {
        let mut acc = CycloNumber::zero();
        for ((from, to), c) in &self.terms {
            let factor = geometric_factor(cfg, q, (*from, *to))?;
            acc = &acc + &(&CycloNumber::from_rational(c.clone()) * &factor);
        }
        Ok(acc)
    }

    /// Partial sum of the underlying Gromov-Witten series up to degree
    /// `dmax`: sum_{d=1..dmax} c * (q^Gamma)^d per sub-chain.
    pub fn truncated_series(
        &self,
        cfg: &ChainConfig,
        q: &[CycloNumber],
        dmax: u32,
    ) -> Result<CycloNumber, QcorrError> {
        let mut acc = CycloNumber::zero();
        for ((from, to), c) in &self.terms {
            let qg = q_power(cfg, q, (*from, *to));
            let mut power = CycloNumber::one();
            let mut sum = CycloNumber::zero();
            for _ in 1..=dmax {
                power = &power * &qg;
                sum = &sum + &power;
            }
            acc = &acc + &(&CycloNumber::from_rational(c.clone()) * &sum);
        }
        Ok(acc)
    }

    /// Exact geometric tail sum_{d > dmax} c * (q^Gamma)^d, for checking the
    /// closed form against truncations.
    pub fn tail(
        &self,
        cfg: &ChainConfig,
        q: &[CycloNumber],
        dmax: u32,
    ) -> Result<CycloNumber, QcorrError> {
        let mut acc = CycloNumber::zero();
        for ((from, to), c) in &self.terms {
            let qg = q_power(cfg, q, (*from, *to));
            let num = qg.pow(dmax + 1);
            let denom = &CycloNumber::one() - &qg;
            if denom.is_zero() {
                return Err(QcorrError::Pole(format!("{from}..{to}")));
            }
            let tail = &num * &denom.inv()?;
            acc = &acc + &(&CycloNumber::from_rational(c.clone()) * &tail);
        }
        Ok(acc)
    }
}

/// q^Gamma for a sub-chain: the product of the chain parameters mu..nu.
fn q_power(cfg: &ChainConfig, q: &[CycloNumber], (from, to): SubChain) -> CycloNumber {
    let mut acc = CycloNumber::one();
    for l in from..=to {
        acc = &acc * &q[cfg.chain[l]];
    }
    acc
}

/// q^Gamma / (1 - q^Gamma), with pole detection.
fn geometric_factor(
    cfg: &ChainConfig,
    q: &[CycloNumber],
    sub: SubChain,
) -> Result<CycloNumber, QcorrError> {
    let qg = q_power(cfg, q, sub);
    let denom = &CycloNumber::one() - &qg;
    if denom.is_zero() {
        return Err(QcorrError::Pole(format!("{}..{}", sub.0, sub.1)));
    }
    Ok(&qg * &denom.inv()?)
}

/// int over the sub-chain of a degree-2 class given by coordinates.
fn subchain_intersection(
    toric: &ToricCohomology,
    cfg: &ChainConfig,
    gens: &[CurveClass],
    sub: SubChain,
    a: &[CycloNumber],
) -> Result<Rational, QcorrError> {
    let mut acc = Rational::zero();
    for l in sub.0..=sub.1 {
        acc += toric.intersect(&gens[cfg.chain[l]], a)?;
    }
    Ok(acc)
}

fn is_degree2(alg: &GradedAlgebra, a: &[CycloNumber]) -> bool {
    a.iter()
        .enumerate()
        .all(|(k, c)| c.is_zero() || alg.degrees()[k] == 2)
}

/// The quantum 3-point function of three degree-2 classes, as an exact
/// closed form over connected sub-chains. Classes of other degrees
/// contribute nothing (degree axiom), as do the isolated generators whose
/// parameters are pinned to zero.
pub fn three_point(
    toric: &ToricCohomology,
    cfg: &ChainConfig,
    gens: &[CurveClass],
    a1: &[CycloNumber],
    a2: &[CycloNumber],
    a3: &[CycloNumber],
) -> Result<QuantumCoefficient, QcorrError> {
    let mut terms = BTreeMap::new();
    let alg = &toric.algebra;
    if is_degree2(alg, a1) && is_degree2(alg, a2) && is_degree2(alg, a3) {
        let k = cfg.chain.len();
        for from in 0..k {
            for to in from..k {
                let c1 = subchain_intersection(toric, cfg, gens, (from, to), a1)?;
                if c1.is_zero() {
                    continue;
                }
                let c2 = subchain_intersection(toric, cfg, gens, (from, to), a2)?;
                if c2.is_zero() {
                    continue;
                }
                let c3 = subchain_intersection(toric, cfg, gens, (from, to), a3)?;
                if c3.is_zero() {
                    continue;
                }
                terms.insert((from, to), c1 * c2 * c3);
            }
        }
    }
    Ok(QuantumCoefficient { terms })
}

/// A structure-constant coefficient of the symbolic quantum product:
/// a rational constant plus rational multiples of q^Gamma/(1-q^Gamma) over
/// sub-chains.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicCoeff {
    pub constant: Rational,
    pub qterms: BTreeMap<SubChain, Rational>,
}

impl SymbolicCoeff {
    pub fn constant_only(c: Rational) -> Self {
        SymbolicCoeff {
            constant: c,
            qterms: BTreeMap::new(),
        }
    }

    pub fn evaluate(&self, cfg: &ChainConfig, q: &[CycloNumber]) -> Result<CycloNumber, QcorrError> {
        let mut acc = CycloNumber::from_rational(self.constant.clone());
        for (sub, c) in &self.qterms {
            let f = geometric_factor(cfg, q, *sub)?;
            acc = &acc + &(&CycloNumber::from_rational(c.clone()) * &f);
        }
        Ok(acc)
    }
}

/// The symbolic quantum product of two degree-2 basis elements, expanded
/// over the basis: classical structure constants plus, per sub-chain Gamma,
/// the correction (int_Gamma m_i)(int_Gamma m_j) q^Gamma/(1-q^Gamma) PD(Gamma).
pub fn symbolic_product(
    toric: &ToricCohomology,
    cfg: &ChainConfig,
    gens: &[CurveClass],
    i: usize,
    j: usize,
) -> Result<Vec<SymbolicCoeff>, QcorrError> {
    let alg = &toric.algebra;
    let dim = alg.dim();
    let mut out: Vec<SymbolicCoeff> = alg
        .product_of_basis(i, j)
        .iter()
        .map(|c| {
            c.as_rational()
                .map(SymbolicCoeff::constant_only)
                .ok_or_else(|| QcorrError::NotRational(c.to_string()))
        })
        .collect::<Result<_, _>>()?;
    if alg.degrees()[i] != 2 || alg.degrees()[j] != 2 {
        return Ok(out);
    }
    let bi = alg.basis_vector(i);
    let bj = alg.basis_vector(j);
    let k = cfg.chain.len();
    for from in 0..k {
        for to in from..k {
            let ci = subchain_intersection(toric, cfg, gens, (from, to), &bi)?;
            if ci.is_zero() {
                continue;
            }
            let cj = subchain_intersection(toric, cfg, gens, (from, to), &bj)?;
            if cj.is_zero() {
                continue;
            }
            let c = ci * cj;
            // PD(Gamma) = sum of the chain classes' Poincaré duals
            for l in from..=to {
                let pd = &gens[cfg.chain[l]].pd;
                for t in 0..dim {
                    if pd[t].is_zero() {
                        continue;
                    }
                    let coeff = pd[t]
                        .as_rational()
                        .ok_or_else(|| QcorrError::NotRational(pd[t].to_string()))?;
                    let entry = out[t].qterms.entry((from, to)).or_insert_with(Rational::zero);
                    *entry += &c * coeff;
                    if entry.is_zero() {
                        out[t].qterms.remove(&(from, to));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Validate an evaluation of the quantum parameters: one value per
/// generator, zero on isolated classes, no sub-chain at a pole.
pub fn check_evaluation(cfg: &ChainConfig, q: &[CycloNumber]) -> Result<(), QcorrError> {
    if q.len() != cfg.generator_count() {
        return Err(QcorrError::WrongEvaluationLength {
            expected: cfg.generator_count(),
            got: q.len(),
        });
    }
    for &l in &cfg.isolated {
        if !q[l].is_zero() {
            return Err(QcorrError::UnsupportedEvaluation(format!(
                "isolated class {} requires q = 0, got {}",
                l + 1,
                q[l]
            )));
        }
    }
    let k = cfg.chain.len();
    for from in 0..k {
        for to in from..k {
            let qg = q_power(cfg, q, (from, to));
            if qg.is_one() {
                return Err(QcorrError::Pole(format!("{from}..{to}")));
            }
        }
    }
    Ok(())
}

/// The quantum corrected cohomology ring at an evaluation of the quantum
/// parameters: same basis, grading, unit, functional and pairing; new
/// structure constants solving G x = (classical + quantum) triple
/// intersections.
pub fn quantum_algebra(
    toric: &ToricCohomology,
    cfg: &ChainConfig,
    gens: &[CurveClass],
    q: &[CycloNumber],
) -> Result<GradedAlgebra, QcorrError> {
    check_evaluation(cfg, q)?;
    let alg = &toric.algebra;
    let dim = alg.dim();
    let gram = alg.gram()?;
    let gram_inv = gram.inverse()?;
    let deg2: Vec<usize> = (0..dim).filter(|&k| alg.degrees()[k] == 2).collect();

    // geometric factors and per-sub-chain intersections with the deg-2 basis
    let k = cfg.chain.len();
    let mut factors: BTreeMap<SubChain, CycloNumber> = BTreeMap::new();
    let mut chain_ints: BTreeMap<SubChain, Vec<Rational>> = BTreeMap::new();
    for from in 0..k {
        for to in from..k {
            factors.insert((from, to), geometric_factor(cfg, q, (from, to))?);
            let ints: Vec<Rational> = deg2
                .iter()
                .map(|&b| {
                    subchain_intersection(toric, cfg, gens, (from, to), &alg.basis_vector(b))
                })
                .collect::<Result<_, _>>()?;
            chain_ints.insert((from, to), ints);
        }
    }

    let mut table = alg.table().clone();
    for (pi, &i) in deg2.iter().enumerate() {
        for (pj, &j) in deg2.iter().enumerate() {
            if pj < pi {
                continue;
            }
            // v_k = deg(m_i m_j m_k) classical ...
            let classical = alg.product_of_basis(i, j);
            let mut v = gram.mul_vec(classical)?;
            // ... plus the quantum 3-point values on degree-2 m_k
            for (sub, factor) in &factors {
                let ints = &chain_ints[sub];
                let ci = &ints[pi];
                let cj = &ints[pj];
                if ci.is_zero() || cj.is_zero() {
                    continue;
                }
                let cij = CycloNumber::from_rational(ci * cj);
                for (pk, &bk) in deg2.iter().enumerate() {
                    if ints[pk].is_zero() {
                        continue;
                    }
                    let add = &(&cij * &CycloNumber::from_rational(ints[pk].clone())) * factor;
                    v[bk] = &v[bk] + &add;
                }
            }
            let coords = gram_inv.mul_vec(&v)?;
            table[i][j] = coords.clone();
            table[j][i] = coords;
        }
    }
    Ok(alg.with_table(table))
}
