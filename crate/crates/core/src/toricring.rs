//! Cohomology ring of a smooth complete toric resolution from fan data.
//!
//! Given the fan of |P(w)| and a smooth crepant refinement, the ring
//! H*(Z;C) is presented on the variables h, e_1, ..., e_d where e_j are the
//! classes of the exceptional divisors (the added rays) and
//!
//! ```text
//! h = (b_0 + ... + b_n + e_1 + ... + e_d) / (w_0 + ... + w_n)
//! ```
//!
//! The Stanley-Reisner relations (products of divisor classes over minimal
//! non-faces) are rewritten in h and e by solving the n lattice relations
//! sum <m, u_rho> D_rho = 0 together with the h-relation for the original
//! classes b_0..b_n.
//!
//! The degree functional is the unique linear functional on the top graded
//! piece with deg(D_{rho_1} ... D_{rho_n}) = 1 for the rays of any max cone
//! of the smooth fan; it is calibrated from one cone and cross-checked on
//! all others. The Poincaré pairing, invariant-curve classes, and the cone
//! of rho-contracted classes are all derived from it: a wall nu of the
//! refinement that is not a wall of the original fan gives the curve
//! [V(nu)] with Poincaré dual the product of the divisors through nu, and
//! the contracted generators are those with h . [V(nu)] = 0.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::exact::{solve_rational, CycloNumber, Rational};
use crate::gb::{GbError, MonomialOrder, Polynomial, QuotientPresentation};
use crate::wps::{build_wps_fan, builtin_resolution, Fan, FanError, Weights, WpsError};

#[derive(Debug, Error)]
pub enum ToricError {
    #[error("refined fan is not smooth; the presentation requires a resolution")]
    NotSmooth,
    #[error("original ray {0:?} does not appear among the refined rays")]
    MissingOriginalRay(Vec<i64>),
    #[error("the linear relations for the b-classes are not solvable (malformed fan)")]
    BadLinearSystem,
    #[error("top graded piece is {0}-dimensional, expected 1")]
    TopNotUnique(usize),
    #[error("degree functional calibration inconsistent across max cones: {0}")]
    CalibrationInconsistent(String),
    #[error("Poincaré pairing is degenerate")]
    PoincareDegenerate,
    #[error("intersection number is not rational: {0}")]
    NotRational(String),
    #[error(transparent)]
    Wps(#[from] WpsError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An invariant curve class [V(nu)] of the resolution, carried by a wall nu
/// and represented by its Poincaré-dual cohomology class in the basis.
#[derive(Debug, Clone)]
pub struct CurveClass {
    /// Ray indices (into the refined fan) of the (n-1)-cone nu.
    pub wall: Vec<usize>,
    /// Coordinates of PD([V(nu)]) = prod_{u in nu} D_u on the algebra basis.
    pub pd: Vec<CycloNumber>,
}

/// The cohomology ring of a toric resolution, with divisor bookkeeping.
#[derive(Debug, Clone)]
pub struct ToricCohomology {
    pub weights: Weights,
    pub original: Fan,
    pub refined: Fan,
    /// Calibrated algebra: basis, structure constants, functional, Gram.
    pub algebra: GradedAlgebra,
    /// For each refined ray, its divisor class as a polynomial in h, e.
    divisors: Vec<Polynomial>,
    /// Refined ray indices that are not rays of the original fan, in order.
    pub added_rays: Vec<usize>,
}

impl ToricCohomology {
    /// Presentation of H*(Z;C) for the built-in resolution of P(w).
    pub fn builtin(w: &Weights) -> Result<Self, ToricError> {
        let (original, refined) = builtin_resolution(w)?;
        Self::new(w, &original, &refined)
    }

    /// Presentation of H*(Z;C) from an explicit smooth refinement of the fan
    /// of P(w). The original fan must be `build_wps_fan(w)`-compatible: its
    /// rays must all appear among the refined rays.
    pub fn new(w: &Weights, original: &Fan, refined: &Fan) -> Result<Self, ToricError> {
        let n = refined.dim;
        let report = crate::wps::validate_resolution(original, refined)?;
        if !report.smooth {
            return Err(ToricError::NotSmooth);
        }

        // locate original rays inside the refined fan
        let mut original_in_refined = Vec::with_capacity(original.rays.len());
        for ray in &original.rays {
            let idx = refined
                .ray_index(ray)
                .ok_or_else(|| ToricError::MissingOriginalRay(ray.clone()))?;
            original_in_refined.push(idx);
        }
        let added_rays: Vec<usize> = (0..refined.rays.len())
            .filter(|i| !original_in_refined.contains(i))
            .collect();
        let d = added_rays.len();

        // variables h < e_1 < ... < e_d (a single exceptional class is "e")
        let mut vars: Vec<String> = vec!["h".to_string()];
        if d == 1 {
            vars.push("e".to_string());
        } else {
            for j in 1..=d {
                vars.push(format!("e{j}"));
            }
        }

        // solve for b_0..b_n: n lattice relations + the h-relation
        let num_b = original.rays.len();
        let mut m_rows: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
        let mut rhs: Vec<Polynomial> = Vec::with_capacity(n + 1);
        let e_poly =
            |j: usize| -> Polynomial { Polynomial::variable(&vars, 1 + j) };
        for k in 0..n {
            m_rows.push(
                original_in_refined
                    .iter()
                    .map(|&ri| Rational::from(BigInt::from(refined.rays[ri][k])))
                    .collect(),
            );
            let mut r = Polynomial::zero(&vars);
            for (j, &ri) in added_rays.iter().enumerate() {
                let c = CycloNumber::from_int(-refined.rays[ri][k]);
                r = r.add(&e_poly(j).scale(&c));
            }
            rhs.push(r);
        }
        m_rows.push(vec![Rational::from(BigInt::from(1)); num_b]);
        {
            let mut r = Polynomial::variable(&vars, 0)
                .scale(&CycloNumber::from_int(w.total() as i64));
            for j in 0..d {
                r = r.sub(&e_poly(j));
            }
            rhs.push(r);
        }
        // invert the (n+1)x(n+1) rational matrix column by column
        let mut b_exprs: Vec<Polynomial> = vec![Polynomial::zero(&vars); num_b];
        let mut inverse_cols: Vec<Vec<Rational>> = Vec::with_capacity(num_b);
        for i in 0..num_b {
            let mut unit = vec![Rational::zero(); num_b];
            unit[i] = Rational::from(BigInt::from(1));
            // solve M^T y = unit_i gives row i of M^{-1}
            let mt: Vec<Vec<Rational>> = (0..num_b)
                .map(|r| (0..num_b).map(|c| m_rows[c][r].clone()).collect())
                .collect();
            let row = solve_rational(&mt, &unit).ok_or(ToricError::BadLinearSystem)?;
            inverse_cols.push(row);
        }
        for i in 0..num_b {
            let mut acc = Polynomial::zero(&vars);
            for (j, r) in rhs.iter().enumerate() {
                let c = CycloNumber::from_rational(inverse_cols[i][j].clone());
                acc = acc.add(&r.scale(&c));
            }
            b_exprs[i] = acc;
        }
        // sanity: the solved classes satisfy every lattice relation
        for k in 0..n {
            let mut acc = Polynomial::zero(&vars);
            for (bi, &ri) in original_in_refined.iter().enumerate() {
                acc = acc.add(
                    &b_exprs[bi].scale(&CycloNumber::from_int(refined.rays[ri][k])),
                );
            }
            for (j, &ri) in added_rays.iter().enumerate() {
                acc = acc.add(&e_poly(j).scale(&CycloNumber::from_int(refined.rays[ri][k])));
            }
            if !acc.is_zero() {
                return Err(ToricError::BadLinearSystem);
            }
        }

        // divisor class of each refined ray
        let mut divisors: Vec<Polynomial> = vec![Polynomial::zero(&vars); refined.rays.len()];
        for (bi, &ri) in original_in_refined.iter().enumerate() {
            divisors[ri] = b_exprs[bi].clone();
        }
        for (j, &ri) in added_rays.iter().enumerate() {
            divisors[ri] = e_poly(j);
        }

        // Stanley-Reisner relations over minimal non-faces
        let gens: Vec<Polynomial> = minimal_non_faces(refined)
            .into_iter()
            .map(|face| {
                let mut acc = Polynomial::one(&vars);
                for ri in face {
                    acc = acc.mul(&divisors[ri]);
                }
                acc
            })
            .collect();

        let presentation = QuotientPresentation::new(gens, MonomialOrder::GrevLex);
        let mut algebra = GradedAlgebra::from_presentation(presentation)?;

        // calibrate the degree functional on the unique top monomial
        let top_degree = 2 * n as u32;
        let top_indices: Vec<usize> = algebra
            .degrees()
            .iter()
            .enumerate()
            .filter(|(_, &deg)| deg == top_degree)
            .map(|(i, _)| i)
            .collect();
        if top_indices.len() != 1 {
            return Err(ToricError::TopNotUnique(top_indices.len()));
        }
        let top = top_indices[0];
        let mut kappa: Option<CycloNumber> = None;
        for cone in &refined.max_cones {
            let mut prod = Polynomial::one(&vars);
            for &ri in cone {
                prod = prod.mul(&divisors[ri]);
            }
            let coords = algebra.expand(&prod)?;
            for (k, c) in coords.iter().enumerate() {
                if k != top && !c.is_zero() {
                    return Err(ToricError::CalibrationInconsistent(format!(
                        "cone {cone:?} product has a component off the top monomial"
                    )));
                }
            }
            let c = coords[top].clone();
            if c.is_zero() {
                return Err(ToricError::CalibrationInconsistent(format!(
                    "cone {cone:?} product vanishes"
                )));
            }
            match &kappa {
                None => kappa = Some(c),
                Some(prev) if *prev == c => {}
                Some(prev) => {
                    return Err(ToricError::CalibrationInconsistent(format!(
                        "cone {cone:?} gives {c} instead of {prev}"
                    )))
                }
            }
        }
        let kappa = kappa.expect("complete fan has max cones");
        let mut functional = vec![CycloNumber::zero(); algebra.dim()];
        functional[top] = kappa.inv().expect("top coefficient is nonzero");
        algebra.set_functional(functional);
        if !algebra.gram()?.is_nonsingular() {
            return Err(ToricError::PoincareDegenerate);
        }

        Ok(ToricCohomology {
            weights: w.clone(),
            original: original.clone(),
            refined: refined.clone(),
            algebra,
            divisors,
            added_rays,
        })
    }

    /// As `new`, reconstructing the original fan from the weights.
    pub fn from_refinement(w: &Weights, refined: &Fan) -> Result<Self, ToricError> {
        let original = build_wps_fan(w)?;
        Self::new(w, &original, refined)
    }

    /// The divisor class of a refined ray, in the h,e-variables.
    pub fn divisor_class(&self, refined_ray: usize) -> &Polynomial {
        &self.divisors[refined_ray]
    }

    /// Coordinates of h on the basis.
    pub fn h_vector(&self) -> Vec<CycloNumber> {
        let idx = self
            .algebra
            .generator_index("h")
            .expect("h is a basis element");
        self.algebra.basis_vector(idx)
    }

    /// Coordinates of the j-th exceptional class (0-based) on the basis.
    pub fn e_vector(&self, j: usize) -> Vec<CycloNumber> {
        let name = &self.algebra.vars()[1 + j];
        let idx = self
            .algebra
            .generator_index(name)
            .expect("exceptional classes are basis elements");
        self.algebra.basis_vector(idx)
    }

    pub fn exceptional_count(&self) -> usize {
        self.added_rays.len()
    }

    /// Generators of the cone M_rho(Z) of rho-contracted effective curve
    /// classes: the classes [V(nu)] over walls nu of the refinement that are
    /// not walls of the original fan, with h . [V(nu)] = 0, deduplicated by
    /// their Poincaré duals and ordered by leading basis monomial.
    pub fn curve_classes(&self) -> Result<Vec<CurveClass>, ToricError> {
        let h = self.h_vector();
        let mut out: Vec<CurveClass> = Vec::new();
        for wall in self.refined.walls() {
            let all_original = wall
                .iter()
                .all(|&ri| self.original.ray_index(&self.refined.rays[ri]).is_some());
            if all_original {
                continue;
            }
            let mut prod = Polynomial::one(self.algebra.vars());
            for &ri in &wall {
                prod = prod.mul(&self.divisors[ri]);
            }
            let pd = self.algebra.expand(&prod)?;
            let pairing = self.algebra.integrate(&self.algebra.mul_vec(&h, &pd))?;
            if !pairing.is_zero() {
                continue;
            }
            if !out.iter().any(|c| c.pd == pd) {
                out.push(CurveClass { wall, pd });
            }
        }
        out.sort_by_key(|c| {
            (
                c.pd.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX),
                format!("{:?}", c.pd.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            )
        });
        Ok(out)
    }

    /// Exact intersection number of a curve class with a degree-2 class
    /// given by coordinates: deg(d . PD([V(nu)])).
    pub fn intersect(&self, class: &CurveClass, d: &[CycloNumber]) -> Result<Rational, ToricError> {
        let v = self.algebra.integrate(&self.algebra.mul_vec(d, &class.pd))?;
        v.as_rational()
            .ok_or_else(|| ToricError::NotRational(v.to_string()))
    }

    /// Deterministic JSON report of the contracted-curve generators.
    pub fn mrho_report(&self) -> Result<serde_json::Value, ToricError> {
        let classes = self.curve_classes()?;
        let items: Vec<serde_json::Value> = classes
            .iter()
            .map(|c| {
                json!({
                    "wall": c.wall,
                    "pd_class": self.algebra.describe(&c.pd),
                    "pd_coords": c.pd.iter().map(|x| x.to_json()).collect::<Vec<_>>(),
                })
            })
            .collect();
        Ok(json!({
            "weights": self.weights.as_slice(),
            "generators": items,
        }))
    }
}

/// Minimal non-faces of a simplicial fan: inclusion-minimal ray sets that
/// span no cone.
fn minimal_non_faces(fan: &Fan) -> Vec<Vec<usize>> {
    let nrays = fan.rays.len();
    let is_face = |set: &[usize]| {
        fan.max_cones
            .iter()
            .any(|cone| set.iter().all(|i| cone.contains(i)))
    };
    let mut non_faces: Vec<Vec<usize>> = Vec::new();
    // subsets in increasing size order; a minimal non-face has size <= n+1
    for size in 2..=(fan.dim + 1).min(nrays) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if !is_face(&subset) && !non_faces.iter().any(|nf| nf.iter().all(|i| subset.contains(i)))
            {
                non_faces.push(subset.clone());
            }
            // next combination
            let mut k = size;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if subset[k] != k + nrays - size {
                    subset[k] += 1;
                    for j in k + 1..size {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
                if k == 0 {
                    subset.clear();
                    break;
                }
            }
            if subset.is_empty() {
                break;
            }
        }
    }
    non_faces
}
