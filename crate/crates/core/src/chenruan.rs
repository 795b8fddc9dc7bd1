//! Chen-Ruan cohomology of P(w).
//!
//! Additively, Chen-Ruan cohomology is the cohomology of the inertia stack:
//! every twisted sector gamma contributes the cohomology of P(w_{I(g)})
//! shifted up by twice its age. The additive structure is available for any
//! Gorenstein weight system.
//!
//! The ring structure is presentation-driven and covers the built-in
//! families:
//!
//! ```text
//! P(1,1,2,2):    C[H,E]  / < H^2 - E^2, H^2 E >
//! P(1,3,4,4):    C[H,E1..E4] / (14 relations)
//! P(1,...,1,n):  C[H,E1] / < H^n - E1^n, H E1 >
//! ```
//!
//! with the degree functional fixed to 1/(w_0 ... w_n) on H^n; this is the
//! value the toric side reproduces independently through the crepant
//! pullback. The graded dimensions of each built-in presentation are
//! checked against the additive sector count on construction. A
//! user-supplied presentation in the same text format can be used instead
//! for experimentation.

use num_bigint::BigInt;
use serde_json::json;
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::exact::{CycloNumber, Rational};
use crate::gb::{parse_polynomial, GbError, MonomialOrder, Polynomial, QuotientPresentation};
use crate::wps::{is_one_one_n, twisted_sectors, Sector, Weights};

#[derive(Debug, Error)]
pub enum CrError {
    #[error("P{0} is not Gorenstein; Chen-Ruan degrees would be half-integral")]
    NotGorenstein(String),
    #[error("no built-in Chen-Ruan ring for P{0}; general products are out of scope")]
    UnsupportedFamily(String),
    #[error("presentation inconsistent with the sector table: {0}")]
    PresentationMismatch(String),
    #[error(transparent)]
    Gb(#[from] GbError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One row of the additive table: a Chen-Ruan degree with its sector
/// contributions.
#[derive(Debug, Clone)]
pub struct CRBettiRow {
    pub degree: u32,
    /// (gamma, local degree p - 2 age) of each contributing sector.
    pub contributions: Vec<(Rational, u32)>,
}

/// Graded dimensions of H*_CR(P(w)) with their sector provenance.
#[derive(Debug, Clone)]
pub struct CRBettiTable {
    pub rows: Vec<CRBettiRow>,
    pub sectors: Vec<Sector>,
}

impl CRBettiTable {
    pub fn total_dim(&self) -> usize {
        self.rows.iter().map(|r| r.contributions.len()).sum()
    }

    pub fn dim_in_degree(&self, degree: u32) -> usize {
        self.rows
            .iter()
            .find(|r| r.degree == degree)
            .map_or(0, |r| r.contributions.len())
    }

    pub fn to_report(&self) -> serde_json::Value {
        json!({
            "sectors": self.sectors,
            "betti": self
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "degree": r.degree,
                        "dim": r.contributions.len(),
                        "contributions": r
                            .contributions
                            .iter()
                            .map(|(g, local)| json!({
                                "gamma": g.to_string(),
                                "local_degree": local,
                            }))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Additive Chen-Ruan cohomology of a Gorenstein P(w): each sector gamma
/// contributes C in degrees 2 age, 2 age + 2, ..., 2 age + 2(|I(g)| - 1).
pub fn cr_betti(w: &Weights) -> Result<CRBettiTable, CrError> {
    if !w.is_gorenstein() {
        return Err(CrError::NotGorenstein(w.to_string()));
    }
    let sectors = twisted_sectors(w);
    let n = w.dim() as u32;
    let mut rows: Vec<CRBettiRow> = (0..=n)
        .map(|k| CRBettiRow {
            degree: 2 * k,
            contributions: Vec::new(),
        })
        .collect();
    for s in &sectors {
        let age2 = {
            debug_assert!(s.age.is_integer());
            2 * u32::try_from(s.age.to_integer()).expect("ages are small nonnegative integers")
        };
        for local in 0..s.fixed_indices.len() as u32 {
            let degree = age2 + 2 * local;
            let row = rows
                .iter_mut()
                .find(|r| r.degree == degree)
                .expect("sector degrees lie in 0..2n");
            row.contributions.push((s.gamma.clone(), 2 * local));
        }
    }
    Ok(CRBettiTable { rows, sectors })
}

/// The built-in Chen-Ruan presentations: variables and relations in the
/// polynomial text format.
pub fn builtin_cr_presentation(w: &Weights) -> Result<(Vec<String>, Vec<String>), CrError> {
    match w.as_slice() {
        [1, 1, 2, 2] => Ok((
            vec!["H".into(), "E".into()],
            vec!["H^2 - E^2".into(), "H^2*E".into()],
        )),
        [1, 3, 4, 4] => Ok((
            vec!["H".into(), "E1".into(), "E2".into(), "E3".into(), "E4".into()],
            vec![
                "H*E4".into(),
                "E1*E1 - 3*H*E2".into(),
                "E1*E2 - 3*H*E3".into(),
                "E1*E3 - 3*H^2".into(),
                "E2*E2 - 3*H^2".into(),
                "E2*E3 - H*E1".into(),
                "E3*E3 - H*E2".into(),
                "16*H^3 - E4^3".into(),
                "H^2*E1".into(),
                "H^2*E2".into(),
                "H^2*E3".into(),
                "E1*E4".into(),
                "E2*E4".into(),
                "E3*E4".into(),
            ],
        )),
        _ => {
            if let Some(n) = is_one_one_n(w) {
                Ok((
                    vec!["H".into(), "E1".into()],
                    vec![format!("H^{n} - E1^{n}"), "H*E1".into()],
                ))
            } else {
                Err(CrError::UnsupportedFamily(w.to_string()))
            }
        }
    }
}

/// Build a graded algebra from explicit generators/relations and install
/// the degree functional `top_value` on the unique top-degree basis
/// monomial. This is the escape hatch behind the built-in families.
pub fn algebra_from_relations(
    vars: &[String],
    relations: &[Polynomial],
    top_degree: u32,
    top_value: CycloNumber,
) -> Result<GradedAlgebra, CrError> {
    let q = QuotientPresentation::new(relations.to_vec(), MonomialOrder::GrevLex);
    let mut algebra = GradedAlgebra::from_presentation(q)?;
    let _ = vars;
    let tops: Vec<usize> = algebra
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == top_degree)
        .map(|(i, _)| i)
        .collect();
    if tops.len() != 1 {
        return Err(CrError::PresentationMismatch(format!(
            "top degree {top_degree} has dimension {}, expected 1",
            tops.len()
        )));
    }
    let mut functional = vec![CycloNumber::zero(); algebra.dim()];
    functional[tops[0]] = top_value;
    algebra.set_functional(functional);
    Ok(algebra)
}

/// The Chen-Ruan cohomology ring of a built-in family, as a calibrated
/// graded algebra. The functional is 1/(w_0 ... w_n) on H^n, and the graded
/// dimensions are checked against [`cr_betti`].
pub fn cr_algebra(w: &Weights) -> Result<GradedAlgebra, CrError> {
    let (vars, rel_srcs) = builtin_cr_presentation(w)?;
    let relations: Vec<Polynomial> = rel_srcs
        .iter()
        .map(|src| parse_polynomial(src, &vars).expect("built-in presentations parse"))
        .collect();
    let n = w.dim() as u32;
    let prod: u64 = w.as_slice().iter().product();
    let top_value = CycloNumber::from_rational(Rational::new(
        BigInt::from(1),
        BigInt::from(prod),
    ));
    let algebra = algebra_from_relations(&vars, &relations, 2 * n, top_value)?;
    // consistency with the additive structure
    let betti = cr_betti(w)?;
    for (degree, dim) in algebra.graded_dims() {
        if betti.dim_in_degree(degree) != dim {
            return Err(CrError::PresentationMismatch(format!(
                "degree {degree}: presentation gives {dim}, sectors give {}",
                betti.dim_in_degree(degree)
            )));
        }
    }
    if betti.total_dim() != algebra.dim() {
        return Err(CrError::PresentationMismatch(format!(
            "total dim {} vs sector count {}",
            algebra.dim(),
            betti.total_dim()
        )));
    }
    if !algebra
        .gram()
        .map_err(CrError::Algebra)?
        .is_nonsingular()
    {
        return Err(CrError::PresentationMismatch(
            "Chen-Ruan pairing is degenerate".into(),
        ));
    }
    Ok(algebra)
}

/// The Chen-Ruan pairing of two classes given by coordinates.
pub fn cr_pairing(
    alg: &GradedAlgebra,
    a: &[CycloNumber],
    b: &[CycloNumber],
) -> Result<CycloNumber, CrError> {
    Ok(alg.pairing(a, b)?)
}
