//! Finite graded algebras presented by structure constants.
//!
//! A [`GradedAlgebra`] is the common carrier for the cohomology ring of a
//! toric resolution, its quantum-corrected variants, and the Chen-Ruan ring
//! of the orbifold: a finite monomial basis (the staircase of an Artinian
//! quotient presentation), cohomological degrees, the 3-index table of
//! structure constants, and optionally a degree functional together with
//! the pairing Gram matrix it induces.

use std::collections::BTreeMap;

use serde_json::json;
use thiserror::Error;

use crate::exact::{CycloNumber, ExactMatrix};
use crate::gb::{Exponents, GbError, Polynomial, QuotientPresentation};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("no degree functional calibrated on this algebra")]
    NoFunctional,
    #[error("variable sets do not match: {0}")]
    VarMismatch(String),
}

/// A finite graded algebra with labeled monomial basis and exact structure
/// constants. The grading is cohomological: every variable sits in degree 2.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    presentation: QuotientPresentation,
    basis: Vec<Exponents>,
    labels: Vec<String>,
    degrees: Vec<u32>,
    unit: usize,
    table: Vec<Vec<Vec<CycloNumber>>>,
    functional: Option<Vec<CycloNumber>>,
    gram: Option<ExactMatrix>,
}

impl GradedAlgebra {
    /// Build the algebra skeleton from an Artinian quotient presentation:
    /// basis = staircase, structure constants by normal form of products.
    pub fn from_presentation(q: QuotientPresentation) -> Result<Self, GbError> {
        let basis: Vec<Exponents> = q.staircase()?.to_vec();
        if basis.is_empty() {
            return Err(GbError::Parse(
                "quotient is trivial (unit ideal); no algebra to build".into(),
            ));
        }
        let vars = q.vars().to_vec();
        let labels: Vec<String> = basis
            .iter()
            .map(|e| Polynomial::monomial_label(&vars, e))
            .collect();
        let degrees: Vec<u32> = basis.iter().map(|e| 2 * e.iter().sum::<u32>()).collect();
        let unit = basis
            .iter()
            .position(|e| e.iter().all(|&x| x == 0))
            .expect("staircase of a proper ideal contains 1");
        let dim = basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..=i {
                let prod = Polynomial::monomial(
                    &vars,
                    basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect(),
                    CycloNumber::one(),
                );
                let nf = q.normal_form(&prod);
                let coords = expand_on_staircase(&nf, &basis);
                // grading check: products respect cohomological degree
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        assert_eq!(
                            degrees[k],
                            degrees[i] + degrees[j],
                            "structure constants violate the grading"
                        );
                    }
                }
                table[i][j] = coords.clone();
                table[j][i] = coords;
            }
        }
        Ok(GradedAlgebra {
            presentation: q,
            basis,
            labels,
            degrees,
            unit,
            table,
            functional: None,
            gram: None,
        })
    }

    pub fn presentation(&self) -> &QuotientPresentation {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &[String] {
        self.presentation.vars()
    }

    pub fn basis(&self) -> &[Exponents] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Top cohomological degree, 2n for an n-fold.
    pub fn top_degree(&self) -> u32 {
        *self.degrees.iter().max().unwrap()
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    /// Dimension of each graded piece.
    pub fn graded_dims(&self) -> BTreeMap<u32, usize> {
        let mut map = BTreeMap::new();
        for &d in &self.degrees {
            *map.entry(d).or_insert(0) += 1;
        }
        map
    }

    /// Index of the basis element equal to the variable `name`, when the
    /// variable itself is a basis monomial.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        let v = self.vars().iter().position(|x| x == name)?;
        self.basis
            .iter()
            .position(|e| e.iter().enumerate().all(|(k, &x)| x == u32::from(k == v)))
    }

    /// Structure-constant row: coordinates of m_i * m_j on the basis.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[CycloNumber] {
        &self.table[i][j]
    }

    /// Bilinear extension of the product to coordinate vectors.
    pub fn mul_vec(&self, x: &[CycloNumber], y: &[CycloNumber]) -> Vec<CycloNumber> {
        let dim = self.dim();
        let mut out = vec![CycloNumber::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = &(xi * yj);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = &out[k] + &(c * t);
                    }
                }
            }
        }
        out
    }

    /// Coordinates of a polynomial in the variables of the presentation.
    pub fn expand(&self, p: &Polynomial) -> Result<Vec<CycloNumber>, AlgebraError> {
        if p.vars() != self.vars() {
            return Err(AlgebraError::VarMismatch(format!(
                "{:?} vs {:?}",
                p.vars(),
                self.vars()
            )));
        }
        let nf = self.presentation.normal_form(p);
        Ok(expand_on_staircase(&nf, &self.basis))
    }

    /// Coordinate vector of a single basis element.
    pub fn basis_vector(&self, i: usize) -> Vec<CycloNumber> {
        let mut v = vec![CycloNumber::zero(); self.dim()];
        v[i] = CycloNumber::one();
        v
    }

    /// Install the degree functional (values on the basis) and compute the
    /// pairing Gram matrix g_ij = deg(m_i * m_j).
    pub fn set_functional(&mut self, functional: Vec<CycloNumber>) {
        assert_eq!(functional.len(), self.dim());
        let dim = self.dim();
        let mut gram = ExactMatrix::zero(dim, dim);
        for i in 0..dim {
            for j in 0..=i {
                let mut v = CycloNumber::zero();
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() && !functional[k].is_zero() {
                        v = &v + &(t * &functional[k]);
                    }
                }
                gram.set(i, j, v.clone());
                gram.set(j, i, v);
            }
        }
        self.functional = Some(functional);
        self.gram = Some(gram);
    }

    pub fn functional(&self) -> Result<&[CycloNumber], AlgebraError> {
        self.functional.as_deref().ok_or(AlgebraError::NoFunctional)
    }

    /// The linear functional applied to a coordinate vector.
    pub fn integrate(&self, x: &[CycloNumber]) -> Result<CycloNumber, AlgebraError> {
        let f = self.functional()?;
        let mut out = CycloNumber::zero();
        for (xi, fi) in x.iter().zip(f) {
            if !xi.is_zero() && !fi.is_zero() {
                out = &out + &(xi * fi);
            }
        }
        Ok(out)
    }

    /// deg(x * y), the pairing of two coordinate vectors.
    pub fn pairing(&self, x: &[CycloNumber], y: &[CycloNumber]) -> Result<CycloNumber, AlgebraError> {
        self.integrate(&self.mul_vec(x, y))
    }

    pub fn gram(&self) -> Result<&ExactMatrix, AlgebraError> {
        self.gram.as_ref().ok_or(AlgebraError::NoFunctional)
    }

    /// The same algebra with a replacement structure-constant table (used
    /// for quantum corrections; grading, unit, functional and Gram stay).
    pub fn with_table(&self, table: Vec<Vec<Vec<CycloNumber>>>) -> Self {
        assert_eq!(table.len(), self.dim());
        let mut out = self.clone();
        out.table = table;
        out
    }

    pub fn table(&self) -> &Vec<Vec<Vec<CycloNumber>>> {
        &self.table
    }

    /// Render a coordinate vector as a readable combination of basis labels.
    pub fn describe(&self, x: &[CycloNumber]) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})*{}", c, self.labels[k]))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Deterministic JSON report of the algebra.
    pub fn to_report(&self) -> serde_json::Value {
        let table: Vec<serde_json::Value> = (0..self.dim())
            .flat_map(|i| {
                (0..self.dim()).map(move |j| (i, j)).map(|(i, j)| {
                    json!({
                        "left": self.labels[i],
                        "right": self.labels[j],
                        "product": self.table[i][j]
                            .iter()
                            .map(|c| c.to_json())
                            .collect::<Vec<_>>(),
                    })
                })
            })
            .collect();
        json!({
            "variables": self.vars(),
            "basis": self.labels,
            "degrees": self.degrees,
            "generators": self
                .presentation
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>(),
            "groebner_basis": self
                .presentation
                .groebner()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>(),
            "structure_constants": table,
            "degree_functional": self
                .functional
                .as_ref()
                .map(|f| f.iter().map(|c| c.to_json()).collect::<Vec<_>>()),
            "gram": self.gram.as_ref().map(|g| {
                (0..g.rows())
                    .map(|i| {
                        (0..g.cols())
                            .map(|j| g.get(i, j).to_json())
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            }),
        })
    }
}

fn expand_on_staircase(nf: &Polynomial, basis: &[Exponents]) -> Vec<CycloNumber> {
    let mut out = vec![CycloNumber::zero(); basis.len()];
    for (e, c) in nf.terms() {
        let k = basis
            .iter()
            .position(|b| b == e)
            .expect("normal form is supported on the staircase");
        out[k] = c.clone();
    }
    out
}
