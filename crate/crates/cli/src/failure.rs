//! Error-to-exit-code mapping: every module error surfaces on stderr with a
//! machine-readable code and yields exit status 2.

use crepant_core::algebra::AlgebraError;
use crepant_core::chenruan::CrError;
use crepant_core::exact::ExactError;
use crepant_core::gb::GbError;
use crepant_core::isocheck::IsoError;
use crepant_core::qcorr::QcorrError;
use crepant_core::toricring::ToricError;
use crepant_core::wps::{FanError, WpsError};

#[derive(Debug)]
pub struct Failure {
    pub code: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: "usage",
            message: message.into(),
        }
    }

    fn new(code: &'static str, e: impl std::fmt::Display) -> Self {
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<WpsError> for Failure {
    fn from(e: WpsError) -> Self {
        let code = match &e {
            WpsError::InvalidWeights(_) => "invalid-weights",
            WpsError::NotWellFormed(_) => "not-well-formed",
            WpsError::UnsupportedFamily(_) => "unsupported-family",
        };
        Failure::new(code, e)
    }
}

impl From<FanError> for Failure {
    fn from(e: FanError) -> Self {
        let code = match &e {
            FanError::InvalidFan(_) => "invalid-fan",
            FanError::NonPrimitiveRay(_) => "non-primitive-ray",
            FanError::RayOutsideSupport(_) => "ray-outside-support",
            FanError::NotARefinement(_) => "not-a-refinement",
        };
        Failure::new(code, e)
    }
}

impl From<GbError> for Failure {
    fn from(e: GbError) -> Self {
        let code = match &e {
            GbError::NonArtinian(_) => "non-artinian",
            GbError::VarMismatch(_) => "variable-mismatch",
            GbError::Parse(_) => "parse",
        };
        Failure::new(code, e)
    }
}

impl From<ExactError> for Failure {
    fn from(e: ExactError) -> Self {
        let code = match &e {
            ExactError::DivisionByZero => "division-by-zero",
            ExactError::SingularMatrix(_) => "singular-matrix",
            ExactError::DimensionMismatch(_) => "dimension-mismatch",
        };
        Failure::new(code, e)
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = match &e {
            AlgebraError::NoFunctional => "no-functional",
            AlgebraError::VarMismatch(_) => "variable-mismatch",
        };
        Failure::new(code, e)
    }
}

impl From<ToricError> for Failure {
    fn from(e: ToricError) -> Self {
        let code = match e {
            ToricError::Wps(inner) => return Failure::from(inner),
            ToricError::Fan(inner) => return Failure::from(inner),
            ToricError::Gb(inner) => return Failure::from(inner),
            ToricError::Algebra(inner) => return Failure::from(inner),
            ToricError::NotSmooth => "not-smooth",
            ToricError::MissingOriginalRay(_) => "missing-original-ray",
            ToricError::BadLinearSystem => "bad-linear-system",
            ToricError::TopNotUnique(_) => "top-not-unique",
            ToricError::CalibrationInconsistent(_) => "calibration-inconsistent",
            ToricError::PoincareDegenerate => "poincare-degenerate",
            ToricError::NotRational(_) => "not-rational",
        };
        Failure::new(code, e)
    }
}

impl From<CrError> for Failure {
    fn from(e: CrError) -> Self {
        let code = match e {
            CrError::Gb(inner) => return Failure::from(inner),
            CrError::Algebra(inner) => return Failure::from(inner),
            CrError::NotGorenstein(_) => "not-gorenstein",
            CrError::UnsupportedFamily(_) => "unsupported-family",
            CrError::PresentationMismatch(_) => "presentation-mismatch",
        };
        Failure::new(code, e)
    }
}

impl From<QcorrError> for Failure {
    fn from(e: QcorrError) -> Self {
        let code = match e {
            QcorrError::Toric(inner) => return Failure::from(inner),
            QcorrError::Algebra(inner) => return Failure::from(inner),
            QcorrError::Exact(inner) => return Failure::from(inner),
            QcorrError::PatternMismatch(_) => "pattern-mismatch",
            QcorrError::Pole(_) => "pole",
            QcorrError::UnsupportedEvaluation(_) => "unsupported-evaluation",
            QcorrError::WrongEvaluationLength { .. } => "wrong-evaluation-length",
            QcorrError::NotRational(_) => "not-rational",
        };
        Failure::new(code, e)
    }
}

impl From<IsoError> for Failure {
    fn from(e: IsoError) -> Self {
        let code = match e {
            IsoError::Algebra(inner) => return Failure::from(inner),
            IsoError::Exact(inner) => return Failure::from(inner),
            IsoError::Parse(inner) => return Failure::from(inner),
            IsoError::BadMap(_) => "bad-map",
            IsoError::MissingGenerator(_) => "missing-generator",
            IsoError::RelationViolation { .. } => "relation-violation",
            IsoError::Dimension(_) => "dimension-mismatch",
        };
        Failure::new(code, e)
    }
}
