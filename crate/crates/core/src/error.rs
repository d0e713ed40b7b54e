use thiserror::Error;

use crate::exactnum::ExactError;
use crate::polyhedra::PolyhedraError;
use crate::polyring::RingError;
use crate::segre::SegreError;
use crate::valuation::ValuationError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Segre(#[from] SegreError),
    #[error("{0}")]
    Precondition(String),
}

/// Coarse failure kind, used by the command line for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Precondition,
    Budget,
    Consistency,
}

fn exact_class(e: &ExactError) -> ErrorClass {
    match e {
        ExactError::BadRational(_) | ExactError::ZeroDenominator => ErrorClass::Precondition,
        _ => ErrorClass::Consistency,
    }
}

fn ring_class(e: &RingError) -> ErrorClass {
    match e {
        RingError::BudgetExceeded { .. } => ErrorClass::Budget,
        _ => ErrorClass::Precondition,
    }
}

fn polyhedra_class(e: &PolyhedraError) -> ErrorClass {
    match e {
        PolyhedraError::TailNotMonic { .. } | PolyhedraError::Discontinuous { .. } => ErrorClass::Consistency,
        PolyhedraError::Exact(x) => exact_class(x),
        _ => ErrorClass::Precondition,
    }
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Exact(e) => exact_class(e),
            Error::Ring(e) => ring_class(e),
            Error::Valuation(ValuationError::Ring(e)) => ring_class(e),
            Error::Valuation(_) => ErrorClass::Precondition,
            Error::Polyhedra(e) => polyhedra_class(e),
            Error::Segre(e) => match e {
                SegreError::ResidualSpuriousPole { .. } | SegreError::NonIntegerDegree { .. } | SegreError::NotNormalized(_) => {
                    ErrorClass::Consistency
                }
                SegreError::Exact(x) => exact_class(x),
                SegreError::Polyhedra(x) => polyhedra_class(x),
                _ => ErrorClass::Precondition,
            },
            Error::Precondition(_) => ErrorClass::Precondition,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        assert_eq!(Error::from(RingError::BudgetExceeded { limit: 1 }).class(), ErrorClass::Budget);
        assert_eq!(Error::from(ValuationError::Ring(RingError::BudgetExceeded { limit: 1 })).class(), ErrorClass::Budget);
        assert_eq!(Error::from(PolyhedraError::DimensionTooLarge { dim: 7, max: 6 }).class(), ErrorClass::Precondition);
        let bad = ExactError::InconsistentExtraPoint { x: "1".into(), y: "2".into(), fitted: "3".into() };
        assert_eq!(Error::from(PolyhedraError::Exact(bad)).class(), ErrorClass::Consistency);
        assert_eq!(Error::from(SegreError::NotMonomial).class(), ErrorClass::Precondition);
        assert_eq!(Error::from(SegreError::NotNormalized("2".into())).class(), ErrorClass::Consistency);
    }
}
