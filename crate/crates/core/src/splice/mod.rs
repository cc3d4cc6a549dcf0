//! Manifold expressions and the evaluator for spliced and k-spliced sums.

mod certificate;
mod conditions;
mod eval;

pub use certificate::{Check, Citation, LambdaCertificate, Status, Verdict};
pub use conditions::{check_splice_conditions, ConditionCheck, KRange, Witness};
pub use eval::{non_additivity_demo, seifert_splice_pattern, Evaluator, NonAdditivityReport};

use std::fmt;

use thiserror::Error;

use crate::casson::{BrieskornTriple, CassonError};
use crate::knots::{KnotDescriptor, KnotError};
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpliceError {
    #[error("k-range {0}..{1} contains no nonzero k")]
    EmptyKRange(i64, i64),
    #[error("singular fiber index {index} is out of range for {triple}")]
    BadFiber { triple: BrieskornTriple, index: u8 },
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    Casson(#[from] CassonError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One side of a spliced sum: a knot inside a homology sphere.
///
/// Knots described by a [`KnotDescriptor`] live in `S^3`; inside a Brieskorn
/// sphere only the three singular fibers are available.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AmbientKnot {
    S3(KnotDescriptor),
    SingularFiber { triple: BrieskornTriple, index: u8 },
}

impl AmbientKnot {
    pub fn in_s3(knot: KnotDescriptor) -> Self {
        AmbientKnot::S3(knot)
    }

    /// The singular fiber with 1-based `index` in ascending order of fiber orders.
    pub fn singular_fiber(triple: BrieskornTriple, index: u8) -> Result<Self, SpliceError> {
        if !(1..=3).contains(&index) {
            return Err(SpliceError::BadFiber { triple, index });
        }
        Ok(AmbientKnot::SingularFiber { triple, index })
    }

    /// The singular fiber of the given order.
    pub fn fiber_of_order(triple: BrieskornTriple, order: u64) -> Option<Self> {
        triple
            .fiber_index(order)
            .map(|index| AmbientKnot::SingularFiber { triple, index })
    }

    /// The ambient homology sphere as an expression.
    pub fn ambient(&self) -> ManifoldExpression {
        match self {
            AmbientKnot::S3(_) => ManifoldExpression::S3,
            AmbientKnot::SingularFiber { triple, .. } => ManifoldExpression::Brieskorn(*triple),
        }
    }

    pub fn fiber_order(&self) -> Option<u64> {
        match self {
            AmbientKnot::S3(_) => None,
            AmbientKnot::SingularFiber { triple, index } => triple.fiber_order(*index),
        }
    }
}

impl fmt::Display for AmbientKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientKnot::S3(k) => write!(f, "{k}"),
            AmbientKnot::SingularFiber { triple, .. } => {
                let [a, b, c] = triple.orders();
                write!(f, "brieskorn({a},{b},{c})@{}", self.fiber_order().unwrap())
            }
        }
    }
}

/// A homology sphere built from the supported constructions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ManifoldExpression {
    S3,
    Brieskorn(BrieskornTriple),
    Catalog(String),
    /// `numerator/denominator` Dehn surgery on a knot in `S^3`.
    Surgery {
        numerator: i64,
        denominator: i64,
        knot: KnotDescriptor,
    },
    Splice(AmbientKnot, AmbientKnot),
    KSplice {
        k: i64,
        knot1: KnotDescriptor,
        knot2: KnotDescriptor,
    },
}

/// Prints in the expression grammar accepted by the command-line parser.
impl fmt::Display for ManifoldExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldExpression::S3 => write!(f, "S3"),
            ManifoldExpression::Brieskorn(t) => {
                let [a, b, c] = t.orders();
                write!(f, "brieskorn({a},{b},{c})")
            }
            ManifoldExpression::Catalog(name) => write!(f, "catalog({name})"),
            ManifoldExpression::Surgery {
                numerator,
                denominator,
                knot,
            } => write!(f, "surgery({numerator}/{denominator}, {knot})"),
            ManifoldExpression::Splice(a, b) => write!(f, "splice({a}, {b})"),
            ManifoldExpression::KSplice { k, knot1, knot2 } => {
                write!(f, "ksplice({k}, {knot1}, {knot2})")
            }
        }
    }
}
