use std::fmt;

use thiserror::Error;

/// A single broken law or malformed reference found while validating raw tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DanglingReference(String),
    DuplicateName(String),
    BadIdentity { object: String, reason: String },
    MissingComposite { g: String, f: String },
    DuplicateComposite { g: String, f: String },
    NotComposable { g: String, f: String },
    MistypedComposite { g: String, f: String, gf: String },
    NonAssociative { h: String, g: String, f: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingReference(what) => write!(out, "dangling reference: {what}"),
            Violation::DuplicateName(name) => write!(out, "duplicate name: {name}"),
            Violation::BadIdentity { object, reason } => {
                write!(out, "bad identity at {object}: {reason}")
            }
            Violation::MissingComposite { g, f } => write!(out, "missing composite {g} o {f}"),
            Violation::DuplicateComposite { g, f } => {
                write!(out, "composite {g} o {f} listed twice")
            }
            Violation::NotComposable { g, f } => write!(out, "{g} o {f} is not composable"),
            Violation::MistypedComposite { g, f, gf } => {
                write!(out, "{g} o {f} = {gf} has the wrong domain or codomain")
            }
            Violation::NonAssociative { h, g, f } => {
                write!(out, "({h} o {g}) o {f} differs from {h} o ({g} o {f})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid category: {}", list(.0))]
    InvalidCategory(Vec<Violation>),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("not a functor: {0}")]
    NotFunctor(String),
    #[error("not natural: {0}")]
    NotNatural(String),
    #[error("not idempotent: {0}")]
    NotIdempotent(String),
    #[error("monad law fails: {0}")]
    MonadLaw(String),
    #[error("triangle identity fails at {0}")]
    TriangleFailure(String),
    #[error("invalid witness: {0}")]
    WitnessInvalid(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("unknown morphism {0}")]
    UnknownMorphism(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("not a basis: {0}")]
    NotABasis(String),
    #[error("{0} is not a central idempotent")]
    NotCentralIdempotent(String),
    #[error("no natural isomorphism found: {0}")]
    IsoNotFound(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn list(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
