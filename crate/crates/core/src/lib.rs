//! Computation with finite categories: idempotent completion, coidentifier
//! quotients, adjoint search, Eilenberg–Moore and Kleisli constructions, and
//! decision procedures for semiseparable, separable and naturally full functors.

pub mod adjoint;
pub mod category;
pub mod classify;
pub mod cli;
pub mod coident;
pub mod completion;
pub mod error;
pub mod gallery;
pub mod limits;
pub mod monadics;
pub mod search;

pub use category::{
    compose_functors, hom_set, nat_vertical, nat_whisker_left, nat_whisker_right, same_cat, validate_category, Arrow,
    Cat, FinCat, Functor, IdempotentNat, Mor, NatTrans, Obj, RawCategory, Semifunctor,
};
pub use error::{Error, Result, Violation};
pub use limits::{Budget, Limits};
