//! An interpreter built from denotations up.
//!
//! The value world: [`data::Data`] with structural [`data::Body`]
//! descriptions, paired into [`data::Composite`]s; one-argument
//! [`transfer::Transfer`]s whose Boolean-valued instances (yokes) act
//! as integrity constraints; [`transfer::Type`]s as body–transfer
//! pairs; [`state::State`] threading environments, a valuation and an
//! error register through the imperative layer.
//!
//! The language surface: [`ast`] trees, a strict fully parenthesized
//! concrete syntax and a colloquial superset restored to it by the
//! parser ([`syntax`]), a pretty printer back to strict text
//! ([`pretty`]), and the fuel-bounded evaluator ([`semantics`]).
//!
//! Errors are words like `division-by-zero` ([`error::AbstractError`]);
//! operations are transparent (first erroneous argument wins) except
//! the lazy McCarthy connectives ([`mccarthy`]).

pub mod ast;
pub mod data;
pub mod error;
pub mod gen;
pub mod ident;
pub mod limits;
pub mod mccarthy;
pub mod number;
pub mod ops;
pub mod pretty;
pub mod semantics;
pub mod state;
pub mod syntax;
pub mod transfer;

pub use ast::{DatExp, Instruction, Preamble, Program, TraExp, TypExp};
pub use data::{clan_contains_body, coherent, oversized, Body, Composite, Data};
pub use error::AbstractError;
pub use ident::Ident;
pub use limits::Limits;
pub use mccarthy::TriBool;
pub use number::Number;
pub use ops::CompositeE;
pub use pretty::Pretty;
pub use semantics::{Interp, OutOfFuel, Outcome};
pub use state::State;
pub use syntax::{Mode, ParseError};
pub use transfer::{clan_contains_type, Transfer, Type, Value};
