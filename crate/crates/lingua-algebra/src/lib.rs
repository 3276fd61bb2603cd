//! Meta-level toolkit: many-sorted signatures, algorithmic derivation
//! of abstract-syntax grammars, least-fixpoint enumeration of
//! equational grammars, reachability analysis, and the NumBool
//! reference semantics.

pub mod grammar;
pub mod numbool;
pub mod signature;

pub use grammar::{EquationalGrammar, LangExp};
pub use numbool::{eval_numbool, numbool_signature, MalformedTerm, NumBoolValue};
pub use signature::{Ctor, Signature};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    IllFormedSignature(String),
    MalformedGrammar(String),
    UnknownNonterminal(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::IllFormedSignature(msg) => write!(f, "ill-formed-signature: {msg}"),
            AlgebraError::MalformedGrammar(msg) => write!(f, "malformed-grammar: {msg}"),
            AlgebraError::UnknownNonterminal(name) => write!(f, "unknown nonterminal '{name}'"),
        }
    }
}

impl std::error::Error for AlgebraError {}
