//! The two-sorted algebra of numbers and Booleans, and the evaluation
//! homomorphism from its abstract syntax.
//!
//! This is the reference semantics used as an oracle: arithmetic is
//! unbounded and exact, and the Boolean operators are the three-valued
//! ones restricted to classical values (on which they coincide with the
//! classical ones).

use std::fmt;

use lingua::TriBool;
use num_bigint::BigInt;

use crate::signature::Signature;

/// The signature of the abstract-syntax algebra: sorts `NumExp` and
/// `BoolExp`, constructors `0 1 + = < tt ff not or`.
pub fn numbool_signature() -> Signature {
    Signature::parse(NUMBOOL_SIGNATURE_TEXT).expect("the built-in signature is well formed")
}

pub const NUMBOOL_SIGNATURE_TEXT: &str = "\
sort NumExp
sort BoolExp
ctor 0 : -> NumExp
ctor 1 : -> NumExp
ctor + : NumExp x NumExp -> NumExp
ctor tt : -> BoolExp
ctor ff : -> BoolExp
ctor = : NumExp x NumExp -> BoolExp
ctor < : NumExp x NumExp -> BoolExp
ctor not : BoolExp -> BoolExp
ctor or : BoolExp x BoolExp -> BoolExp
";

/// A value of the algebra: a number or a truth value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumBoolValue {
    Num(BigInt),
    Bool(TriBool),
}

impl fmt::Display for NumBoolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumBoolValue::Num(n) => write!(f, "{n}"),
            NumBoolValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedTerm(pub String);

impl fmt::Display for MalformedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed-term: {}", self.0)
    }
}

impl std::error::Error for MalformedTerm {}

/// The unique homomorphism from abstract syntax into the algebra,
/// evaluated recursively: `eval_numbool("+(1,+(1,0))") = 2`.
pub fn eval_numbool(term: &str) -> Result<NumBoolValue, MalformedTerm> {
    let mut parser = TermParser { text: term, pos: 0 };
    let value = parser.term()?;
    if parser.pos != parser.text.len() {
        return Err(MalformedTerm(format!("trailing input at byte {}", parser.pos)));
    }
    Ok(value)
}

struct TermParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> TermParser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, prefix: &str) -> Result<(), MalformedTerm> {
        if self.eat(prefix) {
            Ok(())
        } else {
            Err(MalformedTerm(format!("expected '{prefix}' at byte {}", self.pos)))
        }
    }

    fn term(&mut self) -> Result<NumBoolValue, MalformedTerm> {
        use NumBoolValue::{Bool, Num};
        if self.eat("0") {
            return Ok(Num(BigInt::from(0)));
        }
        if self.eat("1") {
            return Ok(Num(BigInt::from(1)));
        }
        if self.eat("tt") {
            return Ok(Bool(TriBool::Tt));
        }
        if self.eat("ff") {
            return Ok(Bool(TriBool::Ff));
        }
        if self.eat("+(") {
            let (a, b) = self.pair()?;
            return match (a, b) {
                (Num(a), Num(b)) => Ok(Num(a + b)),
                _ => Err(MalformedTerm("+ needs numeric arguments".to_string())),
            };
        }
        if self.eat("=(") {
            let (a, b) = self.pair()?;
            return match (a, b) {
                (Num(a), Num(b)) => Ok(Bool(TriBool::from(a == b))),
                _ => Err(MalformedTerm("= needs numeric arguments".to_string())),
            };
        }
        if self.eat("<(") {
            let (a, b) = self.pair()?;
            return match (a, b) {
                (Num(a), Num(b)) => Ok(Bool(TriBool::from(a < b))),
                _ => Err(MalformedTerm("< needs numeric arguments".to_string())),
            };
        }
        if self.eat("not(") {
            let inner = self.term()?;
            self.expect(")")?;
            return match inner {
                Bool(b) => Ok(Bool(b.not_m())),
                Num(_) => Err(MalformedTerm("not needs a boolean argument".to_string())),
            };
        }
        if self.eat("or(") {
            let (a, b) = self.pair()?;
            return match (a, b) {
                (Bool(a), Bool(b)) => Ok(Bool(a.or_m(b))),
                _ => Err(MalformedTerm("or needs boolean arguments".to_string())),
            };
        }
        Err(MalformedTerm(format!("unexpected input at byte {}", self.pos)))
    }

    fn pair(&mut self) -> Result<(NumBoolValue, NumBoolValue), MalformedTerm> {
        let a = self.term()?;
        self.expect(",")?;
        let b = self.term()?;
        self.expect(")")?;
        Ok((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(i: i64) -> NumBoolValue {
        NumBoolValue::Num(BigInt::from(i))
    }

    #[test]
    fn worked_examples() {
        assert_eq!(eval_numbool("+(1,+(1,0))").unwrap(), num(2));
        assert_eq!(eval_numbool("<(+(1,+(1,0)),0)").unwrap(), NumBoolValue::Bool(TriBool::Ff));
        assert_eq!(eval_numbool("0").unwrap(), num(0));
        assert_eq!(eval_numbool("not(<(1,+(1,1)))").unwrap(), NumBoolValue::Bool(TriBool::Ff));
    }

    #[test]
    fn gluing_property() {
        assert_eq!(eval_numbool("+(1,+(1,0))"), eval_numbool("+(1,1)"));
    }

    #[test]
    fn malformed_terms() {
        assert!(eval_numbool("+(tt,0)").is_err());
        assert!(eval_numbool("+(1").is_err());
        assert!(eval_numbool("2").is_err());
        assert!(eval_numbool("+(1,0))").is_err());
    }

    #[test]
    fn classical_restriction_means_no_ee() {
        // the evaluation homomorphism only ever sees tt/ff
        for term in ["or(tt,ff)", "not(tt)", "or(not(ff),tt)"] {
            match eval_numbool(term).unwrap() {
                NumBoolValue::Bool(b) => assert!(b.is_classical()),
                NumBoolValue::Num(_) => panic!("boolean term"),
            }
        }
    }
}
