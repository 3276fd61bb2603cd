//! Transfers, yokes, types and values.
//!
//! A transfer is a one-argument function on composites-or-errors,
//! represented as a closed transfer-expression term; it is a yoke when
//! its non-error results are Boolean composites. A type pairs a body
//! with a transfer, and its clan is the set of composites matching both.
//! A value pairs a data (or the pseudo-data Ω) with a type.

use std::fmt;

use crate::ast::{SimpleBodyName, TraExp};
use crate::data::{clan_contains_body, oversized, Body, Composite, Data};
use crate::error::{self};
use crate::limits::Limits;
use crate::ops::{self, CompositeE};
use crate::pretty::Pretty;

/// The denotation of a transfer expression: a total function from
/// composites-or-errors to composites-or-errors. Error inputs pass
/// through unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct Transfer {
    term: TraExp,
}

impl Transfer {
    pub fn new(term: TraExp) -> Transfer {
        Transfer { term }
    }

    /// The transfer `TT` that yields `(tt, ('Boolean'))` on any composite.
    pub fn tt() -> Transfer {
        Transfer { term: TraExp::Tt }
    }

    pub fn is_tt(&self) -> bool {
        self.term == TraExp::Tt
    }

    pub fn term(&self) -> &TraExp {
        &self.term
    }

    /// Applies the transfer to the current composite (or error).
    pub fn apply(&self, input: CompositeE, limits: &Limits) -> CompositeE {
        let current = input?;
        eval_term(&self.term, &current, limits)
    }
}

fn eval_term(term: &TraExp, current: &Composite, limits: &Limits) -> CompositeE {
    match term {
        TraExp::True => Ok(Composite::boolean(true)),
        TraExp::False => Ok(Composite::boolean(false)),
        TraExp::Num(n) => {
            let data = Data::Number(n.clone());
            if oversized(&data, limits) {
                return Err(error::overflow());
            }
            Ok(Composite::number(n.clone()))
        }
        TraExp::Word(w) => {
            let data = Data::Word(w.clone());
            if oversized(&data, limits) {
                return Err(error::overflow());
            }
            Ok(Composite::word(w.clone()))
        }
        TraExp::Current => Ok(current.clone()),
        TraExp::AttrSelect(attr) => ops::record_select(Ok(current.clone()), attr),
        TraExp::Arith(op, lhs, rhs) => ops::comp_arith(
            *op,
            eval_term(lhs, current, limits),
            eval_term(rhs, current, limits),
            limits,
        ),
        TraExp::Compare(op, lhs, rhs) => {
            ops::comp_compare(*op, eval_term(lhs, current, limits), eval_term(rhs, current, limits))
        }
        // and/or/not follow McCarthy's tables with labelled errors:
        // the left result decides first, errors play the role of ee.
        TraExp::And(lhs, rhs) => match as_yoke_result(eval_term(lhs, current, limits))? {
            false => Ok(Composite::boolean(false)),
            true => Ok(Composite::boolean(as_yoke_result(eval_term(rhs, current, limits))?)),
        },
        TraExp::Or(lhs, rhs) => match as_yoke_result(eval_term(lhs, current, limits))? {
            true => Ok(Composite::boolean(true)),
            false => Ok(Composite::boolean(as_yoke_result(eval_term(rhs, current, limits))?)),
        },
        TraExp::Not(inner) => {
            let value = as_yoke_result(eval_term(inner, current, limits))?;
            Ok(Composite::boolean(!value))
        }
        TraExp::BodyTest(name) => {
            let matches = matches!(
                (name, current.body()),
                (SimpleBodyName::Boolean, Body::Boolean)
                    | (SimpleBodyName::Number, Body::Number)
                    | (SimpleBodyName::Word, Body::Word)
            );
            Ok(Composite::boolean(matches))
        }
        TraExp::AllList(inner) => all_list(inner, current, limits),
        TraExp::Tt => Ok(Composite::truth()),
    }
}

fn as_yoke_result(result: CompositeE) -> Result<bool, crate::error::AbstractError> {
    result?.as_boolean().ok_or_else(error::a_yoke_expected)
}

/// The `all-list tre ee` clause: the inner transfer is applied to
/// composites built from each list element and the list's element body;
/// the first inner error wins, a non-Boolean inner result is an error,
/// and otherwise the results are conjoined.
fn all_list(inner: &TraExp, current: &Composite, limits: &Limits) -> CompositeE {
    let Body::List(elem_body) = current.body() else {
        return Err(error::list_expected());
    };
    let Data::List(items) = current.data() else { unreachable!() };
    let results: Vec<CompositeE> = items
        .iter()
        .map(|item| {
            let elem = Composite::new(item.clone(), elem_body.as_ref().clone())
                .expect("list elements lie in the element body's clan");
            eval_term(inner, &elem, limits)
        })
        .collect();
    let mut all_true = true;
    let mut oks = Vec::with_capacity(results.len());
    for result in results {
        oks.push(result?);
    }
    for ok in &oks {
        match ok.as_boolean() {
            None => return Err(error::a_yoke_expected()),
            Some(b) => all_true &= b,
        }
    }
    Ok(Composite::boolean(all_true))
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.term.pretty())
    }
}

/// A type: a body paired with a transfer (ideally a yoke).
#[derive(Debug, Clone, PartialEq)]
pub struct Type {
    pub body: Body,
    pub transfer: Transfer,
}

impl Type {
    pub fn new(body: Body, transfer: Transfer) -> Type {
        Type { body, transfer }
    }

    /// A body constrained only by `TT`.
    pub fn plain(body: Body) -> Type {
        Type { body, transfer: Transfer::tt() }
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.transfer.is_tt() {
            write!(f, "{}", self.body)
        } else {
            write!(f, "{} yoke {}", self.body, self.transfer)
        }
    }
}

/// True iff the composite has the type's body, lies in that body's
/// clan, and satisfies the type's transfer.
pub fn clan_contains_type(ty: &Type, com: &Composite, limits: &Limits) -> bool {
    com.body() == &ty.body
        && clan_contains_body(com.body(), com.data())
        && ty.transfer.apply(Ok(com.clone()), limits) == Ok(Composite::truth())
}

/// A variable's value: a data (or Ω for declared-but-uninitialized)
/// together with its type.
#[derive(Debug, Clone, PartialEq)]
pub struct Value {
    pub content: Option<Data>,
    pub ty: Type,
}

impl Value {
    /// The pseudo-value `(Ω, typ)` installed by a declaration.
    pub fn pseudo(ty: Type) -> Value {
        Value { content: None, ty }
    }

    /// A value whose body is the composite's body — the shape every
    /// assignment produces.
    pub fn initialized(com: Composite, transfer: Transfer) -> Value {
        let (data, body) = com.into_parts();
        Value { content: Some(data), ty: Type::new(body, transfer) }
    }

    pub fn is_pseudo(&self) -> bool {
        self.content.is_none()
    }

    /// The stored composite, when initialized.
    pub fn composite(&self) -> Option<Composite> {
        let data = self.content.clone()?;
        Some(
            Composite::new(data, self.ty.body.clone())
                .expect("stored-value invariant: the content lies in the stored body's clan"),
        )
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.content {
            Some(data) => write!(f, "{data}"),
            None => write!(f, "Ω"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::CompareOp;
    use crate::ident::Ident;

    fn limits() -> Limits {
        Limits::default()
    }

    /// `it < 0`
    fn negative_yoke() -> Transfer {
        Transfer::new(TraExp::compare(CompareOp::Lt, TraExp::Current, TraExp::int(0)))
    }

    #[test]
    fn tt_accepts_everything() {
        for com in [Composite::int(3), Composite::word("a"), Composite::boolean(false)] {
            assert_eq!(Transfer::tt().apply(Ok(com), &limits()), Ok(Composite::truth()));
        }
    }

    #[test]
    fn constant_transfer() {
        let transfer = Transfer::new(TraExp::int(273));
        assert_eq!(
            transfer.apply(Ok(Composite::word("anything")), &limits()),
            Ok(Composite::int(273))
        );
    }

    #[test]
    fn errors_pass_through() {
        let err = Err(error::division_by_zero());
        assert_eq!(Transfer::tt().apply(err.clone(), &limits()), err);
        assert_eq!(negative_yoke().apply(err.clone(), &limits()), err);
    }

    #[test]
    fn clan_of_a_type() {
        let number_tt = Type::plain(Body::Number);
        assert!(clan_contains_type(&number_tt, &Composite::int(3), &limits()));

        let negative = Type::new(Body::Number, negative_yoke());
        assert!(!clan_contains_type(&negative, &Composite::int(3), &limits()));
        assert!(clan_contains_type(&negative, &Composite::int(-1), &limits()));

        let word_tt = Type::plain(Body::Word);
        assert!(!clan_contains_type(&word_tt, &Composite::int(3), &limits()));
    }

    #[test]
    fn record_attribute_yoke() {
        // record.salary + record.bonus < 10000
        let yoke = Transfer::new(TraExp::compare(
            CompareOp::Lt,
            TraExp::Arith(
                crate::ast::ArithOp::Add,
                Box::new(TraExp::AttrSelect(Ident::new("salary"))),
                Box::new(TraExp::AttrSelect(Ident::new("bonus"))),
            ),
            TraExp::int(10000),
        ));
        let employee = ops::record_expand(
            ops::record_make(&Ident::new("salary"), Ok(Composite::int(10)), &limits()),
            &Ident::new("bonus"),
            Ok(Composite::int(1)),
            &limits(),
        )
        .unwrap();
        assert_eq!(yoke.apply(Ok(employee), &limits()), Ok(Composite::truth()));
        // on a non-record the attribute selection is an error
        assert_eq!(yoke.apply(Ok(Composite::int(5)), &limits()), Err(error::record_expected()));
    }

    #[test]
    fn all_list_clause() {
        let all_numbers =
            Transfer::new(TraExp::AllList(Box::new(TraExp::BodyTest(SimpleBodyName::Number))));
        let nums = ops::list_push(
            Ok(Composite::int(1)),
            ops::list_push(
                Ok(Composite::int(2)),
                ops::list_make(Ok(Composite::int(3)), &limits()),
                &limits(),
            ),
            &limits(),
        )
        .unwrap();
        assert_eq!(all_numbers.apply(Ok(nums), &limits()), Ok(Composite::truth()));
        assert_eq!(
            all_numbers.apply(Ok(Composite::int(5)), &limits()),
            Err(error::list_expected())
        );

        // a non-yoke inner transfer is reported
        let not_a_yoke = Transfer::new(TraExp::AllList(Box::new(TraExp::int(7))));
        let words = ops::list_make(Ok(Composite::word("a")), &limits()).unwrap();
        assert_eq!(not_a_yoke.apply(Ok(words.clone()), &limits()), Err(error::a_yoke_expected()));

        // an all-false inner yoke yields ff, not an error
        let all_negative = Transfer::new(TraExp::AllList(Box::new(TraExp::compare(
            CompareOp::Lt,
            TraExp::Current,
            TraExp::int(0),
        ))));
        let ones = ops::list_make(Ok(Composite::int(1)), &limits()).unwrap();
        assert_eq!(all_negative.apply(Ok(ones), &limits()), Ok(Composite::boolean(false)));

        // the empty list satisfies any all-list yoke
        let empty = Composite::new(Data::List(vec![]), Body::list(Body::Number)).unwrap();
        assert_eq!(all_numbers.apply(Ok(empty), &limits()), Ok(Composite::truth()));

        // first inner error wins over later non-boolean results
        let select_a =
            Transfer::new(TraExp::AllList(Box::new(TraExp::AttrSelect(Ident::new("a")))));
        assert_eq!(select_a.apply(Ok(words), &limits()), Err(error::record_expected()));
    }

    #[test]
    fn mccarthy_connectives_in_transfers() {
        // (it < 0) or (record.a < 0): on a number, the left decides
        let term = TraExp::Or(
            Box::new(TraExp::compare(CompareOp::Lt, TraExp::Current, TraExp::int(0))),
            Box::new(TraExp::compare(
                CompareOp::Lt,
                TraExp::AttrSelect(Ident::new("a")),
                TraExp::int(0),
            )),
        );
        let transfer = Transfer::new(term);
        assert_eq!(transfer.apply(Ok(Composite::int(-1)), &limits()), Ok(Composite::truth()));
        // left false forces the erroneous right
        assert_eq!(transfer.apply(Ok(Composite::int(1)), &limits()), Err(error::record_expected()));
        // non-boolean operand
        let bad = Transfer::new(TraExp::Not(Box::new(TraExp::int(1))));
        assert_eq!(bad.apply(Ok(Composite::int(1)), &limits()), Err(error::a_yoke_expected()));
    }

    #[test]
    fn value_shapes() {
        let v = Value::pseudo(Type::plain(Body::Number));
        assert!(v.is_pseudo());
        assert_eq!(v.composite(), None);
        assert_eq!(v.to_string(), "Ω");

        let v = Value::initialized(Composite::int(3), Transfer::tt());
        assert_eq!(v.composite(), Some(Composite::int(3)));
        assert_eq!(v.ty.body, Body::Number);
    }
}
