//! Composite-level operations.
//!
//! Every operation here is transparent: arguments arrive as
//! composites-or-errors and the first error in left-to-right argument
//! order becomes the result. Non-error results are always inside their
//! body's clan and never oversized (oversized results become
//! `overflow`).

use crate::ast::{ArithOp, CompareOp};
use crate::data::{clan_contains_body, oversized, Body, Composite, Data};
use crate::error::{self, AbstractError};
use crate::ident::Ident;
use crate::limits::Limits;

/// A composite or an abstract error — the result domain of data
/// expressions.
pub type CompositeE = Result<Composite, AbstractError>;

/// Builds the result composite, turning oversized data into `overflow`.
fn sized(data: Data, body: Body, limits: &Limits) -> CompositeE {
    if oversized(&data, limits) {
        return Err(error::overflow());
    }
    debug_assert!(clan_contains_body(&body, &data));
    Composite::new(data, body).ok_or_else(error::body_mismatch)
}

pub fn comp_arith(op: ArithOp, lhs: CompositeE, rhs: CompositeE, limits: &Limits) -> CompositeE {
    let lhs = lhs?;
    let rhs = rhs?;
    let (Some(a), Some(b)) = (lhs.as_number(), rhs.as_number()) else {
        return Err(error::number_expected());
    };
    let result = match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => match a.div_half_even(b, limits.max_fraction_digits) {
            Some(q) => q,
            None => return Err(error::division_by_zero()),
        },
    };
    sized(Data::Number(result), Body::Number, limits)
}

pub fn comp_compare(op: CompareOp, lhs: CompositeE, rhs: CompositeE) -> CompositeE {
    let lhs = lhs?;
    let rhs = rhs?;
    match op {
        CompareOp::Eq | CompareOp::Ne => {
            if lhs.body() != rhs.body() {
                return Err(error::incomparable());
            }
            let equal = lhs.data() == rhs.data();
            Ok(Composite::boolean(if op == CompareOp::Eq { equal } else { !equal }))
        }
        CompareOp::Lt | CompareOp::Le => {
            let (Some(a), Some(b)) = (lhs.as_number(), rhs.as_number()) else {
                return Err(error::number_expected());
            };
            Ok(Composite::boolean(if op == CompareOp::Lt { a < b } else { a <= b }))
        }
    }
}

pub fn comp_glue(lhs: CompositeE, rhs: CompositeE, limits: &Limits) -> CompositeE {
    let lhs = lhs?;
    let rhs = rhs?;
    let (Some(a), Some(b)) = (lhs.as_word(), rhs.as_word()) else {
        return Err(error::word_expected());
    };
    sized(Data::Word(format!("{a}{b}")), Body::Word, limits)
}

/// `list dae ee` — the one-element list.
pub fn list_make(elem: CompositeE, limits: &Limits) -> CompositeE {
    let elem = elem?;
    let (data, body) = elem.into_parts();
    sized(Data::List(vec![data]), Body::list(body), limits)
}

/// `push dae on dae ee` — prepends; lists are homogeneous.
pub fn list_push(elem: CompositeE, list: CompositeE, limits: &Limits) -> CompositeE {
    let elem = elem?;
    let list = list?;
    let Body::List(elem_body) = list.body() else {
        return Err(error::list_expected());
    };
    if elem.body() != elem_body.as_ref() {
        return Err(error::body_mismatch());
    }
    let body = list.body().clone();
    let (Data::List(items), _) = list.into_parts() else { unreachable!() };
    let mut items = items;
    items.insert(0, elem.into_parts().0);
    sized(Data::List(items), body, limits)
}

/// `top (dae)` — the first element.
pub fn list_top(list: CompositeE) -> CompositeE {
    let list = list?;
    let Body::List(elem_body) = list.body() else {
        return Err(error::list_expected());
    };
    let Data::List(items) = list.data() else { unreachable!() };
    match items.first() {
        Some(first) => Ok(Composite::new(first.clone(), elem_body.as_ref().clone())
            .expect("list elements lie in the element body's clan")),
        None => Err(error::empty_list()),
    }
}

/// `array dae ee` — the one-element array, indexed from 1.
pub fn array_make(elem: CompositeE, limits: &Limits) -> CompositeE {
    let elem = elem?;
    let (data, body) = elem.into_parts();
    sized(Data::Array(vec![data]), Body::array(body), limits)
}

/// `add-to-arr dae new dae ee` — appends at index n+1.
pub fn array_append(array: CompositeE, elem: CompositeE, limits: &Limits) -> CompositeE {
    let array = array?;
    let elem = elem?;
    let Body::Array(elem_body) = array.body() else {
        return Err(error::array_expected());
    };
    if elem.body() != elem_body.as_ref() {
        return Err(error::body_mismatch());
    }
    let body = array.body().clone();
    let (Data::Array(items), _) = array.into_parts() else { unreachable!() };
    let mut items = items;
    items.push(elem.into_parts().0);
    sized(Data::Array(items), body, limits)
}

/// `dae [dae]` — 1-based indexing.
pub fn array_index(array: CompositeE, index: CompositeE) -> CompositeE {
    let array = array?;
    let index = index?;
    let Body::Array(elem_body) = array.body() else {
        return Err(error::array_expected());
    };
    let Some(n) = index.as_number() else {
        return Err(error::number_expected());
    };
    let Data::Array(items) = array.data() else { unreachable!() };
    let position = match n.as_index() {
        Some(i) if 1 <= i && i <= items.len() as u64 => i as usize - 1,
        _ => return Err(error::index_out_of_range()),
    };
    Ok(Composite::new(items[position].clone(), elem_body.as_ref().clone())
        .expect("array elements lie in the element body's clan"))
}

/// `record ide as dae ee` — the one-attribute record.
pub fn record_make(attr: &Ident, value: CompositeE, limits: &Limits) -> CompositeE {
    let value = value?;
    let (data, body) = value.into_parts();
    sized(
        Data::Record([(attr.clone(), data)].into_iter().collect()),
        Body::Record([(attr.clone(), body)].into_iter().collect()),
        limits,
    )
}

/// `expand-record dae at ide by dae ee` — adds a fresh attribute.
pub fn record_expand(
    record: CompositeE,
    attr: &Ident,
    value: CompositeE,
    limits: &Limits,
) -> CompositeE {
    let record = record?;
    let value = value?;
    let Body::Record(attrs) = record.body() else {
        return Err(error::record_expected());
    };
    if attrs.contains_key(attr) {
        return Err(error::attribute_exists());
    }
    let mut attrs = attrs.clone();
    let (Data::Record(fields), _) = record.into_parts() else { unreachable!() };
    let mut fields = fields;
    let (data, body) = value.into_parts();
    fields.insert(attr.clone(), data);
    attrs.insert(attr.clone(), body);
    sized(Data::Record(fields), Body::Record(attrs), limits)
}

/// `remove-attr dae at ide ee` — may leave the empty record.
pub fn record_remove(record: CompositeE, attr: &Ident) -> CompositeE {
    let record = record?;
    let Body::Record(attrs) = record.body() else {
        return Err(error::record_expected());
    };
    if !attrs.contains_key(attr) {
        return Err(error::attribute_missing());
    }
    let mut attrs = attrs.clone();
    let (Data::Record(fields), _) = record.into_parts() else { unreachable!() };
    let mut fields = fields;
    fields.remove(attr.as_str());
    attrs.remove(attr.as_str());
    Ok(Composite::new(Data::Record(fields), Body::Record(attrs))
        .expect("removing the same attribute from data and body preserves the clan"))
}

/// `dae . ide` — attribute selection.
pub fn record_select(record: CompositeE, attr: &Ident) -> CompositeE {
    let record = record?;
    let Body::Record(attrs) = record.body() else {
        return Err(error::record_expected());
    };
    let (Some(body), Data::Record(fields)) = (attrs.get(attr), record.data()) else {
        return Err(error::attribute_missing());
    };
    let data = fields.get(attr).expect("record data and body share attributes");
    Ok(Composite::new(data.clone(), body.clone()).expect("record fields lie in their body's clan"))
}
