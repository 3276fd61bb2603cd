//! Data, bodies and composites.
//!
//! A body describes the internal structure of a data (number, list of
//! numbers, record of ...). The clan of a body is the set of data with
//! that structure. A composite pairs a data with a body it belongs to;
//! every data expression evaluates to a composite or an abstract error.

use std::collections::BTreeMap;
use std::fmt;

use crate::ident::Ident;
use crate::limits::Limits;
use crate::number::Number;

/// A runtime datum. Arrays are sequences, so their index domain is
/// exactly `{1..n}` by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Data {
    Boolean(bool),
    Number(Number),
    Word(String),
    List(Vec<Data>),
    Array(Vec<Data>),
    Record(BTreeMap<Ident, Data>),
}

impl Data {
    pub fn number(i: i64) -> Data {
        Data::Number(Number::from_int(i))
    }

    pub fn word(w: impl Into<String>) -> Data {
        Data::Word(w.into())
    }
}

/// The structural description of a data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Boolean,
    Number,
    Word,
    List(Box<Body>),
    Array(Box<Body>),
    Record(BTreeMap<Ident, Body>),
}

impl Body {
    pub fn list(elem: Body) -> Body {
        Body::List(Box::new(elem))
    }

    pub fn array(elem: Body) -> Body {
        Body::Array(Box::new(elem))
    }

    pub fn record<I: Into<Ident>>(attrs: impl IntoIterator<Item = (I, Body)>) -> Body {
        Body::Record(attrs.into_iter().map(|(i, b)| (i.into(), b)).collect())
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, Body::Boolean | Body::Number | Body::Word)
    }
}

/// True iff `data` lies in the clan of `body`, by structural recursion.
pub fn clan_contains_body(body: &Body, data: &Data) -> bool {
    match (body, data) {
        (Body::Boolean, Data::Boolean(_)) => true,
        (Body::Number, Data::Number(_)) => true,
        (Body::Word, Data::Word(_)) => true,
        (Body::List(elem), Data::List(items)) | (Body::Array(elem), Data::Array(items)) => {
            items.iter().all(|item| clan_contains_body(elem, item))
        }
        (Body::Record(attrs), Data::Record(fields)) => {
            attrs.len() == fields.len()
                && attrs
                    .iter()
                    .all(|(name, b)| fields.get(name).is_some_and(|d| clan_contains_body(b, d)))
        }
        _ => false,
    }
}

/// A data together with a body whose clan contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composite {
    data: Data,
    body: Body,
}

impl Composite {
    /// Rejects pairs where the data is outside the body's clan.
    pub fn new(data: Data, body: Body) -> Option<Composite> {
        clan_contains_body(&body, &data).then_some(Composite { data, body })
    }

    pub fn boolean(b: bool) -> Composite {
        Composite { data: Data::Boolean(b), body: Body::Boolean }
    }

    pub fn number(n: Number) -> Composite {
        Composite { data: Data::Number(n), body: Body::Number }
    }

    pub fn int(i: i64) -> Composite {
        Composite::number(Number::from_int(i))
    }

    pub fn word(w: impl Into<String>) -> Composite {
        Composite { data: Data::Word(w.into()), body: Body::Word }
    }

    /// The composite `(tt, ('Boolean'))`.
    pub fn truth() -> Composite {
        Composite::boolean(true)
    }

    pub fn data(&self) -> &Data {
        &self.data
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    pub fn into_parts(self) -> (Data, Body) {
        (self.data, self.body)
    }

    /// Boolean composites are the values of yokes.
    pub fn as_boolean(&self) -> Option<bool> {
        match (&self.data, &self.body) {
            (Data::Boolean(b), Body::Boolean) => Some(*b),
            _ => None,
        }
    }

    pub fn as_number(&self) -> Option<&Number> {
        match (&self.data, &self.body) {
            (Data::Number(n), Body::Number) => Some(n),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&str> {
        match (&self.data, &self.body) {
            (Data::Word(w), Body::Word) => Some(w),
            _ => None,
        }
    }
}

/// The universal size predicate, checked recursively.
pub fn oversized(data: &Data, limits: &Limits) -> bool {
    match data {
        Data::Boolean(_) => false,
        Data::Number(n) => {
            n.magnitude_exceeds(limits.max_number_digits)
                || n.fraction_digits() > limits.max_fraction_digits
        }
        Data::Word(w) => w.chars().count() > limits.max_word_length,
        Data::List(items) | Data::Array(items) => {
            items.len() > limits.max_collection_size
                || items.iter().any(|item| oversized(item, limits))
        }
        Data::Record(fields) => {
            fields.len() > limits.max_collection_size
                || fields.values().any(|value| oversized(value, limits))
        }
    }
}

/// Body coherence: equality, or record bodies differing by exactly one
/// attribute. Assignment may change a variable's body only between
/// coherent bodies.
pub fn coherent(lhs: &Body, rhs: &Body) -> bool {
    if lhs == rhs {
        return true;
    }
    match (lhs, rhs) {
        (Body::Record(small), Body::Record(large)) => {
            extends_by_one(small, large) || extends_by_one(large, small)
        }
        _ => false,
    }
}

fn extends_by_one(small: &BTreeMap<Ident, Body>, large: &BTreeMap<Ident, Body>) -> bool {
    large.len() == small.len() + 1 && small.iter().all(|(name, body)| large.get(name) == Some(body))
}

impl fmt::Display for Data {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Data::Boolean(true) => write!(f, "true"),
            Data::Boolean(false) => write!(f, "false"),
            Data::Number(n) => write!(f, "{n}"),
            Data::Word(w) => write!(f, "'{w}'"),
            Data::List(items) => write_items(f, "list [", items),
            Data::Array(items) => write_items(f, "array [", items),
            Data::Record(fields) => {
                write!(f, "record {{")?;
                for (i, (name, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{name}: {value}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

fn write_items(f: &mut fmt::Formatter<'_>, open: &str, items: &[Data]) -> fmt::Result {
    f.write_str(open)?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{item}")?;
    }
    write!(f, "]")
}

impl fmt::Display for Body {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Body::Boolean => write!(f, "boolean"),
            Body::Number => write!(f, "number"),
            Body::Word => write!(f, "word"),
            Body::List(elem) => write!(f, "list-type {elem} ee"),
            Body::Array(elem) => write!(f, "array-type {elem} ee"),
            Body::Record(attrs) => {
                write!(f, "record-type ")?;
                for (i, (name, body)) in attrs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{name} as {body}")?;
                }
                write!(f, " ee")
            }
        }
    }
}

impl fmt::Display for Composite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.data, self.body)
    }
}
