//! Identifiers: variable names, type constants, procedure names and
//! record attributes.

use std::borrow::Borrow;
use std::fmt;

/// An identifier. Lexically a letter followed by letters, digits and
/// interior hyphens (a hyphen joins only when a letter follows, so
/// `award-years` is one identifier while `x-1` is a subtraction).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ident(String);

impl Ident {
    pub fn new(name: impl Into<String>) -> Ident {
        Ident(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Whether `text` has the lexical shape of an identifier
    /// (reservedness is checked separately against the keyword table).
    pub fn is_well_formed(text: &str) -> bool {
        let bytes = text.as_bytes();
        if bytes.is_empty() || !bytes[0].is_ascii_alphabetic() {
            return false;
        }
        for (i, b) in bytes.iter().enumerate() {
            match b {
                b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' => {}
                b'-' if i + 1 < bytes.len() && bytes[i + 1].is_ascii_alphabetic() => {}
                _ => return false,
            }
        }
        true
    }
}

impl From<&str> for Ident {
    fn from(s: &str) -> Self {
        Ident::new(s)
    }
}

impl From<String> for Ident {
    fn from(s: String) -> Self {
        Ident::new(s)
    }
}

impl Borrow<str> for Ident {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}
