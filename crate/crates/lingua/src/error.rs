//! Abstract errors.
//!
//! An abstract error is a word such as `division-by-zero` standing for a
//! failed computation. Expression evaluation returns them in place of
//! composites; instructions load them into the state's error register.

use std::fmt;

/// An abstract error word. Nonempty, apostrophe-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractError(String);

impl AbstractError {
    /// Panics on an empty word or one containing an apostrophe; error
    /// words are program constants, not user data.
    pub fn new(word: impl Into<String>) -> AbstractError {
        let word = word.into();
        assert!(!word.is_empty() && !word.contains('\''), "bad error word: {word:?}");
        AbstractError(word)
    }

    pub fn word(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AbstractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

// The error words used by the interpreter. Words marked (*) are not
// given by the semantic clauses and were chosen for this implementation.
macro_rules! error_words {
    ($($fn_name:ident => $word:literal),* $(,)?) => {
        $(pub fn $fn_name() -> AbstractError { AbstractError::new($word) })*
    };
}

error_words! {
    division_by_zero => "division-by-zero",
    overflow => "overflow",
    number_expected => "number-expected",
    word_expected => "word-expected",
    boolean_expected => "boolean-expected",
    incomparable => "incomparable",               // (*)
    list_expected => "list-expected",
    body_mismatch => "body-mismatch",             // (*)
    empty_list => "empty-list",                   // (*)
    array_expected => "array-expected",           // (*)
    index_out_of_range => "index-out-of-range",   // (*)
    record_expected => "record-expected",         // (*)
    attribute_exists => "attribute-exists",       // (*)
    attribute_missing => "attribute-missing",     // (*)
    a_yoke_expected => "a-yoke-expected",
    yoke_not_satisfied => "yoke-not-satisfied",
    no_coherence => "no-coherence",
    identifier_not_declared => "identifier-not-declared",
    identifier_not_free => "identifier-not-free",
    variable_not_initialized => "variable-not-initialized", // (*)
    type_not_defined => "type-not-defined",       // (*)
    record_type_expected => "record-type-expected", // (*)
    procedure_not_declared => "procedure-not-declared", // (*)
    parameter_list_mismatch => "parameter-list-mismatch", // (*)
    parameter_type_mismatch => "parameter-type-mismatch", // (*)
    result_type_mismatch => "result-type-mismatch", // (*)
}
