//! Size limits parameterizing the `oversized` predicate.

/// Configurable bounds on executable data.
///
/// `max_number_digits` bounds a number's magnitude at `10^d` (so the
/// default of 12 admits twelve-digit integers and, at `d = 1`, the
/// largest acceptable number is exactly 10). `max_fraction_digits`
/// bounds the fraction-digit count, and division rounds half-even to
/// that many places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    pub max_number_digits: u32,
    pub max_fraction_digits: u32,
    pub max_word_length: usize,
    pub max_collection_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_number_digits: 12,
            max_fraction_digits: 4,
            max_word_length: 4096,
            max_collection_size: 65536,
        }
    }
}

impl Limits {
    /// Limits whose largest acceptable number magnitude is `10^digits`.
    pub fn with_number_digits(digits: u32) -> Limits {
        Limits { max_number_digits: digits, ..Limits::default() }
    }
}
