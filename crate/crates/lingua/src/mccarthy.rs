//! McCarthy's three-valued propositional calculus.
//!
//! The third value `ee` stands for an aborted or non-terminating
//! computation. Operators are sequential (left argument decides first),
//! so neither `and_m` nor `or_m` is commutative.

/// A truth value of the three-valued calculus: true, false, or error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriBool {
    Tt,
    Ff,
    Ee,
}

impl TriBool {
    /// Sequential conjunction. `Ff` on the left wins without looking right;
    /// `Ee` on the left poisons the result.
    pub fn and_m(self, rhs: TriBool) -> TriBool {
        match self {
            TriBool::Tt => rhs,
            TriBool::Ff => TriBool::Ff,
            TriBool::Ee => TriBool::Ee,
        }
    }

    /// Sequential disjunction, dual to [`TriBool::and_m`].
    pub fn or_m(self, rhs: TriBool) -> TriBool {
        match self {
            TriBool::Tt => TriBool::Tt,
            TriBool::Ff => rhs,
            TriBool::Ee => TriBool::Ee,
        }
    }

    pub fn not_m(self) -> TriBool {
        match self {
            TriBool::Tt => TriBool::Ff,
            TriBool::Ff => TriBool::Tt,
            TriBool::Ee => TriBool::Ee,
        }
    }

    /// Implication, defined classically as `(not_m p) or_m q`.
    pub fn implies_m(self, rhs: TriBool) -> TriBool {
        self.not_m().or_m(rhs)
    }

    /// All three values, in table order.
    pub const ALL: [TriBool; 3] = [TriBool::Tt, TriBool::Ff, TriBool::Ee];

    pub fn is_classical(self) -> bool {
        self != TriBool::Ee
    }
}

impl From<bool> for TriBool {
    fn from(b: bool) -> Self {
        if b {
            TriBool::Tt
        } else {
            TriBool::Ff
        }
    }
}

impl std::fmt::Display for TriBool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriBool::Tt => write!(f, "tt"),
            TriBool::Ff => write!(f, "ff"),
            TriBool::Ee => write!(f, "ee"),
        }
    }
}
