//! Many-sorted signatures.
//!
//! A signature lists sorts and constructors with their argument and
//! result sorts. From a signature the grammar of the abstract-syntax
//! algebra is derived mechanically: one equation per sort, one
//! alternative per constructor into it.

use std::collections::BTreeMap;
use std::fmt;

use crate::grammar::{EquationalGrammar, LangExp};
use crate::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ctor {
    pub name: String,
    pub args: Vec<String>,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    sorts: Vec<String>,
    ctors: Vec<Ctor>,
}

impl Signature {
    /// Every sort a constructor mentions must be declared.
    pub fn new(sorts: Vec<String>, ctors: Vec<Ctor>) -> Result<Signature, AlgebraError> {
        for ctor in &ctors {
            for sort in ctor.args.iter().chain([&ctor.result]) {
                if !sorts.contains(sort) {
                    return Err(AlgebraError::IllFormedSignature(format!(
                        "constructor '{}' mentions undeclared sort '{}'",
                        ctor.name, sort
                    )));
                }
            }
        }
        Ok(Signature { sorts, ctors })
    }

    pub fn sorts(&self) -> &[String] {
        &self.sorts
    }

    pub fn ctors(&self) -> &[Ctor] {
        &self.ctors
    }

    /// Line format: `sort <Name>` and
    /// `ctor <name> : <S1> x ... x <Sn> -> <S>` (`ctor <name> : -> <S>`
    /// for constants). `#` starts a comment.
    pub fn parse(text: &str) -> Result<Signature, AlgebraError> {
        let mut sorts = Vec::new();
        let mut ctors = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| {
                AlgebraError::IllFormedSignature(format!("line {}: {}", index + 1, message))
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["sort", name] => {
                    if sorts.iter().any(|s| s == name) {
                        return Err(bad(format!("duplicate sort '{name}'")));
                    }
                    sorts.push((*name).to_string());
                }
                ["ctor", name, ":", rest @ ..] => {
                    let arrow = rest
                        .iter()
                        .position(|t| *t == "->")
                        .ok_or_else(|| bad("missing '->'".to_string()))?;
                    let (arg_tokens, result_tokens) = rest.split_at(arrow);
                    let mut args = Vec::new();
                    if !arg_tokens.is_empty() {
                        for group in arg_tokens.split(|t| *t == "x") {
                            let [sort] = group else {
                                return Err(bad("malformed argument list".to_string()));
                            };
                            args.push((*sort).to_string());
                        }
                    }
                    let [result] = result_tokens[1..] else {
                        return Err(bad("expected exactly one result sort".to_string()));
                    };
                    ctors.push(Ctor {
                        name: (*name).to_string(),
                        args,
                        result: result.to_string(),
                    });
                }
                _ => return Err(bad(format!("unrecognized line: {line}"))),
            }
        }
        Signature::new(sorts, ctors)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for sort in &self.sorts {
            out.push_str("sort ");
            out.push_str(sort);
            out.push('\n');
        }
        for ctor in &self.ctors {
            out.push_str("ctor ");
            out.push_str(&ctor.name);
            out.push_str(" : ");
            if !ctor.args.is_empty() {
                out.push_str(&ctor.args.join(" x "));
                out.push(' ');
            }
            out.push_str("-> ");
            out.push_str(&ctor.result);
            out.push('\n');
        }
        out
    }

    /// The abstract-syntax grammar: each constructor `c : S1 x ... x Sn -> S`
    /// contributes the alternative `c ( S1 , ... , Sn )` to the equation
    /// for `S`; constants contribute their bare name.
    pub fn derive_abstract_syntax(&self) -> EquationalGrammar {
        let equations = self
            .sorts
            .iter()
            .map(|sort| {
                let alternatives = self
                    .ctors
                    .iter()
                    .filter(|ctor| &ctor.result == sort)
                    .map(|ctor| {
                        if ctor.args.is_empty() {
                            return LangExp::word(&ctor.name);
                        }
                        let mut parts = vec![LangExp::word(&ctor.name), LangExp::word("(")];
                        for (i, arg) in ctor.args.iter().enumerate() {
                            if i > 0 {
                                parts.push(LangExp::word(","));
                            }
                            parts.push(LangExp::NonTerminal(arg.clone()));
                        }
                        parts.push(LangExp::word(")"));
                        LangExp::Concat(parts)
                    })
                    .collect::<Vec<_>>();
                (sort.clone(), LangExp::Union(alternatives))
            })
            .collect();
        EquationalGrammar::new(equations).expect("sorts cover all nonterminals")
    }

    /// Least fixpoint: a sort is reachable iff some constructor into it
    /// has only reachable argument sorts.
    pub fn reachable_sorts(&self) -> BTreeMap<String, bool> {
        let mut reachable: BTreeMap<String, bool> =
            self.sorts.iter().map(|s| (s.clone(), false)).collect();
        loop {
            let mut changed = false;
            for ctor in &self.ctors {
                if reachable[&ctor.result] {
                    continue;
                }
                if ctor.args.iter().all(|arg| reachable[arg]) {
                    reachable.insert(ctor.result.clone(), true);
                    changed = true;
                }
            }
            if !changed {
                return reachable;
            }
        }
    }

    /// The signature without the named constructors.
    pub fn without_ctors(&self, names: &[&str]) -> Signature {
        Signature {
            sorts: self.sorts.clone(),
            ctors: self
                .ctors
                .iter()
                .filter(|c| !names.contains(&c.name.as_str()))
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbool::numbool_signature;

    #[test]
    fn parse_and_print_round_trip() {
        let sig = numbool_signature();
        let text = sig.to_text();
        assert_eq!(Signature::parse(&text).unwrap(), sig);
    }

    #[test]
    fn undeclared_sorts_are_rejected() {
        let err = Signature::parse("sort A\nctor f : B -> A\n").unwrap_err();
        assert!(matches!(err, AlgebraError::IllFormedSignature(_)));
        let err = Signature::parse("ctor k : -> X\n").unwrap_err();
        assert!(matches!(err, AlgebraError::IllFormedSignature(_)));
    }

    #[test]
    fn single_constant_derives_bare_alternative() {
        let sig = Signature::parse("sort X\nctor k : -> X\n").unwrap();
        let grammar = sig.derive_abstract_syntax();
        assert_eq!(grammar.to_text(), "X = \"k\"\n");
    }

    #[test]
    fn empty_constructor_set_gives_empty_languages() {
        let sig = Signature::parse("sort X\nsort Y\n").unwrap();
        let grammar = sig.derive_abstract_syntax();
        assert!(grammar.enumerate("X", 10).unwrap().is_empty());
        assert!(grammar.enumerate("Y", 10).unwrap().is_empty());
    }

    #[test]
    fn reachability_fixpoint() {
        let sig = numbool_signature();
        let reachable = sig.reachable_sorts();
        assert!(reachable["NumExp"]);
        assert!(reachable["BoolExp"]);

        // with both numeric constants gone, numbers are unreachable but
        // the boolean constants still reach BoolExp
        let gutted = sig.without_ctors(&["0", "1"]);
        let reachable = gutted.reachable_sorts();
        assert!(!reachable["NumExp"]);
        assert!(reachable["BoolExp"]);

        // a sort with only a self-feeding constructor has no base case
        let circular = Signature::parse("sort S\nctor c : S -> S\n").unwrap();
        assert!(!circular.reachable_sorts()["S"]);
    }
}
