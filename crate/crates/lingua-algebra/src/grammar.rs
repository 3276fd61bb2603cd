//! Equational grammars and their least solutions.
//!
//! An equational grammar is a set of recursive language equations
//! `X = p(X1, ..., Xn)` whose right-hand sides combine finite
//! languages, union, concatenation, power, star and plus. The least
//! solution exists and is computed here sliced by word length: Kleene
//! iteration from empty languages, with every operation truncated to
//! the length bound, is monotone and stabilizes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::AlgebraError;

/// A language expression over string-valued words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LangExp {
    /// A finite language (the empty language for an empty list).
    Finite(Vec<String>),
    NonTerminal(String),
    Union(Vec<LangExp>),
    Concat(Vec<LangExp>),
    Power(Box<LangExp>, u32),
    Star(Box<LangExp>),
    Plus(Box<LangExp>),
}

impl LangExp {
    pub fn word(w: &str) -> LangExp {
        LangExp::Finite(vec![w.to_string()])
    }

    pub fn empty() -> LangExp {
        LangExp::Finite(Vec::new())
    }

    pub fn epsilon() -> LangExp {
        LangExp::word("")
    }

    fn nonterminals<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            LangExp::Finite(_) => {}
            LangExp::NonTerminal(name) => out.push(name),
            LangExp::Union(items) | LangExp::Concat(items) => {
                for item in items {
                    item.nonterminals(out);
                }
            }
            LangExp::Power(inner, _) | LangExp::Star(inner) | LangExp::Plus(inner) => {
                inner.nonterminals(out)
            }
        }
    }
}

type Slice = BTreeSet<String>;
type Env = BTreeMap<String, Slice>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationalGrammar {
    equations: Vec<(String, LangExp)>,
}

impl EquationalGrammar {
    /// Every nonterminal on a right-hand side must have an equation.
    pub fn new(equations: Vec<(String, LangExp)>) -> Result<EquationalGrammar, AlgebraError> {
        let grammar = EquationalGrammar { equations };
        for (_, rhs) in &grammar.equations {
            let mut used = Vec::new();
            rhs.nonterminals(&mut used);
            for name in used {
                if !grammar.has_equation(name) {
                    return Err(AlgebraError::UnknownNonterminal(name.to_string()));
                }
            }
        }
        Ok(grammar)
    }

    pub fn equations(&self) -> &[(String, LangExp)] {
        &self.equations
    }

    fn has_equation(&self, name: &str) -> bool {
        self.equations.iter().any(|(n, _)| n == name)
    }

    /// The successive Kleene iterates of the length-bounded solution,
    /// starting from all-empty languages and ending at the fixpoint.
    /// Each iterate is componentwise a superset of its predecessor.
    pub fn kleene_slices(&self, max_len: usize) -> Vec<Env> {
        let mut env: Env =
            self.equations.iter().map(|(name, _)| (name.clone(), Slice::new())).collect();
        let mut history = vec![env.clone()];
        loop {
            let next: Env = self
                .equations
                .iter()
                .map(|(name, rhs)| (name.clone(), eval(rhs, &env, max_len)))
                .collect();
            if next == env {
                return history;
            }
            env = next;
            history.push(env.clone());
        }
    }

    /// The length-`max_len` slice of the least solution at `nt`.
    pub fn enumerate(&self, nt: &str, max_len: usize) -> Result<Slice, AlgebraError> {
        if !self.has_equation(nt) {
            return Err(AlgebraError::UnknownNonterminal(nt.to_string()));
        }
        let mut slices = self.kleene_slices(max_len);
        let last = slices.pop().expect("at least the empty iterate");
        Ok(last[nt].clone())
    }

    /// Membership in the least solution, decided on the slice of the
    /// word's own length.
    pub fn member(&self, nt: &str, word: &str) -> Result<bool, AlgebraError> {
        Ok(self.enumerate(nt, word.chars().count())?.contains(word))
    }

    /// Line format: `<NT> = <alt> | <alt>` where an alternative is a
    /// sequence of quoted terminals and bare nonterminal names.
    pub fn parse(text: &str) -> Result<EquationalGrammar, AlgebraError> {
        let mut equations = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| {
                AlgebraError::MalformedGrammar(format!("line {}: {}", index + 1, message))
            };
            let (name, rhs) = line.split_once('=').ok_or_else(|| bad("missing '='".to_string()))?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(bad(format!("bad nonterminal name '{name}'")));
            }
            let mut alternatives = Vec::new();
            for alt in rhs.split('|') {
                let parts = parse_alternative(alt, &bad)?;
                alternatives.push(match parts.len() {
                    1 => parts.into_iter().next().unwrap(),
                    _ => LangExp::Concat(parts),
                });
            }
            equations.push((name.to_string(), LangExp::Union(alternatives)));
        }
        EquationalGrammar::new(equations)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, rhs) in &self.equations {
            out.push_str(name);
            out.push_str(" = ");
            let alternatives: Vec<&LangExp> = match rhs {
                LangExp::Union(items) => items.iter().collect(),
                other => vec![other],
            };
            for (i, alt) in alternatives.iter().enumerate() {
                if i > 0 {
                    out.push_str(" | ");
                }
                write_alternative(&mut out, alt);
            }
            out.push('\n');
        }
        out
    }
}

fn parse_alternative(
    text: &str,
    bad: &impl Fn(String) -> AlgebraError,
) -> Result<Vec<LangExp>, AlgebraError> {
    let mut parts = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad("empty alternative (use \"\" for the empty word)".to_string()));
    }
    while !rest.is_empty() {
        if let Some(after) = rest.strip_prefix('"') {
            let end = after.find('"').ok_or_else(|| bad("unterminated terminal".to_string()))?;
            parts.push(LangExp::word(&after[..end]));
            rest = after[end + 1..].trim_start();
        } else {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            let name = &rest[..end];
            if name.contains('"') {
                return Err(bad(format!("terminal quoting inside '{name}'")));
            }
            parts.push(LangExp::NonTerminal(name.to_string()));
            rest = rest[end..].trim_start();
        }
    }
    Ok(parts)
}

fn write_alternative(out: &mut String, alt: &LangExp) {
    let parts: Vec<&LangExp> = match alt {
        LangExp::Concat(items) => items.iter().collect(),
        other => vec![other],
    };
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        match part {
            LangExp::Finite(words) if words.len() == 1 => {
                out.push('"');
                out.push_str(&words[0]);
                out.push('"');
            }
            LangExp::NonTerminal(name) => out.push_str(name),
            other => panic!("cannot print language expression {other:?} in file format"),
        }
    }
}

fn eval(exp: &LangExp, env: &Env, max_len: usize) -> Slice {
    match exp {
        LangExp::Finite(words) => {
            words.iter().filter(|w| w.chars().count() <= max_len).cloned().collect()
        }
        LangExp::NonTerminal(name) => env.get(name).cloned().unwrap_or_default(),
        LangExp::Union(items) => {
            let mut result = Slice::new();
            for item in items {
                result.extend(eval(item, env, max_len));
            }
            result
        }
        LangExp::Concat(items) => {
            let mut result: Slice = [String::new()].into_iter().collect();
            for item in items {
                result = concat(&result, &eval(item, env, max_len), max_len);
                if result.is_empty() {
                    return result;
                }
            }
            result
        }
        LangExp::Power(inner, n) => {
            let base = eval(inner, env, max_len);
            let mut result: Slice = [String::new()].into_iter().collect();
            for _ in 0..*n {
                result = concat(&result, &base, max_len);
            }
            result
        }
        LangExp::Star(inner) => {
            let base = eval(inner, env, max_len);
            let mut result: Slice = [String::new()].into_iter().collect();
            loop {
                let grown: Slice =
                    result.union(&concat(&result, &base, max_len)).cloned().collect();
                if grown == result {
                    return result;
                }
                result = grown;
            }
        }
        LangExp::Plus(inner) => {
            let star = eval(&LangExp::Star(inner.clone()), env, max_len);
            let base = eval(inner, env, max_len);
            concat(&base, &star, max_len)
        }
    }
}

fn concat(lhs: &Slice, rhs: &Slice, max_len: usize) -> Slice {
    let mut result = Slice::new();
    for a in lhs {
        let a_len = a.chars().count();
        if a_len > max_len {
            continue;
        }
        for b in rhs {
            if a_len + b.chars().count() <= max_len {
                result.insert(format!("{a}{b}"));
            }
        }
    }
    result
}

impl fmt::Display for EquationalGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
