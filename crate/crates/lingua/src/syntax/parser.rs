//! Recursive-descent parsing for both syntax modes.
//!
//! Strict mode implements the fully parenthesized concrete grammar:
//! every binary operation needs its own parentheses. Colloquial mode is
//! the superset a user actually types; the missing parentheses are
//! restored here (`+ - * /` left-associatively with the usual priority,
//! `and`/`or` right-associatively, `array [..]` literals expanded), so
//! parsing colloquial source *is* the restoring transformation. Every
//! strict text is also valid colloquial input and restores to itself.
//!
//! Instruction and preamble sequences need no parentheses in either
//! mode and nest to the right.

use crate::ast::{
    ArithOp, CompareOp, DatExp, FormalParam, FunProcDecl, ImpProcDecl, Instruction, Preamble,
    Program, SimpleBodyName, TraExp, TypExp,
};
use crate::ident::Ident;

use super::lexer::{tokenize, ParseError, Token, TokenKind};

/// Which grammar to accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Colloquial,
}

pub fn parse_program(source: &str, mode: Mode) -> Result<Program, ParseError> {
    Parser::run(source, mode, |p| p.program())
}

pub fn parse_instruction(source: &str, mode: Mode) -> Result<Instruction, ParseError> {
    Parser::run(source, mode, |p| p.instruction_seq())
}

pub fn parse_data_exp(source: &str, mode: Mode) -> Result<DatExp, ParseError> {
    Parser::run(source, mode, |p| p.dat())
}

pub fn parse_transfer_exp(source: &str, mode: Mode) -> Result<TraExp, ParseError> {
    Parser::run(source, mode, |p| p.tra())
}

pub fn parse_type_exp(source: &str, mode: Mode) -> Result<TypExp, ParseError> {
    Parser::run(source, mode, |p| p.tex())
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum BinOp {
    Or,
    And,
    Cmp(CompareOp),
    Arith(ArithOp),
    Glue,
}

impl BinOp {
    fn precedence(self) -> u8 {
        match self {
            BinOp::Or => 1,
            BinOp::And => 2,
            BinOp::Cmp(_) => 3,
            BinOp::Arith(ArithOp::Add | ArithOp::Sub) | BinOp::Glue => 4,
            BinOp::Arith(ArithOp::Mul | ArithOp::Div) => 5,
        }
    }

    // or/and chains restore right-associatively, arithmetic chains
    // left-associatively
    fn right_associative(self) -> bool {
        matches!(self, BinOp::Or | BinOp::And)
    }
}

impl Parser {
    fn run<T>(
        source: &str,
        mode: Mode,
        entry: impl FnOnce(&mut Parser) -> Result<T, ParseError>,
    ) -> Result<T, ParseError> {
        let tokens = tokenize(source)?;
        let mut parser = Parser { tokens, pos: 0, mode };
        let result = entry(&mut parser)?;
        parser.expect_eof()?;
        Ok(result)
    }

    fn peek(&self) -> &TokenKind {
        &self.tokens[self.pos].kind
    }

    fn peek2(&self) -> &TokenKind {
        let next = (self.pos + 1).min(self.tokens.len() - 1);
        &self.tokens[next].kind
    }

    fn here(&self) -> (u32, u32) {
        let token = &self.tokens[self.pos];
        (token.line, token.col)
    }

    fn bump(&mut self) -> TokenKind {
        let kind = self.tokens[self.pos].kind.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        kind
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, message)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        self.error_here(format!("expected {expected}, found {}", self.peek().describe()))
    }

    fn at_kw(&self, keyword: &str) -> bool {
        matches!(self.peek(), TokenKind::Keyword(k) if *k == keyword)
    }

    fn at_punct(&self, punct: &str) -> bool {
        matches!(self.peek(), TokenKind::Punct(p) if *p == punct)
    }

    fn eat_kw(&mut self, keyword: &str) -> bool {
        if self.at_kw(keyword) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn eat_punct(&mut self, punct: &str) -> bool {
        if self.at_punct(punct) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_kw(&mut self, keyword: &str) -> Result<(), ParseError> {
        if self.eat_kw(keyword) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{keyword}'")))
        }
    }

    fn expect_punct(&mut self, punct: &str) -> Result<(), ParseError> {
        if self.eat_punct(punct) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{punct}'")))
        }
    }

    fn expect_ident(&mut self) -> Result<Ident, ParseError> {
        match self.peek() {
            TokenKind::Ident(name) => {
                let ident = Ident::new(name.clone());
                self.bump();
                Ok(ident)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn expect_eof(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            TokenKind::Eof => Ok(()),
            _ => Err(self.unexpected("end of input")),
        }
    }

    // ---- data expressions ----

    fn dat(&mut self) -> Result<DatExp, ParseError> {
        match self.mode {
            Mode::Strict => self.dat_strict(),
            Mode::Colloquial => self.dat_binary(1),
        }
    }

    fn peek_binop(&self, with_glue: bool) -> Option<BinOp> {
        match self.peek() {
            TokenKind::Punct("+") => Some(BinOp::Arith(ArithOp::Add)),
            TokenKind::Punct("-") => Some(BinOp::Arith(ArithOp::Sub)),
            TokenKind::Punct("*") => Some(BinOp::Arith(ArithOp::Mul)),
            TokenKind::Punct("/") => Some(BinOp::Arith(ArithOp::Div)),
            TokenKind::Punct("=") => Some(BinOp::Cmp(CompareOp::Eq)),
            TokenKind::Punct("!=") => Some(BinOp::Cmp(CompareOp::Ne)),
            TokenKind::Punct("<") => Some(BinOp::Cmp(CompareOp::Lt)),
            TokenKind::Punct("<=") => Some(BinOp::Cmp(CompareOp::Le)),
            TokenKind::Keyword("and") => Some(BinOp::And),
            TokenKind::Keyword("or") => Some(BinOp::Or),
            TokenKind::Keyword("glue") if with_glue => Some(BinOp::Glue),
            _ => None,
        }
    }

    fn build_dat(op: BinOp, lhs: DatExp, rhs: DatExp) -> DatExp {
        match op {
            BinOp::Or => DatExp::Or(Box::new(lhs), Box::new(rhs)),
            BinOp::And => DatExp::And(Box::new(lhs), Box::new(rhs)),
            BinOp::Cmp(op) => DatExp::compare(op, lhs, rhs),
            BinOp::Arith(op) => DatExp::arith(op, lhs, rhs),
            BinOp::Glue => DatExp::Glue(Box::new(lhs), Box::new(rhs)),
        }
    }

    fn dat_strict(&mut self) -> Result<DatExp, ParseError> {
        let head = if self.at_punct("(") {
            self.bump();
            let lhs = self.dat_strict()?;
            let Some(op) = self.peek_binop(true) else {
                return Err(self.unexpected("a binary operator"));
            };
            self.bump();
            let rhs = self.dat_strict()?;
            self.expect_punct(")")?;
            Self::build_dat(op, lhs, rhs)
        } else {
            self.dat_primary()?
        };
        self.dat_postfix(head)
    }

    fn dat_binary(&mut self, min_precedence: u8) -> Result<DatExp, ParseError> {
        let mut lhs = self.dat_operand()?;
        while let Some(op) = self.peek_binop(true) {
            let precedence = op.precedence();
            if precedence < min_precedence {
                break;
            }
            self.bump();
            let next_min = if op.right_associative() { precedence } else { precedence + 1 };
            let rhs = self.dat_binary(next_min)?;
            lhs = Self::build_dat(op, lhs, rhs);
            if matches!(op, BinOp::Cmp(_)) {
                if let Some(BinOp::Cmp(_)) = self.peek_binop(false) {
                    return Err(self.error_here("comparison operators do not chain"));
                }
            }
        }
        Ok(lhs)
    }

    fn dat_operand(&mut self) -> Result<DatExp, ParseError> {
        let head = if self.at_punct("(") {
            self.bump();
            let inner = self.dat_binary(1)?;
            self.expect_punct(")")?;
            inner
        } else {
            self.dat_primary()?
        };
        self.dat_postfix(head)
    }

    fn dat_postfix(&mut self, mut exp: DatExp) -> Result<DatExp, ParseError> {
        loop {
            if self.eat_punct(".") {
                let attr = self.expect_ident()?;
                exp = DatExp::Select(Box::new(exp), attr);
            } else if self.eat_punct("[") {
                let index = self.dat()?;
                self.expect_punct("]")?;
                exp = DatExp::Index(Box::new(exp), Box::new(index));
            } else {
                return Ok(exp);
            }
        }
    }

    fn dat_primary(&mut self) -> Result<DatExp, ParseError> {
        match self.peek().clone() {
            TokenKind::Keyword("true") => {
                self.bump();
                Ok(DatExp::True)
            }
            TokenKind::Keyword("false") => {
                self.bump();
                Ok(DatExp::False)
            }
            TokenKind::Num(n) => {
                self.bump();
                Ok(DatExp::Num(n))
            }
            TokenKind::Punct("-") => {
                self.bump();
                match self.peek().clone() {
                    TokenKind::Num(n) => {
                        self.bump();
                        Ok(DatExp::Num(n.neg()))
                    }
                    _ => Err(self.unexpected("a number literal after '-'")),
                }
            }
            TokenKind::Word(w) => {
                self.bump();
                Ok(DatExp::Word(w))
            }
            TokenKind::Ident(name) => {
                self.bump();
                if self.at_punct("(") {
                    self.bump();
                    let mut args = Vec::new();
                    if !self.at_punct(")") {
                        loop {
                            match self.peek() {
                                TokenKind::Ident(_) => args.push(self.expect_ident()?),
                                _ => {
                                    return Err(self.unexpected(
                                        "an identifier (actual parameters are single identifiers)",
                                    ))
                                }
                            }
                            if !self.eat_punct(",") {
                                break;
                            }
                        }
                    }
                    self.expect_punct(")")?;
                    Ok(DatExp::FunCall(Ident::new(name), args))
                } else {
                    Ok(DatExp::Ide(Ident::new(name)))
                }
            }
            TokenKind::Keyword("not") => {
                self.bump();
                self.expect_punct("(")?;
                let inner = self.dat()?;
                self.expect_punct(")")?;
                Ok(DatExp::Not(Box::new(inner)))
            }
            TokenKind::Keyword("top") => {
                self.bump();
                self.expect_punct("(")?;
                let inner = self.dat()?;
                self.expect_punct(")")?;
                Ok(DatExp::Top(Box::new(inner)))
            }
            TokenKind::Keyword("list") => {
                self.bump();
                let elem = self.dat()?;
                self.expect_kw("ee")?;
                Ok(DatExp::ListMake(Box::new(elem)))
            }
            TokenKind::Keyword("push") => {
                self.bump();
                let elem = self.dat()?;
                self.expect_kw("on")?;
                let list = self.dat()?;
                self.expect_kw("ee")?;
                Ok(DatExp::Push(Box::new(elem), Box::new(list)))
            }
            TokenKind::Keyword("array") => {
                self.bump();
                if self.mode == Mode::Colloquial && self.at_punct("[") {
                    // `array [e1, ..., en]` expands to nested add-to-arr
                    self.bump();
                    let first = self.dat()?;
                    let mut exp = DatExp::ArrayMake(Box::new(first));
                    while self.eat_punct(",") {
                        let next = self.dat()?;
                        exp = DatExp::AddToArr(Box::new(exp), Box::new(next));
                    }
                    self.expect_punct("]")?;
                    Ok(exp)
                } else {
                    let elem = self.dat()?;
                    self.expect_kw("ee")?;
                    Ok(DatExp::ArrayMake(Box::new(elem)))
                }
            }
            TokenKind::Keyword("add-to-arr") => {
                self.bump();
                let array = self.dat()?;
                self.expect_kw("new")?;
                let elem = self.dat()?;
                self.expect_kw("ee")?;
                Ok(DatExp::AddToArr(Box::new(array), Box::new(elem)))
            }
            TokenKind::Keyword("record") => {
                self.bump();
                let attr = self.expect_ident()?;
                self.expect_kw("as")?;
                let value = self.dat()?;
                self.expect_kw("ee")?;
                Ok(DatExp::RecordMake(attr, Box::new(value)))
            }
            TokenKind::Keyword("expand-record") => {
                self.bump();
                let record = self.dat()?;
                self.expect_kw("at")?;
                let attr = self.expect_ident()?;
                self.expect_kw("by")?;
                let value = self.dat()?;
                self.expect_kw("ee")?;
                Ok(DatExp::ExpandRecord(Box::new(record), attr, Box::new(value)))
            }
            TokenKind::Keyword("remove-attr") => {
                self.bump();
                let record = self.dat()?;
                self.expect_kw("at")?;
                let attr = self.expect_ident()?;
                self.expect_kw("ee")?;
                Ok(DatExp::RemoveAttr(Box::new(record), attr))
            }
            TokenKind::Keyword("if") => {
                self.bump();
                let cond = self.dat()?;
                self.expect_kw("then")?;
                let then_exp = self.dat()?;
                self.expect_kw("else")?;
                let else_exp = self.dat()?;
                self.expect_kw("fi")?;
                Ok(DatExp::If(Box::new(cond), Box::new(then_exp), Box::new(else_exp)))
            }
            _ => Err(self.unexpected("a data expression")),
        }
    }

    // ---- transfer expressions ----

    fn tra(&mut self) -> Result<TraExp, ParseError> {
        match self.mode {
            Mode::Strict => self.tra_strict(),
            Mode::Colloquial => self.tra_binary(1),
        }
    }

    fn build_tra(op: BinOp, lhs: TraExp, rhs: TraExp) -> TraExp {
        match op {
            BinOp::Or => TraExp::Or(Box::new(lhs), Box::new(rhs)),
            BinOp::And => TraExp::And(Box::new(lhs), Box::new(rhs)),
            BinOp::Cmp(op) => TraExp::compare(op, lhs, rhs),
            BinOp::Arith(op) => TraExp::Arith(op, Box::new(lhs), Box::new(rhs)),
            BinOp::Glue => unreachable!("glue is not a transfer operator"),
        }
    }

    fn tra_strict(&mut self) -> Result<TraExp, ParseError> {
        if self.at_punct("(") {
            self.bump();
            let lhs = self.tra_strict()?;
            let Some(op) = self.peek_binop(false) else {
                return Err(self.unexpected("a binary operator"));
            };
            self.bump();
            let rhs = self.tra_strict()?;
            self.expect_punct(")")?;
            Ok(Self::build_tra(op, lhs, rhs))
        } else {
            self.tra_primary()
        }
    }

    fn tra_binary(&mut self, min_precedence: u8) -> Result<TraExp, ParseError> {
        let mut lhs = if self.at_punct("(") {
            self.bump();
            let inner = self.tra_binary(1)?;
            self.expect_punct(")")?;
            inner
        } else {
            self.tra_primary()?
        };
        while let Some(op) = self.peek_binop(false) {
            let precedence = op.precedence();
            if precedence < min_precedence {
                break;
            }
            self.bump();
            let next_min = if op.right_associative() { precedence } else { precedence + 1 };
            let rhs = self.tra_binary(next_min)?;
            lhs = Self::build_tra(op, lhs, rhs);
            if matches!(op, BinOp::Cmp(_)) {
                if let Some(BinOp::Cmp(_)) = self.peek_binop(false) {
                    return Err(self.error_here("comparison operators do not chain"));
                }
            }
        }
        Ok(lhs)
    }

    fn tra_primary(&mut self) -> Result<TraExp, ParseError> {
        match self.peek().clone() {
            TokenKind::Keyword("true") => {
                self.bump();
                Ok(TraExp::True)
            }
            TokenKind::Keyword("false") => {
                self.bump();
                Ok(TraExp::False)
            }
            TokenKind::Num(n) => {
                self.bump();
                Ok(TraExp::Num(n))
            }
            TokenKind::Punct("-") => {
                self.bump();
                match self.peek().clone() {
                    TokenKind::Num(n) => {
                        self.bump();
                        Ok(TraExp::Num(n.neg()))
                    }
                    _ => Err(self.unexpected("a number literal after '-'")),
                }
            }
            TokenKind::Word(w) => {
                self.bump();
                Ok(TraExp::Word(w))
            }
            TokenKind::Keyword("it") => {
                self.bump();
                Ok(TraExp::Current)
            }
            TokenKind::Keyword("TT") => {
                self.bump();
                Ok(TraExp::Tt)
            }
            TokenKind::Keyword("record") => {
                self.bump();
                self.expect_punct(".")?;
                let attr = self.expect_ident()?;
                Ok(TraExp::AttrSelect(attr))
            }
            TokenKind::Keyword("boolean") => {
                self.bump();
                Ok(TraExp::BodyTest(SimpleBodyName::Boolean))
            }
            TokenKind::Keyword("number") => {
                self.bump();
                Ok(TraExp::BodyTest(SimpleBodyName::Number))
            }
            TokenKind::Keyword("word") => {
                self.bump();
                Ok(TraExp::BodyTest(SimpleBodyName::Word))
            }
            TokenKind::Keyword("all-list") => {
                self.bump();
                let inner = self.tra()?;
                self.expect_kw("ee")?;
                Ok(TraExp::AllList(Box::new(inner)))
            }
            TokenKind::Keyword("not") => {
                self.bump();
                self.expect_punct("(")?;
                let inner = self.tra()?;
                self.expect_punct(")")?;
                Ok(TraExp::Not(Box::new(inner)))
            }
            _ => Err(self.unexpected("a transfer expression")),
        }
    }

    // ---- type expressions ----

    fn tex(&mut self) -> Result<TypExp, ParseError> {
        match self.peek().clone() {
            TokenKind::Keyword("boolean") => {
                self.bump();
                Ok(TypExp::Boolean)
            }
            TokenKind::Keyword("number") => {
                self.bump();
                Ok(TypExp::Number)
            }
            TokenKind::Keyword("word") => {
                self.bump();
                Ok(TypExp::Word)
            }
            TokenKind::Ident(name) => {
                self.bump();
                Ok(TypExp::Name(Ident::new(name)))
            }
            TokenKind::Keyword("list-type") => {
                self.bump();
                let elem = self.tex()?;
                self.expect_kw("ee")?;
                Ok(TypExp::List(Box::new(elem)))
            }
            TokenKind::Keyword("array-type") => {
                self.bump();
                let elem = self.tex()?;
                self.expect_kw("ee")?;
                Ok(TypExp::Array(Box::new(elem)))
            }
            TokenKind::Keyword("record-type") => {
                self.bump();
                let attr = self.expect_ident()?;
                self.expect_kw("as")?;
                let elem = self.tex()?;
                self.expect_kw("ee")?;
                Ok(TypExp::Record(attr, Box::new(elem)))
            }
            TokenKind::Keyword("expand-record-type") => {
                self.bump();
                let base = self.tex()?;
                self.expect_kw("at")?;
                let attr = self.expect_ident()?;
                self.expect_kw("by")?;
                let elem = self.tex()?;
                self.expect_kw("ee")?;
                Ok(TypExp::ExpandRecord(Box::new(base), attr, Box::new(elem)))
            }
            TokenKind::Keyword("replace-transfer-in") => {
                self.bump();
                let base = self.tex()?;
                self.expect_kw("by")?;
                let transfer = self.tra()?;
                self.expect_kw("ee")?;
                Ok(TypExp::ReplaceTransfer(Box::new(base), transfer))
            }
            _ => Err(self.unexpected("a type expression")),
        }
    }

    // ---- instructions ----

    /// One instruction, or a `;`-chain of them, nested to the right.
    fn instruction_seq(&mut self) -> Result<Instruction, ParseError> {
        let mut items = vec![self.instruction()?];
        while self.at_punct(";") {
            self.bump();
            items.push(self.instruction()?);
        }
        Ok(fold_right(items, Instruction::seq))
    }

    fn instruction(&mut self) -> Result<Instruction, ParseError> {
        match self.peek().clone() {
            TokenKind::Ident(name) => {
                self.bump();
                self.expect_punct(":=")?;
                let exp = self.dat()?;
                Ok(Instruction::Assign(Ident::new(name), exp))
            }
            TokenKind::Keyword("yoke") => {
                self.bump();
                let name = self.expect_ident()?;
                self.expect_punct(":=")?;
                let transfer = self.tra()?;
                Ok(Instruction::YokeReplace(name, transfer))
            }
            TokenKind::Keyword("skip") => {
                self.bump();
                Ok(Instruction::Skip)
            }
            TokenKind::Keyword("call") => {
                self.bump();
                let name = self.expect_ident()?;
                self.expect_punct("(")?;
                let (ref_args, val_args) = self.call_sections()?;
                self.expect_punct(")")?;
                Ok(Instruction::Call { name, ref_args, val_args })
            }
            TokenKind::Keyword("if") => {
                self.bump();
                let cond = self.dat()?;
                self.expect_kw("then")?;
                let then_branch = self.instruction_seq()?;
                if self.eat_kw("else") {
                    let else_branch = self.instruction_seq()?;
                    self.expect_kw("fi")?;
                    Ok(Instruction::If(cond, Box::new(then_branch), Box::new(else_branch)))
                } else {
                    self.expect_kw("fi")?;
                    Ok(Instruction::ErrorHandler(cond, Box::new(then_branch)))
                }
            }
            TokenKind::Keyword("while") => {
                self.bump();
                let cond = self.dat()?;
                self.expect_kw("do")?;
                let body = self.instruction_seq()?;
                self.expect_kw("od")?;
                Ok(Instruction::While(cond, Box::new(body)))
            }
            _ => Err(self.unexpected("an instruction")),
        }
    }

    /// `(ref x, y val z)` — identifier lists for a call.
    fn call_sections(&mut self) -> Result<(Vec<Ident>, Vec<Ident>), ParseError> {
        let mut refs = Vec::new();
        let mut vals = Vec::new();
        while !self.at_punct(")") {
            if self.at_punct(",") && self.section_follows() {
                self.bump();
            }
            let is_ref = if self.eat_kw("ref") {
                true
            } else if self.eat_kw("val") {
                false
            } else {
                return Err(self.unexpected("'ref', 'val' or ')'"));
            };
            let target = if is_ref { &mut refs } else { &mut vals };
            loop {
                target.push(self.expect_ident()?);
                if self.at_punct(",") && matches!(self.peek2(), TokenKind::Ident(_)) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        Ok((refs, vals))
    }

    fn section_follows(&self) -> bool {
        matches!(self.peek2(), TokenKind::Keyword("ref" | "val"))
    }

    /// `(ref x as number val a, b as word)` — typed formal parameters.
    fn formal_sections(&mut self) -> Result<(Vec<FormalParam>, Vec<FormalParam>), ParseError> {
        let mut refs = Vec::new();
        let mut vals = Vec::new();
        while !self.at_punct(")") {
            if self.at_punct(",") && self.section_follows() {
                self.bump();
            }
            let is_ref = if self.eat_kw("ref") {
                true
            } else if self.eat_kw("val") {
                false
            } else {
                return Err(self.unexpected("'ref', 'val' or ')'"));
            };
            let target = if is_ref { &mut refs } else { &mut vals };
            loop {
                // names share the `as` type of their group
                let mut names = vec![self.expect_ident()?];
                while self.at_punct(",") && matches!(self.peek2(), TokenKind::Ident(_)) {
                    self.bump();
                    names.push(self.expect_ident()?);
                }
                self.expect_kw("as")?;
                let ty = self.tex()?;
                for name in names {
                    target.push((name, ty.clone()));
                }
                if self.at_punct(",") && matches!(self.peek2(), TokenKind::Ident(_)) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        Ok((refs, vals))
    }

    fn check_distinct_formals(
        &self,
        refs: &[FormalParam],
        vals: &[FormalParam],
    ) -> Result<(), ParseError> {
        let mut seen = std::collections::BTreeSet::new();
        for (name, _) in refs.iter().chain(vals) {
            if !seen.insert(name.clone()) {
                return Err(self.error_here(format!("duplicate formal parameter '{name}'")));
            }
        }
        Ok(())
    }

    // ---- declarations, preambles, programs ----

    fn at_declaration(&self) -> bool {
        matches!(
            self.peek(),
            TokenKind::Keyword("let" | "set" | "proc" | "begin-multiproc" | "fun")
        )
    }

    fn declaration(&mut self) -> Result<Preamble, ParseError> {
        match self.peek().clone() {
            TokenKind::Keyword("let") => {
                self.bump();
                let name = self.expect_ident()?;
                self.expect_kw("be")?;
                let ty = self.tex()?;
                self.expect_kw("tel")?;
                Ok(Preamble::VarDecl(name, ty))
            }
            TokenKind::Keyword("set") => {
                self.bump();
                let name = self.expect_ident()?;
                self.expect_kw("as")?;
                let ty = self.tex()?;
                self.expect_kw("tes")?;
                Ok(Preamble::TypeDef(name, ty))
            }
            TokenKind::Keyword("proc") => Ok(Preamble::Proc(self.proc_decl()?)),
            TokenKind::Keyword("begin-multiproc") => {
                self.bump();
                let mut members = vec![self.proc_decl()?];
                while self.eat_punct(";") {
                    members.push(self.proc_decl()?);
                }
                self.expect_kw("end-multiproc")?;
                Ok(Preamble::MultiProc(members))
            }
            TokenKind::Keyword("fun") => {
                self.bump();
                let name = self.expect_ident()?;
                self.expect_punct("(")?;
                let (refs, vals) = self.formal_sections()?;
                if !refs.is_empty() {
                    return Err(self.error_here("functional procedures take only value parameters"));
                }
                self.check_distinct_formals(&[], &vals)?;
                self.expect_punct(")")?;
                let body = self.program()?;
                self.expect_kw("return")?;
                let result = self.dat()?;
                self.expect_kw("as")?;
                let result_type = self.tex()?;
                Ok(Preamble::Fun(FunProcDecl { name, val_params: vals, body, result, result_type }))
            }
            _ => Err(self.unexpected("a declaration")),
        }
    }

    fn proc_decl(&mut self) -> Result<ImpProcDecl, ParseError> {
        self.expect_kw("proc")?;
        let name = self.expect_ident()?;
        self.expect_punct("(")?;
        let (ref_params, val_params) = self.formal_sections()?;
        self.check_distinct_formals(&ref_params, &val_params)?;
        self.expect_punct(")")?;
        let body = self.program()?;
        self.expect_kw("end-proc")?;
        Ok(ImpProcDecl { name, ref_params, val_params, body })
    }

    /// `begin-program pam ; ins end-program`. Items are parsed one by
    /// one; the preamble is the prefix up to the last declaration (a
    /// lone leading `skip` when there is none), the rest must be
    /// instructions.
    fn program(&mut self) -> Result<Program, ParseError> {
        self.expect_kw("begin-program")?;
        enum Item {
            Decl(Preamble),
            Ins(Instruction, (u32, u32)),
        }
        let mut items = Vec::new();
        loop {
            let position = self.here();
            let item = if self.at_declaration() {
                Item::Decl(self.declaration()?)
            } else {
                Item::Ins(self.instruction()?, position)
            };
            items.push(item);
            if !self.eat_punct(";") {
                break;
            }
        }
        self.expect_kw("end-program")?;

        if items.len() < 2 {
            let (line, col) = self.here();
            return Err(ParseError::new(
                line,
                col,
                "a program is a preamble followed by an instruction (at least 'skip ; skip')",
            ));
        }
        let last_decl = items.iter().rposition(|item| matches!(item, Item::Decl(_))).unwrap_or(0);
        if last_decl == items.len() - 1 {
            let (line, col) = self.here();
            return Err(ParseError::new(line, col, "expected an instruction after the preamble"));
        }

        let mut preamble_items = Vec::new();
        let mut body_items = Vec::new();
        for (index, item) in items.into_iter().enumerate() {
            match item {
                Item::Decl(decl) => preamble_items.push(decl),
                Item::Ins(Instruction::Skip, _) if index < last_decl => {
                    preamble_items.push(Preamble::Skip)
                }
                Item::Ins(ins, position) => {
                    if index < last_decl {
                        return Err(ParseError::new(
                            position.0,
                            position.1,
                            "instructions must follow all declarations",
                        ));
                    }
                    // a leading skip with no declaration before it is
                    // the trivial preamble
                    if index == 0 && last_decl == 0 && matches!(ins, Instruction::Skip) {
                        preamble_items.push(Preamble::Skip);
                    } else {
                        body_items.push(ins);
                    }
                }
            }
        }
        if preamble_items.is_empty() {
            // first item was a non-skip instruction and there were no
            // declarations at all
            let (line, col) = self.here();
            return Err(ParseError::new(
                line,
                col,
                "expected a preamble (declarations or 'skip') before the instruction part",
            ));
        }
        if body_items.is_empty() {
            let (line, col) = self.here();
            return Err(ParseError::new(line, col, "expected an instruction after the preamble"));
        }

        let preamble = fold_right(preamble_items, Preamble::seq);
        let body = fold_right(body_items, Instruction::seq);
        Ok(Program::new(preamble, body))
    }
}

fn fold_right<T>(mut items: Vec<T>, join: impl Fn(T, T) -> T) -> T {
    let last = items.pop().expect("nonempty");
    items.into_iter().rev().fold(last, |acc, item| join(item, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Dump;

    fn colloquial(src: &str) -> DatExp {
        parse_data_exp(src, Mode::Colloquial).unwrap()
    }

    fn strict(src: &str) -> DatExp {
        parse_data_exp(src, Mode::Strict).unwrap()
    }

    #[test]
    fn strict_requires_parentheses() {
        assert_eq!(
            strict("((x + y) + z)"),
            DatExp::arith(
                ArithOp::Add,
                DatExp::arith(ArithOp::Add, DatExp::ide("x"), DatExp::ide("y")),
                DatExp::ide("z"),
            )
        );
        assert!(parse_data_exp("x + y", Mode::Strict).is_err());
        assert!(parse_data_exp("(x)", Mode::Strict).is_err());
    }

    #[test]
    fn sum_chains_restore_left() {
        assert_eq!(colloquial("x + y + z"), strict("((x + y) + z)"));
        assert_eq!(colloquial("x + y + z * x"), strict("((x + y) + (z * x))"));
        assert_eq!(colloquial("x + y + z + x*y"), strict("(((x + y) + z) + (x * y))"));
    }

    #[test]
    fn or_chains_restore_right() {
        assert_eq!(colloquial("x or y or z"), strict("(x or (y or z))"));
        assert_eq!(colloquial("x and y and z"), strict("(x and (y and z))"));
        // and binds tighter than or
        assert_eq!(colloquial("x or y and z"), strict("(x or (y and z))"));
    }

    #[test]
    fn array_literal_expands() {
        assert_eq!(
            colloquial("array [x, x+y, 3*y]"),
            strict("add-to-arr add-to-arr array x ee new (x + y) ee new (3 * y) ee")
        );
        // the strict form does not admit the literal
        assert!(parse_data_exp("array [x]", Mode::Strict).is_err());
    }

    #[test]
    fn comparisons_do_not_chain() {
        assert!(parse_data_exp("a < b < c", Mode::Colloquial).is_err());
        assert_eq!(colloquial("(a < b) = c"), strict("((a < b) = c)"));
    }

    #[test]
    fn unicode_comparison_aliases() {
        assert_eq!(colloquial("x ≠ 0"), colloquial("x != 0"));
        assert_eq!(colloquial("x ≤ 1"), colloquial("x <= 1"));
    }

    #[test]
    fn postfix_and_calls() {
        assert_eq!(
            colloquial("e.salary[2]"),
            DatExp::Index(
                Box::new(DatExp::Select(Box::new(DatExp::ide("e")), "salary".into())),
                Box::new(DatExp::int(2)),
            )
        );
        assert_eq!(
            colloquial("sq(x, y)"),
            DatExp::FunCall("sq".into(), vec!["x".into(), "y".into()])
        );
        assert_eq!(colloquial("sq()"), DatExp::FunCall("sq".into(), vec![]));
        assert!(parse_data_exp("sq(3)", Mode::Colloquial).is_err());
    }

    #[test]
    fn sequences_nest_right() {
        let ins = parse_instruction("x := 1 ; y := 2 ; z := 3", Mode::Colloquial).unwrap();
        assert_eq!(
            ins.dump(),
            "(seq (assign x (num 1)) (seq (assign y (num 2)) (assign z (num 3))))"
        );
    }

    #[test]
    fn minimal_program() {
        let program = parse_program("begin-program skip ; skip end-program", Mode::Strict).unwrap();
        assert_eq!(program, Program::new(Preamble::Skip, Instruction::Skip));
    }

    #[test]
    fn preamble_split() {
        let program = parse_program(
            "begin-program let x be number tel ; x := 1 ; x := 2 end-program",
            Mode::Colloquial,
        )
        .unwrap();
        assert_eq!(
            program.dump(),
            "(program (var-decl x (number)) (seq (assign x (num 1)) (assign x (num 2))))"
        );
        // declarations after instructions are rejected
        assert!(parse_program(
            "begin-program x := 1 ; let x be number tel ; skip end-program",
            Mode::Colloquial,
        )
        .is_err());
        // a program needs both parts
        assert!(parse_program("begin-program skip end-program", Mode::Strict).is_err());
        assert!(parse_program("begin-program x := 1 end-program", Mode::Strict).is_err());
    }

    #[test]
    fn procedure_declarations() {
        let src = "begin-program \
            proc p (ref r as number val a, b as number, w as word) \
                begin-program skip ; r := (a + b) end-program \
            end-proc ; \
            call p (ref x val y, z, w) \
            end-program";
        let program = parse_program(src, Mode::Strict).unwrap();
        let Preamble::Proc(decl) = program.preamble.as_ref() else {
            panic!("expected a procedure declaration");
        };
        assert_eq!(decl.ref_params.len(), 1);
        assert_eq!(decl.val_params.len(), 3);
        assert_eq!(decl.val_params[0], ("a".into(), TypExp::Number));
        assert_eq!(decl.val_params[2], ("w".into(), TypExp::Word));

        // parameter sections are accepted in either order
        let flipped = "begin-program proc q (val age, weight as number, name as word, \
            ref patient as patient-record) begin-program skip ; skip end-program end-proc ; \
            skip end-program";
        let program = parse_program(flipped, Mode::Colloquial).unwrap();
        let Preamble::Proc(decl) = program.preamble.as_ref() else {
            panic!("expected a procedure declaration");
        };
        assert_eq!(decl.val_params.len(), 3);
        assert_eq!(decl.ref_params.len(), 1);
        assert_eq!(decl.ref_params[0], ("patient".into(), TypExp::Name("patient-record".into())));

        assert!(parse_program(
            "begin-program proc p (ref x as number val x as number) \
             begin-program skip ; skip end-program end-proc ; skip end-program",
            Mode::Strict,
        )
        .is_err());
    }

    #[test]
    fn transfer_and_type_fragments() {
        assert_eq!(
            parse_transfer_exp("(it < 10)", Mode::Strict).unwrap(),
            TraExp::compare(CompareOp::Lt, TraExp::Current, TraExp::int(10))
        );
        assert_eq!(
            parse_transfer_exp("record.price + record.vat < 1000", Mode::Colloquial).unwrap(),
            TraExp::compare(
                CompareOp::Lt,
                TraExp::Arith(
                    ArithOp::Add,
                    Box::new(TraExp::AttrSelect("price".into())),
                    Box::new(TraExp::AttrSelect("vat".into())),
                ),
                TraExp::int(1000),
            )
        );
        assert_eq!(
            parse_type_exp("record-type price as number ee", Mode::Strict).unwrap(),
            TypExp::Record("price".into(), Box::new(TypExp::Number))
        );
        assert_eq!(
            parse_transfer_exp("all-list number ee", Mode::Strict).unwrap(),
            TraExp::AllList(Box::new(TraExp::BodyTest(SimpleBodyName::Number)))
        );
    }

    #[test]
    fn error_positions() {
        let err =
            parse_program("begin-program skip ;\n x = 1 end-program", Mode::Strict).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("':='"), "{}", err.message);
    }
}
