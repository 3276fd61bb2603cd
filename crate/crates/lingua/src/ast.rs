//! Abstract syntax.
//!
//! Data expressions evaluate to composites, transfer expressions to
//! transfers, type expressions to types; instructions, declarations,
//! preambles and programs make up the imperative layer. All trees are
//! immutable and structurally comparable. [`dump`](Dump::dump) renders
//! the canonical parenthesized prefix form used by golden tests.

use std::fmt::Write as _;

use crate::ident::Ident;
use crate::number::Number;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ArithOp {
    pub fn symbol(self) -> &'static str {
        match self {
            ArithOp::Add => "+",
            ArithOp::Sub => "-",
            ArithOp::Mul => "*",
            ArithOp::Div => "/",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareOp {
    Eq,
    Ne,
    Lt,
    Le,
}

impl CompareOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CompareOp::Eq => "=",
            CompareOp::Ne => "!=",
            CompareOp::Lt => "<",
            CompareOp::Le => "<=",
        }
    }
}

/// Data expressions.
#[derive(Debug, Clone, PartialEq)]
pub enum DatExp {
    True,
    False,
    Num(Number),
    Word(String),
    Ide(Ident),
    And(Box<DatExp>, Box<DatExp>),
    Or(Box<DatExp>, Box<DatExp>),
    Not(Box<DatExp>),
    Arith(ArithOp, Box<DatExp>, Box<DatExp>),
    Compare(CompareOp, Box<DatExp>, Box<DatExp>),
    Glue(Box<DatExp>, Box<DatExp>),
    ListMake(Box<DatExp>),
    Push(Box<DatExp>, Box<DatExp>),
    Top(Box<DatExp>),
    ArrayMake(Box<DatExp>),
    AddToArr(Box<DatExp>, Box<DatExp>),
    Index(Box<DatExp>, Box<DatExp>),
    RecordMake(Ident, Box<DatExp>),
    ExpandRecord(Box<DatExp>, Ident, Box<DatExp>),
    RemoveAttr(Box<DatExp>, Ident),
    Select(Box<DatExp>, Ident),
    If(Box<DatExp>, Box<DatExp>, Box<DatExp>),
    FunCall(Ident, Vec<Ident>),
}

impl DatExp {
    pub fn ide(name: &str) -> DatExp {
        DatExp::Ide(Ident::new(name))
    }

    pub fn int(i: i64) -> DatExp {
        DatExp::Num(Number::from_int(i))
    }

    pub fn arith(op: ArithOp, lhs: DatExp, rhs: DatExp) -> DatExp {
        DatExp::Arith(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn compare(op: CompareOp, lhs: DatExp, rhs: DatExp) -> DatExp {
        DatExp::Compare(op, Box::new(lhs), Box::new(rhs))
    }
}

/// The names of the simple bodies, used by transfer body tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleBodyName {
    Boolean,
    Number,
    Word,
}

impl SimpleBodyName {
    pub fn keyword(self) -> &'static str {
        match self {
            SimpleBodyName::Boolean => "boolean",
            SimpleBodyName::Number => "number",
            SimpleBodyName::Word => "word",
        }
    }
}

/// Transfer expressions. Their denotations are state-independent
/// one-argument functions on composites-or-errors; `Current` (written
/// `it`) is the identity, `Tt` (written `TT`) accepts everything.
#[derive(Debug, Clone, PartialEq)]
pub enum TraExp {
    True,
    False,
    Num(Number),
    Word(String),
    Current,
    AttrSelect(Ident),
    Arith(ArithOp, Box<TraExp>, Box<TraExp>),
    Compare(CompareOp, Box<TraExp>, Box<TraExp>),
    And(Box<TraExp>, Box<TraExp>),
    Or(Box<TraExp>, Box<TraExp>),
    Not(Box<TraExp>),
    BodyTest(SimpleBodyName),
    AllList(Box<TraExp>),
    Tt,
}

impl TraExp {
    pub fn int(i: i64) -> TraExp {
        TraExp::Num(Number::from_int(i))
    }

    pub fn compare(op: CompareOp, lhs: TraExp, rhs: TraExp) -> TraExp {
        TraExp::Compare(op, Box::new(lhs), Box::new(rhs))
    }
}

/// Type expressions.
#[derive(Debug, Clone, PartialEq)]
pub enum TypExp {
    Boolean,
    Number,
    Word,
    Name(Ident),
    List(Box<TypExp>),
    Array(Box<TypExp>),
    Record(Ident, Box<TypExp>),
    ExpandRecord(Box<TypExp>, Ident, Box<TypExp>),
    ReplaceTransfer(Box<TypExp>, TraExp),
}

/// Instructions.
#[derive(Debug, Clone, PartialEq)]
pub enum Instruction {
    Assign(Ident, DatExp),
    YokeReplace(Ident, TraExp),
    Skip,
    Call {
        name: Ident,
        ref_args: Vec<Ident>,
        val_args: Vec<Ident>,
    },
    /// `if dae then ins fi` — runs `ins` when the registered error equals
    /// the word `dae` evaluates to (on an OK-register copy of the state).
    ErrorHandler(DatExp, Box<Instruction>),
    If(DatExp, Box<Instruction>, Box<Instruction>),
    While(DatExp, Box<Instruction>),
    Seq(Box<Instruction>, Box<Instruction>),
}

impl Instruction {
    pub fn seq(first: Instruction, second: Instruction) -> Instruction {
        Instruction::Seq(Box::new(first), Box::new(second))
    }

    pub fn assign(name: &str, exp: DatExp) -> Instruction {
        Instruction::Assign(Ident::new(name), exp)
    }
}

/// A formal parameter: a name and its declared type expression.
pub type FormalParam = (Ident, TypExp);

#[derive(Debug, Clone, PartialEq)]
pub struct ImpProcDecl {
    pub name: Ident,
    pub ref_params: Vec<FormalParam>,
    pub val_params: Vec<FormalParam>,
    pub body: Program,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunProcDecl {
    pub name: Ident,
    pub val_params: Vec<FormalParam>,
    pub body: Program,
    pub result: DatExp,
    pub result_type: TypExp,
}

/// Preambles: the declaration section of a program.
#[derive(Debug, Clone, PartialEq)]
pub enum Preamble {
    Skip,
    VarDecl(Ident, TypExp),
    TypeDef(Ident, TypExp),
    Proc(ImpProcDecl),
    MultiProc(Vec<ImpProcDecl>),
    Fun(FunProcDecl),
    Seq(Box<Preamble>, Box<Preamble>),
}

impl Preamble {
    pub fn seq(first: Preamble, second: Preamble) -> Preamble {
        Preamble::Seq(Box::new(first), Box::new(second))
    }
}

/// A program: a preamble followed by an instruction.
#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub preamble: Box<Preamble>,
    pub body: Instruction,
}

impl Program {
    pub fn new(preamble: Preamble, body: Instruction) -> Program {
        Program { preamble: Box::new(preamble), body }
    }
}

/// Canonical parenthesized prefix dump, stable for golden tests.
pub trait Dump {
    fn write_dump(&self, out: &mut String);

    fn dump(&self) -> String {
        let mut out = String::new();
        self.write_dump(&mut out);
        out
    }
}

impl Dump for DatExp {
    fn write_dump(&self, out: &mut String) {
        match self {
            DatExp::True => out.push_str("(bool true)"),
            DatExp::False => out.push_str("(bool false)"),
            DatExp::Num(n) => {
                let _ = write!(out, "(num {n})");
            }
            DatExp::Word(w) => {
                let _ = write!(out, "(word '{w}')");
            }
            DatExp::Ide(i) => {
                let _ = write!(out, "(ide {i})");
            }
            DatExp::And(a, b) => dump_node(out, "and", [a.as_ref(), b]),
            DatExp::Or(a, b) => dump_node(out, "or", [a.as_ref(), b]),
            DatExp::Not(a) => dump_node(out, "not", [a.as_ref()]),
            DatExp::Arith(op, a, b) => {
                dump_node(out, &format!("arith {}", op.symbol()), [a.as_ref(), b])
            }
            DatExp::Compare(op, a, b) => {
                dump_node(out, &format!("compare {}", op.symbol()), [a.as_ref(), b])
            }
            DatExp::Glue(a, b) => dump_node(out, "glue", [a.as_ref(), b]),
            DatExp::ListMake(a) => dump_node(out, "list", [a.as_ref()]),
            DatExp::Push(a, b) => dump_node(out, "push", [a.as_ref(), b]),
            DatExp::Top(a) => dump_node(out, "top", [a.as_ref()]),
            DatExp::ArrayMake(a) => dump_node(out, "array", [a.as_ref()]),
            DatExp::AddToArr(a, b) => dump_node(out, "add-to-arr", [a.as_ref(), b]),
            DatExp::Index(a, b) => dump_node(out, "index", [a.as_ref(), b]),
            DatExp::RecordMake(i, a) => dump_node(out, &format!("record-make {i}"), [a.as_ref()]),
            DatExp::ExpandRecord(a, i, b) => {
                out.push_str("(expand-record ");
                a.write_dump(out);
                let _ = write!(out, " {i} ");
                b.write_dump(out);
                out.push(')');
            }
            DatExp::RemoveAttr(a, i) => {
                out.push_str("(remove-attr ");
                a.write_dump(out);
                let _ = write!(out, " {i})");
            }
            DatExp::Select(a, i) => {
                out.push_str("(select ");
                a.write_dump(out);
                let _ = write!(out, " {i})");
            }
            DatExp::If(c, t, e) => dump_node(out, "if", [c.as_ref(), t, e]),
            DatExp::FunCall(name, args) => {
                let _ = write!(out, "(fun-call {name}");
                for arg in args {
                    let _ = write!(out, " {arg}");
                }
                out.push(')');
            }
        }
    }
}

fn dump_node<'a, T: Dump + 'a>(
    out: &mut String,
    head: &str,
    children: impl IntoIterator<Item = &'a T>,
) {
    out.push('(');
    out.push_str(head);
    for child in children {
        out.push(' ');
        child.write_dump(out);
    }
    out.push(')');
}

impl Dump for TraExp {
    fn write_dump(&self, out: &mut String) {
        match self {
            TraExp::True => out.push_str("(bool true)"),
            TraExp::False => out.push_str("(bool false)"),
            TraExp::Num(n) => {
                let _ = write!(out, "(num {n})");
            }
            TraExp::Word(w) => {
                let _ = write!(out, "(word '{w}')");
            }
            TraExp::Current => out.push_str("(current)"),
            TraExp::AttrSelect(i) => {
                let _ = write!(out, "(attr-select {i})");
            }
            TraExp::Arith(op, a, b) => {
                dump_node(out, &format!("arith {}", op.symbol()), [a.as_ref(), b])
            }
            TraExp::Compare(op, a, b) => {
                dump_node(out, &format!("compare {}", op.symbol()), [a.as_ref(), b])
            }
            TraExp::And(a, b) => dump_node(out, "and", [a.as_ref(), b]),
            TraExp::Or(a, b) => dump_node(out, "or", [a.as_ref(), b]),
            TraExp::Not(a) => dump_node(out, "not", [a.as_ref()]),
            TraExp::BodyTest(s) => {
                let _ = write!(out, "(body-test {})", s.keyword());
            }
            TraExp::AllList(a) => dump_node(out, "all-list", [a.as_ref()]),
            TraExp::Tt => out.push_str("(tt)"),
        }
    }
}

impl Dump for TypExp {
    fn write_dump(&self, out: &mut String) {
        match self {
            TypExp::Boolean => out.push_str("(boolean)"),
            TypExp::Number => out.push_str("(number)"),
            TypExp::Word => out.push_str("(word)"),
            TypExp::Name(i) => {
                let _ = write!(out, "(type-name {i})");
            }
            TypExp::List(t) => dump_node(out, "list-type", [t.as_ref()]),
            TypExp::Array(t) => dump_node(out, "array-type", [t.as_ref()]),
            TypExp::Record(i, t) => dump_node(out, &format!("record-type {i}"), [t.as_ref()]),
            TypExp::ExpandRecord(a, i, b) => {
                out.push_str("(expand-record-type ");
                a.write_dump(out);
                let _ = write!(out, " {i} ");
                b.write_dump(out);
                out.push(')');
            }
            TypExp::ReplaceTransfer(t, tra) => {
                out.push_str("(replace-transfer-in ");
                t.write_dump(out);
                out.push(' ');
                tra.write_dump(out);
                out.push(')');
            }
        }
    }
}

impl Dump for Instruction {
    fn write_dump(&self, out: &mut String) {
        match self {
            Instruction::Assign(i, e) => {
                let _ = write!(out, "(assign {i} ");
                e.write_dump(out);
                out.push(')');
            }
            Instruction::YokeReplace(i, t) => {
                let _ = write!(out, "(yoke-replace {i} ");
                t.write_dump(out);
                out.push(')');
            }
            Instruction::Skip => out.push_str("(skip)"),
            Instruction::Call { name, ref_args, val_args } => {
                let _ = write!(out, "(call {name} (ref");
                for a in ref_args {
                    let _ = write!(out, " {a}");
                }
                out.push_str(") (val");
                for a in val_args {
                    let _ = write!(out, " {a}");
                }
                out.push_str("))");
            }
            Instruction::ErrorHandler(e, i) => {
                out.push_str("(error-handler ");
                e.write_dump(out);
                out.push(' ');
                i.write_dump(out);
                out.push(')');
            }
            Instruction::If(c, t, e) => {
                out.push_str("(if ");
                c.write_dump(out);
                out.push(' ');
                t.write_dump(out);
                out.push(' ');
                e.write_dump(out);
                out.push(')');
            }
            Instruction::While(c, b) => {
                out.push_str("(while ");
                c.write_dump(out);
                out.push(' ');
                b.write_dump(out);
                out.push(')');
            }
            Instruction::Seq(a, b) => dump_node(out, "seq", [a.as_ref(), b]),
        }
    }
}

fn dump_params(out: &mut String, keyword: &str, params: &[FormalParam]) {
    let _ = write!(out, "({keyword}");
    for (name, ty) in params {
        let _ = write!(out, " ({name} ");
        ty.write_dump(out);
        out.push(')');
    }
    out.push(')');
}

impl Dump for ImpProcDecl {
    fn write_dump(&self, out: &mut String) {
        let _ = write!(out, "(proc-decl {} ", self.name);
        dump_params(out, "ref", &self.ref_params);
        out.push(' ');
        dump_params(out, "val", &self.val_params);
        out.push(' ');
        self.body.write_dump(out);
        out.push(')');
    }
}

impl Dump for Preamble {
    fn write_dump(&self, out: &mut String) {
        match self {
            Preamble::Skip => out.push_str("(skip)"),
            Preamble::VarDecl(i, t) => {
                let _ = write!(out, "(var-decl {i} ");
                t.write_dump(out);
                out.push(')');
            }
            Preamble::TypeDef(i, t) => {
                let _ = write!(out, "(type-def {i} ");
                t.write_dump(out);
                out.push(')');
            }
            Preamble::Proc(d) => d.write_dump(out),
            Preamble::MultiProc(ds) => dump_node(out, "multiproc", ds.iter()),
            Preamble::Fun(d) => {
                let _ = write!(out, "(fun-decl {} ", d.name);
                dump_params(out, "val", &d.val_params);
                out.push(' ');
                d.body.write_dump(out);
                out.push(' ');
                d.result.write_dump(out);
                out.push(' ');
                d.result_type.write_dump(out);
                out.push(')');
            }
            Preamble::Seq(a, b) => dump_node(out, "seq", [a.as_ref(), b]),
        }
    }
}

impl Dump for Program {
    fn write_dump(&self, out: &mut String) {
        out.push_str("(program ");
        self.preamble.write_dump(out);
        out.push(' ');
        self.body.write_dump(out);
        out.push(')');
    }
}

/// Structural equality, named for symmetry with [`Dump::dump`].
pub fn ast_equal<T: PartialEq>(lhs: &T, rhs: &T) -> bool {
    lhs == rhs
}
