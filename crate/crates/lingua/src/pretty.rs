//! Pretty printing to strict concrete syntax.
//!
//! Every binary operation is printed fully parenthesized, so the output
//! always reparses (in either syntax mode) to the same tree. Sequences
//! print as `a ; b ; c` and reparse right-nested — the canonical
//! nesting the parser produces.

use std::fmt::Write as _;

use crate::ast::{
    DatExp, FormalParam, ImpProcDecl, Instruction, Preamble, Program, TraExp, TypExp,
};

pub trait Pretty {
    fn write_pretty(&self, out: &mut String);

    fn pretty(&self) -> String {
        let mut out = String::new();
        self.write_pretty(&mut out);
        out
    }
}

impl Pretty for DatExp {
    fn write_pretty(&self, out: &mut String) {
        match self {
            DatExp::True => out.push_str("true"),
            DatExp::False => out.push_str("false"),
            DatExp::Num(n) => {
                let _ = write!(out, "{n}");
            }
            DatExp::Word(w) => {
                let _ = write!(out, "'{w}'");
            }
            DatExp::Ide(i) => {
                let _ = write!(out, "{i}");
            }
            DatExp::And(a, b) => infix(out, a.as_ref(), "and", b),
            DatExp::Or(a, b) => infix(out, a.as_ref(), "or", b),
            DatExp::Not(a) => prefix_call(out, "not", a.as_ref()),
            DatExp::Arith(op, a, b) => infix(out, a.as_ref(), op.symbol(), b),
            DatExp::Compare(op, a, b) => infix(out, a.as_ref(), op.symbol(), b),
            DatExp::Glue(a, b) => infix(out, a.as_ref(), "glue", b),
            DatExp::ListMake(a) => bracketed(out, "list", a.as_ref()),
            DatExp::Push(a, b) => {
                out.push_str("push ");
                a.write_pretty(out);
                out.push_str(" on ");
                b.write_pretty(out);
                out.push_str(" ee");
            }
            DatExp::Top(a) => prefix_call(out, "top", a.as_ref()),
            DatExp::ArrayMake(a) => bracketed(out, "array", a.as_ref()),
            DatExp::AddToArr(a, b) => {
                out.push_str("add-to-arr ");
                a.write_pretty(out);
                out.push_str(" new ");
                b.write_pretty(out);
                out.push_str(" ee");
            }
            DatExp::Index(a, b) => {
                a.write_pretty(out);
                out.push('[');
                b.write_pretty(out);
                out.push(']');
            }
            DatExp::RecordMake(attr, a) => {
                let _ = write!(out, "record {attr} as ");
                a.write_pretty(out);
                out.push_str(" ee");
            }
            DatExp::ExpandRecord(a, attr, b) => {
                out.push_str("expand-record ");
                a.write_pretty(out);
                let _ = write!(out, " at {attr} by ");
                b.write_pretty(out);
                out.push_str(" ee");
            }
            DatExp::RemoveAttr(a, attr) => {
                out.push_str("remove-attr ");
                a.write_pretty(out);
                let _ = write!(out, " at {attr} ee");
            }
            DatExp::Select(a, attr) => {
                a.write_pretty(out);
                let _ = write!(out, ".{attr}");
            }
            DatExp::If(c, t, e) => {
                out.push_str("if ");
                c.write_pretty(out);
                out.push_str(" then ");
                t.write_pretty(out);
                out.push_str(" else ");
                e.write_pretty(out);
                out.push_str(" fi");
            }
            DatExp::FunCall(name, args) => {
                let _ = write!(out, "{name}(");
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    let _ = write!(out, "{arg}");
                }
                out.push(')');
            }
        }
    }
}

fn infix<T: Pretty>(out: &mut String, lhs: &T, op: &str, rhs: &T) {
    out.push('(');
    lhs.write_pretty(out);
    let _ = write!(out, " {op} ");
    rhs.write_pretty(out);
    out.push(')');
}

fn prefix_call<T: Pretty>(out: &mut String, name: &str, arg: &T) {
    let _ = write!(out, "{name} (");
    arg.write_pretty(out);
    out.push(')');
}

fn bracketed<T: Pretty>(out: &mut String, keyword: &str, arg: &T) {
    let _ = write!(out, "{keyword} ");
    arg.write_pretty(out);
    out.push_str(" ee");
}

impl Pretty for TraExp {
    fn write_pretty(&self, out: &mut String) {
        match self {
            TraExp::True => out.push_str("true"),
            TraExp::False => out.push_str("false"),
            TraExp::Num(n) => {
                let _ = write!(out, "{n}");
            }
            TraExp::Word(w) => {
                let _ = write!(out, "'{w}'");
            }
            TraExp::Current => out.push_str("it"),
            TraExp::AttrSelect(attr) => {
                let _ = write!(out, "record.{attr}");
            }
            TraExp::Arith(op, a, b) => infix(out, a.as_ref(), op.symbol(), b),
            TraExp::Compare(op, a, b) => infix(out, a.as_ref(), op.symbol(), b),
            TraExp::And(a, b) => infix(out, a.as_ref(), "and", b),
            TraExp::Or(a, b) => infix(out, a.as_ref(), "or", b),
            TraExp::Not(a) => prefix_call(out, "not", a.as_ref()),
            TraExp::BodyTest(name) => out.push_str(name.keyword()),
            TraExp::AllList(a) => bracketed(out, "all-list", a.as_ref()),
            TraExp::Tt => out.push_str("TT"),
        }
    }
}

impl Pretty for TypExp {
    fn write_pretty(&self, out: &mut String) {
        match self {
            TypExp::Boolean => out.push_str("boolean"),
            TypExp::Number => out.push_str("number"),
            TypExp::Word => out.push_str("word"),
            TypExp::Name(i) => {
                let _ = write!(out, "{i}");
            }
            TypExp::List(t) => bracketed(out, "list-type", t.as_ref()),
            TypExp::Array(t) => bracketed(out, "array-type", t.as_ref()),
            TypExp::Record(attr, t) => {
                let _ = write!(out, "record-type {attr} as ");
                t.write_pretty(out);
                out.push_str(" ee");
            }
            TypExp::ExpandRecord(a, attr, b) => {
                out.push_str("expand-record-type ");
                a.write_pretty(out);
                let _ = write!(out, " at {attr} by ");
                b.write_pretty(out);
                out.push_str(" ee");
            }
            TypExp::ReplaceTransfer(t, tra) => {
                out.push_str("replace-transfer-in ");
                t.write_pretty(out);
                out.push_str(" by ");
                tra.write_pretty(out);
                out.push_str(" ee");
            }
        }
    }
}

impl Pretty for Instruction {
    fn write_pretty(&self, out: &mut String) {
        match self {
            Instruction::Assign(i, e) => {
                let _ = write!(out, "{i} := ");
                e.write_pretty(out);
            }
            Instruction::YokeReplace(i, t) => {
                let _ = write!(out, "yoke {i} := ");
                t.write_pretty(out);
            }
            Instruction::Skip => out.push_str("skip"),
            Instruction::Call { name, ref_args, val_args } => {
                let _ = write!(out, "call {name} (");
                let mut first = true;
                if !ref_args.is_empty() {
                    out.push_str("ref ");
                    push_idents(out, ref_args);
                    first = false;
                }
                if !val_args.is_empty() {
                    if !first {
                        out.push(' ');
                    }
                    out.push_str("val ");
                    push_idents(out, val_args);
                }
                out.push(')');
            }
            Instruction::ErrorHandler(e, i) => {
                out.push_str("if ");
                e.write_pretty(out);
                out.push_str(" then ");
                i.write_pretty(out);
                out.push_str(" fi");
            }
            Instruction::If(c, t, e) => {
                out.push_str("if ");
                c.write_pretty(out);
                out.push_str(" then ");
                t.write_pretty(out);
                out.push_str(" else ");
                e.write_pretty(out);
                out.push_str(" fi");
            }
            Instruction::While(c, b) => {
                out.push_str("while ");
                c.write_pretty(out);
                out.push_str(" do ");
                b.write_pretty(out);
                out.push_str(" od");
            }
            Instruction::Seq(a, b) => {
                a.write_pretty(out);
                out.push_str(" ; ");
                b.write_pretty(out);
            }
        }
    }
}

fn push_idents(out: &mut String, idents: &[crate::ident::Ident]) {
    for (i, ident) in idents.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{ident}");
    }
}

fn push_params(out: &mut String, keyword: &str, params: &[FormalParam]) {
    let _ = write!(out, "{keyword} ");
    for (i, (name, ty)) in params.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{name} as ");
        ty.write_pretty(out);
    }
}

impl Pretty for ImpProcDecl {
    fn write_pretty(&self, out: &mut String) {
        let _ = write!(out, "proc {} (", self.name);
        let mut first = true;
        if !self.ref_params.is_empty() {
            push_params(out, "ref", &self.ref_params);
            first = false;
        }
        if !self.val_params.is_empty() {
            if !first {
                out.push(' ');
            }
            push_params(out, "val", &self.val_params);
        }
        out.push_str(") ");
        self.body.write_pretty(out);
        out.push_str(" end-proc");
    }
}

impl Pretty for Preamble {
    fn write_pretty(&self, out: &mut String) {
        match self {
            Preamble::Skip => out.push_str("skip"),
            Preamble::VarDecl(i, t) => {
                let _ = write!(out, "let {i} be ");
                t.write_pretty(out);
                out.push_str(" tel");
            }
            Preamble::TypeDef(i, t) => {
                let _ = write!(out, "set {i} as ");
                t.write_pretty(out);
                out.push_str(" tes");
            }
            Preamble::Proc(d) => d.write_pretty(out),
            Preamble::MultiProc(ds) => {
                out.push_str("begin-multiproc ");
                for (i, d) in ds.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" ; ");
                    }
                    d.write_pretty(out);
                }
                out.push_str(" end-multiproc");
            }
            Preamble::Fun(d) => {
                let _ = write!(out, "fun {} (", d.name);
                if !d.val_params.is_empty() {
                    push_params(out, "val", &d.val_params);
                }
                out.push_str(") ");
                d.body.write_pretty(out);
                out.push_str(" return ");
                d.result.write_pretty(out);
                out.push_str(" as ");
                d.result_type.write_pretty(out);
            }
            Preamble::Seq(a, b) => {
                a.write_pretty(out);
                out.push_str(" ; ");
                b.write_pretty(out);
            }
        }
    }
}

impl Pretty for Program {
    fn write_pretty(&self, out: &mut String) {
        out.push_str("begin-program ");
        self.preamble.write_pretty(out);
        out.push_str(" ; ");
        self.body.write_pretty(out);
        out.push_str(" end-program");
    }
}
