//! Deterministic random generation of syntax trees, composites and
//! programs, for property tests and audits. Everything is a pure
//! function of the seed.

use crate::ast::{
    ArithOp, CompareOp, DatExp, FormalParam, ImpProcDecl, Instruction, Preamble, Program,
    SimpleBodyName, TraExp, TypExp,
};
use crate::data::{Body, Composite, Data};
use crate::error::AbstractError;
use crate::ident::Ident;
use crate::number::Number;

/// SplitMix64.
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n.max(1)
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 0
    }

    fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

const IDENTS: &[&str] = &["x", "y", "z", "w", "acc", "salary", "bonus", "ch-name"];
const WORDS: &[&str] = &["", "a", "ab", "Al", "Bo", "hello world"];

pub fn ident(rng: &mut Rng) -> Ident {
    Ident::new(*rng.pick(IDENTS))
}

fn small_number(rng: &mut Rng) -> Number {
    let magnitude = rng.below(2000) as i64 - 1000;
    let n = Number::from_int(magnitude);
    if rng.below(4) == 0 {
        n.div_half_even(&Number::from_int(100), 2).unwrap()
    } else {
        n
    }
}

pub fn dat_exp(rng: &mut Rng, depth: u32) -> DatExp {
    let leaves = depth == 0;
    match if leaves { rng.below(5) } else { rng.below(24) } {
        0 => DatExp::True,
        1 => DatExp::False,
        2 => DatExp::Num(small_number(rng)),
        3 => DatExp::Word((*rng.pick(WORDS)).to_string()),
        4 => DatExp::Ide(ident(rng)),
        5 => DatExp::And(sub(rng, depth), sub(rng, depth)),
        6 => DatExp::Or(sub(rng, depth), sub(rng, depth)),
        7 => DatExp::Not(sub(rng, depth)),
        8 => DatExp::Arith(*rng.pick(&ARITH), sub(rng, depth), sub(rng, depth)),
        9 => DatExp::Compare(*rng.pick(&COMPARE), sub(rng, depth), sub(rng, depth)),
        10 => DatExp::Glue(sub(rng, depth), sub(rng, depth)),
        11 => DatExp::ListMake(sub(rng, depth)),
        12 => DatExp::Push(sub(rng, depth), sub(rng, depth)),
        13 => DatExp::Top(sub(rng, depth)),
        14 => DatExp::ArrayMake(sub(rng, depth)),
        15 => DatExp::AddToArr(sub(rng, depth), sub(rng, depth)),
        16 => DatExp::Index(sub(rng, depth), sub(rng, depth)),
        17 => DatExp::RecordMake(ident(rng), sub(rng, depth)),
        18 => DatExp::ExpandRecord(sub(rng, depth), ident(rng), sub(rng, depth)),
        19 => DatExp::RemoveAttr(sub(rng, depth), ident(rng)),
        20 => DatExp::Select(sub(rng, depth), ident(rng)),
        21 => DatExp::If(sub(rng, depth), sub(rng, depth), sub(rng, depth)),
        22 => {
            let arity = rng.below(3) as usize;
            DatExp::FunCall(ident(rng), (0..arity).map(|_| ident(rng)).collect())
        }
        _ => DatExp::Num(small_number(rng)),
    }
}

const ARITH: [ArithOp; 4] = [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div];
const COMPARE: [CompareOp; 4] = [CompareOp::Eq, CompareOp::Ne, CompareOp::Lt, CompareOp::Le];
const SIMPLE: [SimpleBodyName; 3] =
    [SimpleBodyName::Boolean, SimpleBodyName::Number, SimpleBodyName::Word];

fn sub(rng: &mut Rng, depth: u32) -> Box<DatExp> {
    Box::new(dat_exp(rng, depth.saturating_sub(1)))
}

pub fn tra_exp(rng: &mut Rng, depth: u32) -> TraExp {
    let leaves = depth == 0;
    match if leaves { rng.below(7) } else { rng.below(13) } {
        0 => TraExp::True,
        1 => TraExp::False,
        2 => TraExp::Num(small_number(rng)),
        3 => TraExp::Word((*rng.pick(WORDS)).to_string()),
        4 => TraExp::Current,
        5 => TraExp::Tt,
        6 => TraExp::BodyTest(*rng.pick(&SIMPLE)),
        7 => TraExp::AttrSelect(ident(rng)),
        8 => TraExp::Arith(*rng.pick(&ARITH), tra_sub(rng, depth), tra_sub(rng, depth)),
        9 => TraExp::Compare(*rng.pick(&COMPARE), tra_sub(rng, depth), tra_sub(rng, depth)),
        10 => TraExp::And(tra_sub(rng, depth), tra_sub(rng, depth)),
        11 => TraExp::Or(tra_sub(rng, depth), tra_sub(rng, depth)),
        _ => TraExp::Not(tra_sub(rng, depth)),
    }
}

fn tra_sub(rng: &mut Rng, depth: u32) -> Box<TraExp> {
    Box::new(tra_exp(rng, depth.saturating_sub(1)))
}

pub fn typ_exp(rng: &mut Rng, depth: u32) -> TypExp {
    let leaves = depth == 0;
    match if leaves { rng.below(4) } else { rng.below(9) } {
        0 => TypExp::Boolean,
        1 => TypExp::Number,
        2 => TypExp::Word,
        3 => TypExp::Name(ident(rng)),
        4 => TypExp::List(typ_sub(rng, depth)),
        5 => TypExp::Array(typ_sub(rng, depth)),
        6 => TypExp::Record(ident(rng), typ_sub(rng, depth)),
        7 => TypExp::ExpandRecord(typ_sub(rng, depth), ident(rng), typ_sub(rng, depth)),
        _ => TypExp::ReplaceTransfer(typ_sub(rng, depth), tra_exp(rng, depth.saturating_sub(1))),
    }
}

fn typ_sub(rng: &mut Rng, depth: u32) -> Box<TypExp> {
    Box::new(typ_exp(rng, depth.saturating_sub(1)))
}

/// An arbitrary instruction; sequences nest to the right (the canonical
/// nesting, the only one concrete syntax can express).
pub fn instruction(rng: &mut Rng, depth: u32) -> Instruction {
    let leaves = depth == 0;
    match if leaves { rng.below(4) } else { rng.below(8) } {
        0 => Instruction::Skip,
        1 => Instruction::Assign(ident(rng), dat_exp(rng, depth)),
        2 => Instruction::YokeReplace(ident(rng), tra_exp(rng, depth)),
        3 => {
            let refs = (0..rng.below(3)).map(|_| ident(rng)).collect();
            let vals = (0..rng.below(3)).map(|_| ident(rng)).collect();
            Instruction::Call { name: ident(rng), ref_args: refs, val_args: vals }
        }
        4 => Instruction::ErrorHandler(
            dat_exp(rng, depth - 1),
            Box::new(instruction(rng, depth - 1)),
        ),
        5 => Instruction::If(
            dat_exp(rng, depth - 1),
            Box::new(instruction(rng, depth - 1)),
            Box::new(instruction(rng, depth - 1)),
        ),
        6 => Instruction::While(dat_exp(rng, depth - 1), Box::new(instruction(rng, depth - 1))),
        _ => {
            let count = 2 + rng.below(3) as usize;
            let items: Vec<_> = (0..count).map(|_| instruction(rng, depth - 1)).collect();
            fold_right_ins(items)
        }
    }
}

// concrete syntax only expresses right-nested sequences, so generated
// trees are flattened into that canonical shape
fn fold_right_ins(items: Vec<Instruction>) -> Instruction {
    let mut flat = Vec::new();
    for item in items {
        flatten_ins(item, &mut flat);
    }
    let last = flat.pop().expect("nonempty");
    flat.into_iter().rev().fold(last, |acc, i| Instruction::seq(i, acc))
}

fn flatten_ins(ins: Instruction, out: &mut Vec<Instruction>) {
    match ins {
        Instruction::Seq(a, b) => {
            flatten_ins(*a, out);
            flatten_ins(*b, out);
        }
        other => out.push(other),
    }
}

/// An arbitrary program (well-shaped, not necessarily well-typed). The
/// preamble follows the parser's canonical split: it is either the lone
/// `skip` or ends with a declaration, and skips inside it only precede
/// declarations.
pub fn program(rng: &mut Rng, depth: u32) -> Program {
    let mut decls: Vec<Preamble> = (0..rng.below(3)).map(|_| declaration(rng, depth)).collect();
    if decls.is_empty() {
        decls.push(Preamble::Skip);
    } else if rng.below(3) == 0 {
        let position = rng.below(decls.len() as u64) as usize;
        decls.insert(position, Preamble::Skip);
    }
    let preamble = fold_right_pre(decls);
    let body_items = (0..1 + rng.below(3)).map(|_| instruction(rng, depth)).collect::<Vec<_>>();
    Program::new(preamble, fold_right_ins(body_items))
}

fn fold_right_pre(mut items: Vec<Preamble>) -> Preamble {
    let last = items.pop().expect("nonempty");
    items.into_iter().rev().fold(last, |acc, p| Preamble::seq(p, acc))
}

/// A non-skip declaration.
pub fn declaration(rng: &mut Rng, depth: u32) -> Preamble {
    match rng.below(5) {
        0 => Preamble::VarDecl(ident(rng), typ_exp(rng, depth)),
        1 => Preamble::TypeDef(ident(rng), typ_exp(rng, depth)),
        2 => Preamble::Proc(proc_decl(rng, depth)),
        3 => Preamble::MultiProc((0..1 + rng.below(2)).map(|_| proc_decl(rng, depth)).collect()),
        _ => Preamble::Fun(crate::ast::FunProcDecl {
            name: ident(rng),
            val_params: formals(rng, depth),
            body: small_program(rng, depth),
            result: dat_exp(rng, depth.min(1)),
            result_type: typ_exp(rng, depth.min(1)),
        }),
    }
}

fn proc_decl(rng: &mut Rng, depth: u32) -> ImpProcDecl {
    let (ref_params, val_params) = formal_lists(rng, depth);
    ImpProcDecl { name: ident(rng), ref_params, val_params, body: small_program(rng, depth) }
}

fn formals(rng: &mut Rng, depth: u32) -> Vec<FormalParam> {
    formal_lists(rng, depth).1
}

/// Formal names are distinct across both lists, as the parser enforces.
fn formal_lists(rng: &mut Rng, depth: u32) -> (Vec<FormalParam>, Vec<FormalParam>) {
    let pool = ["p1", "p2", "p3", "q1"];
    let count = rng.below(1 + pool.len() as u64) as usize;
    let mut names: Vec<&str> = Vec::new();
    while names.len() < count {
        let candidate = *rng.pick(&pool);
        if !names.contains(&candidate) {
            names.push(candidate);
        }
    }
    let split = rng.below(1 + names.len() as u64) as usize;
    let param = |rng: &mut Rng, n: &&str| (Ident::new(*n), typ_exp(rng, depth.min(1)));
    let refs = names[..split].iter().map(|n| param(rng, n)).collect();
    let vals = names[split..].iter().map(|n| param(rng, n)).collect();
    (refs, vals)
}

fn small_program(rng: &mut Rng, depth: u32) -> Program {
    let shallow = depth.min(1);
    Program::new(
        if rng.coin() {
            Preamble::Skip
        } else {
            Preamble::VarDecl(ident(rng), typ_exp(rng, shallow))
        },
        instruction(rng, shallow),
    )
}

/// A valid composite of bounded depth.
pub fn composite(rng: &mut Rng, depth: u32) -> Composite {
    let body = gen_body(rng, depth);
    let data = inhabit(rng, &body, depth);
    Composite::new(data, body).expect("generated data inhabits its body")
}

fn gen_body(rng: &mut Rng, depth: u32) -> Body {
    let leaves = depth == 0;
    match if leaves { rng.below(3) } else { rng.below(6) } {
        0 => Body::Boolean,
        1 => Body::Number,
        2 => Body::Word,
        3 => Body::list(gen_body(rng, depth - 1)),
        4 => Body::array(gen_body(rng, depth - 1)),
        _ => {
            let count = rng.below(3);
            Body::Record(
                (0..count)
                    .map(|i| (Ident::new(format!("a{i}")), gen_body(rng, depth - 1)))
                    .collect(),
            )
        }
    }
}

fn inhabit(rng: &mut Rng, body: &Body, depth: u32) -> Data {
    match body {
        Body::Boolean => Data::Boolean(rng.coin()),
        Body::Number => Data::Number(small_number(rng)),
        Body::Word => Data::Word((*rng.pick(WORDS)).to_string()),
        Body::List(elem) => {
            let count = rng.below(3);
            Data::List((0..count).map(|_| inhabit(rng, elem, depth.saturating_sub(1))).collect())
        }
        Body::Array(elem) => {
            let count = rng.below(3);
            Data::Array((0..count).map(|_| inhabit(rng, elem, depth.saturating_sub(1))).collect())
        }
        Body::Record(attrs) => Data::Record(
            attrs
                .iter()
                .map(|(name, b)| (name.clone(), inhabit(rng, b, depth.saturating_sub(1))))
                .collect(),
        ),
    }
}

pub fn abstract_error(rng: &mut Rng) -> AbstractError {
    let words = ["overflow", "division-by-zero", "boom", "no-coherence"];
    AbstractError::new(*rng.pick(&words))
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum VarKind {
    Num,
    NumYoked,
    Wor,
    Boo,
    Rec,
    Lis,
}

/// A program that declares a handful of variables and mostly assigns
/// type-correct values to them (with occasional deliberate mistakes),
/// so runs actually fill the store. Loops are bounded counters. Used by
/// the stored-value audit and the fuel-monotonicity sweep.
pub fn well_formed_program(rng: &mut Rng) -> Program {
    let var_count = 2 + rng.below(3) as usize;
    let vars: Vec<(Ident, VarKind)> = (0..var_count)
        .map(|i| {
            let kind = *rng.pick(&[
                VarKind::Num,
                VarKind::Num,
                VarKind::NumYoked,
                VarKind::Wor,
                VarKind::Boo,
                VarKind::Rec,
                VarKind::Lis,
            ]);
            (Ident::new(format!("v{i}")), kind)
        })
        .collect();

    let mut decls: Vec<Preamble> = vars
        .iter()
        .map(|(name, kind)| {
            let tex = match kind {
                VarKind::Num => TypExp::Number,
                VarKind::NumYoked => TypExp::ReplaceTransfer(
                    Box::new(TypExp::Number),
                    TraExp::compare(CompareOp::Lt, TraExp::Current, TraExp::int(1000)),
                ),
                VarKind::Wor => TypExp::Word,
                VarKind::Boo => TypExp::Boolean,
                VarKind::Rec => TypExp::Record(Ident::new("a"), Box::new(TypExp::Number)),
                VarKind::Lis => TypExp::List(Box::new(TypExp::Number)),
            };
            Preamble::VarDecl(name.clone(), tex)
        })
        .collect();
    if rng.coin() {
        decls.push(Preamble::Proc(ImpProcDecl {
            name: Ident::new("bump"),
            ref_params: vec![(Ident::new("r"), TypExp::Number)],
            val_params: vec![(Ident::new("d"), TypExp::Number)],
            body: Program::new(
                Preamble::Skip,
                Instruction::Assign(
                    Ident::new("r"),
                    DatExp::arith(ArithOp::Add, DatExp::ide("r"), DatExp::ide("d")),
                ),
            ),
        }));
    }

    let numeric: Vec<&Ident> = vars
        .iter()
        .filter(|(_, k)| matches!(k, VarKind::Num | VarKind::NumYoked))
        .map(|(n, _)| n)
        .collect();

    let mut body: Vec<Instruction> = Vec::new();
    for (name, kind) in &vars {
        body.push(Instruction::Assign(name.clone(), initializer(rng, *kind)));
    }
    let extra = 2 + rng.below(5);
    for _ in 0..extra {
        let (name, kind) = rng.pick(&vars).clone();
        let wrong_type = rng.below(8) == 0;
        let ins = match rng.below(6) {
            0 if !numeric.is_empty() => {
                // a bounded counting loop
                let counter = (*rng.pick(&numeric)).clone();
                Instruction::While(
                    DatExp::compare(
                        CompareOp::Lt,
                        DatExp::Ide(counter.clone()),
                        DatExp::int(3 + rng.below(5) as i64),
                    ),
                    Box::new(Instruction::Assign(
                        counter.clone(),
                        DatExp::arith(ArithOp::Add, DatExp::Ide(counter), DatExp::int(1)),
                    )),
                )
            }
            1 => Instruction::If(
                DatExp::compare(CompareOp::Lt, initializer(rng, VarKind::Num), DatExp::int(10)),
                Box::new(Instruction::Assign(name.clone(), initializer(rng, kind))),
                Box::new(Instruction::Skip),
            ),
            2 if kind == VarKind::Rec => Instruction::Assign(
                name.clone(),
                DatExp::ExpandRecord(
                    Box::new(DatExp::Ide(name.clone())),
                    Ident::new("b"),
                    Box::new(initializer(rng, VarKind::Num)),
                ),
            ),
            3 if kind == VarKind::Lis => Instruction::Assign(
                name.clone(),
                DatExp::Push(
                    Box::new(initializer(rng, VarKind::Num)),
                    Box::new(DatExp::Ide(name.clone())),
                ),
            ),
            4 if kind == VarKind::Num => Instruction::YokeReplace(
                name.clone(),
                TraExp::compare(CompareOp::Lt, TraExp::Current, TraExp::int(10000)),
            ),
            _ => {
                let exp = if wrong_type {
                    let other = *rng.pick(&[VarKind::Num, VarKind::Wor, VarKind::Boo]);
                    initializer(rng, other)
                } else {
                    initializer(rng, kind)
                };
                Instruction::Assign(name.clone(), exp)
            }
        };
        body.push(ins);
    }
    if decls.len() > vars.len() && !numeric.is_empty() {
        // the bump procedure was declared; call it
        body.push(Instruction::Call {
            name: Ident::new("bump"),
            ref_args: vec![(*rng.pick(&numeric)).clone()],
            val_args: vec![(*rng.pick(&numeric)).clone()],
        });
    }

    Program::new(fold_right_pre(decls), fold_right_ins(body))
}

fn initializer(rng: &mut Rng, kind: VarKind) -> DatExp {
    match kind {
        VarKind::Num | VarKind::NumYoked => match rng.below(3) {
            0 => DatExp::int(rng.below(50) as i64),
            1 => DatExp::arith(ArithOp::Add, DatExp::int(rng.below(20) as i64), DatExp::int(1)),
            _ => DatExp::arith(ArithOp::Mul, DatExp::int(rng.below(9) as i64), DatExp::int(3)),
        },
        VarKind::Wor => match rng.below(2) {
            0 => DatExp::Word((*rng.pick(WORDS)).to_string()),
            _ => DatExp::Glue(
                Box::new(DatExp::Word("a".to_string())),
                Box::new(DatExp::Word("b".to_string())),
            ),
        },
        VarKind::Boo => match rng.below(3) {
            0 => DatExp::True,
            1 => DatExp::False,
            _ => DatExp::compare(CompareOp::Lt, DatExp::int(1), DatExp::int(2)),
        },
        VarKind::Rec => {
            DatExp::RecordMake(Ident::new("a"), Box::new(DatExp::int(rng.below(20) as i64)))
        }
        VarKind::Lis => DatExp::ListMake(Box::new(DatExp::int(rng.below(20) as i64))),
    }
}
