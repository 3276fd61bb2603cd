//! The denotational semantics as an evaluator.
//!
//! Expression denotations map states to composites-or-errors; type
//! expressions map states to types-or-errors; transfer expressions
//! denote transfers outright. Instructions, declarations, preambles and
//! programs transform states, loading errors into the error register
//! and passing error states through untouched (error handlers
//! excepted).
//!
//! Divergence is made observable with a fuel budget: data-expression
//! and instruction nodes each cost one unit, so `while true do skip od`
//! runs out of fuel instead of hanging.

use std::sync::Arc;

use crate::ast::{DatExp, Instruction, Preamble, Program, TraExp, TypExp};
use crate::data::{coherent, Body, Composite};
use crate::error::{self, AbstractError};
use crate::ident::Ident;
use crate::limits::Limits;
use crate::ops::{self, CompositeE};
use crate::state::{Env, FunctionalProcedure, ImperativeProcedure, Procedure, State, Store};
use crate::transfer::{clan_contains_type, Transfer, Type, Value};

/// The fuel budget ran out: distinct from every abstract error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfFuel;

/// What executing a program or instruction produced.
pub type Outcome = Result<State, OutOfFuel>;

/// What evaluating a data expression produced.
pub type EvalOutcome = Result<CompositeE, OutOfFuel>;

/// A completed execution step, reported to the observer.
pub enum StepKind<'e> {
    Instruction(&'e Instruction),
    Declaration(&'e Preamble),
}

pub struct StepEvent<'e> {
    pub kind: StepKind<'e>,
    pub state: &'e State,
}

type Observer<'a> = Box<dyn FnMut(StepEvent<'_>) + 'a>;

/// The interpreter: limits, a fuel budget, and an optional observer
/// notified after every atomic instruction and declaration.
pub struct Interp<'a> {
    limits: Limits,
    fuel: u64,
    observer: Option<Observer<'a>>,
}

impl<'a> Interp<'a> {
    pub fn new(limits: Limits, fuel: u64) -> Interp<'a> {
        Interp { limits, fuel, observer: None }
    }

    pub fn with_observer(
        limits: Limits,
        fuel: u64,
        observer: impl FnMut(StepEvent<'_>) + 'a,
    ) -> Interp<'a> {
        Interp { limits, fuel, observer: Some(Box::new(observer)) }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn fuel_left(&self) -> u64 {
        self.fuel
    }

    fn charge(&mut self) -> Result<(), OutOfFuel> {
        if self.fuel == 0 {
            return Err(OutOfFuel);
        }
        self.fuel -= 1;
        Ok(())
    }

    fn observe_instruction(&mut self, instruction: &Instruction, state: &State) {
        if let Some(observer) = &mut self.observer {
            observer(StepEvent { kind: StepKind::Instruction(instruction), state });
        }
    }

    fn observe_declaration(&mut self, declaration: &Preamble, state: &State) {
        if let Some(observer) = &mut self.observer {
            observer(StepEvent { kind: StepKind::Declaration(declaration), state });
        }
    }

    // ---- expressions ----

    /// `Sde`: evaluates a data expression in a state.
    pub fn eval_data(&mut self, exp: &DatExp, state: &State) -> EvalOutcome {
        self.charge()?;
        if let Some(err) = state.registered_error() {
            return Ok(Err(err.clone()));
        }
        match exp {
            DatExp::True => Ok(Ok(Composite::boolean(true))),
            DatExp::False => Ok(Ok(Composite::boolean(false))),
            DatExp::Num(n) => Ok(literal(Composite::number(n.clone()), &self.limits)),
            DatExp::Word(w) => Ok(literal(Composite::word(w.clone()), &self.limits)),
            DatExp::Ide(ide) => Ok(read_variable(state, ide)),
            DatExp::And(lhs, rhs) => {
                // McCarthy conjunction: lazy, the left argument decides
                match self.eval_boolean(lhs, state)? {
                    Err(e) => Ok(Err(e)),
                    Ok(false) => Ok(Ok(Composite::boolean(false))),
                    Ok(true) => Ok(self.eval_boolean(rhs, state)?.map(Composite::boolean)),
                }
            }
            DatExp::Or(lhs, rhs) => match self.eval_boolean(lhs, state)? {
                Err(e) => Ok(Err(e)),
                Ok(true) => Ok(Ok(Composite::boolean(true))),
                Ok(false) => Ok(self.eval_boolean(rhs, state)?.map(Composite::boolean)),
            },
            DatExp::Not(inner) => {
                Ok(self.eval_boolean(inner, state)?.map(|b| Composite::boolean(!b)))
            }
            DatExp::Arith(op, lhs, rhs) => {
                let lhs = self.eval_data(lhs, state)?;
                let rhs = self.eval_data(rhs, state)?;
                Ok(ops::comp_arith(*op, lhs, rhs, &self.limits))
            }
            DatExp::Compare(op, lhs, rhs) => {
                let lhs = self.eval_data(lhs, state)?;
                let rhs = self.eval_data(rhs, state)?;
                Ok(ops::comp_compare(*op, lhs, rhs))
            }
            DatExp::Glue(lhs, rhs) => {
                let lhs = self.eval_data(lhs, state)?;
                let rhs = self.eval_data(rhs, state)?;
                Ok(ops::comp_glue(lhs, rhs, &self.limits))
            }
            DatExp::ListMake(elem) => {
                let elem = self.eval_data(elem, state)?;
                Ok(ops::list_make(elem, &self.limits))
            }
            DatExp::Push(elem, list) => {
                let elem = self.eval_data(elem, state)?;
                let list = self.eval_data(list, state)?;
                Ok(ops::list_push(elem, list, &self.limits))
            }
            DatExp::Top(list) => {
                let list = self.eval_data(list, state)?;
                Ok(ops::list_top(list))
            }
            DatExp::ArrayMake(elem) => {
                let elem = self.eval_data(elem, state)?;
                Ok(ops::array_make(elem, &self.limits))
            }
            DatExp::AddToArr(array, elem) => {
                let array = self.eval_data(array, state)?;
                let elem = self.eval_data(elem, state)?;
                Ok(ops::array_append(array, elem, &self.limits))
            }
            DatExp::Index(array, index) => {
                let array = self.eval_data(array, state)?;
                let index = self.eval_data(index, state)?;
                Ok(ops::array_index(array, index))
            }
            DatExp::RecordMake(attr, value) => {
                let value = self.eval_data(value, state)?;
                Ok(ops::record_make(attr, value, &self.limits))
            }
            DatExp::ExpandRecord(record, attr, value) => {
                let record = self.eval_data(record, state)?;
                let value = self.eval_data(value, state)?;
                Ok(ops::record_expand(record, attr, value, &self.limits))
            }
            DatExp::RemoveAttr(record, attr) => {
                let record = self.eval_data(record, state)?;
                Ok(ops::record_remove(record, attr))
            }
            DatExp::Select(record, attr) => {
                let record = self.eval_data(record, state)?;
                Ok(ops::record_select(record, attr))
            }
            DatExp::If(cond, then_exp, else_exp) => match self.eval_boolean(cond, state)? {
                Err(e) => Ok(Err(e)),
                Ok(true) => self.eval_data(then_exp, state),
                Ok(false) => self.eval_data(else_exp, state),
            },
            DatExp::FunCall(name, args) => self.call_functional(name, args, state),
        }
    }

    fn eval_boolean(
        &mut self,
        exp: &DatExp,
        state: &State,
    ) -> Result<Result<bool, AbstractError>, OutOfFuel> {
        Ok(match self.eval_data(exp, state)? {
            Err(e) => Err(e),
            Ok(com) => com.as_boolean().ok_or_else(error::boolean_expected),
        })
    }

    /// `Stre`: transfer expressions denote transfers directly — no
    /// state is involved.
    pub fn eval_transfer(&self, exp: &TraExp) -> Transfer {
        Transfer::new(exp.clone())
    }

    /// `Ste`: evaluates a type expression in a state.
    pub fn eval_type(&self, exp: &TypExp, state: &State) -> Result<Type, AbstractError> {
        if let Some(err) = state.registered_error() {
            return Err(err.clone());
        }
        match exp {
            TypExp::Boolean => Ok(Type::plain(Body::Boolean)),
            TypExp::Number => Ok(Type::plain(Body::Number)),
            TypExp::Word => Ok(Type::plain(Body::Word)),
            TypExp::Name(name) => {
                state.lookup_type(name).cloned().ok_or_else(error::type_not_defined)
            }
            TypExp::List(elem) => {
                let elem = self.eval_type(elem, state)?;
                Ok(Type::plain(Body::list(elem.body)))
            }
            TypExp::Array(elem) => {
                let elem = self.eval_type(elem, state)?;
                Ok(Type::plain(Body::array(elem.body)))
            }
            TypExp::Record(attr, elem) => {
                let elem = self.eval_type(elem, state)?;
                Ok(Type::plain(Body::record([(attr.clone(), elem.body)])))
            }
            TypExp::ExpandRecord(base, attr, elem) => {
                let base = self.eval_type(base, state)?;
                let Body::Record(mut attrs) = base.body else {
                    return Err(error::record_type_expected());
                };
                if attrs.contains_key(attr) {
                    return Err(error::attribute_exists());
                }
                let elem = self.eval_type(elem, state)?;
                attrs.insert(attr.clone(), elem.body);
                Ok(Type::new(Body::Record(attrs), base.transfer))
            }
            TypExp::ReplaceTransfer(base, transfer) => {
                let base = self.eval_type(base, state)?;
                Ok(Type::new(base.body, Transfer::new(transfer.clone())))
            }
        }
    }

    // ---- instructions ----

    /// `Sin`: executes an instruction. Error-carrying states pass
    /// through every category except the error handler.
    pub fn exec_instruction(&mut self, instruction: &Instruction, state: State) -> Outcome {
        self.charge()?;
        if state.is_error() && !matches!(instruction, Instruction::ErrorHandler(..)) {
            return Ok(state);
        }
        match instruction {
            Instruction::Skip => self.done(instruction, state),
            Instruction::Assign(ide, exp) => self.exec_assign(instruction, ide, exp, state),
            Instruction::YokeReplace(ide, transfer) => {
                self.exec_yoke_replace(instruction, ide, transfer, state)
            }
            Instruction::Call { name, ref_args, val_args } => {
                self.call_imperative(instruction, name, ref_args, val_args, state)
            }
            Instruction::ErrorHandler(exp, inner) => {
                self.exec_error_handler(instruction, exp, inner, state)
            }
            Instruction::If(cond, then_branch, else_branch) => {
                match self.eval_boolean(cond, &state)? {
                    Err(e) => self.done(instruction, state.insert_error(e)),
                    Ok(true) => self.exec_instruction(then_branch, state),
                    Ok(false) => self.exec_instruction(else_branch, state),
                }
            }
            Instruction::While(cond, body) => {
                let mut state = state;
                loop {
                    if state.is_error() {
                        return Ok(state);
                    }
                    self.charge()?;
                    match self.eval_boolean(cond, &state)? {
                        Err(e) => return self.done(instruction, state.insert_error(e)),
                        Ok(false) => return Ok(state),
                        Ok(true) => state = self.exec_instruction(body, state)?,
                    }
                }
            }
            Instruction::Seq(first, second) => {
                let state = self.exec_instruction(first, state)?;
                self.exec_instruction(second, state)
            }
        }
    }

    fn done(&mut self, instruction: &Instruction, state: State) -> Outcome {
        self.observe_instruction(instruction, &state);
        Ok(state)
    }

    /// The assignment clause; the step numbers follow its definition.
    fn exec_assign(
        &mut self,
        instruction: &Instruction,
        ide: &Ident,
        exp: &DatExp,
        state: State,
    ) -> Outcome {
        // step 1: an error state has already been passed through
        // step 2: the identifier must be declared
        let Some(former) = state.lookup_var(ide).cloned() else {
            return self.done(instruction, state.insert_error(error::identifier_not_declared()));
        };
        // step 3: divergence propagates; step 4: expression errors load
        let new_com = match self.eval_data(exp, &state)? {
            Err(e) => return self.done(instruction, state.insert_error(e)),
            Ok(com) => com,
        };
        // step 5: the former transfer, applied to the new composite
        let checked = former.ty.transfer.apply(Ok(new_com.clone()), &self.limits);
        let checked = match checked {
            Err(e) => return self.done(instruction, state.insert_error(e)),
            Ok(com) => com,
        };
        // step 6: the body may change only coherently
        if !coherent(new_com.body(), &former.ty.body) {
            return self.done(instruction, state.insert_error(error::no_coherence()));
        }
        // step 7: the transfer must have been a yoke
        let Some(satisfied) = checked.as_boolean() else {
            return self.done(instruction, state.insert_error(error::a_yoke_expected()));
        };
        // step 8: and satisfied
        if !satisfied {
            return self.done(instruction, state.insert_error(error::yoke_not_satisfied()));
        }
        // step 9: the new composite keeps the former transfer
        let state = state.update_var(ide, Value::initialized(new_com, former.ty.transfer));
        self.done(instruction, state)
    }

    fn exec_yoke_replace(
        &mut self,
        instruction: &Instruction,
        ide: &Ident,
        transfer: &TraExp,
        state: State,
    ) -> Outcome {
        let Some(former) = state.lookup_var(ide).cloned() else {
            return self.done(instruction, state.insert_error(error::identifier_not_declared()));
        };
        let new_transfer = self.eval_transfer(transfer);
        match former.composite() {
            // an uninitialized variable accepts any transfer; the check
            // happens at its first assignment
            None => {
                let value = Value::pseudo(Type::new(former.ty.body, new_transfer));
                self.done(instruction, state.update_var(ide, value))
            }
            Some(com) => {
                let checked = match new_transfer.apply(Ok(com.clone()), &self.limits) {
                    Err(e) => return self.done(instruction, state.insert_error(e)),
                    Ok(c) => c,
                };
                let Some(satisfied) = checked.as_boolean() else {
                    return self.done(instruction, state.insert_error(error::a_yoke_expected()));
                };
                if !satisfied {
                    return self.done(instruction, state.insert_error(error::yoke_not_satisfied()));
                }
                self.done(instruction, state.update_var(ide, Value::initialized(com, new_transfer)))
            }
        }
    }

    /// `if dae then ins fi`: on a state carrying error E, runs `ins` on
    /// an OK-register copy when `dae` (evaluated on that copy — every
    /// expression is transparent on error states) yields the word E.
    fn exec_error_handler(
        &mut self,
        instruction: &Instruction,
        exp: &DatExp,
        inner: &Instruction,
        state: State,
    ) -> Outcome {
        let Some(registered) = state.registered_error().cloned() else {
            return self.done(instruction, state);
        };
        let clean = state.clone().clear_error();
        match self.eval_data(exp, &clean)? {
            Ok(com) if com.as_word() == Some(registered.word()) => {
                self.exec_instruction(inner, clean)
            }
            _ => self.done(instruction, state),
        }
    }

    // ---- declarations and preambles ----

    /// `Spre`: executes a preamble; sequencing distributes.
    pub fn exec_preamble(&mut self, preamble: &Preamble, state: State) -> State {
        match preamble {
            Preamble::Skip => state,
            Preamble::Seq(first, second) => {
                let state = self.exec_preamble(first, state);
                self.exec_preamble(second, state)
            }
            _ if state.is_error() => state,
            Preamble::VarDecl(ide, tex) => {
                if state.lookup_var(ide).is_some() {
                    let state = state.insert_error(error::identifier_not_free());
                    self.observe_declaration(preamble, &state);
                    return state;
                }
                let state = match self.eval_type(tex, &state) {
                    Err(e) => state.insert_error(e),
                    Ok(ty) => state.declare_var(ide, ty),
                };
                self.observe_declaration(preamble, &state);
                state
            }
            Preamble::TypeDef(ide, tex) => {
                if state.lookup_type(ide).is_some() {
                    let state = state.insert_error(error::identifier_not_free());
                    self.observe_declaration(preamble, &state);
                    return state;
                }
                let state = match self.eval_type(tex, &state) {
                    Err(e) => state.insert_error(e),
                    Ok(ty) => state.bind_type(ide, ty),
                };
                self.observe_declaration(preamble, &state);
                state
            }
            Preamble::Proc(decl) => {
                // the captured environment excludes the procedure
                // itself; it is nested back in at call time
                let declaration_env = Arc::new(state.env.clone());
                let decl = Arc::new(decl.clone());
                let procedure = ImperativeProcedure {
                    decl: decl.clone(),
                    declaration_env,
                    group: Arc::new(vec![decl.clone()]),
                };
                let state = state.bind_proc(&decl.name, Procedure::Imperative(procedure));
                self.observe_declaration(preamble, &state);
                state
            }
            Preamble::MultiProc(decls) => {
                let state = self.exec_multiproc(decls, state);
                self.observe_declaration(preamble, &state);
                state
            }
            Preamble::Fun(decl) => {
                let declaration_env = Arc::new(state.env.clone());
                let procedure =
                    FunctionalProcedure { decl: Arc::new(decl.clone()), declaration_env };
                let state = state.bind_proc(&decl.name, Procedure::Functional(procedure));
                self.observe_declaration(preamble, &state);
                state
            }
        }
    }

    /// All members share one declaration environment and are nested
    /// together at call time — that is what makes them mutually
    /// recursive. The group is elaborated as a whole: name clashes
    /// leave the state unchanged apart from the error register.
    fn exec_multiproc(&mut self, decls: &[crate::ast::ImpProcDecl], state: State) -> State {
        let mut names = std::collections::BTreeSet::new();
        for decl in decls {
            if state.lookup_proc(&decl.name).is_some()
                || crate::syntax::is_reserved_word(decl.name.as_str())
                || !names.insert(decl.name.clone())
            {
                return state.insert_error(error::identifier_not_free());
            }
        }
        let declaration_env = Arc::new(state.env.clone());
        let group: Arc<Vec<Arc<crate::ast::ImpProcDecl>>> =
            Arc::new(decls.iter().map(|d| Arc::new(d.clone())).collect());
        let mut state = state;
        for member in group.iter() {
            let procedure = ImperativeProcedure {
                decl: member.clone(),
                declaration_env: declaration_env.clone(),
                group: group.clone(),
            };
            state = state.bind_proc(&member.name, Procedure::Imperative(procedure));
        }
        state
    }

    // ---- procedure calls ----

    /// The four-stage protocol for `call ide (ref ... val ...)`.
    fn call_imperative(
        &mut self,
        instruction: &Instruction,
        name: &Ident,
        ref_args: &[Ident],
        val_args: &[Ident],
        state: State,
    ) -> Outcome {
        // stage 1: inspect the initial global state (the error case was
        // handled by instruction transparency)
        let Some(Procedure::Imperative(procedure)) = state.lookup_proc(name) else {
            return self.done(instruction, state.insert_error(error::procedure_not_declared()));
        };
        let procedure = procedure.clone();
        let decl = procedure.decl.clone();
        if ref_args.len() != decl.ref_params.len() || val_args.len() != decl.val_params.len() {
            return self.done(instruction, state.insert_error(error::parameter_list_mismatch()));
        }

        // stage 2: the initial local state — declaration-time
        // environment with the whole group nested, formals only
        let mut local_state = State { env: nest_group(&procedure), store: Store::default() };
        let params = decl
            .ref_params
            .iter()
            .zip(ref_args)
            .map(|(f, a)| (f, a, true))
            .chain(decl.val_params.iter().zip(val_args).map(|(f, a)| (f, a, false)));
        for ((formal, tex), actual, is_ref) in params {
            let ty = match self.eval_type(tex, &local_state) {
                Err(e) => return self.done(instruction, state.insert_error(e)),
                Ok(ty) => ty,
            };
            let Some(actual_value) = state.lookup_var(actual) else {
                return self
                    .done(instruction, state.insert_error(error::identifier_not_declared()));
            };
            let bound = match actual_value.composite() {
                // only reference formals may receive pseudo-values
                None if is_ref => Value::pseudo(ty),
                None => {
                    return self
                        .done(instruction, state.insert_error(error::variable_not_initialized()))
                }
                Some(com) => {
                    if !clan_contains_type(&ty, &com, &self.limits) {
                        return self.done(
                            instruction,
                            state.insert_error(error::parameter_type_mismatch()),
                        );
                    }
                    Value::initialized(com, ty.transfer)
                }
            };
            local_state.store.valuation.insert(formal.clone(), bound);
        }

        // stage 3: run the body; a terminal local error lands in the
        // initial global state and local bindings are abandoned
        let terminal_local = self.exec_program(&decl.body, local_state)?;
        if let Some(err) = terminal_local.registered_error() {
            return self.done(instruction, state.insert_error(err.clone()));
        }

        // stage 4: keep the initial global environment, return each
        // reference parameter under the full assignment discipline
        let mut global = state;
        for ((formal, _), actual) in decl.ref_params.iter().zip(ref_args) {
            let formal_value =
                terminal_local.lookup_var(formal).expect("formal parameters stay bound").clone();
            let Some(new_com) = formal_value.composite() else {
                // the actual was Ω and the body never initialized it
                continue;
            };
            let former = global.lookup_var(actual).expect("checked at stage 2").clone();
            let checked = match former.ty.transfer.apply(Ok(new_com.clone()), &self.limits) {
                Err(e) => return self.done(instruction, global.insert_error(e)),
                Ok(com) => com,
            };
            if !coherent(new_com.body(), &former.ty.body) {
                return self.done(instruction, global.insert_error(error::no_coherence()));
            }
            let Some(satisfied) = checked.as_boolean() else {
                return self.done(instruction, global.insert_error(error::a_yoke_expected()));
            };
            if !satisfied {
                return self.done(instruction, global.insert_error(error::yoke_not_satisfied()));
            }
            global = global.update_var(actual, Value::initialized(new_com, former.ty.transfer));
        }
        self.done(instruction, global)
    }

    /// Functional procedures: value parameters only, and the caller's
    /// state is never modified.
    fn call_functional(&mut self, name: &Ident, args: &[Ident], state: &State) -> EvalOutcome {
        let Some(Procedure::Functional(procedure)) = state.lookup_proc(name) else {
            return Ok(Err(error::procedure_not_declared()));
        };
        let procedure = procedure.clone();
        let decl = procedure.decl.clone();
        if args.len() != decl.val_params.len() {
            return Ok(Err(error::parameter_list_mismatch()));
        }

        let mut local_env = (*procedure.declaration_env).clone();
        local_env.procs.insert(decl.name.clone(), Procedure::Functional(procedure.clone()));
        let mut local_state = State { env: local_env, store: Store::default() };
        for ((formal, tex), actual) in decl.val_params.iter().zip(args) {
            let ty = match self.eval_type(tex, &local_state) {
                Err(e) => return Ok(Err(e)),
                Ok(ty) => ty,
            };
            let Some(actual_value) = state.lookup_var(actual) else {
                return Ok(Err(error::identifier_not_declared()));
            };
            let Some(com) = actual_value.composite() else {
                return Ok(Err(error::variable_not_initialized()));
            };
            if !clan_contains_type(&ty, &com, &self.limits) {
                return Ok(Err(error::parameter_type_mismatch()));
            }
            local_state
                .store
                .valuation
                .insert(formal.clone(), Value::initialized(com, ty.transfer));
        }

        let terminal = self.exec_program(&decl.body, local_state)?;
        if let Some(err) = terminal.registered_error() {
            return Ok(Err(err.clone()));
        }
        let result = match self.eval_data(&decl.result, &terminal)? {
            Err(e) => return Ok(Err(e)),
            Ok(com) => com,
        };
        let result_type = match self.eval_type(&decl.result_type, &terminal) {
            Err(e) => return Ok(Err(e)),
            Ok(ty) => ty,
        };
        if !clan_contains_type(&result_type, &result, &self.limits) {
            return Ok(Err(error::result_type_mismatch()));
        }
        Ok(Ok(result))
    }

    // ---- programs ----

    /// `Spr`: the preamble denotation composed with the instruction
    /// denotation.
    pub fn exec_program(&mut self, program: &Program, state: State) -> Outcome {
        let state = self.exec_preamble(&program.preamble, state);
        self.exec_instruction(&program.body, state)
    }
}

/// The declaration-time environment with every group member nested in —
/// the start of stage 2; also how recursion reaches the callee again.
fn nest_group(procedure: &ImperativeProcedure) -> Env {
    let mut env = (*procedure.declaration_env).clone();
    for member in procedure.group.iter() {
        env.procs.insert(
            member.name.clone(),
            Procedure::Imperative(ImperativeProcedure {
                decl: member.clone(),
                declaration_env: procedure.declaration_env.clone(),
                group: procedure.group.clone(),
            }),
        );
    }
    env
}

fn literal(composite: Composite, limits: &Limits) -> CompositeE {
    if crate::data::oversized(composite.data(), limits) {
        return Err(error::overflow());
    }
    Ok(composite)
}

fn read_variable(state: &State, ide: &Ident) -> CompositeE {
    match state.lookup_var(ide) {
        None => Err(error::identifier_not_declared()),
        Some(value) => value.composite().ok_or_else(error::variable_not_initialized),
    }
}
