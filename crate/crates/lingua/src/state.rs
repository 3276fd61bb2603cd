//! States: environments and stores.
//!
//! A state is `(env, (valuation, register))`. The environment binds type
//! constants and procedures, the valuation binds variables to values,
//! and the register holds `'OK'` or a single abstract error. All
//! mappings iterate in insertion order, giving deterministic dumps.

use std::fmt::Write as _;
use std::sync::Arc;

use indexmap::IndexMap;

use crate::ast::{FunProcDecl, ImpProcDecl};
use crate::error::{self, AbstractError};
use crate::ident::Ident;
use crate::syntax::is_reserved_word;
use crate::transfer::{Type, Value};

/// An imperative procedure as stored in a procedure environment: its
/// declaration, the declaration-time environment, and the declarations
/// of its whole multiprocedure group (a singleton for a plain `proc`).
/// The group members are nested into the environment at call time,
/// which is what enables direct and mutual recursion.
#[derive(Debug, Clone, PartialEq)]
pub struct ImperativeProcedure {
    pub decl: Arc<ImpProcDecl>,
    pub declaration_env: Arc<Env>,
    pub group: Arc<Vec<Arc<ImpProcDecl>>>,
}

/// A functional procedure: value parameters only, no side effects.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalProcedure {
    pub decl: Arc<FunProcDecl>,
    pub declaration_env: Arc<Env>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Procedure {
    Imperative(ImperativeProcedure),
    Functional(FunctionalProcedure),
}

/// The environment: type constants and procedures.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Env {
    pub types: IndexMap<Ident, Type>,
    pub procs: IndexMap<Ident, Procedure>,
}

/// The error register: `'OK'` or one abstract error.
#[derive(Debug, Clone, PartialEq)]
pub enum Register {
    Ok,
    Error(AbstractError),
}

/// The store: a valuation plus the error register.
#[derive(Debug, Clone, PartialEq)]
pub struct Store {
    pub valuation: IndexMap<Ident, Value>,
    pub register: Register,
}

impl Default for Store {
    fn default() -> Self {
        Store { valuation: IndexMap::new(), register: Register::Ok }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct State {
    pub env: Env,
    pub store: Store,
}

impl State {
    /// The empty state: no bindings, register `'OK'`.
    pub fn initial() -> State {
        State::default()
    }

    pub fn is_error(&self) -> bool {
        !matches!(self.store.register, Register::Ok)
    }

    pub fn registered_error(&self) -> Option<&AbstractError> {
        match &self.store.register {
            Register::Ok => None,
            Register::Error(e) => Some(e),
        }
    }

    /// The ◄ operator: same environment and valuation, new register
    /// content (overwriting whatever was there).
    pub fn insert_error(mut self, err: AbstractError) -> State {
        self.store.register = Register::Error(err);
        self
    }

    pub fn clear_error(mut self) -> State {
        self.store.register = Register::Ok;
        self
    }

    /// Binds `ide` to the pseudo-value `(Ω, typ)`.
    pub fn declare_var(self, ide: &Ident, ty: Type) -> State {
        self.bind(ide, Binding::Var(Value::pseudo(ty)))
    }

    pub fn bind_type(self, ide: &Ident, ty: Type) -> State {
        self.bind(ide, Binding::Type(ty))
    }

    pub fn bind_proc(self, ide: &Ident, proc: Procedure) -> State {
        self.bind(ide, Binding::Proc(proc))
    }

    /// Rebinds a variable without the identifier-not-free check — the
    /// assignment path, which has its own discipline.
    pub fn update_var(mut self, ide: &Ident, value: Value) -> State {
        self.store.valuation.insert(ide.clone(), value);
        self
    }

    fn bind(mut self, ide: &Ident, binding: Binding) -> State {
        let free = !is_reserved_word(ide.as_str())
            && match &binding {
                Binding::Var(_) => !self.store.valuation.contains_key(ide),
                Binding::Type(_) => !self.env.types.contains_key(ide),
                Binding::Proc(_) => !self.env.procs.contains_key(ide),
            };
        if !free {
            return self.insert_error(error::identifier_not_free());
        }
        match binding {
            Binding::Var(v) => {
                self.store.valuation.insert(ide.clone(), v);
            }
            Binding::Type(t) => {
                self.env.types.insert(ide.clone(), t);
            }
            Binding::Proc(p) => {
                self.env.procs.insert(ide.clone(), p);
            }
        }
        self
    }

    pub fn lookup_var(&self, ide: &Ident) -> Option<&Value> {
        self.store.valuation.get(ide)
    }

    pub fn lookup_type(&self, ide: &Ident) -> Option<&Type> {
        self.env.types.get(ide)
    }

    pub fn lookup_proc(&self, ide: &Ident) -> Option<&Procedure> {
        self.env.procs.get(ide)
    }

    /// The deterministic state dump: one `ide : type = data` line per
    /// variable in insertion order, then the register.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (ide, value) in &self.store.valuation {
            let _ = writeln!(out, "{ide} : {} = {value}", value.ty);
        }
        match &self.store.register {
            Register::Ok => out.push_str("register: OK\n"),
            Register::Error(e) => {
                let _ = writeln!(out, "register: {e}");
            }
        }
        out
    }
}

enum Binding {
    Var(Value),
    Type(Type),
    Proc(Procedure),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::{Body, Composite};
    use crate::transfer::Transfer;

    fn number_type() -> Type {
        Type::plain(Body::Number)
    }

    #[test]
    fn initial_state_is_clean() {
        let state = State::initial();
        assert!(!state.is_error());
        assert_eq!(state.lookup_var(&"x".into()), None);
    }

    #[test]
    fn insert_error_touches_only_the_register() {
        let state = State::initial().declare_var(&"x".into(), number_type());
        let before = state.store.valuation.clone();
        let state = state.insert_error(error::overflow());
        assert!(state.is_error());
        assert_eq!(state.store.valuation, before);
        assert_eq!(state.env, Env::default());
        // ◄ overwrites: the last error wins
        let state = state.insert_error(error::division_by_zero());
        assert_eq!(state.registered_error(), Some(&error::division_by_zero()));
    }

    #[test]
    fn double_declaration_is_not_free() {
        let state = State::initial()
            .declare_var(&"x".into(), number_type())
            .declare_var(&"x".into(), number_type());
        assert_eq!(state.registered_error(), Some(&error::identifier_not_free()));
    }

    #[test]
    fn namespaces_are_separate() {
        let state = State::initial()
            .declare_var(&"x".into(), number_type())
            .bind_type(&"x".into(), number_type());
        assert!(!state.is_error());
        assert_eq!(state.lookup_type(&"x".into()), Some(&number_type()));
    }

    #[test]
    fn keywords_are_rejected_as_identifiers() {
        let state = State::initial().declare_var(&"while".into(), number_type());
        assert_eq!(state.registered_error(), Some(&error::identifier_not_free()));
    }

    #[test]
    fn bind_then_lookup_type() {
        let state = State::initial().bind_type(&"T".into(), number_type());
        assert_eq!(state.lookup_type(&"T".into()), Some(&number_type()));
        let state = state.bind_type(&"T".into(), Type::plain(Body::Word));
        assert_eq!(state.registered_error(), Some(&error::identifier_not_free()));
        // the original binding is untouched
        assert_eq!(state.lookup_type(&"T".into()), Some(&number_type()));
    }

    #[test]
    fn dump_format() {
        let state = State::initial().declare_var(&"x".into(), number_type());
        let state =
            state.update_var(&"x".into(), Value::initialized(Composite::int(3), Transfer::tt()));
        let state = state.declare_var(&"y".into(), Type::plain(Body::Word));
        assert_eq!(state.dump(), "x : number = 3\ny : word = Ω\nregister: OK\n");
        let state = state.insert_error(error::overflow());
        assert!(state.dump().ends_with("register: overflow\n"));
    }

    #[test]
    fn states_are_sendable() {
        fn assert_send<T: Send>() {}
        assert_send::<State>();
    }
}
