//! The acceptance suite. One test per criterion; each prints a PASS
//! line when it gets through (run with `--nocapture` to see them).

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;

use lingua::ast::{ArithOp, CompareOp, Instruction};
use lingua::gen::{self, Rng};
use lingua::ops;
use lingua::semantics::{Interp, OutOfFuel};
use lingua::syntax::{parse_data_exp, parse_instruction, parse_program, Mode};
use lingua::TriBool::{Ee, Ff, Tt};
use lingua::{
    clan_contains_body, AbstractError, Composite, CompositeE, Limits, Pretty, State, Transfer,
    TriBool, Value,
};
use lingua_algebra::{eval_numbool, numbool_signature, NumBoolValue, Signature};

const FUEL: u64 = 1_000_000;

fn lingua_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lingua"))
}

fn run_program(source: &str, limits: Limits) -> State {
    let program = parse_program(source, Mode::Colloquial).expect("program parses");
    Interp::new(limits, FUEL)
        .exec_program(&program, State::initial())
        .expect("terminates in budget")
}

fn register(state: &State) -> Option<&str> {
    state.registered_error().map(|e| e.word())
}

#[test]
fn criterion_01_mccarthy_tables() {
    let table_or = [
        ((Tt, Tt), Tt),
        ((Tt, Ff), Tt),
        ((Tt, Ee), Tt),
        ((Ff, Tt), Tt),
        ((Ff, Ff), Ff),
        ((Ff, Ee), Ee),
        ((Ee, Tt), Ee),
        ((Ee, Ff), Ee),
        ((Ee, Ee), Ee),
    ];
    let table_and = [
        ((Tt, Tt), Tt),
        ((Tt, Ff), Ff),
        ((Tt, Ee), Ee),
        ((Ff, Tt), Ff),
        ((Ff, Ff), Ff),
        ((Ff, Ee), Ff),
        ((Ee, Tt), Ee),
        ((Ee, Ff), Ee),
        ((Ee, Ee), Ee),
    ];
    for ((p, q), expected) in table_or {
        assert_eq!(p.or_m(q), expected);
    }
    for ((p, q), expected) in table_and {
        assert_eq!(p.and_m(q), expected);
    }
    for (p, expected) in [(Tt, Ff), (Ff, Tt), (Ee, Ee)] {
        assert_eq!(p.not_m(), expected);
    }
    for p in TriBool::ALL {
        for q in TriBool::ALL {
            assert_eq!(p.and_m(q).not_m(), p.not_m().or_m(q.not_m()), "De Morgan");
            assert_eq!(p.or_m(q).not_m(), p.not_m().and_m(q.not_m()), "De Morgan");
            for s in TriBool::ALL {
                assert_eq!(p.and_m(q.and_m(s)), p.and_m(q).and_m(s), "assoc and");
                assert_eq!(p.or_m(q.or_m(s)), p.or_m(q).or_m(s), "assoc or");
                assert_eq!(p.and_m(q.or_m(s)), p.and_m(q).or_m(p.and_m(s)), "right distributivity");
            }
        }
    }
    // the two failure witnesses
    assert_eq!(Ff.and_m(Ee), Ff);
    assert_eq!(Ee.and_m(Ff), Ee);
    assert_ne!(Ff.and_m(Ee), Ee.and_m(Ff), "non-commutativity");
    assert_eq!(Tt.or_m(Ee).and_m(Ff), Ff);
    assert_eq!(Tt.and_m(Ff).or_m(Ee.and_m(Ff)), Ee, "left distributivity fails");
    println!("criterion 1 (three-valued tables and laws): PASS");
}

#[test]
fn criterion_02_worked_evaluations() {
    assert_eq!(eval_numbool("+(1,+(1,0))").unwrap(), NumBoolValue::Num(2.into()));
    assert_eq!(eval_numbool("<(+(1,+(1,0)),0)").unwrap(), NumBoolValue::Bool(Ff));
    let output = lingua_bin().args(["eval", "(1 + (1 + 0))"]).output().unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8_lossy(&output.stdout).trim(), "(2, number)");
    println!("criterion 2 (worked evaluations): PASS");
}

#[test]
fn criterion_03_overflow_non_associativity() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.lng");
    let b = dir.path().join("b.lng");
    std::fs::write(&a, "begin-program let x be number tel ; x := (-4 + (10 + 3)) end-program")
        .unwrap();
    std::fs::write(&b, "begin-program let x be number tel ; x := ((-4 + 10) + 3) end-program")
        .unwrap();

    let out_a =
        lingua_bin().args(["run"]).arg(&a).args(["--max-number-digits", "1"]).output().unwrap();
    assert_eq!(out_a.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out_a.stdout).trim(), "error: overflow");

    let out_b =
        lingua_bin().args(["run"]).arg(&b).args(["--max-number-digits", "1"]).output().unwrap();
    assert_eq!(out_b.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out_b.stdout);
    assert!(stdout.contains("x : number = 9"), "{stdout}");
    println!("criterion 3 (overflow non-associativity): PASS");
}

#[test]
fn criterion_04_lazy_conditional() {
    let state = run_program(
        "begin-program let x be number tel ; x := 0 ; \
         if x ≠ 0 and 1/x < 10 then x := x+1 else x := x-1 fi end-program",
        Limits::default(),
    );
    assert_eq!(register(&state), None, "terminates with register OK");
    let x = state.lookup_var(&"x".into()).unwrap().composite().unwrap();
    assert_eq!(x, Composite::int(-1));
    println!("criterion 4 (lazy conditional): PASS");
}

#[test]
fn criterion_05_restoring_transformation() {
    // the quoted parenthesizations, as AST goldens
    let golden = [
        ("x + y + z", "((x + y) + z)"),
        ("x + y + z * x", "((x + y) + (z * x))"),
        ("x or y or z", "(x or (y or z))"),
        ("x + y + z + x*y", "(((x + y) + z) + (x * y))"),
        ("array [x, x+y, 3*y]", "add-to-arr add-to-arr array x ee new (x + y) ee new (3 * y) ee"),
    ];
    for (colloquial, strict) in golden {
        let restored = parse_data_exp(colloquial, Mode::Colloquial).unwrap();
        let expected = parse_data_exp(strict, Mode::Strict).unwrap();
        assert_eq!(restored, expected, "{colloquial}");
        assert_eq!(restored.pretty(), strict);
    }

    // restore ∘ pretty is the identity on 1,000 generated trees
    let mut rng = Rng::new(0x5EED);
    for case in 0..400 {
        let exp = gen::dat_exp(&mut rng, 4);
        let reparsed = parse_data_exp(&exp.pretty(), Mode::Colloquial)
            .unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(reparsed, exp, "case {case}");
    }
    for case in 0..300 {
        let ins = gen::instruction(&mut rng, 3);
        let reparsed = parse_instruction(&ins.pretty(), Mode::Colloquial)
            .unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(reparsed, ins, "case {case}");
    }
    for case in 0..300 {
        let program = gen::program(&mut rng, 2);
        let reparsed = parse_program(&program.pretty(), Mode::Colloquial)
            .unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(reparsed, program, "case {case}");
    }
    println!("criterion 5 (restoring transformation): PASS");
}

#[test]
fn criterion_06_assignment_nine_steps() {
    let declared_yoked = "let x be replace-transfer-in number by (it < 10) ee tel".to_string();
    // (program fragment, expected register word or None)
    let table: Vec<(String, Option<&str>)> = vec![
        // step 2
        ("skip ; x := 1".to_string(), Some("identifier-not-declared")),
        // step 4
        ("let x be number tel ; x := 1/0".to_string(), Some("division-by-zero")),
        // step 5: the transfer's own error comes before coherence
        (
            "let x be replace-transfer-in record-type a as number ee by (record.a < 5) ee tel ; \
             x := record b as 1 ee"
                .to_string(),
            Some("attribute-missing"),
        ),
        // step 6: coherence before the yoke-shape check
        (
            "let x be replace-transfer-in number by 273 ee tel ; x := 'w'".to_string(),
            Some("no-coherence"),
        ),
        // step 7
        (
            "let x be replace-transfer-in number by 273 ee tel ; x := 1".to_string(),
            Some("a-yoke-expected"),
        ),
        // step 8
        (format!("{declared_yoked} ; x := 20"), Some("yoke-not-satisfied")),
        // step 9
        (format!("{declared_yoked} ; x := 5"), None),
        // ordering: step 2 beats step 4 when both would fire
        ("skip ; y := 1/0".to_string(), Some("identifier-not-declared")),
    ];
    for (fragment, expected) in table {
        let state =
            run_program(&format!("begin-program {fragment} end-program"), Limits::default());
        assert_eq!(register(&state), expected, "fragment: {fragment}");
    }

    // step 1: an error-carrying state is returned unchanged
    let program =
        parse_program("begin-program let x be number tel ; x := 1 end-program", Mode::Strict)
            .unwrap();
    let poisoned = State::initial().insert_error(AbstractError::new("boom"));
    let result =
        Interp::new(Limits::default(), FUEL).exec_program(&program, poisoned.clone()).unwrap();
    assert_eq!(result, poisoned, "step 1");

    // step 3: divergence inside the assigned expression propagates
    let program = parse_program(
        "begin-program \
         fun spin (val v as number) begin-program skip ; while true do skip od end-program \
           return v as number ; \
         let x be number tel ; x := 1 ; x := spin(x) end-program",
        Mode::Colloquial,
    )
    .unwrap();
    let outcome = Interp::new(Limits::default(), 400).exec_program(&program, State::initial());
    assert_eq!(outcome, Err(OutOfFuel), "step 3");

    // step 9 keeps the former transfer: a later violation still trips
    let state = run_program(
        &format!("begin-program {declared_yoked} ; x := 5 ; x := 20 end-program"),
        Limits::default(),
    );
    assert_eq!(register(&state), Some("yoke-not-satisfied"));
    println!("criterion 6 (assignment nine-step clause): PASS");
}

#[test]
fn criterion_07_transparency_suites() {
    // (a) every composite-level operation returns its first error
    // argument, swept over generated error positions
    let limits = Limits::default();
    let attr = lingua::Ident::new("a");
    type BinOp<'a> = Box<dyn Fn(CompositeE, CompositeE) -> CompositeE + 'a>;
    let ops_table: Vec<(&str, BinOp)> = vec![
        ("add", Box::new(|a, b| ops::comp_arith(ArithOp::Add, a, b, &limits))),
        ("sub", Box::new(|a, b| ops::comp_arith(ArithOp::Sub, a, b, &limits))),
        ("mul", Box::new(|a, b| ops::comp_arith(ArithOp::Mul, a, b, &limits))),
        ("div", Box::new(|a, b| ops::comp_arith(ArithOp::Div, a, b, &limits))),
        ("eq", Box::new(|a, b| ops::comp_compare(CompareOp::Eq, a, b))),
        ("lt", Box::new(|a, b| ops::comp_compare(CompareOp::Lt, a, b))),
        ("le", Box::new(|a, b| ops::comp_compare(CompareOp::Le, a, b))),
        ("glue", Box::new(|a, b| ops::comp_glue(a, b, &limits))),
        ("push", Box::new(|a, b| ops::list_push(a, b, &limits))),
        ("append", Box::new(|a, b| ops::array_append(a, b, &limits))),
        ("index", Box::new(ops::array_index)),
        ("expand", Box::new(|a, b| ops::record_expand(a, &attr, b, &limits))),
    ];
    let mut rng = Rng::new(0x7A);
    for case in 0..150 {
        let good = Ok(gen::composite(&mut rng, 2));
        let e1: CompositeE = Err(gen::abstract_error(&mut rng));
        let e2: CompositeE = Err(AbstractError::new("later"));
        for (name, op) in &ops_table {
            assert_eq!(op(e1.clone(), good.clone()), e1, "{name} case {case} error left");
            assert_eq!(op(good.clone(), e2.clone()), e2, "{name} case {case} error right");
            assert_eq!(op(e1.clone(), e2.clone()), e1, "{name} case {case} both");
        }
        for (name, result) in [
            ("list-make", ops::list_make(e1.clone(), &limits)),
            ("top", ops::list_top(e1.clone())),
            ("array-make", ops::array_make(e1.clone(), &limits)),
            ("record-make", ops::record_make(&attr, e1.clone(), &limits)),
            ("remove", ops::record_remove(e1.clone(), &attr)),
            ("select", ops::record_select(e1.clone(), &attr)),
        ] {
            assert_eq!(result, e1, "{name} case {case}");
        }
    }

    // (b) every instruction except the error handler is the identity on
    // error states
    let mut rng = Rng::new(0x7B);
    let mut checked = 0;
    while checked < 250 {
        let instruction = gen::instruction(&mut rng, 3);
        if matches!(instruction, Instruction::ErrorHandler(..)) {
            continue;
        }
        let mut state = State::initial();
        for _ in 0..rng.below(4) {
            let name = gen::ident(&mut rng);
            if state.lookup_var(&name).is_none() {
                state = state.update_var(
                    &name,
                    Value::initialized(gen::composite(&mut rng, 2), Transfer::tt()),
                );
            }
        }
        let state = state.insert_error(gen::abstract_error(&mut rng));
        let result = Interp::new(Limits::default(), FUEL)
            .exec_instruction(&instruction, state.clone())
            .expect("fuel");
        assert_eq!(result, state, "instruction: {}", instruction.pretty());
        checked += 1;
    }
    println!("criterion 7 (transparency suites): PASS");
}

#[test]
fn criterion_08_stored_value_invariant_audit() {
    let limits = Limits::default();
    let mut rng = Rng::new(0x51A7E);
    let mut violations = 0usize;
    let mut steps = 0usize;
    for _ in 0..500 {
        let program = gen::well_formed_program(&mut rng);
        let audit_limits = limits.clone();
        let mut interp = Interp::with_observer(limits.clone(), FUEL, |event| {
            steps += 1;
            for (_, value) in &event.state.store.valuation {
                let Some(data) = &value.content else { continue };
                if !clan_contains_body(&value.ty.body, data) {
                    violations += 1;
                    continue;
                }
                let com = value.composite().unwrap();
                if value.ty.transfer.apply(Ok(com), &audit_limits) != Ok(Composite::truth()) {
                    violations += 1;
                }
            }
        });
        interp.exec_program(&program, State::initial()).expect("generated programs stay in budget");
    }
    assert_eq!(violations, 0, "stored-value invariant violated");
    assert!(steps > 2000, "the audit actually observed steps ({steps})");
    println!("criterion 8 (stored-value invariant audit, {steps} steps): PASS");
}

#[test]
fn criterion_09_procedure_protocol() {
    // no global variables
    let state = run_program(
        "begin-program \
         let g be number tel ; \
         proc p (ref r as number) begin-program skip ; r := g end-program end-proc ; \
         let out be number tel ; \
         g := 7 ; out := 0 ; call p (ref out) end-program",
        Limits::default(),
    );
    assert_eq!(register(&state), Some("identifier-not-declared"), "no globals");

    // reference parameters come back updated
    let state = run_program(
        "begin-program \
         proc inc (ref r as number val d as number) \
           begin-program skip ; r := r + d end-program end-proc ; \
         let x be number tel ; let d be number tel ; \
         x := 40 ; d := 2 ; call inc (ref x val d) end-program",
        Limits::default(),
    );
    assert_eq!(register(&state), None);
    assert_eq!(
        state.lookup_var(&"x".into()).unwrap().composite().unwrap(),
        Composite::int(42),
        "ref round trip"
    );

    // declaration-time visibility: a type defined after the procedure
    // is invisible inside it
    let state = run_program(
        "begin-program \
         proc p (ref r as number) \
           begin-program let t be T tel ; t := 1 ; r := t end-program end-proc ; \
         set T as number tes ; \
         let out be number tel ; call p (ref out) end-program",
        Limits::default(),
    );
    assert_eq!(register(&state), Some("type-not-defined"), "visibility");

    // recursive factorial
    let state = run_program(
        "begin-program \
         proc fact (ref r as number val n as number) \
           begin-program let m be number tel ; \
             if n = 0 then r := 1 else m := n - 1 ; call fact (ref r val m) ; r := r * n fi \
           end-program end-proc ; \
         let res be number tel ; let n be number tel ; \
         n := 5 ; call fact (ref res val n) end-program",
        Limits::default(),
    );
    assert_eq!(register(&state), None);
    assert_eq!(
        state.lookup_var(&"res".into()).unwrap().composite().unwrap(),
        Composite::int(120),
        "factorial(5)"
    );

    // mutual recursion through a multiprocedure
    let state = run_program(
        "begin-program begin-multiproc \
           proc even (ref b as boolean val n as number) \
             begin-program let m be number tel ; \
               if n = 0 then b := true else m := n - 1 ; call odd (ref b val m) fi \
             end-program end-proc ; \
           proc odd (ref b as boolean val n as number) \
             begin-program let m be number tel ; \
               if n = 0 then b := false else m := n - 1 ; call even (ref b val m) fi \
             end-program end-proc \
         end-multiproc ; \
         let ans be boolean tel ; let n be number tel ; \
         n := 10 ; call even (ref ans val n) end-program",
        Limits::default(),
    );
    assert_eq!(register(&state), None);
    assert_eq!(
        state.lookup_var(&"ans".into()).unwrap().composite().unwrap(),
        Composite::boolean(true),
        "even(10)"
    );

    // a functional call leaves the caller's state bit-identical
    let caller = run_program(
        "begin-program \
         fun sq (val v as number) begin-program skip ; skip end-program \
           return v * v as number ; \
         let x be number tel ; x := 3 end-program",
        Limits::default(),
    );
    let before = caller.clone();
    let exp = parse_data_exp("sq(x)", Mode::Colloquial).unwrap();
    let result = Interp::new(Limits::default(), FUEL).eval_data(&exp, &caller).unwrap();
    assert_eq!(result, Ok(Composite::int(9)));
    assert_eq!(caller, before, "caller state untouched");
    println!("criterion 9 (procedure protocol): PASS");
}

#[test]
fn criterion_10_grammar_toolkit_and_fuel() {
    // derive equals the hand-written grammar, via the CLI (golden file)
    let expected_grammar = "\
NumExp = \"0\" | \"1\" | \"+\" \"(\" NumExp \",\" NumExp \")\"
BoolExp = \"tt\" | \"ff\" | \"=\" \"(\" NumExp \",\" NumExp \")\" | \"<\" \"(\" NumExp \",\" NumExp \")\" | \"not\" \"(\" BoolExp \")\" | \"or\" \"(\" BoolExp \",\" BoolExp \")\"
";
    let dir = tempfile::tempdir().unwrap();
    let sig_path = dir.path().join("numbool.sig");
    std::fs::write(&sig_path, lingua_algebra::numbool::NUMBOOL_SIGNATURE_TEXT).unwrap();
    let output = lingua_bin().args(["grammar", "derive"]).arg(&sig_path).output().unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8_lossy(&output.stdout), expected_grammar);

    // enumeration equals an independent brute-force closure, length 12
    let sig = numbool_signature();
    let grammar = sig.derive_abstract_syntax();
    let oracle = closure_oracle(&sig, 12);
    for sort in sig.sorts() {
        assert_eq!(grammar.enumerate(sort, 12).unwrap(), oracle[sort], "slice of {sort}");
    }
    assert!(grammar.member("NumExp", "+(1,+(1,0))").unwrap());

    // fuel monotonicity on 100 random (program, F, F + k) pairs
    let mut rng = Rng::new(0xF0E1);
    for case in 0..100 {
        let program = gen::well_formed_program(&mut rng);
        let mut probe = Interp::new(Limits::default(), FUEL);
        let done = probe.exec_program(&program, State::initial()).expect("in budget");
        let used = FUEL - probe.fuel_left();
        for extra in [0, 1 + rng.below(1000)] {
            let again = Interp::new(Limits::default(), used + extra)
                .exec_program(&program, State::initial());
            assert_eq!(again.as_ref().unwrap(), &done, "case {case} with fuel {used}+{extra}");
        }
        // and one unit less cannot complete
        assert_eq!(
            Interp::new(Limits::default(), used - 1).exec_program(&program, State::initial()),
            Err(OutOfFuel),
            "case {case} deterministic fuel use"
        );
    }
    println!("criterion 10 (grammar toolkit and fuel monotonicity): PASS");
}

/// Term-algebra closure: every constructible term-string within the
/// length bound, built constructor-by-constructor. Independent of the
/// language-equation evaluator it cross-checks.
fn closure_oracle(sig: &Signature, max_len: usize) -> BTreeMap<String, BTreeSet<String>> {
    let mut built: BTreeMap<String, BTreeSet<String>> =
        sig.sorts().iter().map(|s| (s.clone(), BTreeSet::new())).collect();
    loop {
        let mut grew = false;
        for ctor in sig.ctors() {
            let mut tuples = vec![Vec::new()];
            for sort in &ctor.args {
                let mut next = Vec::new();
                for tuple in &tuples {
                    for term in &built[sort] {
                        let mut grown: Vec<String> = tuple.clone();
                        grown.push(term.clone());
                        next.push(grown);
                    }
                }
                tuples = next;
            }
            for tuple in tuples {
                let rendered = if tuple.is_empty() {
                    ctor.name.clone()
                } else {
                    format!("{}({})", ctor.name, tuple.join(","))
                };
                if rendered.chars().count() <= max_len
                    && built.get_mut(&ctor.result).unwrap().insert(rendered)
                {
                    grew = true;
                }
            }
        }
        if !grew {
            break built;
        }
    }
}
