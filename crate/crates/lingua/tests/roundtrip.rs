//! Pretty-printer / parser round trips and the restoring
//! transformation's golden cases.

use proptest::prelude::*;

use lingua::ast::Dump;
use lingua::gen::{self, Rng};
use lingua::syntax::{
    parse_data_exp, parse_instruction, parse_program, parse_transfer_exp, parse_type_exp, tokenize,
    Mode,
};
use lingua::Pretty;

#[test]
fn restoring_transformation_golden_cases() {
    let restored = |src: &str| parse_data_exp(src, Mode::Colloquial).unwrap().pretty();
    assert_eq!(restored("x + y + z"), "((x + y) + z)");
    assert_eq!(restored("x + y + z * x"), "((x + y) + (z * x))");
    assert_eq!(restored("x or y or z"), "(x or (y or z))");
    // the chain mixing + and * (with the evidently intended bracketing)
    assert_eq!(restored("x + y + z + x*y"), "(((x + y) + z) + (x * y))");
    assert_eq!(
        restored("array [x, x+y, 3*y]"),
        "add-to-arr add-to-arr array x ee new (x + y) ee new (3 * y) ee"
    );
}

#[test]
fn strict_texts_restore_to_themselves() {
    let cases = [
        "((x + y) + z)",
        "(x or (y or z))",
        "push 1 on list 2 ee ee",
        "if (x < 1) then x else top (l) fi",
        "add-to-arr array x ee new (3 * y) ee",
    ];
    for text in cases {
        let strict = parse_data_exp(text, Mode::Strict).unwrap();
        let colloquial = parse_data_exp(text, Mode::Colloquial).unwrap();
        assert_eq!(strict, colloquial, "modes disagree on {text}");
        assert_eq!(strict.pretty(), text, "pretty changed {text}");
    }
}

#[test]
fn strict_mode_rejects_colloquialisms() {
    for text in ["x + y", "x or y or z", "array [1, 2]", "(x)"] {
        assert!(parse_data_exp(text, Mode::Strict).is_err(), "{text} should not parse");
        assert!(parse_data_exp(text, Mode::Colloquial).is_ok(), "{text} should restore");
    }
}

#[test]
fn pretty_then_parse_is_token_identity() {
    // pretty ∘ parse is the identity on strict texts up to whitespace:
    // compare token streams
    let cases = [
        "begin-program let x be number tel ; x := (x + 1) end-program",
        "begin-program skip ; skip ; skip end-program",
        "begin-program set T as record-type a as number ee tes ; \
         let r be T tel ; r := record a as 1 ee ; \
         if (r.a < 2) then r := expand-record r at b by 'w' ee else skip fi end-program",
    ];
    for text in cases {
        let program = parse_program(text, Mode::Strict).unwrap();
        let printed = program.pretty();
        assert_eq!(tokenize(&printed).unwrap(), tokenize(text).unwrap(), "{text}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn data_expressions_round_trip(seed in any::<u64>()) {
        let exp = gen::dat_exp(&mut Rng::new(seed), 4);
        let printed = exp.pretty();
        let strict = parse_data_exp(&printed, Mode::Strict)
            .unwrap_or_else(|e| panic!("{printed}: {e}"));
        prop_assert_eq!(&strict, &exp, "strict reparse of {}", printed);
        let restored = parse_data_exp(&printed, Mode::Colloquial).unwrap();
        prop_assert_eq!(&restored, &exp, "colloquial reparse of {}", printed);
    }

    #[test]
    fn transfer_expressions_round_trip(seed in any::<u64>()) {
        let exp = gen::tra_exp(&mut Rng::new(seed), 4);
        let printed = exp.pretty();
        let reparsed = parse_transfer_exp(&printed, Mode::Strict)
            .unwrap_or_else(|e| panic!("{printed}: {e}"));
        prop_assert_eq!(reparsed, exp.clone(), "strict reparse of {}", printed);
        let restored = parse_transfer_exp(&printed, Mode::Colloquial).unwrap();
        prop_assert_eq!(restored, exp, "colloquial reparse of {}", printed);
    }

    #[test]
    fn type_expressions_round_trip(seed in any::<u64>()) {
        let exp = gen::typ_exp(&mut Rng::new(seed), 4);
        let printed = exp.pretty();
        let reparsed = parse_type_exp(&printed, Mode::Strict)
            .unwrap_or_else(|e| panic!("{printed}: {e}"));
        prop_assert_eq!(reparsed, exp, "reparse of {}", printed);
    }

    #[test]
    fn instructions_round_trip(seed in any::<u64>()) {
        let ins = gen::instruction(&mut Rng::new(seed), 3);
        let printed = ins.pretty();
        let reparsed = parse_instruction(&printed, Mode::Strict)
            .unwrap_or_else(|e| panic!("{printed}: {e}"));
        prop_assert_eq!(reparsed, ins, "reparse of {}", printed);
    }

    #[test]
    fn programs_round_trip(seed in any::<u64>()) {
        let program = gen::program(&mut Rng::new(seed), 2);
        let printed = program.pretty();
        let reparsed = parse_program(&printed, Mode::Strict)
            .unwrap_or_else(|e| panic!("{printed}: {e}"));
        prop_assert_eq!(reparsed, program, "reparse of {}", printed);
    }

    #[test]
    fn parse_concrete_agrees_with_restore_on_strict_inputs(seed in any::<u64>()) {
        let exp = gen::dat_exp(&mut Rng::new(seed), 3);
        let printed = exp.pretty();
        let strict = parse_data_exp(&printed, Mode::Strict).unwrap();
        let colloquial = parse_data_exp(&printed, Mode::Colloquial).unwrap();
        prop_assert_eq!(strict, colloquial);
    }
}

#[test]
fn dump_goldens() {
    let exp = parse_data_exp("x := 1", Mode::Strict);
    assert!(exp.is_err());

    let ins = parse_instruction("x := (y + 1)", Mode::Strict).unwrap();
    assert_eq!(ins.dump(), "(assign x (arith + (ide y) (num 1)))");

    let program = parse_program(
        "begin-program let x be number tel ; x := 1 ; x := 2 end-program",
        Mode::Strict,
    )
    .unwrap();
    assert_eq!(
        program.dump(),
        "(program (var-decl x (number)) (seq (assign x (num 1)) (assign x (num 2))))"
    );

    let call = parse_instruction("call p (ref a val b, c)", Mode::Strict).unwrap();
    assert_eq!(call.dump(), "(call p (ref a) (val b c))");

    let handler = parse_instruction("if 'overflow' then skip fi", Mode::Strict).unwrap();
    assert_eq!(handler.dump(), "(error-handler (word 'overflow') (skip))");
}
