//! Concrete and colloquial syntax: lexer and parser.

mod lexer;
mod parser;

pub use lexer::{is_reserved_word, tokenize, ParseError, Token, TokenKind, KEYWORDS};
pub use parser::{
    parse_data_exp, parse_instruction, parse_program, parse_transfer_exp, parse_type_exp, Mode,
};
