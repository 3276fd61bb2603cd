//! Lexical analysis.
//!
//! Longest-match lexing; multi-word keywords are single hyphenated
//! tokens (`record-type`, `add-to-arr`, `begin-program`) and take
//! precedence over identifiers. `--` starts a line comment. Word
//! literals are apostrophe-delimited with no interior apostrophe.

use std::fmt;

use crate::number::Number;

/// Every keyword of the concrete syntax. Reserved: none of these may be
/// declared as an identifier.
pub const KEYWORDS: &[&str] = &[
    "true",
    "false",
    "and",
    "or",
    "not",
    "glue",
    "list",
    "push",
    "on",
    "top",
    "ee",
    "array",
    "add-to-arr",
    "new",
    "record",
    "expand-record",
    "remove-attr",
    "at",
    "by",
    "if",
    "then",
    "else",
    "fi",
    "while",
    "do",
    "od",
    "skip",
    "call",
    "ref",
    "val",
    "yoke",
    "let",
    "be",
    "tel",
    "set",
    "as",
    "tes",
    "proc",
    "end-proc",
    "begin-multiproc",
    "end-multiproc",
    "fun",
    "return",
    "begin-program",
    "end-program",
    "boolean",
    "number",
    "word",
    "list-type",
    "array-type",
    "record-type",
    "expand-record-type",
    "replace-transfer-in",
    "it",
    "TT",
    "all-list",
];

pub fn is_reserved_word(text: &str) -> bool {
    KEYWORDS.contains(&text)
}

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Keyword(&'static str),
    Ident(String),
    Num(Number),
    Word(String),
    Punct(&'static str),
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Keyword(k) => format!("'{k}'"),
            TokenKind::Ident(i) => format!("identifier '{i}'"),
            TokenKind::Num(n) => format!("number {n}"),
            TokenKind::Word(w) => format!("word '{w}'"),
            TokenKind::Punct(p) => format!("'{p}'"),
            TokenKind::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: u32,
    pub col: u32,
}

/// A diagnostic with a source position, `line:col: message`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl ParseError {
    pub fn new(line: u32, col: u32, message: impl Into<String>) -> ParseError {
        ParseError { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    Lexer::new(source).run()
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(source: &'a str) -> Lexer<'a> {
        Lexer { chars: source.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, message)
    }

    fn run(mut self) -> Result<Vec<Token>, ParseError> {
        let mut tokens = Vec::new();
        loop {
            while matches!(self.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(c) = self.peek() else {
                tokens.push(Token { kind: TokenKind::Eof, line, col });
                return Ok(tokens);
            };
            let kind = match c {
                '\'' => self.word_literal()?,
                '0'..='9' => self.number_literal(),
                c if c.is_ascii_alphabetic() => self.ident_or_keyword(),
                '-' => {
                    self.bump();
                    if self.peek() == Some('-') {
                        // line comment
                        while !matches!(self.peek(), None | Some('\n')) {
                            self.bump();
                        }
                        continue;
                    }
                    TokenKind::Punct("-")
                }
                _ => self.punct()?,
            };
            tokens.push(Token { kind, line, col });
        }
    }

    fn word_literal(&mut self) -> Result<TokenKind, ParseError> {
        self.bump(); // opening apostrophe
        let mut text = String::new();
        loop {
            match self.peek() {
                Some('\'') => {
                    self.bump();
                    return Ok(TokenKind::Word(text));
                }
                Some('\n') | None => {
                    return Err(self.error("unterminated word literal"));
                }
                Some(c) => {
                    text.push(c);
                    self.bump();
                }
            }
        }
    }

    fn number_literal(&mut self) -> TokenKind {
        let mut text = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            text.push(self.bump().unwrap());
        }
        // a dot joins only when digits follow (a trailing dot is selection)
        if self.peek() == Some('.') {
            let mut ahead = self.chars.clone();
            ahead.next();
            if matches!(ahead.next(), Some(c) if c.is_ascii_digit()) {
                text.push(self.bump().unwrap());
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    text.push(self.bump().unwrap());
                }
            }
        }
        TokenKind::Num(text.parse().expect("digit runs parse as numbers"))
    }

    fn ident_or_keyword(&mut self) -> TokenKind {
        let mut text = String::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphanumeric() => {
                    text.push(self.bump().unwrap());
                }
                // a hyphen joins only when a letter follows, so `x-1`
                // stays a subtraction
                Some('-') => {
                    let mut ahead = self.chars.clone();
                    ahead.next();
                    if matches!(ahead.next(), Some(c) if c.is_ascii_alphabetic()) {
                        text.push(self.bump().unwrap());
                    } else {
                        break;
                    }
                }
                _ => break,
            }
        }
        match KEYWORDS.iter().find(|k| **k == text) {
            Some(k) => TokenKind::Keyword(k),
            None => TokenKind::Ident(text),
        }
    }

    fn punct(&mut self) -> Result<TokenKind, ParseError> {
        let c = self.peek().unwrap();
        let kind = match c {
            ':' => {
                self.bump();
                if self.peek() == Some('=') {
                    self.bump();
                    TokenKind::Punct(":=")
                } else {
                    return Err(self.error("expected ':=' after ':'"));
                }
            }
            '<' => {
                self.bump();
                if self.peek() == Some('=') {
                    self.bump();
                    TokenKind::Punct("<=")
                } else {
                    TokenKind::Punct("<")
                }
            }
            '!' => {
                self.bump();
                if self.peek() == Some('=') {
                    self.bump();
                    TokenKind::Punct("!=")
                } else {
                    return Err(self.error("expected '!=' after '!'"));
                }
            }
            '≤' => {
                self.bump();
                TokenKind::Punct("<=")
            }
            '≠' => {
                self.bump();
                TokenKind::Punct("!=")
            }
            '=' => {
                self.bump();
                TokenKind::Punct("=")
            }
            '+' => {
                self.bump();
                TokenKind::Punct("+")
            }
            '*' => {
                self.bump();
                TokenKind::Punct("*")
            }
            '/' => {
                self.bump();
                TokenKind::Punct("/")
            }
            '(' => {
                self.bump();
                TokenKind::Punct("(")
            }
            ')' => {
                self.bump();
                TokenKind::Punct(")")
            }
            '[' => {
                self.bump();
                TokenKind::Punct("[")
            }
            ']' => {
                self.bump();
                TokenKind::Punct("]")
            }
            '.' => {
                self.bump();
                TokenKind::Punct(".")
            }
            ',' => {
                self.bump();
                TokenKind::Punct(",")
            }
            ';' => {
                self.bump();
                TokenKind::Punct(";")
            }
            other => return Err(self.error(format!("unexpected character {other:?}"))),
        };
        Ok(kind)
    }
}
