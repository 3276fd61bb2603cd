//! Command-line driver.
//!
//! `run`, `parse`, `restore` and `eval` drive the interpreter; the
//! `grammar` subcommands drive the signature/grammar toolkit. Exit
//! codes: 0 success, 1 language-level error (or non-membership), 2
//! parse or input failure, 3 out of fuel.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lingua::ast::Dump;
use lingua::semantics::{Interp, StepEvent, StepKind};
use lingua::syntax::{
    parse_data_exp, parse_instruction, parse_program, parse_transfer_exp, parse_type_exp,
};
use lingua::{Limits, Mode, Pretty, State};
use lingua_algebra::{EquationalGrammar, Signature};

#[derive(Parser)]
#[command(name = "lingua", version, about = "A strongly typed interpreter and algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Fuel budget: one unit per expression or instruction node visited.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    /// Largest acceptable number magnitude, as a power of ten.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    max_number_digits: u32,
    /// Fraction-digit budget; division rounds half-even to this.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    max_fraction_digits: u32,
    #[arg(long, default_value_t = 4096, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_word_length: usize,
    #[arg(long, default_value_t = 65536, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_collection_size: usize,
    /// Print the canonical AST dump before running.
    #[arg(long)]
    dump_ast: bool,
    /// Report every atomic step and state dump on stderr.
    #[arg(long)]
    trace: bool,
    /// Disable the colloquial layer: require fully parenthesized input.
    #[arg(long)]
    strict_concrete: bool,
}

impl RunConfig {
    fn limits(&self) -> Limits {
        Limits {
            max_number_digits: self.max_number_digits,
            max_fraction_digits: self.max_fraction_digits,
            max_word_length: self.max_word_length,
            max_collection_size: self.max_collection_size,
        }
    }

    fn mode(&self) -> Mode {
        if self.strict_concrete {
            Mode::Strict
        } else {
            Mode::Colloquial
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse (restoring colloquialisms) and execute a program file.
    Run {
        file: PathBuf,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Print the canonical AST dump of a program file.
    Parse {
        file: PathBuf,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Print the strict-concrete form of colloquial input (a program or
    /// any expression/instruction fragment).
    Restore { file: PathBuf },
    /// Evaluate a data expression in the empty state.
    Eval {
        expression: String,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Signature and equational-grammar tools.
    Grammar {
        #[command(subcommand)]
        command: GrammarCommand,
    },
}

#[derive(Subcommand)]
enum GrammarCommand {
    /// Derive the abstract-syntax grammar from a signature file.
    Derive {
        signature: PathBuf,
        /// Write the grammar here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the length-bounded slice of a nonterminal's language,
    /// one word per line, sorted by length then lexicographically.
    Enumerate {
        grammar: PathBuf,
        nonterminal: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Exit 0 when the word belongs to the nonterminal's language.
    Member { grammar: PathBuf, nonterminal: String, word: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run { file, config } => cmd_run(&file, &config),
        Command::Parse { file, config } => cmd_parse(&file, &config),
        Command::Restore { file } => cmd_restore(&file),
        Command::Eval { expression, config } => cmd_eval(&expression, &config),
        Command::Grammar { command } => match command {
            GrammarCommand::Derive { signature, output } => {
                cmd_derive(&signature, output.as_deref())
            }
            GrammarCommand::Enumerate { grammar, nonterminal, max_len } => {
                cmd_enumerate(&grammar, &nonterminal, max_len)
            }
            GrammarCommand::Member { grammar, nonterminal, word } => {
                cmd_member(&grammar, &nonterminal, &word)
            }
        },
    };
    ExitCode::from(code)
}

fn read_source(path: &Path) -> Result<String, u8> {
    if path == Path::new("-") {
        let mut text = String::new();
        return match std::io::stdin().read_to_string(&mut text) {
            Ok(_) => Ok(text),
            Err(e) => {
                eprintln!("stdin: {e}");
                Err(2)
            }
        };
    }
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        2
    })
}

fn cmd_run(file: &Path, config: &RunConfig) -> u8 {
    let source = match read_source(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let program = match parse_program(&source, config.mode()) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return 2;
        }
    };
    if config.dump_ast {
        println!("{}", program.dump());
    }
    let outcome = if config.trace {
        let mut interp = Interp::with_observer(config.limits(), config.max_steps, trace_observer);
        interp.exec_program(&program, State::initial())
    } else {
        Interp::new(config.limits(), config.max_steps).exec_program(&program, State::initial())
    };
    match outcome {
        Err(_) => {
            println!("out of fuel after {} steps", config.max_steps);
            3
        }
        Ok(state) => match state.registered_error() {
            None => {
                print!("{}", state.dump());
                0
            }
            Some(err) => {
                println!("error: {err}");
                1
            }
        },
    }
}

fn trace_observer(event: StepEvent<'_>) {
    match event.kind {
        StepKind::Instruction(ins) => eprintln!("step: {}", ins.pretty()),
        StepKind::Declaration(decl) => eprintln!("step: {}", decl.pretty()),
    }
    for line in event.state.dump().lines() {
        eprintln!("  {line}");
    }
}

fn cmd_parse(file: &Path, config: &RunConfig) -> u8 {
    let source = match read_source(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match parse_program(&source, config.mode()) {
        Ok(program) => {
            println!("{}", program.dump());
            0
        }
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            2
        }
    }
}

fn cmd_restore(file: &Path) -> u8 {
    let source = match read_source(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    // a program must restore as a program; other input restores as the
    // first fragment kind that accepts it
    if source.trim_start().starts_with("begin-program") {
        return match parse_program(&source, Mode::Colloquial) {
            Ok(program) => {
                println!("{}", program.pretty());
                0
            }
            Err(e) => {
                eprintln!("{}:{e}", file.display());
                2
            }
        };
    }
    if let Ok(ins) = parse_instruction(&source, Mode::Colloquial) {
        println!("{}", ins.pretty());
        return 0;
    }
    match parse_data_exp(&source, Mode::Colloquial) {
        Ok(exp) => {
            println!("{}", exp.pretty());
            0
        }
        Err(data_error) => {
            if let Ok(tra) = parse_transfer_exp(&source, Mode::Colloquial) {
                println!("{}", tra.pretty());
                return 0;
            }
            if let Ok(tex) = parse_type_exp(&source, Mode::Colloquial) {
                println!("{}", tex.pretty());
                return 0;
            }
            eprintln!("{}:{data_error}", file.display());
            2
        }
    }
}

fn cmd_eval(expression: &str, config: &RunConfig) -> u8 {
    let exp = match parse_data_exp(expression, config.mode()) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let mut interp = Interp::new(config.limits(), config.max_steps);
    match interp.eval_data(&exp, &State::initial()) {
        Err(_) => {
            println!("out of fuel after {} steps", config.max_steps);
            3
        }
        Ok(Ok(composite)) => {
            println!("{composite}");
            0
        }
        Ok(Err(err)) => {
            println!("error: {err}");
            1
        }
    }
}

fn cmd_derive(signature: &Path, output: Option<&Path>) -> u8 {
    let source = match read_source(signature) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let sig = match Signature::parse(&source) {
        Ok(sig) => sig,
        Err(e) => {
            eprintln!("{}: {e}", signature.display());
            return 2;
        }
    };
    let grammar = sig.derive_abstract_syntax();
    match output {
        None => {
            print!("{}", grammar.to_text());
            0
        }
        Some(path) => match std::fs::write(path, grammar.to_text()) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                2
            }
        },
    }
}

fn load_grammar(path: &Path) -> Result<EquationalGrammar, u8> {
    let source = read_source(path)?;
    EquationalGrammar::parse(&source).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        2
    })
}

fn cmd_enumerate(grammar: &Path, nonterminal: &str, max_len: usize) -> u8 {
    let grammar = match load_grammar(grammar) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match grammar.enumerate(nonterminal, max_len) {
        Ok(words) => {
            let mut words: Vec<String> = words.into_iter().collect();
            words.sort_by(|a, b| a.chars().count().cmp(&b.chars().count()).then_with(|| a.cmp(b)));
            for word in words {
                println!("{word}");
            }
            0
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}

fn cmd_member(grammar: &Path, nonterminal: &str, word: &str) -> u8 {
    let grammar = match load_grammar(grammar) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match grammar.member(nonterminal, word) {
        Ok(true) => {
            println!("true");
            0
        }
        Ok(false) => {
            println!("false");
            1
        }
        Err(e) => {
            eprintln!("{e}");
            2
        }
    }
}
