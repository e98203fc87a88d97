//! Front end for the question answering engine: loading, REPL and batch runs.

use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use qa_core::answer::{Answer, AnswerKind, CannotReason};
use qa_core::lexicon::LexiconError;
use qa_core::store::StoreError;
use qa_core::{Engine, FactBase, Lexicon};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LOAD: i32 = 1;
pub const EXIT_BATCH: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Plain,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub facts_path: PathBuf,
    pub lexicon_path: PathBuf,
    /// Absent means REPL mode.
    pub batch_path: Option<PathBuf>,
    pub output_mode: OutputMode,
    pub trace: bool,
}

fn lexicon_error(path: &Path, e: LexiconError) -> String {
    match e {
        LexiconError::Io(m) => format!("cannot read lexicon {m}"),
        other => format!("{}:{other}", path.display()),
    }
}

fn store_error(path: &Path, e: StoreError) -> String {
    match e {
        StoreError::Io { .. } => e.to_string(),
        other => format!("{}:{other}", path.display()),
    }
}

/// Loads the lexicon and fact base and checks fact verbs against the lexicon.
pub fn load(config: &CliConfig) -> Result<Engine, String> {
    let lexicon = Lexicon::load(&config.lexicon_path).map_err(|e| lexicon_error(&config.lexicon_path, e))?;
    let fb = FactBase::load(&config.facts_path).map_err(|e| store_error(&config.facts_path, e))?;
    fb.check_against(&lexicon)
        .map_err(|e| store_error(&config.facts_path, e))?;
    Ok(Engine::new(fb, lexicon))
}

/// Machine line for a question that could not be parsed.
fn error_line() -> String {
    Answer {
        kind: AnswerKind::CannotAnswer(CannotReason::NotExecutable),
        fillers: Vec::new(),
        matched: Vec::new(),
    }
    .machine_line()
}

/// One output line for `question`. The trace report, if requested, goes to `diag`.
pub fn respond(
    engine: &Engine,
    question: &str,
    mode: OutputMode,
    trace: bool,
    diag: &mut dyn Write,
) -> io::Result<String> {
    let result = if trace {
        let report = engine.explain(question);
        write!(diag, "{report}")?;
        report.result
    } else {
        engine.ask(question)
    };
    Ok(match (result, mode) {
        (Ok(a), OutputMode::Plain) => a.text(),
        (Ok(a), OutputMode::Machine) => a.machine_line(),
        (Err(e), OutputMode::Plain) => format!("error: {e}"),
        (Err(e), OutputMode::Machine) => {
            writeln!(diag, "error: {question}: {e}")?;
            error_line()
        }
    })
}

/// Trace report for one question.
pub fn explain(question: &str, config: &CliConfig) -> Result<String, String> {
    Ok(load(config)?.explain(question).to_string())
}

fn batch(
    engine: &Engine,
    path: &Path,
    config: &CliConfig,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> io::Result<i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(diag, "error: cannot read batch file {}: {e}", path.display())?;
            return Ok(EXIT_BATCH);
        }
    };
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let answer = respond(engine, line, OutputMode::Machine, config.trace, diag)?;
        writeln!(out, "{answer}")?;
        out.flush()?;
    }
    Ok(EXIT_OK)
}

fn repl(
    engine: &Engine,
    config: &CliConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    diag: &mut dyn Write,
    prompt: bool,
) -> io::Result<i32> {
    let mut line = String::new();
    loop {
        if prompt {
            write!(out, "? ")?;
            out.flush()?;
        }
        line.clear();
        if input.read_line(&mut line)? == 0 {
            break;
        }
        let question = line.trim();
        if question.is_empty() || question.starts_with('#') {
            continue;
        }
        let answer = respond(engine, question, config.output_mode, config.trace, diag)?;
        writeln!(out, "{answer}")?;
        out.flush()?;
    }
    Ok(EXIT_OK)
}

/// Runs the front end and returns the process exit status.
pub fn run(
    config: &CliConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    diag: &mut dyn Write,
    prompt: bool,
) -> i32 {
    let engine = match load(config) {
        Ok(e) => e,
        Err(message) => {
            let _ = writeln!(diag, "error: {message}");
            return EXIT_LOAD;
        }
    };
    let status = match &config.batch_path {
        Some(path) => batch(&engine, path, config, out, diag),
        None => repl(&engine, config, input, out, diag, prompt),
    };
    status.unwrap_or_else(|e| {
        let _ = writeln!(diag, "error: {e}");
        EXIT_BATCH
    })
}
