use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::parse::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Code {
    Syntax,
    Lex,
    Unbound,
    CannotInfer,
    Mismatch,
    Sort,
    Fibrancy,
    Level,
    Hole,
    NotAType,
    Duplicate,
    Arity,
}

const CODES: &[(Code, &str)] = &[
    (Code::Syntax, "SYNTAX"),
    (Code::Lex, "LEX"),
    (Code::Unbound, "UNBOUND"),
    (Code::CannotInfer, "CANNOT_INFER"),
    (Code::Mismatch, "MISMATCH"),
    (Code::Sort, "SORT"),
    (Code::Fibrancy, "FIBRANCY"),
    (Code::Level, "LEVEL"),
    (Code::Hole, "HOLE"),
    (Code::NotAType, "NOT_A_TYPE"),
    (Code::Duplicate, "DUPLICATE"),
    (Code::Arity, "ARITY"),
];

impl Code {
    pub fn as_str(self) -> &'static str {
        CODES.iter().find(|(c, _)| *c == self).map(|(_, s)| *s).unwrap()
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Code {
    type Err = String;

    fn from_str(s: &str) -> Result<Code, String> {
        CODES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(c, _)| *c)
            .ok_or_else(|| format!("unknown diagnostic code `{s}`"))
    }
}

/// An error with one primary source location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: Code,
    pub message: String,
    pub span: Span,
    pub notes: Vec<String>,
}

impl Diagnostic {
    pub fn new(code: Code, span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            code,
            message: message.into(),
            span,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Diagnostic {
        self.notes.push(note.into());
        self
    }
}

impl From<crate::parse::ParseError> for Diagnostic {
    fn from(e: crate::parse::ParseError) -> Diagnostic {
        let code = match e {
            crate::parse::ParseError::Lex(_) => Code::Lex,
            _ => Code::Syntax,
        };
        Diagnostic::new(code, e.span(), e.to_string())
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}
