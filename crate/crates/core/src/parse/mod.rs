//! Surface syntax: lexer, named raw terms with spans, parser and printer.

mod lexer;
mod parser;
mod printer;
mod raw;

pub use lexer::{lex, lex_with, LexError, LexOptions, Tok, Token};
pub use parser::{parse_file, parse_file_with, parse_term, ParseError};
pub use printer::{print_decl, print_file, print_term};
pub use raw::{is_reserved, universe_name, Binder, BinderName, DeclKind, Prim, Raw, RawDecl, RawKind};

use serde::Serialize;

/// Byte range in a source buffer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }

    /// One-based line and column (in characters) of `start`.
    pub fn line_col(self, source: &str) -> (usize, usize) {
        let upto = &source[..self.start.min(source.len())];
        let line = upto.matches('\n').count() + 1;
        let line_start = upto.rfind('\n').map(|i| i + 1).unwrap_or(0);
        let col = upto[line_start..].chars().count() + 1;
        (line, col)
    }
}
