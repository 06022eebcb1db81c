//! Checking sessions: a growing signature shared across files, plus
//! diagnostic rendering.

use std::io;
use std::path::{Path, PathBuf};

use serde_json::json;
use thiserror::Error;

use crate::conv::nf;
use crate::elab::distill::distill;
use crate::elab::{elaborate_into, Code, Diagnostic};
use crate::parse::{parse_file, print_term};
use crate::signature::{Context, EntryKind, Signature};
use crate::syntax::Universes;

/// A diagnostic tied to the file it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub file: String,
    pub diagnostic: Diagnostic,
    pub line: usize,
    pub col: usize,
}

impl Report {
    pub fn code(&self) -> Code {
        self.diagnostic.code
    }

    /// `file:line:col: error[CODE]: message`, followed by any notes.
    pub fn render(&self, color: bool) -> String {
        let error = if color { "\x1b[1;31merror\x1b[0m" } else { "error" };
        let mut out = format!(
            "{}:{}:{}: {error}[{}]: {}",
            self.file, self.line, self.col, self.diagnostic.code, self.diagnostic.message
        );
        for note in &self.diagnostic.notes {
            out.push_str("\n  note: ");
            out.push_str(note);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let span = self.diagnostic.span;
        json!({
            "code": self.diagnostic.code,
            "file": self.file,
            "span": {
                "start": span.start,
                "end": span.end,
                "line": self.line,
                "col": self.col,
            },
            "message": self.diagnostic.message,
        })
    }
}

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("no file named {0} in the working directory or include paths")]
    NotFound(String),
    #[error("`{0}` is not defined")]
    Undefined(String),
    #[error("`{0}` is a postulate and has no body")]
    NoBody(String),
}

pub struct Session {
    sig: Signature,
    reports: Vec<Report>,
    include: Vec<PathBuf>,
}

impl Session {
    pub fn new(universes: Universes) -> Session {
        Session {
            sig: Signature::new(universes),
            reports: Vec::new(),
            include: Vec::new(),
        }
    }

    pub fn with_include(mut self, dirs: Vec<PathBuf>) -> Session {
        self.include = dirs;
        self
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn reports(&self) -> &[Report] {
        &self.reports
    }

    pub fn has_errors(&self) -> bool {
        !self.reports.is_empty()
    }

    /// Check `text` into the session; returns the number of new diagnostics.
    pub fn check_source(&mut self, file: &str, text: &str) -> usize {
        let diags = match parse_file(text) {
            Ok(decls) => elaborate_into(&mut self.sig, &decls),
            Err(e) => vec![Diagnostic::from(e)],
        };
        let n = diags.len();
        for diagnostic in diags {
            let (line, col) = diagnostic.span.line_col(text);
            self.reports.push(Report {
                file: file.to_string(),
                diagnostic,
                line,
                col,
            });
        }
        n
    }

    /// Find `path` as given or under an include directory.
    pub fn resolve(&self, path: &Path) -> Result<PathBuf, SessionError> {
        if path.exists() {
            return Ok(path.to_path_buf());
        }
        if path.is_relative() {
            for dir in &self.include {
                let candidate = dir.join(path);
                if candidate.exists() {
                    return Ok(candidate);
                }
            }
        }
        Err(SessionError::NotFound(path.display().to_string()))
    }

    pub fn check_path(&mut self, path: &Path) -> Result<usize, SessionError> {
        let resolved = self.resolve(path)?;
        let text = std::fs::read_to_string(&resolved).map_err(|source| SessionError::Io {
            path: resolved.display().to_string(),
            source,
        })?;
        Ok(self.check_source(&path.display().to_string(), &text))
    }

    /// Normal form of a definition's body, in surface syntax.
    pub fn normalize(&self, name: &str) -> Result<String, SessionError> {
        let entry = self
            .sig
            .lookup(name)
            .ok_or_else(|| SessionError::Undefined(name.to_string()))?;
        let body = entry
            .body
            .as_ref()
            .ok_or_else(|| SessionError::NoBody(name.to_string()))?;
        let t = nf(&self.sig, &Context::new(), body);
        Ok(print_term(&distill(Some(&self.sig), &[], &t)))
    }

    /// Every user entry's elaborated type and body in core syntax.
    pub fn core_listing(&self) -> String {
        let mut out = String::new();
        for e in self.sig.entries().iter().filter(|e| e.kind != EntryKind::Axiom) {
            out.push_str(&format!("{} : {}\n", e.name, e.ty));
            if let Some(b) = &e.body {
                out.push_str(&format!("  := {b}\n"));
            }
        }
        out
    }
}
