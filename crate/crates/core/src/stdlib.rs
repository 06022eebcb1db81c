//! The bundled object-language library, its manifest, and a runner that
//! checks every file against the expected outcome.

use std::fmt;

use thiserror::Error;

use crate::driver::Session;
use crate::elab::Code;
use crate::syntax::Universes;

macro_rules! bundled {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../../../stdlib/", $path)))),*]
    };
}

/// Every bundled file as `(path relative to stdlib/, source)`.
pub const FILES: &[(&str, &str)] = bundled![
    "base.tt",
    "fin.tt",
    "iso.tt",
    "equiv.tt",
    "collapse.tt",
    "fib_repl_inconsistent.tt",
    "cocylinder.tt",
    "strict_cat.tt",
    "reedy.tt",
    "semi_segal2.tt",
    "nerve2.tt",
    "negative/cannot_infer.tt",
    "negative/duplicate.tt",
    "negative/eqs_for_id.tt",
    "negative/exfalsof_strict_motive.tt",
    "negative/hole.tt",
    "negative/id_on_strict.tt",
    "negative/jf_strict_motive.tt",
    "negative/natelimf_strict_motive.tt",
    "negative/natf_for_nats.tt",
    "negative/strict_nat_in_fibrant_sigma.tt",
    "negative/strict_univ_as_fibrant.tt",
    "negative/sumelimf_strict_motive.tt",
    "negative/syntax_error.tt",
    "negative/uip_on_fibrant.tt",
    "negative/unbound.tt",
    "negative/univ_in_itself.tt",
];

pub const MANIFEST: &str = include_str!("../../../stdlib/MANIFEST");

pub fn source(path: &str) -> Option<&'static str> {
    FILES.iter().find(|(p, _)| *p == path).map(|(_, s)| *s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Accept,
    Reject(Code),
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Accept => f.write_str("accept"),
            Expect::Reject(c) => write!(f, "reject:{c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub file: String,
    pub expect: Expect,
    /// Declarations the file adds to the signature, when recorded.
    pub declarations: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CorpusManifest {
    pub entries: Vec<ManifestEntry>,
}

impl CorpusManifest {
    pub fn accepted(&self) -> impl Iterator<Item = &ManifestEntry> {
        self.entries.iter().filter(|e| e.expect == Expect::Accept)
    }

    pub fn rejected(&self) -> impl Iterator<Item = &ManifestEntry> {
        self.entries.iter().filter(|e| e.expect != Expect::Accept)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("manifest line {line}: {message}")]
pub struct ManifestError {
    pub line: usize,
    pub message: String,
}

/// Lines are `<file> <accept|reject:CODE> [declarations]`; `#` starts a comment.
pub fn parse_manifest(text: &str) -> Result<CorpusManifest, ManifestError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |message: String| ManifestError { line: i + 1, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(err(format!("expected 2 or 3 fields, found {}", fields.len())));
        }
        let expect = match fields[1] {
            "accept" => Expect::Accept,
            other => match other.strip_prefix("reject:") {
                Some(code) => Expect::Reject(code.parse().map_err(err)?),
                None => return Err(err(format!("unknown outcome `{other}`"))),
            },
        };
        let declarations = match fields.get(2) {
            Some(n) => Some(n.parse().map_err(|_| err(format!("bad declaration count `{n}`")))?),
            None => None,
        };
        entries.push(ManifestEntry {
            file: fields[0].to_string(),
            expect,
            declarations,
        });
    }
    Ok(CorpusManifest { entries })
}

/// The bundled manifest.
pub fn corpus() -> CorpusManifest {
    parse_manifest(MANIFEST).expect("bundled manifest parses")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub file: String,
    pub expect: Expect,
    pub codes: Vec<Code>,
    pub declarations: usize,
    pub ok: bool,
}

impl Outcome {
    fn judge(entry: &ManifestEntry, codes: Vec<Code>, declarations: usize) -> Outcome {
        let ok = match entry.expect {
            Expect::Accept => codes.is_empty() && entry.declarations.is_none_or(|n| n == declarations),
            Expect::Reject(c) => codes == [c],
        };
        Outcome {
            file: entry.file.clone(),
            expect: entry.expect,
            codes,
            declarations,
            ok,
        }
    }
}

/// Accept files go through one shared session in manifest order; each
/// reject file gets a fresh session. `load` maps a manifest path to source.
pub fn run_corpus<F>(manifest: &CorpusManifest, universes: Universes, load: F) -> Vec<Outcome>
where
    F: Fn(&str) -> Option<String>,
{
    let mut out = Vec::new();
    let mut shared = Session::new(universes);
    for entry in &manifest.entries {
        let Some(text) = load(&entry.file) else {
            out.push(Outcome {
                file: entry.file.clone(),
                expect: entry.expect,
                codes: Vec::new(),
                declarations: 0,
                ok: false,
            });
            continue;
        };
        let mut fresh;
        let session = match entry.expect {
            Expect::Accept => &mut shared,
            Expect::Reject(_) => {
                fresh = Session::new(universes);
                &mut fresh
            }
        };
        let (before, seen) = (session.signature().len(), session.reports().len());
        session.check_source(&entry.file, &text);
        let codes = session.reports()[seen..].iter().map(|r| r.code()).collect();
        let declarations = session.signature().len() - before;
        out.push(Outcome::judge(entry, codes, declarations));
    }
    out
}

/// [`run_corpus`] over the bundled sources.
pub fn run_bundled(universes: Universes) -> Vec<Outcome> {
    run_corpus(&corpus(), universes, |p| source(p).map(str::to_string))
}
