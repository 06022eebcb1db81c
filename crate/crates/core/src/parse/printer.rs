//! Pretty printer for the surface syntax. Output reparses to a term that
//! prints identically.

use std::fmt::Write;

use crate::syntax::Layer;

use super::raw::{Binder, BinderName, DeclKind, Raw, RawDecl, RawKind};

// Precedence levels, loosest first.
const TERM: u8 = 0;
const ARROW: u8 = 1;
const PROD: u8 = 2;
const APP: u8 = 3;
const ATOM: u8 = 4;

pub fn print_file(decls: &[RawDecl]) -> String {
    let mut out = String::new();
    for (i, d) in decls.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&print_decl(d));
        out.push('\n');
    }
    out
}

pub fn print_decl(d: &RawDecl) -> String {
    let mut out = String::new();
    out.push_str(match d.kind {
        DeclKind::Def => "def ",
        DeclKind::Postulate => "postulate ",
    });
    out.push_str(&d.name);
    for g in &d.params {
        out.push(' ');
        group(&mut out, g);
    }
    out.push_str(" : ");
    term(&mut out, &d.ty, TERM);
    if let Some(body) = &d.body {
        out.push_str(" :=\n  ");
        term(&mut out, body, TERM);
    }
    out
}

pub fn print_term(t: &Raw) -> String {
    let mut out = String::new();
    term(&mut out, t, TERM);
    out
}

fn name(out: &mut String, b: &BinderName) {
    match &b.name {
        Some(n) => out.push_str(n),
        None => out.push('_'),
    }
}

fn group(out: &mut String, g: &Binder) {
    out.push('(');
    for (i, b) in g.names.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        name(out, b);
    }
    out.push_str(" : ");
    term(out, &g.ty, TERM);
    out.push(')');
}

fn prec(t: &Raw) -> u8 {
    match &t.kind {
        RawKind::Lam(..) => TERM,
        RawKind::Pi(..) | RawKind::Arrow(..) => ARROW,
        RawKind::Sigma(..) | RawKind::Product(..) => PROD,
        RawKind::App(..) => APP,
        _ => ATOM,
    }
}

fn term(out: &mut String, t: &Raw, ctx: u8) {
    let parens = prec(t) < ctx;
    if parens {
        out.push('(');
    }
    match &t.kind {
        RawKind::Var(n) => out.push_str(n),
        RawKind::Prim(p) => out.push_str(p.name()),
        RawKind::Univ(layer, level) => {
            let prefix = match layer {
                Layer::Fib => "U",
                Layer::Strict => "US",
            };
            write!(out, "{prefix}{level}").unwrap();
        }
        RawKind::Hole => out.push('_'),
        RawKind::Pi(groups, body) => {
            for g in groups {
                group(out, g);
                out.push(' ');
            }
            out.push_str("-> ");
            term(out, body, TERM);
        }
        RawKind::Arrow(a, b) => {
            term(out, a, PROD);
            out.push_str(" -> ");
            term(out, b, TERM);
        }
        RawKind::Sigma(groups, body) => {
            for g in groups {
                group(out, g);
                out.push(' ');
            }
            out.push_str("× ");
            term(out, body, PROD);
        }
        RawKind::Product(a, b) => {
            term(out, a, APP);
            out.push_str(" × ");
            term(out, b, PROD);
        }
        RawKind::Lam(names, body) => {
            out.push('\\');
            for (i, b) in names.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                name(out, b);
            }
            out.push_str(". ");
            term(out, body, TERM);
        }
        RawKind::App(f, a) => {
            term(out, f, APP);
            out.push(' ');
            term(out, a, ATOM);
        }
        RawKind::Pair(a, b) => {
            out.push('(');
            term(out, a, TERM);
            let mut rest = &**b;
            while let RawKind::Pair(x, y) = &rest.kind {
                out.push_str(", ");
                term(out, x, TERM);
                rest = y;
            }
            out.push_str(", ");
            term(out, rest, TERM);
            out.push(')');
        }
        RawKind::Ann(e, ty) => {
            out.push('(');
            if matches!(e.kind, RawKind::Var(_) | RawKind::Hole | RawKind::App(..)) {
                // Keep `(x : A)` from reading back as a binder.
                out.push('(');
                term(out, e, TERM);
                out.push(')');
            } else {
                term(out, e, TERM);
            }
            out.push_str(" : ");
            term(out, ty, TERM);
            out.push(')');
        }
    }
    if parens {
        out.push(')');
    }
}
