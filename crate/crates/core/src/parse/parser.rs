use thiserror::Error;

use crate::syntax::Name;

use super::lexer::{lex_with, LexError, LexOptions, Tok, Token};
use super::raw::{is_reserved, universe_name, Binder, BinderName, DeclKind, Prim, Raw, RawDecl, RawKind};
use super::Span;

const MAX_DEPTH: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        span: Span,
        expected: Vec<String>,
        found: String,
    },
    #[error("expressions nested too deeply")]
    TooDeep { span: Span },
}

impl ParseError {
    pub fn span(&self) -> Span {
        match self {
            ParseError::Lex(e) => e.span(),
            ParseError::Syntax { span, .. } | ParseError::TooDeep { span } => *span,
        }
    }
}

type Result<T> = std::result::Result<T, ParseError>;

pub fn parse_file(source: &str) -> Result<Vec<RawDecl>> {
    parse_file_with(source, LexOptions::default())
}

pub fn parse_file_with(source: &str, opts: LexOptions) -> Result<Vec<RawDecl>> {
    let tokens = lex_with(source, opts)?;
    let mut p = Parser::new(tokens, source.len());
    let mut decls = Vec::new();
    while p.peek().is_some() {
        decls.push(p.decl()?);
    }
    Ok(decls)
}

/// Parse a single term spanning the whole input.
pub fn parse_term(source: &str) -> Result<Raw> {
    let tokens = lex_with(source, LexOptions::default())?;
    let mut p = Parser::new(tokens, source.len());
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(p.unexpected(&["end of input"]));
    }
    Ok(t)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: usize,
    depth: usize,
}

impl Parser {
    fn new(tokens: Vec<Token>, eof: usize) -> Parser {
        Parser {
            tokens,
            pos: 0,
            eof,
            depth: 0,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + offset).map(|t| &t.tok)
    }

    fn here(&self) -> Span {
        match self.tokens.get(self.pos) {
            Some(t) => t.span,
            None => Span::new(self.eof, self.eof),
        }
    }

    fn prev_end(&self) -> usize {
        self.pos.checked_sub(1).map(|i| self.tokens[i].span.end).unwrap_or(0)
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        self.pos += 1;
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            span: self.here(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: match self.peek() {
                Some(t) => t.to_string(),
                None => "end of input".to_string(),
            },
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Token> {
        if self.peek() == Some(&tok) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&[&tok.to_string()]))
        }
    }

    fn decl(&mut self) -> Result<RawDecl> {
        let start = self.here().start;
        let kind = match self.peek() {
            Some(Tok::Def) => DeclKind::Def,
            Some(Tok::Postulate) => DeclKind::Postulate,
            _ => return Err(self.unexpected(&["`def`", "`postulate`"])),
        };
        self.bump();
        let (name, name_span) = match self.peek() {
            Some(Tok::Ident(s)) if !is_reserved(s) => {
                let name: Name = s.as_str().into();
                (name, self.bump().span)
            }
            _ => return Err(self.unexpected(&["a declaration name"])),
        };
        let mut params = Vec::new();
        while self.peek() == Some(&Tok::LParen) {
            if !self.at_group() {
                return Err(ParseError::Syntax {
                    span: self.here(),
                    expected: vec!["a binder `(x : A)`".to_string()],
                    found: "`(`".to_string(),
                });
            }
            params.push(self.group()?);
        }
        self.expect(Tok::Colon)?;
        let ty = self.term()?;
        let body = match kind {
            DeclKind::Def => {
                self.expect(Tok::Assign)?;
                Some(self.term()?)
            }
            DeclKind::Postulate => None,
        };
        Ok(RawDecl {
            kind,
            name,
            name_span,
            params,
            ty,
            body,
            span: Span::new(start, self.prev_end()),
        })
    }

    fn is_binder_name(tok: Option<&Tok>) -> bool {
        match tok {
            Some(Tok::Ident(s)) => !is_reserved(s),
            Some(Tok::Underscore) => true,
            _ => false,
        }
    }

    /// Is the cursor at `( x y ... :` ?
    fn at_group(&self) -> bool {
        if self.peek() != Some(&Tok::LParen) || !Self::is_binder_name(self.peek_at(1)) {
            return false;
        }
        let mut i = 2;
        while Self::is_binder_name(self.peek_at(i)) {
            i += 1;
        }
        self.peek_at(i) == Some(&Tok::Colon)
    }

    fn binder_name(&mut self) -> Result<BinderName> {
        match self.peek() {
            Some(Tok::Underscore) => Ok(BinderName {
                name: None,
                span: self.bump().span,
            }),
            Some(Tok::Ident(s)) if !is_reserved(s) => {
                let name: Name = s.as_str().into();
                Ok(BinderName {
                    name: Some(name),
                    span: self.bump().span,
                })
            }
            _ => Err(self.unexpected(&["a variable name"])),
        }
    }

    fn group(&mut self) -> Result<Binder> {
        self.expect(Tok::LParen)?;
        let mut names = vec![self.binder_name()?];
        while self.peek() != Some(&Tok::Colon) {
            names.push(self.binder_name()?);
        }
        self.bump();
        let ty = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(Binder { names, ty })
    }

    fn term(&mut self) -> Result<Raw> {
        if self.depth >= MAX_DEPTH {
            return Err(ParseError::TooDeep { span: self.here() });
        }
        self.depth += 1;
        let r = if self.peek() == Some(&Tok::Lambda) {
            self.lambda()
        } else {
            self.arrow()
        };
        self.depth -= 1;
        r
    }

    fn lambda(&mut self) -> Result<Raw> {
        let start = self.bump().span.start;
        let mut names = vec![self.binder_name()?];
        while self.peek() != Some(&Tok::Dot) {
            if !Self::is_binder_name(self.peek()) {
                return Err(self.unexpected(&["a variable name", "`.`"]));
            }
            names.push(self.binder_name()?);
        }
        self.bump();
        let body = self.term()?;
        let span = Span::new(start, body.span.end);
        Ok(Raw::new(RawKind::Lam(names, Box::new(body)), span))
    }

    fn arrow(&mut self) -> Result<Raw> {
        let lhs = self.prod()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            return Ok(Raw::new(RawKind::Arrow(Box::new(lhs), Box::new(rhs)), span));
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Raw> {
        let lhs = if self.at_group() {
            let start = self.here().start;
            let mut groups = Vec::new();
            while self.at_group() {
                groups.push(self.group()?);
            }
            match self.peek() {
                Some(Tok::Arrow) => {
                    self.bump();
                    let body = self.term()?;
                    let span = Span::new(start, body.span.end);
                    return Ok(Raw::new(RawKind::Pi(groups, Box::new(body)), span));
                }
                Some(Tok::Times) => {
                    self.bump();
                    let body = self.prod()?;
                    let span = Span::new(start, body.span.end);
                    return Ok(Raw::new(RawKind::Sigma(groups, Box::new(body)), span));
                }
                _ if groups.len() == 1 => {
                    // `(f x : A)` not followed by a binder: an annotated application.
                    let group = groups.pop().unwrap();
                    let mut inner: Option<Raw> = None;
                    for bn in &group.names {
                        let atom = match &bn.name {
                            Some(n) => Raw::new(RawKind::Var(n.clone()), bn.span),
                            None => Raw::new(RawKind::Hole, bn.span),
                        };
                        inner = Some(match inner {
                            None => atom,
                            Some(f) => {
                                let span = f.span.join(atom.span);
                                Raw::new(RawKind::App(Box::new(f), Box::new(atom)), span)
                            }
                        });
                    }
                    let inner = inner.unwrap();
                    let span = Span::new(start, self.prev_end());
                    let head = Raw::new(RawKind::Ann(Box::new(inner), Box::new(group.ty)), span);
                    self.app_rest(head)?
                }
                _ => return Err(self.unexpected(&["`->`", "`×`"])),
            }
        } else {
            self.app()?
        };
        if self.peek() == Some(&Tok::Times) {
            self.bump();
            let rhs = self.prod()?;
            let span = lhs.span.join(rhs.span);
            return Ok(Raw::new(RawKind::Product(Box::new(lhs), Box::new(rhs)), span));
        }
        Ok(lhs)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::Underscore) | Some(Tok::LParen)
        )
    }

    fn app(&mut self) -> Result<Raw> {
        let head = self.atom()?;
        self.app_rest(head)
    }

    fn app_rest(&mut self, mut head: Raw) -> Result<Raw> {
        while self.starts_atom() {
            let arg = self.atom()?;
            let span = head.span.join(arg.span);
            head = Raw::new(RawKind::App(Box::new(head), Box::new(arg)), span);
        }
        Ok(head)
    }

    fn atom(&mut self) -> Result<Raw> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let kind = if let Some((layer, level)) = universe_name(s) {
                    RawKind::Univ(layer, level)
                } else if let Some(p) = Prim::from_name(s) {
                    RawKind::Prim(p)
                } else {
                    RawKind::Var(s.as_str().into())
                };
                let span = self.bump().span;
                Ok(Raw::new(kind, span))
            }
            Some(Tok::Underscore) => {
                let span = self.bump().span;
                Ok(Raw::new(RawKind::Hole, span))
            }
            Some(Tok::LParen) => {
                let start = self.bump().span.start;
                let first = self.term()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(first)
                    }
                    Some(Tok::Comma) => {
                        let mut items = vec![first];
                        while self.peek() == Some(&Tok::Comma) {
                            self.bump();
                            items.push(self.term()?);
                        }
                        let end = self.expect(Tok::RParen)?.span.end;
                        let mut acc = items.pop().unwrap();
                        while let Some(item) = items.pop() {
                            let span = item.span.join(acc.span);
                            acc = Raw::new(RawKind::Pair(Box::new(item), Box::new(acc)), span);
                        }
                        acc.span = Span::new(start, end);
                        Ok(acc)
                    }
                    Some(Tok::Colon) => {
                        self.bump();
                        let ty = self.term()?;
                        let end = self.expect(Tok::RParen)?.span.end;
                        Ok(Raw::new(
                            RawKind::Ann(Box::new(first), Box::new(ty)),
                            Span::new(start, end),
                        ))
                    }
                    _ => Err(self.unexpected(&["`)`", "`,`", "`:`"])),
                }
            }
            _ => Err(self.unexpected(&["a term"])),
        }
    }
}
