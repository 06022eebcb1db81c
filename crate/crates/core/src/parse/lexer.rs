use std::fmt;

use thiserror::Error;

use super::Span;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Def,
    Postulate,
    Ident(String),
    Underscore,
    LParen,
    RParen,
    Colon,
    Assign,
    Arrow,
    Times,
    Lambda,
    Dot,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Def => f.write_str("`def`"),
            Tok::Postulate => f.write_str("`postulate`"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Underscore => f.write_str("`_`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Assign => f.write_str("`:=`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Times => f.write_str("`×`"),
            Tok::Lambda => f.write_str("`\\`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Comma => f.write_str("`,`"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("illegal character {ch:?}")]
    IllegalCharacter { ch: char, span: Span },
    #[error("unterminated block comment")]
    UnterminatedComment { span: Span },
}

impl LexError {
    pub fn span(&self) -> Span {
        match self {
            LexError::IllegalCharacter { span, .. } | LexError::UnterminatedComment { span } => *span,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LexOptions {
    /// Accept `λ` as an alias of `\`.
    pub unicode_lambda: bool,
}

impl Default for LexOptions {
    fn default() -> Self {
        LexOptions { unicode_lambda: true }
    }
}

fn is_ident_start(c: char) -> bool {
    c == '_' || (c.is_alphabetic() && c != 'λ')
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c == '\'' || (c.is_alphanumeric() && c != 'λ')
}

pub fn lex(source: &str) -> Result<Vec<Token>, LexError> {
    lex_with(source, LexOptions::default())
}

pub fn lex_with(source: &str, opts: LexOptions) -> Result<Vec<Token>, LexError> {
    let mut tokens = Vec::new();
    let mut chars = source.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let rest = &source[start..];
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if rest.starts_with("--") {
            while let Some(&(_, c)) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        if rest.starts_with("{-") {
            let mut depth = 0usize;
            let mut i = start;
            loop {
                let here = &source[i..];
                if here.starts_with("{-") {
                    depth += 1;
                    i += 2;
                } else if here.starts_with("-}") {
                    depth -= 1;
                    i += 2;
                    if depth == 0 {
                        break;
                    }
                } else if let Some(c) = here.chars().next() {
                    i += c.len_utf8();
                } else {
                    return Err(LexError::UnterminatedComment {
                        span: Span::new(start, start + 2),
                    });
                }
            }
            while chars.peek().is_some_and(|&(j, _)| j < i) {
                chars.next();
            }
            continue;
        }
        let fixed = [
            (":=", Tok::Assign),
            ("->", Tok::Arrow),
            ("→", Tok::Arrow),
            ("×", Tok::Times),
            ("\\", Tok::Lambda),
            ("(", Tok::LParen),
            (")", Tok::RParen),
            (":", Tok::Colon),
            (".", Tok::Dot),
            (",", Tok::Comma),
        ];
        if let Some((text, tok)) = fixed.iter().find(|(text, _)| rest.starts_with(text)) {
            tokens.push(Token {
                tok: tok.clone(),
                span: Span::new(start, start + text.len()),
            });
            for _ in text.chars() {
                chars.next();
            }
            continue;
        }
        if c == 'λ' && opts.unicode_lambda {
            chars.next();
            tokens.push(Token {
                tok: Tok::Lambda,
                span: Span::new(start, start + c.len_utf8()),
            });
            continue;
        }
        if is_ident_start(c) {
            let mut end = start;
            while let Some(&(j, c)) = chars.peek() {
                if !is_ident_continue(c) {
                    break;
                }
                end = j + c.len_utf8();
                chars.next();
            }
            let text = &source[start..end];
            let tok = match text {
                "def" => Tok::Def,
                "postulate" => Tok::Postulate,
                "_" => Tok::Underscore,
                _ => Tok::Ident(text.to_string()),
            };
            tokens.push(Token {
                tok,
                span: Span::new(start, end),
            });
            continue;
        }
        return Err(LexError::IllegalCharacter {
            ch: c,
            span: Span::new(start, start + c.len_utf8()),
        });
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    fn id(s: &str) -> Tok {
        Tok::Ident(s.to_string())
    }

    #[test]
    fn simple_def() {
        assert_eq!(
            toks("def x : Unit := star"),
            vec![Tok::Def, id("x"), Tok::Colon, id("Unit"), Tok::Assign, id("star")]
        );
    }

    #[test]
    fn comments_are_skipped() {
        assert_eq!(toks("-- c\nU0"), vec![id("U0")]);
        assert_eq!(toks("{- a {- nested -} b -} U1 -- tail"), vec![id("U1")]);
        assert!(matches!(lex("{- open"), Err(LexError::UnterminatedComment { .. })));
    }

    #[test]
    fn lambda_alias() {
        assert_eq!(toks("λ"), vec![Tok::Lambda]);
        assert_eq!(toks("\\x. x"), vec![Tok::Lambda, id("x"), Tok::Dot, id("x")]);
        let err = lex_with("λ", LexOptions { unicode_lambda: false }).unwrap_err();
        assert_eq!(
            err,
            LexError::IllegalCharacter {
                ch: 'λ',
                span: Span::new(0, 2)
            }
        );
    }

    #[test]
    fn symbols_and_spans() {
        let ts = lex("(a , b) -> A × B → C").unwrap();
        let kinds: Vec<_> = ts.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::LParen,
                id("a"),
                Tok::Comma,
                id("b"),
                Tok::RParen,
                Tok::Arrow,
                id("A"),
                Tok::Times,
                id("B"),
                Tok::Arrow,
                id("C"),
            ]
        );
        assert_eq!(ts[6].span, Span::new(11, 12));
        assert_eq!(ts[7].span, Span::new(13, 15));
    }

    #[test]
    fn underscore_and_primes() {
        assert_eq!(toks("_ _x x' ψ₂"), vec![Tok::Underscore, id("_x"), id("x'"), id("ψ₂")]);
    }

    #[test]
    fn illegal_character() {
        assert!(matches!(lex("x ; y"), Err(LexError::IllegalCharacter { ch: ';', .. })));
    }
}
