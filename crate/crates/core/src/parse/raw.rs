use crate::syntax::{Layer, Name};

use super::Span;

/// Built-in constants of the surface language.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prim {
    Unit,
    Star,
    Nat(Layer),
    Zero,
    Suc,
    NatElim(Layer),
    Sum(Layer),
    Inl,
    Inr,
    SumElim(Layer),
    Empty(Layer),
    EmptyElim(Layer),
    Id,
    Eq,
    Refl(Layer),
    J(Layer),
    Fst,
    Snd,
}

const PRIMS: &[(&str, Prim)] = &[
    ("Unit", Prim::Unit),
    ("star", Prim::Star),
    ("Nat", Prim::Nat(Layer::Fib)),
    ("NatS", Prim::Nat(Layer::Strict)),
    ("zero", Prim::Zero),
    ("suc", Prim::Suc),
    ("natelim", Prim::NatElim(Layer::Fib)),
    ("natelimS", Prim::NatElim(Layer::Strict)),
    ("Sum", Prim::Sum(Layer::Fib)),
    ("SumS", Prim::Sum(Layer::Strict)),
    ("inl", Prim::Inl),
    ("inr", Prim::Inr),
    ("sumelim", Prim::SumElim(Layer::Fib)),
    ("sumelimS", Prim::SumElim(Layer::Strict)),
    ("Empty", Prim::Empty(Layer::Fib)),
    ("EmptyS", Prim::Empty(Layer::Strict)),
    ("exfalso", Prim::EmptyElim(Layer::Fib)),
    ("exfalsoS", Prim::EmptyElim(Layer::Strict)),
    ("Id", Prim::Id),
    ("Eq", Prim::Eq),
    ("refl", Prim::Refl(Layer::Fib)),
    ("reflS", Prim::Refl(Layer::Strict)),
    ("J", Prim::J(Layer::Fib)),
    ("JS", Prim::J(Layer::Strict)),
    ("fst", Prim::Fst),
    ("snd", Prim::Snd),
];

impl Prim {
    pub fn from_name(s: &str) -> Option<Prim> {
        PRIMS.iter().find(|(n, _)| *n == s).map(|(_, p)| *p)
    }

    pub fn name(self) -> &'static str {
        PRIMS.iter().find(|(_, p)| *p == self).map(|(n, _)| *n).unwrap()
    }

    /// Number of explicit arguments the primitive must be applied to.
    pub fn arity(self) -> usize {
        match self {
            Prim::Unit | Prim::Star | Prim::Nat(_) | Prim::Empty(_) | Prim::Zero => 0,
            Prim::Suc | Prim::Inl | Prim::Inr | Prim::Refl(_) | Prim::Fst | Prim::Snd => 1,
            Prim::Sum(_) | Prim::EmptyElim(_) => 2,
            Prim::Id | Prim::Eq => 3,
            Prim::NatElim(_) | Prim::SumElim(_) => 4,
            Prim::J(_) => 5,
        }
    }

    pub fn all() -> impl Iterator<Item = Prim> {
        PRIMS.iter().map(|(_, p)| *p)
    }
}

/// Parse `U<n>` / `US<n>`.
pub fn universe_name(s: &str) -> Option<(Layer, u32)> {
    let (layer, digits) = if let Some(d) = s.strip_prefix("US") {
        (Layer::Strict, d)
    } else {
        (Layer::Fib, s.strip_prefix('U')?)
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((layer, digits.parse().unwrap_or(u32::MAX)))
}

/// Words that cannot be used as variable or declaration names.
pub fn is_reserved(s: &str) -> bool {
    s == "def" || s == "postulate" || Prim::from_name(s).is_some() || universe_name(s).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Raw {
    pub kind: RawKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawKind {
    Var(Name),
    Prim(Prim),
    Univ(Layer, u32),
    Hole,
    /// `(a b : A) (c : C) -> B`
    Pi(Vec<Binder>, Box<Raw>),
    Arrow(Box<Raw>, Box<Raw>),
    /// `(a b : A) × B`
    Sigma(Vec<Binder>, Box<Raw>),
    Product(Box<Raw>, Box<Raw>),
    Lam(Vec<BinderName>, Box<Raw>),
    App(Box<Raw>, Box<Raw>),
    Pair(Box<Raw>, Box<Raw>),
    Ann(Box<Raw>, Box<Raw>),
}

/// A bound name; `None` for `_`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinderName {
    pub name: Option<Name>,
    pub span: Span,
}

/// A binder group `(a b : A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binder {
    pub names: Vec<BinderName>,
    pub ty: Raw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Def,
    Postulate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDecl {
    pub kind: DeclKind,
    pub name: Name,
    pub name_span: Span,
    pub params: Vec<Binder>,
    pub ty: Raw,
    pub body: Option<Raw>,
    pub span: Span,
}

impl Raw {
    pub fn new(kind: RawKind, span: Span) -> Raw {
        Raw { kind, span }
    }

    /// Split an application spine into head and arguments.
    pub fn spine(&self) -> (&Raw, Vec<&Raw>) {
        let mut args = Vec::new();
        let mut cur = self;
        while let RawKind::App(f, a) = &cur.kind {
            args.push(&**a);
            cur = f;
        }
        args.reverse();
        (cur, args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_names() {
        assert_eq!(universe_name("U0"), Some((Layer::Fib, 0)));
        assert_eq!(universe_name("US12"), Some((Layer::Strict, 12)));
        assert_eq!(universe_name("U"), None);
        assert_eq!(universe_name("US"), None);
        assert_eq!(universe_name("Ux"), None);
        assert_eq!(universe_name("Unit"), None);
    }

    #[test]
    fn prim_names_round_trip() {
        for p in Prim::all() {
            assert_eq!(Prim::from_name(p.name()), Some(p));
            assert!(is_reserved(p.name()));
        }
        assert!(!is_reserved("X0"));
    }
}
