//! Read core terms back into surface syntax with fresh, non-clashing names.

use crate::parse::{is_reserved, Binder, BinderName, Prim, Raw, RawKind, Span};
use crate::signature::Signature;
use crate::syntax::{Layer, Name, Term};

struct Distiller<'a> {
    sig: Option<&'a Signature>,
    scope: Vec<Name>,
}

/// Turn `t`, scoped over `ctx`, into a surface term. Every binder gets a
/// name that is not reserved, not a global, and not already in scope, so
/// the printout reparses to the same term.
pub fn distill(sig: Option<&Signature>, ctx: &[Option<Name>], t: &Term) -> Raw {
    let mut d = Distiller { sig, scope: Vec::new() };
    for n in ctx {
        // Local names are kept as written unless they are shadowed.
        let name = match n {
            Some(n) if !d.scope.contains(n) => n.clone(),
            _ => d.fresh(n.as_deref().unwrap_or("x")),
        };
        d.scope.push(name);
    }
    d.go(t)
}

fn mk(kind: RawKind) -> Raw {
    Raw::new(kind, Span::default())
}

fn prim(p: Prim) -> Raw {
    mk(RawKind::Prim(p))
}

fn app(f: Raw, args: Vec<Raw>) -> Raw {
    args.into_iter()
        .fold(f, |f, a| mk(RawKind::App(Box::new(f), Box::new(a))))
}

impl Distiller<'_> {
    fn taken(&self, s: &str) -> bool {
        is_reserved(s) || self.scope.iter().any(|n| &**n == s) || self.sig.is_some_and(|sig| sig.lookup(s).is_some())
    }

    fn fresh(&self, hint: &str) -> Name {
        if !self.taken(hint) {
            return hint.into();
        }
        (1..)
            .map(|i| format!("{hint}{i}"))
            .find(|c| !self.taken(c))
            .unwrap()
            .into()
    }

    /// Open `arity` binders over `body`; unused binders print as `_`.
    fn open(&mut self, body: &Term, hints: &[&str]) -> (Vec<BinderName>, Raw) {
        let arity = hints.len();
        let mut names = Vec::new();
        for (j, hint) in hints.iter().enumerate() {
            let used = body.mentions(arity - 1 - j);
            let name = self.fresh(hint);
            self.scope.push(name.clone());
            names.push(BinderName {
                name: used.then_some(name),
                span: Span::default(),
            });
        }
        let raw = self.go(body);
        self.scope.truncate(self.scope.len() - arity);
        (names, raw)
    }

    fn lam(&mut self, body: &Term, hints: &[&str]) -> Raw {
        let (names, raw) = self.open(body, hints);
        mk(RawKind::Lam(names, Box::new(raw)))
    }

    fn go(&mut self, t: &Term) -> Raw {
        match t {
            Term::Var(i) => {
                let name = self.scope[self.scope.len() - 1 - i].clone();
                mk(RawKind::Var(name))
            }
            Term::Const(n) => mk(RawKind::Var(n.clone())),
            Term::Univ(s) => mk(RawKind::Univ(s.layer, s.level.value())),
            Term::Pi(a, b) | Term::Sigma(a, b) => {
                let is_pi = matches!(t, Term::Pi(..));
                let dom = self.go(a);
                if !b.mentions(0) {
                    let (_, cod) = self.open(b, &["_"]);
                    return mk(if is_pi {
                        RawKind::Arrow(Box::new(dom), Box::new(cod))
                    } else {
                        RawKind::Product(Box::new(dom), Box::new(cod))
                    });
                }
                let (names, cod) = self.open(b, &["x"]);
                let group = Binder { names, ty: dom };
                match (is_pi, cod.kind) {
                    (true, RawKind::Pi(mut groups, body)) | (false, RawKind::Sigma(mut groups, body)) => {
                        groups.insert(0, group);
                        mk(if is_pi {
                            RawKind::Pi(groups, body)
                        } else {
                            RawKind::Sigma(groups, body)
                        })
                    }
                    (_, kind) => {
                        let body = Box::new(mk(kind));
                        mk(if is_pi {
                            RawKind::Pi(vec![group], body)
                        } else {
                            RawKind::Sigma(vec![group], body)
                        })
                    }
                }
            }
            Term::Lam(b) => {
                let (mut names, body) = self.open(b, &["x"]);
                match body.kind {
                    RawKind::Lam(more, inner) => {
                        names.extend(more);
                        mk(RawKind::Lam(names, inner))
                    }
                    kind => mk(RawKind::Lam(names, Box::new(mk(kind)))),
                }
            }
            Term::App(f, a) => {
                let f = self.go(f);
                let a = self.go(a);
                app(f, vec![a])
            }
            Term::Pair(a, b) => mk(RawKind::Pair(Box::new(self.go(a)), Box::new(self.go(b)))),
            Term::Fst(p) => app(prim(Prim::Fst), vec![self.go(p)]),
            Term::Snd(p) => app(prim(Prim::Snd), vec![self.go(p)]),
            Term::Unit => prim(Prim::Unit),
            Term::Star => prim(Prim::Star),
            Term::Id(l, a, x, y) => {
                let p = if *l == Layer::Fib { Prim::Id } else { Prim::Eq };
                let args = vec![self.go(a), self.go(x), self.go(y)];
                app(prim(p), args)
            }
            Term::Refl(l, _, x) => app(prim(Prim::Refl(*l)), vec![self.go(x)]),
            Term::J {
                layer,
                motive,
                base,
                lhs,
                rhs,
                proof,
            } => {
                let args = vec![
                    self.lam(motive, &["y", "p"]),
                    self.go(base),
                    self.go(lhs),
                    self.go(rhs),
                    self.go(proof),
                ];
                app(prim(Prim::J(*layer)), args)
            }
            Term::Nat(l) => prim(Prim::Nat(*l)),
            Term::Zero(Layer::Fib) => prim(Prim::Zero),
            Term::Zero(Layer::Strict) => mk(RawKind::Ann(
                Box::new(prim(Prim::Zero)),
                Box::new(prim(Prim::Nat(Layer::Strict))),
            )),
            Term::Suc(_, n) => app(prim(Prim::Suc), vec![self.go(n)]),
            Term::NatElim {
                layer,
                motive,
                zero,
                succ,
                target,
            } => {
                let args = vec![
                    self.lam(motive, &["n"]),
                    self.go(zero),
                    self.lam(succ, &["n", "r"]),
                    self.go(target),
                ];
                app(prim(Prim::NatElim(*layer)), args)
            }
            Term::Sum(l, a, b) => {
                let args = vec![self.go(a), self.go(b)];
                app(prim(Prim::Sum(*l)), args)
            }
            Term::Inl(_, a) => app(prim(Prim::Inl), vec![self.go(a)]),
            Term::Inr(_, b) => app(prim(Prim::Inr), vec![self.go(b)]),
            Term::SumElim {
                layer,
                motive,
                left,
                right,
                target,
            } => {
                let args = vec![
                    self.lam(motive, &["s"]),
                    self.lam(left, &["a"]),
                    self.lam(right, &["b"]),
                    self.go(target),
                ];
                app(prim(Prim::SumElim(*layer)), args)
            }
            Term::Empty(l) => prim(Prim::Empty(*l)),
            Term::EmptyElim { layer, motive, target } => {
                let args = vec![self.lam(motive, &["e"]), self.go(target)];
                app(prim(Prim::EmptyElim(*layer)), args)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::print_term;

    fn show(t: &Term) -> String {
        print_term(&distill(None, &[], t))
    }

    #[test]
    fn binders_get_fresh_names() {
        let id = Term::lam(Term::Var(0));
        assert_eq!(show(&id), "\\x. x");
        let k = Term::lam(Term::lam(Term::Var(1)));
        assert_eq!(show(&k), "\\x _. x");
        let nested = Term::lam(Term::lam(Term::app(Term::Var(0), Term::Var(1))));
        assert_eq!(show(&nested), "\\x x1. x1 x");
    }

    #[test]
    fn arrows_and_telescopes() {
        let u0 = Term::Univ(crate::syntax::Sort::fib(crate::syntax::Level::ZERO));
        let arrow = Term::pi(u0.clone(), u0.clone());
        assert_eq!(show(&arrow), "U0 -> U0");
        let dep = Term::pi(u0.clone(), Term::pi(Term::Var(0), Term::Var(1)));
        assert_eq!(show(&dep), "(x : U0) -> x -> x");
        let dep2 = Term::pi(
            u0.clone(),
            Term::pi(
                Term::Var(0),
                Term::Id(Layer::Fib, Term::Var(1).rc(), Term::Var(0).rc(), Term::Var(0).rc()),
            ),
        );
        assert_eq!(show(&dep2), "(x : U0) (x1 : x) -> Id x x1 x1");
    }

    #[test]
    fn strict_numerals_are_annotated() {
        let two = Term::Suc(
            Layer::Strict,
            Term::Suc(Layer::Strict, Term::Zero(Layer::Strict).rc()).rc(),
        );
        assert_eq!(show(&two), "suc (suc (zero : NatS))");
    }
}
