//! Read-back from values to β-normal core terms.

use crate::signature::Signature;
use crate::syntax::Term;

use super::value::{Closure, Elim, Head, Val, Value};

/// Quote `v` in a context of `depth` variables.
pub fn quote(sig: &Signature, depth: usize, v: &Val) -> Term {
    let q = |v: &Val| quote(sig, depth, v).rc();
    match &**v {
        Value::Univ(s) => Term::Univ(*s),
        Value::Pi(a, b) => Term::Pi(q(a), quote_closure(sig, depth, b, 1).rc()),
        Value::Lam(b) => Term::Lam(quote_closure(sig, depth, b, 1).rc()),
        Value::Sigma(a, b) => Term::Sigma(q(a), quote_closure(sig, depth, b, 1).rc()),
        Value::Pair(a, b) => Term::Pair(q(a), q(b)),
        Value::Unit => Term::Unit,
        Value::Star => Term::Star,
        Value::Id(l, a, x, y) => Term::Id(*l, q(a), q(x), q(y)),
        Value::Refl(l, a, x) => Term::Refl(*l, q(a), q(x)),
        Value::Nat(l) => Term::Nat(*l),
        Value::Zero(l) => Term::Zero(*l),
        Value::Suc(l, n) => Term::Suc(*l, q(n)),
        Value::Sum(l, a, b) => Term::Sum(*l, q(a), q(b)),
        Value::Inl(l, a) => Term::Inl(*l, q(a)),
        Value::Inr(l, b) => Term::Inr(*l, q(b)),
        Value::Empty(l) => Term::Empty(*l),
        Value::Neutral(head, spine) => quote_neutral(sig, depth, head, spine),
    }
}

/// Quote a closure binding `arity` variables under fresh variables.
pub fn quote_closure(sig: &Signature, depth: usize, c: &Closure, arity: usize) -> Term {
    let args: Vec<Val> = (0..arity).map(|i| Value::var(depth + i)).collect();
    quote(sig, depth + arity, &c.apply(sig, &args))
}

fn quote_neutral(sig: &Signature, depth: usize, head: &Head, spine: &[Elim]) -> Term {
    let mut acc = match head {
        Head::Var(level) => {
            assert!(*level < depth, "variable level {level} escapes depth {depth}");
            Term::Var(depth - 1 - level)
        }
        Head::Const(name) => Term::Const(name.clone()),
    };
    let q = |v: &Val| quote(sig, depth, v).rc();
    for elim in spine {
        acc = match elim {
            Elim::App(a) => Term::App(acc.rc(), q(a)),
            Elim::Fst => Term::Fst(acc.rc()),
            Elim::Snd => Term::Snd(acc.rc()),
            Elim::J {
                layer,
                motive,
                base,
                lhs,
                rhs,
            } => Term::J {
                layer: *layer,
                motive: quote_closure(sig, depth, motive, 2).rc(),
                base: q(base),
                lhs: q(lhs),
                rhs: q(rhs),
                proof: acc.rc(),
            },
            Elim::NatElim {
                layer,
                motive,
                zero,
                succ,
            } => Term::NatElim {
                layer: *layer,
                motive: quote_closure(sig, depth, motive, 1).rc(),
                zero: q(zero),
                succ: quote_closure(sig, depth, succ, 2).rc(),
                target: acc.rc(),
            },
            Elim::SumElim {
                layer,
                motive,
                left,
                right,
            } => Term::SumElim {
                layer: *layer,
                motive: quote_closure(sig, depth, motive, 1).rc(),
                left: quote_closure(sig, depth, left, 1).rc(),
                right: quote_closure(sig, depth, right, 1).rc(),
                target: acc.rc(),
            },
            Elim::EmptyElim { layer, motive } => Term::EmptyElim {
                layer: *layer,
                motive: quote_closure(sig, depth, motive, 1).rc(),
                target: acc.rc(),
            },
        };
    }
    acc
}
