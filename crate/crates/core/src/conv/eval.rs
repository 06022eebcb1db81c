//! Evaluation of core terms into weak-head-normal values.
//!
//! Definitions in the signature are always unfolded. Postulates and axioms
//! are inert heads. Evaluating an ill-typed term is a caller bug and panics.

use crate::signature::Signature;
use crate::syntax::{Layer, Term};

use super::value::{push_elim, Closure, Elim, Env, Val, Value};

pub fn eval(sig: &Signature, env: &Env, t: &Term) -> Val {
    let ev = |t: &Term| eval(sig, env, t);
    let close = |t: &crate::syntax::RcTerm| Closure::new(env.clone(), t.clone());
    match t {
        Term::Var(i) => {
            let len = env.len();
            assert!(*i < len, "unbound index #{i} in environment of size {len}");
            env[len - 1 - i].clone()
        }
        Term::Const(name) => match sig.lookup(name) {
            Some(entry) => match &entry.value {
                Some(v) => v.clone(),
                None => Value::constant(name.clone()),
            },
            None => panic!("unknown constant `{name}` during evaluation"),
        },
        Term::Univ(s) => Value::Univ(*s).rc(),
        Term::Pi(a, b) => Value::Pi(ev(a), close(b)).rc(),
        Term::Lam(b) => Value::Lam(close(b)).rc(),
        Term::App(f, a) => apply(sig, ev(f), ev(a)),
        Term::Sigma(a, b) => Value::Sigma(ev(a), close(b)).rc(),
        Term::Pair(a, b) => Value::Pair(ev(a), ev(b)).rc(),
        Term::Fst(p) => do_fst(&ev(p)),
        Term::Snd(p) => do_snd(&ev(p)),
        Term::Unit => Value::Unit.rc(),
        Term::Star => Value::Star.rc(),
        Term::Id(l, a, x, y) => Value::Id(*l, ev(a), ev(x), ev(y)).rc(),
        Term::Refl(l, a, x) => Value::Refl(*l, ev(a), ev(x)).rc(),
        Term::J {
            layer,
            motive,
            base,
            lhs,
            rhs,
            proof,
        } => do_j(*layer, close(motive), ev(base), ev(lhs), ev(rhs), ev(proof)),
        Term::Nat(l) => Value::Nat(*l).rc(),
        Term::Zero(l) => Value::Zero(*l).rc(),
        Term::Suc(l, n) => Value::Suc(*l, ev(n)).rc(),
        Term::NatElim {
            layer,
            motive,
            zero,
            succ,
            target,
        } => do_nat_elim(sig, *layer, &close(motive), &ev(zero), &close(succ), &ev(target)),
        Term::Sum(l, a, b) => Value::Sum(*l, ev(a), ev(b)).rc(),
        Term::Inl(l, a) => Value::Inl(*l, ev(a)).rc(),
        Term::Inr(l, b) => Value::Inr(*l, ev(b)).rc(),
        Term::SumElim {
            layer,
            motive,
            left,
            right,
            target,
        } => do_sum_elim(sig, *layer, close(motive), close(left), close(right), &ev(target)),
        Term::Empty(l) => Value::Empty(*l).rc(),
        Term::EmptyElim { layer, motive, target } => do_empty_elim(*layer, close(motive), &ev(target)),
    }
}

pub fn apply(sig: &Signature, f: Val, arg: Val) -> Val {
    match &*f {
        Value::Lam(body) => body.apply1(sig, arg),
        Value::Neutral(head, spine) => push_elim(head, spine, Elim::App(arg)),
        other => panic!("application of a non-function: {other:?}"),
    }
}

pub fn do_fst(p: &Val) -> Val {
    match &**p {
        Value::Pair(a, _) => a.clone(),
        Value::Neutral(head, spine) => push_elim(head, spine, Elim::Fst),
        other => panic!("first projection of a non-pair: {other:?}"),
    }
}

pub fn do_snd(p: &Val) -> Val {
    match &**p {
        Value::Pair(_, b) => b.clone(),
        Value::Neutral(head, spine) => push_elim(head, spine, Elim::Snd),
        other => panic!("second projection of a non-pair: {other:?}"),
    }
}

pub fn do_j(layer: Layer, motive: Closure, base: Val, lhs: Val, rhs: Val, proof: Val) -> Val {
    match &*proof {
        Value::Refl(..) => base,
        Value::Neutral(head, spine) => push_elim(
            head,
            spine,
            Elim::J {
                layer,
                motive,
                base,
                lhs,
                rhs,
            },
        ),
        other => panic!("J applied to a non-equality proof: {other:?}"),
    }
}

pub fn do_nat_elim(sig: &Signature, layer: Layer, motive: &Closure, zero: &Val, succ: &Closure, target: &Val) -> Val {
    match &**target {
        Value::Zero(_) => zero.clone(),
        Value::Suc(_, n) => {
            let rec = do_nat_elim(sig, layer, motive, zero, succ, n);
            succ.apply(sig, &[n.clone(), rec])
        }
        Value::Neutral(head, spine) => push_elim(
            head,
            spine,
            Elim::NatElim {
                layer,
                motive: motive.clone(),
                zero: zero.clone(),
                succ: succ.clone(),
            },
        ),
        other => panic!("natural-number recursion on a non-numeral: {other:?}"),
    }
}

pub fn do_sum_elim(sig: &Signature, layer: Layer, motive: Closure, left: Closure, right: Closure, target: &Val) -> Val {
    match &**target {
        Value::Inl(_, a) => left.apply1(sig, a.clone()),
        Value::Inr(_, b) => right.apply1(sig, b.clone()),
        Value::Neutral(head, spine) => push_elim(
            head,
            spine,
            Elim::SumElim {
                layer,
                motive,
                left,
                right,
            },
        ),
        other => panic!("case analysis on a non-injection: {other:?}"),
    }
}

pub fn do_empty_elim(layer: Layer, motive: Closure, target: &Val) -> Val {
    match &**target {
        Value::Neutral(head, spine) => push_elim(head, spine, Elim::EmptyElim { layer, motive }),
        other => panic!("empty elimination on a canonical value: {other:?}"),
    }
}

/// Re-apply an elimination frame to a value (used when the head of a
/// neutral is replaced, e.g. while type-walking spines).
pub fn apply_elim(sig: &Signature, v: Val, elim: &Elim) -> Val {
    match elim {
        Elim::App(a) => apply(sig, v, a.clone()),
        Elim::Fst => do_fst(&v),
        Elim::Snd => do_snd(&v),
        Elim::J {
            layer,
            motive,
            base,
            lhs,
            rhs,
        } => do_j(*layer, motive.clone(), base.clone(), lhs.clone(), rhs.clone(), v),
        Elim::NatElim {
            layer,
            motive,
            zero,
            succ,
        } => do_nat_elim(sig, *layer, motive, zero, succ, &v),
        Elim::SumElim {
            layer,
            motive,
            left,
            right,
        } => do_sum_elim(sig, *layer, motive.clone(), left.clone(), right.clone(), &v),
        Elim::EmptyElim { layer, motive } => do_empty_elim(*layer, motive.clone(), &v),
    }
}
