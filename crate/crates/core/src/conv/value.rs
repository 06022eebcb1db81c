//! Semantic domain: weak-head-normal values with closures.

use std::sync::Arc;

use crate::signature::Signature;
use crate::syntax::{Layer, Name, RcTerm, Sort};

use super::eval::eval;

pub type Val = Arc<Value>;

/// Values indexed by de Bruijn *level*: index `i` refers to `env[len - 1 - i]`.
pub type Env = Vec<Val>;

#[derive(Clone, Debug)]
pub struct Closure {
    pub env: Env,
    pub body: RcTerm,
}

impl Closure {
    pub fn new(env: Env, body: RcTerm) -> Closure {
        Closure { env, body }
    }

    /// Instantiate the bound variables. `args` are in binding order.
    pub fn apply(&self, sig: &Signature, args: &[Val]) -> Val {
        let mut env = self.env.clone();
        env.extend(args.iter().cloned());
        eval(sig, &env, &self.body)
    }

    pub fn apply1(&self, sig: &Signature, arg: Val) -> Val {
        self.apply(sig, &[arg])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Head {
    /// A bound variable, by de Bruijn level.
    Var(usize),
    /// A postulate or axiom.
    Const(Name),
}

/// A stuck elimination frame.
#[derive(Clone, Debug)]
pub enum Elim {
    App(Val),
    Fst,
    Snd,
    J {
        layer: Layer,
        motive: Closure,
        base: Val,
        lhs: Val,
        rhs: Val,
    },
    NatElim {
        layer: Layer,
        motive: Closure,
        zero: Val,
        succ: Closure,
    },
    SumElim {
        layer: Layer,
        motive: Closure,
        left: Closure,
        right: Closure,
    },
    EmptyElim {
        layer: Layer,
        motive: Closure,
    },
}

#[derive(Clone, Debug)]
pub enum Value {
    Univ(Sort),
    Pi(Val, Closure),
    Lam(Closure),
    Sigma(Val, Closure),
    Pair(Val, Val),
    Unit,
    Star,
    Id(Layer, Val, Val, Val),
    Refl(Layer, Val, Val),
    Nat(Layer),
    Zero(Layer),
    Suc(Layer, Val),
    Sum(Layer, Val, Val),
    Inl(Layer, Val),
    Inr(Layer, Val),
    Empty(Layer),
    Neutral(Head, Vec<Elim>),
}

impl Value {
    pub fn rc(self) -> Val {
        Arc::new(self)
    }

    pub fn var(level: usize) -> Val {
        Value::Neutral(Head::Var(level), Vec::new()).rc()
    }

    pub fn constant(name: Name) -> Val {
        Value::Neutral(Head::Const(name), Vec::new()).rc()
    }

    pub fn as_univ(&self) -> Option<Sort> {
        match self {
            Value::Univ(s) => Some(*s),
            _ => None,
        }
    }
}

/// Push an elimination onto a neutral value.
pub(crate) fn push_elim(head: &Head, spine: &[Elim], elim: Elim) -> Val {
    let mut spine = spine.to_vec();
    spine.push(elim);
    Value::Neutral(head.clone(), spine).rc()
}
