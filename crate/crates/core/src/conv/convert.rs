//! Type-directed conversion checking and sort synthesis on values.

use thiserror::Error;

use crate::signature::Signature;
use crate::syntax::{Layer, LevelError, Sort};

use super::eval::{apply, apply_elim, do_fst, do_snd};
use super::value::{Elim, Head, Val, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SortError {
    #[error("not a type")]
    NotAType,
    #[error(transparent)]
    Level(#[from] LevelError),
}

/// A typing environment for values: the signature plus the types of the
/// bound variables, indexed by level.
pub struct Conv<'a> {
    sig: &'a Signature,
    types: Vec<Val>,
}

impl<'a> Conv<'a> {
    pub fn new(sig: &'a Signature, types: Vec<Val>) -> Conv<'a> {
        Conv { sig, types }
    }

    pub fn depth(&self) -> usize {
        self.types.len()
    }

    fn with_fresh<R>(&mut self, ty: Val, f: impl FnOnce(&mut Self, Val) -> R) -> R {
        let x = Value::var(self.types.len());
        self.types.push(ty);
        let r = f(self, x);
        self.types.pop();
        r
    }

    pub fn head_type(&self, head: &Head) -> Val {
        match head {
            Head::Var(level) => self.types[*level].clone(),
            Head::Const(name) => self
                .sig
                .lookup(name)
                .unwrap_or_else(|| panic!("unknown constant `{name}`"))
                .ty_value
                .clone(),
        }
    }

    /// Type of `cur` after applying `elim`, given that `cur : ty`.
    fn elim_type(&self, cur: &Val, ty: &Val, elim: &Elim) -> Val {
        let sig = self.sig;
        match (elim, &**ty) {
            (Elim::App(u), Value::Pi(_, b)) => b.apply1(sig, u.clone()),
            (Elim::Fst, Value::Sigma(a, _)) => a.clone(),
            (Elim::Snd, Value::Sigma(_, b)) => b.apply1(sig, do_fst(cur)),
            (Elim::J { motive, rhs, .. }, _) => motive.apply(sig, &[rhs.clone(), cur.clone()]),
            (Elim::NatElim { motive, .. }, _)
            | (Elim::SumElim { motive, .. }, _)
            | (Elim::EmptyElim { motive, .. }, _) => motive.apply1(sig, cur.clone()),
            (elim, ty) => panic!("ill-typed elimination {elim:?} at type {ty:?}"),
        }
    }

    /// Synthesize the type of a neutral value.
    pub fn neutral_type(&self, head: &Head, spine: &[Elim]) -> Val {
        let mut ty = self.head_type(head);
        let mut cur = Value::Neutral(head.clone(), Vec::new()).rc();
        for elim in spine {
            ty = self.elim_type(&cur, &ty, elim);
            cur = apply_elim(self.sig, cur, elim);
        }
        ty
    }

    /// The sort of a type value.
    pub fn sort_of(&mut self, ty: &Val) -> Result<Sort, SortError> {
        let u = self.sig.universes();
        let fib0 = Sort::fib(crate::syntax::Level::ZERO);
        match &**ty {
            Value::Univ(s) => Ok(u.succ(*s)?),
            Value::Pi(a, b) | Value::Sigma(a, b) => {
                let sa = self.sort_of(a)?;
                let sig = self.sig;
                let sb = self.with_fresh(a.clone(), |c, x| c.sort_of(&b.apply1(sig, x)))?;
                Ok(u.join(sa, sb))
            }
            Value::Unit => Ok(fib0),
            Value::Id(Layer::Fib, a, _, _) => self.sort_of(a),
            Value::Id(Layer::Strict, a, _, _) => Ok(u.strict_part(self.sort_of(a)?)),
            Value::Nat(Layer::Fib) | Value::Empty(Layer::Fib) => Ok(fib0),
            Value::Nat(Layer::Strict) | Value::Empty(Layer::Strict) => Ok(u.strict_part(fib0)),
            Value::Sum(layer, a, b) => {
                let j = u.join(self.sort_of(a)?, self.sort_of(b)?);
                Ok(match layer {
                    Layer::Fib => j,
                    Layer::Strict => u.strict_part(j),
                })
            }
            Value::Neutral(head, spine) => match &*self.neutral_type(head, spine) {
                Value::Univ(s) => Ok(*s),
                _ => Err(SortError::NotAType),
            },
            _ => Err(SortError::NotAType),
        }
    }

    /// Are `a` and `b`, both of type `ty`, definitionally equal?
    pub fn eq(&mut self, a: &Val, b: &Val, ty: &Val) -> bool {
        let sig = self.sig;
        match &**ty {
            Value::Pi(dom, cod) => self.with_fresh(dom.clone(), |c, x| {
                let fa = apply(sig, a.clone(), x.clone());
                let fb = apply(sig, b.clone(), x.clone());
                c.eq(&fa, &fb, &cod.apply1(sig, x))
            }),
            Value::Sigma(fst_ty, snd_ty) => {
                let (fa, fb) = (do_fst(a), do_fst(b));
                self.eq(&fa, &fb, fst_ty) && {
                    let snd_ty = snd_ty.apply1(sig, fa);
                    self.eq(&do_snd(a), &do_snd(b), &snd_ty)
                }
            }
            Value::Unit => true,
            Value::Univ(_) => self.eq_type(a, b),
            _ => self.eq_structural(a, b, ty),
        }
    }

    fn eq_structural(&mut self, a: &Val, b: &Val, ty: &Val) -> bool {
        match (&**a, &**b, &**ty) {
            (Value::Zero(l1), Value::Zero(l2), _) => l1 == l2,
            (Value::Suc(l1, n), Value::Suc(l2, m), _) => l1 == l2 && self.eq(n, m, ty),
            (Value::Inl(l1, x), Value::Inl(l2, y), Value::Sum(_, left, _)) => l1 == l2 && self.eq(x, y, left),
            (Value::Inr(l1, x), Value::Inr(l2, y), Value::Sum(_, _, right)) => l1 == l2 && self.eq(x, y, right),
            (Value::Refl(l1, _, x), Value::Refl(l2, _, y), Value::Id(_, carrier, _, _)) => {
                l1 == l2 && self.eq(x, y, carrier)
            }
            (Value::Neutral(h1, s1), Value::Neutral(h2, s2), _) => self.eq_neutral(h1, s1, h2, s2),
            _ => false,
        }
    }

    /// Conversion of two types (values of some universe).
    pub fn eq_type(&mut self, a: &Val, b: &Val) -> bool {
        let sig = self.sig;
        match (&**a, &**b) {
            (Value::Univ(s1), Value::Univ(s2)) => s1 == s2,
            (Value::Pi(a1, b1), Value::Pi(a2, b2)) | (Value::Sigma(a1, b1), Value::Sigma(a2, b2)) => {
                self.eq_type(a1, a2)
                    && self.with_fresh(a1.clone(), |c, x| {
                        c.eq_type(&b1.apply1(sig, x.clone()), &b2.apply1(sig, x))
                    })
            }
            (Value::Unit, Value::Unit) => true,
            (Value::Id(l1, t1, x1, y1), Value::Id(l2, t2, x2, y2)) => {
                l1 == l2 && self.eq_type(t1, t2) && self.eq(x1, x2, t1) && self.eq(y1, y2, t1)
            }
            (Value::Nat(l1), Value::Nat(l2)) | (Value::Empty(l1), Value::Empty(l2)) => l1 == l2,
            (Value::Sum(l1, a1, b1), Value::Sum(l2, a2, b2)) => {
                l1 == l2 && self.eq_type(a1, a2) && self.eq_type(b1, b2)
            }
            (Value::Neutral(h1, s1), Value::Neutral(h2, s2)) => self.eq_neutral(h1, s1, h2, s2),
            _ => false,
        }
    }

    fn eq_neutral(&mut self, h1: &Head, s1: &[Elim], h2: &Head, s2: &[Elim]) -> bool {
        if h1 != h2 || s1.len() != s2.len() {
            return false;
        }
        let sig = self.sig;
        let mut ty = self.head_type(h1);
        let mut cur = Value::Neutral(h1.clone(), Vec::new()).rc();
        for (e1, e2) in s1.iter().zip(s2) {
            let ok = match (e1, e2, &*ty) {
                (Elim::App(u), Elim::App(v), Value::Pi(dom, _)) => self.eq(u, v, dom),
                (Elim::Fst, Elim::Fst, _) | (Elim::Snd, Elim::Snd, _) => true,
                (
                    Elim::J {
                        layer: l1,
                        motive: m1,
                        base: d1,
                        lhs: a1,
                        rhs: b1,
                    },
                    Elim::J {
                        layer: l2,
                        motive: m2,
                        base: d2,
                        lhs: a2,
                        rhs: b2,
                    },
                    Value::Id(_, carrier, _, _),
                ) => {
                    let layer = *l1;
                    l1 == l2
                        && self.eq(a1, a2, carrier)
                        && self.eq(b1, b2, carrier)
                        && self.with_fresh(carrier.clone(), |c, y| {
                            let path = Value::Id(layer, carrier.clone(), a1.clone(), y.clone()).rc();
                            c.with_fresh(path, |c, p| {
                                c.eq_type(&m1.apply(sig, &[y.clone(), p.clone()]), &m2.apply(sig, &[y, p]))
                            })
                        })
                        && {
                            let refl = Value::Refl(layer, carrier.clone(), a1.clone()).rc();
                            let base_ty = m1.apply(sig, &[a1.clone(), refl]);
                            self.eq(d1, d2, &base_ty)
                        }
                }
                (
                    Elim::NatElim {
                        layer: l1,
                        motive: m1,
                        zero: z1,
                        succ: s1,
                    },
                    Elim::NatElim {
                        layer: l2,
                        motive: m2,
                        zero: z2,
                        succ: s2,
                    },
                    _,
                ) => {
                    let nat = Value::Nat(*l1).rc();
                    let layer = *l1;
                    l1 == l2
                        && self.with_fresh(nat.clone(), |c, n| {
                            c.eq_type(&m1.apply1(sig, n.clone()), &m2.apply1(sig, n))
                        })
                        && self.eq(z1, z2, &m1.apply1(sig, Value::Zero(layer).rc()))
                        && self.with_fresh(nat, |c, n| {
                            let ih_ty = m1.apply1(sig, n.clone());
                            c.with_fresh(ih_ty, |c, r| {
                                let goal = m1.apply1(sig, Value::Suc(layer, n.clone()).rc());
                                let args = [n, r];
                                c.eq(&s1.apply(sig, &args), &s2.apply(sig, &args), &goal)
                            })
                        })
                }
                (
                    Elim::SumElim {
                        layer: l1,
                        motive: m1,
                        left: f1,
                        right: g1,
                    },
                    Elim::SumElim {
                        layer: l2,
                        motive: m2,
                        left: f2,
                        right: g2,
                    },
                    Value::Sum(_, left, right),
                ) => {
                    let layer = *l1;
                    l1 == l2
                        && self.with_fresh(ty.clone(), |c, s| {
                            c.eq_type(&m1.apply1(sig, s.clone()), &m2.apply1(sig, s))
                        })
                        && self.with_fresh(left.clone(), |c, x| {
                            let goal = m1.apply1(sig, Value::Inl(layer, x.clone()).rc());
                            c.eq(&f1.apply1(sig, x.clone()), &f2.apply1(sig, x), &goal)
                        })
                        && self.with_fresh(right.clone(), |c, x| {
                            let goal = m1.apply1(sig, Value::Inr(layer, x.clone()).rc());
                            c.eq(&g1.apply1(sig, x.clone()), &g2.apply1(sig, x), &goal)
                        })
                }
                (Elim::EmptyElim { layer: l1, motive: m1 }, Elim::EmptyElim { layer: l2, motive: m2 }, _) => {
                    l1 == l2
                        && self.with_fresh(ty.clone(), |c, e| {
                            c.eq_type(&m1.apply1(sig, e.clone()), &m2.apply1(sig, e))
                        })
                }
                _ => false,
            };
            if !ok {
                return false;
            }
            ty = self.elim_type(&cur, &ty, e1);
            cur = apply_elim(sig, cur, e1);
        }
        true
    }
}
