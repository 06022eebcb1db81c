//! An independent type checker for core terms, used to validate the output
//! of elaboration.

use crate::conv::{do_fst, eval, quote, Closure, Conv, Val, Value};
use crate::signature::{Context, Entry, Signature};
use crate::syntax::{subst, Layer, Level, Sort, Term};

type Result<T> = std::result::Result<T, String>;

pub struct Recheck<'a> {
    sig: &'a Signature,
    ctx: Context,
}

/// Check that a signature entry's body has its declared type.
pub fn recheck_entry(sig: &Signature, entry: &Entry) -> Result<()> {
    let mut rc = Recheck::new(sig);
    rc.sort(&entry.ty)?;
    if let Some(body) = &entry.body {
        rc.check(body, entry.ty_value())?;
    }
    Ok(())
}

impl<'a> Recheck<'a> {
    pub fn new(sig: &'a Signature) -> Recheck<'a> {
        Recheck {
            sig,
            ctx: Context::new(),
        }
    }

    fn eval(&self, t: &Term) -> Val {
        eval(self.sig, self.ctx.env(), t)
    }

    fn conv(&self) -> Conv<'a> {
        Conv::new(self.sig, self.ctx.types())
    }

    fn closure(&self, t: &Term) -> Closure {
        Closure::new(self.ctx.env().clone(), t.clone().rc())
    }

    fn show(&self, v: &Val) -> String {
        quote(self.sig, self.ctx.len(), v).to_string()
    }

    fn under<R>(&mut self, tys: &[Val], f: impl FnOnce(&mut Self, &[Val]) -> Result<R>) -> Result<R> {
        let base = self.ctx.len();
        let mut vars = Vec::new();
        for ty in tys {
            let t = quote(self.sig, self.ctx.len(), ty);
            vars.push(self.ctx.bind(None, t, ty.clone()));
        }
        let r = f(self, &vars);
        self.ctx.truncate(base);
        r
    }

    fn under_dep<R>(
        &mut self,
        first: Val,
        second: impl FnOnce(&Val) -> Val,
        f: impl FnOnce(&mut Self, &[Val]) -> Result<R>,
    ) -> Result<R> {
        let base = self.ctx.len();
        let t = quote(self.sig, base, &first);
        let x = self.ctx.bind(None, t, first);
        let second = second(&x);
        let t = quote(self.sig, base + 1, &second);
        let y = self.ctx.bind(None, t, second);
        let r = f(self, &[x, y]);
        self.ctx.truncate(base);
        r
    }

    /// `t` is a type; return its sort.
    pub fn sort(&mut self, t: &Term) -> Result<Sort> {
        let ty = self.infer(t)?;
        match &*ty {
            Value::Univ(s) => Ok(*s),
            _ => Err(format!("{t} is not a type")),
        }
    }

    fn motive_sort(&mut self, layer: Layer, motive: &Term, doms: &[Val]) -> Result<()> {
        let s = self.under(doms, |rc, _| rc.sort(motive))?;
        if layer == Layer::Fib && !s.is_fibrant() {
            return Err(format!("fibrant eliminator with motive of sort {s}"));
        }
        Ok(())
    }

    pub fn infer(&mut self, t: &Term) -> Result<Val> {
        let sig = self.sig;
        let u = sig.universes();
        let fib0 = Sort::fib(Level::ZERO);
        let layered = |l: Layer, s: Sort| match l {
            Layer::Fib => s,
            Layer::Strict => u.strict_part(s),
        };
        match t {
            Term::Var(i) => {
                if *i >= self.ctx.len() {
                    return Err(format!("variable #{i} out of scope"));
                }
                Ok(self.ctx.type_of_index(*i).clone())
            }
            Term::Const(n) => sig
                .lookup(n)
                .map(|e| e.ty_value().clone())
                .ok_or_else(|| format!("unknown constant {n}")),
            Term::Univ(s) => Ok(Value::Univ(u.succ(*s).map_err(|e| e.to_string())?).rc()),
            Term::Pi(a, b) | Term::Sigma(a, b) => {
                let sa = self.sort(a)?;
                let va = self.eval(a);
                let sb = self.under(&[va], |rc, _| rc.sort(b))?;
                Ok(Value::Univ(u.join(sa, sb)).rc())
            }
            Term::Lam(_) => Err("cannot infer a lambda".to_string()),
            Term::App(f, a) => {
                if let Term::Lam(body) = &**f {
                    self.infer(a)?;
                    return self.infer(&subst(body, 0, a));
                }
                let fty = self.infer(f)?;
                let Value::Pi(dom, cod) = &*fty else {
                    return Err(format!("applying a non-function of type {}", self.show(&fty)));
                };
                self.check(a, dom)?;
                Ok(cod.apply1(sig, self.eval(a)))
            }
            Term::Pair(a, b) => {
                let ta = self.infer(a)?;
                let tb = self.infer(b)?;
                let sigma = Term::Sigma(
                    quote(sig, self.ctx.len(), &ta).rc(),
                    crate::syntax::shift(&quote(sig, self.ctx.len(), &tb), 0, 1).rc(),
                );
                Ok(self.eval(&sigma))
            }
            Term::Fst(p) | Term::Snd(p) => {
                let ty = self.infer(p)?;
                let Value::Sigma(a, b) = &*ty else {
                    return Err(format!("projection from {}", self.show(&ty)));
                };
                if matches!(t, Term::Fst(_)) {
                    Ok(a.clone())
                } else {
                    Ok(b.apply1(sig, do_fst(&self.eval(p))))
                }
            }
            Term::Unit => Ok(Value::Univ(fib0).rc()),
            Term::Star => Ok(Value::Unit.rc()),
            Term::Id(l, a, x, y) => {
                let s = self.sort(a)?;
                if *l == Layer::Fib && !s.is_fibrant() {
                    return Err("fibrant equality on a strict type".to_string());
                }
                let va = self.eval(a);
                self.check(x, &va)?;
                self.check(y, &va)?;
                Ok(Value::Univ(layered(*l, s)).rc())
            }
            Term::Refl(l, a, x) => {
                let s = self.sort(a)?;
                if *l == Layer::Fib && !s.is_fibrant() {
                    return Err("fibrant reflexivity on a strict type".to_string());
                }
                let va = self.eval(a);
                self.check(x, &va)?;
                let vx = self.eval(x);
                Ok(Value::Id(*l, va, vx.clone(), vx).rc())
            }
            Term::J {
                layer,
                motive,
                base,
                lhs,
                rhs,
                proof,
            } => {
                let a = self.infer(lhs)?;
                self.check(rhs, &a)?;
                let (vl, vr) = (self.eval(lhs), self.eval(rhs));
                let l = *layer;
                let s = self.under_dep(
                    a.clone(),
                    |y| Value::Id(l, a.clone(), vl.clone(), y.clone()).rc(),
                    |rc, _| rc.sort(motive),
                )?;
                if l == Layer::Fib && !s.is_fibrant() {
                    return Err("fibrant path induction into a strict motive".to_string());
                }
                let mc = self.closure(motive);
                let refl = Value::Refl(l, a.clone(), vl.clone()).rc();
                self.check(base, &mc.apply(sig, &[vl.clone(), refl]))?;
                self.check(proof, &Value::Id(l, a, vl, vr.clone()).rc())?;
                Ok(mc.apply(sig, &[vr, self.eval(proof)]))
            }
            Term::Nat(l) | Term::Empty(l) => Ok(Value::Univ(layered(*l, fib0)).rc()),
            Term::Zero(l) => Ok(Value::Nat(*l).rc()),
            Term::Suc(l, n) => {
                let nat = Value::Nat(*l).rc();
                self.check(n, &nat)?;
                Ok(nat)
            }
            Term::NatElim {
                layer,
                motive,
                zero,
                succ,
                target,
            } => {
                let l = *layer;
                let nat = Value::Nat(l).rc();
                self.motive_sort(l, motive, std::slice::from_ref(&nat))?;
                let mc = self.closure(motive);
                self.check(zero, &mc.apply1(sig, Value::Zero(l).rc()))?;
                self.under_dep(
                    nat.clone(),
                    |n| mc.apply1(sig, n.clone()),
                    |rc, vs| {
                        let goal = mc.apply1(sig, Value::Suc(l, vs[0].clone()).rc());
                        rc.check(succ, &goal)
                    },
                )?;
                self.check(target, &nat)?;
                Ok(mc.apply1(sig, self.eval(target)))
            }
            Term::Sum(l, a, b) => {
                let (sa, sb) = (self.sort(a)?, self.sort(b)?);
                if *l == Layer::Fib && !(sa.is_fibrant() && sb.is_fibrant()) {
                    return Err("fibrant sum of strict types".to_string());
                }
                Ok(Value::Univ(layered(*l, u.join(sa, sb))).rc())
            }
            Term::Inl(..) | Term::Inr(..) => Err("cannot infer an injection".to_string()),
            Term::SumElim {
                layer,
                motive,
                left,
                right,
                target,
            } => {
                let l = *layer;
                let sum = self.infer(target)?;
                let (a, b) = match &*sum {
                    Value::Sum(l2, a, b) if *l2 == l => (a.clone(), b.clone()),
                    _ => return Err(format!("case analysis on {}", self.show(&sum))),
                };
                self.motive_sort(l, motive, std::slice::from_ref(&sum))?;
                let mc = self.closure(motive);
                self.under(&[a], |rc, vs| {
                    rc.check(left, &mc.apply1(sig, Value::Inl(l, vs[0].clone()).rc()))
                })?;
                self.under(&[b], |rc, vs| {
                    rc.check(right, &mc.apply1(sig, Value::Inr(l, vs[0].clone()).rc()))
                })?;
                Ok(mc.apply1(sig, self.eval(target)))
            }
            Term::EmptyElim { layer, motive, target } => {
                let empty = Value::Empty(*layer).rc();
                self.motive_sort(*layer, motive, std::slice::from_ref(&empty))?;
                self.check(target, &empty)?;
                Ok(self.closure(motive).apply1(sig, self.eval(target)))
            }
        }
    }

    pub fn check(&mut self, t: &Term, ty: &Val) -> Result<()> {
        let sig = self.sig;
        match (t, &**ty) {
            (Term::Lam(body), Value::Pi(dom, cod)) => self.under(std::slice::from_ref(dom), |rc, vs| {
                rc.check(body, &cod.apply1(sig, vs[0].clone()))
            }),
            (Term::Pair(a, b), Value::Sigma(fst, snd)) => {
                self.check(a, fst)?;
                self.check(b, &snd.apply1(sig, self.eval(a)))
            }
            (Term::Inl(l, a), Value::Sum(l2, left, _)) if l == l2 => self.check(a, left),
            (Term::Inr(l, b), Value::Sum(l2, _, right)) if l == l2 => self.check(b, right),
            (Term::App(f, a), _) if matches!(&**f, Term::Lam(_)) => {
                let Term::Lam(body) = &**f else { unreachable!() };
                self.infer(a)?;
                self.check(&subst(body, 0, a), ty)
            }
            _ => {
                let got = self.infer(t)?;
                if let (Value::Univ(g), Value::Univ(w)) = (&*got, &**ty) {
                    if sig.universes().le(*g, *w) {
                        return Ok(());
                    }
                }
                if self.conv().eq_type(&got, ty) {
                    Ok(())
                } else {
                    Err(format!(
                        "{t} has type {} but {} was expected",
                        self.show(&got),
                        self.show(ty)
                    ))
                }
            }
        }
    }
}
