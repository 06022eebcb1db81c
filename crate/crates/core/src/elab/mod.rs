//! Bidirectional elaboration of surface terms into core terms.
//!
//! Elaboration resolves names, synthesizes sorts, applies fibrant-to-strict
//! subsumption between universes, and rejects fibrant eliminators whose
//! motive is not fibrant.

mod diagnostic;
pub mod distill;
pub(crate) mod prelude;
pub mod recheck;

pub use diagnostic::{Code, Diagnostic};

use crate::conv::{eval, quote, Closure, Conv, SortError, Val, Value};
use crate::parse::{Binder, BinderName, DeclKind, Prim, Raw, RawDecl, RawKind, Span};
use crate::signature::{Context, EntryKind, Signature};
use crate::syntax::{shift, Layer, RcTerm, Sort, Term, Universes};

type Result<T> = std::result::Result<T, Diagnostic>;

/// Domain of the `i`-th binder of a binder argument, given the earlier ones.
type DomFn<'f, 'a> = &'f dyn Fn(&Elab<'a>, &[Val]) -> Val;

enum Goal<'f, 'a> {
    /// A type family; its sort is reported back.
    Motive,
    /// A term of the given type.
    Check(DomFn<'f, 'a>),
}

/// Elaboration state for one declaration: the signature it may refer to
/// plus the local context.
pub struct Elab<'a> {
    sig: &'a Signature,
    ctx: Context,
}

impl<'a> Elab<'a> {
    pub fn new(sig: &'a Signature) -> Elab<'a> {
        Elab::with_context(sig, Context::new())
    }

    pub fn with_context(sig: &'a Signature, ctx: Context) -> Elab<'a> {
        Elab { sig, ctx }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    fn universes(&self) -> Universes {
        self.sig.universes()
    }

    pub fn eval(&self, t: &Term) -> Val {
        eval(self.sig, self.ctx.env(), t)
    }

    pub fn quote(&self, v: &Val) -> Term {
        quote(self.sig, self.ctx.len(), v)
    }

    fn conv(&self) -> Conv<'a> {
        Conv::new(self.sig, self.ctx.types())
    }

    fn closure(&self, body: Term) -> Closure {
        Closure::new(self.ctx.env().clone(), body.rc())
    }

    fn eq_type(&self, a: &Val, b: &Val) -> bool {
        self.conv().eq_type(a, b)
    }

    fn sort_of(&self, ty: &Val, span: Span) -> Result<Sort> {
        self.conv().sort_of(ty).map_err(|e| match e {
            SortError::NotAType => Diagnostic::new(
                Code::NotAType,
                span,
                format!("expected a type, found `{}`", self.show(ty)),
            ),
            SortError::Level(e) => Diagnostic::new(Code::Level, span, e.to_string()),
        })
    }

    /// Render a value for messages, using the local names.
    pub fn show(&self, v: &Val) -> String {
        self.show_term(&self.quote(v))
    }

    pub fn show_term(&self, t: &Term) -> String {
        let raw = distill::distill(Some(self.sig), &self.ctx.names(), t);
        crate::parse::print_term(&raw)
    }

    fn univ(&self, s: Sort) -> Val {
        Value::Univ(s).rc()
    }

    fn layer_sort(&self, layer: Layer, s: Sort) -> Sort {
        match layer {
            Layer::Fib => s,
            Layer::Strict => self.universes().strict_part(s),
        }
    }

    fn fib0(&self) -> Sort {
        Sort::fib(crate::syntax::Level::ZERO)
    }

    fn require_fibrant(&self, what: &str, ty: &Val, s: Sort, span: Span) -> Result<()> {
        if s.is_fibrant() {
            Ok(())
        } else {
            Err(Diagnostic::new(
                Code::Sort,
                span,
                format!("{what} needs a fibrant type, but `{}` has sort {s}", self.show(ty)),
            ))
        }
    }

    /// Synthesize a core term and its type.
    pub fn infer(&mut self, raw: &Raw) -> Result<(Term, Val)> {
        match &raw.kind {
            RawKind::Var(x) => {
                if let Some((i, ty)) = self.ctx.lookup(x) {
                    return Ok((Term::Var(i), ty.clone()));
                }
                match self.sig.lookup(x) {
                    Some(entry) => Ok((Term::Const(entry.name.clone()), entry.ty_value().clone())),
                    None => Err(Diagnostic::new(Code::Unbound, raw.span, format!("unbound name `{x}`"))),
                }
            }
            RawKind::Univ(layer, level) => {
                let u = self.universes();
                let level = u
                    .level(*level)
                    .map_err(|e| Diagnostic::new(Code::Level, raw.span, e.to_string()))?;
                let s = Sort { layer: *layer, level };
                let ty = u.succ(s).map_err(|_| {
                    Diagnostic::new(
                        Code::Level,
                        raw.span,
                        format!(
                            "`{}` is the largest universe and has no type",
                            crate::parse::print_term(raw)
                        ),
                    )
                })?;
                Ok((Term::Univ(s), self.univ(ty)))
            }
            RawKind::Hole => Err(self.hole(raw.span, None)),
            RawKind::Prim(_) | RawKind::App(..) => self.infer_spine(raw),
            RawKind::Pi(groups, body) => {
                let (t, s) = self.binding_former(groups, body, Term::Pi)?;
                Ok((t, self.univ(s)))
            }
            RawKind::Sigma(groups, body) => {
                let (t, s) = self.binding_former(groups, body, Term::Sigma)?;
                Ok((t, self.univ(s)))
            }
            RawKind::Arrow(a, b) | RawKind::Product(a, b) => {
                let (ta, sa) = self.infer_type(a)?;
                let va = self.eval(&ta);
                self.ctx.bind(None, ta.clone(), va);
                let rb = self.infer_type(b);
                self.ctx.pop();
                let (tb, sb) = rb?;
                let s = self.universes().join(sa, sb);
                let t = match raw.kind {
                    RawKind::Arrow(..) => Term::Pi(ta.rc(), tb.rc()),
                    _ => Term::Sigma(ta.rc(), tb.rc()),
                };
                Ok((t, self.univ(s)))
            }
            RawKind::Lam(..) => Err(Diagnostic::new(
                Code::CannotInfer,
                raw.span,
                "cannot infer the type of a lambda; add a type annotation".to_string(),
            )),
            RawKind::Pair(a, b) => {
                let (ta, tya) = self.infer(a)?;
                let (tb, tyb) = self.infer(b)?;
                let sigma = Term::Sigma(self.quote(&tya).rc(), shift(&self.quote(&tyb), 0, 1).rc());
                Ok((Term::Pair(ta.rc(), tb.rc()), self.eval(&sigma)))
            }
            RawKind::Ann(e, ty) => {
                let (tt, _) = self.infer_type(ty)?;
                let tv = self.eval(&tt);
                let te = self.check(e, &tv)?;
                Ok((te, tv))
            }
        }
    }

    /// Elaborate a type and return its sort.
    pub fn infer_type(&mut self, raw: &Raw) -> Result<(Term, Sort)> {
        let (t, ty) = self.infer(raw)?;
        match &*ty {
            Value::Univ(s) => Ok((t, *s)),
            _ => Err(Diagnostic::new(
                Code::NotAType,
                raw.span,
                format!(
                    "expected a type, but `{}` has type `{}`",
                    self.show_term(&t),
                    self.show(&ty)
                ),
            )),
        }
    }

    /// Check `raw` against `expected`.
    pub fn check(&mut self, raw: &Raw, expected: &Val) -> Result<Term> {
        match &raw.kind {
            RawKind::Lam(names, body) => self.check_lam(names, body, expected, raw.span),
            RawKind::Pair(a, b) => match &**expected {
                Value::Sigma(fst_ty, snd_ty) => {
                    let ta = self.check(a, fst_ty)?;
                    let va = self.eval(&ta);
                    let tb = self.check(b, &snd_ty.apply1(self.sig, va))?;
                    Ok(Term::Pair(ta.rc(), tb.rc()))
                }
                _ => Err(Diagnostic::new(
                    Code::Mismatch,
                    raw.span,
                    format!("a pair was given, but the expected type is `{}`", self.show(expected)),
                )),
            },
            RawKind::Hole => Err(self.hole(raw.span, Some(expected))),
            RawKind::Prim(_) | RawKind::App(..) => {
                let (head, args) = raw.spine();
                if let RawKind::Prim(p) = head.kind {
                    if args.len() == p.arity() {
                        if let Some(r) = self.check_prim(p, &args, expected, raw.span) {
                            return r;
                        }
                    }
                }
                self.check_by_inference(raw, expected)
            }
            _ => self.check_by_inference(raw, expected),
        }
    }

    fn check_by_inference(&mut self, raw: &Raw, expected: &Val) -> Result<Term> {
        let (t, got) = self.infer(raw)?;
        self.subsume(&got, expected, raw.span)?;
        Ok(t)
    }

    fn hole(&self, span: Span, expected: Option<&Val>) -> Diagnostic {
        let message = match expected {
            Some(ty) => format!("unfilled hole of type `{}`", self.show(ty)),
            None => "unfilled hole".to_string(),
        };
        Diagnostic::new(Code::Hole, span, message)
    }

    /// `got ≤ want`: universes may grow along the subsort order, every other
    /// type must be convertible.
    fn subsume(&self, got: &Val, want: &Val, span: Span) -> Result<()> {
        if let (Value::Univ(g), Value::Univ(w)) = (&**got, &**want) {
            if self.universes().le(*g, *w) {
                return Ok(());
            }
            let code = if g.layer == Layer::Strict && w.layer == Layer::Fib {
                Code::Sort
            } else {
                Code::Level
            };
            return Err(Diagnostic::new(
                code,
                span,
                format!(
                    "expected a term of `{}`, found one of `{}`; {g} is not below {w}",
                    self.show(want),
                    self.show(got)
                ),
            ));
        }
        if self.eq_type(got, want) {
            Ok(())
        } else {
            Err(Diagnostic::new(
                Code::Mismatch,
                span,
                format!(
                    "type mismatch: expected `{}`, found `{}`",
                    self.show(want),
                    self.show(got)
                ),
            ))
        }
    }

    fn check_lam(&mut self, names: &[BinderName], body: &Raw, expected: &Val, span: Span) -> Result<Term> {
        let Some((first, rest)) = names.split_first() else {
            return self.check(body, expected);
        };
        let Value::Pi(dom, cod) = &**expected else {
            return Err(Diagnostic::new(
                Code::Mismatch,
                span,
                format!(
                    "a function was given, but the expected type `{}` is not a function type",
                    self.show(expected)
                ),
            ));
        };
        let dom_term = self.quote(dom);
        let x = self.ctx.bind(first.name.clone(), dom_term, dom.clone());
        let cod = cod.apply1(self.sig, x);
        let r = self.check_lam(rest, body, &cod, span);
        self.ctx.pop();
        Ok(Term::Lam(r?.rc()))
    }

    /// Elaborate binder groups, binding every name. The caller restores the
    /// context length.
    fn bind_groups(&mut self, groups: &[Binder]) -> Result<Vec<(Term, Sort)>> {
        let mut out = Vec::new();
        for g in groups {
            let (t, s) = self.infer_type(&g.ty)?;
            let v = self.eval(&t);
            for (k, b) in g.names.iter().enumerate() {
                let tk = shift(&t, 0, k as isize);
                self.ctx.bind(b.name.clone(), tk.clone(), v.clone());
                out.push((tk, s));
            }
        }
        Ok(out)
    }

    fn binding_former(
        &mut self,
        groups: &[Binder],
        body: &Raw,
        former: fn(RcTerm, RcTerm) -> Term,
    ) -> Result<(Term, Sort)> {
        let base = self.ctx.len();
        let r = self
            .bind_groups(groups)
            .and_then(|doms| self.infer_type(body).map(|b| (doms, b)));
        self.ctx.truncate(base);
        let (doms, (mut t, mut s)) = r?;
        let u = self.universes();
        for (d, sd) in doms.into_iter().rev() {
            t = former(d.rc(), t.rc());
            s = u.join(sd, s);
        }
        Ok((t, s))
    }

    fn infer_spine(&mut self, raw: &Raw) -> Result<(Term, Val)> {
        let (head, args) = raw.spine();
        let (mut t, mut ty, rest) = match head.kind {
            RawKind::Prim(p) => {
                let n = p.arity();
                if args.len() < n {
                    return Err(Diagnostic::new(
                        Code::Arity,
                        raw.span,
                        format!(
                            "`{}` expects {n} argument{}, found {}",
                            p.name(),
                            if n == 1 { "" } else { "s" },
                            args.len()
                        ),
                    ));
                }
                let (t, ty) = self.infer_prim(p, &args[..n], raw.span)?;
                (t, ty, &args[n..])
            }
            _ => {
                let (t, ty) = self.infer(head)?;
                (t, ty, &args[..])
            }
        };
        for arg in rest {
            let Value::Pi(dom, cod) = &*ty else {
                return Err(Diagnostic::new(
                    Code::Mismatch,
                    arg.span,
                    format!(
                        "`{}` of type `{}` is not a function and cannot be applied",
                        self.show_term(&t),
                        self.show(&ty)
                    ),
                ));
            };
            let ta = self.check(arg, dom)?;
            let va = self.eval(&ta);
            let next = cod.apply1(self.sig, va);
            t = Term::App(t.rc(), ta.rc());
            ty = next;
        }
        Ok((t, ty))
    }

    fn fibrancy_guard(&self, p: Prim, motive_sort: Sort, span: Span) -> Result<()> {
        if motive_sort.is_fibrant() {
            return Ok(());
        }
        Err(Diagnostic::new(
            Code::Fibrancy,
            span,
            format!(
                "the motive of `{}` lands in {motive_sort}; fibrant eliminators may only target fibrant types",
                p.name()
            ),
        ))
    }

    fn infer_prim(&mut self, p: Prim, args: &[&Raw], span: Span) -> Result<(Term, Val)> {
        let sig = self.sig;
        match p {
            Prim::Unit => Ok((Term::Unit, self.univ(self.fib0()))),
            Prim::Star => Ok((Term::Star, Value::Unit.rc())),
            Prim::Nat(l) => Ok((Term::Nat(l), self.univ(self.layer_sort(l, self.fib0())))),
            Prim::Empty(l) => Ok((Term::Empty(l), self.univ(self.layer_sort(l, self.fib0())))),
            Prim::Zero => Ok((Term::Zero(Layer::Fib), Value::Nat(Layer::Fib).rc())),
            Prim::Suc => {
                let (n, ty) = self.infer(args[0])?;
                match &*ty {
                    Value::Nat(l) => Ok((Term::Suc(*l, n.rc()), ty.clone())),
                    _ => Err(Diagnostic::new(
                        Code::Mismatch,
                        args[0].span,
                        format!("`suc` expects a natural number, found a term of `{}`", self.show(&ty)),
                    )),
                }
            }
            Prim::Inl | Prim::Inr => Err(Diagnostic::new(
                Code::CannotInfer,
                span,
                format!("cannot infer the sum type of `{}`; add a type annotation", p.name()),
            )),
            Prim::Sum(l) => {
                let (a, sa) = self.infer_type(args[0])?;
                let (b, sb) = self.infer_type(args[1])?;
                if l == Layer::Fib {
                    let va = self.eval(&a);
                    self.require_fibrant("`Sum`", &va, sa, args[0].span)?;
                    let vb = self.eval(&b);
                    self.require_fibrant("`Sum`", &vb, sb, args[1].span)?;
                }
                let s = self.layer_sort(l, self.universes().join(sa, sb));
                Ok((Term::Sum(l, a.rc(), b.rc()), self.univ(s)))
            }
            Prim::Id | Prim::Eq => {
                let l = if p == Prim::Id { Layer::Fib } else { Layer::Strict };
                let (a, s) = self.infer_type(args[0])?;
                let va = self.eval(&a);
                if l == Layer::Fib {
                    self.require_fibrant("`Id`", &va, s, args[0].span)?;
                }
                let x = self.check(args[1], &va)?;
                let y = self.check(args[2], &va)?;
                let s = self.layer_sort(l, s);
                Ok((Term::Id(l, a.rc(), x.rc(), y.rc()), self.univ(s)))
            }
            Prim::Refl(l) => {
                let (x, ty) = self.infer(args[0])?;
                if l == Layer::Fib {
                    let s = self.sort_of(&ty, args[0].span)?;
                    self.require_fibrant("`refl`", &ty, s, args[0].span)?;
                }
                let vx = self.eval(&x);
                let a = self.quote(&ty);
                Ok((Term::Refl(l, a.rc(), x.rc()), Value::Id(l, ty, vx.clone(), vx).rc()))
            }
            Prim::Fst | Prim::Snd => {
                let (t, ty) = self.infer(args[0])?;
                let Value::Sigma(a, b) = &*ty else {
                    return Err(Diagnostic::new(
                        Code::Mismatch,
                        args[0].span,
                        format!("`{}` expects a pair, found a term of `{}`", p.name(), self.show(&ty)),
                    ));
                };
                if p == Prim::Fst {
                    Ok((Term::Fst(t.rc()), a.clone()))
                } else {
                    let first = crate::conv::do_fst(&self.eval(&t));
                    Ok((Term::Snd(t.rc()), b.apply1(sig, first)))
                }
            }
            Prim::J(l) => {
                let (lhs, a_ty) = self.infer(args[2])?;
                if l == Layer::Fib {
                    let s = self.sort_of(&a_ty, args[2].span)?;
                    self.require_fibrant("`J`", &a_ty, s, args[2].span)?;
                }
                let lhs_v = self.eval(&lhs);
                let rhs = self.check(args[3], &a_ty)?;
                let rhs_v = self.eval(&rhs);
                let dom_a: DomFn = &|_, _| a_ty.clone();
                let dom_p: DomFn = &|_, vs| Value::Id(l, a_ty.clone(), lhs_v.clone(), vs[0].clone()).rc();
                let (motive, ms) = self.binder_arg(args[0], &[dom_a, dom_p], Goal::Motive)?;
                if l == Layer::Fib {
                    self.fibrancy_guard(p, ms.unwrap(), args[0].span)?;
                }
                let mc = self.closure(motive.clone());
                let refl = Value::Refl(l, a_ty.clone(), lhs_v.clone()).rc();
                let base = self.check(args[1], &mc.apply(sig, &[lhs_v.clone(), refl]))?;
                let path = Value::Id(l, a_ty.clone(), lhs_v, rhs_v.clone()).rc();
                let proof = self.check(args[4], &path)?;
                let proof_v = self.eval(&proof);
                let ty = mc.apply(sig, &[rhs_v, proof_v]);
                Ok((
                    Term::J {
                        layer: l,
                        motive: motive.rc(),
                        base: base.rc(),
                        lhs: lhs.rc(),
                        rhs: rhs.rc(),
                        proof: proof.rc(),
                    },
                    ty,
                ))
            }
            Prim::NatElim(l) => {
                let nat = Value::Nat(l).rc();
                let dom_n: DomFn = &|_, _| nat.clone();
                let (motive, ms) = self.binder_arg(args[0], &[dom_n], Goal::Motive)?;
                if l == Layer::Fib {
                    self.fibrancy_guard(p, ms.unwrap(), args[0].span)?;
                }
                let mc = self.closure(motive.clone());
                let zero = self.check(args[1], &mc.apply1(sig, Value::Zero(l).rc()))?;
                let dom_r: DomFn = &|e, vs| mc.apply1(e.sig, vs[0].clone());
                let goal: DomFn = &|e, vs| mc.apply1(e.sig, Value::Suc(l, vs[0].clone()).rc());
                let (succ, _) = self.binder_arg(args[2], &[dom_n, dom_r], Goal::Check(goal))?;
                let target = self.check(args[3], &nat)?;
                let ty = mc.apply1(sig, self.eval(&target));
                Ok((
                    Term::NatElim {
                        layer: l,
                        motive: motive.rc(),
                        zero: zero.rc(),
                        succ: succ.rc(),
                        target: target.rc(),
                    },
                    ty,
                ))
            }
            Prim::SumElim(l) => {
                let (target, sum) = self.infer(args[3])?;
                let (left_ty, right_ty) = match &*sum {
                    Value::Sum(l2, a, b) if *l2 == l => (a.clone(), b.clone()),
                    _ => {
                        return Err(Diagnostic::new(
                            Code::Mismatch,
                            args[3].span,
                            format!(
                                "`{}` expects a term of a {} sum type, found one of `{}`",
                                p.name(),
                                if l == Layer::Fib { "fibrant" } else { "strict" },
                                self.show(&sum)
                            ),
                        ))
                    }
                };
                let dom_s: DomFn = &|_, _| sum.clone();
                let (motive, ms) = self.binder_arg(args[0], &[dom_s], Goal::Motive)?;
                if l == Layer::Fib {
                    self.fibrancy_guard(p, ms.unwrap(), args[0].span)?;
                }
                let mc = self.closure(motive.clone());
                let dom_l: DomFn = &|_, _| left_ty.clone();
                let goal_l: DomFn = &|e, vs| mc.apply1(e.sig, Value::Inl(l, vs[0].clone()).rc());
                let (left, _) = self.binder_arg(args[1], &[dom_l], Goal::Check(goal_l))?;
                let dom_r: DomFn = &|_, _| right_ty.clone();
                let goal_r: DomFn = &|e, vs| mc.apply1(e.sig, Value::Inr(l, vs[0].clone()).rc());
                let (right, _) = self.binder_arg(args[2], &[dom_r], Goal::Check(goal_r))?;
                let ty = mc.apply1(sig, self.eval(&target));
                Ok((
                    Term::SumElim {
                        layer: l,
                        motive: motive.rc(),
                        left: left.rc(),
                        right: right.rc(),
                        target: target.rc(),
                    },
                    ty,
                ))
            }
            Prim::EmptyElim(l) => {
                let empty = Value::Empty(l).rc();
                let dom_e: DomFn = &|_, _| empty.clone();
                let (motive, ms) = self.binder_arg(args[0], &[dom_e], Goal::Motive)?;
                if l == Layer::Fib {
                    self.fibrancy_guard(p, ms.unwrap(), args[0].span)?;
                }
                let target = self.check(args[1], &empty)?;
                let ty = self.closure(motive.clone()).apply1(sig, self.eval(&target));
                Ok((
                    Term::EmptyElim {
                        layer: l,
                        motive: motive.rc(),
                        target: target.rc(),
                    },
                    ty,
                ))
            }
        }
    }

    /// Introduction forms whose layer comes from the expected type.
    fn check_prim(&mut self, p: Prim, args: &[&Raw], expected: &Val, span: Span) -> Option<Result<Term>> {
        let mismatch = |e: &Self, what: &str| {
            Err(Diagnostic::new(
                Code::Mismatch,
                span,
                format!("{what}, but the expected type is `{}`", e.show(expected)),
            ))
        };
        Some(match (p, &**expected) {
            (Prim::Zero, Value::Nat(l)) => Ok(Term::Zero(*l)),
            (Prim::Zero, _) => mismatch(self, "`zero` is a natural number"),
            (Prim::Suc, Value::Nat(l)) => self.check(args[0], expected).map(|n| Term::Suc(*l, n.rc())),
            (Prim::Suc, _) => mismatch(self, "`suc` builds a natural number"),
            (Prim::Inl, Value::Sum(l, a, _)) => self.check(args[0], a).map(|x| Term::Inl(*l, x.rc())),
            (Prim::Inr, Value::Sum(l, _, b)) => self.check(args[0], b).map(|x| Term::Inr(*l, x.rc())),
            (Prim::Inl | Prim::Inr, _) => mismatch(self, &format!("`{}` builds a sum", p.name())),
            (Prim::Refl(l), Value::Id(l2, a, x, y)) if l == *l2 => {
                let t = match self.check(args[0], a) {
                    Ok(t) => t,
                    Err(e) => return Some(Err(e)),
                };
                let v = self.eval(&t);
                let mut conv = self.conv();
                if conv.eq(x, &v, a) && conv.eq(y, &v, a) {
                    Ok(Term::Refl(l, self.quote(a).rc(), t.rc()))
                } else {
                    mismatch(
                        self,
                        &format!(
                            "`{} {}` only proves `{}` equal to itself",
                            p.name(),
                            self.show(&v),
                            self.show(&v)
                        ),
                    )
                }
            }
            (Prim::Refl(_), _) => mismatch(self, &format!("`{}` proves a reflexive equality", p.name())),
            _ => return None,
        })
    }

    /// Elaborate an argument that binds `doms.len()` variables. A lambda
    /// with enough binders is opened directly; anything else is treated as
    /// a function and applied to the remaining variables. Returns the body
    /// under all binders, and for motives its sort.
    fn binder_arg(&mut self, raw: &Raw, doms: &[DomFn<'_, 'a>], goal: Goal<'_, 'a>) -> Result<(Term, Option<Sort>)> {
        let base = self.ctx.len();
        let r = self.binder_arg_inner(raw, doms, goal, base);
        self.ctx.truncate(base);
        r
    }

    fn binder_arg_inner(
        &mut self,
        raw: &Raw,
        doms: &[DomFn<'_, 'a>],
        goal: Goal<'_, 'a>,
        base: usize,
    ) -> Result<(Term, Option<Sort>)> {
        let n = doms.len();
        let (names, body) = peel(raw, n);
        let k = names.len();
        let mut vars = Vec::new();
        for (i, name) in names.into_iter().enumerate() {
            let ty = doms[i](self, &vars);
            let t = self.quote(&ty);
            vars.push(self.ctx.bind(name.name, t, ty));
        }
        if k == n {
            return match goal {
                Goal::Motive => {
                    let (t, s) = self.infer_type(&body)?;
                    Ok((t, Some(s)))
                }
                Goal::Check(g) => {
                    let want = g(self, &vars);
                    Ok((self.check(&body, &want)?, None))
                }
            };
        }

        let m = n - k;
        let mut tys = Vec::new();
        for dom in &doms[k..] {
            let ty = dom(self, &vars);
            let t = self.quote(&ty);
            vars.push(self.ctx.bind(None, t, ty.clone()));
            tys.push(ty);
        }
        let (f, sort) = match goal {
            Goal::Motive => {
                self.ctx.truncate(base + k);
                let (f, mut fty) = self.infer(&body)?;
                for ty in &tys {
                    let Value::Pi(dom, cod) = &*fty else {
                        return Err(Diagnostic::new(
                            Code::Mismatch,
                            body.span,
                            format!(
                                "expected a type family of {n} arguments, found a term of `{}`",
                                self.show(&fty)
                            ),
                        ));
                    };
                    if !self.eq_type(dom, ty) {
                        return Err(Diagnostic::new(
                            Code::Mismatch,
                            body.span,
                            format!(
                                "the family takes `{}` but should take `{}`",
                                self.show(dom),
                                self.show(ty)
                            ),
                        ));
                    }
                    let t = self.quote(ty);
                    let x = self.ctx.bind(None, t, ty.clone());
                    fty = cod.apply1(self.sig, x);
                }
                match &*fty {
                    Value::Univ(s) => (f, Some(*s)),
                    _ => {
                        return Err(Diagnostic::new(
                            Code::NotAType,
                            body.span,
                            format!("a motive must return a type, found a term of `{}`", self.show(&fty)),
                        ))
                    }
                }
            }
            Goal::Check(g) => {
                let want = g(self, &vars);
                let mut pi = quote(self.sig, base + n, &want);
                for (i, ty) in tys.iter().enumerate().rev() {
                    pi = Term::Pi(quote(self.sig, base + k + i, ty).rc(), pi.rc());
                }
                self.ctx.truncate(base + k);
                let piv = self.eval(&pi);
                (self.check(&body, &piv)?, None)
            }
        };
        let mut t = shift(&f, 0, m as isize);
        for j in (0..m).rev() {
            t = Term::app(t, Term::Var(j));
        }
        Ok((t, sort))
    }
}

/// Split up to `n` leading lambda binders off `raw`.
fn peel(raw: &Raw, n: usize) -> (Vec<BinderName>, Raw) {
    let mut names = Vec::new();
    let mut cur = raw.clone();
    while names.len() < n {
        let RawKind::Lam(ns, body) = cur.kind else { break };
        let take = ns.len().min(n - names.len());
        names.extend(ns[..take].iter().cloned());
        cur = if take < ns.len() {
            Raw::new(RawKind::Lam(ns[take..].to_vec(), body), cur.span)
        } else {
            *body
        };
    }
    (names, cur)
}

/// Elaborate one declaration and add it to `sig`.
pub fn elaborate_decl(sig: &mut Signature, decl: &RawDecl, kind: EntryKind) -> Result<()> {
    if sig.lookup(&decl.name).is_some() {
        return Err(Diagnostic::new(
            Code::Duplicate,
            decl.name_span,
            format!("`{}` is already defined", decl.name),
        ));
    }
    let (ty, body) = {
        let mut e = Elab::new(sig);
        let params = e.bind_groups(&decl.params)?;
        let (mut ty, _) = e.infer_type(&decl.ty)?;
        let tyv = e.eval(&ty);
        let mut body = match &decl.body {
            Some(b) => Some(e.check(b, &tyv)?),
            None => None,
        };
        for (p, _) in params.into_iter().rev() {
            ty = Term::Pi(p.rc(), ty.rc());
            body = body.map(Term::lam);
        }
        (ty, body)
    };
    sig.insert(decl.name.clone(), ty, body, kind)
        .map_err(|e| Diagnostic::new(Code::Duplicate, decl.name_span, e.to_string()))
}

fn entry_kind(decl: &RawDecl) -> EntryKind {
    match decl.kind {
        DeclKind::Def => EntryKind::Definition,
        DeclKind::Postulate => EntryKind::Postulate,
    }
}

/// Elaborate declarations in order into `sig`. A failing declaration is
/// reported and skipped; later ones are still processed.
pub fn elaborate_into(sig: &mut Signature, decls: &[RawDecl]) -> Vec<Diagnostic> {
    decls
        .iter()
        .filter_map(|d| elaborate_decl(sig, d, entry_kind(d)).err())
        .collect()
}

/// Elaborate declarations into a fresh signature holding the built-in axioms.
pub fn elaborate_signature(universes: Universes, decls: &[RawDecl]) -> (Signature, Vec<Diagnostic>) {
    let mut sig = Signature::new(universes);
    let diags = elaborate_into(&mut sig, decls);
    (sig, diags)
}

/// Elaborate a closed surface term, returning its core form and type.
pub fn elaborate_term(sig: &Signature, raw: &Raw) -> Result<(Term, Val)> {
    Elab::new(sig).infer(raw)
}
