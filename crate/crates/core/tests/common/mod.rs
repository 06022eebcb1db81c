//! Shared oracles: a random generator of well-typed closed core terms and
//! a small-step substitution reducer that knows nothing about NbE.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tt2::syntax::{Layer, RcTerm, Term};

pub const MAX_SIZE: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ty {
    Nat,
    Unit,
    Arr(Box<Ty>, Box<Ty>),
    Prod(Box<Ty>, Box<Ty>),
    Sum(Box<Ty>, Box<Ty>),
}

impl Ty {
    pub fn to_term(&self, layer: Layer) -> Term {
        match self {
            Ty::Nat => Term::Nat(layer),
            Ty::Unit => Term::Unit,
            Ty::Arr(a, b) => Term::pi(a.to_term(layer), b.to_term(layer)),
            Ty::Prod(a, b) => Term::sigma(a.to_term(layer), b.to_term(layer)),
            Ty::Sum(a, b) => Term::Sum(layer, a.to_term(layer).rc(), b.to_term(layer).rc()),
        }
    }
}

fn arr(a: Ty, b: Ty) -> Ty {
    Ty::Arr(Box::new(a), Box::new(b))
}

fn prod(a: Ty, b: Ty) -> Ty {
    Ty::Prod(Box::new(a), Box::new(b))
}

fn sum(a: Ty, b: Ty) -> Ty {
    Ty::Sum(Box::new(a), Box::new(b))
}

/// Number of nodes.
pub fn size(t: &Term) -> usize {
    1 + t.children().iter().map(|(c, _)| size(c)).sum::<usize>()
}

pub struct Gen {
    pub rng: ChaCha8Rng,
    layer: Layer,
}

impl Gen {
    pub fn new(rng: ChaCha8Rng) -> Gen {
        Gen { rng, layer: Layer::Fib }
    }

    fn small_ty(&mut self) -> Ty {
        match self.rng.gen_range(0..6) {
            0 | 1 => Ty::Nat,
            2 => Ty::Unit,
            3 => arr(Ty::Nat, Ty::Nat),
            4 => prod(Ty::Nat, Ty::Nat),
            _ => sum(Ty::Nat, Ty::Unit),
        }
    }

    fn top_ty(&mut self) -> Ty {
        match self.rng.gen_range(0..8) {
            0..=3 => Ty::Nat,
            4 => arr(Ty::Nat, Ty::Nat),
            5 => prod(Ty::Nat, Ty::Unit),
            6 => sum(Ty::Nat, Ty::Nat),
            _ => arr(arr(Ty::Nat, Ty::Nat), Ty::Nat),
        }
    }

    /// A closed well-typed term of at most [`MAX_SIZE`] nodes with its type
    /// and layer.
    pub fn closed(&mut self) -> (Term, Ty, Layer) {
        loop {
            self.layer = if self.rng.gen_bool(0.7) {
                Layer::Fib
            } else {
                Layer::Strict
            };
            let ty = self.top_ty();
            let budget = self.rng.gen_range(6..=14);
            let t = self.term(&ty, &[], budget);
            if (4..=MAX_SIZE).contains(&size(&t)) {
                return (t, ty, self.layer);
            }
        }
    }

    fn var_of(&mut self, ty: &Ty, ctx: &[Ty]) -> Option<Term> {
        let hits: Vec<usize> = (0..ctx.len()).filter(|&i| &ctx[ctx.len() - 1 - i] == ty).collect();
        hits.choose(&mut self.rng).map(|&i| Term::Var(i))
    }

    fn leaf(&mut self, ty: &Ty, ctx: &[Ty]) -> Term {
        if let Some(v) = self.var_of(ty, ctx) {
            if self.rng.gen_bool(0.7) {
                return v;
            }
        }
        let l = self.layer;
        match ty {
            Ty::Nat => Term::Zero(l),
            Ty::Unit => Term::Star,
            Ty::Arr(a, b) => Term::lam(self.leaf(b, &extend(ctx, &[a]))),
            Ty::Prod(a, b) => Term::pair(self.leaf(a, ctx), self.leaf(b, ctx)),
            Ty::Sum(a, _) => Term::Inl(l, self.leaf(a, ctx).rc()),
        }
    }

    fn term(&mut self, ty: &Ty, ctx: &[Ty], budget: usize) -> Term {
        if budget <= 1 {
            return self.leaf(ty, ctx);
        }
        let l = self.layer;
        let b = budget - 1;
        let half = |g: &mut Gen| g.rng.gen_range(1..=b.max(1));
        match self.rng.gen_range(0..10) {
            // β-redex
            0 | 1 => {
                let a = self.small_ty();
                let k = half(self);
                let body = self.term(ty, &extend(ctx, &[&a]), k);
                let arg = self.synth(&a, ctx, b.saturating_sub(k));
                Term::app(Term::lam(body), arg)
            }
            2 => {
                let other = self.small_ty();
                let (p, first) = if self.rng.gen_bool(0.5) {
                    (prod(ty.clone(), other), true)
                } else {
                    (prod(other, ty.clone()), false)
                };
                let t = self.synth(&p, ctx, b);
                if first {
                    Term::Fst(t.rc())
                } else {
                    Term::Snd(t.rc())
                }
            }
            3 => {
                let motive = ty.to_term(l);
                let k = half(self);
                let z = self.term(ty, ctx, k / 2);
                let s = self.term(ty, &extend(ctx, &[&Ty::Nat, ty]), k / 2);
                let n = self.nat_lit_or_term(ctx, b.saturating_sub(k));
                Term::NatElim {
                    layer: l,
                    motive: motive.rc(),
                    zero: z.rc(),
                    succ: s.rc(),
                    target: n.rc(),
                }
            }
            4 => {
                let (a, c) = (self.small_ty(), self.small_ty());
                let k = half(self);
                let left = self.term(ty, &extend(ctx, &[&a]), k / 2);
                let right = self.term(ty, &extend(ctx, &[&c]), k / 2);
                let target = self.synth(&sum(a, c), ctx, b.saturating_sub(k));
                Term::SumElim {
                    layer: l,
                    motive: ty.to_term(l).rc(),
                    left: left.rc(),
                    right: right.rc(),
                    target: target.rc(),
                }
            }
            5 => {
                let k = half(self);
                let base = self.term(ty, ctx, k);
                let a = self.term(&Ty::Nat, ctx, b.saturating_sub(k).min(3));
                let nat = Term::Nat(l).rc();
                Term::J {
                    layer: l,
                    motive: ty.to_term(l).rc(),
                    base: base.rc(),
                    lhs: a.clone().rc(),
                    rhs: a.clone().rc(),
                    proof: Term::Refl(l, nat, a.rc()).rc(),
                }
            }
            6 => {
                let a = self.small_ty();
                let k = half(self);
                let f = self.synth(&arr(a.clone(), ty.clone()), ctx, k);
                let x = self.term(&a, ctx, b.saturating_sub(k));
                Term::app(f, x)
            }
            _ => self.intro(ty, ctx, b),
        }
    }

    fn nat_lit_or_term(&mut self, ctx: &[Ty], budget: usize) -> Term {
        if self.rng.gen_bool(0.5) {
            let mut t = Term::Zero(self.layer);
            for _ in 0..self.rng.gen_range(0..4) {
                t = Term::Suc(self.layer, t.rc());
            }
            t
        } else {
            self.synth(&Ty::Nat, ctx, budget)
        }
    }

    /// A term the kernel can infer without an expected type. Anything else
    /// goes under `natelim (\_. T) t (\_ r. r) zero`, which reduces to `t`.
    fn synth(&mut self, ty: &Ty, ctx: &[Ty], budget: usize) -> Term {
        let t = self.term(ty, ctx, budget);
        if inferable(&t) {
            return t;
        }
        let l = self.layer;
        Term::NatElim {
            layer: l,
            motive: ty.to_term(l).rc(),
            zero: t.rc(),
            succ: Term::Var(0).rc(),
            target: Term::Zero(l).rc(),
        }
    }

    fn intro(&mut self, ty: &Ty, ctx: &[Ty], b: usize) -> Term {
        let l = self.layer;
        match ty {
            Ty::Nat => {
                if let Some(v) = self.var_of(ty, ctx).filter(|_| self.rng.gen_bool(0.3)) {
                    return v;
                }
                Term::Suc(l, self.term(ty, ctx, b).rc())
            }
            Ty::Unit => self.var_of(ty, ctx).unwrap_or(Term::Star),
            Ty::Arr(a, c) => Term::lam(self.term(c, &extend(ctx, &[a]), b)),
            Ty::Prod(a, c) => {
                let k = self.rng.gen_range(0..=b);
                Term::pair(self.term(a, ctx, k), self.term(c, ctx, b - k))
            }
            Ty::Sum(a, c) => {
                if self.rng.gen_bool(0.5) {
                    Term::Inl(l, self.term(a, ctx, b).rc())
                } else {
                    Term::Inr(l, self.term(c, ctx, b).rc())
                }
            }
        }
    }
}

fn inferable(t: &Term) -> bool {
    match t {
        Term::Lam(_) | Term::Inl(..) | Term::Inr(..) => false,
        Term::Pair(a, b) => inferable(a) && inferable(b),
        Term::Fst(p) | Term::Snd(p) => inferable(p),
        Term::App(f, a) => match &**f {
            Term::Lam(b) => inferable(a) && inferable(b),
            _ => inferable(f),
        },
        _ => true,
    }
}

fn extend(ctx: &[Ty], more: &[&Ty]) -> Vec<Ty> {
    let mut v = ctx.to_vec();
    v.extend(more.iter().map(|t| (*t).clone()));
    v
}

// ---- reducer ---------------------------------------------------------------

fn map_children(t: &Term, mut f: impl FnMut(&RcTerm, usize) -> Term) -> Term {
    let mut g = |c: &RcTerm, k: usize| f(c, k).rc();
    match t {
        Term::Var(_)
        | Term::Const(_)
        | Term::Univ(_)
        | Term::Unit
        | Term::Star
        | Term::Nat(_)
        | Term::Zero(_)
        | Term::Empty(_) => t.clone(),
        Term::Pi(a, b) => Term::Pi(g(a, 0), g(b, 1)),
        Term::Sigma(a, b) => Term::Sigma(g(a, 0), g(b, 1)),
        Term::Lam(b) => Term::Lam(g(b, 1)),
        Term::App(a, b) => Term::App(g(a, 0), g(b, 0)),
        Term::Pair(a, b) => Term::Pair(g(a, 0), g(b, 0)),
        Term::Fst(a) => Term::Fst(g(a, 0)),
        Term::Snd(a) => Term::Snd(g(a, 0)),
        Term::Id(l, a, x, y) => Term::Id(*l, g(a, 0), g(x, 0), g(y, 0)),
        Term::Refl(l, a, x) => Term::Refl(*l, g(a, 0), g(x, 0)),
        Term::J {
            layer,
            motive,
            base,
            lhs,
            rhs,
            proof,
        } => Term::J {
            layer: *layer,
            motive: g(motive, 2),
            base: g(base, 0),
            lhs: g(lhs, 0),
            rhs: g(rhs, 0),
            proof: g(proof, 0),
        },
        Term::Suc(l, a) => Term::Suc(*l, g(a, 0)),
        Term::NatElim {
            layer,
            motive,
            zero,
            succ,
            target,
        } => Term::NatElim {
            layer: *layer,
            motive: g(motive, 1),
            zero: g(zero, 0),
            succ: g(succ, 2),
            target: g(target, 0),
        },
        Term::Sum(l, a, b) => Term::Sum(*l, g(a, 0), g(b, 0)),
        Term::Inl(l, a) => Term::Inl(*l, g(a, 0)),
        Term::Inr(l, a) => Term::Inr(*l, g(a, 0)),
        Term::SumElim {
            layer,
            motive,
            left,
            right,
            target,
        } => Term::SumElim {
            layer: *layer,
            motive: g(motive, 1),
            left: g(left, 1),
            right: g(right, 1),
            target: g(target, 0),
        },
        Term::EmptyElim { layer, motive, target } => Term::EmptyElim {
            layer: *layer,
            motive: g(motive, 1),
            target: g(target, 0),
        },
    }
}

/// Add `d` to every variable at or above `cutoff`.
pub fn shift(t: &Term, d: usize, cutoff: usize) -> Term {
    match t {
        Term::Var(i) if *i >= cutoff => Term::Var(i + d),
        _ => map_children(t, |c, k| shift(c, d, cutoff + k)),
    }
}

/// Replace variables `depth..depth+args.len()` by `args` (the last argument
/// is the innermost binder) and lower the rest.
fn instantiate_at(t: &Term, args: &[Term], depth: usize) -> Term {
    let n = args.len();
    match t {
        Term::Var(i) if *i < depth => Term::Var(*i),
        Term::Var(i) if *i < depth + n => shift(&args[n - 1 - (i - depth)], depth, 0),
        Term::Var(i) => Term::Var(i - n),
        _ => map_children(t, |c, k| instantiate_at(c, args, depth + k)),
    }
}

pub fn instantiate(body: &Term, args: &[Term]) -> Term {
    instantiate_at(body, args, 0)
}

/// One leftmost-outermost reduction step.
pub fn step(t: &Term) -> Option<Term> {
    match t {
        Term::App(f, a) => {
            if let Term::Lam(b) = &**f {
                return Some(instantiate(b, &[(**a).clone()]));
            }
        }
        Term::Fst(p) => {
            if let Term::Pair(a, _) = &**p {
                return Some((**a).clone());
            }
        }
        Term::Snd(p) => {
            if let Term::Pair(_, b) = &**p {
                return Some((**b).clone());
            }
        }
        Term::J { base, proof, .. } => {
            if let Term::Refl(..) = &**proof {
                return Some((**base).clone());
            }
        }
        Term::NatElim {
            layer,
            motive,
            zero,
            succ,
            target,
        } => match &**target {
            Term::Zero(_) => return Some((**zero).clone()),
            Term::Suc(_, n) => {
                let rec = Term::NatElim {
                    layer: *layer,
                    motive: motive.clone(),
                    zero: zero.clone(),
                    succ: succ.clone(),
                    target: n.clone(),
                };
                return Some(instantiate(succ, &[(**n).clone(), rec]));
            }
            _ => {}
        },
        Term::SumElim {
            left, right, target, ..
        } => match &**target {
            Term::Inl(_, a) => return Some(instantiate(left, &[(**a).clone()])),
            Term::Inr(_, b) => return Some(instantiate(right, &[(**b).clone()])),
            _ => {}
        },
        _ => {}
    }
    // No redex at the root: reduce the leftmost child that can step.
    let mut done = false;
    let out = map_children(t, |c, _| {
        if done {
            return (**c).clone();
        }
        match step(c) {
            Some(s) => {
                done = true;
                s
            }
            None => (**c).clone(),
        }
    });
    done.then_some(out)
}

/// Iterate [`step`] to a normal form, giving up after `fuel` steps.
pub fn reduce(t: &Term, fuel: usize) -> Option<Term> {
    let mut cur = t.clone();
    for _ in 0..fuel {
        match step(&cur) {
            Some(next) => cur = next,
            None => return Some(cur),
        }
    }
    None
}

// ---- η ---------------------------------------------------------------------

/// Declarations the η pairs refer to.
pub const ETA_PRELUDE: &str = "\
postulate eA : U0
postulate eB : eA -> U0
postulate f : Nat -> Nat
postulate g : (x : eA) -> eB x
postulate h : Nat -> Nat -> Nat
postulate k : (Nat -> Nat) -> Nat
postulate p : Nat × Nat
postulate q : (x : eA) × eB x
postulate r : Nat × Nat × Nat
postulate u : Unit
postulate fu : Nat -> Unit
postulate pu : Nat × Unit
postulate fp : Nat -> Nat × Nat
postulate pf : (Nat -> Nat) × Nat
postulate s : NatS -> NatS
postulate sp : NatS × NatS
";

/// `(type, lhs, rhs)`; every pair is definitionally equal only up to η.
pub const ETA_PAIRS: &[(&str, &str, &str)] = &[
    ("Nat -> Nat", "f", "\\x. f x"),
    ("Nat -> Nat", "\\x. f x", "f"),
    ("(x : eA) -> eB x", "g", "\\x. g x"),
    ("Nat -> Nat -> Nat", "h", "\\x y. h x y"),
    ("Nat -> Nat -> Nat", "h", "\\x. h x"),
    ("Nat -> Nat -> Nat", "\\x. h x", "\\x y. h x y"),
    ("(Nat -> Nat) -> Nat", "k", "\\m. k m"),
    ("(Nat -> Nat) -> Nat", "k", "\\m. k (\\n. m n)"),
    ("Nat", "k f", "k (\\n. f n)"),
    ("Nat", "k (h zero)", "k (\\n. h zero n)"),
    ("NatS -> NatS", "s", "\\x. s x"),
    ("Nat × Nat", "p", "(fst p, snd p)"),
    ("Nat × Nat", "(fst p, snd p)", "p"),
    ("(x : eA) × eB x", "q", "(fst q, snd q)"),
    ("Nat × Nat × Nat", "r", "(fst r, snd r)"),
    ("Nat × Nat × Nat", "r", "(fst r, fst (snd r), snd (snd r))"),
    ("Nat × Nat", "snd r", "(fst (snd r), snd (snd r))"),
    ("NatS × NatS", "sp", "(fst sp, snd sp)"),
    ("Unit", "u", "star"),
    ("Unit", "star", "u"),
    ("Unit", "u", "fu zero"),
    ("Unit", "fu zero", "fu (suc zero)"),
    ("Unit", "snd pu", "star"),
    ("Nat × Unit", "pu", "(fst pu, star)"),
    ("Nat × Unit", "(fst pu, u)", "pu"),
    ("Nat -> Unit", "fu", "\\x. star"),
    ("Nat -> Unit", "fu", "\\_. u"),
    ("Nat -> Unit", "\\x. fu x", "\\x. star"),
    ("Nat -> Nat × Nat", "fp", "\\x. (fst (fp x), snd (fp x))"),
    ("Nat -> Nat × Nat", "fp", "\\x. fp x"),
    ("(Nat -> Nat) × Nat", "pf", "(\\x. fst pf x, snd pf)"),
    ("(Nat -> Nat) × Nat", "pf", "(fst pf, snd pf)"),
    ("Nat -> Nat", "fst pf", "\\x. fst pf x"),
    ("Nat", "(\\x. f x : Nat -> Nat) zero", "f zero"),
    ("Nat", "fst (fst p, snd p)", "fst p"),
    ("Nat -> Nat", "\\x. (\\y. f y : Nat -> Nat) x", "f"),
    ("Nat -> Nat", "fst (f, zero)", "\\x. f x"),
    ("Nat × Nat", "(fst (fp zero), snd (fp zero))", "fp zero"),
    ("Unit × Unit", "(u, fu zero)", "(star, star)"),
    ("Unit × Unit", "(u, u)", "(fu zero, snd pu)"),
    ("Nat -> Unit × Nat", "\\x. (fu x, f x)", "\\x. (star, f x)"),
    ("Nat -> Nat -> Unit", "\\x y. fu y", "\\x. fu"),
    ("Nat -> Nat -> Unit", "\\x. fu", "\\x y. star"),
    ("(Nat -> Nat) -> (Nat -> Nat)", "\\m. m", "\\m x. m x"),
    ("(Nat -> Nat) -> (Nat -> Nat)", "\\m x. m x", "\\m. \\y. m y"),
    ("(x : eA) -> eB x", "\\x. g x", "\\y. (\\z. g z : (x : eA) -> eB x) y"),
    ("Nat × Nat -> Nat × Nat", "\\v. v", "\\v. (fst v, snd v)"),
    ("Unit -> Nat", "\\v. f zero", "\\v. (\\w. f zero : Unit -> Nat) star"),
    ("Unit -> Unit", "\\v. v", "\\v. star"),
    ("(Nat × Nat) × Unit", "(p, u)", "((fst p, snd p), star)"),
];

/// Pairs that differ even up to η.
pub const NON_PAIRS: &[(&str, &str, &str)] = &[
    ("Nat -> Nat", "f", "\\x. x"),
    ("Nat × Nat", "p", "(snd p, fst p)"),
    ("Nat -> Nat -> Nat", "h", "\\x y. h y x"),
    ("Nat", "f zero", "f (suc zero)"),
];

pub fn eta_signature() -> tt2::signature::Signature {
    let decls = tt2::parse::parse_file(ETA_PRELUDE).expect("prelude parses");
    let (sig, diags) = tt2::elab::elaborate_signature(Default::default(), &decls);
    assert!(diags.is_empty(), "{diags:?}");
    sig
}

/// Elaborate both sides at `ty` and compare them with typed conversion.
pub fn convertible(sig: &tt2::signature::Signature, ty: &str, lhs: &str, rhs: &str) -> Result<bool, String> {
    use tt2::conv::{convert, eval};
    use tt2::signature::Context;
    let elab = |side: &str| {
        let raw = tt2::parse::parse_term(&format!("({side} : {ty})")).map_err(|e| e.to_string())?;
        tt2::elab::elaborate_term(sig, &raw).map_err(|d| d.message)
    };
    let (l, ty_val) = elab(lhs)?;
    let (r, _) = elab(rhs)?;
    let ctx = Context::new();
    let (lv, rv) = (eval(sig, ctx.env(), &l), eval(sig, ctx.env(), &r));
    Ok(convert(sig, &ctx, &lv, &rv, &ty_val))
}

/// Check one random term; `Ok(true)` when it was not already normal.
pub fn random_case(sig: &tt2::signature::Signature, gen: &mut Gen) -> Result<bool, String> {
    use tt2::conv::{eval, nf};
    use tt2::elab::recheck::Recheck;
    use tt2::signature::Context;
    let (t, ty, layer) = gen.closed();
    let ctx = Context::new();
    let ty_val = eval(sig, ctx.env(), &ty.to_term(layer));
    Recheck::new(sig)
        .check(&t, &ty_val)
        .map_err(|e| format!("generator produced ill-typed {t}: {e}"))?;
    let n = nf(sig, &ctx, &t);
    let oracle = reduce(&t, 1_000_000).ok_or_else(|| format!("reducer ran out of fuel on {t}"))?;
    if n != oracle {
        return Err(format!("nf {n} but reducer {oracle} for {t}"));
    }
    let again = nf(sig, &ctx, &n);
    if again != n {
        return Err(format!("nf not idempotent: {n} then {again}"));
    }
    Ok(n != t)
}

// ---- Δ₊ and generated text -------------------------------------------------

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All functions `[k] -> [n]` as image vectors, monotone or not.
pub fn all_functions(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..=k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Split at `sep` outside parentheses.
pub fn split_top(s: &str, sep: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let (mut depth, mut start, mut i) = (0i32, 0, 0);
    let bytes = s.as_bytes();
    while i < s.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if depth == 0 && s[i..].starts_with(sep) => {
                parts.push(s[start..i].trim().to_string());
                i += sep.len();
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(s[start..].trim().to_string());
    parts
}

/// Binders in a telescope `c1 sep c2 sep ... sep last`, not counting `last`.
/// A component `(a b : T)` counts as two, and `(a : T) (b : U)` also as two.
pub fn telescope_binders(s: &str, sep: &str) -> usize {
    let parts = split_top(s, sep);
    parts[..parts.len() - 1]
        .iter()
        .map(|p| binder_groups(p).map_or(1, |g| g.iter().sum()))
        .sum()
}

/// Names per group when `s` is a run of `(names : T)` groups.
fn binder_groups(s: &str) -> Option<Vec<usize>> {
    let mut groups = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        rest = rest.strip_prefix('(')?;
        let mut depth = 1;
        let close = rest.char_indices().find_map(|(i, c)| {
            depth += match c {
                '(' => 1,
                ')' => -1,
                _ => 0,
            };
            (depth == 0).then_some(i)
        })?;
        let (names, _) = rest[..close].split_once(" : ")?;
        if !names
            .split_whitespace()
            .all(|n| n.chars().all(|c| c.is_alphanumeric() || c == '_'))
        {
            return None;
        }
        groups.push(names.split_whitespace().count());
        rest = rest[close + 1..].trim_start();
    }
    Some(groups)
}

/// The text of `def name ... :=`'s body, joined onto one line.
pub fn def_body(text: &str, name: &str) -> Option<String> {
    let mut lines = text.lines().skip_while(|l| !l.starts_with(&format!("def {name} ")));
    let head = lines.next()?;
    let mut body = head
        .split_once(":=")
        .map(|(_, b)| b.trim().to_string())
        .unwrap_or_default();
    for l in lines.take_while(|l| l.starts_with("  ")) {
        body.push(' ');
        body.push_str(l.trim());
    }
    Some(body.trim().to_string())
}

/// The family binder `(Xk : ...)` of an `SSTn` body.
pub fn family(sst_body: &str, k: usize) -> Option<String> {
    split_top(sst_body, " × ").into_iter().find_map(|c| {
        c.strip_prefix(&format!("(X{k} : "))
            .map(|t| t.trim_end_matches(')').to_string())
    })
}

/// `Σ_{j<k} C(k+1, j+1)`: the proper faces of a k-simplex.
pub fn expected_binders(k: usize) -> usize {
    (0..k).map(|j| binomial(k + 1, j + 1)).sum()
}
