//! Generates surface files for semi-simplicial types at a fixed number of
//! levels: the type `SST_n`, matching-object telescopes, spines and Segal
//! maps.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::delta::{boundary_cells, Cell};
use crate::parse::{print_decl, Binder, BinderName, DeclKind, Prim, Raw, RawDecl, RawKind, Span};
use crate::syntax::Layer;

pub const DEFAULT_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Artifact {
    Sst,
    Spine,
    Segal,
}

impl Artifact {
    fn min_levels(self) -> usize {
        match self {
            Artifact::Sst => 0,
            Artifact::Spine => 1,
            Artifact::Segal => 2,
        }
    }
}

impl fmt::Display for Artifact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Artifact::Sst => "sst",
            Artifact::Spine => "spine",
            Artifact::Segal => "segal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{levels} levels exceeds the cap of {cap}")]
    LevelCapExceeded { levels: usize, cap: usize },
    #[error("{artifact} needs at least {min} levels, got {levels}")]
    TooFewLevels {
        artifact: Artifact,
        levels: usize,
        min: usize,
    },
}

/// What to generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPlan {
    pub levels: usize,
    pub emit: BTreeSet<Artifact>,
    /// Prepended to every generated top-level name.
    pub prefix: String,
    /// Families land in `U{universe}`; only affects `SST_n` and `M_k`.
    pub universe: u32,
    /// Also emit spines as lines with explicit endpoint equalities.
    pub literal_spine: bool,
    pub cap: usize,
}

impl GenPlan {
    pub fn new(levels: usize, artifact: Artifact) -> GenPlan {
        GenPlan {
            levels,
            emit: BTreeSet::from([artifact]),
            prefix: String::new(),
            universe: 0,
            literal_spine: false,
            cap: DEFAULT_CAP,
        }
    }
}

/// One binder of a matching-object telescope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelBinder {
    pub name: String,
    pub cell: Cell,
    pub ty: Raw,
}

fn mk(kind: RawKind) -> Raw {
    Raw::new(kind, Span::default())
}

fn var(s: &str) -> Raw {
    mk(RawKind::Var(s.into()))
}

fn prim(p: Prim) -> Raw {
    mk(RawKind::Prim(p))
}

fn univ(i: u32) -> Raw {
    mk(RawKind::Univ(Layer::Fib, i))
}

fn app(f: Raw, args: impl IntoIterator<Item = Raw>) -> Raw {
    args.into_iter()
        .fold(f, |f, a| mk(RawKind::App(Box::new(f), Box::new(a))))
}

fn lam(names: &[&str], body: Raw) -> Raw {
    let names = names
        .iter()
        .map(|n| BinderName {
            name: Some((*n).into()),
            span: Span::default(),
        })
        .collect();
    mk(RawKind::Lam(names, Box::new(body)))
}

fn arrow(a: Raw, b: Raw) -> Raw {
    mk(RawKind::Arrow(Box::new(a), Box::new(b)))
}

fn tuple(items: Vec<Raw>) -> Raw {
    let mut it = items.into_iter().rev();
    let last = it.next().expect("non-empty tuple");
    it.fold(last, |acc, x| mk(RawKind::Pair(Box::new(x), Box::new(acc))))
}

/// `fst (snd (… (snd s)))` with `j` snds.
fn proj(s: &str, j: usize) -> Raw {
    let inner = (0..j).fold(var(s), |acc, _| app(prim(Prim::Snd), [acc]));
    app(prim(Prim::Fst), [inner])
}

fn mentions(t: &Raw, x: &str) -> bool {
    match &t.kind {
        RawKind::Var(n) => &**n == x,
        RawKind::Prim(_) | RawKind::Univ(..) | RawKind::Hole => false,
        RawKind::Pi(gs, b) | RawKind::Sigma(gs, b) => gs.iter().any(|g| mentions(&g.ty, x)) || mentions(b, x),
        RawKind::Lam(_, b) => mentions(b, x),
        RawKind::Arrow(a, b)
        | RawKind::Product(a, b)
        | RawKind::App(a, b)
        | RawKind::Pair(a, b)
        | RawKind::Ann(a, b) => mentions(a, x) || mentions(b, x),
    }
}

struct Entry {
    name: String,
    ty: Raw,
    /// Keep the binder named even if nothing mentions it.
    named: bool,
}

enum Segment {
    Group(Vec<String>, Raw),
    Anon(Raw),
}

/// Group consecutive named binders of equal type; unused ones become
/// anonymous.
fn segments(entries: &[Entry], body: &Raw) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let used = e.named || entries[i + 1..].iter().any(|l| mentions(&l.ty, &e.name)) || mentions(body, &e.name);
        if !used {
            out.push(Segment::Anon(e.ty.clone()));
            continue;
        }
        match out.last_mut() {
            Some(Segment::Group(names, ty)) if *ty == e.ty => names.push(e.name.clone()),
            _ => out.push(Segment::Group(vec![e.name.clone()], e.ty.clone())),
        }
    }
    out
}

fn binder(names: Vec<String>, ty: Raw) -> Binder {
    Binder {
        names: names
            .into_iter()
            .map(|n| BinderName {
                name: Some(n.into()),
                span: Span::default(),
            })
            .collect(),
        ty,
    }
}

fn pi_telescope(entries: &[Entry], body: Raw) -> Raw {
    let segs = segments(entries, &body);
    segs.into_iter().rev().fold(body, |acc, seg| match seg {
        Segment::Anon(ty) => arrow(ty, acc),
        Segment::Group(names, ty) => {
            let g = binder(names, ty);
            match acc.kind {
                RawKind::Pi(mut gs, b) => {
                    gs.insert(0, g);
                    mk(RawKind::Pi(gs, b))
                }
                kind => mk(RawKind::Pi(vec![g], Box::new(mk(kind)))),
            }
        }
    })
}

/// Right-nested Σ over the entries, ending in `Unit`.
fn sigma_telescope(entries: &[Entry]) -> Raw {
    let body = prim(Prim::Unit);
    let segs = segments(entries, &body);
    segs.into_iter().rev().fold(body, |acc, seg| match seg {
        Segment::Anon(ty) => mk(RawKind::Product(Box::new(ty), Box::new(acc))),
        Segment::Group(names, ty) => mk(RawKind::Sigma(vec![binder(names, ty)], Box::new(acc))),
    })
}

fn cell_name(c: &Cell) -> String {
    if c.dim() == 0 {
        format!("a{c}")
    } else {
        format!("x{c}")
    }
}

/// The type of the binder for cell `c`: its family applied to its faces.
fn cell_type(c: &Cell, family: &dyn Fn(usize) -> String) -> Raw {
    let args = c.proper_faces().iter().map(|f| var(&cell_name(f))).collect::<Vec<_>>();
    app(var(&family(c.dim())), args)
}

fn telescope_with(n: usize, family: &dyn Fn(usize) -> String) -> Vec<TelBinder> {
    boundary_cells(n)
        .into_iter()
        .map(|cell| TelBinder {
            name: cell_name(&cell),
            ty: cell_type(&cell, family),
            cell,
        })
        .collect()
}

/// The boundary of the `n`-simplex as a telescope over families `X0, X1, …`:
/// one binder per proper face, in dimension-then-lexicographic order.
pub fn gen_matching_telescope(n: usize) -> Vec<TelBinder> {
    telescope_with(n, &|k| format!("X{k}"))
}

fn entries(tel: Vec<TelBinder>) -> Vec<Entry> {
    tel.into_iter()
        .map(|b| Entry {
            name: b.name,
            ty: b.ty,
            named: false,
        })
        .collect()
}

struct Gen<'a> {
    plan: &'a GenPlan,
    decls: Vec<RawDecl>,
}

impl Gen<'_> {
    fn global(&self, name: &str) -> String {
        format!("{}{name}", self.plan.prefix)
    }

    fn family(&self) -> impl Fn(usize) -> String {
        let prefix = self.plan.prefix.clone();
        move |k| format!("{prefix}X{k}")
    }

    fn push(&mut self, kind: DeclKind, name: String, params: Vec<Binder>, ty: Raw, body: Option<Raw>) {
        self.decls.push(RawDecl {
            kind,
            name: name.into(),
            name_span: Span::default(),
            params,
            ty,
            body,
            span: Span::default(),
        });
    }

    fn def(&mut self, name: &str, ty: Raw, body: Raw) {
        let name = self.global(name);
        self.push(DeclKind::Def, name, Vec::new(), ty, Some(body));
    }

    /// `X{k}`'s type with the families as local names and codomain `U{i}`.
    fn family_type(k: usize, i: u32) -> Raw {
        pi_telescope(&entries(gen_matching_telescope(k)), univ(i))
    }

    fn sst(&mut self) {
        let n = self.plan.levels;
        let i = self.plan.universe;
        for k in 1..n {
            let params = (0..k)
                .map(|j| binder(vec![format!("X{j}")], Self::family_type(j, i)))
                .collect();
            let body = sigma_telescope(&entries(gen_matching_telescope(k)));
            let name = self.global(&format!("M{k}"));
            self.push(DeclKind::Def, name, params, univ(i), Some(body));
        }
        let families: Vec<Entry> = (0..n)
            .map(|k| Entry {
                name: format!("X{k}"),
                ty: Self::family_type(k, i),
                named: true,
            })
            .collect();
        self.def(&format!("SST{n}"), univ(i + 1), sigma_telescope(&families));
    }

    fn postulate_families(&mut self, upto: usize) {
        let family = self.family();
        let tys: Vec<Raw> = (0..=upto)
            .map(|k| pi_telescope(&entries(telescope_with(k, &family)), univ(0)))
            .collect();
        for (k, ty) in tys.into_iter().enumerate() {
            let name = self.global(&format!("X{k}"));
            self.push(DeclKind::Postulate, name, Vec::new(), ty, None);
        }
    }

    fn lines(&mut self) {
        let x0 = var(&self.global("X0"));
        let x1 = var(&self.global("X1"));
        let line = sigma_telescope_pair(x0.clone(), app(x1, [var("a"), var("b")]));
        self.def("Line", univ(0), line);
        let line_ty = var(&self.global("Line"));
        for (name, j) in [("src", 0), ("tgt", 1)] {
            let name = self.global(name);
            let params = vec![binder(vec!["l".into()], line_ty.clone())];
            self.push(DeclKind::Def, name, params, x0.clone(), Some(proj("l", j)));
        }
    }

    fn spine(&mut self) {
        let n = self.plan.levels;
        let x0 = var(&self.global("X0"));
        let x1 = var(&self.global("X1"));
        let mut tel: Vec<Entry> = (0..=n)
            .map(|i| Entry {
                name: format!("a{i}"),
                ty: x0.clone(),
                named: false,
            })
            .collect();
        tel.extend((1..=n).map(|j| Entry {
            name: format!("x{j}"),
            ty: app(x1.clone(), [var(&format!("a{}", j - 1)), var(&format!("a{j}"))]),
            named: true,
        }));
        self.def(&format!("Spine{n}"), univ(0), sigma_telescope(&tel));
    }

    fn literal_spine(&mut self, n: usize) {
        let x0 = var(&self.global("X0"));
        let line = var(&self.global("Line"));
        let (src, tgt) = (var(&self.global("src")), var(&self.global("tgt")));
        let mut tel: Vec<Entry> = (1..=n)
            .map(|j| Entry {
                name: format!("x{j}"),
                ty: line.clone(),
                named: true,
            })
            .collect();
        tel.extend((1..n).map(|j| Entry {
            name: format!("e{j}"),
            ty: app(
                prim(Prim::Id),
                [
                    x0.clone(),
                    app(tgt.clone(), [var(&format!("x{j}"))]),
                    app(src.clone(), [var(&format!("x{}", j + 1))]),
                ],
            ),
            named: false,
        }));
        self.def(&format!("SpineLit{n}"), univ(0), sigma_telescope(&tel));
    }

    /// `Spine_n -> SpineLit_n`: endpoints shared by a spine are equal by `refl`.
    fn spine_to_literal(&mut self) {
        let n = self.plan.levels;
        let point = |i: usize| proj("s", i);
        let mut items: Vec<Raw> = (1..=n)
            .map(|j| tuple(vec![point(j - 1), point(j), proj("s", n + j)]))
            .collect();
        items.extend((1..n).map(|j| app(prim(Prim::Refl(Layer::Fib)), [point(j)])));
        items.push(prim(Prim::Star));
        let ty = arrow(
            var(&self.global(&format!("Spine{n}"))),
            var(&self.global(&format!("SpineLit{n}"))),
        );
        self.def(&format!("spine_to_lit{n}"), ty, lam(&["s"], tuple(items)));
    }

    /// `Simp_n`, its lines, the Segal map `phi_n` and the Segal condition.
    fn segal(&mut self, n: usize) {
        let family = self.family();
        let cells = boundary_cells(n);
        let top = Cell::new((0..=n).collect()).expect("simplex");
        let mut tel = entries(telescope_with(n, &family));
        tel.push(Entry {
            name: "top".into(),
            ty: cell_type(&top, &family),
            named: false,
        });
        let simp = self.global(&format!("Simp{n}"));
        self.def(&format!("Simp{n}"), univ(0), sigma_telescope(&tel));

        let index = |verts: &[usize]| cells.iter().position(|c| c.vertices() == verts).expect("boundary cell");
        let line_ty = var(&self.global("Line"));
        for i in 0..n {
            let body = tuple(vec![
                proj("s", index(&[i])),
                proj("s", index(&[i + 1])),
                proj("s", index(&[i, i + 1])),
            ]);
            let ty = arrow(var(&simp), line_ty.clone());
            self.def(&format!("line{n}_{i}"), ty, lam(&["s"], body));
        }
        let mut items: Vec<Raw> = (0..n)
            .map(|i| app(var(&self.global(&format!("line{n}_{i}"))), [var("s")]))
            .collect();
        items.extend((1..n).map(|i| app(prim(Prim::Refl(Layer::Fib)), [proj("s", index(&[i]))])));
        items.push(prim(Prim::Star));
        let lit = var(&self.global(&format!("SpineLit{n}")));
        let phi = self.global(&format!("phi{n}"));
        self.def(
            &format!("phi{n}"),
            arrow(var(&simp), lit.clone()),
            lam(&["s"], tuple(items)),
        );
        let statement = app(var("isEquiv"), [var(&simp), lit, var(&phi)]);
        self.def(&format!("Segal{n}"), univ(0), statement);
    }
}

/// `(a b : A) × B a b` without a trailing `Unit`.
fn sigma_telescope_pair(a: Raw, b: Raw) -> Raw {
    let g = binder(vec!["a".into(), "b".into()], a);
    mk(RawKind::Sigma(vec![g], Box::new(b)))
}

/// Emit the plan as surface source.
pub fn generate(plan: &GenPlan) -> Result<String, GenError> {
    let n = plan.levels;
    if n > plan.cap {
        return Err(GenError::LevelCapExceeded {
            levels: n,
            cap: plan.cap,
        });
    }
    for &artifact in &plan.emit {
        if n < artifact.min_levels() {
            return Err(GenError::TooFewLevels {
                artifact,
                levels: n,
                min: artifact.min_levels(),
            });
        }
    }
    let mut g = Gen {
        plan,
        decls: Vec::new(),
    };
    let wants = |a| plan.emit.contains(&a);
    if wants(Artifact::Sst) {
        g.sst();
    }
    let spine = wants(Artifact::Spine) || (wants(Artifact::Sst) && plan.literal_spine && n >= 1);
    let segal = wants(Artifact::Segal);
    if spine || segal {
        g.postulate_families(if segal { n } else { 1 });
    }
    let literal = segal || (spine && plan.literal_spine);
    if literal {
        g.lines();
    }
    if spine {
        g.spine();
    }
    let mut literal_levels: BTreeSet<usize> = BTreeSet::new();
    if segal {
        literal_levels.extend(2..=n);
    }
    if spine && plan.literal_spine {
        literal_levels.insert(n);
    }
    for &k in &literal_levels {
        g.literal_spine(k);
    }
    if spine && plan.literal_spine {
        g.spine_to_literal();
    }
    if segal {
        for k in 2..=n {
            g.segal(k);
        }
    }
    let kinds: Vec<String> = plan.emit.iter().map(|a| a.to_string()).collect();
    let mut out = format!("-- generated: {} at {n} levels\n", kinds.join(", "));
    if segal {
        out.push_str("-- needs isEquiv from equiv.tt\n");
    }
    for d in &g.decls {
        out.push('\n');
        out.push_str(&print_decl(d));
        out.push('\n');
    }
    Ok(out)
}

pub fn gen_sst(n: usize) -> Result<String, GenError> {
    generate(&GenPlan::new(n, Artifact::Sst))
}

pub fn gen_spine(n: usize, literal: bool) -> Result<String, GenError> {
    let mut plan = GenPlan::new(n, Artifact::Spine);
    plan.literal_spine = literal;
    generate(&plan)
}

pub fn gen_segal_scaffold(n: usize) -> Result<String, GenError> {
    generate(&GenPlan::new(n, Artifact::Segal))
}
