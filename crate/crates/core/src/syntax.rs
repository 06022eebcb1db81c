//! Core syntax of the two-level calculus.
//!
//! Terms use de Bruijn indices. Every binding constructor has a fixed
//! binding arity (see [`Term::binding_arities`]); there are no telescopic
//! binders and no names. Types are terms (Russell-style universes), and
//! the fibrant and strict layers share Π, Σ and the unit type while every
//! other type former is tagged with the [`Layer`] it belongs to.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub type Name = Arc<str>;
pub type RcTerm = Arc<Term>;

/// Which fragment of the theory a type former lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Fib,
    Strict,
}

impl Layer {
    pub fn is_fibrant(self) -> bool {
        self == Layer::Fib
    }

    /// Suffix used by the core printer (`NatF`, `NatS`, ...).
    pub fn suffix(self) -> &'static str {
        match self {
            Layer::Fib => "F",
            Layer::Strict => "S",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LevelError {
    #[error("universe level {value} is out of range (only {count} universes per layer are configured)")]
    OutOfRange { value: u32, count: u32 },
    #[error("universe count must be at least 1")]
    NoUniverses,
}

/// A universe level, always below the configured universe count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level(u32);

impl Level {
    pub const ZERO: Level = Level(0);

    pub fn new(value: u32, count: u32) -> Result<Level, LevelError> {
        if value < count {
            Ok(Level(value))
        } else {
            Err(LevelError::OutOfRange { value, count })
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fibrancy layer paired with a universe level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sort {
    pub layer: Layer,
    pub level: Level,
}

impl Sort {
    pub fn fib(level: Level) -> Sort {
        Sort {
            layer: Layer::Fib,
            level,
        }
    }

    pub fn strict(level: Level) -> Sort {
        Sort {
            layer: Layer::Strict,
            level,
        }
    }

    pub fn is_fibrant(self) -> bool {
        self.layer.is_fibrant()
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            Layer::Fib => write!(f, "U{}", self.level),
            Layer::Strict => write!(f, "US{}", self.level),
        }
    }
}

/// `got ≤ want` in the level-preserving subsort order:
/// `Fib(i) ≤ Fib(j)` and `Strict(i) ≤ Strict(j)` for `i ≤ j`, and
/// `Fib(i) ≤ Strict(i)`.
pub fn subsume(got: Sort, want: Sort) -> bool {
    Universes::default().le(got, want)
}

/// Configuration of the two universe hierarchies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Universes {
    /// Number of universes in each layer (`U0..U{count-1}`).
    pub count: u32,
    /// Place every fibrant universe below the first strict one
    /// (`Fib(i) ≤ Strict(0)`) instead of the level-preserving order.
    pub collapse: bool,
}

impl Default for Universes {
    fn default() -> Self {
        Universes {
            count: 3,
            collapse: false,
        }
    }
}

impl Universes {
    pub fn new(count: u32, collapse: bool) -> Result<Universes, LevelError> {
        if count == 0 {
            return Err(LevelError::NoUniverses);
        }
        Ok(Universes { count, collapse })
    }

    pub fn level(&self, value: u32) -> Result<Level, LevelError> {
        Level::new(value, self.count)
    }

    pub fn le(&self, got: Sort, want: Sort) -> bool {
        match (got.layer, want.layer) {
            (Layer::Fib, Layer::Fib) | (Layer::Strict, Layer::Strict) => got.level <= want.level,
            (Layer::Fib, Layer::Strict) => self.collapse || got.level <= want.level,
            (Layer::Strict, Layer::Fib) => false,
        }
    }

    /// The sort a fibrant type occupies once it is regarded as strict.
    pub fn strict_part(&self, sort: Sort) -> Sort {
        match sort.layer {
            Layer::Strict => sort,
            Layer::Fib if self.collapse => Sort::strict(Level::ZERO),
            Layer::Fib => Sort::strict(sort.level),
        }
    }

    /// Least upper bound in the subsort order.
    pub fn join(&self, a: Sort, b: Sort) -> Sort {
        match (a.layer, b.layer) {
            (Layer::Fib, Layer::Fib) => Sort::fib(a.level.max(b.level)),
            _ => {
                let (a, b) = (self.strict_part(a), self.strict_part(b));
                Sort::strict(a.level.max(b.level))
            }
        }
    }

    /// The sort of the universe `Univ(sort)`.
    pub fn succ(&self, sort: Sort) -> Result<Sort, LevelError> {
        let level = self.level(sort.level.value() + 1)?;
        Ok(Sort {
            layer: sort.layer,
            level,
        })
    }
}

/// Core terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Const(Name),
    Univ(Sort),

    Pi(RcTerm, RcTerm),
    Lam(RcTerm),
    App(RcTerm, RcTerm),

    Sigma(RcTerm, RcTerm),
    Pair(RcTerm, RcTerm),
    Fst(RcTerm),
    Snd(RcTerm),

    Unit,
    Star,

    /// `IdF` / `EqS`: type, left endpoint, right endpoint.
    Id(Layer, RcTerm, RcTerm, RcTerm),
    /// `ReflF` / `ReflS`: type, point.
    Refl(Layer, RcTerm, RcTerm),
    /// Based path induction. The motive binds the right endpoint and the proof.
    J {
        layer: Layer,
        motive: RcTerm,
        base: RcTerm,
        lhs: RcTerm,
        rhs: RcTerm,
        proof: RcTerm,
    },

    Nat(Layer),
    Zero(Layer),
    Suc(Layer, RcTerm),
    /// The motive binds the scrutinee; the step binds the predecessor and
    /// the recursive result.
    NatElim {
        layer: Layer,
        motive: RcTerm,
        zero: RcTerm,
        succ: RcTerm,
        target: RcTerm,
    },

    Sum(Layer, RcTerm, RcTerm),
    Inl(Layer, RcTerm),
    Inr(Layer, RcTerm),
    SumElim {
        layer: Layer,
        motive: RcTerm,
        left: RcTerm,
        right: RcTerm,
        target: RcTerm,
    },

    Empty(Layer),
    EmptyElim {
        layer: Layer,
        motive: RcTerm,
        target: RcTerm,
    },
}

impl Term {
    pub fn rc(self) -> RcTerm {
        Arc::new(self)
    }

    pub fn pi(dom: Term, cod: Term) -> Term {
        Term::Pi(dom.rc(), cod.rc())
    }

    pub fn lam(body: Term) -> Term {
        Term::Lam(body.rc())
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(f.rc(), a.rc())
    }

    pub fn sigma(fst: Term, snd: Term) -> Term {
        Term::Sigma(fst.rc(), snd.rc())
    }

    pub fn pair(fst: Term, snd: Term) -> Term {
        Term::Pair(fst.rc(), snd.rc())
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(Name::from(name))
    }

    /// Children paired with the number of variables each one binds.
    pub fn children(&self) -> Vec<(&RcTerm, usize)> {
        match self {
            Term::Var(_)
            | Term::Const(_)
            | Term::Univ(_)
            | Term::Unit
            | Term::Star
            | Term::Nat(_)
            | Term::Zero(_)
            | Term::Empty(_) => vec![],
            Term::Pi(a, b) | Term::Sigma(a, b) => vec![(a, 0), (b, 1)],
            Term::Lam(b) => vec![(b, 1)],
            Term::App(a, b) | Term::Pair(a, b) | Term::Refl(_, a, b) | Term::Sum(_, a, b) => {
                vec![(a, 0), (b, 0)]
            }
            Term::Fst(a) | Term::Snd(a) | Term::Suc(_, a) | Term::Inl(_, a) | Term::Inr(_, a) => {
                vec![(a, 0)]
            }
            Term::Id(_, a, b, c) => vec![(a, 0), (b, 0), (c, 0)],
            Term::J {
                motive,
                base,
                lhs,
                rhs,
                proof,
                ..
            } => vec![(motive, 2), (base, 0), (lhs, 0), (rhs, 0), (proof, 0)],
            Term::NatElim {
                motive,
                zero,
                succ,
                target,
                ..
            } => vec![(motive, 1), (zero, 0), (succ, 2), (target, 0)],
            Term::SumElim {
                motive,
                left,
                right,
                target,
                ..
            } => vec![(motive, 1), (left, 1), (right, 1), (target, 0)],
            Term::EmptyElim { motive, target, .. } => vec![(motive, 1), (target, 0)],
        }
    }

    /// Rebuild this node with its children replaced (same order as
    /// [`Term::children`]).
    fn with_children(&self, mut new: Vec<RcTerm>) -> Term {
        let mut next = || new.remove(0);
        match self {
            Term::Var(_)
            | Term::Const(_)
            | Term::Univ(_)
            | Term::Unit
            | Term::Star
            | Term::Nat(_)
            | Term::Zero(_)
            | Term::Empty(_) => self.clone(),
            Term::Pi(..) => Term::Pi(next(), next()),
            Term::Sigma(..) => Term::Sigma(next(), next()),
            Term::Lam(_) => Term::Lam(next()),
            Term::App(..) => Term::App(next(), next()),
            Term::Pair(..) => Term::Pair(next(), next()),
            Term::Refl(l, ..) => Term::Refl(*l, next(), next()),
            Term::Sum(l, ..) => Term::Sum(*l, next(), next()),
            Term::Fst(_) => Term::Fst(next()),
            Term::Snd(_) => Term::Snd(next()),
            Term::Suc(l, _) => Term::Suc(*l, next()),
            Term::Inl(l, _) => Term::Inl(*l, next()),
            Term::Inr(l, _) => Term::Inr(*l, next()),
            Term::Id(l, ..) => Term::Id(*l, next(), next(), next()),
            Term::J { layer, .. } => Term::J {
                layer: *layer,
                motive: next(),
                base: next(),
                lhs: next(),
                rhs: next(),
                proof: next(),
            },
            Term::NatElim { layer, .. } => Term::NatElim {
                layer: *layer,
                motive: next(),
                zero: next(),
                succ: next(),
                target: next(),
            },
            Term::SumElim { layer, .. } => Term::SumElim {
                layer: *layer,
                motive: next(),
                left: next(),
                right: next(),
                target: next(),
            },
            Term::EmptyElim { layer, .. } => Term::EmptyElim {
                layer: *layer,
                motive: next(),
                target: next(),
            },
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(|(c, _)| c.size()).sum::<usize>()
    }

    /// Is every free index below `depth`?
    pub fn is_closed_at(&self, depth: usize) -> bool {
        match self {
            Term::Var(i) => *i < depth,
            _ => self
                .children()
                .into_iter()
                .all(|(c, binds)| c.is_closed_at(depth + binds)),
        }
    }

    /// Does `Var(index)` occur free?
    pub fn mentions(&self, index: usize) -> bool {
        match self {
            Term::Var(i) => *i == index,
            _ => self.children().into_iter().any(|(c, binds)| c.mentions(index + binds)),
        }
    }
}

/// Rewrite free variables. `f` receives the index and the number of binders
/// crossed so far.
fn map_vars(t: &Term, depth: usize, f: &mut impl FnMut(usize, usize) -> Term) -> Term {
    match t {
        Term::Var(i) => f(*i, depth),
        _ => {
            let children = t.children();
            if children.is_empty() {
                return t.clone();
            }
            let new = children
                .into_iter()
                .map(|(c, binds)| map_vars(c, depth + binds, f).rc())
                .collect();
            t.with_children(new)
        }
    }
}

/// Move every free index `≥ cutoff` by `amount`.
///
/// Panics if an index would become negative; that only happens when the
/// caller has a scoping bug.
pub fn shift(t: &Term, cutoff: usize, amount: isize) -> Term {
    if amount == 0 {
        return t.clone();
    }
    map_vars(t, 0, &mut |i, depth| {
        if i >= cutoff + depth {
            let moved = i as isize + amount;
            assert!(moved >= 0, "shift produced a negative de Bruijn index");
            Term::Var(moved as usize)
        } else {
            Term::Var(i)
        }
    })
}

/// Replace `Var(index)` by `s`, decrementing the free indices above it.
pub fn subst(t: &Term, index: usize, s: &Term) -> Term {
    map_vars(t, 0, &mut |i, depth| {
        if i == index + depth {
            shift(s, 0, depth as isize)
        } else if i > index + depth {
            Term::Var(i - 1)
        } else {
            Term::Var(i)
        }
    })
}

fn print_layered(f: &mut fmt::Formatter<'_>, base: &str, layer: Layer) -> fmt::Result {
    write!(f, "{}{}", base, layer.suffix())
}

/// The canonical core printout: fully parenthesised, positional variables
/// printed as `#i`. Used for determinism checks and debugging.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "#{i}"),
            Term::Const(n) => write!(f, "{n}"),
            Term::Univ(s) => match s.layer {
                Layer::Fib => write!(f, "U{}", s.level),
                Layer::Strict => write!(f, "US{}", s.level),
            },
            Term::Unit => write!(f, "Unit"),
            Term::Star => write!(f, "Star"),
            Term::Nat(l) => print_layered(f, "Nat", *l),
            Term::Zero(l) => print_layered(f, "Zero", *l),
            Term::Empty(l) => print_layered(f, "Empty", *l),
            _ => {
                write!(f, "(")?;
                match self {
                    Term::Pi(..) => write!(f, "Pi")?,
                    Term::Lam(..) => write!(f, "Lam")?,
                    Term::App(..) => write!(f, "App")?,
                    Term::Sigma(..) => write!(f, "Sigma")?,
                    Term::Pair(..) => write!(f, "Pair")?,
                    Term::Fst(..) => write!(f, "Fst")?,
                    Term::Snd(..) => write!(f, "Snd")?,
                    Term::Id(Layer::Fib, ..) => write!(f, "IdF")?,
                    Term::Id(Layer::Strict, ..) => write!(f, "EqS")?,
                    Term::Refl(l, ..) => print_layered(f, "Refl", *l)?,
                    Term::J { layer, .. } => print_layered(f, "J", *layer)?,
                    Term::Suc(l, _) => print_layered(f, "Suc", *l)?,
                    Term::NatElim { layer, .. } => print_layered(f, "NatElim", *layer)?,
                    Term::Sum(l, ..) => print_layered(f, "Sum", *l)?,
                    Term::Inl(l, _) => print_layered(f, "Inl", *l)?,
                    Term::Inr(l, _) => print_layered(f, "Inr", *l)?,
                    Term::SumElim { layer, .. } => print_layered(f, "SumElim", *layer)?,
                    Term::EmptyElim { layer, .. } => print_layered(f, "EmptyElim", *layer)?,
                    _ => unreachable!(),
                }
                for (child, _) in self.children() {
                    write!(f, " {child}")?;
                }
                write!(f, ")")
            }
        }
    }
}
