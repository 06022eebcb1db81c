//! Normalization by evaluation and conversion checking.

mod convert;
mod eval;
mod quote;
mod value;

pub use convert::{Conv, SortError};
pub use eval::{apply, apply_elim, do_fst, do_snd, eval};
pub use quote::{quote, quote_closure};
pub use value::{Closure, Elim, Env, Head, Val, Value};

use crate::signature::{Context, Signature};
use crate::syntax::Term;

/// β-normal form of `t` in `ctx`, with definitions unfolded.
pub fn nf(sig: &Signature, ctx: &Context, t: &Term) -> Term {
    let v = eval(sig, ctx.env(), t);
    quote(sig, ctx.len(), &v)
}

/// Definitional equality of `a` and `b` at type `ty` in `ctx`.
pub fn convert(sig: &Signature, ctx: &Context, a: &Val, b: &Val, ty: &Val) -> bool {
    Conv::new(sig, ctx.types()).eq(a, b, ty)
}
