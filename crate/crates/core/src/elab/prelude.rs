//! Built-in axioms, stated in surface syntax.

use crate::parse::parse_file;
use crate::signature::{EntryKind, Signature};
use crate::syntax::Universes;

use super::elaborate_decl;

/// Surface source of the axioms for a universe configuration.
pub fn source(u: Universes) -> String {
    if u.count < 2 {
        return String::new();
    }
    let top = u.count - 2;
    let mut src = format!(
        "postulate uip : (A : US{top}) (a b : A) (p q : Eq A a b) -> Eq (Eq A a b) p q\n\n\
         postulate funextS : (A : US{top}) (B : A -> US{top}) (f g : (x : A) -> B x)\n  \
         -> ((x : A) -> Eq (B x) (f x) (g x)) -> Eq ((x : A) -> B x) f g\n"
    );
    for i in 0..=top {
        src.push('\n');
        src.push_str(&ua_source(i));
    }
    src
}

/// `ua{i}`: the canonical map from paths in `U{i}` to equivalences is an
/// equivalence. Equivalences are bi-invertible maps with pointwise
/// homotopies.
fn ua_source(i: u32) -> String {
    let equiv = |y: &str| {
        format!(
            "((f : A -> {y}) × ((g : {y} -> A) × ((x : A) -> Id A (g (f x)) x)) \
             × ((h : {y} -> A) × ((z : {y}) -> Id {y} (f (h z)) z)))"
        )
    };
    let path = format!("(Id U{i} A B)");
    let id_equiv = "(\\x. x, (\\x. x, \\x. refl x), (\\x. x, \\x. refl x))";
    let coe = format!(
        "((\\p. J (\\C _. {}) {id_equiv} A B p) : {path} -> {})",
        equiv("C"),
        equiv("B")
    );
    let eb = equiv("B");
    format!(
        "postulate ua{i} : (A B : U{i}) ->\n  \
         ((g : {eb} -> {path}) × ((q : {path}) -> Id {path} (g ({coe} q)) q))\n  \
         × ((h : {eb} -> {path}) × ((e : {eb}) -> Id {eb} ({coe} (h e)) e))\n"
    )
}

pub(crate) fn with_axioms(u: Universes) -> Signature {
    let mut sig = Signature::empty(u);
    let src = source(u);
    let decls = parse_file(&src).unwrap_or_else(|e| panic!("built-in axioms do not parse: {e}"));
    for d in &decls {
        if let Err(e) = elaborate_decl(&mut sig, d, EntryKind::Axiom) {
            panic!("built-in axiom `{}` is ill-typed: {}", d.name, e.message);
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::builtin_axiom_names;

    #[test]
    fn axioms_for_each_universe_count() {
        for count in 1..=5 {
            for collapse in [false, true] {
                let u = Universes::new(count, collapse).unwrap();
                let sig = Signature::new(u);
                let names: Vec<String> = sig.entries().iter().map(|e| e.name.to_string()).collect();
                assert_eq!(names, builtin_axiom_names(u));
                assert!(sig.entries().iter().all(|e| e.kind == EntryKind::Axiom));
            }
        }
        let names = builtin_axiom_names(Universes::default());
        assert_eq!(names, ["uip", "funextS", "ua0", "ua1"]);
    }
}
