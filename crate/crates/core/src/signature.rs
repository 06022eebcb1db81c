//! Top-level signatures and local contexts.

use std::collections::HashMap;

use thiserror::Error;

use crate::conv::{eval, Env, Val, Value};
use crate::syntax::{Name, RcTerm, Term, Universes};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryKind {
    Definition,
    Postulate,
    /// Built-in postulates installed by [`Signature::new`].
    Axiom,
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: Name,
    pub ty: RcTerm,
    pub body: Option<RcTerm>,
    pub kind: EntryKind,
    pub(crate) ty_value: Val,
    pub(crate) value: Option<Val>,
}

impl Entry {
    pub fn ty_value(&self) -> &Val {
        &self.ty_value
    }

    pub fn value(&self) -> Option<&Val> {
        self.value.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is already defined")]
pub struct DuplicateName(pub Name);

/// Ordered global definitions, postulates and axioms.
///
/// Entries may only refer to earlier entries. Definition bodies are
/// evaluated once on insertion and unfolded on every use.
#[derive(Clone, Debug)]
pub struct Signature {
    universes: Universes,
    entries: Vec<Entry>,
    index: HashMap<Name, usize>,
}

/// Names of the built-in axioms for a universe configuration.
pub fn builtin_axiom_names(universes: Universes) -> Vec<String> {
    let mut names = Vec::new();
    if universes.count >= 2 {
        names.push("uip".to_string());
        names.push("funextS".to_string());
        for i in 0..universes.count - 1 {
            names.push(format!("ua{i}"));
        }
    }
    names
}

impl Signature {
    /// A signature without any built-in axioms.
    pub fn empty(universes: Universes) -> Signature {
        Signature {
            universes,
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// A signature holding the built-in axioms `uip`, `funextS` and one
    /// univalence axiom `ua{i}` per fibrant universe that has a type.
    pub fn new(universes: Universes) -> Signature {
        crate::elab::prelude::with_axioms(universes)
    }

    pub fn universes(&self) -> Universes {
        self.universes
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Option<&Entry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    pub fn count(&self, kind: EntryKind) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }

    /// Add an entry whose type and body have already been checked.
    pub fn insert(&mut self, name: Name, ty: Term, body: Option<Term>, kind: EntryKind) -> Result<(), DuplicateName> {
        if self.index.contains_key(&name) {
            return Err(DuplicateName(name));
        }
        debug_assert!(ty.is_closed_at(0));
        let ty_value = eval(self, &Vec::new(), &ty);
        let value = body.as_ref().map(|b| eval(self, &Vec::new(), b));
        self.index.insert(name.clone(), self.entries.len());
        self.entries.push(Entry {
            name,
            ty: ty.rc(),
            body: body.map(Term::rc),
            kind,
            ty_value,
            value,
        });
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Binding {
    name: Option<Name>,
    ty: RcTerm,
    ty_value: Val,
}

/// A local telescope. Each type is scoped over the bindings before it.
#[derive(Clone, Debug, Default)]
pub struct Context {
    bindings: Vec<Binding>,
    env: Env,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Extend with a binder; returns the fresh variable.
    pub fn bind(&mut self, name: Option<Name>, ty: Term, ty_value: Val) -> Val {
        let var = Value::var(self.bindings.len());
        self.bindings.push(Binding {
            name,
            ty: ty.rc(),
            ty_value,
        });
        self.env.push(var.clone());
        var
    }

    pub fn pop(&mut self) {
        self.bindings.pop();
        self.env.pop();
    }

    /// Truncate back to `len` bindings.
    pub fn truncate(&mut self, len: usize) {
        self.bindings.truncate(len);
        self.env.truncate(len);
    }

    /// The identity environment: every variable maps to itself.
    pub fn env(&self) -> &Env {
        &self.env
    }

    pub fn types(&self) -> Vec<Val> {
        self.bindings.iter().map(|b| b.ty_value.clone()).collect()
    }

    /// Innermost binding of `name`, as (de Bruijn index, type).
    pub fn lookup(&self, name: &str) -> Option<(usize, &Val)> {
        self.bindings
            .iter()
            .rev()
            .enumerate()
            .find(|(_, b)| b.name.as_deref() == Some(name))
            .map(|(i, b)| (i, &b.ty_value))
    }

    /// Type of the variable with de Bruijn index `index`.
    pub fn type_of_index(&self, index: usize) -> &Val {
        &self.bindings[self.bindings.len() - 1 - index].ty_value
    }

    pub fn names(&self) -> Vec<Option<Name>> {
        self.bindings.iter().map(|b| b.name.clone()).collect()
    }

    /// The telescope as core types.
    pub fn telescope(&self) -> Vec<(Option<Name>, RcTerm)> {
        self.bindings.iter().map(|b| (b.name.clone(), b.ty.clone())).collect()
    }

    /// Every telescope type is scope-closed over its prefix.
    pub fn is_well_scoped(&self) -> bool {
        self.bindings.iter().enumerate().all(|(i, b)| b.ty.is_closed_at(i))
    }
}
