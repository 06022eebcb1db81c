use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tt2::driver::Session;
use tt2::elab::Code;
use tt2::stdlib::{corpus, run_bundled, source, Expect};
use tt2::syntax::Universes;

#[test]
fn every_file_meets_its_expectation() {
    let outcomes = run_bundled(Universes::default());
    let bad: Vec<_> = outcomes.iter().filter(|o| !o.ok).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    let m = corpus();
    assert!(m.accepted().count() >= 10);
    assert!(m.rejected().count() >= 8);
}

#[test]
fn each_fibrant_eliminator_has_a_guard_file() {
    let m = corpus();
    for name in [
        "jf_strict_motive",
        "natelimf_strict_motive",
        "sumelimf_strict_motive",
        "exfalsof_strict_motive",
    ] {
        let e = m.entries.iter().find(|e| e.file.contains(name)).unwrap();
        assert_eq!(e.expect, Expect::Reject(Code::Fibrancy));
    }
}

fn outcomes_in_one_session(files: &[&str]) -> Vec<(String, Vec<Code>)> {
    let mut s = Session::new(Universes::default());
    files
        .iter()
        .map(|f| {
            let seen = s.reports().len();
            s.check_source(f, source(f).unwrap());
            (f.to_string(), s.reports()[seen..].iter().map(|r| r.code()).collect())
        })
        .collect()
}

#[test]
fn negative_outcomes_do_not_depend_on_order() {
    let m = corpus();
    let files: Vec<&str> = m.rejected().map(|e| e.file.as_str()).collect();
    let mut reference = outcomes_in_one_session(&files);
    reference.sort_by(|a, b| a.0.cmp(&b.0));
    for e in m.rejected() {
        let Expect::Reject(code) = e.expect else { unreachable!() };
        let got = &reference.iter().find(|(f, _)| f == &e.file).unwrap().1;
        assert_eq!(got, &vec![code], "{}", e.file);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let mut shuffled = files.clone();
        shuffled.shuffle(&mut rng);
        let mut got = outcomes_in_one_session(&shuffled);
        got.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(got, reference);
    }
}

#[test]
fn definitional_facts_about_fin() {
    let mut s = Session::new(Universes::default());
    assert_eq!(s.check_source("fin.tt", source("fin.tt").unwrap()), 0);
    let extra = "def fin0_empty : Eq US1 (FinS zero) EmptyS := reflS EmptyS\n\
                 def fin2 : Eq US1 (FinS (suc (suc zero))) (SumS Unit (SumS Unit EmptyS)) := reflS (FinS (suc (suc zero)))\n\
                 def finf1 : Eq U1 (FinF (suc zero)) (Sum Unit Empty) := reflS (Sum Unit Empty)\n";
    assert_eq!(s.check_source("extra.tt", extra), 0, "{:?}", s.reports());
}

#[test]
fn library_is_stable_under_more_universes() {
    let outcomes = run_bundled(Universes::new(5, false).unwrap());
    assert!(outcomes.iter().all(|o| o.ok));
}

#[test]
fn perturbed_proofs_are_rejected() {
    let mut s = Session::new(Universes::default());
    for f in ["base.tt", "fin.tt", "iso.tt", "equiv.tt", "cocylinder.tt"] {
        assert_eq!(s.check_source(f, source(f).unwrap()), 0, "{f}");
    }
    // p ∘ i is f, not the identity on A.
    let wrong = "def cocyl_wrong (A : U0) (f : A -> A) : Eq (A -> A) (\\a. cocyl_p A A f (cocyl_i A A f a)) (\\a. a) := reflS f\n";
    assert_eq!(s.check_source("wrong.tt", wrong), 1);
    assert_eq!(s.reports()[0].code(), Code::Mismatch);
}
