use surfcover_core::pipeline::obstruction_screen;
use surfcover_core::{
    group_order, parse_word, rabin_emit, reduction_demo, render_word, Alphabet, CyclicWord, EnumerationStatus,
    Presentation, SurfacePresentation, Verdict,
};

fn h(gens: &[&str], rels: &[&str]) -> Presentation {
    let a = Alphabet::new(gens.iter().copied()).unwrap();
    let rels = rels.iter().map(|r| parse_word(r, &a).unwrap()).collect();
    Presentation::new(a, rels).unwrap()
}

fn samples() -> Vec<(Presentation, &'static str)> {
    vec![(h(&["h"], &["h"]), "h"), (h(&["h"], &["h^2"]), "h^2"), (h(&["h1", "h2"], &["h1", "h2"]), "h1 h2")]
}

#[test]
fn trivial_words_collapse() {
    let s = SurfacePresentation::new(2).unwrap();
    let comm = CyclicWord::new(&parse_word("[a1,b1]", s.alphabet()).unwrap());
    for (hp, w) in samples() {
        let w = parse_word(w, hp.alphabet()).unwrap();
        let t = rabin_emit(&hp, &w, 2).unwrap();
        assert_eq!(t.n, 15);
        assert_eq!(group_order(&t.d_w, 1_000_000).unwrap(), EnumerationStatus::Complete { index: 1 });
        let (_, v) = reduction_demo(&hp, &w, 2, 1_000_000, 4).unwrap();
        match v {
            Verdict::TrivialCover { witness, .. } => assert_eq!(witness, Some(comm.clone())),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn free_group_is_not_decided() {
    let hp = h(&["h"], &[]);
    let w = parse_word("h", hp.alphabet()).unwrap();
    let (t, v) = reduction_demo(&hp, &w, 2, 50_000, 4).unwrap();
    assert!(!v.is_trivial_cover());
    assert!(!v.status().is_complete());
    assert!(obstruction_screen(&t).unwrap().passed());
}

#[test]
fn layers_partition_relators() {
    let hp = h(&["h"], &["h^3"]);
    let t = rabin_emit(&hp, &parse_word("h", hp.alphabet()).unwrap(), 2).unwrap();
    let mut next = 0;
    for (_, r) in &t.layers {
        assert_eq!(r.start, next);
        next = r.end;
    }
    assert_eq!(next, t.d_w.relators().len());
    let names: Vec<&str> = t.layers.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names.first(), Some(&"U"));
    assert_eq!(names.last(), Some(&"D_w"));
    assert_eq!(t.k_chain.len(), 8);
}

#[test]
fn realization_sends_generators_to_squares() {
    let hp = h(&["h"], &[]);
    let t = rabin_emit(&hp, &parse_word("h", hp.alphabet()).unwrap(), 2).unwrap();
    let s = SurfacePresentation::new(2).unwrap();
    assert_eq!(render_word(t.realization.image(0), s.alphabet()), "a1^2");
    assert!(t.realization.images().iter().all(|w| w.len() % 2 == 0));
    // the final relator defines g15 through [ψ(w), x]
    let last = t.d_w.relators().last().unwrap();
    assert!(last.letters().iter().any(|l| l.gen() == 14));
}
