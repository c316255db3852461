use proptest::prelude::*;
use surfcover_core::simple::words::partitions;
use surfcover_core::{
    abelianize, compose_mod2, corollary1_cover, lemma1_normal_generators, mod2_simple_representatives, mod_m_cover,
    parse_word, todd_coxeter, CoverSpec, DeckPresentation, Detector, Letter, Presentation, SurfacePresentation,
    Word, Alphabet,
};

fn s2() -> SurfacePresentation {
    SurfacePresentation::new(2).unwrap()
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..8, 0..=max).prop_map(|v| Word::from_letters(v.into_iter().map(Letter::from_index)))
}

fn covers() -> Vec<CoverSpec> {
    let s = s2();
    vec![mod_m_cover(&s, 2).unwrap(), mod_m_cover(&s, 3).unwrap(), compose_mod2(&s).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn membership_is_normal(w in word(14), g in 0usize..8) {
        let x = Word::letter(Letter::from_index(g));
        for c in covers() {
            prop_assert_eq!(c.member(&w.conjugate_by(&x)).unwrap(), c.member(&w).unwrap());
        }
    }

    #[test]
    fn membership_respects_relator(w in word(14), k in 0usize..15) {
        let s = s2();
        let k = k % (w.len() + 1);
        let (l, r) = w.letters().split_at(k);
        let v = Word::from_letters(l.iter().chain(s.relator().letters()).chain(r).copied());
        for c in covers() {
            prop_assert_eq!(c.member(&v).unwrap(), c.member(&w).unwrap());
        }
    }

    #[test]
    fn subgroup_closed(u in word(10), v in word(10)) {
        let c = compose_mod2(&s2()).unwrap();
        // squares of squares lie in the second level
        let (u4, v4) = (u.pow(4), v.pow(4));
        prop_assert!(c.member(&u4).unwrap());
        prop_assert!(c.member(&(&u4 * &v4)).unwrap());
    }

    #[test]
    fn rewrite_round_trips(w in word(12)) {
        let c = mod_m_cover(&s2(), 2).unwrap();
        if c.member(&w).unwrap() {
            let y = c.schreier_rewrite(&w).unwrap();
            prop_assert_eq!(c.expand(&y).unwrap(), w);
        }
    }
}

#[test]
fn cover_numbers() {
    let s = s2();
    let c = mod_m_cover(&s, 2).unwrap();
    assert_eq!(c.deck_order(), Some(16));
    assert_eq!(c.cover_genus(), Some(17));
    assert_eq!(c.schreier_generators().unwrap().len(), 49);
    let cc = compose_mod2(&s).unwrap();
    assert_eq!(cc.h1_dimension_mod2(), Some(34));
    assert_eq!(cc.deck_order(), Some(16 << 34));
    assert_eq!(cc.descriptor(), "mod2^2 g=2");
    assert_eq!(mod_m_cover(&s, 3).unwrap().descriptor(), "mod3 g=2");
}

#[test]
fn simple_members_are_separating() {
    // in the mod-2 cover, every simple word of length <= 6 is null-homologous
    let s = s2();
    let c = mod_m_cover(&s, 2).unwrap();
    let det = Detector::new(&s);
    let mut hits = 0;
    for p in partitions(4, 6) {
        p.for_each(4, &mut |w| {
            if c.member_letters(w) && det.is_simple(w) {
                let w = Word::from_letters(w.iter().copied());
                assert!(abelianize(&w, &s).unwrap().is_zero(), "{w:?}");
                hits += 1;
            }
        });
    }
    assert!(hits > 0);
}

#[test]
fn mod2_normal_closure_has_index_16() {
    let s = s2();
    let d = DeckPresentation::mod2(&s).unwrap();
    let n = lemma1_normal_generators(&d, &s).unwrap();
    assert_eq!(n.conjugators.len(), 15);
    let t = todd_coxeter(&Presentation::surface(&s), &n.subgroup_generators(), 1_000_000).unwrap();
    assert_eq!(t.index(), Some(16));
    // every generator lies in the mod-2 cover
    let c = mod_m_cover(&s, 2).unwrap();
    assert!(n.subgroup_generators().iter().all(|w| c.member(w).unwrap()));
}

#[test]
fn cyclic_deck_group_cover() {
    let s = s2();
    let a = Alphabet::new(["h"]).unwrap();
    let g = Presentation::new(a.clone(), vec![parse_word("h^3", &a).unwrap()]).unwrap();
    let (d, _) = corollary1_cover(&g, 2).unwrap();
    let n = lemma1_normal_generators(&d, &s).unwrap();
    let t = todd_coxeter(&Presentation::surface(&s), &n.subgroup_generators(), 1_000_000).unwrap();
    let index = t.index().unwrap();
    assert_eq!(index, 3);
    // χ(cover) = index · χ(S)
    let genus = (2 - index as i64 * (2 - 2 * 2)) / 2;
    assert_eq!(genus, 4);
}

#[test]
fn representatives_cover_all_classes() {
    let s = s2();
    let reps = mod2_simple_representatives(&s).unwrap();
    let mut classes: Vec<Vec<i64>> = reps.iter().map(|(_, c)| abelianize(c, &s).unwrap().reduce_mod(2)).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), 15);
    assert!(classes.iter().all(|v| v.iter().any(|&x| x != 0)));
}
