use proptest::prelude::*;
use surfcover_core::simple::words::partitions;
use surfcover_core::{
    geodesic_oracle, CyclicWord, Detector, HyperbolicStructure, Letter, OracleOutcome, SurfacePresentation, Word,
};

fn compare(letters: &[Letter], det: &Detector, h: &HyperbolicStructure) -> Option<(u64, OracleOutcome)> {
    let d = det.self_intersection(letters)?;
    let c = CyclicWord::new(&Word::from_letters(letters.iter().copied()));
    Some((d, geodesic_oracle(&c, h).unwrap()))
}

#[test]
fn exhaustive_short_words_genus_two() {
    let s = SurfacePresentation::new(2).unwrap();
    let h = HyperbolicStructure::regular(2).unwrap();
    let det = Detector::new(&s);
    let (mut agree, mut indeterminate) = (0, 0);
    for p in partitions(4, 5) {
        for w in p.collect(4) {
            match compare(&w, &det, &h) {
                None => {}
                Some((d, OracleOutcome::Count(i))) => {
                    assert_eq!(d, i.0, "{:?}", w);
                    agree += 1;
                }
                Some((_, OracleOutcome::Indeterminate(_))) => indeterminate += 1,
            }
        }
    }
    assert!(agree > 2000);
    assert!(indeterminate * 100 <= agree);
}

#[test]
fn genus_three_small() {
    let s = SurfacePresentation::new(3).unwrap();
    let h = HyperbolicStructure::regular(3).unwrap();
    let det = Detector::new(&s);
    for p in partitions(6, 3) {
        for w in p.collect(6) {
            if let Some((d, OracleOutcome::Count(i))) = compare(&w, &det, &h) {
                assert_eq!(d, i.0, "{:?}", w);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_words_agree(idx in proptest::collection::vec(0usize..8, 1..=8)) {
        let s = SurfacePresentation::new(2).unwrap();
        let h = HyperbolicStructure::regular(2).unwrap();
        let letters: Vec<Letter> = idx.into_iter().map(Letter::from_index).collect();
        if let Some((d, OracleOutcome::Count(i))) = compare(&letters, &Detector::new(&s), &h) {
            prop_assert_eq!(d, i.0);
        }
    }
}
