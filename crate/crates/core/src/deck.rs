//! Deck-group presentations and the normal generators of cover subgroups.
//!
//! A deck presentation lists relators over the images `φ(a_i), φ(b_i)` of the
//! surface generators; here those images carry the surface names, so the
//! pulled-back relators `r_i'` are the relators themselves, read in the
//! surface group. The cover subgroup is generated by the `r_i'` together
//! with their conjugates by words mapping to the nontrivial deck elements.

use alloc::vec::Vec;

use crate::coset::todd_coxeter;
use crate::presentation::Presentation;
use crate::simple::{words::partitions, Detector};
use crate::surface::SurfacePresentation;
use crate::word::{Letter, Word};
use crate::{Error, Result};

/// Coset limit used to list deck elements.
pub const MAX_DECK_ORDER: usize = 100_000;

/// A presentation of a deck group as a quotient of the surface group's
/// free generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckPresentation {
    genus: usize,
    presentation: Presentation,
}

impl DeckPresentation {
    pub fn new(s: &SurfacePresentation, relators: Vec<Word>) -> Result<Self> {
        let presentation = Presentation::new(s.alphabet().clone(), relators)?;
        Ok(DeckPresentation { genus: s.genus(), presentation })
    }

    /// `(ℤ/2)^{2g}` presented by the squares of the words in
    /// [`mod2_simple_representatives`].
    pub fn mod2(s: &SurfacePresentation) -> Result<Self> {
        let reps = mod2_simple_representatives(s)?;
        DeckPresentation::new(s, reps.into_iter().map(|(_, c)| c.pow(2)).collect())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn relators(&self) -> &[Word] {
        self.presentation.relators()
    }
}

/// Generators of a cover subgroup: the `core` words and their conjugates by
/// each of the `conjugators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalGeneratorSet {
    pub core: Vec<Word>,
    /// Words representing the nontrivial deck elements.
    pub conjugators: Vec<Word>,
}

impl NormalGeneratorSet {
    /// Core words followed by all their conjugates, conjugator-major.
    pub fn subgroup_generators(&self) -> Vec<Word> {
        let mut out = self.core.clone();
        for t in &self.conjugators {
            out.extend(self.core.iter().map(|r| r.conjugate_by(t)));
        }
        out
    }
}

/// The pulled-back relators and one shortlex-least word for every
/// nontrivial element of the deck group. Conjugators are empty when the deck
/// group does not enumerate within [`MAX_DECK_ORDER`] elements.
pub fn lemma1_normal_generators(d: &DeckPresentation, s: &SurfacePresentation) -> Result<NormalGeneratorSet> {
    if d.genus() != s.genus() {
        return Err(Error::MalformedPresentation(alloc::format!(
            "deck presentation is for genus {}, surface has genus {}",
            d.genus(),
            s.genus()
        )));
    }
    let core = d.relators().to_vec();
    let table = todd_coxeter(d.presentation(), &[], MAX_DECK_ORDER)?;
    let mut conjugators = Vec::new();
    if let Some(n) = table.index() {
        // breadth-first search in letter order gives shortlex-least words
        let mut rep: Vec<Option<Word>> = alloc::vec![None; n];
        rep[0] = Some(Word::identity());
        let mut queue = alloc::vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let c = queue[k];
            k += 1;
            for l in s.alphabet().letters() {
                let next = table.act(c, l).expect("complete table");
                if rep[next].is_none() {
                    let w = rep[c].as_ref().expect("visited") * &Word::letter(l);
                    rep[next] = Some(w);
                    queue.push(next);
                }
            }
        }
        conjugators = queue[1..].iter().map(|&c| rep[c].clone().expect("visited")).collect();
    }
    Ok(NormalGeneratorSet { core, conjugators })
}

/// One simple word per nonzero class of `H₁(S; ℤ/2)`, classes ordered by
/// their bit mask over the homology coordinates `a1..ag, b1..bg`.
///
/// Each handle contributes `a_i`, `b_i`, or the twisted curve `a_i b_i`;
/// handles are joined by concatenation. A candidate that the detector
/// rejects is replaced by the first simple word of the class found by
/// enumeration, and a class without any simple word up to length 10 is an
/// error.
pub fn mod2_simple_representatives(s: &SurfacePresentation) -> Result<Vec<(Vec<u8>, Word)>> {
    let g = s.genus();
    let det = Detector::new(s);
    let mut out = Vec::new();
    for mask in 1u64..(1 << (2 * g)) {
        let class: Vec<u8> = (0..2 * g).map(|k| (mask >> k & 1) as u8).collect();
        let mut letters = Vec::new();
        for i in 1..=g {
            if class[i - 1] == 1 {
                letters.push(Letter::pos(s.a(i)));
            }
            if class[g + i - 1] == 1 {
                letters.push(Letter::pos(s.b(i)));
            }
        }
        let w = if det.is_simple(&letters) {
            Word::from_letters(letters)
        } else {
            search_class(s, &det, &class).ok_or_else(|| {
                Error::TooLarge(alloc::format!("no simple word of length <= 10 in class {class:?}"))
            })?
        };
        out.push((class, w));
    }
    Ok(out)
}

fn search_class(s: &SurfacePresentation, det: &Detector, class: &[u8]) -> Option<Word> {
    for p in partitions(s.rank(), 10) {
        let mut found = None;
        p.for_each(s.rank(), &mut |w| {
            if found.is_some() {
                return;
            }
            let h = crate::surface::abelianize_unchecked(w, s);
            let matches = h.coords().iter().zip(class).all(|(&c, &b)| c.rem_euclid(2) as u8 == b);
            if matches && det.is_simple(w) {
                found = Some(Word::from_letters(w.iter().copied()));
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}
