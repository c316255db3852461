use alloc::vec::Vec;

use crate::word::{Alphabet, Word};
use crate::{Error, Result};

/// A homomorphism between free groups, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Homomorphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            let missing = source.names().get(images.len()).cloned().unwrap_or_default();
            return Err(Error::MissingImage(missing));
        }
        if let Some(bad) = images.iter().find(|w| w.rank_hint() > target.len()) {
            return Err(Error::MalformedPresentation(alloc::format!(
                "image uses generator {} outside the target alphabet",
                bad.rank_hint()
            )));
        }
        Ok(Homomorphism { source, target, images })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = (0..alphabet.len()).map(Word::generator).collect();
        Homomorphism { source: alphabet.clone(), target: alphabet, images }
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, gen: usize) -> &Word {
        &self.images[gen]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `w`, reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Word::identity();
        for l in w.letters() {
            let img = self
                .images
                .get(l.gen())
                .ok_or_else(|| Error::MissingImage(alloc::format!("#{}", l.gen() + 1)))?;
            out = if l.is_inverse() { &out * &img.inverse() } else { &out * img };
        }
        Ok(out)
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        let images = self.images.iter().map(|w| other.apply(w)).collect::<Result<Vec<_>>>()?;
        Ok(Homomorphism { source: self.source.clone(), target: other.target.clone(), images })
    }
}

/// `substitute(w, h)`: the reduced image of `w` under `h`.
pub fn substitute(w: &Word, h: &Homomorphism) -> Result<Word> {
    h.apply(w)
}
