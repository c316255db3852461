//! Finitely presented groups.

use alloc::string::String;
use alloc::vec::Vec;

use crate::surface::SurfacePresentation;
use crate::word::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// `<generators | relators>`. Relators are stored freely and cyclically
/// reduced (cancelling ends are stripped, the rotation is kept as written);
/// relators that reduce to the identity are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        let mut p = Presentation { alphabet, relators: Vec::with_capacity(relators.len()) };
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    /// The free group on `alphabet`.
    pub fn free(alphabet: Alphabet) -> Self {
        Presentation { alphabet, relators: Vec::new() }
    }

    pub fn surface(s: &SurfacePresentation) -> Self {
        Presentation { alphabet: s.alphabet().clone(), relators: alloc::vec![s.relator().clone()] }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn push_relator(&mut self, r: Word) -> Result<()> {
        self.check(&r)?;
        let r = strip_conjugation(r);
        if !r.is_identity() {
            self.relators.push(r);
        }
        Ok(())
    }

    /// Adds the relation `lhs = rhs` as the relator `lhs rhs⁻¹`.
    pub fn push_relation(&mut self, lhs: &Word, rhs: &Word) -> Result<()> {
        self.push_relator(lhs * &rhs.inverse())
    }

    /// Errors unless every letter of `w` belongs to the alphabet.
    pub fn check(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| l.gen() >= self.rank()) {
            Some(l) => Err(Error::MalformedPresentation(alloc::format!(
                "generator #{} outside the alphabet of {} generators",
                l.gen() + 1,
                self.rank()
            ))),
            None => Ok(()),
        }
    }

    /// Renders as `<a, b | r1, r2>`.
    pub fn to_display_string(&self) -> String {
        let gens = self.alphabet.names().join(", ");
        let rels: Vec<String> =
            self.relators.iter().map(|r| crate::parse::render_word(r, &self.alphabet)).collect();
        alloc::format!("<{} | {}>", gens, rels.join(", "))
    }
}

fn strip_conjugation(w: Word) -> Word {
    let l: &[Letter] = w.letters();
    let (mut i, mut j) = (0, l.len());
    while j - i >= 2 && l[i] == l[j - 1].inverse() {
        i += 1;
        j -= 1;
    }
    if i == 0 {
        w
    } else {
        Word::from_letters(l[i..j].iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    #[test]
    fn relators_are_cyclically_reduced() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let r = parse_word("y x^3 y^-1", &a).unwrap();
        let p = Presentation::new(a.clone(), alloc::vec![r, Word::identity()]).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0], parse_word("x^3", &a).unwrap());
    }

    #[test]
    fn foreign_generator() {
        let a = Alphabet::new(["x"]).unwrap();
        assert!(Presentation::new(a, alloc::vec![Word::generator(1)]).is_err());
    }
}
