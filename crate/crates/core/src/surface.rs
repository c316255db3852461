//! The fundamental group of the closed orientable surface of genus `g >= 2`.

use alloc::vec::Vec;

use crate::word::{commutator, Alphabet, Letter, Word};
use crate::{Error, Result};

/// `<a1, b1, ..., ag, bg | [a1,b1] ... [ag,bg]>`.
///
/// Generators are stored in the interleaved order `a1, b1, a2, b2, ...`, which
/// fixes the letter order `a1 < a1^-1 < b1 < b1^-1 < a2 < ...`. Homology
/// coordinates use the order `a1, ..., ag, b1, ..., bg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePresentation {
    genus: usize,
    alphabet: Alphabet,
    relator: Word,
}

impl SurfacePresentation {
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let mut names = Vec::with_capacity(2 * genus);
        for i in 1..=genus {
            names.push(alloc::format!("a{i}"));
            names.push(alloc::format!("b{i}"));
        }
        let alphabet = Alphabet::new(names)?;
        let mut relator = Word::identity();
        for i in 0..genus {
            relator = &relator * &commutator(&Word::generator(2 * i), &Word::generator(2 * i + 1));
        }
        Ok(SurfacePresentation { genus, alphabet, relator })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    /// Generator index of `a_i` (1-based `i`).
    pub fn a(&self, i: usize) -> usize {
        2 * (i - 1)
    }

    /// Generator index of `b_i` (1-based `i`).
    pub fn b(&self, i: usize) -> usize {
        2 * (i - 1) + 1
    }

    /// Homology coordinate of a generator.
    pub fn coordinate(&self, gen: usize) -> usize {
        if gen.is_multiple_of(2) {
            gen / 2
        } else {
            self.genus + gen / 2
        }
    }

    /// Generator sitting at a homology coordinate.
    pub fn generator_at(&self, coord: usize) -> usize {
        if coord < self.genus {
            2 * coord
        } else {
            2 * (coord - self.genus) + 1
        }
    }

    /// Generators in homology order `a1..ag, b1..bg`.
    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).map(|c| self.generator_at(c))
    }

    pub(crate) fn check(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|l| l.gen() >= self.rank()) {
            Some(l) => Err(Error::UnknownGenerator(alloc::format!("#{}", l.gen() + 1))),
            None => Ok(()),
        }
    }
}

/// An integral homology class, coordinates ordered `a1..ag, b1..bg`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomologyVector(pub Vec<i64>);

impl HomologyVector {
    pub fn zero(dim: usize) -> Self {
        HomologyVector(alloc::vec![0; dim])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coordinates reduced into `0..m`.
    pub fn reduce_mod(&self, m: i64) -> Vec<i64> {
        self.0.iter().map(|c| c.rem_euclid(m)).collect()
    }

    pub fn add(&self, other: &HomologyVector) -> HomologyVector {
        HomologyVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Exponent sums of `w`, one per generator.
pub fn abelianize(w: &Word, s: &SurfacePresentation) -> Result<HomologyVector> {
    s.check(w)?;
    Ok(abelianize_unchecked(w.letters(), s))
}

pub(crate) fn abelianize_unchecked(letters: &[Letter], s: &SurfacePresentation) -> HomologyVector {
    let mut v = HomologyVector::zero(s.rank());
    for l in letters {
        v.0[s.coordinate(l.gen())] += l.sign();
    }
    v
}

/// Zero, or not a proper multiple of another class (gcd of entries is 1).
pub fn is_primitive(v: &HomologyVector) -> bool {
    v.is_zero() || v.0.iter().fold(0u64, |g, &c| gcd(g, c.unsigned_abs())) == 1
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    #[test]
    fn genus_one_rejected() {
        assert_eq!(SurfacePresentation::new(1), Err(Error::GenusTooSmall(1)));
    }

    #[test]
    fn relator_shape() {
        for g in 2..5 {
            let s = SurfacePresentation::new(g).unwrap();
            assert_eq!(s.relator().len(), 4 * g);
            assert!(abelianize(s.relator(), &s).unwrap().is_zero());
        }
    }

    #[test]
    fn abelianize_examples() {
        let s = SurfacePresentation::new(2).unwrap();
        let a = s.alphabet();
        let v = |t: &str| abelianize(&parse_word(t, a).unwrap(), &s).unwrap().0;
        assert_eq!(v("a1"), [1, 0, 0, 0]);
        assert_eq!(v("[a1,b1]"), [0, 0, 0, 0]);
        assert_eq!(v("a1^2 b2"), [2, 0, 0, 1]);
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&HomologyVector(alloc::vec![0, 0, 0, 0])));
        assert!(!is_primitive(&HomologyVector(alloc::vec![2, 0, 0, 0])));
        assert!(is_primitive(&HomologyVector(alloc::vec![2, 3, 0, 0])));
        assert!(!is_primitive(&HomologyVector(alloc::vec![-4, 6, 0, 2])));
    }

    #[test]
    fn foreign_generator() {
        let s = SurfacePresentation::new(2).unwrap();
        assert!(abelianize(&Word::generator(7), &s).is_err());
    }
}
