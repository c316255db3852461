//! Letters, alphabets and freely reduced words.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::{Error, Result};

/// A generator or its inverse.
///
/// The derived order is `x1 < x1^-1 < x2 < x2^-1 < ...` in alphabet order,
/// which is the order used for canonical cyclic words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    gen: u16,
    inv: bool,
}

impl Letter {
    pub const fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen: gen as u16, inv: inverse }
    }

    pub const fn pos(gen: usize) -> Self {
        Letter::new(gen, false)
    }

    pub const fn neg(gen: usize) -> Self {
        Letter::new(gen, true)
    }

    pub const fn gen(self) -> usize {
        self.gen as usize
    }

    pub const fn is_inverse(self) -> bool {
        self.inv
    }

    /// `+1` for a generator, `-1` for an inverse.
    pub const fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub const fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    /// Dense index in `0..2 * rank`, following the letter order.
    pub const fn index(self) -> usize {
        2 * self.gen as usize + self.inv as usize
    }

    pub const fn from_index(i: usize) -> Self {
        Letter::new(i / 2, i % 2 == 1)
    }
}

/// An ordered list of generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            let valid = !n.is_empty()
                && n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::MalformedPresentation(alloc::format!(
                    "invalid generator name `{n}`"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::MalformedPresentation(alloc::format!(
                    "duplicate generator `{n}`"
                )));
            }
        }
        Ok(Alphabet { names })
    }

    /// Alphabet `prefix1, ..., prefixN`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        Alphabet {
            names: (1..=count).map(|i| alloc::format!("{prefix}{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index_of(name)
            .map(Letter::pos)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Every letter of the alphabet in letter order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..2 * self.len()).map(Letter::from_index)
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn letter(l: Letter) -> Self {
        Word(alloc::vec![l])
    }

    pub fn generator(gen: usize) -> Self {
        Word::letter(Letter::pos(gen))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `conj * self * conj^-1`.
    pub fn conjugate_by(&self, conj: &Word) -> Word {
        &(conj * self) * &conj.inverse()
    }

    /// Largest generator index used, plus one.
    pub fn rank_hint(&self) -> usize {
        self.0.iter().map(|l| l.gen() + 1).max().unwrap_or(0)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn free_reduce(letters: &[Letter]) -> Word {
    Word::from_letters(letters.iter().copied())
}

/// `[u, v] = u v u^-1 v^-1`, reduced.
pub fn commutator(u: &Word, v: &Word) -> Word {
    Word::from_letters(
        u.0.iter()
            .chain(v.0.iter())
            .copied()
            .chain(u.0.iter().rev().map(|l| l.inverse()))
            .chain(v.0.iter().rev().map(|l| l.inverse())),
    )
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &rhs.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::render_word(self.word, self.alphabet))
    }
}
