//! Cyclic words: conjugacy classes of the free group.

use alloc::vec::Vec;

use crate::word::{Alphabet, Letter, Word};

/// A cyclically reduced word stored in its canonical rotation, the
/// lexicographically least one under the letter order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    /// Canonical form of the conjugacy class of `w`.
    pub fn new(w: &Word) -> Self {
        cyclic_reduce(w).0
    }

    /// Builds from letters that are already cyclically reduced.
    pub(crate) fn from_reduced(mut letters: Vec<Letter>) -> Self {
        let r = min_rotation(&letters);
        letters.rotate_left(r);
        CyclicWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The canonical rotation as a linear word.
    pub fn to_word(&self) -> Word {
        Word::from_letters(self.0.iter().copied())
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_reduced(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Representative of the unoriented class: the smaller of the class and
    /// its inverse.
    pub fn unoriented(&self) -> CyclicWord {
        let inv = self.inverse();
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    /// `(root, k)` with `self = root^k` and `root` not a proper power.
    pub fn primitive_root(&self) -> (CyclicWord, usize) {
        let p = string_period(&self.0);
        (CyclicWord(self.0[..p].to_vec()), if p == 0 { 1 } else { self.0.len() / p })
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl core::fmt::Display + 'a {
        struct D<'a>(&'a CyclicWord, &'a Alphabet);
        impl core::fmt::Display for D<'_> {
            fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
                f.write_str(&crate::parse::render_letters(self.0.letters(), self.1))
            }
        }
        D(self, alphabet)
    }
}

/// Splits `w = conjugator * core * conjugator^-1` with `core` cyclically
/// reduced and in canonical rotation.
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let l = w.letters();
    let mut i = 0;
    let mut j = l.len();
    while j - i >= 2 && l[i] == l[j - 1].inverse() {
        i += 1;
        j -= 1;
    }
    let mut core = l[i..j].to_vec();
    let r = min_rotation(&core);
    // core = p q with canonical rotation q p; then w = (c p) (q p) (c p)^-1
    let conj = Word::from_letters(l[..i].iter().chain(core[..r].iter()).copied());
    core.rotate_left(r);
    (CyclicWord(core), conj)
}

/// Index of the lexicographically least rotation.
pub fn min_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // two-candidate scan (Duval / Booth style), O(n)
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        match a.cmp(b) {
            core::cmp::Ordering::Equal => k += 1,
            core::cmp::Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            core::cmp::Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Smallest `p` dividing `len` with `s` invariant under rotation by `p`.
pub fn string_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (p..n).all(|k| s[k] == s[k - p]))
        .unwrap_or(0)
}
