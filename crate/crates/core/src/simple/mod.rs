//! Self-intersection numbers and simple closed curves.
//!
//! The detector works on shortest cyclic representatives in the surface
//! group. Each one is drawn on the surface minus the vertex of the
//! fundamental polygon, where the linked-pair count of the free-group word is
//! its minimal self-intersection; the class's number is the least count over
//! all shortest representatives. Proper powers `u^k` use
//! `k² · i(u) + k − 1`.

mod geodesic;
mod linking;
pub mod words;

use alloc::vec::Vec;

use crate::cyclic::CyclicWord;
use crate::surface::SurfacePresentation;
use crate::word::{Letter, Word};
use crate::{Error, Result};

pub(crate) use geodesic::Ribbon;

/// Minimal self-intersection number of a nontrivial free homotopy class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntersectionCount(pub u64);

impl IntersectionCount {
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_simple(self) -> bool {
        self.0 == 0
    }
}

/// Reusable detector for one genus.
#[derive(Clone, Debug)]
pub struct Detector {
    rib: Ribbon,
}

impl Detector {
    pub fn new(s: &SurfacePresentation) -> Self {
        Detector { rib: Ribbon::new(s.genus()) }
    }

    /// Shortest cyclic representatives of the class; empty for the trivial
    /// class.
    pub fn shortest_representatives(&self, letters: &[Letter]) -> Vec<CyclicWord> {
        geodesic::shortest_representatives(letters, &self.rib)
    }

    /// `None` for the trivial class.
    pub fn self_intersection(&self, letters: &[Letter]) -> Option<u64> {
        self.count(letters, false)
    }

    pub fn is_simple(&self, letters: &[Letter]) -> bool {
        self.count(letters, true) == Some(0)
    }

    fn count(&self, letters: &[Letter], stop_at_zero: bool) -> Option<u64> {
        let reps = self.shortest_representatives(letters);
        if reps.is_empty() {
            return None;
        }
        for r in &reps {
            let (root, k) = r.primitive_root();
            if k > 1 {
                let i = self.count(root.letters(), false)?;
                let k = k as u64;
                return Some(k * k * i + k - 1);
            }
        }
        let mut best = u64::MAX;
        for r in &reps {
            best = best.min(linking::crossings(r.letters(), &self.rib));
            if stop_at_zero && best == 0 {
                break;
            }
        }
        Some(best)
    }
}

/// Minimal self-intersection number of the free homotopy class of `c`.
pub fn self_intersection(c: &CyclicWord, s: &SurfacePresentation) -> Result<IntersectionCount> {
    s.check(&c.to_word())?;
    Detector::new(s)
        .self_intersection(c.letters())
        .map(IntersectionCount)
        .ok_or(Error::TrivialClass)
}

/// Whether `w` is freely homotopic to a simple closed curve. The trivial
/// class is not.
pub fn is_simple(w: &Word, s: &SurfacePresentation) -> Result<bool> {
    s.check(w)?;
    Ok(Detector::new(s).is_simple(w.letters()))
}

/// Canonical cyclic words of length at most `maxlen` that are simple, one per
/// unoriented class, ordered by length and then lexicographically.
pub fn enumerate_simple(s: &SurfacePresentation, maxlen: usize) -> Vec<CyclicWord> {
    let det = Detector::new(s);
    let mut out = Vec::new();
    for p in words::partitions(s.rank(), maxlen) {
        p.for_each(s.rank(), &mut |w| {
            if words::is_unoriented_rep(w) && det.is_simple(w) {
                out.push(CyclicWord::from_reduced(w.to_vec()));
            }
        });
    }
    out
}
