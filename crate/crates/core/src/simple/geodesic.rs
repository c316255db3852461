//! Shortest cyclic representatives in the surface group.
//!
//! The surface is cut along the one-vertex graph dual to the fundamental
//! `4g`-gon. Around that vertex the half-edges sit in the cyclic order
//! `a_k, b_k⁻¹, a_k⁻¹, b_k` per handle; following a letter `x` into the
//! vertex through `x⁻¹` and turning one slot counter-clockwise traces the
//! relator. Subwords of the relator cycle therefore show up as runs of
//! constant turn `+1` (relator) or `−1` (its inverse).

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::cyclic::CyclicWord;
use crate::word::{free_reduce, Letter};

/// Ribbon structure at the single vertex.
#[derive(Clone, Debug)]
pub(crate) struct Ribbon {
    genus: usize,
    pos: Vec<usize>,
    at: Vec<Letter>,
}

impl Ribbon {
    pub fn new(genus: usize) -> Self {
        let n = 4 * genus;
        let mut pos = alloc::vec![0; n];
        let mut at = alloc::vec![Letter::pos(0); n];
        for k in 0..genus {
            let (a, b) = (2 * k, 2 * k + 1);
            for (slot, l) in [
                (4 * k, Letter::pos(a)),
                (4 * k + 1, Letter::neg(b)),
                (4 * k + 2, Letter::neg(a)),
                (4 * k + 3, Letter::pos(b)),
            ] {
                pos[l.index()] = slot;
                at[slot] = l;
            }
        }
        Ribbon { genus, pos, at }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of half-edges, `4g`.
    pub fn slots(&self) -> usize {
        self.at.len()
    }

    pub fn pos(&self, l: Letter) -> usize {
        self.pos[l.index()]
    }

    pub fn at(&self, slot: usize) -> Letter {
        self.at[slot % self.slots()]
    }

    /// Counter-clockwise slot offset from the arrival of `x` to the
    /// departure of `y`.
    pub fn turn(&self, x: Letter, y: Letter) -> usize {
        let n = self.slots();
        (self.pos(y) + n - self.pos(x.inverse())) % n
    }

    /// Letter following `x` along the relator cycle (`dir = 1`) or its
    /// inverse (`dir = 4g − 1`).
    fn next(&self, x: Letter, dir: usize) -> Letter {
        self.at(self.pos(x.inverse()) + dir)
    }
}

/// Free reduction followed by removal of cancelling ends.
pub(crate) fn cyclically_reduced(letters: &[Letter]) -> Vec<Letter> {
    let w = free_reduce(letters).into_letters();
    let (mut i, mut j) = (0, w.len());
    while j - i >= 2 && w[i] == w[j - 1].inverse() {
        i += 1;
        j -= 1;
    }
    w[i..j].to_vec()
}

/// A maximal run of relator letters inside a cyclic word.
struct Piece {
    start: usize,
    len: usize,
    dir: usize,
}

/// Maximal relator pieces of a cyclically reduced word, or `None` when the
/// whole word runs around the relator cycle (a power of the relator).
fn pieces(w: &[Letter], rib: &Ribbon) -> Option<Vec<Piece>> {
    let n = w.len();
    let slots = rib.slots();
    let turns: Vec<usize> = (0..n).map(|i| rib.turn(w[i], w[(i + 1) % n])).collect();
    let mut out = Vec::new();
    for dir in [1, slots - 1] {
        if turns.iter().all(|&t| t == dir) {
            return None;
        }
        // start scanning just after a turn that breaks the run
        let Some(br) = turns.iter().position(|&t| t != dir) else { continue };
        let mut k = 0;
        while k < n {
            let i = (br + 1 + k) % n;
            if turns[i] != dir {
                k += 1;
                continue;
            }
            let mut run = 0;
            while turns[(i + run) % n] == dir {
                run += 1;
            }
            out.push(Piece { start: i, len: run + 1, dir });
            k += run;
        }
    }
    Some(out)
}

/// Replaces the piece with the inverse of its complement in the relator
/// cycle (or drops a full relator when the piece contains one).
fn replace(w: &[Letter], p: &Piece, rib: &Ribbon) -> Vec<Letter> {
    let n = w.len();
    let slots = rib.slots();
    let mut rot: Vec<Letter> = (0..n).map(|k| w[(p.start + k) % n]).collect();
    if p.len >= slots {
        rot.drain(..slots);
        return rot;
    }
    let mut comp = Vec::with_capacity(slots - p.len);
    let mut x = rot[p.len - 1];
    for _ in 0..slots - p.len {
        x = rib.next(x, p.dir);
        comp.push(x);
    }
    let mut out: Vec<Letter> = comp.iter().rev().map(|l| l.inverse()).collect();
    out.extend_from_slice(&rot[p.len..]);
    out
}

/// Dehn's algorithm on cyclic words: repeatedly replaces relator pieces
/// longer than half the relator. The result is cyclically reduced and empty
/// exactly when the class is trivial.
pub(crate) fn dehn_reduce(letters: &[Letter], rib: &Ribbon) -> Vec<Letter> {
    let half = 2 * rib.genus();
    let mut w = cyclically_reduced(letters);
    loop {
        if w.is_empty() {
            return w;
        }
        let Some(ps) = pieces(&w, rib) else {
            return Vec::new();
        };
        match ps.iter().find(|p| p.len > half) {
            Some(p) => w = cyclically_reduced(&replace(&w, p, rib)),
            None => return w,
        }
    }
}

/// Cap on the number of shortest representatives explored per class.
pub(crate) const MAX_REPRESENTATIVES: usize = 1 << 14;

/// All shortest cyclic words representing the conjugacy class of `letters`
/// in the surface group, reached by swapping half-relator pieces. Empty when
/// the class is trivial.
pub(crate) fn shortest_representatives(letters: &[Letter], rib: &Ribbon) -> Vec<CyclicWord> {
    let half = 2 * rib.genus();
    let mut start = dehn_reduce(letters, rib);
    'restart: loop {
        if start.is_empty() {
            return Vec::new();
        }
        let len = start.len();
        let first = CyclicWord::from_reduced(start.clone());
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(first.clone());
        queue.push_back(first);
        while let Some(c) = queue.pop_front() {
            let Some(ps) = pieces(c.letters(), rib) else {
                return Vec::new();
            };
            for p in ps.iter().filter(|p| p.len == half) {
                let next = dehn_reduce(&replace(c.letters(), p, rib), rib);
                if next.len() < len {
                    start = next;
                    continue 'restart;
                }
                let next = CyclicWord::from_reduced(next);
                if seen.len() < MAX_REPRESENTATIVES && !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        return seen.into_iter().collect();
    }
}
