//! Enumeration of canonical cyclic words, split into independent partitions.
//!
//! A canonical word is cyclically reduced and is its own least rotation. The
//! generator is the Fredricksen–Kessler–Maiorana necklace recursion with the
//! extra constraint that no two cyclically adjacent letters cancel.

use alloc::vec::Vec;

use crate::cyclic::min_rotation;
use crate::word::Letter;

/// Canonical words of one length sharing a fixed prefix (at most two
/// letters). Partitions of a search are disjoint and, taken in order, list
/// words by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    pub len: usize,
    pub prefix: Vec<Letter>,
}

/// All partitions for words over `rank` generators of length `1..=maxlen`.
pub fn partitions(rank: usize, maxlen: usize) -> Vec<Partition> {
    let letters: Vec<Letter> = (0..2 * rank).map(Letter::from_index).collect();
    let mut out = Vec::new();
    for len in 1..=maxlen {
        for &a in &letters {
            if len == 1 {
                out.push(Partition { len, prefix: alloc::vec![a] });
                continue;
            }
            for &b in letters.iter().filter(|&&b| b >= a && b != a.inverse()) {
                out.push(Partition { len, prefix: alloc::vec![a, b] });
            }
        }
    }
    out
}

impl Partition {
    /// Calls `f` on each canonical word of the partition, in lexicographic
    /// order.
    pub fn for_each(&self, rank: usize, f: &mut dyn FnMut(&[Letter])) {
        let mut buf = Vec::with_capacity(self.len);
        dfs(&mut buf, self.len, 1, 2 * rank, &self.prefix, f);
    }

    pub fn collect(&self, rank: usize) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        self.for_each(rank, &mut |w| out.push(w.to_vec()));
        out
    }
}

fn dfs(
    buf: &mut Vec<Letter>,
    len: usize,
    p: usize,
    nletters: usize,
    prefix: &[Letter],
    f: &mut dyn FnMut(&[Letter]),
) {
    let t = buf.len();
    if t == len {
        if len.is_multiple_of(p) {
            f(buf);
        }
        return;
    }
    let lo = if t == 0 { 0 } else { buf[t - p].index() };
    let (lo, hi) = match prefix.get(t) {
        Some(l) if l.index() < lo => return,
        Some(l) => (l.index(), l.index() + 1),
        None => (lo, nletters),
    };
    for idx in lo..hi {
        let c = Letter::from_index(idx);
        if t > 0 && c == buf[t - 1].inverse() {
            continue;
        }
        if t + 1 == len && t > 0 && c == buf[0].inverse() {
            continue;
        }
        let np = if t == 0 || c == buf[t - p] { p.max(1) } else { t + 1 };
        buf.push(c);
        dfs(buf, len, np, nletters, prefix, f);
        buf.pop();
    }
}

/// `w` (canonical) is no larger than the canonical form of its inverse, so
/// it represents its unoriented class.
pub fn is_unoriented_rep(w: &[Letter]) -> bool {
    let inv: Vec<Letter> = w.iter().rev().map(|l| l.inverse()).collect();
    let r = min_rotation(&inv);
    let n = inv.len();
    for k in 0..n {
        let a = w[k];
        let b = inv[(r + k) % n];
        if a != b {
            return a < b;
        }
    }
    true
}
