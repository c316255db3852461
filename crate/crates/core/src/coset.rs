//! Todd–Coxeter coset enumeration (HLT strategy with lookahead).
//!
//! Relators are traced from every live coset in order, filling gaps with
//! new cosets; coincidences are processed immediately. When the coset limit
//! is reached, one lookahead pass (tracing without defining) is tried; if it
//! does not free enough room the enumeration stops with
//! [`EnumerationStatus::Exceeded`]. That outcome is not an error: the
//! enumeration of an infinite index never terminates.
//!
//! Normal closures are the caller's business: list the conjugates you need
//! among the subgroup generators.

use alloc::vec::Vec;

use crate::presentation::Presentation;
use crate::word::{Letter, Word};
use crate::Result;

/// Coset limit used when the caller has no better idea.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumerationStatus {
    Complete { index: usize },
    Exceeded { limit: usize },
}

impl EnumerationStatus {
    pub fn index(self) -> Option<usize> {
        match self {
            EnumerationStatus::Complete { index } => Some(index),
            EnumerationStatus::Exceeded { .. } => None,
        }
    }

    pub fn is_complete(self) -> bool {
        matches!(self, EnumerationStatus::Complete { .. })
    }
}

/// Result of an enumeration. A complete table is standardized: cosets are
/// numbered in the order they are first reached when rows are read in order,
/// and coset 0 is the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    cols: usize,
    table: Vec<u32>,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn index(&self) -> Option<usize> {
        self.status.index()
    }

    /// Number of rows held (the index when complete).
    pub fn len(&self) -> usize {
        self.table.len() / self.cols.max(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `coset · l`, if known.
    pub fn act(&self, coset: usize, l: Letter) -> Option<usize> {
        match self.table.get(coset * self.cols + l.index()) {
            Some(&v) if v != NONE => Some(v as usize),
            _ => None,
        }
    }

    /// `coset · w`, if every step is known.
    pub fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(coset, |c, &l| self.act(c, l))
    }
}

/// Enumerates the cosets of `<subgroup>` in the group presented by `p`.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    for h in subgroup {
        p.check(h)?;
    }
    let mut e = Enumerator::new(p.rank(), max_cosets.max(1));
    let sub: Vec<Vec<usize>> = subgroup.iter().map(cols_of).collect();
    let rels: Vec<Vec<usize>> = p.relators().iter().map(cols_of).collect();
    e.define_first();

    for h in &sub {
        if e.scan_and_fill(0, h).is_err() {
            return Ok(e.exceeded());
        }
    }
    let mut c = 0usize;
    while c < e.rows() {
        if e.is_live(c) {
            for r in &rels {
                while e.scan_and_fill(c, r).is_err() {
                    match e.make_room(&rels, &sub, c) {
                        Some(nc) => c = nc,
                        None => return Ok(e.exceeded()),
                    }
                }
                if !e.is_live(c) {
                    break;
                }
            }
            let mut x = 0;
            while e.is_live(c) && x < e.cols {
                if e.get(c, x) == NONE
                    && e.define(c, x).is_err() {
                        match e.make_room(&rels, &sub, c) {
                            Some(nc) => c = nc,
                            None => return Ok(e.exceeded()),
                        }
                        continue;
                    }
                x += 1;
            }
        }
        c += 1;
    }
    Ok(e.finish())
}

/// Order of the group presented by `p`, or `Exceeded`. The presentation is
/// Tietze-simplified first.
pub fn group_order(p: &Presentation, max_cosets: usize) -> Result<EnumerationStatus> {
    let q = crate::tietze::simplify(p)?;
    if q.rank() == 0 {
        return Ok(EnumerationStatus::Complete { index: 1 });
    }
    Ok(todd_coxeter(&q, &[], max_cosets)?.status())
}

fn cols_of(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|l| l.index()).collect()
}

/// Column of the inverse letter.
#[inline]
fn inv(x: usize) -> usize {
    x ^ 1
}

struct Full;

struct Enumerator {
    cols: usize,
    max: usize,
    table: Vec<u32>,
    /// Union-find parent; `parent[c] == c` for live cosets.
    parent: Vec<u32>,
    live: usize,
}

impl Enumerator {
    fn new(rank: usize, max: usize) -> Self {
        Enumerator { cols: 2 * rank, max, table: Vec::new(), parent: Vec::new(), live: 0 }
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.cols + x] = v;
    }

    fn define_first(&mut self) {
        self.table.resize(self.cols, NONE);
        self.parent.push(0);
        self.live = 1;
    }

    fn define(&mut self, c: usize, x: usize) -> core::result::Result<usize, Full> {
        if self.rows() >= self.max {
            return Err(Full);
        }
        let n = self.rows();
        self.table.resize(self.table.len() + self.cols, NONE);
        self.parent.push(n as u32);
        self.live += 1;
        self.set(c, x, n as u32);
        self.set(n, inv(x), c as u32);
        Ok(n)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut c = c;
        while self.parent[c] as usize != r {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u32;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo as u32;
            self.live -= 1;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                let f = f as usize;
                if self.get(f, inv(x)) == e as u32 {
                    self.set(f, inv(x), NONE);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex as usize, &mut queue);
                } else {
                    let fx = self.get(f1, inv(x));
                    if fx != NONE {
                        self.merge(e1, fx as usize, &mut queue);
                    } else {
                        self.set(e1, x, f1 as u32);
                        self.set(f1, inv(x), e1 as u32);
                    }
                }
            }
        }
    }

    /// Traces `w` from `c` in both directions, closing the gap by a
    /// deduction, a coincidence, or (when `fill`) new cosets.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> core::result::Result<(), Full> {
        let (mut f, mut i) = (c, 0isize);
        let (mut b, mut j) = (c, w.len() as isize - 1);
        loop {
            while i <= j && self.get(f, w[i as usize]) != NONE {
                f = self.get(f, w[i as usize]) as usize;
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i && self.get(b, inv(w[j as usize])) != NONE {
                b = self.get(b, inv(w[j as usize])) as usize;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b as u32);
                self.set(b, inv(x), f as u32);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> core::result::Result<(), Full> {
        self.scan(c, w, true)
    }

    /// Lookahead plus compaction; returns the new number of coset `c`, or
    /// `None` when too little room was freed.
    fn make_room(&mut self, rels: &[Vec<usize>], sub: &[Vec<usize>], c: usize) -> Option<usize> {
        for h in sub {
            let _ = self.scan(0, h, false);
        }
        let mut e = 0;
        while e < self.rows() {
            for r in rels {
                if !self.is_live(e) {
                    break;
                }
                let _ = self.scan(e, r, false);
            }
            e += 1;
        }
        let c = self.rep(c);
        let map = self.compact();
        // demand at least a tenth of the limit back, or give up
        if self.rows() * 10 > self.max * 9 {
            return None;
        }
        Some(map[c] as usize)
    }

    /// Renumbers live cosets in order, dropping dead rows. Returns the map
    /// from old to new numbers.
    fn compact(&mut self) -> Vec<u32> {
        let mut map = alloc::vec![NONE; self.rows()];
        let mut n = 0u32;
        for (c, m) in map.iter_mut().enumerate() {
            if self.parent[c] as usize == c {
                *m = n;
                n += 1;
            }
        }
        let mut table = Vec::with_capacity(n as usize * self.cols);
        for c in 0..self.rows() {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.cols {
                let v = self.get(c, x);
                table.push(if v == NONE { NONE } else { map[self.rep(v as usize)] });
            }
        }
        self.table = table;
        self.parent = (0..n).collect();
        self.live = n as usize;
        map
    }

    fn exceeded(&self) -> CosetTable {
        CosetTable {
            cols: self.cols,
            table: Vec::new(),
            status: EnumerationStatus::Exceeded { limit: self.max },
        }
    }

    fn finish(mut self) -> CosetTable {
        self.compact();
        let n = self.rows();
        // standardize: number cosets in order of first appearance
        let mut order: Vec<u32> = Vec::with_capacity(n);
        let mut new_of = alloc::vec![NONE; n];
        new_of[0] = 0;
        order.push(0);
        let mut k = 0;
        while k < order.len() {
            let c = order[k] as usize;
            for x in 0..self.cols {
                let v = self.get(c, x) as usize;
                if new_of[v] == NONE {
                    new_of[v] = order.len() as u32;
                    order.push(v as u32);
                }
            }
            k += 1;
        }
        let mut table = Vec::with_capacity(n * self.cols);
        for &c in &order {
            for x in 0..self.cols {
                table.push(new_of[self.get(c as usize, x) as usize]);
            }
        }
        CosetTable { cols: self.cols, table, status: EnumerationStatus::Complete { index: n } }
    }
}
