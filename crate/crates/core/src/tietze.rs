//! Tietze simplification of presentations.
//!
//! Three moves, repeated until none applies:
//!
//! * a relator that is a single letter kills its generator;
//! * a relator containing more than half of a cyclic conjugate of another
//!   relator (or its inverse) has that piece replaced by the inverse of the
//!   remainder, which shortens it;
//! * a generator occurring exactly once in some relator is solved for and
//!   substituted everywhere, provided the total length does not grow much.
//!
//! All three preserve the group, so the result presents the same group on
//! the surviving generators.

use alloc::vec::Vec;

use crate::presentation::Presentation;
use crate::word::{free_reduce, Alphabet, Letter, Word};
use crate::Result;

/// Stops runaway substitution: an elimination may grow the total relator
/// length by at most this factor (plus a constant).
const GROWTH: usize = 2;
const MAX_ROUNDS: usize = 10_000;

/// Simplified presentation of the same group; generators keep their names.
pub fn simplify(p: &Presentation) -> Result<Presentation> {
    let mut t = Tz {
        alive: alloc::vec![true; p.rank()],
        rels: p.relators().iter().map(|r| cyc_reduce(r.letters())).collect(),
    };
    t.run();
    let keep: Vec<usize> = (0..p.rank()).filter(|&g| t.alive[g]).collect();
    let mut new_of = alloc::vec![usize::MAX; p.rank()];
    for (k, &g) in keep.iter().enumerate() {
        new_of[g] = k;
    }
    let alphabet = Alphabet::new(keep.iter().map(|&g| p.alphabet().name(g)))?;
    let rels = t
        .rels
        .iter()
        .map(|r| Word::from_letters(r.iter().map(|l| Letter::new(new_of[l.gen()], l.is_inverse()))))
        .collect();
    Presentation::new(alphabet, rels)
}

struct Tz {
    alive: Vec<bool>,
    rels: Vec<Vec<Letter>>,
}

impl Tz {
    fn total(&self) -> usize {
        self.rels.iter().map(Vec::len).sum()
    }

    fn run(&mut self) {
        for _ in 0..MAX_ROUNDS {
            self.tidy();
            if self.kill_single_letters() || self.shorten() || self.eliminate() {
                continue;
            }
            break;
        }
        self.tidy();
    }

    /// Drops empty and duplicate relators (up to rotation and inversion).
    fn tidy(&mut self) {
        let mut seen: Vec<Vec<Letter>> = Vec::new();
        self.rels.retain(|r| {
            if r.is_empty() {
                return false;
            }
            let key = canonical(r);
            if seen.contains(&key) {
                return false;
            }
            seen.push(key);
            true
        });
    }

    fn substitute(&mut self, gen: usize, image: &[Letter]) {
        let inv = inverse(image);
        for r in &mut self.rels {
            if !r.iter().any(|l| l.gen() == gen) {
                continue;
            }
            let mut out = Vec::with_capacity(r.len());
            for &l in r.iter() {
                if l.gen() != gen {
                    out.push(l);
                } else if l.is_inverse() {
                    out.extend_from_slice(&inv);
                } else {
                    out.extend_from_slice(image);
                }
            }
            *r = cyc_reduce(&out);
        }
        self.alive[gen] = false;
    }

    fn kill_single_letters(&mut self) -> bool {
        let Some(g) = self.rels.iter().find(|r| r.len() == 1).map(|r| r[0].gen()) else {
            return false;
        };
        self.substitute(g, &[]);
        true
    }

    /// One shortening step by a long common piece with another relator.
    fn shorten(&mut self) -> bool {
        for i in 0..self.rels.len() {
            for j in 0..self.rels.len() {
                if i == j || self.rels[j].len() > self.rels[i].len() {
                    continue;
                }
                if let Some(r) = shorten_by(&self.rels[i], &self.rels[j]) {
                    self.rels[i] = r;
                    return true;
                }
            }
        }
        false
    }

    /// Solves the cheapest relator that contains some generator once.
    fn eliminate(&mut self) -> bool {
        let total = self.total();
        let mut best: Option<(usize, usize, usize)> = None; // (cost, relator, position)
        for (i, r) in self.rels.iter().enumerate() {
            for (k, l) in r.iter().enumerate() {
                if r.iter().filter(|m| m.gen() == l.gen()).count() != 1 {
                    continue;
                }
                let uses: usize = self
                    .rels
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, s)| s.iter().filter(|m| m.gen() == l.gen()).count())
                    .sum();
                let cost = total - r.len() + uses * (r.len() - 1);
                if best.is_none_or(|(c, _, _)| cost < c) {
                    best = Some((cost, i, k));
                }
            }
        }
        let Some((cost, i, k)) = best else { return false };
        if cost > GROWTH * total + 16 {
            return false;
        }
        let r = self.rels.remove(i);
        let l = r[k];
        // r = u l v = 1 gives l = u⁻¹ v⁻¹, hence the generator itself
        let rest: Vec<Letter> = r[k + 1..].iter().chain(&r[..k]).copied().collect();
        let image = if l.is_inverse() { rest } else { inverse(&rest) };
        self.substitute(l.gen(), &image);
        true
    }
}

/// Replaces in `r` (cyclically) the longest piece of a cyclic conjugate of
/// `s^{±1}` that is longer than half of `s`.
fn shorten_by(r: &[Letter], s: &[Letter]) -> Option<Vec<Letter>> {
    let n = r.len();
    let m = s.len();
    let mut best: Option<(usize, usize, Vec<Letter>)> = None; // (k, start in r, replacement)
    for t in [s.to_vec(), inverse(s)] {
        for rot in 0..m {
            let sr: Vec<Letter> = t[rot..].iter().chain(&t[..rot]).copied().collect();
            for start in 0..n {
                let mut k = 0;
                while k < m && k < n && r[(start + k) % n] == sr[k] {
                    k += 1;
                }
                if 2 * k > m && best.as_ref().is_none_or(|b| k > b.0) {
                    best = Some((k, start, inverse(&sr[k..])));
                }
            }
        }
    }
    let (k, start, rep) = best?;
    let mut out: Vec<Letter> = rep;
    out.extend((k..n).map(|d| r[(start + d) % n]));
    Some(cyc_reduce(&out))
}

fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

fn cyc_reduce(w: &[Letter]) -> Vec<Letter> {
    let w = free_reduce(w).into_letters();
    let mut a = 0;
    let mut b = w.len();
    while b - a >= 2 && w[a] == w[b - 1].inverse() {
        a += 1;
        b -= 1;
    }
    w[a..b].to_vec()
}

/// Least rotation of `r` or of its inverse.
fn canonical(r: &[Letter]) -> Vec<Letter> {
    let rot = |w: &[Letter]| {
        let k = crate::cyclic::min_rotation(w);
        w[k..].iter().chain(&w[..k]).copied().collect::<Vec<_>>()
    };
    rot(r).min(rot(&inverse(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::group_order;
    use crate::parse::parse_word;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let a = Alphabet::new(gens.iter().copied()).unwrap();
        let rels = rels.iter().map(|r| parse_word(r, &a).unwrap()).collect();
        Presentation::new(a, rels).unwrap()
    }

    #[test]
    fn kills_generators() {
        let p = simplify(&pres(&["x", "y", "z"], &["x", "y x^-1 z", "z^3"])).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.to_display_string(), "<z | z^3>");
    }

    #[test]
    fn relator_pieces() {
        // the second relator is the first followed by y
        let p = simplify(&pres(&["x", "y"], &["x y x y^-1 x", "x y x y^-1 x y"])).unwrap();
        assert_eq!(p.to_display_string(), "<x | x^3>");
    }

    #[test]
    fn preserves_order() {
        for (g, r, n) in [
            (&["x", "y"][..], &["x^2", "y^3", "(x y)^5"][..], 60),
            (&["x", "y"], &["x^4", "x^2 y^-2", "y^-1 x y x"], 8),
            (&["x", "y", "z"], &["x^2", "y^2", "z^2", "(x y)^3", "(y z)^3", "(x z)^2"], 24),
        ] {
            let p = pres(g, r);
            let q = simplify(&p).unwrap();
            assert_eq!(group_order(&q, 100_000).unwrap().index(), Some(n), "{}", q.to_display_string());
        }
    }
}
