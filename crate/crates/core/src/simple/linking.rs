//! Linked-pair count for a cyclic word drawn on the ribbon graph.
//!
//! Every corner of the word is a strand through the vertex. Two strands
//! either meet transversally there, or run side by side along a maximal
//! common segment (possibly with opposite orientations). Each encounter is
//! counted once from each of its two strands, at the end where the common
//! segment starts, so the self-intersection number is half the total.

use alloc::vec::Vec;

use super::geodesic::Ribbon;
use crate::word::Letter;

/// `x` is met before `y` when turning counter-clockwise from slot `s`.
fn ccw_before(s: usize, x: usize, y: usize, n: usize) -> bool {
    (x + n - s) % n < (y + n - s) % n
}

/// Chords `{p0, p1}` and `{q0, q1}` with four distinct endpoints interleave.
fn chords_cross(p0: usize, p1: usize, q0: usize, q1: usize) -> bool {
    let (lo, hi) = (p0.min(p1), p0.max(p1));
    let inside = |x: usize| lo < x && x < hi;
    inside(q0) != inside(q1)
}

/// Crossings of the curve carried by the primitive, cyclically reduced word
/// `w` inside the ribbon surface.
pub(crate) fn crossings(w: &[Letter], rib: &Ribbon) -> u64 {
    let n = w.len();
    if n < 2 {
        return 0;
    }
    let slots = rib.slots();
    let rev: Vec<Letter> = w.iter().rev().map(|l| l.inverse()).collect();
    let letter = |word: &[Letter], corner: usize, t: isize| -> Letter {
        word[((corner as isize + t).rem_euclid(n as isize)) as usize]
    };
    let mut total = 0u64;
    for i in 0..n {
        for (reversed, other) in [(false, w), (true, &rev[..])] {
            for j in 0..n {
                // the strand itself, read either way
                if (!reversed && j == i) || (reversed && j == (n - i) % n) {
                    continue;
                }
                let p_prev = letter(w, i, -1);
                let q_prev = letter(other, j, -1);
                if p_prev == q_prev {
                    continue;
                }
                let mut k = 0usize;
                while letter(w, i, k as isize) == letter(other, j, k as isize) {
                    k += 1;
                    assert!(k <= 2 * n, "strands agree for a full period: word is not primitive");
                }
                let in_p = rib.pos(p_prev.inverse());
                let in_q = rib.pos(q_prev.inverse());
                let linked = if k == 0 {
                    if reversed {
                        continue;
                    }
                    let out_p = rib.pos(letter(w, i, 0));
                    let out_q = rib.pos(letter(other, j, 0));
                    if in_p == out_q || in_q == out_p {
                        continue;
                    }
                    chords_cross(in_p, out_p, in_q, out_q)
                } else {
                    let s0 = rib.pos(letter(w, i, 0));
                    let e = rib.pos(letter(w, i, k as isize - 1).inverse());
                    let out_p = rib.pos(letter(w, i, k as isize));
                    let out_q = rib.pos(letter(other, j, k as isize));
                    ccw_before(s0, in_p, in_q, slots) == ccw_before(e, out_p, out_q, slots)
                };
                total += linked as u64;
            }
        }
    }
    debug_assert!(total.is_multiple_of(2), "unpaired encounter");
    total / 2
}
