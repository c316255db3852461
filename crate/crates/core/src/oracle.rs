//! Numerical cross-check: closed geodesics on the regular `4g`-gon surface.
//!
//! The fundamental domain is the regular `4g`-gon with interior angles
//! `π / 2g`, centred at the origin of the disc. Side `s` has its midpoint at
//! angle `2πs / 4g`; the generator `x` crosses side `pos(x)` and comes back
//! in through side `pos(x⁻¹)`, with the same slot numbering as the
//! combinatorial detector. Geodesics are traced in the Klein model, where
//! they are straight chords, and self-crossings are counted chord by chord.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Mul, Neg, Sub};

use crate::cyclic::CyclicWord;
use crate::simple::{IntersectionCount, Ribbon};
use crate::surface::SurfacePresentation;
use crate::word::Letter;
use crate::{Error, Result};

/// Tolerance used when validating relator products.
pub const RELATOR_TOLERANCE: f64 = 1e-9;
/// Crossing angles below this (radians) make the count indeterminate.
pub const ANGLE_TOLERANCE: f64 = 1e-7;
const EDGE_EPS: f64 = 1e-9;
/// Klein-model step taken past a chord's exit point.
const STEP: f64 = 1e-6;
/// Endpoints closer than this are the same boundary point.
const MEET_EPS: f64 = 1e-7;
/// Slack when matching the traced length against the translation length.
const LENGTH_EPS: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    const fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    fn expi(t: f64) -> Self {
        C64::new(libm::cos(t), libm::sin(t))
    }

    fn conj(self) -> Self {
        C64::new(self.re, -self.im)
    }

    fn norm2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    fn abs(self) -> f64 {
        libm::sqrt(self.norm2())
    }

    fn scale(self, k: f64) -> Self {
        C64::new(self.re * k, self.im * k)
    }

    fn div(self, o: C64) -> Self {
        let d = o.norm2();
        let n = self * o.conj();
        C64::new(n.re / d, n.im / d)
    }

    fn dot(self, o: C64) -> f64 {
        self.re * o.re + self.im * o.im
    }

    fn cross(self, o: C64) -> f64 {
        self.re * o.im - self.im * o.re
    }
}

impl Add for C64 {
    type Output = C64;
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for C64 {
    type Output = C64;
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for C64 {
    type Output = C64;
    fn mul(self, o: C64) -> C64 {
        C64::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Neg for C64 {
    type Output = C64;
    fn neg(self) -> C64 {
        C64::new(-self.re, -self.im)
    }
}

/// Disc isometry `z ↦ (αz + β) / (β̄z + ᾱ)` with `|α|² − |β|² = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Isometry {
    alpha: C64,
    beta: C64,
}

impl Isometry {
    const IDENTITY: Isometry = Isometry { alpha: C64::new(1.0, 0.0), beta: C64::new(0.0, 0.0) };

    fn rotation(theta: f64) -> Self {
        Isometry { alpha: C64::expi(theta / 2.0), beta: C64::new(0.0, 0.0) }
    }

    /// Translation by hyperbolic distance `t` towards `+1`.
    fn translation(t: f64) -> Self {
        Isometry { alpha: C64::new(libm::cosh(t / 2.0), 0.0), beta: C64::new(libm::sinh(t / 2.0), 0.0) }
    }

    fn compose(self, o: Isometry) -> Isometry {
        // [[a, b], [b̄, ā]] · [[c, d], [d̄, c̄]]
        Isometry {
            alpha: self.alpha * o.alpha + self.beta * o.beta.conj(),
            beta: self.alpha * o.beta + self.beta * o.alpha.conj(),
        }
    }

    fn inverse(self) -> Isometry {
        Isometry { alpha: self.alpha.conj(), beta: -self.beta }
    }

    fn apply(self, z: C64) -> C64 {
        (self.alpha * z + self.beta).div(self.beta.conj() * z + self.alpha.conj())
    }

    fn trace(self) -> f64 {
        2.0 * self.alpha.re
    }

    /// Repelling and attracting fixed points on the boundary circle.
    fn axis(self) -> Option<(C64, C64)> {
        let a = self.alpha.re;
        if libm::fabs(a) <= 1.0 + 1e-12 {
            return None;
        }
        let s = libm::sqrt(a * a - 1.0);
        let bc = self.beta.conj();
        let plus = C64::new(s, self.alpha.im).div(bc);
        let minus = C64::new(-s, self.alpha.im).div(bc);
        // the fixed point with |β̄z + ᾱ| > 1 attracts
        Some(if a > 0.0 { (minus, plus) } else { (plus, minus) })
    }

    /// The same isometry as a unimodular real matrix acting on the upper
    /// half-plane (conjugation by the Cayley transform).
    fn to_real(self) -> [[f64; 2]; 2] {
        let (a, b) = (self.alpha, self.beta);
        [[a.re + b.re, a.im + b.im], [b.im - a.im, a.re - b.re]]
    }
}

/// The regular `4g`-gon structure with its side pairings.
#[derive(Clone, Debug)]
pub struct HyperbolicStructure {
    genus: usize,
    rib: Ribbon,
    /// Klein-model distance from the centre to each side.
    apothem: f64,
    pairings: Vec<Isometry>,
}

impl HyperbolicStructure {
    pub fn regular(genus: usize) -> Result<Self> {
        let s = SurfacePresentation::new(genus)?;
        let rib = Ribbon::new(genus);
        let n = rib.slots();
        // right triangle centre / side midpoint / vertex: cosh d = cot(π/n)
        let d = libm::acosh(1.0 / libm::tan(PI / n as f64));
        let apothem = libm::tanh(d);
        let mut pairings = Vec::with_capacity(s.rank());
        for gen in 0..s.rank() {
            let to = side_angle(rib.pos(Letter::pos(gen)), n);
            let from = side_angle(rib.pos(Letter::neg(gen)), n);
            pairings.push(
                Isometry::rotation(to)
                    .compose(Isometry::translation(2.0 * d))
                    .compose(Isometry::rotation(PI - from)),
            );
        }
        let h = HyperbolicStructure { genus, rib, apothem, pairings };
        h.validate()?;
        Ok(h)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Unimodular real matrix of a generator.
    pub fn generator_matrix(&self, gen: usize) -> [[f64; 2]; 2] {
        self.pairings[gen].to_real()
    }

    fn letter(&self, l: Letter) -> Isometry {
        let m = self.pairings[l.gen()];
        if l.is_inverse() {
            m.inverse()
        } else {
            m
        }
    }

    fn word(&self, letters: &[Letter]) -> Isometry {
        letters.iter().fold(Isometry::IDENTITY, |acc, &l| acc.compose(self.letter(l)))
    }

    /// Checks the relator product is `±I` and every generator is hyperbolic.
    pub fn validate(&self) -> Result<()> {
        let s = SurfacePresentation::new(self.genus)?;
        let m = self.word(s.relator().letters()).to_real();
        let plus = (m[0][0] - 1.0).abs().max((m[1][1] - 1.0).abs());
        let minus = (m[0][0] + 1.0).abs().max((m[1][1] + 1.0).abs());
        let off = m[0][1].abs().max(m[1][0].abs());
        if plus.min(minus).max(off) > RELATOR_TOLERANCE {
            return Err(Error::InvalidStructure(alloc::format!(
                "relator product is not ±I (deviation {:e})",
                plus.min(minus).max(off)
            )));
        }
        for (g, p) in self.pairings.iter().enumerate() {
            if p.trace().abs() <= 2.0 {
                return Err(Error::InvalidStructure(alloc::format!(
                    "generator {} is not hyperbolic",
                    g + 1
                )));
            }
        }
        Ok(())
    }

    fn normal(&self, side: usize) -> C64 {
        C64::expi(side_angle(side, self.rib.slots()))
    }
}

fn side_angle(side: usize, n: usize) -> f64 {
    2.0 * PI * side as f64 / n as f64
}

/// Result of the geometric count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Count(IntersectionCount),
    /// A numerical tie (grazing crossing, geodesic through a polygon vertex,
    /// or a trace that did not close up); never resolved silently.
    Indeterminate(String),
}

struct Chord {
    start: C64,
    end: C64,
    start_side: usize,
    end_side: usize,
    /// The chord ends at a corner of the polygon, i.e. the geodesic passes
    /// through the (single) vertex of the surface.
    start_vertex: bool,
    end_vertex: bool,
    /// The chord runs along this side, from corner to corner.
    along: Option<usize>,
}

/// Counts transverse self-crossings of the closed geodesic in the class of
/// `c`.
pub fn geodesic_oracle(c: &CyclicWord, h: &HyperbolicStructure) -> Result<OracleOutcome> {
    let s = SurfacePresentation::new(h.genus)?;
    s.check(&c.to_word())?;
    if c.is_empty() {
        return Err(Error::TrivialClass);
    }
    let (root, k) = c.primitive_root();
    let base = match primitive_count(root.letters(), h)? {
        OracleOutcome::Count(i) => i.0,
        other => return Ok(other),
    };
    let k = k as u64;
    Ok(OracleOutcome::Count(IntersectionCount(k * k * base + k - 1)))
}

fn primitive_count(letters: &[Letter], h: &HyperbolicStructure) -> Result<OracleOutcome> {
    let m = h.word(letters);
    let Some((mut p, mut q)) = m.axis() else {
        return Err(Error::TrivialClass);
    };
    let n = h.rib.slots();

    // move the axis until its point nearest the centre lies in the polygon
    let mut settled = false;
    for _ in 0..1_000 {
        let c = nearest_to_origin(p, q);
        let (side, excess) = (0..n)
            .map(|s| (s, c.dot(h.normal(s)) - h.apothem))
            .fold((0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a });
        if excess <= EDGE_EPS {
            settled = true;
            break;
        }
        let back = h.letter(h.rib.at(side)).inverse();
        p = back.apply(p);
        q = back.apply(q);
        p = p.scale(1.0 / p.abs());
        q = q.scale(1.0 / q.abs());
    }
    if !settled {
        return Ok(OracleOutcome::Indeterminate("axis did not settle into the polygon".into()));
    }

    // one period of the geodesic has the translation length of the word
    let period = 2.0 * libm::acosh(m.trace().abs() / 2.0);
    let mut chords: Vec<Chord> = Vec::new();
    let mut traced = 0.0;
    while traced < period - LENGTH_EPS {
        let chord = match clip(p, q, h) {
            Ok(ch) => ch,
            Err(why) => return Ok(OracleOutcome::Indeterminate(why)),
        };
        traced += klein_distance(chord.start, chord.end);
        if chords.len() > 64 * letters.len() + 64 {
            return Ok(OracleOutcome::Indeterminate("geodesic trace did not close".into()));
        }
        // step just past the exit point and pull that point back into the
        // polygon; this also handles exits through a corner
        let dir = chord.end - chord.start;
        let ahead = chord.end + dir.scale(STEP / dir.abs());
        let back = pull_into(ahead, h);
        p = back.apply(p);
        q = back.apply(q);
        // renormalize onto the circle to stop drift
        p = p.scale(1.0 / p.abs());
        q = q.scale(1.0 / q.abs());
        chords.push(chord);
    }
    if traced > period + LENGTH_EPS {
        return Ok(OracleOutcome::Indeterminate("geodesic trace did not close".into()));
    }

    // distinct passes through the vertex cross there, once per pair
    let passes = chords.iter().filter(|c| c.end_vertex).count() as u64;
    let mut count = passes * passes.saturating_sub(1) / 2;
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            match crossing(&chords[i], &chords[j]) {
                Ok(true) => count += 1,
                Ok(false) => {}
                Err(why) => return Ok(OracleOutcome::Indeterminate(why)),
            }
        }
    }
    Ok(OracleOutcome::Count(IntersectionCount(count)))
}

/// Isometry taking the Klein-model point `k` into the polygon, built from
/// pairings across the most violated side (each step moves the point closer
/// to the centre, as the polygon is the Dirichlet domain of the origin).
fn pull_into(k: C64, h: &HyperbolicStructure) -> Isometry {
    let n = h.rib.slots();
    let mut z = klein_to_disc(k);
    let mut acc = Isometry::IDENTITY;
    for _ in 0..10_000 {
        let k = disc_to_klein(z);
        let (side, excess) = (0..n)
            .map(|s| (s, k.dot(h.normal(s)) - h.apothem))
            .fold((0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a });
        if excess <= 0.0 {
            break;
        }
        let back = h.letter(h.rib.at(side)).inverse();
        z = back.apply(z);
        acc = back.compose(acc);
    }
    acc
}

fn klein_distance(x: C64, y: C64) -> f64 {
    let c = (1.0 - x.dot(y)) / libm::sqrt((1.0 - x.norm2()) * (1.0 - y.norm2()));
    libm::acosh(c.max(1.0))
}

fn klein_to_disc(k: C64) -> C64 {
    k.scale(1.0 / (1.0 + libm::sqrt((1.0 - k.norm2()).max(0.0))))
}

fn disc_to_klein(z: C64) -> C64 {
    z.scale(2.0 / (1.0 + z.norm2()))
}

fn nearest_to_origin(p: C64, q: C64) -> C64 {
    let d = q - p;
    let t = -p.dot(d) / d.norm2();
    p + d.scale(t)
}

/// The part of chord `pq` inside the polygon.
fn clip(p: C64, q: C64, h: &HyperbolicStructure) -> core::result::Result<Chord, String> {
    let d = q - p;
    let n = h.rib.slots();
    let unit = d.scale(1.0 / d.abs());
    for s in 0..n {
        let u = h.normal(s);
        if (p.dot(u) - h.apothem).abs() < EDGE_EPS && unit.dot(u).abs() < EDGE_EPS {
            let half = PI / n as f64;
            let r = h.apothem / libm::cos(half);
            let theta = side_angle(s, n);
            let (v0, v1) = (C64::expi(theta - half).scale(r), C64::expi(theta + half).scale(r));
            let (start, end) = if (v1 - v0).dot(d) > 0.0 { (v0, v1) } else { (v1, v0) };
            return Ok(Chord {
                start,
                end,
                start_side: s,
                end_side: s,
                start_vertex: true,
                end_vertex: true,
                along: Some(s),
            });
        }
    }
    let (mut t_in, mut t_out) = (f64::MIN, f64::MAX);
    let (mut s_in, mut s_out) = (usize::MAX, usize::MAX);
    let mut exits: Vec<f64> = Vec::new();
    let mut entries: Vec<f64> = Vec::new();
    for s in 0..n {
        let u = h.normal(s);
        let a = p.dot(u);
        let b = d.dot(u);
        if b.abs() < 1e-15 {
            continue;
        }
        let t = (h.apothem - a) / b;
        if b > 0.0 {
            exits.push(t);
            if t < t_out {
                t_out = t;
                s_out = s;
            }
        } else {
            entries.push(t);
            if t > t_in {
                t_in = t;
                s_in = s;
            }
        }
    }
    if !(t_in < t_out) || s_in == usize::MAX || s_out == usize::MAX {
        return Err("geodesic misses the fundamental polygon".into());
    }
    let tied = |v: &[f64], best: f64| v.iter().filter(|&&t| (t - best).abs() < EDGE_EPS).count() > 1;
    Ok(Chord {
        start: p + d.scale(t_in),
        end: p + d.scale(t_out),
        start_side: s_in,
        end_side: s_out,
        start_vertex: tied(&entries, t_in),
        end_vertex: tied(&exits, t_out),
        along: None,
    })
}

/// Whether two chords cross, with points on the polygon boundary assigned
/// to one side of each glued pair so every crossing is seen exactly once.
fn crossing(a: &Chord, b: &Chord) -> core::result::Result<bool, String> {
    match (a.along, b.along) {
        (Some(_), Some(_)) => return Ok(false),
        (Some(s), None) => return Ok(meets_side(b, s, a)),
        (None, Some(s)) => return Ok(meets_side(a, s, b)),
        (None, None) => {}
    }
    // strands meeting on the boundary: decided by position, as the line
    // parameters are badly conditioned for shallow crossings
    for (pa, sa, va) in a.ends() {
        for (pb, sb, vb) in b.ends() {
            if (pa - pb).abs() < MEET_EPS {
                if va || vb {
                    // counted with the vertex passes
                    return Ok(false);
                }
                if sa != sb {
                    return Err("chords meet on two different sides".into());
                }
                return Ok(is_kept_side(sa));
            }
        }
    }
    let da = a.end - a.start;
    let db = b.end - b.start;
    let denom = da.cross(db);
    let sin = denom.abs() / (da.abs() * db.abs());
    let r = b.start - a.start;
    if sin < ANGLE_TOLERANCE {
        // (nearly) parallel: a crossing here could not be resolved
        let gap = r.cross(da).abs() / da.abs();
        return if gap < 1e-9 { Err("overlapping chords".into()) } else { Ok(false) };
    }
    let s = r.cross(db) / denom;
    let t = r.cross(da) / denom;
    let inside = |x: f64| x > EDGE_EPS && x < 1.0 - EDGE_EPS;
    let outside = |x: f64| !(-EDGE_EPS..=1.0 + EDGE_EPS).contains(&x);
    if outside(s) || outside(t) {
        return Ok(false);
    }
    if inside(s) && inside(t) {
        return Ok(true);
    }
    Err("crossing too close to the polygon boundary".into())
}

impl Chord {
    /// Endpoints with their side and corner flag.
    fn ends(&self) -> [(C64, usize, bool); 2] {
        [(self.start, self.start_side, self.start_vertex), (self.end, self.end_side, self.end_vertex)]
    }
}

/// A chord running along side `s` is crossed by `other` exactly where
/// `other` has an endpoint on `s` away from the corners (the continuation of
/// that strand starts on the partner side, where there is no copy of the
/// side chord).
fn meets_side(other: &Chord, s: usize, side: &Chord) -> bool {
    let interior = |x: C64| (x - side.start).abs() > 1e-7 && (x - side.end).abs() > 1e-7;
    (other.start_side == s && !other.start_vertex && interior(other.start))
        || (other.end_side == s && !other.end_vertex && interior(other.end))
}

/// Of the two glued sides `pos(x)` and `pos(x⁻¹)`, boundary points are kept
/// on the one belonging to the generator itself.
fn is_kept_side(side: usize) -> bool {
    matches!(side % 4, 0 | 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    fn oracle(t: &str) -> OracleOutcome {
        let s = SurfacePresentation::new(2).unwrap();
        let h = HyperbolicStructure::regular(2).unwrap();
        let c = CyclicWord::new(&parse_word(t, s.alphabet()).unwrap());
        geodesic_oracle(&c, &h).unwrap()
    }

    #[test]
    fn structure_is_valid() {
        for g in 2..5 {
            HyperbolicStructure::regular(g).unwrap();
        }
    }

    #[test]
    fn unimodular() {
        let h = HyperbolicStructure::regular(2).unwrap();
        for g in 0..4 {
            let m = h.generator_matrix(g);
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            assert!((det - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(oracle("a1"), OracleOutcome::Count(IntersectionCount(0)));
        assert_eq!(oracle("a1 b1"), OracleOutcome::Count(IntersectionCount(0)));
        assert_eq!(oracle("a1^2"), OracleOutcome::Count(IntersectionCount(1)));
        assert_eq!(oracle("[a1,b1]"), OracleOutcome::Count(IntersectionCount(0)));
    }
}
