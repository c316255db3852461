//! Degree-two Magnus coefficients and the γ₃ obstruction.
//!
//! Two routes compute the same numbers: a truncated power-series product
//! ([`magnus_deg2`]) and iterated Fox derivatives followed by augmentation
//! ([`fox_deg2`]). They share no code beyond the coordinate convention.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::surface::{abelianize, is_primitive, HomologyVector, SurfacePresentation};
use crate::word::Word;
use crate::Result;

/// Coefficient matrix of the degree-two Magnus term; entry `(i, j)` is the
/// coefficient of `x_i x_j` in homology coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Deg2Form {
    dim: usize,
    coeffs: Vec<i64>,
}

impl Deg2Form {
    pub fn zero(dim: usize) -> Self {
        Deg2Form { dim, coeffs: vec![0; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.coeffs[i * self.dim + j]
    }

    fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.coeffs[i * self.dim + j] += v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.coeffs.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(Deg2Form { dim, coeffs: rows.concat() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    /// The symplectic form `Σ E(a_i, b_i) − E(b_i, a_i)`: the degree-two term
    /// of the surface relator.
    pub fn omega(genus: usize) -> Self {
        let mut m = Deg2Form::zero(2 * genus);
        for i in 0..genus {
            m.add_at(i, genus + i, 1);
            m.add_at(genus + i, i, -1);
        }
        m
    }

    /// `Some(k)` when `self = k · ω`.
    pub fn omega_multiple(&self) -> Option<i64> {
        let genus = self.dim / 2;
        let k = self.get(0, genus);
        let omega = Deg2Form::omega(genus);
        self.coeffs
            .iter()
            .zip(&omega.coeffs)
            .all(|(&c, &o)| c == k * o)
            .then_some(k)
    }
}

/// Degree-one and degree-two Magnus coefficients of `w` in the free group on
/// the surface generators.
///
/// Uses `(v, M)·(u, N) = (v + u, M + N + v ⊗ u)` with `x ↦ (e_x, 0)` and
/// `x⁻¹ ↦ (−e_x, E_xx)`.
pub fn magnus_deg2(w: &Word, s: &SurfacePresentation) -> Result<(HomologyVector, Deg2Form)> {
    s.check(w)?;
    let dim = s.rank();
    let mut v = vec![0i64; dim];
    let mut m = Deg2Form::zero(dim);
    for l in w.letters() {
        let c = s.coordinate(l.gen());
        if l.is_inverse() {
            m.add_at(c, c, 1);
            for (i, &vi) in v.iter().enumerate() {
                m.add_at(i, c, -vi);
            }
            v[c] -= 1;
        } else {
            for (i, &vi) in v.iter().enumerate() {
                m.add_at(i, c, vi);
            }
            v[c] += 1;
        }
    }
    Ok((HomologyVector(v), m))
}

/// An element of the integral group ring of the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement(BTreeMap<Word, i64>);

impl GroupRingElement {
    fn add(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }
}

/// Fox derivative `∂w/∂x_gen`, with `∂(uv) = ∂u + u ∂v`.
pub fn fox_derivative(w: &Word, gen: usize) -> GroupRingElement {
    let mut out = GroupRingElement::default();
    let letters = w.letters();
    for (k, l) in letters.iter().enumerate() {
        if l.gen() != gen {
            continue;
        }
        if l.is_inverse() {
            // ∂(x⁻¹) = −x⁻¹
            out.add(Word::from_letters(letters[..=k].iter().copied()), -1);
        } else {
            out.add(Word::from_letters(letters[..k].iter().copied()), 1);
        }
    }
    out
}

/// Linear extension of [`fox_derivative`] to the group ring.
pub fn fox_derivative_ring(e: &GroupRingElement, gen: usize) -> GroupRingElement {
    let mut out = GroupRingElement::default();
    for (w, c) in e.terms() {
        for (u, d) in fox_derivative(w, gen).terms() {
            out.add(u.clone(), c * d);
        }
    }
    out
}

/// The same coefficients as [`magnus_deg2`], computed as `ε(∂_i ∂_j w)` for
/// the coefficient of `x_i x_j`.
pub fn fox_deg2(w: &Word, s: &SurfacePresentation) -> Result<(HomologyVector, Deg2Form)> {
    s.check(w)?;
    let dim = s.rank();
    let mut v = vec![0i64; dim];
    let mut m = Deg2Form::zero(dim);
    for j in 0..dim {
        let dj = fox_derivative(w, s.generator_at(j));
        v[j] = dj.augmentation();
        for i in 0..dim {
            let dij = fox_derivative_ring(&dj, s.generator_at(i));
            m.add_at(i, j, dij.augmentation());
        }
    }
    Ok((HomologyVector(v), m))
}

/// Membership of `w` in `[π, [π, π]]` for the surface group `π`.
///
/// The class-two quotient `γ₂/γ₃` of the surface group is `Λ²H / ⟨ω⟩`, so
/// `w ∈ γ₃` exactly when its abelianization vanishes and its degree-two
/// term is an integer multiple of `ω`.
pub fn in_gamma3(w: &Word, s: &SurfacePresentation) -> Result<bool> {
    let (v, m) = magnus_deg2(w, s)?;
    Ok(v.is_zero() && m.omega_multiple().is_some())
}

/// The homological necessary conditions for simpleness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub word: Word,
    pub homology: HomologyVector,
    pub primitive: bool,
    pub in_commutator: bool,
    pub in_gamma3: bool,
    pub possibly_simple: bool,
}

pub fn obstruction_report(w: &Word, s: &SurfacePresentation) -> Result<ObstructionReport> {
    let homology = abelianize(w, s)?;
    let (_, m) = magnus_deg2(w, s)?;
    let primitive = is_primitive(&homology);
    let in_commutator = homology.is_zero();
    let in_gamma3 = in_commutator && m.omega_multiple().is_some();
    Ok(ObstructionReport {
        word: w.clone(),
        homology,
        primitive,
        in_commutator,
        in_gamma3,
        possibly_simple: primitive && !in_gamma3,
    })
}
