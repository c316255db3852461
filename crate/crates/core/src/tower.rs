//! Emitters for the presentation tower `D_w` and the deck-group embeddings.
//!
//! Given `H = <h1..hm | R1..Rs>` and a word `w` over the `h_i`, the chain is
//!
//! * `U = <g1, g2 | R_i'>` with `R_i' = ψ(R_i)`, where
//!   `ψ(h_i) = b^{-(i-1)} a b^{i-1}`, `a = [g1,[g1,g2]]`, `b = [g2,[g1,g2]]`;
//! * `J = <U, g3, g4 | g3 g1 g3⁻¹ = g1², g4⁻¹ g2 g4 = g2²>`;
//! * `K_0 = <J, g5 | g5⁻¹ g3 g5 = g3², g5⁻¹ g4 g5 = g4²>` and, for
//!   `i = 1..n−8`, `K_i = <K_{i−1}, g_{i+5} | g_{i+5}⁻¹ g_{i+4} g_{i+5} = g_{i+4}²>`;
//! * `Q = <g_{n−2}, g_{n−1}, g_n | g_{n−1}⁻¹ g_{n−2} g_{n−1} = g_{n−2}²,
//!   g_n⁻¹ g_{n−1} g_n = g_{n−1}²>`;
//! * `D_w = <K_{n−8} ∗ Q | g_{n−2} = g_{n−3}, g_n = [ψ(w), x]>` with `x = g1`,
//!
//! where `n = 2^{2g} − 1`. The last `K` introduces `g_{n−3}`, which is what
//! the amalgamating relation needs.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use crate::deck::{mod2_simple_representatives, DeckPresentation, NormalGeneratorSet};
use crate::hom::Homomorphism;
use crate::presentation::Presentation;
use crate::surface::SurfacePresentation;
use crate::word::{commutator, Alphabet, Word};
use crate::{Error, Result};

/// Everything emitted for one `(H, w, g)`.
#[derive(Clone, Debug)]
pub struct TowerOutput {
    pub genus: usize,
    /// Number of `D_w` generators, `2^{2g} − 1`.
    pub n: usize,
    pub u: Presentation,
    pub j: Presentation,
    /// `K_0, K_1, ..., K_{n−8}`, each including everything below it.
    pub k_chain: Vec<Presentation>,
    /// `Q` on its own three generators.
    pub q: Presentation,
    pub d_w: Presentation,
    /// Named ranges of `d_w`'s relators: `U`, `J`, `K_i`, `Q`, `D_w`.
    pub layers: Vec<(String, Range<usize>)>,
    pub psi: Homomorphism,
    pub x_def: Word,
    pub a_def: Word,
    pub b_def: Word,
    /// `g_i ↦ c_i²` into the surface group.
    pub realization: Homomorphism,
    /// Relators of `D_w` realized in the surface group, their conjugates by
    /// the surface generators, the killed conjugates `t c_i² t⁻¹`, and the
    /// surface relator; `conjugators` holds the conjugator set.
    pub cover_normal_gens: NormalGeneratorSet,
}

fn g_alphabet(n: usize) -> Alphabet {
    Alphabet::indexed("g", n)
}

/// `(x, a, b)` over `g1, g2`.
fn defs() -> (Word, Word, Word) {
    let (g1, g2) = (Word::generator(0), Word::generator(1));
    let c = commutator(&g1, &g2);
    (g1.clone(), commutator(&g1, &c), commutator(&g2, &c))
}

/// `h_i ↦ b^{-(i-1)} a b^{i-1}` into the free group on `g1, g2`.
pub fn psi_embedding(h: &Presentation) -> Homomorphism {
    let (_, a, b) = defs();
    let images = (0..h.rank()).map(|i| a.conjugate_by(&b.pow(-(i as i64)))).collect();
    Homomorphism::new(h.alphabet().clone(), g_alphabet(2), images).expect("one image per generator")
}

/// `t⁻¹ s t = s²` as a relator.
fn hnn(t: usize, s: usize) -> Word {
    let (t, s) = (Word::generator(t), Word::generator(s));
    &(&(&t.inverse() * &s) * &t) * &s.pow(-2)
}

/// Emits the tower for `w ∈ H` at genus `genus`.
pub fn rabin_emit(h: &Presentation, w: &Word, genus: usize) -> Result<TowerOutput> {
    let s = SurfacePresentation::new(genus)?;
    h.check(w).map_err(|_| {
        Error::MalformedPresentation(String::from("the word uses generators outside H"))
    })?;
    let n = (1usize << (2 * genus)) - 1;
    let psi = psi_embedding(h);
    let (x, a, b) = defs();
    let gen = Word::generator;

    let mut layers = Vec::new();
    let mut rels: Vec<Word> = Vec::new();
    let mut mark = |name: String, rels: &Vec<Word>, start: usize| layers.push((name, start..rels.len()));

    let start = rels.len();
    for r in h.relators() {
        rels.push(psi.apply(r)?);
    }
    let u = Presentation::new(g_alphabet(2), rels.clone())?;
    mark(String::from("U"), &rels, start);

    let start = rels.len();
    // g3 g1 g3⁻¹ = g1²  and  g4⁻¹ g2 g4 = g2²
    rels.push(&(&(&gen(2) * &gen(0)) * &gen(2).inverse()) * &gen(0).pow(-2));
    rels.push(hnn(3, 1));
    let j = Presentation::new(g_alphabet(4), rels.clone())?;
    mark(String::from("J"), &rels, start);

    let mut k_chain = Vec::new();
    let start = rels.len();
    rels.push(hnn(4, 2));
    rels.push(hnn(4, 3));
    k_chain.push(Presentation::new(g_alphabet(5), rels.clone())?);
    mark(String::from("K0"), &rels, start);
    for i in 1..=n - 8 {
        let start = rels.len();
        // introduces g_{i+5}
        rels.push(hnn(i + 4, i + 3));
        k_chain.push(Presentation::new(g_alphabet(i + 5), rels.clone())?);
        mark(alloc::format!("K{i}"), &rels, start);
    }

    // Q on g_{n-2}, g_{n-1}, g_n (0-based n-3, n-2, n-1)
    let q_alphabet = Alphabet::new([n - 2, n - 1, n].map(|k| alloc::format!("g{k}")))?;
    let q = Presentation::new(q_alphabet, alloc::vec![hnn(1, 0), hnn(2, 1)])?;
    let start = rels.len();
    rels.push(hnn(n - 2, n - 3));
    rels.push(hnn(n - 1, n - 2));
    mark(String::from("Q"), &rels, start);

    let start = rels.len();
    rels.push(&gen(n - 3) * &gen(n - 4).inverse());
    let psi_w = psi.apply(w)?;
    rels.push(&commutator(&psi_w, &x) * &gen(n - 1).inverse());
    mark(String::from("D_w"), &rels, start);
    let d_w = Presentation::new(g_alphabet(n), rels)?;

    // realization g_i = c_i² in the surface group
    let reps = mod2_simple_representatives(&s)?;
    let squares: Vec<Word> = reps.iter().map(|(_, c)| c.pow(2)).collect();
    let realization = Homomorphism::new(g_alphabet(n), s.alphabet().clone(), squares.clone())?;
    let conjugators = mod2_conjugators(&s)?;
    let mut core = Vec::new();
    let realized: Vec<Word> = d_w.relators().iter().map(|r| realization.apply(r)).collect::<Result<_>>()?;
    core.extend(realized.iter().cloned());
    for gen in 0..s.rank() {
        let x = Word::generator(gen);
        core.extend(realized.iter().map(|r| r.conjugate_by(&x)));
    }
    for t in &conjugators {
        core.extend(squares.iter().map(|c2| c2.conjugate_by(t)));
    }
    core.push(s.relator().clone());

    Ok(TowerOutput {
        genus,
        n,
        u,
        j,
        k_chain,
        q,
        d_w,
        layers,
        psi,
        x_def: x,
        a_def: a,
        b_def: b,
        realization,
        cover_normal_gens: NormalGeneratorSet { core, conjugators },
    })
}

/// Words for the nontrivial elements of `H₁(S; ℤ/2)`.
fn mod2_conjugators(s: &SurfacePresentation) -> Result<Vec<Word>> {
    let d = DeckPresentation::mod2(s)?;
    Ok(crate::deck::lemma1_normal_generators(&d, s)?.conjugators)
}

/// Embeds `G` in a two-generator group on `u, t`, sending the distinguished
/// generator to `u` and the `i`-th other generator to
/// `y_i = t⁻¹ b⁻ⁱ u bⁱ t u⁻ⁱ b⁻¹ uⁱ` with `b = t⁻¹ u t`; the relators are
/// the images of `G`'s relators. The images are distinct reduced words. The
/// map is injective when the distinguished generator has infinite order in
/// `G`; otherwise it is only a homomorphism.
pub fn embed_two_generator(g: &Presentation, distinguished: usize) -> Result<(Presentation, Homomorphism)> {
    if distinguished >= g.rank() {
        return Err(Error::UnknownGenerator(alloc::format!("#{}", distinguished + 1)));
    }
    let (u, t) = (Word::generator(0), Word::generator(1));
    let b = u.conjugate_by(&t.inverse());
    let mut images = Vec::with_capacity(g.rank());
    let mut i = 0i64;
    for k in 0..g.rank() {
        if k == distinguished {
            images.push(u.clone());
            continue;
        }
        i += 1;
        let y = &(&(&(&(&t.inverse() * &b.pow(-i)) * &u) * &b.pow(i)) * &t) * &(&(&u.pow(-i) * &b.inverse()) * &u.pow(i));
        images.push(y);
    }
    let target = Alphabet::new(["u", "t"])?;
    let map = Homomorphism::new(g.alphabet().clone(), target.clone(), images)?;
    let rels = g.relators().iter().map(|r| map.apply(r)).collect::<Result<Vec<_>>>()?;
    Ok((Presentation::new(target, rels)?, map))
}

/// Realizes `G` as the deck group of a cover of the genus-`genus` surface.
///
/// With `s < 2g` generators, `x_k` becomes the `k`-th surface generator in
/// homology order (`a1, ..., ag, b1, ..., bg`) and the remaining generators
/// are killed. Otherwise `G` is first embedded in a two-generator group.
/// Returns the deck presentation and the surface generator carrying `x_1`.
pub fn corollary1_cover(g: &Presentation, genus: usize) -> Result<(DeckPresentation, usize)> {
    let s = SurfacePresentation::new(genus)?;
    if g.rank() >= s.rank() {
        let (two, _) = embed_two_generator(g, 0)?;
        return corollary1_cover(&two, genus);
    }
    let images: Vec<Word> = (0..g.rank()).map(|k| Word::generator(s.generator_at(k))).collect();
    let map = Homomorphism::new(g.alphabet().clone(), s.alphabet().clone(), images)?;
    let mut rels = g.relators().iter().map(|r| map.apply(r)).collect::<Result<Vec<_>>>()?;
    rels.extend((g.rank()..s.rank()).map(|k| Word::generator(s.generator_at(k))));
    Ok((DeckPresentation::new(&s, rels)?, s.generator_at(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::CyclicWord;
    use crate::parse::{parse_word, render_word};

    fn h(gens: &[&str], rels: &[&str]) -> Presentation {
        let a = Alphabet::new(gens.iter().copied()).unwrap();
        let rels = rels.iter().map(|r| parse_word(r, &a).unwrap()).collect();
        Presentation::new(a, rels).unwrap()
    }

    #[test]
    fn psi_images() {
        let hh = h(&["h1", "h2", "h3"], &[]);
        let psi = psi_embedding(&hh);
        let (_, a, b) = defs();
        assert_eq!(a.len(), 10);
        assert_eq!(psi.image(0), &a);
        assert_eq!(psi.image(1), &(&(&b.inverse() * &a) * &b));
        assert_eq!(psi.image(2), &(&(&b.pow(-2) * &a) * &b.pow(2)));
    }

    #[test]
    fn chain_shape() {
        let hh = h(&["h"], &["h"]);
        let w = parse_word("h", hh.alphabet()).unwrap();
        let t = rabin_emit(&hh, &w, 2).unwrap();
        assert_eq!(t.n, 15);
        assert_eq!(t.d_w.rank(), 15);
        assert_eq!(t.k_chain.len(), 8);
        assert_eq!(t.k_chain.last().unwrap().rank(), 12);
        let names: Vec<&str> = t.layers.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["U", "J", "K0", "K1", "K2", "K3", "K4", "K5", "K6", "K7", "Q", "D_w"]);
        // s + 2 + 2 + (n − 8) + 2 + 2
        assert_eq!(t.d_w.relators().len(), 1 + 2 + 2 + 7 + 2 + 2);
        let a = t.d_w.alphabet();
        // R1' = ψ(h) = a, up to the cyclic reduction relators get
        assert_eq!(CyclicWord::new(&t.d_w.relators()[0]), CyclicWord::new(&t.a_def));
        let last = t.d_w.relators().last().unwrap();
        let expect = &commutator(&t.a_def, &t.x_def) * &Word::generator(14).inverse();
        assert_eq!(last, &expect);
        assert_eq!(render_word(&t.d_w.relators()[t.d_w.relators().len() - 2], a), "g13 g12^-1");
    }

    #[test]
    fn corollary1_cyclic() {
        let g = h(&["x"], &["x^3"]);
        let (d, dist) = corollary1_cover(&g, 2).unwrap();
        let s = SurfacePresentation::new(2).unwrap();
        let names: Vec<String> = d.relators().iter().map(|r| render_word(r, s.alphabet())).collect();
        assert_eq!(names, ["a1^3", "a2", "b1", "b2"]);
        assert_eq!(dist, 0);
    }

    #[test]
    fn two_generator_embedding() {
        let g = h(&["x", "y", "z"], &["x^2", "y z y^-1 z^-1"]);
        let (p, map) = embed_two_generator(&g, 0).unwrap();
        assert_eq!(map.image(0), &Word::generator(0));
        assert_eq!(p.relators()[0], Word::generator(0).pow(2));
        assert_ne!(map.image(1), map.image(2));
        assert_ne!(map.image(1), map.image(0));
    }
}
