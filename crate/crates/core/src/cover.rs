//! Regular covers given by membership-deciding quotients.
//!
//! Level 1 is the mod-`m` homology cover: `w` lifts to a closed curve iff its
//! homology class vanishes mod `m`. Level 2 is the mod-2 homology cover of
//! the mod-2 homology cover. Its membership test rewrites `w` into Schreier
//! generators of the level-1 subgroup and asks whether the mod-2 class of the
//! result lies in the span of the rewritten (conjugated) surface relators,
//! i.e. whether it vanishes in `H₁(S̃; ℤ/2)`. The genus-`ĝ` presentation of
//! the level-1 cover is never built beyond that span.

use alloc::string::String;
use alloc::vec::Vec;

use crate::gf2::{BitVector, Span};
use crate::surface::{abelianize_unchecked, SurfacePresentation};
use crate::word::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// Largest transversal built for Schreier rewriting.
pub const MAX_TRANSVERSAL: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverLevel {
    /// The mod-`m` homology cover.
    Homology { modulus: u32 },
    /// The mod-2 homology cover of the mod-2 homology cover.
    ComposedMod2,
}

/// A regular cover of the genus-`g` surface.
#[derive(Clone, Debug)]
pub struct CoverSpec {
    base: SurfacePresentation,
    level: CoverLevel,
    schreier: Option<Schreier>,
    /// Level 2: span of the rewritten relators in `H₁(S̃; ℤ/2)` coordinates.
    relator_span: Option<Span>,
}

/// Schreier transversal and generators of the mod-`m` homology subgroup.
#[derive(Clone, Debug)]
struct Schreier {
    m: u32,
    transversal: Vec<Word>,
    /// `(coset, generator)` to Schreier generator; `None` on tree edges.
    table: Vec<Option<u32>>,
    generators: Vec<Word>,
    alphabet: Alphabet,
}

/// The mod-`m` homology cover.
pub fn mod_m_cover(s: &SurfacePresentation, m: u32) -> Result<CoverSpec> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    let schreier = Schreier::build(s, m);
    Ok(CoverSpec { base: s.clone(), level: CoverLevel::Homology { modulus: m }, schreier, relator_span: None })
}

/// The mod-2 homology cover of the mod-2 homology cover.
pub fn compose_mod2(s: &SurfacePresentation) -> Result<CoverSpec> {
    let sch = Schreier::build(s, 2)
        .ok_or_else(|| Error::TooLarge(alloc::format!("mod-2 transversal of genus {}", s.genus())))?;
    let mut span = Span::new();
    for t in &sch.transversal {
        let r = s.relator().conjugate_by(t);
        let y = sch.rewrite(&r, s).expect("relator conjugates lie in every homology subgroup");
        span.insert(&sch.mod2_class(&y));
    }
    Ok(CoverSpec { base: s.clone(), level: CoverLevel::ComposedMod2, schreier: Some(sch), relator_span: Some(span) })
}

impl CoverSpec {
    pub fn base(&self) -> &SurfacePresentation {
        &self.base
    }

    pub fn kind(&self) -> CoverLevel {
        self.level
    }

    pub fn level(&self) -> u8 {
        match self.level {
            CoverLevel::Homology { .. } => 1,
            CoverLevel::ComposedMod2 => 2,
        }
    }

    /// Modulus of the first stage.
    pub fn modulus(&self) -> u32 {
        match self.level {
            CoverLevel::Homology { modulus } => modulus,
            CoverLevel::ComposedMod2 => 2,
        }
    }

    /// Text form, e.g. `mod2 g=2` or `mod2^2 g=2`.
    pub fn descriptor(&self) -> String {
        match self.level {
            CoverLevel::Homology { modulus } => alloc::format!("mod{} g={}", modulus, self.base.genus()),
            CoverLevel::ComposedMod2 => alloc::format!("mod2^2 g={}", self.base.genus()),
        }
    }

    /// Whether `w` lies in the cover subgroup.
    pub fn member(&self, w: &Word) -> Result<bool> {
        self.base.check(w)?;
        Ok(self.member_letters(w.letters()))
    }

    /// [`member`](Self::member) for letters already known to be over the
    /// base alphabet.
    pub fn member_letters(&self, letters: &[Letter]) -> bool {
        let m = self.modulus() as i64;
        let h = abelianize_unchecked(letters, &self.base);
        if h.coords().iter().any(|c| c.rem_euclid(m) != 0) {
            return false;
        }
        match (&self.relator_span, &self.schreier) {
            (Some(span), Some(sch)) => {
                let y = sch.rewrite_letters(letters, &self.base).expect("level-1 member");
                span.contains(&sch.mod2_class(&y))
            }
            _ => true,
        }
    }

    /// Order of the deck group, `m^{2g}` at level 1 and `2^{2g} · 2^{2ĝ}` at
    /// level 2 (`None` on overflow).
    pub fn deck_order(&self) -> Option<u128> {
        let first = (self.modulus() as u128).checked_pow(self.base.rank() as u32)?;
        match self.level {
            CoverLevel::Homology { .. } => Some(first),
            CoverLevel::ComposedMod2 => first.checked_mul(2u128.checked_pow(self.h1_dimension_mod2()? as u32)?),
        }
    }

    /// Genus of the covering surface, `1 + |D| (g − 1)`.
    pub fn cover_genus(&self) -> Option<u128> {
        self.deck_order()?.checked_mul(self.base.genus() as u128 - 1)?.checked_add(1)
    }

    /// Genus of the first-stage (level-1) cover.
    pub fn first_stage_genus(&self) -> Option<u128> {
        (self.modulus() as u128)
            .checked_pow(self.base.rank() as u32)?
            .checked_mul(self.base.genus() as u128 - 1)?
            .checked_add(1)
    }

    /// `dim H₁(S̃; ℤ/2)` of the first stage, known at level 2.
    pub fn h1_dimension_mod2(&self) -> Option<usize> {
        let span = self.relator_span.as_ref()?;
        Some(self.schreier.as_ref()?.generators.len() - span.rank())
    }

    fn schreier(&self) -> Result<&Schreier> {
        self.schreier.as_ref().ok_or_else(|| {
            Error::TooLarge(alloc::format!("transversal for {} exceeds {MAX_TRANSVERSAL} cosets", self.descriptor()))
        })
    }

    /// Coset representatives of the first stage, indexed by coset number.
    pub fn transversal(&self) -> Result<&[Word]> {
        Ok(&self.schreier()?.transversal)
    }

    /// Schreier generators `t · x · rep(t x)⁻¹` of the first-stage subgroup,
    /// as words in the base generators.
    pub fn schreier_generators(&self) -> Result<&[Word]> {
        Ok(&self.schreier()?.generators)
    }

    /// Names `y1, y2, ...` of the Schreier generators.
    pub fn cover_alphabet(&self) -> Result<&Alphabet> {
        Ok(&self.schreier()?.alphabet)
    }

    /// Rewrites a first-stage member as a word in the Schreier generators.
    pub fn schreier_rewrite(&self, w: &Word) -> Result<Word> {
        self.base.check(w)?;
        self.schreier()?.rewrite(w, &self.base).ok_or(Error::NotMember)
    }

    /// Substitutes Schreier generator definitions back into base words.
    pub fn expand(&self, y: &Word) -> Result<Word> {
        let sch = self.schreier()?;
        let mut out = Word::identity();
        for l in y.letters() {
            let g = sch.generators.get(l.gen()).ok_or_else(|| {
                Error::UnknownGenerator(alloc::format!("y{}", l.gen() + 1))
            })?;
            out = if l.is_inverse() { &out * &g.inverse() } else { &out * g };
        }
        Ok(out)
    }
}

impl Schreier {
    fn build(s: &SurfacePresentation, m: u32) -> Option<Schreier> {
        let rank = s.rank();
        let cosets = (m as usize).checked_pow(rank as u32).filter(|&c| c <= MAX_TRANSVERSAL)?;
        let digits = |c: usize| -> Vec<usize> {
            let mut c = c;
            (0..rank)
                .map(|_| {
                    let d = c % m as usize;
                    c /= m as usize;
                    d
                })
                .collect()
        };
        // rep(v) = product over generators (in letter order) of gen^{v}: the
        // shortlex-least word in its coset, and prefix closed
        let transversal: Vec<Word> = (0..cosets)
            .map(|c| {
                let v = digits(c);
                let mut letters = Vec::new();
                for gen in 0..rank {
                    letters.extend(core::iter::repeat_n(Letter::pos(gen), v[s.coordinate(gen)]));
                }
                Word::from_letters(letters)
            })
            .collect();
        let mut sch = Schreier { m, transversal, table: alloc::vec![None; cosets * rank], generators: Vec::new(), alphabet: Alphabet::indexed("y", 0) };
        for c in 0..cosets {
            for gen in 0..rank {
                let t = sch.step(c, gen, false, s);
                let y = &(&sch.transversal[c] * &Word::generator(gen)) * &sch.transversal[t].inverse();
                if !y.is_identity() {
                    sch.table[c * rank + gen] = Some(sch.generators.len() as u32);
                    sch.generators.push(y);
                }
            }
        }
        sch.alphabet = Alphabet::indexed("y", sch.generators.len());
        Some(sch)
    }

    /// Coset reached from `c` by the generator (or its inverse).
    fn step(&self, c: usize, gen: usize, inverse: bool, s: &SurfacePresentation) -> usize {
        let m = self.m as usize;
        let place = m.pow(s.coordinate(gen) as u32);
        let d = (c / place) % m;
        let nd = if inverse { (d + m - 1) % m } else { (d + 1) % m };
        c - d * place + nd * place
    }

    fn rewrite(&self, w: &Word, s: &SurfacePresentation) -> Option<Word> {
        self.rewrite_letters(w.letters(), s)
    }

    fn rewrite_letters(&self, letters: &[Letter], s: &SurfacePresentation) -> Option<Word> {
        let rank = s.rank();
        let mut c = 0usize;
        let mut out = Vec::new();
        for &l in letters {
            if l.is_inverse() {
                let prev = self.step(c, l.gen(), true, s);
                if let Some(y) = self.table[prev * rank + l.gen()] {
                    out.push(Letter::neg(y as usize));
                }
                c = prev;
            } else {
                if let Some(y) = self.table[c * rank + l.gen()] {
                    out.push(Letter::pos(y as usize));
                }
                c = self.step(c, l.gen(), false, s);
            }
        }
        (c == 0).then(|| Word::from_letters(out))
    }

    fn mod2_class(&self, y: &Word) -> BitVector {
        let mut v = BitVector::zero(self.generators.len());
        for l in y.letters() {
            v.flip(l.gen());
        }
        v
    }
}
