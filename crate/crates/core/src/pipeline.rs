//! End-to-end flows: searching covers for simple curves, and running the
//! tower on a sample `(H, w)`.
//!
//! A cover is only ever said to have simple curves through an explicit
//! witness; "no simple curves" is only ever said up to a length bound.

use alloc::vec::Vec;
use alloc::string::String;

use crate::coset::{group_order, EnumerationStatus};
use crate::cover::{mod_m_cover, CoverSpec};
use crate::cyclic::CyclicWord;
use crate::magnus::obstruction_report;
use crate::presentation::Presentation;
use crate::simple::words::{is_unoriented_rep, partitions, Partition};
use crate::simple::Detector;
use crate::tower::{rabin_emit, TowerOutput};
use crate::word::{Letter, Word};
use crate::Result;

/// Simple curves found in a cover up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub cover: String,
    pub maxlen: usize,
    /// Canonical words that are simple and lie in the cover subgroup, one
    /// per unoriented class, by length and then lexicographically.
    pub witnesses: Vec<CyclicWord>,
    /// Every canonical word up to `maxlen` was tested.
    pub exhausted: bool,
}

/// The witnesses inside one partition of the search.
pub fn search_partition(cover: &CoverSpec, det: &Detector, p: &Partition) -> Vec<CyclicWord> {
    let mut out = Vec::new();
    p.for_each(cover.base().rank(), &mut |w: &[Letter]| {
        // membership is the cheaper filter at every level
        if is_unoriented_rep(w) && cover.member_letters(w) && det.is_simple(w) {
            out.push(CyclicWord::from_reduced(w.to_vec()));
        }
    });
    out
}

/// All canonical simple words of length `1..=maxlen` in the cover subgroup.
pub fn search_simple_in_cover(cover: &CoverSpec, maxlen: usize) -> SearchResult {
    let det = Detector::new(cover.base());
    let witnesses = partitions(cover.base().rank(), maxlen)
        .iter()
        .flat_map(|p| search_partition(cover, &det, p))
        .collect();
    SearchResult { cover: cover.descriptor(), maxlen, witnesses, exhausted: true }
}

/// The first witness in search order, if any up to `maxlen`.
pub fn first_witness(cover: &CoverSpec, maxlen: usize) -> Option<CyclicWord> {
    let det = Detector::new(cover.base());
    partitions(cover.base().rank(), maxlen)
        .iter()
        .find_map(|p| search_partition(cover, &det, p).into_iter().next())
}

/// Homological screen over the core normal generators of the tower's cover.
/// Conjugation changes neither homology nor `γ₃` membership, so the core
/// words stand for all their conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenReport {
    pub checked: usize,
    /// Words that are primitive and outside `γ₃`.
    pub possibly_simple: Vec<Word>,
}

impl ScreenReport {
    pub fn passed(&self) -> bool {
        self.possibly_simple.is_empty()
    }
}

pub fn obstruction_screen(t: &TowerOutput) -> Result<ScreenReport> {
    let s = crate::surface::SurfacePresentation::new(t.genus)?;
    let mut possibly_simple = Vec::new();
    for w in &t.cover_normal_gens.core {
        if obstruction_report(w, &s)?.possibly_simple {
            possibly_simple.push(w.clone());
        }
    }
    Ok(ScreenReport { checked: t.cover_normal_gens.core.len(), possibly_simple })
}

/// Outcome of [`reduction_demo`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `D_w` enumerated to the trivial group: the cover is the mod-2 cover,
    /// and `witness` is a simple curve in it.
    TrivialCover { status: EnumerationStatus, witness: Option<CyclicWord>, search_bound: usize },
    /// `D_w` did not collapse within the coset limit. Simple curves of the
    /// mod-2 cover up to `search_bound` are the only candidates; membership
    /// in the deeper cover is not decided, so none is certified.
    PresentationEmitted {
        status: EnumerationStatus,
        screen: ScreenReport,
        search_bound: usize,
        witnesses: Vec<CyclicWord>,
        unresolved_candidates: usize,
    },
}

impl Verdict {
    pub fn is_trivial_cover(&self) -> bool {
        matches!(self, Verdict::TrivialCover { .. })
    }

    pub fn status(&self) -> EnumerationStatus {
        match self {
            Verdict::TrivialCover { status, .. } | Verdict::PresentationEmitted { status, .. } => *status,
        }
    }
}

/// Emits the tower for `(H, w)` at `genus`, enumerates `D_w` with at most
/// `max_cosets` cosets and either attaches a simple witness (trivial `D_w`)
/// or screens the emitted normal generators and searches up to `bound`.
pub fn reduction_demo(
    h: &Presentation,
    w: &Word,
    genus: usize,
    max_cosets: usize,
    bound: usize,
) -> Result<(TowerOutput, Verdict)> {
    let tower = rabin_emit(h, w, genus)?;
    let status = group_order(&tower.d_w, max_cosets)?;
    let s = crate::surface::SurfacePresentation::new(genus)?;
    let mod2 = mod_m_cover(&s, 2)?;
    let verdict = if status == (EnumerationStatus::Complete { index: 1 }) {
        Verdict::TrivialCover { status, witness: first_witness(&mod2, bound), search_bound: bound }
    } else {
        let screen = obstruction_screen(&tower)?;
        let candidates = search_simple_in_cover(&mod2, bound).witnesses.len();
        Verdict::PresentationEmitted {
            status,
            screen,
            search_bound: bound,
            witnesses: Vec::new(),
            unresolved_candidates: candidates,
        }
    };
    Ok((tower, verdict))
}
