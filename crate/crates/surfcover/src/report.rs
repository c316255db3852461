//! JSON reports. Every report carries `"schema": 1` and the genus (or cover
//! descriptor) needed to read its words back; `to_domain` reverses
//! `from_domain`.
//!
//! Words are written in the word grammar (`a1 b1 a1^-1 b1^-1`); homology
//! vectors list coordinates in the order `a1..ag, b1..bg`.

use serde::{Deserialize, Serialize};
use surfcover_core::{
    parse_word, render_word, CyclicWord, EnumerationStatus, HomologyVector, NormalGeneratorSet, ObstructionReport,
    SearchResult, SurfacePresentation, Verdict, Word,
};
use surfcover_core::pipeline::ScreenReport;

pub const SCHEMA: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("unsupported report schema {0}")]
    Schema(u32),
    #[error("unknown report kind `{0}`")]
    Kind(String),
    #[error(transparent)]
    Core(#[from] surfcover_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

type Result<T> = std::result::Result<T, ReportError>;

fn surface(genus: usize) -> Result<SurfacePresentation> {
    Ok(SurfacePresentation::new(genus)?)
}

fn check(schema: u32) -> Result<()> {
    if schema == SCHEMA { Ok(()) } else { Err(ReportError::Schema(schema)) }
}

fn words(ws: &[Word], s: &SurfacePresentation) -> Vec<String> {
    ws.iter().map(|w| render_word(w, s.alphabet())).collect()
}

fn cyclic(cs: &[CyclicWord], s: &SurfacePresentation) -> Vec<String> {
    cs.iter().map(|c| render_word(&c.to_word(), s.alphabet())).collect()
}

fn parse_words(ts: &[String], s: &SurfacePresentation) -> Result<Vec<Word>> {
    Ok(ts.iter().map(|t| parse_word(t, s.alphabet())).collect::<surfcover_core::Result<_>>()?)
}

fn parse_cyclic(ts: &[String], s: &SurfacePresentation) -> Result<Vec<CyclicWord>> {
    Ok(parse_words(ts, s)?.iter().map(CyclicWord::new).collect())
}

/// `simple` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleReport {
    pub schema: u32,
    pub genus: usize,
    pub word: String,
    pub simple: bool,
}

/// `selfint` verb; `self_intersection` is null for the trivial class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfIntReport {
    pub schema: u32,
    pub genus: usize,
    pub word: String,
    pub canonical: String,
    pub self_intersection: Option<u64>,
}

/// `obstruct` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructJson {
    pub schema: u32,
    pub genus: usize,
    pub word: String,
    pub homology: Vec<i64>,
    pub primitive: bool,
    pub in_commutator: bool,
    pub in_gamma3: bool,
    pub possibly_simple: bool,
}

impl ObstructJson {
    pub fn from_domain(r: &ObstructionReport, s: &SurfacePresentation) -> Self {
        ObstructJson {
            schema: SCHEMA,
            genus: s.genus(),
            word: render_word(&r.word, s.alphabet()),
            homology: r.homology.coords().to_vec(),
            primitive: r.primitive,
            in_commutator: r.in_commutator,
            in_gamma3: r.in_gamma3,
            possibly_simple: r.possibly_simple,
        }
    }

    pub fn to_domain(&self) -> Result<ObstructionReport> {
        check(self.schema)?;
        let s = surface(self.genus)?;
        Ok(ObstructionReport {
            word: parse_word(&self.word, s.alphabet())?,
            homology: HomologyVector(self.homology.clone()),
            primitive: self.primitive,
            in_commutator: self.in_commutator,
            in_gamma3: self.in_gamma3,
            possibly_simple: self.possibly_simple,
        })
    }
}

/// `cover-member` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub schema: u32,
    pub cover: String,
    pub word: String,
    pub member: bool,
}

/// `cover-gens` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverGensReport {
    pub schema: u32,
    pub genus: usize,
    pub core: Vec<String>,
    pub conjugators: Vec<String>,
    /// Index of the generated subgroup, when the enumeration finished.
    pub index: Option<usize>,
}

impl CoverGensReport {
    pub fn from_domain(n: &NormalGeneratorSet, index: Option<usize>, s: &SurfacePresentation) -> Self {
        CoverGensReport {
            schema: SCHEMA,
            genus: s.genus(),
            core: words(&n.core, s),
            conjugators: words(&n.conjugators, s),
            index,
        }
    }

    pub fn to_domain(&self) -> Result<NormalGeneratorSet> {
        check(self.schema)?;
        let s = surface(self.genus)?;
        Ok(NormalGeneratorSet { core: parse_words(&self.core, &s)?, conjugators: parse_words(&self.conjugators, &s)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod2Rep {
    pub class: Vec<u8>,
    pub word: String,
}

/// `mod2-reps` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod2RepsReport {
    pub schema: u32,
    pub genus: usize,
    pub representatives: Vec<Mod2Rep>,
}

impl Mod2RepsReport {
    pub fn from_domain(reps: &[(Vec<u8>, Word)], s: &SurfacePresentation) -> Self {
        Mod2RepsReport {
            schema: SCHEMA,
            genus: s.genus(),
            representatives: reps
                .iter()
                .map(|(c, w)| Mod2Rep { class: c.clone(), word: render_word(w, s.alphabet()) })
                .collect(),
        }
    }

    pub fn to_domain(&self) -> Result<Vec<(Vec<u8>, Word)>> {
        check(self.schema)?;
        let s = surface(self.genus)?;
        self.representatives.iter().map(|r| Ok((r.class.clone(), parse_word(&r.word, s.alphabet())?))).collect()
    }
}

/// `enum-simple` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumReport {
    pub schema: u32,
    pub genus: usize,
    pub maxlen: usize,
    pub words: Vec<String>,
}

impl EnumReport {
    pub fn from_domain(ws: &[CyclicWord], maxlen: usize, s: &SurfacePresentation) -> Self {
        EnumReport { schema: SCHEMA, genus: s.genus(), maxlen, words: cyclic(ws, s) }
    }

    pub fn to_domain(&self) -> Result<Vec<CyclicWord>> {
        check(self.schema)?;
        parse_cyclic(&self.words, &surface(self.genus)?)
    }
}

/// `search` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: u32,
    pub cover: String,
    pub genus: usize,
    pub maxlen: usize,
    pub witnesses: Vec<String>,
    pub exhausted: bool,
}

impl SearchReport {
    pub fn from_domain(r: &SearchResult, s: &SurfacePresentation) -> Self {
        SearchReport {
            schema: SCHEMA,
            cover: r.cover.clone(),
            genus: s.genus(),
            maxlen: r.maxlen,
            witnesses: cyclic(&r.witnesses, s),
            exhausted: r.exhausted,
        }
    }

    pub fn to_domain(&self) -> Result<SearchResult> {
        check(self.schema)?;
        Ok(SearchResult {
            cover: self.cover.clone(),
            maxlen: self.maxlen,
            witnesses: parse_cyclic(&self.witnesses, &surface(self.genus)?)?,
            exhausted: self.exhausted,
        })
    }
}

/// Outcome of a coset enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum StatusJson {
    Complete { index: usize },
    Exceeded { limit: usize },
}

impl From<EnumerationStatus> for StatusJson {
    fn from(s: EnumerationStatus) -> Self {
        match s {
            EnumerationStatus::Complete { index } => StatusJson::Complete { index },
            EnumerationStatus::Exceeded { limit } => StatusJson::Exceeded { limit },
        }
    }
}

impl From<StatusJson> for EnumerationStatus {
    fn from(s: StatusJson) -> Self {
        match s {
            StatusJson::Complete { index } => EnumerationStatus::Complete { index },
            StatusJson::Exceeded { limit } => EnumerationStatus::Exceeded { limit },
        }
    }
}

/// `coset-enum` verb; `subgroup` is false for a group-order computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReport {
    pub schema: u32,
    pub generators: usize,
    pub relators: usize,
    pub subgroup: bool,
    pub result: StatusJson,
}

/// `rabin-emit` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub schema: u32,
    pub genus: usize,
    pub n: usize,
    pub layers: Vec<Layer>,
    /// `D_w` in the presentation file format.
    pub presentation: String,
    pub cover_core: Vec<String>,
    pub conjugators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layer {
    pub name: String,
    pub start: usize,
    pub end: usize,
}

/// `reduce` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub schema: u32,
    pub genus: usize,
    /// `trivial-cover` or `presentation-emitted`.
    pub verdict: String,
    pub enumeration: StatusJson,
    pub search_bound: usize,
    /// The simple witness for a trivial cover.
    pub witness: Option<String>,
    pub screen_checked: Option<usize>,
    pub screen_possibly_simple: Option<Vec<String>>,
    pub witnesses: Option<Vec<String>>,
    pub unresolved_candidates: Option<usize>,
}

impl VerdictReport {
    pub fn from_domain(v: &Verdict, s: &SurfacePresentation) -> Self {
        let base = VerdictReport {
            schema: SCHEMA,
            genus: s.genus(),
            verdict: String::new(),
            enumeration: v.status().into(),
            search_bound: 0,
            witness: None,
            screen_checked: None,
            screen_possibly_simple: None,
            witnesses: None,
            unresolved_candidates: None,
        };
        match v {
            Verdict::TrivialCover { witness, search_bound, .. } => VerdictReport {
                verdict: "trivial-cover".into(),
                search_bound: *search_bound,
                witness: witness.as_ref().map(|c| render_word(&c.to_word(), s.alphabet())),
                ..base
            },
            Verdict::PresentationEmitted { screen, search_bound, witnesses, unresolved_candidates, .. } => {
                VerdictReport {
                    verdict: "presentation-emitted".into(),
                    search_bound: *search_bound,
                    screen_checked: Some(screen.checked),
                    screen_possibly_simple: Some(words(&screen.possibly_simple, s)),
                    witnesses: Some(cyclic(witnesses, s)),
                    unresolved_candidates: Some(*unresolved_candidates),
                    ..base
                }
            }
        }
    }

    pub fn to_domain(&self) -> Result<Verdict> {
        check(self.schema)?;
        let s = surface(self.genus)?;
        let status = self.enumeration.into();
        match self.verdict.as_str() {
            "trivial-cover" => Ok(Verdict::TrivialCover {
                status,
                witness: match &self.witness {
                    Some(w) => Some(CyclicWord::new(&parse_word(w, s.alphabet())?)),
                    None => None,
                },
                search_bound: self.search_bound,
            }),
            "presentation-emitted" => Ok(Verdict::PresentationEmitted {
                status,
                screen: ScreenReport {
                    checked: self.screen_checked.unwrap_or(0),
                    possibly_simple: parse_words(self.screen_possibly_simple.as_deref().unwrap_or(&[]), &s)?,
                },
                search_bound: self.search_bound,
                witnesses: parse_cyclic(self.witnesses.as_deref().unwrap_or(&[]), &s)?,
                unresolved_candidates: self.unresolved_candidates.unwrap_or(0),
            }),
            other => Err(ReportError::Kind(other.into())),
        }
    }
}

/// `oracle-check` verb.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema: u32,
    pub genus: usize,
    pub seed: u64,
    pub samples: usize,
    pub agreements: usize,
    pub indeterminate: usize,
    /// Words where detector and oracle disagree, with both counts.
    pub disagreements: Vec<(String, u64, u64)>,
}
