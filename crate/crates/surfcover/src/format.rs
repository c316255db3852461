//! Text formats: presentation files and cover descriptors.
//!
//! A presentation file is UTF-8 with one directive per line:
//!
//! ```text
//! # comment
//! gens: h1 h2
//! rel: h1^2
//! rel: [h1,h2] = h2   # a relation u = v is stored as u v^-1
//! sub: h1             # optional subgroup generators
//! ```

use std::fmt::Write as _;

use surfcover_core::{
    compose_mod2, mod_m_cover, parse_word, render_word, Alphabet, CoverSpec, Presentation, SurfacePresentation,
    TowerOutput, Word,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `gens:` line")]
    NoGenerators,
    #[error("bad cover descriptor `{0}`: expected `mod<m> g=<genus>` or `mod2^2 g=<genus>`")]
    Cover(String),
    #[error(transparent)]
    Core(#[from] surfcover_core::Error),
}

/// A parsed presentation file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    pub subgroup: Vec<Word>,
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile, FormatError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut rels = Vec::new();
    let mut sub = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| FormatError::Line { line, msg };
        let (key, rest) = body.split_once(':').ok_or_else(|| err(format!("expected `key: value`, got `{body}`")))?;
        let rest = rest.trim();
        match key.trim() {
            "gens" => {
                if alphabet.is_some() {
                    return Err(err("second `gens:` line".into()));
                }
                alphabet = Some(Alphabet::new(rest.split_whitespace()).map_err(|e| err(e.to_string()))?);
            }
            k @ ("rel" | "sub") => {
                let a = alphabet.as_ref().ok_or_else(|| err(format!("`{k}:` before `gens:`")))?;
                let w = parse_relation(rest, a).map_err(|e| err(e.to_string()))?;
                if k == "rel" { rels.push(w) } else { sub.push(w) }
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    let alphabet = alphabet.ok_or(FormatError::NoGenerators)?;
    Ok(PresentationFile { presentation: Presentation::new(alphabet, rels)?, subgroup: sub })
}

fn parse_relation(text: &str, a: &Alphabet) -> surfcover_core::Result<Word> {
    match text.split_once('=') {
        Some((l, r)) => Ok(&parse_word(l, a)? * &parse_word(r, a)?.inverse()),
        None => parse_word(text, a),
    }
}

/// Renders in the file format; `header` lines become leading comments.
pub fn render_presentation(p: &Presentation, subgroup: &[Word], header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        writeln!(out, "# {h}").unwrap();
    }
    writeln!(out, "gens: {}", p.alphabet().names().join(" ")).unwrap();
    for r in p.relators() {
        writeln!(out, "rel: {}", render_word(r, p.alphabet())).unwrap();
    }
    for s in subgroup {
        writeln!(out, "sub: {}", render_word(s, p.alphabet())).unwrap();
    }
    out
}

/// The `D_w` presentation with its layers marked by comments.
pub fn render_tower(t: &TowerOutput, h: &Presentation, w: &Word) -> String {
    let a = t.d_w.alphabet();
    let ha = h.alphabet();
    let mut out = String::new();
    writeln!(out, "# D_w for w = {} in H = {}, genus {}", render_word(w, ha), h.to_display_string(), t.genus).unwrap();
    writeln!(
        out,
        "# x = {}, a = {}, b = {}",
        render_word(&t.x_def, a),
        render_word(&t.a_def, a),
        render_word(&t.b_def, a)
    )
    .unwrap();
    for (k, img) in t.psi.images().iter().enumerate() {
        writeln!(out, "# psi({}) = {}", ha.name(k), render_word(img, a)).unwrap();
    }
    writeln!(
        out,
        "# the K chain runs K0..K{}: its last layer introduces g{}, which the amalgamation g{} = g{} needs",
        t.n - 8,
        t.n - 3,
        t.n - 2,
        t.n - 3
    )
    .unwrap();
    writeln!(out, "gens: {}", a.names().join(" ")).unwrap();
    for (name, range) in &t.layers {
        writeln!(out, "# {name}").unwrap();
        for r in &t.d_w.relators()[range.clone()] {
            writeln!(out, "rel: {}", render_word(r, a)).unwrap();
        }
    }
    out
}

/// Parses `[cover ]mod<m>[^2] [g=<genus>]`; the genus defaults to
/// `default_genus`.
pub fn parse_cover(text: &str, default_genus: usize) -> Result<CoverSpec, FormatError> {
    let bad = || FormatError::Cover(text.to_string());
    let mut parts = text.split_whitespace().peekable();
    if parts.peek() == Some(&"cover") {
        parts.next();
    }
    let kind = parts.next().ok_or_else(bad)?;
    let genus = match parts.next() {
        Some(g) => g.strip_prefix("g=").and_then(|g| g.parse().ok()).ok_or_else(bad)?,
        None => default_genus,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    let s = SurfacePresentation::new(genus)?;
    let m = kind.strip_prefix("mod").ok_or_else(bad)?;
    Ok(match m.strip_suffix("^2") {
        Some("2") => compose_mod2(&s)?,
        Some(_) => return Err(bad()),
        None => mod_m_cover(&s, m.parse().map_err(|_| bad())?)?,
    })
}

/// `cover <descriptor>`.
pub fn render_cover(c: &CoverSpec) -> String {
    format!("cover {}", c.descriptor())
}
