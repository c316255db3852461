use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use surfcover::format::{parse_cover, parse_presentation, render_tower, PresentationFile};
use surfcover::report::*;
use surfcover::{sample, search};
use surfcover_core::{
    geodesic_oracle, lemma1_normal_generators, mod2_simple_representatives, obstruction_report, parse_word,
    reduction_demo, render_word, todd_coxeter, CyclicWord, DeckPresentation, Detector, EnumerationStatus,
    HyperbolicStructure, OracleOutcome, Presentation, SurfacePresentation, Verdict, Word, DEFAULT_MAX_COSETS,
};

/// Simple closed curves in covers of closed orientable surfaces.
#[derive(Parser)]
#[command(name = "surfcover", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Genus of the base surface.
    #[arg(long, global = true, default_value_t = 2)]
    genus: usize,
    /// Worker threads for searches (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Is the word freely homotopic to a simple closed curve?
    Simple { word: String },
    /// Minimal self-intersection number of the word's free homotopy class.
    Selfint { word: String },
    /// Homological obstructions to simpleness.
    Obstruct { word: String },
    /// Membership in a cover subgroup, e.g. `cover-member "mod2 g=2" "a1^2"`.
    CoverMember { cover: String, word: String },
    /// Normal generators of the cover given by a deck presentation file.
    CoverGens {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max: usize,
    },
    /// One simple word per nonzero mod-2 homology class.
    Mod2Reps,
    /// Canonical simple words up to a length.
    EnumSimple {
        #[arg(long)]
        maxlen: usize,
    },
    /// Simple curves in a cover up to a length.
    Search {
        cover: String,
        #[arg(long)]
        maxlen: usize,
    },
    /// Emit the tower presentation `D_w` for a word of `H`.
    RabinEmit {
        file: PathBuf,
        #[arg(long)]
        word: String,
        /// Write the presentation here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coset enumeration: group order, or subgroup index when the file has
    /// `sub:` lines.
    CosetEnum {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max: usize,
    },
    /// Run the tower on `(H, w)` and report a verdict.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max: usize,
        /// Length bound for the witness search.
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Compare the detector with the hyperbolic oracle on random words.
    OracleCheck {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn json<T: Serialize>(t: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(t)? + "\n")
}

fn read(path: &Path) -> Result<PresentationFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_presentation(&text).with_context(|| format!("in {}", path.display()))
}

fn run(cli: &Cli) -> Result<String> {
    let s = SurfacePresentation::new(cli.genus)?;
    let word = |t: &str| parse_word(t, s.alphabet()).with_context(|| format!("parsing `{t}`"));
    let show = |w: &Word| render_word(w, s.alphabet());
    let showc = |c: &CyclicWord| render_word(&c.to_word(), s.alphabet());
    Ok(match &cli.verb {
        Verb::Simple { word: t } => {
            let w = word(t)?;
            let simple = surfcover_core::is_simple(&w, &s)?;
            if cli.json {
                json(&SimpleReport { schema: SCHEMA, genus: cli.genus, word: show(&w), simple })?
            } else {
                format!("simple: {simple}\n")
            }
        }
        Verb::Selfint { word: t } => {
            let w = word(t)?;
            let c = CyclicWord::new(&w);
            let i = Detector::new(&s).self_intersection(c.letters());
            if cli.json {
                json(&SelfIntReport {
                    schema: SCHEMA,
                    genus: cli.genus,
                    word: show(&w),
                    canonical: showc(&c),
                    self_intersection: i,
                })?
            } else {
                match i {
                    Some(i) => format!("self-intersection: {i}\n"),
                    None => "self-intersection: undefined (trivial class)\n".into(),
                }
            }
        }
        Verb::Obstruct { word: t } => {
            let r = obstruction_report(&word(t)?, &s)?;
            if cli.json {
                json(&ObstructJson::from_domain(&r, &s))?
            } else {
                format!(
                    "homology: {:?}\nprimitive: {}\nin commutator subgroup: {}\nin gamma3: {}\npossibly simple: {}\n",
                    r.homology.coords(),
                    r.primitive,
                    r.in_commutator,
                    r.in_gamma3,
                    r.possibly_simple
                )
            }
        }
        Verb::CoverMember { cover, word: t } => {
            let c = parse_cover(cover, cli.genus)?;
            let w = parse_word(t, c.base().alphabet())?;
            let member = c.member(&w)?;
            if cli.json {
                json(&MemberReport { schema: SCHEMA, cover: c.descriptor(), word: t.clone(), member })?
            } else {
                format!("member: {member}\n")
            }
        }
        Verb::CoverGens { file, max } => {
            let f = read(file)?;
            if f.presentation.alphabet() != s.alphabet() {
                bail!("a deck presentation must use the generators {}", s.alphabet().names().join(" "));
            }
            let d = DeckPresentation::new(&s, f.presentation.relators().to_vec())?;
            let n = lemma1_normal_generators(&d, &s)?;
            let index = todd_coxeter(&Presentation::surface(&s), &n.subgroup_generators(), *max)?.index();
            if cli.json {
                json(&CoverGensReport::from_domain(&n, index, &s))?
            } else {
                let mut out = String::new();
                for w in &n.core {
                    out += &format!("core: {}\n", show(w));
                }
                for w in &n.conjugators {
                    out += &format!("conjugator: {}\n", show(w));
                }
                match index {
                    Some(i) => out += &format!("index: {i}\n"),
                    None => out += &format!("index: exceeded {max} cosets\n"),
                }
                out
            }
        }
        Verb::Mod2Reps => {
            let reps = mod2_simple_representatives(&s)?;
            if cli.json {
                json(&Mod2RepsReport::from_domain(&reps, &s))?
            } else {
                reps.iter()
                    .map(|(c, w)| {
                        let bits: String = c.iter().map(|b| char::from(b'0' + b)).collect();
                        format!("{bits} {}\n", show(w))
                    })
                    .collect()
            }
        }
        Verb::EnumSimple { maxlen } => {
            let ws = search::with_threads(cli.threads, || search::enumerate_simple(&s, *maxlen));
            if cli.json {
                json(&EnumReport::from_domain(&ws, *maxlen, &s))?
            } else {
                ws.iter().map(|c| showc(c) + "\n").collect()
            }
        }
        Verb::Search { cover, maxlen } => {
            let c = parse_cover(cover, cli.genus)?;
            let r = search::with_threads(cli.threads, || search::search_simple_in_cover(&c, *maxlen));
            let b = c.base();
            if cli.json {
                json(&SearchReport::from_domain(&r, b))?
            } else {
                let mut out = format!(
                    "cover {}: {} witnesses up to length {} (exhausted: {})\n",
                    r.cover,
                    r.witnesses.len(),
                    r.maxlen,
                    r.exhausted
                );
                for w in &r.witnesses {
                    out += &format!("{}\n", render_word(&w.to_word(), b.alphabet()));
                }
                out
            }
        }
        Verb::RabinEmit { file, word: t, out } => {
            let h = read(file)?.presentation;
            let w = parse_word(t, h.alphabet())?;
            let tower = surfcover_core::rabin_emit(&h, &w, cli.genus)?;
            let text = render_tower(&tower, &h, &w);
            let report = if cli.json {
                json(&TowerReport {
                    schema: SCHEMA,
                    genus: cli.genus,
                    n: tower.n,
                    layers: tower
                        .layers
                        .iter()
                        .map(|(name, r)| Layer { name: name.clone(), start: r.start, end: r.end })
                        .collect(),
                    presentation: text.clone(),
                    cover_core: tower.cover_normal_gens.core.iter().map(show).collect(),
                    conjugators: tower.cover_normal_gens.conjugators.iter().map(show).collect(),
                })?
            } else {
                text.clone()
            };
            match out {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    if cli.json { report } else { format!("wrote {}\n", path.display()) }
                }
                None => report,
            }
        }
        Verb::CosetEnum { file, max } => {
            let f = read(file)?;
            let status = if f.subgroup.is_empty() {
                surfcover_core::group_order(&f.presentation, *max)?
            } else {
                todd_coxeter(&f.presentation, &f.subgroup, *max)?.status()
            };
            if cli.json {
                json(&CosetReport {
                    schema: SCHEMA,
                    generators: f.presentation.rank(),
                    relators: f.presentation.relators().len(),
                    subgroup: !f.subgroup.is_empty(),
                    result: status.into(),
                })?
            } else {
                let what = if f.subgroup.is_empty() { "order" } else { "index" };
                match status {
                    EnumerationStatus::Complete { index } => format!("{what}: {index}\n"),
                    EnumerationStatus::Exceeded { limit } => format!("{what}: unknown (exceeded {limit} cosets)\n"),
                }
            }
        }
        Verb::Reduce { file, word: t, max, bound } => {
            let h = read(file)?.presentation;
            let w = parse_word(t, h.alphabet())?;
            let (_, v) = reduction_demo(&h, &w, cli.genus, *max, *bound)?;
            if cli.json {
                json(&VerdictReport::from_domain(&v, &s))?
            } else {
                match &v {
                    Verdict::TrivialCover { witness, search_bound, .. } => format!(
                        "verdict: trivial cover (D_w has order 1)\nwitness: {}\n",
                        witness.as_ref().map(showc).unwrap_or_else(|| format!("none up to length {search_bound}"))
                    ),
                    Verdict::PresentationEmitted { status, screen, search_bound, unresolved_candidates, .. } => {
                        format!(
                            "verdict: presentation emitted ({})\nscreen: {} of {} normal generators possibly simple\nwitnesses: none certified up to length {search_bound} ({unresolved_candidates} unresolved candidates)\n",
                            match status {
                                EnumerationStatus::Complete { index } => format!("D_w has order {index}"),
                                EnumerationStatus::Exceeded { limit } => format!("enumeration exceeded {limit} cosets"),
                            },
                            screen.possibly_simple.len(),
                            screen.checked
                        )
                    }
                }
            }
        }
        Verb::OracleCheck { samples, maxlen } => {
            let h = HyperbolicStructure::regular(cli.genus)?;
            let det = Detector::new(&s);
            let mut rng = sample::rng(cli.seed);
            let mut r = OracleReport {
                schema: SCHEMA,
                genus: cli.genus,
                seed: cli.seed,
                samples: 0,
                agreements: 0,
                indeterminate: 0,
                disagreements: Vec::new(),
            };
            while r.samples < *samples {
                let w = sample::cyclic_word_upto(&mut rng, s.rank(), *maxlen);
                let Some(d) = det.self_intersection(w.letters()) else { continue };
                r.samples += 1;
                match geodesic_oracle(&CyclicWord::new(&w), &h)? {
                    OracleOutcome::Count(i) if i.0 == d => r.agreements += 1,
                    OracleOutcome::Count(i) => r.disagreements.push((show(&w), d, i.0)),
                    OracleOutcome::Indeterminate(_) => r.indeterminate += 1,
                }
            }
            if cli.json {
                json(&r)?
            } else {
                let mut out = format!(
                    "samples: {}\nagreements: {}\nindeterminate: {}\ndisagreements: {}\n",
                    r.samples,
                    r.agreements,
                    r.indeterminate,
                    r.disagreements.len()
                );
                for (w, d, o) in &r.disagreements {
                    out += &format!("  {w}: detector {d}, oracle {o}\n");
                }
                out
            }
        }
    })
}
