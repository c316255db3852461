//! Simple closed curves in regular covers of closed orientable surfaces.
//!
//! The crate is `no_std` (it needs `alloc`) and covers the algebraic side of
//! the workbench: free-group words and cyclic words, the genus `g` surface
//! group with its homological simpleness obstructions, an exact detector for
//! simple closed curves together with an independent hyperbolic-geometry
//! oracle, homology covers and their composition, Todd–Coxeter coset
//! enumeration, and the emitters for the presentation tower whose cover has
//! simple curves exactly when a given word is trivial.
//!
//! File formats, JSON reports, parallel searches and the command-line front
//! end live in the `surfcover` crate.

#![no_std]

extern crate alloc;

pub mod coset;
pub mod cover;
pub mod cyclic;
pub mod deck;
mod error;
pub mod gf2;
pub mod hom;
pub mod magnus;
pub mod oracle;
pub mod parse;
pub mod pipeline;
pub mod presentation;
pub mod simple;
pub mod surface;
pub mod tietze;
pub mod tower;
pub mod word;

pub use coset::{group_order, todd_coxeter, CosetTable, EnumerationStatus, DEFAULT_MAX_COSETS};
pub use cover::{compose_mod2, mod_m_cover, CoverLevel, CoverSpec};
pub use cyclic::{cyclic_reduce, CyclicWord};
pub use deck::{
    lemma1_normal_generators, mod2_simple_representatives, DeckPresentation, NormalGeneratorSet,
};
pub use error::Error;
pub use hom::Homomorphism;
pub use magnus::{fox_deg2, in_gamma3, magnus_deg2, obstruction_report, Deg2Form, ObstructionReport};
pub use oracle::{geodesic_oracle, HyperbolicStructure, OracleOutcome};
pub use parse::{parse_word, render_word};
pub use pipeline::{reduction_demo, search_simple_in_cover, SearchResult, Verdict};
pub use presentation::Presentation;
pub use simple::{enumerate_simple, is_simple, self_intersection, Detector, IntersectionCount};
pub use surface::{abelianize, is_primitive, HomologyVector, SurfacePresentation};
pub use tower::{
    corollary1_cover, embed_two_generator, psi_embedding, rabin_emit, TowerOutput,
};
pub use word::{Alphabet, Letter, Word};

pub type Result<T> = core::result::Result<T, Error>;
