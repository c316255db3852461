//! Parallel versions of the searches. Work is split by partition (length
//! and two-letter prefix), and results are concatenated in partition order,
//! so output is independent of scheduling.

use rayon::prelude::*;
use surfcover_core::pipeline::search_partition;
use surfcover_core::simple::words::{is_unoriented_rep, partitions};
use surfcover_core::{CoverSpec, CyclicWord, Detector, SearchResult, SurfacePresentation, Word};

/// Runs `f` on a pool of `threads` workers (0 = rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Same result as `surfcover_core::enumerate_simple`.
pub fn enumerate_simple(s: &SurfacePresentation, maxlen: usize) -> Vec<CyclicWord> {
    let det = Detector::new(s);
    let rank = s.rank();
    partitions(rank, maxlen)
        .par_iter()
        .map(|p| {
            let mut out = Vec::new();
            p.for_each(rank, &mut |w| {
                if is_unoriented_rep(w) && det.is_simple(w) {
                    out.push(CyclicWord::new(&Word::from_letters(w.iter().copied())));
                }
            });
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

/// Same result as `surfcover_core::search_simple_in_cover`.
pub fn search_simple_in_cover(cover: &CoverSpec, maxlen: usize) -> SearchResult {
    let det = Detector::new(cover.base());
    let witnesses = partitions(cover.base().rank(), maxlen)
        .par_iter()
        .map(|p| search_partition(cover, &det, p))
        .collect::<Vec<_>>()
        .concat();
    SearchResult { cover: cover.descriptor(), maxlen, witnesses, exhausted: true }
}
