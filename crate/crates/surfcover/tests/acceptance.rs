//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p surfcover --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::Rng;
use surfcover::{sample, search};
use surfcover_core::pipeline::obstruction_screen;
use surfcover_core::{
    abelianize, compose_mod2, corollary1_cover, fox_deg2, geodesic_oracle, group_order, is_simple,
    lemma1_normal_generators, magnus_deg2, mod2_simple_representatives, mod_m_cover, obstruction_report, parse_word,
    rabin_emit, reduction_demo, todd_coxeter, Alphabet, CyclicWord, DeckPresentation, Detector, EnumerationStatus,
    HyperbolicStructure, Letter, OracleOutcome, Presentation, SurfacePresentation, Verdict, Word,
};

const SEED: u64 = 0x5eed;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn s2() -> SurfacePresentation {
    SurfacePresentation::new(2).unwrap()
}

fn basis_and_conjugates() -> Result<String, String> {
    let s = s2();
    let mut rng = sample::rng(SEED);
    for t in ["a1", "a2", "b1", "b2"] {
        ensure(is_simple(&parse_word(t, s.alphabet()).unwrap(), &s).unwrap(), || format!("{t} not simple"))?;
    }
    let gens: Vec<Word> = (0..4).map(Word::generator).collect();
    for _ in 0..50 {
        let g = gens.choose(&mut rng).unwrap();
        let len = rng.random_range(1..=10);
        let u = sample::reduced_word(&mut rng, 4, len);
        let c = g.conjugate_by(&u);
        ensure(is_simple(&c, &s).unwrap(), || format!("conjugate {c:?} not simple"))?;
    }
    let pool = surfcover_core::enumerate_simple(&s, 6);
    for _ in 0..50 {
        let w = pool.choose(&mut rng).unwrap().to_word();
        for k in [2, 3] {
            ensure(!is_simple(&w.pow(k), &s).unwrap(), || format!("{w:?}^{k} simple"))?;
        }
    }
    Ok("4 generators, 50 conjugates simple; 100 proper powers of simple words not simple".into())
}

fn oracle_equivalence() -> Result<String, String> {
    let s = s2();
    let h = HyperbolicStructure::regular(2).unwrap();
    let det = Detector::new(&s);
    let mut rng = sample::rng(SEED);
    let (mut n, mut agree, mut indet) = (0, 0, 0);
    while n < 1000 {
        let w = sample::cyclic_word_upto(&mut rng, 4, 8);
        let Some(d) = det.self_intersection(w.letters()) else { continue };
        n += 1;
        match geodesic_oracle(&CyclicWord::new(&w), &h).unwrap() {
            OracleOutcome::Count(i) => {
                ensure(i.0 == d, || format!("{w:?}: detector {d}, oracle {}", i.0))?;
                agree += 1;
            }
            OracleOutcome::Indeterminate(_) => indet += 1,
        }
    }
    ensure(indet * 100 < n, || format!("{indet} of {n} indeterminate"))?;
    Ok(format!("{agree}/{n} agree, {indet} indeterminate"))
}

fn mod2_representatives() -> Result<String, String> {
    let s = s2();
    let reps = mod2_simple_representatives(&s).map_err(|e| e.to_string())?;
    let cover = mod_m_cover(&s, 2).unwrap();
    ensure(reps.len() == 15, || format!("{} representatives", reps.len()))?;
    let mut classes: Vec<Vec<i64>> = reps.iter().map(|(_, c)| abelianize(c, &s).unwrap().reduce_mod(2)).collect();
    classes.sort();
    classes.dedup();
    ensure(classes.len() == 15 && classes.iter().all(|v| v.iter().any(|&x| x != 0)), || "classes repeat".into())?;
    for (_, c) in &reps {
        ensure(is_simple(c, &s).unwrap(), || format!("{c:?} not simple"))?;
        ensure(cover.member(&c.pow(2)).unwrap(), || format!("{c:?}^2 not in the cover"))?;
    }
    Ok("15 simple words, distinct nonzero classes, squares in the mod-2 cover".into())
}

fn simple_members_null_homologous() -> Result<String, String> {
    let s = s2();
    let cover = mod_m_cover(&s, 2).unwrap();
    let r = search::search_simple_in_cover(&cover, 10);
    for c in &r.witnesses {
        ensure(abelianize(&c.to_word(), &s).unwrap().is_zero(), || format!("{c:?} has nonzero homology"))?;
    }
    Ok(format!("{} simple members up to length 10, all null-homologous", r.witnesses.len()))
}

fn composed_cover_empty() -> Result<String, String> {
    let r = search::search_simple_in_cover(&compose_mod2(&s2()).unwrap(), 10);
    ensure(r.witnesses.is_empty() && r.exhausted, || format!("{} witnesses", r.witnesses.len()))?;
    Ok("no simple curves up to length 10, search exhausted".into())
}

fn index_checks() -> Result<String, String> {
    let s = s2();
    let d = DeckPresentation::mod2(&s).unwrap();
    let n = lemma1_normal_generators(&d, &s).unwrap();
    let t = todd_coxeter(&Presentation::surface(&s), &n.subgroup_generators(), 1_000_000).unwrap();
    ensure(t.index() == Some(16), || format!("mod-2 index {:?}", t.index()))?;
    let a = Alphabet::new(["h"]).unwrap();
    let z3 = Presentation::new(a.clone(), vec![parse_word("h^3", &a).unwrap()]).unwrap();
    let (d3, _) = corollary1_cover(&z3, 2).unwrap();
    let n3 = lemma1_normal_generators(&d3, &s).unwrap();
    let t3 = todd_coxeter(&Presentation::surface(&s), &n3.subgroup_generators(), 1_000_000).unwrap();
    let index = t3.index().ok_or("Z/3 enumeration exceeded")? as i64;
    let genus = (2 - index * (2 - 2 * 2)) / 2;
    ensure(index == 3 && genus == 4, || format!("Z/3 index {index}, genus {genus}"))?;
    Ok("mod-2 index 16; Z/3 index 3, cover genus 4".into())
}

fn one_relator(gens: &[&str], rels: &[&str]) -> Presentation {
    let a = Alphabet::new(gens.iter().copied()).unwrap();
    Presentation::new(a.clone(), rels.iter().map(|r| parse_word(r, &a).unwrap()).collect()).unwrap()
}

fn collapse() -> Result<String, String> {
    let samples = [
        (one_relator(&["h"], &["h"]), "h"),
        (one_relator(&["h"], &["h^2"]), "h^2"),
        (one_relator(&["h1", "h2"], &["h1", "h2"]), "h1 h2"),
    ];
    let comm = CyclicWord::new(&parse_word("[a1,b1]", s2().alphabet()).unwrap());
    for (h, w) in &samples {
        let w = parse_word(w, h.alphabet()).unwrap();
        let t = rabin_emit(h, &w, 2).map_err(|e| e.to_string())?;
        let order = group_order(&t.d_w, 1_000_000).map_err(|e| e.to_string())?;
        ensure(order == EnumerationStatus::Complete { index: 1 }, || format!("{}: {order:?}", h.to_display_string()))?;
        let (_, v) = reduction_demo(h, &w, 2, 1_000_000, 4).map_err(|e| e.to_string())?;
        ensure(matches!(&v, Verdict::TrivialCover { witness: Some(c), .. } if *c == comm), || format!("{v:?}"))?;
    }
    Ok("3 samples: D_w trivial, witness [a1,b1]".into())
}

fn screen() -> Result<String, String> {
    let s = s2();
    let h = one_relator(&["h"], &[]);
    let t = rabin_emit(&h, &parse_word("h", h.alphabet()).unwrap(), 2).unwrap();
    ensure(obstruction_screen(&t).unwrap().passed(), || "core word possibly simple".into())?;
    let all = t.cover_normal_gens.subgroup_generators();
    for w in &all {
        let r = obstruction_report(w, &s).unwrap();
        ensure(!r.possibly_simple, || format!("{w:?} possibly simple"))?;
    }
    Ok(format!("{} normal generators, all non-primitive or in gamma3", all.len()))
}

fn gamma3_agreement() -> Result<String, String> {
    let s = s2();
    let mut count = 0;
    // every reduced word of length <= 6 over a1, b1, a2, b2
    let mut stack: Vec<Vec<Letter>> = vec![vec![]];
    while let Some(w) = stack.pop() {
        let word = Word::from_letters(w.iter().copied());
        ensure(magnus_deg2(&word, &s).unwrap() == fox_deg2(&word, &s).unwrap(), || format!("{word:?}"))?;
        count += 1;
        if w.len() < 6 {
            for i in 0..8 {
                let l = Letter::from_index(i);
                if w.last() != Some(&l.inverse()) {
                    let mut v = w.clone();
                    v.push(l);
                    stack.push(v);
                }
            }
        }
    }
    let mut rng = sample::rng(SEED);
    for _ in 0..500 {
        let len = rng.random_range(7..=40);
        let w = sample::reduced_word(&mut rng, 4, len);
        ensure(magnus_deg2(&w, &s).unwrap() == fox_deg2(&w, &s).unwrap(), || format!("{w:?}"))?;
    }
    Ok(format!("{count} short words and 500 random long words agree"))
}

fn normality() -> Result<String, String> {
    let s = s2();
    let covers = [mod_m_cover(&s, 2).unwrap(), mod_m_cover(&s, 3).unwrap(), compose_mod2(&s).unwrap()];
    let mut rng = sample::rng(SEED);
    let mut trials = 0;
    for c in &covers {
        for _ in 0..1000 {
            let len = rng.random_range(0..=16);
            let w = sample::reduced_word(&mut rng, 4, len);
            // bias towards members, which is where failures would show
            let w = if rng.random_bool(0.5) { w.pow(2) } else { w };
            let m = c.member(&w).unwrap();
            for g in 0..8 {
                let x = Word::letter(Letter::from_index(g));
                ensure(c.member(&w.conjugate_by(&x)).unwrap() == m, || format!("{}: conjugate of {w:?}", c.descriptor()))?;
            }
            let k = rng.random_range(0..=w.len());
            let (l, r) = w.letters().split_at(k);
            let v = Word::from_letters(l.iter().chain(s.relator().letters()).chain(r).copied());
            ensure(c.member(&v).unwrap() == m, || format!("{}: relator in {w:?}", c.descriptor()))?;
            trials += 1;
        }
    }
    Ok(format!("{trials} trials over mod2, mod3 and mod2^2, no failures"))
}

fn main() -> ExitCode {
    let checks: [(&str, Check); 10] = [
        ("basis curves and their conjugates are simple, powers are not", basis_and_conjugates),
        ("detector agrees with the hyperbolic oracle", oracle_equivalence),
        ("mod-2 simple representatives", mod2_representatives),
        ("simple curves of the mod-2 cover are null-homologous (length <= 10)", simple_members_null_homologous),
        ("composed mod-2 cover has no simple curves (length <= 10)", composed_cover_empty),
        ("coset enumeration indices of the mod-2 and Z/3 covers", index_checks),
        ("tower collapses for trivial words and carries a simple witness", collapse),
        ("obstruction screen on the tower for the free group", screen),
        ("Magnus and Fox degree-two terms agree", gamma3_agreement),
        ("cover membership is normal and well defined", normality),
    ];
    let mut failed = 0;
    for (k, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} -- {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} -- {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
