use std::path::PathBuf;
use std::process::{Command, Output};

use surfcover::format::parse_presentation;
use surfcover::report::{
    CosetReport, CoverGensReport, EnumReport, Mod2RepsReport, ObstructJson, OracleReport, SearchReport, SimpleReport,
    StatusJson, TowerReport, VerdictReport,
};
use surfcover_core::Verdict;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfcover")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn text_verbs() {
    assert_eq!(stdout(&["simple", "a1"]), "simple: true\n");
    assert_eq!(stdout(&["simple", "[a1,b1]^2"]), "simple: false\n");
    assert_eq!(stdout(&["selfint", "a1^3"]), "self-intersection: 2\n");
    assert_eq!(stdout(&["cover-member", "mod2 g=2", "a1^2"]), "member: true\n");
    assert_eq!(stdout(&["cover-member", "cover mod2^2 g=2", "a1^2"]), "member: false\n");
    assert!(stdout(&["obstruct", "a1^2 b1"]).contains("primitive: true"));
    assert_eq!(stdout(&["mod2-reps"]).lines().count(), 15);
    assert_eq!(stdout(&["--genus", "3", "simple", "b3"]), "simple: true\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["simple"]).status.code(), Some(2));
    assert_eq!(run(&["search", "mod2 g=2"]).status.code(), Some(2));
    assert_eq!(run(&["simple", "c7"]).status.code(), Some(1));
    assert_eq!(run(&["--genus", "1", "simple", "a1"]).status.code(), Some(1));
    assert_eq!(run(&["cover-member", "mod1 g=2", "a1"]).status.code(), Some(1));
    assert_eq!(run(&["coset-enum", "/nonexistent/file"]).status.code(), Some(1));
    let o = run(&["simple", "a1 ^"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn coset_enum_and_tower() {
    let dir = TempDir::new().unwrap();
    let a5 = file(&dir, "a5.pres", "# A5\ngens: x y\nrel: x^2\nrel: y^3\nrel: (x y)^5\n");
    assert_eq!(stdout(&["coset-enum", a5.to_str().unwrap()]), "order: 60\n");
    let sub = file(&dir, "sub.pres", "gens: x y\nrel: x^2\nrel: y^3\nrel: (x y)^5\nsub: y\n");
    assert_eq!(stdout(&["coset-enum", sub.to_str().unwrap()]), "index: 20\n");
    let free = file(&dir, "free.pres", "gens: x\n");
    assert!(stdout(&["coset-enum", free.to_str().unwrap(), "--max", "1000"]).contains("exceeded 1000"));

    let h = file(&dir, "h.pres", "gens: h\nrel: h\n");
    let dw = dir.path().join("dw_trivial.pres");
    stdout(&["rabin-emit", h.to_str().unwrap(), "--word", "h", "--out", dw.to_str().unwrap()]);
    let text = std::fs::read_to_string(&dw).unwrap();
    for layer in ["# U", "# J", "# K0", "# K7", "# Q", "# D_w"] {
        assert!(text.lines().any(|l| l == layer), "{layer}");
    }
    let f = parse_presentation(&text).unwrap();
    assert_eq!(f.presentation.rank(), 15);
    assert_eq!(stdout(&["coset-enum", dw.to_str().unwrap()]), "order: 1\n");
}

#[test]
fn reduce_verdicts() {
    let dir = TempDir::new().unwrap();
    let h = file(&dir, "h.pres", "gens: h\nrel: h^2\n");
    let out = stdout(&["reduce", h.to_str().unwrap(), "--word", "h^2", "--bound", "4"]);
    assert!(out.contains("trivial cover"), "{out}");
    assert!(out.contains("witness: a1 b1 a1^-1 b1^-1"), "{out}");
    let free = file(&dir, "free.pres", "gens: h\n");
    let out = stdout(&["reduce", free.to_str().unwrap(), "--word", "h", "--max", "20000", "--bound", "4"]);
    assert!(out.contains("presentation emitted"), "{out}");
    assert!(out.contains("screen: 0 of"), "{out}");
}

#[test]
fn json_reports_round_trip() {
    let dir = TempDir::new().unwrap();
    let r: SimpleReport = serde_json::from_str(&stdout(&["--json", "simple", "a1 b1"])).unwrap();
    assert!(r.simple && r.schema == 1);

    let r: ObstructJson = serde_json::from_str(&stdout(&["--json", "obstruct", "[a1,[a1,b1]]"])).unwrap();
    let d = r.to_domain().unwrap();
    assert!(d.in_gamma3 && !d.possibly_simple);

    let r: SearchReport = serde_json::from_str(&stdout(&["--json", "search", "mod2 g=2", "--maxlen", "4"])).unwrap();
    let d = r.to_domain().unwrap();
    assert_eq!(d.witnesses.len(), 2);
    assert!(d.exhausted);

    let r: EnumReport = serde_json::from_str(&stdout(&["--json", "enum-simple", "--maxlen", "3"])).unwrap();
    assert_eq!(r.to_domain().unwrap(), surfcover_core::enumerate_simple(&surfcover_core::SurfacePresentation::new(2).unwrap(), 3));

    let r: Mod2RepsReport = serde_json::from_str(&stdout(&["--json", "mod2-reps"])).unwrap();
    assert_eq!(r.to_domain().unwrap().len(), 15);

    let deck = file(&dir, "deck.pres", "gens: a1 b1 a2 b2\nrel: a1^3\nrel: b1\nrel: a2\nrel: b2\n");
    let r: CoverGensReport = serde_json::from_str(&stdout(&["--json", "cover-gens", deck.to_str().unwrap()])).unwrap();
    assert_eq!(r.index, Some(3));
    assert_eq!(r.to_domain().unwrap().conjugators.len(), 2);

    let a5 = file(&dir, "a5.pres", "gens: x y\nrel: x^2\nrel: y^3\nrel: (x y)^5\n");
    let r: CosetReport = serde_json::from_str(&stdout(&["--json", "coset-enum", a5.to_str().unwrap()])).unwrap();
    assert_eq!(r.result, StatusJson::Complete { index: 60 });

    let h = file(&dir, "h.pres", "gens: h\nrel: h\n");
    let r: TowerReport = serde_json::from_str(&stdout(&["--json", "rabin-emit", h.to_str().unwrap(), "--word", "h"])).unwrap();
    assert_eq!(r.n, 15);
    assert_eq!(parse_presentation(&r.presentation).unwrap().presentation.relators().len(), r.layers.last().unwrap().end);

    let r: VerdictReport =
        serde_json::from_str(&stdout(&["--json", "reduce", h.to_str().unwrap(), "--word", "h", "--bound", "4"])).unwrap();
    assert!(matches!(r.to_domain().unwrap(), Verdict::TrivialCover { witness: Some(_), .. }));
}

#[test]
fn seeded_oracle_check() {
    let args = ["--json", "--seed", "42", "oracle-check", "--samples", "100"];
    let a: OracleReport = serde_json::from_str(&stdout(&args)).unwrap();
    let b: OracleReport = serde_json::from_str(&stdout(&args)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.samples, 100);
    assert!(a.disagreements.is_empty());
}

#[test]
fn threads_do_not_change_output() {
    let one = stdout(&["--threads", "1", "search", "mod2 g=2", "--maxlen", "6"]);
    let four = stdout(&["--threads", "4", "search", "mod2 g=2", "--maxlen", "6"]);
    assert_eq!(one, four);
}
