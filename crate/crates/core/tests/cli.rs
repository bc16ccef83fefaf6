use std::process::{Command, Output};

use gamma0::output::{ArcsDoc, CosetsDoc, CuspsDoc, GenusDoc, GluingDoc, VerifyDoc, WTableDoc};

fn gamma0(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma0")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = gamma0(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn roundtrip<T>(args: &[&str]) -> T
where
    T: serde::de::DeserializeOwned + serde::Serialize,
{
    let text = stdout(args);
    let doc: T = serde_json::from_str(&text).unwrap();
    let again: serde_json::Value = serde_json::to_value(&doc).unwrap();
    assert_eq!(again, serde_json::from_str::<serde_json::Value>(&text).unwrap(), "{args:?}");
    doc
}

#[test]
fn wtable_6() {
    let doc: WTableDoc = roundtrip(&["wtable", "6", "--json"]);
    assert_eq!(doc.n, 6);
    let e = doc.entries.iter().find(|e| e.j == 5).unwrap();
    assert_eq!(e.w, 4);
    assert_eq!(doc.m[5], 3);
    assert!(stdout(&["wtable", "6"]).lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["5", "4", "3"]));
}

#[test]
fn cosets_and_arcs_12() {
    let c: CosetsDoc = roundtrip(&["cosets", "12", "--json"]);
    assert_eq!(c.count, 24);
    assert_eq!(c.reps[0].word, "ST^-5");
    assert!(c.reps.iter().any(|r| r.word == "ST^3ST" && r.kind == "J"));
    let a: ArcsDoc = roundtrip(&["--json", "arcs", "12"]);
    assert_eq!(a.count, 26);
    assert_eq!(a.arcs.iter().filter(|x| x.ray).count(), 2);
}

#[test]
fn cusps_12() {
    let doc: CuspsDoc = roundtrip(&["cusps", "12", "--json"]);
    assert_eq!(doc.count, 6);
    assert_eq!(doc.classes.iter().map(|c| c.width).sum::<i64>(), 24);
}

#[test]
fn gluing_12() {
    let doc: GluingDoc = roundtrip(&["gluing", "12", "--json"]);
    assert_eq!(doc.count, 12);
    for p in &doc.pairs {
        let [[a, b], [c, d]] = p.witness;
        assert_eq!(a * d - b * c, 1);
        assert_eq!(c % 12, 0);
    }
}

#[test]
fn genus_12() {
    let doc: GenusDoc = roundtrip(&["genus", "12", "--json"]);
    assert_eq!((doc.genus, doc.faces, doc.euler_characteristic), (0, 24, 2));
    assert!(stdout(&["genus", "12"]).contains("genus 0"));
    assert!(stdout(&["genus", "37"]).contains("genus 2"));
}

#[test]
fn verify_range() {
    let doc: VerifyDoc = roundtrip(&["verify", "2..40", "--json", "--jobs", "2"]);
    assert_eq!(doc.summary.checked, 39);
    assert_eq!(doc.summary.failed, 0);
    let text = stdout(&["verify", "--range", "10..12"]);
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn render_to_file() {
    let dir = std::env::temp_dir().join(format!("gamma0-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d12.svg");
    let out = gamma0(&["render", "12", "--no-labels", "--svg-clip", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(!svg.contains("<text"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["genus", "1"][..],
        &["genus", "0"],
        &["cosets", "-4"],
        &["wtable", "x"],
        &["nonsense"],
        &["verify", "5..2"],
        &["render", "12", "--svg-clip", "0.5"],
    ] {
        assert_eq!(gamma0(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(gamma0(&["--help"]).status.code(), Some(0));
}
