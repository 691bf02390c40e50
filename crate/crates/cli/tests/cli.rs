use std::path::Path;
use std::process::Command;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wonderful_cli::document::{self, Document};
use wonderful_core::catalog;
use wonderful_core::testing::random_valid_system;

fn wonderful(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wonderful"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn catalog_file(dir: &Path, name: &str) -> String {
    let (code, doc, _) = wonderful(&["catalog", "show", name]);
    assert_eq!(code, 0);
    write(dir, &format!("{name}.json"), &doc)
}

#[test]
fn p1_validates_and_is_not_rigid() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = catalog_file(dir.path(), "P1");
    assert_eq!(
        wonderful(&["validate", &p1]),
        (0, "ok\n".into(), String::new())
    );
    assert_eq!(
        wonderful(&["rigidity", &p1]),
        (
            0,
            "rigid: false, distinguished: σ_1 (condition 1)\n".into(),
            String::new()
        )
    );
}

#[test]
fn localizing_the_group_case_at_one_root() {
    let dir = tempfile::tempdir().unwrap();
    let g = catalog_file(dir.path(), "group-a1a1");
    let (code, out, _) = wonderful(&["localize", &g, "--subset", "a1"]);
    assert_eq!(code, 0);
    let doc = document::parse(&out).unwrap();
    assert_eq!(doc.spherical_roots.len(), 1);
    assert_eq!(document::to_json(&doc), out);
    let s = doc.to_system().unwrap();
    assert_eq!(s.spherical_roots()[0].to_string(), "a1");
    assert_eq!(s.colors().len(), 2);
    for c in s.colors() {
        assert_eq!(c.phi.to_string(), "(1)");
    }
}

#[test]
fn violations_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"root_system":{"components":[{"series":"A","rank":1}]},
        "spherical_roots":[{"coeffs":{"a1":1}}],
        "colors":[{"id":"D","moved_by":["a1"],"phi":[2]}]}"#;
    let bad = write(dir.path(), "bad.json", text);
    for verb in ["validate", "rigidity", "critical", "orbits"] {
        let (code, out, _) = wonderful(&[verb, &bad]);
        assert_eq!(code, 1, "{verb}");
        assert!(out.starts_with("P1: "), "{out}");
    }
    let (code, out, _) = wonderful(&["localize", &bad, "--subset", "a1"]);
    assert_eq!(code, 1);
    assert!(out.contains("P1"));
    let (code, out, _) = wonderful(&["--format", "json", "validate", &bad]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["report"]["violations"][0]["axiom"], "P1");
}

#[test]
fn malformed_input_exits_with_two_and_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let wrong_type = write(
        dir.path(),
        "t.json",
        "{\"root_system\":{\"components\":[{\"series\":\"A\",\"rank\":1}]},\n\"spherical_roots\":[{\"coeffs\":{\"a1\":\"one\"}}],\n\"colors\":[]}",
    );
    let (code, _, err) = wonderful(&["validate", &wrong_type]);
    assert_eq!(code, 2);
    assert!(err.contains("spherical_roots[0].coeffs.a1"), "{err}");
    assert!(err.contains("line 2"), "{err}");

    let unknown = write(
        dir.path(),
        "u.json",
        r#"{"root_system":{"components":[{"series":"A","rank":1}]},"spherical_roots":[{"coeffs":{"b7":1}}],"colors":[]}"#,
    );
    let (code, _, err) = wonderful(&["validate", &unknown]);
    assert_eq!(code, 2);
    assert!(err.contains("`b7`"), "{err}");

    let missing = write(dir.path(), "m.json", r#"{"root_system":{"components":[]}}"#);
    let (code, _, err) = wonderful(&["validate", &missing]);
    assert_eq!(code, 2);
    assert!(err.contains("spherical_roots"), "{err}");

    let series = write(
        dir.path(),
        "s.json",
        r#"{"root_system":{"components":[{"series":"B","rank":1}]},"spherical_roots":[],"colors":[]}"#,
    );
    let (code, _, err) = wonderful(&["validate", &series]);
    assert_eq!(code, 2);
    assert!(err.contains("root_system.components[0].rank"), "{err}");

    assert_eq!(wonderful(&["validate", "no-such-entry"]).0, 2);
    assert_eq!(wonderful(&["frobnicate"]).0, 2);
    assert_eq!(wonderful(&["localize", "P1", "--subset", "a9"]).0, 2);
    assert_eq!(wonderful(&["catalog", "show", "nothing"]).0, 2);
    assert_eq!(wonderful(&["--format", "xml", "validate", "P1"]).0, 2);
}

#[test]
fn rationals_round_trip_as_halves() {
    let (code, out, _) = wonderful(&["localize", "so5-case2", "--subset", "a2"]);
    assert_eq!(code, 0);
    let s = document::parse(&out).unwrap().to_system().unwrap();
    assert!(s.validate().ok());
    let text = r#"{"root_system":{"components":[{"series":"A","rank":1}]},
        "spherical_roots":[{"coeffs":{"a1":2}}],
        "colors":[{"id":"D","moved_by":["a1"],"phi":["1/2"]}]}"#;
    let doc = document::parse(text).unwrap();
    assert!(doc.to_system().is_ok());
    let again = Document::from_system(&doc.to_system().unwrap());
    assert_eq!(document::parse(&document::to_json(&again)).unwrap(), again);
}

#[test]
fn output_is_deterministic() {
    for name in catalog::names() {
        for verb in ["rigidity", "critical", "orbits"] {
            for format in ["text", "json"] {
                let a = wonderful(&["--format", format, verb, name]);
                let b = wonderful(&["--format", format, verb, name]);
                assert_eq!(a.0, 0);
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn json_envelope_carries_the_text_content() {
    let (_, out, _) = wonderful(&["--format", "json", "critical", "sl3-gl2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "critical");
    assert_eq!(v["ok"], true);
    assert_eq!(v["report"]["roots"][0]["critical"], true);
    assert_eq!(v["report"]["roots"][0]["vacuous"], true);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_systems_round_trip(seed in any::<u64>()) {
        let s = random_valid_system(&mut ChaCha8Rng::seed_from_u64(seed), 6);
        let text = document::to_json(&Document::from_system(&s));
        let back = document::parse(&text).unwrap().to_system().unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(document::to_json(&Document::from_system(&back)), text);
    }
}
