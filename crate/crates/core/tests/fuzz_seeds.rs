//! Replays the checked-in fuzz corpus through the same round trips the fuzz
//! targets assert, so seeds stay meaningful on stable toolchains.

use std::fs;
use std::path::PathBuf;

use quantum_skein::diagram::{parse_diagram_json, BraidWord, DiagramJson, MorseDiagram};
use quantum_skein::fusion::{qdims, FusionRingData};
use quantum_skein::laurent::LaurentPoly;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(&p).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn braid_text_seeds() {
    for (name, s) in seeds("braid_text") {
        let b: BraidWord = s.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(b.to_string().parse::<BraidWord>().unwrap(), b);
    }
}

#[test]
fn morse_text_seeds() {
    let mut closed = 0;
    for (name, s) in seeds("morse_text") {
        let d: MorseDiagram = s.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(d.to_string().parse::<MorseDiagram>().unwrap(), d);
        closed += usize::from(d.is_closed());
    }
    assert!(closed >= 3);
}

#[test]
fn diagram_json_seeds() {
    for (name, s) in seeds("diagram_json") {
        let d = parse_diagram_json(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        let out = serde_json::to_string(&DiagramJson::from(&d)).unwrap();
        assert_eq!(parse_diagram_json(&out).unwrap(), d);
    }
}

#[test]
fn poly_seeds() {
    for (name, s) in seeds("poly_text") {
        let p: LaurentPoly = s.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }
    for (name, s) in seeds("poly_json") {
        let p = LaurentPoly::from_json(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }
}

#[test]
fn fusion_json_seeds() {
    let mut valid = 0;
    for (_, s) in seeds("fusion_json") {
        if let Ok(r) = FusionRingData::from_json(&s) {
            assert_eq!(FusionRingData::from_json(&r.to_json()).unwrap(), r);
            assert!(qdims(&r).unwrap().residual < 1e-9);
            valid += 1;
        }
    }
    assert_eq!(valid, 3);
}
