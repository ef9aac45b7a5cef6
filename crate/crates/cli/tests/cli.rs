use std::process::{Command, Output};

use quantum_skein::laurent::LaurentPoly;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .env_remove("SKEIN_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    s.trim().parse().unwrap()
}

#[test]
fn unknot_bracket() {
    let o = skein(&["eval", "--invariant", "bracket", "--braid", "B1:"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-A^2 - A^-2\n");
}

#[test]
fn dubrovnik_kink() {
    let o = skein(&["eval", "--invariant", "dubrovnik", "--braid", "B2: 1"]);
    assert!(o.status.success());
    assert_eq!(poly(&stdout(&o)), poly("a*((a - a^-1)*z^-1 + 1)"));
}

#[test]
fn trivial_fourth_root() {
    let o = skein(&["eval", "--invariant", "trivial:+i", "--braid", "B2: 1 1 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-i\n");
}

#[test]
fn morse_input_and_file() {
    let word = "cup@1 cup@2 x+@1 x+@1 cap@2 cap@1";
    let o = skein(&["eval", "--invariant", "bracket-twin", "--morse", word]);
    assert!(o.status.success());
    let want = poly("A^2*(A^2 + A^-2)^2 - 2*(A^2 + A^-2) + A^-2*(A^2 + A^-2)^2");
    assert_eq!(poly(&stdout(&o)), want);
    let dir = std::env::temp_dir().join(format!("skein-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("kinks.morse");
    std::fs::write(&f, format!("# two kinks\n{word}\n")).unwrap();
    let o = skein(&[
        "eval",
        "--invariant",
        "bracket-twin",
        "--morse-file",
        f.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(poly(&stdout(&o)), want);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output_round_trips() {
    let o = skein(&[
        "eval",
        "--invariant",
        "kauffman",
        "--braid",
        "B3: 1 -2 1 -2",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = poly(v["value"].as_str().unwrap());
    let terms = LaurentPoly::from_json(&v["terms"].to_string()).unwrap();
    assert_eq!(text, terms);
    assert_eq!(v["experimental"], false);
    let o2 = skein(&[
        "eval",
        "--invariant",
        "kauffman",
        "--braid",
        "B3: 1 -2 1 -2",
    ]);
    assert_eq!(poly(&stdout(&o2)), text);
}

#[test]
fn twin_warns_on_stderr() {
    let o = skein(&["eval", "--invariant", "kauffman-twin", "--braid", "B2: 1 1"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("experimental"));
    let o = skein(&["eval", "--invariant", "kauffman", "--braid", "B2: 1 1"]);
    assert!(!stderr(&o).contains("experimental"));
}

#[test]
fn specialization_recovers_bracket() {
    // cleared of z denominators by choosing a unit image for z
    let o = skein(&[
        "eval",
        "--invariant",
        "homfly-framed",
        "--braid",
        "B2: 1 1",
        "--specialize",
        "a=A,b=A^-1",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let b = skein(&["eval", "--invariant", "bracket", "--braid", "B2: 1 1"]);
    assert_eq!(poly(&stdout(&o)), poly(&stdout(&b)));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| skein(args).status.code().unwrap();
    assert_eq!(
        code(&["eval", "--invariant", "bracket", "--braid", "B2: 1 x"]),
        2
    );
    assert_eq!(
        code(&["eval", "--invariant", "nope", "--braid", "B2: 1"]),
        2
    );
    assert_eq!(code(&["eval", "--invariant", "bracket"]), 2);
    assert_eq!(
        code(&[
            "eval",
            "--invariant",
            "bracket",
            "--braid",
            "B1:",
            "--morse",
            ""
        ]),
        2
    );
    assert_eq!(
        code(&["eval", "--invariant", "bracket", "--morse", "cup@1 x+@1"]),
        3
    );
    assert_eq!(
        code(&[
            "eval",
            "--invariant",
            "bracket",
            "--braid",
            "B2: 1",
            "--specialize",
            "A"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "eval",
            "--invariant",
            "bracket",
            "--braid",
            "B2: -1",
            "--specialize",
            "A=A+1"
        ]),
        3
    );
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["fmatrix", "--dims", "two"]), 2);
    assert_eq!(
        code(&["fmatrix", "--dims", "2,2,1", "--variant", "sideways"]),
        2
    );
    assert_eq!(code(&["fmatrix", "--dims", "2,2,2"]), 3);
}

#[test]
fn crossing_cap() {
    let args = ["eval", "--invariant", "dubrovnik", "--braid", "B2: 1 1 1"];
    assert_eq!(
        skein(&[&args[..], &["--cap", "2"]].concat()).status.code(),
        Some(3)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .env("SKEIN_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("cap"));
    assert!(skein(&args).status.success());
}

#[test]
fn fmatrix_examples() {
    let o = skein(&["fmatrix", "--dims", "1.41421356", "--kappa", "1", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 2);
    assert!((m[0][0].as_f64().unwrap() - 0.5f64.sqrt()).abs() < 1e-8);

    let o = skein(&[
        "fmatrix",
        "--dims",
        "2,2,1",
        "--variant",
        "dubrovnik",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let h = 0.5f64.sqrt();
    let want = [[0.5, h, 0.5], [h, 0.0, -h], [0.5, -h, 0.5]];
    for (i, row) in want.iter().enumerate() {
        for (j, w) in row.iter().enumerate() {
            assert!((v["matrix"][i][j].as_f64().unwrap() - w).abs() < 1e-12);
        }
    }

    let o = skein(&[
        "fmatrix",
        "--dims",
        "2,2,1",
        "--variant",
        "dubrovnik",
        "--kappa",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("antisymmetric self-duality excluded"));

    let o = skein(&["fmatrix", "--dims", "2,2,1", "--variant", "kauffman"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("passed"));
}

#[test]
fn verify_suites() {
    for s in ["laurent", "fusion"] {
        let o = skein(&["verify", "--suite", s]);
        assert!(o.status.success(), "{s}: {}", stdout(&o));
    }
    let o = skein(&["verify", "--suite", "fusion", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn tl_image() {
    let o = skein(&["tl", "--braid", "B2: 1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    // the TL closure must agree with the framed state sum
    let s = skein(&["eval", "--invariant", "homfly-framed", "--braid", "B2: 1"]);
    assert_eq!(poly(v["closure"].as_str().unwrap()), poly(&stdout(&s)));
}

#[test]
fn deterministic_output() {
    let args = [
        "eval",
        "--invariant",
        "dubrovnik",
        "--braid",
        "B3: 1 -2 1 1 -2",
    ];
    let first = stdout(&skein(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&skein(&args)), first);
    }
}
