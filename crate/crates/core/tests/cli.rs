use s2s2::cli::run;

fn s2s2(args: &[&str]) -> (i32, String) {
    run(std::iter::once("s2s2").chain(args.iter().copied()))
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn expand_matches_golden_table() {
    let (code, out) = s2s2(&["expand", &data("m1.dc")]);
    assert_eq!(code, 0);
    assert_eq!(out, s2s2::bundled::M1_FCT);
}

#[test]
fn fct_input_is_accepted() {
    let (code, out) = s2s2(&["homology", &data("m1.fct")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("betti: (1,0,2,0,1)"));
}

#[test]
fn empty_input_is_a_usage_error() {
    let dir = std::env::temp_dir().join(format!("s2s2-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.dc");
    std::fs::write(&path, "").unwrap();
    let (code, out) = s2s2(&["expand", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error:"));
    assert_eq!(s2s2(&["verify"]).0, 1);
    assert_eq!(s2s2(&["verify", "m1", "--strategy", "guess"]).0, 1);
    assert_eq!(s2s2(&["verify", "no-such-file.dc"]).0, 1);
}

#[test]
fn strict_fails_on_non_manifolds() {
    let (code, out) = s2s2(&["verify", &data("m6.dc"), "--strict"]);
    assert_eq!(code, 2);
    assert!(out.contains("link <04>: not_sphere"));
    assert!(out.contains("f-vector (7,18,12), chi 1"));
    assert!(out.contains("manifold: no"));
    assert_eq!(s2s2(&["verify", &data("m6.dc")]).0, 0);
    assert_eq!(s2s2(&["verify", "m1", "--strict"]).0, 0);
}

#[test]
fn reports_carry_the_headline_lines() {
    let (_, v) = s2s2(&["verify", "m3"]);
    assert!(v.contains("manifold: yes\n") && v.contains("f-vector: (12,60,160,180,72)\n"));
    let (_, a) = s2s2(&["aut", "m2"]);
    assert!(a.contains("order: 240\n") && a.contains("center: 2\n"));
    let (_, i) = s2s2(&["iso", "m1", "m2"]);
    assert!(i.starts_with("isomorphic: no"));
}

#[test]
fn json_reports_are_versioned() {
    for args in [
        vec!["verify", "m1", "--format", "json"],
        vec!["aut", "m3", "--format", "json"],
        vec!["homology", "m2", "--format", "json"],
        vec!["iso", "m2", "m4", "--format", "json"],
        vec!["expand", "m5", "--format", "json"],
    ] {
        let (code, out) = s2s2(&args);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], "s2s2-report/1", "{args:?}");
    }
}

#[test]
fn empty_enumeration_is_a_valid_document() {
    let (code, out) = s2s2(&["enumerate", "--orbits", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["data"]["candidates"].as_array().unwrap().len(), 0);
    let (_, text) = s2s2(&["enumerate", "--orbits", "1"]);
    assert!(text.starts_with("# 0 candidate(s)"));
}

#[test]
fn output_is_identical_across_job_counts() {
    for args in [
        vec!["verify", "r41", "--full", "--witness", "--format", "json"],
        vec!["verify", "m2", "--full", "--witness", "--strategy", "bistellar"],
        vec!["enumerate", "--filters", "ridge"],
    ] {
        let outs: Vec<(i32, String)> = ["1", "2", "4"]
            .iter()
            .map(|j| {
                let mut a = args.clone();
                a.extend(["--jobs", j]);
                s2s2(&a)
            })
            .collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn output_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("s2s2-out-{}.fct", std::process::id()));
    let (code, out) = s2s2(&["expand", "m1", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), s2s2::bundled::M1_FCT);
    let _ = std::fs::remove_file(path);
}
