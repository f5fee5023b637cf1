use std::process::{Command, Output};

fn e8toe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8toe")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn roots_summary() {
    let o = e8toe(&["roots", "E8"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("240 roots, 120 positive, h∨=30"));
    assert!(stdout(&e8toe(&["roots", "A1"])).starts_with("2 roots, 1 positive"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(e8toe(&["roots", "Q9"]).status.code(), Some(2));
    assert_eq!(e8toe(&["decompose", "--h1", "1,2"]).status.code(), Some(2));
    assert_eq!(e8toe(&["toe", "--mode", "toe4"]).status.code(), Some(2));
    assert_eq!(e8toe(&["sl2", "E8"]).status.code(), Some(2));
}

#[test]
fn sl2_counts() {
    let o = e8toe(&["--format", "json", "sl2", "E8", "--max-index", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    let o = e8toe(&["--format", "json", "sl2", "B6", "--exact-index", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn centralizer_of_index_two() {
    let o = e8toe(&["--format", "json", "centralizer", "--h1", "4,5,7,10,8,6,4,2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 78);
    assert_eq!(v["type"], "B6");
}

#[test]
fn decompose_pair() {
    let o = e8toe(&["decompose", "--h1", "2,3,4,6,5,4,3,2", "--h2", "2,2,3,4,3,2,1,0", "--refine"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("V(2,1) = 32\n"), "{s}");
    assert!(s.contains("V(1,2) = 32′\n"), "{s}");
    let o = e8toe(&["decompose", "--h1", "4,5,7,10,8,6,4,2"]);
    assert_eq!(stdout(&o), "[1]: 78\n[2]: 64\n[3]: 14\n");
}

#[test]
fn reality_of_spinors() {
    assert!(stdout(&e8toe(&["reality", "B4", "0,0,0,1"])).contains("real"));
    assert!(stdout(&e8toe(&["reality", "B2", "0,1"])).contains("quaternionic"));
    assert!(stdout(&e8toe(&["reality", "A2", "1,0"])).contains("complex"));
}

#[test]
fn nogo_dimension() {
    let o = e8toe(&["--format", "json", "nogo-dim"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["required"], 180);
    assert_eq!(v["excluded"], true);
}

#[test]
fn toe_modes() {
    for (mode, n) in [("toe2", 6), ("toe2prime", 9)] {
        let o = e8toe(&["--format", "json", "toe", "--mode", mode]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["mode"], mode);
        let c = v["candidates"].as_array().unwrap();
        assert_eq!(c.len(), n);
        assert!(c.iter().all(|c| c["toe3_fails"] == true));
        assert_eq!(c[0]["ambient"], "E8(−24)");
        assert_eq!(c[0]["gmax"], "Spin(11)");
        assert_eq!(c[0]["V21"], "32");
    }
    let s = stdout(&e8toe(&["toe"]));
    assert!(s.contains("6/6 candidates fail ToE3"), "{s}");
}
