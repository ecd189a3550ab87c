use std::process::{Command, Output};

fn psnf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psnf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = psnf(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn weights_of_three_two_in_letters() {
    let o = psnf(&["weights", "3,2", "--naming", "letters"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("P(1,1) = abcde+bcde+bce+cde+ce+de+c+e+1\nP(1,2) = bce+ce+c+e+1\n"));
    assert_eq!(text.lines().count(), 11);
    assert!(text.ends_with("P(3,3) = 1\n"));
}

#[test]
fn coordinate_names_are_the_default() {
    let text = stdout(&psnf(&["weights", "1"]));
    assert_eq!(text, "P(1,1) = x1_1+1\nP(1,2) = 1\nP(2,1) = 1\nP(2,2) = 1\n");
}

#[test]
fn empty_partition() {
    let text = stdout(&psnf(&["weights", ""]));
    assert_eq!(text, "P(1,1) = 1\n");
    let o = psnf(&["snf", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("diagonal: 1\n"));
}

#[test]
fn snf_text_and_json() {
    let o = psnf(&["snf", "3,2", "--naming", "letters"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("diagonal: abcde, e, 1").count(), 2);
    assert!(text.contains("agree: true"));

    let v = json(&["snf", "3,2", "--naming", "letters"]);
    assert_eq!(v["command"], "snf");
    assert_eq!(v["verified"], true);
    assert_eq!(v["result"]["diagonal_text"], serde_json::json!(["abcde", "e", "1"]));
    let results = v["result"]["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    let p: partition_snf::PolyMatrix = serde_json::from_value(results[0]["P"].clone()).unwrap();
    assert!(p.is_upper_unitriangular());
}

#[test]
fn snf_rectangles() {
    let v = json(&["snf", "3,2", "--algorithm", "inductive", "--rect", "2", "3", "--naming", "letters"]);
    assert_eq!(v["result"]["diagonal_text"], serde_json::json!(["bce", "1"]));
    let v = json(&["snf", "3,2", "--algorithm", "inductive", "--rect", "3", "2", "--naming", "letters"]);
    assert_eq!(v["result"]["diagonal_text"], serde_json::json!(["de", "1"]));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["snf", "2,3"][..],
        &["weights", "3,x"],
        &["frobnicate"],
        &["snf", "3,2", "--rect", "2", "3"],
        &["snf", "3,2", "--algorithm", "inductive", "--rect", "2", "2"],
        &["recurrence", "3,2", "--j", "9"],
        &["selftest", "0"],
    ] {
        let o = psnf(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(psnf(&["--help"]).status.code(), Some(0));
}

#[test]
fn letters_need_at_most_26_cells() {
    let o = psnf(&["weights", "9,9,9", "--naming", "letters"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(psnf(&["weights", "9,9,8", "--naming", "letters"]).status.code(), Some(0));
}

#[test]
fn recurrence_residuals() {
    let text = stdout(&psnf(&["recurrence", "5,4,1", "--naming", "letters"]));
    assert!(text.contains("j=1: residual abcdefghij, expected abcdefghij, ok"));
    assert!(text.contains("j=2: residual 0, expected 0, ok"));
    assert!(text.contains("j=3: residual 0, expected 0, ok"));
    assert!(text.contains("tau_2 = bcdehi+bcdei+bcde+cdei+cde+de"));
    let v = json(&["recurrence", "3,2", "--j", "1"]);
    assert_eq!(v["result"]["residuals"].as_array().unwrap().len(), 1);
}

#[test]
fn qcatalan_table() {
    let o = psnf(&["qcatalan", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[0], "0, 1");
    assert_eq!(lines[3], "3, 1+2q+q^2+q^3, (3,0), ok");
    assert!(lines[4].starts_with("4, ") && lines[4].ends_with(", (6,1,0), ok"));
}

#[test]
fn selftest_both_modes() {
    for extra in [&[][..], &["--sequential"]] {
        let mut args = vec!["selftest", "6"];
        args.extend(extra);
        let o = psnf(&args);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).ends_with("all checks passed\n"));
    }
    let v = json(&["selftest", "4"]);
    assert_eq!(v["result"]["partitions"], 12);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("psnf-out-{}.json", std::process::id()));
    let o = psnf(&["weights", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["result"]["rows"], serde_json::json!([3, 3]));
    let cells = v["result"]["cells"].as_array().unwrap();
    let border = cells.iter().filter(|c| c["border"] == true).count();
    assert_eq!(border, 4);
    for c in cells {
        let _: partition_snf::Polynomial = serde_json::from_value(c["weight"].clone()).unwrap();
    }
}
