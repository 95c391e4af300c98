use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krdemazure"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn build_figure_left_as_dot() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["build", "--type", "C2", "--factors", "1,1:1,1", "--level", "1", "--view", "demazure", "--out", "g.dot"],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let dot = read(dir.path(), "g.dot");
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 15);
    assert!(stdout(&o).contains("16 nodes, 15 edges (1 of color 0)"));
    // Nothing but the summary goes to stdout.
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn build_json_and_trivial_product() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["build", "--type", "A2", "--factors", "1,1", "--out", "g.json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&read(dir.path(), "g.json")).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 3);
    let o = run(dir.path(), &["build", "--type", "A2~", "--out", "t.json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&read(dir.path(), "t.json")).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert!(v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["build", "--type", "C2", "--factors", "2,1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("B^{2,1}"));
    assert_eq!(code(&run(dir.path(), &["check", "nosuch"])), 2);
    assert_eq!(code(&run(dir.path(), &["build", "--type", "E8", "--factors", "1,1"])), 2);
    assert_eq!(code(&run(dir.path(), &["build", "--type", "A2", "--factors", "1,1", "--out", "g.png"])), 2);
    assert_eq!(code(&run(dir.path(), &["check", "qsystem", "--type", "C2", "--a", "1", "--m", "2", "--level", "2"])), 2);
}

#[test]
fn qbg_dot_marks_down_edges() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["qbg", "--type", "C2", "--out", "qbg.dot"]);
    assert_eq!(code(&o), 0);
    let dot = read(dir.path(), "qbg.dot");
    assert_eq!(dot.matches(" [label=\"").count() - 8, dot.matches("->").count());
    assert!(dot.contains("style=dashed"));
    assert!(stdout(&o).contains("8 vertices"));
}

#[test]
fn alcove_json_lists_chain_and_subsets() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["alcove", "--type", "A2", "--lambda", "1,1", "--level", "1", "--out", "alcove.json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&read(dir.path(), "alcove.json")).unwrap();
    assert_eq!(v["chain"].as_array().unwrap().len(), 4);
    let subsets = v["subsets"].as_array().unwrap();
    assert_eq!(subsets.len(), 9);
    assert!(subsets[0]["positions"].as_array().unwrap().is_empty());
    for s in subsets {
        let p: Vec<u64> = s["positions"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn checks_report_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["check", "figure", "--out", "r.json", "--junit", "j.xml"]);
    assert_eq!(code(&o), 0);
    let r: serde_json::Value = serde_json::from_str(&read(dir.path(), "r.json")).unwrap();
    assert_eq!(r["status"], "pass");
    assert!(read(dir.path(), "j.xml").contains("failures=\"0\""));

    let o = run(dir.path(), &["check", "qsystem", "--type", "A2", "--a", "1", "--m", "2", "--level", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS qsystem"));

    // Mismatched maximal weights are a precondition error, not a failed check.
    let o = run(dir.path(), &["check", "reduction", "--type", "A2", "--left", "1,1", "--right", "2,1", "--level", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn batch_reports_keep_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let specs = r#"[
        {"check": "figure"},
        {"check": "reduction", "left": {"cartan": "A2", "factors": [[1, 1], [2, 1]]},
         "right": {"cartan": "A2", "factors": [[2, 1], [1, 1]]}, "level": 1, "mode": "head"},
        {"check": "qchar", "n": 2, "a": 2, "m": 3}
    ]"#;
    std::fs::write(dir.path().join("specs.json"), specs).unwrap();
    let o = run(dir.path(), &["check", "batch", "--file", "specs.json", "--out", "r.json"]);
    assert_eq!(code(&o), 0);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&read(dir.path(), "r.json")).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["figure", "reduction", "qchar"]);
    let lines: Vec<String> = stdout(&o).lines().map(|l| l.split(' ').take(2).collect::<Vec<_>>().join(" ")).collect();
    assert_eq!(lines, ["PASS figure", "PASS reduction", "PASS qchar"]);
    std::fs::write(dir.path().join("bad.json"), "[{\"check\": \"nosuch\"}]").unwrap();
    assert_eq!(code(&run(dir.path(), &["check", "batch", "--file", "bad.json"])), 2);
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("run.conf"),
        "# defaults\ntype = A2\nfactors=1,1:1,1\nlevel=1\nview=dual\nnode-cap=100\n",
    )
    .unwrap();
    let o = run(dir.path(), &["--config", "run.conf", "build", "--out", "g.json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("A2 B^{1,1} ⊗ B^{1,1} (Dual, level 1): 9 nodes"));
    // Flags win over the file.
    let o = run(dir.path(), &["--config", "run.conf", "build", "--factors", "2,1"]);
    assert!(stdout(&o).contains("3 nodes"));
    // The node cap from the file is enforced.
    let o = run(dir.path(), &["--config", "run.conf", "build", "--factors", "1,4:1,4"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn outputs_are_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let specs = r#"[
        {"check": "qsystem", "n": 2, "a": 1, "m": 2, "level": 2},
        {"check": "qchar", "n": 3, "a": 2, "m": 2},
        {"check": "alcove", "cartan": "A2", "lambda": [1, 1], "level": 1, "order": "lex"},
        {"check": "bmin_fixture", "fixture": "Tensor11"},
        {"check": "figure"}
    ]"#;
    std::fs::write(dir.path().join("specs.json"), specs).unwrap();
    let mut outputs = vec![];
    for threads in ["1", "4"] {
        let (r, j) = (format!("r{threads}.json"), format!("j{threads}.xml"));
        let o = run(
            dir.path(),
            &["--threads", threads, "check", "batch", "--file", "specs.json", "--out", &r, "--junit", &j],
        );
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        outputs.push((read(dir.path(), &r), read(dir.path(), &j)));
    }
    assert_eq!(outputs[0], outputs[1]);
    for ext in ["dot", "json"] {
        let a = format!("a.{ext}");
        let b = format!("b.{ext}");
        for (t, f) in [("1", &a), ("3", &b)] {
            let args = ["--threads", t, "build", "--type", "A3", "--factors", "2,1:1,2", "--view", "dual", "--level", "2", "--out", f];
            assert_eq!(code(&run(dir.path(), &args)), 0);
        }
        assert_eq!(read(dir.path(), &a), read(dir.path(), &b));
    }
}
