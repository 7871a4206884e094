use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn pfcond(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfcond"))
        .args(args)
        .env_remove("PFCOND_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pfcond-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn counts_by_both_methods() {
    for (family, want) in [("grid:4,4", "36"), ("aztec:3", "64"), ("complete:4", "3"), ("cycle:7", "0")] {
        for method in ["enumerate", "pfaffian"] {
            let o = pfcond(&["count", "--family", family, "--method", method]);
            assert!(o.status.success(), "{family} {method}");
            assert_eq!(stdout(&o).trim(), want, "{family} {method}");
        }
    }
}

#[test]
fn random_weights_agree_across_methods() {
    let args = |m| ["count", "--family", "grid:3,4", "--weights", "random:1,9", "--seed", "4", "--method", m];
    let a = pfcond(&args("enumerate"));
    let b = pfcond(&args("pfaffian"));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_prints_one_line_per_trial() {
    let o = pfcond(&["verify", "--identity", "tanner", "--trials", "100", "--seed", "7", "--size", "8"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 101);
    assert!(lines[..100].iter().all(|l| l.starts_with("PASS tanner ")));
    assert_eq!(lines[100], "SUMMARY tanner 100/100");
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--identity", "kuo", "--trials", "10", "--seed", "3"];
    assert_eq!(stdout(&pfcond(&args)), stdout(&pfcond(&args)));
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>, flag: bool| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_pfcond"));
        c.args(["verify", "--identity", "ohta", "--trials", "3"]).env_remove("PFCOND_SEED");
        if let Some(s) = env {
            c.env("PFCOND_SEED", s);
        }
        if flag {
            c.args(["--seed", "11"]);
        }
        stdout(&c.output().unwrap())
    };
    assert_eq!(run(Some("11"), false), run(None, true));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pfcond(&["verify", "--identity", "nonsense"]).status.code(), Some(2));
    assert_eq!(pfcond(&["count", "--family", "grid:0,3"]).status.code(), Some(2));
    let o = pfcond(&["count", "--family", "complete:5", "--method", "pfaffian"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pf_of_a_file() {
    let path = scratch("skew.txt");
    fs::write(&path, "4\n1 2 1\n1 3 2\n1 4 3\n2 3 4\n2 4 5\n3 4 6\n").unwrap();
    for method in ["definition", "eliminate"] {
        let o = pfcond(&["pf", "--file", path.to_str().unwrap(), "--method", method]);
        assert!(o.status.success());
        // a12 a34 - a13 a24 + a14 a23
        assert_eq!(stdout(&o).trim(), "8");
    }
}

#[test]
fn generated_files_round_trip() {
    let graph = scratch("aztec.graph");
    let emb = scratch("aztec.emb");
    let xi = scratch("aztec.orient");
    let g = graph.to_str().unwrap();
    let e = emb.to_str().unwrap();
    let x = xi.to_str().unwrap();
    let o = pfcond(&["gen", "--family", "aztec:2", "--weights", "random:1,5", "--seed", "9", "--out", g, "--embedding", e]);
    assert!(o.status.success());
    let from_files = pfcond(&["count", "--in", g, "--embedding", e, "--method", "pfaffian"]);
    let direct = pfcond(&["count", "--family", "aztec:2", "--weights", "random:1,5", "--seed", "9"]);
    assert_eq!(stdout(&from_files), stdout(&direct));

    assert!(pfcond(&["orient", "--in", g, "--embedding", e, "--out", x]).status.success());
    for mode in ["faces", "all", "super"] {
        let o = pfcond(&["verify-orientation", "--in", g, "--embedding", e, "--orientation", x, "--mode", mode]);
        assert!(o.status.success(), "{mode}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"));
    }

    // reverse one arc and the faces check must fail
    let text = fs::read_to_string(&xi).unwrap();
    let mut flipped = Vec::new();
    let mut done = false;
    for line in text.lines() {
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["arc:", id, tail, head] if !done => {
                flipped.push(format!("arc: {id} {head} {tail}"));
                done = true;
            }
            _ => flipped.push(line.to_string()),
        }
    }
    fs::write(&xi, flipped.join("\n") + "\n").unwrap();
    let o = pfcond(&["verify-orientation", "--in", g, "--embedding", e, "--orientation", x, "--mode", "faces"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}
