use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lattika"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lattika-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn rule_then_verify() {
    let dir = scratch("verify");
    let path = dir.join("hh.json");
    let p = path.to_str().unwrap();
    let o = run(&["rule", "--case", "HexHex", "--tag", "HH", "--n", "4", "--out", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("nodes=61"));
    let o = run(&["verify", "--rule", p, "--tol", "1e-9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass=true"));
    let o = run(&["verify", "--rule", p, "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("max_error="));

    let text = std::fs::read_to_string(&path).unwrap();
    let broken = text.replacen("\"weight\": \"1\"", "\"weight\": \"1001/1000\"", 1);
    assert_ne!(broken, text);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, broken).unwrap();
    assert_eq!(run(&["verify", "--rule", bad.to_str().unwrap()]).status.code(), Some(1));

    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    let o = run(&["verify", "--rule", garbage.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).lines().count(), 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn rule_errors_exit_two() {
    let o = run(&["rule", "--tag", "RR2", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    assert_eq!(run(&["rule", "--tag", "nope", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["rule", "--case", "HexHex", "--tag", "SS1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["rule"]).status.code(), Some(2));
}

#[test]
fn triangle_rule_has_five_nodes() {
    let o = run(&["rule", "--tag", "SR-cubaT", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("\"cartesian\"").count(), 5);
}

#[test]
fn fft_round_trip() {
    let dir = scratch("fft");
    let n = 4;
    let mut csv = String::from("j1,j2,re,im\n");
    for j1 in 0..n {
        for j2 in 0..n {
            csv += &format!("{j1},{j2},{},{}\n", (j1 * 7 + j2) as f64 * 0.25 - 1.0, (j1 as f64 - j2 as f64) * 0.5);
        }
    }
    let input = dir.join("in.csv");
    std::fs::write(&input, &csv).unwrap();
    let spec = dir.join("spec.csv");
    let back = dir.join("back.csv");
    let o = run(&["fft", "--n", "4", "--input", input.to_str().unwrap(), "--out", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(std::fs::read_to_string(&spec).unwrap().starts_with("k1,k2,k3,re,im\n"));
    let o = run(&["fft", "--n", "4", "--inverse", "--input", spec.to_str().unwrap(), "--out", back.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let parse = |s: &str| -> Vec<[f64; 2]> {
        s.lines()
            .skip(1)
            .map(|l| {
                let f: Vec<f64> = l.split(',').skip(2).map(|v| v.parse().unwrap()).collect();
                [f[0], f[1]]
            })
            .collect()
    };
    let a = parse(&csv);
    let b = parse(&std::fs::read_to_string(&back).unwrap());
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!((x[0] - y[0]).abs() < 1e-12 && (x[1] - y[1]).abs() < 1e-12);
    }

    let o = run(&["fft", "--n", "5", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn constant_fft_has_one_nonzero_row() {
    let dir = scratch("const");
    let input = dir.join("c.csv");
    let mut csv = String::new();
    for j1 in 0..3 {
        for j2 in 0..3 {
            csv += &format!("{j1},{j2},2,0\n");
        }
    }
    std::fs::write(&input, csv).unwrap();
    let o = run(&["fft", "--n", "3", "--input", input.to_str().unwrap()]);
    let nonzero: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .filter(|l| {
            let f: Vec<f64> = l.split(',').skip(3).map(|v| v.parse().unwrap()).collect();
            f[0].hypot(f[1]) > 1e-12
        })
        .map(String::from)
        .collect();
    assert_eq!(nonzero.len(), 1);
    assert!(nonzero[0].starts_with("0,0,0,"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn plot_is_deterministic() {
    let dir = scratch("plot");
    let rule = dir.join("r.json");
    run(&["rule", "--tag", "HH", "--n", "4", "--out", rule.to_str().unwrap()]);
    let (a, b) = (dir.join("a.svg"), dir.join("b.svg"));
    for p in [&a, &b] {
        let o = run(&["plot", "--rule", rule.to_str().unwrap(), "--svg", p.to_str().unwrap(), "--size", "300"]);
        assert_eq!(o.status.code(), Some(0));
    }
    let sa = std::fs::read(&a).unwrap();
    assert_eq!(sa, std::fs::read(&b).unwrap());
    let text = String::from_utf8(sa).unwrap();
    assert!(text.contains(r#"class="outline""#));
    assert_eq!(text.matches(r#"class="vertex""#).count(), 6);
    assert_eq!(run(&["plot", "--rule", "/nonexistent.json", "--svg", a.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn tiling_check_passes() {
    let o = run(&["tiling-check", "--samples", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with("deviation=0")).count(), 8);
    assert_eq!(run(&["tiling-check", "--case", "Octagon"]).status.code(), Some(2));
}

#[test]
fn interp_lists_nodes_and_evaluates() {
    let dir = scratch("interp");
    let o = run(&["interp", "--flavor", "triangle-cosine", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let nodes: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    let samples = dir.join("s.csv");
    std::fs::write(&samples, "re,im\n".to_string() + &"1,0\n".repeat(nodes.len())).unwrap();
    let points = dir.join("p.csv");
    std::fs::write(&points, "0.1,0.2,-0.3\n0.25,0.25,-0.5\n").unwrap();
    let o = run(&[
        "interp",
        "--flavor",
        "triangle-cosine",
        "--n",
        "3",
        "--samples",
        samples.to_str().unwrap(),
        "--points",
        points.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for l in stdout(&o).lines().skip(1) {
        let re: f64 = l.split(',').nth(3).unwrap().parse().unwrap();
        assert!((re - 1.0).abs() < 1e-10);
    }
    let o = run(&["interp", "--flavor", "generic", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["interp", "--flavor", "starred-hex", "--n", "3", "--lebesgue", "--density", "32"]);
    assert!(stdout(&o).contains("lebesgue="));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn thread_variable_is_validated() {
    let o = bin().env("LATTIKA_THREADS", "zero").args(["tiling-check", "--samples", "10"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin().env("LATTIKA_THREADS", "1").args(["tiling-check", "--samples", "10"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}
