use ddpb_cli::*;
use ddpb_core::global::Status;
use ddpb_core::io::{parse_config, RawAtom};
use ddpb_core::par::Execution;
use std::path::PathBuf;
use std::process::{Command, Output};

const SMALL: &str = "lmax = 2\nn_leb = 26\nn_radial = 6\nn_lgl = 12\nr_0 = 2\n";

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("ddpb-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        std::fs::remove_dir_all(&self.0).ok();
    }
}

fn ddpb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddpb")).args(args).output().unwrap()
}

fn hf() -> String {
    format!("{}/fixtures/hf.pqr", env!("CARGO_MANIFEST_DIR"))
}

fn one_atom(q: f64) -> Vec<RawAtom> {
    vec![RawAtom { position: [0.0; 3], charge: q, radius: 1.5 }]
}

#[test]
fn usage_errors_exit_64() {
    let s = Scratch::new("usage");
    let cfg = s.file("c.cfg", SMALL);
    let bad_cfg = s.file("bad.cfg", "lmax = -1\n");
    let bad_pqr = s.file("bad.pqr", "ATOM 1 C MOL 1 0 0 zero 0.1 1.5\n");
    let hf = hf();
    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["bogus"],
        vec!["solve"],
        vec!["solve", "--pqr", "/nonexistent.pqr"],
        vec!["solve", "--pqr", &hf, "--config", &bad_cfg],
        vec!["solve", "--pqr", &bad_pqr, "--config", &cfg],
        vec!["sweep", "--pqr", &hf, "--config", &cfg, "--vary", "nope", "--values", "1"],
        vec!["sweep", "--pqr", &hf, "--config", &cfg, "--vary", "lmax", "--values", "x"],
        vec!["rotate", "--pqr", &hf, "--config", &cfg, "--plane", "ab"],
        vec!["compare", "--pqr", &hf, "--config", &cfg],
    ];
    for args in cases {
        let out = ddpb(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = Command::new(env!("CARGO_BIN_EXE_ddpb"))
        .args(["solve", "--pqr", &hf, "--config", &cfg])
        .env("DDPB_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(ddpb(&["--help"]).status.code(), Some(0));
}

#[test]
fn solve_writes_json_report() {
    let s = Scratch::new("solve");
    let cfg = s.file("c.cfg", SMALL);
    let out_path = s.0.join("out.json");
    let out = ddpb(&["solve", "--pqr", &hf(), "--config", &cfg, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(v["status"], "converged");
    assert_eq!(v["molecule"]["atoms"], 2);
    assert_eq!(v["config"]["lmax"], 2);
    assert_eq!(v["config_hash"].as_str().unwrap().len(), 64);
    assert!(v["energy"]["total"].as_f64().unwrap().is_finite());
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn max_iter_exits_2() {
    let s = Scratch::new("maxiter");
    let cfg = s.file("c.cfg", &format!("{SMALL}max_outer = 1\ntol = 1e-12\n"));
    let out = ddpb(&["solve", "--pqr", &hf(), "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "max_iter");
    assert!(v["energy"].is_object());
}

#[test]
fn sweep_csv_has_hash_header_and_rows_in_order() {
    let s = Scratch::new("sweep");
    let cfg = s.file("c.cfg", SMALL);
    let out = ddpb(&["sweep", "--pqr", &hf(), "--config", &cfg, "--vary", "r_0", "--values", "2.5,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let hash = config_hash(&parse_config(SMALL).unwrap());
    assert_eq!(lines[0], format!("# config_hash={hash} vary=r_0"));
    assert_eq!(
        lines[1],
        "r_0,energy,coulomb,stress,osmotic,one_atom_energy,status,outer_iterations,dd_loops,fp_loops"
    );
    assert_eq!(lines.len(), 5);
    let firsts: Vec<&str> = lines[2..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(firsts, ["2.5", "1", "2"]);
    assert!(lines[2..].iter().all(|l| l.contains(",converged,")));
}

#[test]
fn single_value_sweep_matches_solve() {
    let cfg = parse_config(SMALL).unwrap();
    let atoms = one_atom(0.5);
    let rows = sweep(&cfg, &atoms, "r_0", &["2".to_string()], Execution::default()).unwrap();
    assert_eq!(rows.len(), 1);
    let direct = solve(&cfg, &atoms, Execution::default()).unwrap();
    let swept = rows[0].outcome.as_ref().unwrap();
    assert_eq!(swept.reported_energy().to_bits(), direct.reported_energy().to_bits());
    assert!(sweep(&cfg, &atoms, "r_0", &[], Execution::default()).is_err());
}

#[test]
fn zero_charge_converges_immediately() {
    let cfg = parse_config(SMALL).unwrap();
    let o = solve(&cfg, &one_atom(0.0), Execution::default()).unwrap();
    assert_eq!(o.status(), Status::Converged);
    assert_eq!(o.trace.records.len(), 1);
    assert_eq!(o.reported_energy(), 0.0);
}

#[test]
fn compare_columns_and_domain() {
    let cfg = parse_config(SMALL).unwrap();
    let zero = compare(&cfg, &one_atom(0.0), &[1.5, 3.0, 5.9], Execution::default()).unwrap();
    assert!(zero.iter().all(|g| g.var == 0.0));
    let csv = compare_csv(&cfg, &zero);
    assert_eq!(csv.lines().nth(1), Some("r,psi_npb,psi_lpb,var"));
    assert!(compare(&cfg, &one_atom(0.1), &[1.0], Execution::default()).is_err());
    assert!(compare(&cfg, &one_atom(0.1), &[7.0], Execution::default()).is_err());
}

#[test]
fn weaker_charge_has_smaller_model_gap() {
    let cfg = parse_config(SMALL).unwrap();
    let radii = [1.5, 2.5, 4.0, 5.9];
    let strong = compare(&cfg, &one_atom(1e-1), &radii, Execution::default()).unwrap();
    let weak = compare(&cfg, &one_atom(1e-4), &radii, Execution::default()).unwrap();
    for (s, w) in strong.iter().zip(&weak) {
        assert!(w.var < s.var, "r={}: {} vs {}", s.r, w.var, s.var);
    }
}

#[test]
fn rotation_endpoints_and_identity() {
    let cfg = parse_config(SMALL).unwrap();
    let atoms = ddpb_core::io::parse_pqr(&std::fs::read_to_string(hf()).unwrap()).unwrap();
    let exec = Execution::default();
    let single = rotate(&cfg, &atoms, 1, Plane::Xy, exec).unwrap();
    assert_eq!(single.len(), 1);
    let direct = solve(&cfg, &atoms, exec).unwrap().reported_energy();
    assert_eq!(single[0].1.outcome.as_ref().unwrap().reported_energy().to_bits(), direct.to_bits());
    let rows = rotate(&cfg, &atoms, 3, Plane::Xz, exec).unwrap();
    let e: Vec<f64> = rows.iter().map(|(_, r)| r.outcome.as_ref().unwrap().reported_energy()).collect();
    assert!((e[0] - e[2]).abs() <= 1e-10 * e[0].abs());
    assert!(rotate(&cfg, &atoms[..1], 3, Plane::Xy, exec).is_err());
    let csv = rotate_csv(&cfg, Plane::Xz, &rows);
    assert!(csv.lines().next().unwrap().ends_with("plane=xz"));
    assert!(csv.lines().nth(1).unwrap().starts_with("angle,energy,"));
}

#[test]
fn exit_code_contract() {
    assert_eq!(exit_code(Status::Converged), 0);
    assert_eq!(exit_code(Status::MaxIter), 2);
    assert_eq!(exit_code(Status::Oscillating), 3);
    assert_eq!(exit_code(Status::Diverged), 3);
    assert_eq!(worst_status([Status::Converged, Status::MaxIter]), Status::MaxIter);
    assert_eq!(worst_status([]), Status::Converged);
}
