use std::process::{Command, Output};

use sepstat::formats;
use sepstat_core::gf::vertical_sep_gf;

fn sepstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepstat"))
        .args(args)
        .env_remove("SEPSTAT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn report_examples() {
    let o = sepstat(&["report", "132465879", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertical"], serde_json::json!([2, 3, 6, 7]));
    assert_eq!(v["horizontal"], serde_json::json!([2, 3, 5, 8]));

    let o = sepstat(&["report", "1"]);
    assert!(stdout(&o).contains("sep_count: 0"));
    assert_eq!(code(&sepstat(&["report", "1,1,2"])), 2);
    assert_eq!(code(&sepstat(&["report", "12x"])), 2);
}

#[test]
fn dist_examples() {
    assert_eq!(stdout(&sepstat(&["dist", "3", "--format", "csv"])), "n,m,count\n3,0,2\n3,1,4\n");
    assert_eq!(stdout(&sepstat(&["dist", "0", "--format", "csv"])), "n,m,count\n0,0,1\n");
    assert_eq!(code(&sepstat(&["dist", "11"])), 2);
    assert_eq!(code(&sepstat(&["dist", "3", "--kind", "sideways"])), 2);
}

#[test]
fn cap_from_environment() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_sepstat"))
            .args(["dist", "4", "--format", "csv"])
            .env("SEPSTAT_MAX_N", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("3")), 2);
    assert_eq!(code(&run("4")), 0);
    assert_eq!(code(&run("lots")), 2);
}

#[test]
fn gf_examples() {
    let h = stdout(&sepstat(&["gf", "h", "--order", "3", "--format", "csv"]));
    assert!(h.contains("3,0,2\n") && h.contains("3,1,4\n"));
    let a = stdout(&sepstat(&["gf", "A", "--order", "3", "--format", "csv"]));
    assert!(a.ends_with("3,0,6\n3,1,8\n3,2,2\n"), "{a}");
    assert_eq!(stdout(&sepstat(&["gf", "--order", "0", "--format", "csv"])), "n,m,count\n0,0,1\n");
    assert_eq!(code(&sepstat(&["gf", "--order", "65"])), 2);

    let json = stdout(&sepstat(&["gf", "h", "--order", "10", "--format", "json"]));
    let (name, series) = formats::series_from_json(&json).unwrap();
    assert_eq!(name, "h");
    assert_eq!(series, vertical_sep_gf(10));
}

#[test]
fn expect_examples() {
    assert!(stdout(&sepstat(&["expect", "4", "--kind", "any"])).starts_with("11/6\n"));
    assert!(stdout(&sepstat(&["expect", "3", "--kind", "both", "--mode", "both"]))
        .starts_with("0 = 0 MATCH\n"));
    let big = stdout(&sepstat(&["expect", "1000000", "--kind", "vertical"]));
    assert!(big.starts_with("499999/250000\n") && big.contains("approx"));
    assert_eq!(code(&sepstat(&["expect", "11", "--mode", "empirical"])), 2);
    assert_eq!(code(&sepstat(&["expect", "5", "--kind", "bonds"])), 2);

    let o = sepstat(&["expect", "7", "--kind", "any", "--mode", "both", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["match"], true);
    assert_eq!(v["formula"], v["empirical"]);
}

#[test]
fn maxsep_and_verify() {
    let o = sepstat(&["maxsep", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["perms"], serde_json::json!([[2, 4, 1, 3], [3, 1, 4, 2]]));
    let o = sepstat(&["maxsep", "2", "--verify"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("count: 8\nexhaustive check: MATCH"));

    assert_eq!(code(&sepstat(&["verify", "6"])), 0);
    let o = sepstat(&["verify", "8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(code(&sepstat(&["verify", "11"])), 2);
}

#[test]
fn csv_only_for_tables() {
    assert_eq!(code(&sepstat(&["report", "123", "--format", "csv"])), 2);
    assert_eq!(code(&sepstat(&["verify", "3", "--format", "csv"])), 2);
}

#[test]
fn output_is_deterministic() {
    let reference = sepstat(&["dist", "8", "--kind", "any", "--format", "json", "--threads", "1"]);
    for t in ["2", "5", "16"] {
        let o = sepstat(&["dist", "8", "--kind", "any", "--format", "json", "--threads", t]);
        assert_eq!(o.stdout, reference.stdout, "{t} threads");
    }
    let a = sepstat(&["verify", "7", "--format", "json", "--threads", "1"]);
    let b = sepstat(&["verify", "7", "--format", "json", "--threads", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("sepstat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dist.csv");
    let o = sepstat(&["dist", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rows = formats::rows_from_csv(&text).unwrap();
    let total: u32 = rows.iter().map(|(_, _, c)| u32::try_from(c).unwrap()).sum();
    assert_eq!(total, 24);
    std::fs::remove_dir_all(&dir).unwrap();
}
