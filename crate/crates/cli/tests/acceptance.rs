//! Acceptance suite: one PASS/FAIL line per criterion.

use std::path::Path;
use std::process::Command;

use hecke_cell_lab::{run_suite, Report, RunConfig, Suite, Verdict};
use hecke_core::root_data::{RootDatum, RootType};
use hecke_core::scalar::int;
use serde_json::Value;

const TYPES: [RootType; 3] = [RootType::A1, RootType::A2, RootType::B2];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(suite: Suite, t: RootType, f: impl FnOnce(&mut RunConfig)) -> Report {
    let mut cfg = RunConfig::new(suite, t);
    f(&mut cfg);
    run_suite(&cfg).unwrap_or_else(|e| panic!("{} {t}: {e}", suite.name()))
}

fn all_pass<'a>(recs: impl IntoIterator<Item = &'a hecke_cell_lab::Record>) -> (usize, usize) {
    let mut n = 0;
    let mut bad = 0;
    for r in recs {
        n += 1;
        if r.verdict != Verdict::Pass {
            bad += 1;
        }
    }
    (n, bad)
}

fn formula_suite() -> Outcome {
    let anchors = [
        "spherical-sandwich",
        "cprime-theta-minus-rho-c",
        "cprime-theta-rho-c",
        "c-theta-minus-rho-cprime",
        "c-theta-rho-cprime",
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for t in TYPES {
        let rep = run(Suite::Formulas, t, |_| {});
        let rank = RootDatum::build(t).rank;
        let weights = rep.records_with("spherical-sandwich").next().map(|r| r.inputs["weights"].clone());
        ok &= weights == Some(Value::from(5usize.pow(rank as u32)));
        for a in anchors {
            let (n, bad) = all_pass(rep.records_with(a));
            ok &= n == 1 && bad == 0;
        }
        notes.push(format!("{t} {}ms", rep.timing_ms));
    }
    outcome(ok, notes.join(", "))
}

/// `Σ_w q^{l(w)} = Π_i [d_i]_q` with the degrees of the basic invariants.
fn poincare() -> Outcome {
    fn degrees(t: RootType) -> &'static [usize] {
        match t {
            RootType::A1 => &[2],
            RootType::A2 => &[2, 3],
            RootType::A3 => &[2, 3, 4],
            RootType::B2 => &[2, 4],
            RootType::G2 => &[2, 6],
        }
    }
    let mut ok = true;
    for t in RootType::ALL {
        let d = RootDatum::build(t);
        let mut expected = vec![1i64];
        for &deg in degrees(t) {
            let mut next = vec![0i64; expected.len() + deg - 1];
            for (i, c) in expected.iter().enumerate() {
                for j in 0..deg {
                    next[i + j] += c;
                }
            }
            expected = next;
        }
        let mut counted = vec![0i64; d.nu + 1];
        for w in 0..d.order() {
            counted[d.inversion_count(w)] += 1;
        }
        ok &= counted == expected && d.poincare_polynomial() == expected && d.poincare_product_identity_holds();
    }
    outcome(ok, format!("{} types", RootType::ALL.len()))
}

fn factorization() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (t, len) in [(RootType::A1, 10), (RootType::A2, 6)] {
        let rep = run(Suite::Prop12, t, |c| c.max_len = Some(len));
        for a in ["y0-factorization", "canonical-factorization"] {
            let (n, bad) = all_pass(rep.records_with(a));
            ok &= n == 1 && bad == 0;
        }
        let size = &rep.records_with("y0-factorization").next().unwrap().values["size"];
        notes.push(format!("{t} len≤{len} |Y0|={size}"));
    }
    outcome(ok, notes.join(", "))
}

fn kernel() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (t, len) in [(RootType::A1, 8), (RootType::A2, 6)] {
        let rep = run(Suite::Lemma22, t, |c| c.max_len = Some(len));
        let (n, bad) = all_pass(rep.records_with("cell-module-kernel"));
        ok &= n == 2 && bad == 0;
        for r in rep.records_with("cell-module-kernel") {
            ok &= r.values["outside_y0"].as_u64().unwrap_or(0) > 0;
        }
        notes.push(format!("{t} len≤{len}"));
    }
    outcome(ok, notes.join(", "))
}

fn ideal_vanishing(reports: &[Report]) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for rep in reports {
        let (n, bad) = all_pass(rep.records_with("ideal-vanishing-equivalence"));
        let zero = rep.records_with("ideal-vanishing-equivalence").filter(|r| r.values["dims"]["c_c"] == 0).count();
        ok &= n >= 20 && bad == 0;
        notes.push(format!("{} {n} points ({zero} vanishing)", rep.body.root_type));
    }
    outcome(ok, notes.join(", "))
}

fn principal_points() -> Outcome {
    let cases = [(RootType::A1, 4, 1), (RootType::B2, 9, 1), (RootType::A1, -1, 0), (RootType::A2, -1, 0)];
    let mut ok = true;
    let mut notes = Vec::new();
    for (t, q0, dim) in cases {
        let rep = run(Suite::Thm35, t, |c| c.q = Some(int(q0)));
        let r = rep.records_with("principal-ideal-dimension").next().unwrap();
        let v = &r.values;
        let mut good = r.verdict == Verdict::Pass
            && v["dim_c_cprime"] == dim
            && v["dim_cprime_c"] == dim
            && v["two_sided"] == true;
        if dim == 1 {
            let pair = |a: &str, b: &str| Value::from(vec![a.to_string(), b.to_string()]);
            good &= v["xi_eigenvalues"] == pair(&q0.to_string(), "-1")
                && v["eta_eigenvalues"] == pair("-1", &q0.to_string());
        }
        ok &= good;
        notes.push(format!("{t} q0={q0} dim={}", v["dim_c_cprime"]));
    }
    outcome(ok, notes.join(", "))
}

fn irreducible_modules() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for t in TYPES {
        let rep = run(Suite::Thm41, t, |_| {});
        let (n, bad) = all_pass(rep.records_with("irreducible-module"));
        let nonzero = rep.records_with("irreducible-module").filter(|r| r.values["generator_nonzero"] == true).count();
        ok &= n >= 20 && bad == 0 && nonzero > 0;
        if t == RootType::A1 {
            match rep.records_with("example-module").next() {
                Some(r) => ok &= r.verdict == Verdict::Pass && r.values["dim_lt"] == 2,
                None => ok = false,
            }
        }
        notes.push(format!("{t} {nonzero}/{n} nonzero"));
    }
    outcome(ok, notes.join(", "))
}

fn steinberg_reduction(reports: &[Report]) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for rep in reports {
        let (basis, bad_basis) = all_pass(rep.records_with("steinberg-basis"));
        let (paths, bad_paths) = all_pass(rep.records_with("reduction-paths"));
        let cov = &rep.records_with("sample-coverage").next().unwrap().values;
        let non_regular = cov["non_regular"].as_u64().unwrap_or(0) as usize;
        let order = RootDatum::build(rep.body.root_type.parse().unwrap()).order();
        let dims_ok = rep.records_with("steinberg-basis").all(|r| r.values["checks"]["theta_dim"] == order);
        ok &= bad_basis == 0 && bad_paths == 0 && dims_ok && non_regular >= 2 && paths + non_regular == basis;
        notes.push(format!("{} {paths} regular, {non_regular} non-regular", rep.body.root_type));
    }
    outcome(ok, notes.join(", "))
}

fn presentation() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for t in TYPES {
        let rep = run(Suite::Presentation, t, |c| c.max_len = Some(6));
        for a in ["presentation-round-trip", "multiplication-engines"] {
            let (n, bad) = all_pass(rep.records_with(a));
            ok &= n == 1 && bad == 0;
        }
        let count = &rep.records_with("presentation-round-trip").next().unwrap().inputs["elements"];
        ok &= count.as_u64().unwrap_or(0) >= 100;
        notes.push(format!("{t} {count} elements"));
    }
    outcome(ok, notes.join(", "))
}

/// Report-only: the runs must complete and document the q0 = 1 case.
fn lie_reports() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for t in [RootType::A1, RootType::A2] {
        let rep = run(Suite::LieCheck, t, |_| {});
        let recs: Vec<_> = rep.records_with("lie-criterion").collect();
        ok &= !recs.is_empty() && recs.iter().all(|r| r.verdict == Verdict::ReportOnly);
        ok &= recs.iter().any(|r| r.inputs["q0_is_one"] == true);
        let listed: Vec<_> = recs.iter().filter(|r| r.inputs["q0_is_one"] == false).collect();
        let agree = listed.iter().filter(|r| r.values["agree"] == true).count();
        notes.push(format!("{t} agree {agree}/{}", listed.len()));
    }
    outcome(ok, notes.join(", "))
}

fn cli_body(args: &[&str], cache: Option<&Path>) -> (String, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hecke-cell-lab"));
    cmd.args(args).env_remove("HECKE_CELL_LAB_CACHE");
    if let Some(dir) = cache {
        cmd.arg("--cache-dir").arg(dir);
    }
    let out = cmd.output().expect("binary runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let full: Value = serde_json::from_slice(&out.stdout).expect("json report");
    (serde_json::to_string(&full["body"]).unwrap(), full["cache"].clone())
}

fn determinism() -> Outcome {
    let args = ["verify", "thm34", "--type", "A1", "--seed", "7", "--samples", "20"];
    let (a, _) = cli_body(&args, None);
    let (b, _) = cli_body(&args, None);
    let identical = a == b;

    let dir = tempfile::tempdir().unwrap();
    let kl = ["verify", "lemma22", "--type", "A2", "--max-len", "5"];
    let (plain, _) = cli_body(&kl, None);
    let (cold, cold_stats) = cli_body(&kl, Some(dir.path()));
    let (warm, warm_stats) = cli_body(&kl, Some(dir.path()));
    let stored = cold_stats["stored_records"].as_u64().unwrap_or(0);
    let loaded = warm_stats["loaded_records"].as_u64().unwrap_or(0);

    let file = dir.path().join("kl-A2-len5.bin");
    let mut bytes = std::fs::read(&file).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0x10;
    std::fs::write(&file, bytes).unwrap();
    let (flipped, flipped_stats) = cli_body(&kl, Some(dir.path()));
    let detected =
        flipped_stats["corrupt_records"].as_u64().unwrap_or(0) + flipped_stats["rejected_files"].as_u64().unwrap_or(0);

    let ok =
        identical && plain == cold && cold == warm && warm == flipped && stored > 0 && loaded == stored && detected > 0;
    outcome(
        ok,
        format!("repeat identical={identical}, cache stored={stored} loaded={loaded}, flipped bit detected={detected}"),
    )
}

fn main() {
    // Sampled-point reports, shared by two criteria.
    let sampled: Vec<Report> = TYPES.iter().map(|&t| run(Suite::Thm34, t, |_| {})).collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("formula suite", Box::new(formula_suite)),
        ("Poincaré identity", Box::new(poincare)),
        ("canonical factorization", Box::new(factorization)),
        ("cell-module kernel", Box::new(kernel)),
        ("ideal vanishing", Box::new(|| ideal_vanishing(&sampled))),
        ("principal points", Box::new(principal_points)),
        ("irreducible modules", Box::new(irreducible_modules)),
        ("Steinberg reduction", Box::new(|| steinberg_reduction(&sampled))),
        ("presentation cross-check", Box::new(presentation)),
        ("Lie-criterion reports", Box::new(lie_reports)),
        ("determinism and cache", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2}: {name} [{}]", i + 1, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
