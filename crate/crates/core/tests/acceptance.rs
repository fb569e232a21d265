//! The acceptance gate: ten criteria, each reported as one PASS or FAIL line.

use std::io::Write;
use std::time::{Duration, Instant};

use dlforge::dyer_lashof::big_relation::{check_aux_identity, check_relation, AUX_IDENTITIES};
use dlforge::dyer_lashof::juggling::{check_juggle, check_suspended_relation};
use dlforge::formal_groups::law::{X, Y};
use dlforge::formal_groups::{appendix_pipeline, FglConfig, FormalGroupLaw};
use dlforge::hopf_ring::{verify_hopf_chain, Identification};
use dlforge::models::dual_steenrod::DualSteenrod;
use dlforge::models::hmu::{check_dl_compatibility, HMu};
use dlforge::models::{map_p, DlModel};
use dlforge::verify::{run_suite, VerifyConfig};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, detail: impl Into<String>) -> Verdict {
    let d = detail.into();
    if ok {
        Ok(d)
    } else {
        Err(d)
    }
}

fn within(limit: Duration, start: Instant) -> Verdict {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, format!("{} ms (limit {} ms)", elapsed.as_millis(), limit.as_millis()))
}

fn suite_passes(name: &str, config: &VerifyConfig) -> Verdict {
    let r = run_suite(name, config).map_err(|e| e.to_string())?;
    let failed: Vec<&str> = r.checks.iter().filter(|c| c.status.label() != "PASS").map(|c| c.id.as_str()).collect();
    ensure(failed.is_empty(), format!("{name}: {} checks, failing {:?}", r.checks.len(), failed))
}

fn big_relation() -> Verdict {
    let start = Instant::now();
    let out = check_relation(None).map_err(|e| e.to_string())?;
    ensure(out.vanishes && out.degree == Some(30), format!("residual {}", out.residual))?;
    for i in 0..AUX_IDENTITIES.len() {
        let (ok, residual) = check_aux_identity(i).map_err(|e| e.to_string())?;
        ensure(ok, format!("identity {}: {residual}", i + 1))?;
    }
    within(Duration::from_secs(5), start)
}

fn en_level() -> Verdict {
    let out = check_relation(None).map_err(|e| e.to_string())?;
    let w = out.witness.ok_or("no application recorded")?;
    ensure(
        out.level == 12 && w.s == 20 && w.degree == 10,
        format!("E{} via Q{} on degree {}", out.level, w.s, w.degree),
    )
}

fn priddy_table() -> Verdict {
    let h = HMu::new(40);
    let q8 = h.priddy(8, 1).map_err(|e| e.to_string())?;
    let verbatim = h.parse("b5 + b1 b4 + b2 b3 + b1^2 b3 + b1 b2^2 + b1^3 b2 + b1^5").map_err(|e| e.to_string())?;
    ensure(q8 == verbatim, h.display(&q8))?;
    suite_passes("priddy", &VerifyConfig::default())
}

fn steinberger_table() -> Verdict {
    let start = Instant::now();
    let a = DualSteenrod::new(40);
    let q = a.apply_q(16, &a.conjugate(4).ok_or("no xibar4")?).map_err(|e| e.to_string())?;
    ensure(Some(q) == a.conjugate(5), "Q16 xibar4 = xibar5")?;
    suite_passes("steinberger", &VerifyConfig::default())?;
    within(Duration::from_secs(10), start)
}

fn model_compatibility() -> Verdict {
    let (h, a) = (HMu::new(40), DualSteenrod::new(40));
    let c = check_dl_compatibility(&h, &a, 14, 24).map_err(|e| e.to_string())?;
    ensure(c.failure.is_none(), format!("{:?}", c.failure))?;
    let route1 = map_p(&h, &a, &h.apply_q(4, &h.b(1)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let route2 = a.apply_q(2, &a.xi(1).ok_or("no xi1")?).map_err(|e| e.to_string())?.pow(2);
    ensure(route1 == route2, format!("{} pairs; p(Q4 b1) = {}", c.checked, a.display(&route1)))
}

fn juggling() -> Verdict {
    let j = check_juggle().map_err(|e| e.to_string())?;
    ensure(j.holds, format!("{} vs {}", j.mu_r, j.qbar_nu_plus_beta_alpha))?;
    let (ok, shown) = check_suspended_relation().map_err(|e| e.to_string())?;
    ensure(ok, shown)
}

fn appendix() -> Verdict {
    let start = Instant::now();
    let law = FormalGroupLaw::from_config(&FglConfig::preset("appendix-z-v3").map_err(|e| e.to_string())?, 12)
        .map_err(|e| e.to_string())?;
    let r = appendix_pipeline(&law, 2).map_err(|e| e.to_string())?;
    let g3 = law.isogeny_g().map_err(|e| e.to_string())?.coefficient_of(X, 3);
    let k_inv = r.k_inverse.truncate(&r.k_inverse.truncation().clone().with_var(Y, 4));
    let values = [
        (law.bracket2_series().map_err(|e| e.to_string())?.to_string(), "2 - 127 v3 a^7"),
        (g3.to_string(), "-14 v3 a^6"),
        (k_inv.to_string(), "y - y^2 + 2 y^3 + 4 v3 y^2 a^7 - 2 v3 y^3 a^7"),
        (r.f_n.to_string(), "6 - 6 v3 a^7"),
        (r.h_n.to_string(), "3"),
        (r.raw.to_string(), "375 v3 a^3"),
        (r.reduced.to_string(), "v3 a^3"),
    ];
    for (got, want) in &values {
        ensure(got == want, format!("{got} != {want}"))?;
    }
    within(Duration::from_secs(1), start)
}

fn hopf_chain() -> Verdict {
    let k5 = verify_hopf_chain(5, &Identification::v3_to_x7(), 12).map_err(|e| e.to_string())?;
    let k4 = verify_hopf_chain(4, &Identification::v3_to_x7(), 12).map_err(|e| e.to_string())?;
    ensure(
        k5.endpoint_is("sigma x7") && k4.endpoint_is("0"),
        format!("k = 5: {:?}; k = 4: {:?}", k5.endpoint, k4.endpoint),
    )
}

fn indecomposables() -> Verdict {
    let a = DualSteenrod::new(40);
    let in_degree = |d: u32| a.ring().generators().iter().filter(|g| g.degree == d).count();
    let low: usize = [5, 11, 13, 14].iter().map(|&d| in_degree(d)).sum();
    ensure(low == 0 && in_degree(31) == 1, format!("{low} in degrees 5/11/13/14, {} in degree 31", in_degree(31)))?;
    suite_passes("indeterminacy", &VerifyConfig::default())
}

fn properties_and_full_run() -> Verdict {
    let start = Instant::now();
    let config = VerifyConfig::default();
    ensure(config.corpus >= 500, format!("corpus {}", config.corpus))?;
    suite_passes("properties", &config)?;
    suite_passes("all", &config)?;
    within(Duration::from_secs(60), start)
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 big relation", big_relation),
        ("2 E-level bound", en_level),
        ("3 Priddy table", priddy_table),
        ("4 Steinberger table", steinberger_table),
        ("5 model compatibility", model_compatibility),
        ("6 juggling identity", juggling),
        ("7 appendix pipeline", appendix),
        ("8 Hopf chain", hopf_chain),
        ("9 indecomposability scans", indecomposables),
        ("10 property suites", properties_and_full_run),
    ];
    // Written to the process stdout directly so the verdicts show without --nocapture.
    let mut out = std::io::stdout().lock();
    out.write_all(b"\n").unwrap();
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let line = match run() {
            Ok(detail) => format!("PASS {name}: {detail}\n"),
            Err(detail) => {
                failed.push(name);
                format!("FAIL {name}: {detail}\n")
            }
        };
        out.write_all(line.as_bytes()).unwrap();
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
