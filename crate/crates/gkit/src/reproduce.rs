//! The `gkit reproduce` suite: every headline computation the crate is built
//! around, re-run from scratch and compared against its frozen value.
//!
//! Checks are pure and independent; the runner executes them (optionally on
//! a worker pool) and reports one line per claim.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{limit_constant, mu_lower_chain};
use crate::binomial::{expand, gotzmann_growth, green_bound, macaulay_bound};
use crate::delta::{self, Provenance};
use crate::elimination::{gorf_test, gors_test, replay_certificate, Verdict};
use crate::perazzo::{self, PerazzoParams};
use crate::sequences::HilbertCandidate;
use crate::{apolarity, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub detail: String,
}

struct Check {
    id: &'static str,
    description: &'static str,
    run: fn() -> Result<std::result::Result<String, String>>,
}

type CheckOutcome = Result<std::result::Result<String, String>>;

fn ok(detail: impl Into<String>) -> CheckOutcome {
    Ok(Ok(detail.into()))
}

fn fail(detail: impl Into<String>) -> CheckOutcome {
    Ok(Err(detail.into()))
}

fn expect_eq<T: PartialEq + std::fmt::Display>(label: &str, got: T, want: T) -> CheckOutcome {
    if got == want {
        ok(format!("{label} = {got}"))
    } else {
        fail(format!("{label}: got {got}, want {want}"))
    }
}

fn shift_chain(
    r: u64,
    degree: u32,
    expect_g: u64,
    v: u64,
    shift: u32,
    expect_w: u64,
) -> CheckOutcome {
    let g = green_bound(r, degree)?;
    if g != BigInt::from(expect_g) {
        return fail(format!("(({r})_({degree}))^-1_0: got {g}, want {expect_g}"));
    }
    let w = gotzmann_growth(v, 2, shift)?;
    if w != BigInt::from(expect_w) {
        return fail(format!(
            "(({v})_(2))^{shift}_{shift}: got {w}, want {expect_w}"
        ));
    }
    ok(format!(
        "(({r})_({degree}))^-1_0 = {expect_g}, (({v})_(2))^{shift}_{shift} = {expect_w}"
    ))
}

fn closed_form_values(socle: u32, r: u64, h: u64, want_g: u64, want_w: u64) -> CheckOutcome {
    let rb = BigInt::from(r);
    let hb = BigInt::from(h);
    let cert = if socle == 4 {
        gors_test(&rb, &hb)?
    } else {
        gorf_test(&rb, &hb)?
    };
    if cert.verdict != Verdict::Eliminated {
        return fail(format!(
            "({r},{h}) expected elimination, got {:?}",
            cert.verdict
        ));
    }
    if cert.steps[0].values[2] != want_g.to_string() {
        return fail(format!(
            "green bound at r={r}: got {}, want {want_g}",
            cert.steps[0].values[2]
        ));
    }
    if cert.steps[2].values[1] != want_w.to_string() {
        return fail(format!(
            "growth at r={r}: got {}, want {want_w}",
            cert.steps[2].values[1]
        ));
    }
    replay_certificate(&cert)?;
    ok(format!(
        "({r},{h}) eliminated: {want_w} < {want_g}; certificate replays"
    ))
}

fn extremal_section_diagram(
    candidate: [u64; 6],
    want_top_green: u64,
    want_mid_green: u64,
    middle: [u64; 5],
    line: [u64; 5],
) -> CheckOutcome {
    let h: Vec<u64> = candidate.to_vec();
    let g4 = green_bound(h[4], 4)?;
    if g4 != BigInt::from(want_top_green) {
        return fail(format!(
            "green({},4): got {g4}, want {want_top_green}",
            h[4]
        ));
    }
    let g3 = green_bound(h[3], 3)?;
    if g3 != BigInt::from(want_mid_green) {
        return fail(format!(
            "green({},3): got {g3}, want {want_mid_green}",
            h[3]
        ));
    }
    // Extremal middle: M_1 = H_4 - green, M_2 = H_3 - green; symmetric ends.
    let m1 = h[4] - want_top_green;
    let m2 = h[3] - want_mid_green;
    if [1, m1, m2, m1, 1] != middle {
        return fail(format!("extremal middle mismatch: (1,{m1},{m2},{m1},1)"));
    }
    // Quotient line B_k = H_k - M_(k-1).
    let b = [1, h[1] - 1, h[2] - m1, h[3] - m2, h[4] - m1];
    if b != line {
        return fail(format!("quotient line mismatch: {b:?}"));
    }
    let cert = gors_test(&BigInt::from(m1), &BigInt::from(m2))?;
    if cert.verdict != Verdict::Eliminated {
        return fail(format!(
            "extremal middle (1,{m1},{m2},{m1},1) not eliminated"
        ));
    }
    ok(format!(
        "diagram (1,{m1},{m2},{m1},1) over {line:?}; middle eliminated"
    ))
}

fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "expand-24",
            description: "24 in degree 3 is C(6,3)+C(3,2)+C(1,1) and shifts to 11",
            run: || {
                let e = expand(24u64, 3)?;
                if e.to_string() != "C(6,3)+C(3,2)+C(1,1)" {
                    return fail(format!("expansion printed as {e}"));
                }
                expect_eq("(24_(3))^-1_0", e.shift(-1, 0), BigInt::from(11))
            },
        },
        Check {
            id: "expand-40",
            description: "40 in degree 3 is C(7,3)+C(3,2)+C(2,1) and shifts to 22",
            run: || {
                let e = expand(40u64, 3)?;
                if e.to_string() != "C(7,3)+C(3,2)+C(2,1)" {
                    return fail(format!("expansion printed as {e}"));
                }
                expect_eq("(40_(3))^-1_0", e.shift(-1, 0), BigInt::from(22))
            },
        },
        Check {
            id: "expand-62",
            description: "62 in degree 3 is C(8,3)+C(4,2) and shifts to 38",
            run: || {
                let e = expand(62u64, 3)?;
                if e.to_string() != "C(8,3)+C(4,2)" {
                    return fail(format!("expansion printed as {e}"));
                }
                expect_eq("(62_(3))^-1_0", e.shift(-1, 0), BigInt::from(38))
            },
        },
        Check {
            id: "growth-degree4",
            description: "socle-4 growth chain: 25->12->11, 24->11->10, 40->22->21, 62->38->36",
            run: || {
                for (r, g, v, w) in [(25, 12, 7, 11), (24, 11, 6, 10), (40, 22, 11, 21), (62, 38, 16, 36)]
                {
                    let got_g = green_bound(r as u64, 3)?;
                    let got_w = macaulay_bound(v as u64, 2)?;
                    if got_g != BigInt::from(g as u64) || got_w != BigInt::from(w as u64) {
                        return fail(format!("r={r}: got ({got_g},{got_w}), want ({g},{w})"));
                    }
                }
                ok("all four worked chains match")
            },
        },
        Check {
            id: "growth-degree5",
            description: "socle-5 growth chains: 39->16/15, 75->36/35, 132->71/70, 217->128/127, 338->212/211",
            run: || {
                for (r, g, v, w) in [
                    (39u64, 16u64, 6u64, 15u64),
                    (75, 36, 10, 35),
                    (132, 71, 15, 70),
                    (217, 128, 22, 127),
                    (338, 212, 29, 211),
                ] {
                    if let Ok(Err(e)) = shift_chain(r, 4, g, v, 2, w) {
                        return fail(e);
                    }
                }
                ok("all five worked chains match")
            },
        },
        Check {
            id: "perazzo-hf-3-4",
            description: "full Perazzo type 3, socle 4 has Hilbert function (1,13,12,13,1)",
            run: || {
                let h = perazzo::hilbert_function(PerazzoParams::new(3, 4)?);
                expect_eq("hf", h.to_string(), "1,13,12,13,1".into())
            },
        },
        Check {
            id: "perazzo-hf-3-5",
            description: "full Perazzo type 3, socle 5 has Hilbert function (1,18,16,16,18,1)",
            run: || {
                let h = perazzo::hilbert_function(PerazzoParams::new(3, 5)?);
                expect_eq("hf", h.to_string(), "1,18,16,16,18,1".into())
            },
        },
        Check {
            id: "perazzo-hf-4-5",
            description: "full Perazzo type 4, socle 5 has Hilbert function (1,39,30,30,39,1)",
            run: || {
                let h = perazzo::hilbert_function(PerazzoParams::new(4, 5)?);
                expect_eq("hf", h.to_string(), "1,39,30,30,39,1".into())
            },
        },
        Check {
            id: "perazzo-hf-6-4",
            description: "full Perazzo type 6, socle 4 has Hilbert function (1,62,42,62,1)",
            run: || {
                let h = perazzo::hilbert_function(PerazzoParams::new(6, 4)?);
                expect_eq("hf", h.to_string(), "1,62,42,62,1".into())
            },
        },
        Check {
            id: "perazzo-codim",
            description: "full Perazzo codimensions: (3,4)->13, (4,5)->39, (10,5)->725",
            run: || {
                for (m, d, want) in [(3u32, 4u32, 13u64), (4, 5, 39), (10, 5, 725)] {
                    let c = perazzo::codimension(PerazzoParams::new(m, d)?);
                    if c != BigInt::from(want) {
                        return fail(format!("codim({m},{d}) = {c}, want {want}"));
                    }
                }
                ok("codimensions match")
            },
        },
        Check {
            id: "perazzo-nonunimodal",
            description: "Stanley-type vector (1,13,12,13,1) is a totally non-unimodal Gorenstein shape",
            run: || {
                let h = HilbertCandidate::from_u64(&[1, 13, 12, 13, 1]);
                if !h.is_gorenstein_shape() {
                    return fail("shape test failed");
                }
                if !perazzo::is_totally_nonunimodal(&h) {
                    return fail("non-unimodality test failed");
                }
                ok("shape and strict decrease both hold")
            },
        },
        Check {
            id: "perazzo-extend",
            description: "power-sum extension by 7 turns (1,13,12,13,1) into (1,20,19,20,1)",
            run: || {
                let h = perazzo::extend_with_powers(PerazzoParams::new(3, 4)?, 7);
                if h.to_string() != "1,20,19,20,1" {
                    return fail(format!("extension gave {h}"));
                }
                if !perazzo::is_totally_nonunimodal(&h) {
                    return fail("extension lost total non-unimodality");
                }
                ok("extension matches and stays totally non-unimodal")
            },
        },
        Check {
            id: "gors-eliminations",
            description: "socle-4 closed form eliminates (24,19), (25,20), (40,29), (62,40)",
            run: || {
                for (r, h, g, w) in [
                    (24u64, 19u64, 11u64, 10u64),
                    (25, 20, 12, 11),
                    (40, 29, 22, 21),
                    (62, 40, 38, 36),
                ] {
                    if let Ok(Err(e)) = closed_form_values(4, r, h, g, w) {
                        return fail(e);
                    }
                }
                ok("all four eliminations match the worked values")
            },
        },
        Check {
            id: "gors-pass",
            description: "socle-4 closed form passes the realizable (13,12)",
            run: || {
                let cert = gors_test(&BigInt::from(13), &BigInt::from(12))?;
                expect_eq("verdict", format!("{:?}", cert.verdict), "Pass".into())
            },
        },
        Check {
            id: "gorf-eliminations",
            description: "socle-5 closed form eliminates the five worked type-4..8 candidates",
            run: || {
                for (r, h, g, w) in [
                    (39u64, 29u64, 16u64, 15u64),
                    (75, 49, 36, 35),
                    (132, 76, 71, 70),
                    (217, 111, 128, 127),
                    (338, 155, 212, 211),
                ] {
                    if let Ok(Err(e)) = closed_form_values(5, r, h, g, w) {
                        return fail(e);
                    }
                }
                ok("all five eliminations match the worked values")
            },
        },
        Check {
            id: "gorf-pass",
            description: "socle-5 closed form passes the realizable (18,16)",
            run: || {
                let cert = gorf_test(&BigInt::from(18), &BigInt::from(16))?;
                expect_eq("verdict", format!("{:?}", cert.verdict), "Pass".into())
            },
        },
        Check {
            id: "diagram-type9",
            description: "extremal section diagram for (1,504,209,209,504,1): middle (1,171,54,171,1) eliminated",
            run: || {
                extremal_section_diagram(
                    [1, 504, 209, 209, 504, 1],
                    333,
                    155,
                    [1, 171, 54, 171, 1],
                    [1, 503, 38, 155, 333],
                )
            },
        },
        Check {
            id: "diagram-type10",
            description: "extremal section diagram for (1,725,274,274,725,1): middle (1,226,65,226,1) eliminated",
            run: || {
                extremal_section_diagram(
                    [1, 725, 274, 274, 725, 1],
                    499,
                    209,
                    [1, 226, 65, 226, 1],
                    [1, 724, 48, 209, 499],
                )
            },
        },
        Check {
            id: "apolarity-3-4",
            description: "annihilator Hilbert function of the type-3 socle-4 polynomial is (1,13,12,13,1)",
            run: || {
                let f = perazzo::full_polynomial(PerazzoParams::new(3, 4)?)?;
                let h = apolarity::ann_hilbert_function(&f)?;
                expect_eq("hf", h.to_string(), "1,13,12,13,1".into())
            },
        },
        Check {
            id: "apolarity-3-5",
            description: "annihilator Hilbert function of the type-3 socle-5 polynomial is (1,18,16,16,18,1)",
            run: || {
                let f = perazzo::full_polynomial(PerazzoParams::new(3, 5)?)?;
                let h = apolarity::ann_hilbert_function(&f)?;
                expect_eq("hf", h.to_string(), "1,18,16,16,18,1".into())
            },
        },
        Check {
            id: "apolarity-bigraded",
            description: "bigraded table of the type-3 socle-4 polynomial: degree 2 splits as 6 + 6",
            run: || {
                let f = perazzo::full_polynomial(PerazzoParams::new(3, 4)?)?;
                let table = apolarity::bigraded_hilbert(&f, (10, 3))?;
                let a02 = table[&(0, 2)];
                let a11 = table[&(1, 1)];
                if (a02, a11) != (6, 6) {
                    return fail(format!("split gave {a02} + {a11}"));
                }
                ok("dim A_(0,2) = 6 and dim A_(1,1) = 6")
            },
        },
        Check {
            id: "delta-table-4",
            description: "socle-4 ledger: 0 thru r=12, 1 thru 19, 2 at 20, [2,4] for 21..23, 4 for 24..27, 10 at 40, [20,21] at 62",
            run: || {
                let rows = delta::ledger_range(4, 1, 62)?;
                for row in &rows {
                    let expected: Option<(u64, u64)> = match row.r {
                        1..=12 => Some((0, 0)),
                        13..=19 => Some((1, 1)),
                        20 => Some((2, 2)),
                        21..=23 => Some((2, 4)),
                        24..=27 => Some((4, 4)),
                        40 => Some((10, 10)),
                        62 => Some((20, 21)),
                        _ => None,
                    };
                    if let Some((lo, hi)) = expected {
                        if (row.lower, row.upper) != (lo, Some(hi)) {
                            return fail(format!(
                                "r={}: got [{},{:?}], want [{lo},{hi}]",
                                row.r, row.lower, row.upper
                            ));
                        }
                    }
                }
                ok("all tabled socle-4 values reproduce")
            },
        },
        Check {
            id: "delta-table-5",
            description: "socle-5 ledger: 0 thru 16, 1 at 17, 2 for 18..25, and the exact type-3..10 values",
            run: || {
                let rows = delta::ledger_range(5, 1, 25)?;
                for row in &rows {
                    let expected: (u64, u64) = match row.r {
                        1..=16 => (0, 0),
                        17 => (1, 1),
                        _ => (2, 2),
                    };
                    if (row.lower, row.upper) != (expected.0, Some(expected.1)) {
                        return fail(format!(
                            "r={}: got [{},{:?}], want {expected:?}",
                            row.r, row.lower, row.upper
                        ));
                    }
                }
                for m in 3..=10u32 {
                    let r = delta::perazzo_codimension(m, 5)?;
                    let want = delta::perazzo_lower(m, 5)?;
                    let rec = delta::derive_bounds(r, 5)?;
                    if (rec.lower, rec.upper) != (want, Some(want)) {
                        return fail(format!(
                            "type {m} (r={r}): got [{},{:?}], want exact {want}",
                            rec.lower, rec.upper
                        ));
                    }
                }
                ok("socle-5 table and the eight exact type values reproduce")
            },
        },
        Check {
            id: "delta-perazzo-lower",
            description: "existence lower bounds: 4 at type 4, 10 at type 5 (socle 4); 2,9,...,450 at types 3..10 (socle 5)",
            run: || {
                for (m, d, want) in [(4u32, 4u32, 4u64), (5, 4, 10), (6, 4, 20)] {
                    if delta::perazzo_lower(m, d)? != want {
                        return fail(format!("lower({m},{d}) != {want}"));
                    }
                }
                let socle5: [u64; 8] = [2, 9, 25, 55, 105, 182, 294, 450];
                for (i, want) in socle5.into_iter().enumerate() {
                    let m = i as u32 + 3;
                    if delta::perazzo_lower(m, 5)? != want {
                        return fail(format!("lower({m},5) != {want}"));
                    }
                }
                ok("all existence lower bounds match")
            },
        },
        Check {
            id: "delta-provenance",
            description: "ledger separates recomputed bounds from cited facts",
            run: || {
                let rec = delta::derive_bounds(24, 4)?;
                if !rec.provenance.contains(&Provenance::PerazzoExistence)
                    || !rec.provenance.contains(&Provenance::EliminationLemma)
                {
                    return fail(format!("r=24 provenance: {:?}", rec.provenance));
                }
                let rec = delta::derive_bounds(26, 4)?;
                if !rec
                    .provenance
                    .iter()
                    .any(|p| matches!(p, Provenance::CitedFact(_)))
                {
                    return fail(format!("r=26 provenance: {:?}", rec.provenance));
                }
                ok("recomputed and cited provenance both present where expected")
            },
        },
        Check {
            id: "mu-chain",
            description: "lower-bound chain starts at the codimension and respects its binomial floor",
            run: || {
                let chain = mu_lower_chain(4, 3)?;
                if chain.entries[0].value != BigInt::from(13) {
                    return fail(format!("base value {}", chain.entries[0].value));
                }
                for (d, m) in [(4u32, 3u32), (4, 4), (5, 3), (5, 4), (6, 5)] {
                    let chain = mu_lower_chain(d, m)?;
                    for e in &chain.entries {
                        if e.value < e.floor {
                            return fail(format!("floor violated at d={d} m={m} k={}", e.k));
                        }
                    }
                }
                ok("base values and floors hold on the sample grid")
            },
        },
        Check {
            id: "limit-constant",
            description: "limiting constants: 1.65096... for (4,2), 1.8072... for (5,2), exactly 1 at k=1",
            run: || {
                let c = limit_constant(4, 2, 50)?;
                if !c.value.to_string().starts_with("1.65096") {
                    return fail(format!("(4,2) gave {}", c.value));
                }
                let c80 = limit_constant(4, 2, 80)?;
                if c80.value.with_scale(50) != c.value {
                    return fail("precisions disagree".to_string());
                }
                let c = limit_constant(5, 2, 50)?;
                if !c.value.to_string().starts_with("1.8072") {
                    return fail(format!("(5,2) gave {}", c.value));
                }
                ok("constants agree at two precisions")
            },
        },
    ]
}

/// Runs every check, optionally on a rayon pool of the given width, and
/// returns results in declaration order.
pub fn run_all(jobs: Option<usize>) -> Result<Vec<CheckResult>> {
    let checks = checks();
    let run_one = |c: &Check| -> CheckResult {
        let outcome = (c.run)();
        let (passed, detail) = match outcome {
            Ok(Ok(detail)) => (true, detail),
            Ok(Err(detail)) => (false, detail),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            id: c.id.to_string(),
            description: c.description.to_string(),
            passed,
            detail,
        }
    };
    let results: Vec<CheckResult> = match jobs {
        Some(n) if n > 1 => {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| crate::Error::InvalidArgument(e.to_string()))?;
            pool.install(|| checks.par_iter().map(run_one).collect())
        }
        _ => checks.iter().map(run_one).collect(),
    };
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_green() {
        let results = run_all(None).unwrap();
        let failures: Vec<&CheckResult> = results.iter().filter(|r| !r.passed).collect();
        assert!(
            failures.is_empty(),
            "failing checks: {:#?}",
            failures
                .iter()
                .map(|r| format!("{}: {}", r.id, r.detail))
                .collect::<Vec<_>>()
        );
        assert!(results.len() >= 20);
    }

    #[test]
    fn parallel_run_matches_sequential() {
        let seq = run_all(None).unwrap();
        let par = run_all(Some(4)).unwrap();
        let ids: Vec<&str> = seq.iter().map(|r| r.id.as_str()).collect();
        let par_ids: Vec<&str> = par.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, par_ids);
        assert!(par.iter().all(|r| r.passed));
    }
}
