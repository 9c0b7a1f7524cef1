//! Reduced runs of the library's invariant suites, for a quick health check
//! of a build.

use serde::Serialize;
use wzeta_core::algebra::LRational;
use wzeta_core::chi::{chi_diag_fiber, Ambient, ChiTriple, TokenKey};
use wzeta_core::newton::{s_sigma_bruteforce, BruteCaps, FaceSet, WhPolynomial};
use wzeta_core::recovery::{compare, run_recovery, ProfileOracle, RecoveryConfig, Verdict};
use wzeta_core::zeta::{
    bf_coeff, rational_form, s_sigma_closed, verify_modified_identity, Corruption, ZetaContext,
};

use crate::{Outcome, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    /// Smaller profiles and orders.
    pub quick: bool,
    /// Largest order `m` for the lattice-sum comparisons.
    pub max_m: u64,
    /// Flips the sign of the `B_f` term in the identity check; the run must
    /// then fail.
    pub corrupt: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            quick: false,
            max_m: 60,
            corrupt: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, result: Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check {
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn wh(delta: &[u64]) -> WhPolynomial {
    WhPolynomial::brieskorn(delta, None).expect("diagonal profile")
}

fn cone_sums(profiles: &[&[u64]], max_m: u64) -> Result<String, String> {
    let caps = BruteCaps {
        max_m,
        ..BruteCaps::default()
    };
    let mut count = 0;
    for delta in profiles {
        let f = wh(delta);
        for face in FaceSet::full(delta.len()).nonempty_subsets() {
            for m in 1..=max_m {
                let brute = s_sigma_bruteforce(&f, face, m, &caps).map_err(|e| e.to_string())?;
                if s_sigma_closed(f.exponents(), face, m) != brute {
                    return Err(format!("{delta:?} face {face} m = {m}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} closed forms match lattice enumeration"))
}

fn bf_resummation(profiles: &[&[u64]], max_m: u64) -> Result<String, String> {
    let caps = BruteCaps {
        max_m,
        ..BruteCaps::default()
    };
    for delta in profiles {
        let f = wh(delta);
        let mut acc = LRational::zero();
        for m in 1..=max_m {
            for face in FaceSet::full(delta.len()).nonempty_subsets() {
                acc = &acc + &s_sigma_bruteforce(&f, face, m, &caps).map_err(|e| e.to_string())?;
            }
            let resummed = &acc.mul_l_minus_one_pow(delta.len() as i64) - &LRational::one();
            if bf_coeff(f.exponents(), m) != resummed {
                return Err(format!("{delta:?} m = {m}"));
            }
        }
    }
    Ok(format!("{} profiles through m = {max_m}", profiles.len()))
}

fn rationality(profiles: &[&[u64]]) -> Result<String, String> {
    for delta in profiles {
        let ctx = ZetaContext::new(wh(delta)).map_err(|e| e.to_string())?;
        let r = rational_form(&ctx).map_err(|e| e.to_string())?;
        let n = 3 * r.period;
        for (m, c) in (1..=n).zip(r.expand(n)) {
            if c != ctx.ztilde_class(m) {
                return Err(format!("{delta:?} T^{m}"));
            }
        }
    }
    Ok(format!("{} profiles through 3 lcm", profiles.len()))
}

/// Name, signs, exponents, level, ambient and expected value.
type Fixture = (
    &'static str,
    &'static [i8],
    &'static [u64],
    i8,
    Ambient,
    i64,
);

fn chi_fixtures() -> Result<String, String> {
    let cases: [Fixture; 5] = [
        (
            "circle in the torus",
            &[1, 1],
            &[2, 2],
            1,
            Ambient::Torus,
            -4,
        ),
        (
            "sphere in R^3",
            &[1, 1, 1],
            &[2, 2, 2],
            1,
            Ambient::Affine,
            2,
        ),
        (
            "hyperbola in the torus",
            &[1, -1],
            &[2, 2],
            1,
            Ambient::Torus,
            -4,
        ),
        (
            "cusp fiber 1 in the torus",
            &[1, 1],
            &[2, 3],
            1,
            Ambient::Torus,
            -4,
        ),
        (
            "cusp fiber 0 in the torus",
            &[1, 1],
            &[2, 3],
            0,
            Ambient::Torus,
            -2,
        ),
    ];
    for (name, s, e, level, amb, want) in cases {
        let got = chi_diag_fiber(s, e, level, amb);
        if got != want {
            return Err(format!("{name}: {got}, expected {want}"));
        }
    }
    Ok(format!("{} fixtures", cases.len()))
}

fn parity(max_vars: usize) -> Result<String, String> {
    let mut count = 0;
    for k in 1..=max_vars {
        for signs in 0u32..1 << k {
            for exps in 0u32..1 << k {
                let s: Vec<i8> = (0..k)
                    .map(|i| if signs & 1 << i != 0 { -1 } else { 1 })
                    .collect();
                let e: Vec<u64> = (0..k)
                    .map(|i| if exps & 1 << i != 0 { 4 } else { 2 })
                    .collect();
                let diff = chi_diag_fiber(&s, &e, 1, Ambient::Affine)
                    - chi_diag_fiber(&s, &e, 0, Ambient::Affine);
                if diff % 2 == 0 {
                    return Err(format!("signs {s:?} exponents {e:?}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} forms with odd fiber difference"))
}

fn identity(profiles: &[&[u64]], corrupt: bool) -> Result<String, String> {
    for delta in profiles {
        let ctx = ZetaContext::new(wh(delta)).map_err(|e| e.to_string())?;
        let n = 2 * ctx.polynomial().exponents().lcm();
        let c = verify_modified_identity(&ctx, n, corrupt.then_some(Corruption::FlipBfSign));
        if let Some(m) = c.first_failure {
            return Err(format!("{delta:?} fails at T^{m}"));
        }
    }
    Ok(format!("{} profiles through 2 lcm", profiles.len()))
}

fn recovery(profiles: &[&[u64]]) -> Result<String, String> {
    let run = |delta: &[u64]| {
        let ctx = ZetaContext::new(wh(delta)).map_err(|e| e.to_string())?;
        let oracle = ProfileOracle::new(&ctx).map_err(|e| e.to_string())?;
        run_recovery(&oracle, &RecoveryConfig::default()).map_err(|e| format!("{delta:?}: {e}"))
    };
    for delta in profiles {
        let mut want = delta.to_vec();
        want.sort_unstable();
        let r = run(delta)?;
        if r.deltas != want {
            return Err(format!("{delta:?} recovered as {:?}", r.deltas));
        }
    }
    let (a, b) = (run(&[2, 4, 6])?, run(&[3, 3, 4])?);
    if !matches!(
        compare((3, Some(&a)), (3, Some(&b))),
        Verdict::Separated { .. }
    ) {
        return Err("twin pair (2,4,6) / (3,3,4) not separated".into());
    }
    Ok(format!(
        "{} round trips, twin pair separated",
        profiles.len()
    ))
}

fn non_singular(profiles: &[&[u64]]) -> Result<String, String> {
    for delta in profiles {
        let ctx = ZetaContext::new(wh(delta)).map_err(|e| e.to_string())?;
        let lcm = ctx.polynomial().exponents().lcm();
        let zero = |m| {
            let c = ctx.ztilde_coeff_u64(m);
            c.token.key == TokenKey::Zero && c.chi == ChiTriple::zero()
        };
        let expect_zero = delta.contains(&1);
        let ok = if expect_zero {
            (1..=3 * lcm).all(zero)
        } else {
            !(1..=lcm).all(zero)
        };
        if !ok {
            return Err(format!("{delta:?}"));
        }
    }
    Ok(format!("{} profiles", profiles.len()))
}

pub fn selftest(cfg: &SelftestConfig) -> Outcome {
    let (small, max_m, vars): (&[&[u64]], u64, usize) = if cfg.quick {
        (&[&[2, 3], &[2, 2, 4]], cfg.max_m.min(24), 3)
    } else {
        (
            &[&[2, 3], &[3, 4], &[2, 2, 4], &[2, 3, 5], &[3, 3, 4]],
            cfg.max_m,
            5,
        )
    };
    let recover: &[&[u64]] = if cfg.quick {
        &[&[2, 3], &[2, 4, 6]]
    } else {
        &[
            &[2, 3],
            &[2, 4, 6],
            &[3, 3, 4],
            &[2, 5, 7],
            &[4, 6, 9, 9],
            &[2, 3, 5, 7, 8],
        ]
    };
    let checks = vec![
        check("cone sums", cone_sums(small, max_m)),
        check("B_f resummation", bf_resummation(small, max_m)),
        check("rational form", rationality(small)),
        check("chi fixtures", chi_fixtures()),
        check("parity", parity(vars)),
        check("modified identity", identity(small, cfg.corrupt)),
        check("recovery", recovery(recover)),
        check(
            "non-singular",
            non_singular(&[&[1], &[1, 3], &[2, 1, 4], &[2], &[2, 3], &[3, 5, 5]]),
        ),
    ];
    let passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!(
            "{} {}: {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    text.push_str(if passed {
        "selftest passed\n"
    } else {
        "selftest FAILED\n"
    });
    Outcome {
        json: serde_json::json!({ "passed": passed, "checks": checks }),
        text,
        status: if passed {
            Status::Ok
        } else {
            Status::Invariant
        },
    }
}
