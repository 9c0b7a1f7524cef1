use std::fmt::Write;

use wzeta_core::newton::{
    analyze_polynomial, check_nondegenerate, compact_faces, NewtonError, NondegStatus,
    SamplingConfig, SparsePoly, WhPolynomial, DEFAULT_FACE_CAP,
};
use wzeta_core::recovery::{
    compare as compare_reports, run_recovery, BoundMode, ProfileOracle, RecoveryConfig,
    RecoveryReport, Verdict,
};
use wzeta_core::zeta::{
    rational_form, verify_modified_identity, Corruption, ZetaContext, ZetaError,
};

use crate::format::{
    chi_triple_str, face_json, verdict_witness, witness_text, AnalyzeJson, CoeffJson, CompareJson,
    IdentityJson, RationalJson, RecoveryJson, SideJson, ZetaJson, EQUAL_WEIGHTS_CAVEAT,
    INCONCLUSIVE_NOTE,
};
use crate::{CliError, Outcome, Status};

/// Recovery limits exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Budget {
    pub config: RecoveryConfig,
}

impl Budget {
    pub fn with_max_n(max_n: u64) -> Self {
        Self {
            config: RecoveryConfig {
                max_n,
                ..RecoveryConfig::default()
            },
        }
    }

    pub fn unfiltered(mut self) -> Self {
        self.config.bound = BoundMode::Unfiltered;
        self
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn tuple(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn gate(e: NewtonError) -> CliError {
    CliError::Gate(e.to_string())
}

/// Builds the zeta context, mapping gate and degeneracy failures.
pub fn context(poly: &SparsePoly) -> Result<ZetaContext, CliError> {
    let wh = WhPolynomial::new(poly.clone()).map_err(gate)?;
    ZetaContext::new(wh).map_err(|e| match e {
        ZetaError::Newton(e) => gate(e),
        ZetaError::Degenerate { face, witness } => CliError::degenerate(face, witness.as_ref()),
        ZetaError::NonSingular => CliError::Gate(e.to_string()),
    })
}

pub fn analyze(poly: &SparsePoly) -> Result<Outcome, CliError> {
    let profile = analyze_polynomial(poly);
    let mut report = AnalyzeJson::new(poly, &profile);
    let mut status = Status::Ok;
    let mut text = String::new();
    writeln!(text, "polynomial: {poly}").unwrap();
    writeln!(text, "dimension: {}", profile.dim).unwrap();
    let exps: Vec<String> = profile
        .pure_exponents
        .iter()
        .map(|e| e.map_or("-".into(), |x| x.to_string()))
        .collect();
    writeln!(text, "pure exponents: ({})", exps.join(", ")).unwrap();
    writeln!(text, "convenient: {}", yes(profile.convenient)).unwrap();
    writeln!(
        text,
        "weighted homogeneous: {}",
        yes(profile.weighted_homogeneous)
    )
    .unwrap();
    if let (Some(w), Some(deg)) = (profile.sorted_weights(), profile.degree) {
        write!(text, "weights: {}, degree {deg}", tuple(&w)).unwrap();
        if let Some(m) = report.m_w {
            write!(text, ", m(w) = {m}").unwrap();
        }
        text.push('\n');
    }
    if !profile.convenient || !profile.weighted_homogeneous {
        writeln!(
            text,
            "rejected: outside the convenient weighted homogeneous class"
        )
        .unwrap();
        return Ok(Outcome {
            json: serde_json::to_value(&report)?,
            text,
            status: Status::Gate,
        });
    }
    writeln!(text, "singular: {}", yes(profile.singular)).unwrap();
    let wh = WhPolynomial::new(poly.clone()).map_err(gate)?;
    let faces = compact_faces(&wh, DEFAULT_FACE_CAP).map_err(gate)?;
    let nondeg = check_nondegenerate(&faces, &SamplingConfig::default());
    writeln!(text, "compact faces:").unwrap();
    for (desc, st) in faces.iter().zip(&nondeg.faces) {
        let face = face_json(desc, st);
        write!(
            text,
            "  {:<12} {} ({})",
            face.face, face.status, face.method
        )
        .unwrap();
        if st.status == NondegStatus::CertifiedDegenerate {
            write!(text, ": {}", face.witness.as_deref().unwrap_or("")).unwrap();
        }
        text.push('\n');
        report.faces.push(face);
    }
    report.nondegenerate = if nondeg.all_certified() {
        Some(true)
    } else if nondeg.first_degenerate().is_some() {
        status = Status::Degenerate;
        Some(false)
    } else {
        None
    };
    let verdict = match report.nondegenerate {
        Some(true) => "certified",
        Some(false) => "fails",
        None => "not certified on every face",
    };
    writeln!(text, "non-degeneracy: {verdict}").unwrap();
    Ok(Outcome {
        json: serde_json::to_value(&report)?,
        text,
        status,
    })
}

pub fn zeta(poly: &SparsePoly, order: u64, corrupt: bool) -> Result<Outcome, CliError> {
    if order == 0 {
        return Err(CliError::Gate("the order must be at least 1".into()));
    }
    let ctx = context(poly)?;
    let singular = ctx.polynomial().is_singular();
    let mut text = String::new();
    writeln!(text, "polynomial: {poly}").unwrap();
    let (coefficients, rational, note) = if singular {
        let coeffs: Vec<CoeffJson> = (1..=order)
            .map(|m| CoeffJson::new(&ctx.ztilde_coeff_u64(m), &ctx.ztilde_class(m)))
            .collect();
        let r = rational_form(&ctx).map_err(|e| CliError::Invariant(e.to_string()))?;
        (coeffs, Some(r), None)
    } else {
        (
            Vec::new(),
            None,
            Some("non-singular: the modified zeta function is zero".to_string()),
        )
    };
    for (c, m) in coefficients.iter().zip(1..) {
        let d = ctx.ztilde_coeff_u64(m);
        writeln!(
            text,
            "a_{m}: s = {}  I = {}  pure = {}  token = {}  chi(F+, F-, bar) = {}\n      = {}",
            c.lshift,
            c.divisor_set,
            yes(c.pure),
            c.token,
            chi_triple_str(&d.chi),
            c.class
        )
        .unwrap();
    }
    if let Some(n) = &note {
        writeln!(text, "{n}").unwrap();
    }
    if let Some(r) = &rational {
        writeln!(text, "rational form: {r}").unwrap();
    }
    let check = verify_modified_identity(&ctx, order, corrupt.then_some(Corruption::FlipBfSign));
    match check.first_failure {
        None => writeln!(text, "modified identity: holds through T^{order}").unwrap(),
        Some(m) => writeln!(text, "modified identity: FAILS at T^{m}").unwrap(),
    }
    let report = ZetaJson {
        polynomial: poly.to_string(),
        order,
        singular,
        note,
        coefficients,
        rational_form: rational.as_ref().map(RationalJson::new),
        identity: IdentityJson::from(&check),
    };
    Ok(Outcome {
        json: serde_json::to_value(&report)?,
        text,
        status: if check.holds {
            Status::Ok
        } else {
            Status::Invariant
        },
    })
}

fn recover_ctx(ctx: &ZetaContext, budget: &Budget) -> Result<RecoveryReport, CliError> {
    let oracle = ProfileOracle::new(ctx).map_err(CliError::Recovery)?;
    let report = run_recovery(&oracle, &budget.config).map_err(CliError::Recovery)?;
    let mut truth = ctx.polynomial().exponents().as_slice().to_vec();
    truth.sort_unstable();
    if report.deltas != truth {
        return Err(CliError::Invariant(format!(
            "recovered exponents {} differ from the input's {}",
            tuple(&report.deltas),
            tuple(&truth)
        )));
    }
    Ok(report)
}

pub fn recovery_text(r: &RecoveryReport) -> String {
    let mut text = String::new();
    writeln!(text, "S = {}", r.s).unwrap();
    writeln!(
        text,
        "K = {}, P = {:?}, gamma = {:?}, |Q| = {}",
        r.k,
        r.primes,
        r.gammas,
        r.q.len()
    )
    .unwrap();
    for s in &r.steps {
        if s.has_window() {
            let cong: Vec<String> = s
                .congruences
                .iter()
                .map(|c| format!("{} mod {}", c.residue, c.modulus))
                .collect();
            let lo = s.table.first().map_or(0, |t| t.offset);
            let hi = s.table.last().map_or(0, |t| t.offset);
            writeln!(
                text,
                "{}: n = {} [{}]  s(n{hi:+}) - s(n{lo:+}) = {}  =>  {}",
                s.step,
                s.n,
                cong.join(", "),
                s.lhs,
                s.equation
            )
            .unwrap();
        } else {
            writeln!(text, "{}: {}", s.step, s.equation).unwrap();
        }
        for (q, v) in &s.resolved {
            writeln!(text, "    mult({q}) = {v}").unwrap();
        }
    }
    let mult: Vec<String> = r
        .mult
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(q, c)| format!("{q}:{c}"))
        .collect();
    writeln!(text, "mult = {{{}}}", mult.join(", ")).unwrap();
    writeln!(text, "exponents = {}", tuple(&r.deltas)).unwrap();
    writeln!(text, "weights = {}", tuple(&r.weights)).unwrap();
    text
}

pub fn recover(poly: &SparsePoly, budget: &Budget) -> Result<Outcome, CliError> {
    let ctx = context(poly)?;
    let report = recover_ctx(&ctx, budget)?;
    Ok(Outcome {
        json: serde_json::to_value(RecoveryJson::from(&report))?,
        text: recovery_text(&report),
        status: Status::Ok,
    })
}

pub fn compare(f: &SparsePoly, g: &SparsePoly, budget: &Budget) -> Result<Outcome, CliError> {
    let side = |p: &SparsePoly| -> Result<(usize, Option<RecoveryReport>), CliError> {
        let ctx = context(p)?;
        let report = if ctx.polynomial().is_singular() {
            Some(recover_ctx(&ctx, budget)?)
        } else {
            None
        };
        Ok((ctx.dim(), report))
    };
    let (a, b) = (side(f)?, side(g)?);
    let verdict = compare_reports((a.0, a.1.as_ref()), (b.0, b.1.as_ref()));
    let json_side = |p: &SparsePoly, r: &Option<RecoveryReport>| SideJson {
        polynomial: p.to_string(),
        singular: r.is_some(),
        deltas: r.as_ref().map(|r| r.deltas.clone()),
        weights: r.as_ref().map(|r| r.weights.clone()),
    };
    let caveat = match verdict {
        Verdict::WeightsEqual => Some(EQUAL_WEIGHTS_CAVEAT),
        Verdict::Inconclusive => Some(INCONCLUSIVE_NOTE),
        Verdict::Separated { .. } => None,
    };
    let report = CompareJson {
        verdict: verdict.as_str(),
        witness: verdict_witness(&verdict),
        left: json_side(f, &a.1),
        right: json_side(g, &b.1),
        caveat,
    };
    let mut text = String::new();
    let weights = |r: &Option<RecoveryReport>| {
        r.as_ref()
            .map_or("none (non-singular)".into(), |r| tuple(&r.weights))
    };
    writeln!(text, "left:  {f}  weights {}", weights(&a.1)).unwrap();
    writeln!(text, "right: {g}  weights {}", weights(&b.1)).unwrap();
    write!(text, "verdict: {}", verdict.as_str()).unwrap();
    if let Verdict::Separated { witness } = &verdict {
        write!(text, " (witness: {})", witness_text(witness)).unwrap();
    }
    text.push('\n');
    if let Some(c) = caveat {
        writeln!(text, "note: {c}").unwrap();
    }
    Ok(Outcome {
        json: serde_json::to_value(&report)?,
        text,
        status: Status::Ok,
    })
}
