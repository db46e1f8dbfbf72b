use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::field::{Field, FieldKind, PrimeField, Rationals};
use crate::groebner::{
    initial_ideal, is_groebner_basis_within, reduce, GbBudget, GbLog, GroebnerError, Ideal, MonomialIdeal,
};
use crate::rees::{
    candidate_basis, predicted_initial_ideal, predicted_monomial, rees_ideal_oracle, FamilyElement, FamilyTag,
    Instance, NormalizedInstance, ReesError, SubstitutionCheck, READING_NOTES,
};
use crate::ring::PolyRing;
use crate::squarefree::{
    alexander_dual, betti_numbers_capped, dual_by_components, eagon_reiner_cm_capped, reisner_cm_capped,
    SquareFreeError, SquareFreeIdeal, COMPUTATION_NOTES, DEFAULT_VERTEX_CAP,
};

use super::PipelineError;

/// Why a stage did not reach a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cause {
    Budget,
    VertexCap,
    /// The instance needs a family that is not constructed (`s2 >= 3`).
    Unresolved,
    /// An earlier stage this one depends on was not verified.
    Prerequisite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Refuted { reason: String },
    NotVerified { cause: Cause, reason: String },
}

impl Verdict {
    fn from_check(ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Verified
        } else {
            Verdict::Refuted { reason: reason() }
        }
    }

    fn blocked(reason: &str) -> Self {
        Verdict::NotVerified { cause: Cause::Prerequisite, reason: reason.to_string() }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }

    /// Short label for the human summary.
    pub fn label(&self) -> String {
        match self {
            Verdict::Verified => "verified".into(),
            Verdict::Refuted { reason } => format!("REFUTED: {reason}"),
            Verdict::NotVerified { reason, .. } => format!("not verified ({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stage {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub detail: Value,
}

impl Stage {
    fn new(verdict: Verdict, detail: Value) -> Self {
        Stage { verdict, detail }
    }

    fn blocked(reason: &str) -> Self {
        Stage::new(Verdict::blocked(reason), Value::Null)
    }
}

/// Per-stage verdicts, in pipeline order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stages {
    pub family_counts: Stage,
    pub gb_membership: Stage,
    pub buchberger_ok: Stage,
    pub initial_ideal_match: Stage,
    pub dual_degree: Stage,
    pub dual_regularity: Stage,
    pub dual_linear: Stage,
    pub eagon_reiner_cm: Stage,
    pub reisner_cm: Stage,
    pub final_cm_verdict: Stage,
}

impl Stages {
    pub fn named(&self) -> [(&'static str, &Stage); 10] {
        [
            ("family_counts", &self.family_counts),
            ("gb_membership", &self.gb_membership),
            ("buchberger_ok", &self.buchberger_ok),
            ("initial_ideal_match", &self.initial_ideal_match),
            ("dual_degree", &self.dual_degree),
            ("dual_regularity", &self.dual_regularity),
            ("dual_linear", &self.dual_linear),
            ("eagon_reiner_cm", &self.eagon_reiner_cm),
            ("reisner_cm", &self.reisner_cm),
            ("final_cm_verdict", &self.final_cm_verdict),
        ]
    }
}

/// Cohen-Macaulay data of the initial ideal computed by the elimination
/// oracle. Informational: it never enters the final verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRoute {
    pub initial_generators: usize,
    pub matches_families: Option<bool>,
    pub square_free: bool,
    pub dual_degrees: Vec<usize>,
    pub dual_regularity: Option<usize>,
    pub dual_linear: Option<bool>,
    pub eagon_reiner_cm: Option<bool>,
    pub reisner_cm: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOptions {
    pub field: FieldKind,
    pub budget: GbBudget,
    pub skip_oracle: bool,
    pub vertex_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: FieldKind::Rationals,
            budget: GbBudget::default(),
            skip_oracle: false,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub instance: NormalizedInstance,
    pub field: String,
    pub options: VerifyOptions,
    pub stages: Stages,
    pub oracle_route: Option<OracleRoute>,
    /// Buchberger trace of the elimination oracle, when it completed.
    pub oracle_log: Option<GbLog>,
    pub assumptions: Vec<String>,
    pub timings_ms: BTreeMap<&'static str, f64>,
}

/// Process exit codes.
pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

impl VerificationReport {
    /// 2 if any stage is refuted, else 0 when the final verdict holds, else
    /// 3 for budget or vertex-cap exhaustion, else 4 (instance outside the
    /// constructed families).
    pub fn exit_code(&self) -> i32 {
        let stages = self.stages.named();
        if stages.iter().any(|(_, s)| matches!(s.verdict, Verdict::Refuted { .. })) {
            return EXIT_REFUTED;
        }
        if self.stages.final_cm_verdict.verdict.is_verified() {
            return EXIT_VERIFIED;
        }
        let exhausted = stages.iter().any(|(_, s)| {
            matches!(s.verdict, Verdict::NotVerified { cause: Cause::Budget | Cause::VertexCap, .. })
        });
        if exhausted {
            EXIT_EXHAUSTED
        } else {
            EXIT_UNSUPPORTED
        }
    }

    /// The report without its timing block, for determinism checks.
    pub fn without_timings(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timings_ms");
        }
        v
    }

    pub fn summary(&self) -> String {
        let mut out = format!("instance {} over {}\n", self.instance.instance, self.field);
        for notice in &self.instance.notices {
            out.push_str(&format!("  note: {notice}\n"));
        }
        for (name, stage) in self.stages.named() {
            out.push_str(&format!("  {name:<20} {}\n", stage.verdict.label()));
        }
        if let Some(route) = &self.oracle_route {
            out.push_str(&format!(
                "  oracle route (informational): dual degrees {:?}, linear {}, Eagon-Reiner {}, Reisner {}\n",
                route.dual_degrees,
                show(route.dual_linear),
                show(route.eagon_reiner_cm),
                show(route.reisner_cm)
            ));
        }
        out
    }
}

fn show(v: Option<bool>) -> String {
    v.map_or_else(|| "n/a".into(), |b| b.to_string())
}

/// Run the full pipeline on a (not yet normalized) instance.
pub fn verify(requested: Instance, options: &VerifyOptions) -> Result<VerificationReport, PipelineError> {
    let r = requested;
    let normalized = Instance::build(r.m, r.n, r.s1, r.t1, r.s2, r.t2)?;
    match options.field {
        FieldKind::Rationals => run(Rationals, normalized, options),
        FieldKind::PrimeField(p) => run(PrimeField::new(p as u64)?, normalized, options),
    }
}

fn elapsed(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn element_label<E>(e: &FamilyElement<E>) -> String {
    format!("{}{:?}", e.tag, e.index)
}

fn cap_or_err(e: SquareFreeError) -> Result<Verdict, PipelineError> {
    match e {
        SquareFreeError::VertexCap { count, cap } => Ok(Verdict::NotVerified {
            cause: Cause::VertexCap,
            reason: format!("{count} vertices exceed the cap of {cap}"),
        }),
        other => Err(other.into()),
    }
}

fn budget_or_err(e: ReesError) -> Result<Verdict, PipelineError> {
    match e {
        ReesError::Groebner(GroebnerError::Budget { what, limit }) => Ok(Verdict::NotVerified {
            cause: Cause::Budget,
            reason: format!("budget: {what} exceeded the cap of {limit}"),
        }),
        other => Err(other.into()),
    }
}

fn render_all<F: Field>(ring: &PolyRing<F>, ms: &[&crate::monomial::Monomial]) -> Vec<String> {
    ms.iter().take(10).map(|m| ring.render_monomial(m)).collect()
}

fn ideal_difference<F: Field>(ring: &PolyRing<F>, got: &MonomialIdeal, want: &MonomialIdeal) -> Value {
    let missing: Vec<_> = want.generators().iter().filter(|m| !got.generators().contains(m)).collect();
    let extra: Vec<_> = got.generators().iter().filter(|m| !want.generators().contains(m)).collect();
    json!({
        "missing_count": missing.len(),
        "extra_count": extra.len(),
        "missing": render_all(ring, &missing),
        "extra": render_all(ring, &extra),
    })
}

enum OracleState<F: Field> {
    Skipped,
    Exhausted(Verdict),
    Ready(Ideal<F>),
}

fn run<F: Field>(field: F, normalized: NormalizedInstance, options: &VerifyOptions) -> Result<VerificationReport, PipelineError> {
    let total = Instant::now();
    let inst = normalized.instance;
    let kind = field.kind();
    let ring = inst.ring(field.clone())?;
    let mut timings = BTreeMap::new();
    let mut assumptions: Vec<String> = normalized.notices.clone();
    assumptions.extend(READING_NOTES.iter().map(|s| s.to_string()));
    assumptions.extend(COMPUTATION_NOTES.iter().map(|s| s.to_string()));

    // oracle first: it is independent of everything else
    let t = Instant::now();
    let mut oracle_log = None;
    let oracle = if options.skip_oracle {
        assumptions.push(
            "oracle skipped: membership rests on the substitution route and the equality of the ideal generated by \
             the families with K is not checked"
                .into(),
        );
        OracleState::Skipped
    } else {
        match rees_ideal_oracle(&inst, field.clone(), &options.budget) {
            Ok((ideal, log)) => {
                oracle_log = Some(log);
                OracleState::Ready(ideal)
            }
            Err(e) => OracleState::Exhausted(budget_or_err(e)?),
        }
    };
    timings.insert("oracle", elapsed(t));

    let t = Instant::now();
    let oracle_route = match &oracle {
        OracleState::Ready(ideal) => Some(oracle_route(&inst, ideal, kind, options.vertex_cap)?),
        _ => None,
    };
    timings.insert("oracle_route", elapsed(t));

    let t = Instant::now();
    let basis = match candidate_basis(&inst, &ring) {
        Ok(b) => b,
        Err(ReesError::UnresolvedFamily { tag, .. }) => {
            timings.insert("families", elapsed(t));
            timings.insert("total", elapsed(total));
            let reason = format!("family {tag} is not constructed for s2 >= 3");
            let blocked = || Stage::blocked("explicit families unavailable");
            let stages = Stages {
                family_counts: Stage::new(Verdict::NotVerified { cause: Cause::Unresolved, reason }, Value::Null),
                gb_membership: blocked(),
                buchberger_ok: blocked(),
                initial_ideal_match: blocked(),
                dual_degree: blocked(),
                dual_regularity: blocked(),
                dual_linear: blocked(),
                eagon_reiner_cm: blocked(),
                reisner_cm: blocked(),
                final_cm_verdict: blocked(),
            };
            return Ok(VerificationReport {
                schema: 1,
                instance: normalized,
                field: kind.to_string(),
                options: options.clone(),
                stages,
                oracle_route,
                oracle_log,
                assumptions,
                timings_ms: timings,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let mut counts = serde_json::Map::new();
    for tag in FamilyTag::ALL {
        counts.insert(tag.name().into(), json!(basis.iter().filter(|e| e.tag == tag).count()));
    }
    counts.insert("total".into(), json!(basis.len()));
    let family_counts = Stage::new(Verdict::Verified, Value::Object(counts));
    timings.insert("families", elapsed(t));

    let t = Instant::now();
    let gb_membership = membership_stage(&inst, &ring, &basis, &oracle)?;
    timings.insert("membership", elapsed(t));

    let t = Instant::now();
    let values: Vec<_> = basis.iter().map(|e| e.value.clone()).collect();
    let buchberger_ok = match is_groebner_basis_within(&ring, &values, &options.budget) {
        Ok(cert) => {
            let detail = json!({
                "pairs_checked": cert.pairs_checked,
                "pairs_skipped_coprime": cert.pairs_skipped_coprime,
                "failing_pair": cert.failure.as_ref().map(|f| json!({
                    "first": element_label(&basis[f.i]),
                    "second": element_label(&basis[f.j]),
                    "remainder_leading_monomial": f.remainder_leading_monomial,
                })),
            });
            let verdict = Verdict::from_check(cert.is_gb, || {
                let f = cert.failure.as_ref().expect("failure recorded");
                format!(
                    "S-pair of {} and {} leaves a remainder with leading monomial {}",
                    element_label(&basis[f.i]),
                    element_label(&basis[f.j]),
                    f.remainder_leading_monomial
                )
            });
            Stage::new(verdict, detail)
        }
        Err(e) => Stage::new(budget_or_err(e.into())?, Value::Null),
    };
    timings.insert("buchberger", elapsed(t));

    let t = Instant::now();
    let predicted = predicted_initial_ideal(&inst, &ring)?;
    let initial_ideal_match = initial_stage(&inst, &ring, &basis, &predicted, &oracle)?;
    timings.insert("initial_ideal", elapsed(t));

    let t = Instant::now();
    let initial = SquareFreeIdeal::from_monomial_ideal(&ring, &predicted)?;
    let dual = alexander_dual(&initial)?;
    let components_agree = dual_by_components(&inst)? == dual;
    let degrees = dual.degrees();
    let formula = inst.dual_degree_formula();
    let variant = inst.dual_degree_variant();
    let matches = if degrees == [formula as usize] {
        "formula"
    } else if degrees == [variant as usize] {
        "variant"
    } else {
        "neither"
    };
    let dual_degree = Stage::new(
        if !components_agree {
            Verdict::Refuted { reason: "the component-wise dual differs from the generic dual".into() }
        } else {
            Verdict::from_check(matches == "formula", || {
                format!("dual generator degrees {degrees:?} match {matches} (formula {formula}, variant {variant})")
            })
        },
        json!({
            "generators": dual.len(),
            "degrees": degrees,
            "formula": formula,
            "variant": variant,
            "matches": matches,
            "component_route_agrees": components_agree,
        }),
    );
    timings.insert("dual", elapsed(t));

    let t = Instant::now();
    let (dual_regularity, dual_linear) = match betti_numbers_capped(&dual, kind, options.vertex_cap) {
        Ok(table) => {
            let reg = table.regularity();
            let detail = json!({
                "regularity": reg,
                "projective_dimension": table.projective_dimension(),
                "betti": table.entries(),
            });
            (
                Stage::new(
                    Verdict::from_check(reg == Some(formula as usize), || {
                        format!("regularity {reg:?} differs from the formula value {formula}")
                    }),
                    detail,
                ),
                Stage::new(
                    Verdict::from_check(table.is_linear(), || "the dual resolution is not linear".into()),
                    json!({ "generator_degrees": table.generator_degrees(), "regularity": reg }),
                ),
            )
        }
        Err(e) => {
            let v = cap_or_err(e)?;
            (Stage::new(v.clone(), Value::Null), Stage::new(v, Value::Null))
        }
    };
    timings.insert("betti", elapsed(t));

    let t = Instant::now();
    let eagon_reiner_cm = match eagon_reiner_cm_capped(&initial, kind, options.vertex_cap) {
        Ok(cm) => Stage::new(Verdict::from_check(cm, || "the dual has no linear resolution".into()), json!(cm)),
        Err(e) => Stage::new(cap_or_err(e)?, Value::Null),
    };
    timings.insert("eagon_reiner", elapsed(t));

    let t = Instant::now();
    let reisner_cm = match reisner_cm_capped(&initial, kind, options.vertex_cap) {
        Ok(cm) => Stage::new(Verdict::from_check(cm, || "a link has homology below its top dimension".into()), json!(cm)),
        Err(e) => Stage::new(cap_or_err(e)?, Value::Null),
    };
    timings.insert("reisner", elapsed(t));

    let prerequisites = [
        ("gb_membership", &gb_membership),
        ("buchberger_ok", &buchberger_ok),
        ("initial_ideal_match", &initial_ideal_match),
        ("dual_linear", &dual_linear),
    ];
    let missing: Vec<&str> = prerequisites.iter().filter(|(_, s)| !s.verdict.is_verified()).map(|(n, _)| *n).collect();
    let final_cm_verdict = if missing.is_empty() {
        Stage::new(
            Verdict::Verified,
            json!("the families form a Groebner basis of K, in(K) is square-free with a linearly resolved dual, so \
                   in(K) and hence K define Cohen-Macaulay quotients"),
        )
    } else {
        Stage::new(
            Verdict::NotVerified { cause: Cause::Prerequisite, reason: format!("unverified: {}", missing.join(", ")) },
            Value::Null,
        )
    };
    timings.insert("total", elapsed(total));

    Ok(VerificationReport {
        schema: 1,
        instance: normalized,
        field: kind.to_string(),
        options: options.clone(),
        stages: Stages {
            family_counts,
            gb_membership,
            buchberger_ok,
            initial_ideal_match,
            dual_degree,
            dual_regularity,
            dual_linear,
            eagon_reiner_cm,
            reisner_cm,
            final_cm_verdict,
        },
        oracle_route,
        oracle_log,
        assumptions,
        timings_ms: timings,
    })
}

fn membership_stage<F: Field>(
    inst: &Instance,
    ring: &PolyRing<F>,
    basis: &[FamilyElement<F::Elem>],
    oracle: &OracleState<F>,
) -> Result<Stage, PipelineError> {
    let check = SubstitutionCheck::new(inst, ring.field().clone())?;
    let by_substitution: Vec<bool> =
        basis.par_iter().map(|e| check.contains(ring, &e.value)).collect::<Result<_, _>>()?;
    let outside: Vec<String> =
        basis.iter().zip(&by_substitution).filter(|(_, &ok)| !ok).map(|(e, _)| element_label(e)).take(10).collect();
    let mut detail = json!({ "elements": basis.len(), "substitution_non_members": outside });
    let substitution_ok = by_substitution.iter().all(|&b| b);
    let verdict = match oracle {
        OracleState::Skipped => {
            detail["oracle"] = json!("skipped");
            Verdict::from_check(substitution_ok, || format!("not in K: {}", outside.join(", ")))
        }
        OracleState::Exhausted(v) => {
            detail["oracle"] = json!("exhausted");
            if substitution_ok {
                v.clone()
            } else {
                Verdict::Refuted { reason: format!("not in K: {}", outside.join(", ")) }
            }
        }
        OracleState::Ready(ideal) => {
            let oring = ideal.ring();
            let gens = ideal.generators();
            let by_oracle: Vec<bool> = basis
                .par_iter()
                .map(|e| Ok(reduce(oring, &oring.map_from(ring, &e.value)?, gens).is_zero()))
                .collect::<Result<_, PipelineError>>()?;
            let agree = by_oracle == by_substitution;
            detail["oracle"] = json!({ "basis_size": gens.len(), "routes_agree": agree });
            if !agree {
                Verdict::Refuted { reason: "the oracle and substitution routes disagree".into() }
            } else {
                Verdict::from_check(substitution_ok, || format!("not in K: {}", outside.join(", ")))
            }
        }
    };
    Ok(Stage::new(verdict, detail))
}

fn initial_stage<F: Field>(
    inst: &Instance,
    ring: &PolyRing<F>,
    basis: &[FamilyElement<F::Elem>],
    predicted: &MonomialIdeal,
    oracle: &OracleState<F>,
) -> Result<Stage, PipelineError> {
    let leading = MonomialIdeal::new(basis.iter().filter_map(|e| e.value.leading_monomial().cloned()));
    let mut mismatched = Vec::new();
    for e in basis {
        let want = ring.monomial_from_vars(&predicted_monomial(inst, e.tag, &e.index)?)?;
        if e.value.leading_monomial() != Some(&want) {
            mismatched.push(element_label(e));
        }
    }
    let families_ok = leading == *predicted;
    let mut detail = json!({
        "predicted_generators": predicted.len(),
        "basis_leading_generators": leading.len(),
        "leading_term_mismatches": mismatched.len(),
        "first_mismatches": mismatched.iter().take(10).collect::<Vec<_>>(),
        "basis_vs_families": ideal_difference(ring, &leading, predicted),
    });
    let mut oracle_ok = true;
    if let OracleState::Ready(ideal) = oracle {
        let from_oracle = initial_ideal(ideal.ring(), ideal.generators(), false)?;
        oracle_ok = from_oracle == *predicted;
        detail["oracle_vs_families"] = ideal_difference(ring, &from_oracle, predicted);
    }
    let verdict = if families_ok && oracle_ok {
        Verdict::Verified
    } else if !families_ok {
        Verdict::Refuted { reason: "the leading terms of the families do not generate the listed monomial families".into() }
    } else {
        Verdict::Refuted { reason: "the oracle initial ideal differs from the listed monomial families".into() }
    };
    Ok(Stage::new(verdict, detail))
}

fn oracle_route<F: Field>(inst: &Instance, ideal: &Ideal<F>, kind: FieldKind, cap: usize) -> Result<OracleRoute, PipelineError> {
    let oring = ideal.ring();
    let init = initial_ideal(oring, ideal.generators(), false)?;
    let matches_families = match crate::rees::unresolved_for(inst).is_empty() {
        true => Some(predicted_initial_ideal(inst, oring)? == init),
        false => None,
    };
    let mut route = OracleRoute {
        initial_generators: init.len(),
        matches_families,
        square_free: init.generators().iter().all(|m| m.is_square_free()),
        dual_degrees: Vec::new(),
        dual_regularity: None,
        dual_linear: None,
        eagon_reiner_cm: None,
        reisner_cm: None,
        note: None,
    };
    if !route.square_free {
        route.note = Some("the oracle initial ideal is not square-free".into());
        return Ok(route);
    }
    let sf = SquareFreeIdeal::from_monomial_ideal(oring, &init)?;
    let dual = alexander_dual(&sf)?;
    route.dual_degrees = dual.degrees();
    match betti_numbers_capped(&dual, kind, cap) {
        Ok(table) => {
            route.dual_regularity = table.regularity();
            route.dual_linear = Some(table.is_linear());
            route.eagon_reiner_cm = Some(table.is_linear());
        }
        Err(e) => route.note = Some(e.to_string()),
    }
    match reisner_cm_capped(&sf, kind, cap) {
        Ok(cm) => route.reisner_cm = Some(cm),
        Err(e) => route.note = Some(e.to_string()),
    }
    Ok(route)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn instance(p: [usize; 6]) -> Instance {
        Instance { m: p[0], n: p[1], s1: p[2], t1: p[3], s2: p[4], t2: p[5] }
    }

    #[test]
    fn smallest_instance_verifies() {
        let report = verify(instance([2, 2, 2, 2, 2, 2]), &VerifyOptions::default()).unwrap();
        assert_eq!(report.exit_code(), EXIT_VERIFIED, "{}", report.summary());
        let route = report.oracle_route.as_ref().unwrap();
        assert_eq!(route.matches_families, Some(true));
        assert_eq!(route.dual_degrees.first(), Some(&5));
    }

    #[test]
    fn tiny_budget_exhausts() {
        let options = VerifyOptions { budget: GbBudget::pairs(1), skip_oracle: true, ..Default::default() };
        let report = verify(instance([2, 2, 2, 2, 2, 2]), &options).unwrap();
        assert!(matches!(report.stages.buchberger_ok.verdict, Verdict::NotVerified { cause: Cause::Budget, .. }));
        assert_eq!(report.exit_code(), EXIT_EXHAUSTED);
    }

    #[test]
    fn unresolved_instance_is_unsupported() {
        let report = verify(instance([3, 3, 3, 3, 3, 3]), &VerifyOptions { skip_oracle: true, ..Default::default() })
            .unwrap();
        assert_eq!(report.exit_code(), EXIT_UNSUPPORTED);
    }

    #[test]
    fn prime_field_run_matches_rationals() {
        let q = verify(instance([2, 3, 2, 2, 2, 2]), &VerifyOptions::default()).unwrap();
        let p = verify(
            instance([2, 3, 2, 2, 2, 2]),
            &VerifyOptions { field: FieldKind::PrimeField(32003), ..Default::default() },
        )
        .unwrap();
        assert_eq!(q.exit_code(), EXIT_VERIFIED);
        assert_eq!(p.exit_code(), EXIT_VERIFIED);
        assert_eq!(q.stages.dual_regularity.detail, p.stages.dual_regularity.detail);
        assert_eq!(q.stages.dual_degree.detail["degrees"], json!([7]));
    }

    #[test]
    fn reports_are_deterministic_without_timings() {
        let options = VerifyOptions { skip_oracle: true, ..Default::default() };
        let a = verify(instance([2, 2, 2, 2, 2, 2]), &options).unwrap();
        let b = verify(instance([2, 2, 2, 2, 2, 2]), &options).unwrap();
        assert_eq!(a.without_timings(), b.without_timings());
    }
}
