use serde::Serialize;

use super::{
    check_splice_conditions, AmbientKnot, Check, Citation, ConditionCheck, KRange,
    LambdaCertificate, ManifoldExpression, SpliceError, Status, Verdict,
};
use crate::casson::{
    self, brieskorn_lambda, catalog_lambda, positivity_reason, BrieskornTriple, PositivityReason,
};
use crate::knots::{self, KnotDescriptor, KnotStore};

const APOLY_CONVENTION: &str = "A-polynomials exclude the abelian factor L - 1 for nontrivial \
     knots (the unknot's is exactly L - 1); conditions are checked against that form";

/// Evaluates λ on manifold expressions against a loaded knot store.
#[derive(Debug, Clone, Copy)]
pub struct Evaluator<'a> {
    store: &'a KnotStore,
    krange: Option<KRange>,
}

impl<'a> Evaluator<'a> {
    pub fn new(store: &'a KnotStore) -> Self {
        Self {
            store,
            krange: None,
        }
    }

    /// Fixes the `k` range for condition checks instead of the per-pair default.
    pub fn with_krange(mut self, krange: KRange) -> Self {
        self.krange = Some(krange);
        self
    }

    pub fn store(&self) -> &'a KnotStore {
        self.store
    }

    pub fn krange_for(
        &self,
        k1: &KnotDescriptor,
        k2: &KnotDescriptor,
    ) -> Result<KRange, SpliceError> {
        match self.krange {
            Some(r) => Ok(r),
            None => Ok(KRange::default_for(k1, k2, self.store)?),
        }
    }

    pub fn lambda(&self, expr: &ManifoldExpression) -> Result<LambdaCertificate, SpliceError> {
        match expr {
            ManifoldExpression::S3 => {
                Ok(LambdaCertificate::with_value(Status::Computed, 0)
                    .cite(Citation::TrivialManifold))
            }
            ManifoldExpression::Brieskorn(t) => Ok(brieskorn_certificate(t)?),
            ManifoldExpression::Catalog(name) => {
                let v = catalog_lambda(name)?;
                let cite = if casson::catalog_names().any(|n| n == name.as_str()) {
                    Citation::CatalogValue
                } else {
                    Citation::BrieskornClosedForm
                };
                Ok(LambdaCertificate::with_value(Status::Computed, v).cite(cite))
            }
            ManifoldExpression::Surgery {
                numerator,
                denominator,
                knot,
            } => self.surgery_lambda(*numerator, *denominator, knot),
            ManifoldExpression::Splice(a, b) => self.splice_lambda(a, b),
            ManifoldExpression::KSplice { k, knot1, knot2 } => {
                self.ksplice_lambda(*k, knot1, knot2)
            }
        }
    }

    fn surgery_lambda(
        &self,
        numerator: i64,
        denominator: i64,
        knot: &KnotDescriptor,
    ) -> Result<LambdaCertificate, SpliceError> {
        knots::record(knot, self.store)?;
        if denominator == 0 {
            return Ok(LambdaCertificate::unsupported(
                "slope 1/0 is the trivial filling; only 1/q slopes with q ≠ 0 are evaluated",
            ));
        }
        if numerator.abs() != 1 {
            return Ok(LambdaCertificate::unsupported(format!(
                "slope {numerator}/{denominator} does not give a homology sphere; only 1/q slopes are evaluated"
            )));
        }
        let q = numerator * denominator;
        match knot {
            KnotDescriptor::Unknot => Ok(LambdaCertificate::with_value(Status::Computed, 0)
                .cite(Citation::UnknotSurgery)
                .cite(Citation::TrivialManifold)),
            KnotDescriptor::Torus(t) => {
                let (p, r) = (i64::from(t.p()), i64::from(t.q()));
                let (triple, v) = casson::torus_surgery_triple(p, r, q)?;
                let mut cert = LambdaCertificate::with_value(Status::Computed, v)
                    .cite(Citation::TorusSurgery)
                    .cite(Citation::BrieskornClosedForm)
                    .note(format!("S^3_{{1/{q}}}({knot}) = {triple}"));
                if q < 0 {
                    cert = cert.note(
                        "negative q: the third fiber is |pqq' - 1|; λ does not depend on orientation",
                    );
                }
                Ok(cert)
            }
            _ => {
                let mut cert = LambdaCertificate::unsupported(format!(
                    "no closed form for 1/q surgery on {knot}"
                ));
                if let Some(reason) = positivity_reason(knot, q, self.store)? {
                    cert = cert
                        .cite(Citation::SurgeryPositivity)
                        .note(positivity_note(reason, q));
                }
                Ok(cert)
            }
        }
    }

    /// λ of the spliced sum of two knots in homology spheres.
    pub fn splice_lambda(
        &self,
        s1: &AmbientKnot,
        s2: &AmbientKnot,
    ) -> Result<LambdaCertificate, SpliceError> {
        for side in [s1, s2] {
            if let AmbientKnot::S3(k) = side {
                knots::record(k, self.store)?;
            }
        }
        match (s1, s2) {
            (AmbientKnot::S3(_), AmbientKnot::S3(_)) => Ok(LambdaCertificate::with_value(
                Status::VanishesByCorollary,
                0,
            )
            .cite(Citation::SpliceVanishing)
            .note(
                "every irreducible character of a splice of two knots in S^3 lies on a \
                 positive-dimensional component, so none are isolated",
            )),
            (
                AmbientKnot::SingularFiber { .. },
                AmbientKnot::SingularFiber { .. },
            ) => match seifert_splice_pattern(s1, s2) {
                Some(pqrs) => Ok(self.non_additive_certificate(s1, s2, pqrs)?),
                None => Ok(LambdaCertificate::unsupported(
                    "splices of singular fibers are only evaluated for the Σ(p,q,rs) / Σ(pq,r,s) pattern",
                )),
            },
            _ => self.additivity_attempt(s1, s2),
        }
    }

    /// Mixed splice: one side a knot in `S^3`, the other a singular fiber.
    fn additivity_attempt(
        &self,
        s1: &AmbientKnot,
        s2: &AmbientKnot,
    ) -> Result<LambdaCertificate, SpliceError> {
        let mut checks = Vec::new();
        checks.extend(self.side_condition(s1, s2, "(i)")?);
        checks.extend(self.side_condition(s2, s1, "(ii)")?);
        let all_pass = checks.iter().all(|c| c.verdict == Verdict::Pass);
        if all_pass {
            let v = self.lambda(&s1.ambient())?.value().unwrap()
                + self.lambda(&s2.ambient())?.value().unwrap();
            return Ok(LambdaCertificate::with_value(Status::AdditivityApplied, v)
                .checks_extend(checks)
                .cite(Citation::SpliceAdditivity));
        }
        Ok(
            LambdaCertificate::without_value(Status::ConditionsUnverified)
                .checks_extend(checks)
                .cite(Citation::SpliceAdditivity)
                .note("additivity needs every condition to PASS; no value is inferred otherwise"),
        )
    }

    /// Condition on the isolated characters of `side`'s ambient sphere against
    /// the Alexander polynomial of the `other` knot.
    fn side_condition(
        &self,
        side: &AmbientKnot,
        other: &AmbientKnot,
        label: &str,
    ) -> Result<Vec<Check>, SpliceError> {
        match side {
            AmbientKnot::S3(_) => Ok(vec![Check {
                condition: format!("{label} characters of the S^3 side"),
                k: None,
                verdict: Verdict::Pass,
                witness: "S^3 has no irreducible characters; the condition is vacuous".into(),
            }]),
            AmbientKnot::SingularFiber { .. } => {
                let krange = self
                    .krange
                    .unwrap_or(KRange::symmetric(KRange::DEFAULT_BOUND)?);
                Ok(krange
                    .values()
                    .map(|k| Check {
                        condition: format!("{label} A({side}) vs Δ({other})"),
                        k: Some(k),
                        verdict: Verdict::Unknown,
                        witness: format!("no A-polynomial for the fiber exterior of {side}"),
                    })
                    .collect())
            }
        }
    }

    fn non_additive_certificate(
        &self,
        s1: &AmbientKnot,
        s2: &AmbientKnot,
        pqrs: [u64; 4],
    ) -> Result<LambdaCertificate, SpliceError> {
        let [p, q, r, s] = pqrs;
        let l1 = self.lambda(&s1.ambient())?.value().unwrap();
        let l2 = self.lambda(&s2.ambient())?.value().unwrap();
        let name = format!("Sigma({p},{q},{r},{s})");
        let mut cert = LambdaCertificate::without_value(Status::NonAdditiveWarning)
            .cite(Citation::NonAdditivity);
        for (label, side, other) in [("(i)", s1, s2), ("(ii)", s2, s1)] {
            cert = cert.check(Check {
                condition: format!("{label} A({side}) vs Δ({other})"),
                k: None,
                verdict: Verdict::Unknown,
                witness: "no A-polynomial data for singular-fiber exteriors".into(),
            });
        }
        cert = cert.note(format!(
            "this splice is the Seifert fibered sphere Σ({p},{q},{r},{s}); λ is not additive on this family"
        ));
        match catalog_lambda(&name) {
            Ok(v) => {
                cert = cert.cite(Citation::CatalogValue).note(format!(
                    "λ(Σ({p},{q},{r},{s})) = {v} (catalog) while λ({}) + λ({}) = {l1} + {l2} = {}; {v} ≠ {}",
                    s1.ambient_label(),
                    s2.ambient_label(),
                    l1 + l2,
                    l1 + l2
                ));
            }
            Err(_) => {
                cert = cert.note(format!(
                    "the naive sum λ({}) + λ({}) = {} is not a valid answer here",
                    s1.ambient_label(),
                    s2.ambient_label(),
                    l1 + l2
                ));
            }
        }
        Ok(cert)
    }

    /// λ of the `k`-spliced sum of two knots in `S^3`.
    pub fn ksplice_lambda(
        &self,
        k: i64,
        k1: &KnotDescriptor,
        k2: &KnotDescriptor,
    ) -> Result<LambdaCertificate, SpliceError> {
        if k == 0 {
            let cert =
                self.splice_lambda(&AmbientKnot::S3(k1.clone()), &AmbientKnot::S3(k2.clone()))?;
            return Ok(cert.note("k = 0 is the ordinary spliced sum"));
        }
        let delta1 = knots::alexander(k1, self.store)?;
        knots::record(k2, self.store)?;
        let at_one = delta1.eval(&1.into());

        let checks = [
            Check {
                condition: "(i) characters of the S^3 side".into(),
                k: Some(k),
                verdict: Verdict::Pass,
                witness: "S^3 has no irreducible characters; the condition is vacuous".into(),
            },
            Check {
                condition: format!("(ii) longitude eigenvalues of S^3_{{1/{k}}}({k2}) vs Δ({k1})"),
                k: Some(k),
                verdict: Verdict::Pass,
                witness: format!(
                    "irreducible characters send the longitude to eigenvalues ±1, and Δ({k1})(1) = {at_one} ≠ 0"
                ),
            },
        ];

        let surgery = self.lambda(&ManifoldExpression::Surgery {
            numerator: 1,
            denominator: k,
            knot: k2.clone(),
        })?;
        let reason = positivity_reason(k2, k, self.store)?;
        let mut cert = match surgery.value() {
            Some(v) => {
                if reason == Some(PositivityReason::TorusOrTwoBridge) {
                    assert!(v > 0, "positivity guarantee violated for k={k}, {k2}");
                }
                LambdaCertificate::with_value(Status::AdditivityApplied, v)
            }
            None => LambdaCertificate::without_value(Status::ConditionsUnverified).note(format!(
                "reduced to λ(S^3_{{1/{k}}}({k2})), which has no closed form here"
            )),
        };
        cert = cert
            .checks_extend(checks)
            .cite(Citation::KspliceReduction)
            .cite(Citation::SpliceAdditivity);
        for c in surgery.citations() {
            cert = cert.cite(*c);
        }
        for n in surgery.notes() {
            cert = cert.note(n.clone());
        }
        if reason == Some(PositivityReason::TorusOrTwoBridge) {
            cert = cert.cite(Citation::KsplicePositivity).note(format!(
                "λ(Σ_{k}) > 0 since {k2} is a torus or 2-bridge knot"
            ));
        }
        if let (KnotDescriptor::Torus(t1), KnotDescriptor::Torus(t2)) = (k1, k2) {
            if (t1.p(), t1.q()) == (2, 3) && k > 0 {
                let wd = casson::whitehead_double_surgery_lambda(
                    i64::from(t2.p()),
                    i64::from(t2.q()),
                    k,
                )?;
                debug_assert_eq!(Some(wd), cert.value());
                cert = cert.cite(Citation::WhiteheadDouble).note(format!(
                    "with K1 the trefoil, Σ_{k} is -1 surgery on the -{k}-twisted Whitehead double of {k2}; (p-1)(q-1)(pqk-2)/4 = {wd}"
                ));
            }
        }
        Ok(cert.note(APOLY_CONVENTION))
    }

    /// Runs both directions of the splice conditions for two knots in `S^3`.
    pub fn check_conditions(
        &self,
        k1: &KnotDescriptor,
        k2: &KnotDescriptor,
    ) -> Result<(KRange, Vec<ConditionCheck>, Vec<ConditionCheck>), SpliceError> {
        let krange = self.krange_for(k1, k2)?;
        let first = check_splice_conditions(k1, k2, &krange, self.store)?;
        let second = check_splice_conditions(k2, k1, &krange, self.store)?;
        Ok((krange, first, second))
    }
}

fn brieskorn_certificate(t: &BrieskornTriple) -> Result<LambdaCertificate, SpliceError> {
    Ok(
        LambdaCertificate::with_value(Status::Computed, brieskorn_lambda(t)?)
            .cite(Citation::BrieskornClosedForm),
    )
}

fn positivity_note(reason: PositivityReason, q: i64) -> String {
    match reason {
        PositivityReason::TorusOrTwoBridge => {
            format!("λ(S^3_{{1/{q}}}) > 0 is guaranteed for torus and 2-bridge knots")
        }
        PositivityReason::SmallKnot => {
            format!("λ(S^3_{{1/{q}}}) > 0 is guaranteed for small nontrivial knots when |q| > 1")
        }
    }
}

impl AmbientKnot {
    fn ambient_label(&self) -> String {
        match self {
            AmbientKnot::S3(_) => "S^3".into(),
            AmbientKnot::SingularFiber { triple, .. } => triple.to_string(),
        }
    }
}

/// Recognizes the splice of `Σ(p,q,rs)` along its `rs` fiber with
/// `Σ(pq,r,s)` along its `pq` fiber, returning `(p,q,r,s)` sorted.
pub fn seifert_splice_pattern(s1: &AmbientKnot, s2: &AmbientKnot) -> Option<[u64; 4]> {
    let split = |side: &AmbientKnot| -> Option<(u64, [u64; 2])> {
        let AmbientKnot::SingularFiber { triple, index } = side else {
            return None;
        };
        let n = triple.fiber_order(*index)?;
        let rest: Vec<u64> = triple.orders().into_iter().filter(|&a| a != n).collect();
        Some((n, [rest[0], rest[1]]))
    };
    let (n1, [p, q]) = split(s1)?;
    let (n2, [r, s]) = split(s2)?;
    if n1 == r * s && n2 == p * q {
        let mut v = [p, q, r, s];
        v.sort_unstable();
        Some(v)
    } else {
        None
    }
}

/// The Σ(2,3,5,7) instance where λ fails to be additive under splicing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonAdditivityReport {
    pub manifold: String,
    pub lhs: u64,
    pub summands: Vec<(String, u64)>,
    pub rhs: u64,
    pub equal: bool,
    pub configuration: String,
    pub splice_expression: String,
}

pub fn non_additivity_demo() -> NonAdditivityReport {
    let (p, q, r, s) = (2i64, 3i64, 5i64, 7i64);
    let t1 = BrieskornTriple::new(p, q, r * s).expect("valid triple");
    let t2 = BrieskornTriple::new(p * q, r, s).expect("valid triple");
    let lhs = catalog_lambda("Sigma(2,3,5,7)").expect("cataloged");
    let l1 = brieskorn_lambda(&t1).expect("small triple");
    let l2 = brieskorn_lambda(&t2).expect("small triple");
    let side1 = AmbientKnot::fiber_of_order(t1, (r * s) as u64).unwrap();
    let side2 = AmbientKnot::fiber_of_order(t2, (p * q) as u64).unwrap();
    NonAdditivityReport {
        manifold: "Σ(2,3,5,7)".into(),
        lhs,
        summands: vec![(t1.to_string(), l1), (t2.to_string(), l2)],
        rhs: l1 + l2,
        equal: lhs == l1 + l2,
        configuration: format!(
            "spliced sum of {t1} and {t2} along the {}-singular fiber in the first and the {}-singular fiber in the second",
            r * s,
            p * q
        ),
        splice_expression: ManifoldExpression::Splice(side1, side2).to_string(),
    }
}
