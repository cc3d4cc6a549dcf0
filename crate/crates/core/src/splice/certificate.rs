use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Computed,
    VanishesByCorollary,
    AdditivityApplied,
    ConditionsUnverified,
    NonAdditiveWarning,
    Unsupported,
}

impl Status {
    /// Statuses that carry a value.
    pub fn has_value(self) -> bool {
        matches!(
            self,
            Status::Computed | Status::VanishesByCorollary | Status::AdditivityApplied
        )
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// Result that justified a value or verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// `λ(S^3) = 0`
    TrivialManifold,
    /// `λ(Σ(a1,a2,a3)) = (a1-1)(a2-1)(a3-1)/4`
    BrieskornClosedForm,
    /// stored value for a manifold with more than three fibers
    CatalogValue,
    /// `S^3_{1/k}(T(p,q)) = Σ(p, q, |pqk-1|)`
    TorusSurgery,
    /// `S^3_{1/q}(unknot) = S^3`
    UnknotSurgery,
    /// splice of two knots in `S^3` has λ = 0
    SpliceVanishing,
    /// λ is additive under splicing when the eigenvalue conditions hold
    SpliceAdditivity,
    /// `λ(Σ_k) = λ(S^3_{1/k}(K2))`
    KspliceReduction,
    /// `λ(Σ_k) > 0` for torus or 2-bridge `K2`, `k ≠ 0`
    KsplicePositivity,
    /// `λ(S^3_{1/q}(K)) > 0` for torus/2-bridge knots, or small knots with `|q| > 1`
    SurgeryPositivity,
    /// `-1` surgery on a twisted Whitehead double of `T(p,q)`
    WhiteheadDouble,
    /// `Σ(p,q,r,s)` is a splice on which λ is not additive
    NonAdditivity,
}

/// One hypothesis check recorded in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub condition: String,
    pub k: Option<i64>,
    pub verdict: Verdict,
    pub witness: String,
}

/// Outcome of evaluating λ on an expression: a value or a refusal, with the
/// trail of checks and results that produced it.
///
/// A value is present exactly when the status is one of `Computed`,
/// `VanishesByCorollary` or `AdditivityApplied`; the constructors enforce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaCertificate {
    value: Option<u64>,
    status: Status,
    checks: Vec<Check>,
    citations: Vec<Citation>,
    notes: Vec<String>,
}

impl LambdaCertificate {
    pub fn with_value(status: Status, value: u64) -> Self {
        assert!(status.has_value(), "{status} certificates carry no value");
        Self {
            value: Some(value),
            status,
            checks: Vec::new(),
            citations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn without_value(status: Status) -> Self {
        assert!(!status.has_value(), "{status} certificates need a value");
        Self {
            value: None,
            status,
            checks: Vec::new(),
            citations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn unsupported(reason: impl Into<String>) -> Self {
        Self::without_value(Status::Unsupported).note(reason)
    }

    pub fn cite(mut self, c: Citation) -> Self {
        if !self.citations.contains(&c) {
            self.citations.push(c);
        }
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn check(mut self, c: Check) -> Self {
        self.checks.push(c);
        self
    }

    pub fn checks_extend(mut self, cs: impl IntoIterator<Item = Check>) -> Self {
        self.checks.extend(cs);
        self
    }

    pub fn value(&self) -> Option<u64> {
        self.value
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn citations(&self) -> &[Citation] {
        &self.citations
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        match self.value {
            Some(v) => writeln!(s, "value: {v}").unwrap(),
            None => writeln!(s, "value: none").unwrap(),
        }
        writeln!(s, "status: {}", self.status).unwrap();
        if !self.checks.is_empty() {
            writeln!(s, "checks:").unwrap();
            for c in &self.checks {
                let k = c.k.map(|k| format!(" k={k}")).unwrap_or_default();
                writeln!(s, "  [{}]{k} {}: {}", c.verdict, c.condition, c.witness).unwrap();
            }
        }
        if !self.citations.is_empty() {
            let names: Vec<String> = self.citations.iter().map(serde_plain_name).collect();
            writeln!(s, "citations: {}", names.join(", ")).unwrap();
        }
        for n in &self.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        s
    }
}

fn serde_plain_name(c: &Citation) -> String {
    // kebab-case name, same as the JSON form
    let dbg = format!("{c:?}");
    let mut out = String::new();
    for (i, ch) in dbg.chars().enumerate() {
        if ch.is_ascii_uppercase() {
            if i > 0 {
                out.push('-');
            }
            out.push(ch.to_ascii_lowercase());
        } else {
            out.push(ch);
        }
    }
    out
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_plain_name(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_iff_status() {
        for s in [
            Status::Computed,
            Status::VanishesByCorollary,
            Status::AdditivityApplied,
        ] {
            assert_eq!(LambdaCertificate::with_value(s, 3).value(), Some(3));
        }
        assert_eq!(LambdaCertificate::unsupported("x").value(), None);
    }

    #[test]
    #[should_panic]
    fn unverified_cannot_carry_value() {
        LambdaCertificate::with_value(Status::ConditionsUnverified, 1);
    }

    #[test]
    fn citation_names() {
        assert_eq!(Citation::KspliceReduction.to_string(), "ksplice-reduction");
        assert_eq!(Citation::TrivialManifold.to_string(), "trivial-manifold");
    }

    #[test]
    fn text_rendering() {
        let c = LambdaCertificate::with_value(Status::Computed, 17)
            .cite(Citation::BrieskornClosedForm)
            .check(Check {
                condition: "demo".into(),
                k: Some(2),
                verdict: Verdict::Pass,
                witness: "gcd = 1".into(),
            });
        assert_eq!(
            c.to_text(),
            "value: 17\nstatus: Computed\nchecks:\n  [PASS] k=2 demo: gcd = 1\ncitations: brieskorn-closed-form\n"
        );
    }
}
