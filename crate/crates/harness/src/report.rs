//! Theorem reports and their JSON and text renderings.

use std::fmt::Write as _;

use serde::Serialize;
use zhou_core::{ElementSubset, FiniteRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    /// The statement or a documented example is refuted by a concrete instance.
    Counterexample,
    /// The computed value differs from a stated value (reported, not asserted).
    Divergence,
    /// The instance exceeds a configured size or budget limit.
    Refused,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Counterexample => "counterexample",
            Verdict::Divergence => "divergence",
            Verdict::Refused => "refused",
        }
    }
}

/// How a confirmation should be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// A claim about all rings: a counterexample refutes it, confirmations are evidence only.
    Universal,
    /// A claim that some ring behaves a certain way: one confirming instance proves it.
    Existential,
    /// An exact claim about the listed rings.
    Exact,
}

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub ring: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<(String, String)>,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<(String, String)>,
}

impl Instance {
    pub fn new(ring: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> Instance {
        Instance {
            ring: ring.into(),
            params: Vec::new(),
            verdict,
            detail: detail.into(),
            claimed: None,
            computed: None,
            witness: Vec::new(),
        }
    }

    /// Confirmed when `ok`, otherwise `failure`.
    pub fn check(ring: impl Into<String>, ok: bool, failure: Verdict, detail: impl Into<String>) -> Instance {
        Instance::new(ring, if ok { Verdict::Confirmed } else { failure }, detail)
    }

    pub fn param(mut self, k: impl Into<String>, v: impl Into<String>) -> Instance {
        self.params.push((k.into(), v.into()));
        self
    }

    pub fn values(mut self, claimed: impl Into<String>, computed: impl Into<String>) -> Instance {
        self.claimed = Some(claimed.into());
        self.computed = Some(computed.into());
        self
    }

    pub fn witness(mut self, w: Vec<(String, String)>) -> Instance {
        self.witness = w;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    pub scope: Scope,
    pub verdict: Verdict,
    /// Instances examined whose hypotheses did not hold.
    #[serde(skip_serializing_if = "is_zero")]
    pub vacuous: usize,
    pub instances: Vec<Instance>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl TheoremReport {
    pub fn new(id: impl Into<String>, statement: impl Into<String>, scope: Scope) -> TheoremReport {
        TheoremReport {
            id: id.into(),
            statement: statement.into(),
            scope,
            verdict: Verdict::Confirmed,
            vacuous: 0,
            instances: Vec::new(),
        }
    }

    pub fn push(&mut self, i: Instance) {
        self.instances.push(i);
    }

    pub fn with(mut self, items: impl IntoIterator<Item = Instance>) -> TheoremReport {
        self.instances.extend(items);
        self.finish()
    }

    /// Aggregates instance verdicts.
    ///
    /// Existential reports are confirmed by any confirming instance; otherwise the
    /// worst of counterexample, divergence wins, and refusals alone give `Refused`.
    pub fn finish(mut self) -> TheoremReport {
        let has = |v| self.instances.iter().any(|i| i.verdict == v);
        self.verdict = if self.scope == Scope::Existential && has(Verdict::Confirmed) {
            Verdict::Confirmed
        } else if has(Verdict::Counterexample) {
            Verdict::Counterexample
        } else if has(Verdict::Divergence) {
            Verdict::Divergence
        } else if self.scope == Scope::Exact && has(Verdict::Refused) {
            Verdict::Refused
        } else if has(Verdict::Confirmed) {
            Verdict::Confirmed
        } else if has(Verdict::Refused) {
            Verdict::Refused
        } else if self.scope == Scope::Existential {
            Verdict::Counterexample
        } else {
            Verdict::Confirmed
        };
        self
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.instances.iter().filter(|i| i.verdict == v).count()
    }
}

pub fn to_json(reports: &[TheoremReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Human-readable rendering. Confirmed instances are summarized by count.
pub fn to_text(reports: &[TheoremReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "[{}] {}: {}", r.verdict.name(), r.id, r.statement);
        let mut counts = format!("    {} confirmed", r.count(Verdict::Confirmed));
        for v in [Verdict::Counterexample, Verdict::Divergence, Verdict::Refused] {
            if r.count(v) > 0 {
                let _ = write!(counts, ", {} {}", r.count(v), v.name());
            }
        }
        if r.vacuous > 0 {
            let _ = write!(counts, ", {} vacuous", r.vacuous);
        }
        let _ = writeln!(s, "{counts}");
        for i in r.instances.iter().filter(|i| i.verdict != Verdict::Confirmed || r.scope == Scope::Exact) {
            let mut line = format!("    {} {}", i.verdict.name(), i.ring);
            for (k, v) in &i.params {
                let _ = write!(line, " {k}={v}");
            }
            if !i.detail.is_empty() {
                let _ = write!(line, ": {}", i.detail);
            }
            let _ = writeln!(s, "{line}");
            if let (Some(c), Some(v)) = (&i.claimed, &i.computed) {
                let _ = writeln!(s, "        stated   {c}");
                let _ = writeln!(s, "        computed {v}");
            }
            if !i.witness.is_empty() {
                let w: Vec<String> = i.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(s, "        witness  {}", w.join(", "));
            }
        }
    }
    s
}

/// `{a,b,…}` in element-index order.
pub fn set(r: &FiniteRing, s: &ElementSubset) -> String {
    r.format_set(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation() {
        let c = |v| Instance::new("R", v, "");
        let rep = TheoremReport::new("t", "s", Scope::Universal).with([c(Verdict::Confirmed), c(Verdict::Refused)]);
        assert_eq!(rep.verdict, Verdict::Confirmed);
        let rep = TheoremReport::new("t", "s", Scope::Exact).with([c(Verdict::Confirmed), c(Verdict::Refused)]);
        assert_eq!(rep.verdict, Verdict::Refused);
        let rep = TheoremReport::new("t", "s", Scope::Universal).with([c(Verdict::Divergence), c(Verdict::Counterexample)]);
        assert_eq!(rep.verdict, Verdict::Counterexample);
        let rep = TheoremReport::new("t", "s", Scope::Existential).with([c(Verdict::Counterexample), c(Verdict::Confirmed)]);
        assert_eq!(rep.verdict, Verdict::Confirmed);
        assert_eq!(TheoremReport::new("t", "s", Scope::Existential).finish().verdict, Verdict::Counterexample);
    }

    #[test]
    fn renderings() {
        let rep = TheoremReport::new("demo.id", "a statement", Scope::Exact)
            .with([Instance::new("Z4", Verdict::Divergence, "differs").values("{0}", "{0,2}").param("e", "1")]);
        let text = to_text(std::slice::from_ref(&rep));
        assert_eq!(
            text,
            "[divergence] demo.id: a statement\n    0 confirmed, 1 divergence\n    divergence Z4 e=1: differs\n        stated   {0}\n        computed {0,2}\n"
        );
        let v: serde_json::Value = serde_json::from_str(&to_json(&[rep])).unwrap();
        assert_eq!(v[0]["verdict"], "divergence");
        assert_eq!(v[0]["scope"], "exact");
        assert_eq!(v[0]["instances"][0]["params"][0][1], "1");
        assert!(v[0].get("vacuous").is_none());
    }
}
