use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::fieldcore::Domain;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "ERROR")]
    Error,
}

impl Verdict {
    /// Worst of two verdicts: ERROR dominates FAIL dominates PASS.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Error, _) | (_, Error) => Error,
            (Fail, _) | (_, Fail) => Fail,
            _ => Pass,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub bit_order: String,
    pub sign_convention: String,
    pub base_field: String,
}

impl Conventions {
    pub fn fixed() -> Self {
        Conventions {
            bit_order:
                "d = (d1,...,dn) enumerated by the integer sum d_i*2^(i-1); d1 least significant"
                    .into(),
            sign_convention:
                "<<a>> = <1, -a>; <<a1,...,am>> = <1,-a1> (x) ... (x) <1,-am>; signs vanish over F2"
                    .into(),
            base_field: "k = Q with its 2-adic valuation (stands in for C); residue field F2"
                .into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Step {
    pub id: String,
    pub claim: String,
    pub paper_ref: String,
    pub verdict: Verdict,
    pub witness: Value,
}

/// Verification record. Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check: String,
    pub domain: Domain,
    pub n: usize,
    pub conventions: Conventions,
    pub inputs: Vec<String>,
    pub steps: Vec<Step>,
    pub assumptions: Vec<String>,
    pub verdict: Verdict,
    pub version: String,
}

impl Certificate {
    pub fn new(check: &str, domain: Domain, n: usize, inputs: Vec<String>) -> Self {
        Certificate {
            check: check.to_string(),
            domain,
            n,
            conventions: Conventions::fixed(),
            inputs,
            steps: Vec::new(),
            assumptions: Vec::new(),
            verdict: Verdict::Pass,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn push(
        &mut self,
        id: &str,
        claim: &str,
        paper_ref: &str,
        verdict: Verdict,
        witness: Value,
    ) {
        self.steps.push(Step {
            id: id.to_string(),
            claim: claim.to_string(),
            paper_ref: paper_ref.to_string(),
            verdict,
            witness,
        });
        self.verdict = self
            .steps
            .iter()
            .fold(Verdict::Pass, |acc, s| acc.and(s.verdict));
    }

    pub fn step(&self, id: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check:   {}", self.check);
        let _ = writeln!(out, "domain:  {}   n = {}", self.domain, self.n);
        let _ = writeln!(out, "inputs:  {}", self.inputs.join("; "));
        let _ = writeln!(out, "steps:");
        for s in &self.steps {
            let _ = writeln!(out, "  [{}] {} {}", s.verdict, s.id, s.claim);
            let _ = writeln!(out, "         ref: {}", s.paper_ref);
            let w = serde_json::to_string(&s.witness).expect("json value serializes");
            let _ = writeln!(out, "         witness: {w}");
        }
        let _ = writeln!(out, "assumptions:");
        for a in &self.assumptions {
            let _ = writeln!(out, "  - {a}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "version: {}", self.version);
        out
    }
}
