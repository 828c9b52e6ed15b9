//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

/// One checked statement. `pass` is always `expected == computed`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub claim_id: String,
    pub statement: String,
    pub parameters: Value,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub runtime_ms: Option<u64>,
}

impl Claim {
    pub fn new(
        claim_id: impl Into<String>,
        statement: impl Into<String>,
        parameters: Value,
        expected: impl Serialize,
        computed: impl Serialize,
    ) -> Self {
        let expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        let computed = serde_json::to_value(computed).unwrap_or(Value::Null);
        Claim {
            claim_id: claim_id.into(),
            statement: statement.into(),
            parameters,
            pass: expected == computed,
            expected,
            computed,
            runtime_ms: None,
        }
    }

    /// A claim whose computation failed with an error.
    pub fn error(claim_id: impl Into<String>, statement: impl Into<String>, parameters: Value, expected: impl Serialize, err: &crate::Error) -> Self {
        Self::new(claim_id, statement, parameters, expected, json!({ "error": err.to_string() }))
    }

    fn sort_key(&self) -> (String, String) {
        (self.claim_id.clone(), param_key(&self.parameters))
    }
}

/// Numbers are zero-padded so that `n=10` sorts after `n=8`.
fn param_key(v: &Value) -> String {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) if i >= 0 => format!("{i:012}"),
            Some(i) => format!("-{:012}", -i),
            None => n.to_string(),
        },
        Value::Array(xs) => xs.iter().map(param_key).collect::<Vec<_>>().join(","),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", param_key(v))).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// A list of claims with the conventions they were computed under.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub parameters: Value,
    pub conventions: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn new(parameters: Value) -> Self {
        VerificationReport {
            schema: SCHEMA,
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            parameters,
            conventions: BTreeMap::new(),
            claims: Vec::new(),
            all_pass: true,
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.all_pass &= claim.pass;
        self.claims.push(claim);
    }

    pub fn extend(&mut self, claims: impl IntoIterator<Item = Claim>) {
        for c in claims {
            self.push(c);
        }
    }

    pub fn convention(&mut self, key: &str, value: &str) {
        self.conventions.insert(key.to_string(), value.to_string());
    }

    /// Sort claims by id and parameters.
    pub fn finish(&mut self) {
        self.claims.sort_by_key(Claim::sort_key);
        self.all_pass = self.claims.iter().all(|c| c.pass);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per claim.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            out.push_str(&format!(
                "{} {} {} expected={} computed={}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.claim_id,
                c.parameters,
                c.expected,
                c.computed
            ));
        }
        let fails = self.failures().count();
        out.push_str(&format!("{} claims, {} failed\n", self.claims.len(), fails));
        out
    }
}

/// Run `f`, recording wall-clock time on every claim it returns when
/// `timed` is set.
pub fn timed(timed: bool, f: impl FnOnce() -> Vec<Claim>) -> Vec<Claim> {
    let start = Instant::now();
    let mut claims = f();
    if timed {
        let ms = start.elapsed().as_millis() as u64;
        for c in &mut claims {
            c.runtime_ms = Some(ms);
        }
    }
    claims
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_equality() {
        let c = Claim::new("x", "", json!({}), 3, 3);
        assert!(c.pass);
        let c = Claim::new("x", "", json!({}), 3, 4);
        assert!(!c.pass);
    }

    #[test]
    fn sorting_is_numeric_aware() {
        let mut r = VerificationReport::new(json!({}));
        r.push(Claim::new("a", "", json!({"n": 10}), 1, 1));
        r.push(Claim::new("a", "", json!({"n": 8}), 1, 2));
        r.finish();
        assert_eq!(r.claims[0].parameters, json!({"n": 8}));
        assert!(!r.all_pass);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
