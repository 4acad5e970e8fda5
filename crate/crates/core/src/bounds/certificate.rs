use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of checking one claim on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub claim: String,
    pub params: Map<String, Value>,
    /// True only if every check passed within `tolerance`.
    pub verified: bool,
    pub evidence: Map<String, Value>,
    pub tolerance: f64,
}

impl BoundCertificate {
    pub fn new(claim: impl Into<String>, tolerance: f64) -> Self {
        BoundCertificate {
            claim: claim.into(),
            params: Map::new(),
            verified: true,
            evidence: Map::new(),
            tolerance,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.into(), to_value(value));
        self
    }

    pub fn evidence(mut self, key: &str, value: impl Serialize) -> Self {
        self.evidence.insert(key.into(), to_value(value));
        self
    }

    /// Records a named check; the certificate is verified only if all are.
    pub fn check(mut self, key: &str, ok: bool) -> Self {
        self.evidence.insert(key.into(), Value::Bool(ok));
        self.verified &= ok;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }
}

/// Values serde_json cannot represent are stored as their error text.
fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).unwrap_or_else(|e| Value::String(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_accumulate() {
        let c = BoundCertificate::new("demo", 1e-9)
            .param("k", 3)
            .check("a", true)
            .evidence("x", 1.5);
        assert!(c.verified);
        let c = c.check("b", false).check("c", true);
        assert!(!c.verified);
        let v: Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["params"]["k"], 3);
        assert_eq!(v["evidence"]["b"], false);
    }
}
