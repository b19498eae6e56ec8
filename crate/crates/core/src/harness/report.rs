use serde::Serialize;
use serde_json::Value;

/// One checked instance. Failing instances carry a witness with the modules
/// involved and both sides of the violated relation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceReport {
    pub inputs: Value,
    pub expected: String,
    pub observed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl InstanceReport {
    /// `witness` is only evaluated when the instance fails.
    pub fn new(
        inputs: Value,
        expected: impl Into<String>,
        observed: Value,
        pass: bool,
        witness: impl FnOnce() -> Value,
    ) -> Self {
        let witness = (!pass).then(witness);
        InstanceReport { inputs, expected: expected.into(), observed, pass, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub instances: Vec<InstanceReport>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, seed: u64, instances: Vec<InstanceReport>) -> Self {
        let all_pass = instances.iter().all(|i| i.pass);
        VerificationReport { suite: suite.into(), seed, instances, all_pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceReport> {
        self.instances.iter().filter(|i| !i.pass)
    }

    pub fn passed(&self) -> usize {
        self.instances.iter().filter(|i| i.pass).count()
    }

    /// Concatenate reports of the same suite, keeping instance order.
    pub fn merge(suite: impl Into<String>, seed: u64, parts: Vec<VerificationReport>) -> Self {
        VerificationReport::new(suite, seed, parts.into_iter().flat_map(|r| r.instances).collect())
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {}/{} instances pass{}",
            self.suite,
            self.passed(),
            self.instances.len(),
            if self.all_pass { "" } else { " (FAILURES)" }
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
