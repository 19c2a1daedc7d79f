use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one axiom or identity at one level; failures carry a re-verifiable witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub level: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
}

impl AxiomResult {
    pub fn pass(axiom: &str, level: usize) -> Self {
        AxiomResult { axiom: axiom.into(), level, status: Status::Pass, witness: None }
    }

    pub fn fail(axiom: &str, level: usize, witness: Value) -> Self {
        AxiomResult { axiom: axiom.into(), level, status: Status::Fail, witness: Some(witness) }
    }

    /// Pass when `witness` is `None`.
    pub fn from_witness(axiom: &str, level: usize, witness: Option<Value>) -> Self {
        match witness {
            None => Self::pass(axiom, level),
            Some(w) => Self::fail(axiom, level, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AxiomReport {
    pub entries: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn push(&mut self, r: AxiomResult) {
        self.entries.push(r);
    }

    pub fn extend(&mut self, rs: impl IntoIterator<Item = AxiomResult>) {
        self.entries.extend(rs);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(AxiomResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.entries.iter().filter(|r| !r.passed())
    }

    pub fn find(&self, axiom: &str, level: usize) -> Option<&AxiomResult> {
        self.entries.iter().find(|r| r.axiom == axiom && r.level == level)
    }
}
