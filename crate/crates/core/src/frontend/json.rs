use serde::Serialize;

use crate::classify::{InvariantFingerprint, RigidityReport};
use crate::coadjoint::ClassTVerdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTReport {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl From<&ClassTVerdict> for ClassTReport {
    fn from(v: &ClassTVerdict) -> Self {
        let status = format!("{:?}", v.status());
        match v {
            ClassTVerdict::Holds(c) => ClassTReport { status, witness: None, certificate: Some(format!("{c:?}")) },
            ClassTVerdict::Fails(w) => ClassTReport {
                status,
                witness: Some(w.iter().map(ToString::to_string).collect()),
                certificate: None,
            },
            ClassTVerdict::Unknown { .. } => ClassTReport { status, witness: None, certificate: None },
        }
    }
}

/// The `invariants --json` document; field order is the output key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    pub name: String,
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub center_dim: usize,
    pub index: usize,
    pub real_rank: usize,
    pub two_step: bool,
    pub class_t: ClassTReport,
}

impl InvariantsReport {
    pub fn new(name: impl Into<String>, f: &InvariantFingerprint) -> Self {
        InvariantsReport {
            name: name.into(),
            dim: f.dim,
            lcs_dims: f.lcs_dims.clone(),
            center_dim: f.center_dim,
            index: f.index,
            real_rank: f.real_rank,
            two_step: f.two_step,
            class_t: (&f.class_t).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub a: InvariantsReport,
    pub b: InvariantsReport,
    #[serde(flatten)]
    pub report: RigidityReport,
}

pub fn emit_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}
