//! Invariant fingerprints, the dimension-≤5 classifier and pairwise comparison.

use std::sync::OnceLock;

use serde::Serialize;

use crate::catalog::{self, DIM_LE5_KEYS};
use crate::coadjoint::{self, ClassTOptions, ClassTStatus, ClassTVerdict};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFingerprint {
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub center_dim: usize,
    pub index: usize,
    pub real_rank: usize,
    /// Nilpotency step at most two (abelian algebras included).
    pub two_step: bool,
    pub class_t: ClassTVerdict,
}

impl InvariantFingerprint {
    pub fn class_t_status(&self) -> ClassTStatus {
        self.class_t.status()
    }
}

pub fn fingerprint(l: &LieAlgebra, opts: &ClassTOptions) -> InvariantFingerprint {
    let lcs_dims = l.lcs_dims();
    InvariantFingerprint {
        dim: l.dim(),
        two_step: lcs_dims.len() <= 3,
        center_dim: l.center().dim(),
        index: coadjoint::index(l),
        real_rank: coadjoint::real_rank(l),
        lcs_dims,
        class_t: coadjoint::class_t(l, opts),
    }
}

/// `(lcs_dims, center_dim, index)`, which separates the dimension-≤5 classes.
pub type ClassifyingTuple = (Vec<usize>, usize, usize);

pub fn classifying_tuple(l: &LieAlgebra) -> ClassifyingTuple {
    (l.lcs_dims(), l.center().dim(), coadjoint::index(l))
}

fn reference_tuples() -> &'static [(ClassifyingTuple, &'static str)] {
    static TABLE: OnceLock<Vec<(ClassifyingTuple, &'static str)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        DIM_LE5_KEYS
            .iter()
            .map(|&k| (classifying_tuple(&catalog::make(k).expect("catalog key")), k))
            .collect()
    })
}

/// Catalog key of the isomorphism class of a nilpotent algebra of dimension ≤ 5.
pub fn classify_dim_le5(l: &LieAlgebra) -> Result<&'static str> {
    if l.dim() > 5 {
        return Err(Error::OutOfScope(format!(
            "classification is only available up to dimension 5, got {}",
            l.dim()
        )));
    }
    if l.dim() == 0 {
        return Err(Error::OutOfScope("the zero algebra is not classified".into()));
    }
    let t = classifying_tuple(l);
    let mut hits = reference_tuples().iter().filter(|(r, _)| *r == t).map(|(_, k)| *k);
    match (hits.next(), hits.next()) {
        (Some(k), None) => Ok(k),
        (None, _) => Err(Error::Internal(format!("no catalog class has invariants {t:?}"))),
        (Some(a), Some(b)) => Err(Error::Internal(format!("classes {a} and {b} share invariants {t:?}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComparisonVerdict {
    DistinguishedByInvariants,
    NotDistinguishedHere,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub same_rr: bool,
    pub same_index: bool,
    /// Dimensions differ by an odd number.
    pub parity_obstruction: bool,
    pub separating_invariants: Vec<&'static str>,
    pub verdict: ComparisonVerdict,
}

pub fn compare(a: &LieAlgebra, b: &LieAlgebra, opts: &ClassTOptions) -> RigidityReport {
    compare_fingerprints(&fingerprint(a, opts), &fingerprint(b, opts))
}

pub fn compare_fingerprints(fa: &InvariantFingerprint, fb: &InvariantFingerprint) -> RigidityReport {
    let mut sep = Vec::new();
    if fa.dim != fb.dim {
        sep.push("dim");
    }
    if fa.lcs_dims != fb.lcs_dims {
        sep.push("lcs_dims");
    }
    if fa.center_dim != fb.center_dim {
        sep.push("center_dim");
    }
    if fa.index != fb.index {
        sep.push("index");
    }
    if fa.real_rank != fb.real_rank {
        sep.push("real_rank");
    }
    if fa.two_step != fb.two_step {
        sep.push("two_step");
    }
    // Unknown separates nothing.
    let definite = |s| s != ClassTStatus::Unknown;
    let (sa, sb) = (fa.class_t_status(), fb.class_t_status());
    if definite(sa) && definite(sb) && sa != sb {
        sep.push("class_t");
    }
    let parity_obstruction = fa.dim.abs_diff(fb.dim) % 2 == 1;
    let verdict = if sep.is_empty() && !parity_obstruction {
        ComparisonVerdict::NotDistinguishedHere
    } else {
        ComparisonVerdict::DistinguishedByInvariants
    };
    RigidityReport {
        same_rr: fa.real_rank == fb.real_rank,
        same_index: fa.index == fb.index,
        parity_obstruction,
        separating_invariants: sep,
        verdict,
    }
}
