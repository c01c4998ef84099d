use std::fmt;

use super::{RatMatrix, Rational};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so two subspaces are equal exactly when their
/// representations are equal and the derived `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: RatMatrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: RatMatrix::identity(ambient) }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        let m = RatMatrix::from_rows(ambient, rows)?;
        Ok(Self::from_row_space(&m))
    }

    /// Row space of a matrix.
    pub fn from_row_space(m: &RatMatrix) -> Self {
        let (r, pivots) = m.rref();
        let rows = r.row_iter().take(pivots.len()).map(<[Rational]>::to_vec).collect();
        let basis = RatMatrix::from_rows(m.cols(), rows).expect("rows of an rref");
        Subspace { ambient: m.cols(), basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row, in reduced row-echelon form.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows: Vec<Vec<Rational>> = self.basis_vectors().map(<[Rational]>::to_vec).collect();
        rows.push(v.to_vec());
        let m = RatMatrix::from_rows(self.ambient, rows).expect("same ambient");
        m.rank() == self.dim()
    }

    /// `s^⊥ = {ξ ∈ (Q^n)* : ⟨ξ, s⟩ = 0}` in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Error::check_dim(self.ambient, other.ambient)?;
        let rows = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(<[Rational]>::to_vec);
        Subspace::span(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Error::check_dim(self.ambient, other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Error::check_dim(self.ambient, other.ambient)?;
        Ok(other.basis_vectors().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        Error::check_dim(self.ambient, other.ambient)?;
        Ok(self == other)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vecs: Vec<String> = self
            .basis_vectors()
            .map(|v| {
                let c: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", c.join(","))
            })
            .collect();
        write!(f, "span{{{}}}", vecs.join(", "))
    }
}
