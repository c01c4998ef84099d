//! Lie algebras given by structure constants, with validation, characteristic
//! series, ideals and the product constructions used throughout the crate.

use std::fmt;
use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, rat, unit_vector, RatMatrix, Rational, Subspace};

/// One line of a bracket table: `[X_i, X_j] = Σ coeff·X_k`, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(Rational, usize)>,
}

impl BracketSpec {
    /// `[X_i, X_j] = X_k`.
    pub fn unit(i: usize, j: usize, k: usize) -> Self {
        BracketSpec { i, j, terms: vec![(rat(1), k)] }
    }
}

/// Outcome of structural validation; violations carry 1-based index triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Ok,
    AntisymmetryViolation(usize, usize, usize),
    JacobiViolation(usize, usize, usize),
    NotNilpotent,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        matches!(self, Validation::Ok)
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validation::Ok => write!(f, "ok"),
            Validation::AntisymmetryViolation(i, j, k) => {
                write!(f, "antisymmetry fails: c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")
            }
            Validation::JacobiViolation(i, j, k) => {
                write!(f, "Jacobi identity fails on (X{i}, X{j}, X{k})")
            }
            Validation::NotNilpotent => write!(f, "lower central series does not reach zero"),
        }
    }
}

/// A point of the dual space `g*`, in coordinates of the dual basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Covector(Vec<Rational>);

impl Covector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Covector(coords)
    }

    pub fn zero(n: usize) -> Self {
        Covector(vec![Rational::zero(); n])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Covector(coords.iter().map(|&x| rat(x)).collect())
    }

    /// Parses `"q1,q2,...,qn"`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Covector(Vec::new()));
        }
        s.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Covector)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn scaled(&self, t: &Rational) -> Covector {
        Covector(self.0.iter().map(|x| x * t).collect())
    }
}

impl Deref for Covector {
    type Target = [Rational];

    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Finite-dimensional Lie algebra over Q with basis `X_1..X_n`.
///
/// `c[(i*n + j)*n + k]` is the coefficient of `X_k` in `[X_i, X_j]` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Rational>,
    name: Option<String>,
}

impl LieAlgebra {
    /// Builds and validates a nilpotent Lie algebra from its nonzero brackets.
    ///
    /// Either orientation `[X_i, X_j]` may be given; the opposite entry is
    /// filled in by antisymmetry. A pair listed twice must agree.
    pub fn new(dim: usize, brackets: &[BracketSpec]) -> Result<Self> {
        let alg = Self::from_brackets_unvalidated(dim, brackets)?;
        match alg.validate() {
            Validation::Ok => Ok(alg),
            v => Err(Error::InvalidAlgebra(v)),
        }
    }

    /// Like [`LieAlgebra::new`] with every bracket `[X_i, X_j] = X_k`.
    pub fn from_unit_brackets(dim: usize, brackets: &[(usize, usize, usize)]) -> Result<Self> {
        let specs: Vec<BracketSpec> =
            brackets.iter().map(|&(i, j, k)| BracketSpec::unit(i, j, k)).collect();
        Self::new(dim, &specs)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![Rational::zero(); dim * dim * dim], name: None }
    }

    /// Antisymmetric fill but no Jacobi or nilpotency check.
    pub fn from_brackets_unvalidated(dim: usize, brackets: &[BracketSpec]) -> Result<Self> {
        let mut alg = Self::abelian(dim);
        let mut seen = std::collections::HashSet::new();
        for b in brackets {
            let in_range = |x: usize| (1..=dim).contains(&x);
            if !in_range(b.i) || !in_range(b.j) || b.terms.iter().any(|&(_, k)| !in_range(k)) {
                return Err(Error::invalid(format!("bracket [X{}, X{}] has an index outside 1..={dim}", b.i, b.j)));
            }
            if b.i == b.j {
                return Err(Error::invalid(format!("bracket [X{0}, X{0}] must vanish", b.i)));
            }
            let mut v = vec![Rational::zero(); dim];
            for (coeff, k) in &b.terms {
                v[k - 1] += coeff;
            }
            let (i, j) = (b.i - 1, b.j - 1);
            if !seen.insert((i.min(j), i.max(j))) {
                let current = alg.basis_bracket(i, j).to_vec();
                if current != v {
                    return Err(Error::invalid(format!("conflicting brackets for [X{}, X{}]", b.i, b.j)));
                }
                continue;
            }
            for k in 0..dim {
                alg.c[(i * dim + j) * dim + k] = v[k].clone();
                alg.c[(j * dim + i) * dim + k] = -v[k].clone();
            }
        }
        Ok(alg)
    }

    /// Raw tensor, no checks at all. Exists so violation reporting can be exercised.
    pub fn from_tensor_unchecked(dim: usize, c: Vec<Rational>) -> Result<Self> {
        Error::check_dim(dim * dim * dim, c.len())?;
        Ok(LieAlgebra { dim, c, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `X_k` in `[X_i, X_j]`, 0-based.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[X_i, X_j]` as a coordinate vector, 0-based.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Nonzero brackets `[X_i, X_j]` with `i > j`, 1-based, in increasing `(i, j)` order.
    pub fn bracket_table(&self) -> Vec<BracketSpec> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                let terms: Vec<(Rational, usize)> = self
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c.clone(), k + 1))
                    .collect();
                if !terms.is_empty() {
                    out.push(BracketSpec { i: i + 1, j: j + 1, terms });
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        Error::check_dim(self.dim, x.len())?;
        Error::check_dim(self.dim, y.len())?;
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                if i == j {
                    continue;
                }
                let coef = xi * yj;
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &coef * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks antisymmetry, then Jacobi on basis triples, then nilpotency.
    /// The first offending triple in lexicographic order is reported.
    pub fn validate(&self) -> Validation {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if *self.structure_constant(i, j, k) != -self.structure_constant(j, i, k).clone() {
                        return Validation::AntisymmetryViolation(i + 1, j + 1, k + 1);
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobi_residual_basis(i, j, k).iter().all(Zero::is_zero) {
                        return Validation::JacobiViolation(i + 1, j + 1, k + 1);
                    }
                }
            }
        }
        let series = self.lower_central_series();
        if series.last().is_some_and(|s| !s.is_zero()) {
            return Validation::NotNilpotent;
        }
        Validation::Ok
    }

    fn jacobi_residual_basis(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let e = |t| unit_vector(self.dim, t);
        self.jacobi_residual(&e(i), &e(j), &e(k)).expect("basis vectors have length dim")
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobi_residual(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vec<Rational>> {
        let a = self.bracket(&self.bracket(x, y)?, z)?;
        let b = self.bracket(&self.bracket(y, z)?, x)?;
        let c = self.bracket(&self.bracket(z, x)?, y)?;
        Ok(a.into_iter().zip(b).zip(c).map(|((a, b), c)| a + b + c).collect())
    }

    /// `[g, s]` for a subspace `s`.
    pub fn bracket_with(&self, s: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            for b in s.basis_vectors() {
                vecs.push(self.bracket(&e, b).expect("dims agree"));
            }
        }
        Subspace::span(self.dim, vecs).expect("dims agree")
    }

    /// `[g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                vecs.push(self.basis_bracket(i, j).to_vec());
            }
        }
        Subspace::span(self.dim, vecs).expect("dims agree")
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, ending at the first term equal to its
    /// predecessor's successor. Ends with `0` exactly when `g` is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        for _ in 0..=self.dim {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_with(last);
            if next == *last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lower_central_series().iter().map(Subspace::dim).collect()
    }

    /// Nilpotency class: 0 for the zero algebra, 1 for abelian, 2 for two-step, …
    pub fn nilpotency_step(&self) -> usize {
        self.lower_central_series().len() - 1
    }

    /// `{x : [x, g] = 0}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // rows indexed by (j, k), columns by i: Σ_i x_i c[i][j][k] = 0
        let mut m = RatMatrix::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m[(j * n + k, i)] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        m.kernel()
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Error::check_dim(self.dim, s.ambient_dim())?;
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            for b in s.basis_vectors() {
                if !s.contains_vector(&self.bracket(&e, b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Heisenberg algebras are exactly those with `[g,g] = z(g)` one-dimensional.
    pub fn is_heisenberg(&self) -> bool {
        let z = self.center();
        z.dim() == 1 && self.derived_subalgebra() == z
    }

    /// `g1 × g2` with basis `(X_1..X_n1, X_{n1+1}..X_{n1+n2})`.
    pub fn direct_product(a: &LieAlgebra, b: &LieAlgebra) -> LieAlgebra {
        let n = a.dim + b.dim;
        let mut out = LieAlgebra::abelian(n);
        for (alg, off) in [(a, 0), (b, a.dim)] {
            for i in 0..alg.dim {
                for j in 0..alg.dim {
                    for k in 0..alg.dim {
                        out.c[((i + off) * n + j + off) * n + k + off] = alg.structure_constant(i, j, k).clone();
                    }
                }
            }
        }
        if let (Some(x), Some(y)) = (a.name(), b.name()) {
            out.name = Some(format!("{x} × {y}"));
        }
        out
    }

    /// `g_D = V ⋊ R` with `V` abelian and `[T, v] = D v`; basis `(v_1..v_m, T)`.
    pub fn semidirect_gd(d: &RatMatrix) -> Result<LieAlgebra> {
        if !d.is_square() {
            return Err(Error::invalid("D must be square"));
        }
        if !d.is_nilpotent() {
            return Err(Error::invalid("D must be nilpotent"));
        }
        let m = d.rows();
        let specs: Vec<BracketSpec> = (0..m)
            .filter_map(|j| {
                let terms: Vec<(Rational, usize)> = (0..m)
                    .filter(|&i| !d[(i, j)].is_zero())
                    .map(|i| (d[(i, j)].clone(), i + 1))
                    .collect();
                (!terms.is_empty()).then_some(BracketSpec { i: m + 1, j: j + 1, terms })
            })
            .collect();
        LieAlgebra::new(m + 1, &specs)
    }

    /// Algebra in the basis given by the columns of `p`:
    /// `[x, y]_new = P⁻¹ [P x, P y]_old`.
    pub fn change_of_basis(&self, p: &RatMatrix) -> Result<LieAlgebra> {
        Error::check_dim(self.dim, p.rows())?;
        let pinv = p.inverse()?;
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| (0..n).map(|i| p[(i, j)].clone()).collect()).collect();
        let mut out = LieAlgebra::abelian(n);
        out.name = self.name.clone();
        for i in 0..n {
            for j in 0..i {
                let v = pinv.mul_vec(&self.bracket(&cols[i], &cols[j])?)?;
                for k in 0..n {
                    out.c[(i * n + j) * n + k] = v[k].clone();
                    out.c[(j * n + i) * n + k] = -v[k].clone();
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn n3() -> LieAlgebra {
        LieAlgebra::from_unit_brackets(3, &[(3, 2, 1)]).unwrap()
    }

    fn n5_4() -> LieAlgebra {
        LieAlgebra::from_unit_brackets(5, &[(5, 4, 3), (5, 3, 2), (4, 3, 1)]).unwrap()
    }

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit_vector(n, i - 1)
    }

    #[test]
    fn bracket_examples() {
        let l = n3();
        assert_eq!(l.bracket(&e(3, 3), &e(3, 2)).unwrap(), e(3, 1));
        assert_eq!(l.bracket(&e(3, 2), &e(3, 3)).unwrap(), e(3, 1).iter().map(|x| -x).collect::<Vec<_>>());
        let x = vec![ratio(1, 2), rat(-3), rat(7)];
        assert!(l.bracket(&x, &x).unwrap().iter().all(Zero::is_zero));
        assert!(l.bracket(&x, &[rat(1)]).is_err());
    }

    #[test]
    fn so3_is_rejected_as_not_nilpotent() {
        let l = LieAlgebra::from_brackets_unvalidated(
            3,
            &[BracketSpec::unit(2, 1, 3), BracketSpec::unit(3, 2, 1), BracketSpec::unit(1, 3, 2)],
        )
        .unwrap();
        assert_eq!(l.validate(), Validation::NotNilpotent);
        assert!(matches!(
            LieAlgebra::from_unit_brackets(3, &[(2, 1, 3), (3, 2, 1), (1, 3, 2)]),
            Err(Error::InvalidAlgebra(Validation::NotNilpotent))
        ));
    }

    #[test]
    fn relabelled_n5_4_bracket_still_satisfies_jacobi() {
        // Replacing [X4,X3] = X1 by X2 in n5_4 gives another nilpotent Lie algebra.
        let l = LieAlgebra::from_unit_brackets(5, &[(5, 4, 3), (5, 3, 2), (4, 3, 2)]);
        assert!(l.is_ok());
    }

    #[test]
    fn jacobi_violation_reports_first_triple() {
        let specs = [
            BracketSpec::unit(5, 4, 3),
            BracketSpec::unit(5, 3, 2),
            BracketSpec::unit(4, 3, 1),
            BracketSpec::unit(3, 2, 1),
        ];
        let l = LieAlgebra::from_brackets_unvalidated(5, &specs).unwrap();
        assert_eq!(l.validate(), Validation::JacobiViolation(2, 4, 5));
    }

    #[test]
    fn antisymmetry_violation() {
        let mut c = vec![rat(0); 8];
        c[(1 * 2 + 0) * 2 + 0] = rat(1); // [X2, X1] = X1 but [X1, X2] = 0
        let l = LieAlgebra::from_tensor_unchecked(2, c).unwrap();
        assert_eq!(l.validate(), Validation::AntisymmetryViolation(1, 2, 1));
    }

    #[test]
    fn construction_errors() {
        assert!(LieAlgebra::from_unit_brackets(3, &[(2, 2, 1)]).is_err());
        assert!(LieAlgebra::from_unit_brackets(3, &[(4, 2, 1)]).is_err());
        assert!(LieAlgebra::from_unit_brackets(3, &[(3, 2, 1), (2, 3, 1)]).is_err());
        // the antisymmetric restatement is consistent
        let specs = [BracketSpec::unit(3, 2, 1), BracketSpec { i: 2, j: 3, terms: vec![(rat(-1), 1)] }];
        assert!(LieAlgebra::new(3, &specs).is_ok());
    }

    #[test]
    fn series_and_center() {
        assert_eq!(LieAlgebra::abelian(4).lcs_dims(), vec![4, 0]);
        assert_eq!(n3().lcs_dims(), vec![3, 1, 0]);
        let f5 = LieAlgebra::from_unit_brackets(5, &[(5, 4, 3), (5, 3, 2), (5, 2, 1)]).unwrap();
        assert_eq!(f5.lcs_dims(), vec![5, 3, 2, 1, 0]);
        assert_eq!(n3().center(), Subspace::span(3, [e(3, 1)]).unwrap());
        assert_eq!(n5_4().center(), Subspace::span(5, [e(5, 1), e(5, 2)]).unwrap());
        assert!(LieAlgebra::abelian(3).center().is_full());
    }

    #[test]
    fn ideals() {
        let l = n3();
        assert!(l.is_ideal(&Subspace::zero(3)).unwrap());
        assert!(l.is_ideal(&Subspace::full(3)).unwrap());
        assert!(l.is_ideal(&l.derived_subalgebra()).unwrap());
        assert!(!l.is_ideal(&Subspace::span(3, [e(3, 2)]).unwrap()).unwrap());
        assert!(l.is_ideal(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn semidirect_with_square_zero_operator_is_two_step() {
        let d = RatMatrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let g = LieAlgebra::semidirect_gd(&d).unwrap();
        assert_eq!(g.nilpotency_step(), 2);
        assert!(LieAlgebra::semidirect_gd(&RatMatrix::identity(2)).is_err());
    }

    #[test]
    fn change_of_basis_by_identity_is_trivial() {
        let l = n5_4();
        assert_eq!(l.change_of_basis(&RatMatrix::identity(5)).unwrap(), l);
        assert!(l.change_of_basis(&RatMatrix::zeros(5, 5)).is_err());
    }

    #[test]
    fn covector_parsing() {
        let xi = Covector::parse("1, -2/3,0").unwrap();
        assert_eq!(xi.coords(), &[rat(1), ratio(-2, 3), rat(0)]);
        assert_eq!(xi.to_string(), "1,-2/3,0");
        assert!(Covector::parse("1,,2").is_err());
    }
}
