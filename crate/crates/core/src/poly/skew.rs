use super::MultiPoly;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;

/// Square matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// The Kirillov form as a matrix of linear forms in the dual coordinates:
/// entry `(i, j)` is `ξ ↦ ⟨ξ, [X_i, X_j]⟩`.
pub fn symbolic_skew_form(l: &LieAlgebra) -> PolyMatrix {
    let n = l.dim();
    (0..n)
        .map(|i| (0..n).map(|j| MultiPoly::linear(l.basis_bracket(i, j))).collect())
        .collect()
}

/// Pfaffians of all principal `order × order` submatrices, subsets taken in
/// lexicographic order.
pub fn sub_pfaffians(form: &PolyMatrix, order: usize) -> Result<Vec<MultiPoly>> {
    let n = form.len();
    if order % 2 == 1 {
        return Err(Error::invalid(format!("sub-Pfaffian order {order} is odd")));
    }
    if order > n {
        return Err(Error::invalid(format!("sub-Pfaffian order {order} exceeds matrix size {n}")));
    }
    let nvars = nvars_of(form);
    Ok(combinations(n, order).map(|idx| pfaffian_on(form, &idx, nvars)).collect())
}

/// Pfaffian of a full skew matrix of polynomials.
pub fn symbolic_pfaffian(form: &PolyMatrix) -> Result<MultiPoly> {
    let n = form.len();
    if n % 2 == 1 {
        return Err(Error::invalid("pfaffian of an odd-order matrix"));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pfaffian_on(form, &idx, nvars_of(form)))
}

fn nvars_of(form: &PolyMatrix) -> usize {
    form.first().and_then(|r| r.first()).map_or(0, MultiPoly::num_vars)
}

fn pfaffian_on(form: &PolyMatrix, idx: &[usize], nvars: usize) -> MultiPoly {
    if idx.is_empty() {
        return MultiPoly::one(nvars);
    }
    let first = idx[0];
    let mut acc = MultiPoly::zero(nvars);
    let mut rest = Vec::with_capacity(idx.len().saturating_sub(2));
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = &form[first][j];
        if a.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(idx[1..].iter().copied().filter(|&k| k != j));
        let sub = pfaffian_on(form, &rest, nvars);
        if sub.is_zero() {
            continue;
        }
        let term = a.mul_unchecked(&sub);
        acc = if pos % 2 == 1 { acc.add_unchecked(&term) } else { acc.add_unchecked(&term.neg()) };
    }
    acc
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - k + i {
                    c[i] += 1;
                    for t in i + 1..k {
                        c[t] = c[t - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        cur = next;
        Some(out)
    })
}

#[cfg(test)]
fn is_zero_matrix(form: &PolyMatrix) -> bool {
    form.iter().all(|r| r.iter().all(|p| p.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn xi(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i - 1)
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = combinations(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn n3_form() {
        let l = LieAlgebra::from_unit_brackets(3, &[(3, 2, 1)]).unwrap();
        let f = symbolic_skew_form(&l);
        assert_eq!(f[1][2], xi(3, 1).neg());
        assert_eq!(f[2][1], xi(3, 1));
        let nonzero = f.iter().flatten().filter(|p| !p.is_zero()).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn abelian_form_vanishes() {
        let f = symbolic_skew_form(&LieAlgebra::abelian(4));
        assert!(is_zero_matrix(&f));
        for order in [2, 4] {
            assert!(sub_pfaffians(&f, order).unwrap().iter().all(MultiPoly::is_zero));
        }
    }

    #[test]
    fn h5_forms_and_pfaffians() {
        let h5 = LieAlgebra::from_unit_brackets(5, &[(5, 4, 1), (3, 2, 1)]).unwrap();
        let f = symbolic_skew_form(&h5);
        let nonzero: Vec<&MultiPoly> = f.iter().flatten().filter(|p| !p.is_zero()).collect();
        assert_eq!(nonzero.len(), 4);
        assert!(nonzero.iter().all(|p| **p == xi(5, 1) || **p == xi(5, 1).neg()));

        let order2 = sub_pfaffians(&f, 2).unwrap();
        let upper: Vec<MultiPoly> =
            combinations(5, 2).map(|ij| f[ij[0]][ij[1]].clone()).collect();
        assert_eq!(order2, upper);

        let pf4 = sub_pfaffians(&f, 4).unwrap();
        assert_eq!(pf4.len(), 5);
        // subsets in lex order: the last one is {2,3,4,5}
        let sq = xi(5, 1).mul(&xi(5, 1)).unwrap();
        assert_eq!(pf4[4], sq);
        assert!(pf4[..4].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn order_errors() {
        let f = symbolic_skew_form(&LieAlgebra::abelian(3));
        assert!(sub_pfaffians(&f, 3).is_err());
        assert!(sub_pfaffians(&f, 4).is_err());
        assert!(symbolic_pfaffian(&f).is_err());
    }

    #[test]
    fn entries_are_linear_without_constant_term() {
        let f5 = LieAlgebra::from_unit_brackets(5, &[(5, 4, 3), (5, 3, 2), (5, 2, 1)]).unwrap();
        for p in symbolic_skew_form(&f5).iter().flatten() {
            assert!(p.total_degree().unwrap_or(0) <= 1);
            assert_eq!(p.constant_term(), rat(0));
        }
    }
}
