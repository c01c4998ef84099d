#![allow(dead_code)]

use nilorbit::linalg::{rat, RatMatrix, Rational};
use num_bigint::BigInt;
use rand::Rng;

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
/// Independent of the crate's rational elimination.
pub fn bareiss_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn random_skew<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = rng.gen_range(-bound..=bound);
            m[i][j] = v;
            m[j][i] = -v;
        }
    }
    m
}

pub fn to_rat_matrix(m: &[Vec<i64>]) -> RatMatrix {
    let n = m.first().map_or(0, Vec::len);
    RatMatrix::from_rows(n, m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
}

/// Random invertible rational matrix with small entries.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        Rational::new(BigInt::from(rng.gen_range(-3..=3)), BigInt::from(rng.gen_range(1..=3)))
                    })
                    .collect()
            })
            .collect();
        let m = RatMatrix::from_rows(n, rows).unwrap();
        if m.inverse().is_ok() {
            return m;
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(BigInt::from(rng.gen_range(-20..=20)), BigInt::from(rng.gen_range(1..=5))))
        .collect()
}

pub fn random_small_covector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect()
}
