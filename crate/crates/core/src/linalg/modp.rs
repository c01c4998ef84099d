//! Rank over `Z/p` with `p = 2^61 - 1`.
//!
//! Reduction mod `p` can only lower the rank of a rational matrix, so a
//! modular rank equal to a known upper bound settles the exact rank. Callers
//! use this to skip exact elimination on generic sample points.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    let prod = (a as u128) * (b as u128);
    let lo = (prod as u64) & P;
    let hi = (prod >> 61) as u64;
    let mut s = lo + hi;
    while s >= P {
        s -= P;
    }
    s
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = n % &p;
    let r = if r.is_negative() { r + p } else { r };
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational in `Z/p`, or `None` when `p` divides the denominator.
pub fn reduce(q: &Rational) -> Option<u64> {
    if q.is_zero() {
        return Some(0);
    }
    let d = reduce_int(q.denom());
    if d == 0 {
        return None;
    }
    Some(mul(reduce_int(q.numer()), inv(d)))
}

/// Rank of a dense matrix over `Z/p`; `m` is consumed as scratch space.
pub fn rank(m: &mut [Vec<u64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pinv = inv(m[r][c]);
        for i in r + 1..rows {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul(m[i][c], pinv);
            for j in c..cols {
                let v = mul(f, m[r][j]);
                m[i][j] = sub(m[i][j], v);
            }
        }
        r += 1;
    }
    r
}
