use std::collections::VecDeque;

use serde::Serialize;

use super::MultiPoly;
use crate::error::{Error, Result};

/// Default number of S-polynomial reductions before a Gröbner run gives up.
pub const DEFAULT_EFFORT_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("Gröbner computation exceeded {cap} S-polynomial reductions")]
pub struct EffortExhausted {
    pub cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Member,
    NotMember,
    Unknown,
}

/// Ideal given by generators, all in the same polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal {
    nvars: usize,
    generators: Vec<MultiPoly>,
}

impl PolyIdeal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, generators: Vec<MultiPoly>) -> Result<Self> {
        for g in &generators {
            if g.num_vars() != nvars {
                return Err(Error::invalid(format!(
                    "generator in {} variables for an ideal in {nvars}",
                    g.num_vars()
                )));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(PolyIdeal { nvars, generators })
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// Buchberger's algorithm (grevlex). If a nonzero constant shows up the
    /// run stops early and returns `[1]`.
    pub fn groebner_basis(&self, effort_cap: usize) -> Result<Vec<MultiPoly>, EffortExhausted> {
        buchberger(&self.generators, self.nvars, effort_cap)
    }

    /// Ideal membership by normal form against a Gröbner basis.
    pub fn contains(&self, f: &MultiPoly, effort_cap: usize) -> Result<Membership> {
        if f.num_vars() != self.nvars {
            return Err(Error::invalid("polynomial and ideal live in different rings"));
        }
        Ok(match self.groebner_basis(effort_cap) {
            Ok(gb) if normal_form(f, &gb).is_zero() => Membership::Member,
            Ok(_) => Membership::NotMember,
            Err(_) => Membership::Unknown,
        })
    }
}

/// Decides `f ∈ √I` via the Rabinowitsch trick: `1 ∈ I + (1 - t·f)` in one
/// extra variable `t`.
pub fn radical_membership(ideal: &PolyIdeal, f: &MultiPoly, effort_cap: usize) -> Result<Membership> {
    if f.num_vars() != ideal.nvars {
        return Err(Error::invalid("polynomial and ideal live in different rings"));
    }
    if f.is_zero() {
        return Ok(Membership::Member);
    }
    let n = ideal.nvars + 1;
    let mut gens: Vec<MultiPoly> = ideal.generators.iter().map(|g| g.extend_vars(1)).collect();
    let t = MultiPoly::var(n, n - 1);
    let one = MultiPoly::one(n);
    gens.push(one.add_unchecked(&t.mul_unchecked(&f.extend_vars(1)).neg()));
    Ok(match buchberger(&gens, n, effort_cap) {
        Ok(gb) if gb.iter().any(MultiPoly::is_unit) => Membership::Member,
        Ok(_) => Membership::NotMember,
        Err(_) => Membership::Unknown,
    })
}

/// Full reduction of `f` modulo `basis` (all basis elements nonzero).
pub(crate) fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(f.num_vars());
    while let Some((lm, lc)) = p.leading() {
        let (lm, lc) = (lm.clone(), lc.clone());
        let divisor = basis.iter().find(|g| g.leading().is_some_and(|(gm, _)| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero");
                let shift = gm.quotient_of(&lm);
                p.sub_scaled_shifted(&(&lc / gc), &shift, g);
            }
            None => {
                p.pop_leading();
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let mut s = MultiPoly::zero(f.num_vars());
    s.sub_scaled_shifted(&-fc.recip(), &fm.quotient_of(&l), f);
    s.sub_scaled_shifted(&gc.recip(), &gm.quotient_of(&l), g);
    s
}

fn buchberger(gens: &[MultiPoly], nvars: usize, cap: usize) -> Result<Vec<MultiPoly>, EffortExhausted> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(vec![MultiPoly::one(nvars)]);
        }
        basis.push(r.monic());
    }
    let mut pairs: VecDeque<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut effort = 0;
    while let Some((i, j)) = pairs.pop_front() {
        let (mi, _) = basis[i].leading().expect("nonzero");
        let (mj, _) = basis[j].leading().expect("nonzero");
        if mi.coprime(mj) {
            continue;
        }
        effort += 1;
        if effort > cap {
            return Err(EffortExhausted { cap });
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(vec![MultiPoly::one(nvars)]);
        }
        basis.push(r.monic());
        let k = basis.len() - 1;
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(basis)
}
