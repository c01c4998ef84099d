//! Kirillov-form analytics: isotropy subalgebras `g(ξ)`, orbit dimensions,
//! index, real rank, flatness, class-T verdicts and orbit-dimension sampling.
//!
//! The Kirillov form at `ξ` is the skew matrix `B_ξ(i, j) = ⟨ξ, [X_i, X_j]⟩`;
//! its kernel is `g(ξ)` and its rank is the dimension of the orbit through `ξ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Covector, LieAlgebra};
use crate::linalg::{dot, modp, RatMatrix, Rational, Subspace};
use crate::poly::{radical_membership, sub_pfaffians, symbolic_skew_form, Membership, MultiPoly, PolyIdeal, DEFAULT_EFFORT_CAP};

/// Largest dimension for which the class-T witness search walks the full
/// integer grid `{-2..2}^n`.
pub const GRID_MAX_DIM: usize = 7;
/// Random covectors use numerators in `[-SAMPLE_NUMERATOR, SAMPLE_NUMERATOR]`.
pub const SAMPLE_NUMERATOR: i64 = 1_000_000;
/// ...and denominators in `[1, SAMPLE_DENOMINATOR]`.
pub const SAMPLE_DENOMINATOR: i64 = 1_000;

const SAMPLE_CHUNKS: usize = 16;

pub fn kirillov_matrix(l: &LieAlgebra, xi: &[Rational]) -> Result<RatMatrix> {
    let n = l.dim();
    Error::check_dim(n, xi.len())?;
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let v = dot(xi, l.basis_bracket(i, j));
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// `g(ξ) = {X : ⟨ξ, [X, g]⟩ = 0}`.
pub fn isotropy(l: &LieAlgebra, xi: &[Rational]) -> Result<Subspace> {
    Ok(kirillov_matrix(l, xi)?.kernel())
}

pub fn orbit_dim(l: &LieAlgebra, xi: &[Rational]) -> Result<usize> {
    Ok(kirillov_matrix(l, xi)?.rank())
}

/// Rank of the Kirillov form over the field of rational functions in `ξ`,
/// together with its nonzero principal sub-Pfaffians of that order.
#[derive(Clone, Debug)]
pub struct GenericRank {
    pub rank: usize,
    pub top_pfaffians: Vec<MultiPoly>,
}

/// The rank of a skew matrix is the largest order of a nonvanishing principal
/// sub-Pfaffian, and once every sub-Pfaffian of some order vanishes so do all
/// larger ones; orders are scanned upward until that happens.
pub fn generic_rank(l: &LieAlgebra) -> GenericRank {
    let form = symbolic_skew_form(l);
    let mut best = GenericRank { rank: 0, top_pfaffians: Vec::new() };
    let mut order = 2;
    while order <= l.dim() {
        let nonzero: Vec<MultiPoly> = sub_pfaffians(&form, order)
            .expect("even order within bounds")
            .into_iter()
            .filter(|p| !p.is_zero())
            .collect();
        if nonzero.is_empty() {
            break;
        }
        best = GenericRank { rank: order, top_pfaffians: nonzero };
        order += 2;
    }
    best
}

/// `ind g = min_ξ dim g(ξ) = dim g − generic rank`.
pub fn index(l: &LieAlgebra) -> usize {
    l.dim() - generic_rank(l).rank
}

/// `dim [g,g]^⊥ = dim g − dim [g,g]`.
pub fn real_rank(l: &LieAlgebra) -> usize {
    l.dim() - l.derived_subalgebra().dim()
}

/// `ξ + g(ξ)^⊥`, the orbit of a flat covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatOrbit {
    pub base: Covector,
    pub directions: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub xi: Covector,
    pub isotropy: Subspace,
    pub orbit_dim: usize,
    pub is_flat: bool,
    pub flat_orbit: Option<FlatOrbit>,
}

/// Flatness is tested as "`g(ξ)` is an ideal", which is equivalent to the
/// orbit being the affine space `ξ + g(ξ)^⊥`.
pub fn orbit_report(l: &LieAlgebra, xi: &Covector) -> Result<OrbitReport> {
    let iso = isotropy(l, xi)?;
    let is_flat = l.is_ideal(&iso)?;
    let flat_orbit = is_flat.then(|| FlatOrbit { base: xi.clone(), directions: iso.annihilator() });
    Ok(OrbitReport { xi: xi.clone(), orbit_dim: l.dim() - iso.dim(), isotropy: iso, is_flat, flat_orbit })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    VacuousAbelian,
    RankTwoFastPath,
    RadicalCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassTVerdict {
    Holds(Certificate),
    Fails(Covector),
    Unknown { samples_tried: usize },
}

impl ClassTVerdict {
    pub fn status(&self) -> ClassTStatus {
        match self {
            ClassTVerdict::Holds(_) => ClassTStatus::Holds,
            ClassTVerdict::Fails(_) => ClassTStatus::Fails,
            ClassTVerdict::Unknown { .. } => ClassTStatus::Unknown,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, ClassTVerdict::Holds(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassTStatus {
    Holds,
    Fails,
    Unknown,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassTOptions {
    /// Number of random covectors tried after the grid.
    pub budget: usize,
    pub seed: u64,
    /// S-polynomial reductions allowed per radical-membership test.
    pub effort_cap: usize,
}

impl Default for ClassTOptions {
    fn default() -> Self {
        ClassTOptions { budget: 2000, seed: 0, effort_cap: DEFAULT_EFFORT_CAP }
    }
}

/// Class T: every `ξ ∉ [g,g]^⊥` has `dim g(ξ) = ind g`.
///
/// Pipeline: abelian algebras hold vacuously; generic rank 2 holds because a
/// rank drop forces `B_ξ = 0`; then a witness search over the integer grid
/// (small dimensions), inside annihilators of characteristic ideals, and over
/// seeded random covectors; finally a radical
/// certificate that every linear form on `[g,g]` vanishes on the zero set of
/// the top-order sub-Pfaffians. Anything left is `Unknown`.
pub fn class_t(l: &LieAlgebra, opts: &ClassTOptions) -> ClassTVerdict {
    if l.is_abelian() {
        return ClassTVerdict::Holds(Certificate::VacuousAbelian);
    }
    let generic = generic_rank(l);
    if generic.rank == 2 {
        return ClassTVerdict::Holds(Certificate::RankTwoFastPath);
    }
    let form = ModPForm::new(l);
    let mut tried = 0;
    if l.dim() <= GRID_MAX_DIM {
        let (found, count) = grid_witness(l, &form, generic.rank);
        tried += count;
        if let Some(w) = found {
            return ClassTVerdict::Fails(w);
        }
    }
    let (found, count) = structural_witness(l, &form, generic.rank, opts.seed);
    tried += count;
    if let Some(w) = found {
        return ClassTVerdict::Fails(w);
    }
    if let Some(w) = random_witness(l, &form, generic.rank, opts.budget, opts.seed) {
        return ClassTVerdict::Fails(w);
    }
    tried += opts.budget;

    let ideal = PolyIdeal::new(l.dim(), generic.top_pfaffians).expect("same ring");
    let derived = l.derived_subalgebra();
    let certified = derived.basis_vectors().all(|b| {
        matches!(radical_membership(&ideal, &MultiPoly::linear(b), opts.effort_cap), Ok(Membership::Member))
    });
    if certified {
        ClassTVerdict::Holds(Certificate::RadicalCertificate)
    } else {
        ClassTVerdict::Unknown { samples_tried: tried }
    }
}

/// A failure witness must lie off `[g,g]^⊥` and have a rank-deficient form.
pub fn verify_fails_witness(l: &LieAlgebra, xi: &Covector) -> Result<bool> {
    let r = orbit_dim(l, xi)?;
    Ok(r > 0 && r < generic_rank(l).rank)
}

/// A covector `ξ ∉ [g,g]^⊥` with `[g,g] ⊆ g(ξ)`, chosen to vanish on
/// `[g,[g,g]]` but not on `[g,g]`.
pub fn md1_witness(l: &LieAlgebra) -> Result<Covector> {
    let series = l.lower_central_series();
    let derived = match series.get(1) {
        Some(d) if !d.is_zero() => d,
        _ => return Err(Error::NoWitness("the algebra is abelian".into())),
    };
    let n = l.dim();
    let next = series.get(2).cloned().unwrap_or_else(|| Subspace::zero(n));
    let xi = next
        .annihilator()
        .basis_vectors()
        .find(|v| derived.basis_vectors().any(|b| !dot(v, b).is_zero()))
        .map(|v| Covector::new(v.to_vec()))
        .ok_or_else(|| Error::Internal("[g,[g,g]] = [g,g] for a nilpotent algebra".into()))?;
    if !isotropy(l, &xi)?.contains(derived)? {
        return Err(Error::Internal(format!("witness {xi} does not contain [g,g] in its isotropy")));
    }
    Ok(xi)
}

/// `dim g ≤ ind g + dim [g,g]^⊥`, which holds for every class-T algebra.
pub fn md2_check(l: &LieAlgebra) -> bool {
    l.dim() <= index(l) + real_rank(l)
}

/// Orbit dimensions of `samples` random covectors. Samples are split into
/// fixed chunks, each drawing from its own ChaCha stream, so the result only
/// depends on `(samples, seed)`.
pub fn orbit_dim_histogram(l: &LieAlgebra, samples: usize, seed: u64) -> Result<BTreeMap<usize, usize>> {
    if samples == 0 {
        return Err(Error::invalid("at least one sample is required"));
    }
    let form = ModPForm::new(l);
    let upper = generic_rank(l).rank;
    let per_chunk: Vec<Vec<usize>> = chunk_ranges(samples)
        .into_par_iter()
        .map(|(chunk, count)| {
            let mut rng = chunk_rng(seed, chunk);
            (0..count)
                .map(|_| {
                    let xi = random_covector(&mut rng, l.dim());
                    form.rank_with_upper_bound(l, &xi, upper)
                })
                .collect()
        })
        .collect();
    let mut hist = BTreeMap::new();
    for d in per_chunk.into_iter().flatten() {
        *hist.entry(d).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Random covector with entries `p/q`, `|p| ≤ 10^6`, `1 ≤ q ≤ 10^3`.
pub fn random_covector<R: Rng>(rng: &mut R, n: usize) -> Covector {
    Covector::new(
        (0..n)
            .map(|_| {
                let p = rng.gen_range(-SAMPLE_NUMERATOR..=SAMPLE_NUMERATOR);
                let q = rng.gen_range(1..=SAMPLE_DENOMINATOR);
                Rational::new(BigInt::from(p), BigInt::from(q))
            })
            .collect(),
    )
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn chunk_ranges(samples: usize) -> Vec<(usize, usize)> {
    let chunks = SAMPLE_CHUNKS.min(samples.max(1));
    (0..chunks)
        .map(|c| (c, samples / chunks + usize::from(c < samples % chunks)))
        .filter(|&(_, n)| n > 0)
        .collect()
}

fn grid_witness(l: &LieAlgebra, form: &ModPForm, generic: usize) -> (Option<Covector>, usize) {
    let n = l.dim();
    let mut digits = vec![-2i64; n];
    let mut count = 0;
    loop {
        if digits.iter().any(|&d| d != 0) {
            count += 1;
            let xi = Covector::from_i64(&digits);
            let r = form.rank_with_upper_bound(l, &xi, generic);
            if r > 0 && r < generic {
                return (Some(xi), count);
            }
        }
        // odometer over {-2..2}^n, last coordinate fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return (None, count);
            }
            pos -= 1;
            if digits[pos] < 2 {
                digits[pos] += 1;
                break;
            }
            digits[pos] = -2;
        }
    }
}

/// Samples per characteristic ideal in [`structural_witness`].
const STRUCTURAL_SAMPLES: usize = 64;

/// Searches `S^⊥` for the characteristic ideals `S` (lower central series
/// terms below `[g,g]`, the center) that do not contain `[g,g]`. Rank drops
/// often live on such subspaces, and unlike the grid this search does not
/// depend on the chosen basis.
fn structural_witness(l: &LieAlgebra, form: &ModPForm, generic: usize, seed: u64) -> (Option<Covector>, usize) {
    let derived = l.derived_subalgebra();
    let mut ideals: Vec<Subspace> = l.lower_central_series().into_iter().skip(2).filter(|s| !s.is_zero()).collect();
    ideals.push(l.center());
    let mut count = 0;
    for (idx, s) in ideals.iter().enumerate() {
        if s.contains(&derived).expect("same ambient space") {
            continue;
        }
        let ann = s.annihilator();
        let basis: Vec<&[Rational]> = ann.basis_vectors().collect();
        let mut rng = chunk_rng(seed, SAMPLE_CHUNKS + idx);
        for _ in 0..STRUCTURAL_SAMPLES {
            let mut xi = vec![Rational::zero(); l.dim()];
            for b in &basis {
                let t = Rational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)));
                for (x, c) in xi.iter_mut().zip(b.iter()) {
                    *x += &t * c;
                }
            }
            count += 1;
            let r = form.rank_with_upper_bound(l, &xi, generic);
            if r > 0 && r < generic {
                return (Some(Covector::new(xi)), count);
            }
        }
    }
    (None, count)
}

fn random_witness(l: &LieAlgebra, form: &ModPForm, generic: usize, budget: usize, seed: u64) -> Option<Covector> {
    if budget == 0 {
        return None;
    }
    chunk_ranges(budget)
        .into_par_iter()
        .map(|(chunk, count)| {
            let mut rng = chunk_rng(seed, chunk);
            (0..count).find_map(|_| {
                let xi = random_covector(&mut rng, l.dim());
                let r = form.rank_with_upper_bound(l, &xi, generic);
                (r > 0 && r < generic).then_some(xi)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

/// Structure constants reduced mod `p`, for fast rank screening.
struct ModPForm {
    n: usize,
    /// `(i, j, k, c)` with `i > j`: `[X_i, X_j]` has `c` on `X_k`. `None` if a
    /// constant's denominator vanishes mod `p`.
    constants: Option<Vec<(usize, usize, usize, u64)>>,
}

impl ModPForm {
    fn new(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut constants = Some(Vec::new());
        'outer: for i in 0..n {
            for j in 0..i {
                for (k, c) in l.basis_bracket(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    match (modp::reduce(c), constants.as_mut()) {
                        (Some(r), Some(v)) => v.push((i, j, k, r)),
                        _ => {
                            constants = None;
                            break 'outer;
                        }
                    }
                }
            }
        }
        ModPForm { n, constants }
    }

    fn rank_mod_p(&self, xi: &[Rational]) -> Option<usize> {
        let constants = self.constants.as_ref()?;
        let xi: Vec<u64> = xi.iter().map(modp::reduce).collect::<Option<_>>()?;
        let mut m = vec![vec![0u64; self.n]; self.n];
        for &(i, j, k, c) in constants {
            let v = modp::mul(c, xi[k]);
            m[i][j] = modp::add(m[i][j], v);
            m[j][i] = modp::sub(m[j][i], v);
        }
        Some(modp::rank(&mut m))
    }

    /// Exact rank of `B_ξ`, given that it cannot exceed `upper`.
    fn rank_with_upper_bound(&self, l: &LieAlgebra, xi: &[Rational], upper: usize) -> usize {
        match self.rank_mod_p(xi) {
            Some(r) if r >= upper => upper,
            _ => orbit_dim(l, xi).expect("covector length matches"),
        }
    }
}
