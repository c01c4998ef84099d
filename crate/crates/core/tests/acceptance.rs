//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::{bareiss_det, random_invertible, random_skew, random_vector, to_rat_matrix};
use nilorbit::catalog::{self, DIM_LE5_KEYS};
use nilorbit::classify::{classify_dim_le5, compare, fingerprint, InvariantFingerprint};
use nilorbit::coadjoint::{
    self, class_t, generic_rank, md2_check, orbit_report, random_covector, verify_fails_witness, Certificate,
    ClassTOptions, ClassTVerdict,
};
use nilorbit::frontend::{cli, emit, parse, AlgebraDocument};
use nilorbit::linalg::{pfaffian, Rational};
use nilorbit::LieAlgebra;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TABLE_BUDGET: Duration = Duration::from_secs(5);
const FILIFORM_BUDGET: Duration = Duration::from_secs(5);
const CLASS_T_BUDGET: Duration = Duration::from_secs(30);
const ROUND_TRIPS_PER_CLASS: usize = 100;
const FLATNESS_SAMPLES: usize = 1000;
const PFAFFIAN_MATRICES: usize = 1000;
const JACOBI_TRIPLES: usize = 1000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn make(key: &str) -> LieAlgebra {
    catalog::make(key).unwrap_or_else(|e| panic!("{key}: {e}"))
}

/// Published (real rank, index) pairs.
const TABLE: [(&str, usize, usize); 16] = [
    ("a_1", 1, 1),
    ("a_2", 2, 2),
    ("a_3", 3, 3),
    ("a_4", 4, 4),
    ("a_5", 5, 5),
    ("n3", 2, 1),
    ("a_1 × n3", 3, 2),
    ("n4", 2, 2),
    ("a_2 × n3", 4, 3),
    ("a_1 × n4", 3, 3),
    ("n5_1", 4, 1),
    ("n5_2", 3, 3),
    ("n5_3", 3, 1),
    ("n5_4", 2, 3),
    ("n5_5", 2, 3),
    ("n5_6", 2, 1),
];

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mismatches: Vec<String> = TABLE
        .iter()
        .filter_map(|&(key, rr, ind)| {
            let l = make(key);
            let got = (coadjoint::real_rank(&l), coadjoint::index(&l));
            (got != (rr, ind)).then(|| format!("{key}: got {got:?}, expected ({rr}, {ind})"))
        })
        .collect();
    let elapsed = start.elapsed();
    if !mismatches.is_empty() {
        return fail(mismatches.join("; "));
    }
    if elapsed >= TABLE_BUDGET {
        return fail(format!("{} rows correct but took {elapsed:.2?}", TABLE.len()));
    }
    pass(format!("{} (RR, ind) rows match in {elapsed:.2?}", TABLE.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let wrong: Vec<String> = (3..=10)
        .filter_map(|n| {
            let ind = coadjoint::index(&make(&format!("f_{n}")));
            (ind != n - 2).then(|| format!("f_{n}: index {ind}"))
        })
        .collect();
    let elapsed = start.elapsed();
    match (wrong.is_empty(), elapsed < FILIFORM_BUDGET) {
        (true, true) => pass(format!("index(f_n) = n - 2 for n = 3..10 in {elapsed:.2?}")),
        (true, false) => fail(format!("values correct but took {elapsed:.2?}")),
        _ => fail(wrong.join("; ")),
    }
}

fn criterion_3() -> Outcome {
    let (a, b) = (make("n6_15"), make("n6_18"));
    let pairs = [
        (coadjoint::real_rank(&a), coadjoint::index(&a)),
        (coadjoint::real_rank(&b), coadjoint::index(&b)),
    ];
    if pairs != [(3, 4), (3, 4)] {
        return fail(format!("(RR, ind): n6_15 {:?}, n6_18 {:?}", pairs[0], pairs[1]));
    }
    let report = compare(&a, &b, &ClassTOptions::default());
    let two_step = (a.nilpotency_step(), b.nilpotency_step());
    if !report.separating_invariants.contains(&"lcs_dims") || two_step != (2, 3) {
        return fail(format!("separating {:?}, steps {two_step:?}", report.separating_invariants));
    }
    pass(format!("both (3, 4); separated by {:?}", report.separating_invariants))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let opts = ClassTOptions::default();
    let mut keys: Vec<String> = DIM_LE5_KEYS.iter().map(|k| k.to_string()).collect();
    keys.extend((3..=10).map(|n| format!("f_{n}")));
    keys.extend((1..=4).map(|k| format!("h_{}", 2 * k + 1)));
    keys.push("n6_15".into());
    let mut problems = Vec::new();
    let mut fails = 0;
    for key in &keys {
        let l = make(key);
        let verdict = class_t(&l, &opts);
        let expect_fail = key == "n5_3" || key == "n5_6";
        match (&verdict, expect_fail) {
            (ClassTVerdict::Fails(w), true) => {
                if verify_fails_witness(&l, w).unwrap_or(false) {
                    fails += 1;
                } else {
                    problems.push(format!("{key}: witness {w} does not verify"));
                }
            }
            (ClassTVerdict::Holds(cert), false) => {
                let rank = generic_rank(&l).rank;
                let wanted = if l.is_abelian() {
                    Certificate::VacuousAbelian
                } else if rank == 2 {
                    Certificate::RankTwoFastPath
                } else {
                    Certificate::RadicalCertificate
                };
                if *cert != wanted {
                    problems.push(format!("{key}: certificate {cert:?}, expected {wanted:?}"));
                }
            }
            (v, _) => problems.push(format!("{key}: {v:?}")),
        }
    }
    let elapsed = start.elapsed();
    if !problems.is_empty() {
        return fail(problems.join("; "));
    }
    if elapsed >= CLASS_T_BUDGET {
        return fail(format!("verdicts correct but took {elapsed:.2?}"));
    }
    pass(format!("{} algebras: {fails} verified failures, {} certified in {elapsed:.2?}", keys.len(), keys.len() - fails))
}

/// Runs `f` on `ROUND_TRIPS_PER_CLASS` random changes of basis of every
/// dimension-≤5 class; returns (correct, total, first failures).
fn basis_change_sweep(seed: u64, mut f: impl FnMut(&str, &LieAlgebra, &LieAlgebra) -> bool) -> (usize, usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut good, mut total, mut bad) = (0, 0, Vec::new());
    for key in DIM_LE5_KEYS {
        let l = make(key);
        for _ in 0..ROUND_TRIPS_PER_CLASS {
            let p = random_invertible(&mut rng, l.dim());
            let m = l.change_of_basis(&p).expect("invertible");
            total += 1;
            if m.validate().is_ok() && f(key, &l, &m) {
                good += 1;
            } else if bad.len() < 3 {
                bad.push(key.to_string());
            }
        }
    }
    (good, total, bad)
}

fn criterion_5() -> Outcome {
    let (good, total, bad) = basis_change_sweep(5, |key, _, m| classify_dim_le5(m).is_ok_and(|k| k == key));
    if good == total {
        pass(format!("{good}/{total} classified back to their key ({} classes)", DIM_LE5_KEYS.len()))
    } else {
        fail(format!("{good}/{total} correct; first misses {bad:?}"))
    }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for m in 1..=4 {
        for n in 0..=m {
            let key = format!("h_{m}_{n}");
            let l = make(&key);
            for _ in 0..FLATNESS_SAMPLES {
                let xi = random_covector(&mut rng, l.dim());
                match orbit_report(&l, &xi) {
                    Ok(r) if r.is_flat => checked += 1,
                    Ok(_) => return fail(format!("{key}: orbit through {xi} is not flat")),
                    Err(e) => return fail(format!("{key}: {e}")),
                }
            }
        }
    }
    pass(format!("{checked} sampled orbits of h_m_n (n <= m <= 4) all flat"))
}

fn criterion_7() -> Outcome {
    let opts = ClassTOptions::default();
    let mut holds = 0;
    let mut problems = Vec::new();
    for key in catalog::instances() {
        let l = make(&key);
        if class_t(&l, &opts).holds() {
            holds += 1;
            if !md2_check(&l) {
                problems.push(format!("{key} is class T but violates dim <= ind + RR"));
            }
        }
    }
    // Without the class-T hypothesis the inequality can fail.
    let n53 = make("n5_3");
    let expected_failure = (n53.dim(), coadjoint::index(&n53), coadjoint::real_rank(&n53));
    if md2_check(&n53) {
        problems.push(format!("n5_3 unexpectedly satisfies the inequality {expected_failure:?}"));
    }
    if problems.is_empty() {
        pass(format!(
            "{holds} class-T entries satisfy it; n5_3 fails it as expected ({} <= {} + {} is false)",
            expected_failure.0, expected_failure.1, expected_failure.2
        ))
    } else {
        fail(problems.join("; "))
    }
}

fn criterion_8() -> Outcome {
    let opts = ClassTOptions::default();
    let mut selected = Vec::new();
    let mut heisenberg = Vec::new();
    for key in catalog::instances() {
        let l = make(&key);
        if coadjoint::index(&l) == 1 && class_t(&l, &opts).holds() {
            selected.push(key.clone());
        }
        // a_1 is the one-dimensional Heisenberg algebra h_1.
        if l.is_heisenberg() || l.dim() == 1 {
            heisenberg.push(key);
        }
    }
    let named = ["h_3", "h_5", "h_7", "h_9"];
    if selected == heisenberg && named.iter().all(|k| selected.iter().any(|s| s == k)) {
        pass(format!("selected {selected:?}, all Heisenberg"))
    } else {
        fail(format!("selected {selected:?}, Heisenberg entries {heisenberg:?}"))
    }
}

fn fingerprint_key(f: &InvariantFingerprint) -> impl PartialEq + std::fmt::Debug {
    (f.dim, f.lcs_dims.clone(), f.center_dim, f.index, f.real_rank, f.two_step, f.class_t_status())
}

fn criterion_9() -> Outcome {
    let mut problems = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut pf_ok = 0;
    for _ in 0..PFAFFIAN_MATRICES {
        let n = 2 * rng.gen_range(1..=4);
        let m = random_skew(&mut rng, n, 9);
        let pf = pfaffian(&to_rat_matrix(&m)).expect("skew, even order");
        if &pf * &pf == Rational::from_integer(bareiss_det(&m).into()) {
            pf_ok += 1;
        }
    }
    if pf_ok != PFAFFIAN_MATRICES {
        problems.push(format!("Pf^2 = det on {pf_ok}/{PFAFFIAN_MATRICES}"));
    }

    let mut triples = 0;
    for key in catalog::instances() {
        let l = make(&key);
        for _ in 0..JACOBI_TRIPLES {
            let (x, y, z) = (random_vector(&mut rng, l.dim()), random_vector(&mut rng, l.dim()), random_vector(&mut rng, l.dim()));
            if l.jacobi_residual(&x, &y, &z).is_ok_and(|r| r.iter().all(Zero::is_zero)) {
                triples += 1;
            } else {
                problems.push(format!("Jacobi residual nonzero on {key}"));
                break;
            }
        }
    }

    let opts = ClassTOptions::default();
    let reference: Vec<_> = DIM_LE5_KEYS.iter().map(|k| fingerprint_key(&fingerprint(&make(k), &opts))).collect();
    let (good, total, bad) = basis_change_sweep(99, |key, _, m| {
        let idx = DIM_LE5_KEYS.iter().position(|k| *k == key).expect("known key");
        fingerprint_key(&fingerprint(m, &opts)) == reference[idx]
    });
    if good != total {
        problems.push(format!("fingerprint invariant on {good}/{total}, first misses {bad:?}"));
    }

    let parity = compare(&make("f_5"), &make("n6_15"), &opts).parity_obstruction;
    if !parity {
        problems.push("compare(f_5, n6_15) reports no parity obstruction".into());
    }

    if problems.is_empty() {
        pass(format!(
            "Pf^2 = det on {pf_ok} matrices; {triples} Jacobi triples; fingerprint invariant on {good}/{total}; parity rule holds"
        ))
    } else {
        fail(problems.join("; "))
    }
}

fn criterion_10() -> Outcome {
    let mut problems = Vec::new();
    let instances = catalog::instances();
    for key in &instances {
        let text = emit(&AlgebraDocument::from_algebra(&make(key)));
        match parse(&text) {
            Ok(doc) if emit(&doc) == text => {
                let back = doc.to_algebra().expect("catalog entries validate");
                if back.bracket_table() != make(key).bracket_table() {
                    problems.push(format!("{key}: brackets changed"));
                }
            }
            Ok(_) => problems.push(format!("{key}: emit(parse(text)) differs")),
            Err(e) => problems.push(format!("{key}: {e}")),
        }
    }

    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/malformed");
    let mut fixtures = 0;
    for entry in std::fs::read_dir(&dir).expect("fixture directory") {
        let path = entry.expect("fixture entry").path();
        let text = std::fs::read_to_string(&path).expect("fixture text");
        let positioned = parse(&text).err().is_some_and(|e| e.span.line >= 1 && e.span.col >= 1);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(["nilorbit", "validate", path.to_str().expect("utf-8 path")], &mut out, &mut err);
        fixtures += 1;
        if !positioned || code != 2 {
            problems.push(format!("{}: exit {code}, positioned {positioned}", path.display()));
        }
    }

    if problems.is_empty() {
        pass(format!("{} catalog exports round-trip; {fixtures} malformed fixtures rejected with positions, exit 2", instances.len()))
    } else {
        fail(problems.join("; "))
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("real rank / index table", criterion_1),
        ("filiform index", criterion_2),
        ("dimension-6 invariants", criterion_3),
        ("class-T verdicts", criterion_4),
        ("classifier round-trip", criterion_5),
        ("flatness of h_m_n", criterion_6),
        ("MD2 inequality", criterion_7),
        ("Heisenberg characterization", criterion_8),
        ("property suites", criterion_9),
        ("frontend round-trip and diagnostics", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {name}: {} ({:.2?})", n + 1, outcome.detail, start.elapsed());
        failed += usize::from(!outcome.ok);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
