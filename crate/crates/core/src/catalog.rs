//! Named nilpotent Lie algebras.
//!
//! Keys: `a_k` (abelian), `n3`, `n4`, `n5_1`..`n5_6`, `h_N` (Heisenberg,
//! `N = 2k+1`), `f_n` (filiform, `n ≥ 3`), `h_m_n` (`m ≥ n ≥ 0`), `n6_15`,
//! `n6_18`, and direct products joined by `×`, associated left to right.
//! Whitespace is ignored and `a2` is accepted for `a_2`.

use crate::error::{Error, Result};
use crate::lie::{BracketSpec, LieAlgebra};
use crate::linalg::RatMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: String,
    /// `None` for parametric families.
    pub dim: Option<usize>,
    pub family: bool,
    pub provenance: &'static str,
}

/// Every nilpotent Lie algebra of dimension ≤ 5 is isomorphic to exactly one of these.
pub const DIM_LE5_KEYS: [&str; 16] = [
    "a_1", "a_2", "a_3", "n3", "a_4", "a_1 × n3", "n4", "a_5", "a_2 × n3", "a_1 × n4", "n5_1", "n5_2",
    "n5_3", "n5_4", "n5_5", "n5_6",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    Abelian(usize),
    N3,
    N4,
    N5(usize),
    Heisenberg(usize),
    Filiform(usize),
    Hmn(usize, usize),
    N6_15,
    N6_18,
}

impl Atom {
    fn parse(s: &str) -> Result<Atom> {
        let bad = || Error::Catalog(format!("unknown key {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let atom = match s {
            "n3" => Atom::N3,
            "n4" => Atom::N4,
            "n6_15" => Atom::N6_15,
            "n6_18" => Atom::N6_18,
            _ => {
                if let Some(i) = s.strip_prefix("n5_") {
                    Atom::N5(num(i)?)
                } else if let Some(k) = s.strip_prefix("a_").or_else(|| s.strip_prefix('a')) {
                    Atom::Abelian(num(k)?)
                } else if let Some(n) = s.strip_prefix("f_") {
                    Atom::Filiform(num(n)?)
                } else if let Some(rest) = s.strip_prefix("h_") {
                    match rest.split_once('_') {
                        Some((m, n)) => Atom::Hmn(num(m)?, num(n)?),
                        None => Atom::Heisenberg(num(rest)?),
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        atom.check_range()?;
        Ok(atom)
    }

    fn check_range(&self) -> Result<()> {
        let ok = match *self {
            Atom::Abelian(k) => k >= 1,
            Atom::N5(i) => (1..=6).contains(&i),
            Atom::Heisenberg(d) => d >= 3 && d % 2 == 1,
            Atom::Filiform(n) => n >= 3,
            Atom::Hmn(m, n) => m >= n && m >= 1,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Catalog(format!("parameter out of range in {:?}", self.key())))
        }
    }

    fn key(&self) -> String {
        match *self {
            Atom::Abelian(k) => format!("a_{k}"),
            Atom::N3 => "n3".into(),
            Atom::N4 => "n4".into(),
            Atom::N5(i) => format!("n5_{i}"),
            Atom::Heisenberg(d) => format!("h_{d}"),
            Atom::Filiform(n) => format!("f_{n}"),
            Atom::Hmn(m, n) => format!("h_{m}_{n}"),
            Atom::N6_15 => "n6_15".into(),
            Atom::N6_18 => "n6_18".into(),
        }
    }

    fn build(&self) -> LieAlgebra {
        let unit = |dim, b: &[(usize, usize, usize)]| {
            LieAlgebra::from_unit_brackets(dim, b).expect("catalog brackets are valid")
        };
        match *self {
            Atom::Abelian(k) => LieAlgebra::abelian(k),
            Atom::N3 => unit(3, &[(3, 2, 1)]),
            Atom::N4 => unit(4, &[(4, 3, 2), (4, 2, 1)]),
            Atom::N5(1) => unit(5, &[(5, 4, 1), (3, 2, 1)]),
            Atom::N5(2) => unit(5, &[(5, 4, 2), (5, 3, 1)]),
            Atom::N5(3) => unit(5, &[(5, 4, 2), (5, 2, 1), (4, 3, 1)]),
            Atom::N5(4) => unit(5, &[(5, 4, 3), (5, 3, 2), (4, 3, 1)]),
            Atom::N5(5) => unit(5, &[(5, 4, 3), (5, 3, 2), (5, 2, 1)]),
            Atom::N5(6) => unit(5, &[(5, 4, 3), (5, 3, 2), (5, 2, 1), (4, 3, 1)]),
            Atom::N5(_) => unreachable!("range checked"),
            Atom::Heisenberg(d) => {
                let b: Vec<_> = (1..=d / 2).map(|i| (2 * i + 1, 2 * i, 1)).collect();
                unit(d, &b)
            }
            Atom::Filiform(n) => {
                let b: Vec<_> = (2..n).rev().map(|j| (n, j, j - 1)).collect();
                unit(n, &b)
            }
            Atom::Hmn(m, n) => {
                // X_1..X_m are indices 1..m, Y_0..Y_n are m+1..m+n+1
                let y = |j: usize| m + 1 + j;
                let b: Vec<BracketSpec> = (1..=m)
                    .flat_map(|i| (0..=n).filter(move |j| i + j <= n).map(move |j| (i, j)))
                    .map(|(i, j)| BracketSpec::unit(i, y(j), y(i + j)))
                    .collect();
                LieAlgebra::new(m + n + 1, &b).expect("catalog brackets are valid")
            }
            Atom::N6_15 => unit(6, &[(6, 5, 3), (6, 4, 1), (5, 4, 2)]),
            Atom::N6_18 => unit(6, &[(6, 5, 3), (6, 4, 2), (6, 3, 1)]),
        }
    }
}

fn parse_key(key: &str) -> Result<Vec<Atom>> {
    let compact: String = key.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Catalog("empty key".into()));
    }
    compact.split('×').map(Atom::parse).collect()
}

/// Canonical spelling of a key, e.g. `"a2×n3"` becomes `"a_2 × n3"`.
pub fn canonical_key(key: &str) -> Result<String> {
    let atoms = parse_key(key)?;
    Ok(atoms.iter().map(Atom::key).collect::<Vec<_>>().join(" × "))
}

/// Builds the algebra named by `key`; its name is the canonical key.
pub fn make(key: &str) -> Result<LieAlgebra> {
    let atoms = parse_key(key)?;
    let mut iter = atoms.iter();
    let first = iter.next().expect("nonempty");
    let mut alg = first.build().with_name(first.key());
    for atom in iter {
        let rhs = atom.build().with_name(atom.key());
        alg = LieAlgebra::direct_product(&alg, &rhs);
    }
    Ok(alg)
}

/// `g_D` for a nilpotent matrix `D`.
pub fn make_gd(d: &RatMatrix) -> Result<LieAlgebra> {
    Ok(LieAlgebra::semidirect_gd(d)?.with_name("g_D"))
}

/// Every fixed entry followed by the parametric families, in a fixed order.
pub fn list() -> Vec<CatalogEntry> {
    let fixed = |key: &str, provenance| CatalogEntry {
        key: key.to_string(),
        dim: Some(make(key).expect("listed keys build").dim()),
        family: false,
        provenance,
    };
    let family = |key: &str, provenance| CatalogEntry { key: key.to_string(), dim: None, family: true, provenance };
    let mut out: Vec<CatalogEntry> = DIM_LE5_KEYS
        .iter()
        .map(|k| fixed(k, "classification of nilpotent Lie algebras of dimension <= 5"))
        .collect();
    out.push(fixed("n6_15", "free 2-step nilpotent algebra on 3 generators"));
    out.push(fixed("n6_18", "6-dimensional 3-step algebra with index 4"));
    out.push(family("a_<k>", "abelian algebra of dimension k >= 1"));
    out.push(family("h_<2k+1>", "Heisenberg algebra, [X_{2i+1}, X_{2i}] = X_1"));
    out.push(family("f_<n>", "filiform algebra, [X_n, X_j] = X_{j-1}, n >= 3"));
    out.push(family("h_<m>_<n>", "[X_i, Y_j] = Y_{i+j} for i + j <= n, m >= n >= 0"));
    out.push(family("g_D", "abelian V extended by a nilpotent D (library only)"));
    out
}

/// Concrete members used wherever the whole catalog is swept: the fixed
/// entries plus `f_3..f_10`, `h_3..h_9` and `h_m_n` for `1 ≤ n ≤ m ≤ 4`.
pub fn instances() -> Vec<String> {
    let mut keys: Vec<String> = DIM_LE5_KEYS.iter().map(|s| s.to_string()).collect();
    keys.extend(["n6_15".to_string(), "n6_18".to_string()]);
    keys.extend((3..=10).map(|n| format!("f_{n}")));
    keys.extend([3, 5, 7, 9].map(|d| format!("h_{d}")));
    for m in 1..=4 {
        for n in 1..=m {
            keys.push(format!("h_{m}_{n}"));
        }
    }
    keys
}
