//! Abelianization of presentations via the Smith normal form.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use crate::linalg::{smith_normal_form, Matrix, Smith};
use crate::linalg::smith_invariants;
use crate::presentations::{GroupFamily, Presentation, Variant};
use crate::words::Generator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("cannot parse abelian group {0:?}")]
    Parse(String),
    #[error("relator {0} uses an undeclared generator {1}")]
    Undeclared(String, Generator),
}

/// `Z^free_rank (+) Z_{d1} (+) ... ` with `d1 | d2 | ...`, each `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Canonical form from arbitrary cyclic factors: units dropped, torsion
    /// recombined into a divisibility chain.
    pub fn from_cyclic(free_rank: usize, orders: &[u64]) -> Self {
        let mut diag: Vec<Vec<i64>> = Vec::new();
        let n = orders.len();
        for (i, &d) in orders.iter().enumerate() {
            let mut row = vec![0i64; n];
            row[i] = d as i64;
            diag.push(row);
        }
        let mut torsion = Vec::new();
        if n > 0 {
            for d in smith_invariants(&Matrix::from_rows(&diag)) {
                if !d.is_one() {
                    torsion.push(d.to_u64().expect("torsion fits in u64"));
                }
            }
        }
        AbelianGroup { free_rank, torsion }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.free_rank)?;
        for d in &self.torsion {
            write!(f, " (+) Z_{d}")?;
        }
        Ok(())
    }
}

impl FromStr for AbelianGroup {
    type Err = AbelianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AbelianError::Parse(s.to_string());
        let mut free = 0usize;
        let mut orders = Vec::new();
        for part in s.split("(+)") {
            let part = part.trim();
            if let Some(r) = part.strip_prefix("Z^") {
                free += r.trim().parse::<usize>().map_err(|_| err())?;
            } else if let Some(d) = part.strip_prefix("Z_") {
                orders.push(d.trim().parse::<u64>().map_err(|_| err())?);
            } else if part == "Z" {
                free += 1;
            } else {
                return Err(err());
            }
        }
        Ok(AbelianGroup::from_cyclic(free, &orders))
    }
}

/// One row per relator, one column per declared generator, entries are exponent sums.
pub fn exponent_matrix(p: &Presentation) -> Result<Matrix, AbelianError> {
    let col: HashMap<&Generator, usize> = p.generators.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut m = Matrix::zeros(p.relators.len(), p.generators.len());
    for (r, rel) in p.relators.iter().enumerate() {
        for (g, e) in rel.word.letters() {
            let &c = col
                .get(g)
                .ok_or_else(|| AbelianError::Undeclared(rel.tag.to_string(), g.clone()))?;
            m.add_to(r, c, &BigInt::from(*e));
        }
    }
    Ok(m)
}

/// The cokernel of an integer relation matrix (rows are relations).
pub fn cokernel(a: &Matrix) -> AbelianGroup {
    // Zero and repeated rows do not change the cokernel.
    let mut seen = BTreeSet::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..a.rows() {
        let row = a.row(i).to_vec();
        if row.iter().all(|x| x.is_zero()) {
            continue;
        }
        let neg: Vec<BigInt> = row.iter().map(|x| -x).collect();
        if seen.contains(&neg) || !seen.insert(row.clone()) {
            continue;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return AbelianGroup::free(a.cols());
    }
    let inv = smith_invariants(&Matrix::from_rows(&rows));
    let torsion = inv
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("torsion fits in u64"))
        .collect();
    AbelianGroup { free_rank: a.cols() - inv.len(), torsion }
}

pub fn h1(p: &Presentation) -> Result<AbelianGroup, AbelianError> {
    Ok(cokernel(&exponent_matrix(p)?))
}

/// The first homology predicted by the closed-form tables, where one is stated.
pub fn expected_h1(family: GroupFamily, n: usize, k: Option<usize>) -> Option<AbelianGroup> {
    let g = |free: usize, tors: &[u64]| Some(AbelianGroup::from_cyclic(free, tors));
    let nn = n as u64;
    match family {
        GroupFamily::LMod(Variant::Closed) => {
            if n % 2 == 1 {
                g(1, &[2, 2])
            } else {
                g(1, &[2])
            }
        }
        GroupFamily::LMod(Variant::Marked) => match n {
            1 => g(1, &[2]),
            _ if n.is_multiple_of(2) => g(2, &[nn]),
            _ => g(2, &[2 * nn]),
        },
        GroupFamily::LMod(Variant::Boundary) | GroupFamily::SMod(Variant::Boundary) => {
            g(if n == 1 { 2 } else { 3 }, &[])
        }
        GroupFamily::SMod(Variant::Closed) => {
            let k = k? as u64;
            match (n % 2, k % 2) {
                (1, 1) => g(1, &[2, 2]),
                (1, 0) => g(1, &[2, 4]),
                _ => g(1, &[2]),
            }
        }
        GroupFamily::SMod(Variant::Marked) => {
            let k = k? as u64;
            match n {
                1 => g(1, &[2 * k]),
                _ if n.is_multiple_of(2) => g(2, &[k * nn]),
                _ => g(2, &[2 * k * nn]),
            }
        }
        GroupFamily::PMod => {
            let m = n;
            Some(AbelianGroup::free(if m >= 3 { m * (m - 3) / 2 } else { 0 }))
        }
        GroupFamily::W | GroupFamily::WStar => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trip() {
        let a: AbelianGroup = "Z^1 (+) Z_2 (+) Z_2".parse().unwrap();
        assert_eq!(a, AbelianGroup { free_rank: 1, torsion: vec![2, 2] });
        assert_eq!(a.to_string(), "Z^1 (+) Z_2 (+) Z_2");
        let b: AbelianGroup = "Z^0 (+) Z_4 (+) Z_6".parse().unwrap();
        assert_eq!(b.torsion, vec![2, 12]);
    }
}
