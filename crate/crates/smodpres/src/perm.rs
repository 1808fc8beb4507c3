//! Permutations of `{1..m}`, the map to the symmetric group recording the
//! action on marked points, and the parity subgroups.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Family, Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("generator {gen} has no permutation image on {m} points")]
    UnknownGenerator { gen: Generator, m: usize },
    #[error("parity classes need an even number of points, got {0}")]
    OddSize(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("not a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("cycle parse error: {0}")]
    Parse(String),
}

/// A bijection of `{1..m}`. Stored 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { images: (0..m as u32).collect() }
    }

    /// Build from 1-based images `[p(1), ..., p(m)]`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return Err(PermError::NotBijection(m));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// The transposition `(a b)`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(m);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// Reverses the block `i..=j`.
    pub fn reversal(m: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(m);
        p.images[i - 1..j].reverse();
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// `self ∘ other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Parse cycle notation such as `(1 3)(2 4)` on `m` points; `()` is the identity.
    pub fn parse_cycles(s: &str, m: usize) -> Result<Self, PermError> {
        let mut p = Self::identity(m);
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' in {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| PermError::Parse(format!("unclosed cycle in {s:?}")))?;
            let pts = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| PermError::Parse(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            if pts.iter().any(|&x| x == 0 || x > m) {
                return Err(PermError::IndexOutOfRange(format!("{s:?} on {m} points")));
            }
            let mut cyc = Permutation::identity(m);
            for w in 0..pts.len() {
                let (a, b) = (pts[w], pts[(w + 1) % pts.len()]);
                if cyc.images[a - 1] as usize != a - 1 {
                    return Err(PermError::Parse(format!("repeated point {a}")));
                }
                cyc.images[a - 1] = (b - 1) as u32;
            }
            if pts.len() > 1 && cyc.images.iter().collect::<HashSet<_>>().len() != m {
                return Err(PermError::NotBijection(m));
            }
            // Cycles written left to right compose right to left.
            p = p.compose(&cyc);
            rest = body[close + 1..].trim_start();
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (p, x) in c.iter().enumerate() {
                if p > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    Preserving,
    Reversing,
    Neither,
}

impl ParityClass {
    pub fn is_liftable(self) -> bool {
        self != ParityClass::Neither
    }

    /// Product in the quotient `W -> Z/2`; `Neither` is absorbing.
    pub fn compose(self, other: ParityClass) -> ParityClass {
        use ParityClass::*;
        match (self, other) {
            (Neither, _) | (_, Neither) => Neither,
            (a, b) if a == b => Preserving,
            _ => Reversing,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::Preserving => "preserving",
            ParityClass::Reversing => "reversing",
            ParityClass::Neither => "not-liftable",
        })
    }
}

/// Permutation image of one generator on `m` points.
pub fn psi_generator(g: &Generator, m: usize) -> Result<Permutation, PermError> {
    let unknown = || PermError::UnknownGenerator { gen: g.clone(), m };
    let idx = |p: usize| g.indices.get(p).map(|&v| v as usize).ok_or_else(unknown);
    let fits = |hi: usize| if hi <= m { Ok(()) } else { Err(unknown()) };
    Ok(match &g.family {
        Family::Sigma => {
            let i = idx(0)?;
            fits(i + 1)?;
            Permutation::transposition(m, i, i + 1)
        }
        Family::H => {
            let i = idx(0)?;
            fits(i + 2)?;
            Permutation::transposition(m, i, i + 2)
        }
        Family::T => {
            fits(idx(1)?)?;
            Permutation::identity(m)
        }
        Family::A => {
            let i = idx(0)?;
            fits(2 * i + 1)?;
            Permutation::transposition(m, 2 * i - 1, 2 * i + 1)
        }
        Family::B => {
            let i = idx(0)?;
            fits(2 * i + 2)?;
            Permutation::transposition(m, 2 * i, 2 * i + 2)
        }
        Family::R => Permutation::reversal(m, 1, m),
        Family::Hij => {
            let (i, j) = (idx(0)?, idx(1)?);
            fits(j)?;
            Permutation::reversal(m, i, j)
        }
        _ => return Err(unknown()),
    })
}

/// The homomorphism to `S_m`: `psi(g1 g2) = psi(g1) ∘ psi(g2)`.
pub fn psi(w: &Word, m: usize) -> Result<Permutation, PermError> {
    let mut acc = Permutation::identity(m);
    for (g, e) in w.letters() {
        let p = psi_generator(g, m)?;
        let q = if *e < 0 { p.inverse() } else { p };
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&q);
        }
    }
    Ok(acc)
}

/// Classify against the odd block `{1,3,5,...}`.
pub fn parity_class(p: &Permutation) -> Result<ParityClass, PermError> {
    let m = p.degree();
    if m % 2 == 1 {
        return Err(PermError::OddSize(m));
    }
    let mut preserve = true;
    let mut reverse = true;
    for x in (1..=m).step_by(2) {
        let y = p.apply(x);
        if y % 2 == 1 {
            reverse = false;
        } else {
            preserve = false;
        }
    }
    Ok(if preserve {
        ParityClass::Preserving
    } else if reverse {
        ParityClass::Reversing
    } else {
        ParityClass::Neither
    })
}

/// Parity class of the image of `w` on `2n+2` points.
pub fn is_liftable(w: &Word, n: usize) -> Result<ParityClass, PermError> {
    parity_class(&psi(w, 2 * n + 2)?)
}

/// Membership in the stabilizer of the last point inside the parity-preserving subgroup.
pub fn w_star_membership(p: &Permutation) -> Result<bool, PermError> {
    let m = p.degree();
    Ok(parity_class(p)? == ParityClass::Preserving && p.apply(m) == m)
}

/// Whether the curve enclosing points `i..=j` lifts to the degree-`k` cover:
/// the signed count of enclosed points (odd +1, even −1) must vanish mod `k`.
pub fn curve_lifts(i: usize, j: usize, n: usize, k: usize) -> Result<bool, PermError> {
    if !(1 <= i && i < j && j <= 2 * n + 2) {
        return Err(PermError::IndexOutOfRange(format!(
            "curve ({i},{j}) needs 1 <= i < j <= {}",
            2 * n + 2
        )));
    }
    if k == 0 {
        return Err(PermError::IndexOutOfRange("k must be positive".into()));
    }
    let count: i64 = (i..=j).map(|l| if l % 2 == 1 { 1 } else { -1 }).sum();
    Ok(count.rem_euclid(k as i64) == 0)
}

/// All elements of the subgroup generated by `gens`, by breadth-first closure.
pub fn generated_subgroup(gens: &[Permutation], m: usize) -> HashSet<Permutation> {
    let id = Permutation::identity(m);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip() {
        let p = Permutation::parse_cycles("(1 3)(2 4)", 4).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(Permutation::identity(5).to_string(), "()");
        assert_eq!(Permutation::parse_cycles("()", 3).unwrap(), Permutation::identity(3));
        let c = Permutation::parse_cycles("(3 1 2)", 3).unwrap();
        assert_eq!(c.to_string(), "(1 2 3)");
    }

    #[test]
    fn compose_order() {
        let a = Permutation::transposition(3, 1, 2);
        let b = Permutation::transposition(3, 2, 3);
        // (a∘b)(3) = a(2) = 1
        assert_eq!(a.compose(&b).apply(3), 1);
    }
}
