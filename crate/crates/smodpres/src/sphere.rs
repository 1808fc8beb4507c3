//! Mapping classes of the punctured sphere acting on its fundamental group.
//!
//! The group `<x_1..x_m | x_1 ... x_m = 1>` is identified with the free group
//! on `x_1..x_{m-1}`; letters are signed integers `±1..±(m-1)`. An automorphism
//! keeps the images of all `m` loops so that the half-twist about the last
//! pair can be applied without re-deriving the image of `x_m`.

use thiserror::Error;

use crate::words::{Family, Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SphereError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("generator {0} has no braid word on {1} points")]
    UnknownGenerator(Generator, usize),
}

/// Reduced word in the free generators `x_1..x_{m-1}`.
pub type FreeWord = Vec<i32>;

pub fn free_inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|x| -x).collect()
}

/// Reduced product of two reduced words.
pub fn free_mul(a: &[i32], b: &[i32]) -> FreeWord {
    let mut k = 0;
    while k < a.len() && k < b.len() && a[a.len() - 1 - k] == -b[k] {
        k += 1;
    }
    let mut out = Vec::with_capacity(a.len() + b.len() - 2 * k);
    out.extend_from_slice(&a[..a.len() - k]);
    out.extend_from_slice(&b[k..]);
    out
}

pub fn free_reduce(w: &[i32]) -> FreeWord {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// `a b a^-1`, reduced.
fn free_conj(a: &[i32], b: &[i32]) -> FreeWord {
    free_mul(&free_mul(a, b), &free_inverse(a))
}

/// Split a reduced word as `c * core * c^-1` with `core` cyclically reduced.
pub fn free_cyclic_reduce(w: &[i32]) -> (FreeWord, FreeWord) {
    let mut lo = 0;
    let mut hi = w.len();
    while hi >= lo + 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    (w[lo..hi].to_vec(), w[..lo].to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereAutomorphism {
    m: usize,
    images: Vec<FreeWord>,
    max_len: usize,
}

impl SphereAutomorphism {
    pub fn identity(m: usize) -> Self {
        assert!(m >= 2, "need at least two punctures");
        let mut images: Vec<FreeWord> = (1..m as i32).map(|i| vec![i]).collect();
        images.push((1..m as i32).rev().map(|i| -i).collect());
        SphereAutomorphism { m, images, max_len: 0 }
    }

    pub fn punctures(&self) -> usize {
        self.m
    }

    /// Image of the loop `x_j`, `1 <= j <= m`.
    pub fn image(&self, j: usize) -> &FreeWord {
        &self.images[j - 1]
    }

    /// Largest total image length seen while this automorphism was built.
    pub fn max_image_length(&self) -> usize {
        self.max_len.max(self.total_length())
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(|w| w.len()).sum()
    }

    /// Replace `self` by `self ∘ s_i^{±1}` (the half-twist acts first).
    pub fn then_sigma(&mut self, i: usize, positive: bool) {
        assert!(1 <= i && i < self.m, "half-twist index out of range");
        let a = i - 1;
        let b = i;
        if positive {
            let new_a = free_conj(&self.images[a], &self.images[b]);
            let new_b = std::mem::replace(&mut self.images[a], new_a);
            self.images[b] = new_b;
        } else {
            let new_b = free_conj(&free_inverse(&self.images[b]), &self.images[a]);
            let new_a = std::mem::replace(&mut self.images[b], new_b);
            self.images[a] = new_a;
        }
        let total = self.total_length();
        if total > self.max_len {
            self.max_len = total;
        }
    }

    /// Apply the automorphism to a free word.
    pub fn apply(&self, w: &[i32]) -> FreeWord {
        let mut out = Vec::new();
        for &x in w {
            let img = &self.images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                out = free_mul(&out, img);
            } else {
                out = free_mul(&out, &free_inverse(img));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SphereAutomorphism) -> SphereAutomorphism {
        assert_eq!(self.m, other.m);
        let images: Vec<FreeWord> = other.images.iter().map(|w| self.apply(w)).collect();
        let mut out = SphereAutomorphism { m: self.m, images, max_len: 0 };
        out.max_len = self.max_len.max(other.max_len).max(out.total_length());
        out
    }

    /// Identity on every free generator.
    pub fn is_identity(&self) -> bool {
        self.images[..self.m - 1].iter().enumerate().all(|(j, w)| w.len() == 1 && w[0] == j as i32 + 1)
    }

    /// Conjugation by `w`: `x ↦ w x w^-1`.
    pub fn conjugation(m: usize, w: &[i32]) -> Self {
        let id = SphereAutomorphism::identity(m);
        let images = id.images.iter().map(|x| free_conj(w, x)).collect();
        SphereAutomorphism { m, images, max_len: 0 }
    }

    /// If `self` is conjugation by some `w`, return `w`.
    ///
    /// The conjugator is read off the cyclic reduction of the image of `x_1`;
    /// the remaining ambiguity is a power of `x_1`, fixed by the image of `x_2`.
    pub fn is_inner(&self) -> Option<FreeWord> {
        let rank = self.m - 1;
        let f1 = &self.images[0];
        let (core, c) = free_cyclic_reduce(f1);
        if core != [1] {
            return None;
        }
        if rank == 1 {
            return Some(Vec::new());
        }
        let u = free_mul(&free_mul(&free_inverse(&c), &self.images[1]), &c);
        // u must be x_1^p x_2 x_1^-p
        let mid = u.iter().position(|&x| x.abs() != 1)?;
        let p = mid;
        if u.len() != 2 * p + 1 || u[mid] != 2 {
            return None;
        }
        let lead = if p > 0 { u[0] } else { 1 };
        if u[..p].iter().any(|&x| x != lead) || u[p + 1..].iter().any(|&x| x != -lead) {
            return None;
        }
        let w = free_mul(&c, &vec![lead; p]);
        for j in 0..rank {
            if free_conj(&w, &[j as i32 + 1]) != self.images[j] {
                return None;
            }
        }
        Some(w)
    }
}

/// Braid word of a dictionary generator on `m` strands, as `(index, positive)` letters.
pub fn braid_word(g: &Generator, m: usize) -> Result<Vec<(usize, bool)>, SphereError> {
    let unknown = || SphereError::UnknownGenerator(g.clone(), m);
    let idx = |p: usize| g.indices.get(p).map(|&v| v as usize).ok_or_else(unknown);
    let check = |hi: usize| if hi < m { Ok(()) } else { Err(unknown()) };
    let s = |i: usize| (i, true);
    let sinv = |i: usize| (i, false);
    Ok(match &g.family {
        Family::Sigma => {
            let i = idx(0)?;
            check(i)?;
            vec![s(i)]
        }
        Family::H => {
            let i = idx(0)?;
            check(i + 1)?;
            vec![s(i), s(i + 1), s(i)]
        }
        Family::A => {
            let i = idx(0)?;
            check(2 * i)?;
            vec![s(2 * i), s(2 * i - 1), sinv(2 * i)]
        }
        Family::B => {
            let i = idx(0)?;
            check(2 * i + 1)?;
            vec![s(2 * i + 1), s(2 * i), sinv(2 * i + 1)]
        }
        Family::T => {
            let (i, j) = (idx(0)?, idx(1)?);
            check(j - 1)?;
            full_twist(i, j)
        }
        Family::Hij => {
            let (i, j) = (idx(0)?, idx(1)?);
            check(j - 1)?;
            half_rotation(i, j)
        }
        Family::R => half_rotation(1, m),
        _ => return Err(unknown()),
    })
}

/// `(s_i ... s_{j-1})^{j-i+1}`: the full twist on strands `i..=j`.
pub fn full_twist(i: usize, j: usize) -> Vec<(usize, bool)> {
    let row: Vec<(usize, bool)> = (i..j).map(|l| (l, true)).collect();
    let mut out = Vec::with_capacity(row.len() * (j - i + 1));
    for _ in 0..=j - i {
        out.extend_from_slice(&row);
    }
    out
}

/// `(s_i ... s_{j-1})(s_i ... s_{j-2}) ... (s_i)`: the half rotation of strands `i..=j`.
pub fn half_rotation(i: usize, j: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for top in (i..j).rev() {
        out.extend((i..=top).map(|l| (l, true)));
    }
    out
}

/// Automorphism of a single dictionary generator.
pub fn artin(g: &Generator, m: usize) -> Result<SphereAutomorphism, SphereError> {
    if g.family != Family::Sigma {
        return Err(SphereError::UnknownGenerator(g.clone(), m));
    }
    let i = g.indices[0] as usize;
    if i == 0 || i >= m {
        return Err(SphereError::IndexOutOfRange(format!("s[{i}] on {m} punctures")));
    }
    let mut f = SphereAutomorphism::identity(m);
    f.then_sigma(i, true);
    Ok(f)
}

/// Expand `w` into half-twist letters.
pub fn expand(w: &Word, m: usize) -> Result<Vec<(usize, bool)>, SphereError> {
    let mut out = Vec::new();
    for (g, e) in w.letters() {
        let base = braid_word(g, m)?;
        let piece: Vec<(usize, bool)> = if *e > 0 {
            base
        } else {
            base.iter().rev().map(|&(i, p)| (i, !p)).collect()
        };
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&piece);
        }
    }
    Ok(out)
}

/// The automorphism of `w`; `rep(uv) = rep(u) ∘ rep(v)`.
pub fn rep_of_word(w: &Word, m: usize) -> Result<SphereAutomorphism, SphereError> {
    let mut f = SphereAutomorphism::identity(m);
    for (i, p) in expand(w, m)? {
        f.then_sigma(i, p);
    }
    Ok(f)
}

/// Equality in the mapping class group of the `m`-punctured sphere.
pub fn equal_in_mod(w1: &Word, w2: &Word, m: usize) -> Result<bool, SphereError> {
    Ok(rep_of_word(&w2.inverse().mul(w1), m)?.is_inner().is_some())
}

/// Equality in the braid group of the disk with `m - 1` punctures: the
/// automorphism must be the identity on the nose.
pub fn equal_in_disk(w1: &Word, w2: &Word, m: usize) -> Result<bool, SphereError> {
    Ok(rep_of_word(&w2.inverse().mul(w1), m)?.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_one_on_four() {
        let f = artin(&Generator::sigma(1), 4).unwrap();
        assert_eq!(f.image(1), &vec![1, 2, -1]);
        assert_eq!(f.image(2), &vec![1]);
        assert_eq!(f.image(3), &vec![3]);
    }

    #[test]
    fn conjugation_is_inner() {
        let f = SphereAutomorphism::conjugation(5, &[1, 2, -3]);
        assert_eq!(f.is_inner(), Some(vec![1, 2, -3]));
        assert!(artin(&Generator::sigma(1), 4).unwrap().is_inner().is_none());
    }
}
