//! Exact integer model of the balanced superelliptic cover.
//!
//! The punctured-sphere group is free on `x_1..x_{m-1}` with `m = 2n+2`.
//! The cover of the wedge of circles has one vertex per sheet `0..k` and one
//! edge `e_{s,j}` from sheet `s` to `s + ε(x_j)`, so chains are `Z^{k(m-1)}`.
//! First homology of the filled surface is the cycle space modulo the lifts
//! of the branch loops raised to the `k`-th power.
//!
//! Lifts fix sheet 0. With that convention the induced matrix is an exact
//! homomorphism: `lift(uv) = lift(u) · lift(v)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{kernel_basis, smith_normal_form, Matrix, MatrixError};
use crate::perm::{is_liftable, ParityClass, PermError};
use crate::presentations::{Relator, Variant};
use crate::sphere::{free_inverse, rep_of_word, FreeWord, SphereAutomorphism, SphereError};
use crate::words::{Generator, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("invalid cover parameters: {0}")]
    InvalidParams(String),
    #[error("{0} does not lift to the cover")]
    NotLiftable(String),
    #[error("cover model inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// `ε(x_j) = +1` for odd `j`, `-1` for even `j`, read mod `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monodromy {
    pub n: usize,
    pub k: usize,
}

impl Monodromy {
    pub fn punctures(&self) -> usize {
        2 * self.n + 2
    }

    /// Value on the loop `x_j`, `1 <= j <= m`, as `±1`.
    pub fn of_loop(&self, j: usize) -> i64 {
        if j % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// Value on a free word, as an integer (not reduced mod `k`).
    pub fn of_word(&self, w: &[i32]) -> i64 {
        w.iter().map(|&x| x.signum() as i64 * self.of_loop(x.unsigned_abs() as usize)).sum()
    }

    pub fn reduce(&self, v: i64) -> usize {
        v.rem_euclid(self.k as i64) as usize
    }
}

/// An induced matrix together with the deck power it realizes relative to the
/// sheet-0 lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftMatrix {
    pub matrix: Matrix,
    pub zeta_exponent: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "exponent", rename_all = "snake_case")]
pub enum SmodVerdict {
    Holds,
    ZetaMismatch(usize),
    MatrixMismatch,
}

impl fmt::Display for SmodVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmodVerdict::Holds => f.write_str("holds"),
            SmodVerdict::ZetaMismatch(e) => write!(f, "zeta_mismatch({e})"),
            SmodVerdict::MatrixMismatch => f.write_str("matrix_mismatch"),
        }
    }
}

/// Everything learned while checking one relator.
#[derive(Debug, Clone)]
pub struct SmodCheck {
    pub verdict: SmodVerdict,
    /// The image of the relator holds in the sphere (or disk) group.
    pub projected_holds: bool,
    /// `Some(e)` when the relator matrix equals `Z^e`.
    pub exponent: Option<usize>,
    /// Deck power predicted from the conjugator found by the sphere engine.
    pub conjugator_exponent: Option<usize>,
    pub max_image_length: usize,
}

#[derive(Debug, Clone)]
pub struct CoverModel {
    pub n: usize,
    pub k: usize,
    pub variant: Variant,
    pub monodromy: Monodromy,
    pub rank: usize,
    /// Chains to homology: `rank x edges`. Only meaningful on cycles for the
    /// closed and marked variants.
    projection: Matrix,
    /// Homology to chains: `edges x rank`, columns are cycles.
    section: Matrix,
    deck: Matrix,
    /// Columns are the killed branch classes.
    fillings: Matrix,
    /// `lift(t[1,2n+1])` is the sheet shift to this power (`±1`).
    twist_shift: i64,
    generators: HashMap<Generator, (Matrix, Matrix)>,
}

fn edge(m: usize, s: usize, j: usize) -> usize {
    s * (m - 1) + (j - 1)
}

impl CoverModel {
    pub fn punctures(&self) -> usize {
        2 * self.n + 2
    }

    pub fn edges(&self) -> usize {
        self.k * (self.punctures() - 1)
    }

    /// Chain of the path lifting `w` from `sheet`; returns the end sheet too.
    pub fn lift_path(&self, w: &[i32], sheet: usize) -> (Vec<i64>, usize) {
        lift_path(self.monodromy, w, sheet)
    }

    pub fn project(&self, chain: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = chain.iter().map(|&x| BigInt::from(x)).collect();
        self.projection.mul_vec(&v)
    }

    pub fn deck_matrix(&self) -> LiftMatrix {
        LiftMatrix { matrix: self.deck.clone(), zeta_exponent: 1 }
    }

    /// Sheet shift realized by the lift of `t[1,2n+1]`.
    pub fn twist_shift(&self) -> i64 {
        self.twist_shift
    }

    /// Matrix on homology induced by a liftable automorphism.
    pub fn lift_automorphism(&self, f: &SphereAutomorphism) -> Result<Matrix, CoverError> {
        let c = lift_sign(self.monodromy, f)
            .ok_or_else(|| CoverError::NotLiftable("automorphism".into()))?;
        if self.variant == Variant::Boundary && c != 1 {
            return Err(CoverError::NotLiftable("parity-reversing class on the boundary model".into()));
        }
        let chains = self.chain_matrix(f, c);
        // the filling relations must be carried into themselves
        if !self.projection.mul(&chains.mul(&self.fillings)).is_zero() {
            return Err(CoverError::NotLiftable("filling relations not preserved".into()));
        }
        Ok(self.projection.mul(&chains.mul(&self.section)))
    }

    fn chain_matrix(&self, f: &SphereAutomorphism, c: i64) -> Matrix {
        let m = self.punctures();
        let e = self.edges();
        let mut cols = vec![vec![BigInt::zero(); e]; e];
        for s in 0..self.k {
            let start = self.monodromy.reduce(c * s as i64);
            for j in 1..m {
                let (chain, _) = self.lift_path(f.image(j), start);
                cols[edge(m, s, j)] = chain.into_iter().map(BigInt::from).collect();
            }
        }
        Matrix::from_columns(e, &cols)
    }

    /// Cached matrix of a generator and of its inverse.
    pub fn generator_matrix(&self, g: &Generator) -> Option<&(Matrix, Matrix)> {
        self.generators.get(g)
    }

    /// The sheet-0 lift of a liftable word.
    pub fn lift_matrix(&self, w: &Word) -> Result<LiftMatrix, CoverError> {
        if is_liftable(w, self.n)? == ParityClass::Neither {
            return Err(CoverError::NotLiftable(w.to_string()));
        }
        let matrix = match self.product_of_generators(w) {
            Some(m) => m,
            None => self.lift_automorphism(&rep_of_word(w, self.punctures())?)?,
        };
        Ok(LiftMatrix { matrix, zeta_exponent: 0 })
    }

    fn product_of_generators(&self, w: &Word) -> Option<Matrix> {
        let mut acc = Matrix::identity(self.rank);
        for (g, e) in w.letters() {
            let (fwd, inv) = self.generators.get(g)?;
            let step = if *e > 0 { fwd } else { inv };
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(step);
            }
        }
        Some(acc)
    }

    /// `Some(e)` with `0 <= e < k` if `a = Z^e`.
    pub fn deck_power(&self, a: &Matrix) -> Option<usize> {
        let mut z = Matrix::identity(self.rank);
        for e in 0..self.k {
            if &z == a {
                return Some(e);
            }
            z = z.mul(&self.deck);
        }
        None
    }

    /// Check one relator of an SMod presentation against this model.
    pub fn verify_smod_relator(&self, relator: &Relator) -> Result<SmodCheck, CoverError> {
        self.verify_smod_word(&relator.word)
    }

    /// Whether `word` is the identity of SMod, with the evidence.
    pub fn verify_smod_word(&self, word: &Word) -> Result<SmodCheck, CoverError> {
        let m = self.punctures();
        let f = rep_of_word(word, m)?;
        let max_image_length = f.max_image_length();
        let matrix = self.lift_matrix(word)?.matrix;
        if self.variant == Variant::Boundary {
            let projected_holds = f.is_identity();
            let holds = projected_holds && matrix.is_identity();
            return Ok(SmodCheck {
                verdict: if holds { SmodVerdict::Holds } else { SmodVerdict::MatrixMismatch },
                projected_holds,
                exponent: matrix.is_identity().then_some(0),
                conjugator_exponent: None,
                max_image_length,
            });
        }
        let conj = f.is_inner();
        let conjugator_exponent = conj.as_ref().map(|g| {
            // conjugation by g shifts sheets by ε(g); Z is the shift to `twist_shift`
            self.monodromy.reduce(self.monodromy.of_word(g) * self.twist_shift)
        });
        let exponent = self.deck_power(&matrix);
        let verdict = match (conj.is_some(), exponent) {
            (true, Some(0)) => SmodVerdict::Holds,
            (true, Some(e)) => SmodVerdict::ZetaMismatch(e),
            _ => SmodVerdict::MatrixMismatch,
        };
        Ok(SmodCheck {
            verdict,
            projected_holds: conj.is_some(),
            exponent,
            conjugator_exponent,
            max_image_length,
        })
    }

    /// `2 - χ` for the closed surface, or `1 - χ + (k - 1)` for the surface
    /// with boundary relative to the `k` sheet points; must equal `rank`.
    pub fn euler_rank(&self) -> usize {
        let (k, m) = (self.k as i64, self.punctures() as i64);
        let r = match self.variant {
            Variant::Closed | Variant::Marked => {
                let chi = k * (2 - m) + m;
                2 - chi
            }
            Variant::Boundary => {
                // disk minus 2n+1 points, with those points filled back in
                let chi = k * (1 - (m - 1)) + (m - 1);
                1 - chi + (k - 1)
            }
        };
        r as usize
    }

    /// The lift of `t[1,2i-1]` computed from the Schreier data alone: the
    /// deck action on cycles over the disk around punctures `1..2i-1`, the
    /// identity on the Schreier generators that leave it.
    pub fn partial_rotation(&self, i: usize) -> Result<Matrix, CoverError> {
        let m = self.punctures();
        if self.variant == Variant::Boundary || i < 2 || 2 * i - 1 > m - 1 {
            return Err(CoverError::InvalidParams(format!("partial rotation {i} on {}", self.variant)));
        }
        let top = 2 * i - 1;
        let e = self.edges();
        // cycles of the subgraph spanned by edges j <= top
        let outside = self.k * (m - 1 - top);
        let mut incidence = Matrix::zeros(self.k + outside, e);
        let mut row = self.k;
        for s in 0..self.k {
            for j in 1..m {
                let c = edge(m, s, j);
                if j <= top {
                    let t = self.monodromy.reduce(s as i64 + self.monodromy.of_loop(j));
                    incidence.add_to(t, c, &BigInt::one());
                    incidence.add_to(s, c, &-BigInt::one());
                } else {
                    // edges off the subgraph carry no weight
                    incidence.set(row, c, BigInt::one());
                    row += 1;
                }
            }
        }
        let sub = kernel_basis(&incidence);
        let mut moved = Vec::new();
        for c in 0..sub.cols() {
            moved.push(self.projection.mul_vec(&sub.column(c)));
        }
        let w: FreeWord = (1..=top as i32).collect();
        let mut ys: Vec<FreeWord> = (top + 1..m).map(|j| vec![j as i32]).collect();
        ys.push(w.clone());
        let mut fixed = Vec::new();
        for y in &ys {
            for s in 0..self.k {
                let back = self.monodromy.reduce(s as i64 + self.monodromy.of_word(y));
                let mut word: FreeWord = w.repeat(s);
                word.extend_from_slice(y);
                word.extend(free_inverse(&w.repeat(back)));
                let (chain, end) = self.lift_path(&word, 0);
                debug_assert_eq!(end, 0);
                fixed.push(self.project(&chain));
            }
        }
        let mut gens = moved.clone();
        gens.extend(fixed.iter().cloned());
        let g = Matrix::from_columns(self.rank, &gens);
        let mut images: Vec<Vec<BigInt>> = moved.iter().map(|v| self.deck.mul_vec(v)).collect();
        images.extend(fixed);
        let g_img = Matrix::from_columns(self.rank, &images);
        let right = right_inverse(&g)?;
        let out = g_img.mul(&right);
        if out.mul(&g) != g_img {
            return Err(CoverError::Inconsistent(format!("partial rotation {i} is not well defined")));
        }
        Ok(out)
    }

    /// Row-major dump of a matrix with the model header.
    pub fn dump(&self, a: &Matrix) -> String {
        format!(
            "rank={} n={} k={} variant={}\n{}",
            self.rank, self.n, self.k, self.variant, a
        )
    }
}

/// A right inverse of a full-row-rank matrix whose invariant factors are all 1.
fn right_inverse(g: &Matrix) -> Result<Matrix, CoverError> {
    let s = smith_normal_form(g);
    if s.rank != g.rows() || s.invariants.iter().any(|d| !d.is_one()) {
        return Err(CoverError::Inconsistent("generators do not span homology".into()));
    }
    // g = u_inv [I 0] v_inv, so g * v[:, ..rank] * u = I
    Ok(s.v.col_block(0, s.rank).mul(&s.u))
}

fn lift_path(mono: Monodromy, w: &[i32], sheet: usize) -> (Vec<i64>, usize) {
    let m = mono.punctures();
    let mut chain = vec![0i64; mono.k * (m - 1)];
    let mut cur = sheet as i64;
    for &x in w {
        let j = x.unsigned_abs() as usize;
        let step = mono.of_loop(j);
        if x > 0 {
            chain[edge(m, mono.reduce(cur), j)] += 1;
            cur += step;
        } else {
            cur -= step;
            chain[edge(m, mono.reduce(cur), j)] -= 1;
        }
    }
    (chain, mono.reduce(cur))
}

/// `c` with `ε ∘ f = c ε` on every free generator, if `c = ±1` exists.
fn lift_sign(mono: Monodromy, f: &SphereAutomorphism) -> Option<i64> {
    let m = mono.punctures();
    let k = mono.k as i64;
    [1i64, -1].into_iter().find(|&c| {
        (1..m).all(|j| (mono.of_word(f.image(j)) - c * mono.of_loop(j)).rem_euclid(k) == 0)
    })
}

/// Generators whose matrices are cached for a variant.
fn model_generators(n: usize, variant: Variant) -> Vec<Generator> {
    let top_h = if variant == Variant::Closed { 2 * n } else { 2 * n - 1 };
    let mut gens: Vec<Generator> = (1..=top_h).map(|i| Generator::h(i as u32)).collect();
    for i in 1..=2 * n + 1 {
        for j in i + 1..=2 * n + 1 {
            gens.push(Generator::t(i as u32, j as u32));
        }
    }
    if variant == Variant::Closed {
        gens.push(Generator::r());
    }
    gens
}

pub fn build_cover(n: usize, k: usize, variant: Variant) -> Result<CoverModel, CoverError> {
    if n == 0 || k < 3 {
        return Err(CoverError::InvalidParams(format!("n={n} k={k}")));
    }
    let monodromy = Monodromy { n, k };
    let m = 2 * n + 2;
    let e = k * (m - 1);
    // N_j = sum over sheets of e_{s,j}: the lift of x_j^k
    let mut fillings: Vec<Vec<BigInt>> = (1..m)
        .map(|j| {
            let mut v = vec![BigInt::zero(); e];
            for s in 0..k {
                v[edge(m, s, j)] = BigInt::one();
            }
            v
        })
        .collect();
    let (projection, section) = match variant {
        Variant::Boundary => quotient_maps(&Matrix::from_columns(e, &fillings), e)?,
        Variant::Closed | Variant::Marked => {
            let last: FreeWord = (1..m as i32).rev().map(|x| -x).collect();
            let (chain, end) = lift_path(monodromy, &last.repeat(k), 0);
            debug_assert_eq!(end, 0);
            fillings.push(chain.into_iter().map(BigInt::from).collect());
            let mut boundary = Matrix::zeros(k, e);
            for s in 0..k {
                for j in 1..m {
                    let t = monodromy.reduce(s as i64 + monodromy.of_loop(j));
                    boundary.add_to(t, edge(m, s, j), &BigInt::one());
                    boundary.add_to(s, edge(m, s, j), &-BigInt::one());
                }
            }
            let sm = smith_normal_form(&boundary);
            let cycles = sm.v.col_block(sm.rank, e);
            let coords = sm.v_inv.row_block(sm.rank, e);
            let fill_coords = coords.mul(&Matrix::from_columns(e, &fillings));
            let (q, sec) = quotient_maps(&fill_coords, cycles.cols())?;
            (q.mul(&coords), cycles.mul(&sec))
        }
    };
    let fillings = Matrix::from_columns(e, &fillings);
    let rank = projection.rows();
    let mut shift = Matrix::zeros(e, e);
    for s in 0..k {
        for j in 1..m {
            shift.set(edge(m, (s + 1) % k, j), edge(m, s, j), BigInt::one());
        }
    }
    let deck_shift = projection.mul(&shift).mul(&section);

    let twist = rep_of_word(&Word::gen(Generator::t(1, 2 * n as u32 + 1)), m)?;
    let twist_shift = match SphereAutomorphism::is_inner(&twist) {
        Some(g) => monodromy.of_word(&g),
        None => return Err(CoverError::Inconsistent("t[1,2n+1] is not inner".into())),
    };
    let deck = if twist_shift == 1 { deck_shift } else { deck_shift.inverse_unimodular()? };

    let mut model = CoverModel {
        n,
        k,
        variant,
        monodromy,
        rank,
        projection,
        section,
        deck,
        fillings,
        twist_shift,
        generators: HashMap::new(),
    };
    for g in model_generators(n, variant) {
        let fwd = model.lift_automorphism(&rep_of_word(&Word::gen(g.clone()), m)?)?;
        let inv = model.lift_automorphism(&rep_of_word(&Word::power(g.clone(), -1), m)?)?;
        model.generators.insert(g, (fwd, inv));
    }
    Ok(model)
}

/// Projection onto, and section of, the free quotient `Z^dim / span(cols)`.
fn quotient_maps(relations: &Matrix, dim: usize) -> Result<(Matrix, Matrix), CoverError> {
    let s = smith_normal_form(relations);
    if s.invariants.iter().any(|d| !d.is_one()) {
        return Err(CoverError::Inconsistent("filled homology has torsion".into()));
    }
    Ok((s.u.row_block(s.rank, dim), s.u_inv.col_block(s.rank, dim)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(build_cover(1, 3, Variant::Closed).unwrap().rank, 4);
        assert_eq!(build_cover(1, 3, Variant::Boundary).unwrap().rank, 6);
    }
}
