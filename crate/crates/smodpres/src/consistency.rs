//! Structural cross-checks: the permutation quotient, the central boundary
//! twist, and generation by the small generating sets.

use std::time::Instant;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::cover::{build_cover, CoverError, SmodVerdict};
use crate::linalg::Matrix;
use crate::perm::{generated_subgroup, parity_class, psi_generator, ParityClass, PermError};
use crate::presentations::{build, chain_rhs, GroupFamily, PresentationError, Variant};
use crate::report::ReportLine;
use crate::sphere::{equal_in_disk, equal_in_mod, rep_of_word, SphereError};
use crate::words::{substitute_with, Family, Generator, Word, WordError};

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("no rewrite of {0} into the small generating set")]
    RewriteNotFound(Generator),
    #[error("check not defined for {0}")]
    Unsupported(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Verdict of one structural check. A failing report always has a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub ok: bool,
    /// Check-specific size: closure order, matrix rank, rewrite length.
    pub measure: usize,
    pub witness: Vec<String>,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn to_line(&self) -> ReportLine {
        ReportLine {
            tag: self.name.clone(),
            ok: self.ok,
            max_image_length: self.measure,
            elapsed_ms: self.elapsed_ms,
            witness: (!self.witness.is_empty()).then(|| self.witness.join("; ")),
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The permutation images of the generators of the closed (or marked)
/// presentation generate the whole parity-preserving/reversing group (or its
/// point stabilizer).
pub fn check_psi_surjectivity(n: usize, variant: Variant) -> Result<CheckReport, CheckError> {
    let start = Instant::now();
    let m = 2 * n + 2;
    if variant == Variant::Boundary {
        return Err(CheckError::Unsupported("psi surjectivity on the boundary variant".into()));
    }
    let p = build(GroupFamily::LMod(variant), Some(n), None)?;
    let gens = p
        .generators
        .iter()
        .map(|g| psi_generator(g, m))
        .collect::<Result<Vec<_>, _>>()?;
    let group = generated_subgroup(&gens, m);
    let expected = match variant {
        Variant::Closed => 2 * factorial(n + 1).pow(2),
        _ => factorial(n + 1) * factorial(n),
    };
    let mut witness = Vec::new();
    if group.len() != expected {
        witness.push(format!("closure has {} elements, expected {expected}", group.len()));
    }
    for q in &group {
        let class = parity_class(q)?;
        let member = match variant {
            Variant::Closed => class != ParityClass::Neither,
            _ => class == ParityClass::Preserving && q.apply(m) == m,
        };
        if !member {
            witness.push(format!("{q} lies outside the parity group"));
            break;
        }
    }
    Ok(CheckReport {
        name: format!("psi-surjective[{variant},{n}]"),
        ok: witness.is_empty(),
        measure: group.len(),
        witness,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// On the boundary cover, the k-th power of the lift of `t[1,2n+1]` is the
/// boundary twist and commutes with every generator; downstairs the k-th power
/// is a nontrivial central braid.
pub fn check_central_twist(n: usize, k: usize) -> Result<CheckReport, CheckError> {
    let start = Instant::now();
    let model = build_cover(n, k, Variant::Boundary)?;
    let m = 2 * n + 2;
    let top = Word::gen(Generator::t(1, 2 * n as u32 + 1));
    let lift = model.lift_matrix(&top)?.matrix;
    let power = lift.pow(k as u64);
    let mut witness = Vec::new();

    // The boundary curve is the lift of (x_1 ... x_{2n+1})^k, which is a sum of
    // filled branch classes; a twist about a null-homologous curve acts trivially.
    let loop_word: Vec<i32> = (1..m as i32).collect();
    let (chain, _) = model.lift_path(&loop_word.repeat(k), 0);
    let boundary_class = model.project(&chain);
    if boundary_class.iter().any(|x| !x.is_zero()) {
        witness.push("boundary class is not null-homologous".to_string());
    }
    let boundary_twist = Matrix::identity(model.rank);
    if power != boundary_twist {
        witness.push(format!("lift^k differs from the boundary twist:\n{}", model.dump(&power)));
    }
    let central = top.pow(k as i64);
    if rep_of_word(&central, m)?.is_identity() {
        witness.push("t[1,2n+1]^k acts trivially on the disk group".to_string());
    }
    for g in model_boundary_generators(n) {
        let gw = Word::gen(g.clone());
        let (gm, _) = model.generator_matrix(&g).expect("boundary generator cached");
        if gm.mul(&power) != power.mul(gm) {
            witness.push(format!("lift^k does not commute with {g}"));
        }
        if !equal_in_disk(&gw.mul(&central), &central.mul(&gw), m)? {
            witness.push(format!("t[1,2n+1]^k does not commute with {g} in the disk group"));
        }
    }
    Ok(CheckReport {
        name: format!("central-twist[{n},{k}]"),
        ok: witness.is_empty(),
        measure: model.rank,
        witness,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn model_boundary_generators(n: usize) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (1..2 * n).map(|i| Generator::h(i as u32)).collect();
    for i in 1..=2 * n + 1 {
        for j in i + 1..=2 * n + 1 {
            gens.push(Generator::t(i as u32, j as u32));
        }
    }
    gens
}

/// The small generating set of a family.
pub fn small_generators(family: GroupFamily, n: usize) -> Vec<Generator> {
    let closed = matches!(family, GroupFamily::LMod(Variant::Closed) | GroupFamily::SMod(Variant::Closed));
    let mut gens: Vec<Generator> = if closed {
        (1..2 * n).step_by(2).map(|i| Generator::h(i as u32)).collect()
    } else {
        (1..2 * n).map(|i| Generator::h(i as u32)).collect()
    };
    gens.push(Generator::t(1, 2));
    if closed {
        gens.push(Generator::r());
    }
    gens
}

struct Rewriter {
    n: usize,
    closed: bool,
}

impl Rewriter {
    /// Even half-twists come from odd ones through conjugation by `r`.
    fn h(&self, i: usize) -> Word {
        let hi = Word::gen(Generator::h(i as u32));
        if self.closed && i.is_multiple_of(2) {
            let r = Word::gen(Generator::r());
            r.conjugate(&Word::gen(Generator::h((2 * self.n - i + 1) as u32)))
        } else {
            hi
        }
    }

    /// `t[i,i+1] = h_{i-1} t[i-1,i] h_{i-1}^-1`, down to `t[1,2]`.
    fn adjacent(&self, i: usize) -> Word {
        if i == 1 {
            Word::gen(Generator::t(1, 2))
        } else {
            self.h(i - 1).conjugate(&self.adjacent(i - 1))
        }
    }

    fn rewrite(&self, g: &Generator) -> Result<Word, CheckError> {
        let missing = || CheckError::RewriteNotFound(g.clone());
        match g.family {
            Family::H => Ok(self.h(g.index(0) as usize)),
            Family::R if self.closed => Ok(Word::gen(g.clone())),
            Family::T => {
                let (i, j) = (g.index(0) as usize, g.index(1) as usize);
                if j == i + 1 {
                    return Ok(self.adjacent(i));
                }
                let rhs = chain_rhs(i, j)?;
                let out = substitute_with(&rhs, |x| match x.family {
                    Family::H => Some(self.h(x.index(0) as usize)),
                    Family::T if x.index(1) == x.index(0) + 1 => Some(self.adjacent(x.index(0) as usize)),
                    _ => None,
                })?;
                Ok(out)
            }
            _ => Err(missing()),
        }
    }
}

/// Rewrite every declared generator into the small generating set and certify
/// each rewrite in the faithful model (or the cover model for SMod).
pub fn check_generation(
    family: GroupFamily,
    n: usize,
    k: Option<usize>,
) -> Result<CheckReport, CheckError> {
    let start = Instant::now();
    let (variant, smod) = match family {
        GroupFamily::LMod(v) => (v, false),
        GroupFamily::SMod(v) => (v, true),
        f => return Err(CheckError::Unsupported(format!("generation for {f}"))),
    };
    let p = build(family, Some(n), k)?;
    let m = 2 * n + 2;
    let rw = Rewriter { n, closed: variant == Variant::Closed };
    let model = if smod { Some(build_cover(n, k.unwrap_or(3), variant)?) } else { None };
    let small = small_generators(family, n);
    let mut witness = Vec::new();
    let mut longest = 0;
    for g in &p.generators {
        let w = rw.rewrite(g)?;
        if let Some(x) = w.generators().find(|x| !small.contains(x)) {
            witness.push(format!("rewrite of {g} uses {x}"));
            continue;
        }
        longest = longest.max(w.len());
        let gw = Word::gen(g.clone());
        let certified = match &model {
            Some(model) => model.verify_smod_word(&gw.mul(&w.inverse()))?.verdict == SmodVerdict::Holds,
            None if variant == Variant::Boundary => equal_in_disk(&gw, &w, m)?,
            None => equal_in_mod(&gw, &w, m)?,
        };
        if !certified {
            witness.push(format!("{g} != {w}"));
        }
    }
    let kk = k.map(|k| format!(",{k}")).unwrap_or_default();
    Ok(CheckReport {
        name: format!("generation[{family},{n}{kk}]"),
        ok: witness.is_empty(),
        measure: longest,
        witness,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
