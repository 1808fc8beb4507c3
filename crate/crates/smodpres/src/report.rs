//! Per-relator verification reports shared by both engines and the
//! structural checks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cover::{build_cover, CoverError, CoverModel, SmodVerdict};
use crate::perm::{psi, PermError};
use crate::presentations::{GroupFamily, Presentation, RelTag, Relator, Variant};
use crate::sphere::{rep_of_word, SphereError};
use crate::words::{Generator, Word};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("the cover engine needs an SMod family or lmod-boundary, not {0}")]
    EngineUnsupported(GroupFamily),
    #[error("unknown engine {0:?}")]
    UnknownEngine(String),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Sphere,
    Cover,
    Both,
}

impl FromStr for Engine {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sphere" => Ok(Engine::Sphere),
            "cover" => Ok(Engine::Cover),
            "both" => Ok(Engine::Both),
            _ => Err(VerifyError::UnknownEngine(s.to_string())),
        }
    }
}

/// One line of a report: `<tag> OK|FAIL <max-image-length> <elapsed-ms>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub tag: String,
    pub ok: bool,
    pub max_image_length: usize,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.tag,
            if self.ok { "OK" } else { "FAIL" },
            self.max_image_length,
            self.elapsed_ms
        )
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn all_ok(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| !l.ok)
    }

    /// Text form; failing lines are followed by an indented witness.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&l.to_string());
            out.push('\n');
            if let (false, Some(w)) = (l.ok, &l.witness) {
                out.push_str(&format!("  witness: {w}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Result of checking one relator in one engine.
#[derive(Debug, Clone)]
struct Outcome {
    ok: bool,
    max_image_length: usize,
    witness: Option<String>,
}

/// The relator holds in the sphere group (closed, marked, pure), the disk
/// group (boundary), or the permutation group (parity quotients).
fn sphere_outcome(p: &Presentation, rel: &Relator) -> Result<Outcome, VerifyError> {
    match p.family {
        GroupFamily::W | GroupFamily::WStar => {
            let n = p.params.n.unwrap_or(1);
            let img = psi(&rel.word, 2 * n + 2)?;
            let ok = img.is_identity();
            let witness = (!ok).then(|| format!("permutation image {img}"));
            Ok(Outcome { ok, max_image_length: 0, witness })
        }
        _ => {
            let m = punctures(p);
            let f = rep_of_word(&rel.word, m)?;
            let boundary = matches!(
                p.family,
                GroupFamily::LMod(Variant::Boundary) | GroupFamily::SMod(Variant::Boundary)
            );
            let ok = if boundary { f.is_identity() } else { f.is_inner().is_some() };
            let witness = (!ok).then(|| {
                let imgs: Vec<String> = (1..m).map(|j| format!("x{j}->{:?}", f.image(j))).collect();
                format!("not {}: {}", if boundary { "identity" } else { "inner" }, imgs.join(" "))
            });
            Ok(Outcome { ok, max_image_length: f.max_image_length(), witness })
        }
    }
}

fn cover_outcome(model: &CoverModel, rel: &Relator) -> Result<Outcome, VerifyError> {
    let check = model.verify_smod_relator(rel)?;
    let ok = check.verdict == SmodVerdict::Holds;
    let witness = (!ok).then(|| {
        format!(
            "{} (projected check {})",
            check.verdict,
            if check.projected_holds { "holds" } else { "fails" }
        )
    });
    Ok(Outcome { ok, max_image_length: check.max_image_length, witness })
}

pub fn punctures(p: &Presentation) -> usize {
    match p.family {
        GroupFamily::PMod => p.params.m.unwrap_or(0),
        _ => 2 * p.params.n.unwrap_or(1) + 2,
    }
}

/// Cover model matching a presentation; lmod-boundary uses degree `k` (default 3).
pub fn cover_for(p: &Presentation, k: Option<usize>) -> Result<CoverModel, VerifyError> {
    let n = p.params.n.unwrap_or(1);
    match p.family {
        GroupFamily::SMod(v) => Ok(build_cover(n, p.params.k.or(k).unwrap_or(3), v)?),
        GroupFamily::LMod(Variant::Boundary) => Ok(build_cover(n, k.unwrap_or(3), Variant::Boundary)?),
        f => Err(VerifyError::EngineUnsupported(f)),
    }
}

/// Verify every relator, in parallel; lines come out sorted by tag.
pub fn verify_presentation(
    p: &Presentation,
    engine: Engine,
    k: Option<usize>,
) -> Result<Report, VerifyError> {
    let model = match engine {
        Engine::Sphere => None,
        Engine::Cover | Engine::Both => Some(cover_for(p, k)?),
    };
    let mut indexed: Vec<(RelTag, ReportLine)> = p
        .relators
        .par_iter()
        .map(|rel| {
            let start = Instant::now();
            let sphere = match engine {
                Engine::Cover => None,
                _ => Some(sphere_outcome(p, rel)?),
            };
            let cover = match &model {
                Some(m) => Some(cover_outcome(m, rel)?),
                None => None,
            };
            let parts: Vec<&Outcome> = sphere.iter().chain(cover.iter()).collect();
            let ok = parts.iter().all(|o| o.ok);
            let witness = parts.iter().filter_map(|o| o.witness.clone()).collect::<Vec<_>>();
            let line = ReportLine {
                tag: rel.tag.to_string(),
                ok,
                max_image_length: parts.iter().map(|o| o.max_image_length).max().unwrap_or(0),
                elapsed_ms: start.elapsed().as_millis(),
                witness: (!witness.is_empty()).then(|| witness.join("; ")),
            };
            Ok((rel.tag.clone(), line))
        })
        .collect::<Result<_, VerifyError>>()?;
    indexed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Report { lines: indexed.into_iter().map(|(_, l)| l).collect() })
}

/// Off-by-one corruptions of the relators that carry a nontrivial exponent,
/// labelled by the relation they perturb. Only relators present in `p` are
/// corrupted.
pub fn corrupted_relators(p: &Presentation) -> Vec<Relator> {
    let n = p.params.n.unwrap_or(1);
    let k = match p.family {
        GroupFamily::SMod(_) => p.params.k.unwrap_or(3),
        _ => 1,
    };
    let top = Word::gen(Generator::t(1, 2 * n as u32 + 1));
    let mut out = Vec::new();
    for rel in &p.relators {
        let word = match rel.tag {
            RelTag::MarkedTwist { .. } => top.pow(k as i64 + 1),
            RelTag::ClosedChain { .. } => {
                // one extra factor of the half-twist block
                let block: Word = (1..=2 * n).rev().map(|i| Word::gen(Generator::h(i as u32))).fold(
                    Word::identity(),
                    |acc, h| acc.mul(&h),
                );
                rel.word.mul(&block)
            }
            RelTag::RInvert { .. } => rel.word.mul(&top),
            _ => continue,
        };
        out.push(Relator { tag: rel.tag.clone(), word });
    }
    out
}

/// `p` with its exponent-carrying relators replaced by the corruptions above,
/// and one further relator multiplied by a generator so that at least one
/// relator is false whatever the exponents are worth.
pub fn corrupt(p: &Presentation) -> Presentation {
    let bad = corrupted_relators(p);
    let mut q = p.clone();
    for b in &bad {
        if let Some(r) = q.relators.iter_mut().find(|r| r.tag == b.tag) {
            *r = b.clone();
        }
    }
    let spare = q.relators.iter_mut().find(|r| bad.iter().all(|b| b.tag != r.tag));
    if let (Some(r), Some(g)) = (spare, p.generators.first()) {
        r.word = r.word.mul(&Word::gen(g.clone()));
    }
    q
}
