//! Parametric builders for the presentations of the pure, liftable and
//! balanced superelliptic mapping class groups, and for the parity quotients.

mod lemmas;
mod relations;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Generator, Word, WordError};

pub use lemmas::{lemma_suite, LemmaPair};
pub use relations::{chain_rhs, relation, RelTag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("index out of range for {tag}: {reason}")]
    IndexOutOfRange { tag: String, reason: String },
    #[error("k must be at least 3, got {0}")]
    InvalidK(usize),
    #[error("n must be at least 1, got {0}")]
    InvalidN(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    Boundary,
    Marked,
    Closed,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Boundary => "boundary",
            Variant::Marked => "marked",
            Variant::Closed => "closed",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFamily {
    PMod,
    W,
    WStar,
    LMod(Variant),
    SMod(Variant),
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 9] = [
        GroupFamily::PMod,
        GroupFamily::W,
        GroupFamily::WStar,
        GroupFamily::LMod(Variant::Boundary),
        GroupFamily::LMod(Variant::Marked),
        GroupFamily::LMod(Variant::Closed),
        GroupFamily::SMod(Variant::Boundary),
        GroupFamily::SMod(Variant::Marked),
        GroupFamily::SMod(Variant::Closed),
    ];

    pub fn needs_k(self) -> bool {
        matches!(self, GroupFamily::SMod(_))
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::PMod => f.write_str("pmod"),
            GroupFamily::W => f.write_str("w"),
            GroupFamily::WStar => f.write_str("w-star"),
            GroupFamily::LMod(v) => write!(f, "lmod-{v}"),
            GroupFamily::SMod(v) => write!(f, "smod-{v}"),
        }
    }
}

impl FromStr for GroupFamily {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupFamily::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| PresentationError::UnknownFamily(s.to_string()))
    }
}

/// `n` for the mapping class families and the parity groups, `m` for the
/// pure group; `k` only for the superelliptic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub tag: RelTag,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub family: GroupFamily,
    pub params: Params,
    pub generators: Vec<Generator>,
    pub relators: Vec<Relator>,
}

fn h(i: usize) -> Word {
    Word::gen(Generator::h(i as u32))
}

fn r() -> Word {
    Word::gen(Generator::r())
}

fn comm(a: &Word, b: &Word) -> Word {
    Word::commutator(a, b)
}

/// Relator `left * right^-1`.
fn rel(left: &Word, right: &Word) -> Word {
    left.mul(&right.inverse())
}

/// The index condition under which the twists about `(i,j)` and `(k,l)` commute.
pub fn twists_commute(i: usize, j: usize, k: usize, l: usize) -> bool {
    let one = |i: usize, j: usize, k: usize, l: usize| j < k || (k <= i && j <= l) || l < i;
    one(i, j, k, l) || one(k, l, i, j)
}

/// Whether `h_k` commutes with `t_{i,j}` by the disjointness/nesting pattern.
pub fn half_twist_commutes(k: usize, i: usize, j: usize) -> bool {
    k + 2 < i || (i <= k && k + 2 <= j) || j < k
}

impl Presentation {
    fn new(family: GroupFamily, params: Params) -> Self {
        Presentation { family, params, generators: Vec::new(), relators: Vec::new() }
    }

    fn push_tag(&mut self, tag: RelTag) {
        let word = relation(&tag).expect("builder emits in-range tags");
        self.relators.push(Relator { tag, word });
    }

    pub fn relator(&self, tag: &RelTag) -> Option<&Relator> {
        self.relators.iter().find(|r| &r.tag == tag)
    }

    /// Every generator occurring in a relator is declared.
    pub fn check_declared(&self) -> Result<(), PresentationError> {
        for rel in &self.relators {
            for g in rel.word.generators() {
                if !self.generators.contains(g) {
                    return Err(PresentationError::Malformed(format!(
                        "relator {} uses undeclared generator {g}",
                        rel.tag
                    )));
                }
            }
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<(), PresentationError> {
    if n == 0 {
        Err(PresentationError::InvalidN(n))
    } else {
        Ok(())
    }
}

/// Pure mapping class group of the sphere with `m` marked points.
pub fn pmod_presentation(m: usize) -> Presentation {
    let mut p = Presentation::new(GroupFamily::PMod, Params { n: None, m: Some(m), k: None });
    let mut pairs = Vec::new();
    for i in 1..m {
        for j in i + 1..m {
            if (i, j) != (1, m - 1) {
                pairs.push((i, j));
            }
        }
    }
    p.generators = pairs.iter().map(|&(i, j)| Generator::t(i as u32, j as u32)).collect();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a + 1..] {
            if twists_commute(i, j, k, l) {
                p.push_tag(RelTag::CommTT { i, j, k, l });
            }
        }
    }
    push_pentagonals(&mut p, m);
    p
}

fn push_pentagonals(p: &mut Presentation, top: usize) {
    for i in 1..=top {
        for j in i + 1..=top {
            for k in j + 1..=top {
                for l in k + 1..=top {
                    for m in l + 1..=top {
                        p.push_tag(RelTag::Pentagonal { i, j, k, l, m });
                    }
                }
            }
        }
    }
}

/// The parity subgroup of `S_{2n+2}`, or its stabilizer of the last point.
pub fn w_presentation(n: usize, starred: bool) -> Presentation {
    let family = if starred { GroupFamily::WStar } else { GroupFamily::W };
    let mut p = Presentation::new(family, Params { n: Some(n), m: None, k: None });
    let top = if starred { 2 * n - 1 } else { 2 * n };
    p.generators = (1..=top).map(|i| Generator::h(i as u32)).collect();
    if !starred {
        p.generators.push(Generator::r());
    }
    for i in 1..=top {
        p.push_tag(RelTag::WInvolution { i });
    }
    for i in 1..=top {
        for j in i + 1..=top {
            if j - i == 1 || j - i >= 3 {
                p.push_tag(RelTag::WComm { i, j });
            }
        }
    }
    for i in 1..=top.saturating_sub(2) {
        p.push_tag(RelTag::WBraid { i });
    }
    if !starred {
        p.push_tag(RelTag::WRSquare);
        for i in 1..=top {
            p.push_tag(RelTag::WRConj { n, i });
        }
    }
    p
}

fn lmod_boundary_relators(p: &mut Presentation, n: usize) {
    let nh = 2 * n - 1;
    let nt = 2 * n + 1;
    for i in 1..=nh {
        for j in i + 3..=nh {
            p.push_tag(RelTag::CommHH { i, j });
        }
    }
    let tpairs: Vec<(usize, usize)> =
        (1..=nt).flat_map(|i| (i + 1..=nt).map(move |j| (i, j))).collect();
    for (a, &(i, j)) in tpairs.iter().enumerate() {
        for &(k, l) in &tpairs[a + 1..] {
            if twists_commute(i, j, k, l) {
                p.push_tag(RelTag::CommTT { i, j, k, l });
            }
        }
    }
    for kk in 1..=nh {
        for &(i, j) in &tpairs {
            if half_twist_commutes(kk, i, j) {
                p.push_tag(RelTag::CommHT { k: kk, i, j });
            }
        }
    }
    for i in 1..=2 * n - 1 {
        for positive in [true, false] {
            p.push_tag(RelTag::ConjA { i, positive });
        }
    }
    for i in 1..=(2 * n).saturating_sub(2) {
        for positive in [true, false] {
            p.push_tag(RelTag::ConjB { i, positive });
        }
    }
    for i in 1..=(2 * n).saturating_sub(3) {
        for positive in [true, false] {
            p.push_tag(RelTag::ConjC { i, positive });
        }
    }
    for i in 1..=(2 * n).saturating_sub(2) {
        p.push_tag(RelTag::LiftAdjacent { i });
    }
    for i in 1..=(2 * n).saturating_sub(3) {
        p.push_tag(RelTag::LiftSkip { i });
    }
    push_pentagonals(p, 2 * n + 2);
    for &(i, j) in &tpairs {
        if j - i >= 2 {
            p.push_tag(RelTag::Chain { i, j });
        }
    }
}

fn boundary_generators(n: usize) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (1..=2 * n - 1).map(|i| Generator::h(i as u32)).collect();
    for i in 1..=2 * n + 1 {
        for j in i + 1..=2 * n + 1 {
            gens.push(Generator::t(i as u32, j as u32));
        }
    }
    gens
}

fn closed_generators(n: usize) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (1..=2 * n).map(|i| Generator::h(i as u32)).collect();
    for i in 1..=2 * n + 1 {
        for j in i + 1..=2 * n + 1 {
            gens.push(Generator::t(i as u32, j as u32));
        }
    }
    gens.push(Generator::r());
    gens
}

/// Liftable mapping class group: one boundary component, one marked point, or closed.
pub fn lmod_presentation(variant: Variant, n: usize) -> Result<Presentation, PresentationError> {
    check_n(n)?;
    let mut p =
        Presentation::new(GroupFamily::LMod(variant), Params { n: Some(n), m: None, k: None });
    lmod_boundary_relators(&mut p, n);
    if variant == Variant::Boundary {
        p.generators = boundary_generators(n);
        return Ok(p);
    }
    p.push_tag(RelTag::MarkedTwist { n, k: 1 });
    if variant == Variant::Marked {
        p.generators = boundary_generators(n);
        return Ok(p);
    }
    p.generators = closed_generators(n);
    p.push_tag(RelTag::ClosedChain { n });
    push_r_relators(&mut p, n, false);
    Ok(p)
}

fn push_r_relators(p: &mut Presentation, n: usize, superelliptic: bool) {
    p.push_tag(RelTag::RSquare);
    for i in 1..=2 * n {
        p.push_tag(RelTag::RH { n, i });
    }
    for i in 2..=2 * n {
        p.push_tag(RelTag::RT { n, i });
    }
    for j in 2..=2 * n {
        if superelliptic && j % 2 == 1 {
            continue;
        }
        p.push_tag(RelTag::RT1 { n, j });
    }
    if superelliptic {
        for j in (3..2 * n).step_by(2) {
            p.push_tag(RelTag::RZeta { n, j });
        }
        p.push_tag(RelTag::RInvert { n });
    }
}

/// Balanced superelliptic mapping class group in the three variants.
pub fn smod_presentation(
    variant: Variant,
    n: usize,
    k: usize,
) -> Result<Presentation, PresentationError> {
    check_n(n)?;
    if k < 3 {
        return Err(PresentationError::InvalidK(k));
    }
    let mut p =
        Presentation::new(GroupFamily::SMod(variant), Params { n: Some(n), m: None, k: Some(k) });
    lmod_boundary_relators(&mut p, n);
    if variant == Variant::Boundary {
        p.generators = boundary_generators(n);
        return Ok(p);
    }
    p.push_tag(RelTag::MarkedTwist { n, k });
    if variant == Variant::Marked {
        p.generators = boundary_generators(n);
        return Ok(p);
    }
    p.generators = closed_generators(n);
    p.push_tag(RelTag::CommLastTwist { n });
    p.push_tag(RelTag::ClosedChain { n });
    push_r_relators(&mut p, n, true);
    Ok(p)
}

/// Build any family from its name-level parameters.
pub fn build(
    family: GroupFamily,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<Presentation, PresentationError> {
    let need_n = || n.ok_or_else(|| PresentationError::Malformed("missing --n".into()));
    match family {
        GroupFamily::PMod => Ok(pmod_presentation(need_n()?)),
        GroupFamily::W | GroupFamily::WStar => {
            let n = need_n()?;
            check_n(n)?;
            Ok(w_presentation(n, family == GroupFamily::WStar))
        }
        GroupFamily::LMod(v) => lmod_presentation(v, need_n()?),
        GroupFamily::SMod(v) => {
            let k = k.ok_or_else(|| PresentationError::Malformed("missing --k".into()))?;
            smod_presentation(v, need_n()?, k)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonRelator {
    tag: String,
    word: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPresentation {
    family: String,
    params: Params,
    generators: Vec<String>,
    relators: Vec<JsonRelator>,
}

impl Presentation {
    pub fn to_json(&self) -> String {
        let j = JsonPresentation {
            family: self.family.to_string(),
            params: self.params,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            relators: self
                .relators
                .iter()
                .map(|r| JsonRelator { tag: r.tag.to_string(), word: r.word.to_string() })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("presentation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, PresentationError> {
        let j: JsonPresentation =
            serde_json::from_str(s).map_err(|e| PresentationError::Malformed(e.to_string()))?;
        let mut generators = Vec::new();
        for g in &j.generators {
            let w: Word = g.parse()?;
            match w.letters() {
                [(g, 1)] => generators.push(g.clone()),
                _ => return Err(PresentationError::Malformed(format!("bad generator {g:?}"))),
            }
        }
        let relators = j
            .relators
            .iter()
            .map(|r| {
                let tag = RelTag::parse_with(&r.tag, j.params.n, j.params.k)?;
                Ok(Relator { tag, word: r.word.parse()? })
            })
            .collect::<Result<Vec<_>, PresentationError>>()?;
        Ok(Presentation { family: j.family.parse()?, params: j.params, generators, relators })
    }

    fn header(&self) -> String {
        let mut s = format!("family={}", self.family);
        for (name, v) in [("n", self.params.n), ("m", self.params.m), ("k", self.params.k)] {
            if let Some(v) = v {
                s.push_str(&format!(" {name}={v}"));
            }
        }
        s
    }

    /// Line-oriented text form: header, generator line, one `tag: word` per relator.
    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("generators: {}\n", gens.join(" ")));
        out.push_str(&format!("relators: {}\n", self.relators.len()));
        for r in &self.relators {
            out.push_str(&format!("{}: {}\n", r.tag, r.word));
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Self, PresentationError> {
        let bad = |m: &str| PresentationError::Malformed(m.to_string());
        let mut lines = s.lines();
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut family = None;
        let mut params = Params { n: None, m: None, k: None };
        for field in header.split_whitespace() {
            let (key, val) = field.split_once('=').ok_or_else(|| bad("bad header"))?;
            let num = || val.parse::<usize>().map_err(|_| bad("bad header number"));
            match key {
                "family" => family = Some(val.parse::<GroupFamily>()?),
                "n" => params.n = Some(num()?),
                "m" => params.m = Some(num()?),
                "k" => params.k = Some(num()?),
                _ => return Err(bad("unknown header field")),
            }
        }
        let gen_line = lines.next().ok_or_else(|| bad("missing generators"))?;
        let gen_list = gen_line.strip_prefix("generators:").ok_or_else(|| bad("missing generators"))?;
        let mut generators = Vec::new();
        for g in gen_list.split_whitespace() {
            let w: Word = g.parse()?;
            match w.letters() {
                [(g, 1)] => generators.push(g.clone()),
                _ => return Err(bad("bad generator")),
            }
        }
        let count_line = lines.next().ok_or_else(|| bad("missing relator count"))?;
        let count: usize = count_line
            .strip_prefix("relators:")
            .and_then(|c| c.trim().parse().ok())
            .ok_or_else(|| bad("bad relator count"))?;
        let mut relators = Vec::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let (tag, word) = line.split_once(": ").ok_or_else(|| bad("bad relator line"))?;
            let tag = RelTag::parse_with(tag, params.n, params.k)?;
            relators.push(Relator { tag, word: word.parse()? });
        }
        if relators.len() != count {
            return Err(bad("relator count mismatch"));
        }
        Ok(Presentation {
            family: family.ok_or_else(|| bad("missing family"))?,
            params,
            generators,
            relators,
        })
    }

    /// `F := FreeGroup(...); G := F / [ ... ];` for external cross-checks.
    pub fn to_algebra(&self) -> String {
        let ident = |g: &Generator| {
            g.to_string().replace(['[', ']'], "").replace(',', "_")
        };
        let names: Vec<String> = self.generators.iter().map(ident).collect();
        let mut out = format!("# {}\n", self.header());
        out.push_str(&format!(
            "F := FreeGroup({});\n",
            names.iter().map(|s| format!("\"{s}\"")).collect::<Vec<_>>().join(", ")
        ));
        for (p, name) in names.iter().enumerate() {
            out.push_str(&format!("{name} := F.{};\n", p + 1));
        }
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                if r.word.is_identity() {
                    return "One(F)".to_string();
                }
                r.word
                    .letters()
                    .iter()
                    .map(|(g, e)| if *e == 1 { ident(g) } else { format!("{}^{e}", ident(g)) })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        out.push_str(&format!("G := F / [\n  {}\n];\n", rels.join(",\n  ")));
        out
    }
}
