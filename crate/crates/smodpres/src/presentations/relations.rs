use std::fmt;

use super::{comm, h, half_twist_commutes, r, rel, twists_commute, PresentationError};
use crate::words::{Generator, Word};

/// Structured relator names. The derived order is the report order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelTag {
    CommHH { i: usize, j: usize },
    CommTT { i: usize, j: usize, k: usize, l: usize },
    CommHT { k: usize, i: usize, j: usize },
    CommLastTwist { n: usize },
    ConjA { i: usize, positive: bool },
    ConjB { i: usize, positive: bool },
    ConjC { i: usize, positive: bool },
    LiftAdjacent { i: usize },
    LiftSkip { i: usize },
    Pentagonal { i: usize, j: usize, k: usize, l: usize, m: usize },
    Chain { i: usize, j: usize },
    MarkedTwist { n: usize, k: usize },
    ClosedChain { n: usize },
    RSquare,
    RH { n: usize, i: usize },
    RT { n: usize, i: usize },
    RT1 { n: usize, j: usize },
    RZeta { n: usize, j: usize },
    RInvert { n: usize },
    Lantern { kind: LanternKind, i: usize, j: usize },
    WInvolution { i: usize },
    WComm { i: usize, j: usize },
    WBraid { i: usize },
    WRSquare,
    WRConj { n: usize, i: usize },
}

/// Which half-twist conjugates the twist in a lantern-type relation.
/// The `Last*` kinds involve `h_{2n}` and only live in the closed group;
/// for them `j` stores `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LanternKind {
    IMinus2,
    IMinus1,
    J,
    JMinus1,
    LastJ,
    LastJMinus1,
    LastTop,
}

fn sign(p: bool) -> char {
    if p {
        '+'
    } else {
        '-'
    }
}

fn list(xs: &[usize]) -> String {
    let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(","))
}

impl fmt::Display for RelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RelTag::*;
        match *self {
            CommHH { i, j } => write!(f, "comm-hh{}", list(&[i, j])),
            CommTT { i, j, k, l } => write!(f, "comm-tt{}", list(&[i, j, k, l])),
            CommHT { k, i, j } => write!(f, "comm-ht{}", list(&[k, i, j])),
            CommLastTwist { .. } => f.write_str("comm-last"),
            ConjA { i, positive } => write!(f, "conj-a{}{}", sign(positive), list(&[i])),
            ConjB { i, positive } => write!(f, "conj-b{}{}", sign(positive), list(&[i])),
            ConjC { i, positive } => write!(f, "conj-c{}{}", sign(positive), list(&[i])),
            LiftAdjacent { i } => write!(f, "lift-adjacent{}", list(&[i])),
            LiftSkip { i } => write!(f, "lift-skip{}", list(&[i])),
            Pentagonal { i, j, k, l, m } => write!(f, "pentagon{}", list(&[i, j, k, l, m])),
            Chain { i, j } => write!(f, "chain{}", list(&[i, j])),
            MarkedTwist { .. } => f.write_str("marked-twist"),
            ClosedChain { .. } => f.write_str("closed-chain"),
            RSquare => f.write_str("r-square"),
            RH { i, .. } => write!(f, "r-h{}", list(&[i])),
            RT { i, .. } => write!(f, "r-t{}", list(&[i])),
            RT1 { j, .. } => write!(f, "r-t1{}", list(&[j])),
            RZeta { j, .. } => write!(f, "r-zeta{}", list(&[j])),
            RInvert { .. } => f.write_str("r-invert"),
            Lantern { kind, i, j } => match kind {
                LanternKind::IMinus2 => write!(f, "lantern-i2{}", list(&[i, j])),
                LanternKind::IMinus1 => write!(f, "lantern-i1{}", list(&[i, j])),
                LanternKind::J => write!(f, "lantern-j{}", list(&[i, j])),
                LanternKind::JMinus1 => write!(f, "lantern-j1{}", list(&[i, j])),
                LanternKind::LastJ => write!(f, "lantern-last-j{}", list(&[i])),
                LanternKind::LastJMinus1 => write!(f, "lantern-last-j1{}", list(&[i])),
                LanternKind::LastTop => f.write_str("lantern-last-top"),
            },
            WInvolution { i } => write!(f, "w-involution{}", list(&[i])),
            WComm { i, j } => write!(f, "w-comm{}", list(&[i, j])),
            WBraid { i } => write!(f, "w-braid{}", list(&[i])),
            WRSquare => f.write_str("w-r-square"),
            WRConj { i, .. } => write!(f, "w-r-conj{}", list(&[i])),
        }
    }
}

/// Tags printed without an index list.
const BARE: [&str; 7] =
    ["comm-last", "marked-twist", "closed-chain", "r-square", "r-invert", "lantern-last-top", "w-r-square"];

impl RelTag {
    /// Inverse of `Display`. Tags whose word depends on `n` or `k` but whose
    /// printed form omits them take those from the presentation parameters.
    pub fn parse_with(
        s: &str,
        n: Option<usize>,
        k: Option<usize>,
    ) -> Result<RelTag, PresentationError> {
        use RelTag::*;
        let bad = || PresentationError::Malformed(format!("bad relator tag {s:?}"));
        let (label, idx) = match s.find('[') {
            Some(p) => {
                let body = s[p..].strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(bad)?;
                let idx = body
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                (&s[..p], idx)
            }
            None => (s, Vec::new()),
        };
        if BARE.contains(&label) != idx.is_empty() {
            return Err(bad());
        }
        let need_n = || n.ok_or_else(bad);
        let arity = |a: usize| if idx.len() == a { Ok(()) } else { Err(bad()) };
        let tag = match label {
            "comm-hh" => {
                arity(2)?;
                CommHH { i: idx[0], j: idx[1] }
            }
            "comm-tt" => {
                arity(4)?;
                CommTT { i: idx[0], j: idx[1], k: idx[2], l: idx[3] }
            }
            "comm-ht" => {
                arity(3)?;
                CommHT { k: idx[0], i: idx[1], j: idx[2] }
            }
            "comm-last" => CommLastTwist { n: need_n()? },
            "conj-a+" | "conj-a-" | "conj-b+" | "conj-b-" | "conj-c+" | "conj-c-" => {
                arity(1)?;
                let positive = label.ends_with('+');
                let i = idx[0];
                match &label[..6] {
                    "conj-a" => ConjA { i, positive },
                    "conj-b" => ConjB { i, positive },
                    _ => ConjC { i, positive },
                }
            }
            "lift-adjacent" => {
                arity(1)?;
                LiftAdjacent { i: idx[0] }
            }
            "lift-skip" => {
                arity(1)?;
                LiftSkip { i: idx[0] }
            }
            "pentagon" => {
                arity(5)?;
                Pentagonal { i: idx[0], j: idx[1], k: idx[2], l: idx[3], m: idx[4] }
            }
            "chain" => {
                arity(2)?;
                Chain { i: idx[0], j: idx[1] }
            }
            "marked-twist" => MarkedTwist { n: need_n()?, k: k.unwrap_or(1) },
            "closed-chain" => ClosedChain { n: need_n()? },
            "r-square" => RSquare,
            "r-h" => {
                arity(1)?;
                RH { n: need_n()?, i: idx[0] }
            }
            "r-t" => {
                arity(1)?;
                RT { n: need_n()?, i: idx[0] }
            }
            "r-t1" => {
                arity(1)?;
                RT1 { n: need_n()?, j: idx[0] }
            }
            "r-zeta" => {
                arity(1)?;
                RZeta { n: need_n()?, j: idx[0] }
            }
            "r-invert" => RInvert { n: need_n()? },
            "lantern-i2" | "lantern-i1" | "lantern-j" | "lantern-j1" => {
                arity(2)?;
                let kind = match label {
                    "lantern-i2" => LanternKind::IMinus2,
                    "lantern-i1" => LanternKind::IMinus1,
                    "lantern-j" => LanternKind::J,
                    _ => LanternKind::JMinus1,
                };
                Lantern { kind, i: idx[0], j: idx[1] }
            }
            "lantern-last-j" | "lantern-last-j1" => {
                arity(1)?;
                let kind =
                    if label == "lantern-last-j" { LanternKind::LastJ } else { LanternKind::LastJMinus1 };
                Lantern { kind, i: idx[0], j: need_n()? }
            }
            "lantern-last-top" => Lantern { kind: LanternKind::LastTop, i: 0, j: need_n()? },
            "w-involution" => {
                arity(1)?;
                WInvolution { i: idx[0] }
            }
            "w-comm" => {
                arity(2)?;
                WComm { i: idx[0], j: idx[1] }
            }
            "w-braid" => {
                arity(1)?;
                WBraid { i: idx[0] }
            }
            "w-r-square" => WRSquare,
            "w-r-conj" => {
                arity(1)?;
                WRConj { n: need_n()?, i: idx[0] }
            }
            _ => return Err(bad()),
        };
        relation(&tag)?;
        Ok(tag)
    }
}

impl std::str::FromStr for RelTag {
    type Err = PresentationError;
    /// Context-free parse; tags that need `n` fail here and must go
    /// through [`RelTag::parse_with`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RelTag::parse_with(s, None, None)
    }
}

/// Twist about `(i,j)`; the degenerate `t_{i,i}` and `t_{1,0}` are trivial.
fn tw(i: usize, j: usize) -> Word {
    if j <= i {
        Word::identity()
    } else {
        Word::gen(Generator::t(i as u32, j as u32))
    }
}

fn hpow(i: usize, e: i64) -> Word {
    h(i).pow(e)
}

/// `h_from * h_{from-step} * ... * h_to` (descending) or ascending when `from < to`.
pub(crate) fn hrun(from: usize, to: usize, step: usize) -> Word {
    let mut w = Word::identity();
    if from >= to {
        let mut x = from as i64;
        while x >= to as i64 {
            w.append(&h(x as usize));
            x -= step as i64;
        }
    } else {
        let mut x = from;
        while x <= to {
            w.append(&h(x));
            x += step;
        }
    }
    w
}

/// Product of `t_{l,l+1}^e` for `l = from, from-2, ...` down to `to` (or upward when `from < to`).
pub(crate) fn adjacent_twists(from: usize, to: usize, e: i64) -> Word {
    let mut w = Word::identity();
    if from >= to {
        let mut l = from as i64;
        while l >= to as i64 {
            w.append(&tw(l as usize, l as usize + 1).pow(e));
            l -= 2;
        }
    } else {
        let mut l = from;
        while l <= to {
            w.append(&tw(l, l + 1).pow(e));
            l += 2;
        }
    }
    w
}

/// Right-hand side of the chain relation expressing `t_{i,j}` through
/// half-twists and adjacent twists.
pub fn chain_rhs(i: usize, j: usize) -> Result<Word, PresentationError> {
    if i == 0 || j < i + 2 {
        return Err(PresentationError::IndexOutOfRange {
            tag: format!("T[{i},{j}]"),
            reason: "needs j - i >= 2".into(),
        });
    }
    let d = j - i;
    if d == 2 {
        return Ok(hpow(i, 2));
    }
    if d % 2 == 1 {
        let e = ((d - 3) / 2) as i64;
        let mut w = adjacent_twists(j - 1, i, -e);
        w.append(&hrun(j - 2, i, 1).pow(d.div_ceil(2) as i64));
        Ok(w)
    } else {
        let e = ((d - 2) / 2) as i64;
        let mut w = adjacent_twists(j - 2, i, -e);
        w.append(&hrun(j - 2, i, 2));
        w.append(&hrun(i, j - 2, 2));
        w.append(&hrun(j - 3, i, 1).pow((d / 2) as i64));
        Ok(w)
    }
}

fn out_of_range(tag: &RelTag, reason: &str) -> PresentationError {
    PresentationError::IndexOutOfRange { tag: tag.to_string(), reason: reason.to_string() }
}

/// The relator word `left * right^-1` of a tagged relation.
pub fn relation(tag: &RelTag) -> Result<Word, PresentationError> {
    use RelTag::*;
    let ensure = |ok: bool, reason: &str| if ok { Ok(()) } else { Err(out_of_range(tag, reason)) };
    let pm = |p: bool| if p { 1 } else { -1 };
    Ok(match *tag {
        CommHH { i, j } => {
            ensure(i >= 1 && j >= i + 3, "needs j - i >= 3")?;
            comm(&h(i), &h(j))
        }
        CommTT { i, j, k, l } => {
            ensure(i >= 1 && k >= 1 && i < j && k < l && (i, j) != (k, l), "bad twist indices")?;
            ensure(twists_commute(i, j, k, l), "curves intersect")?;
            comm(&tw(i, j), &tw(k, l))
        }
        CommHT { k, i, j } => {
            ensure(k >= 1 && i >= 1 && i < j, "bad indices")?;
            ensure(half_twist_commutes(k, i, j), "arc meets curve")?;
            comm(&h(k), &tw(i, j))
        }
        CommLastTwist { n } => {
            ensure(n >= 1, "n >= 1")?;
            comm(&h(2 * n), &tw(1, 2 * n + 1))
        }
        ConjA { i, positive } => {
            ensure(i >= 1, "i >= 1")?;
            let hi = hpow(i, pm(positive));
            rel(&hi.mul(&tw(i, i + 1)), &tw(i + 1, i + 2).mul(&hi))
        }
        ConjB { i, positive } => {
            ensure(i >= 1, "i >= 1")?;
            let e = pm(positive);
            let hh = hpow(i, e).mul(&hpow(i + 1, e));
            rel(&hh.mul(&tw(i, i + 1)), &tw(i + 2, i + 3).mul(&hh))
        }
        ConjC { i, positive } => {
            ensure(i >= 1, "i >= 1")?;
            let e = pm(positive);
            let (a, b, c) = (hpow(i, e), hpow(i + 1, e), hpow(i + 2, e));
            rel(&a.mul(&b).mul(&c).mul(&a), &c.mul(&a).mul(&b).mul(&c))
        }
        LiftAdjacent { i } => {
            ensure(i >= 1, "i >= 1")?;
            let t = tw(i, i + 1);
            rel(&h(i).mul(&h(i + 1)).mul(&t), &t.mul(&h(i + 1)).mul(&h(i)))
        }
        LiftSkip { i } => {
            ensure(i >= 1, "i >= 1")?;
            let left = h(i).mul(&h(i + 2)).mul(&h(i)).mul(&tw(i + 1, i + 2).inverse());
            let right = tw(i + 2, i + 3).inverse().mul(&h(i + 2)).mul(&h(i)).mul(&h(i + 2));
            rel(&left, &right)
        }
        Pentagonal { i, j, k, l, m } => {
            ensure(1 <= i && i < j && j < k && k < l && l < m, "needs i<j<k<l<m")?;
            let a = tw(j, m - 1);
            let b = tw(k, m - 1);
            let c = tw(j, l - 1);
            let d = tw(i, k - 1);
            let e = tw(i, l - 1);
            let left = a.inverse().mul(&b).mul(&c).mul(&d).mul(&e.inverse());
            let right = e.inverse().mul(&d).mul(&c).mul(&b).mul(&a.inverse());
            rel(&left, &right)
        }
        Chain { i, j } => tw(i, j).inverse().mul(&chain_rhs(i, j)?),
        MarkedTwist { n, k } => {
            ensure(n >= 1 && k >= 1, "n, k >= 1")?;
            tw(1, 2 * n + 1).pow(k as i64)
        }
        ClosedChain { n } => {
            ensure(n >= 1, "n >= 1")?;
            let e = -((n as i64) - 1);
            let mut w = tw(1, 2 * n).pow(e);
            w.append(&adjacent_twists(2 * n - 1, 1, e));
            w.append(&hrun(2 * n, 1, 1).pow(n as i64 + 1));
            w
        }
        RSquare => r().pow(2),
        RH { n, i } => {
            ensure(1 <= i && i <= 2 * n, "1 <= i <= 2n")?;
            rel(&r().mul(&h(i)), &h(2 * n - i + 1).mul(&r()))
        }
        RT { n, i } => {
            ensure(2 <= i && i <= 2 * n, "2 <= i <= 2n")?;
            rel(&r().mul(&tw(i, i + 1)), &tw(2 * n - i + 2, 2 * n - i + 3).mul(&r()))
        }
        RT1 { n, j } => {
            ensure(2 <= j && j <= 2 * n, "2 <= j <= 2n")?;
            rel(&r().mul(&tw(1, j)), &tw(1, 2 * n - j + 2).mul(&r()))
        }
        RZeta { n, j } => {
            ensure(3 <= j && j < 2 * n && j % 2 == 1, "odd 3 <= j <= 2n-1")?;
            let left = r().conjugate(&tw(1, j)).mul(&tw(1, 2 * n - j + 2).inverse());
            rel(&left, &tw(1, 2 * n + 1).inverse())
        }
        RInvert { n } => {
            ensure(n >= 1, "n >= 1")?;
            let t = tw(1, 2 * n + 1);
            rel(&r().mul(&t), &t.inverse().mul(&r()))
        }
        Lantern { kind, i, j } => lantern(tag, kind, i, j)?,
        WInvolution { i } => {
            ensure(i >= 1, "i >= 1")?;
            hpow(i, 2)
        }
        WComm { i, j } => {
            ensure(i >= 1 && (j == i + 1 || j >= i + 3), "j - i = 1 or >= 3")?;
            comm(&h(i), &h(j))
        }
        WBraid { i } => {
            ensure(i >= 1, "i >= 1")?;
            let (a, b) = (h(i), h(i + 2));
            a.mul(&b).mul(&a).mul(&b.inverse()).mul(&a.inverse()).mul(&b.inverse())
        }
        WRSquare => r().pow(2),
        WRConj { n, i } => {
            ensure(1 <= i && i <= 2 * n, "1 <= i <= 2n")?;
            r().conjugate(&h(i)).mul(&h(2 * n - i + 1).inverse())
        }
    })
}

fn lantern(tag: &RelTag, kind: LanternKind, i: usize, j: usize) -> Result<Word, PresentationError> {
    let ensure = |ok: bool| if ok { Ok(()) } else { Err(out_of_range(tag, "lantern index range")) };
    let five = |a: Word, b: Word, c: Word, d: Word, e: Word| {
        a.mul(&b).mul(&c).mul(&d.inverse()).mul(&e.inverse())
    };
    let (conj, twist, rhs) = match kind {
        LanternKind::IMinus2 => {
            ensure(3 <= i && i < j)?;
            let rhs = five(tw(i + 1, j), tw(i - 1, i), tw(i - 2, j), tw(i - 1, j), tw(i - 2, i));
            (h(i - 2), tw(i, j), rhs)
        }
        LanternKind::IMinus1 => {
            ensure(2 <= i && i + 1 < j)?;
            let rhs = five(tw(i + 2, j), tw(i - 1, j), tw(i - 1, i), tw(i + 1, j), tw(i - 1, i + 1));
            (h(i - 1), tw(i, j), rhs)
        }
        LanternKind::J => {
            ensure(1 <= i && i < j)?;
            let rhs = five(tw(i, j - 1), tw(j, j + 1), tw(i, j + 2), tw(i, j + 1), tw(j, j + 2));
            (h(j), tw(i, j), rhs)
        }
        LanternKind::JMinus1 => {
            ensure(1 <= i && i + 1 < j)?;
            let rhs = five(tw(i, j - 2), tw(j, j + 1), tw(i, j + 1), tw(i, j - 1), tw(j - 1, j + 1));
            (h(j - 1), tw(i, j), rhs)
        }
        LanternKind::LastJ => {
            let n = j;
            ensure(n >= 1 && 1 <= i && i < 2 * n)?;
            let rhs = five(
                tw(i, 2 * n - 1),
                tw(2 * n, 2 * n + 1),
                tw(1, i - 1),
                tw(i, 2 * n + 1),
                tw(1, 2 * n - 1),
            );
            (h(2 * n), tw(i, 2 * n), rhs)
        }
        LanternKind::LastJMinus1 => {
            let n = j;
            ensure(n >= 1 && 1 <= i && i < 2 * n)?;
            let rhs = five(
                tw(i, 2 * n - 1),
                tw(1, 2 * n),
                tw(1, i - 1),
                tw(i, 2 * n),
                tw(1, 2 * n - 1),
            );
            (h(2 * n), tw(i, 2 * n + 1), rhs)
        }
        LanternKind::LastTop => {
            let n = j;
            ensure(n >= 1)?;
            (h(2 * n), tw(2 * n, 2 * n + 1), tw(1, 2 * n))
        }
    };
    Ok(rel(&conj.conjugate(&twist), &rhs))
}
