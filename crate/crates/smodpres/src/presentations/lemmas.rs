//! Word identities used while deriving the finite presentations, emitted as
//! pairs of words for independent verification.

use super::relations::chain_rhs;
use super::{relation, twists_commute, half_twist_commutes, RelTag};
use super::relations::LanternKind;
use crate::words::{Family, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaPair {
    /// Family name with its index instance, e.g. `interleave[1,4]`.
    pub name: String,
    pub left: Word,
    pub right: Word,
}

fn h(i: usize) -> Word {
    Word::gen(Generator::h(i as u32))
}

fn tw(i: usize, j: usize) -> Word {
    if j <= i {
        Word::identity()
    } else {
        Word::gen(Generator::t(i as u32, j as u32))
    }
}

fn r() -> Word {
    Word::gen(Generator::r())
}

/// `h_from h_{from-step} ... ` down to `to`; empty when `from < to`.
fn desc(from: usize, to: usize, step: usize) -> Word {
    let mut w = Word::identity();
    let mut x = from as i64;
    while x >= to as i64 && x >= 1 {
        w.append(&h(x as usize));
        x -= step as i64;
    }
    w
}

/// `h_from h_{from+step} ...` up to `to`; empty when `from > to`.
fn asc(from: usize, to: usize, step: usize) -> Word {
    let mut w = Word::identity();
    let mut x = from;
    while x <= to {
        w.append(&h(x));
        x += step;
    }
    w
}

/// `prod t_{l,l+1}^e` for `l = from, from-2, ...` down to `to`.
fn tdesc(from: usize, to: usize, e: i64) -> Word {
    let mut w = Word::identity();
    let mut l = from as i64;
    while l >= to as i64 && l >= 1 {
        w.append(&tw(l as usize, l as usize + 1).pow(e));
        l -= 2;
    }
    w
}

/// `prod t_{l,l+1}^e` for `l = from, from+2, ...` up to `to`.
fn tasc(from: usize, to: usize, e: i64) -> Word {
    let mut w = Word::identity();
    let mut l = from;
    while l <= to {
        w.append(&tw(l, l + 1).pow(e));
        l += 2;
    }
    w
}

fn prod(ws: &[&Word]) -> Word {
    crate::words::product(ws.iter().copied())
}

struct Suite {
    n: usize,
    out: Vec<LemmaPair>,
}

impl Suite {
    fn push(&mut self, family: &str, idx: &[usize], left: Word, right: Word) {
        let idx: Vec<String> = idx.iter().map(|x| x.to_string()).collect();
        let name = if idx.is_empty() {
            family.to_string()
        } else {
            format!("{family}[{}]", idx.join(","))
        };
        if fits(&left, self.n) && fits(&right, self.n) {
            self.out.push(LemmaPair { name, left, right });
        }
    }

    fn commute(&mut self, family: &str, idx: &[usize], a: &Word, b: &Word) {
        self.push(family, idx, a.mul(b), b.mul(a));
    }

    fn relator(&mut self, family: &str, idx: &[usize], tag: RelTag) {
        let w = relation(&tag).expect("lemma suite emits in-range tags");
        self.push(family, idx, w, Word::identity());
    }
}

/// Every generator is meaningful on `2n+2` points.
fn fits(w: &Word, n: usize) -> bool {
    let m = 2 * n + 2;
    w.generators().all(|g| match g.family {
        Family::H => (g.indices[0] as usize) + 2 <= m,
        Family::T | Family::Hij => (g.indices[1] as usize) <= m,
        Family::R => true,
        _ => false,
    })
}

/// Instantiate every technical identity over its full index range for the
/// given `n`. All pairs are equalities in the liftable mapping class group
/// of the sphere with `2n+2` marked points.
pub fn lemma_suite(n: usize) -> Vec<LemmaPair> {
    let mut s = Suite { n, out: Vec::new() };
    let top = 2 * n + 2;
    commutation(&mut s, n);
    conjugation(&mut s, n);
    parity_lifts(&mut s, n);
    for i in 1..=top {
        for j in i + 2..=top {
            s.push("chain", &[i, j], tw(i, j), chain_rhs(i, j).expect("j - i >= 2"));
        }
    }
    swaps(&mut s, n);
    last_half_twist(&mut s, n);
    odd_runs(&mut s, n);
    even_runs(&mut s, n);
    lanterns(&mut s, n);
    half_rotations(&mut s, n);
    s.out
}

fn commutation(s: &mut Suite, n: usize) {
    let top = 2 * n + 2;
    let pairs: Vec<(usize, usize)> =
        (1..=top).flat_map(|i| (i + 1..=top).map(move |j| (i, j))).collect();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a + 1..] {
            if twists_commute(i, j, k, l) {
                s.commute("twist-commute", &[i, j, k, l], &tw(i, j), &tw(k, l));
            }
        }
    }
    for i in 1..=2 * n {
        for j in i + 3..=2 * n {
            s.commute("half-twist-commute", &[i, j], &h(i), &h(j));
        }
    }
    for k in 1..=2 * n {
        for &(i, j) in &pairs {
            if half_twist_commutes(k, i, j) {
                s.commute("half-twist-twist-commute", &[k, i, j], &h(k), &tw(i, j));
            }
        }
    }
}

fn conjugation(s: &mut Suite, n: usize) {
    for i in 1..=2 * n {
        for e in [1i64, -1] {
            let hi = h(i).pow(e);
            s.push(
                if e > 0 { "conj-shift+" } else { "conj-shift-" },
                &[i],
                hi.mul(&tw(i, i + 1)),
                tw(i + 1, i + 2).mul(&hi),
            );
        }
    }
    for i in 1..2 * n {
        for e in [1i64, -1] {
            let hh = h(i).pow(e).mul(&h(i + 1).pow(e));
            s.push(
                if e > 0 { "conj-double-shift+" } else { "conj-double-shift-" },
                &[i],
                hh.mul(&tw(i, i + 1)),
                tw(i + 2, i + 3).mul(&hh),
            );
        }
    }
    for i in 1..(2 * n).saturating_sub(1) {
        for e in [1i64, -1] {
            let (a, b, c) = (h(i).pow(e), h(i + 1).pow(e), h(i + 2).pow(e));
            s.push(
                if e > 0 { "conj-braid+" } else { "conj-braid-" },
                &[i],
                prod(&[&a, &b, &c, &a]),
                prod(&[&c, &a, &b, &c]),
            );
        }
    }
    for i in 1..=2 * n {
        s.push("conj-r-h", &[i], r().mul(&h(i)), h(2 * n - i + 1).mul(&r()));
    }
    for i in 1..=2 * n + 2 {
        for j in i + 1..=2 * n + 2 {
            s.push(
                "conj-r-t",
                &[i, j],
                r().mul(&tw(i, j)),
                tw(2 * n + 3 - j, 2 * n + 3 - i).mul(&r()),
            );
        }
    }
}

fn parity_lifts(s: &mut Suite, n: usize) {
    for i in 1..=2 * n {
        s.push("lift-square", &[i], h(i).pow(2), tw(i, i + 2));
    }
    for i in 1..2 * n {
        let left = Word::commutator(&h(i), &h(i + 1));
        s.push("lift-adjacent", &[i], left, tw(i, i + 1).mul(&tw(i + 2, i + 3).inverse()));
    }
    for i in 1..(2 * n).saturating_sub(1) {
        let (a, b) = (h(i), h(i + 2));
        let left = prod(&[&a, &b, &a, &b.inverse(), &a.inverse(), &b.inverse()]);
        s.push("lift-skip", &[i], left, tw(i + 1, i + 2).mul(&tw(i + 2, i + 3).inverse()));
    }
    s.push("lift-r-square", &[], r().pow(2), Word::identity());
    // The last half-twist written with the twists renamed by their complements.
    s.push("lift-square-last", &[], h(2 * n).pow(2), tw(1, 2 * n - 1));
    s.push(
        "lift-adjacent-last",
        &[],
        Word::commutator(&h(2 * n - 1), &h(2 * n)),
        tw(2 * n - 1, 2 * n).mul(&tw(1, 2 * n).inverse()),
    );
}

/// Equivalent rearrangements of the two relations mixing consecutive half-twists with twists.
fn swaps(s: &mut Suite, n: usize) {
    for i in 1..2 * n {
        let (a, b) = (h(i), h(i + 1));
        let (t1, t3) = (tw(i, i + 1), tw(i + 2, i + 3));
        let (t1i, t3i) = (t1.inverse(), t3.inverse());
        let forms = [
            (prod(&[&a, &b, &t1]), prod(&[&b, &a, &t3])),
            (prod(&[&t3, &a, &b]), prod(&[&t1, &b, &a])),
            (prod(&[&a, &b]), prod(&[&b, &a, &t1i, &t3])),
            (prod(&[&a, &b]), prod(&[&t1, &t3i, &b, &a])),
            (prod(&[&b, &a]), prod(&[&a, &b, &t1, &t3i])),
            (prod(&[&b, &a]), prod(&[&t1i, &t3, &a, &b])),
        ];
        for (p, (l, rr)) in forms.into_iter().enumerate() {
            s.push(&format!("adjacent-swap-{}", p + 1), &[i], l, rr);
        }
    }
    for i in 1..(2 * n).saturating_sub(1) {
        let aba = prod(&[&h(i), &h(i + 2), &h(i)]);
        let bab = prod(&[&h(i + 2), &h(i), &h(i + 2)]);
        let (t2, t3) = (tw(i + 1, i + 2), tw(i + 2, i + 3));
        let (t2i, t3i) = (t2.inverse(), t3.inverse());
        let forms = [
            (prod(&[&t2i, &aba]), prod(&[&t3i, &bab])),
            (prod(&[&aba, &t2i]), prod(&[&bab, &t3i])),
            (prod(&[&t2i, &aba]), prod(&[&bab, &t3i])),
            (aba.clone(), prod(&[&t3i, &bab, &t2])),
            (aba.clone(), prod(&[&t2, &bab, &t3i])),
            (aba.clone(), prod(&[&t2, &t3i, &bab])),
            (aba.clone(), prod(&[&bab, &t3i, &t2])),
        ];
        for (p, (l, rr)) in forms.into_iter().enumerate() {
            s.push(&format!("skip-swap-{}", p + 1), &[i], l, rr);
        }
    }
}

/// Relations of the closed group involving `h_{2n}`.
fn last_half_twist(s: &mut Suite, n: usize) {
    let last = h(2 * n);
    for i in 1..=(2 * n).saturating_sub(3) {
        s.commute("last-commute-h", &[i], &h(i), &last);
    }
    for i in 1..2 * n - 1 {
        for j in i + 1..2 * n {
            s.commute("last-commute-t", &[i, j], &last, &tw(i, j));
        }
    }
    for e in [1i64, -1] {
        let l = last.pow(e);
        s.push(
            if e > 0 { "last-shift+" } else { "last-shift-" },
            &[],
            l.mul(&tw(2 * n, 2 * n + 1)),
            tw(1, 2 * n).mul(&l),
        );
        let hh = h(2 * n - 1).pow(e).mul(&l);
        s.push(
            if e > 0 { "last-double-shift+" } else { "last-double-shift-" },
            &[],
            hh.mul(&tw(2 * n - 1, 2 * n)),
            tw(1, 2 * n).mul(&hh),
        );
        if n >= 2 {
            let (a, b, c) = (h(2 * n - 2).pow(e), h(2 * n - 1).pow(e), l.clone());
            s.push(
                if e > 0 { "last-braid+" } else { "last-braid-" },
                &[],
                prod(&[&a, &b, &c, &a]),
                prod(&[&c, &a, &b, &c]),
            );
        }
    }
    let t = tw(2 * n - 1, 2 * n);
    s.push(
        "last-lift-adjacent",
        &[],
        prod(&[&h(2 * n - 1), &last, &t]),
        prod(&[&t, &last, &h(2 * n - 1)]),
    );
    if n >= 2 {
        let a = h(2 * n - 2);
        s.push(
            "last-lift-skip",
            &[],
            prod(&[&a, &last, &a, &t.inverse()]),
            prod(&[&tw(2 * n, 2 * n + 1).inverse(), &last, &a, &last]),
        );
    }
    s.push("last-square", &[], tw(1, 2 * n - 1), last.pow(2));
}

/// Identities indexed by `i < j` with `j - i >= 3` odd.
fn odd_runs(s: &mut Suite, n: usize) {
    let top = 2 * n + 2;
    for i in 1..=top {
        for j in (i + 3..=top).step_by(2) {
            let d = j - i;
            let p = d.div_ceil(2) as i64;
            let power = desc(j - 2, i, 1).pow(p);
            for l in (1..=2 * n + 1).filter(|l| (*l as i64 - i as i64) % 2 == 0) {
                s.commute("chain-power-twist-commute", &[i, j, l], &power, &tw(l, l + 1));
            }
            s.push("power-reverse", &[i, j], power.clone(), asc(i, j - 2, 1).pow(p));

            let e = ((d - 3) / 2) as i64;
            let odd_up = asc(i + 1, j - 2, 2);
            let odd_down = desc(j - 2, i + 1, 2);
            let odd_twists = tasc(i + 1, j - 2, -1);
            let right = prod(&[
                &tw(j - 1, j).pow(e),
                &odd_twists,
                &odd_down,
                &tw(i, i + 1),
                &odd_up,
                &desc(j - 3, i, 2),
            ]);
            s.push("staircase", &[i, j], desc(j - 2, i, 1).mul(&odd_up), right);

            let inner = prod(&[&odd_twists, &odd_down, &tw(i, i + 1), &odd_up]);
            s.commute("staircase-commute", &[i, j], &desc(j - 4, i, 1).pow(p - 1), &inner);

            if j <= 2 * n + 1 {
                let right = prod(&[
                    &tw(i, i + 1).pow(p - 1),
                    &asc(i, j - 1, 2),
                    &tasc(i + 2, j - 1, -1),
                    &asc(i + 1, j - 2, 2),
                ]);
                s.push("alternating-product", &[i, j], asc(i, j - 1, 1), right);

                let left = prod(&[&desc(j - 1, i, 2), &asc(i + 2, j - 1, 2), &tasc(i + 2, j - 1, -1)]);
                let right = prod(&[&asc(i, j - 1, 2), &desc(j - 3, i, 2), &tasc(i + 1, j - 2, -1)]);
                s.push("palindrome-exchange", &[i, j], left, right);

                let q = prod(&[&tdesc(j - 1, i, -e), &desc(j - 2, i, 1).pow(p)]);
                let q2 = prod(&[&tasc(i, j - 1, -e), &asc(i, j - 2, 1).pow(p)]);
                s.push("chain-reverse-odd", &[i, j], q, q2);
            }

            let conj = asc(i, j - 3, 2);
            let left = prod(&[&conj.inverse(), &odd_down, &conj]);
            let right = prod(&[&odd_down, &tw(i, i + 1), &tw(j - 1, j).inverse()]);
            s.push("odd-run-conjugate", &[i, j], left, right);

            if j <= 2 * n {
                let pairs = [
                    (
                        "power-extend-1",
                        prod(&[&asc(i, j - 1, 2), &desc(j - 2, i, 1).pow(p)]),
                        desc(j - 1, i, 1).pow(p),
                    ),
                    (
                        "power-extend-2",
                        prod(&[&asc(i, j - 2, 1).pow(p), &desc(j - 1, i, 2)]),
                        asc(i, j - 1, 1).pow(p),
                    ),
                    (
                        "power-extend-3",
                        prod(&[&asc(i + 1, j, 2), &desc(j - 1, i, 1).pow(p)]),
                        desc(j, i, 1).pow(p),
                    ),
                    (
                        "power-extend-4",
                        prod(&[&asc(i, j - 1, 1).pow(p), &desc(j, i + 1, 2)]),
                        asc(i, j, 1).pow(p),
                    ),
                    (
                        "power-extend-left-1",
                        prod(&[&desc(j - 1, i, 2), &asc(i + 1, j - 1, 1).pow(p)]),
                        asc(i, j - 1, 1).pow(p),
                    ),
                    (
                        "power-extend-left-2",
                        prod(&[&desc(j - 1, i + 1, 1).pow(p), &asc(i, j - 1, 2)]),
                        desc(j - 1, i, 1).pow(p),
                    ),
                    (
                        "power-extend-left-3",
                        prod(&[&desc(j - 1, i, 2), &asc(i + 1, j, 1).pow(p)]),
                        asc(i, j, 1).pow(p),
                    ),
                    (
                        "power-extend-left-4",
                        prod(&[&desc(j, i + 1, 1).pow(p), &asc(i, j - 1, 2)]),
                        desc(j, i, 1).pow(p),
                    ),
                ];
                for (name, l, rr) in pairs {
                    s.push(name, &[i, j], l, rr);
                }
                let left = desc(j, i + 1, 2).mul(&desc(j - 1, i, 2));
                let right = prod(&[
                    &tw(j + 1, j + 2).pow(-(((d - 1) / 2) as i64)),
                    &desc(j, i, 1),
                    &tasc(i + 3, j, 1),
                ]);
                s.push("interleave", &[i, j], left, right);
            }
        }
    }
}

/// Identities indexed by `i < j` with `j - i >= 4` even.
fn even_runs(s: &mut Suite, n: usize) {
    let top = 2 * n + 2;
    for i in 1..=top {
        for j in (i + 4..=top).step_by(2) {
            let d = j - i;
            let pal = desc(j - 2, i, 2).mul(&asc(i, j - 2, 2));
            for l in (1..=2 * n + 1).filter(|&l| (l as i64 - i as i64) % 2 == 0 && l != j) {
                s.commute("palindrome-twist-commute", &[i, j, l], &pal, &tw(l, l + 1));
                if i <= l && l < j {
                    let a = tw(l + 1, l + 2);
                    let conj = prod(&[&desc(j - 2, i, 2), &a, &asc(i, j - 2, 2)]);
                    s.commute("palindrome-conjugate-commute", &[i, j, l], &conj, &tw(l, l + 1));
                }
            }
            s.commute("palindrome-power-commute", &[i, j], &pal, &desc(j - 3, i, 1).pow((d / 2) as i64));

            if j <= 2 * n + 1 {
                let e = ((d - 2) / 2) as i64;
                let left = prod(&[&tdesc(j - 2, i, -e), &pal, &desc(j - 3, i, 1).pow((d / 2) as i64)]);
                let right = prod(&[
                    &tasc(i + 1, j - 1, -e),
                    &asc(i, j - 2, 2),
                    &desc(j - 2, i, 2),
                    &asc(i + 1, j - 2, 1).pow((d / 2) as i64),
                ]);
                s.push("chain-reverse-even", &[i, j], left, right);
            }

            if j > 2 * n {
                continue;
            }
            let a = ((d - 4) / 2) as i64;
            let b = ((d - 2) / 2) as i64;
            let half = (d / 2) as i64;
            let run = desc(j - 2, i, 1);
            let low = desc(j - 3, i, 1);
            let evens = desc(j - 4, i, 2);
            let q = prod(&[&evens.inverse(), &h(j - 2), &evens]);

            s.push(
                "square-power",
                &[i, j],
                prod(&[&desc(j - 2, i, 2), &run.pow(half)]),
                prod(&[&h(j - 2).pow(2), &low]).pow(half),
            );

            let shifted = prod(&[&tw(i, i + 1).pow(-a), &q, &tw(j - 1, j).inverse(), &tw(i, i + 1).pow(b)]);
            s.push("shift-top", &[i, j], h(j - 2).mul(&low), low.mul(&shifted));

            let ti = tw(i, i + 1);
            let ti2 = tw(i + 2, i + 3);
            let twisted = prod(&[&ti2.pow(-a), &ti.pow(-b), &h(i), &ti2.pow(b), &ti.pow(a)]);
            s.push("shift-through", &[i, j], shifted.mul(&run), run.mul(&twisted));

            let right = prod(&[
                &run.pow(a),
                &tw(j - 2, j - 1).pow(-a),
                &tdesc(j - 4, i + 2, -b),
                &desc(j - 4, i + 2, 2),
                &ti2.pow(a),
                &tasc(i + 4, j - 2, b),
            ]);
            s.push("shift-power", &[i, j], twisted.mul(&run).pow(a), right);

            let right = prod(&[
                &desc(j - 2, i, 2),
                &tw(i + 1, i + 2).inverse(),
                &desc(j - 2, i + 2, 2).inverse(),
                &tw(j - 1, j),
            ]);
            s.push("inverse-palindrome", &[i, j], q.clone(), right);

            let right = prod(&[
                &run.pow(half),
                &tw(j - 2, j - 1).pow(-a),
                &tdesc(j - 4, i, -b),
                &desc(j - 4, i, 2),
                &desc(j - 2, i, 2),
                &tw(i + 1, i + 2).inverse(),
                &desc(j - 2, i + 2, 2).inverse(),
                &tasc(i, j - 2, b),
            ]);
            s.push(
                "square-power-expand",
                &[i, j],
                prod(&[&h(j - 2), &h(j - 2), &low]).pow(half),
                right,
            );
        }
    }
}

fn lanterns(s: &mut Suite, n: usize) {
    let top = 2 * n + 1;
    for i in 1..2 * n {
        for j in i + 1..2 * n {
            s.relator("lantern-k=j", &[i, j], RelTag::Lantern { kind: LanternKind::J, i, j });
        }
    }
    for j in 3..=2 * n {
        for i in 1..j - 1 {
            s.relator("lantern-k=j-1", &[i, j], RelTag::Lantern { kind: LanternKind::JMinus1, i, j });
        }
    }
    for i in 3..=top {
        for j in i + 1..=top {
            s.relator("lantern-k=i-2", &[i, j], RelTag::Lantern { kind: LanternKind::IMinus2, i, j });
        }
    }
    for i in 2..=2 * n {
        for j in i + 2..=top {
            s.relator("lantern-k=i-1", &[i, j], RelTag::Lantern { kind: LanternKind::IMinus1, i, j });
        }
    }
    for i in 1..2 * n {
        s.relator("lantern-last-k=j", &[i], RelTag::Lantern { kind: LanternKind::LastJ, i, j: n });
        s.relator(
            "lantern-last-k=j-1",
            &[i],
            RelTag::Lantern { kind: LanternKind::LastJMinus1, i, j: n },
        );
    }
    s.relator("lantern-last-top", &[], RelTag::Lantern { kind: LanternKind::LastTop, i: 0, j: n });
    s.relator("closed-chain", &[], RelTag::ClosedChain { n });
}

fn half_rotations(s: &mut Suite, n: usize) {
    let top = 2 * n + 2;
    for i in 1..=top {
        for j in i + 1..=top {
            let rot = Word::gen(Generator::hij(i as u32, j as u32));
            for l in i..=j.saturating_sub(2) {
                s.push(
                    "half-rotation-h",
                    &[i, j, l],
                    rot.conjugate(&h(l)),
                    h(j + i - l - 2),
                );
            }
            for k in i..=j {
                for l in k + 1..=j {
                    s.push(
                        "half-rotation-t",
                        &[i, j, k, l],
                        rot.conjugate(&tw(k, l)),
                        tw(j + i - l, j + i - k),
                    );
                }
            }
        }
    }
}
