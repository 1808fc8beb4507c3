use std::collections::HashMap;

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use smodpres::words::*;

const SEED: u64 = 20240601;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn letter(i: u8) -> Generator {
    Generator::x(i as u32 + 1)
}

/// Expand to unit letters `±(index+1)`.
fn expand(letters: &[(Generator, i64)]) -> Vec<i64> {
    let mut out = Vec::new();
    for (g, e) in letters {
        let v = g.index(0) as i64;
        for _ in 0..e.unsigned_abs() {
            out.push(if *e > 0 { v } else { -v });
        }
    }
    out
}

fn naive_reduce(w: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn raw_word() -> impl Strategy<Value = Vec<(u8, i64)>> {
    prop::collection::vec((0u8..4, -3i64..=3), 0..16)
}

fn to_letters(raw: &[(u8, i64)]) -> Vec<(Generator, i64)> {
    raw.iter().map(|&(g, e)| (letter(g), e)).collect()
}

proptest! {
    #![proptest_config(config(10_000))]

    #[test]
    fn reduce_matches_stack_reduction(raw in raw_word()) {
        let letters = to_letters(&raw);
        let w = reduce(letters.clone());
        prop_assert_eq!(expand(w.letters()), naive_reduce(&expand(&letters)));
        // no zero exponents, no equal neighbours
        for pair in w.letters().windows(2) {
            prop_assert!(pair[0].0 != pair[1].0);
        }
        prop_assert!(w.letters().iter().all(|(_, e)| *e != 0));
    }

    #[test]
    fn invert_matches_reversal(raw in raw_word()) {
        let w = reduce(to_letters(&raw));
        let naive: Vec<i64> = expand(w.letters()).iter().rev().map(|x| -x).collect();
        prop_assert_eq!(expand(invert(&w).letters()), naive);
        prop_assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn substitute_matches_expansion(raw in raw_word(), images in prop::collection::vec(raw_word(), 4)) {
        let w = reduce(to_letters(&raw));
        let map: HashMap<Generator, Word> = images
            .iter()
            .enumerate()
            .map(|(i, r)| (letter(i as u8), reduce(to_letters(r))))
            .collect();
        let got = substitute(&w, &map).unwrap();
        let mut naive = Vec::new();
        for x in expand(w.letters()) {
            let img = expand(map[&letter((x.abs() - 1) as u8)].letters());
            if x > 0 {
                naive.extend(img);
            } else {
                naive.extend(img.iter().rev().map(|y| -y));
            }
        }
        prop_assert_eq!(expand(got.letters()), naive_reduce(&naive));
    }

    #[test]
    fn cyclic_reduction_matches_stripping(raw in raw_word()) {
        let w = reduce(to_letters(&raw));
        let (core, conj) = cyclically_reduce(&w);
        let mut e = expand(w.letters());
        let mut prefix = Vec::new();
        while e.len() >= 2 && e[0] == -e[e.len() - 1] {
            prefix.push(e[0]);
            e.remove(0);
            e.pop();
        }
        prop_assert_eq!(expand(core.letters()), e);
        prop_assert_eq!(expand(conj.letters()), prefix);
        prop_assert_eq!(conj.mul(&core).mul(&conj.inverse()), w.clone());
        prop_assert!(core.syllable_length() <= w.syllable_length());
    }

    #[test]
    fn parse_display_round_trip(raw in raw_word()) {
        let w = reduce(to_letters(&raw));
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }
}

#[test]
fn reduce_examples() {
    let a = Generator::h(1);
    let b = Generator::t(1, 2);
    assert!(reduce(vec![(a.clone(), 2), (a.clone(), -2)]).is_identity());
    let w = reduce(vec![(a.clone(), 1), (b.clone(), 1), (b.clone(), -1), (a.clone(), 1)]);
    assert_eq!(w.letters(), &[(a.clone(), 2)]);
    assert_eq!(Word::power(a, 0), Word::identity());
}

#[test]
fn text_syntax() {
    let w = parse_word("t[1,2]^-3 * h[4] * r").unwrap();
    assert_eq!(w.to_string(), "t[1,2]^-3 * h[4] * r");
    assert_eq!(w.exponent_sum(&Generator::t(1, 2)), -3);
    assert_eq!(parse_word("1").unwrap(), Word::identity());
    assert!(parse_word("t[1").is_err());
    assert!(parse_word("q[").is_err());
}

#[test]
fn commutator_and_conjugate() {
    let a = Word::gen(Generator::h(1));
    let b = Word::gen(Generator::h(2));
    assert_eq!(Word::commutator(&a, &b).to_string(), "h[1] * h[2] * h[1]^-1 * h[2]^-1");
    assert_eq!(a.conjugate(&b).to_string(), "h[1] * h[2] * h[1]^-1");
    assert!(Word::commutator(&a, &a).is_identity());
}

#[test]
fn cyclic_reduction_examples() {
    let x = Generator::x(1);
    let y = Generator::x(2);
    let w = reduce(vec![(x.clone(), 2), (y.clone(), 1), (x.clone(), -2)]);
    let (core, conj) = cyclically_reduce(&w);
    assert_eq!(core, Word::gen(y.clone()));
    assert_eq!(conj, Word::power(x.clone(), 2));
    // already cyclically reduced
    let v = reduce(vec![(x.clone(), 1), (y, 1)]);
    assert_eq!(cyclically_reduce(&v), (v.clone(), Word::identity()));
}

#[test]
fn missing_image_is_an_error() {
    let w = Word::gen(Generator::h(1));
    assert!(matches!(substitute(&w, &HashMap::new()), Err(WordError::MissingImage(_))));
}
