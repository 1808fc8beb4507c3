//! Free-group words over the generator alphabets used throughout the crate.
//!
//! Words are stored run-length encoded and are always freely reduced. The
//! text syntax is `t[1,2]^-3 * h[4] * r`; `1` denotes the empty word.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("no image for generator {0}")]
    MissingImage(Generator),
    #[error("invalid generator {name}{indices:?}: {reason}")]
    InvalidGenerator {
        name: String,
        indices: Vec<u32>,
        reason: &'static str,
    },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Generator families. `Hij` is the half-rotation of the disk containing
/// the points `i..=j`; it shares the printed name `h` with `H` and is told
/// apart by its arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Sigma,
    H,
    T,
    A,
    B,
    R,
    Hij,
    X,
    Zeta,
    Custom(String),
}

impl Family {
    fn arity(&self) -> Option<usize> {
        match self {
            Family::Sigma | Family::H | Family::A | Family::B | Family::X => Some(1),
            Family::T | Family::Hij => Some(2),
            Family::R | Family::Zeta => Some(0),
            Family::Custom(_) => None,
        }
    }

    fn name(&self) -> &str {
        match self {
            Family::Sigma => "s",
            Family::H | Family::Hij => "h",
            Family::T => "t",
            Family::A => "a",
            Family::B => "b",
            Family::R => "r",
            Family::X => "x",
            Family::Zeta => "zeta",
            Family::Custom(s) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub family: Family,
    pub indices: Vec<u32>,
}

impl Generator {
    pub fn new(family: Family, indices: Vec<u32>) -> Result<Self, WordError> {
        let bad = |reason| WordError::InvalidGenerator {
            name: family.name().to_string(),
            indices: indices.clone(),
            reason,
        };
        if let Some(a) = family.arity() {
            if indices.len() != a {
                return Err(bad("wrong number of indices"));
            }
        }
        if indices.contains(&0) {
            return Err(bad("indices are 1-based"));
        }
        if matches!(family, Family::T | Family::Hij) && indices[0] >= indices[1] {
            return Err(bad("expected i < j"));
        }
        if let Family::Custom(name) = &family {
            if !is_ident(name) {
                return Err(bad("custom name must be an identifier"));
            }
        }
        Ok(Generator { family, indices })
    }

    pub fn sigma(i: u32) -> Self {
        Generator { family: Family::Sigma, indices: vec![i] }
    }
    pub fn h(i: u32) -> Self {
        Generator { family: Family::H, indices: vec![i] }
    }
    pub fn t(i: u32, j: u32) -> Self {
        assert!(0 < i && i < j, "t[{i},{j}] needs 0 < i < j");
        Generator { family: Family::T, indices: vec![i, j] }
    }
    pub fn a(i: u32) -> Self {
        Generator { family: Family::A, indices: vec![i] }
    }
    pub fn b(i: u32) -> Self {
        Generator { family: Family::B, indices: vec![i] }
    }
    pub fn r() -> Self {
        Generator { family: Family::R, indices: vec![] }
    }
    pub fn hij(i: u32, j: u32) -> Self {
        assert!(0 < i && i < j);
        Generator { family: Family::Hij, indices: vec![i, j] }
    }
    pub fn x(i: u32) -> Self {
        Generator { family: Family::X, indices: vec![i] }
    }
    pub fn zeta() -> Self {
        Generator { family: Family::Zeta, indices: vec![] }
    }
    pub fn custom(name: &str) -> Self {
        Generator::new(Family::Custom(name.to_string()), vec![]).expect("valid custom name")
    }

    pub fn index(&self, pos: usize) -> u32 {
        self.indices[pos]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        if !self.indices.is_empty() {
            f.write_str("[")?;
            for (p, i) in self.indices.iter().enumerate() {
                if p > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

/// A freely reduced word: no two adjacent letters share a generator and no
/// exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(Generator, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn gen(g: Generator) -> Self {
        Word { letters: vec![(g, 1)] }
    }

    pub fn power(g: Generator, e: i64) -> Self {
        reduce(vec![(g, e)])
    }

    pub fn from_letters<I: IntoIterator<Item = (Generator, i64)>>(raw: I) -> Self {
        reduce(raw)
    }

    pub fn letters(&self) -> &[(Generator, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of run-length letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn syllable_length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.append(other);
        out
    }

    /// In-place `self = self * other`.
    pub fn append(&mut self, other: &Word) {
        for (g, e) in &other.letters {
            push_letter(&mut self.letters, g.clone(), *e);
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { invert(self) } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out.append(&base);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        invert(self)
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inverse())
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.letters.iter().map(|(g, _)| g)
    }

    /// Exponent sum of `g`.
    pub fn exponent_sum(&self, g: &Generator) -> i64 {
        self.letters.iter().filter(|(h, _)| h == g).map(|(_, e)| e).sum()
    }
}

/// Product of a sequence of words.
pub fn product<'a, I: IntoIterator<Item = &'a Word>>(ws: I) -> Word {
    let mut out = Word::identity();
    for w in ws {
        out.append(w);
    }
    out
}

fn push_letter(stack: &mut Vec<(Generator, i64)>, g: Generator, e: i64) {
    if e == 0 {
        return;
    }
    if let Some((top, te)) = stack.last_mut() {
        if *top == g {
            *te += e;
            if *te == 0 {
                stack.pop();
            }
            return;
        }
    }
    stack.push((g, e));
}

/// Freely reduce a raw letter sequence.
pub fn reduce<I: IntoIterator<Item = (Generator, i64)>>(raw: I) -> Word {
    let mut stack = Vec::new();
    for (g, e) in raw {
        push_letter(&mut stack, g, e);
    }
    Word { letters: stack }
}

pub fn invert(w: &Word) -> Word {
    Word {
        letters: w.letters.iter().rev().map(|(g, e)| (g.clone(), -e)).collect(),
    }
}

/// Apply the homomorphism determined by `map` to `w`.
pub fn substitute(w: &Word, map: &HashMap<Generator, Word>) -> Result<Word, WordError> {
    substitute_with(w, |g| map.get(g).cloned())
}

pub fn substitute_with<F>(w: &Word, mut image: F) -> Result<Word, WordError>
where
    F: FnMut(&Generator) -> Option<Word>,
{
    let mut out = Word::identity();
    for (g, e) in &w.letters {
        let img = image(g).ok_or_else(|| WordError::MissingImage(g.clone()))?;
        out.append(&img.pow(*e));
    }
    Ok(out)
}

/// Split `w` as `conjugator * core * conjugator^-1` with `core` cyclically
/// reduced.
pub fn cyclically_reduce(w: &Word) -> (Word, Word) {
    let mut letters = w.letters.clone();
    let mut conj: Vec<(Generator, i64)> = Vec::new();
    loop {
        let n = letters.len();
        if n < 2 || letters[0].0 != letters[n - 1].0 {
            break;
        }
        let a = letters[0].1;
        let b = letters[n - 1].1;
        if a.signum() == b.signum() {
            break;
        }
        let p = a.signum() * a.abs().min(b.abs());
        conj.push((letters[0].0.clone(), p));
        letters[0].1 -= p;
        letters[n - 1].1 += p;
        if letters[n - 1].1 == 0 {
            letters.pop();
        }
        if letters[0].1 == 0 {
            letters.remove(0);
        }
    }
    (Word { letters }, reduce(conj))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (p, (g, e)) in self.letters.iter().enumerate() {
            if p > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{g}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> WordError {
        WordError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<String, WordError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.err("expected generator name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            self.pos = start;
            return Err(self.err("expected integer"));
        }
        let text: String = String::from_utf8_lossy(&self.src[start..self.pos])
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        text.parse().map_err(|_| self.err("integer out of range"))
    }

    fn letter(&mut self) -> Result<(Generator, i64), WordError> {
        let name = self.ident()?;
        let mut indices = Vec::new();
        if self.peek() == Some(b'[') {
            self.pos += 1;
            loop {
                let v = self.integer()?;
                let v = u32::try_from(v).map_err(|_| self.err("index must be positive"))?;
                indices.push(v);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ']'")),
                }
            }
        }
        let family = match (name.as_str(), indices.len()) {
            ("s" | "sigma", _) => Family::Sigma,
            ("h", 2) => Family::Hij,
            ("h", _) => Family::H,
            ("t", _) => Family::T,
            ("a", _) => Family::A,
            ("b", _) => Family::B,
            ("r", _) => Family::R,
            ("x", _) => Family::X,
            ("zeta", _) => Family::Zeta,
            _ => Family::Custom(name.clone()),
        };
        if let Family::Custom(_) = family {
            if !indices.is_empty() {
                return Err(self.err(format!("custom generator '{name}' takes no indices")));
            }
        }
        let g = Generator::new(family, indices)?;
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.integer()?;
        }
        Ok((g, e))
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut raw = Vec::new();
        if self.peek() == Some(b'1') {
            self.pos += 1;
        } else {
            raw.push(self.letter()?);
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() == Some(b'1') {
                self.pos += 1;
            } else {
                raw.push(self.letter()?);
            }
        }
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(reduce(raw))
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser { src: s.as_bytes(), pos: 0 }.word()
    }
}

pub fn parse_word(s: &str) -> Result<Word, WordError> {
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(name: &str) -> Generator {
        Generator::custom(name)
    }

    #[test]
    fn reduce_cancels() {
        assert!(reduce(vec![(c("g"), 1), (c("g"), -1)]).is_identity());
        assert!(reduce(Vec::new()).is_identity());
    }

    #[test]
    fn print_parse() {
        let w: Word = "t[1,2]^-3 * h[4] * r".parse().unwrap();
        assert_eq!(w.to_string(), "t[1,2]^-3 * h[4] * r");
        let w2: Word = " t [ 1 , 2 ] ^ - 3*h[4]*r ".parse().unwrap();
        assert_eq!(w, w2);
        assert_eq!("1".parse::<Word>().unwrap(), Word::identity());
        assert_eq!(Word::identity().to_string(), "1");
        let hij: Word = "h[1,6]".parse().unwrap();
        assert_eq!(hij.letters()[0].0.family, Family::Hij);
    }

    #[test]
    fn parse_errors() {
        assert!("t[2,1]".parse::<Word>().is_err());
        assert!("h[0]".parse::<Word>().is_err());
        assert!("h[1] *".parse::<Word>().is_err());
        assert!("foo[1]".parse::<Word>().is_err());
    }

    #[test]
    fn cyclic_reduction_examples() {
        let (a, b, cc) = (c("a"), c("b"), c("c"));
        let w = Word::from_letters(vec![(a.clone(), 1), (b.clone(), 1), (a.clone(), -1)]);
        let (core, conj) = cyclically_reduce(&w);
        assert_eq!(core, Word::gen(b.clone()));
        assert_eq!(conj, Word::gen(a.clone()));
        let w = Word::from_letters(vec![
            (a.clone(), 1),
            (b.clone(), 1),
            (cc.clone(), 1),
            (b.clone(), -1),
            (a.clone(), -1),
        ]);
        let (core, conj) = cyclically_reduce(&w);
        assert_eq!(core, Word::gen(cc));
        assert_eq!(conj, Word::from_letters(vec![(a, 1), (b, 1)]));
    }

    #[test]
    fn missing_image() {
        let w = Word::gen(c("g"));
        assert!(matches!(substitute(&w, &HashMap::new()), Err(WordError::MissingImage(_))));
    }
}
