use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'x' => Ok(Letter::X),
            'y' => Ok(Letter::Y),
            other => Err(Error::invalid(format!("letter {other:?} is not x or y"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A rotation class of words in `x, y`, represented by its least rotation
/// (with `x < y`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    letters: Vec<Letter>,
    period: usize,
}

impl CyclicWord {
    /// The class of the empty word: length 0, period 1.
    pub fn empty() -> Self {
        CyclicWord {
            letters: Vec::new(),
            period: 1,
        }
    }

    pub fn parse(word: &str) -> Result<Self> {
        canonical_cyclic_word(word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct rotations.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn representative(&self) -> String {
        self.letters.iter().map(|l| l.as_char()).collect()
    }

    /// The distinct rotations, starting with the representative.
    pub fn rotations(&self) -> Vec<Vec<Letter>> {
        (0..self.period).map(|k| rotate(&self.letters, k)).collect()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", self.representative())
        }
    }
}

fn rotate(w: &[Letter], k: usize) -> Vec<Letter> {
    w[k..].iter().chain(&w[..k]).copied().collect()
}

pub(crate) fn canonical_letters(w: &[Letter]) -> CyclicWord {
    if w.is_empty() {
        return CyclicWord::empty();
    }
    let n = w.len();
    let least = (0..n).map(|k| rotate(w, k)).min().unwrap();
    let period = (1..=n)
        .find(|&t| n.is_multiple_of(t) && rotate(&least, t) == least)
        .unwrap();
    CyclicWord {
        letters: least,
        period,
    }
}

pub fn canonical_cyclic_word(word: &str) -> Result<CyclicWord> {
    if word.is_empty() {
        return Err(Error::invalid(
            "the empty word has no rotations; use CyclicWord::empty",
        ));
    }
    let letters = word
        .chars()
        .map(Letter::from_char)
        .collect::<Result<Vec<_>>>()?;
    Ok(canonical_letters(&letters))
}

/// All cyclical words of length `m ≥ 1`, each once, in order of their
/// representatives.
pub fn enumerate_cyclic_words(m: usize) -> Result<Vec<CyclicWord>> {
    if m == 0 {
        return Err(Error::invalid("word length must be positive"));
    }
    if m > 24 {
        return Err(Error::BudgetExceeded {
            required: 1u128 << m,
            budget: 1 << 24,
        });
    }
    let mut seen = BTreeSet::new();
    for bits in 0u32..(1 << m) {
        let w: Vec<Letter> = (0..m)
            .map(|i| {
                if bits >> (m - 1 - i) & 1 == 0 {
                    Letter::X
                } else {
                    Letter::Y
                }
            })
            .collect();
        seen.insert(canonical_letters(&w));
    }
    Ok(seen.into_iter().collect())
}

/// Number of binary necklaces of length `m`, `(1/m) Σ_{d | m} φ(d) 2^{m/d}`.
pub fn necklace_count(m: u32) -> u64 {
    if m == 0 {
        return 1;
    }
    let phi = |n: u32| (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
    let total: u64 = (1..=m)
        .filter(|d| m.is_multiple_of(*d))
        .map(|d| phi(d) << (m / d))
        .sum();
    total / m as u64
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(m: usize) -> Vec<(String, usize)> {
        enumerate_cyclic_words(m)
            .unwrap()
            .iter()
            .map(|w| (w.representative(), w.period()))
            .collect()
    }

    #[test]
    fn canonical_forms() {
        let w = canonical_cyclic_word("yx").unwrap();
        assert_eq!(
            (w.representative(), w.len(), w.period()),
            ("xy".into(), 2, 2)
        );
        let w = canonical_cyclic_word("xyxy").unwrap();
        assert_eq!(
            (w.representative(), w.len(), w.period()),
            ("xyxy".into(), 4, 2)
        );
        let w = canonical_cyclic_word("xxy").unwrap();
        assert_eq!(
            (w.representative(), w.len(), w.period()),
            ("xxy".into(), 3, 3)
        );
        assert_eq!(
            canonical_cyclic_word("yxyxyx").unwrap().representative(),
            "xyxyxy"
        );
        assert!(canonical_cyclic_word("").is_err());
        assert!(canonical_cyclic_word("xz").is_err());
        assert_eq!(CyclicWord::empty().period(), 1);
    }

    #[test]
    fn enumeration() {
        assert_eq!(summary(1), vec![("x".into(), 1), ("y".into(), 1)]);
        assert_eq!(
            summary(2),
            vec![("xx".into(), 1), ("xy".into(), 2), ("yy".into(), 1)]
        );
        let four = summary(4);
        assert_eq!(four.len(), 6);
        let period_two: Vec<_> = four
            .iter()
            .filter(|(_, p)| *p == 2)
            .map(|(w, _)| w.as_str())
            .collect();
        assert_eq!(period_two, vec!["xyxy"]);
    }

    #[test]
    fn counts_match_necklace_formula() {
        for m in 1..=12 {
            assert_eq!(
                enumerate_cyclic_words(m).unwrap().len() as u64,
                necklace_count(m as u32),
                "m = {m}"
            );
        }
    }

    #[test]
    fn period_is_orbit_size() {
        for m in 1..=8 {
            for w in enumerate_cyclic_words(m).unwrap() {
                let orbit: BTreeSet<_> = (0..m).map(|k| rotate(w.letters(), k)).collect();
                assert_eq!(orbit.len(), w.period());
                assert_eq!(m % w.period(), 0);
                assert!(orbit.iter().all(|r| r.as_slice() >= w.letters()));
            }
        }
    }
}
