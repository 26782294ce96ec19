use std::fmt;

use super::words::Letter;
use crate::error::{Error, Result};

/// A finite pointed monoid given by its multiplication table.
///
/// Element 0 is the basepoint and must be absorbing; `one` is a two-sided
/// unit. Each element carries a weight (total degree) that is additive on
/// nonzero products, which lets the Hochschild complex be cut off at a
/// weight bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedMonoid {
    names: Vec<String>,
    weights: Vec<u32>,
    table: Vec<Vec<usize>>,
    one: usize,
}

impl PointedMonoid {
    /// Validates the axioms exhaustively.
    pub fn from_table(
        names: Vec<String>,
        weights: Vec<u32>,
        table: Vec<Vec<usize>>,
        one: usize,
    ) -> Result<Self> {
        let n = names.len();
        if n < 2 || weights.len() != n || table.len() != n || table.iter().any(|row| row.len() != n)
        {
            return Err(Error::invalid(
                "multiplication table must be square over at least {0, 1}",
            ));
        }
        if one == 0 || one >= n {
            return Err(Error::invalid("unit must be a non-basepoint element"));
        }
        if table.iter().flatten().any(|&c| c >= n) {
            return Err(Error::invalid("product outside the monoid"));
        }
        for a in 0..n {
            if table[0][a] != 0 || table[a][0] != 0 {
                return Err(Error::invalid(format!(
                    "basepoint is not absorbing against {}",
                    names[a]
                )));
            }
            if table[one][a] != a || table[a][one] != a {
                return Err(Error::invalid(format!(
                    "{} is not a unit for {}",
                    names[one], names[a]
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                if ab != 0 && weights[ab] != weights[a] + weights[b] {
                    return Err(Error::invalid(
                        "weights are not additive on nonzero products",
                    ));
                }
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::invalid(format!(
                            "multiplication is not associative on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(PointedMonoid {
            names,
            weights,
            table,
            one,
        })
    }

    /// `Π⁰ = {0, 1}`.
    pub fn pi0() -> Self {
        Self::from_table(
            vec!["0".into(), "1".into()],
            vec![0, 0],
            vec![vec![0, 0], vec![0, 1]],
            1,
        )
        .unwrap()
    }

    /// `Π¹ = {0, 1, z, …, z^N}` with `z^a z^b = 0` once `a + b > N`.
    pub fn pi1(n: u32) -> Self {
        let size = n as usize + 2;
        let mut names = vec!["0".to_string()];
        names.extend((0..=n).map(|a| power_name("z", a)));
        let weights: Vec<u32> = std::iter::once(0).chain(0..=n).collect();
        let index = |a: u32| a as usize + 1;
        let mut table = vec![vec![0; size]; size];
        for a in 0..=n {
            for b in 0..=n {
                if a + b <= n {
                    table[index(a)][index(b)] = index(a + b);
                }
            }
        }
        Self::from_table(names, weights, table, 1).unwrap()
    }

    /// `Π² = {0, 1, x, …, x^N, y, …, y^N}` with `xy = yx = 0` and powers
    /// beyond `N` set to 0.
    pub fn pi2(n: u32) -> Self {
        let elems: Vec<Pi2Element> = std::iter::once(Pi2Element::Zero)
            .chain(std::iter::once(Pi2Element::One))
            .chain((1..=n).map(Pi2Element::X))
            .chain((1..=n).map(Pi2Element::Y))
            .collect();
        let names = elems.iter().map(ToString::to_string).collect();
        let weights = elems.iter().map(Pi2Element::weight).collect();
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let ab = *a * *b;
                        if ab.weight() > n {
                            0
                        } else {
                            elems.iter().position(|&e| e == ab).unwrap()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_table(names, weights, table, 1).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn weight(&self, a: usize) -> u32 {
        self.weights[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }
}

fn power_name(var: &str, a: u32) -> String {
    match a {
        0 => "1".into(),
        1 => var.into(),
        _ => format!("{var}^{a}"),
    }
}

/// An element of the untruncated `Π²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pi2Element {
    Zero,
    One,
    X(u32),
    Y(u32),
}

impl std::ops::Mul for Pi2Element {
    type Output = Pi2Element;

    fn mul(self, other: Pi2Element) -> Pi2Element {
        use Pi2Element::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (One, a) | (a, One) => a,
            (X(a), X(b)) => X(a + b),
            (Y(a), Y(b)) => Y(a + b),
            (X(_), Y(_)) | (Y(_), X(_)) => Zero,
        }
    }
}

impl Pi2Element {
    pub fn weight(&self) -> u32 {
        match *self {
            Pi2Element::Zero | Pi2Element::One => 0,
            Pi2Element::X(a) | Pi2Element::Y(a) => a,
        }
    }

    /// The pure power `letter^len`, or the unit for `len = 0`.
    pub fn power(letter: Letter, len: u32) -> Pi2Element {
        match (letter, len) {
            (_, 0) => Pi2Element::One,
            (Letter::X, a) => Pi2Element::X(a),
            (Letter::Y, a) => Pi2Element::Y(a),
        }
    }

    pub fn word(&self) -> Option<Vec<Letter>> {
        match *self {
            Pi2Element::Zero => None,
            Pi2Element::One => Some(Vec::new()),
            Pi2Element::X(a) => Some(vec![Letter::X; a as usize]),
            Pi2Element::Y(a) => Some(vec![Letter::Y; a as usize]),
        }
    }
}

impl fmt::Display for Pi2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pi2Element::Zero => write!(f, "0"),
            Pi2Element::One => write!(f, "1"),
            Pi2Element::X(a) => write!(f, "{}", power_name("x", a)),
            Pi2Element::Y(a) => write!(f, "{}", power_name("y", a)),
        }
    }
}

/// Concatenation `ω(π_0) * … * ω(π_m)` of the words of the entries.
pub fn word_of(tuple: &[Pi2Element]) -> Result<String> {
    let mut out = String::new();
    for e in tuple {
        let w = e
            .word()
            .ok_or_else(|| Error::invalid("the basepoint has no word"))?;
        out.extend(w.iter().map(|l| l.as_char()));
    }
    Ok(out)
}
