//! De Rham-Witt bookkeeping: symbols `W_sΩ^j`, big symbols `𝐖_mΩ^j`, the
//! decomposition of big groups into p-typical ones, and their values over
//! finite fields.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::FinAbGroup;
use crate::arith::require_prime;
use crate::error::{Error, Result};

/// The coefficient ring `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    /// The finite field with `p^f` elements.
    Fq { p: u64, f: u32 },
    /// An unspecified regular `F_p`-algebra; values stay symbolic.
    SymbolicRegularFp { p: u64 },
    /// An unspecified regular `Q`-algebra; values stay symbolic.
    SymbolicRegularQ,
}

impl BaseRing {
    pub fn fq(p: u64, f: u32) -> Result<Self> {
        require_prime(p)?;
        if f == 0 {
            return Err(Error::invalid("field degree must be positive"));
        }
        Ok(BaseRing::Fq { p, f })
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Self::fq(p, 1)
    }

    pub fn characteristic(&self) -> Option<u64> {
        match *self {
            BaseRing::Fq { p, .. } | BaseRing::SymbolicRegularFp { p } => Some(p),
            BaseRing::SymbolicRegularQ => None,
        }
    }
}

impl FromStr for BaseRing {
    type Err = Error;

    /// `fq:P:F`, `sym-fp:P`, or `sym-q`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad number {t:?} in base {s:?}")))
        };
        match parts.as_slice() {
            ["fq", p, f] => {
                let f =
                    u32::try_from(num(f)?).map_err(|_| Error::invalid("field degree too large"))?;
                BaseRing::fq(num(p)?, f)
            }
            ["sym-fp", p] => {
                let p = num(p)?;
                require_prime(p)?;
                Ok(BaseRing::SymbolicRegularFp { p })
            }
            ["sym-q"] => Ok(BaseRing::SymbolicRegularQ),
            _ => Err(Error::invalid(format!(
                "unrecognized base ring {s:?}; expected fq:P:F, sym-fp:P or sym-q"
            ))),
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Fq { p, f: d } => write!(f, "fq:{p}:{d}"),
            BaseRing::SymbolicRegularFp { p } => write!(f, "sym-fp:{p}"),
            BaseRing::SymbolicRegularQ => write!(f, "sym-q"),
        }
    }
}

/// A single de Rham-Witt group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// p-typical `W_sΩ^j`; zero when `s ≤ 0` or `j < 0`.
    PTypical { s: i64, j: i64 },
    /// big `𝐖_mΩ^j`, `m ≥ 1`.
    Big { m: u64, j: i64 },
    /// Kähler forms `Ω^j`.
    Kaehler { j: i64 },
}

impl Symbol {
    pub fn degree(&self) -> i64 {
        match *self {
            Symbol::PTypical { j, .. } | Symbol::Big { j, .. } | Symbol::Kaehler { j } => j,
        }
    }

    /// Zero for every base ring.
    pub fn vanishes(&self) -> bool {
        match *self {
            Symbol::PTypical { s, j } => s <= 0 || j < 0,
            Symbol::Big { m, j } => m == 0 || j < 0,
            Symbol::Kaehler { j } => j < 0,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::PTypical { s, j } => write!(f, "W_{s}Ω^{j}"),
            Symbol::Big { m, j } => write!(f, "𝐖_{m}Ω^{j}"),
            Symbol::Kaehler { j } => write!(f, "Ω^{j}"),
        }
    }
}

/// A formal direct sum of symbols with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSum {
    terms: BTreeMap<Symbol, u64>,
}

impl GradedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(symbol: Symbol) -> Self {
        let mut sum = Self::new();
        sum.add(symbol, 1);
        sum
    }

    pub fn add(&mut self, symbol: Symbol, mult: u64) {
        if mult > 0 {
            *self.terms.entry(symbol).or_insert(0) += mult;
        }
    }

    pub fn extend(&mut self, other: &GradedSum) {
        for (&sym, &mult) in &other.terms {
            self.add(sym, mult);
        }
    }

    pub fn direct_sum(&self, other: &GradedSum) -> GradedSum {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (Symbol, u64)> + '_ {
        self.terms.iter().map(|(&s, &m)| (s, m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Drops terms that vanish for every base.
    pub fn normalized(&self) -> GradedSum {
        GradedSum {
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| !s.vanishes())
                .map(|(&s, &m)| (s, m))
                .collect(),
        }
    }

    /// Replaces every big symbol by its p-typical decomposition.
    pub fn expand_big(&self, p: u64) -> Result<GradedSum> {
        require_prime(p)?;
        let mut out = GradedSum::new();
        for (sym, mult) in self.terms() {
            match sym {
                Symbol::Big { m, j } => {
                    for (_, piece) in big_decompose(m, j, p)? {
                        out.add(piece, mult);
                    }
                }
                other => out.add(other, mult),
            }
        }
        Ok(out)
    }
}

impl FromIterator<(Symbol, u64)> for GradedSum {
    fn from_iter<I: IntoIterator<Item = (Symbol, u64)>>(iter: I) -> Self {
        let mut sum = GradedSum::new();
        for (s, m) in iter {
            sum.add(s, m);
        }
        sum
    }
}

impl fmt::Display for GradedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, m)| {
                if m == 1 {
                    s.to_string()
                } else {
                    format!("({s})^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// JSON form of one term: `{"s", "j", "mult"}` for p-typical symbols,
/// `{"m", "j", "mult"}` for big ones, `{"kaehler", "mult"}` for Kähler
/// forms (the value of `kaehler` is the form degree).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TermJson {
    PTypical { s: i64, j: i64, mult: u64 },
    Big { m: u64, j: i64, mult: u64 },
    Kaehler { kaehler: i64, mult: u64 },
}

impl Serialize for GradedSum {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(sym, mult)| match sym {
                Symbol::PTypical { s, j } => TermJson::PTypical { s, j, mult },
                Symbol::Big { m, j } => TermJson::Big { m, j, mult },
                Symbol::Kaehler { j } => TermJson::Kaehler { kaehler: j, mult },
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedSum {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        Ok(terms
            .into_iter()
            .map(|t| match t {
                TermJson::PTypical { s, j, mult } => (Symbol::PTypical { s, j }, mult),
                TermJson::Big { m, j, mult } => (Symbol::Big { m, j }, mult),
                TermJson::Kaehler { kaehler, mult } => (Symbol::Kaehler { j: kaehler }, mult),
            })
            .collect())
    }
}

/// Result of evaluating a formal sum over a base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Group(FinAbGroup),
    Symbolic(GradedSum),
}

impl Evaluation {
    pub fn group(&self) -> Option<&FinAbGroup> {
        match self {
            Evaluation::Group(g) => Some(g),
            Evaluation::Symbolic(_) => None,
        }
    }

    pub fn into_group(self) -> Result<FinAbGroup> {
        match self {
            Evaluation::Group(g) => Ok(g),
            Evaluation::Symbolic(s) => Err(Error::Symbolic(s.to_string())),
        }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Group(g) => g.fmt(f),
            Evaluation::Symbolic(s) => s.fmt(f),
        }
    }
}

/// The unique `s ≥ 1` with `p^{s-1} d ≤ m < p^s d`.
pub fn s_index(m: u64, d: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    if d == 0 || d > m {
        return Err(Error::invalid(format!(
            "need 1 ≤ d ≤ m, got d = {d}, m = {m}"
        )));
    }
    if d.is_multiple_of(p) {
        return Err(Error::invalid(format!("d = {d} is divisible by p = {p}")));
    }
    let mut s = 1;
    let mut bound = d as u128 * p as u128;
    while bound <= m as u128 {
        bound *= p as u128;
        s += 1;
    }
    Ok(s)
}

/// `𝐖_mΩ^j ≅ ∏ W_{s(m,d)}Ω^j` over `1 ≤ d ≤ m` prime to `p`.
pub fn big_decompose(m: u64, j: i64, p: u64) -> Result<Vec<(u64, Symbol)>> {
    big_decompose_with(m, j, p, s_index)
}

/// [`big_decompose`] with a caller-supplied index rule.
pub fn big_decompose_with(
    m: u64,
    j: i64,
    p: u64,
    index: impl Fn(u64, u64, u64) -> Result<u32>,
) -> Result<Vec<(u64, Symbol)>> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::invalid("big de Rham-Witt index m must be positive"));
    }
    (1..=m)
        .filter(|d| d % p != 0)
        .map(|d| {
            Ok((
                d,
                Symbol::PTypical {
                    s: index(m, d, p)? as i64,
                    j,
                },
            ))
        })
        .collect()
}

/// Value of one symbol over `F_{p^f}`. Forms of positive degree vanish and
/// `W_sΩ^0 = W_s(F_{p^f}) ≅ (Z/p^s)^f`.
fn evaluate_over_fq(sym: Symbol, p: u64, f: u32) -> Result<FinAbGroup> {
    match sym {
        _ if sym.vanishes() => Ok(FinAbGroup::zero()),
        Symbol::PTypical { s, j } => {
            if j != 0 {
                return Ok(FinAbGroup::zero());
            }
            let exponent = u32::try_from(s).map_err(|_| Error::invalid("Witt length too large"))?;
            Ok(FinAbGroup::prime_power(p, exponent)?.power(f as usize))
        }
        Symbol::Big { m, j } => {
            let mut g = FinAbGroup::zero();
            for (_, piece) in big_decompose(m, j, p)? {
                g = g.direct_sum(&evaluate_over_fq(piece, p, f)?);
            }
            Ok(g)
        }
        // Ω^j = W_1Ω^j
        Symbol::Kaehler { j } => evaluate_over_fq(Symbol::PTypical { s: 1, j }, p, f),
    }
}

/// Evaluates a formal sum. Over `F_q` the result is a finite group; over the
/// symbolic bases the normalized sum is returned unchanged.
pub fn evaluate(sum: &GradedSum, base: &BaseRing) -> Result<Evaluation> {
    match *base {
        BaseRing::Fq { p, f } => {
            let mut g = FinAbGroup::zero();
            for (sym, mult) in sum.terms() {
                g = g.direct_sum(&evaluate_over_fq(sym, p, f)?.power(mult as usize));
            }
            Ok(Evaluation::Group(g))
        }
        BaseRing::SymbolicRegularFp { .. } => Ok(Evaluation::Symbolic(sum.normalized())),
        BaseRing::SymbolicRegularQ => {
            if let Some((sym, _)) = sum
                .terms()
                .find(|(s, _)| !matches!(s, Symbol::Kaehler { .. }))
            {
                return Err(Error::invalid(format!(
                    "{sym} has no meaning over a regular Q-algebra"
                )));
            }
            Ok(Evaluation::Symbolic(sum.normalized()))
        }
    }
}
