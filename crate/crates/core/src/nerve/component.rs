use std::collections::HashMap;

use super::hochschild::nondegenerate_counts;
use super::monoid::{Pi2Element, PointedMonoid};
use super::words::{enumerate_cyclic_words, CyclicWord, Letter};
use crate::abelian::{FinAbGroup, IntMatrix, PointedChainComplex};
use crate::arith::binomial;
use crate::error::{Error, Result};

/// A simplex `π_0 ∧ … ∧ π_m` of the cyclic bar construction of `Π²`.
pub type Simplex = Vec<Pi2Element>;

/// Largest word length accepted by the component constructions.
const MAX_WORD_LENGTH: usize = 16;

/// All ways to cut `rest` into nonempty single-letter blocks.
fn block_splits(rest: &[Letter]) -> Vec<Vec<Pi2Element>> {
    if rest.is_empty() {
        return vec![Vec::new()];
    }
    let run = rest.iter().take_while(|&&l| l == rest[0]).count();
    let mut out = Vec::new();
    for len in 1..=run {
        let head = Pi2Element::power(rest[0], len as u32);
        for mut tail in block_splits(&rest[len..]) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Nondegenerate simplices with word exactly `word`: `π_0` is a possibly
/// empty single-letter prefix, every later entry a nonempty block.
fn simplices_of_word(word: &[Letter]) -> Vec<Simplex> {
    if word.is_empty() {
        return vec![vec![Pi2Element::One]];
    }
    let first_run = word.iter().take_while(|&&l| l == word[0]).count();
    let mut out = Vec::new();
    for k in 0..=first_run {
        let head = Pi2Element::power(word[0], k as u32);
        for mut tail in block_splits(&word[k..]) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn label(s: &[Pi2Element]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Face `d_i` of the cyclic bar construction.
fn face(s: &[Pi2Element], i: usize) -> Simplex {
    let m = s.len() - 1;
    if i < m {
        let mut out = Vec::with_capacity(m);
        out.extend_from_slice(&s[..i]);
        out.push(s[i] * s[i + 1]);
        out.extend_from_slice(&s[i + 2..]);
        out
    } else {
        let mut out = Vec::with_capacity(m);
        out.push(s[m] * s[0]);
        out.extend_from_slice(&s[1..m]);
        out
    }
}

fn is_nondegenerate(s: &[Pi2Element]) -> bool {
    s[1..].iter().all(|&e| e != Pi2Element::One)
}

/// Normalized chains of the component `N^cy(Π², w̄)`, with the basepoint
/// and degenerate simplices set to zero and `∂ = Σ (-1)^i d_i`.
pub fn component_complex(word: &CyclicWord) -> Result<PointedChainComplex> {
    if word.len() > MAX_WORD_LENGTH {
        return Err(Error::BudgetExceeded {
            required: word.len() as u128,
            budget: MAX_WORD_LENGTH as u128,
        });
    }
    let top = word.len();
    let mut by_degree: Vec<Vec<Simplex>> = vec![Vec::new(); top + 1];
    let rotations = if word.is_empty() {
        vec![Vec::new()]
    } else {
        word.rotations()
    };
    for w in &rotations {
        for s in simplices_of_word(w) {
            by_degree[s.len() - 1].push(s);
        }
    }
    for simplices in &mut by_degree {
        simplices.sort();
    }
    let index: Vec<HashMap<&Simplex, usize>> = by_degree
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();

    let mut boundaries = vec![IntMatrix::zeros(0, by_degree[0].len())];
    for n in 1..=top {
        let mut d = IntMatrix::zeros(by_degree[n - 1].len(), by_degree[n].len());
        for (col, s) in by_degree[n].iter().enumerate() {
            for i in 0..=n {
                let f = face(s, i);
                if f.contains(&Pi2Element::Zero) || !is_nondegenerate(&f) {
                    continue;
                }
                let row = *index[n - 1].get(&f).ok_or_else(|| {
                    Error::internal(format!(
                        "face {} of {} left the component",
                        label(&f),
                        label(s)
                    ))
                })?;
                d.add_to(row, col, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        boundaries.push(d);
    }
    let bases = by_degree
        .iter()
        .map(|v| v.iter().map(|s| label(s)).collect())
        .collect();
    PointedChainComplex::new(bases, boundaries)
}

/// Reduced integral homology of `N^cy(Π², w̄)` in degrees `0..=len(w̄)`.
pub fn component_homology(word: &CyclicWord) -> Result<Vec<FinAbGroup>> {
    component_complex(word)?.homology()
}

/// Homology predicted by the homotopy type of the component: for period 2
/// and length `2i`, that of `S^{2i-1} ∨ S^{2i}`; for period `> 2`, zero.
pub fn predicted_homology(word: &CyclicWord) -> Result<Vec<FinAbGroup>> {
    if word.period() < 2 {
        return Err(Error::invalid(format!(
            "no prediction for the period-{} word {word}",
            word.period()
        )));
    }
    let mut out = vec![FinAbGroup::zero(); word.len() + 1];
    if word.period() == 2 {
        let m = word.len();
        out[m - 1] = FinAbGroup::free(1);
        out[m] = FinAbGroup::free(1);
    }
    Ok(out)
}

/// Nondegenerate simplex counts per degree, summed over the components of
/// all cyclical words of length `≤ max_len` (including the empty word).
pub fn simplex_counts_by_word(max_len: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0; max_len + 1];
    let mut words = vec![CyclicWord::empty()];
    for m in 1..=max_len {
        words.extend(enumerate_cyclic_words(m)?);
    }
    for w in &words {
        for (n, r) in component_complex(w)?.ranks().into_iter().enumerate() {
            counts[n] += r;
        }
    }
    Ok(counts)
}

/// Nondegenerate `n`-simplices of `N^cy(Π¹, i)`: tuples `(z^{i_0}, …, z^{i_n})`
/// with `i_0 ≥ 0`, the others `≥ 1`, summing to `i`.
pub fn pi1_component_rank(i: u64, n: u64) -> u64 {
    binomial(i, n)
}

/// Checks that the nondegenerate simplices of the full cyclic bar
/// constructions of `Π²` and `Π¹` (up to total weight `m`) are partitioned by
/// the components indexed by cyclical words, respectively by total degree.
pub fn wedge_decomposition_check(m: usize) -> Result<bool> {
    if m == 0 || m > 10 {
        return Err(Error::BudgetExceeded {
            required: m as u128,
            budget: 10,
        });
    }
    let weight = m as u32;
    let full = nondegenerate_counts(&PointedMonoid::pi2(weight), m, Some(weight))?;
    let by_word = simplex_counts_by_word(m)?;
    if full != by_word {
        return Ok(false);
    }
    let full = nondegenerate_counts(&PointedMonoid::pi1(weight), m, Some(weight))?;
    let by_degree: Vec<usize> = (0..=m as u64)
        .map(|n| {
            (0..=m as u64)
                .map(|i| pi1_component_rank(i, n))
                .sum::<u64>() as usize
        })
        .collect();
    Ok(full == by_degree)
}
