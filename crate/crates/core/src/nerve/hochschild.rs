use std::collections::HashMap;

use super::monoid::PointedMonoid;
use crate::abelian::{FinAbGroup, IntMatrix, PointedChainComplex};
use crate::error::{Error, Result};

/// Largest number of simplices allowed in a single degree.
const MAX_SIMPLICES: usize = 200_000;

/// Nondegenerate tuples `(a_0, …, a_n)`: `a_0 ≠ 0`, `a_i ∉ {0, 1}` for
/// `i ≥ 1`, with total weight at most `weight_bound` when one is given.
fn enumerate(
    monoid: &PointedMonoid,
    max_degree: usize,
    weight_bound: Option<u32>,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let fits = |w: u32| weight_bound.is_none_or(|b| w <= b);
    let mut layers: Vec<Vec<(Vec<usize>, u32)>> = Vec::with_capacity(max_degree + 1);
    let base: Vec<(Vec<usize>, u32)> = (1..monoid.len())
        .filter(|&a| fits(monoid.weight(a)))
        .map(|a| (vec![a], monoid.weight(a)))
        .collect();
    layers.push(base);
    for _ in 1..=max_degree {
        let prev = layers.last().expect("nonempty");
        let mut next = Vec::new();
        for (t, w) in prev {
            for a in (1..monoid.len()).filter(|&a| a != monoid.one()) {
                let w2 = w + monoid.weight(a);
                if fits(w2) {
                    let mut t2 = t.clone();
                    t2.push(a);
                    next.push((t2, w2));
                }
            }
            if next.len() > MAX_SIMPLICES {
                return Err(Error::BudgetExceeded {
                    required: next.len() as u128,
                    budget: MAX_SIMPLICES as u128,
                });
            }
        }
        layers.push(next);
    }
    Ok(layers
        .into_iter()
        .map(|l| l.into_iter().map(|(t, _)| t).collect())
        .collect())
}

/// Number of nondegenerate simplices of the cyclic bar construction per
/// degree `0..=max_degree`.
pub fn nondegenerate_counts(
    monoid: &PointedMonoid,
    max_degree: usize,
    weight_bound: Option<u32>,
) -> Result<Vec<usize>> {
    Ok(enumerate(monoid, max_degree, weight_bound)?
        .iter()
        .map(Vec::len)
        .collect())
}

/// Normalized Hochschild complex of the pointed monoid ring, truncated at
/// `max_degree` and optionally restricted to total weight `≤ weight_bound`.
///
/// The weight is preserved by every face map, so the restriction is a
/// subcomplex (indeed a direct summand).
pub fn hochschild_complex(
    monoid: &PointedMonoid,
    max_degree: usize,
    weight_bound: Option<u32>,
) -> Result<PointedChainComplex> {
    let layers = enumerate(monoid, max_degree, weight_bound)?;
    let index: Vec<HashMap<&[usize], usize>> = layers
        .iter()
        .map(|l| {
            l.iter()
                .enumerate()
                .map(|(i, t)| (t.as_slice(), i))
                .collect()
        })
        .collect();
    let mut boundaries = vec![IntMatrix::zeros(0, layers[0].len())];
    for n in 1..=max_degree {
        let mut d = IntMatrix::zeros(layers[n - 1].len(), layers[n].len());
        for (col, t) in layers[n].iter().enumerate() {
            for i in 0..=n {
                let mut f = Vec::with_capacity(n);
                if i < n {
                    f.extend_from_slice(&t[..i]);
                    f.push(monoid.mul(t[i], t[i + 1]));
                    f.extend_from_slice(&t[i + 2..]);
                } else {
                    f.push(monoid.mul(t[n], t[0]));
                    f.extend_from_slice(&t[1..n]);
                }
                if f.contains(&0) || f[1..].contains(&monoid.one()) {
                    continue;
                }
                let row = *index[n - 1].get(f.as_slice()).ok_or_else(|| {
                    Error::internal("face of a weight-bounded simplex exceeded the bound")
                })?;
                d.add_to(row, col, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        boundaries.push(d);
    }
    let bases = layers
        .iter()
        .map(|l| {
            l.iter()
                .map(|t| {
                    format!(
                        "({})",
                        t.iter()
                            .map(|&a| monoid.name(a))
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })
                .collect()
        })
        .collect();
    PointedChainComplex::new(bases, boundaries)
}

/// Hochschild homology in degrees `0..max_degree`; the top chain degree is
/// only used to compute the cycles below it.
pub fn hochschild_homology(
    monoid: &PointedMonoid,
    max_degree: usize,
    weight_bound: Option<u32>,
) -> Result<Vec<FinAbGroup>> {
    let mut h = hochschild_complex(monoid, max_degree + 1, weight_bound)?.homology()?;
    h.truncate(max_degree + 1);
    Ok(h)
}
