use num_bigint::BigUint;
use num_traits::Signed;

use super::snf::{rank_mod_p, smith_normal_form, SmithForm};
use super::{FinAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// A bounded chain complex of finitely generated free abelian groups
/// `C_top → … → C_1 → C_0`.
///
/// `boundaries[n]` is the matrix of `∂_n : C_n → C_{n-1}` with one column per
/// basis element of `C_n`; `boundaries[0]` has zero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedChainComplex {
    bases: Vec<Vec<String>>,
    boundaries: Vec<IntMatrix>,
}

impl PointedChainComplex {
    pub fn new(bases: Vec<Vec<String>>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if bases.len() != boundaries.len() {
            return Err(Error::internal(
                "one boundary matrix per degree is required",
            ));
        }
        for (n, d) in boundaries.iter().enumerate() {
            let rows = if n == 0 { 0 } else { bases[n - 1].len() };
            if d.cols() != bases[n].len() || d.rows() != rows {
                return Err(Error::internal(format!(
                    "boundary in degree {n} is {}x{}, expected {rows}x{}",
                    d.rows(),
                    d.cols(),
                    bases[n].len()
                )));
            }
        }
        Ok(PointedChainComplex { bases, boundaries })
    }

    /// Complex with generated labels `e{degree}_{index}`; `ranks[n]` is the
    /// rank of `C_n` and `maps[n-1]` the matrix of `∂_n`.
    pub fn from_matrices(ranks: &[usize], maps: Vec<IntMatrix>) -> Result<Self> {
        if maps.len() + 1 != ranks.len().max(1) {
            return Err(Error::invalid(
                "expected one map between each pair of adjacent degrees",
            ));
        }
        let bases = ranks
            .iter()
            .enumerate()
            .map(|(n, &r)| (0..r).map(|i| format!("e{n}_{i}")).collect())
            .collect();
        let mut boundaries = vec![IntMatrix::zeros(0, ranks.first().copied().unwrap_or(0))];
        boundaries.extend(maps);
        if ranks.is_empty() {
            return Ok(PointedChainComplex {
                bases: Vec::new(),
                boundaries: Vec::new(),
            });
        }
        Self::new(bases, boundaries)
    }

    pub fn zero() -> Self {
        PointedChainComplex {
            bases: Vec::new(),
            boundaries: Vec::new(),
        }
    }

    /// Number of degrees stored, i.e. one more than the top degree.
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.iter().all(Vec::is_empty)
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.bases.get(degree).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, degree: usize) -> &[String] {
        self.bases.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn boundary(&self, degree: usize) -> Option<&IntMatrix> {
        self.boundaries.get(degree)
    }

    /// Checks `∂_{n-1} ∘ ∂_n = 0` in every degree.
    pub fn check_boundary_squared(&self) -> Result<()> {
        for n in 2..self.boundaries.len() {
            let composite = self.boundaries[n - 1]
                .mul(&self.boundaries[n])
                .ok_or_else(|| Error::internal("boundary shapes do not compose"))?;
            if !composite.is_zero() {
                return Err(Error::internal(format!(
                    "boundary squared is nonzero in degree {n}"
                )));
            }
        }
        Ok(())
    }

    /// `H_n = ker ∂_n / im ∂_{n+1}` for every stored degree.
    pub fn homology(&self) -> Result<Vec<FinAbGroup>> {
        self.check_boundary_squared()?;
        let forms: Vec<SmithForm> = self.boundaries.iter().map(smith_normal_form).collect();
        let mut out = Vec::with_capacity(self.len());
        for n in 0..self.len() {
            let outgoing = forms[n].rank;
            let incoming = forms.get(n + 1);
            let incoming_rank = incoming.map_or(0, |f| f.rank);
            let free = self.rank(n) - outgoing - incoming_rank;
            let torsion: Vec<BigUint> = incoming
                .into_iter()
                .flat_map(SmithForm::torsion)
                .map(|d| d.abs().to_biguint().expect("nonnegative"))
                .collect();
            let mut orders = torsion;
            orders.extend(std::iter::repeat_n(BigUint::ZERO, free));
            out.push(FinAbGroup::from_cyclic_orders(&orders)?);
        }
        Ok(out)
    }

    /// Dimensions of `H_n(C ⊗ F_p)`.
    pub fn homology_mod_p(&self, p: u64) -> Result<Vec<usize>> {
        self.check_boundary_squared()?;
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| rank_mod_p(b, p)).collect();
        Ok((0..self.len())
            .map(|n| self.rank(n) - ranks[n] - ranks.get(n + 1).copied().unwrap_or(0))
            .collect())
    }

    /// `Σ (-1)^n rank C_n`.
    pub fn euler_characteristic(&self) -> i64 {
        self.bases
            .iter()
            .enumerate()
            .map(|(n, b)| {
                if n % 2 == 0 {
                    b.len() as i64
                } else {
                    -(b.len() as i64)
                }
            })
            .sum()
    }
}
