use alloc::vec::Vec;

use super::pmf::normalize_mass;
use super::{rank_of, sizes_of, total_size, Alphabet};
use crate::{Error, Result};

/// A row-stochastic kernel from a product of alphabets to a product of
/// alphabets. Rows are indexed by the mixed-radix rank of the conditioning
/// tuple, columns by the rank of the output tuple (last factor fastest).
#[derive(Clone, Debug, PartialEq)]
pub struct CondPmf {
    from: Vec<Alphabet>,
    to: Vec<Alphabet>,
    mass: Vec<f64>,
}

impl CondPmf {
    /// Validated constructor: each row must sum to one within `1e-9` and is
    /// renormalized exactly.
    pub fn new(
        from: impl Into<Vec<Alphabet>>,
        to: impl Into<Vec<Alphabet>>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let from = from.into();
        let to = to.into();
        let nrows = total_size(&sizes_of(&from));
        let ncols = total_size(&sizes_of(&to));
        if rows.len() != nrows {
            return Err(Error::AlphabetMismatch(alloc::format!(
                "kernel needs {nrows} rows, got {}",
                rows.len()
            )));
        }
        let mut mass = Vec::with_capacity(nrows * ncols);
        for (r, mut row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::AlphabetMismatch(alloc::format!(
                    "kernel row {r} needs {ncols} entries, got {}",
                    row.len()
                )));
            }
            normalize_mass(&mut row, &alloc::format!("kernel row {r}"))?;
            mass.extend_from_slice(&row);
        }
        Ok(CondPmf { from, to, mass })
    }

    /// Shape-checked constructor that skips all value validation. Used to
    /// hold raw data for diagnostic-style validation.
    pub fn from_flat_unvalidated(
        from: impl Into<Vec<Alphabet>>,
        to: impl Into<Vec<Alphabet>>,
        mass: Vec<f64>,
    ) -> Result<Self> {
        let from = from.into();
        let to = to.into();
        let expect = total_size(&sizes_of(&from)) * total_size(&sizes_of(&to));
        if mass.len() != expect {
            return Err(Error::AlphabetMismatch(alloc::format!(
                "kernel needs {expect} entries, got {}",
                mass.len()
            )));
        }
        Ok(CondPmf { from, to, mass })
    }

    /// Deterministic kernel: output coordinates are a function of the input
    /// coordinates.
    pub fn deterministic(
        from: impl Into<Vec<Alphabet>>,
        to: impl Into<Vec<Alphabet>>,
        map: impl Fn(&[usize]) -> Vec<usize>,
    ) -> Self {
        let from = from.into();
        let to = to.into();
        let from_sizes = sizes_of(&from);
        let to_sizes = sizes_of(&to);
        let ncols = total_size(&to_sizes);
        let mut mass = alloc::vec![0.0; total_size(&from_sizes) * ncols];
        super::for_each_rank(&from_sizes, |row, coords| {
            let out = map(coords);
            mass[row * ncols + rank_of(&to_sizes, &out)] = 1.0;
        });
        CondPmf { from, to, mass }
    }

    /// Identity kernel over one alphabet.
    pub fn identity(alphabet: Alphabet) -> Self {
        Self::deterministic(
            alloc::vec![alphabet.clone()],
            alloc::vec![alphabet],
            |c| alloc::vec![c[0]],
        )
    }

    /// Binary symmetric channel with crossover probability `p`.
    pub fn binary_symmetric(from: Alphabet, to: Alphabet, p: f64) -> Result<Self> {
        if from.len() != 2 || to.len() != 2 {
            return Err(Error::AlphabetMismatch(
                "binary symmetric channel needs binary alphabets".into(),
            ));
        }
        CondPmf::new(
            alloc::vec![from],
            alloc::vec![to],
            alloc::vec![alloc::vec![1.0 - p, p], alloc::vec![p, 1.0 - p]],
        )
    }

    pub fn from_alphabets(&self) -> &[Alphabet] {
        &self.from
    }

    pub fn to_alphabets(&self) -> &[Alphabet] {
        &self.to
    }

    pub fn num_rows(&self) -> usize {
        total_size(&sizes_of(&self.from))
    }

    pub fn num_cols(&self) -> usize {
        total_size(&sizes_of(&self.to))
    }

    pub fn row(&self, r: usize) -> &[f64] {
        let ncols = self.num_cols();
        &self.mass[r * ncols..(r + 1) * ncols]
    }

    pub fn prob(&self, row: usize, col: usize) -> f64 {
        self.mass[row * self.num_cols() + col]
    }

    /// Row for a conditioning coordinate tuple.
    pub fn row_for(&self, coords: &[usize]) -> &[f64] {
        self.row(rank_of(&sizes_of(&self.from), coords))
    }

    /// Strictly renormalized copy; errors if any row is off by more than
    /// `1e-9`.
    pub fn normalized(&self) -> Result<Self> {
        let ncols = self.num_cols();
        let rows = (0..self.num_rows())
            .map(|r| self.mass[r * ncols..(r + 1) * ncols].to_vec())
            .collect();
        CondPmf::new(self.from.clone(), self.to.clone(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bsc_rows_are_stochastic() {
        let k = CondPmf::binary_symmetric(Alphabet::binary("X"), Alphabet::binary("Y"), 0.1)
            .unwrap();
        assert_eq!(k.row(0), &[0.9, 0.1]);
        assert_eq!(k.row(1), &[0.1, 0.9]);
    }

    #[test]
    fn deterministic_xor() {
        let b = Alphabet::binary("B");
        let k = CondPmf::deterministic(
            alloc::vec![b.clone(), b.clone()],
            alloc::vec![b.clone()],
            |c| alloc::vec![c[0] ^ c[1]],
        );
        assert_eq!(k.row_for(&[0, 1]), &[0.0, 1.0]);
        assert_eq!(k.row_for(&[1, 1]), &[1.0, 0.0]);
    }

    #[test]
    fn bad_rows_are_rejected_by_new_but_held_by_unvalidated() {
        let b = Alphabet::binary("B");
        let rows = alloc::vec![alloc::vec![0.5, 0.49], alloc::vec![0.5, 0.5]];
        assert!(CondPmf::new(
            alloc::vec![b.clone()],
            alloc::vec![b.clone()],
            rows
        )
        .is_err());
        let raw = CondPmf::from_flat_unvalidated(
            alloc::vec![b.clone()],
            alloc::vec![b],
            alloc::vec![0.5, 0.49, 0.5, 0.5],
        )
        .unwrap();
        assert_eq!(raw.row(0)[1], 0.49);
        assert!(raw.normalized().is_err());
    }
}
