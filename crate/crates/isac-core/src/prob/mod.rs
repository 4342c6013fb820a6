//! Exact probability calculus over small named finite alphabets.
//!
//! Everything downstream (channel laws, estimators, rate regions,
//! finite-blocklength tails, the simulator) is built from four types:
//! [`Alphabet`], [`Pmf`], [`CondPmf`], and [`JointPmf`]. Joints are stored
//! dense with mixed-radix indexing (last factor fastest); alphabets in this
//! problem class are tiny, so exactness beats scalability. Logarithms are
//! base 2 throughout; rates and entropies are in bits.

mod alphabet;
mod cond;
mod joint;
mod pmf;

pub use alphabet::Alphabet;
pub use cond::CondPmf;
pub use joint::{compose, compose_on, InfoDensityTable, JointPmf, MAX_DENSE_ENTRIES};
pub use pmf::Pmf;

use alloc::vec::Vec;

/// Mixed-radix rank of `coords` in a shape (last coordinate fastest).
pub(crate) fn rank_of(sizes: &[usize], coords: &[usize]) -> usize {
    debug_assert_eq!(sizes.len(), coords.len());
    let mut idx = 0;
    for (&n, &c) in sizes.iter().zip(coords) {
        debug_assert!(c < n);
        idx = idx * n + c;
    }
    idx
}

/// Inverse of [`rank_of`]: writes the coordinates of `rank` into `out`.
pub(crate) fn coords_of(sizes: &[usize], mut rank: usize, out: &mut [usize]) {
    for i in (0..sizes.len()).rev() {
        out[i] = rank % sizes[i];
        rank /= sizes[i];
    }
}

pub(crate) fn total_size(sizes: &[usize]) -> usize {
    sizes.iter().product()
}

/// Iterate all coordinate tuples of a shape in rank order, calling `f` with
/// (rank, coords).
pub(crate) fn for_each_rank(sizes: &[usize], mut f: impl FnMut(usize, &[usize])) {
    let n = total_size(sizes);
    let mut coords = alloc::vec![0usize; sizes.len()];
    for rank in 0..n {
        f(rank, &coords);
        for i in (0..sizes.len()).rev() {
            coords[i] += 1;
            if coords[i] < sizes[i] {
                break;
            }
            coords[i] = 0;
        }
    }
    let _ = n;
}

pub(crate) fn sizes_of(alphabets: &[Alphabet]) -> Vec<usize> {
    alphabets.iter().map(|a| a.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_round_trip() {
        let sizes = [3usize, 2, 4];
        let mut coords = [0usize; 3];
        for rank in 0..24 {
            coords_of(&sizes, rank, &mut coords);
            assert_eq!(rank_of(&sizes, &coords), rank);
        }
    }

    #[test]
    fn for_each_rank_visits_in_order() {
        let mut seen = alloc::vec::Vec::new();
        for_each_rank(&[2, 2], |rank, coords| {
            seen.push((rank, coords[0], coords[1]));
        });
        assert_eq!(seen, alloc::vec![(0, 0, 0), (1, 0, 1), (2, 1, 0), (3, 1, 1)]);
    }
}
