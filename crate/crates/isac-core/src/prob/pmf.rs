use alloc::vec::Vec;

use super::Alphabet;
use crate::math;
use crate::{Error, Result};

/// A probability mass function over one [`Alphabet`].
///
/// Construction accepts vectors whose sum is within `1e-9` of one (hand-
/// written inputs carry decimal rounding) and renormalizes them exactly;
/// anything further off is rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct Pmf {
    alphabet: Alphabet,
    mass: Vec<f64>,
}

pub(crate) fn normalize_mass(mass: &mut [f64], what: &str) -> Result<()> {
    let mut sum = 0.0;
    for m in mass.iter_mut() {
        if !m.is_finite() {
            return Err(Error::InvalidDistribution(alloc::format!(
                "{what}: non-finite entry"
            )));
        }
        if *m < 0.0 {
            if *m < math::NEG_CLAMP {
                return Err(Error::InvalidDistribution(alloc::format!(
                    "{what}: negative entry {}",
                    *m
                )));
            }
            *m = 0.0;
        }
        sum += *m;
    }
    if (sum - 1.0).abs() > math::INPUT_SUM_TOL {
        return Err(Error::InvalidDistribution(alloc::format!(
            "{what}: mass sums to {sum}, expected 1 within 1e-9"
        )));
    }
    if sum != 1.0 {
        for m in mass.iter_mut() {
            *m /= sum;
        }
    }
    Ok(())
}

impl Pmf {
    pub fn new(alphabet: Alphabet, mass: impl Into<Vec<f64>>) -> Result<Self> {
        let mut mass = mass.into();
        if mass.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch(alloc::format!(
                "pmf over '{}' needs {} entries, got {}",
                alphabet.name(),
                alphabet.len(),
                mass.len()
            )));
        }
        normalize_mass(&mut mass, "pmf")?;
        Ok(Pmf { alphabet, mass })
    }

    pub fn uniform(alphabet: Alphabet) -> Self {
        let n = alphabet.len();
        Pmf {
            alphabet,
            mass: alloc::vec![1.0 / n as f64; n],
        }
    }

    pub fn point_mass(alphabet: Alphabet, index: usize) -> Self {
        let mut mass = alloc::vec![0.0; alphabet.len()];
        mass[index] = 1.0;
        Pmf { alphabet, mass }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn prob(&self, index: usize) -> f64 {
        self.mass[index]
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    /// Indices with strictly positive probability.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.mass
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0.0)
            .map(|(i, _)| i)
    }

    /// Shannon entropy in bits, with `0 log 0 = 0`.
    pub fn entropy(&self) -> f64 {
        -self.mass.iter().map(|&p| math::xlog2x(p)).sum::<f64>()
    }

    /// Self-information `-log2 P(symbol)` in bits; `None` off support.
    pub fn self_info(&self, index: usize) -> Option<f64> {
        let p = self.mass[index];
        if p > 0.0 {
            Some(-math::log2(p))
        } else {
            None
        }
    }

    /// This pmf as a one-factor joint.
    pub fn to_joint(&self) -> super::JointPmf {
        super::JointPmf::from_normalized(alloc::vec![self.alphabet.clone()], self.mass.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Alphabet {
        Alphabet::binary("B")
    }

    #[test]
    fn accepts_and_renormalizes_rounded_input() {
        let p = Pmf::new(bin(), [0.3000000001, 0.7]).unwrap();
        assert!((p.mass().iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(Pmf::new(bin(), [0.3, 0.6]).is_err());
        assert!(Pmf::new(bin(), [-0.1, 1.1]).is_err());
    }

    #[test]
    fn entropy_matches_closed_forms() {
        let a4 = Alphabet::indexed("Q", 4).unwrap();
        assert!((Pmf::uniform(a4).entropy() - 2.0).abs() < 1e-15);
        assert_eq!(Pmf::point_mass(bin(), 0).entropy(), 0.0);
        // binary entropy of 0.11
        let p = Pmf::new(bin(), [0.11, 0.89]).unwrap();
        let hb = -(0.11f64 * 0.11f64.log2() + 0.89 * 0.89f64.log2());
        assert!((p.entropy() - hb).abs() < 1e-12);
    }

    #[test]
    fn self_info_examples() {
        let a8 = Alphabet::indexed("E", 8).unwrap();
        assert!((Pmf::uniform(a8).self_info(3).unwrap() - 3.0).abs() < 1e-15);
        let point = Pmf::point_mass(bin(), 1);
        assert_eq!(point.self_info(1).unwrap(), 0.0);
        assert_eq!(point.self_info(0), None);
        let p = Pmf::new(bin(), [0.25, 0.75]).unwrap();
        assert!((p.self_info(0).unwrap() - 2.0).abs() < 1e-15);
    }
}
