use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// A named finite set of symbols with a fixed canonical order.
///
/// Symbol order is part of the alphabet's identity: all vectors and kernels
/// index into it, and two alphabets compare equal only if name, symbols, and
/// order all match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    name: String,
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<N, S>(name: N, symbols: impl IntoIterator<Item = S>) -> Result<Self>
    where
        N: Into<String>,
        S: Into<String>,
    {
        let name = name.into();
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidConfig(alloc::format!(
                "alphabet '{name}' must have at least one symbol"
            )));
        }
        for i in 0..symbols.len() {
            for j in (i + 1)..symbols.len() {
                if symbols[i] == symbols[j] {
                    return Err(Error::InvalidConfig(alloc::format!(
                        "alphabet '{name}' has duplicate symbol '{}'",
                        symbols[i]
                    )));
                }
            }
        }
        Ok(Alphabet { name, symbols })
    }

    /// Alphabet `{0, 1, ..., size-1}` with decimal symbol labels.
    pub fn indexed<N: Into<String>>(name: N, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidConfig("alphabet size must be >= 1".into()));
        }
        Self::new(name, (0..size).map(|i| i.to_string()))
    }

    /// Binary alphabet `{0, 1}`.
    pub fn binary<N: Into<String>>(name: N) -> Self {
        Self::indexed(name, 2).expect("binary alphabet is valid")
    }

    /// Singleton alphabet `{0}`.
    pub fn singleton<N: Into<String>>(name: N) -> Self {
        Self::indexed(name, 1).expect("singleton alphabet is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// Same set with symbols re-ordered by `perm` (`perm[i]` = old index of
    /// the symbol placed at new index `i`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::InvalidSelection(alloc::format!(
                "permutation length {} does not match alphabet size {}",
                perm.len(),
                self.len()
            )));
        }
        let mut seen = alloc::vec![false; self.len()];
        for &p in perm {
            if p >= self.len() || seen[p] {
                return Err(Error::InvalidSelection("invalid permutation".into()));
            }
            seen[p] = true;
        }
        let symbols: Vec<String> = perm.iter().map(|&p| self.symbols[p].clone()).collect();
        Ok(Alphabet {
            name: self.name.clone(),
            symbols,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert!(Alphabet::new("A", Vec::<String>::new()).is_err());
        assert!(Alphabet::new("A", ["x", "x"]).is_err());
    }

    #[test]
    fn permuted_reorders_symbols() {
        let a = Alphabet::new("A", ["p", "q", "r"]).unwrap();
        let b = a.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(b.symbols(), &["r", "p", "q"]);
        assert!(a.permuted(&[0, 0, 1]).is_err());
    }
}
