use alloc::vec::Vec;

use super::pmf::normalize_mass;
use super::{coords_of, for_each_rank, rank_of, sizes_of, total_size, Alphabet, CondPmf, Pmf};
use crate::math;
use crate::{Error, Result};

/// Dense joints are capped at this many entries.
pub const MAX_DENSE_ENTRIES: usize = 10_000_000;

/// A joint distribution over an ordered list of factor alphabets, stored as
/// a dense vector with mixed-radix indexing (last factor fastest).
#[derive(Clone, Debug, PartialEq)]
pub struct JointPmf {
    factors: Vec<Alphabet>,
    mass: Vec<f64>,
}

impl JointPmf {
    pub fn new(factors: impl Into<Vec<Alphabet>>, mass: impl Into<Vec<f64>>) -> Result<Self> {
        let factors = factors.into();
        let mut mass = mass.into();
        let n = checked_len(&factors)?;
        if mass.len() != n {
            return Err(Error::AlphabetMismatch(alloc::format!(
                "joint needs {n} entries, got {}",
                mass.len()
            )));
        }
        normalize_mass(&mut mass, "joint pmf")?;
        Ok(JointPmf { factors, mass })
    }

    /// Build from a function of coordinates; the result must be a valid pmf.
    pub fn from_fn(
        factors: impl Into<Vec<Alphabet>>,
        f: impl FnMut(&[usize]) -> f64,
    ) -> Result<Self> {
        let factors = factors.into();
        let n = checked_len(&factors)?;
        let sizes = sizes_of(&factors);
        let mut mass = alloc::vec![0.0; n];
        let mut f = f;
        for_each_rank(&sizes, |rank, coords| {
            mass[rank] = f(coords);
        });
        JointPmf::new(factors, mass)
    }

    /// Internal constructor for mass already known to be normalized.
    pub(crate) fn from_normalized(factors: Vec<Alphabet>, mass: Vec<f64>) -> Self {
        JointPmf { factors, mass }
    }

    pub fn uniform(factors: impl Into<Vec<Alphabet>>) -> Result<Self> {
        let factors = factors.into();
        let n = checked_len(&factors)?;
        Ok(JointPmf {
            factors,
            mass: alloc::vec![1.0 / n as f64; n],
        })
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Alphabet] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &Alphabet {
        &self.factors[i]
    }

    pub fn len(&self) -> usize {
        self.mass.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn sizes(&self) -> Vec<usize> {
        sizes_of(&self.factors)
    }

    pub fn index_of(&self, coords: &[usize]) -> usize {
        rank_of(&self.sizes(), coords)
    }

    pub fn prob(&self, coords: &[usize]) -> f64 {
        self.mass[self.index_of(coords)]
    }

    /// Marginal over the factors in `keep`, in the order given.
    ///
    /// Sums are taken directly from the stored mass, so marginalizing in any
    /// order yields the identical result and no re-normalization happens.
    pub fn marginalize(&self, keep: &[usize]) -> Result<JointPmf> {
        self.check_selection(keep, "keep")?;
        let sizes = self.sizes();
        let kept_sizes: Vec<usize> = keep.iter().map(|&i| sizes[i]).collect();
        let mut out = alloc::vec![0.0; total_size(&kept_sizes)];
        let mut kept_coords = alloc::vec![0usize; keep.len()];
        for_each_rank(&sizes, |rank, coords| {
            for (k, &fi) in keep.iter().enumerate() {
                kept_coords[k] = coords[fi];
            }
            out[rank_of(&kept_sizes, &kept_coords)] += self.mass[rank];
        });
        Ok(JointPmf {
            factors: keep.iter().map(|&i| self.factors[i].clone()).collect(),
            mass: out,
        })
    }

    /// Marginal pmf of a single factor.
    pub fn marginal_pmf(&self, factor: usize) -> Result<Pmf> {
        let m = self.marginalize(&[factor])?;
        Pmf::new(m.factors[0].clone(), m.mass)
    }

    /// Joint entropy in bits.
    pub fn entropy(&self) -> f64 {
        -self.mass.iter().map(|&p| math::xlog2x(p)).sum::<f64>()
    }

    /// `H(target | given) = H(target, given) - H(given)` in bits.
    pub fn conditional_entropy(&self, target: &[usize], given: &[usize]) -> Result<f64> {
        self.check_disjoint(target, given)?;
        let mut both: Vec<usize> = target.to_vec();
        both.extend_from_slice(given);
        let h_both = self.marginalize(&both)?.entropy();
        let h_given = self.marginalize(given)?.entropy();
        Ok((h_both - h_given).max(0.0))
    }

    /// `I(a; b) = H(a) + H(b) - H(a, b)` in bits.
    pub fn mutual_information(&self, a: &[usize], b: &[usize]) -> Result<f64> {
        self.check_disjoint(a, b)?;
        let mut both: Vec<usize> = a.to_vec();
        both.extend_from_slice(b);
        let h_a = self.marginalize(a)?.entropy();
        let h_b = self.marginalize(b)?.entropy();
        let h_ab = self.marginalize(&both)?.entropy();
        Ok((h_a + h_b - h_ab).max(0.0))
    }

    /// Pointwise information density `log2 P(a,b) / (P(a) P(b))` on the
    /// support of the `(a, b)` marginal; entries off support carry no value.
    pub fn info_density(&self, a: &[usize], b: &[usize]) -> Result<InfoDensityTable> {
        self.check_disjoint(a, b)?;
        let mut both: Vec<usize> = a.to_vec();
        both.extend_from_slice(b);
        let joint_ab = self.marginalize(&both)?;
        let marg_a = self.marginalize(a)?;
        let marg_b = self.marginalize(b)?;
        let a_sizes = marg_a.sizes();
        let b_sizes = marg_b.sizes();
        let ab_sizes = joint_ab.sizes();
        let mut values = alloc::vec![None; joint_ab.len()];
        let na = a.len();
        for_each_rank(&ab_sizes, |rank, coords| {
            let p_ab = joint_ab.mass[rank];
            if p_ab > 0.0 {
                let pa = marg_a.mass[rank_of(&a_sizes, &coords[..na])];
                let pb = marg_b.mass[rank_of(&b_sizes, &coords[na..])];
                values[rank] = Some(math::log2(p_ab / (pa * pb)));
            }
        });
        Ok(InfoDensityTable {
            a_sizes,
            b_sizes,
            joint_ab,
            values,
        })
    }

    /// L1 distance `sum |p - q|`, in `[0, 2]`.
    pub fn variational_distance(&self, other: &JointPmf) -> Result<f64> {
        if self.factors != other.factors {
            return Err(Error::AlphabetMismatch(
                "variational distance needs identical factor structure".into(),
            ));
        }
        Ok(self
            .mass
            .iter()
            .zip(&other.mass)
            .map(|(&p, &q)| (p - q).abs())
            .sum())
    }

    /// Conditional kernel of `target` given `given`, as a row-stochastic
    /// [`CondPmf`]. Rows whose conditioning tuple has zero probability are
    /// filled with the unconditional `target` marginal so every row remains
    /// a valid distribution.
    pub fn conditional(&self, target: &[usize], given: &[usize]) -> Result<CondPmf> {
        self.check_disjoint(target, given)?;
        let mut order: Vec<usize> = given.to_vec();
        order.extend_from_slice(target);
        let m = self.marginalize(&order)?;
        let nrows = total_size(&sizes_of(&m.factors[..given.len()]));
        let ncols = total_size(&sizes_of(&m.factors[given.len()..]));
        let fallback = {
            let t = self.marginalize(target)?;
            t.mass
        };
        let mut mass = alloc::vec![0.0; nrows * ncols];
        for r in 0..nrows {
            let row = &m.mass[r * ncols..(r + 1) * ncols];
            let total: f64 = row.iter().sum();
            let out = &mut mass[r * ncols..(r + 1) * ncols];
            if total > 0.0 {
                for (o, &v) in out.iter_mut().zip(row) {
                    *o = v / total;
                }
            } else {
                out.copy_from_slice(&fallback);
            }
        }
        CondPmf::from_flat_unvalidated(
            m.factors[..given.len()].to_vec(),
            m.factors[given.len()..].to_vec(),
            mass,
        )
    }

    /// Reorder factors; `order[i]` is the old index of new factor `i`.
    pub fn permute_factors(&self, order: &[usize]) -> Result<JointPmf> {
        if order.len() != self.num_factors() {
            return Err(Error::InvalidSelection(
                "permutation must cover all factors".into(),
            ));
        }
        self.check_selection(order, "order")?;
        self.marginalize(order)
    }

    /// Permute the symbol order of one factor (relabeling). `perm[i]` is the
    /// old symbol index placed at new index `i`.
    pub fn relabel_factor(&self, factor: usize, perm: &[usize]) -> Result<JointPmf> {
        if factor >= self.num_factors() {
            return Err(Error::InvalidSelection("factor index out of range".into()));
        }
        let sizes = self.sizes();
        let mut inverse = alloc::vec![0usize; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut factors = self.factors.clone();
        factors[factor] = factors[factor].permuted(perm)?;
        let new_sizes = sizes;
        let mut mass = alloc::vec![0.0; self.len()];
        let mut coords_new = alloc::vec![0usize; self.num_factors()];
        for_each_rank(&new_sizes, |rank, coords| {
            coords_new.copy_from_slice(coords);
            coords_new[factor] = inverse[coords[factor]];
            mass[rank_of(&new_sizes, &coords_new)] = self.mass[rank];
        });
        Ok(JointPmf { factors, mass })
    }

    fn check_selection(&self, sel: &[usize], what: &str) -> Result<()> {
        if sel.is_empty() {
            return Err(Error::InvalidSelection(alloc::format!(
                "{what} set must be nonempty"
            )));
        }
        let mut seen = alloc::vec![false; self.num_factors()];
        for &i in sel {
            if i >= self.num_factors() {
                return Err(Error::InvalidSelection(alloc::format!(
                    "{what} index {i} out of range for {} factors",
                    self.num_factors()
                )));
            }
            if seen[i] {
                return Err(Error::InvalidSelection(alloc::format!(
                    "{what} index {i} repeated"
                )));
            }
            seen[i] = true;
        }
        Ok(())
    }

    fn check_disjoint(&self, a: &[usize], b: &[usize]) -> Result<()> {
        self.check_selection(a, "first factor")?;
        self.check_selection(b, "second factor")?;
        for &i in a {
            if b.contains(&i) {
                return Err(Error::InvalidSelection(alloc::format!(
                    "factor sets overlap at index {i}"
                )));
            }
        }
        Ok(())
    }
}

fn checked_len(factors: &[Alphabet]) -> Result<usize> {
    if factors.is_empty() {
        return Err(Error::InvalidSelection(
            "joint needs at least one factor".into(),
        ));
    }
    let mut n: usize = 1;
    for f in factors {
        n = n.checked_mul(f.len()).unwrap_or(usize::MAX);
        if n > MAX_DENSE_ENTRIES {
            return Err(Error::SizeGuard(alloc::format!(
                "dense joint would exceed {MAX_DENSE_ENTRIES} entries"
            )));
        }
    }
    Ok(n)
}

/// Pointwise information density values for a factor split `(a, b)`,
/// indexed by the `(a, b)` marginal coordinates. Off-support pairs hold no
/// value rather than a signed infinity.
#[derive(Clone, Debug)]
pub struct InfoDensityTable {
    a_sizes: Vec<usize>,
    b_sizes: Vec<usize>,
    joint_ab: JointPmf,
    values: Vec<Option<f64>>,
}

impl InfoDensityTable {
    pub fn get(&self, a_coords: &[usize], b_coords: &[usize]) -> Option<f64> {
        let mut coords: Vec<usize> = a_coords.to_vec();
        coords.extend_from_slice(b_coords);
        let mut sizes = self.a_sizes.clone();
        sizes.extend_from_slice(&self.b_sizes);
        self.values[rank_of(&sizes, &coords)]
    }

    /// Iterate `(probability, density)` over the support.
    pub fn support(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.joint_ab
            .mass()
            .iter()
            .zip(&self.values)
            .filter_map(|(&p, v)| v.map(|d| (p, d)))
    }

    /// Expectation of the density under the `(a, b)` marginal; equals the
    /// mutual information.
    pub fn expectation(&self) -> f64 {
        self.support().map(|(p, d)| p * d).sum()
    }

    /// Variance of the density under the `(a, b)` marginal.
    pub fn variance(&self) -> f64 {
        let mean = self.expectation();
        self.support()
            .map(|(p, d)| p * (d - mean) * (d - mean))
            .sum::<f64>()
            .max(0.0)
    }
}

/// Chain a kernel onto a prior over exactly the kernel's conditioning
/// factors: the result is the joint over `(prior factors, kernel outputs)`.
pub fn compose(prior: &JointPmf, kernel: &CondPmf) -> Result<JointPmf> {
    let given: Vec<usize> = (0..prior.num_factors()).collect();
    compose_on(prior, kernel, &given)
}

/// Chain a kernel conditioned on a subset of the prior's factors.
///
/// `given` selects prior factors matching `kernel.from_alphabets()` in
/// order; the result is the joint over `(prior factors..., kernel
/// outputs...)`, with mass `prior(p) * kernel(out | p[given])`.
pub fn compose_on(prior: &JointPmf, kernel: &CondPmf, given: &[usize]) -> Result<JointPmf> {
    if given.len() != kernel.from_alphabets().len() {
        return Err(Error::AlphabetMismatch(
            "kernel conditioning arity does not match selection".into(),
        ));
    }
    for (k, &fi) in given.iter().enumerate() {
        if fi >= prior.num_factors() {
            return Err(Error::InvalidSelection(
                "conditioning index out of range".into(),
            ));
        }
        if prior.factor(fi) != &kernel.from_alphabets()[k] {
            return Err(Error::AlphabetMismatch(alloc::format!(
                "kernel conditioning factor {k} ('{}') does not match prior factor {fi} ('{}')",
                kernel.from_alphabets()[k].name(),
                prior.factor(fi).name()
            )));
        }
    }
    let mut factors = prior.factors().to_vec();
    factors.extend_from_slice(kernel.to_alphabets());
    let n = checked_len(&factors)?;
    let ncols = kernel.num_cols();
    let from_sizes = sizes_of(kernel.from_alphabets());
    let prior_sizes = prior.sizes();
    let mut mass = alloc::vec![0.0; n];
    let mut given_coords = alloc::vec![0usize; given.len()];
    for_each_rank(&prior_sizes, |rank, coords| {
        let p = prior.mass()[rank];
        let base = rank * ncols;
        if p == 0.0 {
            return;
        }
        for (k, &fi) in given.iter().enumerate() {
            given_coords[k] = coords[fi];
        }
        let row = kernel.row(rank_of(&from_sizes, &given_coords));
        for (c, &kv) in row.iter().enumerate() {
            mass[base + c] = p * kv;
        }
    });
    Ok(JointPmf::from_normalized(factors, mass))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(name: &str) -> Alphabet {
        Alphabet::binary(name)
    }

    fn bsc(p: f64) -> CondPmf {
        CondPmf::binary_symmetric(bin("X"), bin("Y"), p).unwrap()
    }

    #[test]
    fn marginalize_uniform_and_product() {
        let u = JointPmf::uniform(alloc::vec![bin("A"), bin("B")]).unwrap();
        let m = u.marginalize(&[0]).unwrap();
        assert_eq!(m.mass(), &[0.5, 0.5]);

        // product law: P ⊗ Q, keep second -> Q exactly
        let p = [0.2, 0.8];
        let q = [0.3, 0.7];
        let j = JointPmf::from_fn(alloc::vec![bin("A"), bin("B")], |c| p[c[0]] * q[c[1]])
            .unwrap();
        let mq = j.marginalize(&[1]).unwrap();
        assert!((mq.mass()[0] - 0.3).abs() < 1e-15);
        assert!((mq.mass()[1] - 0.7).abs() < 1e-15);
    }

    #[test]
    fn marginalize_matches_column_sum_oracle() {
        // random 3x2 joint (seed 7), keep second -> equals column sums
        let a3 = Alphabet::indexed("A", 3).unwrap();
        let mut rng = crate::rng::substream(7, &[0]);
        let mut raw = alloc::vec![0.0; 6];
        let mut total = 0.0;
        for v in raw.iter_mut() {
            *v = crate::rng::unit_f64(&mut rng);
            total += *v;
        }
        for v in raw.iter_mut() {
            *v /= total;
        }
        let j = JointPmf::new(alloc::vec![a3, bin("B")], raw.clone()).unwrap();
        let m = j.marginalize(&[1]).unwrap();
        // oracle: direct summation over the raw table
        let col0 = raw[0] + raw[2] + raw[4];
        let col1 = raw[1] + raw[3] + raw[5];
        assert!((m.mass()[0] - col0).abs() < 1e-15);
        assert!((m.mass()[1] - col1).abs() < 1e-15);
        assert!(j.marginalize(&[]).is_err());
        assert!(j.marginalize(&[0, 0]).is_err());
    }

    #[test]
    fn compose_examples() {
        // point mass prior -> the kernel row as a joint
        let point = Pmf::point_mass(bin("X"), 1).to_joint();
        let j = compose(&point, &bsc(0.1)).unwrap();
        assert_eq!(j.prob(&[1, 0]), 0.1);
        assert_eq!(j.prob(&[1, 1]), 0.9);
        assert_eq!(j.prob(&[0, 0]), 0.0);

        // uniform binary through identity -> diagonal 1/2
        let u = Pmf::uniform(bin("X")).to_joint();
        let id = CondPmf::identity(bin("X"));
        let jd = compose(&u, &id).unwrap();
        assert_eq!(jd.prob(&[0, 0]), 0.5);
        assert_eq!(jd.prob(&[0, 1]), 0.0);
        assert_eq!(jd.prob(&[1, 1]), 0.5);

        // Bern(0.3) through BSC(0.1): hand-multiplied joint
        let prior = Pmf::new(bin("X"), [0.7, 0.3]).unwrap().to_joint();
        let jb = compose(&prior, &bsc(0.1)).unwrap();
        assert!((jb.prob(&[0, 0]) - 0.63).abs() < 1e-15);
        assert!((jb.prob(&[0, 1]) - 0.07).abs() < 1e-15);
        assert!((jb.prob(&[1, 0]) - 0.03).abs() < 1e-15);
        assert!((jb.prob(&[1, 1]) - 0.27).abs() < 1e-15);

        // marginal over the prior factor recovers the prior exactly
        let m = jb.marginalize(&[0]).unwrap();
        assert!((m.mass()[0] - 0.7).abs() < 1e-14);
        assert!((m.mass()[1] - 0.3).abs() < 1e-14);

        // alphabet mismatch is an error
        let ternary = Pmf::uniform(Alphabet::indexed("T", 3).unwrap()).to_joint();
        assert!(compose(&ternary, &bsc(0.1)).is_err());
    }

    #[test]
    fn conditional_entropy_examples() {
        // independent factors: H(T|G) = H(T)
        let p = [0.2, 0.8];
        let q = [0.4, 0.6];
        let j = JointPmf::from_fn(alloc::vec![bin("T"), bin("G")], |c| p[c[0]] * q[c[1]])
            .unwrap();
        let ht = j.marginal_pmf(0).unwrap().entropy();
        assert!((j.conditional_entropy(&[0], &[1]).unwrap() - ht).abs() < 1e-12);

        // deterministic function of the condition -> 0
        let jd = compose(&Pmf::uniform(bin("G")).to_joint(), &CondPmf::identity(bin("G")))
            .unwrap();
        assert!(jd.conditional_entropy(&[1], &[0]).unwrap() < 1e-12);

        // BSC(0.1), uniform input: H(input | output) = h_b(0.1)
        let jb = compose(&Pmf::uniform(bin("X")).to_joint(), &bsc(0.1)).unwrap();
        let hb = -(0.1f64 * 0.1f64.log2() + 0.9 * 0.9f64.log2());
        assert!((jb.conditional_entropy(&[0], &[1]).unwrap() - hb).abs() < 1e-12);
        assert!(jb.conditional_entropy(&[0], &[0]).is_err());
    }

    #[test]
    fn mutual_information_examples() {
        let p = [0.2, 0.8];
        let q = [0.4, 0.6];
        let ind = JointPmf::from_fn(alloc::vec![bin("A"), bin("B")], |c| p[c[0]] * q[c[1]])
            .unwrap();
        assert!(ind.mutual_information(&[0], &[1]).unwrap() < 1e-12);

        let jd = compose(&Pmf::uniform(bin("X")).to_joint(), &CondPmf::identity(bin("X")))
            .unwrap();
        assert!((jd.mutual_information(&[0], &[1]).unwrap() - 1.0).abs() < 1e-12);

        let jb = compose(&Pmf::uniform(bin("X")).to_joint(), &bsc(0.11)).unwrap();
        let hb = -(0.11f64 * 0.11f64.log2() + 0.89 * 0.89f64.log2());
        assert!((jb.mutual_information(&[0], &[1]).unwrap() - (1.0 - hb)).abs() < 1e-12);
        // symmetry
        assert!(
            (jb.mutual_information(&[0], &[1]).unwrap()
                - jb.mutual_information(&[1], &[0]).unwrap())
            .abs()
                < 1e-12
        );
    }

    #[test]
    fn info_density_examples() {
        let p = [0.2, 0.8];
        let q = [0.4, 0.6];
        let ind = JointPmf::from_fn(alloc::vec![bin("A"), bin("B")], |c| p[c[0]] * q[c[1]])
            .unwrap();
        let t = ind.info_density(&[0], &[1]).unwrap();
        for (_, d) in t.support() {
            assert!(d.abs() < 1e-12);
        }

        let jd = compose(&Pmf::uniform(bin("X")).to_joint(), &CondPmf::identity(bin("X")))
            .unwrap();
        let td = jd.info_density(&[0], &[1]).unwrap();
        assert!((td.get(&[0], &[0]).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(td.get(&[0], &[1]), None);

        let jb = compose(&Pmf::uniform(bin("X")).to_joint(), &bsc(0.1)).unwrap();
        let tb = jb.info_density(&[0], &[1]).unwrap();
        assert!((tb.get(&[0], &[0]).unwrap() - 1.8f64.log2()).abs() < 1e-12);
        assert!((tb.get(&[0], &[1]).unwrap() - 0.2f64.log2()).abs() < 1e-12);
        // expectation equals mutual information
        let mi = jb.mutual_information(&[0], &[1]).unwrap();
        assert!((tb.expectation() - mi).abs() < 1e-12);
    }

    #[test]
    fn variational_distance_examples() {
        let p = JointPmf::new(alloc::vec![bin("A")], alloc::vec![0.5, 0.5]).unwrap();
        assert_eq!(p.variational_distance(&p).unwrap(), 0.0);
        let d0 = JointPmf::new(alloc::vec![bin("A")], alloc::vec![1.0, 0.0]).unwrap();
        let d1 = JointPmf::new(alloc::vec![bin("A")], alloc::vec![0.0, 1.0]).unwrap();
        assert_eq!(d0.variational_distance(&d1).unwrap(), 2.0);
        let q = JointPmf::new(alloc::vec![bin("A")], alloc::vec![0.6, 0.4]).unwrap();
        assert!((p.variational_distance(&q).unwrap() - 0.2).abs() < 1e-15);
        let other = JointPmf::uniform(alloc::vec![bin("A"), bin("B")]).unwrap();
        assert!(p.variational_distance(&other).is_err());
    }

    #[test]
    fn conditional_rows_and_fallback() {
        let jb = compose(&Pmf::new(bin("X"), [1.0, 0.0]).unwrap().to_joint(), &bsc(0.25))
            .unwrap();
        let k = jb.conditional(&[1], &[0]).unwrap();
        assert_eq!(k.row(0), &[0.75, 0.25]);
        // x = 1 has zero probability: row falls back to the Y marginal
        assert_eq!(k.row(1), &[0.75, 0.25]);
    }

    #[test]
    fn relabel_factor_moves_mass() {
        let jb = compose(&Pmf::new(bin("X"), [0.7, 0.3]).unwrap().to_joint(), &bsc(0.1))
            .unwrap();
        let r = jb.relabel_factor(0, &[1, 0]).unwrap();
        assert_eq!(r.prob(&[0, 1]), jb.prob(&[1, 1]));
        assert_eq!(r.prob(&[1, 0]), jb.prob(&[0, 0]));
        // entropy is invariant under relabeling
        assert!((r.entropy() - jb.entropy()).abs() < 1e-12);
    }

    #[test]
    fn size_guard_rejects_huge_joints() {
        let big = Alphabet::indexed("B", 4000).unwrap();
        let res = JointPmf::uniform(alloc::vec![big.clone(), big]);
        assert!(matches!(res, Err(Error::SizeGuard(_))));
    }
}
