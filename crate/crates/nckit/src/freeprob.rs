//! Moment-cumulant transforms driven by a partition lattice: summing over
//! all set partitions gives the classical relation, summing over
//! noncrossing ones gives the free relation.  The only difference between an
//! independent Gaussian world and a free semicircular world is which family
//! of partitions carries the sum.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::partition::{enumerate, LatticeKind};
use crate::series::FormalSeries;

/// A finite sequence `a_1, .., a_N` of exact rationals indexed from degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    values: Vec<BigRational>,
}

impl Sequence {
    pub fn new(values: Vec<BigRational>) -> Self {
        Sequence { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Sequence {
            values: values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    /// Highest degree carried.
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value at `degree`, 1-based.
    pub fn get(&self, degree: usize) -> &BigRational {
        &self.values[degree - 1]
    }

    /// Termwise sum; orders must match.
    pub fn add(&self, other: &Sequence) -> Result<Sequence> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(Sequence {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

fn check_order(order: usize, kind: LatticeKind, bounds: &Bounds) -> Result<()> {
    match kind {
        LatticeKind::Noncrossing => bounds.check(
            "noncrossing moment transform",
            order,
            bounds.moments_noncrossing,
        ),
        LatticeKind::Full => bounds.check("moment transform", order, bounds.moments_full),
    }
}

/// For each multiset of block sizes, how many partitions of `{1, .., n}` of
/// this kind realize it.  The transform sums only depend on these counts.
fn block_size_profiles(
    n: usize,
    kind: LatticeKind,
    bounds: &Bounds,
) -> Result<Vec<(Vec<usize>, u64)>> {
    let mut profiles: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for p in enumerate(n, kind, bounds)? {
        let mut sizes = p.block_sizes();
        sizes.sort_unstable();
        *profiles.entry(sizes).or_insert(0) += 1;
    }
    Ok(profiles.into_iter().collect())
}

fn profile_term(sizes: &[usize], values: &Sequence) -> BigRational {
    let mut term = BigRational::one();
    for &s in sizes {
        term *= values.get(s);
    }
    term
}

/// Moments from cumulants: `m_n` sums, over all partitions of the chosen
/// kind, the product of the cumulants at the block sizes.
pub fn moments_from_cumulants(
    cumulants: &Sequence,
    kind: LatticeKind,
    bounds: &Bounds,
) -> Result<Sequence> {
    check_order(cumulants.order(), kind, bounds)?;
    let mut moments = Vec::with_capacity(cumulants.order());
    for n in 1..=cumulants.order() {
        let mut m = BigRational::zero();
        for (sizes, count) in block_size_profiles(n, kind, bounds)? {
            m += BigRational::from_integer(count.into()) * profile_term(&sizes, cumulants);
        }
        moments.push(m);
    }
    Ok(Sequence::new(moments))
}

/// Cumulants from moments, inverting the partition sum degree by degree:
/// the one-block partition contributes `k_n` and every other partition only
/// involves lower cumulants.
pub fn cumulants_from_moments(
    moments: &Sequence,
    kind: LatticeKind,
    bounds: &Bounds,
) -> Result<Sequence> {
    check_order(moments.order(), kind, bounds)?;
    let mut cumulants = Sequence::new(Vec::with_capacity(moments.order()));
    for n in 1..=moments.order() {
        let mut k = moments.get(n).clone();
        for (sizes, count) in block_size_profiles(n, kind, bounds)? {
            if sizes.len() == 1 {
                continue;
            }
            k -= BigRational::from_integer(count.into()) * profile_term(&sizes, &cumulants);
        }
        cumulants.values.push(k);
    }
    Ok(cumulants)
}

/// Classical cumulants read off the exponential generating function: the
/// degree-n coefficient of `log(1 + sum m_n t^n / n!)`, times `n!`.
pub fn classical_cumulants_via_series(moments: &Sequence) -> Result<Sequence> {
    let n = moments.order();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigRational::one());
    let mut factorial = BigInt::one();
    for d in 1..=n {
        factorial *= d;
        coeffs.push(moments.get(d) / BigRational::from_integer(factorial.clone()));
    }
    let log = FormalSeries::new(coeffs)?.log()?;
    let mut factorial = BigInt::one();
    let mut out = Vec::with_capacity(n);
    for d in 1..=n {
        factorial *= d;
        out.push(log.coeff(d) * BigRational::from_integer(factorial.clone()));
    }
    Ok(Sequence::new(out))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Moments of a sum of independent variables: the binomial convolution of
/// the moment sequences (their exponential generating functions multiply).
pub fn independent_sum_moments(m1: &Sequence, m2: &Sequence) -> Result<Sequence> {
    if m1.order() != m2.order() {
        return Err(Error::OrderMismatch {
            left: m1.order(),
            right: m2.order(),
        });
    }
    let one = BigRational::one();
    let at = |m: &Sequence, d: usize| -> BigRational {
        if d == 0 {
            one.clone()
        } else {
            m.get(d).clone()
        }
    };
    let mut out = Vec::with_capacity(m1.order());
    for n in 1..=m1.order() {
        let mut s = BigRational::zero();
        for j in 0..=n {
            s += BigRational::from_integer(binomial(n, j)) * at(m1, j) * at(m2, n - j);
        }
        out.push(s);
    }
    Ok(Sequence::new(out))
}

/// Checks that cumulants add under the convolution their lattice models.
///
/// In the full lattice the sum of independent variables has the binomially
/// convolved moments, and its cumulants must equal `k1 + k2`.  In the
/// noncrossing lattice additivity defines the convolution, so the check is
/// that the summed cumulants survive the round trip through moments.
pub fn cumulant_additivity_check(
    k1: &Sequence,
    k2: &Sequence,
    kind: LatticeKind,
    bounds: &Bounds,
) -> Result<bool> {
    let sum = k1.add(k2)?;
    match kind {
        LatticeKind::Full => {
            let m1 = moments_from_cumulants(k1, kind, bounds)?;
            let m2 = moments_from_cumulants(k2, kind, bounds)?;
            let ms = independent_sum_moments(&m1, &m2)?;
            Ok(cumulants_from_moments(&ms, kind, bounds)? == sum)
        }
        LatticeKind::Noncrossing => {
            let ms = moments_from_cumulants(&sum, kind, bounds)?;
            Ok(cumulants_from_moments(&ms, kind, bounds)? == sum)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn standard_even_moment_sequences() {
        let bounds = Bounds::default();
        let variance_only = Sequence::from_integers(&[0, 1, 0, 0, 0, 0, 0, 0]);
        let semicircle =
            moments_from_cumulants(&variance_only, LatticeKind::Noncrossing, &bounds).unwrap();
        assert_eq!(
            semicircle,
            Sequence::from_integers(&[0, 1, 0, 2, 0, 5, 0, 14])
        );
        let gaussian =
            moments_from_cumulants(&variance_only, LatticeKind::Full, &bounds).unwrap();
        assert_eq!(
            gaussian,
            Sequence::from_integers(&[0, 1, 0, 3, 0, 15, 0, 105])
        );
    }

    #[test]
    fn all_ones_cumulants_count_the_lattices() {
        let bounds = Bounds::default();
        let ones = Sequence::from_integers(&[1; 8]);
        let nc = moments_from_cumulants(&ones, LatticeKind::Noncrossing, &bounds).unwrap();
        assert_eq!(
            nc,
            Sequence::from_integers(&[1, 2, 5, 14, 42, 132, 429, 1430])
        );
        let full = moments_from_cumulants(&ones, LatticeKind::Full, &bounds).unwrap();
        assert_eq!(
            full,
            Sequence::from_integers(&[1, 2, 5, 15, 52, 203, 877, 4140])
        );
    }

    fn random_sequence(rng: &mut impl Rng, order: usize) -> Sequence {
        Sequence::new(
            (0..order)
                .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=9)))
                .collect(),
        )
    }

    #[test]
    fn transforms_round_trip() {
        let bounds = Bounds::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for kind in [LatticeKind::Full, LatticeKind::Noncrossing] {
            for _ in 0..10 {
                let k = random_sequence(&mut rng, 8);
                let m = moments_from_cumulants(&k, kind, &bounds).unwrap();
                assert_eq!(cumulants_from_moments(&m, kind, &bounds).unwrap(), k);
                let m = random_sequence(&mut rng, 8);
                let k = cumulants_from_moments(&m, kind, &bounds).unwrap();
                assert_eq!(moments_from_cumulants(&k, kind, &bounds).unwrap(), m);
            }
        }
    }

    #[test]
    fn partition_sum_agrees_with_the_log_of_the_egf() {
        let bounds = Bounds::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let m = random_sequence(&mut rng, 8);
            assert_eq!(
                cumulants_from_moments(&m, LatticeKind::Full, &bounds).unwrap(),
                classical_cumulants_via_series(&m).unwrap()
            );
        }
    }

    #[test]
    fn semicircle_and_gaussian_convolution_squares() {
        let bounds = Bounds::default();
        let two = Sequence::from_integers(&[0, 2, 0, 0]);
        let free = moments_from_cumulants(&two, LatticeKind::Noncrossing, &bounds).unwrap();
        assert_eq!(free, Sequence::from_integers(&[0, 2, 0, 8]));
        let classical = moments_from_cumulants(&two, LatticeKind::Full, &bounds).unwrap();
        assert_eq!(classical, Sequence::from_integers(&[0, 2, 0, 12]));
    }

    #[test]
    fn additivity_checks_pass() {
        let bounds = Bounds::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for kind in [LatticeKind::Full, LatticeKind::Noncrossing] {
            for _ in 0..5 {
                let k1 = random_sequence(&mut rng, 7);
                let k2 = random_sequence(&mut rng, 7);
                assert!(cumulant_additivity_check(&k1, &k2, kind, &bounds).unwrap());
            }
        }
        let k1 = Sequence::from_integers(&[1, 2]);
        let k2 = Sequence::from_integers(&[1, 2, 3]);
        assert!(matches!(
            cumulant_additivity_check(&k1, &k2, LatticeKind::Full, &bounds),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn order_bounds_are_enforced() {
        let bounds = Bounds::default();
        let too_long = Sequence::from_integers(&[1; 11]);
        assert!(matches!(
            moments_from_cumulants(&too_long, LatticeKind::Noncrossing, &bounds),
            Err(Error::BoundExceeded { .. })
        ));
        let too_long = Sequence::from_integers(&[1; 10]);
        assert!(matches!(
            cumulants_from_moments(&too_long, LatticeKind::Full, &bounds),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
