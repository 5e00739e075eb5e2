//! Exact arithmetic modulo `2^m` and modulo an odd prime, and the
//! quadratic-residue combinatorics the product identities are built on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest exponent accepted by [`Modulus::new`].
pub const MAX_EXPONENT: u32 = 62;

/// The ring `Z_{2^m}` with residues stored in `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus<W: Word> {
    m: u32,
    mask: W,
}

impl<W: Word> Modulus<W> {
    pub fn new(m: u32) -> Result<Self> {
        let max = MAX_EXPONENT.min(W::BITS);
        if m == 0 || m > max {
            return Err(Error::BadExponent { m, max });
        }
        let mask = if m == W::BITS {
            W::max_value()
        } else {
            (W::one() << m as usize) - W::one()
        };
        Ok(Self { m, mask })
    }

    #[inline]
    pub fn exponent(&self) -> u32 {
        self.m
    }

    /// `2^m - 1`, the largest residue.
    #[inline]
    pub fn mask(&self) -> W {
        self.mask
    }

    /// `2^m` as a `u128`.
    #[inline]
    pub fn order(&self) -> u128 {
        1u128 << self.m
    }

    #[inline]
    pub fn reduce(&self, x: W) -> W {
        x & self.mask
    }

    #[inline]
    pub fn from_u64(&self, x: u64) -> W {
        W::from_u64_wrapping(x) & self.mask
    }

    #[inline]
    pub fn from_i64(&self, x: i64) -> W {
        W::from_u64_wrapping(x as u64) & self.mask
    }

    #[inline]
    pub fn add(&self, a: W, b: W) -> W {
        a.wrapping_add(&b) & self.mask
    }

    #[inline]
    pub fn sub(&self, a: W, b: W) -> W {
        a.wrapping_sub(&b) & self.mask
    }

    #[inline]
    pub fn neg(&self, a: W) -> W {
        a.wrapping_neg() & self.mask
    }

    #[inline]
    pub fn mul(&self, a: W, b: W) -> W {
        a.wrapping_mul(&b) & self.mask
    }

    pub fn pow(&self, mut base: W, mut exp: u64) -> W {
        let mut acc = self.reduce(W::one());
        base = self.reduce(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of an odd residue by Newton iteration `x <- x(2 - ax)`,
    /// which doubles the number of correct low bits per step.
    pub fn inv(&self, a: W) -> Option<W> {
        let a = self.reduce(a);
        if a & W::one() == W::zero() {
            return None;
        }
        let two = W::one() + W::one();
        let mut x = W::one();
        let mut correct = 1;
        while correct < self.m {
            x = self.mul(x, self.sub(two, self.mul(a, x)));
            correct *= 2;
        }
        Some(x)
    }

    /// 2-adic valuation of `a` in `Z_{2^m}`; the zero residue has valuation `m`.
    #[inline]
    pub fn valuation(&self, a: W) -> u32 {
        let a = self.reduce(a);
        if a == W::zero() {
            self.m
        } else {
            a.trailing_zeros()
        }
    }

    /// Splits `a = 2^v * u` with `u` odd. Returns `None` for zero.
    pub fn split_unit(&self, a: W) -> Option<(u32, W)> {
        let a = self.reduce(a);
        if a == W::zero() {
            return None;
        }
        let v = a.trailing_zeros();
        Some((v, a >> v as usize))
    }

    /// Representative of `a` as a signed value in `(-2^(m-1), 2^(m-1)]`.
    pub fn signed(&self, a: W) -> i128 {
        let a = self.reduce(a).as_u64() as i128;
        let half = 1i128 << (self.m - 1);
        if a > half {
            a - (1i128 << self.m)
        } else {
            a
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `p < bound` with `p = +-1 (mod 8)`.
pub fn qr_primes_below(bound: u64) -> Vec<u64> {
    (3..bound)
        .filter(|&p| matches!(p % 8, 1 | 7) && is_prime(p))
        .collect()
}

/// `base^exp mod modulus` for small moduli.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let modulus = modulus as u128;
    let mut acc = 1u128 % modulus;
    let mut b = base as u128 % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueClass {
    Zero,
    Residue,
    Nonresidue,
}

/// The split of `{1, ..., p-1}` into quadratic residues `Q` and nonresidues `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadPartition {
    p: u64,
    residues: Vec<u64>,
    nonresidues: Vec<u64>,
    #[serde(skip)]
    classes: Vec<ResidueClass>,
}

/// Builds the partition for a prime `p = +-1 (mod 8)`.
pub fn quad_partition(p: u64) -> Result<QuadPartition> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !matches!(p % 8, 1 | 7) {
        return Err(Error::BadResidueClass { p });
    }
    let n = p as usize;
    let mut classes = vec![ResidueClass::Nonresidue; n];
    classes[0] = ResidueClass::Zero;
    for i in 1..p {
        classes[(i * i % p) as usize] = ResidueClass::Residue;
    }
    let pick =
        |c: ResidueClass| -> Vec<u64> { (1..p).filter(|&i| classes[i as usize] == c).collect() };
    let residues = pick(ResidueClass::Residue);
    let nonresidues = pick(ResidueClass::Nonresidue);
    Ok(QuadPartition {
        p,
        residues,
        nonresidues,
        classes,
    })
}

impl QuadPartition {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// `Q`, sorted.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// `N`, sorted.
    pub fn nonresidues(&self) -> &[u64] {
        &self.nonresidues
    }

    /// Class of `i mod p`.
    #[inline]
    pub fn class_of(&self, i: u64) -> ResidueClass {
        self.classes[(i % self.p) as usize]
    }

    pub fn is_residue(&self, i: u64) -> bool {
        self.class_of(i) == ResidueClass::Residue
    }

    pub fn is_nonresidue(&self, i: u64) -> bool {
        self.class_of(i) == ResidueClass::Nonresidue
    }

    /// Smallest nonresidue; multiplying by it swaps `Q` and `N`.
    pub fn least_nonresidue(&self) -> u64 {
        self.nonresidues[0]
    }

    /// `p = 8k - 1` or `p = 8k + 1` over the integers.
    pub fn lemma_class(&self) -> LemmaClass {
        lemma_class(self.p)
    }
}

/// The integer-level `k` with `p = 8k -+ 1`. Distinct from [`FamilyParams::k`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", content = "k", rename_all = "snake_case")]
pub enum LemmaClass {
    /// `p = 8k - 1`
    MinusOne(u64),
    /// `p = 8k + 1`
    PlusOne(u64),
}

impl LemmaClass {
    pub fn k(&self) -> u64 {
        match *self {
            LemmaClass::MinusOne(k) | LemmaClass::PlusOne(k) => k,
        }
    }
}

/// Panics unless `p = +-1 (mod 8)`; callers go through [`quad_partition`] first.
pub fn lemma_class(p: u64) -> LemmaClass {
    match p % 8 {
        7 => LemmaClass::MinusOne((p + 1) / 8),
        1 => LemmaClass::PlusOne((p - 1) / 8),
        _ => panic!("lemma_class needs p = +-1 mod 8, got {p}"),
    }
}

/// `|{(i, j) in s1 x s2 : i + j = 0 mod p}|`.
pub fn count_zero_sums(s1: &[u64], s2: &[u64], p: u64) -> usize {
    let mut negated = vec![false; p as usize];
    for &j in s2 {
        negated[((p - j % p) % p) as usize] = true;
    }
    s1.iter().filter(|&&i| negated[(i % p) as usize]).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub residues: usize,
    pub nonresidues: usize,
    pub zeros: usize,
}

impl ClassCounts {
    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.residues, self.nonresidues, self.zeros)
    }
}

/// Classifies every `i + j mod p` for `j` in `set`.
pub fn residue_class_counts(i: u64, set: &[u64], partition: &QuadPartition) -> ClassCounts {
    let mut counts = ClassCounts {
        residues: 0,
        nonresidues: 0,
        zeros: 0,
    };
    for &j in set {
        match partition.class_of(i + j) {
            ResidueClass::Residue => counts.residues += 1,
            ResidueClass::Nonresidue => counts.nonresidues += 1,
            ResidueClass::Zero => counts.zeros += 1,
        }
    }
    counts
}

/// `p = sign * (8k - 1) (mod 2^m)` with `1 <= k <= 2^(m-3) - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub p: u64,
    pub m: u32,
    pub k: u64,
    pub sign: i8,
}

impl FamilyParams {
    /// `8k - 1`, the multiplier of the all-ones vector in the family shifts.
    pub fn shift_constant(&self) -> u64 {
        8 * self.k - 1
    }
}

pub fn family_params(p: u64, m: u32) -> Result<FamilyParams> {
    if m < 4 {
        return Err(Error::ExponentTooSmall(m));
    }
    if m > MAX_EXPONENT {
        return Err(Error::BadExponent {
            m,
            max: MAX_EXPONENT,
        });
    }
    quad_partition(p)?;
    let order = 1u64 << m;
    let r = p % order;
    if r == 1 || r == order - 1 {
        return Err(Error::OutOfFamilyRange { p, m });
    }
    let k_max = (1u64 << (m - 3)) - 1;
    let mut found = None;
    for sign in [1i8, -1] {
        for k in 1..=k_max {
            let target = 8 * k - 1;
            let target = if sign == 1 { target } else { order - target };
            if r == target {
                found = Some(FamilyParams { p, m, k, sign });
            }
        }
    }
    found.ok_or(Error::NoValidK { p, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_bounds() {
        assert!(Modulus::<u64>::new(0).is_err());
        assert!(Modulus::<u64>::new(63).is_err());
        assert!(Modulus::<u64>::new(62).is_ok());
        assert!(Modulus::<u8>::new(8).is_ok());
        assert!(Modulus::<u8>::new(9).is_err());
    }

    #[test]
    fn inverse_and_valuation() {
        let z = Modulus::<u64>::new(5).unwrap();
        assert_eq!(z.inv(23), Some(7));
        assert_eq!(z.inv(6), None);
        assert_eq!(z.valuation(12), 2);
        assert_eq!(z.valuation(0), 5);
        assert_eq!(z.split_unit(12), Some((2, 3)));
        assert_eq!(z.signed(31), -1);
        let z8 = Modulus::<u8>::new(8).unwrap();
        assert_eq!(z8.mul(z8.inv(201).unwrap(), 201), 1);
    }

    #[test]
    fn partition_p7_p17() {
        let q7 = quad_partition(7).unwrap();
        assert_eq!(q7.residues(), &[1, 2, 4]);
        assert_eq!(q7.nonresidues(), &[3, 5, 6]);
        let q17 = quad_partition(17).unwrap();
        assert_eq!(q17.residues(), &[1, 2, 4, 8, 9, 13, 15, 16]);
        assert_eq!(q17.nonresidues(), &[3, 5, 6, 7, 10, 11, 12, 14]);
    }

    #[test]
    fn partition_errors() {
        assert_eq!(quad_partition(5), Err(Error::BadResidueClass { p: 5 }));
        assert_eq!(quad_partition(15), Err(Error::NotPrime(15)));
        assert_eq!(quad_partition(2), Err(Error::BadResidueClass { p: 2 }));
    }

    #[test]
    fn zero_sum_examples() {
        let q7 = quad_partition(7).unwrap();
        assert_eq!(count_zero_sums(q7.residues(), q7.residues(), 7), 0);
        assert_eq!(count_zero_sums(q7.residues(), q7.nonresidues(), 7), 3);
        let q17 = quad_partition(17).unwrap();
        assert_eq!(count_zero_sums(q17.residues(), q17.residues(), 17), 8);
    }

    #[test]
    fn class_count_examples() {
        let q7 = quad_partition(7).unwrap();
        assert_eq!(
            residue_class_counts(1, q7.residues(), &q7).as_tuple(),
            (1, 2, 0)
        );
        assert_eq!(
            residue_class_counts(1, q7.nonresidues(), &q7).as_tuple(),
            (1, 1, 1)
        );
        let q17 = quad_partition(17).unwrap();
        assert_eq!(
            residue_class_counts(1, q17.residues(), &q17).as_tuple(),
            (3, 4, 1)
        );
    }

    #[test]
    fn family_param_examples() {
        assert_eq!(
            family_params(7, 4).unwrap(),
            FamilyParams {
                p: 7,
                m: 4,
                k: 1,
                sign: 1
            }
        );
        assert_eq!(
            family_params(17, 5).unwrap(),
            FamilyParams {
                p: 17,
                m: 5,
                k: 2,
                sign: -1
            }
        );
        assert_eq!(
            family_params(17, 4),
            Err(Error::OutOfFamilyRange { p: 17, m: 4 })
        );
        assert_eq!(family_params(7, 3), Err(Error::ExponentTooSmall(3)));
        assert_eq!(family_params(13, 5), Err(Error::BadResidueClass { p: 13 }));
    }

    #[test]
    fn lemma_classes() {
        assert_eq!(lemma_class(7), LemmaClass::MinusOne(1));
        assert_eq!(lemma_class(17), LemmaClass::PlusOne(2));
        assert_eq!(lemma_class(23), LemmaClass::MinusOne(3));
    }
}
