//! The factorization `x^p - 1 = (x - 1) f_Q f_N`, its Hensel lifts, and
//! idempotent generators of cyclic ideals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modring::{quad_partition, Modulus};
use crate::word::Word;

use super::dense::{xgcd, DensePoly};
use super::ZPoly;

/// Cyclotomic cosets `{c, 2c, 4c, ...} mod p`, each sorted, ordered by
/// smallest element. `{0}` comes first.
pub fn cyclotomic_cosets(p: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for start in 0..p {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut c = start;
        while !seen[c as usize] {
            seen[c as usize] = true;
            coset.push(c);
            c = c * 2 % p;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}

/// Monic factors of `x^p - 1` over `Z_{2^m}`: the lift of `x - 1`, of `f_Q`
/// and of `f_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSet<W: Word> {
    pub p: u64,
    #[serde(serialize_with = "serialize_exponent")]
    pub modulus: Modulus<W>,
    pub f_unit: DensePoly<W>,
    pub f_q: DensePoly<W>,
    pub f_n: DensePoly<W>,
}

fn serialize_exponent<W: Word, S: serde::Serializer>(
    z: &Modulus<W>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u32(z.exponent())
}

impl<W: Word> FactorSet<W> {
    pub fn m(&self) -> u32 {
        self.modulus.exponent()
    }

    /// `f_unit * f_q * f_n`, multiplied out at full degree.
    pub fn product(&self) -> DensePoly<W> {
        let z = &self.modulus;
        self.f_unit.mul(&self.f_q, z).mul(&self.f_n, z)
    }

    pub fn verifies(&self) -> bool {
        self.product() == DensePoly::x_pow_minus_one(self.p as usize, &self.modulus)
    }

    /// `f_q` as an element of `R_p`.
    pub fn f_q_ring(&self) -> ZPoly<W> {
        self.f_q.to_ring(self.p as usize, &self.modulus)
    }

    pub fn f_n_ring(&self) -> ZPoly<W> {
        self.f_n.to_ring(self.p as usize, &self.modulus)
    }

    /// `(x - 1) f_q` in `R_p`.
    pub fn unit_times_q_ring(&self) -> ZPoly<W> {
        self.f_unit
            .mul(&self.f_q, &self.modulus)
            .to_ring(self.p as usize, &self.modulus)
    }

    pub fn unit_times_n_ring(&self) -> ZPoly<W> {
        self.f_unit
            .mul(&self.f_n, &self.modulus)
            .to_ring(self.p as usize, &self.modulus)
    }

    /// All three factors reduced into a smaller modulus.
    pub fn reduce_to(&self, target: Modulus<W>) -> Self {
        assert!(target.exponent() <= self.m());
        Self {
            p: self.p,
            modulus: target,
            f_unit: self.f_unit.reduce(&target),
            f_q: self.f_q.reduce(&target),
            f_n: self.f_n.reduce(&target),
        }
    }
}

/// The binary factors of `x^p - 1`.
///
/// `f_Q` is labelled through the residue-support polynomial `e1`: for the
/// primitive root `xi` with `e1(xi) = 0`, `e1` vanishes exactly at `xi^i`
/// with `i` in `Q` (and at 1 when `p = 1 mod 8`), so `f_Q` is
/// `gcd(x^p - 1, e1)` with the `x - 1` factor removed.
pub fn binary_qr_factors<W: Word>(p: u64) -> Result<FactorSet<W>> {
    let partition = quad_partition(p)?;
    let z2 = Modulus::<W>::new(1)?;
    let n = p as usize;
    let x_p = DensePoly::x_pow_minus_one(n, &z2);
    let x_minus_one = DensePoly::from_u64s(&[1, 1], &z2);

    let mut e1 = vec![W::zero(); n];
    for &i in partition.residues() {
        e1[i as usize] = W::one();
    }
    let e1 = DensePoly::new(e1, &z2);

    let (mut f_q, _, _) = xgcd(&x_p, &e1, &z2);
    if p % 8 == 1 {
        f_q = f_q
            .div_exact(&x_minus_one, &z2)
            .expect("e1(1) = 0 when p = 1 mod 8");
    }
    let f_n = x_p
        .div_exact(&x_minus_one.mul(&f_q, &z2), &z2)
        .expect("f_Q divides x^p - 1");

    let half = (n - 1) / 2;
    assert_eq!(f_q.degree(), Some(half), "deg f_Q for p = {p}");
    assert_eq!(f_n.degree(), Some(half), "deg f_N for p = {p}");

    Ok(FactorSet {
        p,
        modulus: z2,
        f_unit: x_minus_one,
        f_q,
        f_n,
    })
}

/// One quadratic Hensel step: from `f = g h (mod 2^j)` and `s g + t h = 1
/// (mod 2^j)` to the same relations modulo `z` (at most `2^{2j}`).
/// `h` is monic.
fn hensel_step<W: Word>(
    f: &DensePoly<W>,
    g: &DensePoly<W>,
    h: &DensePoly<W>,
    s: &DensePoly<W>,
    t: &DensePoly<W>,
    z: &Modulus<W>,
) -> (DensePoly<W>, DensePoly<W>, DensePoly<W>, DensePoly<W>) {
    let (f, g, h, s, t) = (
        f.reduce(z),
        g.reduce(z),
        h.reduce(z),
        s.reduce(z),
        t.reduce(z),
    );
    let e = f.sub(&g.mul(&h, z), z);
    let (q, r) = s.mul(&e, z).divrem(&h, z).expect("h is monic");
    let g_next = g.add(&t.mul(&e, z), z).add(&q.mul(&g, z), z);
    let h_next = h.add(&r, z);

    let one = DensePoly::one();
    let b = s.mul(&g_next, z).add(&t.mul(&h_next, z), z).sub(&one, z);
    let (c, d) = s.mul(&b, z).divrem(&h_next, z).expect("h stays monic");
    let s_next = s.sub(&d, z);
    let t_next = t.sub(&t.mul(&b, z), z).sub(&c.mul(&g_next, z), z);
    (g_next, h_next, s_next, t_next)
}

/// Lifts the monic factor `seed` of `f` (over `Z_2`) to `Z_{2^target}`.
fn lift_factor<W: Word>(
    f: &DensePoly<W>,
    seed: &DensePoly<W>,
    cofactor: &DensePoly<W>,
    target: u32,
) -> Result<DensePoly<W>> {
    let z2 = Modulus::<W>::new(1)?;
    let (gcd, s, t) = xgcd(cofactor, seed, &z2);
    if gcd != DensePoly::one() {
        return Err(Error::NotCoprime);
    }
    // Roles: the factor being lifted is `h` (monic), the cofactor is `g`.
    let (mut g, mut h, mut s, mut t) = (cofactor.clone(), seed.clone(), s, t);
    let mut level = 1u32;
    while level < target {
        level = (2 * level).min(target);
        let z = Modulus::<W>::new(level)?;
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &z);
    }
    Ok(h)
}

/// Hensel lifts of the binary factors to `Z_{2^target}`, one
/// modulus-doubling step at a time, with an exact product check at the end.
pub fn hensel_lift_factors<W: Word>(seed: &FactorSet<W>, target: u32) -> Result<FactorSet<W>> {
    assert_eq!(seed.m(), 1, "seed factors live over Z_2");
    let z = Modulus::<W>::new(target)?;
    if target == 1 {
        return Ok(seed.clone());
    }
    let z2 = seed.modulus;
    let p = seed.p;
    let f = DensePoly::x_pow_minus_one(p as usize, &z);
    let lift = |factor: &DensePoly<W>, others: [&DensePoly<W>; 2]| {
        let cofactor = others[0].mul(others[1], &z2);
        lift_factor(&f, factor, &cofactor, target)
    };
    let lifted = FactorSet {
        p,
        modulus: z,
        f_unit: lift(&seed.f_unit, [&seed.f_q, &seed.f_n])?,
        f_q: lift(&seed.f_q, [&seed.f_unit, &seed.f_n])?,
        f_n: lift(&seed.f_n, [&seed.f_unit, &seed.f_q])?,
    };
    if !lifted.verifies() || lifted.reduce_to(z2) != *seed {
        return Err(Error::LiftVerificationFailed { p, m: target });
    }
    Ok(lifted)
}

/// The idempotent generator of the ideal `(f)` in `R_n`, `n` odd.
///
/// `f` must divide `x^n - 1` with a unit leading coefficient and a cofactor
/// coprime to it modulo 2. The binary idempotent `s f` (from `s f + t g = 1`)
/// is lifted by `e <- 3e^2 - 2e^3`, which doubles the precision each round.
pub fn idempotent_from_generator<W: Word>(f: &ZPoly<W>) -> Result<ZPoly<W>> {
    let z = f.modulus();
    let n = f.len();
    if f.is_zero() {
        return Ok(f.clone());
    }
    let f_dense = DensePoly::from_ring(f)
        .monic(&z)
        .ok_or(Error::NotADivisor)?;
    let x_n = DensePoly::x_pow_minus_one(n, &z);
    let cofactor = x_n.div_exact(&f_dense, &z).ok_or(Error::NotADivisor)?;

    let z2 = Modulus::<W>::new(1)?;
    let (gcd, s, _) = xgcd(&f_dense.reduce(&z2), &cofactor.reduce(&z2), &z2);
    if gcd != DensePoly::one() {
        return Err(Error::NotCoprimeCofactor);
    }
    let seed = s.mul(&f_dense.reduce(&z2), &z2).to_ring(n, &z2);

    let mut e = ZPoly::new(z, seed.coeffs().to_vec());
    let mut precision = 1u32;
    while precision < z.exponent() {
        let sq = e.square();
        let cube = &sq * &e;
        e = &sq.scale_i64(3) - &cube.scale_i64(2);
        precision *= 2;
    }
    debug_assert!(e.is_idempotent());
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32) -> Modulus<u64> {
        Modulus::new(m).unwrap()
    }

    #[test]
    fn cosets_p7_p17() {
        assert_eq!(
            cyclotomic_cosets(7),
            vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]
        );
        let c17 = cyclotomic_cosets(17);
        assert_eq!(c17.len(), 3);
        assert_eq!(c17[1], vec![1, 2, 4, 8, 9, 13, 15, 16]);
    }

    #[test]
    fn binary_factors_p7() {
        let fs = binary_qr_factors::<u64>(7).unwrap();
        assert_eq!(fs.f_q.to_u64s(), vec![1, 1, 0, 1]);
        assert_eq!(fs.f_n.to_u64s(), vec![1, 0, 1, 1]);
        assert!(fs.verifies());
    }

    #[test]
    fn binary_factors_p17_degrees() {
        let fs = binary_qr_factors::<u64>(17).unwrap();
        assert_eq!(fs.f_q.degree(), Some(8));
        assert_eq!(fs.f_n.degree(), Some(8));
        assert!(fs.verifies());
        assert!(matches!(
            binary_qr_factors::<u64>(13),
            Err(Error::BadResidueClass { .. })
        ));
    }

    #[test]
    fn lift_p7_m2() {
        let seed = binary_qr_factors::<u64>(7).unwrap();
        let lifted = hensel_lift_factors(&seed, 2).unwrap();
        assert_eq!(lifted.f_q.to_pretty(), "x^3+2x^2+x+3");
        assert_eq!(lifted.f_unit.to_u64s(), vec![3, 1]);
        assert!(lifted.verifies());
    }

    #[test]
    fn lift_to_m1_is_identity() {
        let seed = binary_qr_factors::<u64>(23).unwrap();
        assert_eq!(hensel_lift_factors(&seed, 1).unwrap(), seed);
    }

    #[test]
    fn tower_consistency_p7() {
        let seed = binary_qr_factors::<u64>(7).unwrap();
        let m4 = hensel_lift_factors(&seed, 4).unwrap();
        let m2 = hensel_lift_factors(&seed, 2).unwrap();
        assert_eq!(m4.reduce_to(z(2)), m2);
    }

    #[test]
    fn idempotent_of_binary_f_q_is_e1() {
        let seed = binary_qr_factors::<u64>(7).unwrap();
        let e = idempotent_from_generator(&seed.f_q_ring()).unwrap();
        assert_eq!(e, ZPoly::indicator(7, z(1), [1, 2, 4]));
    }

    #[test]
    fn unit_ideal_has_idempotent_one() {
        let one = ZPoly::one(7, z(4));
        assert_eq!(idempotent_from_generator(&one).unwrap(), one);
    }

    #[test]
    fn lifted_idempotent_is_idempotent() {
        let seed = binary_qr_factors::<u64>(7).unwrap();
        let lifted = hensel_lift_factors(&seed, 4).unwrap();
        let e = idempotent_from_generator(&lifted.f_q_ring()).unwrap();
        assert!(e.is_idempotent());
        assert_eq!(e.reduce_to(z(1)), ZPoly::indicator(7, z(1), [1, 2, 4]));
    }

    #[test]
    fn non_divisor_rejected() {
        // (-1)^7 - 1 = -2, so x + 1 leaves a remainder modulo 16.
        let f = ZPoly::from_u64s(z(4), &[1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(idempotent_from_generator(&f), Err(Error::NotADivisor));
        let g = ZPoly::from_u64s(z(4), &[1, 2, 0, 0, 0, 0, 0]);
        assert_eq!(idempotent_from_generator(&g), Err(Error::NotADivisor));
    }

    #[test]
    fn repeated_binary_factor_rejected() {
        // x^2 - 1 = (x - 1)(x + 1) and both factors are x + 1 modulo 2.
        let f = ZPoly::from_u64s(z(2), &[3, 1]);
        assert_eq!(
            idempotent_from_generator(&f),
            Err(Error::NotCoprimeCofactor)
        );
    }
}
