use serde::{Serialize, Serializer};

use crate::modring::Modulus;
use crate::word::Word;

use super::ZPoly;

/// A polynomial in `Z_{2^m}[x]` with no trailing zero coefficients.
///
/// The modulus is passed to each operation rather than stored, so the same
/// value can move between `Z_{2^j}` levels during lifting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly<W: Word> {
    coeffs: Vec<W>,
}

impl<W: Word> DensePoly<W> {
    pub fn new(mut coeffs: Vec<W>, z: &Modulus<W>) -> Self {
        for c in &mut coeffs {
            *c = z.reduce(*c);
        }
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_u64s(coeffs: &[u64], z: &Modulus<W>) -> Self {
        Self::new(coeffs.iter().map(|&c| z.from_u64(c)).collect(), z)
    }

    pub fn from_ring(f: &ZPoly<W>) -> Self {
        Self::new(f.coeffs().to_vec(), &f.modulus())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![W::one()],
        }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize, z: &Modulus<W>) -> Self {
        let mut coeffs = vec![W::zero(); n + 1];
        coeffs[0] = z.neg(W::one());
        coeffs[n] = W::one();
        Self::new(coeffs, z)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[W] {
        &self.coeffs
    }

    pub fn to_u64s(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.as_u64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<W> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(W::one())
    }

    pub fn add(&self, other: &Self, z: &Modulus<W>) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_else(W::zero);
                let b = other.coeffs.get(i).copied().unwrap_or_else(W::zero);
                z.add(a, b)
            })
            .collect();
        Self::new(coeffs, z)
    }

    pub fn sub(&self, other: &Self, z: &Modulus<W>) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_else(W::zero);
                let b = other.coeffs.get(i).copied().unwrap_or_else(W::zero);
                z.sub(a, b)
            })
            .collect();
        Self::new(coeffs, z)
    }

    pub fn scale(&self, c: W, z: &Modulus<W>) -> Self {
        Self::new(self.coeffs.iter().map(|&a| z.mul(a, c)).collect(), z)
    }

    pub fn mul(&self, other: &Self, z: &Modulus<W>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![W::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].wrapping_add(&a.wrapping_mul(&b));
            }
        }
        Self::new(out, z)
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit. `None` when it is not.
    pub fn divrem(&self, divisor: &Self, z: &Modulus<W>) -> Option<(Self, Self)> {
        let d_deg = divisor.degree()?;
        let lc_inv = z.inv(divisor.leading()?)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![W::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let c = z.mul(rem[i + d_deg], lc_inv);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = z.sub(rem[i + j], z.mul(c, d));
            }
        }
        rem.truncate(d_deg);
        Some((Self::new(quot, z), Self::new(rem, z)))
    }

    /// Exact quotient, or `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self, z: &Modulus<W>) -> Option<Self> {
        let (q, r) = self.divrem(divisor, z)?;
        r.is_zero().then_some(q)
    }

    /// Scales so the leading coefficient is 1. `None` if it is not a unit.
    pub fn monic(&self, z: &Modulus<W>) -> Option<Self> {
        let inv = z.inv(self.leading()?)?;
        Some(self.scale(inv, z))
    }

    /// Coefficients reduced into a smaller modulus.
    pub fn reduce(&self, z: &Modulus<W>) -> Self {
        Self::new(self.coeffs.clone(), z)
    }

    /// Image in `Z_{2^m}[x]/(x^n - 1)`.
    pub fn to_ring(&self, n: usize, z: &Modulus<W>) -> ZPoly<W> {
        let mut coeffs = vec![W::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = z.add(coeffs[i % n], c);
        }
        ZPoly::new(*z, coeffs)
    }

    /// Text form with the highest power first, e.g. `x^3+2x^2+x+3`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.is_one() && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        terms.join("+")
    }
}

impl<W: Word> Serialize for DensePoly<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_u64s().serialize(s)
    }
}

/// Extended Euclid over `Z_2`: returns `(g, s, t)` with `s a + t b = g`, `g`
/// monic. The modulus must be `Z_2`, where every nonzero lead is a unit.
pub fn xgcd<W: Word>(
    a: &DensePoly<W>,
    b: &DensePoly<W>,
    z: &Modulus<W>,
) -> (DensePoly<W>, DensePoly<W>, DensePoly<W>) {
    assert_eq!(z.exponent(), 1, "xgcd runs over Z_2 only");
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (DensePoly::one(), DensePoly::zero());
    let (mut t0, mut t1) = (DensePoly::zero(), DensePoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1, z).expect("nonzero lead is a unit over Z_2");
        let s = s0.sub(&q.mul(&s1, z), z);
        let t = t0.sub(&q.mul(&t1, z), z);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32) -> Modulus<u64> {
        Modulus::new(m).unwrap()
    }

    #[test]
    fn divrem_reconstructs() {
        let z4 = z(4);
        let a = DensePoly::from_u64s(&[5, 0, 3, 7, 1, 2], &z4);
        let d = DensePoly::from_u64s(&[3, 1, 3], &z4);
        let (q, r) = a.divrem(&d, &z4).unwrap();
        assert!(r.degree().is_none_or(|deg| deg < 2));
        assert_eq!(q.mul(&d, &z4).add(&r, &z4), a);
    }

    #[test]
    fn non_unit_lead_rejected() {
        let z4 = z(4);
        let a = DensePoly::from_u64s(&[1, 1, 1], &z4);
        let d = DensePoly::from_u64s(&[1, 2], &z4);
        assert!(a.divrem(&d, &z4).is_none());
    }

    #[test]
    fn xgcd_over_gf2() {
        let z2 = z(1);
        // x^3 + x + 1 and x^3 + x^2 + 1 are coprime.
        let a = DensePoly::from_u64s(&[1, 1, 0, 1], &z2);
        let b = DensePoly::from_u64s(&[1, 0, 1, 1], &z2);
        let (g, s, t) = xgcd(&a, &b, &z2);
        assert_eq!(g, DensePoly::one());
        assert_eq!(s.mul(&a, &z2).add(&t.mul(&b, &z2), &z2), DensePoly::one());
    }

    #[test]
    fn pretty_form() {
        let f = DensePoly::from_u64s(&[3, 1, 2, 1], &z(2));
        assert_eq!(f.to_pretty(), "x^3+2x^2+x+3");
    }

    #[test]
    fn ring_image_folds_degrees() {
        let z4 = z(4);
        let f = DensePoly::x_pow_minus_one(7, &z4);
        assert!(f.to_ring(7, &z4).is_zero());
    }
}
