//! Arithmetic in `R_n = Z_{2^m}[x]/(x^n - 1)`.

mod dense;
mod factor;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::modring::{gcd, Modulus};
use crate::word::Word;

pub use dense::{xgcd, DensePoly};
pub use factor::{
    binary_qr_factors, cyclotomic_cosets, hensel_lift_factors, idempotent_from_generator, FactorSet,
};

/// An element of `R_n`: `coeffs[i]` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly<W: Word> {
    modulus: Modulus<W>,
    coeffs: Vec<W>,
}

impl<W: Word> ZPoly<W> {
    /// Reduces every coefficient into `[0, 2^m)`.
    pub fn new(modulus: Modulus<W>, mut coeffs: Vec<W>) -> Self {
        assert!(!coeffs.is_empty(), "ring length must be positive");
        for c in &mut coeffs {
            *c = modulus.reduce(*c);
        }
        Self { modulus, coeffs }
    }

    pub fn from_u64s(modulus: Modulus<W>, coeffs: &[u64]) -> Self {
        Self::new(
            modulus,
            coeffs.iter().map(|&c| modulus.from_u64(c)).collect(),
        )
    }

    pub fn zero(n: usize, modulus: Modulus<W>) -> Self {
        Self::new(modulus, vec![W::zero(); n])
    }

    pub fn constant(n: usize, modulus: Modulus<W>, c: W) -> Self {
        let mut p = Self::zero(n, modulus);
        p.coeffs[0] = modulus.reduce(c);
        p
    }

    pub fn one(n: usize, modulus: Modulus<W>) -> Self {
        Self::constant(n, modulus, W::one())
    }

    /// `c * x^(i mod n)`.
    pub fn monomial(n: usize, modulus: Modulus<W>, i: usize, c: W) -> Self {
        let mut p = Self::zero(n, modulus);
        p.coeffs[i % n] = modulus.reduce(c);
        p
    }

    /// Polynomial with coefficient 1 on each index in `support`.
    pub fn indicator(
        n: usize,
        modulus: Modulus<W>,
        support: impl IntoIterator<Item = u64>,
    ) -> Self {
        let mut p = Self::zero(n, modulus);
        for i in support {
            p.coeffs[(i % n as u64) as usize] = W::one();
        }
        p
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn modulus(&self) -> Modulus<W> {
        self.modulus
    }

    #[inline]
    pub fn coeffs(&self) -> &[W] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> W {
        self.coeffs[i % self.len()]
    }

    pub fn to_u64s(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.as_u64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() || self.modulus != other.modulus {
            return Err(Error::ShapeMismatch {
                n_left: self.len(),
                m_left: self.modulus.exponent(),
                n_right: other.len(),
                m_right: other.modulus.exponent(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let z = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| z.add(a, b))
            .collect();
        Ok(Self { modulus: z, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let z = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| z.sub(a, b))
            .collect();
        Ok(Self { modulus: z, coeffs })
    }

    pub fn scale(&self, c: W) -> Self {
        let z = self.modulus;
        Self {
            modulus: z,
            coeffs: self.coeffs.iter().map(|&a| z.mul(a, c)).collect(),
        }
    }

    /// Scales by a signed integer constant.
    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(self.modulus.from_i64(c))
    }

    /// Cyclic convolution.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(cyclic_convolution(self, other))
    }

    pub fn square(&self) -> Self {
        cyclic_convolution(self, self)
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// Multiplication by `x^s`.
    pub fn shift(&self, s: usize) -> Self {
        let n = self.len();
        let mut coeffs = vec![W::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(i + s) % n] = c;
        }
        Self {
            modulus: self.modulus,
            coeffs,
        }
    }

    /// The coordinate map `x^i -> x^(a i mod n)`. `a = n - 1` gives `f(x^{-1})`.
    pub fn mu_map(&self, a: u64) -> Result<Self> {
        let n = self.len();
        let a = a % n as u64;
        if gcd(a, n as u64) != 1 {
            return Err(Error::NotAUnit { a, n });
        }
        let mut coeffs = vec![W::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(a as usize * i) % n] = c;
        }
        Ok(Self {
            modulus: self.modulus,
            coeffs,
        })
    }

    /// `f(x^{-1})`.
    pub fn reciprocal(&self) -> Self {
        let n = self.len();
        let mut coeffs = vec![W::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(n - i) % n] = c;
        }
        Self {
            modulus: self.modulus,
            coeffs,
        }
    }

    /// Image under `Z_{2^m} -> Z_{2^j}`, `j <= m`.
    pub fn reduce_to(&self, target: Modulus<W>) -> Self {
        assert!(target.exponent() <= self.modulus.exponent());
        Self::new(target, self.coeffs.clone())
    }

    /// Comma-separated coefficients, constant term first.
    pub fn to_text(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the comma-separated form. Missing high coefficients are zero
    /// when `n` exceeds the number of fields.
    pub fn parse(text: &str, n: usize, modulus: Modulus<W>) -> Result<Self> {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() > n {
            return Err(Error::Parse(format!(
                "{} coefficients given for length {n}",
                fields.len()
            )));
        }
        let mut coeffs = vec![W::zero(); n];
        for (slot, field) in coeffs.iter_mut().zip(&fields) {
            let v: u64 = field
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {field:?}")))?;
            *slot = modulus.from_u64(v);
        }
        Ok(Self::new(modulus, coeffs))
    }
}

fn cyclic_convolution<W: Word>(a: &ZPoly<W>, b: &ZPoly<W>) -> ZPoly<W> {
    let n = a.len();
    let mut out = vec![W::zero(); n];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.coeffs.iter().enumerate() {
            let t = if i + j >= n { i + j - n } else { i + j };
            out[t] = out[t].wrapping_add(&ai.wrapping_mul(&bj));
        }
    }
    ZPoly::new(a.modulus, out)
}

/// Multiplication in `R_n`.
pub fn ring_mul<W: Word>(a: &ZPoly<W>, b: &ZPoly<W>) -> Result<ZPoly<W>> {
    a.try_mul(b)
}

pub fn is_idempotent<W: Word>(f: &ZPoly<W>) -> bool {
    f.is_idempotent()
}

pub fn mu_map<W: Word>(f: &ZPoly<W>, a: u64) -> Result<ZPoly<W>> {
    f.mu_map(a)
}

// Operators panic on shape mismatch; the `try_*` methods report it.
impl<W: Word> Add for &ZPoly<W> {
    type Output = ZPoly<W>;
    fn add(self, rhs: Self) -> ZPoly<W> {
        self.try_add(rhs).expect("ZPoly shapes differ")
    }
}

impl<W: Word> Sub for &ZPoly<W> {
    type Output = ZPoly<W>;
    fn sub(self, rhs: Self) -> ZPoly<W> {
        self.try_sub(rhs).expect("ZPoly shapes differ")
    }
}

impl<W: Word> Mul for &ZPoly<W> {
    type Output = ZPoly<W>;
    fn mul(self, rhs: Self) -> ZPoly<W> {
        self.try_mul(rhs).expect("ZPoly shapes differ")
    }
}

impl<W: Word> Neg for &ZPoly<W> {
    type Output = ZPoly<W>;
    fn neg(self) -> ZPoly<W> {
        let z = self.modulus;
        ZPoly {
            modulus: z,
            coeffs: self.coeffs.iter().map(|&c| z.neg(c)).collect(),
        }
    }
}

impl<W: Word> fmt::Debug for ZPoly<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ZPoly[m={}]({})",
            self.modulus.exponent(),
            self.to_text()
        )
    }
}

impl<W: Word> fmt::Display for ZPoly<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<W: Word> Serialize for ZPoly<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_u64s().serialize(s)
    }
}
