//! Idempotents of the form `a + b e1 + c e2`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modring::{quad_partition, FamilyParams, LemmaClass, Modulus};
use crate::polyring::ZPoly;
use crate::word::Word;

use super::{basis_vectors, Basis};

/// Largest exponent for which the solver scans all `2^(3m)` triples.
pub const EXHAUSTIVE_MAX_M: u32 = 6;

/// A triple `(alpha, beta, gamma)` with `alpha + beta e1 + gamma e2`
/// idempotent in `R_p` over `Z_{2^m}` and `beta != gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IdempotentCoeffs {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub p: u64,
    pub m: u32,
}

impl IdempotentCoeffs {
    /// Validates idempotency by convolution and non-degeneracy.
    pub fn new(p: u64, m: u32, alpha: u64, beta: u64, gamma: u64) -> Result<Self> {
        let z = Modulus::<u64>::new(m)?;
        let (alpha, beta, gamma) = (z.reduce(alpha), z.reduce(beta), z.reduce(gamma));
        if beta == gamma {
            return Err(Error::DegenerateCoefficients(beta));
        }
        let c = Self {
            alpha,
            beta,
            gamma,
            p,
            m,
        };
        if !c.to_poly::<u64>()?.is_idempotent() {
            return Err(Error::NotIdempotent { alpha, beta, gamma });
        }
        Ok(c)
    }

    fn modulus(&self) -> Modulus<u64> {
        Modulus::new(self.m).expect("validated exponent")
    }

    pub fn to_poly<W: Word>(&self) -> Result<ZPoly<W>> {
        Ok(basis_vectors::<W>(self.p, self.m)?.combine(self.alpha, self.beta, self.gamma))
    }

    /// `beta + gamma (mod 2^m)`.
    pub fn trace_sum(&self) -> u64 {
        self.modulus().add(self.beta, self.gamma)
    }

    /// `2 alpha - (beta + gamma) = 1 (mod 2^m)`.
    pub fn satisfies_trace_relation(&self) -> bool {
        let z = self.modulus();
        z.sub(z.add(self.alpha, self.alpha), self.trace_sum()) == 1
    }

    /// The three scalar congruences obtained by expanding the square in
    /// `1, e1, e2` with the closed-form products.
    pub fn coefficient_system_holds(&self) -> bool {
        let z = self.modulus();
        let Ok(part) = quad_partition(self.p) else {
            return false;
        };
        let (a, b, c) = (self.alpha, self.beta, self.gamma);
        let mul = |x: u64, y: u64| z.mul(x, y);
        let add = |x: u64, y: u64| z.add(x, y);
        let (constant, e1_coeff, e2_coeff) = match part.lemma_class() {
            LemmaClass::MinusOne(k) => {
                let constant = add(mul(a, a), mul(2 * (4 * k - 1), mul(b, c)));
                let side = |x: u64, y: u64| {
                    let t = add(mul(2 * k - 1, mul(x, x)), mul(2 * k, mul(y, y)));
                    add(t, add(mul(2, mul(a, x)), mul(2 * (2 * k - 1), mul(b, c))))
                };
                (constant, side(b, c), side(c, b))
            }
            LemmaClass::PlusOne(k) => {
                let constant = add(mul(a, a), mul(4 * k, add(mul(b, b), mul(c, c))));
                let side = |x: u64, y: u64| {
                    let t = add(mul(2 * k - 1, mul(x, x)), mul(2 * k, mul(y, y)));
                    add(t, add(mul(2, mul(a, x)), mul(4 * k, mul(b, c))))
                };
                (constant, side(b, c), side(c, b))
            }
        };
        constant == a && e1_coeff == b && e2_coeff == c
    }
}

/// `(alpha, gamma, beta)`.
pub fn swap_conjugate(c: &IdempotentCoeffs) -> IdempotentCoeffs {
    IdempotentCoeffs {
        beta: c.gamma,
        gamma: c.beta,
        ..*c
    }
}

/// `e + direction (8k - 1) h`.
///
/// Direction `-1` needs `beta + gamma = 8k - 1` and direction `+1` needs
/// `beta + gamma = -(8k - 1)`, both modulo `2^m`.
pub fn shift_by_h<W: Word>(
    c: &IdempotentCoeffs,
    direction: i8,
    params: &FamilyParams,
) -> Result<ZPoly<W>> {
    assert!(
        direction == 1 || direction == -1,
        "direction must be +1 or -1"
    );
    let z = Modulus::<u64>::new(c.m)?;
    let shift = z.from_u64(params.shift_constant());
    let required = if direction == -1 { shift } else { z.neg(shift) };
    if c.trace_sum() != required {
        return Err(Error::PreconditionSignMismatch {
            sum: c.trace_sum(),
            required,
        });
    }
    let basis = basis_vectors::<W>(c.p, c.m)?;
    let e = basis.combine(c.alpha, c.beta, c.gamma);
    let step = basis
        .h
        .scale_i64(direction as i64 * params.shift_constant() as i64);
    let shifted = &e + &step;
    if !shifted.is_idempotent() {
        let s = shifted.to_u64s();
        return Err(Error::NotIdempotent {
            alpha: s[0],
            beta: c.beta,
            gamma: c.gamma,
        });
    }
    Ok(shifted)
}

/// Coefficient vectors of `e1`, `e2` and their products, used to test the
/// square of `a + b e1 + c e2` by bilinear expansion.
struct SquareTable {
    e1: Vec<u64>,
    e2: Vec<u64>,
    e11: Vec<u64>,
    e22: Vec<u64>,
    e12: Vec<u64>,
}

impl SquareTable {
    fn new(basis: &Basis<u64>) -> Self {
        Self {
            e1: basis.e1.to_u64s(),
            e2: basis.e2.to_u64s(),
            e11: basis.e1.square().to_u64s(),
            e22: basis.e2.square().to_u64s(),
            e12: (&basis.e1 * &basis.e2).to_u64s(),
        }
    }

    /// Idempotency of `a + b e1 + c e2` modulo `mask + 1`.
    fn is_idempotent(&self, a: u64, b: u64, c: u64, mask: u64) -> bool {
        let (aa, ab2, ac2) = (
            a.wrapping_mul(a),
            a.wrapping_mul(b).wrapping_mul(2),
            a.wrapping_mul(c).wrapping_mul(2),
        );
        let (bb, cc, bc2) = (
            b.wrapping_mul(b),
            c.wrapping_mul(c),
            b.wrapping_mul(c).wrapping_mul(2),
        );
        (0..self.e1.len()).all(|t| {
            let constant = if t == 0 { aa.wrapping_sub(a) } else { 0 };
            let v = constant
                .wrapping_add(ab2.wrapping_sub(b).wrapping_mul(self.e1[t]))
                .wrapping_add(ac2.wrapping_sub(c).wrapping_mul(self.e2[t]))
                .wrapping_add(bb.wrapping_mul(self.e11[t]))
                .wrapping_add(cc.wrapping_mul(self.e22[t]))
                .wrapping_add(bc2.wrapping_mul(self.e12[t]));
            v & mask == 0
        })
    }
}

fn finish(p: u64, m: u32, mut triples: Vec<(u64, u64, u64)>) -> Vec<IdempotentCoeffs> {
    triples.retain(|&(_, b, c)| b != c);
    triples.sort_unstable();
    triples
        .into_iter()
        .map(|(alpha, beta, gamma)| IdempotentCoeffs {
            alpha,
            beta,
            gamma,
            p,
            m,
        })
        .collect()
}

/// Scans every triple in `Z_{2^m}^3`.
pub fn solve_exhaustive(p: u64, m: u32) -> Result<Vec<IdempotentCoeffs>> {
    let basis = basis_vectors::<u64>(p, m)?;
    let table = SquareTable::new(&basis);
    let order = 1u64 << m;
    let mask = order - 1;
    let triples: Vec<(u64, u64, u64)> = (0..order)
        .into_par_iter()
        .flat_map_iter(|a| {
            let table = &table;
            (0..order).flat_map(move |b| {
                (0..order)
                    .filter_map(move |c| table.is_idempotent(a, b, c, mask).then_some((a, b, c)))
            })
        })
        .collect();
    Ok(finish(p, m, triples))
}

/// Solves modulo 2 and extends every solution one binary digit at a time.
/// A solution modulo `2^(j+1)` reduces to one modulo `2^j`, so no solution
/// is lost.
pub fn solve_by_lifting(p: u64, m: u32) -> Result<Vec<IdempotentCoeffs>> {
    let basis = basis_vectors::<u64>(p, m)?;
    let table = SquareTable::new(&basis);
    let mut level: Vec<(u64, u64, u64)> = vec![(0, 0, 0)];
    for j in 0..m {
        let bit = 1u64 << j;
        let mask = (bit << 1) - 1;
        level = level
            .iter()
            .flat_map(|&(a, b, c)| {
                (0..8u64).map(move |d| {
                    (
                        a | ((d & 1) * bit),
                        b | (((d >> 1) & 1) * bit),
                        c | (((d >> 2) & 1) * bit),
                    )
                })
            })
            .filter(|&(a, b, c)| table.is_idempotent(a, b, c, mask))
            .collect();
    }
    Ok(finish(p, m, level))
}

/// All non-degenerate idempotent triples, sorted.
pub fn solve_idempotent_system(p: u64, m: u32) -> Result<Vec<IdempotentCoeffs>> {
    Modulus::<u64>::new(m)?;
    if m <= EXHAUSTIVE_MAX_M {
        solve_exhaustive(p, m)
    } else {
        solve_by_lifting(p, m)
    }
}
