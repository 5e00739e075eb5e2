//! Linear codes over `Z_{2^m}` held in Howell normal form.

mod howell;
mod weight;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::modring::{gcd, Modulus};
use crate::polyring::ZPoly;
use crate::word::Word;

use howell::{howell_form, reduce_against, PivotRow};

pub use weight::{is_even_like, WeightReport, DEFAULT_BUDGET};

/// A submodule of `Z_{2^m}^n`.
///
/// `gen` is the Howell form of the module, so two codes are equal exactly
/// when their generator matrices are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCode<W: Word> {
    n: usize,
    modulus: Modulus<W>,
    gen: Vec<Vec<W>>,
    pivots: Vec<usize>,
    shifts: Vec<u32>,
}

impl<W: Word> LinearCode<W> {
    /// Canonical form of the span of `rows`. Every row must have length `n`.
    pub fn from_rows(rows: &[Vec<W>], n: usize, modulus: Modulus<W>) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == n),
            "row length differs from n"
        );
        Self::from_form(howell_form(rows, n, &modulus), n, modulus)
    }

    fn from_form(form: Vec<PivotRow<W>>, n: usize, modulus: Modulus<W>) -> Self {
        let mut gen = Vec::with_capacity(form.len());
        let mut pivots = Vec::with_capacity(form.len());
        let mut shifts = Vec::with_capacity(form.len());
        for p in form {
            pivots.push(p.col);
            shifts.push(p.shift);
            gen.push(p.row);
        }
        Self {
            n,
            modulus,
            gen,
            pivots,
            shifts,
        }
    }

    fn form(&self) -> Vec<PivotRow<W>> {
        self.gen
            .iter()
            .zip(&self.pivots)
            .zip(&self.shifts)
            .map(|((row, &col), &shift)| PivotRow {
                col,
                shift,
                row: row.clone(),
            })
            .collect()
    }

    pub fn zero(n: usize, modulus: Modulus<W>) -> Self {
        Self {
            n,
            modulus,
            gen: Vec::new(),
            pivots: Vec::new(),
            shifts: Vec::new(),
        }
    }

    /// All of `Z_{2^m}^n`.
    pub fn full(n: usize, modulus: Modulus<W>) -> Self {
        let rows: Vec<Vec<W>> = (0..n)
            .map(|i| {
                let mut r = vec![W::zero(); n];
                r[i] = W::one();
                r
            })
            .collect();
        Self::from_rows(&rows, n, modulus)
    }

    /// The ideal generated by `g`: the span of its `n` cyclic shifts.
    pub fn from_polynomial(g: &ZPoly<W>) -> Self {
        let rows: Vec<Vec<W>> = (0..g.len()).map(|s| g.shift(s).coeffs().to_vec()).collect();
        Self::from_rows(&rows, g.len(), g.modulus())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn modulus(&self) -> Modulus<W> {
        self.modulus
    }

    pub fn exponent(&self) -> u32 {
        self.modulus.exponent()
    }

    /// Generator rows in canonical order.
    pub fn rows(&self) -> &[Vec<W>] {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Pivot entry of row `i` is `2^shifts[i]`.
    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn rows_u64(&self) -> Vec<Vec<u64>> {
        self.gen
            .iter()
            .map(|r| r.iter().map(|c| c.as_u64()).collect())
            .collect()
    }

    pub fn is_zero_code(&self) -> bool {
        self.gen.is_empty()
    }

    /// `log2 |C| = sum over rows of (m - shift)`.
    pub fn cardinality_log2(&self) -> u64 {
        let m = self.exponent();
        self.shifts.iter().map(|&v| u64::from(m - v)).sum()
    }

    pub fn contains(&self, v: &[W]) -> bool {
        v.len() == self.n
            && reduce_against(&self.form(), v, &self.modulus)
                .iter()
                .all(|c| c.is_zero())
    }

    pub fn contains_poly(&self, f: &ZPoly<W>) -> bool {
        f.modulus() == self.modulus && self.contains(f.coeffs())
    }

    pub fn is_subcode_of(&self, other: &Self) -> bool {
        self.same_shape(other).is_ok() && self.gen.iter().all(|r| other.contains(r))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.modulus != other.modulus {
            return Err(Error::ShapeMismatch {
                n_left: self.n,
                m_left: self.exponent(),
                n_right: other.n,
                m_right: other.exponent(),
            });
        }
        Ok(())
    }

    /// The annihilator of the code under the standard inner product.
    ///
    /// Rows of `[G^T | I_n]` span pairs `(G u, u)`. In Howell form, the
    /// rows whose first `k` entries vanish span exactly the pairs with
    /// `G u = 0`.
    pub fn dual(&self) -> Self {
        let k = self.gen.len();
        if k == 0 {
            return Self::full(self.n, self.modulus);
        }
        let rows: Vec<Vec<W>> = (0..self.n)
            .map(|j| {
                let mut r: Vec<W> = self.gen.iter().map(|g| g[j]).collect();
                r.extend((0..self.n).map(|i| if i == j { W::one() } else { W::zero() }));
                r
            })
            .collect();
        self.tail_block(&rows, k)
    }

    /// Span of the rows of the Howell form of `rows` that vanish on the first
    /// `skip` columns, restricted to the remaining `n` columns.
    fn tail_block(&self, rows: &[Vec<W>], skip: usize) -> Self {
        let form = howell_form(rows, skip + self.n, &self.modulus);
        let tail: Vec<Vec<W>> = form
            .into_iter()
            .filter(|p| p.col >= skip)
            .map(|p| p.row[skip..].to_vec())
            .collect();
        Self::from_rows(&tail, self.n, self.modulus)
    }

    /// `a ∩ b`: from the stacked system `[[a | a], [b | 0]]`, the rows
    /// vanishing on the first block carry `x` with `x ∈ a` and `x ∈ b`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut rows: Vec<Vec<W>> = Vec::new();
        for g in &self.gen {
            let mut r = g.clone();
            r.extend_from_slice(g);
            rows.push(r);
        }
        for g in &other.gen {
            let mut r = g.clone();
            r.extend(std::iter::repeat_n(W::zero(), self.n));
            rows.push(r);
        }
        Ok(self.tail_block(&rows, self.n))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let rows: Vec<Vec<W>> = self.gen.iter().chain(&other.gen).cloned().collect();
        Ok(Self::from_rows(&rows, self.n, self.modulus))
    }

    /// `C ⊆ C^⊥`.
    pub fn is_self_orthogonal(&self) -> bool {
        let z = self.modulus;
        self.gen.iter().enumerate().all(|(i, a)| {
            self.gen[i..].iter().all(|b| {
                a.iter()
                    .zip(b)
                    .fold(W::zero(), |acc, (&x, &y)| z.add(acc, z.mul(x, y)))
                    .is_zero()
            })
        })
    }

    /// Exhaustive when `|C| <= budget`, otherwise a seeded upper bound with
    /// `enumerated = false`.
    pub fn min_weight(&self, budget: u64) -> Result<WeightReport> {
        weight::min_weight(self, budget, false)
    }

    /// Like [`min_weight`](Self::min_weight) but fails with `BudgetExceeded`
    /// rather than fall back to a bound.
    pub fn min_weight_exhaustive(&self, budget: u64) -> Result<WeightReport> {
        weight::min_weight(self, budget, true)
    }

    /// Exhaustive minimum weight with every minimum word classified as
    /// even-like or odd-like.
    pub fn min_weight_parity(&self, budget: u64) -> Result<WeightReport> {
        self.min_weight_exhaustive(budget)
    }

    /// Appends the negated coordinate sum to every word.
    pub fn extend(&self) -> Self {
        let z = self.modulus;
        let rows: Vec<Vec<W>> = self
            .gen
            .iter()
            .map(|g| {
                let s = g.iter().fold(W::zero(), |acc, &c| z.add(acc, c));
                let mut r = g.clone();
                r.push(z.neg(s));
                r
            })
            .collect();
        Self::from_rows(&rows, self.n + 1, z)
    }

    /// Deletes coordinate `pos`.
    pub fn puncture(&self, pos: usize) -> Result<Self> {
        if pos >= self.n {
            return Err(Error::BadPosition { pos, n: self.n });
        }
        let rows: Vec<Vec<W>> = self
            .gen
            .iter()
            .map(|g| {
                let mut r = g.clone();
                r.remove(pos);
                r
            })
            .collect();
        Ok(Self::from_rows(&rows, self.n - 1, self.modulus))
    }

    /// The code under the coordinate permutation `i -> u i (mod n)`.
    pub fn permute_mu(&self, u: u64) -> Result<Self> {
        let n = self.n;
        let u = u % n as u64;
        if gcd(u, n as u64) != 1 {
            return Err(Error::NotAUnit { a: u, n });
        }
        let rows: Vec<Vec<W>> = self
            .gen
            .iter()
            .map(|g| {
                let mut r = vec![W::zero(); n];
                for (i, &c) in g.iter().enumerate() {
                    r[(u as usize * i) % n] = c;
                }
                r
            })
            .collect();
        Ok(Self::from_rows(&rows, n, self.modulus))
    }

    /// Smallest unit `u` with `mu_u(self) = other`, if any.
    pub fn equivalent_under_mu(&self, other: &Self) -> Option<u64> {
        if self.same_shape(other).is_err() || self.cardinality_log2() != other.cardinality_log2() {
            return None;
        }
        (1..self.n.max(2) as u64)
            .filter(|&u| gcd(u, self.n as u64) == 1)
            .find(|&u| self.permute_mu(u).is_ok_and(|c| c == *other))
    }
}

impl<W: Word> Serialize for LinearCode<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LinearCode", 3)?;
        st.serialize_field("m", &self.exponent())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("rows", &self.rows_u64())?;
        st.end()
    }
}
