//! Minimum Hamming weight by enumeration of the normal-form coefficient space.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modring::Modulus;
use crate::word::Word;

use super::LinearCode;

/// Default cap on enumerated codewords.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

const SAMPLE_SEED: u64 = 0x005e_ed0f_c0de;
const CHUNKS: u64 = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub min_weight: usize,
    /// Number of nonzero words of minimum weight. A lower bound when
    /// `enumerated` is false.
    pub min_weight_count: u64,
    pub min_even_like: u64,
    pub min_odd_like: u64,
    pub all_min_odd_like: bool,
    /// True when every codeword was visited.
    pub enumerated: bool,
    pub words_visited: u64,
}

/// Running tally of the lightest nonzero words seen so far.
#[derive(Clone, Copy, Debug)]
struct Tally {
    weight: usize,
    even: u64,
    odd: u64,
    visited: u64,
}

impl Tally {
    fn empty() -> Self {
        Self {
            weight: usize::MAX,
            even: 0,
            odd: 0,
            visited: 0,
        }
    }

    fn record<W: Word>(&mut self, word: &[W], z: &Modulus<W>) {
        self.visited += 1;
        let w = word.iter().filter(|c| !c.is_zero()).count();
        if w == 0 || w > self.weight {
            return;
        }
        if w < self.weight {
            self.weight = w;
            self.even = 0;
            self.odd = 0;
        }
        if is_even_like(word, z) {
            self.even += 1;
        } else {
            self.odd += 1;
        }
    }

    fn merge(self, other: Self) -> Self {
        let visited = self.visited + other.visited;
        let mut out = match self.weight.cmp(&other.weight) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => Self {
                weight: self.weight,
                even: self.even + other.even,
                odd: self.odd + other.odd,
                visited: 0,
            },
        };
        out.visited = visited;
        out
    }

    fn into_report(self, enumerated: bool) -> Result<WeightReport> {
        if self.weight == usize::MAX {
            return Err(Error::NoNonzeroWords);
        }
        Ok(WeightReport {
            min_weight: self.weight,
            min_weight_count: self.even + self.odd,
            min_even_like: self.even,
            min_odd_like: self.odd,
            all_min_odd_like: self.even == 0,
            enumerated,
            words_visited: self.visited,
        })
    }
}

/// `sum(v) = 0 (mod 2^m)`.
pub fn is_even_like<W: Word>(v: &[W], z: &Modulus<W>) -> bool {
    v.iter().fold(W::zero(), |acc, &c| z.add(acc, c)).is_zero()
}

struct Enumerator<'a, W: Word> {
    rows: &'a [Vec<W>],
    radices: Vec<u64>,
    /// `radix_i * row_i`, subtracted when digit `i` wraps to zero.
    wraps: Vec<Vec<W>>,
    z: Modulus<W>,
}

impl<'a, W: Word> Enumerator<'a, W> {
    fn new(code: &'a LinearCode<W>) -> Self {
        let z = code.modulus();
        let m = z.exponent();
        let radices: Vec<u64> = code.shifts().iter().map(|&v| 1u64 << (m - v)).collect();
        let wraps = code
            .rows()
            .iter()
            .zip(&radices)
            .map(|(row, &r)| {
                let r = z.from_u64(r);
                row.iter().map(|&c| z.mul(c, r)).collect()
            })
            .collect();
        Self {
            rows: code.rows(),
            radices,
            wraps,
            z,
        }
    }

    fn word_at(&self, mut index: u64) -> (Vec<u64>, Vec<W>) {
        let n = self.rows.first().map_or(0, Vec::len);
        let mut digits = vec![0u64; self.radices.len()];
        let mut word = vec![W::zero(); n];
        for (i, &r) in self.radices.iter().enumerate() {
            digits[i] = index % r;
            index /= r;
            let c = self.z.from_u64(digits[i]);
            for (w, &g) in word.iter_mut().zip(&self.rows[i]) {
                *w = self.z.add(*w, self.z.mul(c, g));
            }
        }
        (digits, word)
    }

    fn step(&self, digits: &mut [u64], word: &mut [W]) {
        let z = &self.z;
        for (i, digit) in digits.iter_mut().enumerate() {
            *digit += 1;
            for (w, &g) in word.iter_mut().zip(&self.rows[i]) {
                *w = z.add(*w, g);
            }
            if *digit < self.radices[i] {
                return;
            }
            *digit = 0;
            for (w, &g) in word.iter_mut().zip(&self.wraps[i]) {
                *w = z.sub(*w, g);
            }
        }
    }

    fn run(&self, total: u64) -> Tally {
        let chunk = total.div_ceil(CHUNKS).max(1);
        (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let start = c * chunk;
                let end = (start + chunk).min(total);
                let (mut digits, mut word) = self.word_at(start);
                let mut tally = Tally::empty();
                for _ in start..end {
                    tally.record(&word, &self.z);
                    self.step(&mut digits, &mut word);
                }
                tally
            })
            .reduce(Tally::empty, Tally::merge)
    }
}

/// Words needed for exhaustive enumeration, or `None` above `2^63`.
fn word_count<W: Word>(code: &LinearCode<W>) -> Option<u64> {
    let log = code.cardinality_log2();
    (log < 64).then(|| 1u64 << log)
}

pub(crate) fn min_weight<W: Word>(
    code: &LinearCode<W>,
    budget: u64,
    exhaustive: bool,
) -> Result<WeightReport> {
    if code.rows().is_empty() {
        return Err(Error::NoNonzeroWords);
    }
    match word_count(code) {
        Some(total) if total <= budget => Enumerator::new(code).run(total).into_report(true),
        _ if exhaustive => Err(Error::BudgetExceeded {
            needed: code.cardinality_log2(),
            budget,
        }),
        _ => bounded_search(code, budget).into_report(false),
    }
}

/// Upper bound from the generator rows, their 2-power multiples and
/// `budget` seeded random combinations.
fn bounded_search<W: Word>(code: &LinearCode<W>, budget: u64) -> Tally {
    let z = code.modulus();
    let m = z.exponent();
    let mut tally = Tally::empty();
    for row in code.rows() {
        for j in 0..m {
            let c = W::one() << j as usize;
            let word: Vec<W> = row.iter().map(|&g| z.mul(g, c)).collect();
            tally.record(&word, &z);
        }
    }
    let enumerator = Enumerator::new(code);
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let n = code.len();
    for _ in 0..budget {
        let mut word = vec![W::zero(); n];
        for (row, &r) in code.rows().iter().zip(&enumerator.radices) {
            let c = z.from_u64(rng.gen_range(0..r));
            for (w, &g) in word.iter_mut().zip(row) {
                *w = z.add(*w, z.mul(c, g));
            }
        }
        tally.record(&word, &z);
    }
    tally
}
