//! The four codes `Q, Q', N, N'` and their structural clauses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lincode::LinearCode;
use crate::modring::{family_params, FamilyParams, Modulus};
use crate::polyring::{binary_qr_factors, hensel_lift_factors, ZPoly};
use crate::word::Word;

use super::idempotent::{solve_idempotent_system, swap_conjugate, IdempotentCoeffs};
use super::{basis_vectors, Basis};

/// Sub-case of the family definition.
///
/// | tag | `p (mod 2^m)` | `p^2 (mod 2^m)` | `beta + gamma` |
/// |-----|---------------|-----------------|----------------|
/// | C11 | `8k - 1`      | `-1`            | `p`            |
/// | C12 | `8k - 1`      | `1`             | `-p`           |
/// | C21 | `-(8k - 1)`   | `1`             | `-p`           |
/// | C22 | `-(8k - 1)`   | `-1`            | `p`            |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    C11,
    C12,
    C21,
    C22,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [CaseTag::C11, CaseTag::C12, CaseTag::C21, CaseTag::C22];

    pub fn sign(&self) -> i8 {
        match self {
            CaseTag::C11 | CaseTag::C12 => 1,
            CaseTag::C21 | CaseTag::C22 => -1,
        }
    }

    /// `+1` when the case needs `p^2 = 1`, `-1` when it needs `p^2 = -1`.
    pub fn square_sign(&self) -> i8 {
        match self {
            CaseTag::C12 | CaseTag::C21 => 1,
            CaseTag::C11 | CaseTag::C22 => -1,
        }
    }

    /// `+1` when the case needs `beta + gamma = p`, `-1` for `-p`.
    pub fn trace_sign(&self) -> i8 {
        -self.square_sign()
    }

    /// Multiple of `(8k - 1) h` added to `alpha + beta e1 + gamma e2` for
    /// the unprimed and primed codes.
    fn shifts(&self) -> (i64, i64) {
        match self {
            CaseTag::C11 => (-1, 0),
            CaseTag::C12 => (0, 1),
            CaseTag::C21 => (0, -1),
            CaseTag::C22 => (1, 0),
        }
    }

    /// True when the unprimed codes are stated to be the larger pair.
    pub fn unprimed_is_larger(&self) -> bool {
        matches!(self, CaseTag::C11 | CaseTag::C21)
    }

    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::C11 => "C11",
            CaseTag::C12 => "C12",
            CaseTag::C21 => "C21",
            CaseTag::C22 => "C22",
        }
    }

    /// Whether the congruence side conditions hold for `(p, m)` and some
    /// trace sum, ignoring the solution set.
    pub fn side_conditions(&self, params: &FamilyParams, trace_sum: u64) -> bool {
        let z = Modulus::<u64>::new(params.m).expect("validated exponent");
        let p = z.from_u64(params.p);
        let square = z.mul(p, p);
        let square_ok = if self.square_sign() == 1 {
            square == 1
        } else {
            square == z.neg(1)
        };
        let trace_ok = if self.trace_sign() == 1 {
            trace_sum == p
        } else {
            trace_sum == z.neg(p)
        };
        self.sign() == params.sign && square_ok && trace_ok
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeName {
    Q,
    QPrime,
    N,
    NPrime,
}

impl CodeName {
    pub const ALL: [CodeName; 4] = [CodeName::Q, CodeName::QPrime, CodeName::N, CodeName::NPrime];

    pub fn name(&self) -> &'static str {
        match self {
            CodeName::Q => "q",
            CodeName::QPrime => "qprime",
            CodeName::N => "n",
            CodeName::NPrime => "nprime",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyIdempotents<W: Word> {
    pub q: ZPoly<W>,
    pub q_prime: ZPoly<W>,
    pub n: ZPoly<W>,
    pub n_prime: ZPoly<W>,
}

/// One structural claim about a family, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseCheck {
    pub clause: u8,
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct QrFamily<W: Word> {
    pub params: FamilyParams,
    pub case_tag: CaseTag,
    /// Q-side coefficients; the N side uses the swapped triple.
    pub coeffs: IdempotentCoeffs,
    pub idempotents: FamilyIdempotents<W>,
    pub q: LinearCode<W>,
    pub q_prime: LinearCode<W>,
    pub n: LinearCode<W>,
    pub n_prime: LinearCode<W>,
    /// The ideal of the lifted residue-side generator lies in the larger
    /// of `Q`, `Q'`.
    pub contains_lifted_generator: bool,
}

fn shifted<W: Word>(basis: &Basis<W>, c: &IdempotentCoeffs, mult: i64) -> ZPoly<W> {
    let e = basis.combine(c.alpha, c.beta, c.gamma);
    &e + &basis.h.scale_i64(mult)
}

/// Builds the family for `(p, m)`.
///
/// The Q-side triple is the smallest whose larger code contains the ideal
/// of the Hensel-lifted residue-side factor. If none does, the smallest
/// admissible triple is used and `contains_lifted_generator` is false.
pub fn build_family<W: Word>(p: u64, m: u32) -> Result<QrFamily<W>> {
    let params = family_params(p, m)?;
    let solutions = solve_idempotent_system(p, m)?;
    let applicable: Vec<CaseTag> = CaseTag::ALL
        .into_iter()
        .filter(|t| {
            solutions
                .iter()
                .any(|s| t.side_conditions(&params, s.trace_sum()))
        })
        .collect();
    let case_tag = match applicable.as_slice() {
        [] => return Err(Error::NoCaseApplies { p, m }),
        [t] => *t,
        _ => return Err(Error::AmbiguousCase { p, m }),
    };
    let candidates: Vec<IdempotentCoeffs> = solutions
        .into_iter()
        .filter(|s| case_tag.side_conditions(&params, s.trace_sum()))
        .collect();

    let basis = basis_vectors::<W>(p, m)?;
    let lifted = hensel_lift_factors(&binary_qr_factors::<W>(p)?, m)?.f_q_ring();
    let c = params.shift_constant() as i64;
    let (s_plain, s_prime) = case_tag.shifts();
    let build = |coeffs: &IdempotentCoeffs| {
        let swapped = swap_conjugate(coeffs);
        let idempotents = FamilyIdempotents {
            q: shifted(&basis, coeffs, s_plain * c),
            q_prime: shifted(&basis, coeffs, s_prime * c),
            n: shifted(&basis, &swapped, s_plain * c),
            n_prime: shifted(&basis, &swapped, s_prime * c),
        };
        let q = LinearCode::from_polynomial(&idempotents.q);
        let q_prime = LinearCode::from_polynomial(&idempotents.q_prime);
        let larger = if q.cardinality_log2() >= q_prime.cardinality_log2() {
            &q
        } else {
            &q_prime
        };
        let contains = larger.contains_poly(&lifted);
        (idempotents, q, q_prime, contains)
    };

    let mut chosen = None;
    for coeffs in &candidates {
        let built = build(coeffs);
        if built.3 {
            chosen = Some((*coeffs, built));
            break;
        }
    }
    let (coeffs, (idempotents, q, q_prime, contains)) = match chosen {
        Some(x) => x,
        None => (candidates[0], build(&candidates[0])),
    };
    let n = LinearCode::from_polynomial(&idempotents.n);
    let n_prime = LinearCode::from_polynomial(&idempotents.n_prime);
    Ok(QrFamily {
        params,
        case_tag,
        coeffs,
        idempotents,
        q,
        q_prime,
        n,
        n_prime,
        contains_lifted_generator: contains,
    })
}

impl<W: Word> QrFamily<W> {
    pub fn code(&self, name: CodeName) -> &LinearCode<W> {
        match name {
            CodeName::Q => &self.q,
            CodeName::QPrime => &self.q_prime,
            CodeName::N => &self.n,
            CodeName::NPrime => &self.n_prime,
        }
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn m(&self) -> u32 {
        self.params.m
    }

    /// The ideal `((8k - 1) h)`.
    pub fn shift_ideal(&self) -> LinearCode<W> {
        let basis = basis_vectors::<W>(self.p(), self.m()).expect("validated family");
        LinearCode::from_polynomial(&basis.h.scale_i64(self.params.shift_constant() as i64))
    }

    /// The six structural clauses stated for the family's case, in the
    /// case's own naming: the "large" pair has size `2^(m(p+1)/2)`, the
    /// "small" pair `2^(m(p-1)/2)`.
    pub fn clauses(&self) -> Vec<ClauseCheck> {
        let (large_q, small_q, large_n, small_n, large_names, small_names) =
            if self.case_tag.unprimed_is_larger() {
                (
                    &self.q,
                    &self.q_prime,
                    &self.n,
                    &self.n_prime,
                    ("Q", "N"),
                    ("Q'", "N'"),
                )
            } else {
                (
                    &self.q_prime,
                    &self.q,
                    &self.n_prime,
                    &self.n,
                    ("Q'", "N'"),
                    ("Q", "N"),
                )
            };
        let (lq, ln) = large_names;
        let (sq, sn) = small_names;
        let p = self.p();
        let m = u64::from(self.m());
        let big = m * (p + 1) / 2;
        let small = m * (p - 1) / 2;
        let shift = self.shift_ideal();
        let full = LinearCode::full(p as usize, self.q.modulus());
        let mut out = Vec::new();
        let mut push = |clause: u8, name: String, holds: bool, detail: String| {
            out.push(ClauseCheck {
                clause,
                name,
                holds,
                detail,
            });
        };

        let eq_small = small_q.equivalent_under_mu(small_n);
        push(
            1,
            format!("{sq} ~ {sn}"),
            eq_small.is_some(),
            format!("multiplier {eq_small:?}"),
        );
        let eq_large = large_q.equivalent_under_mu(large_n);
        push(
            1,
            format!("{lq} ~ {ln}"),
            eq_large.is_some(),
            format!("multiplier {eq_large:?}"),
        );

        let meet = large_q.intersect(large_n).expect("same shape");
        push(
            2,
            format!("{lq} meet {ln} = ((8k-1)h)"),
            meet == shift,
            format!(
                "log2 {} vs {}",
                meet.cardinality_log2(),
                shift.cardinality_log2()
            ),
        );
        let join = large_q.sum(large_n).expect("same shape");
        push(
            2,
            format!("{lq} + {ln} = R_p"),
            join == full,
            format!("log2 {} vs {}", join.cardinality_log2(), p * m),
        );

        for (name, code) in [(lq, large_q), (ln, large_n)] {
            let log = code.cardinality_log2();
            push(
                3,
                format!("log2|{name}| = {big}"),
                log == big,
                format!("log2 {log}"),
            );
        }

        for (large, small, lname, sname) in [(large_q, small_q, lq, sq), (large_n, small_n, ln, sn)]
        {
            let s = small.sum(&shift).expect("same shape");
            push(
                4,
                format!("{lname} = {sname} + ((8k-1)h)"),
                s == *large,
                format!(
                    "log2 {} vs {}",
                    s.cardinality_log2(),
                    large.cardinality_log2()
                ),
            );
        }

        for (name, code) in [(sq, small_q), (sn, small_n)] {
            let log = code.cardinality_log2();
            push(
                5,
                format!("log2|{name}| = {small}"),
                log == small,
                format!("log2 {log}"),
            );
        }

        for (name, code) in [(sq, small_q), (sn, small_n)] {
            push(
                6,
                format!("{name} self-orthogonal"),
                code.is_self_orthogonal(),
                String::new(),
            );
        }
        for (large, small, lname, sname) in [(large_q, small_q, lq, sq), (large_n, small_n, ln, sn)]
        {
            let d = large.dual();
            push(
                6,
                format!("dual({lname}) = {sname}"),
                d == *small,
                format!(
                    "log2 {} vs {}",
                    d.cardinality_log2(),
                    small.cardinality_log2()
                ),
            );
        }
        out
    }
}
