//! The residue-support vectors `e1`, `e2`, `h`, their product identities,
//! idempotents in their span, and the four-code families built from them.

mod family;
mod idempotent;

use serde::Serialize;

use crate::error::Result;
use crate::modring::{quad_partition, LemmaClass, Modulus};
use crate::polyring::ZPoly;
use crate::word::Word;

pub use family::{build_family, CaseTag, ClauseCheck, CodeName, FamilyIdempotents, QrFamily};
pub use idempotent::{
    shift_by_h, solve_by_lifting, solve_exhaustive, solve_idempotent_system, swap_conjugate,
    IdempotentCoeffs, EXHAUSTIVE_MAX_M,
};

/// `e1` (support on residues), `e2` (support on nonresidues) and the
/// all-ones `h = 1 + e1 + e2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis<W: Word> {
    pub e1: ZPoly<W>,
    pub e2: ZPoly<W>,
    pub h: ZPoly<W>,
}

impl<W: Word> Basis<W> {
    /// `a + b e1 + c e2`.
    pub fn combine(&self, a: u64, b: u64, c: u64) -> ZPoly<W> {
        let z = self.e1.modulus();
        let mut f = &self.e1.scale(z.from_u64(b)) + &self.e2.scale(z.from_u64(c));
        f = &f + &ZPoly::constant(f.len(), z, z.from_u64(a));
        f
    }
}

pub fn basis_vectors<W: Word>(p: u64, m: u32) -> Result<Basis<W>> {
    let part = quad_partition(p)?;
    let z = Modulus::new(m)?;
    let n = p as usize;
    let e1 = ZPoly::indicator(n, z, part.residues().iter().copied());
    let e2 = ZPoly::indicator(n, z, part.nonresidues().iter().copied());
    let h = ZPoly::from_u64s(z, &vec![1; n]);
    Ok(Basis { e1, e2, h })
}

/// One closed-form identity compared against exact convolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub formula: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub p: u64,
    pub m: u32,
    /// `k` with `p = 8k - 1` or `p = 8k + 1` over the integers.
    pub lemma_k: u64,
    pub p_mod_8: u64,
    pub checks: Vec<IdentityCheck>,
    /// Alternative forms that are known to disagree with convolution. Each
    /// entry records whether it held, which is expected to be false.
    pub printed_forms: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Convolves `e1^2`, `e2^2`, `e1 e2`, `h^2` and compares each with its
/// closed form in `1, e1, e2, h`.
pub fn product_identities_report(p: u64, m: u32) -> Result<IdentityReport> {
    let part = quad_partition(p)?;
    let b = basis_vectors::<u64>(p, m)?;
    let e11 = b.e1.square();
    let e22 = b.e2.square();
    let e12 = &b.e1 * &b.e2;
    let hh = b.h.square();
    let check =
        |name: &str, formula: String, actual: &ZPoly<u64>, (c0, c1, c2): (u64, u64, u64)| {
            IdentityCheck {
                name: name.into(),
                holds: *actual == b.combine(c0, c1, c2),
                formula,
            }
        };

    let (lemma_k, checks, printed_forms) = match part.lemma_class() {
        LemmaClass::MinusOne(k) => {
            let checks = vec![
                check(
                    "e1^2",
                    format!("{}e1+{}e2", 2 * k - 1, 2 * k),
                    &e11,
                    (0, 2 * k - 1, 2 * k),
                ),
                check(
                    "e2^2",
                    format!("{}e2+{}e1", 2 * k - 1, 2 * k),
                    &e22,
                    (0, 2 * k, 2 * k - 1),
                ),
                check(
                    "e1e2",
                    format!("{}(1+e1+e2)+{}", 2 * k - 1, 2 * k),
                    &e12,
                    (4 * k - 1, 2 * k - 1, 2 * k - 1),
                ),
            ];
            (k, checks, Vec::new())
        }
        LemmaClass::PlusOne(k) => {
            let checks = vec![
                check(
                    "e1^2",
                    format!("{}e1+{}e2+{}", 2 * k - 1, 2 * k, 4 * k),
                    &e11,
                    (4 * k, 2 * k - 1, 2 * k),
                ),
                check(
                    "e2^2",
                    format!("{}e2+{}e1+{}", 2 * k - 1, 2 * k, 4 * k),
                    &e22,
                    (4 * k, 2 * k, 2 * k - 1),
                ),
                check("e1e2", format!("{}(e1+e2)", 2 * k), &e12, (0, 2 * k, 2 * k)),
            ];
            let printed = vec![check(
                "e1e2",
                format!("{}(e1+e2)", 2 * k - 1),
                &e12,
                (0, 2 * k - 1, 2 * k - 1),
            )];
            (k, checks, printed)
        }
    };
    let mut checks = checks;
    checks.push(IdentityCheck {
        name: "h^2".into(),
        formula: format!("{p}h"),
        holds: hh == b.h.scale(b.h.modulus().from_u64(p)),
    });
    Ok(IdentityReport {
        p,
        m,
        lemma_k,
        p_mod_8: p % 8,
        checks,
        printed_forms,
    })
}
