//! Binary digit expansions modulo `2^m` of `p`, `-p`, `1/p` and `-1/p`,
//! produced by solving the defining linear congruence one digit at a time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modring::{Modulus, MAX_EXPONENT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `x - p = 0`
    P,
    /// `x + p = 0`
    NegP,
    /// `p x - 1 = 0`
    InvP,
    /// `p x + 1 = 0`
    NegInvP,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::P, Target::NegP, Target::InvP, Target::NegInvP];

    pub fn name(&self) -> &'static str {
        match self {
            Target::P => "p",
            Target::NegP => "neg_p",
            Target::InvP => "inv_p",
            Target::NegInvP => "neg_inv_p",
        }
    }

    /// `(a, b)` of the congruence `a x + b = 0`.
    fn equation(&self, p: u64) -> (i128, i128) {
        let p = p as i128;
        match self {
            Target::P => (1, -p),
            Target::NegP => (1, p),
            Target::InvP => (p, -1),
            Target::NegInvP => (p, 1),
        }
    }
}

/// Low-digit patterns of the expansions; the higher digits are free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Template {
    /// `1 + 2 + 4 + ...`
    Low111,
    /// `1 + 0 + 0 + ...`
    Low100,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicExpansion {
    pub m: u32,
    /// `digits[i]` multiplies `2^i`.
    pub digits: Vec<u8>,
    pub value: u64,
}

/// Solves the target congruence modulo `2^m` digit by digit.
///
/// With `x` known modulo `2^i`, the residual `a x + b` vanishes modulo `2^i`.
/// Bit `i` of the residual decides digit `i`: `a` is odd, so adding `2^i`
/// to `x` flips exactly that bit.
pub fn expand(target: Target, p: u64, m: u32) -> Result<PadicExpansion> {
    if m == 0 || m > MAX_EXPONENT {
        return Err(Error::BadExponent {
            m,
            max: MAX_EXPONENT,
        });
    }
    if p.is_multiple_of(2) {
        return Err(Error::BadResidueClass { p });
    }
    let (a, b) = target.equation(p);
    let mut x: i128 = 0;
    let mut digits = Vec::with_capacity(m as usize);
    for i in 0..m {
        let modulus = 1i128 << (i + 1);
        let residual = (a * x + b).rem_euclid(modulus);
        let digit = (residual >> i) & 1;
        x += digit << i;
        digits.push(digit as u8);
    }
    debug_assert_eq!((a * x + b).rem_euclid(1i128 << m), 0);
    Ok(PadicExpansion {
        m,
        digits,
        value: x as u64,
    })
}

/// Checks the low three digits against `template`.
pub fn matches_template(e: &PadicExpansion, template: Template) -> Result<bool> {
    if e.m < 4 {
        return Err(Error::TemplateNeedsM4(e.m));
    }
    let low: [u8; 3] = match template {
        Template::Low111 => [1, 1, 1],
        Template::Low100 => [1, 0, 0],
    };
    Ok(e.digits[..3] == low)
}

/// `p^2 = 1 (mod 2^m)`, i.e. `p = 1/p` as residues.
pub fn inverse_equals_self(p: u64, m: u32) -> bool {
    let z = Modulus::<u64>::new(m).expect("exponent in range");
    let p = z.from_u64(p);
    z.mul(p, p) == 1
}

/// All four expansions of `p` modulo `2^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionSet {
    pub p: PadicExpansion,
    pub neg_p: PadicExpansion,
    pub inv_p: PadicExpansion,
    pub neg_inv_p: PadicExpansion,
}

pub fn expand_all(p: u64, m: u32) -> Result<ExpansionSet> {
    Ok(ExpansionSet {
        p: expand(Target::P, p, m)?,
        neg_p: expand(Target::NegP, p, m)?,
        inv_p: expand(Target::InvP, p, m)?,
        neg_inv_p: expand(Target::NegInvP, p, m)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p7_m4() {
        let e = expand(Target::P, 7, 4).unwrap();
        assert_eq!(e.digits, vec![1, 1, 1, 0]);
        assert_eq!(e.value, 7);
        let e = expand(Target::InvP, 7, 4).unwrap();
        assert_eq!(e.digits, vec![1, 1, 1, 0]);
        let e = expand(Target::NegP, 7, 4).unwrap();
        assert_eq!(e.digits, vec![1, 0, 0, 1]);
        assert_eq!(e.value, 9);
    }

    #[test]
    fn neg_inv_p23_m5() {
        assert_eq!(expand(Target::NegInvP, 23, 5).unwrap().value, 25);
    }

    #[test]
    fn templates() {
        let p = expand(Target::P, 7, 4).unwrap();
        let neg = expand(Target::NegP, 7, 4).unwrap();
        assert!(matches_template(&p, Template::Low111).unwrap());
        assert!(matches_template(&neg, Template::Low100).unwrap());
        assert!(!matches_template(&p, Template::Low100).unwrap());
        let short = expand(Target::P, 7, 3).unwrap();
        assert_eq!(
            matches_template(&short, Template::Low111),
            Err(Error::TemplateNeedsM4(3))
        );
    }

    #[test]
    fn self_inverse_predicate() {
        assert!(inverse_equals_self(7, 4));
        assert!(!inverse_equals_self(23, 5));
        assert!(inverse_equals_self(17, 5));
    }

    #[test]
    fn even_p_rejected() {
        assert!(expand(Target::InvP, 8, 4).is_err());
    }
}
