//! Howell normal form over `Z_{2^m}`.

use crate::modring::Modulus;
use crate::word::Word;

/// A row of the normal form together with its pivot column and pivot power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PivotRow<W: Word> {
    pub col: usize,
    pub shift: u32,
    pub row: Vec<W>,
}

fn is_zero<W: Word>(row: &[W]) -> bool {
    row.iter().all(|c| c.is_zero())
}

/// `row -= c * other`, entrywise modulo `2^m`.
fn axpy<W: Word>(row: &mut [W], c: W, other: &[W], z: &Modulus<W>) {
    if c.is_zero() {
        return;
    }
    for (a, &b) in row.iter_mut().zip(other) {
        *a = z.sub(*a, z.mul(c, b));
    }
}

/// Row-reduces `rows` into Howell form.
///
/// Invariants of the output, in order of rows:
/// - pivot columns strictly increase and each pivot entry is `2^shift`;
/// - every entry above a pivot lies in `[0, 2^shift)`;
/// - for each column `c`, the rows with pivot at `c` or later span every
///   element of the module whose first `c` entries vanish.
///
/// The last property makes the form unique for a given module.
pub(crate) fn howell_form<W: Word>(rows: &[Vec<W>], n: usize, z: &Modulus<W>) -> Vec<PivotRow<W>> {
    let m = z.exponent();
    let mut work: Vec<Vec<W>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), n);
            r.iter().map(|&c| z.reduce(c)).collect::<Vec<W>>()
        })
        .filter(|r| !is_zero(r))
        .collect();
    let mut out: Vec<PivotRow<W>> = Vec::new();

    for col in 0..n {
        let Some((idx, shift)) = work
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .map(|(i, r)| (i, z.valuation(r[col])))
            .min_by_key(|&(i, v)| (v, i))
        else {
            continue;
        };
        let mut pivot = work.swap_remove(idx);
        let (_, unit) = z.split_unit(pivot[col]).expect("nonzero pivot");
        let unit_inv = z.inv(unit).expect("odd part is a unit");
        for c in pivot.iter_mut() {
            *c = z.mul(*c, unit_inv);
        }
        for r in work.iter_mut() {
            if !r[col].is_zero() {
                let factor = r[col] >> shift as usize;
                axpy(r, factor, &pivot, z);
            }
        }
        if shift > 0 {
            let annihilated: Vec<W> = pivot
                .iter()
                .map(|&c| z.mul(c, W::one() << (m - shift) as usize))
                .collect();
            if !is_zero(&annihilated) {
                work.push(annihilated);
            }
        }
        work.retain(|r| !is_zero(r));
        out.push(PivotRow {
            col,
            shift,
            row: pivot,
        });
    }
    debug_assert!(work.is_empty());

    for r in 0..out.len() {
        let (upper, lower) = out.split_at_mut(r);
        let pivot = &lower[0];
        for above in upper.iter_mut() {
            let entry = above.row[pivot.col];
            let factor = entry >> pivot.shift as usize;
            axpy(&mut above.row, factor, &pivot.row, z);
        }
    }
    out
}

/// Reduces `v` against a Howell form. Returns the residue, which is zero
/// exactly when `v` lies in the span.
pub(crate) fn reduce_against<W: Word>(form: &[PivotRow<W>], v: &[W], z: &Modulus<W>) -> Vec<W> {
    let mut v: Vec<W> = v.iter().map(|&c| z.reduce(c)).collect();
    for p in form {
        let entry = v[p.col];
        if entry.is_zero() {
            continue;
        }
        if z.valuation(entry) < p.shift {
            return v;
        }
        axpy(&mut v, entry >> p.shift as usize, &p.row, z);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32) -> Modulus<u64> {
        Modulus::new(m).unwrap()
    }

    fn rows(form: &[PivotRow<u64>]) -> Vec<Vec<u64>> {
        form.iter().map(|p| p.row.clone()).collect()
    }

    #[test]
    fn identity_is_fixed() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(rows(&howell_form(&id, 3, &z(4))), id);
    }

    #[test]
    fn duplicate_row_collapses() {
        let form = howell_form(&[vec![3, 1, 2], vec![6, 2, 4]], 3, &z(4));
        assert_eq!(form.len(), 1);
        assert_eq!(form[0].shift, 0);
        assert_eq!(form[0].row[0], 1);
    }

    #[test]
    fn annihilator_row_is_added() {
        // (2, 1) over Z_4: 2 * (2, 1) = (0, 2) must appear as its own row.
        let form = howell_form(&[vec![2, 1]], 2, &z(2));
        assert_eq!(rows(&form), vec![vec![2, 1], vec![0, 2]]);
    }

    #[test]
    fn membership() {
        let zz = z(3);
        let form = howell_form(&[vec![2, 4, 6], vec![0, 1, 3]], 3, &zz);
        assert!(is_zero(&reduce_against(&form, &[4, 0, 4], &zz)));
        assert!(!is_zero(&reduce_against(&form, &[1, 0, 0], &zz)));
    }
}
