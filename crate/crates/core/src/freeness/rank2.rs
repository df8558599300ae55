//! Closed forms for `x^a y^b (x+y)^c` and exponents of rank two multiarrangements.

use alloc::vec::Vec;

use crate::arrangement::Multiarrangement;
use crate::exact::{Rational, UniPoly};
use crate::lattice::CharPoly;
use crate::{Error, Result};

use super::{is_free_multi, FreenessCertificate};

fn sorted(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// Exponents of `x^a y^b (x+y)^c`, listed in the order of the closed form.
pub fn wakamiko_exponents(a: u32, b: u32, c: u32) -> (u32, u32) {
    let (a, b) = sorted(a, b);
    let k = a + b + c;
    if c < b - a + 1 {
        (b, a + c)
    } else if c > a + b {
        (c, a + b)
    } else {
        (k / 2, k.div_ceil(2))
    }
}

/// `χ(E(x^a y^b (x+y)^c), t)` in three variables.
pub fn rank2_extension_charpoly(a: u32, b: u32, c: u32) -> CharPoly {
    let (a, b) = sorted(a, b);
    let k = i64::from(a + b + c);
    let t_minus_1 = UniPoly::from_integer_roots(&[1]);
    let rest = if c < b - a + 1 {
        UniPoly::from_integer_roots(&[i64::from(b), i64::from(a + c)])
    } else if c > a + b {
        UniPoly::from_integer_roots(&[i64::from(a + b), i64::from(c)])
    } else if a % 2 == 0 && b % 2 == 0 && c % 2 == 1 {
        // (t - k/2)^2 + 3/4 = t^2 - k t + (k^2 + 3)/4
        UniPoly::new(Vec::from([
            Rational::new((k * k + 3).into(), 4.into()),
            Rational::from_integer((-k).into()),
            Rational::from_integer(1.into()),
        ]))
    } else {
        UniPoly::from_integer_roots(&[k / 2, (k + 1) / 2])
    };
    CharPoly::new(3, &t_minus_1 * &rest)
}

/// The exponents `(e1, e2)`, ascending, of a multiarrangement of rank two,
/// computed from the graded pieces of `D(A, m)` and certified by a Saito basis.
pub fn rank2_exponents(multi: &Multiarrangement) -> Result<[u32; 2]> {
    let rank = multi.base().rank();
    if rank != 2 {
        return Err(Error::WrongRank { expected: 2, found: rank });
    }
    let ess = multi.essentialize()?;
    match is_free_multi(&ess) {
        FreenessCertificate::Free { exponents, .. } => Ok([exponents[0], exponents[1]]),
        other => Err(Error::Precondition(alloc::format!(
            "rank two multiarrangement reported {}",
            other.verdict_name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;

    fn xy_sum(a: u32, b: u32, c: u32) -> Multiarrangement {
        Multiarrangement::new(
            Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap(),
            Vec::from([a, b, c]),
        )
        .unwrap()
    }

    #[test]
    fn closed_form_cases() {
        assert_eq!(wakamiko_exponents(1, 3, 1), (3, 2));
        assert_eq!(wakamiko_exponents(2, 2, 5), (5, 4));
        assert_eq!(wakamiko_exponents(3, 3, 3), (4, 5));
        assert_eq!(wakamiko_exponents(3, 1, 1), (3, 2));
    }

    #[test]
    fn closed_form_charpolys() {
        assert_eq!(rank2_extension_charpoly(1, 3, 1).into_poly(), UniPoly::from_integer_roots(&[1, 3, 2]));
        let p = rank2_extension_charpoly(2, 2, 3).into_poly();
        assert_eq!(p, &UniPoly::from_integer_roots(&[1]) * &UniPoly::from_ints(&[13, -7, 1]));
        let p = rank2_extension_charpoly(4, 4, 5).into_poly();
        assert_eq!(p, &UniPoly::from_integer_roots(&[1]) * &UniPoly::from_ints(&[43, -13, 1]));
    }

    #[test]
    fn exponents_from_modules() {
        assert_eq!(rank2_exponents(&xy_sum(1, 1, 0)).unwrap(), [1, 1]);
        assert_eq!(rank2_exponents(&xy_sum(2, 2, 3)).unwrap(), [3, 4]);
        assert_eq!(rank2_exponents(&xy_sum(0, 0, 0)).unwrap(), [0, 0]);
        let r3 = Multiarrangement::simple(
            Arrangement::from_int_normals(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(rank2_exponents(&r3), Err(Error::WrongRank { .. })));
    }
}
