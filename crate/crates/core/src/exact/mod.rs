//! Exact arithmetic: rationals, polynomials and linear algebra over `Q`.

mod matrix;
mod multipoly;
mod sparse;
mod unipoly;

pub use matrix::{poly_det, RatMatrix, Rref};
pub use multipoly::{monomials_of_degree, Monomial, MonomialBasis, MultiPoly};
pub use sparse::{Echelon, SparseRow};
pub use unipoly::{IntegerRoots, UniPoly};

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3/2"` or `"−3/2"` (unicode minus) into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let cleaned: String = s
        .trim()
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .filter(|c| !c.is_whitespace())
        .collect();
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n, d),
        None => (cleaned.as_str(), "1"),
    };
    let num = BigInt::from_str(num.strip_prefix('+').unwrap_or(num)).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    use alloc::string::ToString;
    if r.is_integer() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a rational vector to a primitive integer vector (content 1).
///
/// The sign is preserved, so `v` and the result are positive multiples of each other.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Like [`primitive_integer_vector`] but with the first nonzero entry positive.
pub fn normalized_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let mut ints = primitive_integer_vector(v);
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut ints {
            *x = -&*x;
        }
    }
    ints
}

/// Returns `Some(c)` with `a = c * b` when the two vectors are proportional.
pub fn proportionality(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    if a.len() != b.len() {
        return None;
    }
    let pos = b.iter().position(|x| !x.is_zero())?;
    let c = &a[pos] / &b[pos];
    if c.is_zero() {
        return None;
    }
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("\u{2212}3/2"), Some(ratio(-3, 2)));
        assert_eq!(parse_rational(" 4/6 "), Some(ratio(2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
    }

    #[test]
    fn primitive_vectors() {
        let v = [ratio(1, 2), ratio(-3, 4), rat(0)];
        let p = primitive_integer_vector(&v);
        assert_eq!(p, [BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        let n = normalized_integer_vector(&[rat(-2), rat(4)]);
        assert_eq!(n, [BigInt::from(1), BigInt::from(-2)]);
    }

    #[test]
    fn proportional_vectors() {
        assert_eq!(proportionality(&[rat(2), rat(-4)], &[rat(1), rat(-2)]), Some(rat(2)));
        assert_eq!(proportionality(&[rat(2), rat(4)], &[rat(1), rat(-2)]), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 2), 55);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(2, 3), 0);
    }
}
