use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Rational};
use crate::Error;

/// Univariate polynomial in `t`, dense coefficients from low to high degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

/// Integer roots (ascending, with multiplicity) and the cofactor left over,
/// so that `p = Π (t - r) * remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerRoots {
    pub roots: Vec<BigInt>,
    pub remainder: UniPoly,
}

impl IntegerRoots {
    pub fn splits(&self) -> bool {
        self.remainder.degree() == Some(0)
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    /// `t - r`
    pub fn linear_factor(r: &Rational) -> Self {
        UniPoly::new(vec![-r, Rational::one()])
    }

    /// `t^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        UniPoly { coeffs }
    }

    /// `Π (t - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(UniPoly::one(), |acc, r| &acc * &UniPoly::linear_factor(r))
    }

    pub fn from_integer_roots(roots: &[i64]) -> Self {
        let rs: Vec<Rational> = roots.iter().map(|&r| Rational::from_integer(r.into())).collect();
        UniPoly::from_roots(&rs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// The polynomial `t ↦ p(a + b t)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> UniPoly {
        let inner = UniPoly::new(vec![a.clone(), b.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| &(&acc * &inner) + &UniPoly::constant(c.clone()))
    }

    /// Division by a monic linear factor `t - r`; `None` unless exact.
    pub fn div_linear_factor(&self, r: &Rational) -> Option<UniPoly> {
        let n = self.coeffs.len();
        if n == 0 {
            return Some(UniPoly::zero());
        }
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return v.is_zero().then(|| UniPoly::new(q));
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Integer roots by a divisor scan over the constant term (rational root theorem).
    pub fn integer_roots(&self) -> Result<IntegerRoots, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rest = self.clone();
        let mut roots = Vec::new();
        let zero = Rational::zero();
        while rest.coeff(0).is_zero() && rest.degree().unwrap_or(0) > 0 {
            rest = rest.div_linear_factor(&zero).expect("t divides");
            roots.push(BigInt::zero());
        }
        if rest.degree().unwrap_or(0) > 0 {
            // Clear denominators so the constant term is an integer.
            let mut lcm = BigInt::one();
            for c in &rest.coeffs {
                lcm = lcm.lcm(c.denom());
            }
            let a0 = (rest.coeff(0) * Rational::from_integer(lcm)).to_integer().abs();
            let mut candidates = Vec::new();
            for d in divisors(&a0) {
                candidates.push(-d.clone());
                candidates.push(d);
            }
            candidates.sort();
            for c in candidates {
                let r = Rational::from_integer(c.clone());
                while rest.degree().unwrap_or(0) > 0 {
                    match rest.div_linear_factor(&r) {
                        Some(q) => {
                            rest = q;
                            roots.push(c.clone());
                        }
                        None => break,
                    }
                }
            }
        }
        roots.sort();
        Ok(IntegerRoots { roots, remainder: rest })
    }

    /// Human readable form: integer linear factors first, then the rest.
    ///
    /// `(t-1)(t-3)^2`, `(t-1)(t^2-7t+13)`, `2(t-1)`.
    pub fn factored_string(&self) -> String {
        let Ok(IntegerRoots { roots, remainder }) = self.integer_roots() else {
            return "0".into();
        };
        let mut s = String::new();
        let lead_only = remainder.degree() == Some(0);
        if lead_only {
            let c = remainder.coeff(0);
            if roots.is_empty() || !c.is_one() {
                if c == -Rational::one() && !roots.is_empty() {
                    s.push('-');
                } else {
                    s.push_str(&format_rational(&c));
                }
            }
        }
        let mut i = 0;
        while i < roots.len() {
            let r = &roots[i];
            let mut j = i;
            while j < roots.len() && roots[j] == *r {
                j += 1;
            }
            if r.is_zero() {
                s.push('t');
            } else if r.is_negative() {
                let _ = write!(s, "(t+{})", -r);
            } else {
                let _ = write!(s, "(t-{})", r);
            }
            if j - i > 1 {
                let _ = write!(s, "^{}", j - i);
            }
            i = j;
        }
        if !lead_only {
            let _ = write!(s, "({})", compact(&remainder));
        }
        s
    }
}

fn compact(p: &UniPoly) -> String {
    let mut s = String::new();
    for (k, i) in (0..p.coeffs.len()).rev().enumerate() {
        let c = &p.coeffs[i];
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let abs = c.abs();
        if !abs.is_one() || i == 0 {
            s.push_str(&format_rational(&abs));
        }
        match i {
            0 => {}
            1 => s.push('t'),
            _ => {
                let _ = write!(s, "t^{}", i);
            }
        }
    }
    s
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let limit = n.sqrt();
    let mut d = BigInt::one();
    while d <= limit {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, i) in (0..self.coeffs.len()).rev().enumerate() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if !abs.is_one() || i == 0 {
                f.write_str(&format_rational(&abs))?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}
