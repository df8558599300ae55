//! Root systems of types A and D, extended Shi and Catalan arrangements,
//! and the free interpolations between them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arrangement::{Arrangement, Multiarrangement};
use crate::exact::{rat, Rational, UniPoly};
use crate::freeness::{extension_free, is_free_multi, FreenessCertificate};
use crate::lattice::char_poly;
use crate::structure::{decone_extension, extend, zero_one_parity_condition, PositiveSystem};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    A,
    D,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::A => "A",
            RootKind::D => "D",
        })
    }
}

/// Largest rank accepted by [`root_system`].
pub const MAX_RANK: usize = 4;

/// Positive roots of an irreducible root system in essential coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    roots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `h = 2 |Φ⁺| / ℓ`.
    pub fn coxeter_number(&self) -> u32 {
        (2 * self.roots.len() / self.rank) as u32
    }

    /// The root hyperplanes in the order of [`RootSystem::positive_roots`].
    pub fn arrangement(&self) -> Arrangement {
        let refs: Vec<&[i64]> = self.roots.iter().map(Vec::as_slice).collect();
        Arrangement::from_int_normals(self.rank, &refs).expect("roots are nonzero and distinct")
    }

    /// The positive roots as a positive system.
    pub fn positive_system(&self) -> PositiveSystem {
        PositiveSystem::identity(&self.arrangement()).expect("positive roots form a positive system")
    }
}

/// `A_n` from the roots `x_i - x_j` (`i < j <= n + 1`) with `x_{n+1} = 0`;
/// `D_n` from `x_i - x_j` and `x_i + x_j`. Roots are listed pair by pair.
pub fn root_system(kind: RootKind, rank: usize) -> Result<RootSystem> {
    let min = match kind {
        RootKind::A => 2,
        RootKind::D => 4,
    };
    if rank < min || rank > MAX_RANK {
        return Err(Error::UnsupportedRootSystem(format!(
            "{kind}{rank}: supported ranks are {min}..={MAX_RANK}"
        )));
    }
    let mut roots = Vec::new();
    match kind {
        RootKind::A => {
            for i in 0..=rank {
                for j in i + 1..=rank {
                    let mut r = alloc::vec![0i64; rank];
                    r[i] = 1;
                    if j < rank {
                        r[j] = -1;
                    }
                    roots.push(r);
                }
            }
        }
        RootKind::D => {
            for i in 0..rank {
                for j in i + 1..rank {
                    for s in [-1, 1] {
                        let mut r = alloc::vec![0i64; rank];
                        r[i] = 1;
                        r[j] = s;
                        roots.push(r);
                    }
                }
            }
        }
    }
    Ok(RootSystem { kind, rank, roots })
}

/// Parses labels such as `A3` or `d4`.
pub fn parse_root_system(label: &str) -> Result<RootSystem> {
    let label = label.trim();
    let bad = || Error::UnsupportedRootSystem(String::from(label));
    let mut chars = label.chars();
    let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => RootKind::A,
        Some('D') => RootKind::D,
        _ => return Err(bad()),
    };
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    root_system(kind, rank)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `E(A, 2k)`
    Shi,
    /// `E(A, 2k + 1)`
    Catalan,
}

/// The extended Shi or Catalan arrangement of level `k`.
pub fn shi_catalan(r: &RootSystem, k: u32, parity: Parity) -> Result<Arrangement> {
    if k == 0 {
        return Err(Error::Precondition(String::from("level k must be positive")));
    }
    let m = match parity {
        Parity::Shi => 2 * k,
        Parity::Catalan => 2 * k + 1,
    };
    extend(&r.positive_system(), &alloc::vec![m; r.len()])
}

fn shifted(m: &[u32], k: u32, plus: bool) -> Vec<u32> {
    m.iter().map(|&v| if plus { 2 * k + v } else { 2 * k - v }).collect()
}

fn check_zero_one(r: &RootSystem, m: &[u32], k: u32) -> Result<()> {
    if m.len() != r.len() {
        return Err(Error::MultiplicityLength { expected: r.len(), found: m.len() });
    }
    if m.iter().any(|&v| v > 1) {
        return Err(Error::Precondition(String::from("multiplicity must be 0 or 1")));
    }
    if k == 0 {
        return Err(Error::Precondition(String::from("level k must be positive")));
    }
    Ok(())
}

/// `(1, kh + e_1, …, kh + e_ℓ)` or the minus version, ascending.
pub fn predicted_extension_exponents(h: u32, k: u32, e: &[u32], plus: bool) -> Vec<u32> {
    let kh = k * h;
    let mut out: Vec<u32> = core::iter::once(1)
        .chain(e.iter().map(|&ei| if plus { kh + ei } else { kh - ei }))
        .collect();
    out.sort_unstable();
    out
}

/// Everything computed for one `{0,1}`-valued multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationRecord {
    pub m: Vec<u32>,
    /// Freeness of `(A, m)`, i.e. of the subarrangement `m⁻¹(1)` in `V`.
    pub subarrangement: FreenessCertificate,
    pub parity_condition: bool,
    pub plus_side: FreenessCertificate,
    pub minus_side: FreenessCertificate,
    /// Predicted exponents of `E(A, 2k ± m)` when `m` qualifies.
    pub predicted_plus: Option<Vec<u32>>,
    pub predicted_minus: Option<Vec<u32>>,
    pub functional_equation: bool,
    /// Whether both deconed characteristic polynomials have the predicted
    /// roots; only evaluated for qualifying `m`.
    pub predicted_chi: Option<bool>,
}

impl InterpolationRecord {
    /// The subarrangement is free and the parity condition holds.
    pub fn qualifies(&self) -> bool {
        self.subarrangement.is_free() && self.parity_condition
    }

    pub fn subarrangement_exponents(&self) -> Option<&[u32]> {
        self.subarrangement.exponents()
    }

    /// The equivalence of the three conditions for this `m`: a qualifying
    /// multiplicity has both extensions free with the predicted exponents,
    /// and any other has neither extension free.
    pub fn equivalence_holds(&self) -> bool {
        if self.qualifies() {
            self.plus_side.exponents() == self.predicted_plus.as_deref()
                && self.minus_side.exponents() == self.predicted_minus.as_deref()
        } else {
            self.plus_side.is_non_free() && self.minus_side.is_non_free()
        }
    }
}

/// Classifies one `{0,1}`-valued multiplicity at level `k`.
pub fn classify(r: &RootSystem, m: &[u32], k: u32) -> Result<InterpolationRecord> {
    check_zero_one(r, m, k)?;
    let ps = r.positive_system();
    let h = r.coxeter_number();
    let subarrangement = is_free_multi(&Multiarrangement::new(r.arrangement(), m.to_vec())?);
    let parity_ok = zero_one_parity_condition(&ps, m)?;
    let plus_side = extension_free(&ps, &shifted(m, k, true))?;
    let minus_side = extension_free(&ps, &shifted(m, k, false))?;
    let e = subarrangement.exponents().filter(|_| parity_ok).map(<[u32]>::to_vec);
    let predicted_plus = e.as_ref().map(|e| predicted_extension_exponents(h, k, e, true));
    let predicted_minus = e.as_ref().map(|e| predicted_extension_exponents(h, k, e, false));
    let functional_equation = functional_equation_check(r, m, k)?;
    let predicted_chi = match &e {
        Some(e) => Some(predicted_chi_with(r, m, k, e)?),
        None => None,
    };
    Ok(InterpolationRecord {
        m: m.to_vec(),
        subarrangement,
        parity_condition: parity_ok,
        plus_side,
        minus_side,
        predicted_plus,
        predicted_minus,
        functional_equation,
        predicted_chi,
    })
}

/// Number of `{0,1}`-valued multiplicities above which enumeration refuses.
pub const MAX_EXHAUSTIVE_ROOTS: usize = 6;

/// All `{0,1}`-valued multiplicities in lexicographic order.
pub fn zero_one_multiplicities(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0u64..(1u64 << n)).map(move |bits| (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u32).collect())
}

/// Records for every `{0,1}`-valued multiplicity, in lexicographic order.
pub fn classify_all(r: &RootSystem, k: u32) -> Result<Vec<InterpolationRecord>> {
    if r.len() > MAX_EXHAUSTIVE_ROOTS {
        return Err(Error::TooLarge(format!(
            "{} has {} positive roots; exhaustive enumeration is limited to {}",
            r.label(),
            r.len(),
            MAX_EXHAUSTIVE_ROOTS
        )));
    }
    zero_one_multiplicities(r.len()).map(|m| classify(r, &m, k)).collect()
}

/// A multiplicity whose shifted extensions are predicted to be free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpolation {
    pub m: Vec<u32>,
    /// Exponents of the subarrangement `m⁻¹(1)`.
    pub exponents: Vec<u32>,
    /// Predicted exponents of `E(A, 2k + m)` and `E(A, 2k - m)`.
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

/// The multiplicities with a free subarrangement and the parity condition.
pub fn enumerate_interpolations(r: &RootSystem, k: u32) -> Result<Vec<Interpolation>> {
    if r.len() > MAX_EXHAUSTIVE_ROOTS {
        return Err(Error::TooLarge(format!(
            "{} has {} positive roots; exhaustive enumeration is limited to {}",
            r.label(),
            r.len(),
            MAX_EXHAUSTIVE_ROOTS
        )));
    }
    if k == 0 {
        return Err(Error::Precondition(String::from("level k must be positive")));
    }
    let ps = r.positive_system();
    let h = r.coxeter_number();
    let mut out = Vec::new();
    for m in zero_one_multiplicities(r.len()) {
        if !zero_one_parity_condition(&ps, &m)? {
            continue;
        }
        if let FreenessCertificate::Free { exponents, .. } =
            is_free_multi(&Multiarrangement::new(r.arrangement(), m.clone())?)
        {
            let plus = predicted_extension_exponents(h, k, &exponents, true);
            let minus = predicted_extension_exponents(h, k, &exponents, false);
            out.push(Interpolation { m, exponents, plus, minus });
        }
    }
    Ok(out)
}

/// `(A, m)`, `(A, 2k + m)` and `(A, 2k - m)` are all free with exponents
/// `e`, `kh + e` and `kh - e`, or none of them is free.
pub fn check_shift_equivalence(r: &RootSystem, m: &[u32], k: u32) -> Result<bool> {
    check_zero_one(r, m, k)?;
    let a = r.arrangement();
    let h = r.coxeter_number();
    let base = is_free_multi(&Multiarrangement::new(a.clone(), m.to_vec())?);
    let plus = is_free_multi(&Multiarrangement::new(a.clone(), shifted(m, k, true))?);
    let minus = is_free_multi(&Multiarrangement::new(a, shifted(m, k, false))?);
    Ok(match base.exponents() {
        Some(e) => {
            let shift = |plus: bool| -> Vec<u32> {
                let mut v: Vec<u32> = e.iter().map(|&ei| if plus { k * h + ei } else { k * h - ei }).collect();
                v.sort_unstable();
                v
            };
            plus.exponents() == Some(&shift(true)[..]) && minus.exponents() == Some(&shift(false)[..])
        }
        None => base.is_non_free() && plus.is_non_free() && minus.is_non_free(),
    })
}

/// `χ(dE(A, 2k+m), t)` and `χ(dE(A, 2k-m), t)`.
pub fn deconed_char_polys(r: &RootSystem, m: &[u32], k: u32) -> Result<(UniPoly, UniPoly)> {
    check_zero_one(r, m, k)?;
    let ps = r.positive_system();
    let plus = char_poly(&decone_extension(&ps, &shifted(m, k, true))?).into_poly();
    let minus = char_poly(&decone_extension(&ps, &shifted(m, k, false))?).into_poly();
    Ok((plus, minus))
}

/// `χ(dE(A, 2k-m), t) = (-1)^ℓ χ(dE(A, 2k+m), 2kh - t)`.
pub fn functional_equation_check(r: &RootSystem, m: &[u32], k: u32) -> Result<bool> {
    let (plus, minus) = deconed_char_polys(r, m, k)?;
    let two_kh = Rational::from_integer((2 * k * r.coxeter_number()).into());
    let mut reflected = plus.compose_affine(&two_kh, &rat(-1));
    if r.rank() % 2 == 1 {
        reflected = -&reflected;
    }
    Ok(minus == reflected)
}

/// `χ(dE(A, 2k ± m), t) = Π (t - kh ∓ e_i)` with `e` the exponents of `(A, m)`.
pub fn predicted_chi_check(r: &RootSystem, m: &[u32], k: u32) -> Result<bool> {
    check_zero_one(r, m, k)?;
    let sub = is_free_multi(&Multiarrangement::new(r.arrangement(), m.to_vec())?);
    let Some(e) = sub.exponents() else {
        return Err(Error::Precondition(String::from("the subarrangement is not known to be free")));
    };
    predicted_chi_with(r, m, k, e)
}

fn predicted_chi_with(r: &RootSystem, m: &[u32], k: u32, e: &[u32]) -> Result<bool> {
    let (plus, minus) = deconed_char_polys(r, m, k)?;
    let kh = i64::from(k * r.coxeter_number());
    let roots = |sign: i64| -> Vec<i64> { e.iter().map(|&ei| kh + sign * i64::from(ei)).collect() };
    Ok(plus == UniPoly::from_integer_roots(&roots(1)) && minus == UniPoly::from_integer_roots(&roots(-1)))
}

/// Coxeter exponents from the classical formulas, ascending.
pub fn coxeter_exponents(r: &RootSystem) -> Vec<u32> {
    let n = r.rank() as u32;
    let mut e: Vec<u32> = match r.kind() {
        RootKind::A => (1..=n).collect(),
        RootKind::D => (0..n - 1).map(|i| 2 * i + 1).chain(core::iter::once(n - 1)).collect(),
    };
    e.sort_unstable();
    e
}
