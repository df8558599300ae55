use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::Zero;

use super::system::{derivation_in_module, free_module_dim, Derivation, GradedDims};
use crate::arrangement::{Flat, Multiarrangement};
use crate::exact::{poly_det, Rational};
use crate::lattice::CharPoly;

/// Outcome of a freeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessCertificate {
    Free { exponents: Vec<u32>, evidence: Evidence },
    NonFree { witness: Witness },
    /// The search stopped at `cutoff` (or ran out of basis candidates)
    /// without a conclusion.
    Undetermined { cutoff: u32 },
}

/// Why a `Free` verdict holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Homogeneous elements of `D(A, m)` whose coefficient determinant is
    /// `det_scalar · Q(A, m)`.
    Saito(SaitoBasis),
    /// A rank three simple arrangement whose characteristic polynomial is
    /// `(t-1)(t-d1)(t-d2)`, with the restriction to `hyperplane` free with
    /// exponents `(d1, d2)`.
    Rank3Criterion { chi: CharPoly, hyperplane: usize, restriction_exponents: [u32; 2] },
    /// An extension whose multiarrangement restriction is free and all of
    /// whose proper localizations were found free.
    ExtensionRecursion { restriction: Box<FreenessCertificate>, localizations: usize },
    /// Rank at most one, where freeness is automatic.
    LowRank,
}

/// Checkable reason for a `NonFree` verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The dimensions of `D(A, m)_0 … D(A, m)_degree` agree with no free
    /// module of rank `ℓ` whose exponents sum to `|m|`.
    HilbertMismatch { degree: u32, dims: Vec<usize> },
    /// The characteristic polynomial has non-integer roots.
    NonFactoringChi { chi: CharPoly },
    /// `χ = (t-1)(t-d1)(t-d2)` but the restriction to `hyperplane` has other exponents.
    ExponentMismatch { chi: CharPoly, hyperplane: usize, restriction_exponents: [u32; 2] },
    /// A localization (hyperplane indices of the base arrangement) is not free.
    NonFreeLocalization { flat: Flat, inner: Box<FreenessCertificate> },
    /// The restriction of an extension to its new hyperplane is not free.
    NonFreeRestriction { inner: Box<FreenessCertificate> },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::HilbertMismatch { .. } => "hilbert_mismatch",
            Witness::NonFactoringChi { .. } => "non_factoring_chi",
            Witness::ExponentMismatch { .. } => "exponent_mismatch",
            Witness::NonFreeLocalization { .. } => "non_free_localization",
            Witness::NonFreeRestriction { .. } => "non_free_restriction",
        }
    }
}

impl Evidence {
    pub fn kind(&self) -> &'static str {
        match self {
            Evidence::Saito(_) => "saito",
            Evidence::Rank3Criterion { .. } => "rank3_criterion",
            Evidence::ExtensionRecursion { .. } => "extension_recursion",
            Evidence::LowRank => "low_rank",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaitoBasis {
    pub basis: Vec<Derivation>,
    pub det_scalar: Rational,
}

impl FreenessCertificate {
    pub fn is_free(&self) -> bool {
        matches!(self, FreenessCertificate::Free { .. })
    }

    pub fn is_non_free(&self) -> bool {
        matches!(self, FreenessCertificate::NonFree { .. })
    }

    pub fn exponents(&self) -> Option<&[u32]> {
        match self {
            FreenessCertificate::Free { exponents, .. } => Some(exponents),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            FreenessCertificate::NonFree { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn saito_basis(&self) -> Option<&SaitoBasis> {
        match self {
            FreenessCertificate::Free { evidence: Evidence::Saito(b), .. } => Some(b),
            _ => None,
        }
    }

    pub fn verdict_name(&self) -> &'static str {
        match self {
            FreenessCertificate::Free { .. } => "free",
            FreenessCertificate::NonFree { .. } => "non_free",
            FreenessCertificate::Undetermined { .. } => "undetermined",
        }
    }
}

/// Checks a Saito basis from scratch: every element lies in `D(A, m)` and the
/// determinant of the coefficient matrix, expanded as a polynomial, is a
/// nonzero multiple of `Q(A, m)`. Returns that multiple.
pub fn verify_saito(multi: &Multiarrangement, basis: &[Derivation]) -> Option<Rational> {
    if basis.len() != multi.dim() || !basis.iter().all(|th| derivation_in_module(multi, th)) {
        return None;
    }
    saito_scalar(multi, basis)
}

/// `c` with `det(θ_j(x_i)) = c · Q(A, m)`, if such a nonzero `c` exists.
pub(crate) fn saito_scalar(multi: &Multiarrangement, basis: &[Derivation]) -> Option<Rational> {
    let det = poly_det(basis);
    let q = multi.defining_polynomial();
    let (mono, lead) = det.leading_term()?;
    let qc = q.coeff(mono);
    if qc.is_zero() {
        return None;
    }
    let c = lead / &qc;
    (det == q.scale(&c)).then_some(c)
}

/// Every nondecreasing `ℓ`-tuple of nonnegative integers summing to `total`
/// disagrees with `dims` in some degree.
pub fn hilbert_mismatch_holds(ell: usize, total: u32, dims: &[usize]) -> bool {
    fn rec(ell: usize, left: u32, min: u32, acc: &mut Vec<u32>, dims: &[usize], found: &mut bool) {
        if *found {
            return;
        }
        if acc.len() == ell {
            if left == 0 {
                let agrees = dims
                    .iter()
                    .enumerate()
                    .all(|(d, &dim)| free_module_dim(ell, acc, d as u32) == dim);
                *found |= agrees;
            }
            return;
        }
        let slots = (ell - acc.len()) as u32;
        let mut e = min;
        while e * slots <= left {
            acc.push(e);
            rec(ell, left - e, e, acc, dims, found);
            acc.pop();
            e += 1;
        }
    }
    let mut found = false;
    rec(ell, total, 0, &mut Vec::new(), dims, &mut found);
    !found
}

/// Recomputes the dimensions named by a Hilbert mismatch witness and
/// confirms that no exponent tuple fits them.
pub fn verify_hilbert_mismatch(multi: &Multiarrangement, witness: &Witness) -> bool {
    let Witness::HilbertMismatch { degree, dims } = witness else { return false };
    GradedDims::compute(multi, *degree).dims == *dims
        && hilbert_mismatch_holds(multi.dim(), multi.total(), dims)
}
