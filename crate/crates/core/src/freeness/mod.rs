//! Freeness of multiarrangements and of extensions.

mod certificate;
mod extension;
mod rank2;
mod system;

pub use certificate::{
    hilbert_mismatch_holds, verify_hilbert_mismatch, verify_saito, Evidence, FreenessCertificate,
    SaitoBasis, Witness,
};
pub use extension::{extension_free, simple_rank3_free, totally_nonfree_scan, ScanReport};
pub use rank2::{rank2_extension_charpoly, rank2_exponents, wakamiko_exponents};
pub use system::{derivation_in_module, free_module_dim, graded_dim, Derivation, GradedDims};

use alloc::vec::Vec;

use num_traits::One;

use crate::arrangement::{Arrangement, Multiarrangement};
use crate::Result;
use certificate::saito_scalar;
use system::DegreeSystem;

/// Knobs for [`is_free_multi_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessOptions {
    /// Highest degree examined; `None` means `|m|`.
    pub cutoff: Option<u32>,
    /// Upper bound on the number of candidate bases whose determinant is tried.
    pub max_combinations: usize,
}

impl Default for FreenessOptions {
    fn default() -> Self {
        FreenessOptions { cutoff: None, max_combinations: 64 }
    }
}

pub fn is_free_multi(multi: &Multiarrangement) -> FreenessCertificate {
    is_free_multi_with(multi, &FreenessOptions::default())
}

/// Freeness of `(A, m)` from the graded pieces of `D(A, m)`.
///
/// Degrees are scanned upward. The exponents of a free module are read off
/// the dimensions one degree at a time; as soon as no exponent tuple fits,
/// the verdict is `NonFree` with the dimensions seen so far. At each degree
/// where new generators are expected, a complement of the products of the
/// earlier ones is extracted, and once `ℓ` of them are found the coefficient
/// determinant is compared with `Q(A, m)`.
pub fn is_free_multi_with(multi: &Multiarrangement, opts: &FreenessOptions) -> FreenessCertificate {
    let ell = multi.dim();
    let total = multi.total();
    if ell == 0 {
        return FreenessCertificate::Free {
            exponents: Vec::new(),
            evidence: Evidence::Saito(SaitoBasis { basis: Vec::new(), det_scalar: One::one() }),
        };
    }
    let cutoff = opts.cutoff.unwrap_or(total);
    let mut dims = Vec::new();
    let mut exponents: Vec<u32> = Vec::new();
    // Per generator degree: the candidates found and how many are needed.
    let mut stages: Vec<(u32, Vec<Derivation>, usize)> = Vec::new();
    let mut chosen: Vec<Derivation> = Vec::new();
    let mismatch = |d: u32, dims: &Vec<usize>| FreenessCertificate::NonFree {
        witness: Witness::HilbertMismatch { degree: d, dims: dims.clone() },
    };

    for d in 0..=cutoff {
        let sys = DegreeSystem::build(multi, d);
        let dim = sys.dim();
        dims.push(dim);
        let predicted = free_module_dim(ell, &exponents, d);
        if dim < predicted {
            return mismatch(d, &dims);
        }
        let new = dim - predicted;
        if exponents.len() + new > ell {
            return mismatch(d, &dims);
        }
        exponents.extend(core::iter::repeat_n(d, new));
        let sum: u32 = exponents.iter().sum();
        let remaining = (ell - exponents.len()) as u32;
        if sum + remaining * (d + 1) > total || (remaining == 0 && sum != total) {
            return mismatch(d, &dims);
        }
        if new > 0 {
            let products = products_of(&chosen, ell, d);
            let candidates = sys.complement(&products);
            chosen.extend(candidates.iter().take(new).cloned());
            stages.push((d, candidates, new));
        }
        if remaining == 0 {
            return saito_search(multi, &exponents, &stages, opts.max_combinations)
                .unwrap_or(FreenessCertificate::Undetermined { cutoff });
        }
    }
    FreenessCertificate::Undetermined { cutoff }
}

/// All products `μ · θ` with `θ` chosen and `μ` a monomial making the degree `d`.
fn products_of(chosen: &[Derivation], ell: usize, d: u32) -> Vec<Derivation> {
    let mut out = Vec::new();
    for theta in chosen {
        let e = theta.iter().find_map(|f| f.degree()).unwrap_or(0);
        if e > d {
            continue;
        }
        for mono in crate::exact::monomials_of_degree(ell, d - e) {
            out.push(theta.iter().map(|f| f.mul_monomial(&mono)).collect());
        }
    }
    out
}

/// Tries subsets of the candidates at each generator degree, first choices
/// first, until a determinant is a nonzero multiple of `Q(A, m)`.
fn saito_search(
    multi: &Multiarrangement,
    exponents: &[u32],
    stages: &[(u32, Vec<Derivation>, usize)],
    max_combinations: usize,
) -> Option<FreenessCertificate> {
    let per_stage: Vec<Vec<Vec<usize>>> =
        stages.iter().map(|(_, cands, need)| combinations(cands.len(), *need, max_combinations)).collect();
    let mut counters = alloc::vec![0usize; stages.len()];
    for _ in 0..max_combinations.max(1) {
        let basis: Vec<Derivation> = stages
            .iter()
            .zip(&per_stage)
            .zip(&counters)
            .flat_map(|(((_, cands, _), combos), &k)| combos[k].iter().map(|&i| cands[i].clone()))
            .collect();
        if let Some(c) = saito_scalar(multi, &basis) {
            return Some(FreenessCertificate::Free {
                exponents: exponents.to_vec(),
                evidence: Evidence::Saito(SaitoBasis { basis, det_scalar: c }),
            });
        }
        // Odometer over the per-stage choices, the last stage varying fastest.
        let mut s = stages.len();
        loop {
            if s == 0 {
                return None;
            }
            s -= 1;
            counters[s] += 1;
            if counters[s] < per_stage[s].len() {
                break;
            }
            counters[s] = 0;
        }
    }
    None
}

/// Up to `limit` of the `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        if out.len() >= limit.max(1) {
            return out;
        }
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { return out };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Freeness of a simple central arrangement (`m ≡ 1`).
pub fn is_free_simple(a: &Arrangement) -> Result<FreenessCertificate> {
    Ok(is_free_multi(&Multiarrangement::simple(a.clone())?))
}

pub fn is_free_simple_with(a: &Arrangement, opts: &FreenessOptions) -> Result<FreenessCertificate> {
    Ok(is_free_multi_with(&Multiarrangement::simple(a.clone())?, opts))
}
