//! Freeness of simple rank three arrangements and of extensions `E(A, m)`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{is_free_multi, rank2_exponents, Evidence, FreenessCertificate, Witness};
use crate::arrangement::{Arrangement, Flat, Multiarrangement};
use crate::exact::RatMatrix;
use crate::lattice::{build_poset_to, char_poly};
use crate::structure::{extend, PositiveSystem};
use crate::{Error, Result};

/// Freeness of a central simple arrangement of rank three: free with
/// exponents `(1, d1, d2)` exactly when `χ(B, t) = (t-1)(t-d1)(t-d2)` and the
/// restriction to a hyperplane has exponents `(d1, d2)`. The last hyperplane
/// is the one restricted to.
pub fn simple_rank3_free(b: &Arrangement) -> Result<FreenessCertificate> {
    if !b.is_central() {
        return Err(Error::NotCentral);
    }
    let rank = b.rank();
    if rank != 3 {
        return Err(Error::WrongRank { expected: 3, found: rank });
    }
    let ess = b.essentialize()?;
    let chi = char_poly(&ess);
    let quadratic = chi.poly().div_linear_factor(&num_traits::One::one()).expect("central χ has the root 1");
    let roots = quadratic.integer_roots()?;
    let ds: Option<Vec<u32>> = if roots.splits() {
        roots.roots.iter().map(|r| u32::try_from(r).ok()).collect()
    } else {
        None
    };
    let Some(mut ds) = ds else {
        return Ok(FreenessCertificate::NonFree { witness: Witness::NonFactoringChi { chi } });
    };
    ds.sort_unstable();
    let hyperplane = ess.len() - 1;
    let restriction = ess.ziegler_restrict(hyperplane)?;
    let restriction_exponents = rank2_exponents(&restriction)?;
    if ds[..] != restriction_exponents[..] {
        return Ok(FreenessCertificate::NonFree {
            witness: Witness::ExponentMismatch { chi, hyperplane, restriction_exponents },
        });
    }
    let mut exponents = vec![1, ds[0], ds[1]];
    exponents.sort_unstable();
    Ok(FreenessCertificate::Free {
        exponents,
        evidence: Evidence::Rank3Criterion { chi, hyperplane, restriction_exponents },
    })
}

/// Freeness of `E(A, m)` by induction on the rank.
///
/// Hyperplanes of multiplicity zero contribute nothing to `E(A, m)` and are
/// dropped; the rest is made essential. Rank at most one is always free,
/// rank two goes through [`simple_rank3_free`], and in higher rank `E(A, m)`
/// is free with exponents `(1, e)` exactly when `(A, m)` is free with
/// exponents `e` and `E(A_X, m|_X)` is free for every flat `X` of
/// codimension between two and rank minus one. Exponents are ascending and
/// padded with zeros to `ℓ + 1` entries.
pub fn extension_free(ps: &PositiveSystem, m: &[u32]) -> Result<FreenessCertificate> {
    if m.len() != ps.len() {
        return Err(Error::MultiplicityLength { expected: ps.len(), found: m.len() });
    }
    let ell = ps.arrangement().dim();
    let support: Vec<usize> = (0..m.len()).filter(|&i| m[i] > 0).collect();
    let msub: Vec<u32> = support.iter().map(|&i| m[i]).collect();
    let pad = |mut e: Vec<u32>| {
        e.resize(ell + 1, 0);
        e.sort_unstable();
        e
    };
    if support.is_empty() {
        return Ok(FreenessCertificate::Free { exponents: pad(vec![1]), evidence: Evidence::LowRank });
    }
    let ess = ps.restrict(&support)?.essentialize()?;
    let rank = ess.arrangement().dim();
    match rank {
        1 => {
            let total = msub.iter().sum();
            Ok(FreenessCertificate::Free { exponents: pad(vec![1, total]), evidence: Evidence::LowRank })
        }
        2 => Ok(match simple_rank3_free(&extend(&ess, &msub)?)? {
            FreenessCertificate::Free { exponents, evidence } => {
                FreenessCertificate::Free { exponents: pad(exponents), evidence }
            }
            other => other,
        }),
        _ => {
            let restriction = is_free_multi(&Multiarrangement::new(ess.arrangement().clone(), msub.clone())?);
            let exps = match &restriction {
                FreenessCertificate::Free { exponents, .. } => exponents.clone(),
                FreenessCertificate::NonFree { .. } => {
                    return Ok(FreenessCertificate::NonFree {
                        witness: Witness::NonFreeRestriction { inner: Box::new(restriction) },
                    })
                }
                FreenessCertificate::Undetermined { .. } => return Ok(restriction),
            };
            let poset = build_poset_to(ess.arrangement(), rank - 1);
            let mut localizations = 0;
            for codim in 2..rank {
                for pf in poset.level(codim) {
                    let local = ess.localize(&pf.flat)?;
                    let mloc: Vec<u32> = pf.flat.indices().iter().map(|&i| msub[i]).collect();
                    let inner = extension_free(&local, &mloc)?;
                    match inner {
                        FreenessCertificate::Free { .. } => localizations += 1,
                        FreenessCertificate::NonFree { .. } => {
                            let original: Vec<usize> =
                                pf.flat.indices().iter().map(|&i| support[i]).collect();
                            return Ok(FreenessCertificate::NonFree {
                                witness: Witness::NonFreeLocalization {
                                    flat: Flat::from_parts(original, codim),
                                    inner: Box::new(inner),
                                },
                            });
                        }
                        FreenessCertificate::Undetermined { .. } => return Ok(inner),
                    }
                }
            }
            let mut exponents = vec![1];
            exponents.extend(exps);
            Ok(FreenessCertificate::Free {
                exponents: pad(exponents),
                evidence: Evidence::ExtensionRecursion { restriction: Box::new(restriction), localizations },
            })
        }
    }
}

/// Verdicts for every multiplicity of a scan, in lexicographic order of `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub results: Vec<(Vec<u32>, FreenessCertificate)>,
}

impl ScanReport {
    pub fn free(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.results.iter().filter(|(_, c)| c.is_free()).map(|(m, _)| m)
    }

    pub fn count(&self, verdict: &str) -> usize {
        self.results.iter().filter(|(_, c)| c.verdict_name() == verdict).count()
    }
}

/// Whether any `min(|A|, ℓ)` normals are linearly independent.
pub fn is_generic(a: &Arrangement) -> bool {
    let k = a.len().min(a.dim());
    let normals = a.normals();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let rows = idx.iter().map(|&i| normals[i].clone()).collect();
        if RatMatrix::from_rows(a.dim(), rows).rank() < k {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < a.len() - k + i) else { return true };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Runs [`is_free_multi`] on `(A, m)` for every `m` with `1 <= m(H) <= max_mult`.
///
/// Requires a generic central arrangement with `ℓ >= 3` and more than `ℓ`
/// hyperplanes; for those, no verdict is expected to be `Free`.
pub fn totally_nonfree_scan(a: &Arrangement, max_mult: u32) -> Result<ScanReport> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    if a.dim() < 3 || a.len() <= a.dim() || !is_generic(a) {
        return Err(Error::Precondition(alloc::format!(
            "scan needs a generic arrangement with more than {} hyperplanes in dimension at least 3",
            a.dim()
        )));
    }
    if max_mult == 0 {
        return Err(Error::Precondition("max_mult must be positive".into()));
    }
    let n = a.len();
    let count = BigInt::from(max_mult).pow(n as u32);
    if count > BigInt::from(1u32 << 16) {
        return Err(Error::TooLarge(alloc::format!("{count} multiplicities")));
    }
    let mut m = vec![1u32; n];
    let mut results = Vec::new();
    loop {
        results.push((m.clone(), is_free_multi(&Multiarrangement::new(a.clone(), m.clone())?)));
        let Some(i) = (0..n).rev().find(|&i| m[i] < max_mult) else { break };
        m[i] += 1;
        for v in &mut m[i + 1..] {
            *v = 1;
        }
    }
    Ok(ScanReport { results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;
    use crate::freeness::rank2_extension_charpoly;

    fn arr(dim: usize, normals: &[&[i64]]) -> Arrangement {
        Arrangement::from_int_normals(dim, normals).unwrap()
    }

    fn a2() -> PositiveSystem {
        PositiveSystem::identity(&arr(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap()
    }

    #[test]
    fn translated_line_cones() {
        let bad = Arrangement::from_int_affine(
            2,
            &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0), (&[0, 1], 1), (&[1, 1], 0)],
        )
        .unwrap()
        .cone();
        let c = simple_rank3_free(&bad).unwrap();
        assert!(matches!(c.witness(), Some(Witness::NonFactoringChi { .. })));
        let good = Arrangement::from_int_affine(
            2,
            &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0), (&[0, 1], 1), (&[1, 1], 1)],
        )
        .unwrap()
        .cone();
        assert_eq!(simple_rank3_free(&good).unwrap().exponents(), Some(&[1, 2, 3][..]));
    }

    #[test]
    fn shi_and_catalan_extensions() {
        let ps = a2();
        let shi = extend(&ps, &[2, 2, 2]).unwrap();
        assert_eq!(simple_rank3_free(&shi).unwrap().exponents(), Some(&[1, 3, 3][..]));
        assert_eq!(extension_free(&ps, &[3, 3, 3]).unwrap().exponents(), Some(&[1, 4, 5][..]));
        assert_eq!(extension_free(&ps, &[0, 0, 0]).unwrap().exponents(), Some(&[0, 0, 1][..]));
        assert_eq!(extension_free(&ps, &[0, 4, 0]).unwrap().exponents(), Some(&[0, 1, 4][..]));
    }

    #[test]
    fn rank3_criterion_needs_rank_three() {
        assert!(matches!(
            simple_rank3_free(&arr(2, &[&[1, 0], &[0, 1]])),
            Err(Error::WrongRank { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn closed_form_grid_matches_extension_verdicts() {
        let ps = a2();
        for a in 0..=3 {
            for b in a..=3 {
                for c in 0..=3 {
                    let e = extend(&ps, &[a, b, c]).unwrap();
                    if e.rank() < 3 {
                        continue;
                    }
                    let chi = rank2_extension_charpoly(a, b, c);
                    assert_eq!(char_poly(&e.essentialize().unwrap()), chi, "{a} {b} {c}");
                    let splits = chi.poly().integer_roots().unwrap().splits();
                    assert_eq!(simple_rank3_free(&e).unwrap().is_free(), splits);
                }
            }
        }
    }

    #[test]
    fn example_with_failing_localization() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]);
        let ps = PositiveSystem::identity(&a).unwrap();
        let c = extension_free(&ps, &[4, 4, 4, 5, 5, 4]).unwrap();
        let Some(Witness::NonFreeLocalization { flat, inner }) = c.witness() else { panic!("{c:?}") };
        assert_eq!(flat.indices(), &[0, 1, 3]);
        let Some(Witness::NonFactoringChi { chi }) = inner.witness() else { panic!("{inner:?}") };
        assert!(chi.poly().div_linear_factor(&num_traits::One::one()).unwrap() == UniPoly::from_ints(&[43, -13, 1]));
    }

    #[test]
    fn generic_scan() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let r = totally_nonfree_scan(&a, 1).unwrap();
        assert_eq!(r.results.len(), 1);
        assert_eq!(r.count("non_free"), 1);
        let square = arr(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(matches!(totally_nonfree_scan(&square, 2), Err(Error::Precondition(_))));
        assert!(!is_generic(&arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]])));
    }
}
