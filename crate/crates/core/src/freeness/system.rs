//! The homogeneous pieces `D(A, m)_d` as kernels of exact linear systems.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::{pivot_coordinate, Multiarrangement};
use crate::exact::{binomial, Echelon, Monomial, MonomialBasis, MultiPoly, Rational, SparseRow};

/// Derivation `θ = Σ f_i ∂_i` stored as its components `f_i = θ(x_i)`.
pub type Derivation = Vec<MultiPoly>;

/// Linear conditions on the coefficients of `(f_1, …, f_ℓ)`, all of degree
/// `d`, for `Σ f_i ∂_i` to lie in `D(A, m)`.
///
/// Unknown `(i, μ)` sits in column `i·M + index(μ)` where `M` is the number
/// of degree `d` monomials. Columns forced to zero by a single-entry
/// condition are eliminated before the remaining rows are reduced.
pub(crate) struct DegreeSystem {
    ell: usize,
    degree: u32,
    basis: MonomialBasis,
    echelon: Echelon,
    reduced_of: Vec<Option<usize>>,
    original_of: Vec<usize>,
}

impl DegreeSystem {
    pub(crate) fn build(multi: &Multiarrangement, degree: u32) -> Self {
        let ell = multi.dim();
        let basis = MonomialBasis::new(ell, degree);
        let ncols = ell * basis.len();
        let mut rows: Vec<SparseRow> = Vec::new();
        for (h, &m) in multi.base().hyperplanes().iter().zip(multi.mult()) {
            if m > 0 {
                hyperplane_rows(h.normal(), m, degree, &basis, &mut rows);
            }
        }

        // Repeatedly drop columns pinned to zero by rows with one entry.
        let mut zero: BTreeSet<usize> = BTreeSet::new();
        loop {
            let before = zero.len();
            rows.retain(|r| {
                if r.len() == 1 {
                    zero.insert(r.entries()[0].0);
                    false
                } else {
                    true
                }
            });
            if zero.len() == before {
                break;
            }
            rows = rows
                .into_iter()
                .map(|r| {
                    if r.entries().iter().any(|(c, _)| zero.contains(c)) {
                        SparseRow::from_integers(
                            r.entries().iter().filter(|(c, _)| !zero.contains(c)).cloned(),
                        )
                    } else {
                        r
                    }
                })
                .filter(|r| !r.is_zero())
                .collect();
        }

        let mut reduced_of = vec![None; ncols];
        let mut original_of = Vec::with_capacity(ncols - zero.len());
        for (c, slot) in reduced_of.iter_mut().enumerate() {
            if !zero.contains(&c) {
                *slot = Some(original_of.len());
                original_of.push(c);
            }
        }
        let mut echelon = Echelon::new(original_of.len());
        rows.sort_by_key(SparseRow::len);
        for r in rows {
            let remapped = SparseRow::from_integers(
                r.entries().iter().map(|(c, v)| (reduced_of[*c].expect("live column"), v.clone())),
            );
            echelon.insert(remapped);
        }
        DegreeSystem { ell, degree, basis, echelon, reduced_of, original_of }
    }

    /// `dim_Q D(A, m)_d`.
    pub(crate) fn dim(&self) -> usize {
        self.echelon.nullity()
    }

    /// A basis of the subspace of `D(A, m)_d` orthogonal (for the standard
    /// inner product on coefficient vectors) to the given derivations of
    /// degree `d`. When those lie in `D(A, m)_d` this is a complement of
    /// their span, since the inner product is anisotropic over `Q`.
    pub(crate) fn complement(&self, span: &[Derivation]) -> Vec<Derivation> {
        let mut ech = self.echelon.clone();
        for theta in span {
            let row = self.to_row(theta);
            if !row.is_zero() {
                ech.insert(row);
            }
        }
        ech.free_columns()
            .into_iter()
            .map(|f| self.to_derivation(&ech.kernel_vector(f)))
            .collect()
    }

    fn to_row(&self, theta: &Derivation) -> SparseRow {
        let m = self.basis.len();
        let mut pairs = Vec::new();
        for (i, f) in theta.iter().enumerate() {
            for (mono, c) in f.terms() {
                let idx = self.basis.index_of(mono).expect("homogeneous of the system degree");
                if let Some(r) = self.reduced_of[i * m + idx] {
                    pairs.push((r, c.clone()));
                }
            }
        }
        SparseRow::from_rationals(pairs)
    }

    fn to_derivation(&self, v: &[Rational]) -> Derivation {
        let m = self.basis.len();
        let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.ell];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let c = self.original_of[r];
            comps[c / m].push((self.basis.monomials()[c % m].clone(), x.clone()));
        }
        let theta: Derivation =
            comps.into_iter().map(|t| MultiPoly::from_terms(self.ell, t)).collect();
        primitive_derivation(theta)
    }

    #[allow(dead_code)]
    pub(crate) fn degree(&self) -> u32 {
        self.degree
    }
}

/// Rows expressing `α^m | Σ a_i f_i` for `α = Σ a_i x_i`.
///
/// With `p` the pivot coordinate of `α`, put `y = α` in place of `x_p`. The
/// coefficient of `y^t` in `g = Σ a_i f_i` is, up to the nonzero factor
/// `t! a_p^t`, the polynomial `∂_p^t g` evaluated at
/// `x_p = -Σ_{j≠p} (a_j / a_p) x_j`. Divisibility by `y^m` means these vanish
/// for `t < m`, which gives one row per monomial of the substituted result.
fn hyperplane_rows(a: &[Rational], m: u32, degree: u32, basis: &MonomialBasis, out: &mut Vec<SparseRow>) {
    let ell = a.len();
    let p = pivot_coordinate(a);
    let rest_vars = ell - 1;
    let sub: Vec<Rational> =
        (0..ell).filter(|&j| j != p).map(|j| -(&a[j] / &a[p])).collect();
    let lin = MultiPoly::linear(&sub);
    let mut powers = Vec::with_capacity(degree as usize + 1);
    powers.push(MultiPoly::one(rest_vars));
    for k in 1..=degree as usize {
        let next = &powers[k - 1] * &lin;
        powers.push(next);
    }
    let active: Vec<(usize, &Rational)> =
        a.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let ncomp = basis.len();
    for t in 0..m.min(degree + 1) {
        let mut rows: BTreeMap<Monomial, Vec<(usize, Rational)>> = BTreeMap::new();
        for (idx, mu) in basis.monomials().iter().enumerate() {
            let ep = mu.exps()[p];
            if ep < t {
                continue;
            }
            let falling: BigInt = (ep - t + 1..=ep).map(BigInt::from).product();
            let falling = Rational::from_integer(falling);
            let rest =
                Monomial::new(mu.exps().iter().enumerate().filter(|&(j, _)| j != p).map(|(_, &e)| e).collect());
            let expansion = powers[(ep - t) as usize].mul_monomial(&rest);
            for (nu, c) in expansion.terms() {
                let c = c * &falling;
                let entry = rows.entry(nu.clone()).or_default();
                for &(i, ai) in &active {
                    entry.push((i * ncomp + idx, ai * &c));
                }
            }
        }
        out.extend(rows.into_values().map(SparseRow::from_rationals).filter(|r| !r.is_zero()));
    }
}

/// Scales a nonzero derivation so that its coefficients are coprime integers
/// with a positive leading coefficient in the first nonzero component.
pub(crate) fn primitive_derivation(theta: Derivation) -> Derivation {
    let coeffs: Vec<Rational> =
        theta.iter().flat_map(|f| f.terms().map(|(_, c)| c.clone())).collect();
    if coeffs.is_empty() {
        return theta;
    }
    let ints = crate::exact::primitive_integer_vector(&coeffs);
    let first = theta.iter().flat_map(|f| f.terms()).next().expect("nonzero").1;
    let mut scale = Rational::from_integer(ints[0].clone()) / first;
    if scale.is_zero() {
        scale = Rational::one();
    }
    theta.iter().map(|f| f.scale(&scale)).collect()
}

/// `dim_Q D(A, m)_d`.
pub fn graded_dim(multi: &Multiarrangement, degree: u32) -> usize {
    DegreeSystem::build(multi, degree).dim()
}

/// `dim D(A, m)_d` for `d = 0..=cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn compute(multi: &Multiarrangement, cutoff: u32) -> Self {
        GradedDims { dims: (0..=cutoff).map(|d| graded_dim(multi, d)).collect() }
    }

    /// The dimensions a free module of rank `ℓ` with these exponents would have.
    pub fn predicted(ell: usize, exponents: &[u32], cutoff: u32) -> Self {
        GradedDims { dims: (0..=cutoff).map(|d| free_module_dim(ell, exponents, d)).collect() }
    }
}

/// `Σ_i #{monomials of degree d - e_i in ℓ variables}`.
pub fn free_module_dim(ell: usize, exponents: &[u32], degree: u32) -> usize {
    exponents
        .iter()
        .filter(|&&e| e <= degree)
        .map(|&e| monomial_count(ell, degree - e))
        .sum()
}

pub(crate) fn monomial_count(ell: usize, degree: u32) -> usize {
    if ell == 0 {
        return usize::from(degree == 0);
    }
    binomial(degree as usize + ell - 1, ell - 1)
}

/// Whether `θ` lies in `D(A, m)`, by exact division by each form.
pub fn derivation_in_module(multi: &Multiarrangement, theta: &Derivation) -> bool {
    let ell = multi.dim();
    theta.len() == ell
        && multi.base().hyperplanes().iter().zip(multi.mult()).all(|(h, &m)| {
            let a = h.normal();
            let mut g = MultiPoly::zero(ell);
            for (ai, f) in a.iter().zip(theta) {
                if !ai.is_zero() {
                    g = &g + &f.scale(ai);
                }
            }
            g.divisible_by_power(a, m)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::exact::RatMatrix;

    fn multi(dim: usize, normals: &[&[i64]], m: &[u32]) -> Multiarrangement {
        Multiarrangement::new(Arrangement::from_int_normals(dim, normals).unwrap(), m.to_vec()).unwrap()
    }

    #[test]
    fn empty_multiplicity_gives_all_derivations() {
        let m = multi(2, &[&[1, 0], &[0, 1]], &[0, 0]);
        assert_eq!(graded_dim(&m, 1), 4);
        assert_eq!(graded_dim(&m, 0), 2);
        assert_eq!(graded_dim(&m, 3), 8);
    }

    #[test]
    fn coordinate_lines() {
        let m = multi(2, &[&[1, 0], &[0, 1]], &[1, 1]);
        assert_eq!(graded_dim(&m, 0), 0);
        assert_eq!(graded_dim(&m, 1), 2);
        assert_eq!(graded_dim(&m, 2), 4);
    }

    #[test]
    fn zero_when_multiplicity_exceeds_degree() {
        let m = multi(1, &[&[1]], &[3]);
        assert_eq!((0..6).map(|d| graded_dim(&m, d)).collect::<Vec<_>>(), [0, 0, 0, 1, 1, 1]);
    }

    /// Dense oracle: all `(f_1, …, f_ℓ)` of degree `d`, conditions by explicit
    /// division remainders computed with `div_linear`.
    fn oracle_dim(mm: &Multiarrangement, d: u32) -> usize {
        let ell = mm.dim();
        let basis = MonomialBasis::new(ell, d);
        let n = ell * basis.len();
        let mut unit_images: Vec<Vec<Rational>> = Vec::new();
        // Map each unknown to the concatenated list of remainders it produces
        // after dividing by α^m; the kernel of that map is D_d.
        type Key = (usize, usize, Monomial);
        let mut keys: BTreeMap<Key, usize> = BTreeMap::new();
        let mut cols: Vec<Vec<(Key, Rational)>> = Vec::new();
        for c in 0..n {
            let (i, idx) = (c / basis.len(), c % basis.len());
            let mono = basis.monomials()[idx].clone();
            let mut entries = Vec::new();
            for (h, (hyp, &m)) in mm.base().hyperplanes().iter().zip(mm.mult()).enumerate() {
                let a = hyp.normal();
                let mut g = MultiPoly::from_terms(ell, [(mono.clone(), a[i].clone())]);
                for step in 0..m {
                    // Remainder of division by α is g evaluated on α = 0.
                    let p = pivot_coordinate(a);
                    let mut point_terms = MultiPoly::zero(ell);
                    for (mu, coef) in g.terms() {
                        let mut e = mu.exps().to_vec();
                        let k = e[p];
                        e[p] = 0;
                        let mut sub = vec![Rational::zero(); ell];
                        for j in 0..ell {
                            if j != p {
                                sub[j] = -(&a[j] / &a[p]);
                            }
                        }
                        let lin = MultiPoly::linear(&sub);
                        point_terms = &point_terms + &lin.pow(k).mul_monomial(&Monomial::new(e)).scale(coef);
                    }
                    for (mu, coef) in point_terms.terms() {
                        entries.push(((h, step as usize, mu.clone()), coef.clone()));
                    }
                    let diff = &g - &point_terms;
                    g = match diff.div_linear(a) {
                        Some(q) => q,
                        None => panic!("remainder removed, division must be exact"),
                    };
                }
            }
            for (k, _) in &entries {
                let len = keys.len();
                keys.entry(k.clone()).or_insert(len);
            }
            cols.push(entries);
        }
        for (c, entries) in cols.iter().enumerate() {
            let mut col = vec![Rational::zero(); keys.len()];
            for (k, v) in entries {
                col[keys[k]] += v;
            }
            let _ = c;
            unit_images.push(col);
        }
        if keys.is_empty() {
            return n;
        }
        let rows: Vec<Vec<Rational>> =
            (0..keys.len()).map(|r| unit_images.iter().map(|col| col[r].clone()).collect()).collect();
        n - RatMatrix::from_rows(n, rows).rank()
    }

    #[test]
    fn agrees_with_division_oracle() {
        let cases = [
            multi(2, &[&[1, 0], &[0, 1], &[1, 1]], &[2, 2, 1]),
            multi(2, &[&[1, 0], &[0, 1], &[1, -1], &[1, -2], &[1, -3]], &[3, 3, 1, 1, 1]),
            multi(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]], &[1, 2, 1, 1]),
            multi(3, &[&[2, 0, -1], &[0, 3, 1], &[1, 1, 0]], &[2, 1, 3]),
        ];
        for mm in &cases {
            for d in 0..=mm.total().min(5) {
                assert_eq!(graded_dim(mm, d), oracle_dim(mm, d), "degree {d}");
            }
        }
    }

    #[test]
    fn complement_yields_new_elements() {
        let mm = multi(2, &[&[1, 0], &[0, 1]], &[1, 1]);
        let sys = DegreeSystem::build(&mm, 1);
        let all = sys.complement(&[]);
        assert_eq!(all.len(), 2);
        for th in &all {
            assert!(derivation_in_module(&mm, th));
        }
        let rest = sys.complement(&all[..1]);
        assert_eq!(rest.len(), 1);
        assert!(derivation_in_module(&mm, &rest[0]));
    }

    #[test]
    fn predicted_dims() {
        assert_eq!(GradedDims::predicted(2, &[4, 5], 6).dims, [0, 0, 0, 0, 1, 3, 5]);
        assert_eq!(free_module_dim(3, &[0, 0, 0], 1), 9);
    }
}
