//! Central and affine (multi)arrangements and their structural operations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{normalized_integer_vector, MultiPoly, RatMatrix, Rational};
use crate::{Error, Result};

/// The affine hyperplane `{x : normal · x = constant}`.
///
/// The stored scaling of the defining form is kept verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    constant: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, constant: Rational) -> Self {
        Hyperplane { normal, constant }
    }

    pub fn linear(normal: Vec<Rational>) -> Self {
        Hyperplane { normal, constant: Rational::zero() }
    }

    pub fn from_ints(normal: &[i64], constant: i64) -> Self {
        Hyperplane::new(
            normal.iter().map(|&a| Rational::from_integer(a.into())).collect(),
            Rational::from_integer(constant.into()),
        )
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn is_central(&self) -> bool {
        self.constant.is_zero()
    }

    /// `(normal | constant)` as one row.
    pub fn augmented(&self) -> Vec<Rational> {
        let mut v = self.normal.clone();
        v.push(self.constant.clone());
        v
    }

    pub fn scaled(&self, c: &Rational) -> Hyperplane {
        Hyperplane {
            normal: self.normal.iter().map(|a| a * c).collect(),
            constant: &self.constant * c,
        }
    }

    /// Canonical key: the primitive integer representative of `(normal | constant)`
    /// with positive first nonzero entry. Equal keys mean equal hyperplanes.
    pub fn key(&self) -> Vec<BigInt> {
        normalized_integer_vector(&self.augmented())
    }

    pub fn same_hyperplane(&self, other: &Hyperplane) -> bool {
        self.dim() == other.dim() && self.key() == other.key()
    }

    /// The same hyperplane written with a primitive integer form.
    pub fn primitive(&self) -> Hyperplane {
        let key = self.key();
        let (n, c) = key.split_at(self.dim());
        Hyperplane::new(
            n.iter().cloned().map(Rational::from_integer).collect(),
            Rational::from_integer(c[0].clone()),
        )
    }
}

/// An ordered list of distinct hyperplanes in a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

/// A flat, represented by the closed set of hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    indices: Vec<usize>,
    codim: usize,
}

impl Flat {
    pub(crate) fn from_parts(indices: Vec<usize>, codim: usize) -> Self {
        Flat { indices, codim }
    }

    /// The whole space, contained in no hyperplane.
    pub fn whole_space() -> Self {
        Flat { indices: Vec::new(), codim: 0 }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn contains_hyperplane(&self, h: usize) -> bool {
        self.indices.binary_search(&h).is_ok()
    }
}

/// Linear equations of an affine subspace kept in reduced row echelon form,
/// one column per coordinate plus a last column for the constant.
#[derive(Clone, Debug)]
pub(crate) struct Equations {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Equations {
    pub(crate) fn new(dim: usize) -> Self {
        Equations { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `false` when the system has no solution.
    pub(crate) fn is_consistent(&self) -> bool {
        self.pivots.last().is_none_or(|&p| p < self.dim)
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds one equation; `None` when it is already implied.
    pub(crate) fn with(&self, v: &[Rational]) -> Option<Equations> {
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        let mut out = self.clone();
        for row in out.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let pos = out.pivots.partition_point(|&q| q < p);
        out.pivots.insert(pos, p);
        out.rows.insert(pos, r);
        Some(out)
    }
}

impl Arrangement {
    /// Validates dimensions, nonzero normals and pairwise distinctness.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let mut seen: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(Error::ZeroNormal(i));
            }
            if let Some(&j) = seen.get(&h.key()) {
                return Err(Error::DuplicateHyperplane(j, i));
            }
            seen.insert(h.key(), i);
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    pub fn empty(dim: usize) -> Self {
        Arrangement { dim, hyperplanes: Vec::new() }
    }

    /// Central arrangement from integer normals.
    pub fn from_int_normals(dim: usize, normals: &[&[i64]]) -> Result<Self> {
        Arrangement::new(dim, normals.iter().map(|n| Hyperplane::from_ints(n, 0)).collect())
    }

    /// Affine arrangement from integer `(normal, constant)` pairs.
    pub fn from_int_affine(dim: usize, forms: &[(&[i64], i64)]) -> Result<Self> {
        Arrangement::new(dim, forms.iter().map(|(n, c)| Hyperplane::from_ints(n, *c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(Hyperplane::is_central)
    }

    pub fn normals(&self) -> Vec<Vec<Rational>> {
        self.hyperplanes.iter().map(|h| h.normal.clone()).collect()
    }

    /// Rank of the normal vectors.
    pub fn rank(&self) -> usize {
        if self.hyperplanes.is_empty() {
            return 0;
        }
        RatMatrix::from_rows(self.dim, self.normals()).rank()
    }

    pub fn index_of(&self, h: &Hyperplane) -> Option<usize> {
        let key = h.key();
        self.hyperplanes.iter().position(|g| g.dim() == h.dim() && g.key() == key)
    }

    /// Same hyperplanes as sets, ignoring order and scaling.
    pub fn same_hyperplanes(&self, other: &Arrangement) -> bool {
        if self.dim != other.dim || self.len() != other.len() {
            return false;
        }
        let mut a: Vec<_> = self.hyperplanes.iter().map(Hyperplane::key).collect();
        let mut b: Vec<_> = other.hyperplanes.iter().map(Hyperplane::key).collect();
        a.sort();
        b.sort();
        a == b
    }

    pub fn sub_arrangement(&self, indices: &[usize]) -> Arrangement {
        Arrangement {
            dim: self.dim,
            hyperplanes: indices.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
        }
    }

    pub(crate) fn equations_of(&self, indices: &[usize]) -> Equations {
        let mut eq = Equations::new(self.dim);
        for &i in indices {
            if let Some(next) = eq.with(&self.hyperplanes[i].augmented()) {
                eq = next;
            }
        }
        eq
    }

    pub(crate) fn closed_indices(&self, eq: &Equations) -> Vec<usize> {
        (0..self.len())
            .filter(|&h| eq.contains(&self.hyperplanes[h].augmented()))
            .collect()
    }

    /// The flat cut out by the given hyperplanes, or `None` if their
    /// intersection is empty.
    pub fn closure(&self, indices: &[usize]) -> Result<Option<Flat>> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.len()) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.len() });
        }
        let eq = self.equations_of(indices);
        if !eq.is_consistent() {
            return Ok(None);
        }
        Ok(Some(Flat { indices: self.closed_indices(&eq), codim: eq.rank() }))
    }

    /// Checks that `indices` is exactly the set of hyperplanes containing a flat.
    pub fn flat(&self, indices: &[usize]) -> Result<Flat> {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        match self.closure(&sorted)? {
            Some(f) if f.indices == sorted => Ok(f),
            _ => Err(Error::NotAFlat(sorted)),
        }
    }

    /// A point on the flat (affine case) and a basis of its direction space.
    pub fn flat_subspace(&self, flat: &Flat) -> (Vec<Rational>, Vec<Vec<Rational>>) {
        let eq = self.equations_of(&flat.indices);
        let mut point = vec![Rational::zero(); self.dim];
        for (row, &p) in eq.rows.iter().zip(&eq.pivots) {
            point[p] = row[self.dim].clone();
        }
        let dirs = if eq.rows.is_empty() {
            RatMatrix::zeros(1, self.dim).nullspace_basis()
        } else {
            let normals: Vec<Vec<Rational>> = eq.rows.iter().map(|r| r[..self.dim].to_vec()).collect();
            RatMatrix::from_rows(self.dim, normals).nullspace_basis()
        };
        (point, dirs)
    }

    /// Hyperplanes containing the flat, in their original order.
    pub fn localize(&self, flat: &Flat) -> Result<Arrangement> {
        self.flat(&flat.indices)?;
        Ok(self.sub_arrangement(&flat.indices))
    }

    /// Restriction to hyperplane `h0` with its natural multiplicity.
    ///
    /// Coordinates on `h0` drop the coordinate where the defining form of `h0`
    /// has its largest absolute coefficient; restricted forms are primitive
    /// integer vectors with positive first entry, in order of first appearance.
    pub fn ziegler_restrict(&self, h0: usize) -> Result<Multiarrangement> {
        if !self.is_central() {
            return Err(Error::NotCentral);
        }
        if h0 >= self.len() {
            return Err(Error::IndexOutOfRange { index: h0, len: self.len() });
        }
        let a = &self.hyperplanes[h0].normal;
        let p = pivot_coordinate(a);
        let mut keys: Vec<Vec<BigInt>> = Vec::new();
        let mut mult: Vec<u32> = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if i == h0 {
                continue;
            }
            let b = &h.normal;
            let restricted: Vec<Rational> = (0..self.dim)
                .filter(|&j| j != p)
                .map(|j| &b[j] - &b[p] * &a[j] / &a[p])
                .collect();
            let key = normalized_integer_vector(&restricted);
            match keys.iter().position(|k| *k == key) {
                Some(pos) => mult[pos] += 1,
                None => {
                    keys.push(key);
                    mult.push(1);
                }
            }
        }
        let hs = keys
            .into_iter()
            .map(|k| Hyperplane::linear(k.into_iter().map(Rational::from_integer).collect()))
            .collect();
        Multiarrangement::new(Arrangement::new(self.dim - 1, hs)?, mult)
    }

    /// Homogenizes `α = c` to `α - c z = 0` in one more variable and adds `z = 0` last.
    pub fn cone(&self) -> Arrangement {
        let mut hs: Vec<Hyperplane> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut n = h.normal.clone();
                n.push(-h.constant.clone());
                Hyperplane::linear(n)
            })
            .collect();
        let mut z = vec![Rational::zero(); self.dim + 1];
        z[self.dim] = Rational::one();
        hs.push(Hyperplane::linear(z));
        Arrangement { dim: self.dim + 1, hyperplanes: hs }
    }

    /// Affine chart `α_{h0} = 1`, dropping the coordinate where `α_{h0}` has
    /// its largest absolute coefficient. For `h0 = {z = 0}` with `z` the last
    /// coordinate this just sets `z = 1`.
    pub fn decone(&self, h0: usize) -> Result<Arrangement> {
        if !self.is_central() {
            return Err(Error::NotCentral);
        }
        if h0 >= self.len() {
            return Err(Error::IndexOutOfRange { index: h0, len: self.len() });
        }
        let a = &self.hyperplanes[h0].normal;
        let p = pivot_coordinate(a);
        let hs = self
            .hyperplanes
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != h0)
            .map(|(_, h)| {
                let b = &h.normal;
                let normal = (0..self.dim)
                    .filter(|&j| j != p)
                    .map(|j| &b[j] - &b[p] * &a[j] / &a[p])
                    .collect();
                Hyperplane::new(normal, -(&b[p] / &a[p]))
            })
            .collect();
        Arrangement::new(self.dim - 1, hs)
    }

    /// Quotient by the center: each normal is written in the basis of the
    /// row space of the normals, so the result has dimension equal to the rank.
    pub fn essentialize(&self) -> Result<Arrangement> {
        if !self.is_central() {
            return Err(Error::NotCentral);
        }
        if self.is_empty() {
            return Ok(Arrangement::empty(0));
        }
        let pivots = RatMatrix::from_rows(self.dim, self.normals()).rref().pivots;
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::linear(pivots.iter().map(|&p| h.normal[p].clone()).collect()))
            .collect();
        Arrangement::new(pivots.len(), hs)
    }

    /// Union of `self` and `other` in block coordinates `(x, y)`.
    pub fn direct_product(&self, other: &Arrangement) -> Arrangement {
        let dim = self.dim + other.dim;
        let mut hs = Vec::with_capacity(self.len() + other.len());
        for h in &self.hyperplanes {
            let mut n = h.normal.clone();
            n.resize(dim, Rational::zero());
            hs.push(Hyperplane::new(n, h.constant.clone()));
        }
        for h in &other.hyperplanes {
            let mut n = vec![Rational::zero(); self.dim];
            n.extend(h.normal.iter().cloned());
            hs.push(Hyperplane::new(n, h.constant.clone()));
        }
        Arrangement { dim, hyperplanes: hs }
    }

    /// Change of coordinates `x = M y`; a form `α` becomes `Mᵀ α`.
    pub fn linear_change(&self, m: &RatMatrix) -> Result<Arrangement> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: m.rows() });
        }
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| {
                let normal = (0..self.dim)
                    .map(|j| {
                        (0..self.dim).fold(Rational::zero(), |acc, i| acc + &m[(i, j)] * &h.normal[i])
                    })
                    .collect();
                Hyperplane::new(normal, h.constant.clone())
            })
            .collect();
        Arrangement::new(self.dim, hs)
    }
}

/// Index of the entry of largest absolute value (first one on ties).
pub(crate) fn pivot_coordinate(a: &[Rational]) -> usize {
    let mut best = 0;
    for (i, x) in a.iter().enumerate() {
        if x.abs() > a[best].abs() {
            best = i;
        }
    }
    best
}

/// A central arrangement with a nonnegative multiplicity per hyperplane.
///
/// Hyperplanes of multiplicity zero stay in the base arrangement but impose
/// nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiarrangement {
    base: Arrangement,
    mult: Vec<u32>,
}

impl Multiarrangement {
    pub fn new(base: Arrangement, mult: Vec<u32>) -> Result<Self> {
        if !base.is_central() {
            return Err(Error::NotCentral);
        }
        if mult.len() != base.len() {
            return Err(Error::MultiplicityLength { expected: base.len(), found: mult.len() });
        }
        Ok(Multiarrangement { base, mult })
    }

    pub fn simple(base: Arrangement) -> Result<Self> {
        let n = base.len();
        Multiarrangement::new(base, vec![1; n])
    }

    pub fn constant(base: Arrangement, m: u32) -> Result<Self> {
        let n = base.len();
        Multiarrangement::new(base, vec![m; n])
    }

    pub fn base(&self) -> &Arrangement {
        &self.base
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    pub fn dim(&self) -> usize {
        self.base.dim
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// `|m|`, the degree of `Q(A, m)`.
    pub fn total(&self) -> u32 {
        self.mult.iter().sum()
    }

    /// Drops hyperplanes of multiplicity zero.
    pub fn support(&self) -> Multiarrangement {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| self.mult[i] > 0).collect();
        Multiarrangement {
            base: self.base.sub_arrangement(&idx),
            mult: idx.iter().map(|&i| self.mult[i]).collect(),
        }
    }

    pub fn localize(&self, flat: &Flat) -> Result<Multiarrangement> {
        let base = self.base.localize(flat)?;
        let mult = flat.indices.iter().map(|&i| self.mult[i]).collect();
        Ok(Multiarrangement { base, mult })
    }

    pub fn essentialize(&self) -> Result<Multiarrangement> {
        Ok(Multiarrangement { base: self.base.essentialize()?, mult: self.mult.clone() })
    }

    /// `Q(A, m) = Π α_H^{m(H)}` with the stored forms.
    pub fn defining_polynomial(&self) -> MultiPoly {
        self.base
            .hyperplanes
            .iter()
            .zip(&self.mult)
            .fold(MultiPoly::one(self.dim()), |acc, (h, &m)| {
                &acc * &MultiPoly::linear(&h.normal).pow(m)
            })
    }

    /// Same hyperplanes of positive multiplicity with the same multiplicities,
    /// ignoring order and scaling.
    pub fn equivalent(&self, other: &Multiarrangement) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let collect = |m: &Multiarrangement| -> BTreeMap<Vec<BigInt>, u32> {
            m.base
                .hyperplanes
                .iter()
                .zip(&m.mult)
                .filter(|(_, &k)| k > 0)
                .map(|(h, &k)| (h.key(), k))
                .collect()
        };
        collect(self) == collect(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use alloc::string::ToString;

    fn boolean3() -> Arrangement {
        Arrangement::from_int_normals(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    fn braid_a3() -> Arrangement {
        let mut hs = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let mut n = [0i64; 4];
                n[i] = 1;
                n[j] = -1;
                hs.push(Hyperplane::from_ints(&n, 0));
            }
        }
        Arrangement::new(4, hs).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            Arrangement::from_int_normals(2, &[&[1, 0], &[2, 0]]),
            Err(Error::DuplicateHyperplane(0, 1))
        );
        assert_eq!(Arrangement::from_int_normals(2, &[&[0, 0]]), Err(Error::ZeroNormal(0)));
        assert!(Arrangement::from_int_affine(1, &[(&[1], 0), (&[2], 2)]).is_ok());
        assert_eq!(
            Arrangement::from_int_affine(1, &[(&[1], 1), (&[2], 2)]),
            Err(Error::DuplicateHyperplane(0, 1))
        );
    }

    #[test]
    fn localize_boolean() {
        let a = boolean3();
        let x = a.flat(&[0, 1]).unwrap();
        assert_eq!(x.codim(), 2);
        let loc = a.localize(&x).unwrap();
        assert!(loc.same_hyperplanes(&Arrangement::from_int_normals(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap()));
        let a2 = Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let origin = a2.flat(&[0, 1, 2]).unwrap();
        assert_eq!(a2.localize(&origin).unwrap(), a2);
        assert_eq!(a2.flat(&[0, 1]), Err(Error::NotAFlat(vec![0, 1])));
    }

    #[test]
    fn ziegler_restriction_of_boolean() {
        let r = boolean3().ziegler_restrict(2).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.mult(), &[1, 1]);
        assert!(r.base().same_hyperplanes(&Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1]]).unwrap()));
    }

    #[test]
    fn ziegler_restriction_of_braid_arrangement() {
        // Oracle: H0 = {x1 = x2}; hyperplanes x1-x3 and x2-x3 meet H0 in the same
        // subspace, as do x1-x4 and x2-x4; x3-x4 alone.
        let b = braid_a3();
        let r = b.ziegler_restrict(0).unwrap();
        let mut m = r.mult().to_vec();
        m.sort();
        assert_eq!(m, [1, 2, 2]);
        assert_eq!(r.total() as usize, b.len() - 1);
    }

    #[test]
    fn cone_and_decone() {
        let aff = Arrangement::from_int_affine(1, &[(&[1], 0), (&[1], 1)]).unwrap();
        let c = aff.cone();
        let expected = Arrangement::from_int_normals(2, &[&[1, 0], &[1, -1], &[0, 1]]).unwrap();
        assert!(c.same_hyperplanes(&expected));
        let back = c.decone(2).unwrap();
        assert_eq!(back, aff);
    }

    #[test]
    fn essentialize_braid() {
        let e = braid_a3().essentialize().unwrap();
        assert_eq!(e.dim(), 3);
        assert_eq!(e.len(), 6);
        assert_eq!(e.rank(), 3);
        assert_eq!(boolean3().essentialize().unwrap(), boolean3());
        assert_eq!(Arrangement::empty(3).essentialize().unwrap().dim(), 0);
    }

    #[test]
    fn direct_products() {
        let x = Arrangement::from_int_normals(1, &[&[1]]).unwrap();
        let p = x.direct_product(&x);
        assert_eq!(p, Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1]]).unwrap());
        let a2 = Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let pp = a2.direct_product(&a2);
        assert_eq!((pp.dim(), pp.len(), pp.rank()), (4, 6, 4));
        assert_eq!(a2.direct_product(&Arrangement::empty(0)), a2);
    }

    #[test]
    fn affine_closure_detects_empty_intersections() {
        let a = Arrangement::from_int_affine(2, &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0)]).unwrap();
        assert_eq!(a.closure(&[0, 1]).unwrap(), None);
        let p = a.closure(&[0, 2]).unwrap().unwrap();
        assert_eq!(p.codim(), 2);
        let (point, dirs) = a.flat_subspace(&a.closure(&[1]).unwrap().unwrap());
        assert_eq!(point, [rat(1), rat(0)]);
        assert_eq!(dirs.len(), 1);
    }

    #[test]
    fn defining_polynomial_degree() {
        let m = Multiarrangement::new(boolean3(), vec![2, 0, 1]).unwrap();
        assert_eq!(m.total(), 3);
        let q = m.defining_polynomial();
        assert_eq!(q.degree(), Some(3));
        assert_eq!(q.to_string(), "x^2*z");
        assert_eq!(m.support().len(), 2);
    }
}
