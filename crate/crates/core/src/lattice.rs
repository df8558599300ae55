//! Intersection posets, Möbius functions and characteristic polynomials.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::{Arrangement, Equations, Flat};
use crate::exact::{IntegerRoots, Rational, UniPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn from_indices(n: usize, idx: &[usize]) -> Self {
        let mut s = BitSet::new(n);
        for &i in idx {
            s.0[i / 64] |= 1 << (i % 64);
        }
        s
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= *b;
        }
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// A flat of the intersection poset together with its Möbius value `μ(V, X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetFlat {
    pub flat: Flat,
    pub mobius: BigInt,
}

/// All nonempty intersections of an arrangement graded by codimension.
///
/// Level 0 holds only the ambient space. Within a level flats are sorted by
/// their hyperplane index sets.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    dim: usize,
    levels: Vec<Vec<PosetFlat>>,
    covers: Vec<Vec<Vec<usize>>>,
}

impl IntersectionPoset {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Flats of codimension `codim` (empty past the rank).
    pub fn level(&self, codim: usize) -> &[PosetFlat] {
        self.levels.get(codim).map_or(&[], Vec::as_slice)
    }

    pub fn levels(&self) -> &[Vec<PosetFlat>] {
        &self.levels
    }

    /// Positions in level `codim + 1` of the flats covering the given flat.
    pub fn covers(&self, codim: usize, index: usize) -> &[usize] {
        &self.covers[codim][index]
    }

    pub fn num_flats(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn flats(&self) -> impl Iterator<Item = &PosetFlat> {
        self.levels.iter().flatten()
    }

    /// `χ(A, t) = Σ_X μ(X) t^{dim X}`.
    pub fn char_poly(&self) -> CharPoly {
        let mut coeffs = vec![Rational::zero(); self.dim + 1];
        for pf in self.flats() {
            coeffs[self.dim - pf.flat.codim()] += Rational::from_integer(pf.mobius.clone());
        }
        CharPoly { dim: self.dim, poly: UniPoly::new(coeffs) }
    }
}

/// The full intersection poset (only nonempty flats for affine input).
pub fn build_poset(a: &Arrangement) -> IntersectionPoset {
    build_poset_to(a, a.dim())
}

/// Intersection poset truncated at codimension `max_codim`.
pub fn build_poset_to(a: &Arrangement, max_codim: usize) -> IntersectionPoset {
    let n = a.len();
    let rows: Vec<Vec<Rational>> = a.hyperplanes().iter().map(|h| h.augmented()).collect();
    let mut levels: Vec<Vec<(BitSet, Flat, Equations)>> =
        vec![vec![(BitSet::new(n), Flat::whole_space(), Equations::new(a.dim()))]];
    for codim in 1..=max_codim {
        let mut next: BTreeMap<Vec<usize>, (BitSet, Equations)> = BTreeMap::new();
        for (set, _, eq) in &levels[codim - 1] {
            let mut done = set.clone();
            for h in 0..n {
                if done.contains(h) {
                    continue;
                }
                let Some(eq2) = eq.with(&rows[h]) else { continue };
                if !eq2.is_consistent() {
                    continue;
                }
                let idx: Vec<usize> = (0..n)
                    .filter(|&g| set.contains(g) || g == h || eq2.contains(&rows[g]))
                    .collect();
                let s = BitSet::from_indices(n, &idx);
                done.union_with(&s);
                next.entry(idx).or_insert((s, eq2));
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(
            next.into_iter()
                .map(|(idx, (s, eq))| (s, Flat::from_parts(idx, codim), eq))
                .collect(),
        );
    }

    // μ(X) = -Σ_{Y strictly above X} μ(Y), where "above" is inclusion of index sets.
    let mut mobius: Vec<Vec<BigInt>> = Vec::with_capacity(levels.len());
    mobius.push(vec![BigInt::one()]);
    for r in 1..levels.len() {
        let mut mu_r = Vec::with_capacity(levels[r].len());
        for (s, _, _) in &levels[r] {
            let mut acc = BigInt::zero();
            for (q, level) in levels.iter().enumerate().take(r) {
                for (i, (t, _, _)) in level.iter().enumerate() {
                    if t.is_subset(s) {
                        acc += &mobius[q][i];
                    }
                }
            }
            mu_r.push(-acc);
        }
        mobius.push(mu_r);
    }

    let mut covers: Vec<Vec<Vec<usize>>> = Vec::with_capacity(levels.len());
    for r in 0..levels.len() {
        let up = levels.get(r + 1);
        covers.push(
            levels[r]
                .iter()
                .map(|(s, _, _)| {
                    up.map_or_else(Vec::new, |up| {
                        up.iter()
                            .enumerate()
                            .filter(|(_, (t, _, _))| s.is_subset(t))
                            .map(|(j, _)| j)
                            .collect()
                    })
                })
                .collect(),
        );
    }

    let levels = levels
        .into_iter()
        .zip(mobius)
        .map(|(lvl, mu)| {
            lvl.into_iter()
                .zip(mu)
                .map(|((_, flat, _), mobius)| PosetFlat { flat, mobius })
                .collect()
        })
        .collect();
    IntersectionPoset { dim: a.dim(), levels, covers }
}

/// Characteristic polynomial with the ambient dimension it was computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    dim: usize,
    poly: UniPoly,
}

impl CharPoly {
    pub fn new(dim: usize, poly: UniPoly) -> Self {
        CharPoly { dim, poly }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn into_poly(self) -> UniPoly {
        self.poly
    }

    pub fn integer_roots(&self) -> IntegerRoots {
        self.poly.integer_roots().expect("characteristic polynomials are monic")
    }

    /// Whether `χ(t) = Π (t - e_i)` exactly.
    pub fn terao_check(&self, exponents: &[i64]) -> bool {
        terao_check(self, exponents)
    }

    pub fn factored_string(&self) -> alloc::string::String {
        self.poly.factored_string()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub fn char_poly(a: &Arrangement) -> CharPoly {
    build_poset(a).char_poly()
}

/// Size limit for the subset expansion in [`whitney_char_poly`].
pub const WHITNEY_MAX_HYPERPLANES: usize = 20;

/// Independent oracle: `χ(A, t) = Σ_B (-1)^{|B|} t^{ℓ - rank B}` over all
/// subsets `B` with nonempty intersection.
pub fn whitney_char_poly(a: &Arrangement) -> Result<CharPoly> {
    if a.len() > WHITNEY_MAX_HYPERPLANES {
        return Err(Error::TooLarge(alloc::format!(
            "whitney expansion over {} hyperplanes (limit {})",
            a.len(),
            WHITNEY_MAX_HYPERPLANES
        )));
    }
    let rows: Vec<Vec<Rational>> = a.hyperplanes().iter().map(|h| h.augmented()).collect();
    let mut counts = vec![BigInt::zero(); a.dim() + 1];
    // Depth-first over include/exclude decisions. Including a hyperplane whose
    // equation is already implied keeps the rank; inconsistent branches are
    // pruned since every superset is inconsistent too.
    fn visit(rows: &[Vec<Rational>], i: usize, eq: &Equations, size: usize, counts: &mut [BigInt]) {
        if i == rows.len() {
            let sign = if size.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            counts[eq.rank()] += sign;
            return;
        }
        visit(rows, i + 1, eq, size, counts);
        match eq.with(&rows[i]) {
            None => visit(rows, i + 1, eq, size + 1, counts),
            Some(next) if next.is_consistent() => visit(rows, i + 1, &next, size + 1, counts),
            Some(_) => {}
        }
    }
    visit(&rows, 0, &Equations::new(a.dim()), 0, &mut counts);
    let ell = a.dim();
    let mut coeffs = vec![Rational::zero(); ell + 1];
    for (rank, c) in counts.into_iter().enumerate() {
        coeffs[ell - rank] += Rational::from_integer(c);
    }
    Ok(CharPoly { dim: ell, poly: UniPoly::new(coeffs) })
}

pub fn terao_check(chi: &CharPoly, exponents: &[i64]) -> bool {
    exponents.len() == chi.dim && *chi.poly() == UniPoly::from_integer_roots(exponents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;

    fn boolean3() -> Arrangement {
        Arrangement::from_int_normals(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    fn a2() -> Arrangement {
        Arrangement::from_int_normals(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn boolean_lattice() {
        let p = build_poset(&boolean3());
        assert_eq!(p.num_flats(), 8);
        assert_eq!(p.levels().iter().map(Vec::len).collect::<Vec<_>>(), [1, 3, 3, 1]);
        assert_eq!(p.level(3)[0].mobius, BigInt::from(-1));
        assert_eq!(p.char_poly().into_poly(), UniPoly::from_integer_roots(&[1, 1, 1]));
        assert_eq!(p.covers(0, 0), &[0, 1, 2]);
        assert_eq!(p.covers(1, 0).len(), 2);
    }

    #[test]
    fn three_lines_through_origin() {
        // μ(V) = 1, μ(lines) = -1, μ(0) = -(1 - 3) = 2
        let p = build_poset(&a2());
        assert_eq!(p.levels().iter().map(Vec::len).collect::<Vec<_>>(), [1, 3, 1]);
        assert_eq!(p.level(2)[0].mobius, BigInt::from(2));
        assert_eq!(p.char_poly().into_poly(), UniPoly::from_ints(&[2, -3, 1]));
    }

    #[test]
    fn affine_poset_skips_empty_intersections() {
        let a = Arrangement::from_int_affine(2, &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0)]).unwrap();
        let p = build_poset(&a);
        assert_eq!(p.level(1).len(), 3);
        assert_eq!(p.level(2).len(), 2);
        // χ = t^2 - 3t + 2
        assert_eq!(p.char_poly().into_poly(), UniPoly::from_ints(&[2, -3, 1]));
    }

    #[test]
    fn shi_a2_cone() {
        let shi = Arrangement::from_int_normals(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, -1], &[0, 1, -1], &[1, 1, -1]],
        )
        .unwrap();
        let chi = char_poly(&shi);
        assert_eq!(chi.into_poly(), UniPoly::from_ints(&[-9, 15, -7, 1]));
        assert_eq!(whitney_char_poly(&shi).unwrap().into_poly(), UniPoly::from_ints(&[-9, 15, -7, 1]));
    }

    #[test]
    fn whitney_matches_on_small_inputs() {
        assert_eq!(whitney_char_poly(&Arrangement::empty(3)).unwrap().into_poly(), UniPoly::monomial(3));
        assert_eq!(char_poly(&Arrangement::empty(3)).into_poly(), UniPoly::monomial(3));
        // dE(x^2 y^2 (x+y)^1): x = 0, 1; y = 0, 1; x + y = 0
        let de = Arrangement::from_int_affine(
            2,
            &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0), (&[0, 1], 1), (&[1, 1], 0)],
        )
        .unwrap();
        assert_eq!(char_poly(&de), whitney_char_poly(&de).unwrap());
        let too_big = Arrangement::new(
            1,
            (1..=21).map(|c| Hyperplane::from_ints(&[1], c)).collect(),
        )
        .unwrap();
        assert!(matches!(whitney_char_poly(&too_big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn terao() {
        let chi = CharPoly::new(3, UniPoly::from_integer_roots(&[1, 3, 3]));
        assert!(terao_check(&chi, &[1, 3, 3]));
        assert!(!terao_check(&chi, &[1, 2, 4]));
        let irreducible = CharPoly::new(2, UniPoly::from_ints(&[21, -9, 1]));
        assert!(irreducible.integer_roots().roots.is_empty());
        for e1 in 0..10 {
            assert!(!terao_check(&irreducible, &[e1, 9 - e1]));
        }
        let irreducible_quad = CharPoly::new(3, &UniPoly::from_integer_roots(&[1]) * &UniPoly::from_ints(&[13, -7, 1]));
        for e in 0..8 {
            assert!(!terao_check(&irreducible_quad, &[1, e, 7 - e]));
        }
    }
}
