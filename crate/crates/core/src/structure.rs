//! Locally `A_2` arrangements, positive systems and the extension `E(A, m)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_traits::{One, Zero};

use crate::arrangement::{Arrangement, Flat, Hyperplane};
use crate::exact::{RatMatrix, Rational};
use crate::lattice::build_poset_to;
use crate::{Error, Result};

/// A codimension two flat lying on exactly three hyperplanes, labeled so that
/// `α_sum = α_parts[0] + α_parts[1]` for the forms of a positive system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub flat: Flat,
    pub sum: usize,
    pub parts: [usize; 2],
}

impl Triple {
    pub fn indices(&self) -> [usize; 3] {
        [self.sum, self.parts[0], self.parts[1]]
    }
}

/// Codimension two flats of `a` and the hyperplanes through them.
fn codim2_flats(a: &Arrangement) -> Vec<Flat> {
    build_poset_to(a, 2).level(2).iter().map(|pf| pf.flat.clone()).collect()
}

/// Codimension two flats on exactly three hyperplanes, sorted by index set.
pub fn full_triples(a: &Arrangement) -> Vec<Flat> {
    codim2_flats(a).into_iter().filter(|f| f.indices().len() == 3).collect()
}

/// Every codimension two flat lies on at most three hyperplanes.
pub fn is_locally_a2(a: &Arrangement) -> bool {
    codim2_flats(a).iter().all(|f| f.indices().len() <= 3)
}

fn vec_sum_eq(s: &[Rational], p: &[Rational], q: &[Rational]) -> bool {
    s.iter().zip(p).zip(q).all(|((s, p), q)| *s == p + q)
}

/// Labels the triple `ijk` under the given forms, if some sum relation holds.
fn label(forms: &[Vec<Rational>], flat: &Flat) -> Option<Triple> {
    let [i, j, k] = <[usize; 3]>::try_from(flat.indices()).ok()?;
    [(i, j, k), (j, i, k), (k, i, j)]
        .into_iter()
        .find(|&(s, p, q)| vec_sum_eq(&forms[s], &forms[p], &forms[q]))
        .map(|(s, p, q)| Triple { flat: flat.clone(), sum: s, parts: [p, q] })
}

/// Scaled defining forms `c_H α_H` that satisfy a sum relation on every triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    arrangement: Arrangement,
    scalings: Vec<Rational>,
    triples: Vec<Triple>,
}

impl PositiveSystem {
    /// Validates the scalings; fails with the first triple admitting no sum relation.
    pub fn new(a: &Arrangement, scalings: Vec<Rational>) -> Result<Self> {
        if !a.is_central() {
            return Err(Error::NotCentral);
        }
        if scalings.len() != a.len() {
            return Err(Error::MultiplicityLength { expected: a.len(), found: scalings.len() });
        }
        if let Some(i) = scalings.iter().position(Zero::is_zero) {
            return Err(Error::Precondition(alloc::format!("scaling of hyperplane {i} is zero")));
        }
        if let Some(f) = codim2_flats(a).into_iter().find(|f| f.indices().len() > 3) {
            return Err(Error::NotLocallyA2(f.indices()[0]));
        }
        let scaled = Arrangement::new(
            a.dim(),
            a.hyperplanes().iter().zip(&scalings).map(|(h, c)| h.scaled(c)).collect(),
        )?;
        let forms = scaled.normals();
        let mut triples = Vec::new();
        for flat in full_triples(a) {
            match label(&forms, &flat) {
                Some(t) => triples.push(t),
                None => {
                    let idx = flat.indices();
                    return Err(Error::NotPositiveSystem([idx[0], idx[1], idx[2]]));
                }
            }
        }
        Ok(PositiveSystem { arrangement: scaled, scalings, triples })
    }

    /// The stored forms as given.
    pub fn identity(a: &Arrangement) -> Result<Self> {
        PositiveSystem::new(a, vec![Rational::one(); a.len()])
    }

    /// The arrangement with its forms replaced by `c_H α_H`.
    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn scalings(&self) -> &[Rational] {
        &self.scalings
    }

    pub fn form(&self, h: usize) -> &[Rational] {
        self.arrangement.hyperplane(h).normal()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.scalings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scalings.is_empty()
    }

    /// The positive system induced on the hyperplanes through `flat`.
    pub fn localize(&self, flat: &Flat) -> Result<PositiveSystem> {
        let sub = self.arrangement.localize(flat)?;
        PositiveSystem::new(&sub, vec![Rational::one(); sub.len()])
    }

    /// The positive system on a subarrangement given by indices.
    pub fn restrict(&self, indices: &[usize]) -> Result<PositiveSystem> {
        let sub = self.arrangement.sub_arrangement(indices);
        PositiveSystem::new(&sub, vec![Rational::one(); sub.len()])
    }

    /// The same forms written in coordinates of the row space of the normals.
    pub fn essentialize(&self) -> Result<PositiveSystem> {
        let ess = self.arrangement.essentialize()?;
        PositiveSystem::new(&ess, vec![Rational::one(); ess.len()])
    }
}

/// Whether scaling the stored forms by `scalings` gives a positive system.
pub fn is_positive_system(a: &Arrangement, scalings: &[Rational]) -> bool {
    PositiveSystem::new(a, scalings.to_vec()).is_ok()
}

/// Union-find over hyperplanes with multiplicative potentials
/// `ratio[i] = c_i / c_parent(i)`, supporting rollback.
struct Potentials {
    parent: Vec<usize>,
    ratio: Vec<Rational>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl Potentials {
    fn new(n: usize) -> Self {
        Potentials {
            parent: (0..n).collect(),
            ratio: vec![Rational::one(); n],
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    /// Root of `i` and `c_i / c_root`.
    fn find(&self, mut i: usize) -> (usize, Rational) {
        let mut r = Rational::one();
        while self.parent[i] != i {
            r *= &self.ratio[i];
            i = self.parent[i];
        }
        (i, r)
    }

    /// Imposes `c_x / c_y = r`; returns false on contradiction.
    fn relate(&mut self, x: usize, y: usize, r: &Rational) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return &px / &py == *r;
        }
        // c_rx / c_ry = (c_rx / c_x)(c_x / c_y)(c_y / c_ry)
        let root_ratio = r * &py / &px;
        let (child, parent, ratio) = if self.size[rx] <= self.size[ry] {
            (rx, ry, root_ratio)
        } else {
            (ry, rx, root_ratio.recip())
        };
        self.parent[child] = parent;
        self.ratio[child] = ratio;
        self.size[parent] += self.size[child];
        self.history.push(child);
        true
    }

    fn checkpoint(&self) -> usize {
        self.history.len()
    }

    fn rollback(&mut self, to: usize) {
        while self.history.len() > to {
            let child = self.history.pop().expect("nonempty history");
            let parent = self.parent[child];
            self.size[parent] -= self.size[child];
            self.parent[child] = child;
            self.ratio[child] = Rational::one();
        }
    }
}

/// Searches for scalings of the stored forms forming a positive system.
///
/// Returns `Ok(None)` only after the whole search space is exhausted. The
/// stored forms are tried first. Within each connected block of triples the
/// hyperplane of smallest index keeps scaling 1.
pub fn find_positive_system(a: &Arrangement) -> Result<Option<PositiveSystem>> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    let flats = codim2_flats(a);
    if let Some(f) = flats.iter().find(|f| f.indices().len() > 3) {
        return Err(Error::Precondition(alloc::format!(
            "not locally A2: {} hyperplanes {:?} meet in codimension two",
            f.indices().len(),
            f.indices()
        )));
    }
    if let Ok(ps) = PositiveSystem::identity(a) {
        return Ok(Some(ps));
    }
    let triples: Vec<[usize; 3]> = flats
        .iter()
        .filter(|f| f.indices().len() == 3)
        .map(|f| [f.indices()[0], f.indices()[1], f.indices()[2]])
        .collect();
    // λ with λ_i α_i + λ_j α_j + λ_k α_k = 0; all entries are nonzero since
    // the three normals are pairwise independent.
    let lambdas: Vec<[Rational; 3]> = triples
        .iter()
        .map(|t| {
            let cols: Vec<Vec<Rational>> = (0..a.dim())
                .map(|r| t.iter().map(|&h| a.hyperplane(h).normal()[r].clone()).collect())
                .collect();
            let ns = RatMatrix::from_rows(3, cols).nullspace_basis();
            debug_assert_eq!(ns.len(), 1);
            let v = &ns[0];
            [v[0].clone(), v[1].clone(), v[2].clone()]
        })
        .collect();
    let order = connected_order(&triples);

    fn search(
        pos: usize,
        order: &[usize],
        triples: &[[usize; 3]],
        lambdas: &[[Rational; 3]],
        pot: &mut Potentials,
    ) -> bool {
        let Some(&t) = order.get(pos) else { return true };
        let h = triples[t];
        let l = &lambdas[t];
        // Label s as the sum: c_s α_s = c_p α_p + c_q α_q, so
        // (c_s, -c_p, -c_q) is proportional to (λ_s, λ_p, λ_q).
        for s in 0..3 {
            let (p, q) = ((s + 1) % 3, (s + 2) % 3);
            let mark = pot.checkpoint();
            let ok = pot.relate(h[p], h[s], &(-&l[p] / &l[s]))
                && pot.relate(h[q], h[s], &(-&l[q] / &l[s]));
            if ok && search(pos + 1, order, triples, lambdas, pot) {
                return true;
            }
            pot.rollback(mark);
        }
        false
    }

    let mut pot = Potentials::new(a.len());
    if !search(0, &order, &triples, &lambdas, &mut pot) {
        return Ok(None);
    }
    let mut raw: Vec<(usize, Rational)> = (0..a.len()).map(|i| pot.find(i)).collect();
    let mut first_of_root: Vec<Option<usize>> = vec![None; a.len()];
    for (i, (root, _)) in raw.iter().enumerate() {
        first_of_root[*root].get_or_insert(i);
    }
    let base: Vec<Rational> =
        raw.iter().map(|(root, _)| raw[first_of_root[*root].expect("seen")].1.clone()).collect();
    let scalings = raw.iter_mut().zip(base).map(|((_, r), b)| &*r / b).collect();
    PositiveSystem::new(a, scalings).map(Some)
}

/// Triple indices ordered so that each one after the first shares a
/// hyperplane with an earlier one whenever possible.
fn connected_order(triples: &[[usize; 3]]) -> Vec<usize> {
    let mut order = Vec::with_capacity(triples.len());
    let mut used = vec![false; triples.len()];
    let mut touched: BTreeSet<usize> = BTreeSet::new();
    while order.len() < triples.len() {
        let next = (0..triples.len())
            .filter(|&t| !used[t])
            .find(|&t| triples[t].iter().any(|h| touched.contains(h)))
            .or_else(|| (0..triples.len()).find(|&t| !used[t]))
            .expect("unused triple");
        used[next] = true;
        touched.extend(triples[next]);
        order.push(next);
    }
    order
}

fn check_len(ps: &PositiveSystem, m: &[u32]) -> Result<()> {
    if m.len() != ps.len() {
        return Err(Error::MultiplicityLength { expected: ps.len(), found: m.len() });
    }
    Ok(())
}

/// Every triple `α_i = α_j + α_k` with `m(H_i)` odd has `m(H_j)` or `m(H_k)` odd.
pub fn parity_condition(ps: &PositiveSystem, m: &[u32]) -> Result<bool> {
    check_len(ps, m)?;
    Ok(first_parity_violation(ps, m).is_none())
}

/// The first triple violating [`parity_condition`], if any.
pub fn first_parity_violation<'a>(ps: &'a PositiveSystem, m: &[u32]) -> Option<&'a Triple> {
    let odd = |h: usize| m[h] % 2 == 1;
    ps.triples().iter().find(|t| odd(t.sum) && !odd(t.parts[0]) && !odd(t.parts[1]))
}

/// For a `{0,1}`-valued `m`: every triple with `m(H_i) = 1` at the sum has
/// `m(H_j) = 1` or `m(H_k) = 1`.
pub fn zero_one_parity_condition(ps: &PositiveSystem, m: &[u32]) -> Result<bool> {
    check_len(ps, m)?;
    if let Some(&v) = m.iter().find(|&&v| v > 1) {
        return Err(Error::Precondition(alloc::format!("multiplicity {v} is not 0 or 1")));
    }
    Ok(first_parity_violation(ps, m).is_none())
}

/// Integers `k` with `-(m-1)/2 <= k <= m/2`; exactly `m` of them.
pub fn k_range(m: u32) -> RangeInclusive<i64> {
    let m = i64::from(m);
    // -(m-1)/2 rounded up; for m = 0 this gives 1..=0, which is empty.
    let lo = -((m - 1).div_euclid(2));
    lo..=m.div_euclid(2)
}

/// `E(A, m)`: the forms `α_H - k z` for `k` in [`k_range`]`(m(H))`, hyperplane by
/// hyperplane, followed by `z = 0`. The new coordinate `z` is the last one.
pub fn extend(ps: &PositiveSystem, m: &[u32]) -> Result<Arrangement> {
    check_len(ps, m)?;
    let ell = ps.arrangement().dim();
    let mut hs = Vec::with_capacity(m.iter().map(|&v| v as usize).sum::<usize>() + 1);
    for (h, &mh) in m.iter().enumerate() {
        for k in k_range(mh) {
            let mut n = ps.form(h).to_vec();
            n.push(Rational::from_integer((-k).into()));
            hs.push(Hyperplane::linear(n));
        }
    }
    let mut z = vec![Rational::zero(); ell + 1];
    z[ell] = Rational::one();
    hs.push(Hyperplane::linear(z));
    Arrangement::new(ell + 1, hs)
}

/// `dE(A, m)`: the affine hyperplanes `α_H = k`, in the order used by [`extend`].
pub fn decone_extension(ps: &PositiveSystem, m: &[u32]) -> Result<Arrangement> {
    check_len(ps, m)?;
    let mut hs = Vec::new();
    for (h, &mh) in m.iter().enumerate() {
        for k in k_range(mh) {
            hs.push(Hyperplane::new(ps.form(h).to_vec(), Rational::from_integer(k.into())));
        }
    }
    Arrangement::new(ps.arrangement().dim(), hs)
}
