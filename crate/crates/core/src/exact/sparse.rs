use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{primitive_integer_vector, Rational};

/// Sparse integer row: strictly increasing columns, no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    /// From `(column, value)` pairs in any order; duplicate columns are summed.
    pub fn from_integers(pairs: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut map: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (c, v) in pairs {
            *map.entry(c).or_insert_with(BigInt::zero) += v;
        }
        SparseRow { entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// From rational `(column, value)` pairs, scaled to a primitive integer row.
    pub fn from_rationals(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in pairs {
            *map.entry(c).or_insert_with(Rational::zero) += v;
        }
        let (cols, vals): (Vec<usize>, Vec<Rational>) =
            map.into_iter().filter(|(_, v)| !v.is_zero()).unzip();
        let ints = primitive_integer_vector(&vals);
        SparseRow { entries: cols.into_iter().zip(ints).collect() }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseRow::from_rationals(v.iter().cloned().enumerate())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn lead(&self) -> Option<usize> {
        self.entries.first().map(|(c, _)| *c)
    }

    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if self.entries.first().is_some_and(|(_, v)| v.is_negative()) {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            for (_, v) in &mut self.entries {
                *v = &*v / &g;
            }
        }
    }

    /// Cancels the leading entry of `self` against `pivot` (same leading column).
    fn eliminate(&self, pivot: &SparseRow) -> SparseRow {
        let a = &self.entries[0].1;
        let b = &pivot.entries[0].1;
        let g = a.gcd(b);
        let fs = b / &g;
        let fp = a / &g;
        let mut out = Vec::with_capacity(self.entries.len() + pivot.entries.len());
        let (mut i, mut j) = (1, 1);
        while i < self.entries.len() || j < pivot.entries.len() {
            let ci = self.entries.get(i).map_or(usize::MAX, |e| e.0);
            let cj = pivot.entries.get(j).map_or(usize::MAX, |e| e.0);
            if ci < cj {
                out.push((ci, &self.entries[i].1 * &fs));
                i += 1;
            } else if cj < ci {
                out.push((cj, -(&pivot.entries[j].1 * &fp)));
                j += 1;
            } else {
                let v = &self.entries[i].1 * &fs - &pivot.entries[j].1 * &fp;
                if !v.is_zero() {
                    out.push((ci, v));
                }
                i += 1;
                j += 1;
            }
        }
        let mut row = SparseRow { entries: out };
        row.make_primitive();
        row
    }
}

/// Row echelon form over `Z` built by inserting rows one at a time.
///
/// Elimination is fraction free: two rows with the same leading column are
/// combined with their cofactors and the result is divided by its content.
/// When a reduced row is sparser than the stored pivot row with the same
/// leading column, the two swap roles, which keeps pivot rows short on the
/// structured systems this crate produces. Insertion order fixes the result.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rows.len()
    }

    /// Inserts a row; returns `true` when the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = row;
        row.make_primitive();
        while let Some(lead) = row.lead() {
            debug_assert!(lead < self.ncols);
            match self.rows.get_mut(&lead) {
                None => {
                    self.rows.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    if row.len() < pivot.len() {
                        core::mem::swap(pivot, &mut row);
                    }
                    row = row.eliminate(pivot);
                }
            }
        }
        false
    }

    /// Whether `row` lies in the row space, without modifying it.
    pub fn contains(&self, row: &SparseRow) -> bool {
        let mut row = row.clone();
        row.make_primitive();
        while let Some(lead) = row.lead() {
            match self.rows.get(&lead) {
                None => return false,
                Some(pivot) => row = row.eliminate(pivot),
            }
        }
        true
    }

    /// Columns without a pivot; the kernel has one basis vector per free column.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// The kernel vector that is 1 at free column `free`, 0 at the other free
    /// columns, obtained by back substitution.
    pub fn kernel_vector(&self, free: usize) -> Vec<Rational> {
        assert!(!self.rows.contains_key(&free), "column {free} is a pivot column");
        let mut x = vec![Rational::zero(); self.ncols];
        x[free] = Rational::one();
        for (&lead, row) in self.rows.iter().rev() {
            if lead > free {
                continue;
            }
            let mut s = Rational::zero();
            for (c, v) in &row.entries[1..] {
                if !x[*c].is_zero() {
                    s += &x[*c] * Rational::from_integer(v.clone());
                }
            }
            if !s.is_zero() {
                x[lead] = -s / Rational::from_integer(row.entries[0].1.clone());
            }
        }
        x
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.free_columns().into_iter().map(|f| self.kernel_vector(f)).collect()
    }
}

impl SparseRow {
    /// Exact product with a rational vector.
    pub fn dot(&self, v: &[Rational]) -> Rational {
        self.entries
            .iter()
            .filter(|(c, _)| !v[*c].is_zero())
            .fold(Rational::zero(), |acc, (c, a)| acc + &v[*c] * Rational::from_integer(a.clone()))
    }
}
