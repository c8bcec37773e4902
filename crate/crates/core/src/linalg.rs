//! Exact linear algebra over prime fields.
//!
//! Everything here is integer arithmetic modulo a prime — no floats, no
//! approximations. Subspaces are stored as canonical reduced-row-echelon
//! bases so that value equality coincides with equality of subspaces, and
//! enumeration emits each subspace exactly once in a deterministic order:
//! pivot-column profiles in lexicographic order, then free entries in
//! lexicographic order. Enumerations are guarded by an explicit budget; the
//! exact subspace count (a Gaussian binomial) is computed up front and an
//! over-budget request fails with that count.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{is_prime, PrimeField};

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MatrixFp {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Outcome of Gauss–Jordan elimination: the canonical reduced row echelon
/// form, its rank, and the pivot columns in increasing order.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Reduced row echelon form with zero rows trimmed.
    pub matrix: MatrixFp,
    /// Number of nonzero rows.
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl MatrixFp {
    /// Builds a matrix from row-major entries, reducing them mod `p`.
    pub fn new(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> MatrixFp {
        debug_assert!(is_prime(p));
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let entries = entries.into_iter().map(|e| e % p).collect();
        MatrixFp { p, rows, cols, entries }
    }

    /// All-zero matrix.
    pub fn zero(p: u64, rows: usize, cols: usize) -> MatrixFp {
        MatrixFp::new(p, rows, cols, vec![0; rows * cols])
    }

    /// Identity matrix of size `n`.
    pub fn identity(p: u64, n: usize) -> MatrixFp {
        let mut m = MatrixFp::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from explicit rows (all of equal length).
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> MatrixFp {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        MatrixFp::new(p, rows.len(), cols, rows.concat())
    }

    /// Field modulus.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    /// Sets entry `(r, c)` to `v mod p`.
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Matrix-vector product `M·v` (`v` has `cols` entries).
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b % self.p, self.p)) % self.p)
            })
            .collect()
    }

    /// Matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &MatrixFp) -> MatrixFp {
        assert_eq!(self.p, rhs.p, "moduli differ");
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = MatrixFp::zero(self.p, self.rows, rhs.cols);
        for r in 0..self.rows {
            for inner in 0..self.cols {
                let a = self.entry(r, inner);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = mul_mod(a, rhs.entry(inner, c), self.p);
                    let cur = out.entry(r, c);
                    out.set(r, c, cur + add);
                }
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> MatrixFp {
        let mut out = MatrixFp::zero(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.entry(r, c));
            }
        }
        out
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &MatrixFp) -> MatrixFp {
        assert_eq!(self.p, other.p, "moduli differ");
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        MatrixFp::new(self.p, self.rows + other.rows, self.cols, entries)
    }

    /// Gauss–Jordan elimination to the canonical reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            // Find a pivot at or below row r in column c.
            let Some(pr) = (r..m.rows).find(|&i| m.entry(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = PrimeField::new(p).unwrap().element(m.entry(r, c)).inverse().unwrap();
            m.scale_row(r, inv.value());
            for i in 0..m.rows {
                if i != r && m.entry(i, c) != 0 {
                    let factor = m.entry(i, c);
                    m.row_sub_scaled(i, r, factor);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        let rank = r;
        let matrix = MatrixFp::new(p, rank, m.cols, m.entries[..rank * m.cols].to_vec());
        Rref { matrix, rank, pivots }
    }

    /// Rank via elimination.
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Right null space `{x : M·x = 0}` as a canonical subspace of `F_p^cols`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, rank, pivots } = self.rref();
        let mut basis_rows = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut set = vec![false; self.cols];
            for &c in &pivots {
                set[c] = true;
            }
            set
        };
        for free in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                // x[pc] = −R[i][free]
                v[pc] = (self.p - matrix.entry(i, free)) % self.p;
            }
            basis_rows.push(v);
        }
        Subspace::from_spanning(self.p, self.cols, &basis_rows)
    }

    /// Image of the subspace `u` under this matrix, as a subspace of the
    /// codomain `F_p^rows`.
    pub fn image_of(&self, u: &Subspace) -> Subspace {
        assert_eq!(self.p, u.modulus(), "moduli differ");
        assert_eq!(self.cols, u.ambient_dim(), "domain dimension differs");
        let rows: Vec<Vec<u64>> =
            (0..u.dim()).map(|i| self.mul_vec(u.basis().row(i))).collect();
        Subspace::from_spanning(self.p, self.rows, &rows)
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: u64) {
        for c in 0..self.cols {
            let v = self.entry(r, c);
            self.set(r, c, mul_mod(v, factor, self.p));
        }
    }

    /// row_i -= factor * row_j
    fn row_sub_scaled(&mut self, i: usize, j: usize, factor: u64) {
        for c in 0..self.cols {
            let sub = mul_mod(factor, self.entry(j, c), self.p);
            let v = self.entry(i, c);
            self.set(i, c, v + self.p - sub);
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// A linear subspace of `F_p^ambient`, stored as a canonical RREF basis so
/// that equal subspaces are equal values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subspace {
    basis: MatrixFp, // rank × ambient, canonical RREF, no zero rows
    ambient: usize,
}

impl Subspace {
    /// Canonical subspace spanned by the given vectors.
    pub fn from_spanning(p: u64, ambient: usize, rows: &[Vec<u64>]) -> Subspace {
        let m = if rows.is_empty() {
            MatrixFp::zero(p, 0, ambient)
        } else {
            MatrixFp::from_rows(p, rows)
        };
        assert_eq!(m.cols(), ambient, "spanning vectors must have ambient length");
        Subspace { basis: m.rref().matrix, ambient }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &MatrixFp) -> Subspace {
        Subspace { basis: m.rref().matrix, ambient: m.cols() }
    }

    /// The zero subspace of `F_p^ambient`.
    pub fn zero(p: u64, ambient: usize) -> Subspace {
        Subspace { basis: MatrixFp::zero(p, 0, ambient), ambient }
    }

    /// The full space `F_p^ambient`.
    pub fn full(p: u64, ambient: usize) -> Subspace {
        Subspace { basis: MatrixFp::identity(p, ambient), ambient }
    }

    /// Wraps an already-canonical RREF matrix without re-reducing.
    pub(crate) fn from_rref_unchecked(basis: MatrixFp) -> Subspace {
        let ambient = basis.cols();
        debug_assert_eq!(basis.rref().matrix, basis, "basis must already be canonical");
        Subspace { basis, ambient }
    }

    /// Field modulus.
    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Canonical basis (RREF rows).
    pub fn basis(&self) -> &MatrixFp {
        &self.basis
    }

    /// Pivot column of each basis row (leading-one positions).
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| self.basis.row(r).iter().position(|&e| e != 0).expect("no zero basis rows"))
            .collect()
    }

    /// Membership test by reduction against the canonical basis.
    pub fn contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must be the ambient dimension");
        let p = self.modulus();
        let mut v: Vec<u64> = v.iter().map(|&x| x % p).collect();
        for (r, &c) in self.pivot_columns().iter().enumerate() {
            let factor = v[c];
            if factor != 0 {
                for j in 0..self.ambient {
                    let sub = mul_mod(factor, self.basis.entry(r, j), p);
                    v[j] = (v[j] + p - sub) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// True when every vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    /// Sum (span of the union).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.assert_compatible(other);
        if self.dim() == 0 {
            return other.clone();
        }
        if other.dim() == 0 {
            return self.clone();
        }
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    /// Intersection, computed as the kernel of the stacked dual system: each
    /// operand is replaced by the functionals annihilating it, and the
    /// intersection is the joint kernel.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.assert_compatible(other);
        let ann_self = self.annihilator();
        let ann_other = other.annihilator();
        ann_self.basis.vstack(&ann_other.basis).kernel()
    }

    /// Dimension of the intersection via `dim U + dim W − dim(U + W)`; much
    /// cheaper than materializing the intersection basis.
    pub fn dim_intersection(&self, other: &Subspace) -> usize {
        self.assert_compatible(other);
        let sum_rank = if self.dim() == 0 || other.dim() == 0 {
            self.dim() + other.dim()
        } else {
            self.basis.vstack(&other.basis).rank()
        };
        self.dim() + other.dim() - sum_rank
    }

    /// The annihilator `{x : ⟨b, x⟩ = 0 for every basis vector b}`, i.e. the
    /// kernel of the basis matrix.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// All `p^dim` vectors, in lexicographic order of basis coefficients.
    pub fn vectors(&self) -> Vec<Vec<u64>> {
        let p = self.modulus();
        let dim = self.dim();
        let total = (p as u128).checked_pow(dim as u32).expect("subspace too large to enumerate");
        assert!(total <= 1 << 24, "subspace too large to enumerate");
        let mut out = Vec::with_capacity(total as usize);
        let mut coeffs = vec![0u64; dim];
        loop {
            let mut v = vec![0u64; self.ambient];
            for (r, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for j in 0..self.ambient {
                        v[j] = (v[j] + mul_mod(c, self.basis.entry(r, j), p)) % p;
                    }
                }
            }
            out.push(v);
            // Odometer increment, last coefficient fastest.
            let mut i = dim;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }

    /// Quotient structure `F_p^ambient / self`.
    pub fn quotient(&self) -> QuotientData {
        quotient_data(self)
    }

    fn assert_compatible(&self, other: &Subspace) {
        assert_eq!(self.modulus(), other.modulus(), "moduli differ");
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
    }
}

/// Number of `d`-dimensional subspaces of `F_p^k`: the Gaussian binomial
/// coefficient, computed exactly.
pub fn subspace_count(p: u64, k: usize, d: usize) -> BigUint {
    if d > k {
        return BigUint::zero();
    }
    let p = BigUint::from(p);
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for i in 0..d {
        numer *= p.pow((k - i) as u32) - 1u32;
        denom *= p.pow((i + 1) as u32) - 1u32;
    }
    numer / denom
}

/// Number of subspaces of `F_p^k` of any dimension.
pub fn total_subspace_count(p: u64, k: usize) -> BigUint {
    (0..=k).map(|d| subspace_count(p, k, d)).sum()
}

/// The `d`-element subsets of `{0, …, k−1}` in lexicographic order; these are
/// the possible pivot-column profiles of a `d`-dimensional subspace.
pub fn pivot_profiles(k: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    fn recurse(k: usize, d: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == d {
            out.push(current.clone());
            return;
        }
        let remaining = d - current.len();
        for c in start..=(k - remaining) {
            current.push(c);
            recurse(k, d, c + 1, current, out);
            current.pop();
        }
    }
    if d <= k {
        recurse(k, d, 0, &mut current, &mut out);
    }
    out
}

/// Iterator over all `d`-dimensional subspaces of `F_p^k` with a fixed
/// pivot-column profile; free entries advance lexicographically.
#[derive(Debug)]
pub struct ProfileIter {
    p: u64,
    k: usize,
    profile: Vec<usize>,
    /// (row, col) positions that may hold arbitrary values, row-major order.
    free_positions: Vec<(usize, usize)>,
    counter: Vec<u64>,
    done: bool,
}

impl ProfileIter {
    /// Starts enumeration for one profile.
    pub fn new(p: u64, k: usize, profile: Vec<usize>) -> ProfileIter {
        debug_assert!(profile.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(profile.iter().all(|&c| c < k));
        let pivot_set: Vec<bool> = {
            let mut set = vec![false; k];
            for &c in &profile {
                set[c] = true;
            }
            set
        };
        let mut free_positions = Vec::new();
        for (r, &pc) in profile.iter().enumerate() {
            for c in (pc + 1)..k {
                if !pivot_set[c] {
                    free_positions.push((r, c));
                }
            }
        }
        let counter = vec![0u64; free_positions.len()];
        ProfileIter { p, k, profile, free_positions, counter, done: false }
    }

    fn build(&self) -> Subspace {
        let d = self.profile.len();
        let mut m = MatrixFp::zero(self.p, d, self.k);
        for (r, &c) in self.profile.iter().enumerate() {
            m.set(r, c, 1);
        }
        for (&(r, c), &v) in self.free_positions.iter().zip(&self.counter) {
            m.set(r, c, v);
        }
        Subspace::from_rref_unchecked(m)
    }
}

impl Iterator for ProfileIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let subspace = self.build();
        // Odometer increment, last free position fastest.
        let mut i = self.counter.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counter[i] += 1;
            if self.counter[i] < self.p {
                break;
            }
            self.counter[i] = 0;
        }
        Some(subspace)
    }
}

/// Iterator over every `d`-dimensional subspace of `F_p^k`, each exactly
/// once, in profile-then-free-entry order.
#[derive(Debug)]
pub struct SubspaceIter {
    p: u64,
    k: usize,
    profiles: std::vec::IntoIter<Vec<usize>>,
    current: Option<ProfileIter>,
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            if let Some(iter) = &mut self.current {
                if let Some(s) = iter.next() {
                    return Some(s);
                }
            }
            let profile = self.profiles.next()?;
            self.current = Some(ProfileIter::new(self.p, self.k, profile));
        }
    }
}

/// Enumerates all `d`-dimensional subspaces of `F_p^k` after checking that
/// their exact count (the Gaussian binomial) does not exceed `budget`.
pub fn enumerate_subspaces(p: u64, k: usize, d: usize, budget: u64) -> Result<SubspaceIter> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let count = subspace_count(p, k, d);
    if count.to_u64().map_or(true, |c| c > budget) {
        return Err(Error::BudgetExceeded { required: count, budget });
    }
    Ok(SubspaceIter { p, k, profiles: pivot_profiles(k, d).into_iter(), current: None })
}

/// Canonical coset structure of `F_p^ambient / W`.
///
/// The representative of `v` is `v` minus the unique combination of basis
/// rows of `W` matching `v` on the pivot columns of `W`; it is zero on those
/// pivot columns, is a linear function of `v`, and two vectors share a
/// representative exactly when they differ by an element of `W`. Quotient
/// coordinates read the representative at the non-pivot columns, realizing
/// the quotient as `F_p^(ambient − dim W)` with a linear projection matrix.
#[derive(Clone, Debug)]
pub struct QuotientData {
    subspace: Subspace,
    /// ambient × ambient matrix sending `v` to its canonical representative.
    rep_matrix: MatrixFp,
    /// (ambient − dim) × ambient matrix of quotient coordinates.
    coord_matrix: MatrixFp,
}

/// Builds the quotient structure for `F_p^ambient / w`.
pub fn quotient_data(w: &Subspace) -> QuotientData {
    let p = w.modulus();
    let ambient = w.ambient_dim();
    let pivots = w.pivot_columns();
    let pivot_set: Vec<bool> = {
        let mut set = vec![false; ambient];
        for &c in &pivots {
            set[c] = true;
        }
        set
    };
    // rep(v) = v − Σ_r v[pivot_r]·basisrow_r, assembled column by column.
    let mut rep = MatrixFp::identity(p, ambient);
    for (r, &pc) in pivots.iter().enumerate() {
        // Subtract basisrow_r from column pc of the identity.
        for j in 0..ambient {
            let sub = w.basis().entry(r, j);
            let cur = rep.entry(j, pc);
            rep.set(j, pc, cur + p - sub);
        }
    }
    let nonpivot: Vec<usize> = (0..ambient).filter(|&c| !pivot_set[c]).collect();
    let mut coord = MatrixFp::zero(p, nonpivot.len(), ambient);
    for (out_row, &src_row) in nonpivot.iter().enumerate() {
        for c in 0..ambient {
            coord.set(out_row, c, rep.entry(src_row, c));
        }
    }
    QuotientData { subspace: w.clone(), rep_matrix: rep, coord_matrix: coord }
}

impl QuotientData {
    /// The subspace being quotiented out.
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Dimension of the quotient space.
    pub fn quotient_dim(&self) -> usize {
        self.subspace.ambient_dim() - self.subspace.dim()
    }

    /// Canonical coset representative of `v`.
    pub fn representative(&self, v: &[u64]) -> Vec<u64> {
        self.rep_matrix.mul_vec(v)
    }

    /// Coordinates of the coset of `v` in `F_p^quotient_dim`.
    pub fn coordinates(&self, v: &[u64]) -> Vec<u64> {
        self.coord_matrix.mul_vec(v)
    }

    /// The linear projection onto quotient coordinates; its kernel is the
    /// quotiented subspace.
    pub fn coordinate_map(&self) -> &MatrixFp {
        &self.coord_matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn rref_fixes_identity_and_kills_zero() {
        let id = MatrixFp::identity(5, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);

        let z = MatrixFp::zero(5, 2, 3);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix.rows(), 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_detects_dependent_rows() {
        // Over F_2 the third row is the sum of the first two.
        let m = MatrixFp::from_rows(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_is_canonical_under_row_operations() {
        let m = MatrixFp::from_rows(7, &[vec![2, 3, 1], vec![4, 0, 5]]);
        // Scale and shuffle rows; add one row to the other.
        let m2 = MatrixFp::from_rows(7, &[vec![4 * 3 % 7, 0, 5 * 3 % 7], vec![(2 + 4) % 7, 3, 6]]);
        assert_eq!(m.rref().matrix, m2.rref().matrix);
    }

    #[test]
    fn kernel_of_single_functional() {
        let m = MatrixFp::from_rows(5, &[vec![1, 2]]);
        let ker = m.kernel();
        assert_eq!(ker.dim(), 1);
        assert_eq!(ker, Subspace::from_spanning(5, 2, &[vec![3, 1]]));
        assert!(ker.contains(&[3, 1]));
        assert!(ker.contains(&[1, 2]));
    }

    #[test]
    fn kernel_extremes() {
        assert_eq!(MatrixFp::identity(3, 4).kernel(), Subspace::zero(3, 4));
        assert_eq!(MatrixFp::zero(3, 2, 4).kernel(), Subspace::full(3, 4));
    }

    #[test]
    fn intersection_of_planes() {
        let u = Subspace::from_spanning(2, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::from_spanning(2, 3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let meet = u.intersect(&w);
        assert_eq!(meet, Subspace::from_spanning(2, 3, &[vec![1, 1, 0]]));
        assert_eq!(u.dim_intersection(&w), 1);
    }

    #[test]
    fn intersection_extremes() {
        let u = Subspace::from_spanning(5, 3, &[vec![1, 2, 3]]);
        assert_eq!(u.intersect(&Subspace::full(5, 3)), u);
        assert_eq!(u.intersect(&Subspace::zero(5, 3)), Subspace::zero(5, 3));
    }

    #[test]
    fn image_of_line_under_projection() {
        let m = MatrixFp::from_rows(5, &[vec![1, 0]]);
        let u = Subspace::from_spanning(5, 2, &[vec![1, 2]]);
        assert_eq!(m.image_of(&u), Subspace::full(5, 1));
        // A line inside the kernel maps to zero.
        let v = Subspace::from_spanning(5, 2, &[vec![0, 1]]);
        assert_eq!(m.image_of(&v), Subspace::zero(5, 1));
    }

    #[test]
    fn gaussian_binomial_counts() {
        assert_eq!(subspace_count(2, 2, 1), BigUint::from(3u32));
        assert_eq!(subspace_count(2, 4, 2), BigUint::from(35u32));
        assert_eq!(subspace_count(3, 3, 1), BigUint::from(13u32));
        assert_eq!(subspace_count(5, 6, 3), BigUint::from(2_558_556u32));
        assert_eq!(subspace_count(7, 4, 0), BigUint::from(1u32));
        assert_eq!(subspace_count(7, 4, 4), BigUint::from(1u32));
        assert_eq!(subspace_count(7, 4, 5), BigUint::zero());
        // Symmetry [k d] = [k k−d].
        for d in 0..=4 {
            assert_eq!(subspace_count(3, 4, d), subspace_count(3, 4, 4 - d));
        }
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        for (p, k) in [(2u64, 4usize), (3, 3), (5, 2)] {
            for d in 0..=k {
                let expected = subspace_count(p, k, d).to_u64().unwrap();
                let all: Vec<Subspace> =
                    enumerate_subspaces(p, k, d, 1_000_000).unwrap().collect();
                assert_eq!(all.len() as u64, expected, "count at p={p} k={k} d={d}");
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len(), "duplicates at p={p} k={k} d={d}");
                for s in &all {
                    assert_eq!(s.dim(), d);
                    assert_eq!(s.ambient_dim(), k);
                    // Canonical: re-reducing the basis is a no-op.
                    assert_eq!(s.basis().rref().matrix, *s.basis());
                }
            }
        }
    }

    #[test]
    fn enumeration_rejects_oversized_requests() {
        let err = enumerate_subspaces(5, 6, 3, 100).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded { required: BigUint::from(2_558_556u32), budget: 100 }
        );
    }

    #[test]
    fn enumeration_order_is_profile_then_free_entries() {
        // F_2^2, d=1: profiles (0) then (1). Profile (0) has one free entry.
        let lines: Vec<Subspace> = enumerate_subspaces(2, 2, 1, 100).unwrap().collect();
        assert_eq!(
            lines,
            vec![
                Subspace::from_spanning(2, 2, &[vec![1, 0]]),
                Subspace::from_spanning(2, 2, &[vec![1, 1]]),
                Subspace::from_spanning(2, 2, &[vec![0, 1]]),
            ]
        );
    }

    #[test]
    fn quotient_by_the_diagonal_of_f2() {
        let w = Subspace::from_spanning(2, 2, &[vec![1, 1]]);
        let q = w.quotient();
        assert_eq!(q.quotient_dim(), 1);
        // Cosets: {00, 11} and {01, 10}.
        assert_eq!(q.representative(&[0, 0]), q.representative(&[1, 1]));
        assert_eq!(q.representative(&[0, 1]), q.representative(&[1, 0]));
        assert_ne!(q.representative(&[0, 0]), q.representative(&[0, 1]));
        // The coordinate map is linear with kernel W.
        assert_eq!(q.coordinate_map().kernel(), w);
    }

    #[test]
    fn quotient_representatives_are_idempotent_and_coset_true() {
        let w = Subspace::from_spanning(3, 3, &[vec![1, 2, 0]]);
        let q = w.quotient();
        for v in Subspace::full(3, 3).vectors() {
            let rep = q.representative(&v);
            assert_eq!(q.representative(&rep), rep, "idempotent");
            // v − rep ∈ W
            let diff: Vec<u64> =
                v.iter().zip(&rep).map(|(&a, &b)| (a + 3 - b) % 3).collect();
            assert!(w.contains(&diff));
        }
    }

    #[test]
    fn subspace_vectors_enumerates_the_whole_space() {
        let u = Subspace::from_spanning(3, 3, &[vec![1, 0, 1], vec![0, 1, 2]]);
        let vecs = u.vectors();
        assert_eq!(vecs.len(), 9);
        let distinct: BTreeSet<_> = vecs.iter().cloned().collect();
        assert_eq!(distinct.len(), 9);
        assert!(vecs.iter().all(|v| u.contains(v)));
    }

    fn arb_matrix(p: u64, max_dim: usize) -> impl Strategy<Value = MatrixFp> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c)
                .prop_map(move |entries| MatrixFp::new(p, r, c, entries))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(5, 5)) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix(3, 4)) {
            let r = m.rref().matrix;
            prop_assert_eq!(r.rref().matrix, r);
        }

        #[test]
        fn intersection_dim_shortcut_matches_materialized(
            a in arb_matrix(3, 4),
            b in arb_matrix(3, 4),
        ) {
            // Compare only when both live in the same ambient space.
            prop_assume!(a.cols() == b.cols());
            let u = Subspace::row_space(&a);
            let w = Subspace::row_space(&b);
            let meet = u.intersect(&w);
            prop_assert_eq!(meet.dim(), u.dim_intersection(&w));
            prop_assert!(meet.is_subspace_of(&u));
            prop_assert!(meet.is_subspace_of(&w));
        }

        #[test]
        fn image_dimension_formula(m in arb_matrix(3, 4), spanning in arb_matrix(3, 4)) {
            prop_assume!(m.cols() == spanning.cols());
            let u = Subspace::row_space(&spanning);
            // rank–nullity restricted to U: dim π(U) = dim U − dim(U ∩ ker π).
            let image = m.image_of(&u);
            let meet = u.dim_intersection(&m.kernel());
            prop_assert_eq!(image.dim(), u.dim() - meet);
        }

        #[test]
        fn kernel_vectors_are_in_the_kernel(m in arb_matrix(5, 4)) {
            let ker = m.kernel();
            for v in ker.vectors() {
                prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
            }
        }
    }
}
