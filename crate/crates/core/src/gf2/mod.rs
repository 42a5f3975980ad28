//! Dense linear algebra over GF(2), packed 64 columns to a word.
//!
//! Vectors are rows throughout the crate and matrices act on the right,
//! so the kernel of `M` is the space of rows `v` with `v M = 0` and a
//! module is a row space closed under its generator matrices.

pub mod poly;

use std::fmt;

/// A fixed-length bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len);
        if b {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the overlap, i.e. the standard bilinear form.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the first set bit.
    pub fn leading(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A dense matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(64);
        BitMatrix { rows, cols, wpr, data: vec![0; rows * wpr] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVec], cols: usize) -> Self {
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * m.wpr..(i + 1) * m.wpr].copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.wpr + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.wpr + j / 64];
        if b {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec { len: self.cols, words: self.data[i * self.wpr..(i + 1) * self.wpr].to_vec() }
    }

    pub fn set_row(&mut self, i: usize, v: &BitVec) {
        assert_eq!(v.len(), self.cols);
        self.data[i * self.wpr..(i + 1) * self.wpr].copy_from_slice(v.words());
    }

    /// `v M` for a row vector `v` of length `rows`.
    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.rows);
        let mut acc = BitVec::zeros(self.cols);
        for i in v.iter_ones() {
            for (a, b) in acc.words.iter_mut().zip(&self.data[i * self.wpr..(i + 1) * self.wpr]) {
                *a ^= b;
            }
        }
        acc
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.wpr];
            for j in self.row_ones(i) {
                for (a, b) in acc.iter_mut().zip(&other.data[j * other.wpr..(j + 1) * other.wpr]) {
                    *a ^= b;
                }
            }
            out.data[i * out.wpr..(i + 1) * out.wpr].copy_from_slice(&acc);
        }
        out
    }

    /// `self · otherᵀ` without materializing the transpose.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = BitMatrix::zero(self.rows, other.rows);
        for i in 0..self.rows {
            let a = &self.data[i * self.wpr..(i + 1) * self.wpr];
            for j in 0..other.rows {
                let b = &other.data[j * other.wpr..(j + 1) * other.wpr];
                let mut acc = 0u32;
                for (x, y) in a.iter().zip(b) {
                    acc ^= (x & y).count_ones();
                }
                out.set(i, j, acc & 1 == 1);
            }
        }
        out
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                out.set(j, i, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.data[i * self.wpr..(i + 1) * self.wpr]
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| {
                let mut w = w;
                std::iter::from_fn(move || {
                    if w == 0 {
                        return None;
                    }
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                })
            })
    }

    /// Row space in canonical reduced echelon form.
    pub fn row_space(&self) -> Subspace {
        let mut s = Subspace::new(self.cols);
        for i in 0..self.rows {
            s.insert(&self.row(i));
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    /// Canonical basis of `{v : v M = 0}`.
    pub fn left_kernel(&self) -> Vec<BitVec> {
        let mut reduced: Vec<(BitVec, BitVec)> = Vec::new();
        let mut kernel = Subspace::new(self.rows);
        for i in 0..self.rows {
            let mut r = self.row(i);
            let mut combo = BitVec::unit(self.rows, i);
            for (er, ec) in &reduced {
                let lead = er.leading().unwrap();
                if r.get(lead) {
                    r.xor_assign(er);
                    combo.xor_assign(ec);
                }
            }
            if r.is_zero() {
                kernel.insert(&combo);
            } else {
                reduced.push((r, combo));
            }
        }
        kernel.basis().to_vec()
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut work: Vec<(BitVec, BitVec)> =
            (0..n).map(|i| (self.row(i), BitVec::unit(n, i))).collect();
        let mut done: Vec<(usize, BitVec, BitVec)> = Vec::new();
        for (mut r, mut aug) in work.drain(..) {
            for (lead, dr, da) in &done {
                if r.get(*lead) {
                    r.xor_assign(dr);
                    aug.xor_assign(da);
                }
            }
            let lead = r.leading()?;
            for (_, dr, da) in done.iter_mut() {
                if dr.get(lead) {
                    dr.xor_assign(&r);
                    da.xor_assign(&aug);
                }
            }
            done.push((lead, r, aug));
        }
        done.sort_by_key(|(lead, _, _)| *lead);
        let rows: Vec<BitVec> = done.into_iter().map(|(_, _, aug)| aug).collect();
        Some(BitMatrix::from_rows(&rows, n))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A subspace of `GF(2)^ambient`, kept as a reduced echelon basis with
/// strictly increasing pivot columns; two equal subspaces always hold
/// identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(ambient: usize, vs: &[BitVec]) -> Self {
        let mut s = Self::new(ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if r.get(piv) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.ambient);
        let r = self.reduce(v);
        let Some(piv) = r.leading() else {
            return false;
        };
        for row in self.rows.iter_mut() {
            if row.get(piv) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, r);
        true
    }

    /// Coefficients of `v` over `basis()`, or `None` when `v` lies outside.
    pub fn coords(&self, v: &BitVec) -> Option<BitVec> {
        if !self.contains(v) {
            return None;
        }
        let mut c = BitVec::zeros(self.rows.len());
        for (j, &piv) in self.pivots.iter().enumerate() {
            c.set(j, v.get(piv));
        }
        Some(c)
    }

    /// Columns that are not pivots; unit vectors there descend to a basis
    /// of the quotient by this subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        let mut next = 0;
        for j in 0..self.ambient {
            if next < self.pivots.len() && self.pivots[next] == j {
                next += 1;
            } else {
                out.push(j);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::SplitMix64;

    fn random_matrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rng.next_u64() & 1 == 1);
            }
        }
        m
    }

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::zeros(130);
        assert!(v.is_zero());
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.leading(), Some(0));
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        v.set(0, false);
        assert_eq!(v.leading(), Some(64));
        let w = BitVec::unit(130, 64);
        assert!(v.dot(&w));
        let mut u = v.clone();
        u.xor_assign(&v);
        assert!(u.is_zero());
    }

    #[test]
    fn multiply_against_naive() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..20 {
            let (r, k, c) = (
                1 + rng.below(40) as usize,
                1 + rng.below(40) as usize,
                1 + rng.below(90) as usize,
            );
            let a = random_matrix(&mut rng, r, k);
            let b = random_matrix(&mut rng, k, c);
            let ab = a.mul(&b);
            for i in 0..r {
                for j in 0..c {
                    let mut bit = false;
                    for t in 0..k {
                        bit ^= a.get(i, t) && b.get(t, j);
                    }
                    assert_eq!(ab.get(i, j), bit);
                }
            }
        }
    }

    #[test]
    fn identity_and_transpose_laws() {
        let mut rng = SplitMix64::new(11);
        for _ in 0..10 {
            let (r, c) = (1 + rng.below(50) as usize, 1 + rng.below(50) as usize);
            let a = random_matrix(&mut rng, r, c);
            assert_eq!(BitMatrix::identity(r).mul(&a), a);
            assert_eq!(a.mul(&BitMatrix::identity(c)), a);
            assert_eq!(a.transpose().transpose(), a);
            let cols2 = 1 + rng.below(50) as usize;
            let b = random_matrix(&mut rng, c, cols2);
            assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
            assert_eq!(a.mul_transpose(&b.transpose()), a.mul(&b));
        }
    }

    #[test]
    fn apply_matches_mul() {
        let mut rng = SplitMix64::new(13);
        let a = random_matrix(&mut rng, 70, 33);
        for i in 0..70 {
            assert_eq!(a.apply(&BitVec::unit(70, i)), a.row(i));
        }
    }

    #[test]
    fn rank_and_kernel() {
        let mut rng = SplitMix64::new(17);
        for _ in 0..20 {
            let (r, c) = (1 + rng.below(45) as usize, 1 + rng.below(45) as usize);
            let a = random_matrix(&mut rng, r, c);
            let rank = a.rank();
            let kernel = a.left_kernel();
            assert_eq!(rank + kernel.len(), r);
            for v in &kernel {
                assert!(a.apply(v).is_zero());
            }
            // kernel vectors are independent
            assert_eq!(Subspace::from_vectors(r, &kernel).dim(), kernel.len());
        }
        assert_eq!(BitMatrix::identity(12).rank(), 12);
        assert!(BitMatrix::identity(12).left_kernel().is_empty());
    }

    #[test]
    fn row_space_is_canonical() {
        let mut rng = SplitMix64::new(19);
        let a = random_matrix(&mut rng, 30, 30);
        let s = a.row_space();
        // feeding the rows in reverse gives the same reduced basis
        let rev: Vec<BitVec> = (0..30).rev().map(|i| a.row(i)).collect();
        let t = Subspace::from_vectors(30, &rev);
        assert_eq!(s, t);
        let mut pivs = s.pivots().to_vec();
        pivs.sort_unstable();
        assert_eq!(pivs, s.pivots());
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = SplitMix64::new(23);
        let mut found = 0;
        while found < 10 {
            let n = 1 + rng.below(40) as usize;
            let a = random_matrix(&mut rng, n, n);
            match a.inverse() {
                Some(inv) => {
                    assert_eq!(a.mul(&inv), BitMatrix::identity(n));
                    assert_eq!(inv.mul(&a), BitMatrix::identity(n));
                    found += 1;
                }
                None => assert!(a.rank() < n),
            }
        }
        let mut singular = BitMatrix::zero(3, 3);
        singular.set(0, 0, true);
        singular.set(1, 0, true);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn subspace_membership_and_coords() {
        let mut rng = SplitMix64::new(29);
        let vs: Vec<BitVec> = (0..12)
            .map(|_| {
                let mut v = BitVec::zeros(25);
                for j in 0..25 {
                    v.set(j, rng.next_u64() & 1 == 1);
                }
                v
            })
            .collect();
        let s = Subspace::from_vectors(25, &vs);
        for v in &vs {
            let c = s.coords(v).unwrap();
            let mut rebuilt = BitVec::zeros(25);
            for j in c.iter_ones() {
                rebuilt.xor_assign(&s.basis()[j]);
            }
            assert_eq!(&rebuilt, v);
        }
        assert_eq!(s.dim() + s.free_columns().len(), 25);
        let outside = (0..25).find(|&j| s.free_columns().contains(&j));
        if let Some(j) = outside {
            assert!(!s.contains(&BitVec::unit(25, j)));
        }
        let units: Vec<BitVec> = (0..25).map(|i| BitVec::unit(25, i)).collect();
        assert!(Subspace::from_vectors(25, &units).is_full());
    }
}
