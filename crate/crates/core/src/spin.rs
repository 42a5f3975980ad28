//! Decomposition numbers of spin representations in characteristic 2.
//!
//! The reductions of the spin irreducibles are ordinary representations of
//! the symmetric group, so their composition factors can be read off from
//! Brauer characters alone: the basic spin character reduces to an explicit
//! alternating sum of two-row permutation characters, tensoring with it
//! produces a triangular system for the Brauer characters of all reduced
//! spin modules, and expanding those back into ordinary characters on the
//! odd classes turns the ordinary decomposition matrix into the spin one.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::characters::{expand_in_two_regular_basis, perm_character_value, rationals, CharTable};
use crate::modrep::DecompositionMatrix;
use crate::partition::{odd_part_partitions, strict_partitions, Partition};
use crate::tableaux::shifted_lr_coefficient;

/// `a((n))` for the one-row partition: 1 when `n` is even and positive.
pub fn one_row_parity(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (n + 1) % 2
    }
}

/// Coefficients `t[h]` expressing the reduced basic spin character as
/// `sum_h t[h] * perm character of (n-h,h)` (up to the associate doubling).
pub fn basic_spin_coeffs(n: usize) -> Vec<i64> {
    if n <= 1 {
        return vec![1];
    }
    if n % 2 == 0 {
        (0..n / 2)
            .map(|h| match (n / 2 - 1 - h) % 4 {
                0 | 2 => 1,
                1 => -2,
                _ => 0,
            })
            .collect()
    } else {
        (0..=(n - 1) / 2)
            .map(|h| match ((n - 1) / 2 - h) % 4 {
                0 | 3 => 1,
                _ => -1,
            })
            .collect()
    }
}

/// The Brauer character of the reduction of the full basic spin module (both
/// associates together when they are distinct), on the odd classes in
/// descending lexicographic order.
pub fn basic_spin_brauer(n: usize) -> Vec<i64> {
    if n == 0 {
        return vec![1];
    }
    let t = basic_spin_coeffs(n);
    let scale = 1i64 << one_row_parity(n);
    odd_part_partitions(n)
        .iter()
        .map(|rho| {
            let mut v = 0i64;
            for (h, &c) in t.iter().enumerate() {
                let mu = if h == 0 { vec![n] } else { vec![n - h, h] };
                v += c * perm_character_value(&mu, rho) as i64;
            }
            scale * v
        })
        .collect()
}

/// `g_{a,b}`: the parity of `binom(a, b)`, which is 1 exactly when every
/// binary digit of `b` also occurs in `a`.
pub fn gab(a: usize, b: usize) -> u64 {
    ((a & b) == b) as u64
}

/// Closed-form multiplicities `[S^(n-h,h) : D^(n-k,k)]`, indexed by `k`,
/// given by parities of binomial coefficients.
pub fn two_part_decomposition(n: usize, h: usize) -> Vec<u64> {
    assert!(h <= n / 2);
    if n == 0 {
        return vec![1];
    }
    (0..=(n - 1) / 2)
        .map(|k| if k > h { 0 } else { gab(n - 2 * k + 1, h - k) })
        .collect()
}

/// Brauer characters on the odd classes of the reduced spin irreducibles,
/// labelled by the 2-regular partitions. Solved top down from the tensor
/// products of the ordinary characters with the basic spin character; the
/// system is triangular because a spin constituent of such a product always
/// dominates the tensoring partition.
pub fn spin_brauer_characters(table: &CharTable) -> BTreeMap<Partition, Vec<i64>> {
    let n = table.n();
    let strict = strict_partitions(n);
    let bsb = basic_spin_brauer(n);
    let an = one_row_parity(n);
    let mut phi: BTreeMap<Partition, Vec<i64>> = BTreeMap::new();
    for nu in &strict {
        let restricted = table.odd_restriction(nu);
        let mut lhs: Vec<i64> = restricted.iter().zip(&bsb).map(|(&x, &y)| x * y).collect();
        let mut diag = 0i64;
        for mu in &strict {
            let cbar = shifted_lr_coefficient(nu, mu) as i64;
            if cbar == 0 {
                continue;
            }
            let e = if mu.is_empty() {
                0
            } else {
                mu.len() as i64 - 1 - mu.parity_a() as i64 + an as i64
            };
            assert!(e >= 0 && e % 2 == 0);
            let coeff = cbar << (mu.parity_a() as i64 + e / 2);
            if mu == nu {
                diag = coeff;
            } else {
                let known = phi.get(mu).expect("spin constituent below the diagonal");
                for (l, k) in lhs.iter_mut().zip(known) {
                    *l -= coeff * k;
                }
            }
        }
        assert!(diag > 0);
        let values: Vec<i64> = lhs
            .iter()
            .map(|&x| {
                assert_eq!(x % diag, 0, "spin character system has a non-integral solution");
                x / diag
            })
            .collect();
        phi.insert(nu.clone(), values);
    }
    phi
}

/// "0" when the spin representation is self-associate, "±" for a pair of
/// associates. The reductions mod 2 agree in either case.
pub fn epsilon_label(la: &Partition) -> &'static str {
    if la.parity_a() == 0 {
        "0"
    } else {
        "±"
    }
}

/// Rows indexed by 2-regular partitions: the multiplicity of each simple
/// `D^mu` in the reduction of the spin irreducible labelled by the row.
pub struct SpinDecompositionMatrix {
    pub(crate) n: usize,
    pub(crate) rows: BTreeMap<Partition, BTreeMap<Partition, u64>>,
}

impl SpinDecompositionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, la: &Partition, mu: &Partition) -> u64 {
        self.rows
            .get(la)
            .and_then(|r| r.get(mu))
            .copied()
            .unwrap_or(0)
    }

    pub fn row(&self, la: &Partition) -> Option<&BTreeMap<Partition, u64>> {
        self.rows.get(la)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Partition, &BTreeMap<Partition, u64>)> {
        self.rows.iter()
    }
}

/// Composes the spin Brauer characters with the ordinary decomposition
/// matrix. Every multiplicity must come out a nonnegative integer, which is
/// asserted on the exact rational arithmetic.
pub fn spin_decomposition_matrix(
    table: &CharTable,
    d: &DecompositionMatrix,
) -> SpinDecompositionMatrix {
    assert_eq!(table.n(), d.n());
    let mut rows = BTreeMap::new();
    for (la, phi) in spin_brauer_characters(table) {
        let expansion = expand_in_two_regular_basis(table, &rationals(&phi));
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (nu, x) in &expansion {
            let row = d
                .row(nu)
                .expect("expansion label missing from the decomposition matrix");
            for (mu, &c) in row {
                let term = x * BigRational::from_integer(BigInt::from(c));
                *acc.entry(mu.clone()).or_insert_with(BigRational::zero) += term;
            }
        }
        let mut row = BTreeMap::new();
        for (mu, v) in acc {
            if v.is_zero() {
                continue;
            }
            assert!(
                v.is_integer() && !v.is_negative(),
                "non-integral or negative spin multiplicity at ({la}, {mu})"
            );
            row.insert(mu, v.to_integer().to_u64().unwrap());
        }
        rows.insert(la, row);
    }
    SpinDecompositionMatrix { n: table.n(), rows }
}
