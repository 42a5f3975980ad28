//! Ordinary character theory of symmetric groups: Murnaghan-Nakayama
//! values, permutation characters of Young subgroups, exact inner products
//! and expansions in the basis of restrictions to odd classes.

use crate::partition::{odd_part_partitions, partitions, strict_partitions, Partition};
use crate::tableaux::lr_coefficient;
use num::{BigInt, BigRational, Zero};
use std::collections::BTreeMap;

/// `χ_λ(ρ)` by repeated hook removal on the beta-set of `λ`.
pub fn character_value(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "character needs |λ| = |ρ|");
    let k = lambda.len();
    let beta: Vec<usize> = (0..k).map(|i| lambda.part(i) + (k - 1 - i)).rev().collect();
    mn(&beta, rho.parts())
}

fn mn(beta: &[usize], parts: &[usize]) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (pos, &x) in beta.iter().enumerate() {
        if x < r {
            continue;
        }
        let y = x - r;
        if beta.contains(&y) {
            continue;
        }
        let between = beta.iter().filter(|&&b| y < b && b < x).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.to_vec();
        nb[pos] = y;
        nb.sort_unstable();
        total += sign * mn(&nb, rest);
    }
    total
}

/// Number of standard tableaux of shape `λ`, by the hook length formula.
/// This is the dimension of the Specht module in characteristic 0.
pub fn specht_dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks: u128 = 1;
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            hooks *= ((lambda.part(i) - j) + (conj.part(j) - i) - 1) as u128;
        }
    }
    let fact: u128 = (1..=lambda.size() as u128).product();
    (fact / hooks) as u64
}

/// Order of the centralizer of an element of cycle type `ρ`,
/// `∏ i^{m_i} m_i!` over the part multiplicities.
pub fn centralizer_order(rho: &Partition) -> u64 {
    let mut z = 1u64;
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let mult = (j - i) as u64;
        z *= (parts[i] as u64).pow(mult as u32) * (1..=mult).product::<u64>();
        i = j;
    }
    z
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut b = 1u64;
    for i in 0..k.min(n - k) {
        b = b * (n - i) as u64 / (i + 1) as u64;
    }
    b
}

/// Value at cycle type `ρ` of the permutation character of the Young
/// subgroup with block sizes `mu` (an arbitrary composition): the number of
/// ways to distribute the cycles of `ρ` over the blocks.
pub fn perm_character_value(mu: &[usize], rho: &Partition) -> u64 {
    assert_eq!(mu.iter().sum::<usize>(), rho.size());
    let mut lens: Vec<(usize, usize)> = Vec::new();
    for &p in rho.parts() {
        match lens.iter_mut().find(|(l, _)| *l == p) {
            Some((_, m)) => *m += 1,
            None => lens.push((p, 1)),
        }
    }
    distribute(mu, &mut lens)
}

fn distribute(blocks: &[usize], lens: &mut Vec<(usize, usize)>) -> u64 {
    let Some((&b, rest)) = blocks.split_first() else {
        return 1;
    };
    fill_block(0, b, 1, rest, lens)
}

fn fill_block(idx: usize, remaining: usize, ways: u64, rest: &[usize], lens: &mut Vec<(usize, usize)>) -> u64 {
    if idx == lens.len() {
        return if remaining == 0 { ways * distribute(rest, lens) } else { 0 };
    }
    let (len, mult) = lens[idx];
    let mut total = 0;
    for k in 0..=mult.min(remaining / len) {
        lens[idx].1 = mult - k;
        total += fill_block(idx + 1, remaining - k * len, ways * binomial(mult, k), rest, lens);
    }
    lens[idx].1 = mult;
    total
}

/// Full ordinary character table of the symmetric group on `n` points.
/// Rows and classes are both indexed by partitions of `n` in descending
/// lexicographic order.
pub struct CharTable {
    n: usize,
    classes: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn new(n: usize) -> Self {
        let classes = partitions(n);
        let values = classes
            .iter()
            .map(|lambda| classes.iter().map(|rho| character_value(lambda, rho)).collect())
            .collect();
        CharTable { n, classes, values }
    }

    /// Reassembles a table from a cached copy. The caller must pass the
    /// canonical class list and one full row per class, in the same order.
    pub(crate) fn from_parts(n: usize, classes: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        assert_eq!(classes, partitions(n));
        assert_eq!(values.len(), classes.len());
        assert!(values.iter().all(|row| row.len() == classes.len()));
        CharTable { n, classes, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Class representatives, equal to the row labels.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        let i = self.index_of(lambda);
        &self.values[i]
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index_of(lambda)][self.index_of(rho)]
    }

    fn index_of(&self, p: &Partition) -> usize {
        self.classes.binary_search(p).expect("not a partition of n")
    }

    /// `⟨f, g⟩ = Σ_ρ f(ρ) g(ρ) / z_ρ` over all classes, exactly.
    pub fn inner_product(&self, f: &[BigRational], g: &[BigRational]) -> BigRational {
        assert_eq!(f.len(), self.classes.len());
        assert_eq!(g.len(), self.classes.len());
        let mut acc = BigRational::zero();
        for (i, rho) in self.classes.iter().enumerate() {
            let z = BigRational::from_integer(BigInt::from(centralizer_order(rho)));
            acc += &f[i] * &g[i] / z;
        }
        acc
    }

    /// Character row restricted to the classes with all cycle lengths odd,
    /// in descending lexicographic class order.
    pub fn odd_restriction(&self, lambda: &Partition) -> Vec<i64> {
        odd_part_partitions(self.n)
            .iter()
            .map(|rho| self.value(lambda, rho))
            .collect()
    }
}

pub fn rationals(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

/// Solves `A x = b` over the rationals by Gaussian elimination,
/// returning `None` when `A` is singular.
fn solve_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let d = a.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..d {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for c in col..d {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
            }
            let t = &factor * &b[col];
            b[r] -= t;
        }
    }
    Some((0..d).map(|i| &b[i] / &a[i][i]).collect())
}

/// Writes a class function on the odd classes of `S_n` as a rational
/// combination of the restrictions of the characters `χ_ν` with `ν`
/// 2-regular; those restrictions form a basis. `f` is indexed by the odd
/// classes in descending lexicographic order.
pub fn expand_in_two_regular_basis(
    table: &CharTable,
    f: &[BigRational],
) -> BTreeMap<Partition, BigRational> {
    let strict = strict_partitions(table.n());
    let odd = odd_part_partitions(table.n());
    assert_eq!(f.len(), odd.len());
    let a: Vec<Vec<BigRational>> = odd
        .iter()
        .map(|rho| {
            strict
                .iter()
                .map(|nu| BigRational::from_integer(BigInt::from(table.value(nu, rho))))
                .collect()
        })
        .collect();
    let x = solve_square(a, f.to_vec())
        .expect("restrictions of 2-regular characters to odd classes are independent");
    strict.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect()
}

/// `[S^α ⊗ M^{(n-i,i)} : S^β]` in characteristic 0, computed as
/// `Σ_{γ ⊢ n-i, δ ⊢ i} c^α_{γ,δ} c^β_{γ,δ}`. Values of `i` above `n/2`
/// label the same permutation module as `n - i`.
pub fn tensor_perm_multiplicity(alpha: &Partition, beta: &Partition, i: usize) -> u64 {
    let n = alpha.size();
    assert_eq!(n, beta.size());
    assert!(i <= n);
    let i = i.min(n - i);
    let mut total = 0;
    for gamma in partitions(n - i) {
        for delta in partitions(i) {
            total += lr_coefficient(alpha, &gamma, &delta) * lr_coefficient(beta, &gamma, &delta);
        }
    }
    total
}

/// The same multiplicity as [`tensor_perm_multiplicity`], but as the inner
/// product of `χ_α · χ_{M^{(n-i,i)}}` with `χ_β`.
pub fn tensor_perm_multiplicity_via_characters(
    table: &CharTable,
    alpha: &Partition,
    beta: &Partition,
    i: usize,
) -> BigRational {
    let n = table.n();
    let mu = [n - i.min(n - i), i.min(n - i)];
    let f: Vec<BigRational> = table
        .classes()
        .iter()
        .map(|rho| {
            let prod = table.value(alpha, rho) * perm_character_value(&mu, rho) as i64;
            BigRational::from_integer(BigInt::from(prod))
        })
        .collect();
    table.inner_product(&f, &rationals(table.row(beta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::odd_part_partitions;
    use crate::tableaux::ssyt_count;
    use num::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn two_row(n: usize, k: usize) -> Partition {
        if k == 0 {
            p(&[n])
        } else {
            p(&[n - k, k])
        }
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn murnaghan_nakayama_hand_values() {
        assert_eq!(character_value(&p(&[2, 2]), &p(&[3, 1])), -1);
        assert_eq!(character_value(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(character_value(&p(&[3, 1]), &p(&[3, 1])), 0);
        assert_eq!(character_value(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character_value(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=8 {
            for rho in partitions(n) {
                assert_eq!(character_value(&p(&[n]), &rho), 1);
                let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character_value(&Partition::rectangle(n, 1), &rho), sign);
            }
        }
    }

    #[test]
    fn degree_matches_hook_formula() {
        for n in 1..=9 {
            let one = Partition::rectangle(n, 1);
            for lambda in partitions(n) {
                assert_eq!(
                    character_value(&lambda, &one),
                    specht_dimension(&lambda) as i64,
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn specht_dimension_values() {
        assert_eq!(specht_dimension(&p(&[2, 2])), 2);
        assert_eq!(specht_dimension(&p(&[3, 1])), 3);
        assert_eq!(specht_dimension(&p(&[4, 3, 2])), 168);
        assert_eq!(specht_dimension(&Partition::empty()), 1);
        // squares of dimensions sum to the group order
        let total: u64 = partitions(8).iter().map(|l| specht_dimension(l).pow(2)).sum();
        assert_eq!(total, (1..=8u64).product::<u64>());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order(&p(&[3, 1])), 3);
        assert_eq!(centralizer_order(&p(&[2, 2])), 8);
        assert_eq!(centralizer_order(&p(&[1, 1, 1, 1])), 24);
        assert_eq!(centralizer_order(&Partition::empty()), 1);
        for n in 1..=9usize {
            let sum: u64 = partitions(n)
                .iter()
                .map(|rho| (1..=n as u64).product::<u64>() / centralizer_order(rho))
                .sum();
            assert_eq!(sum, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn character_rows_are_orthonormal() {
        for n in 1..=6 {
            let table = CharTable::new(n);
            let ps = partitions(n);
            for a in &ps {
                for b in &ps {
                    let ip = table.inner_product(&rationals(table.row(a)), &rationals(table.row(b)));
                    assert_eq!(ip, int(i64::from(a == b)), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn perm_character_hand_values() {
        // fixed points for the natural action
        for n in 2..=8usize {
            for rho in partitions(n) {
                let fixed = rho.parts().iter().filter(|&&c| c == 1).count() as u64;
                assert_eq!(perm_character_value(&[n - 1, 1], &rho), fixed);
            }
        }
        assert_eq!(perm_character_value(&[2, 2], &p(&[2, 2])), 2);
        assert_eq!(perm_character_value(&[2, 2], &p(&[4])), 0);
        // block order does not matter
        assert_eq!(
            perm_character_value(&[1, 3], &p(&[3, 1])),
            perm_character_value(&[3, 1], &p(&[3, 1]))
        );
        // value at the identity is the multinomial coefficient
        assert_eq!(perm_character_value(&[3, 2, 1], &Partition::rectangle(6, 1)), 60);
    }

    #[test]
    fn perm_character_decomposes_by_kostka() {
        for n in 1..=6 {
            let table = CharTable::new(n);
            for mu in partitions(n) {
                let f: Vec<BigRational> = table
                    .classes()
                    .iter()
                    .map(|rho| int(perm_character_value(mu.parts(), rho) as i64))
                    .collect();
                for lambda in partitions(n) {
                    let ip = table.inner_product(&f, &rationals(table.row(&lambda)));
                    assert_eq!(ip, int(ssyt_count(&lambda, mu.parts()) as i64), "{mu} {lambda}");
                }
            }
        }
    }

    #[test]
    fn two_row_perm_characters_telescope() {
        for n in 2..=8 {
            let table = CharTable::new(n);
            for h in 0..=n / 2 {
                for rho in table.classes() {
                    let lhs = perm_character_value(&[n - h, h], rho) as i64;
                    let rhs: i64 = (0..=h).map(|k| table.value(&two_row(n, k), rho)).sum();
                    assert_eq!(lhs, rhs, "n={n} h={h} {rho}");
                }
            }
        }
    }

    #[test]
    fn odd_expansion_hand_value() {
        let table = CharTable::new(4);
        assert_eq!(odd_part_partitions(4), vec![p(&[3, 1]), p(&[1, 1, 1, 1])]);
        let f = vec![int(-1), int(2)];
        let expansion = expand_in_two_regular_basis(&table, &f);
        let expected: BTreeMap<Partition, BigRational> =
            [(p(&[4]), int(-1)), (p(&[3, 1]), int(1))].into_iter().collect();
        assert_eq!(expansion, expected);
    }

    #[test]
    fn odd_expansion_recovers_two_regular_rows() {
        for n in 1..=8 {
            let table = CharTable::new(n);
            for nu in strict_partitions(n) {
                let f = rationals(&table.odd_restriction(&nu));
                let expansion = expand_in_two_regular_basis(&table, &f);
                assert_eq!(expansion.len(), 1);
                assert_eq!(expansion[&nu], BigRational::one());
            }
        }
    }

    #[test]
    fn tensor_multiplicity_routes_agree() {
        for n in 2..=6usize {
            let table = CharTable::new(n);
            for alpha in partitions(n) {
                for beta in partitions(n) {
                    for i in 0..=n {
                        let lr = tensor_perm_multiplicity(&alpha, &beta, i);
                        let ch = tensor_perm_multiplicity_via_characters(&table, &alpha, &beta, i);
                        assert_eq!(ch, int(lr as i64), "{alpha} {beta} {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_with_full_perm_module_is_identity() {
        for n in 1..=6 {
            for alpha in partitions(n) {
                for beta in partitions(n) {
                    assert_eq!(
                        tensor_perm_multiplicity(&alpha, &beta, 0),
                        u64::from(alpha == beta)
                    );
                }
            }
        }
    }
}
