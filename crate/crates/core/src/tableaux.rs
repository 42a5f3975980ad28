//! Tableau enumeration: Littlewood-Richardson coefficients, Kostka numbers
//! and their shifted (marked-alphabet) analogue.
//!
//! Everything here counts explicit fillings by backtracking; no product
//! formulas or symmetric-function shortcuts are used, so these counts can
//! serve as an independent oracle for identities proved elsewhere.

use crate::partition::Partition;
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

/// Verification sweeps hit the same slices of the same shapes over and over,
/// so both coefficient kinds keep a flat memo keyed by the (already
/// canonical) partition arguments. The maps are wiped when they reach this
/// many entries.
const CACHE_CAP: usize = 1 << 18;

static LR_CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> =
    OnceLock::new();
static SHIFTED_CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();

fn cached<K: Eq + Hash>(
    cache: &'static OnceLock<Mutex<HashMap<K, u64>>>,
    key: K,
    compute: impl FnOnce() -> u64,
) -> u64 {
    let cache = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let v = compute();
    let mut map = cache.lock().unwrap();
    if map.len() >= CACHE_CAP {
        map.clear();
    }
    map.insert(key, v);
    v
}

/// `c^γ_{α,β}`: semistandard fillings of the skew shape `γ∖α` with content
/// `β` whose reading word (rows top to bottom, right to left within a row)
/// keeps every prefix lattice, i.e. `i` occurs at least as often as `i+1`.
///
/// Zero when `α ⊄ γ` or `|γ| ≠ |α| + |β|`.
pub fn lr_coefficient(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if !gamma.contains(alpha) || gamma.size() != alpha.size() + beta.size() {
        return 0;
    }
    cached(
        &LR_CACHE,
        (gamma.clone(), alpha.clone(), beta.clone()),
        || lr_search(gamma, alpha, beta),
    )
}

fn lr_search(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    let mut cells = Vec::with_capacity(beta.size());
    for i in 0..gamma.len() {
        for j in (alpha.part(i)..gamma.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let k = beta.len();
    let mut s = SkewSearch {
        gamma,
        alpha,
        content: beta.parts(),
        cells,
        grid: vec![vec![0; gamma.part(0)]; gamma.len()],
        m: vec![0; k + 1],
        used: vec![0; k + 1],
        lattice: true,
    };
    s.go(0)
}

/// Kostka number: semistandard fillings of `shape` with the given content,
/// which may be an arbitrary composition.
pub fn ssyt_count(shape: &Partition, content: &[usize]) -> u64 {
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut cells = Vec::with_capacity(shape.size());
    for i in 0..shape.len() {
        for j in (0..shape.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let empty = Partition::empty();
    let k = content.len();
    let mut s = SkewSearch {
        gamma: shape,
        alpha: &empty,
        content,
        cells,
        grid: vec![vec![0; shape.part(0)]; shape.len()],
        m: vec![0; k + 1],
        used: vec![0; k + 1],
        lattice: false,
    };
    s.go(0)
}

struct SkewSearch<'a> {
    gamma: &'a Partition,
    alpha: &'a Partition,
    content: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    m: Vec<usize>,
    used: Vec<usize>,
    lattice: bool,
}

impl SkewSearch<'_> {
    fn go(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (i, j) = self.cells[idx];
        let hi = if j + 1 < self.gamma.part(i) {
            self.grid[i][j + 1]
        } else {
            self.content.len()
        };
        let above_in_skew =
            i > 0 && j < self.gamma.part(i - 1) && j >= self.alpha.part(i - 1);
        let lo = if above_in_skew { self.grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if self.used[v] == self.content[v - 1] {
                continue;
            }
            if self.lattice && v > 1 && self.m[v] == self.m[v - 1] {
                continue;
            }
            self.grid[i][j] = v;
            self.used[v] += 1;
            self.m[v] += 1;
            total += self.go(idx + 1);
            self.m[v] -= 1;
            self.used[v] -= 1;
            self.grid[i][j] = 0;
        }
        total
    }
}

/// `c̄_{α,β}`: fillings of the diagram of `α` from the marked alphabet
/// `1' < 1 < 2' < 2 < …` with `β_i` entries of absolute value `i`, such that
///
/// * rows and columns weakly increase, no marked letter repeats in a row,
///   no unmarked letter repeats in a column,
/// * the first letter of each value in the reversed reading word is
///   unmarked,
/// * the two-phase lattice condition holds: scanning the reading word
///   forwards, unmarked counts satisfy `m_i < m_{i-1}` before any letter of
///   value `i` is placed; scanning it backwards and adding marked counts on
///   top of the unmarked totals, `m_i = m_{i-1}` forbids the next letter
///   from being an unmarked `i-1` or a marked `i`.
pub fn shifted_lr_coefficient(shape: &Partition, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    cached(&SHIFTED_CACHE, (shape.clone(), content.clone()), || {
        shifted_search(shape, content)
    })
}

fn shifted_search(shape: &Partition, content: &Partition) -> u64 {
    let mut cells = Vec::with_capacity(shape.size());
    for i in 0..shape.len() {
        for j in (0..shape.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let k = content.len();
    let mut s = ShiftedSearch {
        shape,
        content: content.parts(),
        cells,
        grid: vec![vec![0; shape.part(0)]; shape.len()],
        m: vec![0; k + 2],
        used: vec![0; k + 1],
    };
    s.go(0)
}

/// Letters are stored as ranks: marked `v` is `2v - 1`, unmarked `v` is `2v`,
/// so rank order is exactly the alphabet order.
struct ShiftedSearch<'a> {
    shape: &'a Partition,
    content: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    m: Vec<usize>,
    used: Vec<usize>,
}

impl ShiftedSearch<'_> {
    fn go(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return if self.backward_ok() { 1 } else { 0 };
        }
        let (i, j) = self.cells[idx];
        let has_right = j + 1 < self.shape.part(i);
        let hi = if has_right {
            self.grid[i][j + 1]
        } else {
            2 * self.content.len()
        };
        let has_above = i > 0 && j < self.shape.part(i - 1);
        let lo = if has_above { self.grid[i - 1][j] } else { 1 };
        let mut total = 0;
        for rank in lo..=hi {
            let v = (rank + 1) / 2;
            let marked = rank % 2 == 1;
            if self.used[v] == self.content[v - 1] {
                continue;
            }
            if marked && (has_right && rank == hi || self.used[v] + 1 == self.content[v - 1]) {
                continue;
            }
            if !marked && has_above && rank == lo {
                continue;
            }
            if v > 1 && self.m[v] == self.m[v - 1] {
                continue;
            }
            self.grid[i][j] = rank;
            self.used[v] += 1;
            if !marked {
                self.m[v] += 1;
            }
            total += self.go(idx + 1);
            if !marked {
                self.m[v] -= 1;
            }
            self.used[v] -= 1;
            self.grid[i][j] = 0;
        }
        total
    }

    /// Second lattice phase, run on a complete filling: walk the reading
    /// word backwards, piling marked counts on top of the unmarked totals.
    fn backward_ok(&self) -> bool {
        let mut m = self.m.clone();
        for &(i, j) in self.cells.iter().rev() {
            let rank = self.grid[i][j];
            let v = (rank + 1) / 2;
            if rank % 2 == 0 {
                if m[v + 1] == m[v] {
                    return false;
                }
            } else {
                if v > 1 && m[v] == m[v - 1] {
                    return false;
                }
                m[v] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions, strict_partitions};
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn lr_hand_values() {
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[4, 1, 1]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 3]), &p(&[2, 1]), &p(&[2, 1])), 1);
        // mismatched size and non-containment
        assert_eq!(lr_coefficient(&p(&[3, 1]), &p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[5, 1]), &p(&[1, 1, 1]), &p(&[2, 1])), 0);
        assert_eq!(
            lr_coefficient(&Partition::empty(), &Partition::empty(), &Partition::empty()),
            1
        );
    }

    #[test]
    fn lr_straight_shape_is_delta() {
        for n in 0..=6 {
            for gamma in partitions(n) {
                for beta in partitions(n) {
                    let c = lr_coefficient(&gamma, &Partition::empty(), &beta);
                    assert_eq!(c, u64::from(gamma == beta), "{gamma} {beta}");
                }
            }
        }
    }

    fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
        outer.contains(inner)
            && (1..outer.len()).all(|i| inner.part(i - 1) >= outer.part(i))
    }

    #[test]
    fn lr_pieri_rule() {
        for n in 1..=7 {
            for alpha in partitions(n) {
                for k in 1..=4usize {
                    for gamma in partitions(n + k) {
                        let c = lr_coefficient(&gamma, &alpha, &p(&[k]));
                        let strip = is_horizontal_strip(&gamma, &alpha);
                        assert_eq!(c, u64::from(strip), "{gamma}/{alpha} + row {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_hand_values() {
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(ssyt_count(&p(&[3, 2]), &[2, 2, 1]), 2);
        assert_eq!(ssyt_count(&p(&[2, 2]), &[1, 1, 1, 1]), 2);
        for n in 1..=7 {
            for shape in partitions(n) {
                assert_eq!(ssyt_count(&shape, shape.parts()), 1);
                assert_eq!(ssyt_count(&p(&[n]), shape.parts()), 1);
            }
        }
    }

    #[test]
    fn kostka_vanishes_unless_shape_dominates() {
        for n in 1..=7 {
            for shape in partitions(n) {
                for content in partitions(n) {
                    let k = ssyt_count(&shape, content.parts());
                    assert_eq!(k > 0, shape.dominates(&content), "{shape} {content}");
                }
            }
        }
    }

    #[test]
    fn shifted_hand_values() {
        assert_eq!(shifted_lr_coefficient(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(shifted_lr_coefficient(&p(&[2, 1]), &p(&[3])), 1);
        assert_eq!(shifted_lr_coefficient(&p(&[3, 1]), &p(&[4])), 1);
        assert_eq!(shifted_lr_coefficient(&p(&[3, 1]), &p(&[3, 1])), 1);
        // the all-marked-above column [1', 1', 1] is the unique filling
        assert_eq!(shifted_lr_coefficient(&p(&[1, 1, 1]), &p(&[3])), 1);
        assert_eq!(shifted_lr_coefficient(&p(&[2, 2]), &p(&[3, 1])), 1);
        for n in 1..=8 {
            assert_eq!(shifted_lr_coefficient(&p(&[n]), &p(&[n])), 1);
        }
        assert_eq!(
            shifted_lr_coefficient(&Partition::empty(), &Partition::empty()),
            1
        );
        assert_eq!(shifted_lr_coefficient(&p(&[2]), &p(&[3])), 0);
    }

    #[test]
    fn shifted_diagonal_is_one_for_strict_shapes() {
        for n in 1..=10 {
            for mu in strict_partitions(n) {
                assert_eq!(shifted_lr_coefficient(&mu, &mu), 1, "{mu}");
            }
        }
    }

    #[test]
    fn shifted_support_needs_dominance() {
        for n in 1..=8 {
            for shape in partitions(n) {
                for content in strict_partitions(n) {
                    if shifted_lr_coefficient(&shape, &content) > 0 {
                        assert!(content.dominates(&shape), "{shape} {content}");
                    }
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn lr_is_symmetric(n in 1usize..=5, m in 1usize..=5, i in 0usize..1000, j in 0usize..1000, g in 0usize..1000) {
            let als = partitions(n);
            let bes = partitions(m);
            let gas = partitions(n + m);
            let alpha = &als[i % als.len()];
            let beta = &bes[j % bes.len()];
            let gamma = &gas[g % gas.len()];
            prop_assert_eq!(
                lr_coefficient(gamma, alpha, beta),
                lr_coefficient(gamma, beta, alpha)
            );
        }

        #[test]
        fn lr_respects_conjugation(n in 1usize..=5, m in 1usize..=5, i in 0usize..1000, j in 0usize..1000, g in 0usize..1000) {
            let als = partitions(n);
            let bes = partitions(m);
            let gas = partitions(n + m);
            let alpha = &als[i % als.len()];
            let beta = &bes[j % bes.len()];
            let gamma = &gas[g % gas.len()];
            prop_assert_eq!(
                lr_coefficient(gamma, alpha, beta),
                lr_coefficient(&gamma.conjugate(), &alpha.conjugate(), &beta.conjugate())
            );
        }

        #[test]
        fn lr_support_bounds(n in 1usize..=5, m in 1usize..=5, i in 0usize..1000, j in 0usize..1000, g in 0usize..1000) {
            let als = partitions(n);
            let bes = partitions(m);
            let gas = partitions(n + m);
            let alpha = &als[i % als.len()];
            let beta = &bes[j % bes.len()];
            let gamma = &gas[g % gas.len()];
            if lr_coefficient(gamma, alpha, beta) > 0 {
                prop_assert!(gamma.dominates(&alpha.union_sorted(beta)));
                prop_assert!(alpha.add(beta).dominates(gamma));
            }
        }

        #[test]
        fn kostka_content_permutation_invariant(n in 1usize..=6, i in 0usize..1000, j in 0usize..1000) {
            let ps = partitions(n);
            let shape = &ps[i % ps.len()];
            let content = &ps[j % ps.len()];
            let mut rotated = content.parts().to_vec();
            let by = 1.min(rotated.len().saturating_sub(1));
            rotated.rotate_left(by);
            prop_assert_eq!(ssyt_count(shape, content.parts()), ssyt_count(shape, &rotated));
        }
    }
}
