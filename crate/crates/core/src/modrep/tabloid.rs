//! The permutation module on tabloids: row-equivalence classes of fillings
//! of a Young diagram with the points `0..n`.
//!
//! A tabloid is stored as its row word, the map sending each point to its
//! row index. Basis positions come from ranking these words as multiset
//! permutations, so no dictionaries are needed even when the space has
//! hundreds of thousands of tabloids.

use crate::partition::Partition;

pub struct TabloidSpace {
    rows: Vec<usize>,
    n: usize,
    dim: usize,
}

impl TabloidSpace {
    pub fn new(shape: &Partition) -> Self {
        let rows = shape.parts().to_vec();
        let n = shape.size();
        let mut space = TabloidSpace { rows, n, dim: 0 };
        space.dim = space.arrangements(&space.rows.clone(), n) as usize;
        space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of words with the given remaining letter counts.
    fn arrangements(&self, counts: &[usize], total: usize) -> u64 {
        let mut r = 1u64;
        let mut seen = 0usize;
        for &c in counts {
            seen += c;
            let mut binom = 1u64;
            for i in 0..c {
                binom = binom * (seen - i) as u64 / (i + 1) as u64;
            }
            r *= binom;
        }
        assert_eq!(seen, total);
        r
    }

    /// Lexicographic position of a row word among all words of this content.
    pub fn rank(&self, word: &[usize]) -> usize {
        assert_eq!(word.len(), self.n);
        let mut counts = self.rows.clone();
        let mut multi = self.dim as u64;
        let mut rem = self.n as u64;
        let mut r = 0u64;
        for &c in word {
            for l in 0..c {
                r += multi * counts[l] as u64 / rem;
            }
            multi = multi * counts[c] as u64 / rem;
            counts[c] -= 1;
            rem -= 1;
        }
        r as usize
    }

    pub fn unrank(&self, mut r: usize) -> Vec<usize> {
        assert!(r < self.dim);
        let mut counts = self.rows.clone();
        let mut multi = self.dim as u64;
        let mut rem = self.n as u64;
        let mut word = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            for l in 0..counts.len() {
                let with_l = multi * counts[l] as u64 / rem;
                if (r as u64) < with_l {
                    word.push(l);
                    multi = with_l;
                    counts[l] -= 1;
                    rem -= 1;
                    break;
                }
                r -= with_l as usize;
            }
        }
        word
    }

    /// The permutation of basis indices induced by the point permutation
    /// `sigma` (given as `sigma[p] = image of p`).
    pub fn index_action(&self, sigma: &[usize]) -> Vec<usize> {
        assert_eq!(sigma.len(), self.n);
        let mut out = vec![0; self.dim];
        let mut permuted = vec![0; self.n];
        for t in 0..self.dim {
            let word = self.unrank(t);
            for p in 0..self.n {
                permuted[sigma[p]] = word[p];
            }
            out[t] = self.rank(&permuted);
        }
        out
    }
}

/// The transposition of the points 0 and 1.
pub fn transposition(n: usize) -> Vec<usize> {
    assert!(n >= 2);
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(0, 1);
    p
}

/// The cycle `0 -> 1 -> … -> n-1 -> 0`.
pub fn full_cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// Point permutations generating the symmetric group; empty for `n < 2`.
pub fn group_generators(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        Vec::new()
    } else {
        vec![transposition(n), full_cycle(n)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn dims_are_multinomials() {
        assert_eq!(TabloidSpace::new(&p(&[4, 1])).dim(), 5);
        assert_eq!(TabloidSpace::new(&p(&[3, 2])).dim(), 10);
        assert_eq!(TabloidSpace::new(&p(&[2, 2, 1])).dim(), 30);
        assert_eq!(TabloidSpace::new(&Partition::rectangle(6, 1)).dim(), 720);
        assert_eq!(TabloidSpace::new(&p(&[5])).dim(), 1);
        assert_eq!(TabloidSpace::new(&Partition::empty()).dim(), 1);
    }

    #[test]
    fn rank_unrank_round_trip() {
        for shape in [p(&[3, 2]), p(&[2, 2, 1]), p(&[4, 1]), Partition::rectangle(5, 1)] {
            let space = TabloidSpace::new(&shape);
            let mut seen = Vec::new();
            for t in 0..space.dim() {
                let word = space.unrank(t);
                assert_eq!(space.rank(&word), t);
                // word has the right content
                for (row, &size) in shape.parts().iter().enumerate() {
                    assert_eq!(word.iter().filter(|&&w| w == row).count(), size);
                }
                seen.push(word);
            }
            seen.dedup();
            assert_eq!(seen.len(), space.dim());
            // unrank is ordered lexicographically
            assert!(seen.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn index_action_is_a_permutation_and_composes() {
        let space = TabloidSpace::new(&p(&[2, 2, 1]));
        let n = 5;
        let s = transposition(n);
        let c = full_cycle(n);
        let a = space.index_action(&s);
        let b = space.index_action(&c);
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..space.dim()).collect::<Vec<_>>());
        // composite point permutation s∘c matches composite index action
        let sc: Vec<usize> = (0..n).map(|i| s[c[i]]).collect();
        let ab = space.index_action(&sc);
        for t in 0..space.dim() {
            assert_eq!(ab[t], a[b[t]]);
        }
        // identity acts as identity
        let id: Vec<usize> = (0..n).collect();
        assert_eq!(space.index_action(&id), (0..space.dim()).collect::<Vec<_>>());
    }
}
