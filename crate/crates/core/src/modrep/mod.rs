//! Modular representations of symmetric groups over GF(2), built from
//! scratch: tabloid permutation modules, Specht modules spanned by standard
//! polytabloids, a module chopper with irreducibility certificates, and the
//! resulting decomposition matrices.

pub mod chop;
pub mod specht;
pub mod tabloid;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::characters::specht_dimension;
use crate::gf2::{BitMatrix, BitVec, Subspace};
use crate::partition::{partitions, Partition};
use crate::util::derive_seed;

pub use chop::{chop, is_irreducible, isomorphic, spin, ChopError};
pub use specht::{gram_head, specht_module};
pub use tabloid::TabloidSpace;

/// A finite-dimensional GF(2) representation, recorded as the matrices of a
/// fixed generating set acting on row vectors.
#[derive(Clone)]
pub struct Module {
    dim: usize,
    gens: Vec<BitMatrix>,
}

impl Module {
    pub fn new(dim: usize, gens: Vec<BitMatrix>) -> Self {
        for g in &gens {
            assert_eq!(g.rows(), dim);
            assert_eq!(g.cols(), dim);
        }
        Module { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[BitMatrix] {
        &self.gens
    }
}

/// The action restricted to an invariant subspace, in the coordinates of its
/// reduced basis.
pub fn submodule(m: &Module, w: &Subspace) -> Module {
    assert_eq!(w.ambient(), m.dim());
    let d = w.dim();
    let gens = m
        .gens
        .iter()
        .map(|g| {
            let rows: Vec<BitVec> = w
                .basis()
                .iter()
                .map(|b| w.coords(&g.apply(b)).expect("subspace is not invariant"))
                .collect();
            BitMatrix::from_rows(&rows, d)
        })
        .collect();
    Module::new(d, gens)
}

/// The action induced on the quotient by an invariant subspace, in the
/// coordinates of the non-pivot positions.
pub fn quotient(m: &Module, w: &Subspace) -> Module {
    assert_eq!(w.ambient(), m.dim());
    for g in &m.gens {
        for b in w.basis() {
            assert!(w.contains(&g.apply(b)), "subspace is not invariant");
        }
    }
    let free = w.free_columns();
    let d = free.len();
    let mut col_index = vec![usize::MAX; m.dim()];
    for (i, &c) in free.iter().enumerate() {
        col_index[c] = i;
    }
    let gens = m
        .gens
        .iter()
        .map(|g| {
            let mut mat = BitMatrix::zero(d, d);
            for (i, &c) in free.iter().enumerate() {
                let img = w.reduce(&g.row(c));
                for j in img.iter_ones() {
                    mat.set(i, col_index[j], true);
                }
            }
            mat
        })
        .collect();
    Module::new(d, gens)
}

/// The full permutation module on tabloids of the given shape.
pub fn permutation_module(shape: &Partition) -> Module {
    let space = TabloidSpace::new(shape);
    let gens = tabloid::group_generators(space.n())
        .iter()
        .map(|sigma| {
            let act = space.index_action(sigma);
            let mut m = BitMatrix::zero(space.dim(), space.dim());
            for (t, &image) in act.iter().enumerate() {
                m.set(t, image, true);
            }
            m
        })
        .collect();
    Module::new(space.dim(), gens)
}

/// The 2-modular decomposition matrix of a symmetric group: for each
/// partition of `n` the multiset of simple factors of its Specht module,
/// with simples labelled by the 2-regular partitions.
pub struct DecompositionMatrix {
    pub(crate) n: usize,
    pub(crate) rows: BTreeMap<Partition, BTreeMap<Partition, u64>>,
    pub(crate) dims: BTreeMap<Partition, u64>,
}

impl DecompositionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> u64 {
        self.rows
            .get(lambda)
            .and_then(|r| r.get(mu))
            .copied()
            .unwrap_or(0)
    }

    pub fn row(&self, lambda: &Partition) -> Option<&BTreeMap<Partition, u64>> {
        self.rows.get(lambda)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Partition, &BTreeMap<Partition, u64>)> {
        self.rows.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.dims.keys()
    }

    /// Dimension of the simple module with the given label.
    pub fn irreducible_dim(&self, mu: &Partition) -> Option<u64> {
        self.dims.get(mu).copied()
    }
}

/// Computes the decomposition matrix by chopping every Specht module into
/// simples and matching the factors up to isomorphism. Rows are chopped in
/// parallel, each from its own seed, so the result does not depend on the
/// thread schedule.
pub fn decomposition_matrix(n: usize, seed: u64) -> Result<DecompositionMatrix, ChopError> {
    let lambdas = partitions(n);
    let factor_lists: Vec<Vec<Module>> = lambdas
        .par_iter()
        .enumerate()
        .map(|(i, la)| chop(&specht_module(la), derive_seed(seed, i as u64)))
        .collect::<Result<_, _>>()?;

    let iso_seed = derive_seed(seed, 0x1d0);
    let mut reps: Vec<Module> = Vec::new();
    let mut labels: Vec<Option<Partition>> = Vec::new();
    let mut rows = BTreeMap::new();
    for (la, factors) in lambdas.iter().zip(&factor_lists) {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for f in factors {
            let mut found = None;
            for (i, rep) in reps.iter().enumerate() {
                if isomorphic(f, rep, iso_seed)? {
                    found = Some(i);
                    break;
                }
            }
            let i = found.unwrap_or_else(|| {
                reps.push(f.clone());
                labels.push(None);
                reps.len() - 1
            });
            *counts.entry(i).or_insert(0) += 1;
        }
        if la.is_strict() {
            let unlabelled: Vec<usize> = counts
                .keys()
                .copied()
                .filter(|&i| labels[i].is_none())
                .collect();
            assert_eq!(
                unlabelled.len(),
                1,
                "expected exactly one new simple in the Specht module of {la}"
            );
            assert_eq!(counts[&unlabelled[0]], 1);
            labels[unlabelled[0]] = Some(la.clone());
        }
        let row: BTreeMap<Partition, u64> = counts
            .iter()
            .map(|(&i, &c)| {
                let label = labels[i]
                    .clone()
                    .unwrap_or_else(|| panic!("factor of the Specht module of {la} has no label"));
                (label, c)
            })
            .collect();
        let total: u64 = row.iter().map(|(mu, c)| c * reps_dim(&reps, &labels, mu)).sum();
        assert_eq!(total, specht_dimension(la));
        rows.insert(la.clone(), row);
    }

    let dims = labels
        .iter()
        .zip(&reps)
        .map(|(l, rep)| (l.clone().unwrap(), rep.dim() as u64))
        .collect();
    Ok(DecompositionMatrix { n, rows, dims })
}

fn reps_dim(reps: &[Module], labels: &[Option<Partition>], mu: &Partition) -> u64 {
    let i = labels.iter().position(|l| l.as_ref() == Some(mu)).unwrap();
    reps[i].dim() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::strict_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn row(d: &DecompositionMatrix, la: &[usize]) -> Vec<(Partition, u64)> {
        d.row(&p(la))
            .unwrap()
            .iter()
            .map(|(mu, &c)| (mu.clone(), c))
            .collect()
    }

    #[test]
    fn symmetric_group_on_four_points() {
        let d = decomposition_matrix(4, 7).unwrap();
        let d4 = p(&[4]);
        let d31 = p(&[3, 1]);
        assert_eq!(row(&d, &[4]), vec![(d4.clone(), 1)]);
        assert_eq!(row(&d, &[3, 1]), vec![(d4.clone(), 1), (d31.clone(), 1)]);
        assert_eq!(row(&d, &[2, 2]), vec![(d31.clone(), 1)]);
        assert_eq!(row(&d, &[2, 1, 1]), vec![(d4.clone(), 1), (d31.clone(), 1)]);
        assert_eq!(row(&d, &[1, 1, 1, 1]), vec![(d4.clone(), 1)]);
        assert_eq!(d.irreducible_dim(&d4), Some(1));
        assert_eq!(d.irreducible_dim(&d31), Some(2));
    }

    #[test]
    fn symmetric_group_on_five_points() {
        // worked out by solving the Brauer character system on the three
        // odd classes of S5 by hand
        let d = decomposition_matrix(5, 3).unwrap();
        let d5 = p(&[5]);
        let d41 = p(&[4, 1]);
        let d32 = p(&[3, 2]);
        assert_eq!(row(&d, &[5]), vec![(d5.clone(), 1)]);
        assert_eq!(row(&d, &[4, 1]), vec![(d41.clone(), 1)]);
        assert_eq!(row(&d, &[3, 2]), vec![(d5.clone(), 1), (d32.clone(), 1)]);
        assert_eq!(row(&d, &[3, 1, 1]), vec![(d5.clone(), 2), (d32.clone(), 1)]);
        assert_eq!(row(&d, &[2, 2, 1]), vec![(d5.clone(), 1), (d32.clone(), 1)]);
        assert_eq!(row(&d, &[2, 1, 1, 1]), vec![(d41.clone(), 1)]);
        assert_eq!(row(&d, &[1, 1, 1, 1, 1]), vec![(d5.clone(), 1)]);
        assert_eq!(d.irreducible_dim(&d41), Some(4));
        assert_eq!(d.irreducible_dim(&d32), Some(4));
    }

    #[test]
    fn labels_are_the_two_regular_partitions() {
        for n in 0..=6 {
            let d = decomposition_matrix(n, 11).unwrap();
            let labels: Vec<Partition> = d.labels().cloned().collect();
            assert_eq!(labels, strict_partitions(n));
        }
    }

    #[test]
    fn seed_does_not_change_the_matrix() {
        let a = decomposition_matrix(6, 1).unwrap();
        let b = decomposition_matrix(6, 987654321).unwrap();
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.dims, b.dims);
    }

    #[test]
    fn quotient_and_submodule_dims_add_up() {
        let m = permutation_module(&p(&[3, 2]));
        let mut all = BitVec::zeros(m.dim());
        for i in 0..m.dim() {
            all.set(i, true);
        }
        let w = Subspace::from_vectors(m.dim(), &[all]);
        let sub = submodule(&m, &w);
        let quo = quotient(&m, &w);
        assert_eq!(sub.dim(), 1);
        assert_eq!(quo.dim(), m.dim() - 1);
        for g in sub.gens() {
            assert_eq!(*g, BitMatrix::identity(1));
        }
    }
}
