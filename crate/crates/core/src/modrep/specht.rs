//! Specht modules over GF(2), spanned inside the tabloid module by the
//! polytabloids of standard tableaux.

use super::tabloid::{group_generators, TabloidSpace};
use super::{quotient, Module};
use crate::characters::specht_dimension;
use crate::gf2::{BitMatrix, BitVec, Subspace};
use crate::partition::Partition;

/// All standard tableaux of the given shape. Each tableau is returned as its
/// list of columns, a column being the points it contains from top to bottom.
fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    let mut gen = SytGen {
        parts: shape.parts().to_vec(),
        heights: shape.conjugate().parts().to_vec(),
        cur: vec![0; shape.len()],
        grid: shape.parts().iter().map(|&r| vec![0; r]).collect(),
        out: Vec::new(),
        n: shape.size(),
    };
    gen.rec(0);
    gen.out
}

struct SytGen {
    parts: Vec<usize>,
    heights: Vec<usize>,
    cur: Vec<usize>,
    grid: Vec<Vec<usize>>,
    out: Vec<Vec<Vec<usize>>>,
    n: usize,
}

impl SytGen {
    fn rec(&mut self, p: usize) {
        if p == self.n {
            let columns = self
                .heights
                .iter()
                .enumerate()
                .map(|(j, &h)| (0..h).map(|i| self.grid[i][j]).collect())
                .collect();
            self.out.push(columns);
            return;
        }
        for i in 0..self.parts.len() {
            if self.cur[i] < self.parts[i] && (i == 0 || self.cur[i - 1] > self.cur[i]) {
                self.grid[i][self.cur[i]] = p;
                self.cur[i] += 1;
                self.rec(p + 1);
                self.cur[i] -= 1;
            }
        }
    }
}

/// The polytabloid of a tableau: the sum over its column stabiliser of the
/// permuted tabloids. Over GF(2) the signs disappear and the sum is the
/// indicator of one tabloid per stabiliser element.
fn polytabloid(space: &TabloidSpace, columns: &[Vec<usize>]) -> BitVec {
    let mut builder = PolyBuilder {
        space,
        columns,
        word: vec![0; space.n()],
        acc: BitVec::zeros(space.dim()),
    };
    builder.run(0);
    builder.acc
}

struct PolyBuilder<'a> {
    space: &'a TabloidSpace,
    columns: &'a [Vec<usize>],
    word: Vec<usize>,
    acc: BitVec,
}

impl PolyBuilder<'_> {
    fn run(&mut self, c: usize) {
        if c == self.columns.len() {
            let r = self.space.rank(&self.word);
            let b = self.acc.get(r);
            self.acc.set(r, !b);
            return;
        }
        let mut order: Vec<usize> = (0..self.columns[c].len()).collect();
        let k = order.len();
        self.perm_rec(c, &mut order, k);
    }

    fn perm_rec(&mut self, c: usize, order: &mut Vec<usize>, k: usize) {
        if k <= 1 {
            let columns = self.columns;
            let col = &columns[c];
            for (row, &pos) in order.iter().enumerate() {
                self.word[col[pos]] = row;
            }
            self.run(c + 1);
            return;
        }
        for i in 0..k {
            order.swap(i, k - 1);
            self.perm_rec(c, order, k - 1);
            order.swap(i, k - 1);
        }
    }
}

fn build(shape: &Partition) -> (TabloidSpace, Subspace, Module) {
    let space = TabloidSpace::new(shape);
    let dim = specht_dimension(shape) as usize;
    let mut span = Subspace::new(space.dim());
    for columns in standard_tableaux(shape) {
        let v = polytabloid(&space, &columns);
        let grew = span.insert(&v);
        assert!(grew, "standard polytabloids are dependent");
    }
    assert_eq!(span.dim(), dim);
    let gens = group_generators(space.n())
        .iter()
        .map(|sigma| {
            let act = space.index_action(sigma);
            let rows: Vec<BitVec> = span
                .basis()
                .iter()
                .map(|b| {
                    let mut img = BitVec::zeros(space.dim());
                    for t in b.iter_ones() {
                        img.set(act[t], true);
                    }
                    span.coords(&img)
                        .expect("polytabloid span is not closed under the action")
                })
                .collect();
            BitMatrix::from_rows(&rows, dim)
        })
        .collect();
    (space, span, Module::new(dim, gens))
}

/// The Specht module of a partition, with the group acting through the fixed
/// generators. Its dimension is checked against the hook length formula.
pub fn specht_module(shape: &Partition) -> Module {
    build(shape).2
}

/// The quotient of the Specht module by the radical of its bilinear form.
/// Nonzero exactly when the partition is 2-regular, in which case it is the
/// simple module the partition labels.
pub fn gram_head(shape: &Partition) -> Module {
    let (space, span, module) = build(shape);
    let b = BitMatrix::from_rows(span.basis(), space.dim());
    let gram = b.mul_transpose(&b);
    let rad = Subspace::from_vectors(module.dim(), &gram.left_kernel());
    quotient(&module, &rad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn dimensions_follow_the_hook_formula() {
        for n in 0..=6 {
            for la in partitions(n) {
                let m = specht_module(&la);
                assert_eq!(m.dim() as u64, specht_dimension(&la));
            }
        }
    }

    #[test]
    fn generators_satisfy_the_group_relations() {
        let m = specht_module(&p(&[3, 2]));
        let s = &m.gens()[0];
        let c = &m.gens()[1];
        let id = BitMatrix::identity(m.dim());
        assert_eq!(s.mul(s), id);
        let mut c5 = id.clone();
        for _ in 0..5 {
            c5 = c5.mul(c);
        }
        assert_eq!(c5, id);
    }

    #[test]
    fn one_dimensional_modules_have_trivial_action() {
        for la in [p(&[4]), p(&[1, 1, 1, 1])] {
            let m = specht_module(&la);
            assert_eq!(m.dim(), 1);
            for g in m.gens() {
                assert_eq!(*g, BitMatrix::identity(1));
            }
        }
    }

    #[test]
    fn polytabloid_by_hand() {
        // shape (2,1), tableau with first column {0,2}: the column swap
        // produces the two tabloids with row word 001 and 100
        let space = TabloidSpace::new(&p(&[2, 1]));
        let v = polytabloid(&space, &[vec![0, 2], vec![1]]);
        assert_eq!(space.rank(&[0, 0, 1]), 0);
        assert_eq!(space.rank(&[1, 0, 0]), 2);
        let ones: Vec<usize> = v.iter_ones().collect();
        assert_eq!(ones, vec![0, 2]);
    }

    #[test]
    fn gram_head_dimensions() {
        for (la, dim) in [
            (p(&[2, 1]), 2),
            (p(&[3, 1]), 2),
            (p(&[4]), 1),
            (p(&[2, 2]), 0),
            (p(&[1, 1]), 0),
            (p(&[4, 1]), 4),
            (p(&[3, 2]), 4),
            (p(&[5]), 1),
        ] {
            assert_eq!(gram_head(&la).dim(), dim, "head of {la}");
        }
    }

    #[test]
    fn empty_and_singleton_shapes() {
        assert_eq!(specht_module(&Partition::empty()).dim(), 1);
        assert_eq!(specht_module(&p(&[1])).dim(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
    }
}
