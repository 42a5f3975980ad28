//! Splitting modules into composition factors.
//!
//! The splitting element is a seeded sum of short words in the generators.
//! For each irreducible factor p of its minimal polynomial, spinning up one
//! vector of ker p(θ) either yields a proper submodule, which splits the
//! module, or fills the space. Filling proves nothing by itself; but when
//! nullity(p(θ)) = deg p the kernel is simple as an F2[θ]-module and a
//! single dual spin settles irreducibility: if some vector of ker p(θᵀ)
//! generates a proper subspace under the transposed generators, its
//! orthogonal complement is a proper submodule, and if it too generates
//! everything the module is irreducible. Trying the spin on every singular
//! factor matters: an isotypic section such as two copies of the trivial
//! module admits no element with nullity(p(θ)) = deg p at all, yet any
//! kernel vector of the zero map splits it.

use thiserror::Error;

use super::{quotient, submodule, Module};
use crate::gf2::poly::min_poly;
use crate::gf2::{BitMatrix, BitVec, Subspace};
use crate::util::SplitMix64;

const ATTEMPTS: u32 = 64;

#[derive(Debug, Error)]
pub enum ChopError {
    #[error("no splitting element found for a module of dimension {dim} after {attempts} attempts")]
    NoSplittingElement { dim: usize, attempts: u32 },
    #[error("no discriminating element found for modules of dimension {dim} after {attempts} attempts")]
    NoDiscriminatingElement { dim: usize, attempts: u32 },
}

/// Closure of the given vectors under the module generators.
pub fn spin(m: &Module, seeds: &[BitVec]) -> Subspace {
    let mut s = Subspace::new(m.dim());
    let mut work = Vec::new();
    for v in seeds {
        if s.insert(v) {
            work.push(v.clone());
        }
    }
    let mut i = 0;
    while i < work.len() {
        for g in m.gens() {
            let w = g.apply(&work[i]);
            if s.insert(&w) {
                work.push(w);
            }
        }
        i += 1;
    }
    s
}

fn theta_spec(rng: &mut SplitMix64, gen_count: usize) -> Vec<Vec<usize>> {
    let terms = 1 + rng.below(3) as usize;
    (0..terms)
        .map(|_| {
            let len = 1 + rng.below(4) as usize;
            (0..len).map(|_| rng.below(gen_count as u64) as usize).collect()
        })
        .collect()
}

fn eval_spec(m: &Module, spec: &[Vec<usize>]) -> BitMatrix {
    let mut acc = BitMatrix::zero(m.dim(), m.dim());
    for word in spec {
        let mut prod = m.gens()[word[0]].clone();
        for &g in &word[1..] {
            prod = prod.mul(&m.gens()[g]);
        }
        acc = acc.add(&prod);
    }
    acc
}

fn transposed(m: &Module) -> Module {
    Module::new(m.dim(), m.gens().iter().map(BitMatrix::transpose).collect())
}

fn orthogonal_complement(s: &Subspace) -> Vec<BitVec> {
    BitMatrix::from_rows(s.basis(), s.ambient())
        .transpose()
        .left_kernel()
}

enum Outcome {
    Split(Subspace),
    Irreducible,
}

fn try_split(m: &Module, rng: &mut SplitMix64) -> Option<Outcome> {
    let theta = eval_spec(m, &theta_spec(rng, m.gens().len()));
    let mut factors = min_poly(&theta).factor();
    factors.sort_by_key(|(p, _)| (p.degree(), p.clone()));
    for (p, _) in &factors {
        let pm = p.eval_matrix(&theta);
        let kernel = pm.left_kernel();
        if kernel.is_empty() {
            continue;
        }
        let w = spin(m, &kernel[..1]);
        if !w.is_full() {
            return Some(Outcome::Split(w));
        }
        if kernel.len() != p.degree().unwrap() {
            continue;
        }
        let dual_kernel = pm.transpose().left_kernel();
        let wd = spin(&transposed(m), &dual_kernel[..1]);
        if !wd.is_full() {
            let comp = orthogonal_complement(&wd);
            return Some(Outcome::Split(Subspace::from_vectors(m.dim(), &comp)));
        }
        return Some(Outcome::Irreducible);
    }
    None
}

/// Composition factors, repeated with multiplicity, in the deterministic
/// order produced by recursive splitting. Factors are certified irreducible.
pub fn chop(m: &Module, seed: u64) -> Result<Vec<Module>, ChopError> {
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(seed);
    chop_into(m, &mut rng, &mut out)?;
    assert_eq!(out.iter().map(Module::dim).sum::<usize>(), m.dim());
    Ok(out)
}

fn chop_into(m: &Module, rng: &mut SplitMix64, out: &mut Vec<Module>) -> Result<(), ChopError> {
    if m.dim() == 0 {
        return Ok(());
    }
    if m.dim() == 1 {
        out.push(m.clone());
        return Ok(());
    }
    for _ in 0..ATTEMPTS {
        match try_split(m, rng) {
            Some(Outcome::Irreducible) => {
                out.push(m.clone());
                return Ok(());
            }
            Some(Outcome::Split(w)) => {
                chop_into(&submodule(m, &w), rng, out)?;
                chop_into(&quotient(m, &w), rng, out)?;
                return Ok(());
            }
            None => {}
        }
    }
    Err(ChopError::NoSplittingElement { dim: m.dim(), attempts: ATTEMPTS })
}

pub fn is_irreducible(m: &Module, seed: u64) -> Result<bool, ChopError> {
    if m.dim() == 0 {
        return Ok(false);
    }
    if m.dim() == 1 {
        return Ok(true);
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..ATTEMPTS {
        match try_split(m, &mut rng) {
            Some(Outcome::Irreducible) => return Ok(true),
            Some(Outcome::Split(_)) => return Ok(false),
            None => {}
        }
    }
    Err(ChopError::NoSplittingElement { dim: m.dim(), attempts: ATTEMPTS })
}

/// Spin up a standard basis from one vector, recording which images were
/// accepted. Isomorphic modules started from matching vectors produce the
/// same acceptance pattern and matching bases.
fn standard_basis(m: &Module, v: &BitVec) -> (Vec<BitVec>, Vec<bool>) {
    let mut span = Subspace::new(m.dim());
    span.insert(v);
    let mut basis = vec![v.clone()];
    let mut schedule = Vec::new();
    let mut i = 0;
    while i < basis.len() {
        for g in m.gens() {
            let w = g.apply(&basis[i]);
            let grew = span.insert(&w);
            schedule.push(grew);
            if grew {
                basis.push(w);
            }
        }
        i += 1;
    }
    (basis, schedule)
}

/// Isomorphism test for two certified irreducible modules over the same
/// generating set, by the standard basis method: take an element whose
/// minimal polynomial has a linear factor of nullity one, use the unique
/// kernel vectors on both sides as base points, and compare the generator
/// matrices in the spun-up bases.
pub fn isomorphic(a: &Module, b: &Module, seed: u64) -> Result<bool, ChopError> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    if a.dim() == 0 {
        return Ok(true);
    }
    assert_eq!(a.gens().len(), b.gens().len());
    let mut rng = SplitMix64::new(seed);
    for _ in 0..ATTEMPTS {
        let spec = theta_spec(&mut rng, a.gens().len());
        let ta = eval_spec(a, &spec);
        let tb = eval_spec(b, &spec);
        let mpa = min_poly(&ta);
        if mpa != min_poly(&tb) {
            return Ok(false);
        }
        let mut factors = mpa.factor();
        factors.sort_by_key(|(p, _)| (p.degree(), p.clone()));
        let mut base = None;
        for (p, _) in &factors {
            if p.degree() != Some(1) {
                continue;
            }
            let ka = p.eval_matrix(&ta).left_kernel();
            if ka.len() != 1 {
                continue;
            }
            let kb = p.eval_matrix(&tb).left_kernel();
            if kb.len() != 1 {
                return Ok(false);
            }
            base = Some((ka.into_iter().next().unwrap(), kb.into_iter().next().unwrap()));
            break;
        }
        let Some((va, vb)) = base else { continue };
        let (sa, schedule_a) = standard_basis(a, &va);
        assert_eq!(sa.len(), a.dim(), "isomorphism test needs irreducible modules");
        let (sb, schedule_b) = standard_basis(b, &vb);
        if schedule_a != schedule_b {
            return Ok(false);
        }
        let ca = BitMatrix::from_rows(&sa, a.dim());
        let cb = BitMatrix::from_rows(&sb, b.dim());
        let cai = ca.inverse().unwrap();
        let cbi = cb.inverse().unwrap();
        for (ga, gb) in a.gens().iter().zip(b.gens()) {
            if ca.mul(ga).mul(&cai) != cb.mul(gb).mul(&cbi) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    Err(ChopError::NoDiscriminatingElement { dim: a.dim(), attempts: ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{gram_head, permutation_module, specht_module};
    use crate::partition::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn natural_permutation_module_has_trivial_and_natural_factor() {
        let m = permutation_module(&p(&[4, 1]));
        let factors = chop(&m, 5).unwrap();
        let mut dims: Vec<usize> = factors.iter().map(Module::dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 4]);
        let big = factors.iter().find(|f| f.dim() == 4).unwrap();
        assert!(is_irreducible(big, 17).unwrap());
        let triv = factors.iter().find(|f| f.dim() == 1).unwrap();
        assert!(isomorphic(triv, &specht_module(&p(&[5])), 23).unwrap());
    }

    #[test]
    fn irreducibility_of_small_specht_modules() {
        assert!(is_irreducible(&specht_module(&p(&[2, 1])), 1).unwrap());
        assert!(!is_irreducible(&specht_module(&p(&[3, 1])), 1).unwrap());
        assert!(!is_irreducible(&permutation_module(&p(&[4, 1])), 1).unwrap());
    }

    #[test]
    fn chop_respects_composition_length() {
        let factors = chop(&specht_module(&p(&[3, 1, 1])), 9).unwrap();
        let total: usize = factors.iter().map(Module::dim).sum();
        assert_eq!(total, 6);
        for f in &factors {
            assert!(is_irreducible(f, 101).unwrap());
        }
    }

    #[test]
    fn chop_splits_isotypic_trivial_sections() {
        // both generators act as the identity, so every algebra element is
        // 0 or 1 and no factor has nullity equal to its degree
        let m = Module::new(3, vec![BitMatrix::identity(3), BitMatrix::identity(3)]);
        let factors = chop(&m, 7).unwrap();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|f| f.dim() == 1));
        assert!(!is_irreducible(&m, 7).unwrap());
    }

    #[test]
    fn chop_is_seed_independent_up_to_reordering() {
        let m = permutation_module(&p(&[3, 2]));
        let mut a: Vec<usize> = chop(&m, 2).unwrap().iter().map(Module::dim).collect();
        let mut b: Vec<usize> = chop(&m, 3).unwrap().iter().map(Module::dim).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn spin_of_one_tabloid_fills_the_permutation_module() {
        let m = permutation_module(&p(&[4, 1]));
        let s = spin(&m, &[BitVec::unit(m.dim(), 0)]);
        assert!(s.is_full());
    }

    #[test]
    fn isomorphism_distinguishes_duals_and_matches_heads() {
        // the two one-dimensional Specht modules coincide in characteristic 2
        let triv = specht_module(&p(&[4]));
        let sign = specht_module(&p(&[1, 1, 1, 1]));
        assert!(isomorphic(&triv, &sign, 3).unwrap());
        // the head of S^(3,1) is its unique two-dimensional factor
        let head = gram_head(&p(&[3, 1]));
        let factors = chop(&specht_module(&p(&[3, 1])), 4).unwrap();
        let two = factors.iter().find(|f| f.dim() == 2).unwrap();
        assert!(isomorphic(&head, two, 6).unwrap());
        assert!(!isomorphic(&head, &specht_module(&p(&[4])), 8).unwrap());
    }
}
