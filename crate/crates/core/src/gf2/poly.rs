//! Polynomials over GF(2): arithmetic, Berlekamp factorization and minimal
//! polynomials of matrices. Degrees stay in the hundreds, so coefficients
//! are kept as plain bools and all algorithms are the quadratic textbook
//! ones.

use super::{BitMatrix, BitVec};
use std::fmt;
use std::ops::{Add, Mul, Rem};

/// A polynomial over GF(2); `coeffs[i]` is the coefficient of `x^i` and the
/// top coefficient is always true (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2Poly {
    coeffs: Vec<bool>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { coeffs: vec![true] }
    }

    pub fn x() -> Self {
        Gf2Poly { coeffs: vec![false, true] }
    }

    pub fn from_coeffs(mut coeffs: Vec<bool>) -> Self {
        while coeffs.last() == Some(&false) {
            coeffs.pop();
        }
        Gf2Poly { coeffs }
    }

    /// Little-endian bits of `bits` as coefficients; `0b111` is `x²+x+1`.
    pub fn from_bits(bits: u64) -> Self {
        Self::from_coeffs((0..64).map(|i| bits >> i & 1 == 1).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [true]
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.coeffs.get(i).copied().unwrap_or(false)
    }

    pub fn divmod(&self, div: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let d = div.degree().expect("division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![false; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let shift = rem.len() - 1 - d;
            if rem[rem.len() - 1] {
                quo[shift] = true;
                for i in 0..=d {
                    rem[shift + i] ^= div.coeffs[i];
                }
            }
            rem.pop();
        }
        (Gf2Poly::from_coeffs(quo), Gf2Poly::from_coeffs(rem))
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }

    pub fn derivative(&self) -> Gf2Poly {
        Gf2Poly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| c && i % 2 == 1).collect(),
        )
    }

    /// For an even polynomial `f(x) = g(x²)` returns `g`, the square root.
    fn even_root(&self) -> Gf2Poly {
        Gf2Poly::from_coeffs(self.coeffs.iter().copied().step_by(2).collect())
    }

    /// Product of the distinct irreducible factors.
    pub fn radical(&self) -> Gf2Poly {
        assert!(!self.is_zero());
        if self.degree() == Some(0) {
            return Gf2Poly::one();
        }
        let deriv = self.derivative();
        if deriv.is_zero() {
            return self.even_root().radical();
        }
        // factors of odd multiplicity, each once
        let odd_part = self.divmod(&self.gcd(&deriv)).0;
        let mut rest = self.clone();
        loop {
            let g = rest.gcd(&odd_part);
            if g.is_one() {
                break;
            }
            rest = rest.divmod(&g).0;
        }
        &odd_part * &rest.radical()
    }

    /// Irreducible factors with multiplicities, sorted.
    pub fn factor(&self) -> Vec<(Gf2Poly, usize)> {
        assert!(!self.is_zero());
        let mut out = Vec::new();
        for p in berlekamp(&self.radical()) {
            let mut mult = 0;
            let mut rest = self.clone();
            loop {
                let (q, r) = rest.divmod(&p);
                if !r.is_zero() {
                    break;
                }
                mult += 1;
                rest = q;
            }
            out.push((p, mult));
        }
        out.sort();
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.degree().map_or(false, |d| d >= 1) && self.factor() == [(self.clone(), 1)]
    }

    /// `p(M)` by Horner evaluation.
    pub fn eval_matrix(&self, m: &BitMatrix) -> BitMatrix {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let mut acc = BitMatrix::zero(n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if c {
                acc = acc.add(&BitMatrix::identity(n));
            }
        }
        acc
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;
    fn add(self, other: &Gf2Poly) -> Gf2Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Gf2Poly::from_coeffs((0..n).map(|i| self.coeff(i) ^ other.coeff(i)).collect())
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, other: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || other.is_zero() {
            return Gf2Poly::zero();
        }
        let mut coeffs = vec![false; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a {
                for (j, &b) in other.coeffs.iter().enumerate() {
                    coeffs[i + j] ^= b;
                }
            }
        }
        Gf2Poly::from_coeffs(coeffs)
    }
}

impl Rem for &Gf2Poly {
    type Output = Gf2Poly;
    fn rem(self, other: &Gf2Poly) -> Gf2Poly {
        self.divmod(other).1
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            if !self.coeffs[i] {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Irreducible factors of a squarefree polynomial, via the kernel of the
/// Frobenius map on `GF(2)[x]/f`.
fn berlekamp(f: &Gf2Poly) -> Vec<Gf2Poly> {
    let d = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    // q[i] = x^{2i} mod f, as rows of the Frobenius matrix
    let mut frob = BitMatrix::zero(d, d);
    let xsq = &(&Gf2Poly::x() * &Gf2Poly::x()) % f;
    let mut power = Gf2Poly::one();
    for i in 0..d {
        for j in 0..d {
            frob.set(i, j, power.coeff(j));
        }
        power = &(&power * &xsq) % f;
    }
    let frob_minus_id = frob.add(&BitMatrix::identity(d));
    let kernel = frob_minus_id.left_kernel();
    let splitters: Vec<Gf2Poly> = kernel
        .iter()
        .map(|v| Gf2Poly::from_coeffs((0..d).map(|j| v.get(j)).collect()))
        .collect();
    let mut factors = vec![f.clone()];
    for v in &splitters {
        if factors.len() == kernel.len() {
            break;
        }
        let mut next = Vec::with_capacity(factors.len());
        for g in &factors {
            let h = g.gcd(&(v % g));
            if h.is_one() || &h == g {
                let h1 = g.gcd(&(&(v + &Gf2Poly::one()) % g));
                if h1.is_one() || &h1 == g {
                    next.push(g.clone());
                } else {
                    next.push(g.divmod(&h1).0);
                    next.push(h1);
                }
            } else {
                next.push(g.divmod(&h).0);
                next.push(h);
            }
        }
        factors = next;
    }
    debug_assert_eq!(factors.len(), kernel.len());
    factors
}

/// Companion matrix of a monic polynomial, acting on row vectors as
/// multiplication by `x` on `GF(2)[x]/p`.
pub fn companion(p: &Gf2Poly) -> BitMatrix {
    let d = p.degree().expect("companion of the zero polynomial");
    assert!(d >= 1);
    let mut m = BitMatrix::zero(d, d);
    for i in 0..d - 1 {
        m.set(i, i + 1, true);
    }
    for j in 0..d {
        m.set(d - 1, j, p.coeff(j));
    }
    m
}

/// Minimal polynomial of a square matrix: the least common multiple of the
/// annihilator polynomials of the standard basis vectors.
pub fn min_poly(m: &BitMatrix) -> Gf2Poly {
    assert_eq!(m.rows(), m.cols());
    let d = m.rows();
    if d == 0 {
        return Gf2Poly::one();
    }
    let mut result = Gf2Poly::one();
    let mut result_at_m = BitMatrix::identity(d);
    for i in 0..d {
        if result_at_m.row(i).is_zero() {
            continue;
        }
        let p = vector_annihilator(m, &BitVec::unit(d, i));
        let g = result.gcd(&p);
        result = &result.divmod(&g).0 * &p;
        result_at_m = result.eval_matrix(m);
        if result.degree() == Some(d) {
            break;
        }
    }
    result
}

/// Monic generator of `{p : v p(M) = 0}`, from the first linear dependency
/// in the Krylov sequence `v, vM, vM², …`.
fn vector_annihilator(m: &BitMatrix, v: &BitVec) -> Gf2Poly {
    let d = m.rows();
    let mut echelon: Vec<(BitVec, BitVec)> = Vec::new();
    let mut krylov = v.clone();
    for step in 0..=d {
        let mut r = krylov.clone();
        let mut combo = BitVec::unit(d + 1, step);
        for (er, ec) in &echelon {
            let lead = er.leading().unwrap();
            if r.get(lead) {
                r.xor_assign(er);
                combo.xor_assign(ec);
            }
        }
        if r.is_zero() {
            return Gf2Poly::from_coeffs((0..=step).map(|j| combo.get(j)).collect());
        }
        echelon.push((r, combo));
        krylov = m.apply(&krylov);
    }
    unreachable!("a dependency must appear within dim+1 steps");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::SplitMix64;

    fn poly(bits: u64) -> Gf2Poly {
        Gf2Poly::from_bits(bits)
    }

    fn random_poly(rng: &mut SplitMix64, max_deg: usize) -> Gf2Poly {
        let deg = rng.below(max_deg as u64 + 1) as usize;
        let mut coeffs: Vec<bool> = (0..deg).map(|_| rng.next_u64() & 1 == 1).collect();
        coeffs.push(true);
        Gf2Poly::from_coeffs(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let x = Gf2Poly::x();
        let xp1 = poly(0b11);
        assert_eq!(&xp1 * &xp1, poly(0b101));
        assert_eq!(&x + &x, Gf2Poly::zero());
        assert_eq!(poly(0b111).degree(), Some(2));
        assert_eq!((&poly(0b1001) % &poly(0b11)), Gf2Poly::zero());
        assert_eq!(poly(0b111).gcd(&poly(0b11)), Gf2Poly::one());
        assert_eq!(poly(0b1001).gcd(&poly(0b110)), poly(0b11));
    }

    #[test]
    fn divmod_round_trips() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let a = random_poly(&mut rng, 30);
            let b = random_poly(&mut rng, 15);
            let (q, r) = a.divmod(&b);
            assert_eq!(&(&q * &b) + &r, a);
            if !r.is_zero() {
                assert!(r.degree() < b.degree());
            }
        }
    }

    #[test]
    fn radical_strips_repeats() {
        let p = poly(0b111);
        let q = poly(0b11);
        let f = &(&p * &p) * &(&q * &(&q * &q));
        assert_eq!(f.radical(), &p * &q);
        assert_eq!(poly(0b101).radical(), poly(0b11));
        assert_eq!(Gf2Poly::one().radical(), Gf2Poly::one());
    }

    #[test]
    fn factor_hand_values() {
        assert!(poly(0b111).is_irreducible());
        assert!(poly(0b1011).is_irreducible());
        assert!(poly(0b1101).is_irreducible());
        assert!(poly(0b10011).is_irreducible());
        assert!(!poly(0b101).is_irreducible());
        assert_eq!(poly(0b101).factor(), vec![(poly(0b11), 2)]);
        assert_eq!(poly(0b10101).factor(), vec![(poly(0b111), 2)]);
        let f = &poly(0b111) * &poly(0b110);
        let mut expected = vec![(poly(0b10), 1), (poly(0b11), 1), (poly(0b111), 1)];
        expected.sort();
        assert_eq!(f.factor(), expected);
    }

    #[test]
    fn irreducible_counts_by_degree() {
        let expected = [0usize, 2, 1, 2, 3, 6, 9];
        for d in 1..=6usize {
            let mut count = 0;
            for low in 0..1u64 << d {
                if poly(low | 1 << d).is_irreducible() {
                    count += 1;
                }
            }
            assert_eq!(count, expected[d], "degree {d}");
        }
    }

    #[test]
    fn factorization_reconstructs_input() {
        let mut rng = SplitMix64::new(5);
        for _ in 0..120 {
            let f = random_poly(&mut rng, 24);
            if f.degree() == Some(0) {
                continue;
            }
            let factors = f.factor();
            let mut prod = Gf2Poly::one();
            for (p, mult) in &factors {
                assert!(p.is_irreducible(), "{p:?} in {f:?}");
                for _ in 0..*mult {
                    prod = &prod * p;
                }
            }
            assert_eq!(prod, f);
            for i in 0..factors.len() {
                for j in i + 1..factors.len() {
                    assert!(factors[i].0.gcd(&factors[j].0).is_one());
                }
            }
        }
    }

    #[test]
    fn companion_matrix_has_its_polynomial_as_min_poly() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..60 {
            let p = random_poly(&mut rng, 20);
            if p.degree().map_or(true, |d| d == 0) {
                continue;
            }
            let c = companion(&p);
            assert_eq!(min_poly(&c), p);
            assert!(p.eval_matrix(&c).is_zero());
        }
    }

    #[test]
    fn min_poly_special_cases() {
        assert_eq!(min_poly(&BitMatrix::identity(7)), poly(0b11));
        assert_eq!(min_poly(&BitMatrix::zero(5, 5)), poly(0b10));
        // block diagonal joins by lcm
        let p = poly(0b111);
        let q = poly(0b11);
        let (a, b) = (companion(&p), companion(&q));
        let mut block = BitMatrix::zero(3, 3);
        for i in 0..2 {
            for j in 0..2 {
                block.set(i, j, a.get(i, j));
            }
        }
        block.set(2, 2, b.get(0, 0));
        assert_eq!(min_poly(&block), &p * &q);
    }

    #[test]
    fn eval_matrix_horner() {
        let mut rng = SplitMix64::new(15);
        let m = {
            let mut m = BitMatrix::zero(9, 9);
            for i in 0..9 {
                for j in 0..9 {
                    m.set(i, j, rng.next_u64() & 1 == 1);
                }
            }
            m
        };
        // p(M) for p = x^3 + x + 1 agrees with explicit powers
        let m3 = m.mul(&m).mul(&m);
        let expect = m3.add(&m).add(&BitMatrix::identity(9));
        assert_eq!(poly(0b1011).eval_matrix(&m), expect);
    }
}
