//! Alexander polynomial of a braid closure from the reduced Burau
//! representation: `Δ(t) · (1 + t + … + t^{n-1}) ≐ det(I - ρ(β))`.
//!
//! The determinant is a polynomial of degree at most the crossing count
//! (every factor of the product has minors of degree at most one), so it
//! is recovered exactly by evaluating at `c + 1` points modulo several
//! 61-bit primes, interpolating, and lifting with the Chinese remainder
//! theorem until the lift stops changing.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::braid::BraidWord;
use crate::invariants::laurent::LaurentPoly;
use crate::scalar::{Field, Fp, Ring, PRIME_0, PRIME_1, PRIME_2, PRIME_3, PRIME_4, PRIME_5};

/// Square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![R::zero(); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = R::one();
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, v: R) {
        self.entries[row * self.dim + col] = v;
    }

    /// `I - self`.
    pub fn one_minus(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let id = if r == c { R::one() } else { R::zero() };
                out.set(r, c, id - self.get(r, c).clone());
            }
        }
        out
    }

    /// Right multiplication by the reduced Burau matrix of `σ_i`, which
    /// only rewrites column `i - 1`:
    /// `col ← t·col_{i-2} - t·col_{i-1} + col_i`.
    fn apply_generator(&mut self, i: usize, t: &R) {
        let c = i - 1;
        for r in 0..self.dim {
            let mut v = -(t.clone() * self.get(r, c).clone());
            if c > 0 {
                v = v + t.clone() * self.get(r, c - 1).clone();
            }
            if c + 1 < self.dim {
                v = v + self.get(r, c + 1).clone();
            }
            self.set(r, c, v);
        }
    }
}

/// Reduced Burau image of `w` with the variable specialized to `t`.
/// The matrix is `(n-1) × (n-1)`; a one-strand word gives the empty matrix.
pub fn burau_at<R: Ring>(w: &BraidWord, t: &R) -> Matrix<R> {
    let mut m = Matrix::identity(w.strands() - 1);
    for &i in w.letters() {
        m.apply_generator(i, t);
    }
    m
}

/// Determinant by Gaussian elimination over a field.
pub fn det_gauss<F: Field>(m: &Matrix<F>) -> F {
    let n = m.dim;
    let mut a = m.entries.clone();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        let pv = a[col * n + col].clone();
        det = det * pv.clone();
        let inv = F::one() / pv;
        for r in col + 1..n {
            let factor = a[r * n + col].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            for k in col..n {
                let v = a[r * n + k].clone() - factor.clone() * a[col * n + k].clone();
                a[r * n + k] = v;
            }
        }
    }
    det
}

/// Fraction-free (Bareiss) determinant over an integral domain whose `/`
/// is exact on divisible operands, e.g. `i128` or `BigInt`.
pub fn det_bareiss<R>(m: &Matrix<R>) -> R
where
    R: Ring + std::ops::Div<Output = R>,
{
    let n = m.dim;
    if n == 0 {
        return R::one();
    }
    let mut a = m.entries.clone();
    let mut sign = R::one();
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return R::zero();
            };
            for c in 0..n {
                a.swap(swap * n + c, k * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i * n + j].clone() * a[k * n + k].clone()
                    - a[i * n + k].clone() * a[k * n + j].clone();
                a[i * n + j] = v / prev.clone();
            }
        }
        prev = a[k * n + k].clone();
    }
    sign * a[n * n - 1].clone()
}

/// `det(I - ρ(w)(t))` at a single point.
pub fn burau_det_at<F: Field>(w: &BraidWord, t: &F) -> F {
    det_gauss(&burau_at(w, t).one_minus())
}

/// Coefficients `[c_0, …, c_D]` of `det(I - ρ(w))` modulo `P`, with
/// `D` the crossing count.
fn determinant_mod<const P: u64>(w: &BraidWord) -> Vec<Fp<P>> {
    let degree = w.crossing_count();
    let xs: Vec<Fp<P>> = (0..=degree as u64).map(Fp::new).collect();
    let ys: Vec<Fp<P>> = xs.iter().map(|x| burau_det_at(w, x)).collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through `(xs[k], ys[k])`, returned in the
/// monomial basis.
fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> Vec<F> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (dd[k].clone() - dd[k - 1].clone()) / (xs[k].clone() - xs[k - level].clone());
        }
    }
    // Horner on the Newton form.
    let mut coeffs = vec![F::zero(); n];
    for k in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![F::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] = next[d + 1].clone() + coeffs[d].clone();
            }
            next[d] = next[d].clone() - coeffs[d].clone() * xs[k].clone();
        }
        next[0] = next[0].clone() + dd[k].clone();
        coeffs = next;
    }
    coeffs
}

type Residues = fn(&BraidWord) -> Vec<(u64, u64)>;

fn residues<const P: u64>(w: &BraidWord) -> Vec<(u64, u64)> {
    determinant_mod::<P>(w).into_iter().map(|c| (c.value(), P)).collect()
}

const MODULI: [Residues; 6] = [
    residues::<PRIME_0>,
    residues::<PRIME_1>,
    residues::<PRIME_2>,
    residues::<PRIME_3>,
    residues::<PRIME_4>,
    residues::<PRIME_5>,
];

fn symmetric(x: &BigInt, modulus: &BigInt) -> BigInt {
    if x * 2 > *modulus {
        x - modulus
    } else {
        x.clone()
    }
}

/// `det(I - ρ(w))` as an exact integer polynomial in `t`.
///
/// Panics if six 61-bit primes do not suffice to pin the coefficients,
/// i.e. if some coefficient exceeds roughly 2^180 in magnitude.
pub fn burau_determinant(w: &BraidWord) -> LaurentPoly<BigInt> {
    if w.strands() == 1 {
        return LaurentPoly::one();
    }
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut lifted: Option<Vec<BigInt>> = None;
    for residue_fn in MODULI {
        let res = residue_fn(w);
        let p = BigInt::from(res[0].1);
        if acc.is_empty() {
            acc = vec![BigInt::zero(); res.len()];
        }
        let inv = mod_inverse(&(&modulus % &p), &p);
        for (a, &(r, _)) in acc.iter_mut().zip(&res) {
            let diff = (BigInt::from(r) - &*a % &p + &p) % &p;
            let k = (diff * &inv) % &p;
            *a = &*a + &modulus * k;
        }
        modulus *= &p;
        let next: Vec<BigInt> = acc.iter().map(|a| symmetric(a, &modulus)).collect();
        if lifted.as_ref() == Some(&next) {
            return LaurentPoly::from_coeffs(0, next);
        }
        lifted = Some(next);
    }
    panic!("Burau determinant coefficients exceed the multi-modular bound");
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    // p is prime, so a^(p-2) mod p
    a.modpow(&(p - 2), p)
}

/// `1 + t + … + t^{n-1}`.
pub fn cyclotomic_factor(n: usize) -> LaurentPoly<BigInt> {
    LaurentPoly::from_coeffs(0, vec![BigInt::one(); n])
}

/// The pieces of the Alexander computation, kept for auditing the exact
/// division.
#[derive(Debug, Clone)]
pub struct AlexanderDetail {
    pub determinant: LaurentPoly<BigInt>,
    pub quotient: LaurentPoly<BigInt>,
    pub remainder: LaurentPoly<BigInt>,
}

pub fn alexander_detail(w: &BraidWord) -> AlexanderDetail {
    let determinant = burau_determinant(w);
    let (quotient, remainder) = determinant.div_rem_monic(&cyclotomic_factor(w.strands()));
    AlexanderDetail { determinant, quotient, remainder }
}

/// Normalized single-variable Alexander polynomial of the closure of `w`.
/// Split closures give the zero polynomial; the unknot gives `1`.
pub fn alexander_exact(w: &BraidWord) -> LaurentPoly<BigInt> {
    let detail = alexander_detail(w);
    assert!(
        detail.remainder.is_zero(),
        "Burau determinant is not divisible by 1 + t + ... + t^(n-1)"
    );
    detail.quotient.normalized()
}

/// [`alexander_exact`] with machine-integer coefficients.
///
/// Panics if a coefficient does not fit in `i64`.
pub fn alexander(w: &BraidWord) -> LaurentPoly<i64> {
    let exact = alexander_exact(w);
    LaurentPoly::from_terms(exact.terms().map(|(e, c)| {
        (e, c.to_i64().expect("Alexander coefficient exceeds i64"))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::asc_block;
    use crate::scalar::Ring;

    type F = Fp<PRIME_0>;

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> LaurentPoly<i64> {
        LaurentPoly::from_coeffs(0, c.to_vec())
    }

    #[test]
    fn two_strand_burau_is_minus_t() {
        // 1×1 reduced Burau: σ_1 ↦ [-t], so σ_1^3 ↦ [-t^3] and
        // det(1 - (-t^3)) = 1 + t^3 = (1 + t)(1 - t + t^2).
        let m = burau_at(&w(2, &[1, 1, 1]), &F::from_i64(5));
        assert_eq!(*m.get(0, 0), F::from_i64(-125));
        assert_eq!(alexander(&w(2, &[1, 1, 1])), poly(&[1, -1, 1]));
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(alexander(&w(2, &[1])), poly(&[1]));
        assert_eq!(alexander(&w(3, &[1, 2])), poly(&[1]));
        assert_eq!(alexander(&BraidWord::empty(1)), poly(&[1]));
        assert!(alexander(&BraidWord::empty(2)).is_zero());
        assert!(alexander(&w(3, &[1, 1, 1])).is_zero()); // trefoil ⊔ unknot
    }

    #[test]
    fn known_values() {
        // Hopf link: 1 - t after normalization (up to ±t^k).
        assert_eq!(alexander(&w(2, &[1, 1])), poly(&[1, -1]));
        // T(2,5): 1 - t + t^2 - t^3 + t^4
        assert_eq!(alexander(&w(2, &[1; 5])), poly(&[1, -1, 1, -1, 1]));
        // T(3,4): 1 - t + t^3 - t^5 + t^6
        assert_eq!(alexander(&asc_block(3, 3, 4).unwrap()), poly(&[1, -1, 0, 1, 0, -1, 1]));
        // T(3,5): (t^15 - 1)(t - 1) / ((t^3 - 1)(t^5 - 1))
        assert_eq!(
            alexander(&asc_block(3, 3, 5).unwrap()),
            poly(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
        );
    }

    #[test]
    fn bareiss_matches_gauss() {
        let word = w(4, &[1, 2, 3, 2, 1, 3, 3, 2]);
        for t in [2i64, 3, -5] {
            let exact = det_bareiss(&burau_at(&word, &BigInt::from(t)).one_minus());
            let modp = burau_det_at(&word, &F::from_i64(t));
            assert_eq!(F::from_i64((&exact % BigInt::from(PRIME_0)).to_i64().unwrap()), modp);
            let poly = burau_determinant(&word);
            let via_poly = poly.eval_with(&BigInt::from(t), None, |c| c.clone());
            assert_eq!(via_poly, exact);
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let coeffs: Vec<F> = [3i64, -1, 4, 1, -5].iter().map(|&c| F::from_i64(c)).collect();
        let xs: Vec<F> = (0..5).map(F::from_i64).collect();
        let ys: Vec<F> = xs
            .iter()
            .map(|x| coeffs.iter().rev().fold(F::from_i64(0), |acc, c| acc * *x + *c))
            .collect();
        assert_eq!(interpolate(&xs, &ys), coeffs);
    }
}
