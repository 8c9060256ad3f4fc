//! Coefficient rings used by the invariant kernels.
//!
//! Polynomials, matrices and determinants are written once against [`Ring`]
//! (and [`Field`] where inversion is needed) so the same code runs over
//! machine integers, arbitrary precision integers and prime fields.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of a machine integer under the canonical map `Z -> R`.
    fn from_i64(v: i64) -> Self;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Ring for num_bigint::BigInt {
    fn from_i64(v: i64) -> Self {
        num_bigint::BigInt::from(v)
    }
}

/// Residue class modulo the prime `P` (`P < 2^63`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P - 2)
    }

    /// Symmetric representative in `(-P/2, P/2]`.
    pub fn signed(self) -> i128 {
        if self.0 > P / 2 {
            self.0 as i128 - P as i128
        } else {
            self.0 as i128
        }
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64);
        Fp(r as u64)
    }
}

impl<const P: u64> Field for Fp<P> {}

/// Primes just below 2^61 used for multi-modular reconstruction.
pub const PRIME_0: u64 = 2_305_843_009_213_693_951; // 2^61 - 1
pub const PRIME_1: u64 = 2_305_843_009_213_693_921;
pub const PRIME_2: u64 = 2_305_843_009_213_693_907;
pub const PRIME_3: u64 = 2_305_843_009_213_693_723;
pub const PRIME_4: u64 = 2_305_843_009_213_693_693;
pub const PRIME_5: u64 = 2_305_843_009_213_693_669;
