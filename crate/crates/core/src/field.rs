//! Arithmetic in the prime field F_p with word-sized moduli.
//!
//! Elements are plain `u64` residues in `[0, p)`; the `Fp` handle carries the
//! modulus and provides all operations. Products go through `u128`, so any
//! prime below 2^63 is safe.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too small (need p > 2)")]
    TooSmall(u64),
}

/// A prime field F_p. Cheap to copy; all matrix and algebra code takes it by value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 1_000_000_007;

impl Fp {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p <= 2 {
            return Err(FieldError::TooSmall(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Reduce a signed integer coefficient into the field.
    pub fn random_element<R: rand::Rng>(self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.modulus())
    }

    pub fn from_i64(self, x: i64) -> u64 {
        let m = self.p as i64;
        let r = ((x % m) + m) % m;
        r as u64
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_after(n: u64) -> u64 {
    let mut c = n + 1;
    if c <= 2 {
        return 2;
    }
    if c % 2 == 0 {
        c += 1;
    }
    while !is_prime(c) {
        c += 2;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let f = Fp::new(DEFAULT_PRIME).unwrap();
        assert_eq!(f.add(DEFAULT_PRIME - 1, 1), 0);
        assert_eq!(f.sub(0, 1), DEFAULT_PRIME - 1);
        let a = 123_456_789u64;
        assert_eq!(f.mul(a, f.inv(a)), 1);
        assert_eq!(f.from_i64(-1), DEFAULT_PRIME - 1);
    }

    #[test]
    fn rejects_composite() {
        assert!(Fp::new(1_000_000_006).is_err());
        assert!(Fp::new(4).is_err());
    }

    #[test]
    fn prime_stepping() {
        assert_eq!(next_prime_after(1_000_000_007), 1_000_000_009);
        assert!(is_prime(101));
        assert!(!is_prime(1));
    }
}
