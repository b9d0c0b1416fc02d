//! Prime-field scalars.

use std::fmt;

use crate::error::{Error, Result};

/// Trial-division primality check; moduli here are desk-scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::precondition(format!("{p} is not prime")))
    }
}

/// An element of the prime field `F_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FqScalar {
    residue: u64,
    modulus: u64,
}

impl FqScalar {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        check_prime(modulus)?;
        let m = modulus as i64;
        let residue = value.rem_euclid(m) as u64;
        Ok(FqScalar { residue, modulus })
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn check_same(self, other: FqScalar) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "mixed moduli {} and {}",
                self.modulus, other.modulus
            )))
        }
    }

    pub fn add(self, other: FqScalar) -> Result<FqScalar> {
        self.check_same(other)?;
        Ok(FqScalar {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn sub(self, other: FqScalar) -> Result<FqScalar> {
        self.check_same(other)?;
        Ok(FqScalar {
            residue: (self.residue + self.modulus - other.residue) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn mul(self, other: FqScalar) -> Result<FqScalar> {
        self.check_same(other)?;
        Ok(FqScalar {
            residue: mul_mod(self.residue, other.residue, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn inv(self) -> Result<FqScalar> {
        if self.is_zero() {
            return Err(Error::precondition("zero has no inverse".to_string()));
        }
        Ok(FqScalar {
            residue: inv_mod(self.residue, self.modulus),
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for FqScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for FqScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse by Fermat: `a^(p-2) mod p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}
