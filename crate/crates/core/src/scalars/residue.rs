use std::fmt;
use std::sync::Arc;

use super::{IrrPoly, Poly, Scalar, ScalarError};

/// An element of `K[x]/(f)`, stored as the remainder of degree `< deg f`.
#[derive(Debug, Clone)]
pub struct Residue {
    value: Poly,
    modulus: Arc<IrrPoly>,
}

impl PartialEq for Residue {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.modulus.poly() == other.modulus.poly()
    }
}

impl Eq for Residue {}

impl Residue {
    pub fn new(value: &Poly, modulus: Arc<IrrPoly>) -> Residue {
        let value = value
            .rem(modulus.poly())
            .expect("modulus has positive degree");
        Residue { value, modulus }
    }

    pub fn zero(modulus: Arc<IrrPoly>) -> Residue {
        Residue {
            value: Poly::zero(modulus.field()),
            modulus,
        }
    }

    pub fn one(modulus: Arc<IrrPoly>) -> Residue {
        Residue::new(&Poly::one(modulus.field()), modulus)
    }

    /// The class of `x`, i.e. the action of the cycle on the generator line.
    pub fn x(modulus: Arc<IrrPoly>) -> Residue {
        Residue::new(&Poly::x(modulus.field()), modulus)
    }

    pub fn scalar(c: Scalar, modulus: Arc<IrrPoly>) -> Residue {
        Residue::new(&Poly::constant(c), modulus)
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn modulus(&self) -> &Arc<IrrPoly> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    fn same_modulus(&self, other: &Residue) -> Result<(), ScalarError> {
        if Arc::ptr_eq(&self.modulus, &other.modulus)
            || self.modulus.poly() == other.modulus.poly()
        {
            Ok(())
        } else {
            Err(ScalarError::ModulusMismatch)
        }
    }

    pub fn try_add(&self, other: &Residue) -> Result<Residue, ScalarError> {
        self.same_modulus(other)?;
        Ok(Residue {
            value: &self.value + &other.value,
            modulus: self.modulus.clone(),
        })
    }

    pub fn try_mul(&self, other: &Residue) -> Result<Residue, ScalarError> {
        self.same_modulus(other)?;
        Ok(Residue::new(&(&self.value * &other.value), self.modulus.clone()))
    }

    pub fn add(&self, other: &Residue) -> Residue {
        self.try_add(other).expect("residues share a modulus")
    }

    pub fn sub(&self, other: &Residue) -> Residue {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        self.try_mul(other).expect("residues share a modulus")
    }

    pub fn neg(&self) -> Residue {
        Residue {
            value: -&self.value,
            modulus: self.modulus.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Residue {
        Residue {
            value: self.value.scale(c),
            modulus: self.modulus.clone(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Residue {
        let mut acc = Residue::one(self.modulus.clone());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Residue, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (g, s, _) = self.value.ext_gcd(self.modulus.poly());
        if !g.is_one() {
            // only reachable when irreducibility was asserted rather than proved
            return Err(ScalarError::NotInvertible(self.modulus.to_string()));
        }
        let inv = Residue::new(&s, self.modulus.clone());
        debug_assert!(self.mul(&inv).is_one());
        Ok(inv)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}
