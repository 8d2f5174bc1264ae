//! Torus-knot Alexander polynomials, the surgery formula for the transformed
//! torsion, and the divisibility obstruction for reducible surgeries.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::abelian::FiniteAbelianGroup;
use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::poly::{RatPoly, Rational};
use crate::wtorsor::DualWeights;

/// An integer polynomial taken up to multiplication by `±t^k`, stored with a
/// nonzero constant term and a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPolynomial {
    poly: RatPoly,
}

impl AlexanderPolynomial {
    pub fn new(poly: RatPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::InvalidInput("Alexander polynomial cannot be zero".into()));
        }
        if !poly.is_integral() {
            return Err(Error::InvalidInput("Alexander polynomial must have integer coefficients".into()));
        }
        let shift = poly.coeffs().iter().take_while(|c| c.is_zero()).count();
        let mut coeffs = poly.coeffs()[shift..].to_vec();
        if coeffs.last().is_some_and(|c| c.is_negative()) {
            coeffs.iter_mut().for_each(|c| *c = -core::mem::take(c));
        }
        Ok(AlexanderPolynomial { poly: RatPoly::new(coeffs) })
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Result<Self> {
        Self::new(RatPoly::from_ints(coeffs.iter().copied()))
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        self.poly.coeffs().iter().map(Rational::to_integer).collect()
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

fn check_coprime(p: u64, q: u64, min: u64) -> Result<()> {
    if p < min || q < min {
        return Err(Error::InvalidInput(format!("torus parameters must be at least {min}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidInput(format!("gcd({p}, {q}) != 1")));
    }
    Ok(())
}

/// `Δ_{p,q} = (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_delta(p: u64, q: u64) -> Result<AlexanderPolynomial> {
    check_coprime(p, q, 1)?;
    let (p, q) = (p as usize, q as usize);
    let num = &RatPoly::x_pow_minus_one(p * q) * &RatPoly::x_pow_minus_one(1);
    let den = &RatPoly::x_pow_minus_one(p) * &RatPoly::x_pow_minus_one(q);
    let (quot, rem) = num.div_rem(&den)?;
    if !rem.is_zero() {
        return Err(Error::Inconsistent("torus knot quotient has a remainder".into()));
    }
    AlexanderPolynomial::new(quot)
}

/// True when `Δ_{p,q}` divides `candidate`.
pub fn divides_delta(candidate: &AlexanderPolynomial, p: u64, q: u64) -> Result<bool> {
    check_coprime(p, q, 2)?;
    let delta = torus_delta(p, q)?;
    candidate.poly.is_divisible_by(&delta.poly)
}

/// `T̂(ζ_n^k) = Δ(ζ_n^k) / ((1 - ζ_n^{-k})(1 - ζ_n^k))` for `k ≠ 0`, with the
/// `±ζ^j` ambiguity fixed to `+1`; `0` at the trivial character.
pub fn surgery_torsion_dual(delta: &AlexanderPolynomial, n: u64) -> Result<DualWeights> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("surgery order must be at least 2, got {n}")));
    }
    let field = CyclotomicField::new(n)?;
    let mut values = vec![field.zero()];
    for k in 1..n as i64 {
        let num = delta.poly.eval_at_root_in(&field, k);
        let a = field.inv_one_minus_root(-k)?;
        let b = field.inv_one_minus_root(k)?;
        values.push(&(&num * &a) * &b);
    }
    DualWeights::new(FiniteAbelianGroup::cyclic(n)?, n, values)
}

/// Indices `k ≠ 0` where the transformed surgery torsion vanishes.
pub fn surgery_zero_set(delta: &AlexanderPolynomial, n: u64) -> Result<Vec<u64>> {
    let d = surgery_torsion_dual(delta, n)?;
    Ok((1..n).filter(|&k| d.values()[k as usize].is_zero()).collect())
}

/// Necessary condition for a reducible surgery `Y_1 # Y_2` with
/// `|H_1(Y_1)| = p`, `|H_1(Y_2)| = q` and `n = pq`: `Δ` vanishes at every
/// `ζ_{pq}^k` with `p ∤ k` and `q ∤ k`.
///
/// Computed both by divisibility by `Δ_{p,q}` and by evaluating at each such
/// root; the two must agree. `false` means the surgery is obstructed.
pub fn reducible_surgery_obstruction(delta: &AlexanderPolynomial, p: u64, q: u64) -> Result<bool> {
    let by_division = divides_delta(delta, p, q)?;
    let n = p * q;
    let field = CyclotomicField::new(n)?;
    let by_roots = (1..n)
        .filter(|k| k % p != 0 && k % q != 0)
        .all(|k| delta.poly.eval_at_root_in(&field, k as i64).is_zero());
    if by_division != by_roots {
        return Err(Error::Inconsistent(format!(
            "divisibility ({by_division}) and root evaluation ({by_roots}) disagree for {delta}"
        )));
    }
    Ok(by_division)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alex(c: &[i64]) -> AlexanderPolynomial {
        AlexanderPolynomial::from_coeffs(c).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(alex(&[0, 0, -1, 1, -1]), alex(&[1, -1, 1]));
        assert_eq!(alex(&[0, 3]), alex(&[-3]));
        assert!(AlexanderPolynomial::from_coeffs(&[0, 0]).is_err());
        let half = RatPoly::new(vec![Rational::new(1.into(), 2.into())]);
        assert!(AlexanderPolynomial::new(half).is_err());
    }

    #[test]
    fn torus_examples() {
        assert_eq!(torus_delta(2, 3).unwrap(), alex(&[1, -1, 1]));
        assert_eq!(torus_delta(2, 5).unwrap(), alex(&[1, -1, 1, -1, 1]));
        assert_eq!(torus_delta(1, 7).unwrap(), alex(&[1]));
        assert!(torus_delta(4, 6).is_err());
        assert!(torus_delta(0, 3).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let cable = &torus_delta(2, 3).unwrap().poly * &RatPoly::from_ints([1, -3, 1]);
        let cable = AlexanderPolynomial::new(cable).unwrap();
        assert!(divides_delta(&cable, 2, 3).unwrap());
        assert!(!divides_delta(&alex(&[1, -1, 1]), 2, 5).unwrap());
        assert!(!divides_delta(&alex(&[1]), 2, 3).unwrap());
        assert!(divides_delta(&alex(&[1]), 1, 3).is_err());
        // ±t^k invariance
        let shifted = alex(&[0, 0, -1, 1, -1]);
        assert!(divides_delta(&shifted, 2, 3).unwrap());
    }

    #[test]
    fn surgery_examples() {
        let trefoil = alex(&[1, -1, 1]);
        assert_eq!(surgery_zero_set(&trefoil, 6).unwrap(), [1, 5]);
        assert!(surgery_zero_set(&alex(&[1]), 9).unwrap().is_empty());
        assert!(surgery_torsion_dual(&trefoil, 1).is_err());
        // zero set is exactly where the numerator vanishes
        let d = surgery_torsion_dual(&trefoil, 6).unwrap();
        for k in 1..6 {
            let direct = trefoil.poly().eval_at_root(6, k as i64).unwrap();
            assert_eq!(d.values()[k].is_zero(), direct.is_zero());
        }
    }

    #[test]
    fn obstruction_examples() {
        assert!(reducible_surgery_obstruction(&torus_delta(3, 5).unwrap(), 3, 5).unwrap());
        let cable = &torus_delta(2, 3).unwrap().poly * &RatPoly::from_ints([1, -3, 1]);
        assert!(reducible_surgery_obstruction(&AlexanderPolynomial::new(cable).unwrap(), 2, 3).unwrap());
        assert!(!reducible_surgery_obstruction(&alex(&[1, -1, 1]), 3, 5).unwrap());
    }
}
