//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element of conductor `N` is stored as an integer vector of length
//! `φ(N)` over one positive common denominator, in the power basis
//! `1, ζ_N, ..., ζ_N^{φ(N)-1}` of `Q[x] / Φ_N(x)`. The numerators and the
//! denominator are kept coprime, so the representation is unique and zero
//! testing is a coefficient check.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{common_denominator, cyclotomic_coeffs, lcm_u64, RatPoly, Rational};

#[derive(Debug)]
struct FieldData {
    conductor: u64,
    /// Monic `Φ_N`, constant first.
    modulus: Vec<i64>,
}

/// Handle to `Q(ζ_N)`; cheap to clone.
#[derive(Clone, Debug)]
pub struct CyclotomicField(Arc<FieldData>);

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor()
    }
}
impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidInput("cyclotomic conductor must be positive".into()));
        }
        Ok(CyclotomicField(Arc::new(FieldData {
            conductor,
            modulus: cyclotomic_coeffs(conductor),
        })))
    }

    pub fn conductor(&self) -> u64 {
        self.0.conductor
    }

    /// Degree over the rationals, `φ(N)`.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            num: vec![BigInt::zero(); self.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(&self) -> Cyclotomic {
        self.from_rational(&Rational::one())
    }

    pub fn from_integer(&self, n: i64) -> Cyclotomic {
        self.from_rational(&Rational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: &Rational) -> Cyclotomic {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = r.numer().clone();
        Cyclotomic::normalized(self.clone(), num, r.denom().clone())
    }

    /// `ζ_N^k`, with `k` taken modulo `N`.
    pub fn root(&self, k: i64) -> Cyclotomic {
        let n = self.conductor();
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Cyclotomic::normalized(self.clone(), self.reduce(v), BigInt::one())
    }

    /// `Σ_e sums[e] ζ_N^e`. The slice may have any length.
    pub fn from_power_sums(&self, sums: &[Rational]) -> Cyclotomic {
        let den = common_denominator(sums);
        let v = sums.iter().map(|s| s.numer() * (&den / s.denom())).collect();
        self.from_int_power_sums(v, den)
    }

    /// `(Σ_e sums[e] ζ_N^e) / den`.
    pub(crate) fn from_int_power_sums(&self, sums: Vec<BigInt>, den: BigInt) -> Cyclotomic {
        Cyclotomic::normalized(self.clone(), self.reduce(sums), den)
    }

    /// `1 / (1 - ζ_N^k)` for `k ≢ 0 (mod N)`.
    ///
    /// With `ζ = ζ_N^k` of multiplicative order `m > 1`,
    /// `(1 - ζ) Σ_{j<m} j ζ^j = -m`, which gives the inverse without a
    /// general field division.
    pub fn inv_one_minus_root(&self, k: i64) -> Result<Cyclotomic> {
        let n = self.conductor() as i64;
        let k = k.rem_euclid(n);
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let m = n / k.gcd(&n);
        let mut sums = vec![BigInt::zero(); n as usize];
        for j in 1..m {
            sums[((j * k) % n) as usize] -= BigInt::from(j);
        }
        Ok(self.from_int_power_sums(sums, BigInt::from(m)))
    }

    /// Reduce an integer polynomial modulo `Φ_N`, returning exactly
    /// `φ(N)` coefficients.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let modulus = &self.0.modulus;
        let deg = modulus.len() - 1;
        if v.len() > deg {
            for i in (deg..v.len()).rev() {
                if v[i].is_zero() {
                    continue;
                }
                let c = core::mem::take(&mut v[i]);
                let base = i - deg;
                for (j, &m) in modulus[..deg].iter().enumerate() {
                    if m != 0 {
                        v[base + j] -= &c * m;
                    }
                }
            }
        }
        v.resize(deg, BigInt::zero());
        v
    }

    fn modulus_poly(&self) -> RatPoly {
        RatPoly::from_ints(self.0.modulus.iter().copied())
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: CyclotomicField,
    num: Vec<BigInt>,
    den: BigInt,
}

/// `ζ_N^k` as an element of conductor `N`.
pub fn root_of_unity(n: u64, k: i64) -> Result<Cyclotomic> {
    Ok(CyclotomicField::new(n)?.root(k))
}

impl Cyclotomic {
    fn normalized(field: CyclotomicField, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else {
            let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
            if den.is_negative() {
                den = -den;
                for c in num.iter_mut() {
                    *c = -core::mem::take(c);
                }
            }
        }
        Cyclotomic { field, num, den }
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    /// Coordinates in the power basis `1, ζ_N, ..., ζ_N^{φ(N)-1}`.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num.iter().skip(1).all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The same number viewed in `Q(ζ_M)`; `M` must be a multiple of the
    /// conductor.
    pub fn embed(&self, m: u64) -> Result<Cyclotomic> {
        let n = self.conductor();
        if m == n {
            return Ok(self.clone());
        }
        if m == 0 || m % n != 0 {
            return Err(Error::Mismatch(alloc::format!(
                "cannot embed conductor {n} into conductor {m}"
            )));
        }
        let field = CyclotomicField::new(m)?;
        Ok(self.embed_into(&field))
    }

    pub(crate) fn embed_into(&self, field: &CyclotomicField) -> Cyclotomic {
        let n = self.conductor();
        let m = field.conductor();
        if m == n {
            return Cyclotomic { field: field.clone(), ..self.clone() };
        }
        debug_assert!(m % n == 0);
        let step = (m / n) as usize;
        let mut v = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Cyclotomic::normalized(field.clone(), field.reduce(v), self.den.clone())
    }

    /// Multiply by `ζ_N^e`.
    pub fn mul_root(&self, e: i64) -> Cyclotomic {
        let n = self.conductor() as i64;
        let e = e.rem_euclid(n) as usize;
        if e == 0 || self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); e + self.num.len()];
        for (i, c) in self.num.iter().enumerate() {
            v[i + e] = c.clone();
        }
        // multiplying by a unit keeps numerators and denominator coprime
        Cyclotomic {
            field: self.field.clone(),
            num: self.field.reduce(v),
            den: self.den.clone(),
        }
    }

    /// The Galois automorphism `ζ_N ↦ ζ_N^j`, `gcd(j, N) = 1`.
    pub fn galois(&self, j: i64) -> Result<Cyclotomic> {
        let n = self.conductor() as i64;
        let j = j.rem_euclid(n);
        if j.gcd(&n) != 1 {
            return Err(Error::InvalidInput(alloc::format!(
                "{j} is not a unit modulo {n}"
            )));
        }
        let mut v = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            v[((i as i64 * j) % n) as usize] = c.clone();
        }
        Ok(Cyclotomic::normalized(self.field.clone(), self.field.reduce(v), self.den.clone()))
    }

    /// Complex conjugate, `ζ_N ↦ ζ_N^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against
    /// `Φ_N` over the rationals.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus = self.field.modulus_poly();
        let a = RatPoly::new(self.coeffs());
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        // Φ_N is irreducible, so the gcd is a nonzero constant
        let g = r0.coeff(0);
        if r0.degree() != Some(0) {
            return Err(Error::Inconsistent("cyclotomic modulus is not irreducible".into()));
        }
        let inv = s0.scale(&g.recip());
        Ok(self.field.from_power_sums(inv.coeffs()))
    }

    pub fn checked_div(&self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Cyclotomic::normalized(self.field.clone(), num, &self.den * r.denom())
    }

    fn zip_with<F>(&self, rhs: &Cyclotomic, op: F) -> Cyclotomic
    where
        F: Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    {
        if self.conductor() == rhs.conductor() {
            op(self, rhs)
        } else {
            let field = CyclotomicField::new(lcm_u64(self.conductor(), rhs.conductor()))
                .expect("positive conductor");
            op(&self.embed_into(&field), &rhs.embed_into(&field))
        }
    }

    fn add_same(a: &Cyclotomic, b: &Cyclotomic, sign: i8) -> Cyclotomic {
        let g = a.den.gcd(&b.den);
        let fa = &b.den / &g;
        let fb = &a.den / &g;
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| if sign > 0 { x * &fa + y * &fb } else { x * &fa - y * &fb })
            .collect();
        Cyclotomic::normalized(a.field.clone(), num, &a.den * &fa)
    }

    fn mul_same(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let d = a.num.len();
        let mut v = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Cyclotomic::normalized(a.field.clone(), a.field.reduce(v), &a.den * &b.den)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            self.den == other.den && self.num == other.num
        } else {
            (self - other).is_zero()
        }
    }
}
impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, |a, b| Cyclotomic::add_same(a, b, 1))
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, |a, b| Cyclotomic::add_same(a, b, -1))
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.zip_with(rhs, Cyclotomic::mul_same)
    }
}

/// Panics on division by zero; see [`Cyclotomic::checked_div`].
impl Div for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// GAP-style notation: `E(N)` stands for `ζ_N`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let n = self.conductor();
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "E({n})")?,
                (1, false) => write!(f, "{abs}*E({n})")?,
                (_, true) => write!(f, "E({n})^{i}")?,
                (_, false) => write!(f, "{abs}*E({n})^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.conductor())
    }
}
