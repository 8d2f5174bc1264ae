//! Lens-space invariants: torsion and reduced d-invariant weightings on
//! `Z/p`, the auxiliary integer weightings `f_{p,q}`, and the classification
//! of lens spaces up to oriented diffeomorphism.
//!
//! The `k`-th character of `Z/p` is identified with `ζ_p^k`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::abelian::FiniteAbelianGroup;
use crate::cyclotomic::CyclotomicField;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::Rational;
use crate::wtorsor::{affine_isomorphic, inverse_fourier, DualWeights, WeightedGroup};

/// Ratio between the reduced d-invariant and the torsion, `d^r = c · T`.
/// Applied to every lens space alike.
pub const REDUCED_D_PER_TORSION: i64 = 2;

/// `L(p, q)` with `p >= 2`, `1 <= q < p`, `gcd(p, q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    /// `q` is reduced modulo `p`.
    pub fn new(p: u64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidInput(format!("lens space needs p >= 2, got {p}")));
        }
        let q = q.rem_euclid(p as i64) as u64;
        if q.gcd(&p) != 1 {
            return Err(Error::InvalidInput(format!("gcd({p}, {q}) != 1")));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// All `L(p, q)` with `1 <= q < p`, in increasing `q`.
    pub fn family(p: u64) -> Result<Vec<LensSpace>> {
        if p < 2 {
            return Err(Error::InvalidInput(format!("lens space needs p >= 2, got {p}")));
        }
        Ok((1..p).filter(|q| q.gcd(&p) == 1).map(|q| LensSpace { p, q }).collect())
    }

    fn group(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(self.p).expect("p >= 2")
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// `T̂(ζ_p^k) = 1 / (p (1 - ζ_p^{-k}) (1 - ζ_p^{-kq}))` for `k ≠ 0`, and `0`
/// at the trivial character.
pub fn lens_torsion_dual(l: &LensSpace) -> DualWeights {
    let p = l.p as i64;
    let field = CyclotomicField::new(l.p).expect("p >= 2");
    let inv_p = Rational::new(1.into(), p.into());
    let mut values = vec![field.zero()];
    for k in 1..p {
        let a = field.inv_one_minus_root(-k).expect("k is a nonzero residue");
        let b = field.inv_one_minus_root(-k * l.q as i64).expect("q is a unit");
        values.push((&a * &b).scale(&inv_p));
    }
    DualWeights::new(l.group(), l.p, values).expect("one value per character")
}

/// Reduced d-invariants as a weighting on `Z/p`: the inverse transform of
/// [`REDUCED_D_PER_TORSION`] times [`lens_torsion_dual`].
pub fn lens_reduced_d(l: &LensSpace) -> Result<WeightedGroup> {
    let scaled = lens_torsion_dual(l).scale(&Rational::from_integer(REDUCED_D_PER_TORSION.into()));
    inverse_fourier(&scaled).map_err(|e| {
        Error::Inconsistent(format!("lens weighting of {l} is not rational: {e}"))
    })
}

/// Integer weighting with transform `(1 - ζ)(1 - ζ^q)`:
/// `+1` at `0` and `q + 1`, `-1` at `1` and `q`, accumulated.
pub fn lens_f(l: &LensSpace) -> WeightedGroup {
    let p = l.p as usize;
    let q = l.q as usize;
    let mut w = vec![0i64; p];
    w[0] += 1;
    w[1 % p] -= 1;
    w[q % p] -= 1;
    w[(q + 1) % p] += 1;
    WeightedGroup::from_integers(l.group(), &w).expect("p weights")
}

/// `L(p,q) ≅ L(r,s)` preserving orientation iff `p = r` and
/// `s ≡ q^{±1} (mod p)`.
pub fn oriented_diffeomorphic(a: &LensSpace, b: &LensSpace) -> bool {
    a.p == b.p && (a.q == b.q || (a.q * b.q) % a.p == 1)
}

/// All lens spaces with `p <= p_max`, partitioned into oriented
/// diffeomorphism classes. The partition is computed from the closed-form
/// criterion and independently by affine-equivalence search on `f_{p,q}`;
/// any disagreement is reported as an internal error.
pub fn classify_lens_family(p_max: u64, limits: &Limits) -> Result<Vec<Vec<LensSpace>>> {
    limits.check("lens classification", p_max)?;
    let mut out = Vec::new();
    for p in 2..=p_max {
        let family = LensSpace::family(p)?;
        let by_criterion = partition(&family, |a, b| Ok(oriented_diffeomorphic(a, b)))?;
        let by_search = partition(&family, |a, b| {
            Ok(affine_isomorphic(&lens_f(a), &lens_f(b), limits)?.is_some())
        })?;
        if by_criterion != by_search {
            return Err(Error::Inconsistent(format!(
                "lens classification for p = {p} disagrees: {by_criterion:?} vs {by_search:?}"
            )));
        }
        out.extend(by_criterion);
    }
    Ok(out)
}

/// Greedy partition against class representatives; classes and members keep
/// input order.
fn partition<F>(items: &[LensSpace], mut same: F) -> Result<Vec<Vec<LensSpace>>>
where
    F: FnMut(&LensSpace, &LensSpace) -> Result<bool>,
{
    let mut classes: Vec<Vec<LensSpace>> = Vec::new();
    'item: for l in items {
        for class in classes.iter_mut() {
            if same(&class[0], l)? {
                class.push(*l);
                continue 'item;
            }
        }
        classes.push(vec![*l]);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msinv::has_nonvanishing;
    use crate::wtorsor::fourier_transform;

    fn l(p: u64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn construction() {
        assert_eq!(l(5, 7), l(5, 2));
        assert_eq!(l(5, -1).q(), 4);
        assert!(LensSpace::new(6, 2).is_err());
        assert!(LensSpace::new(1, 0).is_err());
        assert!(LensSpace::new(4, 0).is_err());
        assert_eq!(LensSpace::family(7).unwrap().len(), 6);
        assert_eq!(alloc::format!("{}", l(7, 3)), "L(7,3)");
    }

    #[test]
    fn torsion_examples() {
        let d = lens_torsion_dual(&l(2, 1));
        assert_eq!(d.values()[1].to_rational(), Some(q(1, 8)));
        assert!(d.values()[0].is_zero());

        let d = lens_torsion_dual(&l(3, 1));
        let f3 = CyclotomicField::new(3).unwrap();
        let one_minus = &f3.one() - &f3.root(2);
        let expected = (&(&one_minus * &one_minus) * &f3.from_integer(3)).inv().unwrap();
        assert_eq!(d.values()[1], expected);
    }

    #[test]
    fn torsion_matches_generic_division() {
        for lens in LensSpace::family(9).unwrap() {
            let d = lens_torsion_dual(&lens);
            let field = CyclotomicField::new(9).unwrap();
            for k in 1..9i64 {
                let den = &(&(&field.one() - &field.root(-k)) * &(&field.one() - &field.root(-k * lens.q() as i64)))
                    * &field.from_integer(9);
                assert_eq!(d.values()[k as usize], den.inv().unwrap());
            }
        }
    }

    #[test]
    fn reduced_d_examples() {
        assert_eq!(lens_reduced_d(&l(2, 1)).unwrap().weights(), [q(1, 4), q(-1, 4)]);
        for p in 2..=20 {
            for lens in LensSpace::family(p).unwrap() {
                let w = lens_reduced_d(&lens).unwrap();
                assert!(w.is_reduced(), "{lens}");
                let expected = lens_torsion_dual(&lens).scale(&q(REDUCED_D_PER_TORSION, 1));
                assert_eq!(fourier_transform(&w), expected, "{lens}");
            }
        }
    }

    #[test]
    fn f_examples() {
        let ints = |w: &WeightedGroup| -> Vec<Rational> { w.weights().to_vec() };
        let r = |v: &[i64]| -> Vec<Rational> { v.iter().map(|&x| q(x, 1)).collect() };
        assert_eq!(ints(&lens_f(&l(7, 1))), r(&[1, -2, 1, 0, 0, 0, 0]));
        assert_eq!(ints(&lens_f(&l(7, 6))), r(&[2, -1, 0, 0, 0, 0, -1]));
        assert_eq!(ints(&lens_f(&l(5, 2))), r(&[1, -1, -1, 1, 0]));
    }

    #[test]
    fn f_transform_is_product_of_two_factors() {
        for p in 2..=20u64 {
            let field = CyclotomicField::new(p).unwrap();
            for lens in LensSpace::family(p).unwrap() {
                let d = fourier_transform(&lens_f(&lens));
                for k in 0..p as i64 {
                    // conj-normalized transform: (1 - ζ^k)(1 - ζ^{kq}) up to 1/p
                    let expected = (&(&field.one() - &field.root(-k))
                        * &(&field.one() - &field.root(-k * lens.q() as i64)))
                        .scale(&q(1, p as i64));
                    assert_eq!(d.values()[k as usize], expected, "{lens} k={k}");
                }
            }
        }
    }

    #[test]
    fn diffeomorphism_criterion() {
        assert!(oriented_diffeomorphic(&l(5, 2), &l(5, 3)));
        assert!(!oriented_diffeomorphic(&l(7, 1), &l(7, 2)));
        assert!(oriented_diffeomorphic(&l(7, 3), &l(7, 3)));
        assert!(!oriented_diffeomorphic(&l(5, 1), &l(7, 1)));
    }

    #[test]
    fn small_classifications() {
        let lim = Limits::default();
        let classes = classify_lens_family(7, &lim).unwrap();
        let of_p = |p: u64| -> Vec<Vec<(u64, u64)>> {
            classes
                .iter()
                .filter(|c| c[0].p() == p)
                .map(|c| c.iter().map(|x| (x.p(), x.q())).collect())
                .collect()
        };
        assert_eq!(of_p(2), [vec![(2, 1)]]);
        assert_eq!(of_p(5), [vec![(5, 1)], vec![(5, 2), (5, 3)], vec![(5, 4)]]);
        assert_eq!(
            of_p(7),
            [vec![(7, 1)], vec![(7, 2), (7, 4)], vec![(7, 3), (7, 5)], vec![(7, 6)]]
        );
    }

    #[test]
    fn torsion_is_nonvanishing() {
        for p in 2..=15 {
            for lens in LensSpace::family(p).unwrap() {
                assert!(has_nonvanishing(&lens_torsion_dual(&lens)));
            }
        }
    }
}
