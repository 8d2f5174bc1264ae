//! The nonvanishing property, maximal special subgroups, and the multiset
//! invariant built from them.
//!
//! A special subgroup of a weighted dual group is a nontrivial subgroup on
//! whose nontrivial elements the weights never vanish. The multiset of
//! maximal special subgroups, each carrying its restricted weights and taken
//! up to t-isomorphism, is additive under direct sums of reduced weightings.
//! Counting how often a fixed class occurs therefore gives a monoid
//! homomorphism to the natural numbers.

use alloc::vec::Vec;

use crate::abelian::{all_subgroups, Subgroup};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::wtorsor::{fourier_transform, reduce, t_isomorphic, DualWeights, WeightedGroup};

/// True when every nontrivial element has a nonzero value. Vacuous on the
/// trivial group.
pub fn has_nonvanishing(d: &DualWeights) -> bool {
    d.values().iter().skip(1).all(|v| !v.is_zero())
}

fn is_special(d: &DualWeights, sub: &Subgroup) -> bool {
    !sub.is_trivial() && sub.indices().iter().skip(1).all(|&i| !d.values()[i].is_zero())
}

/// Inclusion-maximal special subgroups, ordered by cardinality and then by
/// member indices.
pub fn maximal_special_subgroups(d: &DualWeights, limits: &Limits) -> Result<Vec<Subgroup>> {
    limits.check("special subgroup search", d.group().order())?;
    if has_nonvanishing(d) {
        return Ok(if d.group().is_trivial() {
            Vec::new()
        } else {
            alloc::vec![Subgroup::full(d.group())]
        });
    }
    let special: Vec<Subgroup> = all_subgroups(d.group(), limits)?
        .into_iter()
        .filter(|s| is_special(d, s))
        .collect();
    Ok(special
        .iter()
        .filter(|s| {
            !special
                .iter()
                .any(|t| t.order() > s.order() && s.is_subset_of(t))
        })
        .cloned()
        .collect())
}

/// One maximal special subgroup with its restricted weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSClass {
    subgroup: Subgroup,
    weights: DualWeights,
}

impl MSClass {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Restricted weights on the subgroup's abstract invariant-factor group.
    pub fn weights(&self) -> &DualWeights {
        &self.weights
    }
}

/// Classes of maximal special subgroups up to t-isomorphism, with
/// multiplicities. No two listed classes are t-isomorphic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MSMultiset {
    classes: Vec<(MSClass, usize)>,
}

impl MSMultiset {
    pub fn classes(&self) -> &[(MSClass, usize)] {
        &self.classes
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Total number of maximal special subgroups, counted with multiplicity.
    pub fn total(&self) -> usize {
        self.classes.iter().map(|(_, m)| m).sum()
    }

    /// Multiplicity of the class of `d`, or 0.
    pub fn multiplicity_of(&self, d: &DualWeights, limits: &Limits) -> Result<usize> {
        for (class, m) in &self.classes {
            if class.weights.group().factors() == d.group().factors()
                && t_isomorphic(&class.weights, d, limits)?.is_some()
            {
                return Ok(*m);
            }
        }
        Ok(0)
    }

    /// Multiset equality, matching classes by t-isomorphism.
    pub fn equivalent(&self, other: &MSMultiset, limits: &Limits) -> Result<bool> {
        if self.classes.len() != other.classes.len() {
            return Ok(false);
        }
        for (class, m) in &self.classes {
            if other.multiplicity_of(&class.weights, limits)? != *m {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &MSMultiset, limits: &Limits) -> Result<MSMultiset> {
        let mut out = self.clone();
        for (class, m) in &other.classes {
            out.insert(class.clone(), *m, limits)?;
        }
        Ok(out)
    }

    fn insert(&mut self, class: MSClass, m: usize, limits: &Limits) -> Result<()> {
        for (existing, count) in self.classes.iter_mut() {
            if existing.weights.group().factors() == class.weights.group().factors()
                && t_isomorphic(&existing.weights, &class.weights, limits)?.is_some()
            {
                *count += m;
                return Ok(());
            }
        }
        self.classes.push((class, m));
        Ok(())
    }
}

/// The multiset of a dual weighting, as given (no reduction).
pub fn ms_of_dual(d: &DualWeights, limits: &Limits) -> Result<MSMultiset> {
    let mut ms = MSMultiset::default();
    for sub in maximal_special_subgroups(d, limits)? {
        let weights = d.restrict(&sub)?;
        ms.insert(MSClass { subgroup: sub, weights }, 1, limits)?;
    }
    Ok(ms)
}

/// `MS` of a weighting: reduce, transform, then collect maximal special
/// subgroups of the dual into t-isomorphism classes.
pub fn ms_multiset(w: &WeightedGroup, limits: &Limits) -> Result<MSMultiset> {
    ms_of_dual(&fourier_transform(&reduce(w)), limits)
}

fn check_reference(reference: &WeightedGroup) -> Result<DualWeights> {
    if !reference.is_reduced() {
        return Err(Error::InvalidReference("reference weighting is not reduced".into()));
    }
    let d = fourier_transform(reference);
    if !has_nonvanishing(&d) {
        return Err(Error::InvalidReference(
            "reference transform vanishes at a nontrivial character".into(),
        ));
    }
    Ok(d)
}

/// How often the class of `reference` occurs in `MS` of `target`.
pub fn c_count(reference: &WeightedGroup, target: &WeightedGroup, limits: &Limits) -> Result<usize> {
    let d = check_reference(reference)?;
    ms_multiset(target, limits)?.multiplicity_of(&d, limits)
}

/// `c_count` of each candidate against `w`, in candidate order.
pub fn recover_decomposition(
    w: &WeightedGroup,
    candidates: &[WeightedGroup],
    limits: &Limits,
) -> Result<Vec<usize>> {
    let duals = candidates.iter().map(check_reference).collect::<Result<Vec<_>>>()?;
    let ms = ms_multiset(w, limits)?;
    duals.iter().map(|d| ms.multiplicity_of(d, limits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FiniteAbelianGroup;
    use crate::cyclotomic::CyclotomicField;
    use crate::poly::Rational;
    use crate::wtorsor::direct_sum;
    use alloc::vec;

    fn grp(orders: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(orders).unwrap()
    }

    #[test]
    fn trivial_weighting_has_empty_multiset() {
        let lim = Limits::default();
        let w = WeightedGroup::zero(FiniteAbelianGroup::trivial());
        assert!(ms_multiset(&w, &lim).unwrap().is_empty());
    }

    #[test]
    fn zero_dual_has_no_special_subgroups() {
        let f = CyclotomicField::new(5).unwrap();
        let d = DualWeights::new(grp(&[5]), 5, vec![f.zero(); 5]).unwrap();
        assert!(!has_nonvanishing(&d));
        assert!(maximal_special_subgroups(&d, &Limits::default()).unwrap().is_empty());
        let f2 = CyclotomicField::new(2).unwrap();
        let d2 = DualWeights::new(grp(&[2]), 2, vec![f2.zero(); 2]).unwrap();
        assert!(!has_nonvanishing(&d2));
    }

    #[test]
    fn special_subgroups_of_a_sum_lie_on_axes() {
        // reduced delta-like weights with nonvanishing transforms
        let a = reduce(&WeightedGroup::from_integers(grp(&[2]), &[1, 0]).unwrap());
        let b = reduce(&WeightedGroup::from_integers(grp(&[3]), &[1, 0, 0]).unwrap());
        assert!(has_nonvanishing(&fourier_transform(&a)));
        assert!(has_nonvanishing(&fourier_transform(&b)));
        let s = direct_sum(&a, &b);
        let d = fourier_transform(&s);
        assert!(!has_nonvanishing(&d));
        let subs = maximal_special_subgroups(&d, &Limits::default()).unwrap();
        let orders: Vec<u64> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, [2, 3]);
    }

    #[test]
    fn references_are_validated() {
        let lim = Limits::default();
        let unreduced = WeightedGroup::from_integers(grp(&[3]), &[1, 0, 0]).unwrap();
        let err = c_count(&unreduced, &unreduced, &lim).unwrap_err();
        assert_eq!(err.kind(), crate::ErrorKind::InvalidReference);

        // reduced, but the transform vanishes at the order-2 character
        let vanishing = WeightedGroup::new(
            grp(&[4]),
            [1, -1, 1, -1].iter().map(|&x| Rational::from_integer(x.into())).collect(),
        )
        .unwrap();
        let vanishing = reduce(&vanishing);
        assert!(c_count(&vanishing, &unreduced, &lim).is_err());
    }
}
