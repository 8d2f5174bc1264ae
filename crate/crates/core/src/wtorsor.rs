//! Weighted groups, their Fourier transforms, and the equivalence relations
//! between them.
//!
//! A weighted torsor is represented with a chosen basepoint, i.e. as a
//! rational weight function on a group. Changing the basepoint translates the
//! weights; torsor-level equality is [`affine_isomorphic`].
//!
//! The transform is normalized as
//! `d̂(χ) = (1/|A|) Σ_a d(a) conj(χ(a))`, with inverse
//! `d(a) = Σ_χ d̂(χ) χ(a)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::{all_isomorphisms, Character, FiniteAbelianGroup, GroupElement, GroupIso};
use crate::abelian::{find_basis, Subgroup};
use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{common_denominator, lcm_u64, Rational};

/// A rational weight function on a finite abelian group, indexed by element
/// index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGroup {
    group: FiniteAbelianGroup,
    weights: Vec<Rational>,
}

/// Cyclotomic values on the character group, indexed by character index.
///
/// `group` carries the invariant factors of the character group (equal to
/// those of the original group). All values share the field of conductor
/// `conductor`, a multiple of the group exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWeights {
    group: FiniteAbelianGroup,
    field: CyclotomicField,
    values: Vec<Cyclotomic>,
}

impl WeightedGroup {
    pub fn new(group: FiniteAbelianGroup, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() as u64 != group.order() {
            return Err(Error::Mismatch(format!(
                "{} weights given for a group of order {}",
                weights.len(),
                group.order()
            )));
        }
        Ok(WeightedGroup { group, weights })
    }

    pub fn from_integers(group: FiniteAbelianGroup, weights: &[i64]) -> Result<Self> {
        Self::new(group, weights.iter().map(|&w| Rational::from_integer(w.into())).collect())
    }

    pub fn zero(group: FiniteAbelianGroup) -> Self {
        let weights = vec![Rational::zero(); group.order() as usize];
        WeightedGroup { group, weights }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, a: &GroupElement) -> Result<&Rational> {
        Ok(&self.weights[self.group.index_of(a)?])
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    pub fn is_reduced(&self) -> bool {
        self.total().is_zero()
    }

    /// The weighting `a ↦ d(a + shift)`, i.e. a change of basepoint.
    pub fn translate(&self, shift: &GroupElement) -> Result<Self> {
        let s = self.group.index_of(shift)?;
        let weights = (0..self.weights.len())
            .map(|a| self.weights[self.group.add_index(a, s)].clone())
            .collect();
        Ok(WeightedGroup { group: self.group.clone(), weights })
    }

    /// The weighting `a ↦ d(f(a) + shift)` on the domain of `f`, where `self`
    /// lives on the codomain.
    pub fn pullback(&self, f: &GroupIso, shift: &GroupElement) -> Result<Self> {
        if f.codomain() != &self.group {
            return Err(Error::Mismatch("isomorphism codomain differs from the weighted group".into()));
        }
        let s = self.group.index_of(shift)?;
        let weights = f
            .table()
            .into_iter()
            .map(|b| self.weights[self.group.add_index(b, s)].clone())
            .collect();
        Ok(WeightedGroup { group: f.domain().clone(), weights })
    }
}

impl DualWeights {
    /// Values must all have the given conductor's field or a subfield of it,
    /// and the conductor must be a multiple of the group exponent.
    pub fn new(group: FiniteAbelianGroup, conductor: u64, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() as u64 != group.order() {
            return Err(Error::Mismatch(format!(
                "{} values given for a group of order {}",
                values.len(),
                group.order()
            )));
        }
        if conductor == 0 || conductor % group.exponent() != 0 {
            return Err(Error::Mismatch(format!(
                "conductor {conductor} is not a multiple of the exponent {}",
                group.exponent()
            )));
        }
        let field = CyclotomicField::new(conductor)?;
        let values = values
            .iter()
            .map(|v| {
                if conductor % v.conductor() != 0 {
                    Err(Error::Mismatch(format!(
                        "value of conductor {} does not embed into conductor {conductor}",
                        v.conductor()
                    )))
                } else {
                    Ok(v.embed_into(&field))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DualWeights { group, field, values })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, chi: &Character) -> Result<&Cyclotomic> {
        Ok(&self.values[self.group.character_index(chi)?])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DualWeights {
            group: self.group.clone(),
            field: self.field.clone(),
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// The same values in a larger field.
    pub fn embed(&self, conductor: u64) -> Result<Self> {
        DualWeights::new(self.group.clone(), conductor, self.values.clone())
    }

    /// Restriction to a subgroup, carried on the subgroup's abstract
    /// invariant-factor group. Values stay in the ambient field.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Self> {
        if sub.parent() != &self.group {
            return Err(Error::Mismatch("subgroup of a different group".into()));
        }
        let (abstract_group, basis) = sub.structure();
        let values = (0..abstract_group.order() as usize)
            .map(|i| {
                let coords = abstract_group.decode(i);
                let b = coords.iter().zip(&basis).fold(0, |acc, (&c, &g)| {
                    self.group.add_index(acc, self.group.scale_index(c, g))
                });
                self.values[b].clone()
            })
            .collect();
        Ok(DualWeights { group: abstract_group, field: self.field.clone(), values })
    }

    /// Multiplication of a value at character index `b` by `ψ(b)`, where `ψ`
    /// is the character of the dual group with index `psi`.
    fn twist(&self, b: usize, psi: usize) -> Cyclotomic {
        let e = self.group.pairing_index(psi, b);
        let step = self.conductor() / self.group.exponent();
        self.values[b].mul_root((e * step) as i64)
    }
}

/// `d̂(χ) = (1/|A|) Σ_a d(a) conj(χ(a))`, exactly.
pub fn fourier_transform(w: &WeightedGroup) -> DualWeights {
    let group = &w.group;
    let n = group.exponent();
    let field = CyclotomicField::new(n).expect("exponent is positive");
    let den = common_denominator(&w.weights);
    let ints: Vec<BigInt> = w.weights.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    let total_den = &den * BigInt::from(group.order());
    let size = group.order() as usize;
    let values = (0..size)
        .map(|chi| {
            let mut sums = vec![BigInt::zero(); n as usize];
            for (a, wa) in ints.iter().enumerate() {
                if wa.is_zero() {
                    continue;
                }
                let e = group.pairing_index(chi, a);
                sums[((n - e) % n) as usize] += wa;
            }
            field.from_int_power_sums(sums, total_den.clone())
        })
        .collect();
    DualWeights { group: group.clone(), field, values }
}

/// `d(a) = Σ_χ d̂(χ) χ(a)`; fails unless every reconstructed value is
/// rational.
pub fn inverse_fourier(d: &DualWeights) -> Result<WeightedGroup> {
    let group = &d.group;
    let m = d.conductor();
    let step = m / group.exponent();
    let den = d.values.iter().fold(BigInt::one(), |acc, v| {
        num_integer::Integer::lcm(&acc, v.denominator())
    });
    // numerators over the common denominator
    let scaled: Vec<Vec<BigInt>> = d
        .values
        .iter()
        .map(|v| {
            let f = &den / v.denominator();
            v.numerators().iter().map(|c| c * &f).collect()
        })
        .collect();
    let size = group.order() as usize;
    let mut weights = Vec::with_capacity(size);
    for a in 0..size {
        let mut sums = vec![BigInt::zero(); m as usize];
        for (chi, coeffs) in scaled.iter().enumerate() {
            let shift = (group.pairing_index(chi, a) * step) as usize;
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    sums[(i + shift) % m as usize] += c;
                }
            }
        }
        let value = d.field.from_int_power_sums(sums, den.clone());
        weights.push(value.to_rational().ok_or(Error::NonRationalWeights { index: a })?);
    }
    Ok(WeightedGroup { group: group.clone(), weights })
}

/// The reduced part: subtract the average weight.
pub fn reduce(w: &WeightedGroup) -> WeightedGroup {
    let avg = w.total() / Rational::from_integer(BigInt::from(w.group.order()));
    WeightedGroup {
        group: w.group.clone(),
        weights: w.weights.iter().map(|x| x - &avg).collect(),
    }
}

/// Explicit isomorphism from an external direct sum `A_1 x ... x A_m` onto
/// its invariant-factor normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEmbedding {
    summands: Vec<FiniteAbelianGroup>,
    target: FiniteAbelianGroup,
    /// For each summand, target indices of its standard generators' images.
    generator_images: Vec<Vec<usize>>,
}

impl ProductEmbedding {
    pub fn new(summands: &[FiniteAbelianGroup]) -> Self {
        let orders: Vec<u64> = summands.iter().flat_map(|g| g.factors().iter().copied()).collect();
        let target = FiniteAbelianGroup::new(&orders).expect("factors are at least 2");
        let flat = if FiniteAbelianGroup::is_canonical(&orders) {
            (0..target.rank()).map(|i| target.encode(&target.generator(i).0)).collect()
        } else {
            let pool: Vec<usize> = (0..target.order() as usize).collect();
            find_basis(&target, &pool, &orders).expect("a product has a basis of its cyclic orders")
        };
        let mut generator_images = Vec::with_capacity(summands.len());
        let mut it = flat.into_iter();
        for g in summands {
            generator_images.push(it.by_ref().take(g.rank()).collect());
        }
        ProductEmbedding { summands: summands.to_vec(), target, generator_images }
    }

    pub fn summands(&self) -> &[FiniteAbelianGroup] {
        &self.summands
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    /// Image of a tuple `(a_1, ..., a_m)`.
    pub fn combine(&self, parts: &[GroupElement]) -> Result<GroupElement> {
        if parts.len() != self.summands.len() {
            return Err(Error::Mismatch("one element per summand is required".into()));
        }
        let idx = parts
            .iter()
            .zip(&self.summands)
            .map(|(a, g)| g.index_of(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.target.element(self.combine_indices(&idx)))
    }

    pub(crate) fn combine_indices(&self, parts: &[usize]) -> usize {
        let mut acc = 0;
        for ((g, gens), &a) in self.summands.iter().zip(&self.generator_images).zip(parts) {
            for (&c, &img) in g.decode(a).iter().zip(gens) {
                acc = self.target.add_index(acc, self.target.scale_index(c, img));
            }
        }
        acc
    }

    /// Image of summand `i`, as a subgroup of the target.
    pub fn axis(&self, i: usize) -> Subgroup {
        let gens: Vec<GroupElement> =
            self.generator_images[i].iter().map(|&g| self.target.element(g)).collect();
        Subgroup::generated_by(&self.target, &gens).expect("images lie in the target")
    }

    /// Characters of the target trivial on every summand other than `i`:
    /// the copy of the dual of summand `i` inside the dual of the target.
    pub fn dual_axis(&self, i: usize) -> Subgroup {
        let others: Vec<usize> = self
            .generator_images
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .flat_map(|(_, g)| g.iter().copied())
            .collect();
        let members = (0..self.target.order() as usize)
            .filter(|&chi| others.iter().all(|&g| self.target.pairing_index(chi, g) == 0))
            .collect();
        Subgroup::from_members(self.target.clone(), members)
    }

    /// The character `χ ∘ ι_i` of summand `i`.
    pub fn restrict_character(&self, i: usize, chi: &Character) -> Result<Character> {
        let c = self.target.character_index(chi)?;
        let n = self.target.exponent();
        let exps = self.summands[i]
            .factors()
            .iter()
            .zip(&self.generator_images[i])
            .map(|(&ni, &g)| self.target.pairing_index(c, g) * ni / n)
            .collect();
        Ok(Character(exps))
    }
}

/// `(d ⊕ d')(a, a') = d(a) + d'(a')` on the normalized product group.
pub fn direct_sum(w: &WeightedGroup, w2: &WeightedGroup) -> WeightedGroup {
    direct_sum_all(&[w.clone(), w2.clone()]).0
}

/// Iterated direct sum together with the coordinate correspondence.
pub fn direct_sum_all(parts: &[WeightedGroup]) -> (WeightedGroup, ProductEmbedding) {
    let groups: Vec<FiniteAbelianGroup> = parts.iter().map(|w| w.group.clone()).collect();
    let emb = ProductEmbedding::new(&groups);
    let mut weights = vec![Rational::zero(); emb.target.order() as usize];
    let mut idx = vec![0usize; parts.len()];
    loop {
        let total = idx
            .iter()
            .zip(parts)
            .fold(Rational::zero(), |acc, (&a, w)| acc + &w.weights[a]);
        weights[emb.combine_indices(&idx)] = total;
        let mut pos = parts.len();
        loop {
            if pos == 0 {
                let w = WeightedGroup { group: emb.target.clone(), weights };
                return (w, emb);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < parts[pos].weights.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// A character `ψ` with `d̂'(b) = d̂(b) ψ(b)` for all `b`, on the same group.
pub fn t_equivalent(d: &DualWeights, d2: &DualWeights) -> Result<Option<Character>> {
    if d.group != d2.group {
        return Err(Error::Mismatch("t-equivalence needs weights on the same group".into()));
    }
    let id = GroupIso::identity(&d.group);
    let (a, b) = common_field(d, d2)?;
    Ok(t_iso_with(&a, &b, &id).map(|psi| d.group.character(psi)))
}

/// A witness `(f, ψ)` with `d̂'(f(b)) = d̂(b) ψ(b)` for every `b`, or `None`.
///
/// The search runs over all isomorphisms and all characters; the first
/// witness in enumeration order is returned.
pub fn t_isomorphic(
    d: &DualWeights,
    d2: &DualWeights,
    limits: &Limits,
) -> Result<Option<(GroupIso, Character)>> {
    if d.group.factors() != d2.group.factors() {
        return Ok(None);
    }
    let isos = all_isomorphisms(&d.group, &d2.group, limits)?;
    let (a, b) = common_field(d, d2)?;
    for f in isos {
        if let Some(psi) = t_iso_with(&a, &b, &f) {
            return Ok(Some((f, a.group.character(psi))));
        }
    }
    Ok(None)
}

fn common_field(d: &DualWeights, d2: &DualWeights) -> Result<(DualWeights, DualWeights)> {
    let m = lcm_u64(d.conductor(), d2.conductor());
    Ok((d.embed(m)?, d2.embed(m)?))
}

/// Both sides must already share one field.
fn t_iso_with(d: &DualWeights, d2: &DualWeights, f: &GroupIso) -> Option<usize> {
    let table = f.table();
    if table.iter().enumerate().any(|(b, &fb)| d.values[b].is_zero() != d2.values[fb].is_zero()) {
        return None;
    }
    let size = d.group.order() as usize;
    'psi: for psi in 0..size {
        for (b, &fb) in table.iter().enumerate() {
            if d.values[b].is_zero() {
                continue;
            }
            if d2.values[fb] != d.twist(b, psi) {
                continue 'psi;
            }
        }
        return Some(psi);
    }
    None
}

/// A witness `(f, a')` with `d'(f(a) + a') = d(a)` for every `a`, or `None`.
pub fn affine_isomorphic(
    w: &WeightedGroup,
    w2: &WeightedGroup,
    limits: &Limits,
) -> Result<Option<(GroupIso, GroupElement)>> {
    if w.group.factors() != w2.group.factors() {
        return Ok(None);
    }
    let mut sorted1 = w.weights.clone();
    let mut sorted2 = w2.weights.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return Ok(None);
    }
    let isos = all_isomorphisms(&w.group, &w2.group, limits)?;
    let g2 = &w2.group;
    for f in isos {
        let table = f.table();
        for shift in 0..g2.order() as usize {
            if table
                .iter()
                .enumerate()
                .all(|(a, &fa)| w2.weights[g2.add_index(fa, shift)] == w.weights[a])
            {
                return Ok(Some((f, g2.element(shift))));
            }
        }
    }
    Ok(None)
}
