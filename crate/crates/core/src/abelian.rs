//! Finite abelian groups in invariant-factor form, with their elements,
//! characters, subgroups and isomorphisms.
//!
//! Elements are addressed by their index in lexicographic coordinate order
//! (last coordinate varying fastest), so index 0 is always the identity.
//! Characters use the same coordinates: the character with exponents
//! `(c_1, ..., c_k)` sends `(a_1, ..., a_k)` to `ζ_N^{Σ c_i a_i N / n_i}`
//! where `N` is the exponent of the group.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

/// Coordinates of a group element, `0 <= a_i < n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u64>);

/// Exponent vector of a character, `0 <= c_i < n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(pub Vec<u64>);

impl FiniteAbelianGroup {
    /// Builds the group `Z/m_1 x ... x Z/m_r` from any list of cyclic orders,
    /// normalized to invariant factors `n_1 | n_2 | ... | n_k`.
    pub fn new(orders: &[u64]) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidInput(format!("cyclic order {bad} must be at least 2")));
        }
        Ok(FiniteAbelianGroup { factors: invariant_factors(orders) })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 1 {
            Ok(Self::trivial())
        } else {
            Self::new(&[n])
        }
    }

    /// True when `orders` is already a valid invariant-factor list.
    pub fn is_canonical(orders: &[u64]) -> bool {
        orders.iter().all(|&n| n >= 2) && orders.windows(2).all(|w| w[1] % w[0] == 0)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order() as usize).map(|i| self.element(i)).collect()
    }

    pub fn element(&self, index: usize) -> GroupElement {
        GroupElement(self.decode(index))
    }

    pub fn index_of(&self, a: &GroupElement) -> Result<usize> {
        self.check_coords(&a.0, "element")?;
        Ok(self.encode(&a.0))
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        GroupElement(c)
    }

    pub fn characters(&self) -> Vec<Character> {
        (0..self.order() as usize).map(|i| self.character(i)).collect()
    }

    pub fn character(&self, index: usize) -> Character {
        Character(self.decode(index))
    }

    pub fn character_index(&self, chi: &Character) -> Result<usize> {
        self.check_coords(&chi.0, "character")?;
        Ok(self.encode(&chi.0))
    }

    /// `χ(a) = ζ_N^e`; returns `e` in `[0, N)`.
    pub fn pairing(&self, chi: &Character, a: &GroupElement) -> Result<u64> {
        self.check_coords(&chi.0, "character")?;
        self.check_coords(&a.0, "element")?;
        Ok(self.pairing_coords(&chi.0, &a.0))
    }

    pub(crate) fn pairing_index(&self, chi: usize, a: usize) -> u64 {
        self.pairing_coords(&self.decode(chi), &self.decode(a))
    }

    fn pairing_coords(&self, c: &[u64], a: &[u64]) -> u64 {
        let n = self.exponent();
        self.factors
            .iter()
            .zip(c.iter().zip(a))
            .fold(0, |acc, (&ni, (&ci, &ai))| (acc + (ci * ai % ni) * (n / ni)) % n)
    }

    /// `χ(a)` as an exact root of unity of conductor `N`.
    pub fn evaluate(&self, chi: &Character, a: &GroupElement) -> Result<Cyclotomic> {
        let e = self.pairing(chi, a)?;
        Ok(CyclotomicField::new(self.exponent())?.root(e as i64))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_coords(&a.0, "element")?;
        self.check_coords(&b.0, "element")?;
        Ok(GroupElement(
            self.factors.iter().zip(a.0.iter().zip(&b.0)).map(|(n, (x, y))| (x + y) % n).collect(),
        ))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_coords(&a.0, "element")?;
        Ok(GroupElement(self.factors.iter().zip(&a.0).map(|(n, x)| (n - x) % n).collect()))
    }

    pub(crate) fn add_index(&self, a: usize, b: usize) -> usize {
        let mut idx = 0usize;
        let (mut a, mut b) = (a, b);
        let mut stride = 1usize;
        for &n in self.factors.iter().rev() {
            let n = n as usize;
            let s = (a % n + b % n) % n;
            idx += s * stride;
            stride *= n;
            a /= n;
            b /= n;
        }
        idx
    }

    /// `k · a`.
    pub(crate) fn scale_index(&self, k: u64, a: usize) -> usize {
        let mut idx = 0usize;
        let mut a = a;
        let mut stride = 1usize;
        for &n in self.factors.iter().rev() {
            let nu = n as usize;
            idx += (((a % nu) as u64 * (k % n)) % n) as usize * stride;
            stride *= nu;
            a /= nu;
        }
        idx
    }

    pub fn element_order(&self, a: &GroupElement) -> Result<u64> {
        self.check_coords(&a.0, "element")?;
        Ok(self.order_of_coords(&a.0))
    }

    pub(crate) fn order_of_index(&self, a: usize) -> u64 {
        self.order_of_coords(&self.decode(a))
    }

    fn order_of_coords(&self, a: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(a)
            .fold(1, |acc, (&n, &x)| acc.lcm(&(n / n.gcd(&x))))
    }

    pub(crate) fn decode(&self, mut index: usize) -> Vec<u64> {
        let mut coords = vec![0; self.rank()];
        for (c, &n) in coords.iter_mut().zip(&self.factors).rev() {
            *c = (index % n as usize) as u64;
            index /= n as usize;
        }
        coords
    }

    pub(crate) fn encode(&self, coords: &[u64]) -> usize {
        self.factors
            .iter()
            .zip(coords)
            .fold(0usize, |acc, (&n, &c)| acc * n as usize + c as usize)
    }

    fn check_coords(&self, coords: &[u64], what: &str) -> Result<()> {
        if coords.len() != self.rank() || coords.iter().zip(&self.factors).any(|(c, n)| c >= n) {
            return Err(Error::Mismatch(format!(
                "{what} {coords:?} does not belong to the group {:?}",
                self.factors
            )));
        }
        Ok(())
    }

    /// The cyclic subgroup generated by the element at `index`.
    pub(crate) fn cyclic_members(&self, index: usize) -> Vec<usize> {
        let mut members = vec![0usize];
        let mut x = index;
        while x != 0 {
            members.push(x);
            x = self.add_index(x, index);
        }
        members.sort_unstable();
        members
    }

    /// Smallest subgroup containing both member sets.
    fn join(&self, h: &[usize], k: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order() as usize];
        let mut out = Vec::new();
        for &x in h {
            for &y in k {
                let s = self.add_index(x, y);
                if !seen[s] {
                    seen[s] = true;
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAbelianGroup{:?}", self.factors)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// Merge cyclic orders into invariant factors through their elementary
/// divisors.
fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    // prime -> exponents of its prime powers
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for &m in orders {
        for (p, e) in factorize(m) {
            match primary.iter_mut().find(|(q, _)| *q == p) {
                Some((_, es)) => es.push(e),
                None => primary.push((p, vec![e])),
            }
        }
    }
    let k = primary.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
    let mut factors = vec![1u64; k];
    for (p, mut es) in primary {
        es.sort_unstable();
        // largest powers go to the last factors
        for (slot, e) in factors[k - es.len()..].iter_mut().zip(es) {
            *slot *= p.pow(e);
        }
    }
    factors
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A subgroup, stored as the sorted indices of its members in the parent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: FiniteAbelianGroup,
    members: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_members(parent: FiniteAbelianGroup, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { parent, members }
    }

    /// The subgroup generated by the given elements.
    pub fn generated_by(parent: &FiniteAbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        let mut members = vec![0usize];
        for g in gens {
            let idx = parent.index_of(g)?;
            members = parent.join(&members, &parent.cyclic_members(idx));
        }
        Ok(Subgroup::from_members(parent.clone(), members))
    }

    pub fn trivial(parent: &FiniteAbelianGroup) -> Self {
        Subgroup { parent: parent.clone(), members: vec![0] }
    }

    pub fn full(parent: &FiniteAbelianGroup) -> Self {
        Subgroup { parent: parent.clone(), members: (0..parent.order() as usize).collect() }
    }

    pub fn parent(&self) -> &FiniteAbelianGroup {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.members.iter().map(|&i| self.parent.element(i)).collect()
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        self.parent.index_of(a).is_ok_and(|i| self.contains_index(i))
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.len() <= other.members.len()
            && self.members.iter().all(|&i| other.contains_index(i))
    }

    /// The isomorphism type of the subgroup together with images of the
    /// standard generators of that abstract group, i.e. an explicit
    /// isomorphism onto the subgroup.
    pub fn structure(&self) -> (FiniteAbelianGroup, Vec<usize>) {
        let orders = self.elementary_divisors();
        let abstract_group =
            FiniteAbelianGroup::new(&orders).expect("elementary divisors are at least 2");
        let basis = find_basis(&self.parent, &self.members, abstract_group.factors())
            .expect("a subgroup always has a basis of its own invariant type");
        (abstract_group, basis)
    }

    /// Elementary divisors from the sizes of the `p^j`-torsion subgroups.
    fn elementary_divisors(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (p, _) in factorize(self.order()) {
            // dims[j-1] = #{ i : λ_i >= j }
            let mut dims = Vec::new();
            let mut prev = 1u64;
            let mut pj = p;
            loop {
                let killed = self
                    .members
                    .iter()
                    .filter(|&&x| self.parent.scale_index(pj, x) == 0)
                    .count() as u64;
                if killed == prev {
                    break;
                }
                let mut ratio = killed / prev;
                let mut d = 0;
                while ratio > 1 {
                    ratio /= p;
                    d += 1;
                }
                dims.push(d);
                prev = killed;
                pj *= p;
            }
            // conjugate partition
            let parts = dims.first().copied().unwrap_or(0);
            for i in 0..parts {
                let lambda = dims.iter().filter(|&&d| d > i).count() as u32;
                out.push(p.pow(lambda));
            }
        }
        out
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent)
            .field("elements", &self.elements())
            .finish()
    }
}

/// Backtracking search for elements `g_i` of `pool` with order exactly
/// `orders[i]` that are independent, i.e. generate a subgroup of order
/// `Π orders[i]`. Candidates are tried in increasing index order.
pub(crate) fn find_basis(
    group: &FiniteAbelianGroup,
    pool: &[usize],
    orders: &[u64],
) -> Option<Vec<usize>> {
    let mut span = vec![false; group.order() as usize];
    span[0] = true;
    let mut chosen = Vec::with_capacity(orders.len());
    if extend_basis(group, pool, orders, &mut span, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_basis(
    group: &FiniteAbelianGroup,
    pool: &[usize],
    orders: &[u64],
    span: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(&n) = orders.get(chosen.len()) else {
        return true;
    };
    for &g in pool {
        if group.order_of_index(g) != n {
            continue;
        }
        // ⟨g⟩ ∩ span must be trivial
        let mut x = g;
        let mut independent = true;
        for _ in 1..n {
            if span[x] {
                independent = false;
                break;
            }
            x = group.add_index(x, g);
        }
        if !independent {
            continue;
        }
        let old: Vec<usize> = span.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect();
        let mut multiple = g;
        for _ in 1..n {
            for &s in &old {
                span[group.add_index(s, multiple)] = true;
            }
            multiple = group.add_index(multiple, g);
        }
        chosen.push(g);
        if extend_basis(group, pool, orders, span, chosen) {
            return true;
        }
        chosen.pop();
        span.iter_mut().for_each(|s| *s = false);
        for s in old {
            span[s] = true;
        }
    }
    false
}

/// Every subgroup exactly once, ordered by cardinality and then by member
/// indices. Built by closing the set of cyclic subgroups under joins.
pub fn all_subgroups(group: &FiniteAbelianGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    limits.check("subgroup enumeration", group.order())?;
    let n = group.order() as usize;
    let mut cyclic: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..n {
        cyclic.insert(group.cyclic_members(i));
    }
    let cyclic: Vec<Vec<usize>> = cyclic.into_iter().collect();
    let mut all: BTreeSet<Vec<usize>> = cyclic.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclic {
                if c.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let j = group.join(h, c);
                if !all.contains(&j) {
                    all.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut subgroups: Vec<Subgroup> = all
        .into_iter()
        .map(|members| Subgroup { parent: group.clone(), members })
        .collect();
    subgroups.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then(a.members.cmp(&b.members)));
    Ok(subgroups)
}

/// A group isomorphism, given by the images of the domain's standard
/// generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupIso {
    domain: FiniteAbelianGroup,
    codomain: FiniteAbelianGroup,
    images: Vec<usize>,
}

impl GroupIso {
    /// Validates that the generator images define a bijective homomorphism.
    pub fn new(
        domain: &FiniteAbelianGroup,
        codomain: &FiniteAbelianGroup,
        images: &[GroupElement],
    ) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::Mismatch("one image per invariant factor is required".into()));
        }
        let images = images.iter().map(|g| codomain.index_of(g)).collect::<Result<Vec<_>>>()?;
        let iso = GroupIso { domain: domain.clone(), codomain: codomain.clone(), images };
        if domain.order() != codomain.order() || !iso.is_homomorphism() || !iso.is_injective() {
            return Err(Error::InvalidInput("generator images do not define an isomorphism".into()));
        }
        Ok(iso)
    }

    pub fn identity(group: &FiniteAbelianGroup) -> Self {
        GroupIso {
            domain: group.clone(),
            codomain: group.clone(),
            images: (0..group.rank()).map(|i| group.encode(&group.generator(i).0)).collect(),
        }
    }

    pub fn domain(&self) -> &FiniteAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn images(&self) -> Vec<GroupElement> {
        self.images.iter().map(|&i| self.codomain.element(i)).collect()
    }

    pub fn apply(&self, a: &GroupElement) -> Result<GroupElement> {
        let idx = self.domain.index_of(a)?;
        Ok(self.codomain.element(self.apply_index(idx)))
    }

    pub(crate) fn apply_index(&self, a: usize) -> usize {
        let coords = self.domain.decode(a);
        coords.iter().zip(&self.images).fold(0, |acc, (&c, &g)| {
            self.codomain.add_index(acc, self.codomain.scale_index(c, g))
        })
    }

    /// Images of all domain elements, by domain index.
    pub(crate) fn table(&self) -> Vec<usize> {
        (0..self.domain.order() as usize).map(|i| self.apply_index(i)).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupIso) -> Result<GroupIso> {
        if self.codomain != other.domain {
            return Err(Error::Mismatch("isomorphisms are not composable".into()));
        }
        Ok(GroupIso {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            images: self.images.iter().map(|&g| other.apply_index(g)).collect(),
        })
    }

    pub fn inverse(&self) -> GroupIso {
        let table = self.table();
        let mut inv = vec![0usize; table.len()];
        for (a, &b) in table.iter().enumerate() {
            inv[b] = a;
        }
        GroupIso {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            images: (0..self.codomain.rank())
                .map(|i| inv[self.codomain.encode(&self.codomain.generator(i).0)])
                .collect(),
        }
    }

    fn is_homomorphism(&self) -> bool {
        self.domain
            .factors()
            .iter()
            .zip(&self.images)
            .all(|(&n, &g)| n % self.codomain.order_of_index(g) == 0)
    }

    fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order() as usize];
        for b in self.table() {
            if core::mem::replace(&mut seen[b], true) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for GroupIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupIso")
            .field("domain", &self.domain)
            .field("codomain", &self.codomain)
            .field("images", &self.images())
            .finish()
    }
}

/// All isomorphisms `G -> H`, in lexicographic order of generator-image
/// indices. Empty when the groups are not isomorphic.
pub fn all_isomorphisms(
    g: &FiniteAbelianGroup,
    h: &FiniteAbelianGroup,
    limits: &Limits,
) -> Result<Vec<GroupIso>> {
    limits.check("isomorphism enumeration", g.order())?;
    limits.check("isomorphism enumeration", h.order())?;
    if g.factors() != h.factors() {
        return Ok(Vec::new());
    }
    let candidates: Vec<Vec<usize>> = g
        .factors()
        .iter()
        .map(|&n| (0..h.order() as usize).filter(|&x| h.order_of_index(x) == n).collect())
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; g.rank()];
    loop {
        let images: Vec<usize> = pick.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        let iso = GroupIso { domain: g.clone(), codomain: h.clone(), images };
        if iso.is_injective() {
            out.push(iso);
        }
        // odometer, last position fastest
        let mut pos = g.rank();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < candidates[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}
