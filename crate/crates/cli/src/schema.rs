//! JSON encodings of groups, weightings, dual weights and lens spaces.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use torsor_core::wtorsor::ProductEmbedding;
use torsor_core::{
    Cyclotomic, CyclotomicField, DualWeights, FiniteAbelianGroup, GroupElement, LensSpace,
    Rational, WeightedGroup,
};

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightedFile {
    group: Vec<u64>,
    weights: Vec<Scalar>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclotomicJson {
    conductor: u64,
    coeffs: Vec<Scalar>,
}

#[derive(Deserialize)]
struct DualFile {
    group: Vec<u64>,
    values: Vec<CyclotomicJson>,
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn rational(s: &Scalar) -> Result<Rational, CliError> {
    match s {
        Scalar::Int(n) => Ok(Rational::from_integer((*n).into())),
        Scalar::Text(t) => {
            let (num, den) = match t.trim().split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (t.trim(), "1"),
            };
            let num: BigInt = num.parse().map_err(|_| CliError::input(format!("bad rational {t:?}")))?;
            let den: BigInt = den.parse().map_err(|_| CliError::input(format!("bad rational {t:?}")))?;
            if den == BigInt::from(0) {
                return Err(CliError::input(format!("zero denominator in {t:?}")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Groups in files may be any list of cyclic orders. Weights are indexed
/// lexicographically in the listed coordinates and carried over to the
/// invariant-factor form.
pub fn read_weighted(path: &Path) -> Result<WeightedGroup, CliError> {
    let file: WeightedFile = read(path)?;
    let weights = file.weights.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
    weighted_from_listed(&file.group, weights)
}

fn weighted_from_listed(orders: &[u64], weights: Vec<Rational>) -> Result<WeightedGroup, CliError> {
    if orders.contains(&0) {
        return Err(CliError::input("group orders must be positive"));
    }
    let orders: Vec<u64> = orders.iter().copied().filter(|&n| n > 1).collect();
    if FiniteAbelianGroup::is_canonical(&orders) {
        return Ok(WeightedGroup::new(FiniteAbelianGroup::new(&orders)?, weights)?);
    }
    let summands = orders
        .iter()
        .map(|&n| FiniteAbelianGroup::cyclic(n))
        .collect::<Result<Vec<_>, _>>()?;
    let listed: u64 = orders.iter().product();
    if weights.len() as u64 != listed {
        return Err(CliError::input(format!(
            "group of order {listed} needs {listed} weights, got {}",
            weights.len()
        )));
    }
    let emb = ProductEmbedding::new(&summands);
    let target = emb.target().clone();
    let mut out = vec![Rational::from_integer(0.into()); weights.len()];
    let mut coords = vec![0u64; orders.len()];
    for w in weights {
        let parts: Vec<GroupElement> = coords.iter().map(|&c| GroupElement(vec![c])).collect();
        out[target.index_of(&emb.combine(&parts)?)?] = w;
        for i in (0..coords.len()).rev() {
            coords[i] += 1;
            if coords[i] < orders[i] {
                break;
            }
            coords[i] = 0;
        }
    }
    Ok(WeightedGroup::new(target, out)?)
}

pub fn read_dual(path: &Path) -> Result<DualWeights, CliError> {
    let file: DualFile = read(path)?;
    let orders: Vec<u64> = file.group.iter().copied().filter(|&n| n != 1).collect();
    if !FiniteAbelianGroup::is_canonical(&orders) {
        return Err(CliError::input(
            "dual weights need the group in invariant-factor form n_1 | n_2 | ...",
        ));
    }
    let group = FiniteAbelianGroup::new(&orders)?;
    let values = file.values.iter().map(cyclotomic).collect::<Result<Vec<_>, _>>()?;
    Ok(DualWeights::new(group.clone(), group.exponent(), values)?)
}

fn cyclotomic(c: &CyclotomicJson) -> Result<Cyclotomic, CliError> {
    let field = CyclotomicField::new(c.conductor)?;
    if c.coeffs.len() as u64 > c.conductor {
        return Err(CliError::input(format!(
            "conductor {} allows at most {} coefficients",
            c.conductor, c.conductor
        )));
    }
    let coeffs = c.coeffs.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
    Ok(field.from_power_sums(&coeffs))
}

pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn cyclotomic_json(c: &Cyclotomic) -> Value {
    let coeffs: Vec<String> = c.coeffs().iter().map(rational_str).collect();
    json!({ "conductor": c.conductor(), "coeffs": coeffs })
}

pub fn weighted_json(w: &WeightedGroup) -> Value {
    let weights: Vec<String> = w.weights().iter().map(rational_str).collect();
    json!({ "group": w.group().factors(), "weights": weights })
}

pub fn dual_json(d: &DualWeights) -> Value {
    let values: Vec<Value> = d.values().iter().map(cyclotomic_json).collect();
    json!({ "group": d.group().factors(), "values": values })
}

pub fn lens_json(l: &LensSpace) -> Value {
    json!({ "p": l.p(), "q": l.q() })
}

pub fn parse_lens(text: &str) -> Result<LensSpace, CliError> {
    let bad = || CliError::input(format!("lens candidate {text:?} is not of the form p:q"));
    let (p, q) = text.trim().split_once(':').ok_or_else(bad)?;
    let p: u64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    Ok(LensSpace::new(p, q)?)
}
