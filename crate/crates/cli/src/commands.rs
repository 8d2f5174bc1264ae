use std::path::Path;

use serde_json::{json, Value};

use torsor_core::knot::{reducible_surgery_obstruction, surgery_torsion_dual, surgery_zero_set, torus_delta};
use torsor_core::lens::{classify_lens_family, lens_f, lens_reduced_d, lens_torsion_dual};
use torsor_core::msinv::{ms_multiset, recover_decomposition};
use torsor_core::wtorsor::{direct_sum_all, fourier_transform, inverse_fourier, reduce};
use torsor_core::{
    AlexanderPolynomial, DualWeights, Error, FiniteAbelianGroup, LensSpace, Limits, WeightedGroup,
};

use crate::args::{Alex, Command, Emit};
use crate::error::CliError;
use crate::report::Report;
use crate::schema::{
    cyclotomic_json, dual_json, integer_value, lens_json, parse_lens, read_dual, read_weighted,
    weighted_json,
};

pub const MAX_ORDER_VAR: &str = "TORSOR_MAX_ORDER";

pub fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Limits::new)
            .map_err(|_| CliError::input(format!("{MAX_ORDER_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(Limits::default()),
    }
}

fn check_order(group: &FiniteAbelianGroup, limits: &Limits) -> Result<(), CliError> {
    if group.order() > limits.max_order {
        return Err(Error::ResourceLimit {
            what: "group order",
            size: group.order(),
            limit: limits.max_order,
        }
        .into());
    }
    Ok(())
}

fn load_weighted(path: &Path, limits: &Limits) -> Result<WeightedGroup, CliError> {
    let w = read_weighted(path)?;
    check_order(w.group(), limits)?;
    Ok(w)
}

fn load_dual(path: &Path, limits: &Limits) -> Result<DualWeights, CliError> {
    let d = read_dual(path)?;
    check_order(d.group(), limits)?;
    Ok(d)
}

fn weighted_report(w: &WeightedGroup) -> Report {
    Report {
        json: weighted_json(w),
        header: vec!["element", "weight"],
        rows: w.weights().iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect(),
    }
}

fn dual_report(d: &DualWeights) -> Report {
    Report {
        json: dual_json(d),
        header: vec!["character", "value"],
        rows: d.values().iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect(),
    }
}

fn alexander(coeffs: &[i64]) -> Result<AlexanderPolynomial, CliError> {
    Ok(AlexanderPolynomial::from_coeffs(coeffs)?)
}

pub fn run(command: &Command, limits: &Limits) -> Result<Report, CliError> {
    match command {
        Command::Ft(i) => Ok(dual_report(&fourier_transform(&load_weighted(&i.input, limits)?))),
        Command::Ift(i) => Ok(weighted_report(&inverse_fourier(&load_dual(&i.input, limits)?)?)),
        Command::Reduce(i) => Ok(weighted_report(&reduce(&load_weighted(&i.input, limits)?))),
        Command::Sum { inputs } => {
            let parts = inputs.iter().map(|p| load_weighted(p, limits)).collect::<Result<Vec<_>, _>>()?;
            let total: u128 = parts.iter().map(|w| w.group().order() as u128).product();
            if total > limits.max_order as u128 {
                return Err(CliError::resource(format!(
                    "direct sum of order {total} exceeds bound {}",
                    limits.max_order
                )));
            }
            Ok(weighted_report(&direct_sum_all(&parts).0))
        }
        Command::Ms(i) => ms(&load_weighted(&i.input, limits)?, limits),
        Command::Decompose { input, lens } => {
            let w = load_weighted(input, limits)?;
            let spaces = lens.iter().map(|s| parse_lens(s)).collect::<Result<Vec<_>, _>>()?;
            let candidates = spaces.iter().map(lens_reduced_d).collect::<Result<Vec<_>, _>>()?;
            let counts = recover_decomposition(&w, &candidates, limits)?;
            Ok(Report {
                json: Value::Array(
                    spaces.iter().zip(&counts).map(|(l, c)| json!({ "lens": lens_json(l), "count": c })).collect(),
                ),
                header: vec!["p", "q", "count"],
                rows: spaces
                    .iter()
                    .zip(&counts)
                    .map(|(l, c)| vec![l.p().to_string(), l.q().to_string(), c.to_string()])
                    .collect(),
            })
        }
        Command::Lens { p, q, emit } => {
            let l = LensSpace::new(*p, *q)?;
            check_order(&FiniteAbelianGroup::cyclic(*p)?, limits)?;
            Ok(match emit {
                Emit::Dual => dual_report(&lens_torsion_dual(&l)),
                Emit::Time => weighted_report(&lens_reduced_d(&l)?),
                Emit::F => weighted_report(&lens_f(&l)),
            })
        }
        Command::ClassifyLens { pmax } => {
            let classes = classify_lens_family(*pmax, limits)?;
            let mut rows = Vec::new();
            for (i, class) in classes.iter().enumerate() {
                for l in class {
                    rows.push(vec![i.to_string(), l.p().to_string(), l.q().to_string()]);
                }
            }
            Ok(Report {
                json: Value::Array(
                    classes.iter().map(|c| Value::Array(c.iter().map(lens_json).collect())).collect(),
                ),
                header: vec!["class", "p", "q"],
                rows,
            })
        }
        Command::Alex(a) => alex(a),
    }
}

fn ms(w: &WeightedGroup, limits: &Limits) -> Result<Report, CliError> {
    let multiset = ms_multiset(w, limits)?;
    let mut classes = Vec::new();
    let mut rows = Vec::new();
    for (i, (class, mult)) in multiset.classes().iter().enumerate() {
        let d = class.weights();
        classes.push(json!({
            "subgroup_order": class.subgroup().order(),
            "multiplicity": mult,
            "group": d.group().factors(),
            "weights": d.values().iter().map(cyclotomic_json).collect::<Vec<_>>(),
        }));
        for (k, v) in d.values().iter().enumerate() {
            rows.push(vec![
                i.to_string(),
                class.subgroup().order().to_string(),
                mult.to_string(),
                k.to_string(),
                v.to_string(),
            ]);
        }
    }
    Ok(Report {
        json: Value::Array(classes),
        header: vec!["class", "subgroup_order", "multiplicity", "character", "value"],
        rows,
    })
}

fn alex(a: &Alex) -> Result<Report, CliError> {
    match a {
        Alex::Torus { p, q } => {
            let delta = torus_delta(*p, *q)?;
            let coeffs = delta.coeffs();
            Ok(Report {
                json: json!({
                    "p": p,
                    "q": q,
                    "delta": coeffs.iter().map(integer_value).collect::<Vec<_>>(),
                }),
                header: vec!["power", "coeff"],
                rows: coeffs.iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]).collect(),
            })
        }
        Alex::Divides { poly, p, q } => {
            let divides = reducible_surgery_obstruction(&alexander(poly)?, *p, *q)?;
            Ok(Report {
                json: json!({ "divides": divides }),
                header: vec!["divides"],
                rows: vec![vec![divides.to_string()]],
            })
        }
        Alex::Surgery { poly, n } => {
            let delta = alexander(poly)?;
            let d = surgery_torsion_dual(&delta, *n)?;
            let zeros = surgery_zero_set(&delta, *n)?;
            Ok(Report {
                json: json!({
                    "n": n,
                    "values": d.values().iter().map(cyclotomic_json).collect::<Vec<_>>(),
                    "zero_set": zeros,
                }),
                header: vec!["character", "value", "zero"],
                rows: d
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(k, v)| vec![k.to_string(), v.to_string(), (k != 0 && v.is_zero()).to_string()])
                    .collect(),
            })
        }
    }
}
