//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line and
//! then asserts; run with `--nocapture` to see the report.
//!
//! All comparisons are exact (zero tolerance).

mod common;

use std::time::Instant;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use torsor_core::abelian::all_isomorphisms;
use torsor_core::knot::{
    reducible_surgery_obstruction, surgery_zero_set, torus_delta, AlexanderPolynomial,
};
use torsor_core::lens::{
    classify_lens_family, lens_f, lens_reduced_d, lens_torsion_dual, oriented_diffeomorphic,
};
use torsor_core::msinv::{c_count, has_nonvanishing, ms_multiset, recover_decomposition};
use torsor_core::wtorsor::{
    affine_isomorphic, direct_sum, direct_sum_all, fourier_transform, inverse_fourier,
    t_isomorphic,
};
use torsor_core::{
    CyclotomicField, FiniteAbelianGroup, LensSpace, Limits, RatPoly, Rational, WeightedGroup,
};

use common::{groups_up_to, random_weighting, rng};

fn report(id: &str, what: &str, ok: bool, started: Instant, budget_secs: u64) {
    let elapsed = started.elapsed();
    let status = if ok { "PASS" } else { "FAIL" };
    println!(
        "[{status}] {id}: {what} ({:.2}s, budget {budget_secs}s)",
        elapsed.as_secs_f64()
    );
    assert!(ok, "{id} failed: {what}");
}

#[test]
fn ac1_direct_sum_transform_formula() {
    let start = Instant::now();
    let mut rng = rng(1);
    let groups = groups_up_to(8);
    let mut failures = 0;
    for _ in 0..200 {
        let g1 = groups.choose(&mut rng).unwrap().clone();
        let g2 = groups.choose(&mut rng).unwrap().clone();
        let w1 = random_weighting(&mut rng, g1.clone(), 6);
        let w2 = random_weighting(&mut rng, g2.clone(), 6);
        let (sum, emb) = direct_sum_all(&[w1.clone(), w2.clone()]);
        let ds = fourier_transform(&sum);
        let d1 = fourier_transform(&w1);
        let d2 = fourier_transform(&w2);
        for chi in emb.target().characters() {
            let phi = emb.restrict_character(0, &chi).unwrap();
            let psi = emb.restrict_character(1, &chi).unwrap();
            let phi_trivial = phi.0.iter().all(|&c| c == 0);
            let psi_trivial = psi.0.iter().all(|&c| c == 0);
            let expected = match (phi_trivial, psi_trivial) {
                (false, true) => d1.value(&phi).unwrap().clone(),
                (true, false) => d2.value(&psi).unwrap().clone(),
                (true, true) => d1.value(&phi).unwrap() + d2.value(&psi).unwrap(),
                (false, false) => CyclotomicField::new(1).unwrap().zero(),
            };
            if ds.value(&chi).unwrap() != &expected {
                failures += 1;
            }
        }
    }
    report(
        "AC1",
        &format!("direct-sum transform formula on 200 random pairs, {failures} mismatches"),
        failures == 0 && start.elapsed().as_secs() < 10,
        start,
        10,
    );
}

#[test]
fn ac2_round_trip_and_translation() {
    let start = Instant::now();
    let mut rng = rng(2);
    let groups = groups_up_to(12);
    let mut failures = 0;
    for _ in 0..200 {
        let g = groups.choose(&mut rng).unwrap().clone();
        let w = random_weighting(&mut rng, g.clone(), 9);
        let d = fourier_transform(&w);
        if inverse_fourier(&d).unwrap() != w {
            failures += 1;
        }
        let a0 = g.element(rng.gen_range(0..g.order() as usize));
        let dt = fourier_transform(&w.translate(&a0).unwrap());
        for chi in g.characters() {
            let twisted = d.value(&chi).unwrap() * &g.evaluate(&chi, &a0).unwrap();
            if dt.value(&chi).unwrap() != &twisted {
                failures += 1;
            }
        }
    }
    report(
        "AC2",
        &format!("round trip and translation law on 200 weightings, {failures} mismatches"),
        failures == 0 && start.elapsed().as_secs() < 5,
        start,
        5,
    );
}

#[test]
fn ac3_equivalence_duality() {
    let start = Instant::now();
    let lim = Limits::default();
    let mut rng = rng(3);
    let groups = groups_up_to(9);
    let (mut agree, mut positives, mut negatives) = (0, 0, 0);
    for i in 0..100 {
        let g = groups.choose(&mut rng).unwrap().clone();
        let w = random_weighting(&mut rng, g.clone(), 2);
        let w2 = match i % 3 {
            // an affine image of w
            0 => {
                let auts = all_isomorphisms(&g, &g, &lim).unwrap();
                let f = auts.choose(&mut rng).unwrap();
                let s = g.element(rng.gen_range(0..g.order() as usize));
                w.pullback(f, &s).unwrap()
            }
            // a shuffle of the same values: sometimes equivalent, mostly not
            1 => {
                let mut vals = w.weights().to_vec();
                vals.shuffle(&mut rng);
                WeightedGroup::new(g.clone(), vals).unwrap()
            }
            _ => random_weighting(&mut rng, g.clone(), 2),
        };
        let affine = affine_isomorphic(&w, &w2, &lim).unwrap().is_some();
        let t_iso = t_isomorphic(&fourier_transform(&w), &fourier_transform(&w2), &lim)
            .unwrap()
            .is_some();
        if affine == t_iso {
            agree += 1;
        }
        if affine {
            positives += 1;
        } else {
            negatives += 1;
        }
    }
    report(
        "AC3",
        &format!(
            "affine isomorphism <=> t-isomorphism on 100 pairs: {agree}/100 agree \
             ({positives} equivalent, {negatives} not)"
        ),
        agree == 100 && positives > 0 && negatives > 0 && start.elapsed().as_secs() < 60,
        start,
        60,
    );
}

fn lens_list(ps: &[u64]) -> Vec<LensSpace> {
    ps.iter().flat_map(|&p| LensSpace::family(p).unwrap()).collect()
}

#[test]
fn ac4_ms_additivity_and_homomorphism() {
    let start = Instant::now();
    let lim = Limits::default();
    let spaces = lens_list(&[2, 3, 4, 5, 7]);
    let weights: Vec<WeightedGroup> = spaces.iter().map(|l| lens_reduced_d(l).unwrap()).collect();
    let ms: Vec<_> = weights.iter().map(|w| ms_multiset(w, &lim).unwrap()).collect();
    let (mut pairs, mut failures) = (0, 0);
    for i in 0..spaces.len() {
        for j in i..spaces.len() {
            pairs += 1;
            let sum = direct_sum(&weights[i], &weights[j]);
            let ms_sum = ms_multiset(&sum, &lim).unwrap();
            let union = ms[i].union(&ms[j], &lim).unwrap();
            if !ms_sum.equivalent(&union, &lim).unwrap() {
                failures += 1;
            }
            for reference in &weights {
                let lhs = c_count(reference, &sum, &lim).unwrap();
                let rhs = c_count(reference, &weights[i], &lim).unwrap()
                    + c_count(reference, &weights[j], &lim).unwrap();
                if lhs != rhs {
                    failures += 1;
                }
            }
        }
    }
    report(
        "AC4",
        &format!("MS additivity and c additivity over {pairs} lens pairs, {failures} failures"),
        failures == 0 && start.elapsed().as_secs() < 30,
        start,
        30,
    );
}

#[test]
fn ac5_lens_classification() {
    let start = Instant::now();
    let lim = Limits::default();
    let (mut checked, mut disagreements) = (0, 0);
    for p in 2..=20 {
        let family = LensSpace::family(p).unwrap();
        for a in &family {
            for b in &family {
                checked += 1;
                let by_search = affine_isomorphic(&lens_f(a), &lens_f(b), &lim).unwrap().is_some();
                let by_torsion = t_isomorphic(&lens_torsion_dual(a), &lens_torsion_dual(b), &lim)
                    .unwrap()
                    .is_some();
                let expected = oriented_diffeomorphic(a, b);
                if by_search != expected || by_torsion != expected {
                    disagreements += 1;
                }
            }
        }
    }
    let family_ok = classify_lens_family(20, &lim).is_ok();
    report(
        "AC5",
        &format!("f_(p,q) affine equivalence and torsion t-isomorphism vs q^(+-1) criterion, p <= 20: {checked} pairs, {disagreements} disagreements"),
        disagreements == 0 && family_ok && start.elapsed().as_secs() < 60,
        start,
        60,
    );
}

#[test]
fn ac6_lens_nonvanishing() {
    let start = Instant::now();
    let mut count = 0;
    let mut failures = 0;
    for l in lens_list(&(2..=50).collect::<Vec<_>>()) {
        count += 1;
        if !has_nonvanishing(&lens_torsion_dual(&l)) {
            failures += 1;
        }
    }
    report(
        "AC6",
        &format!("torsion transform nonvanishing for {count} lens spaces with p <= 50, {failures} failures"),
        failures == 0 && start.elapsed().as_secs() < 10,
        start,
        10,
    );
}

#[test]
fn ac7_kronecker_and_cancellation() {
    let start = Instant::now();
    let lim = Limits::default();
    let spaces = lens_list(&(2..=12).collect::<Vec<_>>());
    let weights: Vec<WeightedGroup> = spaces.iter().map(|l| lens_reduced_d(l).unwrap()).collect();
    let mut failures = 0;
    for (a, wa) in spaces.iter().zip(&weights) {
        for (b, wb) in spaces.iter().zip(&weights) {
            let expected = usize::from(oriented_diffeomorphic(a, b));
            if c_count(wa, wb, &lim).unwrap() != expected {
                failures += 1;
            }
        }
    }

    let l52 = LensSpace::new(5, 2).unwrap();
    let l73 = LensSpace::new(7, 3).unwrap();
    let sum = direct_sum(&lens_reduced_d(&l52).unwrap(), &lens_reduced_d(&l73).unwrap());
    let candidates = lens_list(&[5, 7]);
    let cand_weights: Vec<WeightedGroup> =
        candidates.iter().map(|l| lens_reduced_d(l).unwrap()).collect();
    let expected: Vec<usize> = candidates
        .iter()
        .map(|c| usize::from(oriented_diffeomorphic(c, &l52) || oriented_diffeomorphic(c, &l73)))
        .collect();
    if recover_decomposition(&sum, &cand_weights, &lim).unwrap() != expected {
        failures += 1;
    }
    let mut rng = rng(7);
    let g = sum.group().clone();
    let auts = all_isomorphisms(&g, &g, &lim).unwrap();
    for _ in 0..3 {
        let f = auts.choose(&mut rng).unwrap();
        let s = g.element(rng.gen_range(0..35));
        let moved = sum.pullback(f, &s).unwrap();
        if recover_decomposition(&moved, &cand_weights, &lim).unwrap() != expected {
            failures += 1;
        }
    }
    report(
        "AC7",
        &format!(
            "c_count Kronecker over {} lens spaces (p <= 12) and L(5,2)#L(7,3) recovery, {failures} failures",
            spaces.len()
        ),
        failures == 0 && start.elapsed().as_secs() < 60,
        start,
        60,
    );
}

#[test]
fn ac8_torus_and_obstruction() {
    let start = Instant::now();
    let mut failures = 0;
    for p in 2..=9u64 {
        for q in p + 1..=9u64 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let delta = torus_delta(p, q).unwrap();
            if delta.degree() as u64 != (p - 1) * (q - 1) {
                failures += 1;
            }
            if delta.poly().eval(&Rational::one()) != Rational::one() {
                failures += 1;
            }
            let lhs = &(delta.poly() * &RatPoly::x_pow_minus_one(p as usize))
                * &RatPoly::x_pow_minus_one(q as usize);
            let rhs = &RatPoly::x_pow_minus_one((p * q) as usize) * &RatPoly::x_pow_minus_one(1);
            if lhs != rhs {
                failures += 1;
            }
        }
    }

    let mut rng = rng(8);
    let pairs = [(2u64, 3u64), (2, 5), (3, 4), (3, 5), (2, 7)];
    let (mut agreed, mut obstructed, mut allowed) = (0, 0, 0);
    for i in 0..50 {
        let (p, q) = pairs[i % pairs.len()];
        let deg = rng.gen_range(0..6);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            coeffs[0] = 1;
        }
        let mut poly = RatPoly::from_ints(coeffs);
        if i % 2 == 0 {
            poly = &poly * torus_delta(p, q).unwrap().poly();
        }
        let delta = AlexanderPolynomial::new(poly).unwrap();
        match reducible_surgery_obstruction(&delta, p, q) {
            Ok(v) => {
                agreed += 1;
                if v {
                    allowed += 1;
                } else {
                    obstructed += 1;
                }
            }
            Err(_) => failures += 1,
        }
    }
    let trefoil = AlexanderPolynomial::from_coeffs(&[1, -1, 1]).unwrap();
    if surgery_zero_set(&trefoil, 6).unwrap() != [1, 5] {
        failures += 1;
    }
    report(
        "AC8",
        &format!(
            "torus identities, {agreed}/50 obstruction routes agree ({allowed} divisible, \
             {obstructed} obstructed), trefoil zero set, {failures} failures"
        ),
        failures == 0 && agreed == 50 && allowed > 0 && obstructed > 0 && start.elapsed().as_secs() < 10,
        start,
        10,
    );
}

#[test]
fn ac9_orthogonality() {
    let start = Instant::now();
    let groups = groups_up_to(64);
    let mut failures = 0;
    for g in &groups {
        let field = CyclotomicField::new(g.exponent()).unwrap();
        let elements = g.elements();
        for (idx, chi) in g.characters().iter().enumerate() {
            let mut sums = vec![Rational::zero(); g.exponent() as usize];
            for a in &elements {
                sums[g.pairing(chi, a).unwrap() as usize] += Rational::one();
            }
            let total = field.from_power_sums(&sums);
            let expected = if idx == 0 { g.order() as i64 } else { 0 };
            if total != field.from_integer(expected) {
                failures += 1;
            }
        }
    }
    report(
        "AC9",
        &format!("character orthogonality on all {} groups of order <= 64, {failures} failures", groups.len()),
        failures == 0 && start.elapsed().as_secs() < 5,
        start,
        5,
    );
}

#[test]
fn trivial_group_is_covered() {
    assert!(groups_up_to(1).contains(&FiniteAbelianGroup::trivial()));
}
