use ascseq::genfun::*;
use ascseq::seq::{for_each_ascent_sequence, rep_of, FISHBURN};
use ascseq::series::*;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn points(names: &[&str], count: usize, seed: u64, ok: impl Fn(&ParamPoint) -> bool) -> Vec<ParamPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| ParamPoint::sample(&mut rng, names, &ok)).collect()
}

fn ones(names: &[&str]) -> ParamPoint {
    names.iter().fold(ParamPoint::new(), |p, n| p.with(n, Rat::one()))
}

fn fishburn_series(order: usize) -> RatSeries {
    RatSeries::from_coeffs('t', order, (0..=order).map(|n| if n == 0 { Rat::zero() } else { int(FISHBURN[n] as i64) }).collect())
}

#[test]
fn brute_force_counts() {
    for sel in [Selector::Quadruple, Selector::Tilde, Selector::Quintuple] {
        let s = brute_force_gf(8, sel, &ParamPoint::new());
        assert_eq!(s, fishburn_series(8));
    }
    let q = brute_force_gf(3, Selector::Quadruple, &ones(&["x", "y", "u", "z"]));
    assert_eq!(q.coeffs()[1..], [int(1), int(2), int(5)]);
}

#[test]
fn brute_force_rep_free() {
    // x = 0 keeps only sequences with distinct entries
    let pt = ParamPoint::new().with("x", Rat::zero());
    let s = brute_force_gf(6, Selector::Quadruple, &pt);
    for n in 1..=6 {
        let mut k = 0i64;
        for_each_ascent_sequence(n, |q| {
            if rep_of(q) == 0 {
                k += 1;
            }
        });
        assert_eq!(s.coeff(n), int(k), "n={n}");
    }
}

#[test]
fn fishburn_series_formula() {
    assert_eq!(eval_fishburn(10), fishburn_series(10));
}

#[test]
fn quadruple_closed_form() {
    let names = ["x", "y", "u", "z"];
    assert_eq!(eval_g_quadruple(&ones(&names), 10).unwrap(), fishburn_series(10));
    for pt in points(&names, 5, 11, admissible_quadruple) {
        let closed = eval_g_quadruple(&pt, 10).unwrap();
        assert_eq!(closed, brute_force_gf(10, Selector::Quadruple, &pt), "{pt:?}");
        let swapped = ParamPoint::new()
            .with("x", pt.get("u").clone())
            .with("y", pt.get("z").clone())
            .with("u", pt.get("x").clone())
            .with("z", pt.get("y").clone());
        assert_eq!(eval_g_quadruple(&swapped, 10).unwrap(), closed);
        assert_eq!(eval_g_quadruple_with(&pt, 10, 15).unwrap(), closed);
    }
}

#[test]
fn tilde_closed_form() {
    let names = ["x", "y", "u", "v"];
    assert_eq!(eval_g_tilde(&ones(&names), 10).unwrap(), fishburn_series(10));
    for pt in points(&names, 5, 12, admissible_quadruple) {
        let closed = eval_g_tilde(&pt, 10).unwrap();
        assert_eq!(closed, brute_force_gf(10, Selector::Tilde, &pt), "{pt:?}");
        let swapped = pt.clone().with("y", pt.get("v").clone()).with("v", pt.get("y").clone());
        assert_eq!(eval_g_tilde(&swapped, 10).unwrap(), closed);
        assert_eq!(eval_g_tilde_with(&pt, 10, 15).unwrap(), closed);
    }
}

#[test]
fn quintuple_closed_form() {
    let names = ["x", "y", "u", "z", "v"];
    assert_eq!(eval_g_quintuple(&ones(&names), 9).unwrap(), fishburn_series(9));
    for pt in points(&names, 5, 13, admissible_quadruple) {
        let closed = eval_g_quintuple(&pt, 9).unwrap();
        assert_eq!(closed, brute_force_gf(9, Selector::Quintuple, &pt), "{pt:?}");
        assert_eq!(eval_g_quintuple_with(&pt, 9, 14).unwrap(), closed);
        let v1 = pt.clone().with("v", Rat::one());
        assert_eq!(eval_g_quintuple(&v1, 9).unwrap(), eval_g_quadruple(&v1, 9).unwrap());
        let z1 = pt.clone().with("z", Rat::one());
        assert_eq!(eval_g_quintuple(&z1, 9).unwrap(), eval_g_tilde(&z1, 9).unwrap());
    }
}

#[test]
fn functional_equation_and_cases() {
    let names = ["x", "y", "w", "u", "z", "v"];
    for pt in points(&names, 5, 14, admissible_functional) {
        let rep = check_functional_equation(&pt, 8).unwrap();
        assert!(rep.verdict, "{rep:?}");
        for rep in check_case_forms(&pt, 8).unwrap() {
            assert!(rep.verdict, "{rep:?}");
        }
    }
}

#[test]
fn garsia_gessel() {
    assert!(is_symmetric(&h_poly(2)));
    for n in 1..=7 {
        assert!(is_symmetric(&b_poly(n)), "n={n}");
    }
    let rep = garsia_gessel_check(6);
    assert!(rep.verdict, "first divergence {:?}", rep.first_divergence);
}

#[test]
fn bisymmetric_quadruple() {
    for n in 1..=8 {
        assert!(check_bisymmetric_quadruple(n), "n={n}");
    }
}
