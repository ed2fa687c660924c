//! Shared generators and property checks for the integration tests.
#![allow(dead_code)]

use fillcurve::bipoly::{parse_bipoly, BiPoly, Var};
use fillcurve::geom::extend;
use fillcurve::gf::{factor, FieldElement, FieldSpec, UniPoly};
use fillcurve::search::{census, CensusOptions, CensusReport};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub type Check = Result<(), String>;

/// Runner with a fixed seed so every run sees the same cases.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Check
where
    S::Value: std::fmt::Debug,
{
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

/// Every field up to 81 elements, including the two-step towers.
pub fn small_fields() -> Vec<FieldSpec> {
    let mut out: Vec<FieldSpec> = [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81]
        .iter()
        .map(|&q| FieldSpec::from_order(q).unwrap())
        .collect();
    out.push(FieldSpec::from_order(4).unwrap().extension(2).unwrap());
    out.push(FieldSpec::from_order(9).unwrap().extension(2).unwrap());
    out.push(FieldSpec::from_order(4).unwrap().extension(3).unwrap());
    out.push(FieldSpec::parse("p=3,e=2,mod=[2,2,1]").unwrap());
    out
}

fn element(field: &FieldSpec) -> impl Strategy<Value = FieldElement> + Clone {
    let f = field.clone();
    (0..field.order().unwrap()).prop_map(move |i| f.from_index(i))
}

pub fn bipoly(field: &FieldSpec, a_max: usize, b_max: usize) -> impl Strategy<Value = BiPoly> {
    let f = field.clone();
    let order = field.order().unwrap();
    (0..=a_max, 0..=b_max).prop_flat_map(move |(a, b)| {
        let f = f.clone();
        prop::collection::vec(0..order, (a + 1) * (b + 1))
            .prop_map(move |ix| BiPoly::from_fn(&f, a, b, |i, j| f.from_index(ix[i * (b + 1) + j])))
    })
}

pub fn field_axioms() -> Check {
    for field in small_fields() {
        let e = element(&field);
        let f = field.clone();
        run(64, (e.clone(), e.clone(), e), move |(x, y, z)| {
            prop_assert_eq!(f.add(&x, &y), f.add(&y, &x));
            prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
            prop_assert_eq!(f.add(&f.add(&x, &y), &z), f.add(&x, &f.add(&y, &z)));
            prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
            prop_assert_eq!(
                f.mul(&x, &f.add(&y, &z)),
                f.add(&f.mul(&x, &y), &f.mul(&x, &z))
            );
            prop_assert!(f.add(&x, &f.neg(&x)).is_zero());
            prop_assert_eq!(f.sub(&x, &y), f.add(&x, &f.neg(&y)));
            prop_assert_eq!(f.mul(&x, &f.one()), x.clone());
            match f.inv(&x) {
                Some(i) => prop_assert!(f.is_one(&f.mul(&x, &i))),
                None => prop_assert!(x.is_zero()),
            }
            Ok(())
        })
        .map_err(|m| format!("{field}: {m}"))?;
    }
    Ok(())
}

/// `x -> x^p` respects sums and products, and `x^q = x` has exactly `q`
/// solutions in `GF(q^m)`.
pub fn frobenius_properties() -> Check {
    for field in small_fields() {
        let p = field.characteristic() as u64;
        let e = element(&field);
        let f = field.clone();
        run(32, (e.clone(), e), move |(x, y)| {
            prop_assert_eq!(
                f.frobenius(&f.add(&x, &y), p),
                f.add(&f.frobenius(&x, p), &f.frobenius(&y, p))
            );
            prop_assert_eq!(
                f.frobenius(&f.mul(&x, &y), p),
                f.mul(&f.frobenius(&x, p), &f.frobenius(&y, p))
            );
            Ok(())
        })
        .map_err(|m| format!("{field}: {m}"))?;
    }
    let pairs = [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 2),
        (3, 3),
        (3, 4),
        (4, 2),
        (4, 3),
        (4, 4),
        (5, 2),
        (5, 3),
        (7, 2),
        (9, 2),
    ];
    for (q, m) in pairs {
        let big = extend(&FieldSpec::from_order(q).unwrap(), m).map_err(|e| e.to_string())?;
        let fixed = big.elements().filter(|x| &big.frobenius(x, q) == x).count() as u64;
        if fixed != q {
            return Err(format!("GF({q}^{m}): {fixed} fixed points of x^{q}"));
        }
    }
    Ok(())
}

/// `X0*F_X0 + X1*F_X1 = (a mod p)*F`, and likewise in `Y`. When `p | a`
/// the left side is the zero polynomial.
pub fn euler_identities() -> Check {
    for q in [2u64, 3, 4, 5, 9] {
        let field = FieldSpec::from_order(q).unwrap();
        let f = field.clone();
        let strategy =
            bipoly(&field, 6, 6).prop_filter("positive degrees", |p| p.a() > 0 && p.b() > 0);
        run(48, strategy, move |poly| {
            let one = f.one();
            let var = |i, j, k, l| BiPoly::monomial(&f, i, j, k, l, one.clone());
            let (x0, x1, y0, y1) = (
                var(1, 0, 0, 0),
                var(1, 0, 1, 0),
                var(0, 1, 0, 0),
                var(0, 1, 0, 1),
            );
            let lhs_x = x0
                .mul(&poly.partial(Var::X0))
                .unwrap()
                .add(&x1.mul(&poly.partial(Var::X1)).unwrap())
                .unwrap();
            let lhs_y = y0
                .mul(&poly.partial(Var::Y0))
                .unwrap()
                .add(&y1.mul(&poly.partial(Var::Y1)).unwrap())
                .unwrap();
            prop_assert_eq!(&lhs_x, &poly.scale(&f.from_int(poly.a() as i64)));
            prop_assert_eq!(&lhs_y, &poly.scale(&f.from_int(poly.b() as i64)));
            if poly.a() as u64 % f.characteristic() as u64 == 0 {
                prop_assert!(lhs_x.is_zero());
            }
            Ok(())
        })
        .map_err(|m| format!("GF({q}): {m}"))?;
    }
    Ok(())
}

/// Printing then parsing, and JSON out then in, give back the polynomial.
pub fn parse_print_round_trips() -> Check {
    for field in [2u64, 3, 4, 9, 25, 27]
        .map(|q| FieldSpec::from_order(q).unwrap())
        .into_iter()
        .chain([FieldSpec::from_order(9).unwrap().extension(2).unwrap()])
    {
        let f = field.clone();
        run(
            48,
            bipoly(&field, 5, 5).prop_filter("nonzero", |p| !p.is_zero()),
            move |poly| {
                let text = poly.to_text();
                let back = parse_bipoly(&text, &f)
                    .map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
                prop_assert_eq!(&back, &poly);
                prop_assert_eq!(back.to_text(), text);
                let json = BiPoly::from_json(&poly.to_json())
                    .map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert_eq!(&json, &poly);
                Ok(())
            },
        )
        .map_err(|m| format!("{field}: {m}"))?;
    }
    Ok(())
}

/// 200 random polynomials of degree at most 12 over each of GF(2), GF(3),
/// GF(4): the factors are monic irreducible and multiply back exactly.
pub fn factorization_remultiplies() -> Check {
    for q in [2u64, 3, 4] {
        let field = FieldSpec::from_order(q).unwrap();
        let f = field.clone();
        let coeffs = prop::collection::vec(0..q, 1..=13);
        run(200, coeffs, move |ix| {
            let poly = UniPoly::new(&f, ix.iter().map(|&i| f.from_index(i)).collect());
            prop_assume!(!poly.is_zero());
            let fac = factor(&poly).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(fac.expand(&f), poly.clone());
            for (g, m) in &fac.factors {
                prop_assert!(*m >= 1);
                prop_assert!(g.is_monic() && g.degree().unwrap() >= 1 && g.is_irreducible());
            }
            Ok(())
        })
        .map_err(|m| format!("GF({q}): {m}"))?;
    }
    Ok(())
}

fn totals(r: &CensusReport) -> impl PartialEq + std::fmt::Debug {
    (
        r.candidates_scanned,
        r.n_irreducible,
        r.n_reducible,
        r.n_unknown,
        r.n_smooth,
        r.n_method_a,
        r.n_method_b,
        r.exemplars.clone(),
        r.basis.clone(),
    )
}

/// Census totals with 1, 2 and 4 partitions (and as many workers) agree.
pub fn census_partition_independence() -> Check {
    for (q, a, b) in [(2u64, 4, 3), (2, 3, 3), (3, 4, 3)] {
        let field = FieldSpec::from_order(q).unwrap();
        let reports: Vec<CensusReport> = [1usize, 2, 4]
            .iter()
            .map(|&n| {
                let opts = CensusOptions {
                    jobs: n,
                    partitions: n,
                    smooth: true,
                    ..CensusOptions::default()
                };
                census(&field, a, b, &opts).map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?;
        for r in &reports[1..] {
            if totals(r) != totals(&reports[0]) {
                return Err(format!(
                    "q={q} ({a},{b}): partitions {} differ from 1",
                    r.partitions
                ));
            }
        }
    }
    Ok(())
}
