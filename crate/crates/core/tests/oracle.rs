//! The resultant certificate against brute-force singular points.

use fillcurve::analysis::{certify_smooth, singular_points, Verdict};
use fillcurve::bipoly::BiPoly;
use fillcurve::gf::{Embedding, FieldSpec};
use fillcurve::search::filling_space_basis;

fn every_filling(a: usize, b: usize) -> Vec<BiPoly> {
    let field = FieldSpec::from_order(2).unwrap();
    let basis = filling_space_basis(&field, a, b);
    (1u32..1 << basis.len())
        .map(|mask| {
            (0..basis.len())
                .filter(|k| mask >> k & 1 == 1)
                .fold(BiPoly::zero(&field, a, b), |acc, k| {
                    acc.add(&basis[k]).unwrap()
                })
        })
        .collect()
}

fn agree(poly: &BiPoly) {
    let cert = certify_smooth(poly);
    let oracle = singular_points(poly, 2).unwrap();
    let found = oracle.iter().any(|l| !l.points.is_empty());
    match cert.verdict {
        Verdict::Smooth => assert!(!found, "{}: Smooth but oracle finds points", poly.to_text()),
        Verdict::Singular => {
            let w = cert.witness.as_ref().unwrap();
            assert!(w.recheck(poly));
            if w.point_degree_exact && w.point_degree <= 2 {
                assert!(
                    found,
                    "{}: low-degree witness but oracle empty",
                    poly.to_text()
                );
                let p = w.point(poly, 2).unwrap();
                let up = Embedding::new(poly.field(), &p.field).unwrap();
                for g in poly.with_partials() {
                    assert!(p.eval(&g.map_field(&up)).is_zero());
                }
            }
        }
        Verdict::Inconclusive => {}
    }
}

#[test]
fn q2_33_space() {
    for p in every_filling(3, 3) {
        agree(&p);
    }
}

#[test]
fn q2_43_space() {
    for p in every_filling(4, 3) {
        agree(&p);
    }
}
