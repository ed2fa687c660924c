use fillcurve::analysis::{certify_smooth, Verdict};
use fillcurve::families::{construct, Orientation};
use fillcurve::filling::{is_filling, min_bidegree_check, Diagnostic};
use fillcurve::gf::FieldSpec;
use fillcurve::search::{
    basis_coordinates, candidate_rank, census, filling_space_basis, min_bidegree_scan, CellStatus,
    CensusOptions,
};

/// Kernel dimension by counting: over GF(q) the univariate evaluation map of
/// degree-n forms at the q+1 rational points has rank min(n+1, q+1), and the
/// Kronecker product of the two maps has the product rank.
fn expected_dimension(q: usize, a: usize, b: usize) -> usize {
    (a + 1) * (b + 1) - (a + 1).min(q + 1) * (b + 1).min(q + 1)
}

#[test]
fn kernel_dimensions() {
    for (q, a, b) in [
        (2, 3, 3),
        (2, 4, 3),
        (2, 2, 5),
        (3, 4, 4),
        (3, 5, 2),
        (4, 5, 5),
    ] {
        let field = FieldSpec::from_order(q as u64).unwrap();
        let basis = filling_space_basis(&field, a, b);
        assert_eq!(basis.len(), expected_dimension(q, a, b), "q={q} ({a},{b})");
        for p in &basis {
            assert!(is_filling(p).unwrap());
        }
    }
}

/// Golden value from `fillcurve census --q 2 --bidegree 4,3 --smooth`.
#[test]
fn census_q2_43() {
    let field = FieldSpec::from_order(2).unwrap();
    let opts = CensusOptions {
        smooth: true,
        ..CensusOptions::default()
    };
    let r = census(&field, 4, 3, &opts).unwrap();
    assert_eq!(r.space_dimension, 11);
    assert_eq!(r.candidates_scanned, 2047);
    assert_eq!(r.n_irreducible, 66);
    assert_eq!(r.n_unknown, 0);
    assert_eq!(r.n_smooth, Some(66));
    assert_eq!(r.n_singular_irreducible, Some(0));

    let c = construct(2, Orientation::Standard).unwrap();
    let basis = filling_space_basis(&field, 4, 3);
    assert!(basis_coordinates(&basis, &c).is_some());
    let rank = candidate_rank(&c).unwrap();
    assert!(rank < r.candidates_scanned);
}

/// Golden value from `fillcurve census --q 3 --bidegree 4,4`.
#[test]
fn census_q3_44() {
    let field = FieldSpec::from_order(3).unwrap();
    let r = census(&field, 4, 4, &CensusOptions::default()).unwrap();
    assert_eq!(r.space_dimension, 9);
    assert_eq!(r.candidates_scanned, 9841);
    assert_eq!(r.n_irreducible, 264);
    assert_eq!(r.n_unknown, 0);
    let c = construct(3, Orientation::Standard).unwrap();
    assert!(basis_coordinates(&filling_space_basis(&field, 4, 4), &c).is_some());
}

#[test]
fn census_refuses_over_budget() {
    let field = FieldSpec::from_order(2).unwrap();
    let opts = CensusOptions {
        budget: 100,
        ..CensusOptions::default()
    };
    assert!(census(&field, 3, 3, &opts).is_err());
}

/// The degree shortcut agrees with enumeration where both run.
#[test]
fn degree_shortcut_matches_brute_force() {
    let field = FieldSpec::from_order(2).unwrap();
    let quick = min_bidegree_scan(&field, 4, 4, false);
    let brute = min_bidegree_scan(&field, 4, 4, true);
    for cell in &quick.cells {
        let other = brute.cell(cell.a, cell.b).unwrap();
        assert_eq!(cell.status, other.status, "({},{})", cell.a, cell.b);
        if cell.a <= 2 || cell.b <= 2 {
            assert_eq!(cell.reason, "degree");
            assert_eq!(other.reason, "search");
        }
    }
    // monotone in each coordinate
    for cell in quick
        .cells
        .iter()
        .filter(|c| c.status == CellStatus::Exists)
    {
        for (da, db) in [(1, 0), (0, 1)] {
            if let Some(next) = quick.cell(cell.a + da, cell.b + db) {
                assert_eq!(next.status, CellStatus::Exists);
            }
        }
    }
}

/// Irreducible (4,3) candidates are smooth and never trip the degree check.
#[test]
fn q2_43_irreducibles_are_consistent() {
    let field = FieldSpec::from_order(2).unwrap();
    let opts = CensusOptions {
        max_exemplars: usize::MAX,
        ..CensusOptions::default()
    };
    let r = census(&field, 4, 3, &opts).unwrap();
    assert_eq!(r.exemplars.len(), 66);
    for (_, text) in &r.exemplars {
        let p = fillcurve::bipoly::parse_bipoly(text, &field).unwrap();
        assert_eq!(certify_smooth(&p).verdict, Verdict::Smooth);
        assert_eq!(min_bidegree_check(&p, true), Diagnostic::Consistent);
    }
    let c = construct(2, Orientation::Standard).unwrap();
    assert!(r.exemplars.iter().any(|(_, t)| *t == c.to_text()));
}
