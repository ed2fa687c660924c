//! Exhaustive censuses of filling polynomials of fixed bi-degree.

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    certify_smooth, find_gf_factor, irreducible_method_b, method_b_cost, IrrMethod, Verdict,
    DEFAULT_FACTOR_BUDGET,
};
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::filling::{is_filling, order_of};
use crate::geom::enum_p1;
use crate::gf::{FieldElement, FieldSpec};
use crate::proj::{proj_count, proj_rank, proj_unrank};

/// Default cap on the number of projective candidates in one census.
pub const DEFAULT_CENSUS_BUDGET: u128 = 10_000_000;

/// Row-reduces `rows` in place; returns the pivot column of each nonzero row.
fn rref(field: &FieldSpec, rows: &mut Vec<Vec<FieldElement>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&k, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the filling polynomials of bi-degree `(a, b)` over `field`.
///
/// The kernel of the evaluation matrix at all rational points, one vector per
/// free column of its reduced row echelon form: basis vector `k` has a 1 at
/// the `k`-th free coefficient slot and 0 at the other free slots.
pub fn filling_space_basis(field: &FieldSpec, a: usize, b: usize) -> Vec<BiPoly> {
    let line = enum_p1(field);
    let ncols = (a + 1) * (b + 1);
    let mono = |u: &crate::geom::ProjPoint, n: usize, i: usize| {
        field.mul(
            &field.pow(&u.u0, (n - i) as u128),
            &field.pow(&u.u1, i as u128),
        )
    };
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(line.len() * line.len());
    for u in &line {
        for v in &line {
            let row = (0..ncols)
                .map(|k| field.mul(&mono(u, a, k / (b + 1)), &mono(v, b, k % (b + 1))))
                .collect();
            rows.push(row);
        }
    }
    let pivots = rref(field, &mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            BiPoly::from_coeffs(field, a, b, v).expect("shape")
        })
        .collect()
}

/// Coefficients of `poly` in `basis` (as produced by
/// [`filling_space_basis`]), if it lies in the span.
pub fn basis_coordinates(basis: &[BiPoly], poly: &BiPoly) -> Option<Vec<FieldElement>> {
    let field = poly.field();
    // the free slot of each basis vector is its last nonzero coefficient,
    // since pivot columns precede the free columns they depend on
    let free: Vec<usize> = basis
        .iter()
        .map(|p| {
            p.coeffs()
                .iter()
                .rposition(|c| !c.is_zero())
                .expect("nonzero basis vector")
        })
        .collect();
    let coords: Vec<FieldElement> = free.iter().map(|&k| poly.coeffs()[k].clone()).collect();
    (combine(field, basis, &coords, poly.a(), poly.b()) == *poly).then_some(coords)
}

fn combine(
    field: &FieldSpec,
    basis: &[BiPoly],
    coords: &[FieldElement],
    a: usize,
    b: usize,
) -> BiPoly {
    let mut acc = BiPoly::zero(field, a, b);
    for (p, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            acc = acc.add(&p.scale(c)).expect("same shape");
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Irreducible(IrrMethod),
    Reducible,
    Unknown,
}

/// Absolute irreducibility with the fallbacks used by the census. A factor
/// over `GF(q)` settles it at once; otherwise method B within `budget`, else
/// the smoothness shortcut.
pub fn classify(poly: &BiPoly, budget: u128) -> (Classification, Option<Verdict>) {
    if find_gf_factor(poly).is_some() {
        return (Classification::Reducible, None);
    }
    if method_b_cost(poly) <= budget {
        let r = irreducible_method_b(poly, budget).expect("within budget");
        let c = if r.irreducible {
            Classification::Irreducible(IrrMethod::B)
        } else {
            Classification::Reducible
        };
        return (c, None);
    }
    let verdict = certify_smooth(poly).verdict;
    let (a, b) = poly.bidegree();
    if verdict == Verdict::Smooth && a > 0 && b > 0 {
        return (Classification::Irreducible(IrrMethod::A), Some(verdict));
    }
    (Classification::Unknown, Some(verdict))
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Worker threads (0 lets the pool decide).
    pub jobs: usize,
    /// Number of contiguous rank ranges; totals never depend on it.
    pub partitions: usize,
    /// Also certify smoothness of every candidate.
    pub smooth: bool,
    pub budget: u128,
    pub factor_budget: u128,
    pub max_exemplars: usize,
    pub seed: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            partitions: 1,
            smooth: false,
            budget: DEFAULT_CENSUS_BUDGET,
            factor_budget: DEFAULT_FACTOR_BUDGET,
            max_exemplars: 5,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    scanned: u128,
    irreducible: u128,
    reducible: u128,
    unknown: u128,
    smooth: u128,
    singular_irreducible: u128,
    by_method_a: u128,
    by_method_b: u128,
    rechecked: u128,
    exemplars: Vec<(u128, BiPoly)>,
}

impl Tally {
    fn merge(mut self, other: Tally, limit: usize) -> Tally {
        self.scanned += other.scanned;
        self.irreducible += other.irreducible;
        self.reducible += other.reducible;
        self.unknown += other.unknown;
        self.smooth += other.smooth;
        self.singular_irreducible += other.singular_irreducible;
        self.by_method_a += other.by_method_a;
        self.by_method_b += other.by_method_b;
        self.rechecked += other.rechecked;
        self.exemplars.extend(other.exemplars);
        self.exemplars.sort_by_key(|e| e.0);
        self.exemplars.truncate(limit);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub q: u64,
    pub bidegree: (usize, usize),
    pub space_dimension: usize,
    pub candidates_scanned: u128,
    pub n_irreducible: u128,
    pub n_reducible: u128,
    /// Candidates whose absolute status could not be settled.
    pub n_unknown: u128,
    /// Smooth candidates; present only when smoothness was requested.
    pub n_smooth: Option<u128>,
    /// Irreducible but not smooth; present only when smoothness was requested.
    pub n_singular_irreducible: Option<u128>,
    pub n_method_a: u128,
    pub n_method_b: u128,
    /// Candidates re-evaluated at every rational point as a spot check.
    pub filling_rechecked: u128,
    /// `(rank, polynomial text)` of the first irreducible candidates.
    pub exemplars: Vec<(u128, String)>,
    pub basis: Vec<String>,
    pub partitions: usize,
    pub jobs: usize,
    pub seed: u64,
}

fn census_range(
    field: &FieldSpec,
    basis: &[BiPoly],
    (a, b): (usize, usize),
    range: std::ops::Range<u128>,
    opts: &CensusOptions,
) -> Tally {
    let mut t = Tally::default();
    let n = basis.len();
    for r in range {
        let coords = proj_unrank(field, n, r);
        let poly = combine(field, basis, &coords, a, b);
        t.scanned += 1;
        if r % 100 == 0 {
            assert!(
                is_filling(&poly).unwrap_or(false),
                "candidate {r} is not filling"
            );
            t.rechecked += 1;
        }
        let (class, verdict) = classify(&poly, opts.factor_budget);
        let smooth = opts
            .smooth
            .then(|| verdict.unwrap_or_else(|| certify_smooth(&poly).verdict) == Verdict::Smooth);
        if smooth == Some(true) {
            t.smooth += 1;
        }
        match class {
            Classification::Irreducible(m) => {
                t.irreducible += 1;
                match m {
                    IrrMethod::A => t.by_method_a += 1,
                    IrrMethod::B => t.by_method_b += 1,
                }
                if smooth == Some(false) {
                    t.singular_irreducible += 1;
                }
                if t.exemplars.len() < opts.max_exemplars {
                    t.exemplars.push((r, poly));
                }
            }
            Classification::Reducible => t.reducible += 1,
            Classification::Unknown => t.unknown += 1,
        }
    }
    t
}

/// Classifies every filling polynomial of bi-degree `(a, b)` up to scalars.
pub fn census(field: &FieldSpec, a: usize, b: usize, opts: &CensusOptions) -> Result<CensusReport> {
    let q = order_of(field) as u64;
    let basis = filling_space_basis(field, a, b);
    let total = proj_count(q, basis.len());
    if total > opts.budget {
        return Err(Error::Infeasible {
            needed: total,
            budget: opts.budget,
        });
    }
    let parts = opts.partitions.max(1) as u128;
    let ranges: Vec<std::ops::Range<u128>> = (0..parts)
        .map(|k| (total * k / parts)..(total * (k + 1) / parts))
        .collect();
    let run = || {
        ranges
            .par_iter()
            .map(|r| census_range(field, &basis, (a, b), r.clone(), opts))
            .collect::<Vec<Tally>>()
    };
    let tallies = if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::BadParameters(e.to_string()))?
            .install(run)
    };
    let t = tallies
        .into_iter()
        .fold(Tally::default(), |acc, x| acc.merge(x, opts.max_exemplars));
    Ok(CensusReport {
        q,
        bidegree: (a, b),
        space_dimension: basis.len(),
        candidates_scanned: t.scanned,
        n_irreducible: t.irreducible,
        n_reducible: t.reducible,
        n_unknown: t.unknown,
        n_smooth: opts.smooth.then_some(t.smooth),
        n_singular_irreducible: opts.smooth.then_some(t.singular_irreducible),
        n_method_a: t.by_method_a,
        n_method_b: t.by_method_b,
        filling_rechecked: t.rechecked,
        exemplars: t.exemplars.iter().map(|(r, p)| (*r, p.to_text())).collect(),
        basis: basis.iter().map(BiPoly::to_text).collect(),
        partitions: parts as usize,
        jobs: opts.jobs,
        seed: opts.seed,
    })
}

/// Rank of `poly` among the census candidates for its bi-degree (after
/// scaling its leading basis coordinate to 1), if it is filling.
pub fn candidate_rank(poly: &BiPoly) -> Option<u128> {
    let field = poly.field();
    let basis = filling_space_basis(field, poly.a(), poly.b());
    let coords = basis_coordinates(&basis, poly)?;
    let lead = coords.iter().find(|c| !c.is_zero())?;
    let inv = field.inv(lead)?;
    let normal: Vec<FieldElement> = coords.iter().map(|c| field.mul(c, &inv)).collect();
    proj_rank(field, &normal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CellStatus {
    /// An absolutely irreducible filling polynomial exists.
    Exists,
    /// None exists.
    Empty,
    /// The search could not settle every candidate.
    Unknown,
    /// Too many candidates.
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanCell {
    pub a: usize,
    pub b: usize,
    pub status: CellStatus,
    /// `"degree"` when settled by `a <= q` or `b <= q`, else `"search"`.
    pub reason: &'static str,
    pub candidates: u128,
    /// Candidates examined before the answer was known.
    pub examined: u128,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanTable {
    pub q: u64,
    pub max: (usize, usize),
    pub cells: Vec<ScanCell>,
}

impl ScanTable {
    pub fn cell(&self, a: usize, b: usize) -> Option<&ScanCell> {
        self.cells.iter().find(|c| c.a == a && c.b == b)
    }
}

/// Searches one cell, stopping at the first irreducible candidate.
pub fn scan_cell(
    field: &FieldSpec,
    a: usize,
    b: usize,
    budget: u128,
    factor_budget: u128,
) -> ScanCell {
    let basis = filling_space_basis(field, a, b);
    let q = order_of(field) as u64;
    let total = proj_count(q, basis.len());
    let mut cell = ScanCell {
        a,
        b,
        status: CellStatus::Empty,
        reason: "search",
        candidates: total,
        examined: 0,
        witness: None,
    };
    if total > budget {
        cell.status = CellStatus::Infeasible;
        return cell;
    }
    let mut unknown = false;
    for r in 0..total {
        cell.examined += 1;
        let poly = combine(field, &basis, &proj_unrank(field, basis.len(), r), a, b);
        let (class, _) = classify(&poly, factor_budget);
        match class {
            Classification::Irreducible(_) => {
                cell.status = CellStatus::Exists;
                cell.witness = Some(poly.to_text());
                return cell;
            }
            Classification::Reducible => {}
            Classification::Unknown => unknown = true,
        }
    }
    if unknown {
        cell.status = CellStatus::Unknown;
    }
    cell
}

/// Existence of absolutely irreducible filling polynomials for every
/// bi-degree up to `(a_max, b_max)`. Cells with `a <= q` or `b <= q` are
/// empty by the degree lemma unless `brute_small` asks for a search.
pub fn min_bidegree_scan(
    field: &FieldSpec,
    a_max: usize,
    b_max: usize,
    brute_small: bool,
) -> ScanTable {
    let q = order_of(field);
    let coords: Vec<(usize, usize)> = (0..=a_max)
        .flat_map(|a| (0..=b_max).map(move |b| (a, b)))
        .collect();
    let cells = coords
        .par_iter()
        .map(|&(a, b)| {
            if (a <= q || b <= q) && !brute_small {
                return ScanCell {
                    a,
                    b,
                    status: CellStatus::Empty,
                    reason: "degree",
                    candidates: 0,
                    examined: 0,
                    witness: None,
                };
            }
            if (a, b) == (0, 0) {
                return ScanCell {
                    a,
                    b,
                    status: CellStatus::Empty,
                    reason: "search",
                    candidates: 0,
                    examined: 0,
                    witness: None,
                };
            }
            scan_cell(field, a, b, DEFAULT_CENSUS_BUDGET, DEFAULT_FACTOR_BUDGET)
        })
        .collect();
    ScanTable {
        q: q as u64,
        max: (a_max, b_max),
        cells,
    }
}
