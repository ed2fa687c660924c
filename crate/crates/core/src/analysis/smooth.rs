//! Exact smoothness certificate by resultant elimination, chart by chart.

use rayon::prelude::*;
use serde::Serialize;

use crate::bipoly::{resultant_elim, AffinePoly, AffineVar, BiPoly, Chart};
use crate::geom::{lift, PointPair, ProjPoint};
use crate::gf::{factor, roots, Embedding, FieldElement, FieldSpec, UniPoly};

/// Names of the five members of the system, in order.
pub const MEMBER_NAMES: [&str; 5] = ["F", "F_X0", "F_X1", "F_Y0", "F_Y1"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Smooth,
    Singular,
    Inconclusive,
}

/// A common zero of the system located by its coordinates' minimal data.
///
/// The chart variable other than `eliminated` is a root `theta` of
/// `modulus`; the eliminated variable is then any root of `gcd`, a monic
/// polynomial over `E = GF(q)[t]/(modulus)`. A zero `gcd` means the whole
/// fiber through `theta` is singular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub chart: Chart,
    pub eliminated: AffineVar,
    pub modulus: UniPoly,
    pub gcd: UniPoly,
    /// Degree over `GF(q)` of the smallest field holding such a point.
    pub point_degree: usize,
    /// False when `point_degree` is only a lower bound.
    pub point_degree_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub chart: Chart,
    pub eliminated: AffineVar,
    /// Members whose resultant was used, if any pair had a nonzero one.
    pub pair: Option<[&'static str; 2]>,
    pub resultant_degree: Option<usize>,
    /// Degree of the polynomial whose roots were examined.
    pub candidate_degree: Option<usize>,
    pub factors: usize,
    pub outcome: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub trace: Vec<TraceEntry>,
}

enum ChartOutcome {
    Clean,
    Singular(Witness),
    Undecided,
}

fn substitute(member: &AffinePoly, v: AffineVar, ext: &FieldSpec, theta: &FieldElement) -> UniPoly {
    let parts = member.coefficients_in(v);
    let same = member.field() == ext;
    let vals = parts
        .iter()
        .map(|p| {
            let mut acc = ext.zero();
            for c in p.coeffs().iter().rev() {
                let c = if same { c.clone() } else { ext.lift(c) };
                acc = ext.add(&ext.mul(&acc, theta), &c);
            }
            acc
        })
        .collect();
    UniPoly::new(ext, vals)
}

/// Field generated by a root of the monic irreducible `m`, and that root.
fn root_field(m: &UniPoly) -> (FieldSpec, FieldElement) {
    let field = m.field();
    if m.degree() == Some(1) {
        return (field.clone(), field.neg(&m.coeff(0)));
    }
    let ext = FieldSpec::with_modulus_unchecked(field, m.coeffs().to_vec())
        .expect("tower height at most two");
    let theta = ext.from_base_coeffs(&[field.zero(), field.one()]);
    (ext, theta)
}

fn examine(
    chart: Chart,
    members: &[(usize, AffinePoly)],
    v: AffineVar,
    trace: &mut Vec<TraceEntry>,
) -> ChartOutcome {
    let mut entry = TraceEntry {
        chart,
        eliminated: v,
        pair: None,
        resultant_degree: None,
        candidate_degree: None,
        factors: 0,
        outcome: "",
    };
    let mut h: Option<UniPoly> = None;
    let mut positive = Vec::new();
    for (k, m) in members {
        if m.degree_in(v) == Some(0) {
            let c = m.coefficients_in(v).swap_remove(0);
            h = Some(match h {
                None => c.monic(),
                Some(prev) => prev.gcd(&c),
            });
        } else {
            positive.push((*k, m));
        }
    }
    let mut best: Option<(usize, usize, UniPoly)> = None;
    if h.as_ref().map_or(true, |h| !h.is_constant()) {
        for i in 0..positive.len() {
            for j in i + 1..positive.len() {
                let r = resultant_elim(positive[i].1, positive[j].1, v);
                if r.is_zero() {
                    continue;
                }
                if best.as_ref().map_or(true, |b| r.degree() < b.2.degree()) {
                    best = Some((positive[i].0, positive[j].0, r));
                }
            }
        }
    }
    if let Some((i, j, r)) = &best {
        entry.pair = Some([MEMBER_NAMES[*i], MEMBER_NAMES[*j]]);
        entry.resultant_degree = r.degree();
    }
    let cand = match (best.map(|b| b.2), h) {
        (Some(r), Some(h)) => r.gcd(&h),
        (Some(r), None) => r.monic(),
        (None, Some(h)) => h,
        (None, None) => {
            entry.outcome = "undecided";
            trace.push(entry);
            return ChartOutcome::Undecided;
        }
    };
    entry.candidate_degree = cand.degree();
    if cand.is_constant() {
        entry.outcome = "clean";
        trace.push(entry);
        return ChartOutcome::Clean;
    }
    let fac = factor(&cand).expect("nonzero candidate");
    entry.factors = fac.factors.len();
    for (m, _) in &fac.factors {
        let (ext, theta) = root_field(m);
        let mut g: Option<UniPoly> = None;
        for (_, member) in members {
            let s = substitute(member, v, &ext, &theta);
            if s.is_zero() {
                continue;
            }
            g = Some(match g {
                None => s.monic(),
                Some(prev) => prev.gcd(&s),
            });
        }
        let deg_m = m.degree().unwrap_or(0);
        let witness = |gcd: UniPoly, point_degree, exact| Witness {
            chart,
            eliminated: v,
            modulus: m.clone(),
            gcd,
            point_degree,
            point_degree_exact: exact,
        };
        let found = match g {
            None => Some(witness(UniPoly::zero(&ext), deg_m, true)),
            Some(g) if !g.is_constant() => Some(match ext.order() {
                Some(_) => {
                    let d = factor(&g)
                        .expect("nonzero")
                        .factors
                        .iter()
                        .filter_map(|(p, _)| p.degree())
                        .min()
                        .unwrap_or(1);
                    witness(g, deg_m * d, true)
                }
                None => witness(g, deg_m, false),
            }),
            Some(_) => None,
        };
        if let Some(w) = found {
            entry.outcome = "singular";
            trace.push(entry);
            return ChartOutcome::Singular(w);
        }
    }
    entry.outcome = "clean";
    trace.push(entry);
    ChartOutcome::Clean
}

fn certify_chart(poly: &BiPoly, chart: Chart) -> (ChartOutcome, Vec<TraceEntry>) {
    let members: Vec<(usize, AffinePoly)> = poly
        .with_partials()
        .iter()
        .enumerate()
        .map(|(k, p)| (k, p.dehomogenize(chart)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let mut trace = Vec::new();
    let constant = members
        .iter()
        .any(|(_, p)| p.degree_in(AffineVar::X) == Some(0) && p.degree_in(AffineVar::Y) == Some(0));
    if constant {
        trace.push(TraceEntry {
            chart,
            eliminated: AffineVar::Y,
            pair: None,
            resultant_degree: None,
            candidate_degree: None,
            factors: 0,
            outcome: "constant member",
        });
        return (ChartOutcome::Clean, trace);
    }
    for v in [AffineVar::Y, AffineVar::X] {
        match examine(chart, &members, v, &mut trace) {
            ChartOutcome::Undecided => continue,
            done => return (done, trace),
        }
    }
    (ChartOutcome::Undecided, trace)
}

/// Decides whether `F = F_X0 = F_X1 = F_Y0 = F_Y1 = 0` has a solution on
/// P¹×P¹ over the algebraic closure.
///
/// In each chart one variable is eliminated with the resultant of the pair of
/// members of least nonzero resultant degree; every irreducible factor of the
/// result (intersected with the members free of the eliminated variable) is
/// adjoined and the members' gcd over that field decides the fiber.
pub fn certify_smooth(poly: &BiPoly) -> SmoothCertificate {
    let results: Vec<(ChartOutcome, Vec<TraceEntry>)> = Chart::ALL
        .par_iter()
        .map(|&c| certify_chart(poly, c))
        .collect();
    let mut trace = Vec::new();
    let mut witness = None;
    let mut undecided = false;
    for (outcome, t) in results {
        trace.extend(t);
        match outcome {
            ChartOutcome::Singular(w) if witness.is_none() => witness = Some(w),
            ChartOutcome::Undecided => undecided = true,
            _ => {}
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Singular
    } else if undecided {
        Verdict::Inconclusive
    } else {
        Verdict::Smooth
    };
    SmoothCertificate {
        verdict,
        witness,
        trace,
    }
}

impl Witness {
    /// An explicit singular point over `GF(q^point_degree)`, when that degree
    /// is known and at most `max_degree`.
    pub fn point(&self, poly: &BiPoly, max_degree: usize) -> Option<PointPair> {
        if !self.point_degree_exact || self.point_degree > max_degree {
            return None;
        }
        let base = poly.field();
        let big = base.extension(self.point_degree).ok()?;
        let to_big = Embedding::new(base, &big).ok()?;
        for u0 in roots(&self.modulus, &big).ok()? {
            let v0s = if self.gcd.is_zero() {
                vec![big.zero()]
            } else {
                let ext = self.gcd.field();
                let coeffs = self
                    .gcd
                    .coeffs()
                    .iter()
                    .map(|c| {
                        let parts = if ext == base {
                            vec![c.clone()]
                        } else {
                            ext.base_coeffs(c)
                        };
                        let mut acc = big.zero();
                        for p in parts.iter().rev() {
                            acc = big.add(&big.mul(&acc, &u0), &to_big.apply(p));
                        }
                        acc
                    })
                    .collect();
                roots(&UniPoly::new(&big, coeffs), &big).ok()?
            };
            if let Some(v0) = v0s.into_iter().next() {
                let (x, y) = match self.eliminated {
                    AffineVar::Y => (u0, v0),
                    AffineVar::X => (v0, u0),
                };
                let one = big.one();
                let first = if self.chart.x_flipped() {
                    (x, one.clone())
                } else {
                    (one.clone(), x)
                };
                let second = if self.chart.y_flipped() {
                    (y, one)
                } else {
                    (one, y)
                };
                let p = PointPair::new(
                    &big,
                    ProjPoint::new(&big, first.0, first.1)?,
                    ProjPoint::new(&big, second.0, second.1)?,
                );
                return Some(p);
            }
        }
        None
    }

    /// Re-checks the witness: over `E` the gcd (or zero) divides every
    /// member after substitution, and an explicit point (when cheap to
    /// build) annihilates all five members.
    pub fn recheck(&self, poly: &BiPoly) -> bool {
        let (ext, theta) = root_field(&self.modulus);
        let members = poly.with_partials();
        let algebraic = members.iter().all(|m| {
            let s = substitute(&m.dehomogenize(self.chart), self.eliminated, &ext, &theta);
            if self.gcd.is_zero() {
                s.is_zero()
            } else {
                s.rem(&self.gcd).is_zero()
            }
        });
        if !algebraic {
            return false;
        }
        match self.point(poly, 4) {
            None => true,
            Some(p) => members
                .iter()
                .all(|m| lift(m, &p.field).map_or(false, |l| p.eval(&l).is_zero())),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "chart": self.chart,
            "eliminated": self.eliminated,
            "modulus": self.modulus.display("t"),
            "gcd": if self.gcd.is_zero() { "0".to_string() } else { self.gcd.display("s") },
            "gcd_coeffs": self.gcd.to_json(),
            "point_degree": self.point_degree,
            "point_degree_exact": self.point_degree_exact,
        })
    }
}

impl SmoothCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.verdict,
            "witness": self.witness.as_ref().map(Witness::to_json),
            "trace": self.trace,
        })
    }
}
