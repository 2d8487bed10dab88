use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::DiscDiagram;
use crate::complex::VertexId;
use crate::largeness::is_k_large;
use crate::verdict::{ValenceViolation, Verdict, Witness};

/// 6 − valence at interior vertices, 4 − valence on the boundary.
pub fn kappa(diagram: &DiscDiagram) -> Vec<i64> {
    diagram
        .complex()
        .vertices()
        .map(|v| {
            let base = if diagram.is_boundary(v) { 4 } else { 6 };
            base - diagram.valence(v) as i64
        })
        .collect()
}

/// Passes iff Σκ = 6.
pub fn gauss_bonnet_check(diagram: &DiscDiagram) -> Verdict {
    let sum: i64 = kappa(diagram).iter().sum();
    if sum == 6 {
        Verdict::Pass
    } else {
        Verdict::fail(Witness::CurvatureSum { sum: sum.to_string() })
    }
}

/// Passes iff no interior vertex has valence 3 or 4 and no two adjacent
/// interior vertices have valences 5 and 5, or 5 and 6. Lists every
/// violation.
pub fn audit_hl_valences(diagram: &DiscDiagram) -> Verdict {
    let mut violations = Vec::new();
    let interior: Vec<VertexId> = diagram.interior_vertices().collect();
    for &v in &interior {
        let k = diagram.valence(v);
        if k == 3 || k == 4 {
            violations.push(ValenceViolation {
                kind: format!("interior_valence_{k}"),
                vertices: vec![v],
            });
        }
    }
    for &v in &interior {
        for w in diagram.complex().neighbours(v).ones().filter(|&w| w > v) {
            if diagram.is_boundary(w) {
                continue;
            }
            let mut pair = [diagram.valence(v), diagram.valence(w)];
            pair.sort_unstable();
            if pair == [5, 5] || pair == [5, 6] {
                violations.push(ValenceViolation {
                    kind: format!("adjacent_{}_{}", pair[0], pair[1]),
                    vertices: vec![v, w],
                });
            }
        }
    }
    if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::fail(Witness::Valence { violations })
    }
}

pub fn audit_diagram_5large(diagram: &DiscDiagram) -> Verdict {
    is_k_large(diagram.complex(), 5).expect("k = 5 is valid")
}

/// The vertices x, v, v1, v2 of a lunar diagram, under which the bounds
/// on κ′ are asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExposureContext {
    pub x: VertexId,
    pub v: VertexId,
    pub v1: VertexId,
    pub v2: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureViolation {
    pub vertex: VertexId,
    /// "low_valence_neighbour": an interior valence-5 vertex with an
    /// interior neighbour of valence below 7; "bound": κ′ exceeds its bound
    /// under the exposure context.
    pub kind: String,
    #[serde(serialize_with = "ratio_str")]
    pub value: Ratio<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub kappa: Vec<i64>,
    #[serde(serialize_with = "ratios_str")]
    pub kappa_prime: Vec<Ratio<i64>>,
    pub sum_kappa: i64,
    #[serde(serialize_with = "ratio_str")]
    pub sum_kappa_prime: Ratio<i64>,
    pub violations: Vec<CurvatureViolation>,
}

impl CurvatureReport {
    pub fn sums_hold(&self) -> bool {
        self.sum_kappa == 6 && self.sum_kappa_prime == Ratio::from_integer(6)
    }
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ratios_str<S: Serializer>(rs: &[Ratio<i64>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(|r| r.to_string()))
}

/// κ after discharging: every interior valence-5 vertex passes 1/3 to each
/// interior neighbour of valence ≥ 7. When no interior valence-5 vertex
/// has an interior neighbour of valence 5 or 6, the valence-5 vertices
/// lose N/3 for N their interior neighbours, as in the lunar argument.
pub fn kappa_prime(diagram: &DiscDiagram, context: Option<ExposureContext>) -> CurvatureReport {
    let k = kappa(diagram);
    let third = Ratio::new(1, 3);
    let mut kp: Vec<Ratio<i64>> = k.iter().map(|&x| Ratio::from_integer(x)).collect();
    let mut violations = Vec::new();
    let interior = |v: VertexId| !diagram.is_boundary(v);
    for v in diagram.interior_vertices() {
        if diagram.valence(v) != 5 {
            continue;
        }
        let mut low = false;
        for w in diagram.complex().neighbours(v).ones().filter(|&w| interior(w)) {
            if diagram.valence(w) >= 7 {
                kp[v] -= third;
                kp[w] += third;
            } else {
                low = true;
            }
        }
        if low {
            violations.push(CurvatureViolation {
                vertex: v,
                kind: "low_valence_neighbour".into(),
                value: kp[v],
            });
        }
    }
    if let Some(ctx) = context {
        let exposed: Vec<VertexId> = [ctx.x, ctx.v, ctx.v1, ctx.v2]
            .iter()
            .filter_map(|&u| exposed_candidates(diagram, u).first().copied())
            .collect();
        for v in diagram.complex().vertices() {
            let bound = if v == ctx.x || v == ctx.v {
                2
            } else if v == ctx.v1 || v == ctx.v2 || exposed.contains(&v) {
                1
            } else {
                0
            };
            if kp[v] > Ratio::from_integer(bound) {
                violations.push(CurvatureViolation { vertex: v, kind: "bound".into(), value: kp[v] });
            }
        }
    }
    let sum_kappa = k.iter().sum();
    let sum_kappa_prime = kp.iter().sum();
    CurvatureReport { kappa: k, kappa_prime: kp, sum_kappa, sum_kappa_prime, violations }
}

/// Interior valence-5 vertices adjacent to both boundary neighbours of u.
pub(crate) fn exposed_candidates(diagram: &DiscDiagram, u: VertexId) -> Vec<VertexId> {
    let Some([a, b]) = diagram.boundary_neighbours(u) else {
        return Vec::new();
    };
    diagram
        .complex()
        .common_neighbours(&[a, b])
        .ones()
        .filter(|&w| !diagram.is_boundary(w) && diagram.valence(w) == 5)
        .collect()
}
