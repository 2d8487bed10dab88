use std::collections::BTreeSet;

use serde::Serialize;

use super::{build_spanning_contractible, dismantle, homology, Certificate};
use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::metric::{check_small_ball_hypotheses, distances, downward_link_in};
use crate::verdict::{Verdict, Witness};

/// Which layer vouched for the contractibility of a downward link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "layer", rename_all = "snake_case")]
pub enum CertificateLayer {
    /// A dismantling order: a proof of contractibility.
    Dismantling { certificate: Certificate },
    /// Small-ball hypotheses hold and the spanning construction on all
    /// vertices has every maximal simplex meeting M_n.
    SpanningConstruction { m: Simplex },
    /// Only the homology of a point; necessary, not sufficient.
    HomologyOnly { certificate: Certificate },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetractionStep {
    pub simplex: Simplex,
    pub downward_link: Vec<VertexId>,
    pub star_is_join: bool,
    pub certificate: CertificateLayer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetractionReport {
    pub basepoint: VertexId,
    pub n: usize,
    pub steps: Vec<RetractionStep>,
    /// Whether the last A_k equals the ball of radius n − 1.
    pub ends_at_ball: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

fn certify(link: &Complex) -> CertificateLayer {
    if link.is_flag_complex() || crate::complex::is_flag(link).is_pass() {
        if let Ok(Some(order)) = dismantle(link) {
            return CertificateLayer::Dismantling { certificate: Certificate::DismantleOrder(order) };
        }
        if check_small_ball_hypotheses(link).is_pass() {
            let all: Vec<VertexId> = link.vertices().collect();
            if let Ok(sc) = build_spanning_contractible(link, &all) {
                if sc.flag && sc.maximal_simplices_meet_m {
                    return CertificateLayer::SpanningConstruction { m: sc.m };
                }
            }
        }
    }
    let h = homology(link);
    if h.is_trivial() {
        CertificateLayer::HomologyOnly { certificate: Certificate::Homology(h) }
    } else {
        CertificateLayer::None
    }
}

fn all_faces(c: &Complex, ambient: &[VertexId]) -> BTreeSet<Simplex> {
    c.faces()
        .into_iter()
        .flatten()
        .map(|s| s.map(|v| ambient[v]))
        .collect()
}

/// Audits the retraction of span(A ∪ B_{n−1}(x)) onto B_{n−1}(x) by
/// removing open stars of the simplices of A in order of nonincreasing
/// dimension. At each simplex σ: its star in the current complex is the
/// join of σ with K(σ), K(σ) is nonempty and carries a contractibility
/// certificate. Finally the complex must equal B_{n−1}(x). `a` is the
/// vertex set of A, an induced subcomplex of the sphere S_n(x).
pub fn audit_ball_retraction(x_complex: &Complex, x: VertexId, n: usize, a: &[VertexId]) -> Result<RetractionReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let field = distances(x_complex, x)?;
    for &v in a {
        x_complex.check_vertex(v)?;
        if field.get(v) != Some(n) {
            return Err(Error::Precondition(format!("vertex {v} is not in the sphere of radius {n}")));
        }
    }
    let ball = field.ball_set(n - 1);
    let mut span_set = ball.clone();
    span_set.extend(a.iter().copied());
    let span = x_complex.induced_on(&span_set);
    let mut current = all_faces(&span.complex, &span.ambient);
    let mut a_set = x_complex.empty_set();
    a_set.extend(a.iter().copied());
    let a_sub = x_complex.induced_on(&a_set);
    let mut order: Vec<Simplex> = all_faces(&a_sub.complex, &a_sub.ambient).into_iter().collect();
    order.sort_by(|p, q| q.len().cmp(&p.len()).then_with(|| p.vertices().cmp(q.vertices())));

    let mut steps = Vec::new();
    let mut verdict = Verdict::Pass;
    let fail = |name: &str, s: &Simplex| {
        Verdict::fail(Witness::Assertion { name: name.into(), vertices: s.vertices().to_vec(), detail: None })
    };
    for sigma in order {
        let k = downward_link_in(x_complex, &field, &sigma)?;
        let star: BTreeSet<Simplex> = current.iter().filter(|t| sigma.is_face_of(t)).cloned().collect();
        let mut join: BTreeSet<Simplex> = all_faces(&k.link.complex, &k.link.ambient)
            .into_iter()
            .map(|r| r.union(&sigma))
            .collect();
        join.insert(sigma.clone());
        let star_is_join = star == join;
        let certificate = if k.is_empty() { CertificateLayer::None } else { certify(&k.link.complex) };
        if verdict.is_pass() {
            if !star_is_join {
                verdict = fail("star_is_join", &sigma);
            } else if k.is_empty() {
                verdict = fail("nonempty_downward_link", &sigma);
            } else if certificate == CertificateLayer::None {
                verdict = fail("contractible_downward_link", &sigma);
            }
        }
        for t in &star {
            current.remove(t);
        }
        steps.push(RetractionStep {
            simplex: sigma,
            downward_link: k.vertices().to_vec(),
            star_is_join,
            certificate,
        });
    }
    let b = x_complex.induced_on(&ball);
    let ends_at_ball = current == all_faces(&b.complex, &b.ambient);
    if verdict.is_pass() && !ends_at_ball {
        verdict = Verdict::fail(Witness::Assertion { name: "ends_at_ball".into(), vertices: vec![], detail: None });
    }
    Ok(RetractionReport { basepoint: x, n, steps, ends_at_ball, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Generator;

    fn name(v: &Verdict) -> String {
        match v.witness() {
            Some(Witness::Assertion { name, .. }) => name.clone(),
            _ => String::new(),
        }
    }

    #[test]
    fn hex_patch_retracts() {
        let p = Generator::HexPatch(2).build().unwrap();
        for n in 1..=2 {
            let f = distances(&p, 0).unwrap();
            let sphere: Vec<VertexId> = p.vertices().filter(|&v| f.get(v) == Some(n)).collect();
            let r = audit_ball_retraction(&p, 0, n, &sphere).unwrap();
            assert!(r.verdict.is_pass(), "{:?}", r.verdict);
            assert!(r.ends_at_ball);
        }
    }

    #[test]
    fn single_vertex_of_the_first_sphere() {
        let c = Generator::Icosahedron.build().unwrap();
        let v = c.neighbours(0).ones().next().unwrap();
        let r = audit_ball_retraction(&c, 0, 1, &[v]).unwrap();
        assert!(r.verdict.is_pass());
        assert_eq!(r.steps[0].downward_link, vec![0]);
    }

    #[test]
    fn hollow_pentagon_has_an_empty_downward_link() {
        let c5 = Generator::Cycle(5).build().unwrap();
        let r = audit_ball_retraction(&c5, 0, 2, &[2, 3]).unwrap();
        assert_eq!(name(&r.verdict), "nonempty_downward_link");
        assert!(audit_ball_retraction(&c5, 0, 2, &[1]).is_err());
        assert!(audit_ball_retraction(&c5, 0, 0, &[]).is_err());
    }
}
