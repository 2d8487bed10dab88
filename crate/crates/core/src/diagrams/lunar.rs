use serde::Serialize;

use super::curvature::{audit_diagram_5large, audit_hl_valences, exposed_candidates};
use super::DiscDiagram;
use crate::complex::VertexId;
use crate::error::{Error, Result};
use crate::metric::distances;
use crate::verdict::{Verdict, Witness};

fn lunar_fail(condition: &str, vertices: Vec<VertexId>) -> Verdict {
    Verdict::fail(Witness::Lunar { condition: condition.to_string(), vertices })
}

/// The two boundary arcs from x to v, each listed from x.
fn arcs(diagram: &DiscDiagram, x: VertexId, v: VertexId) -> Result<[Vec<VertexId>; 2]> {
    let b = diagram.boundary();
    let pos = |u: VertexId| {
        b.iter()
            .position(|&w| w == u)
            .ok_or_else(|| Error::Precondition(format!("vertex {u} is not on the boundary")))
    };
    let (i, j) = (pos(x)?, pos(v)?);
    if i == j {
        return Err(Error::Precondition("x and v coincide".into()));
    }
    let l = b.len();
    let forward: Vec<VertexId> = (0..=(j + l - i) % l).map(|k| b[(i + k) % l]).collect();
    let backward: Vec<VertexId> = (0..=(i + l - j) % l).map(|k| b[(i + l - k) % l]).collect();
    Ok([forward, backward])
}

/// Passes iff both boundary arcs between x and v are geodesics of the
/// diagram's 1-skeleton. Adjacent x, v never pass.
pub fn is_lunar(diagram: &DiscDiagram, x: VertexId, v: VertexId) -> Result<Verdict> {
    let arcs = arcs(diagram, x, v)?;
    let d = distances(diagram.complex(), x)?.get(v).expect("discs are connected");
    for arc in arcs {
        if arc.len() - 1 != d {
            return Ok(lunar_fail("arc_not_geodesic", arc));
        }
    }
    Ok(Verdict::Pass)
}

/// The interior valence-5 vertex adjacent to both boundary neighbours of
/// `u`, if any.
pub fn find_u_exposed(diagram: &DiscDiagram, u: VertexId) -> Result<Option<VertexId>> {
    if !diagram.is_boundary(u) {
        return Err(Error::Precondition(format!("vertex {u} is not on the boundary")));
    }
    if !audit_diagram_5large(diagram).is_pass() {
        return Err(Error::Precondition("diagram is not 5-large".into()));
    }
    match exposed_candidates(diagram, u).as_slice() {
        [] => Ok(None),
        [w] => Ok(Some(*w)),
        many => Err(Error::Invariant(format!("vertices {many:?} are all {u}-exposed"))),
    }
}

/// Which alternative holds at the tip v of a lunar diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "conclusion", rename_all = "snake_case")]
pub enum LunarConclusion {
    /// v1 ~ v2 and `common` is a common neighbour one step closer to x.
    Adjacent { v1: VertexId, v2: VertexId, common: VertexId },
    /// `exposed` is a v-exposed neighbour of v whose other two neighbours
    /// `lower` are one step closer to x.
    Exposed { exposed: VertexId, lower: [VertexId; 2] },
    Neither,
}

/// Decides the dichotomy for a lunar diagram between x and v that passes
/// the valence and 5-largeness audits.
pub fn lunar_conclusion(diagram: &DiscDiagram, x: VertexId, v: VertexId) -> Result<LunarConclusion> {
    if !is_lunar(diagram, x, v)?.is_pass() {
        return Err(Error::Precondition("diagram is not lunar between x and v".into()));
    }
    if !audit_hl_valences(diagram).is_pass() {
        return Err(Error::Precondition("diagram fails the interior valence audit".into()));
    }
    if !audit_diagram_5large(diagram).is_pass() {
        return Err(Error::Precondition("diagram is not 5-large".into()));
    }
    let c = diagram.complex();
    let d = distances(c, x)?;
    let dist = |u: VertexId| d.get(u).expect("discs are connected");
    let [v1, v2] = diagram.boundary_neighbours(v).expect("v on the boundary");
    let n = dist(v);
    if c.adjacent(v1, v2) && n >= 2 {
        if let Some(w) = c.common_neighbours(&[v1, v2]).ones().find(|&w| dist(w) + 2 == n) {
            return Ok(LunarConclusion::Adjacent { v1, v2, common: w });
        }
    }
    for vp in exposed_candidates(diagram, v) {
        if !c.adjacent(vp, v) {
            continue;
        }
        let others: Vec<VertexId> =
            c.neighbours(vp).ones().filter(|&w| w != v && w != v1 && w != v2).collect();
        if let [a, b] = others[..] {
            if dist(a) + 1 == dist(vp) && dist(b) + 1 == dist(vp) {
                return Ok(LunarConclusion::Exposed { exposed: vp, lower: [a, b] });
            }
        }
    }
    Ok(LunarConclusion::Neither)
}

/// Passes iff one of the two alternatives of [`LunarConclusion`] holds.
pub fn check_lunar_dichotomy(diagram: &DiscDiagram, x: VertexId, v: VertexId) -> Result<Verdict> {
    Ok(match lunar_conclusion(diagram, x, v)? {
        LunarConclusion::Neither => {
            let [v1, v2] = diagram.boundary_neighbours(v).expect("v on the boundary");
            lunar_fail("neither", vec![v, v1, v2])
        }
        _ => Verdict::Pass,
    })
}

fn nice_fail(condition: u8, vertices: Vec<VertexId>) -> Verdict {
    Verdict::fail(Witness::NiceLunar { condition, vertices })
}

/// Audits a sub-disc D′ (the subcomplex of `diagram` induced on
/// `sub_vertices`, lunar between z and v) for the four conditions:
/// (1) v1 v v2 is a path in ∂D′; (2) d(·,x) − d(·,z) is constant on the
/// vertices of D′ within distance 2 of v; (3) boundary vertices of D′
/// other than z, v, v1, v2 have valence ≥ 4 in D′; (4) interior valence-5
/// vertices of D′ with ≥ 3 neighbours on ∂D′ are u-exposed in D′ for some
/// u in {z, v, v1, v2}. Distances are taken in `diagram`, whose far tip x
/// is the boundary vertex opposite v.
pub fn audit_nice_lunar(
    diagram: &DiscDiagram,
    sub_vertices: &[VertexId],
    z: VertexId,
    v: VertexId,
    v1: VertexId,
    v2: VertexId,
) -> Result<Verdict> {
    let b = diagram.boundary();
    let l = b.len();
    let iv = b
        .iter()
        .position(|&w| w == v)
        .ok_or_else(|| Error::Precondition(format!("vertex {v} is not on the boundary")))?;
    if !l.is_multiple_of(2) {
        return Err(Error::Precondition("diagram is not lunar".into()));
    }
    let x = b[(iv + l / 2) % l];
    if !is_lunar(diagram, x, v)?.is_pass() {
        return Err(Error::Precondition("diagram is not lunar".into()));
    }
    let mut tips = diagram.boundary_neighbours(v).expect("v on the boundary");
    tips.sort_unstable();
    let mut given = [v1, v2];
    given.sort_unstable();
    if tips != given {
        return Err(Error::Precondition("v1, v2 are not the boundary neighbours of v".into()));
    }
    let c = diagram.complex();
    for &u in sub_vertices.iter().chain([&z, &v]) {
        c.check_vertex(u)?;
    }
    let sub = c.induced_subcomplex(sub_vertices)?;
    let local = |u: VertexId| {
        sub.to_local(u).ok_or_else(|| Error::Precondition(format!("vertex {u} is not in the subdiagram")))
    };
    let dp = DiscDiagram::new(sub.complex.clone())?;
    let (zl, vl) = (local(z)?, local(v)?);
    if !is_lunar(&dp, zl, vl)?.is_pass() {
        return Err(Error::Precondition("subdiagram is not lunar between z and v".into()));
    }
    let amb = |u: VertexId| sub.ambient[u];

    let path_ok = match (sub.to_local(v1), sub.to_local(v2)) {
        (Some(a), Some(bb)) => {
            let mut nb = dp.boundary_neighbours(vl).expect("v on the boundary");
            nb.sort_unstable();
            let mut want = [a, bb];
            want.sort_unstable();
            nb == want
        }
        _ => false,
    };
    if !path_ok {
        return Ok(nice_fail(1, vec![v1, v, v2]));
    }

    let dx = distances(c, x)?;
    let dz = distances(c, z)?;
    let dv = distances(c, v)?;
    let near: Vec<VertexId> = sub.ambient.iter().copied().filter(|&w| dv.get(w).is_some_and(|d| d <= 2)).collect();
    let offset = |w: VertexId| dx.get(w).unwrap() as i64 - dz.get(w).unwrap() as i64;
    if let Some(&w) = near.iter().find(|&&w| offset(w) != offset(v)) {
        return Ok(nice_fail(2, vec![v, w]));
    }

    let exempt = [z, v, v1, v2];
    for &w in dp.boundary() {
        if !exempt.contains(&amb(w)) && dp.valence(w) < 4 {
            return Ok(nice_fail(3, vec![amb(w)]));
        }
    }

    let exempt_local: Vec<VertexId> = exempt.iter().map(|&u| local(u)).collect::<Result<_>>()?;
    for w in dp.interior_vertices() {
        if dp.valence(w) != 5 {
            continue;
        }
        let on_boundary = dp.complex().neighbours(w).ones().filter(|&u| dp.is_boundary(u)).count();
        if on_boundary < 3 {
            continue;
        }
        let exposed = exempt_local.iter().any(|&u| {
            let [a, bb] = dp.boundary_neighbours(u).expect("on the boundary");
            dp.complex().adjacent(w, a) && dp.complex().adjacent(w, bb)
        });
        if !exposed {
            return Ok(nice_fail(4, vec![amb(w)]));
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::fixtures::{strip, wheel};

    /// Pentagonal wheel (hub 0, ring 1..=5) with an extra triangle 3 4 6.
    fn capped_wheel() -> DiscDiagram {
        let mut tris: Vec<[VertexId; 3]> = (1..=5).map(|i| [0, i, i % 5 + 1]).collect();
        tris.push([3, 4, 6]);
        DiscDiagram::from_triangles(7, &tris).unwrap()
    }

    fn condition(v: Verdict) -> Option<u8> {
        match v.witness() {
            Some(Witness::NiceLunar { condition, .. }) => Some(*condition),
            _ => None,
        }
    }

    #[test]
    fn lunar_examples() {
        let w6 = wheel(6);
        assert!(!is_lunar(&w6, 1, 4).unwrap().is_pass());
        let t = DiscDiagram::from_triangles(3, &[[0, 1, 2]]).unwrap();
        assert!(!is_lunar(&t, 0, 1).unwrap().is_pass());
        // Two triangles: far corners 0 and 3 are at distance 2.
        let s1 = strip(1);
        assert!(is_lunar(&s1, 0, 3).unwrap().is_pass());
        assert!(!is_lunar(&s1, 1, 2).unwrap().is_pass());
        for n in 1..5 {
            assert!(is_lunar(&strip(n), 0, 2 * n + 1).unwrap().is_pass());
        }
        assert!(is_lunar(&w6, 0, 1).is_err());
        assert!(is_lunar(&w6, 1, 1).is_err());
    }

    #[test]
    fn exposed_vertices() {
        assert_eq!(find_u_exposed(&wheel(5), 1).unwrap(), Some(0));
        assert_eq!(find_u_exposed(&strip(3), 0).unwrap(), None);
        assert!(find_u_exposed(&wheel(5), 0).is_err());
        // 6 and 8 both have valence 5 and see the boundary neighbours 3, 5
        // of 4; they span the 4-cycle 3 6 5 8.
        let two = DiscDiagram::from_triangles(
            9,
            &[
                [0, 1, 2], [0, 2, 5], [2, 3, 6], [2, 5, 6], [3, 4, 8],
                [3, 6, 7], [3, 7, 8], [4, 5, 8], [5, 6, 8], [6, 7, 8],
            ],
        )
        .unwrap();
        assert_eq!(crate::diagrams::curvature::exposed_candidates(&two, 4), vec![6, 8]);
        assert!(matches!(find_u_exposed(&two, 4), Err(Error::Precondition(_))));
        assert!(find_u_exposed(&wheel(4), 1).is_err());
    }

    #[test]
    fn dichotomy_examples() {
        let s1 = strip(1);
        assert_eq!(
            lunar_conclusion(&s1, 0, 3).unwrap(),
            LunarConclusion::Adjacent { v1: 1, v2: 2, common: 0 }
        );
        let cw = capped_wheel();
        assert!(is_lunar(&cw, 6, 1).unwrap().is_pass());
        assert_eq!(
            lunar_conclusion(&cw, 6, 1).unwrap(),
            LunarConclusion::Exposed { exposed: 0, lower: [3, 4] }
        );
        assert!(check_lunar_dichotomy(&strip(4), 0, 9).unwrap().is_pass());
        assert!(check_lunar_dichotomy(&wheel(6), 1, 4).is_err());
    }

    #[test]
    fn nice_lunar_audit() {
        let s1 = strip(1);
        assert!(audit_nice_lunar(&s1, &[0, 1, 2, 3], 0, 3, 1, 2).unwrap().is_pass());
        let s2 = strip(2);
        let all: Vec<VertexId> = (0..6).collect();
        assert_eq!(condition(audit_nice_lunar(&s2, &all, 0, 5, 2, 4).unwrap()), Some(3));
        // Sub-strip on the last two triangles, lunar between 1 and 5.
        let v = audit_nice_lunar(&s2, &[1, 2, 4, 5], 1, 5, 2, 4).unwrap();
        assert!(v.is_pass(), "{v:?}");
        let cw = capped_wheel();
        let all: Vec<VertexId> = (0..7).collect();
        assert!(audit_nice_lunar(&cw, &all, 6, 1, 2, 5).unwrap().is_pass());
        assert!(audit_nice_lunar(&cw, &all, 6, 1, 2, 4).is_err());
    }
}
