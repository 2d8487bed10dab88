//! Triangulated discs, simplicial maps of discs into complexes, and the
//! curvature and lunar audits run on them.

mod curvature;
mod lunar;
mod peel;

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Cycle, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::verdict::{Verdict, Witness};

pub use curvature::{
    audit_diagram_5large, audit_hl_valences, gauss_bonnet_check, kappa, kappa_prime,
    CurvatureReport, CurvatureViolation, ExposureContext,
};
pub use lunar::{
    audit_nice_lunar, check_lunar_dichotomy, find_u_exposed, is_lunar, lunar_conclusion,
    LunarConclusion,
};
pub use peel::{
    assign_images, find_minimal_diagram, generate_discs, generate_rooted_discs, random_disc,
    Filling,
};

/// A simplicial complex homeomorphic to a closed disc, with its boundary
/// cycle in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscDiagram {
    complex: Complex,
    boundary: Vec<VertexId>,
    on_boundary: FixedBitSet,
}

fn disc_fail(condition: &str, vertices: Vec<VertexId>) -> Verdict {
    Verdict::fail(Witness::Disc { condition: condition.to_string(), vertices })
}

/// Edges of a pure 2-complex with the number of triangles on each.
fn edge_multiplicity(triangles: &[Simplex]) -> BTreeMap<(VertexId, VertexId), usize> {
    let mut m = BTreeMap::new();
    for t in triangles {
        let [a, b, c] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
        for e in [(a, b), (a, c), (b, c)] {
            *m.entry(e).or_insert(0) += 1;
        }
    }
    m
}

/// Walks the boundary edges from the least boundary vertex towards its
/// smaller boundary neighbour.
fn boundary_walk(edges: &[(VertexId, VertexId)], n: usize) -> std::result::Result<Vec<VertexId>, Vec<VertexId>> {
    let mut nbrs: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    if let Some(v) = (0..n).find(|&v| !nbrs[v].is_empty() && nbrs[v].len() != 2) {
        return Err(vec![v]);
    }
    let Some(start) = (0..n).find(|&v| !nbrs[v].is_empty()) else {
        return Err(vec![]);
    };
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = *nbrs[start].iter().min().unwrap();
    while cur != start {
        walk.push(cur);
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
    }
    if walk.len() != edges.len() {
        let mut seen = FixedBitSet::with_capacity(n);
        seen.extend(walk.iter().copied());
        let stray = (0..n).find(|&v| !nbrs[v].is_empty() && !seen.contains(v)).unwrap();
        return Err(vec![stray]);
    }
    Ok(walk)
}

/// Passes iff `complex` is a triangulated closed disc: pure 2-dimensional,
/// connected, each edge on at most two triangles, the edges on exactly one
/// triangle forming a single cycle, Euler characteristic 1, interior vertex
/// links cycles and boundary vertex links paths.
pub fn validate_disc(complex: &Complex) -> Verdict {
    if complex.is_empty() {
        return disc_fail("empty", vec![]);
    }
    let triangles = complex.maximal_simplices();
    if let Some(s) = triangles.iter().find(|s| s.len() != 3) {
        return disc_fail("not_pure_2d", s.vertices().to_vec());
    }
    let mult = edge_multiplicity(triangles);
    if let Some((&(a, b), _)) = mult.iter().find(|(_, &k)| k > 2) {
        return disc_fail("edge_in_three_triangles", vec![a, b]);
    }
    if !complex.is_connected() {
        return disc_fail("disconnected", vec![]);
    }
    let boundary_edges: Vec<_> = mult.iter().filter(|(_, &k)| k == 1).map(|(&e, _)| e).collect();
    let boundary = match boundary_walk(&boundary_edges, complex.vertex_count()) {
        Ok(b) => b,
        Err(vs) => return disc_fail("boundary_not_single_cycle", vs),
    };
    let (v, e, f) = (complex.vertex_count(), mult.len(), triangles.len());
    if v + f != e + 1 {
        return disc_fail("euler_characteristic", vec![]);
    }
    let mut on_boundary = FixedBitSet::with_capacity(v);
    on_boundary.extend(boundary.iter().copied());
    for x in complex.vertices() {
        let link = complex.link(&Simplex::vertex(x)).expect("vertex in range");
        let ok = link.complex.is_connected()
            && if on_boundary.contains(x) {
                link.complex.edges().len() + 1 == link.vertex_count()
            } else {
                link.complex.edges().len() == link.vertex_count()
            };
        if !ok {
            let condition = if on_boundary.contains(x) {
                "boundary_link_not_path"
            } else {
                "interior_link_not_cycle"
            };
            return disc_fail(condition, vec![x]);
        }
    }
    Verdict::Pass
}

impl DiscDiagram {
    /// Validates `complex` as a disc; the boundary starts at its least
    /// vertex and continues to the smaller of that vertex's two boundary
    /// neighbours.
    pub fn new(complex: Complex) -> Result<Self> {
        if let Verdict::Fail { witness } = validate_disc(&complex) {
            let Witness::Disc { condition, .. } = witness else { unreachable!() };
            return Err(Error::InvalidDisc(condition));
        }
        let mult = edge_multiplicity(complex.maximal_simplices());
        let edges: Vec<_> = mult.iter().filter(|(_, &k)| k == 1).map(|(&e, _)| e).collect();
        let boundary = boundary_walk(&edges, complex.vertex_count()).expect("validated");
        let mut on_boundary = FixedBitSet::with_capacity(complex.vertex_count());
        on_boundary.extend(boundary.iter().copied());
        Ok(DiscDiagram { complex, boundary, on_boundary })
    }

    /// Builds a disc from triangles on vertices 0..n.
    pub fn from_triangles(vertex_count: usize, triangles: &[[VertexId; 3]]) -> Result<Self> {
        let simplices = triangles.iter().map(|t| Simplex::new(*t)).collect::<Result<Vec<_>>>()?;
        DiscDiagram::new(Complex::from_maximal_simplices(vertex_count, simplices)?)
    }

    /// Re-reads the boundary in the given order, which must traverse the
    /// same cycle.
    pub fn with_boundary(mut self, order: Vec<VertexId>) -> Result<Self> {
        let given = Cycle::new(order.clone())?;
        let own = Cycle::new(self.boundary.clone())?;
        if given.canonical() != own.canonical() {
            return Err(Error::InvalidDisc("boundary_mismatch".into()));
        }
        self.boundary = order;
        Ok(self)
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn triangles(&self) -> &[Simplex] {
        self.complex.maximal_simplices()
    }

    pub fn area(&self) -> usize {
        self.triangles().len()
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_count()
    }

    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn boundary_cycle(&self) -> Cycle {
        Cycle::from_vec_unchecked(self.boundary.clone())
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.on_boundary.contains(v)
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.complex.vertices().filter(|&v| !self.is_boundary(v))
    }

    /// Number of edges at `v`.
    pub fn valence(&self, v: VertexId) -> usize {
        self.complex.degree(v)
    }

    /// The neighbours of boundary vertex `u` along the boundary, in
    /// boundary order (predecessor, successor).
    pub fn boundary_neighbours(&self, u: VertexId) -> Option<[VertexId; 2]> {
        let i = self.boundary.iter().position(|&b| b == u)?;
        let l = self.boundary.len();
        Some([self.boundary[(i + l - 1) % l], self.boundary[(i + 1) % l]])
    }

    /// Edges on two triangles, with those triangles.
    pub fn interior_edges(&self) -> Vec<((VertexId, VertexId), [usize; 2])> {
        let mut by_edge: BTreeMap<(VertexId, VertexId), Vec<usize>> = BTreeMap::new();
        for (i, t) in self.triangles().iter().enumerate() {
            let [a, b, c] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
            for e in [(a, b), (a, c), (b, c)] {
                by_edge.entry(e).or_default().push(i);
            }
        }
        by_edge
            .into_iter()
            .filter(|(_, ts)| ts.len() == 2)
            .map(|(e, ts)| (e, [ts[0], ts[1]]))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DiagramJson::from_diagram(self, None)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(s)?;
        if j.vertex_map.is_some() || j.target.is_some() {
            return Err(Error::Parse("expected a bare disc diagram".into()));
        }
        j.to_diagram()
    }
}

pub fn area(diagram: &DiscDiagram) -> usize {
    diagram.area()
}

/// A nondegenerate simplicial map from a disc into a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramMap {
    domain: DiscDiagram,
    target: Complex,
    vertex_map: Vec<VertexId>,
}

impl DiagramMap {
    /// Checks that every edge maps to an edge and every triangle to a
    /// triangle of `target`.
    pub fn new(domain: DiscDiagram, target: &Complex, vertex_map: Vec<VertexId>) -> Result<Self> {
        if vertex_map.len() != domain.vertex_count() {
            return Err(Error::InvalidMap("vertex_map length differs from the vertex count".into()));
        }
        for &w in &vertex_map {
            target.check_vertex(w)?;
        }
        for t in domain.triangles() {
            let img: Vec<VertexId> = t.vertices().iter().map(|&v| vertex_map[v]).collect();
            let distinct = img[0] != img[1] && img[0] != img[2] && img[1] != img[2];
            if !distinct || !target.spans_simplex(&img) {
                return Err(Error::InvalidMap(format!("triangle {t} does not map to a triangle")));
            }
        }
        Ok(DiagramMap { domain, target: target.clone(), vertex_map })
    }

    pub fn domain(&self) -> &DiscDiagram {
        &self.domain
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn vertex_map(&self) -> &[VertexId] {
        &self.vertex_map
    }

    pub fn image(&self, v: VertexId) -> VertexId {
        self.vertex_map[v]
    }

    pub fn area(&self) -> usize {
        self.domain.area()
    }

    /// The boundary cycle read in the target.
    pub fn boundary_image(&self) -> Vec<VertexId> {
        self.domain.boundary().iter().map(|&v| self.vertex_map[v]).collect()
    }

    fn triangle_image(&self, t: &Simplex) -> [VertexId; 3] {
        let mut img = [0; 3];
        for (i, &v) in t.vertices().iter().enumerate() {
            img[i] = self.vertex_map[v];
        }
        img.sort_unstable();
        img
    }

    pub fn to_json(&self, target_ref: &str) -> String {
        serde_json::to_string(&DiagramJson::from_diagram(
            &self.domain,
            Some((&self.vertex_map, target_ref)),
        ))
        .expect("serializable")
    }

    /// Parses a map; `resolve` turns the `target` reference into a complex.
    pub fn from_json(s: &str, resolve: impl FnOnce(&str) -> Result<Complex>) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(s)?;
        let (Some(vertex_map), Some(target)) = (j.vertex_map.clone(), j.target.clone()) else {
            return Err(Error::Parse("a diagram map needs vertex_map and target".into()));
        };
        let target = resolve(&target)?;
        DiagramMap::new(j.to_diagram()?, &target, vertex_map)
    }
}

/// Passes iff no two triangles sharing an edge have the same image.
pub fn is_reduced(map: &DiagramMap) -> Verdict {
    let tris = map.domain.triangles();
    for (_, [i, j]) in map.domain.interior_edges() {
        let image = map.triangle_image(&tris[i]);
        if image == map.triangle_image(&tris[j]) {
            let arr = |s: &Simplex| [s.vertices()[0], s.vertices()[1], s.vertices()[2]];
            return Verdict::fail(Witness::FoldedPair {
                first: arr(&tris[i]),
                second: arr(&tris[j]),
                image,
            });
        }
    }
    Verdict::Pass
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum DiagramTag {
    DiscDiagram,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    #[serde(rename = "type")]
    tag: DiagramTag,
    triangles: Vec<[VertexId; 3]>,
    boundary: Vec<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_map: Option<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target: Option<String>,
}

impl DiagramJson {
    fn from_diagram(d: &DiscDiagram, map: Option<(&[VertexId], &str)>) -> Self {
        DiagramJson {
            tag: DiagramTag::DiscDiagram,
            triangles: d
                .triangles()
                .iter()
                .map(|t| [t.vertices()[0], t.vertices()[1], t.vertices()[2]])
                .collect(),
            boundary: d.boundary.clone(),
            vertex_map: map.map(|(m, _)| m.to_vec()),
            target: map.map(|(_, t)| t.to_string()),
        }
    }

    fn to_diagram(&self) -> Result<DiscDiagram> {
        let n = self.triangles.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        DiscDiagram::from_triangles(n, &self.triangles)?.with_boundary(self.boundary.clone())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Cone with apex 0 over the cycle 1..=k.
    pub fn wheel(k: usize) -> DiscDiagram {
        let tris: Vec<[VertexId; 3]> = (1..=k).map(|i| [0, i, i % k + 1]).collect();
        DiscDiagram::from_triangles(k + 1, &tris).unwrap()
    }

    /// Strip of 2n triangles on bottom b_i = i and top t_i = n + 1 + i.
    pub fn strip(n: usize) -> DiscDiagram {
        let t = |i: usize| n + 1 + i;
        let mut tris = Vec::new();
        for i in 0..n {
            tris.push([i, i + 1, t(i)]);
            tris.push([i + 1, t(i), t(i + 1)]);
        }
        DiscDiagram::from_triangles(2 * n + 2, &tris).unwrap()
    }
}
