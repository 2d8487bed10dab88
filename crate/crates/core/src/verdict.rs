//! Outcomes of checks. A failing check carries a concrete witness in the
//! vertex ids of the complex that was checked.

use serde::Serialize;

use crate::complex::VertexId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: Witness },
}

impl Verdict {
    pub fn fail(witness: Witness) -> Self {
        Verdict::Fail { witness }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail { witness } => Some(witness),
        }
    }

    /// Translates the witness through `f`, e.g. from link ids to ambient ids.
    pub fn map_vertices(self, f: &impl Fn(VertexId) -> VertexId) -> Self {
        match self {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail { witness } => Verdict::Fail { witness: witness.map_vertices(f) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelJson {
    pub centre: VertexId,
    pub boundary: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValenceViolation {
    /// "interior_valence_3", "interior_valence_4", "adjacent_5_5" or
    /// "adjacent_5_6".
    pub kind: String,
    pub vertices: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Pairwise adjacent vertices spanning no simplex; every proper subset
    /// does span one.
    NonFlag { vertices: Vec<VertexId> },
    InducedCycle { vertices: Vec<VertexId> },
    /// A failure inside the link of `vertex`, already in ambient ids.
    VertexLink { vertex: VertexId, inner: Box<Witness> },
    Dwheel {
        w1: WheelJson,
        w2: WheelJson,
        planar: bool,
        boundary_cycle: Vec<VertexId>,
        /// Vertices adjacent to all of W1 ∪ W2 (empty for a witness).
        common_neighbours: Vec<VertexId>,
    },
    /// `diameter` is `None` when the pair lies in different components.
    Diameter { diameter: Option<usize>, pair: [VertexId; 2] },
    /// An induced 5-cycle with no vertex adjacent to all of it.
    UnconedCycle { vertices: Vec<VertexId> },
    /// A path a–b–c with a, c at distance 2 inside the set and b outside.
    ThreeConvex { a: VertexId, b: VertexId, c: VertexId },
    Disc { condition: String, vertices: Vec<VertexId> },
    /// Two triangles sharing an edge with the same image.
    FoldedPair { first: [VertexId; 3], second: [VertexId; 3], image: [VertexId; 3] },
    Valence { violations: Vec<ValenceViolation> },
    CurvatureSum { sum: String },
    Lunar { condition: String, vertices: Vec<VertexId> },
    NiceLunar { condition: u8, vertices: Vec<VertexId> },
    /// A named assertion of a multi-step audit.
    Assertion {
        name: String,
        vertices: Vec<VertexId>,
        #[serde(skip_serializing_if = "Option::is_none")]
        detail: Option<Box<Witness>>,
    },
}

impl Witness {
    pub fn map_vertices(self, f: &impl Fn(VertexId) -> VertexId) -> Witness {
        let m = |v: Vec<VertexId>| v.into_iter().map(f).collect::<Vec<_>>();
        match self {
            Witness::NonFlag { vertices } => Witness::NonFlag { vertices: m(vertices) },
            Witness::InducedCycle { vertices } => Witness::InducedCycle { vertices: m(vertices) },
            Witness::VertexLink { vertex, inner } => Witness::VertexLink {
                vertex: f(vertex),
                inner: Box::new(inner.map_vertices(f)),
            },
            Witness::Dwheel { w1, w2, planar, boundary_cycle, common_neighbours } => {
                Witness::Dwheel {
                    w1: WheelJson { centre: f(w1.centre), boundary: m(w1.boundary) },
                    w2: WheelJson { centre: f(w2.centre), boundary: m(w2.boundary) },
                    planar,
                    boundary_cycle: m(boundary_cycle),
                    common_neighbours: m(common_neighbours),
                }
            }
            Witness::Diameter { diameter, pair } => {
                Witness::Diameter { diameter, pair: [f(pair[0]), f(pair[1])] }
            }
            Witness::UnconedCycle { vertices } => Witness::UnconedCycle { vertices: m(vertices) },
            Witness::ThreeConvex { a, b, c } => Witness::ThreeConvex { a: f(a), b: f(b), c: f(c) },
            Witness::Disc { condition, vertices } => {
                Witness::Disc { condition, vertices: m(vertices) }
            }
            Witness::FoldedPair { first, second, image } => Witness::FoldedPair {
                first: first.map(f),
                second: second.map(f),
                image,
            },
            Witness::Valence { violations } => Witness::Valence {
                violations: violations
                    .into_iter()
                    .map(|v| ValenceViolation { kind: v.kind, vertices: m(v.vertices) })
                    .collect(),
            },
            Witness::CurvatureSum { sum } => Witness::CurvatureSum { sum },
            Witness::Lunar { condition, vertices } => {
                Witness::Lunar { condition, vertices: m(vertices) }
            }
            Witness::NiceLunar { condition, vertices } => {
                Witness::NiceLunar { condition, vertices: m(vertices) }
            }
            Witness::Assertion { name, vertices, detail } => Witness::Assertion {
                name,
                vertices: m(vertices),
                detail: detail.map(|d| Box::new(d.map_vertices(f))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_cycle_json_shape() {
        let v = Verdict::fail(Witness::InducedCycle { vertices: vec![0, 1, 2, 3] });
        assert_eq!(
            serde_json::to_string(v.witness().unwrap()).unwrap(),
            r#"{"type":"induced_cycle","vertices":[0,1,2,3]}"#
        );
        assert_eq!(serde_json::to_string(&Verdict::Pass).unwrap(), r#"{"verdict":"pass"}"#);
    }

    #[test]
    fn map_vertices_reaches_nested_witnesses() {
        let w = Witness::VertexLink {
            vertex: 0,
            inner: Box::new(Witness::InducedCycle { vertices: vec![0, 1, 2, 3] }),
        };
        let lifted = w.map_vertices(&|v| v + 10);
        assert_eq!(
            lifted,
            Witness::VertexLink {
                vertex: 10,
                inner: Box::new(Witness::InducedCycle { vertices: vec![10, 11, 12, 13] }),
            }
        );
    }
}
