//! Path metric on the 1-skeleton: distances, balls, spheres, downward
//! links, diameter, 3-convexity, and the sweep over downward links.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::complex::{Complex, Simplex, Subcomplex, VertexId};
use crate::error::{Error, Result};
use crate::largeness::{enumerate_induced_cycles, is_k_large, is_locally_k_large};
use crate::location::is_m_located;
use crate::par;
use crate::verdict::{Verdict, Witness};

pub const DEFAULT_RADIUS_LIMIT: usize = 3;

/// Breadth-first distances from `source`; `None` marks unreachable vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceField {
    pub source: VertexId,
    dist: Vec<Option<usize>>,
}

impl DistanceField {
    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.dist[v]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.dist
    }

    /// Largest finite distance.
    pub fn eccentricity(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }

    pub fn sphere_set(&self, n: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.dist.len());
        s.extend((0..self.dist.len()).filter(|&v| self.dist[v] == Some(n)));
        s
    }

    pub fn ball_set(&self, n: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.dist.len());
        s.extend((0..self.dist.len()).filter(|&v| self.dist[v].is_some_and(|d| d <= n)));
        s
    }

    /// The common distance of all vertices of `s`, if there is one.
    pub fn level_of(&self, s: &[VertexId]) -> Option<usize> {
        let d = self.dist[*s.first()?]?;
        s.iter().all(|&v| self.dist[v] == Some(d)).then_some(d)
    }
}

pub fn distances(complex: &Complex, x: VertexId) -> Result<DistanceField> {
    complex.check_vertex(x)?;
    let mut dist = vec![None; complex.vertex_count()];
    dist[x] = Some(0);
    let mut frontier = vec![x];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for u in frontier {
            for w in complex.neighbours(u).ones() {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(DistanceField { source: x, dist })
}

/// Induced subcomplex on the vertices at distance ≤ n from x.
pub fn ball(complex: &Complex, x: VertexId, n: usize) -> Result<Subcomplex> {
    Ok(complex.induced_on(&distances(complex, x)?.ball_set(n)))
}

/// Induced subcomplex on the vertices at distance exactly n from x.
pub fn sphere(complex: &Complex, x: VertexId, n: usize) -> Result<Subcomplex> {
    Ok(complex.induced_on(&distances(complex, x)?.sphere_set(n)))
}

/// K(σ): the part of the link of σ in the sphere one step closer to the
/// basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownwardLink {
    pub base: Simplex,
    /// The radius n of the sphere containing σ.
    pub level: usize,
    pub link: Subcomplex,
}

impl DownwardLink {
    pub fn is_empty(&self) -> bool {
        self.link.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.link.ambient
    }
}

pub fn downward_link(complex: &Complex, x: VertexId, sigma: &Simplex) -> Result<DownwardLink> {
    let field = distances(complex, x)?;
    downward_link_in(complex, &field, sigma)
}

/// As [`downward_link`] with precomputed distances.
pub fn downward_link_in(
    complex: &Complex,
    field: &DistanceField,
    sigma: &Simplex,
) -> Result<DownwardLink> {
    let level = field
        .level_of(sigma.vertices())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::MixedDistances {
            basepoint: field.source,
            simplex: sigma.vertices().to_vec(),
        })?;
    let link = complex.link(sigma)?;
    let below: Vec<VertexId> = (0..link.vertex_count())
        .filter(|&i| field.get(link.ambient[i]) == Some(level - 1))
        .collect();
    let mut set = link.complex.empty_set();
    set.extend(below);
    let inner = link.complex.induced_on(&set);
    let ambient = inner.ambient.iter().map(|&i| link.ambient[i]).collect();
    Ok(DownwardLink {
        base: sigma.clone(),
        level,
        link: Subcomplex { complex: inner.complex, ambient },
    })
}

/// Largest pairwise distance; errors on disconnected complexes.
pub fn diameter(complex: &Complex) -> Result<usize> {
    match diameter_witness(complex) {
        Ok((d, _)) => Ok(d),
        Err(_) => Err(Error::Disconnected),
    }
}

/// Diameter with a pair realising it, or a pair in different components.
fn diameter_witness(complex: &Complex) -> std::result::Result<(usize, [VertexId; 2]), [VertexId; 2]> {
    let n = complex.vertex_count();
    let rows = par::map_range(n, |x| {
        let f = distances(complex, x).expect("vertex in range");
        match (0..n).find(|&v| f.get(v).is_none()) {
            Some(v) => Err([x, v]),
            None => {
                let (d, v) = (0..n).map(|v| (f.get(v).unwrap(), v)).max_by_key(|&(d, v)| (d, std::cmp::Reverse(v))).unwrap_or((0, x));
                Ok((d, [x, v]))
            }
        }
    });
    let mut best = (0, [0, 0]);
    for r in rows {
        let (d, pair) = r?;
        if d > best.0 {
            best = (d, pair);
        }
    }
    Ok(best)
}

/// Passes iff for all a, c in the set at distance 2 in `ambient`, every
/// common neighbour of a and c is in the set; fails with a path a–b–c.
pub fn is_3_convex(ambient: &Complex, set: &FixedBitSet) -> Verdict {
    let members: Vec<VertexId> = set.ones().filter(|&v| v < ambient.vertex_count()).collect();
    for (i, &a) in members.iter().enumerate() {
        for &c in &members[i + 1..] {
            if ambient.adjacent(a, c) {
                continue;
            }
            let mut mids = ambient.neighbours(a).clone();
            mids.intersect_with(ambient.neighbours(c));
            mids.difference_with(set);
            if let Some(b) = mids.ones().next() {
                return Verdict::fail(Witness::ThreeConvex { a, b, c });
            }
        }
    }
    Verdict::Pass
}

fn assertion(name: &str, vertices: Vec<VertexId>, detail: Option<Witness>) -> Witness {
    Witness::Assertion { name: name.to_string(), vertices, detail: detail.map(Box::new) }
}

/// Passes iff K has diameter ≤ 2, is 5-large, and every induced 5-cycle has
/// a vertex adjacent to all five of its vertices. A failure is an
/// assertion named `diameter`, `five_large`, or `five_cycles_bound_wheels`.
pub fn check_small_ball_hypotheses(k: &Complex) -> Verdict {
    match diameter_witness(k) {
        Err(pair) => {
            return Verdict::fail(assertion(
                "diameter",
                vec![],
                Some(Witness::Diameter { diameter: None, pair }),
            ))
        }
        Ok((d, pair)) if d > 2 => {
            return Verdict::fail(assertion(
                "diameter",
                vec![],
                Some(Witness::Diameter { diameter: Some(d), pair }),
            ))
        }
        Ok(_) => {}
    }
    match is_k_large(k, 5).expect("k = 5 is valid") {
        Verdict::Pass => {}
        Verdict::Fail { witness } => {
            return Verdict::fail(assertion("five_large", vec![], Some(witness)))
        }
    }
    let cycles = enumerate_induced_cycles(k, 5, 5).expect("valid range");
    for c in cycles {
        if k.common_neighbours(c.vertices()).is_clear() {
            return Verdict::fail(assertion(
                "five_cycles_bound_wheels",
                vec![],
                Some(Witness::UnconedCycle { vertices: c.vertices().to_vec() }),
            ));
        }
    }
    Verdict::Pass
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedVerdict {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl NamedVerdict {
    pub fn new(name: &str, verdict: Verdict) -> Self {
        NamedVerdict { name: name.to_string(), verdict }
    }
}

/// The hypotheses under which the downward-link statements are claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub flag: Verdict,
    pub locally_5_large: Verdict,
    pub located_7: Verdict,
}

impl Hypotheses {
    pub fn evaluate(complex: &Complex) -> Self {
        Hypotheses {
            flag: crate::complex::is_flag(complex),
            locally_5_large: is_locally_k_large(complex, 5).expect("k = 5 is valid"),
            located_7: is_m_located(complex, 7).expect("m = 7 is valid"),
        }
    }

    pub fn hold(&self) -> bool {
        self.flag.is_pass() && self.locally_5_large.is_pass() && self.located_7.is_pass()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DownwardLinkEntry {
    pub n: usize,
    pub simplex: Vec<VertexId>,
    pub downward_link: Vec<VertexId>,
    pub checks: Vec<NamedVerdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepStatus {
    /// Every assertion holds.
    AllHold,
    /// Hypotheses hold but an assertion fails.
    Violated,
    /// Hypotheses fail, and so does some assertion; nothing is claimed.
    Gated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DownwardLinkReport {
    pub basepoint: VertexId,
    pub radius_limit: usize,
    pub hypotheses: Hypotheses,
    pub status: SweepStatus,
    pub entries: Vec<DownwardLinkEntry>,
}

impl DownwardLinkReport {
    /// Pass iff every assertion holds; otherwise the first failing one.
    pub fn verdict(&self) -> Verdict {
        for e in &self.entries {
            for c in &e.checks {
                if let Verdict::Fail { witness } = &c.verdict {
                    return Verdict::fail(assertion(
                        &format!("n={} {}", e.n, c.name),
                        e.simplex.clone(),
                        Some(witness.clone()),
                    ));
                }
            }
        }
        Verdict::Pass
    }
}

/// Sweeps every simplex σ of every sphere S_n(x), 0 < n ≤ radius_limit:
/// K(σ) is nonempty; for σ = {v}, K(v) satisfies the small-ball hypotheses
/// and both parts of the pair condition below; for larger σ, K(σ) is
/// 3-convex in K(v) for each v in σ.
///
/// Pair condition on vertices v1, v2 of K(v): adjacent ones have
/// intersecting K(v1), K(v2); non-adjacent ones have a common neighbour v'
/// in K(v) and an edge v1'v2' with v1' in K(v1v') and v2' in K(v2v').
///
/// The hypotheses (flag, locally 5-large, 7-located) are evaluated and
/// reported, not enforced.
pub fn check_downward_link_propositions(
    complex: &Complex,
    x: VertexId,
    radius_limit: usize,
) -> Result<DownwardLinkReport> {
    let field = distances(complex, x)?;
    let hypotheses = Hypotheses::evaluate(complex);
    let mut jobs: Vec<(usize, Simplex)> = Vec::new();
    for n in 1..=radius_limit.min(field.eccentricity()) {
        let s = complex.induced_on(&field.sphere_set(n));
        for group in s.complex.faces() {
            jobs.extend(group.iter().map(|f| (n, s.lift(f))));
        }
    }
    jobs.sort();
    let entries = par::map(&jobs, |(n, sigma)| sweep_entry(complex, &field, *n, sigma));
    let all_hold = entries.iter().all(|e| e.checks.iter().all(|c| c.verdict.is_pass()));
    let status = match (all_hold, hypotheses.hold()) {
        (true, _) => SweepStatus::AllHold,
        (false, true) => SweepStatus::Violated,
        (false, false) => SweepStatus::Gated,
    };
    Ok(DownwardLinkReport { basepoint: x, radius_limit, hypotheses, status, entries })
}

fn down(complex: &Complex, field: &DistanceField, vs: &[VertexId]) -> DownwardLink {
    let s = Simplex::new(vs.iter().copied()).expect("nonempty");
    downward_link_in(complex, field, &s).expect("simplex lies in one sphere")
}

fn sweep_entry(complex: &Complex, field: &DistanceField, n: usize, sigma: &Simplex) -> DownwardLinkEntry {
    let k_sigma = down(complex, field, sigma.vertices());
    let mut checks = Vec::new();
    checks.push(NamedVerdict::new(
        "nonempty",
        if k_sigma.is_empty() {
            Verdict::fail(assertion("empty_downward_link", sigma.vertices().to_vec(), None))
        } else {
            Verdict::Pass
        },
    ));
    if sigma.len() == 1 {
        let kv = &k_sigma.link;
        let small = if kv.is_empty() {
            Verdict::Pass
        } else {
            check_small_ball_hypotheses(&kv.complex).map_vertices(&|i| kv.ambient[i])
        };
        checks.push(NamedVerdict::new("small_ball_hypotheses", small));
        let (adjacent, separated) = pair_conditions(complex, field, kv);
        checks.push(NamedVerdict::new("adjacent_pairs", adjacent));
        checks.push(NamedVerdict::new("separated_pairs", separated));
    } else {
        let mut convex = Verdict::Pass;
        for &v in sigma.vertices() {
            let kv = down(complex, field, &[v]).link;
            let mut set = kv.complex.empty_set();
            set.extend(k_sigma.vertices().iter().filter_map(|&a| kv.to_local(a)));
            let verdict = is_3_convex(&kv.complex, &set);
            if !verdict.is_pass() {
                convex = Verdict::fail(assertion(
                    "three_convex",
                    vec![v],
                    verdict.witness().cloned().map(|w| w.map_vertices(&|i| kv.ambient[i])),
                ));
                break;
            }
        }
        checks.push(NamedVerdict::new("three_convex", convex));
    }
    DownwardLinkEntry {
        n,
        simplex: sigma.vertices().to_vec(),
        downward_link: k_sigma.vertices().to_vec(),
        checks,
    }
}

fn pair_conditions(complex: &Complex, field: &DistanceField, kv: &Subcomplex) -> (Verdict, Verdict) {
    let verts = &kv.ambient;
    let mut adjacent = Verdict::Pass;
    let mut separated = Verdict::Pass;
    for (i, &v1) in verts.iter().enumerate() {
        for &v2 in &verts[i + 1..] {
            if complex.adjacent(v1, v2) {
                if !adjacent.is_pass() {
                    continue;
                }
                let a = down(complex, field, &[v1]);
                let b = down(complex, field, &[v2]);
                let meet = a.vertices().iter().any(|u| b.vertices().contains(u));
                if !meet {
                    adjacent = Verdict::fail(assertion("downward_links_meet", vec![v1, v2], None));
                }
            } else if separated.is_pass() && !separated_pair_ok(complex, field, kv, v1, v2) {
                separated = Verdict::fail(assertion("bridged_common_neighbour", vec![v1, v2], None));
            }
        }
    }
    (adjacent, separated)
}

fn separated_pair_ok(
    complex: &Complex,
    field: &DistanceField,
    kv: &Subcomplex,
    v1: VertexId,
    v2: VertexId,
) -> bool {
    kv.ambient.iter().any(|&vp| {
        if !complex.adjacent(vp, v1) || !complex.adjacent(vp, v2) {
            return false;
        }
        let k1 = down(complex, field, &[v1, vp]);
        let k2 = down(complex, field, &[v2, vp]);
        k1.vertices()
            .iter()
            .any(|&a| k2.vertices().iter().any(|&b| a != b && complex.adjacent(a, b)))
    })
}
