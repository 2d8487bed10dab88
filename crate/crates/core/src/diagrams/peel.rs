//! Disc enumeration and minimal fillings by peeling.
//!
//! A disc with boundary 0..L is grown inward: the first edge (p0, p1) of
//! the current region polygon receives its triangle, whose third vertex is
//! either a fresh interior vertex or another polygon vertex pj, which
//! splits the region in two. Fresh vertices are numbered in creation order,
//! so every disc with labelled boundary arises from exactly one sequence of
//! choices.

use std::collections::HashSet;

use rand::Rng;

use super::{is_reduced, DiagramMap, DiscDiagram};
use crate::complex::{Complex, Cycle, VertexId};
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Debug)]
struct State {
    /// Unfilled regions; the last one is peeled next.
    polys: Vec<Vec<VertexId>>,
    triangles: Vec<[VertexId; 3]>,
    edges: HashSet<(VertexId, VertexId)>,
    /// Images in the target; empty when there is none.
    images: Vec<VertexId>,
    vertex_count: usize,
    /// Σ (|polygon| − 2): triangles still needed without fresh vertices.
    pending: usize,
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Split(usize),
    Fresh(Option<VertexId>),
}

fn key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

impl State {
    fn initial(boundary_len: usize, images: Vec<VertexId>) -> Self {
        let edges = (0..boundary_len).map(|i| key(i, (i + 1) % boundary_len)).collect();
        State {
            polys: vec![(0..boundary_len).collect()],
            triangles: Vec::new(),
            edges,
            images,
            vertex_count: boundary_len,
            pending: boundary_len - 2,
        }
    }

    fn lower_bound(&self) -> usize {
        self.triangles.len() + self.pending
    }

    fn moves(&self, target: Option<&Complex>) -> Vec<Move> {
        let poly = self.polys.last().expect("unfinished state");
        let (p0, p1, m) = (poly[0], poly[1], poly.len());
        let mut out = Vec::new();
        for (j, &c) in poly.iter().enumerate().skip(2) {
            if (j != 2 && self.edges.contains(&key(p1, c)))
                || (j != m - 1 && self.edges.contains(&key(p0, c)))
            {
                continue;
            }
            if let Some(t) = target {
                let img = [self.images[p0], self.images[p1], self.images[c]];
                if img[2] == img[0] || img[2] == img[1] || !t.spans_simplex(&img) {
                    continue;
                }
            }
            out.push(Move::Split(j));
        }
        match target {
            None => out.push(Move::Fresh(None)),
            Some(t) => {
                let (a, b) = (self.images[p0], self.images[p1]);
                for w in t.common_neighbours(&[a, b]).ones() {
                    if t.spans_simplex(&[a, b, w]) {
                        out.push(Move::Fresh(Some(w)));
                    }
                }
            }
        }
        out
    }

    fn apply(&self, mv: Move) -> State {
        let mut st = self.clone();
        let poly = st.polys.pop().expect("unfinished state");
        let (p0, p1, m) = (poly[0], poly[1], poly.len());
        st.pending -= m - 2;
        match mv {
            Move::Split(j) => {
                let c = poly[j];
                st.triangles.push([p0, p1, c]);
                st.edges.insert(key(p0, c));
                st.edges.insert(key(p1, c));
                let mut tail = poly[j..].to_vec();
                tail.push(p0);
                let head = poly[1..=j].to_vec();
                for piece in [tail, head] {
                    if piece.len() >= 3 {
                        st.pending += piece.len() - 2;
                        st.polys.push(piece);
                    }
                }
            }
            Move::Fresh(image) => {
                let q = st.vertex_count;
                st.vertex_count += 1;
                if let Some(w) = image {
                    st.images.push(w);
                }
                st.triangles.push([p0, p1, q]);
                st.edges.insert(key(p0, q));
                st.edges.insert(key(p1, q));
                let mut grown = Vec::with_capacity(m + 1);
                grown.push(p0);
                grown.push(q);
                grown.extend_from_slice(&poly[1..]);
                st.pending += m - 1;
                st.polys.push(grown);
            }
        }
        st
    }

    fn diagram(&self) -> DiscDiagram {
        DiscDiagram::from_triangles(self.vertex_count, &self.triangles)
            .expect("peeling produces discs")
    }
}

struct Search<'a> {
    target: Option<&'a Complex>,
    area: usize,
    /// Set when some branch was cut by the area bound.
    cut: bool,
}

impl Search<'_> {
    /// Depth-first over completions of `st` with at most `area` triangles;
    /// `visit` returns true to stop.
    fn run(&mut self, st: &State, visit: &mut dyn FnMut(&State) -> bool) -> bool {
        if st.polys.is_empty() {
            return visit(st);
        }
        for mv in st.moves(self.target) {
            let next = st.apply(mv);
            if next.lower_bound() > self.area {
                self.cut = true;
                continue;
            }
            if self.run(&next, visit) {
                return true;
            }
        }
        false
    }
}

/// Every triangulated disc with boundary 0..boundary_len (in order) and
/// `area` triangles, once per isomorphism class fixing the boundary;
/// interior vertices are numbered from boundary_len. Infeasible
/// combinations give an empty list.
pub fn generate_rooted_discs(boundary_len: usize, area: usize) -> Result<Vec<DiscDiagram>> {
    if boundary_len < 3 || area < 1 {
        return Err(Error::InvalidParameter(format!(
            "need boundary_len ≥ 3 and area ≥ 1, got ({boundary_len}, {area})"
        )));
    }
    if area + 2 < boundary_len || !(area + boundary_len).is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let root = State::initial(boundary_len, Vec::new());
    let firsts: Vec<State> = root
        .moves(None)
        .into_iter()
        .map(|mv| root.apply(mv))
        .filter(|s| s.lower_bound() <= area)
        .collect();
    let groups = par::map(&firsts, |st| {
        let mut found = Vec::new();
        let mut search = Search { target: None, area, cut: false };
        search.run(st, &mut |s| {
            if s.triangles.len() == area {
                found.push(s.diagram());
            }
            false
        });
        found
    });
    Ok(groups.into_iter().flatten().collect())
}

/// As [`generate_rooted_discs`], but once per isomorphism class of discs
/// (rotations and reflections of the boundary identified).
pub fn generate_discs(boundary_len: usize, area: usize) -> Result<Vec<DiscDiagram>> {
    let rooted = generate_rooted_discs(boundary_len, area)?;
    let codes = par::map(&rooted, canonical_code);
    let mut seen = HashSet::new();
    Ok(rooted
        .into_iter()
        .zip(codes)
        .filter_map(|(d, c)| seen.insert(c).then_some(d))
        .collect())
}

/// Least peeling code over all 2L readings of the boundary.
pub(crate) fn canonical_code(disc: &DiscDiagram) -> Vec<usize> {
    let b = disc.boundary();
    let l = b.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..l {
        for dir in [1, l - 1] {
            let order: Vec<VertexId> = (0..l).map(|i| b[(start + i * dir) % l]).collect();
            let code = peeling_code(disc, &order);
            if best.as_ref().is_none_or(|c| code < *c) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Replays the peeling of `disc` read from the given boundary order:
/// `j` for a split at polygon index j, 0 for a fresh vertex.
fn peeling_code(disc: &DiscDiagram, order: &[VertexId]) -> Vec<usize> {
    let tris: Vec<[VertexId; 3]> = disc
        .triangles()
        .iter()
        .map(|t| [t.vertices()[0], t.vertices()[1], t.vertices()[2]])
        .collect();
    let mut used = vec![false; tris.len()];
    let mut polys = vec![order.to_vec()];
    let mut code = Vec::with_capacity(tris.len());
    while let Some(poly) = polys.pop() {
        let (p0, p1) = (poly[0], poly[1]);
        let i = (0..tris.len())
            .find(|&i| !used[i] && tris[i].contains(&p0) && tris[i].contains(&p1))
            .expect("region edge has an unused triangle");
        used[i] = true;
        let c = *tris[i].iter().find(|&&v| v != p0 && v != p1).unwrap();
        match poly.iter().position(|&v| v == c) {
            Some(j) => {
                code.push(j);
                let mut tail = poly[j..].to_vec();
                tail.push(p0);
                let head = poly[1..=j].to_vec();
                for piece in [tail, head] {
                    if piece.len() >= 3 {
                        polys.push(piece);
                    }
                }
            }
            None => {
                code.push(0);
                let mut grown = vec![p0, c];
                grown.extend_from_slice(&poly[1..]);
                polys.push(grown);
            }
        }
    }
    code
}

/// A random disc with the given boundary length and area, built by random
/// peeling moves (restarting on dead ends).
pub fn random_disc<R: Rng + ?Sized>(rng: &mut R, boundary_len: usize, area: usize) -> Result<DiscDiagram> {
    if boundary_len < 3 || area + 2 < boundary_len || !(area + boundary_len).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "no disc with boundary length {boundary_len} and area {area}"
        )));
    }
    'restart: loop {
        let mut st = State::initial(boundary_len, Vec::new());
        while !st.polys.is_empty() {
            let options: Vec<State> = st
                .moves(None)
                .into_iter()
                .map(|mv| st.apply(mv))
                .filter(|s| s.lower_bound() <= area)
                .collect();
            if options.is_empty() {
                continue 'restart;
            }
            st = options[rng.random_range(0..options.len())].clone();
        }
        if st.triangles.len() == area {
            return Ok(st.diagram());
        }
    }
}

/// Outcome of a filling search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filling {
    /// A filling of least area.
    Found(Box<DiagramMap>),
    /// The search space was exhausted without reaching the area bound: the
    /// cycle bounds no disc diagram at all.
    Unfillable,
    /// No filling of area ≤ max_area.
    ExceedsBound,
}

impl Filling {
    pub fn into_map(self) -> Option<DiagramMap> {
        match self {
            Filling::Found(m) => Some(*m),
            _ => None,
        }
    }
}

/// Least-area disc diagram in `target` whose boundary vertex i (of
/// 0..L) maps to the i-th vertex of `boundary`. Among fillings of least
/// area the first in search order is returned, independent of threading.
pub fn find_minimal_diagram(target: &Complex, boundary: &Cycle, max_area: usize) -> Result<Filling> {
    let verts = boundary.vertices().to_vec();
    Cycle::in_complex(target, verts.clone())?;
    let l = verts.len();
    let root = State::initial(l, verts);
    let mut area = l - 2;
    while area <= max_area {
        let firsts: Vec<State> = root.moves(Some(target)).into_iter().map(|mv| root.apply(mv)).collect();
        let results = par::map(&firsts, |st| {
            let mut search = Search { target: Some(target), area, cut: st.lower_bound() > area };
            if search.cut {
                return (None, true);
            }
            let mut hit = None;
            search.run(st, &mut |s| {
                hit = Some(s.clone());
                true
            });
            (hit, search.cut)
        });
        let cut = results.iter().any(|r| r.1);
        if let Some(st) = results.into_iter().find_map(|r| r.0) {
            let map = DiagramMap::new(st.diagram(), target, st.images.clone())?;
            if !is_reduced(&map).is_pass() {
                return Err(Error::Invariant("a minimal filling is not reduced".into()));
            }
            return Ok(Filling::Found(Box::new(map)));
        }
        if !cut {
            return Ok(Filling::Unfillable);
        }
        area += 2;
    }
    Ok(Filling::ExceedsBound)
}

/// All vertex maps of `disc` into `target` that send the i-th boundary
/// vertex of the disc to `boundary_images[i]`.
pub fn assign_images(disc: &DiscDiagram, target: &Complex, boundary_images: &[VertexId]) -> Vec<Vec<VertexId>> {
    let n = disc.vertex_count();
    let mut images = vec![usize::MAX; n];
    if boundary_images.len() != disc.boundary().len() {
        return Vec::new();
    }
    for (&b, &w) in disc.boundary().iter().zip(boundary_images) {
        images[b] = w;
    }
    let interior: Vec<VertexId> = disc.interior_vertices().collect();
    let mut out = Vec::new();
    assign_rec(disc, target, &interior, 0, &mut images, &mut out);
    out
}

fn assign_rec(
    disc: &DiscDiagram,
    target: &Complex,
    order: &[VertexId],
    i: usize,
    images: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if i == order.len() {
        let ok = disc.triangles().iter().all(|t| {
            let img: Vec<VertexId> = t.vertices().iter().map(|&v| images[v]).collect();
            img[0] != img[1] && img[0] != img[2] && img[1] != img[2] && target.spans_simplex(&img)
        });
        if ok {
            out.push(images.clone());
        }
        return;
    }
    let v = order[i];
    let placed: Vec<VertexId> = disc
        .complex()
        .neighbours(v)
        .ones()
        .filter(|&u| images[u] != usize::MAX)
        .map(|u| images[u])
        .collect();
    for w in target.common_neighbours(&placed).ones() {
        images[v] = w;
        assign_rec(disc, target, order, i + 1, images, out);
    }
    images[v] = usize::MAX;
}
