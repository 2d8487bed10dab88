//! Finite simplicial complexes stored as maximal simplices plus a packed
//! 1-skeleton. Flag complexes built from a graph compute their maximal
//! simplices on first use.

mod cliques;
mod flag;
mod generate;
mod golden;
mod iso;
mod json;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cliques::maximal_cliques;
pub use flag::is_flag;
pub use generate::Generator;
pub use golden::Golden;
pub use iso::isomorphism;
pub use json::{CanonicalComplex, ComplexFile, GraphShorthand};

pub type VertexId = usize;

/// Largest supported simplex dimension.
pub const MAX_DIMENSION: usize = 8;
/// Largest supported number of maximal simplices.
pub const MAX_MAXIMAL_SIMPLICES: usize = 1_000_000;

/// A simplex as a strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptySimplex);
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(w[0]));
        }
        Ok(Simplex(v))
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(vec![v])
    }

    pub(crate) fn from_sorted(v: Vec<VertexId>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<VertexId> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// The face opposite `v`, or `None` when that would be empty.
    pub fn without(&self, v: VertexId) -> Option<Simplex> {
        let rest: Vec<VertexId> = self.0.iter().copied().filter(|&w| w != v).collect();
        (!rest.is_empty()).then_some(Simplex(rest))
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u32..(1 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Simplex {
        let mut v: Vec<VertexId> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        Simplex(v)
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<VertexId> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn is_sorted_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// A cyclic vertex sequence of length at least 3 with distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Cycle(Vec<VertexId>);

impl Cycle {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "length {} is below 3",
                vertices.len()
            )));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle(format!("vertex {} repeats", w[0])));
        }
        Ok(Cycle(vertices))
    }

    /// Builds the cycle and checks that consecutive vertices are adjacent.
    pub fn in_complex(complex: &Complex, vertices: Vec<VertexId>) -> Result<Self> {
        let c = Cycle::new(vertices)?;
        for &v in &c.0 {
            complex.check_vertex(v)?;
        }
        if let Some((a, b)) = c.edges().find(|&(a, b)| !complex.adjacent(a, b)) {
            return Err(Error::InvalidCycle(format!("{a} and {b} are not adjacent")));
        }
        Ok(c)
    }

    pub(crate) fn from_vec_unchecked(v: Vec<VertexId>) -> Self {
        Cycle(v)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Consecutive pairs, including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    /// Rotation/reflection representative starting at the least vertex and
    /// continuing towards its smaller cycle neighbour.
    pub fn canonical(&self) -> Cycle {
        let n = self.0.len();
        let start = (0..n).min_by_key(|&i| self.0[i]).unwrap();
        let next = self.0[(start + 1) % n];
        let prev = self.0[(start + n - 1) % n];
        let v = if next <= prev {
            (0..n).map(|i| self.0[(start + i) % n]).collect()
        } else {
            (0..n).map(|i| self.0[(start + n - i) % n]).collect()
        };
        Cycle(v)
    }

    /// True when no two non-consecutive vertices are adjacent.
    pub fn is_induced_in(&self, complex: &Complex) -> bool {
        let n = self.0.len();
        (0..n).all(|i| {
            (i + 2..n).all(|j| {
                (i == 0 && j == n - 1) || !complex.adjacent(self.0[i], self.0[j])
            })
        })
    }

    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Cycle {
        Cycle(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl TryFrom<Vec<VertexId>> for Cycle {
    type Error = Error;
    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Cycle::new(v)
    }
}

impl From<Cycle> for Vec<VertexId> {
    fn from(c: Cycle) -> Self {
        c.0
    }
}

/// A finite simplicial complex on vertices `0..vertex_count`.
///
/// Faces are implicit: a vertex set spans a simplex iff it lies in some
/// maximal simplex. Complexes marked flag answer that query from the
/// 1-skeleton alone.
#[derive(Clone, Debug)]
pub struct Complex {
    vertex_count: usize,
    adjacency: Vec<FixedBitSet>,
    flag: bool,
    maximal: OnceLock<Vec<Simplex>>,
    incidence: OnceLock<Vec<Vec<u32>>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.adjacency == other.adjacency
            && self.maximal_simplices() == other.maximal_simplices()
    }
}

impl Eq for Complex {}

impl Complex {
    /// The complex with no vertices.
    pub fn empty() -> Self {
        Complex {
            vertex_count: 0,
            adjacency: Vec::new(),
            flag: true,
            maximal: OnceLock::from(Vec::new()),
            incidence: OnceLock::new(),
        }
    }

    /// Builds a complex from a list of simplices, keeping only the
    /// inclusion-maximal ones.
    pub fn from_maximal_simplices(
        vertex_count: usize,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let mut input: Vec<Simplex> = simplices.into_iter().collect();
        for s in &input {
            if s.dim() > MAX_DIMENSION {
                return Err(Error::Capacity(format!(
                    "simplex {s} has dimension {} above {MAX_DIMENSION}",
                    s.dim()
                )));
            }
            if let Some(&v) = s.vertices().last() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
        }
        if input.len() > MAX_MAXIMAL_SIMPLICES {
            return Err(Error::Capacity(format!(
                "{} simplices exceed the limit of {MAX_MAXIMAL_SIMPLICES}",
                input.len()
            )));
        }
        input.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        input.dedup();

        let mut kept: Vec<Simplex> = Vec::new();
        let mut incidence: Vec<Vec<u32>> = vec![Vec::new(); vertex_count];
        for s in input {
            let first = s.vertices()[0];
            let absorbed = incidence[first]
                .iter()
                .any(|&i| s.is_face_of(&kept[i as usize]));
            if absorbed {
                continue;
            }
            let idx = kept.len() as u32;
            for &v in s.vertices() {
                incidence[v].push(idx);
            }
            kept.push(s);
        }
        if let Some(v) = (0..vertex_count).find(|&v| incidence[v].is_empty()) {
            return Err(Error::UncoveredVertex(v));
        }
        kept.sort();
        Ok(Self::from_checked_maximal(vertex_count, kept))
    }

    /// `maximal` must be sorted, inclusion-maximal, and cover every vertex.
    pub(crate) fn from_checked_maximal(vertex_count: usize, maximal: Vec<Simplex>) -> Self {
        let mut adjacency = vec![FixedBitSet::with_capacity(vertex_count); vertex_count];
        for s in &maximal {
            for (i, &u) in s.vertices().iter().enumerate() {
                for &v in &s.vertices()[i + 1..] {
                    adjacency[u].insert(v);
                    adjacency[v].insert(u);
                }
            }
        }
        // Flag iff the maximal cliques of the 1-skeleton are exactly the
        // maximal simplices; stop as soon as there are more cliques.
        let flag = maximal_cliques(&adjacency, Some(maximal.len()))
            .is_some_and(|cliques| cliques == maximal);
        Complex {
            vertex_count,
            adjacency,
            flag,
            maximal: OnceLock::from(maximal),
            incidence: OnceLock::new(),
        }
    }

    /// The clique (flag) complex of a graph given by its edge list.
    pub fn clique_complex(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adjacency = vec![FixedBitSet::with_capacity(vertex_count); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    /// Clique complex of a symmetric, irreflexive adjacency relation.
    pub fn from_adjacency(adjacency: Vec<FixedBitSet>) -> Self {
        let vertex_count = adjacency.len();
        debug_assert!(adjacency.iter().enumerate().all(|(u, row)| !row.contains(u)
            && row.ones().all(|v| adjacency[v].contains(u))));
        Complex {
            vertex_count,
            adjacency,
            flag: true,
            maximal: OnceLock::new(),
            incidence: OnceLock::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }

    /// Whether the complex equals the clique complex of its 1-skeleton.
    pub fn is_flag_complex(&self) -> bool {
        self.flag
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbours(&self, v: VertexId) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[FixedBitSet] {
        &self.adjacency
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            out.extend(self.adjacency[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.vertex_count)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Vertices adjacent to every vertex of `vs` (all vertices if empty).
    pub fn common_neighbours(&self, vs: &[VertexId]) -> FixedBitSet {
        let mut acc = self.full_set();
        for &v in vs {
            acc.intersect_with(&self.adjacency[v]);
        }
        acc
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        self.maximal
            .get_or_init(|| maximal_cliques(&self.adjacency, None).unwrap_or_default())
    }

    fn incidence(&self) -> &[Vec<u32>] {
        self.incidence.get_or_init(|| {
            let mut inc = vec![Vec::new(); self.vertex_count];
            for (i, s) in self.maximal_simplices().iter().enumerate() {
                for &v in s.vertices() {
                    inc[v].push(i as u32);
                }
            }
            inc
        })
    }

    /// Whether the vertex set (any order, no repeats) spans a simplex.
    pub fn spans_simplex(&self, vs: &[VertexId]) -> bool {
        if vs.iter().any(|&v| v >= self.vertex_count) {
            return false;
        }
        if vs.len() <= 1 {
            return true;
        }
        let pairwise = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adjacent(u, v)));
        if !pairwise {
            return false;
        }
        if self.flag || vs.len() == 2 {
            return true;
        }
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        let maximal = self.maximal_simplices();
        self.incidence()[sorted[0]]
            .iter()
            .any(|&i| is_sorted_subset(&sorted, maximal[i as usize].vertices()))
    }

    pub fn is_face(&self, s: &Simplex) -> bool {
        self.spans_simplex(s.vertices())
    }

    pub fn dimension(&self) -> Option<usize> {
        self.maximal_simplices().iter().map(Simplex::dim).max()
    }

    /// All simplices grouped by dimension, each group sorted.
    pub fn faces(&self) -> Vec<Vec<Simplex>> {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        if self.flag {
            let mut stack: Vec<VertexId> = Vec::new();
            for v in self.vertices() {
                let mut cand = self.adjacency[v].clone();
                cand.set_range(..v + 1, false);
                stack.push(v);
                self.collect_cliques(&mut stack, &cand, &mut by_dim);
                stack.pop();
            }
        } else {
            let mut seen: BTreeSet<Simplex> = BTreeSet::new();
            for s in self.maximal_simplices() {
                seen.extend(s.faces());
            }
            for s in seen {
                let d = s.dim();
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Vec::new());
                }
                by_dim[d].push(s);
            }
        }
        for group in &mut by_dim {
            group.sort();
        }
        by_dim
    }

    fn collect_cliques(
        &self,
        stack: &mut Vec<VertexId>,
        cand: &FixedBitSet,
        out: &mut Vec<Vec<Simplex>>,
    ) {
        let d = stack.len() - 1;
        if out.len() <= d {
            out.resize(d + 1, Vec::new());
        }
        out[d].push(Simplex::from_sorted(stack.clone()));
        for w in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&self.adjacency[w]);
            next.set_range(..w + 1, false);
            stack.push(w);
            self.collect_cliques(stack, &next, out);
            stack.pop();
        }
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces().iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = self.empty_set();
        seen.insert(0);
        let mut frontier = vec![0];
        while let Some(u) = frontier.pop() {
            for v in self.adjacency[u].ones() {
                if !seen.put(v) {
                    frontier.push(v);
                }
            }
        }
        seen.count_ones(..) == self.vertex_count
    }

    /// Induced subcomplex on a vertex set; the set may be empty.
    pub fn induced_on(&self, set: &FixedBitSet) -> Subcomplex {
        let ambient: Vec<VertexId> = set.ones().filter(|&v| v < self.vertex_count).collect();
        let local = local_index(&ambient, self.vertex_count);
        if self.flag {
            let rows = ambient
                .iter()
                .map(|&a| {
                    let mut row = FixedBitSet::with_capacity(ambient.len());
                    for b in self.adjacency[a].ones() {
                        if let Some(j) = local[b] {
                            row.insert(j);
                        }
                    }
                    row
                })
                .collect();
            return Subcomplex { complex: Complex::from_adjacency(rows), ambient };
        }
        let pieces: BTreeSet<Simplex> = self
            .maximal_simplices()
            .iter()
            .filter_map(|s| {
                let v: Vec<VertexId> = s.vertices().iter().filter_map(|&x| local[x]).collect();
                (!v.is_empty()).then(|| Simplex::from_sorted(v))
            })
            .collect();
        let complex = Complex::from_maximal_simplices(ambient.len(), pieces)
            .expect("restriction of a valid complex is valid");
        Subcomplex { complex, ambient }
    }

    /// Induced subcomplex on a nonempty vertex list.
    pub fn induced_subcomplex(&self, vertices: &[VertexId]) -> Result<Subcomplex> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut set = self.empty_set();
        for &v in vertices {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(self.induced_on(&set))
    }

    /// The link of a face: every simplex disjoint from it whose union with
    /// it is a simplex.
    pub fn link(&self, simplex: &Simplex) -> Result<Subcomplex> {
        for &v in simplex.vertices() {
            self.check_vertex(v)?;
        }
        if !self.is_face(simplex) {
            return Err(Error::NotAFace(simplex.vertices().to_vec()));
        }
        if self.flag {
            return Ok(self.induced_on(&self.common_neighbours(simplex.vertices())));
        }
        let mut vertex_set = self.empty_set();
        let mut rests: Vec<Vec<VertexId>> = Vec::new();
        for m in self.maximal_simplices() {
            if simplex.is_face_of(m) {
                let rest: Vec<VertexId> = m
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|&v| !simplex.contains(v))
                    .collect();
                vertex_set.extend(rest.iter().copied());
                if !rest.is_empty() {
                    rests.push(rest);
                }
            }
        }
        let ambient: Vec<VertexId> = vertex_set.ones().collect();
        let local = local_index(&ambient, self.vertex_count);
        let pieces = rests
            .into_iter()
            .map(|r| Simplex::from_sorted(r.iter().map(|&v| local[v].unwrap()).collect()));
        let complex = if ambient.is_empty() {
            Complex::empty()
        } else {
            Complex::from_maximal_simplices(ambient.len(), pieces)
                .expect("link of a valid complex is valid")
        };
        Ok(Subcomplex { complex, ambient })
    }

    /// Simplicial join; the vertices of `b` follow those of `a`.
    pub fn join(a: &Complex, b: &Complex) -> Complex {
        let n = a.vertex_count + b.vertex_count;
        if a.is_empty() {
            return b.clone();
        }
        if b.is_empty() {
            return a.clone();
        }
        if a.flag && b.flag {
            let mut rows = Vec::with_capacity(n);
            for u in a.vertices() {
                let mut row = FixedBitSet::with_capacity(n);
                row.extend(a.adjacency[u].ones());
                row.insert_range(a.vertex_count..);
                rows.push(row);
            }
            for u in b.vertices() {
                let mut row = FixedBitSet::with_capacity(n);
                row.extend(b.adjacency[u].ones().map(|v| v + a.vertex_count));
                row.insert_range(..a.vertex_count);
                rows.push(row);
            }
            return Complex::from_adjacency(rows);
        }
        let mut maximal = Vec::new();
        for s in a.maximal_simplices() {
            for t in b.maximal_simplices() {
                let mut v = s.vertices().to_vec();
                v.extend(t.vertices().iter().map(|&x| x + a.vertex_count));
                maximal.push(Simplex::from_sorted(v));
            }
        }
        maximal.sort();
        Complex::from_checked_maximal(n, maximal)
    }

    /// The complex obtained by relabelling vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Complex {
        assert_eq!(perm.len(), self.vertex_count);
        if self.flag {
            let mut rows = vec![self.empty_set(); self.vertex_count];
            for u in self.vertices() {
                for v in self.adjacency[u].ones() {
                    rows[perm[u]].insert(perm[v]);
                }
            }
            return Complex::from_adjacency(rows);
        }
        let mut maximal: Vec<Simplex> = self
            .maximal_simplices()
            .iter()
            .map(|s| s.map(|v| perm[v]))
            .collect();
        maximal.sort();
        Complex::from_checked_maximal(self.vertex_count, maximal)
    }
}

fn local_index(ambient: &[VertexId], n: usize) -> Vec<Option<VertexId>> {
    let mut local = vec![None; n];
    for (i, &a) in ambient.iter().enumerate() {
        local[a] = Some(i);
    }
    local
}

/// A complex derived from an ambient one, with the translation from local
/// vertex ids back to ambient ids. `ambient` is strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    pub complex: Complex,
    pub ambient: Vec<VertexId>,
}

impl Subcomplex {
    pub fn to_ambient(&self, local: VertexId) -> VertexId {
        self.ambient[local]
    }

    pub fn to_local(&self, ambient: VertexId) -> Option<VertexId> {
        self.ambient.binary_search(&ambient).ok()
    }

    pub fn lift(&self, s: &Simplex) -> Simplex {
        s.map(|v| self.ambient[v])
    }

    pub fn lift_cycle(&self, c: &Cycle) -> Cycle {
        c.map(|v| self.ambient[v])
    }

    pub fn vertex_count(&self) -> usize {
        self.ambient.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ambient.is_empty()
    }

    /// The vertex set as a bitset over `n` ambient vertices.
    pub fn ambient_set(&self, n: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(n);
        s.extend(self.ambient.iter().copied());
        s
    }
}
