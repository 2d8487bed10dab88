//! Contractibility certificates: common dominators, the spanning
//! construction K″, dismantling orders, integer homology, and the audit of
//! the star-removal retraction of a ball onto a smaller ball.

mod homology;
mod retraction;

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::complex::{Complex, Simplex, Subcomplex, VertexId};
use crate::error::{Error, Result};

pub use homology::{homology, HomologyProfile};
pub use retraction::{audit_ball_retraction, CertificateLayer, RetractionReport, RetractionStep};

pub const DEFAULT_DISMANTLE_BUDGET: u64 = 1_000_000;

fn closed_neighbourhood(k: &Complex, v: VertexId) -> FixedBitSet {
    let mut n = k.neighbours(v).clone();
    n.insert(v);
    n
}

/// The least vertex equal or adjacent to every vertex of A1 ∪ A2.
pub fn common_dominator(k: &Complex, a1: &Simplex, a2: &Simplex) -> Result<Option<VertexId>> {
    for s in [a1, a2] {
        if !k.is_face(s) {
            return Err(Error::NotAFace(s.vertices().to_vec()));
        }
    }
    let mut acc = k.full_set();
    for &u in a1.vertices().iter().chain(a2.vertices()) {
        acc.intersect_with(&closed_neighbourhood(k, u));
    }
    Ok(acc.ones().next())
}

/// One step of the construction: `dominator` is adjacent or equal to all
/// of `v` and of the previous M; `m` is the simplex after adding it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanStep {
    pub v: Simplex,
    pub dominator: VertexId,
    pub m: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningContractible {
    /// K″: the subcomplex induced on K′ ∪ M_n.
    #[serde(skip)]
    pub span: Subcomplex,
    pub vertices: Vec<VertexId>,
    pub m: Simplex,
    pub steps: Vec<SpanStep>,
    pub flag: bool,
    pub maximal_simplices_meet_m: bool,
    pub dismantle_order: Option<Vec<DominationStep>>,
}

impl SpanningContractible {
    pub fn certified(&self) -> bool {
        self.flag && self.maximal_simplices_meet_m && self.dismantle_order.is_some()
    }
}

/// Enumerates the subsets V_0, V_1, … of `k_prime` spanning simplices of K,
/// ordered by (size, lexicographic); M_0 = V_0 and M_i = M_{i−1} ∪ {a_i}
/// with a_i the common dominator of V_i and M_{i−1}. Returns the span of
/// K′ ∪ M_n with its certificate: flag, every maximal simplex meets M_n,
/// and a dismantling order.
pub fn build_spanning_contractible(k: &Complex, k_prime: &[VertexId]) -> Result<SpanningContractible> {
    if k_prime.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let prime = k.induced_subcomplex(k_prime)?;
    let mut subsets: Vec<Simplex> =
        prime.complex.faces().into_iter().flatten().map(|s| prime.lift(&s)).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices().cmp(b.vertices())));
    let mut m = subsets[0].clone();
    let mut steps = Vec::new();
    for (i, v) in subsets.iter().enumerate().skip(1) {
        let a = common_dominator(k, v, &m)?.ok_or_else(|| Error::NoDominator {
            step: i,
            v: v.vertices().to_vec(),
            m: m.vertices().to_vec(),
        })?;
        let next = m.union(&Simplex::vertex(a));
        if !k.is_face(&next) {
            return Err(Error::Invariant(format!("M ∪ {{{a}}} = {next} is not a simplex")));
        }
        m = next;
        steps.push(SpanStep { v: v.clone(), dominator: a, m: m.clone() });
    }
    let mut set = k.empty_set();
    set.extend(k_prime.iter().copied());
    set.extend(m.vertices().iter().copied());
    let span = k.induced_on(&set);
    let local_m: Vec<VertexId> = m.vertices().iter().map(|&u| span.to_local(u).unwrap()).collect();
    let maximal_simplices_meet_m = span
        .complex
        .maximal_simplices()
        .iter()
        .all(|s| s.vertices().iter().any(|u| local_m.contains(u)));
    let flag = crate::complex::is_flag(&span.complex).is_pass();
    let dismantle_order = if flag {
        dismantle(&span.complex)
            .ok()
            .flatten()
            .map(|o| o.into_iter().map(|s| s.map(|u| span.ambient[u])).collect())
    } else {
        None
    };
    Ok(SpanningContractible {
        vertices: span.ambient.clone(),
        span,
        m,
        steps,
        flag,
        maximal_simplices_meet_m,
        dismantle_order,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominationStep {
    pub removed: VertexId,
    pub dominator: VertexId,
}

impl DominationStep {
    fn map(self, f: impl Fn(VertexId) -> VertexId) -> Self {
        DominationStep { removed: f(self.removed), dominator: f(self.dominator) }
    }
}

/// A positive or partial contractibility certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    DismantleOrder(Vec<DominationStep>),
    Homology(HomologyProfile),
}

/// Searches for removals of dominated vertices (N[removed] ⊆ N[dominator])
/// down to a single vertex. `Ok(None)` means the search space was
/// exhausted; exceeding the default budget is an error.
pub fn dismantle(k: &Complex) -> Result<Option<Vec<DominationStep>>> {
    dismantle_with_budget(k, DEFAULT_DISMANTLE_BUDGET)
}

pub fn dismantle_with_budget(k: &Complex, budget: u64) -> Result<Option<Vec<DominationStep>>> {
    if !k.is_flag_complex() && !crate::complex::is_flag(k).is_pass() {
        return Err(Error::NotFlag);
    }
    if k.is_empty() {
        return Ok(None);
    }
    let mut alive = k.full_set();
    let mut order = Vec::new();
    let mut search = Dismantler { k, nodes: 0, budget, dead: HashSet::new() };
    if search.run(&mut alive, &mut order)? {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

fn dominations(k: &Complex, alive: &FixedBitSet) -> Vec<DominationStep> {
    let nbhd = |v: VertexId| {
        let mut n = closed_neighbourhood(k, v);
        n.intersect_with(alive);
        n
    };
    let mut out = Vec::new();
    for u in alive.ones() {
        let nu = nbhd(u);
        for w in nu.ones() {
            if w != u && nu.is_subset(&nbhd(w)) {
                out.push(DominationStep { removed: u, dominator: w });
            }
        }
    }
    out
}

struct Dismantler<'a> {
    k: &'a Complex,
    nodes: u64,
    budget: u64,
    /// Vertex sets known not to dismantle.
    dead: HashSet<FixedBitSet>,
}

impl Dismantler<'_> {
    fn run(&mut self, alive: &mut FixedBitSet, order: &mut Vec<DominationStep>) -> Result<bool> {
        if alive.count_ones(..) == 1 {
            return Ok(true);
        }
        if self.dead.contains(alive) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let mut tried = FixedBitSet::with_capacity(self.k.vertex_count());
        for step in dominations(self.k, alive) {
            if tried.contains(step.removed) {
                continue;
            }
            tried.insert(step.removed);
            alive.set(step.removed, false);
            order.push(step);
            if self.run(alive, order)? {
                return Ok(true);
            }
            order.pop();
            alive.insert(step.removed);
        }
        self.dead.insert(alive.clone());
        Ok(false)
    }
}

/// Replays `order` on `k`, checking each domination in the complex current
/// at its step and that one vertex remains.
pub fn validate_dismantling(k: &Complex, order: &[DominationStep]) -> bool {
    let mut alive = k.full_set();
    for s in order {
        if !alive.contains(s.removed) || !alive.contains(s.dominator) || s.removed == s.dominator {
            return false;
        }
        let mut nu = closed_neighbourhood(k, s.removed);
        nu.intersect_with(&alive);
        let mut nw = closed_neighbourhood(k, s.dominator);
        nw.intersect_with(&alive);
        if !nu.is_subset(&nw) {
            return false;
        }
        alive.set(s.removed, false);
    }
    alive.count_ones(..) == 1
}
