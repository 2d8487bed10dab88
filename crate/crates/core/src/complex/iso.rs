//! Simplicial isomorphism by colour refinement plus backtracking.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use super::{Complex, VertexId};

/// A bijection `f` with `f[v]` in `b` for each vertex `v` of `a`, mapping
/// simplices onto simplices, or `None` if the complexes are not isomorphic.
pub fn isomorphism(a: &Complex, b: &Complex) -> Option<Vec<VertexId>> {
    let n = a.vertex_count();
    if n != b.vertex_count()
        || a.edges().len() != b.edges().len()
        || a.is_flag_complex() != b.is_flag_complex()
        || a.maximal_simplices().len() != b.maximal_simplices().len()
    {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let (ca, cb) = refine(a, b)?;

    // Visit vertices of `a` breadth-first from the rarest colour class so
    // each new vertex is constrained by already-mapped neighbours.
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| (class_size[&ca[v]], v))
            .unwrap();
        placed.insert(root);
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for w in a.neighbours(u).ones() {
                if !placed.put(w) {
                    order.push(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = FixedBitSet::with_capacity(n);
    if extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Joint 1-dimensional Weisfeiler–Leman refinement; `None` when the colour
/// histograms disagree.
fn refine(a: &Complex, b: &Complex) -> Option<(Vec<usize>, Vec<usize>)> {
    let initial = |c: &Complex| -> Vec<Vec<usize>> {
        let mut per_vertex: Vec<Vec<usize>> = vec![Vec::new(); c.vertex_count()];
        for s in c.maximal_simplices() {
            for &v in s.vertices() {
                per_vertex[v].push(s.dim());
            }
        }
        per_vertex
            .into_iter()
            .enumerate()
            .map(|(v, mut dims)| {
                dims.sort_unstable();
                dims.insert(0, c.degree(v));
                dims
            })
            .collect()
    };
    let (mut ca, mut cb) = relabel(initial(a), initial(b))?;
    loop {
        let sig = |c: &Complex, col: &[usize]| -> Vec<Vec<usize>> {
            c.vertices()
                .map(|v| {
                    let mut s: Vec<usize> = c.neighbours(v).ones().map(|w| col[w]).collect();
                    s.sort_unstable();
                    s.insert(0, col[v]);
                    s
                })
                .collect()
        };
        let classes = count_classes(&ca);
        let (na, nb) = relabel(sig(a, &ca), sig(b, &cb))?;
        if count_classes(&na) == classes {
            return Some((na, nb));
        }
        ca = na;
        cb = nb;
    }
}

fn count_classes(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn relabel(sa: Vec<Vec<usize>>, sb: Vec<Vec<usize>>) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for s in sa.iter().chain(&sb) {
        let next = ids.len();
        ids.entry(s.clone()).or_insert(next);
    }
    let ca: Vec<usize> = sa.iter().map(|s| ids[s]).collect();
    let cb: Vec<usize> = sb.iter().map(|s| ids[s]).collect();
    let (mut ha, mut hb) = (ca.clone(), cb.clone());
    ha.sort_unstable();
    hb.sort_unstable();
    (ha == hb).then_some((ca, cb))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Complex,
    b: &Complex,
    ca: &[usize],
    cb: &[usize],
    order: &[VertexId],
    depth: usize,
    map: &mut [VertexId],
    used: &mut FixedBitSet,
) -> bool {
    if depth == order.len() {
        return simplices_match(a, b, map);
    }
    let v = order[depth];
    let mapped = &order[..depth];
    for w in b.vertices() {
        if used.contains(w) || cb[w] != ca[v] {
            continue;
        }
        let consistent = mapped
            .iter()
            .all(|&u| a.adjacent(v, u) == b.adjacent(w, map[u]));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used.set(w, false);
        map[v] = usize::MAX;
    }
    false
}

fn simplices_match(a: &Complex, b: &Complex, map: &[VertexId]) -> bool {
    if a.is_flag_complex() {
        // graph isomorphism of flag complexes is simplicial
        return true;
    }
    let mut image: Vec<_> = a.maximal_simplices().iter().map(|s| s.map(|v| map[v])).collect();
    image.sort();
    image == b.maximal_simplices()
}
