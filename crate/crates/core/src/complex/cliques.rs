use fixedbitset::FixedBitSet;

use super::Simplex;

/// Maximal cliques of a graph by Bron–Kerbosch with Tomita pivoting over
/// packed rows, sorted lexicographically.
///
/// With `limit = Some(n)` the search gives up and returns `None` once more
/// than `n` cliques have been found.
pub fn maximal_cliques(adjacency: &[FixedBitSet], limit: Option<usize>) -> Option<Vec<Simplex>> {
    let n = adjacency.len();
    let mut out = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut clique = Vec::new();
    let ok = expand(
        adjacency,
        &mut clique,
        candidates,
        FixedBitSet::with_capacity(n),
        &mut out,
        limit,
    );
    if !ok {
        return None;
    }
    out.sort();
    Some(out)
}

fn expand(
    adjacency: &[FixedBitSet],
    clique: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Simplex>,
    limit: Option<usize>,
) -> bool {
    if candidates.is_clear() {
        if excluded.is_clear() && !clique.is_empty() {
            let mut c = clique.clone();
            c.sort_unstable();
            out.push(Simplex::from_sorted(c));
            if limit.is_some_and(|l| out.len() > l) {
                return false;
            }
        }
        return true;
    }
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| adjacency[u].intersection(&candidates).count())
        .expect("candidates nonempty");
    let mut todo = candidates.clone();
    todo.difference_with(&adjacency[pivot]);
    for v in todo.ones() {
        let mut next_c = candidates.clone();
        next_c.intersect_with(&adjacency[v]);
        let mut next_x = excluded.clone();
        next_x.intersect_with(&adjacency[v]);
        clique.push(v);
        let ok = expand(adjacency, clique, next_c, next_x, out, limit);
        clique.pop();
        if !ok {
            return false;
        }
        candidates.set(v, false);
        excluded.insert(v);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<FixedBitSet> {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            rows[u].insert(v);
            rows[v].insert(u);
        }
        rows
    }

    #[test]
    fn square_has_four_edges() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(maximal_cliques(&g, None).unwrap().len(), 4);
    }

    #[test]
    fn complete_graph_is_one_clique() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let c = maximal_cliques(&g, None).unwrap();
        assert_eq!(c, vec![Simplex::from_sorted(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = graph(3, &[(0, 1)]);
        let c = maximal_cliques(&g, None).unwrap();
        assert_eq!(c, vec![Simplex::from_sorted(vec![0, 1]), Simplex::from_sorted(vec![2])]);
    }

    #[test]
    fn limit_aborts() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(maximal_cliques(&g, Some(3)).is_none());
        assert!(maximal_cliques(&g, Some(4)).is_some());
    }
}
