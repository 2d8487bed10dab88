//! Induced-cycle enumeration and the k-largeness deciders.

use fixedbitset::FixedBitSet;

use crate::complex::{is_flag, Complex, Cycle, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::par;
use crate::verdict::{Verdict, Witness};

/// Longest cycle length searched unless the caller lifts the cap.
pub const DEFAULT_MAX_CYCLE_LEN: usize = 12;

/// Every induced cycle of the 1-skeleton with length in
/// `min_len..=max_len`, once each, in canonical form (see
/// [`Cycle::canonical`]), sorted by length and then lexicographically.
pub fn enumerate_induced_cycles(
    complex: &Complex,
    min_len: usize,
    max_len: usize,
) -> Result<Vec<Cycle>> {
    if max_len > DEFAULT_MAX_CYCLE_LEN {
        return Err(Error::InvalidParameter(format!(
            "max_len {max_len} above the cap of {DEFAULT_MAX_CYCLE_LEN}"
        )));
    }
    enumerate_induced_cycles_uncapped(complex, min_len, max_len)
}

/// As [`enumerate_induced_cycles`] without the length cap.
pub fn enumerate_induced_cycles_uncapped(
    complex: &Complex,
    min_len: usize,
    max_len: usize,
) -> Result<Vec<Cycle>> {
    if min_len < 4 || min_len > max_len {
        return Err(Error::InvalidParameter(format!(
            "need 4 <= min_len <= max_len, got {min_len}..={max_len}"
        )));
    }
    let per_anchor = par::map_range(complex.vertex_count(), |a| {
        let mut out = Vec::new();
        anchored_cycles(complex, a, min_len, max_len, &mut out);
        out
    });
    let mut all: Vec<Cycle> = per_anchor.into_iter().flatten().collect();
    all.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(all)
}

/// Induced cycles whose least vertex is `anchor`, grown as induced paths
/// anchor, p1, p2, ... with all p_i > anchor. Each cycle is reported once,
/// in the direction where p1 is smaller than the last vertex.
fn anchored_cycles(
    complex: &Complex,
    anchor: VertexId,
    min_len: usize,
    max_len: usize,
    out: &mut Vec<Cycle>,
) {
    let mut above = complex.empty_set();
    above.insert_range(anchor + 1..);
    let mut first = complex.neighbours(anchor).clone();
    first.intersect_with(&above);
    for p1 in first.ones() {
        let mut path = vec![anchor, p1];
        extend(complex, &above, &complex.empty_set(), &mut path, min_len, max_len, out);
    }
}

fn extend(
    complex: &Complex,
    above: &FixedBitSet,
    blocked: &FixedBitSet,
    path: &mut Vec<VertexId>,
    min_len: usize,
    max_len: usize,
    out: &mut Vec<Cycle>,
) {
    let anchor = path[0];
    let last = *path.last().unwrap();
    let mut cand = complex.neighbours(last).clone();
    cand.intersect_with(above);
    cand.difference_with(blocked);
    if path.len() == 2 {
        // p2 adjacent to the anchor would close a triangle
        cand.difference_with(complex.neighbours(anchor));
    }
    // closed neighbourhood of `last` joins the blocked set for later steps
    let mut next_blocked = blocked.clone();
    next_blocked.union_with(complex.neighbours(last));
    next_blocked.insert(last);
    for u in cand.ones() {
        let len = path.len() + 1;
        if complex.adjacent(u, anchor) {
            if len >= min_len && path[1] < u {
                let mut v = path.clone();
                v.push(u);
                out.push(Cycle::from_vec_unchecked(v));
            }
            continue;
        }
        if len < max_len {
            path.push(u);
            extend(complex, above, &next_blocked, path, min_len, max_len, out);
            path.pop();
        }
    }
}

/// Passes iff the complex is flag with no induced cycle of length
/// `4..k`. A failure carries the flag violation or a shortest induced cycle.
pub fn is_k_large(complex: &Complex, k: usize) -> Result<Verdict> {
    if k < 5 {
        return Err(Error::InvalidParameter(format!("k = {k} below 5")));
    }
    if k - 1 > DEFAULT_MAX_CYCLE_LEN {
        return Err(Error::InvalidParameter(format!(
            "k = {k} needs cycles longer than {DEFAULT_MAX_CYCLE_LEN}"
        )));
    }
    let flag = is_flag(complex);
    if !flag.is_pass() {
        return Ok(flag);
    }
    for len in 4..k {
        if let Some(c) = enumerate_induced_cycles(complex, len, len)?.into_iter().next() {
            return Ok(Verdict::fail(Witness::InducedCycle { vertices: c.vertices().to_vec() }));
        }
    }
    Ok(Verdict::Pass)
}

/// Passes iff every vertex link is k-large; a failure names the least
/// failing vertex with the inner witness in ambient ids.
pub fn is_locally_k_large(complex: &Complex, k: usize) -> Result<Verdict> {
    if k < 5 {
        return Err(Error::InvalidParameter(format!("k = {k} below 5")));
    }
    let vertices: Vec<VertexId> = complex.vertices().collect();
    let failure = par::find_map_first(&vertices, |&v| {
        let link = complex
            .link(&Simplex::vertex(v))
            .expect("vertices are faces");
        match is_k_large(&link.complex, k) {
            Ok(Verdict::Pass) => None,
            Ok(Verdict::Fail { witness }) => Some(Ok(Witness::VertexLink {
                vertex: v,
                inner: Box::new(witness.map_vertices(&|x| link.ambient[x])),
            })),
            Err(e) => Some(Err(e)),
        }
    });
    match failure {
        None => Ok(Verdict::Pass),
        Some(Ok(w)) => Ok(Verdict::fail(w)),
        Some(Err(e)) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Generator;

    fn build(g: Generator) -> Complex {
        g.build().unwrap()
    }

    #[test]
    fn five_cycle_has_one_induced_cycle() {
        let c = enumerate_induced_cycles(&build(Generator::Cycle(5)), 4, 6).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].vertices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn octahedron_squares() {
        let c = enumerate_induced_cycles(&build(Generator::Octahedron), 4, 4).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn icosahedron_has_no_squares() {
        let c = enumerate_induced_cycles(&build(Generator::Icosahedron), 4, 4).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn parameter_errors() {
        let c = build(Generator::Cycle(5));
        assert!(enumerate_induced_cycles(&c, 3, 5).is_err());
        assert!(enumerate_induced_cycles(&c, 6, 5).is_err());
        assert!(enumerate_induced_cycles(&c, 4, 13).is_err());
        assert!(enumerate_induced_cycles_uncapped(&c, 4, 13).is_ok());
        assert!(is_k_large(&c, 4).is_err());
    }

    #[test]
    fn k_large_examples() {
        assert!(is_k_large(&build(Generator::Icosahedron), 5).unwrap().is_pass());
        let v = is_k_large(&build(Generator::Octahedron), 5).unwrap();
        assert!(matches!(v.witness(), Some(Witness::InducedCycle { vertices }) if vertices.len() == 4));
        let hollow = build(Generator::SimplexBoundary(3));
        assert!(matches!(is_k_large(&hollow, 5).unwrap().witness(), Some(Witness::NonFlag { .. })));
    }

    #[test]
    fn locally_k_large_examples() {
        assert!(is_locally_k_large(&build(Generator::Icosahedron), 5).unwrap().is_pass());
        let v = is_locally_k_large(&build(Generator::Octahedron), 5).unwrap();
        match v.witness() {
            Some(Witness::VertexLink { vertex: 0, inner }) => {
                assert!(matches!(&**inner, Witness::InducedCycle { vertices } if vertices == &vec![1, 2, 4, 5]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn six_cycle_is_six_large_not_seven_large() {
        let c = build(Generator::Cycle(6));
        assert!(is_k_large(&c, 6).unwrap().is_pass());
        assert!(!is_k_large(&c, 7).unwrap().is_pass());
    }
}
