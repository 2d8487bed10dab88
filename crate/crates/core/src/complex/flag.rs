use super::{maximal_cliques, Complex, VertexId};
use crate::verdict::{Verdict, Witness};

/// Passes iff the complex is the clique complex of its 1-skeleton. A failure
/// names the smallest inclusion-minimal clique that spans no simplex.
pub fn is_flag(complex: &Complex) -> Verdict {
    if complex.is_flag_complex() {
        return Verdict::Pass;
    }
    let cliques = maximal_cliques(complex.adjacency(), None).unwrap_or_default();
    let mut best: Option<Vec<VertexId>> = None;
    for q in cliques {
        if complex.is_face(&q) {
            continue;
        }
        let mut set = q.vertices().to_vec();
        let mut i = 0;
        while i < set.len() {
            let mut smaller = set.clone();
            smaller.remove(i);
            if smaller.len() >= 2 && !complex.spans_simplex(&smaller) {
                set = smaller;
            } else {
                i += 1;
            }
        }
        let better = match &best {
            None => true,
            Some(b) => (set.len(), &set) < (b.len(), b),
        };
        if better {
            best = Some(set);
        }
    }
    match best {
        Some(vertices) => Verdict::fail(Witness::NonFlag { vertices }),
        None => Verdict::Pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Generator, Simplex};

    #[test]
    fn clique_complexes_are_flag() {
        for g in [Generator::Icosahedron, Generator::Octahedron, Generator::Cycle(4)] {
            assert!(is_flag(&g.build().unwrap()).is_pass());
        }
    }

    #[test]
    fn hollow_triangle() {
        let c = Complex::from_maximal_simplices(
            3,
            [Simplex::new([0, 1]).unwrap(), Simplex::new([1, 2]).unwrap(), Simplex::new([0, 2]).unwrap()],
        )
        .unwrap();
        assert_eq!(is_flag(&c), Verdict::fail(Witness::NonFlag { vertices: vec![0, 1, 2] }));
    }

    #[test]
    fn hollow_tetrahedron() {
        let c = Generator::SimplexBoundary(3).build().unwrap();
        assert_eq!(is_flag(&c), Verdict::fail(Witness::NonFlag { vertices: vec![0, 1, 2, 3] }));
    }
}
