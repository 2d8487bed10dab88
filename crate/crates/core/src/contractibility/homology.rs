//! Integer simplicial homology via sparse Smith normal form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::complex::{Complex, VertexId};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    /// Ranks of H_0, H_1, … (unreduced).
    pub betti: Vec<usize>,
    /// Orders of the cyclic torsion summands of each H_k, ascending.
    #[serde(serialize_with = "torsion_json")]
    pub torsion: Vec<Vec<BigUint>>,
}

impl HomologyProfile {
    /// Homology of a point.
    pub fn is_trivial(&self) -> bool {
        self.betti.first() == Some(&1)
            && self.betti[1..].iter().all(|&b| b == 0)
            && self.torsion.iter().all(Vec::is_empty)
    }
}

fn torsion_json<S: Serializer>(t: &[Vec<BigUint>], s: S) -> Result<S::Ok, S::Error> {
    let as_u64: Vec<Vec<serde_json::Value>> = t
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| match u64::try_from(x) {
                    Ok(n) => serde_json::Value::from(n),
                    Err(_) => serde_json::Value::from(x.to_string()),
                })
                .collect()
        })
        .collect();
    as_u64.serialize(s)
}

/// Column-sparse matrix over the integers.
type Columns = Vec<Vec<(usize, i64)>>;

fn boundary_matrix(faces: &[Vec<crate::complex::Simplex>], k: usize) -> Columns {
    let index: HashMap<&[VertexId], usize> =
        faces[k - 1].iter().enumerate().map(|(i, s)| (s.vertices(), i)).collect();
    faces[k]
        .iter()
        .map(|s| {
            let v = s.vertices();
            let mut col: Vec<(usize, i64)> = (0..v.len())
                .map(|i| {
                    let mut f = v.to_vec();
                    f.remove(i);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    (index[f.as_slice()], sign)
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect()
}

/// Integer homology from the Smith normal forms of the boundary maps.
pub fn homology(complex: &Complex) -> HomologyProfile {
    let faces = complex.faces();
    let top = faces.len();
    let factors: Vec<Vec<BigUint>> = par::map_range(top, |k| {
        if k == 0 {
            Vec::new()
        } else {
            invariant_factors(faces[k - 1].len(), boundary_matrix(&faces, k))
        }
    });
    let rank = |k: usize| factors.get(k).map_or(0, Vec::len);
    let betti = (0..top).map(|k| faces[k].len() - rank(k) - rank(k + 1)).collect();
    let torsion = (0..top)
        .map(|k| {
            factors
                .get(k + 1)
                .map(|f| f.iter().filter(|d| !d.is_one()).cloned().collect())
                .unwrap_or_default()
        })
        .collect();
    HomologyProfile { betti, torsion }
}

/// Nonzero invariant factors d_1 | d_2 | … of an integer matrix.
pub(crate) fn invariant_factors(nrows: usize, columns: Columns) -> Vec<BigUint> {
    let mut cols: Vec<BTreeMap<usize, BigInt>> = columns
        .into_iter()
        .map(|c| c.into_iter().filter(|e| e.1 != 0).map(|(r, v)| (r, BigInt::from(v))).collect())
        .collect();
    let mut rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nrows];
    for (c, col) in cols.iter().enumerate() {
        for &r in col.keys() {
            rows[r].insert(c);
        }
    }
    let mut diagonal: Vec<BigInt> = Vec::new();
    while let Some((r, p)) = choose_pivot(&cols, &rows) {
        let a = cols[p][&r].clone();
        let pivot_col = cols[p].clone();
        let others: Vec<usize> = rows[r].iter().copied().filter(|&c| c != p).collect();
        for c in others {
            let q = &cols[c][&r] / &a;
            if q.is_zero() {
                continue;
            }
            for (&s, val) in &pivot_col {
                let entry = cols[c].remove(&s).unwrap_or_default() - &q * val;
                if entry.is_zero() {
                    rows[s].remove(&c);
                } else {
                    cols[c].insert(s, entry);
                    rows[s].insert(c);
                }
            }
        }
        if rows[r].len() > 1 {
            continue;
        }
        // Row r is now zero off the pivot, so row operations against it
        // only touch column p.
        let below: Vec<usize> = cols[p].keys().copied().filter(|&s| s != r).collect();
        for s in below {
            let entry = cols[p][&s].mod_floor(&a.abs());
            if entry.is_zero() {
                cols[p].remove(&s);
                rows[s].remove(&p);
            } else {
                cols[p].insert(s, entry);
            }
        }
        if cols[p].len() == 1 {
            cols[p].clear();
            rows[r].clear();
            diagonal.push(a.abs());
        }
    }
    normalise(diagonal)
}

/// Least |entry|, then least Markowitz cost, then least (column, row).
fn choose_pivot(cols: &[BTreeMap<usize, BigInt>], rows: &[BTreeSet<usize>]) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize, usize)> = None;
    for (c, col) in cols.iter().enumerate() {
        for (&r, v) in col {
            let abs = v.abs();
            let cost = (rows[r].len() - 1) * (col.len() - 1);
            let better = match &best {
                None => true,
                Some((ba, bc, _, _)) => abs < *ba || (abs == *ba && cost < *bc),
            };
            if better {
                let unit = abs.is_one() && cost == 0;
                best = Some((abs, cost, r, c));
                if unit {
                    return Some((r, c));
                }
            }
        }
    }
    best.map(|(_, _, r, c)| (r, c))
}

/// Turns a diagonal into the invariant-factor chain by gcd/lcm exchanges.
fn normalise(diagonal: Vec<BigInt>) -> Vec<BigUint> {
    let units = diagonal.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigInt> = diagonal.into_iter().filter(|d| !d.is_one()).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigUint::one(); units];
    out.extend(rest.into_iter().map(|d| d.magnitude().clone()));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Generator, Simplex};

    fn betti(g: Generator) -> Vec<usize> {
        homology(&g.build().unwrap()).betti
    }

    fn big(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn named_examples() {
        assert_eq!(betti(Generator::Simplex(3)), vec![1, 0, 0, 0]);
        assert_eq!(betti(Generator::Icosahedron), vec![1, 0, 1]);
        assert_eq!(betti(Generator::Octahedron), vec![1, 0, 1]);
        assert_eq!(betti(Generator::Cycle(6)), vec![1, 1]);
        assert_eq!(betti(Generator::SimplexBoundary(4)), vec![1, 0, 0, 1]);
        assert!(homology(&Generator::HexPatch(2).build().unwrap()).is_trivial());
    }

    #[test]
    fn projective_plane_has_torsion() {
        // The 6-vertex triangulation of the real projective plane.
        let tris = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        let rp2 = Complex::from_maximal_simplices(6, tris.map(|t| Simplex::new(t).unwrap())).unwrap();
        let h = homology(&rp2);
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], big(&[2]), vec![]]);
    }

    #[test]
    fn invariant_factor_chain() {
        // diag(2, 3) ~ diag(1, 6); [[2, 4], [0, 6]] ~ diag(2, 6).
        assert_eq!(invariant_factors(2, vec![vec![(0, 2)], vec![(1, 3)]]), big(&[1, 6]));
        assert_eq!(invariant_factors(2, vec![vec![(0, 2)], vec![(0, 4), (1, 6)]]), big(&[2, 6]));
        assert_eq!(invariant_factors(2, vec![vec![(0, 4), (1, 6)], vec![(0, 6), (1, 9)]]), big(&[1]));
        assert_eq!(invariant_factors(3, vec![]), big(&[]));
    }
}
