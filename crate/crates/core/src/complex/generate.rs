//! Named example complexes.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::{Complex, Golden, Simplex, VertexId, MAX_DIMENSION};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Hollow n-gon, n ≥ 3.
    Cycle(usize),
    /// Full simplex of dimension n.
    Simplex(usize),
    /// Boundary of the n-simplex, n ≥ 1.
    SimplexBoundary(usize),
    Octahedron,
    Icosahedron,
    /// Boundary of the 600-cell.
    Cell600,
    /// Cone over the k-cycle, k ≥ 4.
    Wheel(usize),
    /// Hexagonal patch of the equilateral triangulation of the plane with
    /// the given radius around a central vertex.
    HexPatch(usize),
    /// Triangular patch of the equilateral triangulation with the given side.
    TriPatch(usize),
}

impl Generator {
    pub fn build(self) -> Result<Complex> {
        match self {
            Generator::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!("cycle length {n} below 3")));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Complex::clique_complex(n, &edges)
            }
            Generator::Simplex(n) => {
                if n > MAX_DIMENSION {
                    return Err(Error::Capacity(format!("dimension {n} above {MAX_DIMENSION}")));
                }
                Complex::from_maximal_simplices(n + 1, [Simplex::from_sorted((0..=n).collect())])
            }
            Generator::SimplexBoundary(n) => {
                if n == 0 || n > MAX_DIMENSION + 1 {
                    return Err(Error::InvalidParameter(format!(
                        "simplex boundary dimension {n} outside 1..={}",
                        MAX_DIMENSION + 1
                    )));
                }
                let facets = (0..=n).map(|skip| {
                    Simplex::from_sorted((0..=n).filter(|&v| v != skip).collect())
                });
                Complex::from_maximal_simplices(n + 1, facets)
            }
            Generator::Octahedron => {
                let edges: Vec<_> = (0..6)
                    .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                    .filter(|&(u, v)| v != u + 3)
                    .collect();
                Complex::clique_complex(6, &edges)
            }
            Generator::Icosahedron => Ok(nearest_neighbour_complex(&icosahedron_points())),
            Generator::Cell600 => Ok(nearest_neighbour_complex(&cell600_points())),
            Generator::Wheel(k) => {
                if k < 4 {
                    return Err(Error::InvalidParameter(format!("wheel size {k} below 4")));
                }
                let mut edges: Vec<_> = (0..k).map(|i| (i + 1, (i + 1) % k + 1)).collect();
                edges.extend((1..=k).map(|i| (0, i)));
                Complex::clique_complex(k + 1, &edges)
            }
            Generator::HexPatch(r) => {
                if r == 0 {
                    return Err(Error::InvalidParameter("patch radius 0".into()));
                }
                let r = r as i64;
                let points: Vec<(i64, i64)> = (-r..=r)
                    .flat_map(|q| (-r..=r).map(move |s| (q, s)))
                    .filter(|&(q, s)| (q + s).abs() <= r)
                    .collect();
                Ok(lattice_complex(&points))
            }
            Generator::TriPatch(t) => {
                if t == 0 {
                    return Err(Error::InvalidParameter("patch side 0".into()));
                }
                let t = t as i64;
                let points: Vec<(i64, i64)> = (0..=t)
                    .flat_map(|i| (0..=t - i).map(move |j| (i, j)))
                    .collect();
                Ok(lattice_complex(&points))
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Cycle(n) => write!(f, "cycle:{n}"),
            Generator::Simplex(n) => write!(f, "simplex:{n}"),
            Generator::SimplexBoundary(n) => write!(f, "simplex-boundary:{n}"),
            Generator::Octahedron => write!(f, "octahedron"),
            Generator::Icosahedron => write!(f, "icosahedron"),
            Generator::Cell600 => write!(f, "cell600"),
            Generator::Wheel(k) => write!(f, "wheel:{k}"),
            Generator::HexPatch(r) => write!(f, "hex-patch:{r}"),
            Generator::TriPatch(t) => write!(f, "tri-patch:{t}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => {
                let v = a
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter in {s:?}")))?;
                (n, Some(v))
            }
            None => (s, None),
        };
        let g = match (name, arg) {
            ("cycle", Some(n)) => Generator::Cycle(n),
            ("simplex", Some(n)) => Generator::Simplex(n),
            ("simplex-boundary", Some(n)) => Generator::SimplexBoundary(n),
            ("octahedron", None) => Generator::Octahedron,
            ("icosahedron", None) => Generator::Icosahedron,
            ("cell600", None) => Generator::Cell600,
            ("wheel", Some(k)) => Generator::Wheel(k),
            ("hex-patch", Some(r)) => Generator::HexPatch(r),
            ("tri-patch", Some(t)) => Generator::TriPatch(t),
            _ => return Err(Error::InvalidParameter(format!("unknown generator {s:?}"))),
        };
        Ok(g)
    }
}

/// Clique complex of the unit-distance graph of a set of points in axial
/// coordinates of the triangular lattice.
fn lattice_complex(points: &[(i64, i64)]) -> Complex {
    const STEPS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let mut edges = Vec::new();
    for (i, &(q, s)) in points.iter().enumerate() {
        for (dq, ds) in STEPS {
            if let Some(j) = points.iter().position(|&p| p == (q + dq, s + ds)) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    Complex::clique_complex(points.len(), &edges).expect("lattice edges are valid")
}

fn squared_distance(p: &[Golden], q: &[Golden]) -> Golden {
    p.iter()
        .zip(q)
        .map(|(&x, &y)| (x - y) * (x - y))
        .fold(Golden::int(0), |acc, d| acc + d)
}

/// Clique complex of the graph joining points at the least nonzero
/// distance, computed exactly in Q(φ).
fn nearest_neighbour_complex(points: &[Vec<Golden>]) -> Complex {
    let n = points.len();
    let mut dists: Vec<(VertexId, VertexId, Golden)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            dists.push((i, j, squared_distance(&points[i], &points[j])));
        }
    }
    let min = dists
        .iter()
        .map(|d| d.2)
        .filter(|d| !d.is_zero())
        .min()
        .expect("at least two distinct points");
    let edges: Vec<_> = dists
        .into_iter()
        .filter(|d| d.2 == min)
        .map(|d| (d.0, d.1))
        .collect();
    Complex::clique_complex(n, &edges).expect("distance graph is simple")
}

fn signed(values: &[Golden]) -> Vec<Vec<Golden>> {
    // every sign pattern on the nonzero entries
    let nz: Vec<usize> = (0..values.len()).filter(|&i| !values[i].is_zero()).collect();
    (0..1u32 << nz.len())
        .map(|mask| {
            let mut v = values.to_vec();
            for (bit, &i) in nz.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    v[i] = -v[i];
                }
            }
            v
        })
        .collect()
}

fn icosahedron_points() -> Vec<Vec<Golden>> {
    let base = [Golden::int(0), Golden::int(1), Golden::phi()];
    let mut pts = Vec::new();
    for shift in 0..3 {
        let rotated: Vec<Golden> = (0..3).map(|i| base[(i + 3 - shift) % 3]).collect();
        pts.extend(signed(&rotated));
    }
    pts
}

fn even_permutations_of_4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if !distinct {
                        continue;
                    }
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn cell600_points() -> Vec<Vec<Golden>> {
    let zero = Golden::int(0);
    let one = Golden::int(1);
    let half = Golden::new(Ratio::new(1, 2), Ratio::from_integer(0));
    let mut pts = Vec::with_capacity(120);
    for axis in 0..4 {
        for sign in [one, -one] {
            let mut p = vec![zero; 4];
            p[axis] = sign;
            pts.push(p);
        }
    }
    pts.extend(signed(&[half; 4]));
    let base = [Golden::phi().half(), one.half(), Golden::inv_phi().half(), zero];
    for v in signed(&base) {
        for perm in even_permutations_of_4() {
            pts.push(perm.iter().map(|&i| v[i]).collect());
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for g in [
            Generator::Cycle(5),
            Generator::Simplex(2),
            Generator::SimplexBoundary(3),
            Generator::Octahedron,
            Generator::Icosahedron,
            Generator::Cell600,
            Generator::Wheel(6),
            Generator::HexPatch(2),
            Generator::TriPatch(3),
        ] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("bogus".parse::<Generator>().is_err());
        assert!("cycle".parse::<Generator>().is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(Generator::Cycle(2).build().is_err());
        assert!(Generator::Wheel(3).build().is_err());
        assert!(Generator::SimplexBoundary(0).build().is_err());
    }

    #[test]
    fn small_f_vectors() {
        assert_eq!(Generator::Wheel(5).build().unwrap().f_vector(), vec![6, 10, 5]);
        assert_eq!(Generator::Octahedron.build().unwrap().f_vector(), vec![6, 12, 8]);
        assert_eq!(Generator::Cycle(7).build().unwrap().f_vector(), vec![7, 7]);
        assert_eq!(Generator::Simplex(3).build().unwrap().f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(Generator::HexPatch(1).build().unwrap().f_vector(), vec![7, 12, 6]);
        assert_eq!(Generator::TriPatch(2).build().unwrap().f_vector(), vec![6, 9, 4]);
    }

    #[test]
    fn simplex_boundary_euler_characteristic() {
        for n in 1..=6 {
            let c = Generator::SimplexBoundary(n).build().unwrap();
            let expected = 1 + if (n - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(c.euler_characteristic(), expected, "n = {n}");
        }
    }

    #[test]
    fn cell600_coordinates_are_unit_vectors() {
        let pts = cell600_points();
        assert_eq!(pts.len(), 120);
        for p in &pts {
            let norm = p.iter().fold(Golden::int(0), |acc, &x| acc + x * x);
            assert_eq!(norm, Golden::int(1));
        }
    }
}
