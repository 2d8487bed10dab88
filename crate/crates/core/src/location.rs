//! Wheels, dwheels, and the m-location decider.
//!
//! A k-wheel is an induced cone over an induced k-cycle. A (k,ℓ)-dwheel is
//! a pair of wheels `W1 = (v0; v1..vk)`, `W2 = (w0; w1..wℓ)` with
//! `vk = w0`, `wℓ = v0`, `v(k-1) = w(ℓ-1)`, and `v1 = w1` or `v1 ~ w1`.
//! Its boundary is `v1..v(k-1) w(ℓ-2)..w1`, dropping the repeated `w1`
//! when the dwheel is planar (`v1 = w1`).

use std::collections::HashMap;

use crate::complex::{is_flag, Complex, Cycle, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::largeness::enumerate_induced_cycles;
use crate::par;
use crate::verdict::{Verdict, WheelJson, Witness};

/// Largest location parameter supported.
pub const MAX_LOCATION: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wheel {
    pub centre: VertexId,
    /// Boundary in canonical form.
    pub boundary: Cycle,
}

impl Wheel {
    pub fn size(&self) -> usize {
        self.boundary.len()
    }

    /// All vertices, centre first.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut v = vec![self.centre];
        v.extend_from_slice(self.boundary.vertices());
        v
    }

    /// Checks the wheel invariants in `complex`: centre off the boundary and
    /// adjacent to all of it, boundary an induced cycle of length ≥ 4.
    pub fn is_valid_in(&self, complex: &Complex) -> bool {
        let b = self.boundary.vertices();
        b.len() >= 4
            && !b.contains(&self.centre)
            && b.iter().all(|&v| complex.adjacent(self.centre, v))
            && self.boundary.edges().all(|(x, y)| complex.adjacent(x, y))
            && self.boundary.is_induced_in(complex)
    }
}

/// Every k-wheel once: one entry per centre and induced k-cycle in its link.
pub fn enumerate_wheels(complex: &Complex, k: usize) -> Result<Vec<Wheel>> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("wheel size {k} below 4")));
    }
    if !complex.is_flag_complex() {
        return Err(Error::NotFlag);
    }
    let per_centre = par::map_range(complex.vertex_count(), |v| -> Result<Vec<Wheel>> {
        let link = complex.link(&Simplex::vertex(v))?;
        if link.vertex_count() < k {
            return Ok(Vec::new());
        }
        let cycles = enumerate_induced_cycles(&link.complex, k, k)?;
        Ok(cycles
            .into_iter()
            .map(|c| Wheel { centre: v, boundary: link.lift_cycle(&c).canonical() })
            .collect())
    });
    let mut out = Vec::new();
    for w in per_centre {
        out.extend(w?);
    }
    out.sort();
    Ok(out)
}

/// A validated dwheel with both boundaries stored in role order:
/// `first_boundary = [v1, ..., vk]`, `second_boundary = [w1, ..., wℓ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DWheel {
    first_centre: VertexId,
    first_boundary: Vec<VertexId>,
    second_centre: VertexId,
    second_boundary: Vec<VertexId>,
}

impl DWheel {
    /// Validates the wheel invariants and the four gluing conditions.
    pub fn new(
        complex: &Complex,
        first_centre: VertexId,
        first_boundary: Vec<VertexId>,
        second_centre: VertexId,
        second_boundary: Vec<VertexId>,
    ) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidDWheel(m.to_string()));
        for (c, b) in [(first_centre, &first_boundary), (second_centre, &second_boundary)] {
            for &v in b.iter().chain([&c]) {
                complex.check_vertex(v)?;
            }
            let w = Wheel { centre: c, boundary: Cycle::new(b.clone())? };
            if !w.is_valid_in(complex) {
                return bad(&format!("({c}; {b:?}) is not a wheel"));
            }
        }
        let (k, l) = (first_boundary.len(), second_boundary.len());
        if first_boundary[k - 1] != second_centre {
            return bad("v_k differs from w_0");
        }
        if second_boundary[l - 1] != first_centre {
            return bad("w_l differs from v_0");
        }
        if first_boundary[k - 2] != second_boundary[l - 2] {
            return bad("v_(k-1) differs from w_(l-1)");
        }
        let (v1, w1) = (first_boundary[0], second_boundary[0]);
        if v1 != w1 && !complex.adjacent(v1, w1) {
            return bad("v_1 is neither w_1 nor adjacent to it");
        }
        Ok(DWheel { first_centre, first_boundary, second_centre, second_boundary })
    }

    pub fn first(&self) -> (VertexId, &[VertexId]) {
        (self.first_centre, &self.first_boundary)
    }

    pub fn second(&self) -> (VertexId, &[VertexId]) {
        (self.second_centre, &self.second_boundary)
    }

    /// Wheel sizes (k, ℓ).
    pub fn sizes(&self) -> (usize, usize) {
        (self.first_boundary.len(), self.second_boundary.len())
    }

    pub fn is_planar(&self) -> bool {
        self.first_boundary[0] == self.second_boundary[0]
    }

    /// `v1 .. v(k-1) w(ℓ-2) .. w1`, without the repeated `w1` when planar.
    pub fn boundary(&self) -> Cycle {
        let (k, l) = self.sizes();
        let mut v: Vec<VertexId> = self.first_boundary[..k - 1].to_vec();
        let tail_end = if self.is_planar() { 1 } else { 0 };
        v.extend(self.second_boundary[tail_end..l - 2].iter().rev());
        Cycle::from_vec_unchecked(v)
    }

    pub fn boundary_len(&self) -> usize {
        let (k, l) = self.sizes();
        if self.is_planar() {
            k + l - 4
        } else {
            k + l - 3
        }
    }

    /// Sorted vertex set of W1 ∪ W2.
    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut v: Vec<VertexId> = [self.first_centre, self.second_centre]
            .into_iter()
            .chain(self.first_boundary.iter().copied())
            .chain(self.second_boundary.iter().copied())
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn to_witness(&self, common_neighbours: Vec<VertexId>) -> Witness {
        Witness::Dwheel {
            w1: WheelJson { centre: self.first_centre, boundary: self.first_boundary.clone() },
            w2: WheelJson { centre: self.second_centre, boundary: self.second_boundary.clone() },
            planar: self.is_planar(),
            boundary_cycle: self.boundary().vertices().to_vec(),
            common_neighbours,
        }
    }

    /// Deduplication key: centres, the shared pair, and both wheels.
    fn key(&self) -> (VertexId, VertexId, VertexId, VertexId, VertexId, Vec<VertexId>, Vec<VertexId>) {
        let k = self.first_boundary.len();
        (
            self.first_centre,
            self.second_centre,
            self.first_boundary[k - 2],
            self.first_boundary[0],
            self.second_boundary[0],
            Cycle::from_vec_unchecked(self.first_boundary.clone()).canonical().into(),
            Cycle::from_vec_unchecked(self.second_boundary.clone()).canonical().into(),
        )
    }
}

/// `dwheel_boundary` as a free function.
pub fn dwheel_boundary(dw: &DWheel) -> Cycle {
    dw.boundary()
}

pub fn is_planar_dwheel(dw: &DWheel) -> bool {
    dw.is_planar()
}

/// Every dwheel with boundary length at most `max_boundary`, wheel sizes
/// ranging over all k, ℓ ≥ 4 allowed by the bound. Each dwheel is an
/// ordered pair of wheels plus the choice of v(k-1); it appears once.
pub fn enumerate_dwheels(complex: &Complex, max_boundary: usize) -> Result<Vec<DWheel>> {
    if !(4..=MAX_LOCATION).contains(&max_boundary) {
        return Err(Error::InvalidParameter(format!(
            "max_boundary {max_boundary} outside 4..={MAX_LOCATION}"
        )));
    }
    if !complex.is_flag_complex() {
        return Err(Error::NotFlag);
    }
    let mut wheels: Vec<Wheel> = Vec::new();
    for k in 4..=max_boundary {
        wheels.extend(enumerate_wheels(complex, k)?);
    }
    // (centre, boundary edge) -> wheels
    let mut index: HashMap<(VertexId, VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (i, w) in wheels.iter().enumerate() {
        for (a, b) in w.boundary.edges() {
            index.entry((w.centre, a.min(b), a.max(b))).or_default().push(i);
        }
    }
    let per_first = par::map(&wheels, |w1| {
        let b = w1.boundary.vertices();
        let k = b.len();
        let mut found = Vec::new();
        for i in 0..k {
            for forward in [true, false] {
                // v_j = b[i + d·j], so v_k = b[i]
                let at = |j: usize| {
                    if forward {
                        b[(i + j) % k]
                    } else {
                        b[(i + k * 2 - j % k) % k]
                    }
                };
                let first: Vec<VertexId> = (1..=k).map(at).collect();
                let (vk, vk1, v1) = (first[k - 1], first[k - 2], first[0]);
                let key = (vk, w1.centre.min(vk1), w1.centre.max(vk1));
                let Some(candidates) = index.get(&key) else { continue };
                for &j in candidates {
                    let w2 = &wheels[j];
                    let l = w2.size();
                    if k + l - 4 > max_boundary {
                        continue;
                    }
                    let c = w2.boundary.vertices();
                    let p = c.iter().position(|&x| x == w1.centre).unwrap();
                    let forward2 = c[(p + l - 1) % l] == vk1;
                    // w_ℓ = v0 and w_(ℓ-1) = v(k-1) fix the orientation
                    let second: Vec<VertexId> = (1..=l)
                        .map(|t| if forward2 { c[(p + t) % l] } else { c[(p + 2 * l - t) % l] })
                        .collect();
                    let w1v = second[0];
                    if w1v != v1 && !complex.adjacent(w1v, v1) {
                        continue;
                    }
                    let dw = DWheel {
                        first_centre: w1.centre,
                        first_boundary: first.clone(),
                        second_centre: w2.centre,
                        second_boundary: second,
                    };
                    if dw.boundary_len() <= max_boundary {
                        found.push(dw);
                    }
                }
            }
        }
        found
    });
    let mut out: Vec<DWheel> = per_first.into_iter().flatten().collect();
    out.sort_by_key(|d| d.key());
    Ok(out)
}

/// Passes iff every dwheel with boundary at most `m` has a vertex adjacent
/// to all vertices of W1 ∪ W2. Any vertex of the complex may serve; a wheel
/// vertex never can, as adjacency is irreflexive.
pub fn is_m_located(complex: &Complex, m: usize) -> Result<Verdict> {
    if !(4..=MAX_LOCATION).contains(&m) {
        return Err(Error::InvalidParameter(format!("m = {m} outside 4..={MAX_LOCATION}")));
    }
    let flag = is_flag(complex);
    if !flag.is_pass() {
        return Ok(flag);
    }
    let dwheels = enumerate_dwheels(complex, m)?;
    let failure = par::find_map_first(&dwheels, |dw| {
        let common = complex.common_neighbours(&dw.vertex_set());
        common.is_clear().then(|| dw.to_witness(Vec::new()))
    });
    Ok(match failure {
        Some(w) => Verdict::fail(w),
        None => Verdict::Pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Generator;

    fn build(g: Generator) -> Complex {
        g.build().unwrap()
    }

    #[test]
    fn wheel_counts() {
        assert_eq!(enumerate_wheels(&build(Generator::Wheel(5)), 5).unwrap().len(), 1);
        assert_eq!(enumerate_wheels(&build(Generator::Icosahedron), 5).unwrap().len(), 12);
        assert_eq!(enumerate_wheels(&build(Generator::Octahedron), 4).unwrap().len(), 6);
        assert!(enumerate_wheels(&build(Generator::Icosahedron), 4).unwrap().is_empty());
    }

    #[test]
    fn boundary_length_formula() {
        // the icosahedron only has 5-wheels; its (5,5)-dwheels are planar
        let ico = build(Generator::Icosahedron);
        let dws = enumerate_dwheels(&ico, 7).unwrap();
        assert!(!dws.is_empty());
        for dw in &dws {
            assert_eq!(dw.boundary().len(), dw.boundary_len());
            assert!(dw.boundary().edges().all(|(a, b)| ico.adjacent(a, b)));
        }
        assert!(dws.iter().any(|d| d.is_planar() && d.boundary_len() == 6));
    }

    #[test]
    fn explicit_dwheels_in_icosahedron() {
        let ico = build(Generator::Icosahedron);
        let dw = enumerate_dwheels(&ico, 6).unwrap().remove(0);
        let (c1, b1) = dw.first();
        let (c2, b2) = dw.second();
        let again = DWheel::new(&ico, c1, b1.to_vec(), c2, b2.to_vec()).unwrap();
        assert!(is_planar_dwheel(&again));
        assert_eq!(dwheel_boundary(&again).len(), 6);
        // breaking v_(k-1) = w_(ℓ-1)
        let mut bad = b2.to_vec();
        bad.rotate_left(1);
        assert!(DWheel::new(&ico, c1, b1.to_vec(), c2, bad).is_err());
    }

    #[test]
    fn location_examples() {
        assert!(is_m_located(&build(Generator::Wheel(5)), 7).unwrap().is_pass());
        assert!(enumerate_dwheels(&build(Generator::Wheel(5)), 7).unwrap().is_empty());
        let v = is_m_located(&build(Generator::Icosahedron), 7).unwrap();
        assert!(matches!(v.witness(), Some(Witness::Dwheel { .. })));
        assert!(is_m_located(&build(Generator::HexPatch(3)), 7).unwrap().is_pass());
        assert!(is_m_located(&build(Generator::Cycle(5)), 3).is_err());
    }
}
