//! Exact arithmetic in Q(φ), φ² = φ + 1.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

type Q = Ratio<i64>;

/// The number `a + b·φ` with rational `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Golden {
    pub a: Q,
    pub b: Q,
}

impl Golden {
    pub fn new(a: Q, b: Q) -> Self {
        Golden { a, b }
    }

    pub fn int(a: i64) -> Self {
        Golden { a: Q::from_integer(a), b: Q::zero() }
    }

    pub fn phi() -> Self {
        Golden { a: Q::zero(), b: Q::from_integer(1) }
    }

    /// 1/φ = φ − 1.
    pub fn inv_phi() -> Self {
        Golden { a: Q::from_integer(-1), b: Q::from_integer(1) }
    }

    pub fn half(self) -> Self {
        let h = Q::new(1, 2);
        Golden { a: self.a * h, b: self.b * h }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of `a + bφ = (2a + b)/2 + (b/2)√5`, decided without floats.
    pub fn signum(&self) -> Ordering {
        let p = self.a * 2 + self.b;
        let q = self.b;
        let zero = Q::zero();
        match (p.cmp(&zero), q.cmp(&zero)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (Ordering::Greater, _) => (p * p).cmp(&(q * q * 5)),
            (_, _) => (q * q * 5).cmp(&(p * p)),
        }
    }

    pub fn abs(self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self
        }
    }

    pub fn to_f64(self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let f = |q: Q| *q.numer() as f64 / *q.denom() as f64;
        f(self.a) + f(self.b) * phi
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        let bd = self.b * o.b;
        Golden {
            a: self.a * o.a + bd,
            b: self.a * o.b + self.b * o.a + bd,
        }
    }
}

impl PartialOrd for Golden {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Golden {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum()
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let p = Golden::phi();
        assert_eq!(p * p, p + Golden::int(1));
        assert_eq!(p * Golden::inv_phi(), Golden::int(1));
    }

    #[test]
    fn ordering_matches_floats() {
        let vals = [
            Golden::int(2),
            Golden::phi(),
            Golden::inv_phi(),
            Golden::int(2) - Golden::phi(),
            Golden::phi() - Golden::int(2),
            Golden::new(Q::new(-3, 2), Q::new(1, 1)),
            Golden::new(Q::new(5, 3), Q::new(-1, 1)),
        ];
        for x in vals {
            for y in vals {
                let fc = x.to_f64().partial_cmp(&y.to_f64()).unwrap();
                assert_eq!(x.cmp(&y), fc, "{x:?} vs {y:?}");
            }
        }
    }
}
