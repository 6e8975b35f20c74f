//! Finite grids standing in for ℚ and for ℚ-vector spaces.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{QVec, Rat};

/// Every `p/q` in lowest terms with `1 ≤ q ≤ max_den` and `|p/q| ≤ max_val`,
/// listed by denominator, then numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalGrid {
    pub max_den: u32,
    pub max_val: u32,
}

impl RationalGrid {
    pub fn new(max_den: u32, max_val: u32) -> Result<RationalGrid> {
        if max_den == 0 {
            return Err(Error::Precondition("grid denominator bound must be positive".into()));
        }
        Ok(RationalGrid { max_den, max_val })
    }

    pub fn points(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for q in 1..=self.max_den as i64 {
            let bound = q * self.max_val as i64;
            for p in -bound..=bound {
                if p.gcd(&q) == 1 {
                    out.push(Rat::new(p, q));
                }
            }
        }
        out
    }

    pub fn contains(&self, r: &Rat) -> bool {
        r.denom() <= &BigInt::from(self.max_den) && r.abs() <= Rat::from_integer(self.max_val as i64)
    }
}

/// Integer vectors in `[-range, range]^dim`, in lexicographic order of the
/// coefficient tuple (index 0 most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorGrid {
    pub dim: usize,
    pub range: i64,
}

impl VectorGrid {
    pub fn new(dim: usize, range: i64) -> Result<VectorGrid> {
        if dim == 0 || range < 0 {
            return Err(Error::Precondition("vector grid needs dim ≥ 1 and range ≥ 0".into()));
        }
        Ok(VectorGrid { dim, range })
    }

    pub fn points(&self) -> Vec<QVec> {
        let side = (2 * self.range + 1) as usize;
        let total = side.pow(self.dim as u32);
        let mut out = Vec::with_capacity(total);
        let mut coefs = vec![-self.range; self.dim];
        for _ in 0..total {
            out.push(QVec::from_ints(&coefs));
            for slot in coefs.iter_mut().rev() {
                if *slot < self.range {
                    *slot += 1;
                    break;
                }
                *slot = -self.range;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rational_grid() {
        let g = RationalGrid::new(2, 1).unwrap();
        let pts: Vec<String> = g.points().iter().map(|r| r.to_string()).collect();
        assert_eq!(pts, ["-1", "0", "1", "-1/2", "1/2"]);
    }

    #[test]
    fn grid_has_no_duplicates() {
        let g = RationalGrid::new(6, 8).unwrap();
        let pts = g.points();
        let set: std::collections::BTreeSet<_> = pts.iter().cloned().collect();
        assert_eq!(set.len(), pts.len());
        assert!(pts.iter().all(|r| g.contains(r)));
        assert!(pts.contains(&"17/5".parse().unwrap()));
    }

    #[test]
    fn vector_grid_order() {
        let g = VectorGrid::new(2, 1).unwrap();
        let pts: Vec<String> = g.points().iter().map(|v| v.to_string()).collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], "{0:-1, 1:-1}");
        assert_eq!(pts[4], "{}");
        assert_eq!(pts[8], "{0:1, 1:1}");
    }
}
