//! Finite sums, finite unions, pairwise sumsets and block sequences.

use std::collections::BTreeSet;

use crate::coloring::{ColorValue, Coloring};
use crate::error::{Error, Result};

/// One formal finite sum: the positions used and the resulting element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<T> {
    pub positions: Vec<usize>,
    pub sum: T,
}

/// Every nonempty subset of positions with its sum, in subset-rank order
/// (position `i` is bit `i`). Terms are always added in ascending position
/// order, so non-commutative carriers are handled as written.
///
/// Collisions between different position sets are kept.
pub fn fs_enumerate<T, F>(xs: &[T], add: F) -> Vec<FormalSum<T>>
where
    T: Clone,
    F: Fn(&T, &T) -> T,
{
    assert!(xs.len() < 64, "at most 63 generators");
    let total = 1u64 << xs.len();
    let mut sums: Vec<Option<T>> = vec![None; total as usize];
    let mut out = Vec::with_capacity(total as usize - 1);
    for mask in 1..total {
        let top = 63 - mask.leading_zeros() as usize;
        let rest = mask & !(1u64 << top);
        let s = match &sums[rest as usize] {
            None => xs[top].clone(),
            Some(prefix) => add(prefix, &xs[top]),
        };
        sums[mask as usize] = Some(s.clone());
        out.push(FormalSum {
            positions: (0..xs.len()).filter(|i| mask >> i & 1 == 1).collect(),
            sum: s,
        });
    }
    out
}

/// Just the sums from [`fs_enumerate`], with multiplicity.
pub fn fs_values<T, F>(xs: &[T], add: F) -> Vec<T>
where
    T: Clone,
    F: Fn(&T, &T) -> T,
{
    fs_enumerate(xs, add).into_iter().map(|f| f.sum).collect()
}

/// A sequence of nonempty finite sets, each lying entirely below the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSeq {
    blocks: Vec<BTreeSet<usize>>,
}

impl BlockSeq {
    pub fn new(blocks: Vec<BTreeSet<usize>>) -> Result<BlockSeq> {
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidBlocks(format!("block {i} is empty")));
            }
        }
        for (i, pair) in blocks.windows(2).enumerate() {
            let (lo, hi) = (pair[0].last().unwrap(), pair[1].first().unwrap());
            if lo >= hi {
                return Err(Error::InvalidBlocks(format!(
                    "max of block {i} ({lo}) is not below min of block {} ({hi})",
                    i + 1
                )));
            }
        }
        Ok(BlockSeq { blocks })
    }

    /// Blocks given as bitmasks over `{0..63}`.
    pub fn from_masks(masks: &[u64]) -> Result<BlockSeq> {
        BlockSeq::new(
            masks
                .iter()
                .map(|&m| (0..64).filter(|i| m >> i & 1 == 1).collect())
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// All unions of nonempty subfamilies, in subset-rank order. Blockness makes
/// them pairwise distinct, so there are exactly `2^|B| - 1`.
pub fn fu_enumerate(blocks: &BlockSeq) -> Vec<BTreeSet<usize>> {
    fs_values(blocks.blocks(), |a, b| a.union(b).copied().collect())
}

/// `{a + b : a, b ∈ M}`, including `a = b`.
pub fn pairwise_sumset<T, F>(m: &[T], add: F) -> BTreeSet<T>
where
    T: Ord,
    F: Fn(&T, &T) -> T,
{
    let mut out = BTreeSet::new();
    for (i, a) in m.iter().enumerate() {
        for b in &m[i..] {
            out.insert(add(a, b));
        }
    }
    out
}

/// The common color of every element, or `None` if two colors differ (or the
/// collection is empty).
pub fn is_monochromatic<'a, T, C, I>(items: I, coloring: &C) -> Result<Option<ColorValue>>
where
    T: 'a,
    C: Coloring<T> + ?Sized,
    I: IntoIterator<Item = &'a T>,
{
    let mut common: Option<ColorValue> = None;
    for x in items {
        let c = coloring.color(x)?;
        match &common {
            None => common = Some(c),
            Some(prev) if *prev != c => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ColoringSpec;
    use crate::exact::{QVec, Rat};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn fs_of_powers_of_two() {
        let sums = fs_values(&[1u64, 2, 4], |a, b| a + b);
        assert_eq!(sums, [1, 2, 3, 4, 5, 6, 7]);
        let formal = fs_enumerate(&[1u64, 2, 4], |a, b| a + b);
        assert_eq!(formal[2].positions, [0, 1]);
    }

    #[test]
    fn fs_of_basis_vectors() {
        let sums = fs_values(&[QVec::basis(0), QVec::basis(1)], |a, b| a + b);
        assert_eq!(
            sums,
            [QVec::basis(0), QVec::basis(1), QVec::from_ints(&[1, 1])]
        );
    }

    #[test]
    fn fs_singleton_and_collisions() {
        assert_eq!(fs_values(&[7i64], |a, b| a + b), [7]);
        // 1 + 2 = 3 collides with the third generator; both stay visible.
        let formal = fs_enumerate(&[1i64, 2, 3], |a, b| a + b);
        let threes: Vec<_> = formal.iter().filter(|f| f.sum == 3).collect();
        assert_eq!(threes.len(), 2);
    }

    #[test]
    fn fs_sums_in_ascending_order() {
        // String concatenation is associative but not commutative.
        let xs = ["a".to_string(), "b".to_string(), "c".to_string()];
        let sums = fs_values(&xs, |a, b| format!("{a}{b}"));
        assert_eq!(sums, ["a", "b", "ab", "c", "ac", "bc", "abc"]);
    }

    #[test]
    fn fu_examples() {
        let b = BlockSeq::new(vec![set(&[0]), set(&[1])]).unwrap();
        assert_eq!(fu_enumerate(&b), [set(&[0]), set(&[1]), set(&[0, 1])]);
        let b = BlockSeq::new(vec![set(&[0, 1]), set(&[3])]).unwrap();
        assert_eq!(fu_enumerate(&b), [set(&[0, 1]), set(&[3]), set(&[0, 1, 3])]);
        let b = BlockSeq::new(vec![set(&[2, 5])]).unwrap();
        assert_eq!(fu_enumerate(&b), [set(&[2, 5])]);
    }

    #[test]
    fn invalid_blocks_rejected() {
        assert!(BlockSeq::new(vec![set(&[0, 2]), set(&[1])]).is_err());
        assert!(BlockSeq::new(vec![set(&[0]), set(&[])]).is_err());
        assert!(BlockSeq::new(vec![set(&[3]), set(&[3])]).is_err());
    }

    #[test]
    fn pairwise_examples() {
        let s = pairwise_sumset(&[1i64, 2], |a, b| a + b);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), [2, 3, 4]);
        let s = pairwise_sumset(&[0i64], |a, b| a + b);
        assert_eq!(s.into_iter().collect::<Vec<_>>(), [0]);
        let s = pairwise_sumset(&[QVec::basis(0), QVec::basis(1)], |a, b| a + b);
        let expect: BTreeSet<QVec> = [
            QVec::from_ints(&[2]),
            QVec::from_ints(&[1, 1]),
            QVec::from_ints(&[0, 2]),
        ]
        .into();
        assert_eq!(s, expect);
    }

    #[test]
    fn monochromatic_examples() {
        let dyadic: ColoringSpec = "dyadic".parse().unwrap();
        let r = |s: &str| s.parse::<Rat>().unwrap();
        assert_eq!(
            is_monochromatic(&[r("0")], &dyadic).unwrap(),
            Some(ColorValue::Int(0))
        );
        assert_eq!(is_monochromatic(&[r("1"), r("3")], &dyadic).unwrap(), None);
        assert_eq!(
            is_monochromatic(&[r("17/5"), r("-3/5"), r("14/5")], &dyadic).unwrap(),
            Some(ColorValue::Int(1))
        );
        let inner: ColoringSpec = "self_inner".parse().unwrap();
        assert!(is_monochromatic(&[r("1")], &inner).is_err());
    }
}
