//! Homogeneous sets for colorings of pairs.

/// A coloring of the 2-subsets of `{0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairColoring {
    n: usize,
    colors: Vec<u32>,
}

impl PairColoring {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> u32) -> PairColoring {
        let mut colors = vec![0; n * n];
        for a in 0..n {
            for b in a + 1..n {
                let c = f(a, b);
                colors[a * n + b] = c;
                colors[b * n + a] = c;
            }
        }
        PairColoring { n, colors }
    }

    /// Edge `i` in the order `(0,1), (0,2), …, (n-2,n-1)` gets bit `i` of `bits`.
    pub fn from_bits(n: usize, bits: u64) -> PairColoring {
        let mut i = 0;
        let mut colors = vec![0; n * n];
        for a in 0..n {
            for b in a + 1..n {
                let c = (bits >> i & 1) as u32;
                colors[a * n + b] = c;
                colors[b * n + a] = c;
                i += 1;
            }
        }
        PairColoring { n, colors }
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color(&self, a: usize, b: usize) -> u32 {
        self.colors[a * self.n + b]
    }

    /// Whether every pair inside `set` has one color.
    pub fn is_homogeneous(&self, set: &[usize]) -> bool {
        if set.len() < 2 {
            return true;
        }
        let c = self.color(set[0], set[1]);
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.color(a, b) == c))
    }
}

/// Lexicographically least `k`-set all of whose pairs share a color.
pub fn pair_ramsey_homogeneous(coloring: &PairColoring, k: usize) -> Option<Vec<usize>> {
    let n = coloring.vertices();
    if k > n {
        return None;
    }
    if k <= 1 {
        return Some((0..k).collect());
    }
    let mut set = Vec::with_capacity(k);
    extend(coloring, k, &mut set, None).then_some(set)
}

fn extend(coloring: &PairColoring, k: usize, set: &mut Vec<usize>, color: Option<u32>) -> bool {
    if set.len() == k {
        return true;
    }
    let n = coloring.vertices();
    let start = set.last().map_or(0, |&v| v + 1);
    for v in start..=n - (k - set.len()) {
        let c = match (set.first(), color) {
            (None, _) => None,
            (Some(&a), None) => Some(coloring.color(a, v)),
            (Some(_), Some(c)) => Some(c),
        };
        if set.iter().all(|&u| Some(coloring.color(u, v)) == c) {
            set.push(v);
            if extend(coloring, k, set, c) {
                return true;
            }
            set.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> PairColoring {
        PairColoring::from_fn(5, |a, b| {
            let d = (b - a).min(5 - (b - a));
            (d == 1) as u32
        })
    }

    #[test]
    fn pentagon_has_no_triangle() {
        assert_eq!(pair_ramsey_homogeneous(&pentagon(), 3), None);
        assert_eq!(pair_ramsey_homogeneous(&pentagon(), 2), Some(vec![0, 1]));
    }

    #[test]
    fn constant_coloring() {
        let c = PairColoring::from_fn(7, |_, _| 4);
        assert_eq!(pair_ramsey_homogeneous(&c, 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(pair_ramsey_homogeneous(&c, 8), None);
    }

    #[test]
    fn least_set_is_returned() {
        // Color 1 only on pairs inside {1, 3, 4}.
        let inside = [1, 3, 4];
        let c = PairColoring::from_fn(6, |a, b| (inside.contains(&a) && inside.contains(&b)) as u32);
        // {0,1,2} is color 0 and lexicographically first.
        assert_eq!(pair_ramsey_homogeneous(&c, 3), Some(vec![0, 1, 2]));
        let only_inside = PairColoring::from_fn(5, |a, b| {
            if inside.contains(&a) && inside.contains(&b) {
                0
            } else {
                a as u32 * 7 + b as u32 + 1
            }
        });
        assert_eq!(pair_ramsey_homogeneous(&only_inside, 3), Some(vec![1, 3, 4]));
    }

    #[test]
    fn bits_layout() {
        let c = PairColoring::from_bits(3, 0b100);
        assert_eq!((c.color(0, 1), c.color(0, 2), c.color(1, 2)), (0, 0, 1));
    }
}
