// Naive reference implementations, written straight from the definitions.
// They enumerate every coloring and share no code with the search engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every `k`-element configuration in `1..=n` whose finite sums stay in range,
/// as the set of values that must share a color.
pub fn fs_configs(n: usize, k: usize, repetition_allowed: bool) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut parts = Vec::new();
    fn go(n: usize, k: usize, rep: bool, parts: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if parts.len() == k {
            let mut sums = BTreeSet::new();
            for mask in 1u32..1 << k {
                let s: usize = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| parts[i]).sum();
                if s > n {
                    return;
                }
                sums.insert(s);
            }
            out.insert(sums.into_iter().collect());
            return;
        }
        let lo = match parts.last() {
            None => 1,
            Some(&l) if rep => l,
            Some(&l) => l + 1,
        };
        for a in lo..=n {
            parts.push(a);
            go(n, k, rep, parts, out);
            parts.pop();
        }
    }
    go(n, k, repetition_allowed, &mut parts, &mut out);
    out.into_iter().collect()
}

/// Does some `t`-coloring of `1..=n` avoid every configuration? Returns the
/// first one found in base-`t` counting order.
pub fn fs_avoiding_coloring(n: usize, k: usize, t: usize, rep: bool) -> Option<Vec<u8>> {
    let configs = fs_configs(n, k, rep);
    let mut colors = vec![0u8; n];
    loop {
        let bad = configs.iter().any(|cfg| cfg.iter().all(|&v| colors[v - 1] == colors[cfg[0] - 1]));
        if !bad {
            return Some(colors);
        }
        // Next coloring in base t; colors[0] stays 0 by symmetry.
        let mut i = n;
        loop {
            if i <= 1 {
                return None;
            }
            i -= 1;
            colors[i] += 1;
            if (colors[i] as usize) < t {
                break;
            }
            colors[i] = 0;
        }
    }
}

/// Least `R` for which no `t`-coloring of `1..=R` avoids the configurations.
pub fn naive_fs_number(k: usize, t: usize, rep: bool) -> usize {
    (1..).find(|&n| fs_avoiding_coloring(n, k, t, rep).is_none()).unwrap()
}

/// Monochromatic-union configurations for `k`-block sequences over
/// `{0..f-1}`, each listed by its nonempty-subset masks.
pub fn fu_configs(f: u32, k: usize) -> Vec<Vec<u32>> {
    let masks: Vec<u32> = (1..1u32 << f).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn go(masks: &[u32], k: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if chosen.len() == k {
            let unions: BTreeSet<u32> = (1u32..1 << k)
                .map(|sel| (0..k).filter(|j| sel >> j & 1 == 1).fold(0, |u, j| u | chosen[j]))
                .collect();
            out.push(unions.into_iter().collect());
            return;
        }
        for &m in masks {
            let after_last = chosen.last().is_none_or(|&p| {
                let top = 31 - p.leading_zeros();
                m.trailing_zeros() > top
            });
            if after_last {
                chosen.push(m);
                go(masks, k, chosen, out);
                chosen.pop();
            }
        }
    }
    go(&masks, k, &mut chosen, &mut out);
    out
}

/// Does some 2-coloring of the nonempty subsets of `{0..f-1}` avoid every
/// configuration? Colorings are bitmasks over subset index `mask - 1`; the
/// color of `{0}` is fixed to 0 by symmetry.
pub fn fu_two_coloring_exists(f: u32, k: usize) -> Option<u64> {
    let n = (1u32 << f) - 1;
    assert!(n <= 40);
    // Each config becomes a bitmask over coloring bits; it is monochromatic
    // when the coloring restricted to it is all zeros or all ones.
    let cfgs: Vec<u64> = fu_configs(f, k)
        .iter()
        .map(|c| c.iter().fold(0u64, |acc, &m| acc | 1 << (m - 1)))
        .collect();
    (0u64..1 << (n - 1)).map(|c| c << 1).find(|&c| {
        cfgs.iter().all(|&cfg| {
            let on = c & cfg;
            on != 0 && on != cfg
        })
    })
}

/// Least `F` for 2 colors; for 1 color the answer is the least `F ≥ k`.
pub fn naive_fu_number(k: usize, t: usize) -> u32 {
    assert!(t <= 2);
    (1..).find(|&f| {
        if t == 1 {
            !fu_configs(f, k).is_empty()
        } else {
            fu_two_coloring_exists(f, k).is_none()
        }
    })
    .unwrap()
}

/// SplitMix64, for reproducible generated inputs.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Largest Δ-subfamily by brute force over all subfamilies.
pub fn max_delta_size(members: &[BTreeSet<u32>]) -> usize {
    let n = members.len();
    assert!(n <= 20);
    let mut best = n.min(1);
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let root: BTreeSet<u32> = members[idx[0]].intersection(&members[idx[1]]).copied().collect();
        let ok = idx.iter().enumerate().all(|(a, &i)| {
            idx[a + 1..]
                .iter()
                .all(|&j| members[i].intersection(&members[j]).copied().collect::<BTreeSet<_>>() == root)
        });
        if ok {
            best = size;
        }
    }
    best
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// A reduced fraction `(numerator, denominator)` with positive denominator.
pub type Frac = (i128, i128);

fn frac(p: i128, q: i128) -> Frac {
    let g = gcd(p, q).max(1);
    let s = if q < 0 { -1 } else { 1 };
    (s * p / g, s * q / g)
}

fn add(a: Frac, b: Frac) -> Frac {
    frac(a.0 * b.1 + b.0 * a.1, a.1 * b.1)
}

fn lt(a: Frac, b: Frac) -> bool {
    a.0 * b.1 < b.0 * a.1
}

/// Points for `X + X ⊆ (lo, hi) ∖ holes`, straight from the recipe: move the
/// midpoint to 0, take the largest dyadic `δ ≤ 1` with `2δ` at most the
/// half-width, walk `(0, δ)` by denominator then numerator, keep `x` when
/// every sum with earlier points (and `2x`) lands in the set, and report
/// `x + mid/2`.
pub fn baire_oracle(lo: Frac, hi: Frac, holes: &[Frac], n: usize) -> Vec<Frac> {
    let mid = frac(lo.0 * hi.1 + hi.0 * lo.1, 2 * lo.1 * hi.1);
    let half = frac(hi.0 * lo.1 - lo.0 * hi.1, 2 * lo.1 * hi.1);
    let mut delta: Frac = (1, 1);
    while lt(half, (2 * delta.0, delta.1)) {
        delta = (delta.0, delta.1 * 2);
    }
    let inside = |y: Frac| lt(lo, y) && lt(y, hi) && !holes.contains(&y);
    let shift = frac(mid.0, mid.1 * 2);
    let mut out: Vec<Frac> = Vec::new();
    let mut q = 1;
    while out.len() < n {
        for p in 1.. {
            let x = (p, q);
            if !lt(x, delta) {
                break;
            }
            if gcd(p, q) != 1 {
                continue;
            }
            let y = add(x, shift);
            if inside(add(y, y)) && out.iter().all(|&z| inside(add(y, z))) {
                out.push(y);
                if out.len() == n {
                    break;
                }
            }
        }
        q += 1;
    }
    out
}

pub fn frac_text(f: Frac) -> String {
    if f.1 == 1 { f.0.to_string() } else { format!("{}/{}", f.0, f.1) }
}
