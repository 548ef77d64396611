//! Rectangular parameter regions and deterministic grid sampling.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Rat, Valuation};

/// Closed rational interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Interval { lo, hi }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }
}

/// A rectangular box of valuations: one closed interval per parameter.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Region {
    bounds: BTreeMap<String, Interval>,
    pub label: String,
}

impl Region {
    pub fn new() -> Self {
        Region::default()
    }

    pub fn with_bound(mut self, name: &str, lo: Rat, hi: Rat) -> Self {
        self.bounds.insert(name.to_string(), Interval::new(lo, hi));
        self
    }

    pub fn set_bound(&mut self, name: &str, iv: Interval) {
        self.bounds.insert(name.to_string(), iv);
    }

    pub fn bound(&self, name: &str) -> Option<&Interval> {
        self.bounds.get(name)
    }

    pub fn params(&self) -> impl Iterator<Item = &str> {
        self.bounds.keys().map(|s| s.as_str())
    }

    pub fn is_empty_box(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn contains(&self, v: &Valuation) -> bool {
        self.bounds.iter().all(|(name, iv)| match v.get(name) {
            Some(x) => iv.contains(x),
            None => false,
        })
    }

    /// Per-parameter interval intersection. Parameters bounded on one side
    /// only keep that bound. `None` when some intersection is empty.
    pub fn intersect(&self, other: &Region) -> Option<Region> {
        let mut out = Region::new();
        out.label = if self.label.is_empty() || other.label.is_empty() {
            format!("{}{}", self.label, other.label)
        } else {
            format!("{} & {}", self.label, other.label)
        };
        for (name, iv) in &self.bounds {
            match other.bounds.get(name) {
                None => out.bounds.insert(name.clone(), iv.clone()),
                Some(jv) => out.bounds.insert(name.clone(), iv.intersect(jv)?),
            };
        }
        for (name, jv) in &other.bounds {
            if !self.bounds.contains_key(name) {
                out.bounds.insert(name.clone(), jv.clone());
            }
        }
        Some(out)
    }

    /// Deterministic sample sequence: the uniform grid with both endpoints
    /// on every axis, then an equally large seeded pseudorandom batch.
    /// Duplicates removed, order stable.
    pub fn sample(&self, grid_points_per_axis: u32, seed: u64) -> Vec<Valuation> {
        self.sample_filtered(grid_points_per_axis, seed, |_| true)
    }

    /// As [`Region::sample`], keeping only valuations accepted by `keep`.
    /// Used to carve non-rectangular regions out of their bounding box.
    pub fn sample_filtered(
        &self,
        grid_points_per_axis: u32,
        seed: u64,
        keep: impl Fn(&Valuation) -> bool,
    ) -> Vec<Valuation> {
        assert!(grid_points_per_axis >= 1);
        let names: Vec<&String> = self.bounds.keys().collect();
        let mut out: Vec<Valuation> = Vec::new();
        let mut seen: std::collections::BTreeSet<Vec<(String, Rat)>> = Default::default();

        let mut push = |v: Valuation, out: &mut Vec<Valuation>| {
            let key: Vec<(String, Rat)> =
                v.iter().map(|(k, x)| (k.to_string(), x.clone())).collect();
            if seen.insert(key) && keep(&v) {
                out.push(v);
            }
        };

        // Grid part: cartesian product of per-axis uniform grids.
        let axis_values: Vec<Vec<Rat>> = names
            .iter()
            .map(|n| {
                let iv = &self.bounds[*n];
                if grid_points_per_axis == 1 {
                    vec![iv.lo.clone()]
                } else {
                    let steps = grid_points_per_axis - 1;
                    (0..grid_points_per_axis)
                        .map(|k| {
                            let t = Rat::new(BigInt::from(k), BigInt::from(steps));
                            iv.lo.clone() + (iv.hi.clone() - iv.lo.clone()) * t
                        })
                        .collect()
                }
            })
            .collect();
        let grid_count: usize = axis_values.iter().map(|v| v.len()).product();
        for idx in 0..grid_count {
            let mut rem = idx;
            let mut v = Valuation::new();
            for (d, n) in names.iter().enumerate() {
                let vals = &axis_values[d];
                v.set(n, vals[rem % vals.len()].clone());
                rem /= vals.len();
            }
            push(v, &mut out);
        }

        // Seeded batch of the same size. Random rationals on a fine lattice
        // keep everything exact.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        const DENOM: u64 = 1 << 16;
        for _ in 0..grid_count {
            let mut v = Valuation::new();
            for n in &names {
                let iv = &self.bounds[*n];
                let k: u64 = rng.gen_range(0..=DENOM);
                let t = Rat::new(BigInt::from(k), BigInt::from(DENOM));
                v.set(n, iv.lo.clone() + (iv.hi.clone() - iv.lo.clone()) * t);
            }
            push(v, &mut out);
        }
        out
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, iv) in &self.bounds {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            write!(f, "{name}:[{},{}]", iv.lo, iv.hi)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn containment_is_boundary_inclusive() {
        let r = Region::new().with_bound("p", rat(0, 1), rat(1, 10));
        let mut v = Valuation::new();
        v.set("p", rat(1, 10));
        assert!(r.contains(&v));
        v.set("p", rat(1, 2));
        assert!(!r.contains(&v));
    }

    #[test]
    fn grid_includes_endpoints_and_midpoint() {
        let r = Region::new().with_bound("p", rat(0, 1), rat(1, 1));
        let s = r.sample(3, 0);
        let grid: Vec<&Rat> = s.iter().take(3).map(|v| v.get("p").unwrap()).collect();
        assert_eq!(grid, vec![&rat(0, 1), &rat(1, 2), &rat(1, 1)]);
        assert_eq!(s.len(), 6); // 3 grid + 3 seeded (no collisions expected)
    }

    #[test]
    fn grid_one_gives_lower_corner() {
        let r = Region::new().with_bound("p", rat(0, 1), rat(1, 1));
        let s = r.sample(1, 0);
        assert_eq!(s[0].get("p").unwrap(), &rat(0, 1));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn two_axis_grid_has_corner_products() {
        let r = Region::new()
            .with_bound("p", rat(0, 1), rat(1, 10))
            .with_bound("q", rat(0, 1), rat(1, 1));
        let s = r.sample(2, 7);
        assert_eq!(s.len(), 8); // 4 corners + 4 seeded
    }

    #[test]
    fn sampling_is_deterministic() {
        let r = Region::new().with_bound("p", rat(0, 1), rat(1, 1));
        assert_eq!(r.sample(4, 123), r.sample(4, 123));
        assert_ne!(r.sample(4, 123), r.sample(4, 124));
    }
}
