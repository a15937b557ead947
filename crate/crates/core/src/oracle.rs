//! Brute-force ground truth for Farey distances and geodesic sets.
//!
//! Searches the finite subgraph of all reduced `p/q` with `|p| ≤ N` and
//! `0 ≤ q ≤ N`, generating neighbours on the fly from the unimodular
//! condition. Nothing here touches ladders or continued fractions.

use num_traits::ToPrimitive;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::farey::{GeodesicSet, Path};
use crate::rational::ExtendedRational;

/// A vertex `(p, q)` with `q ≥ 0`, coprime, `1/0` stored as `(1, 0)`.
type Vertex = (i64, i64);

/// Largest bound the oracle accepts; keeps every product inside `i64`.
pub const MAX_BOUND: u64 = 1 << 30;

/// Limits on a single oracle query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_bound: u64,
    pub max_visited: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_bound: 1 << 22,
            max_visited: 4_000_000,
        }
    }
}

/// The induced subgraph of the Farey graph on slopes with `|p|, q ≤ bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedSubgraph {
    bound: i64,
}

fn floor_div(a: i64, b: i64) -> i64 {
    let (d, r) = (a / b, a % b);
    if r != 0 && ((r < 0) != (b < 0)) {
        d - 1
    } else {
        d
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Returns `(g, s, t)` with `a·s + b·t = g`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    (r0, s0, t0)
}

/// `k` range with `|a + k·b| ≤ n`, or `None` for "no constraint".
fn k_window(a: i64, b: i64, n: i64) -> Option<(i64, i64)> {
    match b.signum() {
        0 if a.abs() <= n => None,
        0 => Some((1, 0)),
        1 => Some((ceil_div(-n - a, b), floor_div(n - a, b))),
        _ => Some((ceil_div(n - a, b), floor_div(-n - a, b))),
    }
}

impl BoundedSubgraph {
    pub fn new(bound: u64) -> Result<Self> {
        if bound == 0 || bound > MAX_BOUND {
            return Err(Error::OracleBudget(format!(
                "bound {bound} outside 1..={MAX_BOUND}"
            )));
        }
        Ok(Self { bound: bound as i64 })
    }

    pub fn bound(&self) -> u64 {
        self.bound as u64
    }

    fn vertex(&self, x: &ExtendedRational) -> Result<Vertex> {
        let out = || Error::OutOfBound {
            slope: x.to_string(),
            bound: self.bound as u64,
        };
        let p = x.numer().to_i64().ok_or_else(out)?;
        let q = x.denom().to_i64().ok_or_else(out)?;
        if p.abs() > self.bound || q > self.bound {
            return Err(out());
        }
        Ok((p, q))
    }

    pub fn contains(&self, x: &ExtendedRational) -> bool {
        self.vertex(x).is_ok()
    }

    /// Appends every in-bound neighbour of `v` to `out`.
    fn neighbors(&self, (p, q): Vertex, out: &mut Vec<Vertex>) {
        let n = self.bound;
        // All neighbours are (r0 + k p)/(s0 + k q) with p·s0 − q·r0 = 1.
        let (g, a, b) = ext_gcd(p, q);
        let (r0, s0) = (-b * g, a * g);
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for (base, step) in [(s0, q), (r0, p)] {
            if let Some((l, h)) = k_window(base, step, n) {
                lo = lo.max(l);
                hi = hi.min(h);
            }
        }
        if lo > hi {
            return;
        }
        for k in lo..=hi {
            let (mut r, mut s) = (r0 + k * p, s0 + k * q);
            if s < 0 || (s == 0 && r < 0) {
                r = -r;
                s = -s;
            }
            out.push((r, s));
        }
    }

    fn degree_hint(&self, (p, q): Vertex) -> u64 {
        (2 * self.bound / p.abs().max(q).max(1)) as u64 + 1
    }
}

fn to_slope((p, q): Vertex) -> ExtendedRational {
    ExtendedRational::new(p, q).expect("oracle vertices are never 0/0")
}

struct Side {
    dist: FxHashMap<Vertex, u32>,
    frontier: Vec<Vertex>,
    radius: u32,
    cost: u64,
}

impl Side {
    fn new(g: &BoundedSubgraph, start: Vertex) -> Self {
        let mut dist = FxHashMap::default();
        dist.insert(start, 0);
        Self {
            dist,
            frontier: vec![start],
            radius: 0,
            cost: g.degree_hint(start),
        }
    }

    /// Number of paths from this side's root to `v` inside the BFS layers.
    fn count(&self, g: &BoundedSubgraph, v: Vertex, memo: &mut FxHashMap<Vertex, u128>) -> u128 {
        let d = self.dist[&v];
        if d == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&v) {
            return c;
        }
        let mut nbrs = Vec::new();
        g.neighbors(v, &mut nbrs);
        let mut total = 0u128;
        for u in nbrs {
            if self.dist.get(&u) == Some(&(d - 1)) {
                total = total.saturating_add(self.count(g, u, memo));
            }
        }
        memo.insert(v, total);
        total
    }

    /// All paths from `v` back to the root, each listed root-first.
    fn paths(&self, g: &BoundedSubgraph, v: Vertex) -> Vec<Vec<Vertex>> {
        let d = self.dist[&v];
        if d == 0 {
            return vec![vec![v]];
        }
        let mut nbrs = Vec::new();
        g.neighbors(v, &mut nbrs);
        let mut out = Vec::new();
        for u in nbrs {
            if self.dist.get(&u) == Some(&(d - 1)) {
                for mut p in self.paths(g, u) {
                    p.push(v);
                    out.push(p);
                }
            }
        }
        out
    }
}

/// Result of a bidirectional search that met in the middle.
struct Meeting {
    forward: Side,
    backward: Side,
    middle: Vec<Vertex>,
    length: u32,
}

impl BoundedSubgraph {
    /// Layered bidirectional BFS, always expanding the cheaper frontier.
    /// Returns `None` when `y` is unreachable from `x` inside the bound.
    fn search(&self, x: Vertex, y: Vertex, max_visited: usize) -> Result<Option<Meeting>> {
        let mut forward = Side::new(self, x);
        let mut backward = Side::new(self, y);
        if x == y {
            return Ok(Some(Meeting {
                forward,
                backward,
                middle: vec![x],
                length: 0,
            }));
        }
        let mut nbrs = Vec::new();
        loop {
            let forward_turn = forward.cost <= backward.cost;
            let (side, other) = if forward_turn {
                (&mut forward, &backward)
            } else {
                (&mut backward, &forward)
            };
            let next_radius = side.radius + 1;
            let mut next = Vec::new();
            let mut cost = 0;
            let mut middle = Vec::new();
            for &v in &side.frontier {
                nbrs.clear();
                self.neighbors(v, &mut nbrs);
                for &w in &nbrs {
                    if side.dist.contains_key(&w) {
                        continue;
                    }
                    side.dist.insert(w, next_radius);
                    next.push(w);
                    cost += self.degree_hint(w);
                    if other.dist.contains_key(&w) {
                        middle.push(w);
                    }
                }
            }
            side.frontier = next;
            side.radius = next_radius;
            side.cost = cost;
            if forward.dist.len() + backward.dist.len() > max_visited {
                return Err(Error::OracleBudget(format!(
                    "more than {max_visited} vertices visited at bound {}",
                    self.bound
                )));
            }
            if !middle.is_empty() {
                let length = forward.radius + backward.radius;
                return Ok(Some(Meeting {
                    forward,
                    backward,
                    middle,
                    length,
                }));
            }
            if forward.frontier.is_empty() || backward.frontier.is_empty() {
                return Ok(None);
            }
        }
    }
}

/// Distance inside `BoundedSubgraph(bound)`; `None` if unreachable there.
pub fn bounded_distance(x: &ExtendedRational, y: &ExtendedRational, bound: u64) -> Result<Option<u64>> {
    bounded_distance_with(x, y, bound, &OracleBudget::default())
}

pub fn bounded_distance_with(
    x: &ExtendedRational,
    y: &ExtendedRational,
    bound: u64,
    budget: &OracleBudget,
) -> Result<Option<u64>> {
    let g = BoundedSubgraph::new(bound)?;
    let (a, b) = (g.vertex(x)?, g.vertex(y)?);
    Ok(g.search(a, b, budget.max_visited)?.map(|m| u64::from(m.length)))
}

/// A stabilized distance together with the bound at which it settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stabilized {
    pub distance: u64,
    pub bound: u64,
}

fn initial_bound(x: &ExtendedRational, y: &ExtendedRational) -> Result<u64> {
    let mut m = 1u64;
    for z in [x, y] {
        for part in [z.numer().magnitude(), z.denom().magnitude()] {
            let v = part.to_u64().ok_or_else(|| {
                Error::OracleBudget(format!("{z} is too large for the oracle"))
            })?;
            m = m.max(v);
        }
    }
    m.checked_mul(4)
        .ok_or_else(|| Error::OracleBudget("initial bound overflows".into()))
}

/// Distance in the full Farey graph, found by doubling the bound from
/// `4·max(|p|, q)` until two consecutive doublings leave it unchanged.
pub fn stabilized_distance(x: &ExtendedRational, y: &ExtendedRational) -> Result<u64> {
    Ok(stabilized_with(x, y, &OracleBudget::default())?.distance)
}

pub fn stabilized_with(
    x: &ExtendedRational,
    y: &ExtendedRational,
    budget: &OracleBudget,
) -> Result<Stabilized> {
    if x == y {
        return Ok(Stabilized {
            distance: 0,
            bound: initial_bound(x, y)?,
        });
    }
    let mut bound = initial_bound(x, y)?;
    let mut history: Vec<Option<u64>> = Vec::new();
    loop {
        if bound > budget.max_bound {
            return Err(Error::OracleBudget(format!(
                "bound {bound} exceeds the limit {} before stabilizing",
                budget.max_bound
            )));
        }
        history.push(bounded_distance_with(x, y, bound, budget)?);
        if let [.., a, b, c] = history.as_slice() {
            if a == b && b == c {
                if let Some(distance) = *c {
                    return Ok(Stabilized { distance, bound });
                }
            }
        }
        bound *= 2;
    }
}

/// Every shortest path inside `BoundedSubgraph(bound)`.
pub fn bruteforce_geodesics(
    x: &ExtendedRational,
    y: &ExtendedRational,
    bound: u64,
    cap: usize,
) -> Result<GeodesicSet> {
    let budget = OracleBudget::default();
    let g = BoundedSubgraph::new(bound)?;
    let (a, b) = (g.vertex(x)?, g.vertex(y)?);
    let meeting = g
        .search(a, b, budget.max_visited)?
        .ok_or_else(|| Error::OracleBudget(format!("{y} unreachable from {x} at bound {bound}")))?;

    let mut fmemo = FxHashMap::default();
    let mut bmemo = FxHashMap::default();
    let mut total = 0u128;
    for &m in &meeting.middle {
        let f = meeting.forward.count(&g, m, &mut fmemo);
        let b = meeting.backward.count(&g, m, &mut bmemo);
        total = total.saturating_add(f.saturating_mul(b));
    }
    if total > cap as u128 {
        return Err(Error::EnumerationOverflow { cap });
    }

    let mut paths = Vec::new();
    for &m in &meeting.middle {
        let heads = meeting.forward.paths(&g, m);
        let tails = meeting.backward.paths(&g, m);
        for head in &heads {
            for tail in &tails {
                let mut v: Vec<ExtendedRational> = head.iter().copied().map(to_slope).collect();
                v.extend(tail.iter().rev().skip(1).copied().map(to_slope));
                paths.push(Path::new(v));
            }
        }
    }
    paths.sort();
    Ok(GeodesicSet {
        source: x.clone(),
        target: y.clone(),
        length: u64::from(meeting.length),
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> ExtendedRational {
        t.parse().unwrap()
    }

    fn brute_neighbors(g: &BoundedSubgraph, v: Vertex) -> Vec<Vertex> {
        let n = g.bound;
        let mut out = Vec::new();
        for q in 0..=n {
            for p in -n..=n {
                let (a, _, _) = ext_gcd(p, q);
                let reduced = a.abs() == 1 && (q > 0 || p == 1);
                if reduced && (v.0 * q - v.1 * p).abs() == 1 {
                    out.push((p, q));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn neighbour_generation_matches_scan() {
        let g = BoundedSubgraph::new(9).unwrap();
        for v in [(1, 0), (0, 1), (1, 1), (-2, 3), (3, 7), (-9, 1), (5, 9), (1, 9)] {
            let mut got = Vec::new();
            g.neighbors(v, &mut got);
            got.sort();
            assert_eq!(got, brute_neighbors(&g, v), "neighbours of {v:?}");
        }
    }

    #[test]
    fn bounded_distance_examples() {
        assert_eq!(bounded_distance(&s("1/0"), &s("0/1"), 5).unwrap(), Some(1));
        assert_eq!(bounded_distance(&s("1/0"), &s("3/10"), 50).unwrap(), Some(3));
        assert!(matches!(
            bounded_distance(&s("1/0"), &s("79/182"), 10),
            Err(Error::OutOfBound { .. })
        ));
    }

    #[test]
    fn stabilized_examples() {
        assert_eq!(stabilized_distance(&s("1/0"), &s("1/2")).unwrap(), 2);
        assert_eq!(stabilized_distance(&s("1/0"), &s("3/10")).unwrap(), 3);
        assert_eq!(stabilized_distance(&s("1/0"), &s("1/0")).unwrap(), 0);
    }

    #[test]
    fn bruteforce_examples() {
        let g = bruteforce_geodesics(&s("1/0"), &s("1/2"), 10, 100).unwrap();
        assert_eq!(g.paths.len(), 2);
        assert_eq!(g.length, 2);
        let g = bruteforce_geodesics(&s("1/0"), &s("3/10"), 50, 100).unwrap();
        assert_eq!(g.paths.len(), 1);
        assert_eq!(
            g.paths[0].vertices(),
            &["1/0", "0/1", "1/3", "3/10"].map(s)
        );
        let g = bruteforce_geodesics(&s("1/0"), &s("0/1"), 2, 100).unwrap();
        assert_eq!(g.paths.len(), 1);
        assert_eq!(g.length, 1);
    }

    #[test]
    fn bruteforce_overflow() {
        assert_eq!(
            bruteforce_geodesics(&s("1/0"), &s("1/2"), 10, 1),
            Err(Error::EnumerationOverflow { cap: 1 })
        );
    }

    #[test]
    fn monotone_in_bound() {
        let (x, y) = (s("2/7"), s("-3/5"));
        let mut last = u64::MAX;
        for n in [7, 8, 12, 20, 40, 80] {
            let d = bounded_distance(&x, &y, n).unwrap().unwrap();
            assert!(d <= last);
            last = d;
        }
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(BoundedSubgraph::new(0).is_err());
        assert!(BoundedSubgraph::new(MAX_BOUND + 1).is_err());
    }
}
