//! Simplicial geodesics in the Farey graph.
//!
//! Every geodesic between two vertices stays inside their ladder, so
//! distances and full geodesic sets are computed by breadth-first search on
//! the ladder's 1-skeleton rather than on the (infinite) Farey graph.

mod ladder;

use std::env;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::ExtendedRational;

pub use ladder::{ladder, FareyTriangle, Label, Ladder};

pub const DEFAULT_LADDER_CAP: usize = 1_000_000;
pub const DEFAULT_GEODESIC_CAP: usize = 100_000;

/// Resource limits for ladder construction and geodesic enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of ladder triangles.
    pub ladder: usize,
    /// Maximum number of geodesics returned by one enumeration.
    pub geodesics: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            ladder: DEFAULT_LADDER_CAP,
            geodesics: DEFAULT_GEODESIC_CAP,
        }
    }
}

impl Caps {
    /// Defaults overridden by `FAREY_LADDER_CAP` / `FAREY_GEO_CAP` when set.
    /// Unparsable or zero values are ignored.
    pub fn from_env() -> Self {
        let read = |key: &str, fallback: usize| {
            env::var(key)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
                .filter(|&v| v > 0)
                .unwrap_or(fallback)
        };
        let d = Self::default();
        Self {
            ladder: read("FAREY_LADDER_CAP", d.ladder),
            geodesics: read("FAREY_GEO_CAP", d.geodesics),
        }
    }
}

/// A simplicial path, listed vertex by vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<ExtendedRational>);

impl Path {
    pub fn new(vertices: Vec<ExtendedRational>) -> Self {
        Self(vertices)
    }

    pub fn vertices(&self) -> &[ExtendedRational] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive vertices adjacent and no vertex repeated.
    pub fn is_simple_farey_path(&self) -> bool {
        let adjacent = self.0.windows(2).all(|w| w[0].is_adjacent(&w[1]));
        let mut sorted = self.0.clone();
        sorted.sort();
        sorted.dedup();
        adjacent && sorted.len() == self.0.len()
    }
}

/// Every shortest path between two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicSet {
    pub source: ExtendedRational,
    pub target: ExtendedRational,
    pub length: u64,
    /// Sorted lexicographically by vertex value.
    pub paths: Vec<Path>,
}

impl GeodesicSet {
    pub fn is_unique(&self) -> bool {
        self.paths.len() == 1
    }
}

pub fn is_adjacent(x: &ExtendedRational, y: &ExtendedRational) -> bool {
    x.is_adjacent(y)
}

/// Simplicial distance in the Farey graph.
pub fn distance(x: &ExtendedRational, y: &ExtendedRational, caps: &Caps) -> Result<u64> {
    if x == y {
        return Ok(0);
    }
    if x.is_adjacent(y) {
        return Ok(1);
    }
    let l = ladder(x, y, caps)?;
    let adj = l.adjacency();
    let d = Ladder::bfs(&adj, 0)[l.target_index()];
    Ok(u64::from(d))
}

/// The geodesic DAG of a ladder: distances from both ends and path counts.
struct GeodesicDag {
    adj: Vec<Vec<usize>>,
    from_source: Vec<u32>,
    on_geodesic: Vec<bool>,
    length: u32,
    target: usize,
}

impl GeodesicDag {
    fn new(l: &Ladder) -> Self {
        let adj = l.adjacency();
        let target = l.target_index();
        let from_source = Ladder::bfs(&adj, 0);
        let from_target = Ladder::bfs(&adj, target);
        let length = from_source[target];
        let on_geodesic = from_source
            .iter()
            .zip(&from_target)
            .map(|(&a, &b)| a != u32::MAX && b != u32::MAX && a + b == length)
            .collect();
        Self {
            adj,
            from_source,
            on_geodesic,
            length,
            target,
        }
    }

    fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let next = self.from_source[u] + 1;
        self.adj[u]
            .iter()
            .copied()
            .filter(move |&v| self.on_geodesic[v] && self.from_source[v] == next)
    }

    /// Number of geodesics, saturating.
    fn count(&self) -> u128 {
        let mut order: Vec<usize> = (0..self.adj.len()).filter(|&v| self.on_geodesic[v]).collect();
        order.sort_by_key(|&v| self.from_source[v]);
        let mut ways = vec![0u128; self.adj.len()];
        ways[0] = 1;
        for &u in &order {
            let w = ways[u];
            if w.is_zero() {
                continue;
            }
            for v in self.successors(u).collect::<Vec<_>>() {
                ways[v] = ways[v].saturating_add(w);
            }
        }
        ways[self.target]
    }

    fn paths(&self, vertices: &[ExtendedRational]) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        self.walk(&mut stack, vertices, &mut out);
        out.sort();
        out
    }

    fn walk(&self, stack: &mut Vec<usize>, vertices: &[ExtendedRational], out: &mut Vec<Path>) {
        let u = *stack.last().expect("walk starts from the source");
        if u == self.target {
            out.push(Path::new(stack.iter().map(|&i| vertices[i].clone()).collect()));
            return;
        }
        for v in self.successors(u).collect::<Vec<_>>() {
            stack.push(v);
            self.walk(stack, vertices, out);
            stack.pop();
        }
    }
}

/// Number of geodesics from `x` to `y` (saturating at `u128::MAX`).
pub fn geodesic_count(x: &ExtendedRational, y: &ExtendedRational, caps: &Caps) -> Result<u128> {
    if x == y || x.is_adjacent(y) {
        return Ok(1);
    }
    let l = ladder(x, y, caps)?;
    Ok(GeodesicDag::new(&l).count())
}

/// Complete enumeration of the geodesics from `x` to `y`.
///
/// Fails with [`Error::EnumerationOverflow`] when there are more than
/// `caps.geodesics` of them.
pub fn all_geodesics(x: &ExtendedRational, y: &ExtendedRational, caps: &Caps) -> Result<GeodesicSet> {
    let trivial = |length: u64, path: Vec<ExtendedRational>| GeodesicSet {
        source: x.clone(),
        target: y.clone(),
        length,
        paths: vec![Path::new(path)],
    };
    if x == y {
        return Ok(trivial(0, vec![x.clone()]));
    }
    if x.is_adjacent(y) {
        return Ok(trivial(1, vec![x.clone(), y.clone()]));
    }
    let l = ladder(x, y, caps)?;
    let dag = GeodesicDag::new(&l);
    if dag.count() > caps.geodesics as u128 {
        return Err(Error::EnumerationOverflow { cap: caps.geodesics });
    }
    Ok(GeodesicSet {
        source: x.clone(),
        target: y.clone(),
        length: u64::from(dag.length),
        paths: dag.paths(l.vertices()),
    })
}

/// Whether exactly one geodesic joins `x` and `y`.
///
/// Short-circuits to `true` when the normalized continued fraction has every
/// entry at least 3; in that case the spine is the only geodesic.
pub fn is_unique_geodesic(x: &ExtendedRational, y: &ExtendedRational, caps: &Caps) -> Result<bool> {
    if x == y || x.is_adjacent(y) {
        return Ok(true);
    }
    let l = ladder(x, y, caps)?;
    if l.frame_cf().entries().iter().all(|a| *a >= 3u32.into()) {
        return Ok(true);
    }
    Ok(GeodesicDag::new(&l).count() == 1)
}

/// Like [`is_unique_geodesic`] but always enumerates; used to check the shortcut.
pub fn is_unique_geodesic_by_enumeration(
    x: &ExtendedRational,
    y: &ExtendedRational,
    caps: &Caps,
) -> Result<bool> {
    Ok(geodesic_count(x, y, caps)? == 1)
}
