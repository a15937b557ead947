use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Caps, Path};
use crate::error::{Error, Result};
use crate::rational::{cf_expand, normalize_pair, ContinuedFraction, ExtendedRational, MobiusMap};

/// Which side of the oriented geodesic a triangle's pivot lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    L,
    R,
}

/// An ideal triangle of the Farey tessellation, tagged with its ladder label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyTriangle {
    pub vertices: [ExtendedRational; 3],
    pub label: Label,
}

/// The ordered Farey triangles crossed by the hyperbolic geodesic from
/// `source` to `target`.
///
/// The ladder is built in a normalized frame `(1/0, r)` with `0 < r < 1`,
/// where its triangles are the Stern–Brocot descent towards `r`, and every
/// vertex is then mapped back to the original pair. The first run is always
/// labelled `L`; its pivot is `0/1` in the frame.
#[derive(Debug, Clone)]
pub struct Ladder {
    source: ExtendedRational,
    target: ExtendedRational,
    frame: MobiusMap,
    frame_cf: ContinuedFraction,
    vertices: Vec<ExtendedRational>,
    rails: Vec<Option<Label>>,
    corners: Vec<[usize; 3]>,
    labels: Vec<Label>,
    runs: Vec<u64>,
    pivots: Vec<usize>,
    target_index: usize,
}

/// Builds `L(x, y)`.
///
/// Equal endpoints give [`Error::EmptyLadder`], adjacent ones
/// [`Error::DegenerateLadder`]; `caps.ladder` bounds the triangle count.
pub fn ladder(x: &ExtendedRational, y: &ExtendedRational, caps: &Caps) -> Result<Ladder> {
    if x == y {
        return Err(Error::EmptyLadder(x.to_string()));
    }
    if x.is_adjacent(y) {
        return Err(Error::DegenerateLadder(x.to_string(), y.to_string()));
    }
    let (frame, r) = normalize_pair(x, y)?;
    let frame_cf = cf_expand(&r)?;
    let size = frame_cf.entry_sum();
    if size.to_usize().is_none_or(|s| s > caps.ladder) {
        return Err(Error::LadderTooLarge {
            size: size.to_string(),
            cap: caps.ladder,
        });
    }
    Ok(Ladder::build(x, y, frame, frame_cf, &r))
}

impl Ladder {
    fn build(
        source: &ExtendedRational,
        target: &ExtendedRational,
        frame: MobiusMap,
        frame_cf: ContinuedFraction,
        r: &ExtendedRational,
    ) -> Self {
        let (rp, rq) = (r.numer().clone(), r.denom().clone());
        // Which rail a finite frame vertex a/b sits on: L below r, R above.
        let side = |a: &BigInt, b: &BigInt| -> Label {
            if a * &rq < &rp * b {
                Label::L
            } else {
                Label::R
            }
        };

        let mut frame_vertices: Vec<(BigInt, BigInt)> = vec![
            (BigInt::one(), BigInt::zero()),
            (BigInt::zero(), BigInt::one()),
            (BigInt::one(), BigInt::one()),
        ];
        let mut rails = vec![None, Some(Label::L), Some(Label::R)];
        let mut corners = vec![[0, 1, 2]];
        let mut labels = vec![Label::L];
        let mut tri_pivot = vec![1usize];
        let (mut lo, mut hi) = (1usize, 2usize);

        let target_index = loop {
            let m = (
                &frame_vertices[lo].0 + &frame_vertices[hi].0,
                &frame_vertices[lo].1 + &frame_vertices[hi].1,
            );
            let idx = frame_vertices.len();
            corners.push([lo, idx, hi]);
            if m.0 == rp && m.1 == rq {
                frame_vertices.push(m);
                rails.push(None);
                labels.push(*labels.last().expect("first triangle is always present"));
                tri_pivot.push(*tri_pivot.last().expect("first triangle is always present"));
                break idx;
            }
            let rail = side(&m.0, &m.1);
            let pivot = match rail {
                // r sits below the mediant: keep the lower endpoint.
                Label::R => {
                    hi = idx;
                    lo
                }
                Label::L => {
                    lo = idx;
                    hi
                }
            };
            frame_vertices.push(m);
            rails.push(Some(rail));
            labels.push(rails[pivot].expect("pivots are never endpoints"));
            tri_pivot.push(pivot);
        };

        let mut runs: Vec<u64> = Vec::new();
        let mut pivots = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            if i > 0 && labels[i - 1] == *label {
                *runs.last_mut().expect("run started earlier") += 1;
            } else {
                runs.push(1);
                pivots.push(tri_pivot[i]);
            }
        }

        let back = frame.inverse();
        let identity = back == MobiusMap::identity();
        let vertices = frame_vertices
            .into_iter()
            .map(|(a, b)| {
                let v = ExtendedRational::from_coprime(a, b);
                if identity {
                    v
                } else {
                    back.apply(&v)
                }
            })
            .collect::<Vec<_>>();
        debug_assert_eq!(&vertices[0], source);
        debug_assert_eq!(&vertices[target_index], target);

        Self {
            source: source.clone(),
            target: target.clone(),
            frame,
            frame_cf,
            vertices,
            rails,
            corners,
            labels,
            runs,
            pivots,
            target_index,
        }
    }

    pub fn source(&self) -> &ExtendedRational {
        &self.source
    }

    pub fn target(&self) -> &ExtendedRational {
        &self.target
    }

    /// The map sending the ladder into its `(1/0, r)` frame.
    pub fn frame(&self) -> &MobiusMap {
        &self.frame
    }

    /// Continued fraction of the frame endpoint `r`.
    pub fn frame_cf(&self) -> &ContinuedFraction {
        &self.frame_cf
    }

    pub fn triangle_count(&self) -> usize {
        self.corners.len()
    }

    pub fn triangles(&self) -> Vec<FareyTriangle> {
        self.corners
            .iter()
            .zip(&self.labels)
            .map(|(c, &label)| FareyTriangle {
                vertices: c.map(|i| self.vertices[i].clone()),
                label,
            })
            .collect()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Run lengths of the label sequence.
    pub fn ladder_type(&self) -> &[u64] {
        &self.runs
    }

    /// One pivot per run, in order.
    pub fn pivots(&self) -> Vec<ExtendedRational> {
        self.pivots.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// All ladder vertices; index 0 is the source.
    pub fn vertices(&self) -> &[ExtendedRational] {
        &self.vertices
    }

    /// Vertex indices of each triangle.
    pub fn corners(&self) -> &[[usize; 3]] {
        &self.corners
    }

    /// Side of the geodesic a vertex lies on (`None` for the two endpoints).
    pub fn rail(&self, vertex: usize) -> Option<Label> {
        self.rails[vertex]
    }

    pub fn target_index(&self) -> usize {
        self.target_index
    }

    /// The path `source, pivots..., target`. Needs at least three triangles.
    pub fn spine(&self) -> Result<Path> {
        if self.triangle_count() < 3 {
            return Err(Error::SpineUndefined(self.triangle_count()));
        }
        let mut v = Vec::with_capacity(self.pivots.len() + 2);
        v.push(self.source.clone());
        v.extend(self.pivots());
        v.push(self.target.clone());
        Ok(Path::new(v))
    }

    /// Adjacency lists of the ladder's 1-skeleton.
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &[a, b, c] in &self.corners {
            for (u, v) in [(a, b), (b, c), (a, c)] {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Breadth-first distances from `start` inside the ladder.
    pub(crate) fn bfs(adj: &[Vec<usize>], start: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; adj.len()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{cf_eval, convergents};

    fn s(t: &str) -> ExtendedRational {
        t.parse().unwrap()
    }

    fn lad(x: &str, y: &str) -> Ladder {
        ladder(&s(x), &s(y), &Caps::default()).unwrap()
    }

    #[test]
    fn ladder_of_type_2_4_1_3() {
        let y = cf_eval(&ContinuedFraction::from_u64s(&[2, 4, 1, 3]).unwrap());
        assert_eq!(y, s("19/42"));
        let l = lad("1/0", "19/42");
        assert_eq!(l.ladder_type(), &[2, 4, 1, 3]);
        assert_eq!(l.triangle_count(), 10);
        assert_eq!(l.pivots().len(), 4);
    }

    #[test]
    fn tangle_slope_ladder_type() {
        assert_eq!(lad("1/0", "79/182").ladder_type(), &[2, 3, 3, 2, 3]);
    }

    #[test]
    fn single_fan() {
        let l = lad("1/0", "1/2");
        assert_eq!(l.ladder_type(), &[2]);
        assert_eq!(l.triangle_count(), 2);
        assert_eq!(l.spine(), Err(Error::SpineUndefined(2)));
    }

    #[test]
    fn three_three_ladder() {
        let l = lad("1/0", "3/10");
        assert_eq!(l.ladder_type(), &[3, 3]);
        assert_eq!(l.pivots(), vec![s("0/1"), s("1/3")]);
        let spine = l.spine().unwrap();
        assert_eq!(spine.vertices(), &["1/0", "0/1", "1/3", "3/10"].map(s));
        assert_eq!(spine.len(), 3);
    }

    #[test]
    fn pivots_are_shifted_convergents() {
        let cf = ContinuedFraction::from_u64s(&[2, 3, 3, 2, 3]).unwrap();
        let l = lad("1/0", "79/182");
        let mut expected = vec![s("0/1")];
        let conv = convergents(&cf);
        expected.extend(conv[..conv.len() - 1].iter().cloned());
        assert_eq!(l.pivots(), expected);
    }

    #[test]
    fn degenerate_pairs_have_no_ladder() {
        let caps = Caps::default();
        assert!(matches!(ladder(&s("2/3"), &s("2/3"), &caps), Err(Error::EmptyLadder(_))));
        assert!(matches!(
            ladder(&s("1/0"), &s("5/1"), &caps),
            Err(Error::DegenerateLadder(..))
        ));
    }

    #[test]
    fn cap_is_enforced_before_building() {
        let caps = Caps { ladder: 5, geodesics: 10 };
        assert!(matches!(
            ladder(&s("1/0"), &s("1/7"), &caps),
            Err(Error::LadderTooLarge { .. })
        ));
        assert!(ladder(&s("1/0"), &s("1/5"), &caps).is_ok());
    }

    #[test]
    fn general_pair_maps_back() {
        let l = lad("-2/5", "7/3");
        assert_eq!(l.vertices()[0], s("-2/5"));
        assert_eq!(l.vertices()[l.target_index()], s("7/3"));
        for t in l.triangles() {
            let [a, b, c] = &t.vertices;
            assert!(a.is_adjacent(b) && b.is_adjacent(c) && a.is_adjacent(c));
        }
    }
}
