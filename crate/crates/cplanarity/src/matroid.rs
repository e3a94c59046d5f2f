//! Matroids over an indexed ground set and maximum common independent sets.
//!
//! Two concrete matroids are enough here: the graphic matroid (forests of a
//! multigraph) and the partition matroid (bounded picks per class). The
//! intersection routine is the classic augmenting-path scheme: build the
//! exchange graph of the current common independent set, find a shortest
//! alternating path from the sources (elements addable in the first matroid)
//! to the sinks (addable in the second), flip it, repeat. Shortest paths keep
//! the exchange arguments valid; ties break toward smaller element indices,
//! so the result is deterministic.

use crate::uf::UnionFind;
use std::collections::VecDeque;

pub trait Matroid {
    fn ground_size(&self) -> usize;
    fn is_independent(&self, subset: &[usize]) -> bool;
}

/// Forests of a multigraph on `vertex_count` vertices; element i is the edge
/// `edges[i]`. Loops are dependent by themselves.
#[derive(Clone, Debug)]
pub struct GraphicMatroid {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        for &(u, v) in &edges {
            assert!(u < vertex_count && v < vertex_count, "edge endpoint out of range");
        }
        GraphicMatroid { vertex_count, edges }
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, subset: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        subset.iter().all(|&i| {
            let (u, v) = self.edges[i];
            uf.union(u, v)
        })
    }
}

/// At most `capacity[c]` elements from each class c.
#[derive(Clone, Debug)]
pub struct PartitionMatroid {
    class_of: Vec<usize>,
    capacity: Vec<usize>,
}

impl PartitionMatroid {
    pub fn new(class_of: Vec<usize>, capacity: Vec<usize>) -> Self {
        for &c in &class_of {
            assert!(c < capacity.len(), "class out of range");
        }
        PartitionMatroid { class_of, capacity }
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.class_of.len()
    }

    fn is_independent(&self, subset: &[usize]) -> bool {
        let mut used = vec![0usize; self.capacity.len()];
        for &i in subset {
            let c = self.class_of[i];
            used[c] += 1;
            if used[c] > self.capacity[c] {
                return false;
            }
        }
        true
    }
}

fn with_swap(current: &[usize], out: Option<usize>, inn: usize) -> Vec<usize> {
    let mut s: Vec<usize> = current
        .iter()
        .copied()
        .filter(|&x| Some(x) != out)
        .collect();
    s.push(inn);
    s
}

/// Maximum common independent set of two matroids over the same ground set,
/// returned sorted. Panics if an augmentation ever produces a set the
/// matroid oracles reject, which would mean an oracle is inconsistent.
pub fn max_common_independent_set(m1: &dyn Matroid, m2: &dyn Matroid) -> Vec<usize> {
    let n = m1.ground_size();
    assert_eq!(n, m2.ground_size(), "matroids share the ground set");
    let mut in_set = vec![false; n];
    loop {
        let current: Vec<usize> = (0..n).filter(|&i| in_set[i]).collect();
        // layer 0: elements addable in m1
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut dist: Vec<Option<usize>> = vec![None; n];
        let mut queue = VecDeque::new();
        for y in 0..n {
            if !in_set[y] && m1.is_independent(&with_swap(&current, None, y)) {
                dist[y] = Some(0);
                queue.push_back(y);
            }
        }
        let mut target: Option<usize> = None;
        'bfs: while let Some(u) = queue.pop_front() {
            if !in_set[u] && m2.is_independent(&with_swap(&current, None, u)) {
                target = Some(u);
                break 'bfs;
            }
            for v in 0..n {
                if dist[v].is_some() || v == u {
                    continue;
                }
                let arc = if !in_set[u] && in_set[v] {
                    // leaving element that repairs m2
                    m2.is_independent(&with_swap(&current, Some(v), u))
                } else if in_set[u] && !in_set[v] {
                    // entering element allowed by m1 after dropping u
                    m1.is_independent(&with_swap(&current, Some(u), v))
                } else {
                    false
                };
                if arc {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        let Some(t) = target else {
            let result: Vec<usize> = (0..n).filter(|&i| in_set[i]).collect();
            assert!(m1.is_independent(&result) && m2.is_independent(&result));
            return result;
        };
        let mut x = t;
        loop {
            in_set[x] = !in_set[x];
            match parent[x] {
                Some(p) => x = p,
                None => break,
            }
        }
        let next: Vec<usize> = (0..n).filter(|&i| in_set[i]).collect();
        assert!(
            m1.is_independent(&next) && m2.is_independent(&next),
            "augmenting path produced a dependent set"
        );
    }
}

/// Exhaustive maximum over all subsets; only for small ground sets.
pub fn max_common_independent_brute(m1: &dyn Matroid, m2: &dyn Matroid) -> usize {
    let n = m1.ground_size();
    assert_eq!(n, m2.ground_size());
    assert!(n <= 20, "2^{n} subsets is too many");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if m1.is_independent(&subset) && m2.is_independent(&subset) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphic_matroid_rejects_cycles_and_loops() {
        let m = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (2, 0), (1, 1)]);
        assert!(m.is_independent(&[0, 1]));
        assert!(!m.is_independent(&[0, 1, 2]));
        assert!(!m.is_independent(&[3]));
        assert!(m.is_independent(&[]));
    }

    #[test]
    fn partition_matroid_counts_per_class() {
        let m = PartitionMatroid::new(vec![0, 0, 1, 1, 1], vec![1, 2]);
        assert!(m.is_independent(&[0, 2, 3]));
        assert!(!m.is_independent(&[0, 1]));
        assert!(!m.is_independent(&[2, 3, 4]));
    }

    #[test]
    fn intersection_on_a_triangle_with_unit_classes() {
        // forests of the triangle have rank 2 and each edge sits in its own
        // unit class, so two edges are attainable
        let m1 = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (2, 0)]);
        let m2 = PartitionMatroid::new(vec![0, 1, 2], vec![1, 1, 1]);
        let best = max_common_independent_set(&m1, &m2);
        assert_eq!(best.len(), 2);
        assert_eq!(best.len(), max_common_independent_brute(&m1, &m2));
    }

    #[test]
    fn intersection_needs_augmentation_swaps() {
        // two classes of capacity 1; elements 0 and 1 share class 0, and a
        // greedy pick of element 0 must later be revised
        let m1 = GraphicMatroid::new(4, vec![(0, 1), (2, 3), (0, 1)]);
        let m2 = PartitionMatroid::new(vec![0, 0, 1], vec![1, 1]);
        // max: {1 (class 0, edge 2-3), 2 (class 1, edge 0-1)}
        let best = max_common_independent_set(&m1, &m2);
        assert_eq!(best.len(), 2);
        assert_eq!(best.len(), max_common_independent_brute(&m1, &m2));
    }

    #[test]
    fn intersection_agrees_with_brute_force_on_fixed_instances() {
        // a few dense hand-rolled instances
        let cases: Vec<(GraphicMatroid, PartitionMatroid)> = vec![
            (
                GraphicMatroid::new(
                    5,
                    vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)],
                ),
                PartitionMatroid::new(vec![0, 0, 1, 1, 2, 2, 2], vec![1, 1, 2]),
            ),
            (
                GraphicMatroid::new(4, vec![(0, 1), (0, 1), (2, 2), (2, 3), (1, 2), (3, 0)]),
                PartitionMatroid::new(vec![0, 1, 0, 1, 0, 1], vec![2, 1]),
            ),
            (
                GraphicMatroid::new(2, vec![(0, 1), (0, 1), (0, 1)]),
                PartitionMatroid::new(vec![0, 1, 2], vec![1, 1, 1]),
            ),
        ];
        for (m1, m2) in cases {
            let got = max_common_independent_set(&m1, &m2);
            assert_eq!(got.len(), max_common_independent_brute(&m1, &m2));
        }
    }

    #[test]
    fn empty_ground_set() {
        let m1 = GraphicMatroid::new(1, vec![]);
        let m2 = PartitionMatroid::new(vec![], vec![]);
        assert!(max_common_independent_set(&m1, &m2).is_empty());
    }
}
