#![allow(dead_code)]

use netdist::Graph;

/// Path 0-1-2-3-4 with a leaf on node 1 and a leaf on node 2; its distance
/// frequencies are (6,7,6,2,0,0).
pub const SEVEN_NODE_EXAMPLE: &str = "7\n0 1\n1 2\n2 3\n3 4\n1 5\n2 6\n";

/// Floyd–Warshall distances, `None` for unreachable pairs. Independent of
/// the BFS used by the library.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Distance frequencies from the Floyd–Warshall table.
pub fn oracle_alpha(g: &Graph) -> Option<Vec<u64>> {
    let d = floyd_warshall(g);
    let n = g.node_count();
    let mut counts = vec![0u64; n - 1];
    for u in 0..n {
        for v in u + 1..n {
            counts[d[u][v]? as usize - 1] += 1;
        }
    }
    Some(counts)
}

/// Every pairwise distance, sorted; the multiset behind average and median.
pub fn oracle_sorted_distances(g: &Graph) -> Vec<u64> {
    let d = floyd_warshall(g);
    let n = g.node_count();
    let mut all: Vec<u64> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| d[u][v].expect("connected"))
        .collect();
    all.sort_unstable();
    all
}
