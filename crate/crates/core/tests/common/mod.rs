//! Naive reference implementations. They only read `n` and `has_edge`, so a
//! bug in the bit-mask kernels cannot leak into them.
#![allow(dead_code)]

use folkman_core::Graph;
use rand::Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Members of `mask` as a list.
pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn independent(g: &Graph, set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Largest independent subset of `within`, by scanning every submask.
pub fn alpha_within(g: &Graph, within: u64) -> usize {
    let mut best = 0;
    let mut sub = within;
    loop {
        let m = members(sub);
        if m.len() > best && independent(g, &m) {
            best = m.len();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & within;
    }
    best
}

pub fn all_mask(g: &Graph) -> u64 {
    if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 }
}

pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, all_mask(g))
}

pub fn omega(g: &Graph) -> usize {
    let mut best = 0;
    for mask in 0..=all_mask(g) {
        let m = members(mask);
        let clique = m
            .iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if clique {
            best = best.max(m.len());
        }
    }
    best
}

/// Plain backtracking in index order; colours `1..=k`, the next vertex may
/// open at most one new colour.
pub fn colorable_in_order(g: &Graph, k: u32) -> Option<Vec<u32>> {
    fn go(g: &Graph, k: u32, col: &mut Vec<u32>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        let used = col[..v].iter().copied().max().unwrap_or(0);
        for c in 1..=k.min(used + 1) {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col[v] = c;
                if go(g, k, col, v + 1) {
                    return true;
                }
            }
        }
        col[v] = 0;
        false
    }
    let mut col = vec![0; g.n()];
    go(g, k, &mut col, 0).then_some(col)
}

pub fn chi(g: &Graph) -> usize {
    (0..=g.n() as u32)
        .find(|&k| colorable_in_order(g, k).is_some())
        .unwrap() as usize
}

/// Induced subgraph on `mask`, renumbered ascending.
pub fn induced(g: &Graph, mask: u64) -> Graph {
    let m = members(mask);
    let mut edges = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if g.has_edge(m[i], m[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(m.len(), &edges).unwrap()
}

/// `alpha(G[S])` for all masks: `|S|` when `S` is independent, otherwise the
/// best single-vertex deletion.
pub fn alpha_table(g: &Graph) -> Vec<usize> {
    let size = 1usize << g.n();
    let mut t = vec![0; size];
    for s in 1..size {
        let m = members(s as u64);
        t[s] = if independent(g, &m) {
            m.len()
        } else {
            m.iter().map(|&v| t[s & !(1 << v)]).max().unwrap()
        };
    }
    t
}

pub fn rho(size: usize, alpha: usize) -> i64 {
    size as i64 - 2 * alpha as i64 + 2
}

/// `max over S of |S| - 2 alpha(G[S]) + 2`, the empty set included.
pub fn folkman(g: &Graph) -> i64 {
    let t = alpha_table(g);
    (0..t.len())
        .map(|s| rho(s.count_ones() as usize, t[s]))
        .max()
        .unwrap()
}

/// Smallest deletion leaving `2 alpha >= |V|`.
pub fn deletion(g: &Graph) -> usize {
    let t = alpha_table(g);
    (0..t.len())
        .filter(|&s| 2 * t[s] >= s.count_ones() as usize)
        .map(|s| g.n() - s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Two-colouring by depth-first search on the vertices of `mask`.
pub fn bipartite_within(g: &Graph, mask: u64) -> bool {
    let verts = members(mask);
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for &start in &verts {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &verts {
                if !g.has_edge(u, w) {
                    continue;
                }
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        stack.push(w);
                    }
                    Some(s) if s == side[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn oct(g: &Graph) -> usize {
    let all = all_mask(g);
    (0..=all)
        .filter(|&keep| bipartite_within(g, keep))
        .map(|keep| g.n() - keep.count_ones() as usize)
        .min()
        .unwrap()
}

/// `(alpha, size)` of the minimum ratio over non-empty subsets.
pub fn mir(g: &Graph) -> (usize, usize) {
    let t = alpha_table(g);
    let mut best = (1, 1);
    for (s, &a) in t.iter().enumerate().skip(1) {
        let size = s.count_ones() as usize;
        if a * best.1 < best.0 * size {
            best = (a, size);
        }
    }
    best
}

/// Every maximum independent set, as masks.
pub fn maximum_independent_sets(g: &Graph) -> Vec<u64> {
    let a = alpha(g);
    (0..=all_mask(g))
        .filter(|&s| s.count_ones() as usize == a && independent(g, &members(s)))
        .collect()
}

/// Straight transcription of the graph6 layout: size byte(s), then the
/// column-major upper triangle padded to a multiple of six bits.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        out.push((v + 63) as char);
    }
    out
}
