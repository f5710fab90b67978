//! Graph generators and the subdivision builder.
//!
//! Randomized generators are deterministic functions of their seed.

use super::{Graph, Levelling, SubdivisionOrigin, SubdivisionResult};
use crate::decompose::TreeDecomposition;
use crate::error::Error;
use crate::graph::Colouring;
use crate::Result;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// Path `0 - 1 - … - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// Cycle `0 - 1 - … - (n-1) - 0`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let mut g = gen_path(n)?;
    g.add_edge(0, n - 1)?;
    Ok(g)
}

/// Complete graph on `n` vertices.
pub fn gen_complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Star on `n` vertices: centre `0`, leaves `1..n`.
pub fn gen_star(n: usize) -> Result<Graph> {
    require(n >= 1, "star needs n >= 1")?;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

/// Path with a loop at every vertex, so walks may stand still anywhere.
pub fn gen_looped_path(n: usize) -> Result<Graph> {
    let mut g = gen_path(n)?;
    for v in 0..n {
        g.add_loop(v)?;
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes.
pub fn gen_petersen() -> Graph {
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
    ];
    Graph::from_edges(10, &edges).expect("fixed edge list is valid")
}

/// Uniform random labelled tree via a random Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "tree needs n >= 1")?;
    let mut g = Graph::new(n);
    if n == 1 {
        return Ok(g);
    }
    if n == 2 {
        g.add_edge(0, 1)?;
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut deg = vec![1usize; n];
    for &a in &prufer {
        deg[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| deg[v] == 1)
        .map(Reverse)
        .collect();
    for &a in &prufer {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        g.add_edge(leaf, a)?;
        deg[a] -= 1;
        if deg[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    g.add_edge(u, v)?;
    Ok(g)
}

/// Erdős–Rényi graph: each pair is an edge independently with probability `p`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require(n >= 1, "random graph needs n >= 1")?;
    require((0.0..=1.0).contains(&p), "edge probability must be in [0,1]")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Random partial k-tree with a degree cap, together with a witnessing tree
/// decomposition of width at most `k`.
///
/// Construction: the first `min(n, k+1)` vertices form a (capped) clique and
/// the root bag; each later vertex picks a random existing bag, a random
/// k-subset of it, and joins to those members. Any insertion that would push
/// an endpoint past `deg_cap` is skipped, which keeps the result a partial
/// k-tree; the recorded bags cover a superset of the surviving edges, so the
/// decomposition stays valid.
pub fn gen_random_partial_ktree(
    n: usize,
    k: usize,
    deg_cap: usize,
    seed: u64,
) -> Result<(Graph, TreeDecomposition)> {
    require(n >= 1, "partial k-tree needs n >= 1")?;
    require(k >= 1, "partial k-tree needs k >= 1")?;
    // Below 2 every attachment beyond the initial clique is starved.
    require(
        n <= k + 1 || deg_cap >= 2,
        "deg_cap < 2 cannot host attachments beyond the initial clique",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    let base = n.min(k + 1);
    for u in 0..base {
        for v in u + 1..base {
            if g.degree(u) < deg_cap && g.degree(v) < deg_cap {
                g.add_edge(u, v)?;
            }
        }
    }
    let mut bags: Vec<Vec<usize>> = vec![(0..base).collect()];
    let mut tree_edges = Vec::new();
    for v in base..n {
        let host = rng.random_range(0..bags.len());
        let mut subset = bags[host].clone();
        if subset.len() == k + 1 {
            subset.remove(rng.random_range(0..subset.len()));
        }
        for &u in &subset {
            if g.degree(v) < deg_cap && g.degree(u) < deg_cap {
                g.add_edge(u, v)?;
            }
        }
        let mut bag = subset;
        bag.push(v);
        bag.sort_unstable();
        tree_edges.push((host, bags.len()));
        bags.push(bag);
    }
    let td = TreeDecomposition::new(bags, tree_edges)?;
    Ok((g, td))
}

/// Densest graph that still admits a path-nonrepetitive `c`-colouring: a
/// clique on `c - 1` vertices completely joined to `n - c + 1` independent
/// vertices, with the witnessing colouring (clique vertices get `1..c`, the
/// independent set gets `c`). Edge count is `(c-1)n - c(c-1)/2`.
pub fn gen_extremal(c: u32, n: usize) -> Result<(Graph, Colouring)> {
    require(c >= 2, "extremal construction needs c >= 2")?;
    let clique = (c - 1) as usize;
    require(n >= clique, "extremal construction needs n >= c - 1")?;
    let mut g = Graph::new(n);
    for u in 0..clique {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    let colours = (0..n)
        .map(|v| if v < clique { v as u32 + 1 } else { c })
        .collect();
    Ok((g, Colouring::new(colours)?))
}

/// Lexicographic product of a path of length `m` with `K_p`: `m` levels of
/// `p` vertices, each level a clique, consecutive levels completely joined.
/// Vertex `l*p + j` sits at level `l`; the levelling is returned with it.
pub fn gen_lex_product(m: usize, p: usize) -> Result<(Graph, Levelling)> {
    require(m >= 1, "lexicographic product needs m >= 1")?;
    require(p >= 1, "lexicographic product needs p >= 1")?;
    let mut g = Graph::new(m * p);
    for l in 0..m {
        for i in 0..p {
            for j in i + 1..p {
                g.add_edge(l * p + i, l * p + j)?;
            }
        }
        if l + 1 < m {
            for i in 0..p {
                for j in 0..p {
                    g.add_edge(l * p + i, (l + 1) * p + j)?;
                }
            }
        }
    }
    let levels = (0..m * p).map(|v| (v / p) as i64).collect();
    Ok((g, Levelling::new(levels)))
}

/// Subdivides every edge `(i, j)` with `i < j` into a path of `j - i - 1`
/// division vertices, and levels the result by original index with
/// interpolation: `v_i` sits at level `i`, the chain for `(i, j)` climbs
/// through `i+1 .. j-1`. Every edge of the output joins consecutive levels.
pub fn build_subdivision(g: &Graph) -> Result<SubdivisionResult> {
    build_spaced_subdivision(g, 1)
}

/// As [`build_subdivision`], with original vertex `v_i` placed at level
/// `spacing * i` and each edge `(i, j)` subdivided `spacing * (j - i) - 1`
/// times. With `spacing >= 2` every edge is subdivided at least once, so
/// no two original vertices stay adjacent; the level colouring of the
/// result then has no repetitively coloured path.
pub fn build_spaced_subdivision(g: &Graph, spacing: usize) -> Result<SubdivisionResult> {
    if spacing == 0 {
        return Err(Error::InvalidParameter(
            "level spacing must be positive".into(),
        ));
    }
    if g.loops().next().is_some() {
        return Err(Error::InvalidParameter(
            "subdivision expects a simple graph without loops".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = n + edges
        .iter()
        .map(|&(i, j)| spacing * (j - i) - 1)
        .sum::<usize>();
    let mut h = Graph::new(total);
    let mut levels: Vec<i64> = (0..n).map(|i| (spacing * i) as i64).collect();
    let mut origin: Vec<SubdivisionOrigin> = (0..n).map(SubdivisionOrigin::Original).collect();
    let mut next = n;
    for (i, j) in edges {
        let internal = spacing * (j - i) - 1;
        if internal == 0 {
            h.add_edge(i, j)?;
            continue;
        }
        let mut prev = i;
        for t in 0..internal {
            levels.push((spacing * i + 1 + t) as i64);
            origin.push(SubdivisionOrigin::Division {
                endpoints: (i, j),
                index: t,
            });
            h.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        h.add_edge(prev, j)?;
    }
    Ok(SubdivisionResult {
        graph: h,
        levelling: Levelling::new(levels),
        origin,
    })
}
