//! Bag systems over host trees: tree decompositions (heuristic width),
//! tree partitions built from BFS layers, the shadow-complete levellings
//! they induce, and the bounded-treewidth colouring pipeline.

use crate::construct::{self, CompositeColouring};
use crate::error::Error;
use crate::graph::{Graph, Levelling};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};

/// Bags covering all vertices and edges, arranged on a host forest so that
/// the bags containing any one vertex form a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Builds a decomposition, normalizing each bag to sorted distinct
    /// vertices and rejecting malformed host edges (out of range, self
    /// edges, cycles). Semantic validity against a graph is checked
    /// separately by the verify module.
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        let mut dsu: Vec<usize> = (0..bags.len()).collect();
        for &(i, j) in &tree_edges {
            if i >= bags.len() || j >= bags.len() {
                return Err(Error::InvalidDecomposition(format!(
                    "host edge ({i},{j}) out of range for {} bags",
                    bags.len()
                )));
            }
            if i == j {
                return Err(Error::InvalidDecomposition(format!(
                    "host edge ({i},{j}) is a self edge"
                )));
            }
            let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
            if ri == rj {
                return Err(Error::InvalidDecomposition(
                    "host edges contain a cycle".into(),
                ));
            }
            dsu[ri] = rj;
        }
        Ok(TreeDecomposition { bags, tree_edges })
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one; 0 for an empty decomposition.
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TdJson {
            bags: self.bags.clone(),
            tree_edges: self.tree_edges.clone(),
            width: self.width(),
        })
        .expect("decomposition serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: TdJson = serde_json::from_str(s)?;
        let td = TreeDecomposition::new(repr.bags, repr.tree_edges)?;
        if td.width() != repr.width {
            return Err(Error::Parse(format!(
                "declared width {} but bags give {}",
                repr.width,
                td.width()
            )));
        }
        Ok(td)
    }
}

#[derive(Serialize, Deserialize)]
struct TdJson {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
    width: usize,
}

/// Bags partitioning the vertex set, arranged on a rooted host forest with
/// a depth per bag. Collapsing each bag must turn the graph into a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
    depths: Vec<usize>,
}

impl TreePartition {
    /// Assembles the parts without validation; callers feed the result to
    /// the verify module when the data is untrusted.
    pub fn from_parts(
        bags: Vec<Vec<usize>>,
        tree_edges: Vec<(usize, usize)>,
        depths: Vec<usize>,
    ) -> Self {
        TreePartition {
            bags,
            tree_edges,
            depths,
        }
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    /// The quantity the colour bounds are stated in.
    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TpJson {
            bags: self.bags.clone(),
            tree_edges: self.tree_edges.clone(),
            depths: self.depths.clone(),
        })
        .expect("partition serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: TpJson = serde_json::from_str(s)?;
        if repr.depths.len() != repr.bags.len() {
            return Err(Error::Parse(format!(
                "{} depths for {} bags",
                repr.depths.len(),
                repr.bags.len()
            )));
        }
        Ok(TreePartition::from_parts(
            repr.bags,
            repr.tree_edges,
            repr.depths,
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct TpJson {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
    depths: Vec<usize>,
}

fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
    while dsu[x] != x {
        dsu[x] = dsu[dsu[x]];
        x = dsu[x];
    }
    x
}

/// Heuristic tree decomposition by min-fill elimination: repeatedly remove
/// the vertex whose neighbourhood needs the fewest fill edges to become a
/// clique (ties to the lowest id), one bag per elimination step. The width
/// is whatever the ordering achieves, reported rather than guaranteed.
pub fn tree_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    let mut adj: Vec<HashSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut elim_pos = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<(usize, usize)> = None; // (fill, vertex)
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let neigh: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
            let mut fill = 0usize;
            for (i, &a) in neigh.iter().enumerate() {
                for &b in &neigh[i + 1..] {
                    if !adj[a].contains(&b) {
                        fill += 1;
                    }
                }
            }
            let candidate = (fill, v);
            if best.map_or(true, |b| candidate < b) {
                best = Some(candidate);
            }
        }
        let (_, v) = best.expect("an alive vertex exists");
        let mut bag: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
        for i in 0..bag.len() {
            for j in i + 1..bag.len() {
                let (a, b) = (bag[i], bag[j]);
                if adj[a].insert(b) {
                    adj[b].insert(a);
                }
            }
        }
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        elim_pos[v] = step;
        order.push(v);
        alive[v] = false;
    }
    let mut tree_edges = Vec::new();
    for (step, bag) in bags.iter().enumerate() {
        let parent = bag
            .iter()
            .filter(|&&u| elim_pos[u] > step)
            .map(|&u| elim_pos[u])
            .min();
        if let Some(p) = parent {
            tree_edges.push((step, p));
        }
    }
    TreeDecomposition::new(bags, tree_edges).expect("elimination bags form a forest")
}

/// Tree partition from BFS layers: per component (rooted at its lowest
/// vertex), the bags at depth `d` are the depth-`d` vertices of each
/// connected component of the subgraph induced by depths `>= d`. Same-depth
/// adjacent vertices always land in one bag, so every collapsed edge joins
/// consecutive depths and the quotient is a forest.
pub fn tree_partition(g: &Graph) -> TreePartition {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut max_depth = 0usize;
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    max_depth = max_depth.max(depth[w]);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut depths: Vec<usize> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    // Component labels of the induced subgraph at the previous depth
    // threshold, and the bag each label produced.
    let mut prev_label: Vec<usize> = vec![usize::MAX; n];
    let mut prev_bag: HashMap<usize, usize> = HashMap::new();
    let mut label = vec![usize::MAX; n];
    if n == 0 {
        return TreePartition::from_parts(bags, tree_edges, depths);
    }
    for d in 0..=max_depth {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        let mut nlabels = 0usize;
        for v in 0..n {
            if depth[v] < d || label[v] != usize::MAX {
                continue;
            }
            label[v] = nlabels;
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if depth[w] >= d && label[w] == usize::MAX {
                        label[w] = nlabels;
                        queue.push_back(w);
                    }
                }
            }
            nlabels += 1;
        }
        let mut bag_of_label: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            if depth[v] != d {
                continue;
            }
            let idx = *bag_of_label.entry(label[v]).or_insert_with(|| {
                bags.push(Vec::new());
                depths.push(d);
                if d > 0 {
                    // The component extends downward: v's BFS parent sits at
                    // depth d-1 in the same previous-threshold component.
                    let parent_bag = prev_bag[&prev_label[v]];
                    tree_edges.push((parent_bag, bags.len() - 1));
                }
                bags.len() - 1
            });
            bags[idx].push(v);
        }
        prev_label.copy_from_slice(&label);
        prev_bag = bag_of_label;
    }
    TreePartition::from_parts(bags, tree_edges, depths)
}

/// Completes every bag of a valid tree partition to a clique and levels
/// each vertex at its bag's depth. With the depths of a BFS-layer
/// partition, components above a depth hang below a single bag whose
/// members now form a clique, so the levelling is shadow-complete; this is
/// verified before returning, since arbitrary valid partitions with
/// inconsistent depths can defeat it.
pub fn shadow_levelling(g: &Graph, tp: &TreePartition) -> Result<(Graph, Levelling)> {
    if !crate::verify::validate_tree_partition(g, tp)? {
        return Err(Error::InvalidDecomposition(
            "tree partition does not fit the graph".into(),
        ));
    }
    let mut completed = g.clone();
    for bag in tp.bags() {
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                if !completed.has_edge(u, v) {
                    completed.add_edge(u, v)?;
                }
            }
        }
    }
    let mut levels = vec![0i64; g.n()];
    for (idx, bag) in tp.bags().iter().enumerate() {
        for &v in bag {
            levels[v] = tp.depths()[idx] as i64;
        }
    }
    let levelling = Levelling::new(levels);
    if !crate::verify::validate_levelling(&completed, &levelling)? {
        return Err(Error::InvalidLevelling(
            "bag depths do not level the graph".into(),
        ));
    }
    if !crate::verify::validate_shadow_complete(&completed, &levelling)? {
        return Err(Error::NotShadowComplete(
            "bag depths do not yield a shadow-complete levelling".into(),
        ));
    }
    Ok((completed, levelling))
}

/// Which kind of repetition the pipeline colouring must exclude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColourMode {
    Path,
    Walk,
}

/// Bounded-treewidth colouring pipeline: tree partition, bag completion,
/// then the shadow composition. With bag bound ℓ, path mode uses at most 4ℓ
/// colours; walk mode adds a proper colouring of the original graph's
/// square and stays within 4ℓ(Δ²+1).
pub fn treewidth_colouring(g: &Graph, mode: ColourMode) -> Result<CompositeColouring> {
    let tp = tree_partition(g);
    let (completed, levelling) = shadow_levelling(g, &tp)?;
    // Within each level the completed graph is a disjoint union of bag
    // cliques, so ranking vertices inside their bag is nonrepetitive there
    // for paths and walks alike.
    let mut within = vec![0u32; g.n()];
    for bag in tp.bags() {
        for (rank, &v) in bag.iter().enumerate() {
            within[v] = rank as u32 + 1;
        }
    }
    let per_level = construct::slice_by_level(&levelling, &within)?;
    match mode {
        ColourMode::Path => construct::compose_shadow(&completed, &levelling, &per_level),
        ColourMode::Walk => {
            let square = construct::greedy_square_colouring(g);
            construct::compose_shadow_walks(g, &completed, &levelling, &per_level, &square)
        }
    }
}

/// Published size target for bags of tree partitions of graphs with
/// treewidth `k` and maximum degree `max_degree`: 2.5 (k+1) (3.5 Δ − 1).
/// Our constructor does not promise it; callers log measured bag sizes
/// against it.
pub fn wood_bag_target(k: usize, max_degree: usize) -> f64 {
    2.5 * (k as f64 + 1.0) * (3.5 * max_degree as f64 - 1.0)
}
