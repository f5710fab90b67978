//! Graph, colouring and levelling types with canonical JSON forms.
//!
//! Graphs are finite, undirected and simple except for optional loops, which
//! exist so that walks may stand still at a vertex. Vertices are `0..n`.
//! Loops never appear in `edges`; they are carried separately.

mod gen;

pub use gen::{
    build_spaced_subdivision, build_subdivision, gen_complete, gen_cycle, gen_extremal,
    gen_lex_product, gen_looped_path, gen_path, gen_petersen, gen_random_graph,
    gen_random_partial_ktree, gen_random_tree, gen_star,
};

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Undirected graph with sorted adjacency lists and optional loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    has_loop: Vec<bool>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            has_loop: vec![false; n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-edges and duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`. Self-edges are not edges; use
    /// [`Graph::add_loop`] for loops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!(
                "self-edge at {u}; loops are declared separately"
            )));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("duplicate edge ({u},{v})")));
        }
        let pos_u = self.adj[u].partition_point(|&w| w < v);
        self.adj[u].insert(pos_u, v);
        let pos_v = self.adj[v].partition_point(|&w| w < u);
        self.adj[v].insert(pos_v, u);
        self.edge_count += 1;
        Ok(())
    }

    /// Marks a loop at `v`, permitting walks to stay there for a step.
    pub fn add_loop(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "loop at {v} out of range for n={}",
                self.n
            )));
        }
        self.has_loop[v] = true;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_loop[v]
    }

    /// Neighbours of `v` in ascending order, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`, counting a loop once.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len() + usize::from(self.has_loop[v])
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Vertices carrying a loop, ascending.
    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_loop[v])
    }

    /// Targets reachable from `v` in one walk step: neighbours, plus `v`
    /// itself when a loop allows standing still.
    pub fn step_targets(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let stay = self.has_loop[v].then_some(v);
        self.adj[v].iter().copied().chain(stay)
    }

    /// BFS distance from `root` per vertex; `None` for unreachable vertices.
    pub fn bfs_levels(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if root >= self.n {
            return dist;
        }
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_levels(0).iter().all(|d| d.is_some())
    }

    /// Connected, `n - 1` edges, no loops.
    pub fn is_tree(&self) -> bool {
        self.n >= 1
            && self.edge_count == self.n - 1
            && self.has_loop.iter().all(|&l| !l)
            && self.is_connected()
    }

    /// The square: vertices joined when at distance one or two. Loops are
    /// dropped; they do not affect distances.
    pub fn square(&self) -> Graph {
        let mut sq = Graph::new(self.n);
        let mut mark = vec![false; self.n];
        for v in 0..self.n {
            let mut touched = Vec::new();
            for &u in &self.adj[v] {
                if u > v && !mark[u] {
                    mark[u] = true;
                    touched.push(u);
                }
                for &w in &self.adj[u] {
                    if w > v && !mark[w] {
                        mark[w] = true;
                        touched.push(w);
                    }
                }
            }
            for u in touched {
                mark[u] = false;
                sq.add_edge(v, u).expect("square edges are in range");
            }
        }
        sq
    }

    /// Canonical JSON: `{"n":…,"edges":[[u,v],…],"loops":[…]}` with edges
    /// sorted lexicographically, `u < v`, loops ascending.
    pub fn to_json(&self) -> String {
        let repr = GraphJson {
            n: self.n,
            edges: self.edges().collect(),
            loops: self.loops().collect(),
        };
        serde_json::to_string(&repr).expect("graph serialization cannot fail")
    }

    /// Parses the JSON form. Endpoint order is normalized; duplicate edges,
    /// self-edges and out-of-range indices are rejected.
    pub fn from_json(s: &str) -> Result<Self> {
        let repr: GraphJson = serde_json::from_str(s)?;
        let mut g = Graph::new(repr.n);
        for (u, v) in repr.edges {
            g.add_edge(u.min(v), u.max(v))?;
        }
        for v in repr.loops {
            if v >= repr.n {
                return Err(Error::InvalidParameter(format!(
                    "loop at {v} out of range for n={}",
                    repr.n
                )));
            }
            g.add_loop(v)?;
        }
        Ok(g)
    }

    /// Graphviz DOT output. With a colouring, colour ids are mapped to fill
    /// colours through [`DOT_PALETTE`], cycling past its end. Write-only;
    /// there is no DOT parser here.
    pub fn to_dot(&self, colouring: Option<&Colouring>) -> String {
        use std::fmt::Write;
        let mut out = String::from("graph G {\n  node [shape=circle];\n");
        for v in 0..self.n {
            match colouring {
                Some(c) => {
                    let fill = DOT_PALETTE[((c.colour(v) - 1) as usize) % DOT_PALETTE.len()];
                    let _ = writeln!(
                        out,
                        "  {v} [label=\"{v}:{}\", style=filled, fillcolor=\"{fill}\"];",
                        c.colour(v)
                    );
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        for v in self.loops() {
            let _ = writeln!(out, "  {v} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Fixed fill palette for DOT export; colour id `c` uses entry `(c-1) mod 16`.
pub const DOT_PALETTE: [&str; 16] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000", "#aaffc3",
];

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    loops: Vec<usize>,
}

/// Vertex colouring with positive integer colour ids. Ids are small but not
/// forced to be contiguous: composite constructions keep stable mixed-radix
/// ids. Counting always means distinct ids used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<u32>,
}

impl Colouring {
    /// Builds a colouring; ids must be at least 1.
    pub fn new(colours: Vec<u32>) -> Result<Self> {
        if colours.iter().any(|&c| c == 0) {
            return Err(Error::InvalidParameter("colour ids start at 1".into()));
        }
        Ok(Colouring { colours })
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of distinct ids used.
    pub fn colour_count(&self) -> usize {
        let mut seen = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_id(&self) -> u32 {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let repr = ColouringJson {
            colours: self.colours.clone(),
        };
        serde_json::to_string(&repr).expect("colouring serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: ColouringJson = serde_json::from_str(s)?;
        Colouring::new(repr.colours)
    }
}

#[derive(Serialize, Deserialize)]
struct ColouringJson {
    colours: Vec<u32>,
}

/// Integer levels per vertex. A levelling is valid for a graph when every
/// edge joins equal or consecutive levels; see `verify::validate_levelling`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levelling {
    levels: Vec<i64>,
}

impl Levelling {
    pub fn new(levels: Vec<i64>) -> Self {
        Levelling { levels }
    }

    pub fn level(&self, v: usize) -> i64 {
        self.levels[v]
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn min_level(&self) -> Option<i64> {
        self.levels.iter().copied().min()
    }

    pub fn max_level(&self) -> Option<i64> {
        self.levels.iter().copied().max()
    }

    pub fn to_json(&self) -> String {
        let repr = LevellingJson {
            levels: self.levels.clone(),
        };
        serde_json::to_string(&repr).expect("levelling serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: LevellingJson = serde_json::from_str(s)?;
        Ok(Levelling::new(repr.levels))
    }
}

#[derive(Serialize, Deserialize)]
struct LevellingJson {
    levels: Vec<i64>,
}

/// Where a vertex of a subdivision came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdivisionOrigin {
    /// The original vertex with this index.
    Original(usize),
    /// The `index`-th division vertex (0-based, counted from the smaller
    /// endpoint) on the subdivided edge `endpoints`.
    Division { endpoints: (usize, usize), index: usize },
}

/// A subdivision together with its levelling and origin map.
#[derive(Debug, Clone)]
pub struct SubdivisionResult {
    pub graph: Graph,
    pub levelling: Levelling,
    pub origin: Vec<SubdivisionOrigin>,
}
