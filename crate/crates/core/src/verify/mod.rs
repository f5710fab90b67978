//! Oracles and validators: the ground truth the rest of the crate is
//! checked against.
//!
//! [`find_repetitive_walk`] decides exactly whether a colouring admits a
//! repetitively coloured walk that is not boring, over walks of every
//! length. [`find_repetitive_path`] searches simple paths exhaustively under
//! a node budget and says so honestly when the budget ran out. The remaining
//! functions are cheap structural checks (properness, distance-2, star,
//! levellings, shadows, partitions, decompositions).

mod path;
mod walk;

pub use path::{find_repetitive_path, tree_find_repetitive_path};

use crate::decompose::{TreeDecomposition, TreePartition};
use crate::error::Error;
use crate::graph::{Colouring, Graph, Levelling};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// A repetitively coloured walk `v1..v2t` that is not boring: colours repeat
/// across the halves but at least one position carries distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkWitness {
    vertices: Vec<usize>,
    t: usize,
}

impl WalkWitness {
    pub fn new(vertices: Vec<usize>, t: usize) -> Result<Self> {
        if t == 0 || vertices.len() != 2 * t {
            return Err(Error::InvalidParameter(format!(
                "witness needs 2t vertices with t >= 1, got t={t} and {} vertices",
                vertices.len()
            )));
        }
        Ok(WalkWitness { vertices, t })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Half-length: the walk has `2t` vertices.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of distinct vertices visited.
    pub fn order(&self) -> usize {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Re-checks every defining property against a graph and colouring.
    pub fn validate(&self, g: &Graph, c: &Colouring) -> Result<()> {
        if c.len() != g.n() {
            return Err(Error::SizeMismatch(format!(
                "colouring has {} entries for {} vertices",
                c.len(),
                g.n()
            )));
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::InvalidParameter(format!(
                "witness vertex {v} out of range"
            )));
        }
        for w in self.vertices.windows(2) {
            let (u, v) = (w[0], w[1]);
            let ok = if u == v { g.has_loop(u) } else { g.has_edge(u, v) };
            if !ok {
                return Err(Error::InvalidParameter(format!(
                    "witness step ({u},{v}) is not an edge or loop"
                )));
            }
        }
        for i in 0..self.t {
            if c.colour(self.vertices[i]) != c.colour(self.vertices[self.t + i]) {
                return Err(Error::InvalidParameter(format!(
                    "witness halves disagree in colour at offset {i}"
                )));
            }
        }
        if (0..self.t).all(|i| self.vertices[i] == self.vertices[self.t + i]) {
            return Err(Error::InvalidParameter(
                "witness is boring: both halves visit the same vertices".into(),
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        WitnessJson::of("walk", self.t, &self.vertices)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr = WitnessJson::parse(s, "walk")?;
        WalkWitness::new(repr.vertices, repr.t)
    }
}

/// A repetitively coloured simple path: a [`WalkWitness`] whose vertices are
/// pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    walk: WalkWitness,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>, t: usize) -> Result<Self> {
        let walk = WalkWitness::new(vertices, t)?;
        let mut seen = walk.vertices.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != walk.vertices.len() {
            return Err(Error::InvalidParameter(
                "path witness repeats a vertex".into(),
            ));
        }
        Ok(PathWitness { walk })
    }

    pub fn vertices(&self) -> &[usize] {
        self.walk.vertices()
    }

    pub fn t(&self) -> usize {
        self.walk.t()
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    /// Re-checks distinctness and the walk properties.
    pub fn validate(&self, g: &Graph, c: &Colouring) -> Result<()> {
        self.walk.validate(g, c)
    }

    pub fn to_json(&self) -> String {
        WitnessJson::of("path", self.t(), self.vertices())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr = WitnessJson::parse(s, "path")?;
        PathWitness::new(repr.vertices, repr.t)
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    #[serde(rename = "type")]
    kind: String,
    t: usize,
    vertices: Vec<usize>,
}

impl WitnessJson {
    fn of(kind: &str, t: usize, vertices: &[usize]) -> String {
        serde_json::to_string(&WitnessJson {
            kind: kind.into(),
            t,
            vertices: vertices.to_vec(),
        })
        .expect("witness serialization cannot fail")
    }

    fn parse(s: &str, kind: &str) -> Result<WitnessJson> {
        let repr: WitnessJson = serde_json::from_str(s)?;
        if repr.kind != kind {
            return Err(Error::Parse(format!(
                "expected a {kind} witness, found {:?}",
                repr.kind
            )));
        }
        Ok(repr)
    }
}

/// Outcome of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// Node expansions performed.
    pub budget_spent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictStatus {
    /// The search space was exhausted and nothing was found.
    Clean,
    /// A repetitively coloured simple path.
    Witness(PathWitness),
    /// The budget ran out first; no conclusion.
    Unknown,
}

impl Verdict {
    pub fn is_clean(&self) -> bool {
        matches!(self.status, VerdictStatus::Clean)
    }

    pub fn witness(&self) -> Option<&PathWitness> {
        match &self.status {
            VerdictStatus::Witness(w) => Some(w),
            _ => None,
        }
    }
}

fn check_sizes(g: &Graph, c: &Colouring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::SizeMismatch(format!(
            "colouring has {} entries for {} vertices",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

/// True iff adjacent vertices always receive distinct colours. Loops are
/// ignored; they say nothing about colours.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    check_sizes(g, c)?;
    Ok(g.edges().all(|(u, v)| c.colour(u) != c.colour(v)))
}

/// True iff vertices at distance at most two receive distinct colours;
/// equivalently, each closed neighbourhood is rainbow.
pub fn is_distance2(g: &Graph, c: &Colouring) -> Result<bool> {
    check_sizes(g, c)?;
    let mut palette = Vec::new();
    for v in 0..g.n() {
        palette.clear();
        palette.push(c.colour(v));
        palette.extend(g.neighbors(v).iter().map(|&u| c.colour(u)));
        palette.sort_unstable();
        if palette.windows(2).any(|w| w[0] == w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the colouring is proper and no path on four vertices alternates
/// between just two colours.
pub fn is_star_colouring(g: &Graph, c: &Colouring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    // Under properness a 2-coloured P4 a-b-c-d means colour(a)=colour(c)
    // and colour(b)=colour(d).
    for (b, cc) in g.edges() {
        for &a in g.neighbors(b) {
            if a == cc || c.colour(a) != c.colour(cc) {
                continue;
            }
            for &d in g.neighbors(cc) {
                if d != b && d != a && c.colour(d) == c.colour(b) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Exact walk oracle. Returns a witness iff some repetitively coloured
/// non-boring walk exists, over walks of every length.
///
/// With `minimize` unset, existence is decided through connected components
/// of the synchronized pair graph (states are ordered colour-equal vertex
/// pairs, both coordinates step at once) and any witness is returned. With
/// `minimize` set, a layered search finds a witness of globally minimum
/// length `2t`, tie-broken to the lowest start vertex and then the
/// lexicographically least vertex sequence; intended for small instances.
///
/// Panics if the colouring length does not match the graph.
pub fn find_repetitive_walk(g: &Graph, c: &Colouring, minimize: bool) -> Option<WalkWitness> {
    assert_eq!(
        c.len(),
        g.n(),
        "colouring length must match the vertex count"
    );
    let found = if minimize {
        walk::search_minimized(g, c)
    } else {
        walk::search_decision(g, c)
    };
    if let Some(w) = &found {
        debug_assert!(w.validate(g, c).is_ok(), "oracle produced a bad witness");
    }
    found
}

/// True iff every edge joins equal or consecutive levels.
pub fn validate_levelling(g: &Graph, l: &Levelling) -> Result<bool> {
    if l.len() != g.n() {
        return Err(Error::SizeMismatch(format!(
            "levelling has {} entries for {} vertices",
            l.len(),
            g.n()
        )));
    }
    Ok(g.edges().all(|(u, v)| (l.level(u) - l.level(v)).abs() <= 1))
}

/// True iff for every level `k`, the level-`k` shadow of each connected
/// component of the subgraph above `k` induces a clique. Requires a valid
/// levelling.
pub fn validate_shadow_complete(g: &Graph, l: &Levelling) -> Result<bool> {
    if !validate_levelling(g, l)? {
        return Err(Error::InvalidLevelling(
            "shadow-completeness is only defined for valid levellings".into(),
        ));
    }
    let n = g.n();
    if n == 0 {
        return Ok(true);
    }
    let (min, max) = (l.min_level().unwrap(), l.max_level().unwrap());
    let mut comp = vec![usize::MAX; n];
    for k in min..max {
        comp.iter_mut().for_each(|c| *c = usize::MAX);
        let mut ncomp = 0;
        for v in 0..n {
            if l.level(v) <= k || comp[v] != usize::MAX {
                continue;
            }
            comp[v] = ncomp;
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if l.level(w) > k && comp[w] == usize::MAX {
                        comp[w] = ncomp;
                        queue.push_back(w);
                    }
                }
            }
            ncomp += 1;
        }
        let mut shadows: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for u in 0..n {
            if l.level(u) != k {
                continue;
            }
            for &w in g.neighbors(u) {
                if l.level(w) > k {
                    let s = &mut shadows[comp[w]];
                    if s.last() != Some(&u) {
                        s.push(u);
                    }
                }
            }
        }
        for shadow in &shadows {
            for (i, &u) in shadow.iter().enumerate() {
                for &v in &shadow[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Validates a tree partition: the bags partition the vertex set and
/// collapsing each bag to a single vertex (dropping loops and parallel
/// edges) leaves a forest. Out-of-range indices are structural errors, not
/// `false`.
pub fn validate_tree_partition(g: &Graph, tp: &TreePartition) -> Result<bool> {
    let n = g.n();
    let nbags = tp.bags().len();
    if tp.depths().len() != nbags {
        return Err(Error::InvalidDecomposition(format!(
            "{} depths for {nbags} bags",
            tp.depths().len()
        )));
    }
    for &(i, j) in tp.tree_edges() {
        if i >= nbags || j >= nbags {
            return Err(Error::InvalidDecomposition(format!(
                "host edge ({i},{j}) out of range"
            )));
        }
    }
    let mut bag_of = vec![usize::MAX; n];
    for (i, bag) in tp.bags().iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {i} contains out-of-range vertex {v}"
                )));
            }
            if bag_of[v] != usize::MAX {
                return Ok(false); // vertex in two bags: not a partition
            }
            bag_of[v] = i;
        }
    }
    if bag_of.contains(&usize::MAX) {
        return Ok(false); // uncovered vertex
    }
    // Quotient edges, parallels removed; a repeated pair must not count as
    // a cycle.
    let mut quotient: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(u, v)| {
            let (bu, bv) = (bag_of[u], bag_of[v]);
            (bu != bv).then(|| (bu.min(bv), bu.max(bv)))
        })
        .collect();
    quotient.sort_unstable();
    quotient.dedup();
    let mut dsu: Vec<usize> = (0..nbags).collect();
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for (i, j) in quotient {
        let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
        if ri == rj {
            return Ok(false); // quotient cycle
        }
        dsu[ri] = rj;
    }
    Ok(true)
}

/// Validates a tree decomposition: every vertex and edge is covered, the
/// host edges form a forest, and the bags containing any one vertex are
/// connected in it. Out-of-range indices are structural errors.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<bool> {
    let n = g.n();
    let nbags = td.bags().len();
    let mut in_bags: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags().iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {i} contains out-of-range vertex {v}"
                )));
            }
            in_bags[v].push(i);
        }
    }
    if in_bags.iter().any(|b| b.is_empty()) {
        return Ok(false);
    }
    for (u, v) in g.edges() {
        let covered = in_bags[u]
            .iter()
            .any(|bu| td.bags()[*bu].contains(&v));
        if !covered {
            return Ok(false);
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nbags];
    let mut dsu: Vec<usize> = (0..nbags).collect();
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for &(i, j) in td.tree_edges() {
        if i >= nbags || j >= nbags {
            return Err(Error::InvalidDecomposition(format!(
                "host edge ({i},{j}) out of range"
            )));
        }
        if i == j {
            return Ok(false);
        }
        let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
        if ri == rj {
            return Ok(false);
        }
        dsu[ri] = rj;
        adj[i].push(j);
        adj[j].push(i);
    }
    // Running intersection: the bags holding v form a connected subtree.
    let mut member = vec![false; nbags];
    for v in 0..n {
        let bags_v = &in_bags[v];
        if bags_v.len() <= 1 {
            continue;
        }
        for &b in bags_v {
            member[b] = true;
        }
        let mut reached = 1usize;
        let mut queue = VecDeque::from([bags_v[0]]);
        let mut seen = vec![false; nbags];
        seen[bags_v[0]] = true;
        while let Some(b) = queue.pop_front() {
            for &b2 in &adj[b] {
                if member[b2] && !seen[b2] {
                    seen[b2] = true;
                    reached += 1;
                    queue.push_back(b2);
                }
            }
        }
        for &b in bags_v {
            member[b] = false;
        }
        if reached != bags_v.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
