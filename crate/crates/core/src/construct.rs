//! Constructive colourings. Each function returns a colouring whose
//! defining property (no repetitively coloured path, or no non-boring
//! repetitively coloured walk) is certified by the verify module in tests;
//! the constructions themselves only promise colour-count ceilings.

use crate::error::Error;
use crate::graph::{Colouring, Graph, Levelling, SubdivisionResult};
use crate::verify;
use crate::words::{kp_word, thue_word, Word};
use crate::Result;
use std::collections::VecDeque;

/// A colouring assembled from factor colourings, flattened injectively by
/// mixed-radix encoding: with radices r_1..r_m (the factor maxima), the
/// tuple (c_1..c_m) maps to ((c_1−1)·r_2 + (c_2−1))·r_3 + ... + 1, so ids
/// stay within the product of the radices and are stable across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeColouring {
    factors: Vec<Colouring>,
    radices: Vec<u32>,
    flat: Colouring,
}

impl CompositeColouring {
    pub fn new(factors: Vec<Colouring>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "composite needs at least one factor".into(),
            ));
        }
        let n = factors[0].len();
        if factors.iter().any(|f| f.len() != n) {
            return Err(Error::SizeMismatch(
                "composite factors must colour the same vertices".into(),
            ));
        }
        let radices: Vec<u32> = factors.iter().map(Colouring::max_id).collect();
        let mut flat = Vec::with_capacity(n);
        for v in 0..n {
            let mut acc: u64 = u64::from(factors[0].colour(v)) - 1;
            for (f, &r) in factors.iter().zip(&radices).skip(1) {
                acc = acc * u64::from(r) + u64::from(f.colour(v)) - 1;
            }
            let id = acc + 1;
            if id > u64::from(u32::MAX) {
                return Err(Error::InvalidParameter(
                    "composite colour ids exceed the id space".into(),
                ));
            }
            flat.push(id as u32);
        }
        Ok(CompositeColouring {
            factors,
            radices,
            flat: Colouring::new(flat)?,
        })
    }

    pub fn colouring(&self) -> &Colouring {
        &self.flat
    }

    pub fn into_colouring(self) -> Colouring {
        self.flat
    }

    pub fn factors(&self) -> &[Colouring] {
        &self.factors
    }

    pub fn radices(&self) -> &[u32] {
        &self.radices
    }

    pub fn colour_count(&self) -> usize {
        self.flat.colour_count()
    }
}

fn word_ids(w: &Word) -> Vec<u32> {
    w.symbols().iter().map(|&s| u32::from(s)).collect()
}

/// Ternary square-free colouring of the n-vertex path; n colours for
/// n ≤ 2, three afterwards.
pub fn path_colouring_3(n: usize) -> Result<Colouring> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs a vertex".into()));
    }
    Colouring::new(word_ids(&thue_word(n)))
}

/// Quaternary colouring of the n-vertex path that stays nonrepetitive even
/// for walks (equivalently: on the path with a loop at every vertex).
pub fn plus_path_colouring_4(n: usize) -> Result<Colouring> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs a vertex".into()));
    }
    Colouring::new(word_ids(&kp_word(n)))
}

/// Colours each vertex by the separator-word symbol at its level, at most
/// four colours. Under a valid levelling every repetitively coloured walk
/// must also repeat its level sequence, which the downstream compositions
/// exploit.
pub fn levelling_colouring(g: &Graph, l: &Levelling) -> Result<Colouring> {
    if !verify::validate_levelling(g, l)? {
        return Err(Error::InvalidLevelling(
            "levelling must change by at most one along edges".into(),
        ));
    }
    if g.n() == 0 {
        return Colouring::new(Vec::new());
    }
    let min = l.min_level().expect("nonempty");
    let span = (l.max_level().expect("nonempty") - min) as usize + 1;
    let word = kp_word(span);
    let ids = (0..g.n())
        .map(|v| u32::from(word.symbols()[(l.level(v) - min) as usize]))
        .collect();
    Colouring::new(ids)
}

/// Splits a per-vertex id array into one colouring per level, vertices
/// ascending within each level. Inverse of the expansion done by the
/// shadow compositions.
pub fn slice_by_level(l: &Levelling, ids: &[u32]) -> Result<Vec<Colouring>> {
    if l.len() != ids.len() {
        return Err(Error::SizeMismatch(format!(
            "{} ids for {} levelled vertices",
            ids.len(),
            l.len()
        )));
    }
    let Some(min) = l.min_level() else {
        return Ok(Vec::new());
    };
    let span = (l.max_level().expect("nonempty") - min) as usize + 1;
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); span];
    for v in 0..ids.len() {
        buckets[(l.level(v) - min) as usize].push(ids[v]);
    }
    buckets.into_iter().map(Colouring::new).collect()
}

/// Expands per-level colourings (vertices ascending within each level)
/// back to a single full-length colouring.
fn merge_levels(l: &Levelling, per_level: &[Colouring]) -> Result<Colouring> {
    let n = l.len();
    if n == 0 {
        if per_level.iter().any(|c| !c.is_empty()) {
            return Err(Error::SizeMismatch(
                "level colourings given for an empty graph".into(),
            ));
        }
        return Colouring::new(Vec::new());
    }
    let min = l.min_level().expect("nonempty");
    let span = (l.max_level().expect("nonempty") - min) as usize + 1;
    if per_level.len() != span {
        return Err(Error::SizeMismatch(format!(
            "{} level colourings for {span} levels",
            per_level.len()
        )));
    }
    let mut rank = vec![0usize; span];
    let mut ids = Vec::with_capacity(n);
    for v in 0..n {
        let k = (l.level(v) - min) as usize;
        if rank[k] >= per_level[k].len() {
            return Err(Error::SizeMismatch(format!(
                "level {} colouring is too short",
                min + k as i64
            )));
        }
        ids.push(per_level[k].colour(rank[k]));
        rank[k] += 1;
    }
    for (k, r) in rank.iter().enumerate() {
        if *r != per_level[k].len() {
            return Err(Error::SizeMismatch(format!(
                "level {} colouring is too long",
                min + k as i64
            )));
        }
    }
    Colouring::new(ids)
}

/// Pairs the level symbol with a per-level colouring. When the levelling is
/// shadow-complete and each level's colouring is path-nonrepetitive on the
/// subgraph that level induces, the composite is path-nonrepetitive on all
/// of `g`, using at most 4 times the largest per-level count. The
/// shadow-completeness half of that contract is checked here; per-level
/// nonrepetitiveness is the caller's and is certified by oracles in tests.
pub fn compose_shadow(
    g: &Graph,
    l: &Levelling,
    per_level: &[Colouring],
) -> Result<CompositeColouring> {
    let c1 = levelling_colouring(g, l)?;
    if !verify::validate_shadow_complete(g, l)? {
        return Err(Error::NotShadowComplete(
            "shadow composition needs clique shadows".into(),
        ));
    }
    let within = merge_levels(l, per_level)?;
    CompositeColouring::new(vec![c1, within])
}

/// Walk version of the shadow composition, colouring the subgraph `h` of
/// the (bag-completed) graph `g`: triples the level symbol, the per-level
/// colouring, and `c3`, which must be proper on the square of `h`. With
/// walk-nonrepetitive level colourings the composite admits no non-boring
/// repetitively coloured walk in `h`, within 4 · (max level count) ·
/// (c3 count) colours.
pub fn compose_shadow_walks(
    h: &Graph,
    g: &Graph,
    l: &Levelling,
    per_level: &[Colouring],
    c3: &Colouring,
) -> Result<CompositeColouring> {
    if h.n() != g.n() {
        return Err(Error::SizeMismatch(format!(
            "subgraph has {} vertices, host has {}",
            h.n(),
            g.n()
        )));
    }
    for (u, v) in h.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) is missing from the host graph"
            )));
        }
    }
    for u in h.loops() {
        if !g.has_loop(u) {
            return Err(Error::InvalidParameter(format!(
                "loop at {u} is missing from the host graph"
            )));
        }
    }
    if !verify::is_proper(&h.square(), c3)? {
        return Err(Error::InvalidParameter(
            "third factor must properly colour the square".into(),
        ));
    }
    let c1 = levelling_colouring(g, l)?;
    if !verify::validate_shadow_complete(g, l)? {
        return Err(Error::NotShadowComplete(
            "shadow composition needs clique shadows".into(),
        ));
    }
    let within = merge_levels(l, per_level)?;
    CompositeColouring::new(vec![c1, within, c3.clone()])
}

/// Greedy proper colouring of the square of `g` in ascending vertex order;
/// at most Δ² + 1 colours.
pub fn greedy_square_colouring(g: &Graph) -> Colouring {
    let order: Vec<usize> = (0..g.n()).collect();
    greedy_square_colouring_ordered(g, &order).expect("identity order is a permutation")
}

/// Greedy proper colouring of the square of `g` in the given vertex order.
/// Processing a tree top-down from a root keeps it within Δ + 1 colours.
pub fn greedy_square_colouring_ordered(g: &Graph, order: &[usize]) -> Result<Colouring> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::InvalidParameter(
            "order must be a permutation of the vertices".into(),
        ));
    }
    let sq = g.square();
    let mut ids = vec![0u32; n];
    let mut used = Vec::new();
    for &v in order {
        used.clear();
        used.extend(
            sq.neighbors(v)
                .iter()
                .map(|&u| ids[u])
                .filter(|&c| c != 0),
        );
        used.sort_unstable();
        used.dedup();
        let mut c = 1u32;
        for &taken in &used {
            if taken == c {
                c += 1;
            } else if taken > c {
                break;
            }
        }
        ids[v] = c;
    }
    Colouring::new(ids)
}

fn lowest_leaf(t: &Graph) -> usize {
    (0..t.n())
        .find(|&v| t.degree(v) <= 1)
        .expect("a tree has a vertex of degree at most one")
}

fn bfs_depths(g: &Graph, root: usize) -> Vec<usize> {
    let mut depth = vec![usize::MAX; g.n()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    depth
}

/// Four-colouring of a tree with no repetitively coloured path: level the
/// tree from its lowest leaf and compose with constant per-level
/// colourings. Tree levels are independent sets and every component above
/// a level hangs from one vertex, so the shadow composition applies.
pub fn tree_pi_colouring(t: &Graph) -> Result<Colouring> {
    if !t.is_tree() {
        return Err(Error::NotATree("path colouring of a tree".into()));
    }
    let depth = bfs_depths(t, lowest_leaf(t));
    let levelling = Levelling::new(depth.iter().map(|&d| d as i64).collect());
    let per_level = slice_by_level(&levelling, &vec![1u32; t.n()])?;
    Ok(compose_shadow(t, &levelling, &per_level)?.into_colouring())
}

/// Walk-nonrepetitive colouring of a tree with at most 4·max(1, Δ−1)
/// colours: pairs the level symbol with the index among siblings. Rooting
/// at a leaf caps the child count of every vertex at max(1, Δ−1).
pub fn tree_sigma_colouring(t: &Graph) -> Result<Colouring> {
    if !t.is_tree() {
        return Err(Error::NotATree("walk colouring of a tree".into()));
    }
    if t.n() < 2 {
        return Err(Error::InvalidParameter(
            "walk colouring needs at least one edge".into(),
        ));
    }
    let root = lowest_leaf(t);
    let depth = bfs_depths(t, root);
    let levelling = Levelling::new(depth.iter().map(|&d| d as i64).collect());
    let c1 = levelling_colouring(t, &levelling)?;
    let mut child_index = vec![0u32; t.n()];
    child_index[root] = 1;
    for v in 0..t.n() {
        let mut next = 1u32;
        for &w in t.neighbors(v) {
            if depth[w] == depth[v] + 1 {
                child_index[w] = next;
                next += 1;
            }
        }
    }
    Ok(CompositeColouring::new(vec![c1, Colouring::new(child_index)?])?.into_colouring())
}

/// Exceptional cycle lengths that need a fourth colour to avoid
/// repetitively coloured paths.
pub const CYCLE_FOUR_COLOUR_LENGTHS: [usize; 6] = [5, 7, 9, 10, 14, 17];

/// Number of colours a cycle needs so that no path is repetitively
/// coloured: four on the exceptional lengths, three otherwise.
pub fn cycle_pi_colour_count(n: usize) -> u32 {
    if CYCLE_FOUR_COLOUR_LENGTHS.contains(&n) {
        4
    } else {
        3
    }
}

/// Path-nonrepetitive colouring of the n-cycle with exactly the optimal
/// number of colours, found by canonical backtracking (first vertex colour
/// 1, new colours introduced in order). Search effort grows with n; meant
/// for modest lengths.
pub fn cycle_pi_colouring(n: usize) -> Result<Colouring> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let target = cycle_pi_colour_count(n);
    let mut assign = vec![0u32; n];
    assign[0] = 1;
    if search_cycle(&mut assign, 1, 1, target, n) {
        return Colouring::new(assign);
    }
    Err(Error::SearchFailed(format!(
        "no {target}-colouring of the {n}-cycle found, which contradicts the known table"
    )))
}

fn search_cycle(assign: &mut Vec<u32>, pos: usize, used: u32, target: u32, n: usize) -> bool {
    if pos == n {
        return !cyclic_square_exists(assign);
    }
    let limit = target.min(used + 1);
    for c in 1..=limit {
        if c == assign[pos - 1] || (pos == n - 1 && c == assign[0]) {
            continue;
        }
        assign[pos] = c;
        if !linear_suffix_square(assign, pos)
            && search_cycle(assign, pos + 1, used.max(c), target, n)
        {
            return true;
        }
    }
    assign[pos] = 0;
    false
}

/// Square ending at position `pos` in the linear prefix.
fn linear_suffix_square(assign: &[u32], pos: usize) -> bool {
    let len = pos + 1;
    for t in 1..=len / 2 {
        let s = len - 2 * t;
        if (0..t).all(|i| assign[s + i] == assign[s + t + i]) {
            return true;
        }
    }
    false
}

/// Any repetitively coloured arc of the full cycle, wrap included.
fn cyclic_square_exists(assign: &[u32]) -> bool {
    let n = assign.len();
    for s in 0..n {
        for t in 1..=n / 2 {
            if (0..t).all(|i| assign[(s + i) % n] == assign[(s + t + i) % n]) {
                return true;
            }
        }
    }
    false
}

/// Walk-nonrepetitive 5-colouring of the n-cycle: wrap a stretch of the
/// quaternary path word between two positions of distinct colour and give
/// the joining vertex a fifth colour. The distinct-colour stretch must
/// exist, otherwise the word of length 2n−4 would itself be repetitively
/// coloured; its absence is a loud failure, never assumed away.
pub fn cycle_sigma5_colouring(n: usize) -> Result<Colouring> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let word = kp_word(2 * n - 4);
    let sym = word.symbols();
    // 1-based positions i and n+i−2, i ranging over [1, n−2].
    let i = (1..=n - 2)
        .find(|&i| sym[i - 1] != sym[n + i - 3])
        .ok_or_else(|| {
            Error::SearchFailed(
                "no stretch of the path word has distinctly coloured endpoints".into(),
            )
        })?;
    let mut ids: Vec<u32> = (0..n - 1).map(|j| u32::from(sym[i - 1 + j])).collect();
    ids.push(5);
    Colouring::new(ids)
}

/// Subdivides every edge so the result is 4-colourable with no
/// repetitively coloured path, colouring purely by level word. Original
/// vertices are spaced two levels apart (edge `(i, j)` becomes a chain of
/// `2(j-i)-1` division vertices), which is what makes the level colouring
/// sufficient: a repetitively coloured path projects to a level sequence
/// with matching halves, forcing an interior vertex whose path-neighbours
/// share a level; only original vertices have two same-level neighbours,
/// each level holds at most one original, and because the mirror vertex is
/// then a division vertex its neighbours sit on distinct levels, which is
/// a contradiction. The shortest conceivable counterexample, a four-vertex
/// zigzag, would need two adjacent originals, which the spacing forbids.
pub fn subdivision_colouring(g: &Graph) -> Result<(SubdivisionResult, Colouring)> {
    let sub = crate::graph::build_spaced_subdivision(g, 2)?;
    let colouring = levelling_colouring(&sub.graph, &sub.levelling)?;
    Ok((sub, colouring))
}

/// The matching colouring for the edge-maximal graph families: clique
/// vertices keep private colours, the independent set shares the last one.
pub fn extremal_colouring(c: u32, n: usize) -> Result<Colouring> {
    Ok(crate::graph::gen_extremal(c, n)?.1)
}

/// Walk-nonrepetitive colouring of the dense levelled example graph (m
/// levels of p mutually adjacent vertices, consecutive levels fully
/// joined): pairs the level symbol with the vertex's index inside its
/// level, at most 4p colours.
pub fn sigma_lex_colouring(m: usize, p: usize) -> Result<Colouring> {
    if m == 0 || p == 0 {
        return Err(Error::InvalidParameter(
            "level count and level size must be positive".into(),
        ));
    }
    let word = kp_word(m);
    let n = m * p;
    let c1: Vec<u32> = (0..n)
        .map(|v| u32::from(word.symbols()[v / p]))
        .collect();
    let c2: Vec<u32> = (0..n).map(|v| (v % p) as u32 + 1).collect();
    Ok(CompositeColouring::new(vec![Colouring::new(c1)?, Colouring::new(c2)?])?.into_colouring())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        gen_cycle, gen_extremal, gen_lex_product, gen_looped_path, gen_path, gen_random_tree,
        gen_star, Graph,
    };
    use crate::verify::{
        find_repetitive_path, find_repetitive_walk, is_distance2, is_proper,
        tree_find_repetitive_path,
    };

    #[test]
    fn composite_flattening_is_mixed_radix() {
        let a = Colouring::new(vec![1, 2, 2]).unwrap();
        let b = Colouring::new(vec![3, 1, 2]).unwrap();
        let comp = CompositeColouring::new(vec![a, b]).unwrap();
        assert_eq!(comp.radices(), &[2, 3]);
        // id = (c1−1)·3 + c2
        assert_eq!(comp.colouring().colours(), &[3, 4, 5]);
        assert_eq!(comp.colour_count(), 3);

        // Distinct tuples always get distinct ids.
        let flat = comp.colouring();
        for u in 0..3 {
            for v in 0..3 {
                let same_tuple = comp.factors()[0].colour(u) == comp.factors()[0].colour(v)
                    && comp.factors()[1].colour(u) == comp.factors()[1].colour(v);
                assert_eq!(same_tuple, flat.colour(u) == flat.colour(v));
            }
        }
    }

    #[test]
    fn composite_rejects_mismatched_factors() {
        let a = Colouring::new(vec![1, 2]).unwrap();
        let b = Colouring::new(vec![1]).unwrap();
        assert!(CompositeColouring::new(vec![a, b]).is_err());
        assert!(CompositeColouring::new(vec![]).is_err());
    }

    #[test]
    fn path_colourings_match_the_words() {
        assert_eq!(path_colouring_3(2).unwrap().colours(), &[1, 2]);
        assert_eq!(path_colouring_3(5).unwrap().colours(), &[1, 2, 3, 1, 2]);
        assert!(path_colouring_3(0).is_err());

        let c = path_colouring_3(100).unwrap();
        assert_eq!(c.colour_count(), 3);
        assert!(find_repetitive_path(&gen_path(100).unwrap(), &c, 0).is_clean());
    }

    #[test]
    fn plus_path_survives_the_walk_oracle() {
        assert_eq!(plus_path_colouring_4(1).unwrap().colours(), &[1]);
        for n in [2, 5, 13, 60] {
            let c = plus_path_colouring_4(n).unwrap();
            assert!(c.colour_count() <= 4);
            assert_eq!(c.colours(), &word_ids(&kp_word(n))[..]);
            let looped = gen_looped_path(n).unwrap();
            assert!(
                find_repetitive_walk(&looped, &c, false).is_none(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn levelling_colouring_specialises_to_the_path_word() {
        let p9 = gen_path(9).unwrap();
        let l = Levelling::new((0..9).map(|i| i as i64).collect());
        let c = levelling_colouring(&p9, &l).unwrap();
        assert_eq!(c, plus_path_colouring_4(9).unwrap());

        // Constant levelling collapses to one colour.
        let c = levelling_colouring(&p9, &Levelling::new(vec![7; 9])).unwrap();
        assert_eq!(c.colour_count(), 1);

        // Levels must be valid.
        let skip = Levelling::new(vec![0, 2, 0, 2, 0, 2, 0, 2, 0]);
        assert!(levelling_colouring(&p9, &skip).is_err());
    }

    #[test]
    fn levelling_colouring_is_level_constant_on_lex_products() {
        let (g, l) = gen_lex_product(6, 3).unwrap();
        let c = levelling_colouring(&g, &l).unwrap();
        assert!(c.colour_count() <= 4);
        for v in 0..g.n() {
            for w in 0..g.n() {
                if l.level(v) == l.level(w) {
                    assert_eq!(c.colour(v), c.colour(w));
                }
            }
        }
    }

    #[test]
    fn compose_shadow_single_level_reduces_to_per_level() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let l = Levelling::new(vec![0, 0, 0]);
        let per = vec![Colouring::new(vec![1, 2, 3]).unwrap()];
        let comp = compose_shadow(&k3, &l, &per).unwrap();
        assert_eq!(comp.colouring().colours(), &[1, 2, 3]);
    }

    #[test]
    fn compose_shadow_rejects_incomplete_shadows() {
        let c4 = gen_cycle(4).unwrap();
        let antipodal = Levelling::new(vec![0, 1, 2, 1]);
        let per = vec![
            Colouring::new(vec![1]).unwrap(),
            Colouring::new(vec![1, 1]).unwrap(),
            Colouring::new(vec![1]).unwrap(),
        ];
        assert!(matches!(
            compose_shadow(&c4, &antipodal, &per),
            Err(Error::NotShadowComplete(_))
        ));
    }

    #[test]
    fn compose_shadow_checks_level_sizes() {
        let p3 = gen_path(3).unwrap();
        let l = Levelling::new(vec![0, 1, 2]);
        let short = vec![
            Colouring::new(vec![1]).unwrap(),
            Colouring::new(vec![1]).unwrap(),
        ];
        assert!(compose_shadow(&p3, &l, &short).is_err());
        let lopsided = vec![
            Colouring::new(vec![1, 1]).unwrap(),
            Colouring::new(vec![1]).unwrap(),
            Colouring::new(vec![]).unwrap(),
        ];
        assert!(compose_shadow(&p3, &l, &lopsided).is_err());
    }

    #[test]
    fn compose_shadow_walks_on_a_single_edge() {
        let e = gen_path(2).unwrap();
        let l = Levelling::new(vec![0, 1]);
        let per = vec![
            Colouring::new(vec![1]).unwrap(),
            Colouring::new(vec![1]).unwrap(),
        ];
        let c3 = Colouring::new(vec![1, 2]).unwrap();
        let comp = compose_shadow_walks(&e, &e, &l, &per, &c3).unwrap();
        assert_eq!(comp.colouring().colour_count(), 2);
        assert!(find_repetitive_walk(&e, comp.colouring(), false).is_none());
    }

    #[test]
    fn compose_shadow_walks_rejects_bad_inputs() {
        let e = gen_path(2).unwrap();
        let l = Levelling::new(vec![0, 1]);
        let per = vec![
            Colouring::new(vec![1]).unwrap(),
            Colouring::new(vec![1]).unwrap(),
        ];
        // c3 equal on adjacent vertices: not proper on the square.
        let bad_c3 = Colouring::new(vec![1, 1]).unwrap();
        assert!(compose_shadow_walks(&e, &e, &l, &per, &bad_c3).is_err());
        // h must live inside g.
        let h = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g_empty = Graph::new(2);
        let c3 = Colouring::new(vec![1, 2]).unwrap();
        assert!(compose_shadow_walks(&h, &g_empty, &l, &per, &c3).is_err());
    }

    #[test]
    fn greedy_square_small_cases() {
        let p3 = gen_path(3).unwrap();
        let c = greedy_square_colouring(&p3);
        assert_eq!(c.colours(), &[1, 2, 3]);
        let k1 = gen_path(1).unwrap();
        assert_eq!(greedy_square_colouring(&k1).colours(), &[1]);
    }

    #[test]
    fn greedy_square_is_proper_on_the_square() {
        for seed in 0..10u64 {
            let g = crate::graph::gen_random_graph(12, 0.3, seed).unwrap();
            let c = greedy_square_colouring(&g);
            assert!(is_proper(&g.square(), &c).unwrap());
            assert!(is_distance2(&g, &c).unwrap());
        }
    }

    #[test]
    fn greedy_square_root_down_on_trees_stays_small() {
        for seed in 0..20u64 {
            let t = gen_random_tree(25, seed).unwrap();
            let depth = bfs_depths(&t, 0);
            let mut order: Vec<usize> = (0..t.n()).collect();
            order.sort_by_key(|&v| (depth[v], v));
            let c = greedy_square_colouring_ordered(&t, &order).unwrap();
            let delta = t.max_degree() as usize;
            assert!(
                c.colour_count() <= delta + 1,
                "seed {seed}: {} colours for degree {delta}",
                c.colour_count()
            );
            assert!(is_proper(&t.square(), &c).unwrap());
        }
        // Bad orders are rejected.
        assert!(greedy_square_colouring_ordered(&gen_path(3).unwrap(), &[0, 0, 1]).is_err());
        assert!(greedy_square_colouring_ordered(&gen_path(3).unwrap(), &[0, 1]).is_err());
    }

    #[test]
    fn tree_pi_uses_four_colours_and_passes() {
        let star = gen_star(6).unwrap();
        let c = tree_pi_colouring(&star).unwrap();
        assert!(c.colour_count() <= 4);
        assert!(tree_find_repetitive_path(&star, &c).unwrap().is_none());

        let p7 = gen_path(7).unwrap();
        let c = tree_pi_colouring(&p7).unwrap();
        assert!(tree_find_repetitive_path(&p7, &c).unwrap().is_none());

        for seed in 0..25u64 {
            let t = gen_random_tree(20, seed).unwrap();
            let c = tree_pi_colouring(&t).unwrap();
            assert!(c.colour_count() <= 4, "seed {seed}");
            assert!(
                tree_find_repetitive_path(&t, &c).unwrap().is_none(),
                "seed {seed}"
            );
        }
        assert!(tree_pi_colouring(&gen_cycle(4).unwrap()).is_err());
    }

    #[test]
    fn tree_sigma_path_case_collapses_to_the_word() {
        let p8 = gen_path(8).unwrap();
        let c = tree_sigma_colouring(&p8).unwrap();
        assert_eq!(c, plus_path_colouring_4(8).unwrap());
    }

    #[test]
    fn tree_sigma_star_and_random_trees() {
        let star = gen_star(6).unwrap();
        let c = tree_sigma_colouring(&star).unwrap();
        let delta = star.max_degree();
        assert!(c.colour_count() <= 4 * (delta.max(2) as usize - 1));
        assert!(find_repetitive_walk(&star, &c, false).is_none());

        for seed in 0..20u64 {
            let t = gen_random_tree(12, seed).unwrap();
            let c = tree_sigma_colouring(&t).unwrap();
            let delta = t.max_degree() as usize;
            assert!(c.colour_count() <= 4 * delta.max(2).saturating_sub(1).max(1));
            assert!(
                find_repetitive_walk(&t, &c, false).is_none(),
                "seed {seed}"
            );
        }
        assert!(tree_sigma_colouring(&gen_path(1).unwrap()).is_err());
    }

    #[test]
    fn cycle_pi_hits_the_known_counts() {
        for n in 3..=12 {
            let c = cycle_pi_colouring(n).unwrap();
            let g = gen_cycle(n).unwrap();
            assert_eq!(
                c.colour_count(),
                cycle_pi_colour_count(n) as usize,
                "n = {n}"
            );
            assert!(find_repetitive_path(&g, &c, 0).is_clean(), "n = {n}");
        }
        assert!(cycle_pi_colouring(2).is_err());
    }

    #[test]
    fn cycle_sigma5_wraps_the_path_word() {
        for n in 3..=30 {
            let c = cycle_sigma5_colouring(n).unwrap();
            assert!(c.colour_count() <= 5, "n = {n}");
            let g = gen_cycle(n).unwrap();
            assert!(find_repetitive_walk(&g, &c, false).is_none(), "n = {n}");
        }
    }

    #[test]
    fn subdivision_colouring_small_cases() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (sub, c) = subdivision_colouring(&k4).unwrap();
        // 4 originals plus 2(j-i)-1 division vertices per edge.
        assert_eq!(sub.graph.n(), 18);
        assert!(c.colour_count() <= 4);
        let verdict = find_repetitive_path(&sub.graph, &c, 0);
        assert!(verdict.is_clean());

        // A subdivided path is a longer path: every vertex keeps degree
        // at most two, and the word colouring along levels stays clean.
        let p5 = gen_path(5).unwrap();
        let (sub, c) = subdivision_colouring(&p5).unwrap();
        assert_eq!(sub.graph.n(), 9);
        assert!((0..9).all(|v| sub.graph.degree(v) <= 2));
        let word = kp_word(9);
        for v in 0..9 {
            let level = sub.levelling.level(v) as usize;
            assert_eq!(c.colour(v), u32::from(word.symbols()[level]));
        }
        assert!(find_repetitive_path(&sub.graph, &c, 0).is_clean());
    }

    #[test]
    fn unspaced_level_colouring_fails_on_dense_inputs() {
        // With zero subdivisions on consecutive-index edges two originals
        // stay adjacent, and a four-vertex zigzag (division, original,
        // original, division) alternating between two levels defeats any
        // pure level colouring. This pins why the colourer spaces levels.
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let sub = crate::graph::build_subdivision(&k4).unwrap();
        let c = levelling_colouring(&sub.graph, &sub.levelling).unwrap();
        let verdict = find_repetitive_path(&sub.graph, &c, 0);
        let w = verdict.witness().expect("the zigzag is repetitive");
        assert_eq!(w.vertices().len(), 4);
    }

    #[test]
    fn extremal_colouring_matches_generator_and_passes() {
        for c in 2..=4u32 {
            for n in (c as usize)..=10 {
                let (g, expected) = gen_extremal(c, n).unwrap();
                let col = extremal_colouring(c, n).unwrap();
                assert_eq!(col, expected);
                assert!(find_repetitive_path(&g, &col, 0).is_clean(), "c={c} n={n}");
            }
        }
    }

    #[test]
    fn sigma_lex_matches_plus_path_at_width_one() {
        assert_eq!(
            sigma_lex_colouring(9, 1).unwrap(),
            plus_path_colouring_4(9).unwrap()
        );
        assert!(sigma_lex_colouring(0, 2).is_err());
    }

    #[test]
    fn sigma_lex_passes_walk_oracle() {
        for p in 1..=3usize {
            let m = 8;
            let (g, _) = gen_lex_product(m, p).unwrap();
            let c = sigma_lex_colouring(m, p).unwrap();
            assert!(c.colour_count() <= 4 * p, "p = {p}");
            assert!(find_repetitive_walk(&g, &c, false).is_none(), "p = {p}");
        }
    }
}
