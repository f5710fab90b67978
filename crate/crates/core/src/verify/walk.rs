//! Exact detection of repetitively coloured non-boring walks.
//!
//! Both routes run over the synchronized pair graph: states are ordered
//! vertex pairs `(a, b)` with equal colours, and a transition advances both
//! coordinates along an edge (or keeps one in place on a loop). A walk
//! `v1..v2t` is repetitively coloured iff the pair sequence
//! `(v1,v_{t+1}) .. (v_t,v_{2t})` is a state path, it is non-boring iff
//! some state on the path is off-diagonal, and the halves join into one
//! walk iff the final first coordinate can step to the initial second
//! coordinate. Existence is therefore a reachability question, which the
//! decision route answers with connected components; the minimizing route
//! layers the same search by length.

use super::WalkWitness;
use crate::graph::{Colouring, Graph};
use std::collections::VecDeque;

/// Disjoint sets over state ids with the invariant that each root is the
/// minimum id of its set, so components enumerate deterministically.
struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            self.parent[x] = self.parent[self.parent[x] as usize];
            x = self.parent[x] as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo as u32;
        }
    }
}

fn step_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.step_targets(v).collect()).collect()
}

/// Existence route: group states into components, then look for a component
/// holding an off-diagonal state together with states `(a, y)` and `(x, b)`
/// where `x` can step to `y`.
pub(super) fn search_decision(g: &Graph, c: &Colouring) -> Option<WalkWitness> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let steps = step_lists(g);
    let same = |a: usize, b: usize| c.colour(a) == c.colour(b);
    let mut dsu = Dsu::new(n * n);
    for a in 0..n {
        for b in 0..n {
            if !same(a, b) {
                continue;
            }
            let id = a * n + b;
            for &a2 in &steps[a] {
                for &b2 in &steps[b] {
                    if same(a2, b2) {
                        dsu.union(id, a2 * n + b2);
                    }
                }
            }
        }
    }
    let mut off = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            if a != b && same(a, b) {
                let r = dsu.find(a * n + b);
                off[r] = true;
            }
        }
    }
    // Roots equal the minimum state id of their component, so scanning state
    // ids ascending visits components in a deterministic order.
    let mut comp_index = vec![usize::MAX; n * n];
    let mut firsts: Vec<Vec<bool>> = Vec::new();
    let mut seconds: Vec<Vec<bool>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !same(a, b) {
                continue;
            }
            let r = dsu.find(a * n + b);
            if !off[r] {
                continue;
            }
            let idx = if comp_index[r] == usize::MAX {
                comp_index[r] = roots.len();
                roots.push(r);
                firsts.push(vec![false; n]);
                seconds.push(vec![false; n]);
                roots.len() - 1
            } else {
                comp_index[r]
            };
            firsts[idx][a] = true;
            seconds[idx][b] = true;
        }
    }
    for (idx, &root) in roots.iter().enumerate() {
        for y in 0..n {
            if !seconds[idx][y] {
                continue;
            }
            for &x in &steps[y] {
                if firsts[idx][x] {
                    return Some(assemble(g, c, &mut dsu, root, x, y));
                }
            }
        }
    }
    None
}

/// Stitches a concrete witness out of a component known to work: walk from
/// a start state `(_, y)` through an off-diagonal state to an end state
/// `(x, _)`, then unzip the state path into the two halves.
fn assemble(
    g: &Graph,
    c: &Colouring,
    dsu: &mut Dsu,
    root: usize,
    x: usize,
    y: usize,
) -> WalkWitness {
    let n = g.n();
    let steps = step_lists(g);
    let same = |a: usize, b: usize| c.colour(a) == c.colour(b);
    let mut in_comp = |a: usize, b: usize| same(a, b) && dsu.find(a * n + b) == root;
    let start = (0..n)
        .find(|&a| in_comp(a, y))
        .map(|a| a * n + y)
        .expect("component contains a state with second coordinate y");
    let pivot = (0..n * n)
        .find(|&id| {
            let (a, b) = (id / n, id % n);
            a != b && in_comp(a, b)
        })
        .expect("component contains an off-diagonal state");
    let finish = (0..n)
        .find(|&b| in_comp(x, b))
        .map(|b| x * n + b)
        .expect("component contains a state with first coordinate x");

    let bfs = |src: usize, dst: usize| -> Vec<usize> {
        let mut parent = vec![usize::MAX; n * n];
        parent[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(id) = queue.pop_front() {
            if id == dst {
                break;
            }
            let (a, b) = (id / n, id % n);
            for &a2 in &steps[a] {
                for &b2 in &steps[b] {
                    let id2 = a2 * n + b2;
                    if same(a2, b2) && parent[id2] == usize::MAX {
                        parent[id2] = id;
                        queue.push_back(id2);
                    }
                }
            }
        }
        let mut path = vec![dst];
        let mut cur = dst;
        while cur != src {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    };
    let mut states = bfs(start, pivot);
    states.extend(bfs(pivot, finish).into_iter().skip(1));
    let t = states.len();
    let mut vertices = Vec::with_capacity(2 * t);
    vertices.extend(states.iter().map(|id| id / n));
    vertices.extend(states.iter().map(|id| id % n));
    WalkWitness::new(vertices, t).expect("assembled walk is well-formed")
}

const FLAGS: usize = 2;

/// Minimizing route. States gain a flag recording whether an off-diagonal
/// state has been seen; a per-start-vertex layered search finds the least
/// `t` admitting an accepting run, then the witness is rebuilt greedily
/// against backward feasibility tables so the vertex sequence is
/// lexicographically least among minimum-length witnesses with the lowest
/// start vertex.
pub(super) fn search_minimized(g: &Graph, c: &Colouring) -> Option<WalkWitness> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let steps = step_lists(g);
    let same = |a: usize, b: usize| c.colour(a) == c.colour(b);
    // x can be followed by y in one walk step.
    let linkable = |x: usize, y: usize| {
        if x == y {
            g.has_loop(x)
        } else {
            g.has_edge(x, y)
        }
    };
    let state = |a: usize, b: usize, f: bool| (a * n + b) * FLAGS + usize::from(f);

    // Phase 1: the minimum accepting length over all start vertices y.
    let mut t_min: Option<usize> = None;
    let mut visited = vec![false; n * n * FLAGS];
    for y in 0..n {
        visited.iter_mut().for_each(|v| *v = false);
        let mut frontier: Vec<usize> = Vec::new();
        for a in 0..n {
            if same(a, y) {
                let s = state(a, y, a != y);
                visited[s] = true;
                frontier.push(s);
            }
        }
        let mut layer = 1usize;
        'bfs: while !frontier.is_empty() {
            if let Some(best) = t_min {
                if layer >= best {
                    break;
                }
            }
            for &s in &frontier {
                let (f, ab) = (s % FLAGS == 1, s / FLAGS);
                if f && linkable(ab / n, y) {
                    t_min = Some(layer);
                    break 'bfs;
                }
            }
            let mut next = Vec::new();
            for &s in &frontier {
                let (f, ab) = (s % FLAGS == 1, s / FLAGS);
                let (a, b) = (ab / n, ab % n);
                for &a2 in &steps[a] {
                    for &b2 in &steps[b] {
                        if !same(a2, b2) {
                            continue;
                        }
                        let s2 = state(a2, b2, f || a2 != b2);
                        if !visited[s2] {
                            visited[s2] = true;
                            next.push(s2);
                        }
                    }
                }
            }
            frontier = next;
            layer += 1;
        }
    }
    let t = t_min?;

    // Phase 2: backward feasibility per start vertex. feas[y][i][s] says a
    // run in state s at position i+1 can still reach acceptance at length t.
    let mut feas: Vec<Vec<Vec<bool>>> = Vec::with_capacity(n);
    for y in 0..n {
        let mut table = vec![vec![false; n * n * FLAGS]; t];
        for a in 0..n {
            if !linkable(a, y) {
                continue;
            }
            for b in 0..n {
                if same(a, b) {
                    table[t - 1][state(a, b, true)] = true;
                }
            }
        }
        for i in (0..t.saturating_sub(1)).rev() {
            for a in 0..n {
                for b in 0..n {
                    if !same(a, b) {
                        continue;
                    }
                    for f in [false, true] {
                        let reachable = steps[a].iter().any(|&a2| {
                            steps[b].iter().any(|&b2| {
                                same(a2, b2) && table[i + 1][state(a2, b2, f || a2 != b2)]
                            })
                        });
                        if reachable {
                            table[i][state(a, b, f)] = true;
                        }
                    }
                }
            }
        }
        feas.push(table);
    }

    let mut sorted_steps = steps.clone();
    sorted_steps.iter_mut().for_each(|s| s.sort_unstable());

    // Phase 3: greedy first half. Contexts carry every (y, b, flag) that
    // remains consistent with the choices so far.
    let mut first_half = Vec::with_capacity(t);
    let mut contexts: Vec<(usize, usize, bool)> = Vec::new();
    for a in 0..n {
        let starts: Vec<(usize, usize, bool)> = (0..n)
            .filter(|&y| same(a, y) && feas[y][0][state(a, y, a != y)])
            .map(|y| (y, y, a != y))
            .collect();
        if !starts.is_empty() {
            first_half.push(a);
            contexts = starts;
            break;
        }
    }
    assert!(!first_half.is_empty(), "phase 1 accepted, a start must exist");
    for i in 1..t {
        let prev = *first_half.last().unwrap();
        let mut chosen = None;
        for &a2 in &sorted_steps[prev] {
            let mut next_contexts = Vec::new();
            for &(y, b, f) in &contexts {
                for &b2 in &steps[b] {
                    if !same(a2, b2) {
                        continue;
                    }
                    let f2 = f || a2 != b2;
                    if feas[y][i][state(a2, b2, f2)] {
                        let ctx = (y, b2, f2);
                        if !next_contexts.contains(&ctx) {
                            next_contexts.push(ctx);
                        }
                    }
                }
            }
            if !next_contexts.is_empty() {
                chosen = Some((a2, next_contexts));
                break;
            }
        }
        let (a2, next_contexts) = chosen.expect("feasible prefix extends to length t");
        first_half.push(a2);
        contexts = next_contexts;
    }

    // Phase 4: greedy second half against feasibility tables that now only
    // depend on the fixed first half.
    let last = *first_half.last().unwrap();
    let mut gfeas = vec![vec![false; n * FLAGS]; t];
    for b in 0..n {
        if same(last, b) {
            gfeas[t - 1][b * FLAGS + 1] = true;
        }
    }
    for i in (0..t.saturating_sub(1)).rev() {
        let a_next = first_half[i + 1];
        for b in 0..n {
            if !same(first_half[i], b) {
                continue;
            }
            for f in [false, true] {
                let ok = steps[b].iter().any(|&b2| {
                    same(a_next, b2) && gfeas[i + 1][b2 * FLAGS + usize::from(f || a_next != b2)]
                });
                if ok {
                    gfeas[i][b * FLAGS + usize::from(f)] = true;
                }
            }
        }
    }
    let a1 = first_half[0];
    let y = (0..n)
        .find(|&y| same(a1, y) && linkable(last, y) && gfeas[0][y * FLAGS + usize::from(a1 != y)])
        .expect("contexts survived, a second half must exist");
    let mut second_half = vec![y];
    let mut flag = a1 != y;
    for i in 1..t {
        let prev = *second_half.last().unwrap();
        let a_i = first_half[i];
        let b2 = sorted_steps[prev]
            .iter()
            .copied()
            .find(|&b2| {
                same(a_i, b2) && gfeas[i][b2 * FLAGS + usize::from(flag || a_i != b2)]
            })
            .expect("gfeas admitted the prefix");
        flag = flag || a_i != b2;
        second_half.push(b2);
    }

    let mut vertices = first_half;
    vertices.extend(second_half);
    Some(WalkWitness::new(vertices, t).expect("minimized walk is well-formed"))
}
