//! Shared helpers for the integration suites: an independent walk-repetition
//! search used to cross-check the production oracle, and exhaustive
//! enumerators for small labelled trees and canonical colourings.

// Compiled into every integration-test target; not all targets use every
// helper.
#![allow(dead_code)]

use nonrep_core::{Colouring, Graph};

/// Decides whether `g` under `c` carries a repetitively coloured walk that is
/// not boring, considering half-lengths `1..=t_max` only.
///
/// Deliberately not the production algorithm: for every half-length `t` and
/// every candidate start `s2` of the second half, a layered reachability table
/// over vertex pairs `(w_i, w_{t+i})` is grown one step at a time. A layer-`t`
/// state `(u, v)` with a recorded mismatch is a witness exactly when the two
/// halves link up, i.e. when `s2` is reachable from `u` in one step.
pub fn brute_force_walk_exists(g: &Graph, c: &Colouring, t_max: usize) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let steps: Vec<Vec<usize>> = (0..n).map(|v| g.step_targets(v).collect()).collect();
    // state index: ((a * n) + b) * 2 + differs
    for t in 1..=t_max {
        for s2 in 0..n {
            let mut cur = vec![false; n * n * 2];
            for a in 0..n {
                if c.colour(a) == c.colour(s2) {
                    cur[(a * n + s2) * 2 + usize::from(a != s2)] = true;
                }
            }
            for _ in 2..=t {
                let mut nxt = vec![false; n * n * 2];
                for a in 0..n {
                    for b in 0..n {
                        for f in 0..2 {
                            if !cur[(a * n + b) * 2 + f] {
                                continue;
                            }
                            for &a2 in &steps[a] {
                                for &b2 in &steps[b] {
                                    if c.colour(a2) == c.colour(b2) {
                                        let f2 = f | usize::from(a2 != b2);
                                        nxt[(a2 * n + b2) * 2 + f2] = true;
                                    }
                                }
                            }
                        }
                    }
                }
                cur = nxt;
            }
            for u in 0..n {
                if !steps[u].contains(&s2) {
                    continue;
                }
                for v in 0..n {
                    if cur[(u * n + v) * 2 + 1] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// All labelled trees on `n` vertices via Pruefer sequences (`n^(n-2)` trees
/// for `n >= 3`, one tree for `n` in `{1, 2}`).
pub fn labelled_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Graph::new(1)];
    }
    if n == 2 {
        return vec![Graph::from_edges(2, &[(0, 1)]).unwrap()];
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        out.push(prufer_decode(n, &seq));
        // odometer over {0..n-1}^(n-2)
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < n {
                break;
            }
            seq[pos] = 0;
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::new(n);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        g.add_edge(leaf, s).unwrap();
        used[leaf] = true;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1 && !used[v]);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    g.add_edge(u, v).unwrap();
    g
}

/// Every colouring of `n` vertices with at most `max_colours` colours, one
/// representative per colour-permutation class: colour ids appear in first-use
/// order (vertex 0 gets colour 1, each later vertex reuses an earlier id or
/// introduces the next unused one).
pub fn canonical_colourings(n: usize, max_colours: u32) -> Vec<Vec<u32>> {
    assert!(n >= 1 && max_colours >= 1);
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(cur: &mut Vec<u32>, i: usize, used: u32, cap: u32, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let top = (used + 1).min(cap);
        for c in 1..=top {
            cur[i] = c;
            rec(cur, i + 1, used.max(c), cap, out);
        }
    }
    rec(&mut cur, 0, 0, max_colours, &mut out);
    out
}
