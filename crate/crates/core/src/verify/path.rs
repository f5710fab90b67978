//! Budgeted exhaustive search for repetitively coloured simple paths, plus
//! a polynomial fast path for trees.

use super::{PathWitness, Verdict, VerdictStatus};
use crate::error::Error;
use crate::graph::{Colouring, Graph};
use crate::Result;

/// Searches every simple path for a repetitively coloured subpath.
///
/// The search grows paths depth-first from each start vertex in ascending
/// order, counting one node expansion per vertex pushed. After each push
/// only suffixes ending at the new vertex need checking, shortest first, so
/// the first hit is reported immediately. `budget == 0` means unlimited;
/// otherwise exceeding it yields `Unknown`. A `Clean` verdict is exact: all
/// simple paths were covered.
///
/// Panics if the colouring length does not match the graph.
pub fn find_repetitive_path(g: &Graph, c: &Colouring, budget: u64) -> Verdict {
    assert_eq!(
        c.len(),
        g.n(),
        "colouring length must match the vertex count"
    );
    let mut search = PathSearch {
        g,
        colours: c.colours(),
        path: Vec::with_capacity(g.n()),
        on_path: vec![false; g.n()],
        nodes: 0,
        budget,
    };
    for start in 0..g.n() {
        match search.grow(start) {
            Flow::Continue => {}
            Flow::Found(w) => {
                debug_assert!(w.validate(g, c).is_ok());
                return Verdict {
                    status: VerdictStatus::Witness(w),
                    budget_spent: search.nodes,
                };
            }
            Flow::OutOfBudget => {
                return Verdict {
                    status: VerdictStatus::Unknown,
                    budget_spent: search.nodes,
                };
            }
        }
    }
    Verdict {
        status: VerdictStatus::Clean,
        budget_spent: search.nodes,
    }
}

enum Flow {
    Continue,
    Found(PathWitness),
    OutOfBudget,
}

struct PathSearch<'a> {
    g: &'a Graph,
    colours: &'a [u32],
    path: Vec<usize>,
    on_path: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl PathSearch<'_> {
    fn grow(&mut self, v: usize) -> Flow {
        self.nodes += 1;
        if self.budget != 0 && self.nodes > self.budget {
            return Flow::OutOfBudget;
        }
        self.path.push(v);
        self.on_path[v] = true;
        if let Some(t) = self.suffix_square() {
            let tail = self.path[self.path.len() - 2 * t..].to_vec();
            return Flow::Found(PathWitness::new(tail, t).expect("suffix is a simple path"));
        }
        for &w in self.g.neighbors(v) {
            if self.on_path[w] {
                continue;
            }
            match self.grow(w) {
                Flow::Continue => {}
                stop => return stop,
            }
        }
        self.path.pop();
        self.on_path[v] = false;
        Flow::Continue
    }

    /// Shortest repetitively coloured suffix ending at the newest vertex,
    /// as a half-length. Prefixes were checked by earlier pushes, so
    /// suffixes are the only new candidates.
    fn suffix_square(&self) -> Option<usize> {
        let len = self.path.len();
        for t in 1..=len / 2 {
            let s = len - 2 * t;
            let halves_match = (0..t).all(|i| {
                self.colours[self.path[s + i]] == self.colours[self.path[s + t + i]]
            });
            if halves_match {
                return Some(t);
            }
        }
        None
    }
}

/// Exact repetitive-path detection for trees in cubic time: the unique path
/// between two vertices is repetitively coloured iff it is one whole square,
/// so growing every root-to-vertex path and checking only full even lengths
/// covers all cases.
pub fn tree_find_repetitive_path(g: &Graph, c: &Colouring) -> Result<Option<PathWitness>> {
    if c.len() != g.n() {
        return Err(Error::SizeMismatch(format!(
            "colouring has {} entries for {} vertices",
            c.len(),
            g.n()
        )));
    }
    if !g.is_tree() {
        return Err(Error::NotATree(
            "whole-path checking is only exact on trees".into(),
        ));
    }
    let colours = c.colours();
    let mut path: Vec<usize> = Vec::with_capacity(g.n());
    // Iterative DFS from each root; (vertex, parent) frames with explicit
    // unwinding keeps the current root path in `path`.
    for root in 0..g.n() {
        let mut stack: Vec<(usize, usize, bool)> = vec![(root, usize::MAX, false)];
        path.clear();
        while let Some((v, parent, expanded)) = stack.pop() {
            if expanded {
                path.pop();
                continue;
            }
            stack.push((v, parent, true));
            path.push(v);
            let len = path.len();
            if len % 2 == 0 {
                let t = len / 2;
                let square = (0..t).all(|i| colours[path[i]] == colours[path[t + i]]);
                if square {
                    let w = PathWitness::new(path.clone(), t).expect("tree path is simple");
                    debug_assert!(w.validate(g, c).is_ok());
                    return Ok(Some(w));
                }
            }
            for &w in g.neighbors(v) {
                if w != parent {
                    stack.push((w, v, false));
                }
            }
        }
    }
    Ok(None)
}
