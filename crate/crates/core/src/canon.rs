//! Canonical labelling by individualization and refinement.
//!
//! The search tree branches on the members of the first non-singleton cell of
//! an equitable ordered partition. Two sound prunings keep it small:
//!
//! * node invariants: among siblings only the children whose refined
//!   partition has the largest isomorphism-invariant signature survive;
//! * twin classes: vertices of a cell with equal open or closed
//!   neighbourhoods are swapped by an automorphism that fixes the current
//!   partition, so one representative per class is enough.
//!
//! The code is the lexicographically largest adjacency string over the
//! surviving leaves.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Isomorphism-complete label: equal codes iff isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let (code, _) = canonical_form(g);
    code
}

/// Canonical code together with a labelling `perm` (vertex `v` gets label
/// `perm[v]`) such that `g.permute(&perm)` is the canonical representative.
pub fn canonical_form(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (
            CanonicalCode {
                order: 0,
                bits: vec![],
            },
            vec![],
        );
    }
    let mut search = Search {
        g,
        best: None,
    };
    let root = refine(g, vec![g.vertices().to_vec()]);
    search.descend(root.0);
    let (bits, order_seq) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (label, &v) in order_seq.iter().enumerate() {
        perm[v] = label;
    }
    (CanonicalCode { order: n, bits }, perm)
}

/// Canonical representative: `g` relabelled by [`canonical_form`].
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_form(g);
    g.permute(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, part: Partition) {
        let Some(target) = part.iter().position(|c| c.len() > 1) else {
            let seq: Vec<usize> = part.iter().map(|c| c[0]).collect();
            let bits = leaf_certificate(self.g, &seq);
            if self.best.as_ref().is_none_or(|(b, _)| bits > *b) {
                self.best = Some((bits, seq));
            }
            return;
        };
        let reps = twin_representatives(self.g, &part[target]);
        let mut children: Vec<(Vec<u64>, Partition)> = reps
            .into_iter()
            .map(|v| {
                let mut p = part.clone();
                let cell = p.remove(target);
                let rest: Vec<usize> = cell.into_iter().filter(|&u| u != v).collect();
                p.insert(target, rest);
                p.insert(target, vec![v]);
                let (p, sig) = refine(self.g, p);
                (sig, p)
            })
            .collect();
        let top = children.iter().map(|(s, _)| s.clone()).max().unwrap();
        children.retain(|(s, _)| *s == top);
        for (_, p) in children {
            self.descend(p);
        }
    }
}

/// One vertex per class of pairwise twins inside `cell`.
fn twin_representatives(g: &Graph, cell: &[usize]) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = reps.iter().any(|&r| {
            let (nr, nv) = (g.neighbors(r).without(v), g.neighbors(v).without(r));
            nr == nv
        });
        if !twin {
            reps.push(v);
        }
    }
    reps
}

fn leaf_certificate(g: &Graph, seq: &[usize]) -> Vec<u64> {
    let n = seq.len();
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(seq[i], seq[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Splitting is driven only by counts, so the returned signature (the
/// sequence of split cell sizes and counts) is labelling-invariant.
fn refine(g: &Graph, mut part: Partition) -> (Partition, Vec<u64>) {
    let mut sig = Vec::new();
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < part.len() {
            let splitter: VertexSet = part[s].iter().copied().collect();
            let mut next: Partition = Vec::with_capacity(part.len());
            for cell in &part {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection(splitter).len(), v))
                    .collect();
                keyed.sort_unstable();
                let mut i = 0;
                let before = next.len();
                while i < keyed.len() {
                    let mut j = i;
                    while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                        j += 1;
                    }
                    let mut sub: Vec<usize> = keyed[i..j].iter().map(|&(_, v)| v).collect();
                    sub.sort_unstable();
                    sig.push(((keyed[i].0 as u64) << 32) | sub.len() as u64);
                    next.push(sub);
                    i = j;
                }
                if next.len() - before > 1 {
                    changed = true;
                }
            }
            part = next;
            s += 1;
        }
        if !changed {
            return (part, sig);
        }
    }
}
