//! The graph on marked letters and its topological orders.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::multi::marking::MarkedWord;
use crate::multi::projection::LetterBudget;
use crate::words::{Alphabet, Letter, Word};

/// The marked letter `(letter)_mark`, marks starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub letter: Letter,
    pub mark: usize,
}

/// Nodes `(a)_i` for every letter `a` and `i ∈ 1..=k_a`, with adjacency in
/// compressed rows and no duplicate edges.
#[derive(Clone, Debug)]
pub struct MarkingGraph {
    alphabet: Arc<Alphabet>,
    // first node id of each letter, plus the total
    offsets: Vec<usize>,
    row_start: Vec<usize>,
    targets: Vec<u32>,
}

impl MarkingGraph {
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn node_count(&self) -> usize {
        *self.offsets.last().expect("offsets hold the total")
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn node(&self, id: usize) -> Node {
        let letter = self.offsets.partition_point(|&o| o <= id) - 1;
        Node {
            letter: letter as Letter,
            mark: id - self.offsets[letter] + 1,
        }
    }

    pub fn id(&self, node: Node) -> Option<usize> {
        let l = node.letter as usize;
        let size = self.offsets.get(l + 1)? - self.offsets[l];
        (1..=size)
            .contains(&node.mark)
            .then(|| self.offsets[l] + node.mark - 1)
    }

    pub fn successors(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.targets[self.row_start[id]..self.row_start[id + 1]]
            .iter()
            .map(|&t| t as usize)
    }

    pub fn has_edge(&self, from: Node, to: Node) -> bool {
        match (self.id(from), self.id(to)) {
            (Some(f), Some(t)) => self.successors(f).any(|s| s == t),
            _ => false,
        }
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<(Node, Node)> {
        let mut out: Vec<(Node, Node)> = (0..self.node_count())
            .flat_map(|u| self.successors(u).map(move |v| (u, v)))
            .map(|(u, v)| (self.node(u), self.node(v)))
            .collect();
        out.sort();
        out
    }

    /// Renders a node as `(a)3`.
    pub fn label(&self, node: Node) -> String {
        format!("({}){}", self.alphabet.symbol(node.letter), node.mark)
    }
}

/// Accumulates edges before compressing them into a [`MarkingGraph`].
pub(crate) struct GraphBuilder {
    alphabet: Arc<Alphabet>,
    offsets: Vec<usize>,
    edges: Vec<(u32, u32)>,
}

impl GraphBuilder {
    /// Starts with the chain edges `(a)_i → (a)_{i+1}`.
    pub(crate) fn new(budget: &LetterBudget) -> Self {
        let mut offsets = Vec::with_capacity(budget.counts().len() + 1);
        let mut total = 0;
        offsets.push(0);
        for &k in budget.counts() {
            total += k;
            offsets.push(total);
        }
        let mut edges = Vec::with_capacity(total);
        for w in offsets.windows(2) {
            for id in w[0]..w[1].saturating_sub(1) {
                edges.push((id as u32, id as u32 + 1));
            }
        }
        GraphBuilder {
            alphabet: budget.alphabet().clone(),
            offsets,
            edges,
        }
    }

    pub(crate) fn reserve(&mut self, additional: usize) {
        self.edges.reserve(additional);
    }

    fn path(&mut self, ids: impl Iterator<Item = usize>) {
        let mut prev: Option<usize> = None;
        for id in ids {
            if let Some(p) = prev {
                self.edges.push((p as u32, id as u32));
            }
            prev = Some(id);
        }
    }

    /// Adds adjacency edges of a marked word already known to be K-valid.
    pub(crate) fn add_marked(&mut self, w: &MarkedWord) {
        let offsets = std::mem::take(&mut self.offsets);
        self.path(w.nodes().map(|(l, m)| offsets[l as usize] + m - 1));
        self.offsets = offsets;
    }

    /// Adds a word under its canonical marking, which must fit the budget.
    pub(crate) fn add_canonical(&mut self, w: &Word) {
        let offsets = std::mem::take(&mut self.offsets);
        let mut next = offsets.clone();
        self.path(w.letters().iter().map(|&l| {
            let id = next[l as usize];
            next[l as usize] += 1;
            id
        }));
        self.offsets = offsets;
    }

    pub(crate) fn finish(self) -> MarkingGraph {
        let v = *self.offsets.last().expect("offsets hold the total");
        let mut row_start = vec![0usize; v + 1];
        for &(u, _) in &self.edges {
            row_start[u as usize + 1] += 1;
        }
        for i in 0..v {
            row_start[i + 1] += row_start[i];
        }
        let mut fill = row_start.clone();
        let mut raw = vec![0u32; self.edges.len()];
        for &(u, t) in &self.edges {
            raw[fill[u as usize]] = t;
            fill[u as usize] += 1;
        }
        drop(self.edges);
        // drop repeated targets within each row
        let mut stamp = vec![u32::MAX; v];
        let mut targets = Vec::with_capacity(raw.len());
        let mut start = vec![0usize; v + 1];
        for u in 0..v {
            for &t in &raw[row_start[u]..row_start[u + 1]] {
                if stamp[t as usize] != u as u32 {
                    stamp[t as usize] = u as u32;
                    targets.push(t);
                }
            }
            start[u + 1] = targets.len();
        }
        MarkingGraph {
            alphabet: self.alphabet,
            offsets: self.offsets,
            row_start: start,
            targets,
        }
    }
}

/// Builds the graph of a family of K-valid marked words.
pub fn build_graph(marked: &[MarkedWord], budget: &LetterBudget) -> Result<MarkingGraph> {
    let mut builder = GraphBuilder::new(budget);
    for w in marked {
        if !w.is_k_valid(budget) {
            return Err(Error::InvalidMarking(format!(
                "{w} is not valid for the budget"
            )));
        }
        builder.add_marked(w);
    }
    Ok(builder.finish())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopoOrder {
    Unique(Vec<Node>),
    /// Several orders exist; one of them, breaking ties by smallest node.
    Multiple(Vec<Node>),
    Cyclic,
}

impl TopoOrder {
    pub fn order(&self) -> Option<&[Node]> {
        match self {
            TopoOrder::Unique(o) | TopoOrder::Multiple(o) => Some(o),
            TopoOrder::Cyclic => None,
        }
    }
}

/// Kahn elimination; the order is unique iff exactly one source is available
/// at every step.
pub fn topo_sort_unique(g: &MarkingGraph) -> TopoOrder {
    let v = g.node_count();
    let mut indegree = vec![0u32; v];
    for &t in &g.targets {
        indegree[t as usize] += 1;
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..v).filter(|&u| indegree[u] == 0).map(Reverse).collect();
    let mut unique = true;
    let mut order = Vec::with_capacity(v);
    while let Some(Reverse(u)) = ready.pop() {
        if !ready.is_empty() {
            unique = false;
        }
        order.push(g.node(u));
        for s in g.successors(u) {
            indegree[s] -= 1;
            if indegree[s] == 0 {
                ready.push(Reverse(s));
            }
        }
    }
    if order.len() < v {
        TopoOrder::Cyclic
    } else if unique {
        TopoOrder::Unique(order)
    } else {
        TopoOrder::Multiple(order)
    }
}

/// Spells out an order, dropping the marks.
pub fn unmark(alphabet: &Arc<Alphabet>, order: &[Node]) -> Word {
    Word::from_letters(alphabet, order.iter().map(|n| n.letter).collect())
}
