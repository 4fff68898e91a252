//! Crystal operators on the level-`l` Fock space and the highest-weight
//! crystals they generate from the empty multipartition.
//!
//! Two total orders on the `i`-nodes of a multipartition are supported:
//!
//! * [`NodeOrder::Uglov`] compares contents first (for the integer
//!   multicharge), breaking ties by putting the higher component first.
//! * [`NodeOrder::Kleshchev`] compares components first (higher component
//!   last), then contents. It depends only on the residue class of the
//!   multicharge.
//!
//! For a residue `i`, the addable (`A`) and removable (`R`) `i`-nodes are
//! written in increasing order and every `RA` factor is cancelled, leaving
//! `A^p R^q`. `f_i` adds the node of the rightmost surviving `A`; `e_i`
//! removes the node of the leftmost surviving `R`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{all_boundary_nodes, check_level, Multicharge, Multipartition, Node};

/// Default maximum number of vertices in one enumerated layer.
pub const DEFAULT_LAYER_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NodeOrder {
    /// Order attached to an integer multicharge `s`.
    Uglov(Multicharge),
    /// Order attached to the residue class of a multicharge. The stored
    /// charge is always reduced into `0..e`.
    Kleshchev(Multicharge),
}

impl NodeOrder {
    pub fn uglov(s: Multicharge) -> Self {
        NodeOrder::Uglov(s)
    }

    pub fn kleshchev(class: Multicharge) -> Self {
        NodeOrder::Kleshchev(class.residue_class())
    }

    pub fn charge(&self) -> &Multicharge {
        match self {
            NodeOrder::Uglov(s) | NodeOrder::Kleshchev(s) => s,
        }
    }

    pub fn level(&self) -> usize {
        self.charge().level()
    }

    /// Sort key: smaller key means earlier in the signature word.
    fn key(&self, node: Node) -> (i64, i64) {
        match self {
            NodeOrder::Uglov(s) => (node.content(s), -(node.comp as i64)),
            NodeOrder::Kleshchev(s) => (node.comp as i64, node.content(s)),
        }
    }

    pub fn compare(&self, a: Node, b: Node) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }

    fn residue(&self, node: Node) -> i64 {
        node.residue(self.charge())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterKind {
    Add,
    Remove,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: LetterKind,
    pub node: Node,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignatureWord {
    pub letters: Vec<Letter>,
}

impl SignatureWord {
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Builds a word from a string of `A`/`R` with placeholder nodes; used to
    /// test reduction in isolation.
    pub fn from_pattern(pattern: &str) -> Self {
        let letters = pattern
            .chars()
            .enumerate()
            .map(|(k, ch)| Letter {
                kind: if ch == 'A' { LetterKind::Add } else { LetterKind::Remove },
                node: Node::new(1, k + 1, 0),
            })
            .collect();
        SignatureWord { letters }
    }

    pub fn pattern(&self) -> String {
        self.letters
            .iter()
            .map(|l| if l.kind == LetterKind::Add { 'A' } else { 'R' })
            .collect()
    }
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pattern())
    }
}

/// Addable and removable `i`-nodes of `mp` in increasing `ord` order.
pub fn signature_word(mp: &Multipartition, i: i64, ord: &NodeOrder) -> SignatureWord {
    let i = ord.charge().e.reduce(i);
    let (add, rem) = all_boundary_nodes(mp);
    let mut letters: Vec<Letter> = add
        .into_iter()
        .map(|node| Letter {
            kind: LetterKind::Add,
            node,
        })
        .chain(rem.into_iter().map(|node| Letter {
            kind: LetterKind::Remove,
            node,
        }))
        .filter(|l| ord.residue(l.node) == i)
        .collect();
    letters.sort_by(|a, b| ord.compare(a.node, b.node));
    SignatureWord { letters }
}

/// Cancels `RA` factors until the word has shape `A^p R^q`.
pub fn reduce(word: &SignatureWord) -> SignatureWord {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in &word.letters {
        match (l.kind, stack.last()) {
            (LetterKind::Add, Some(top)) if top.kind == LetterKind::Remove => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    SignatureWord { letters: stack }
}

fn good_in_word(word: &SignatureWord) -> (Option<Node>, Option<Node>) {
    let red = reduce(word);
    let add = red
        .letters
        .iter()
        .rev()
        .find(|l| l.kind == LetterKind::Add)
        .map(|l| l.node);
    let rem = red
        .letters
        .iter()
        .find(|l| l.kind == LetterKind::Remove)
        .map(|l| l.node);
    (add, rem)
}

/// The good addable `i`-node: the rightmost `A` of the reduced word.
pub fn good_addable(mp: &Multipartition, i: i64, ord: &NodeOrder) -> Option<Node> {
    good_in_word(&signature_word(mp, i, ord)).0
}

/// The good removable `i`-node: the leftmost `R` of the reduced word.
pub fn good_removable(mp: &Multipartition, i: i64, ord: &NodeOrder) -> Option<Node> {
    good_in_word(&signature_word(mp, i, ord)).1
}

pub fn f_op(mp: &Multipartition, i: i64, ord: &NodeOrder) -> Option<Multipartition> {
    good_addable(mp, i, ord).map(|n| mp.with_node_added(n))
}

pub fn e_op(mp: &Multipartition, i: i64, ord: &NodeOrder) -> Option<Multipartition> {
    good_removable(mp, i, ord).map(|n| mp.with_node_removed(n))
}

/// Every signature word of `mp`, keyed by residue in ascending order. Only
/// residues carrying at least one boundary node appear.
pub fn signature_words(mp: &Multipartition, ord: &NodeOrder) -> Vec<(i64, SignatureWord)> {
    let (add, rem) = all_boundary_nodes(mp);
    let mut letters: Vec<(i64, Letter)> = add
        .into_iter()
        .map(|node| Letter {
            kind: LetterKind::Add,
            node,
        })
        .chain(rem.into_iter().map(|node| Letter {
            kind: LetterKind::Remove,
            node,
        }))
        .map(|l| (ord.residue(l.node), l))
        .collect();
    letters.sort_by(|(ra, a), (rb, b)| ra.cmp(rb).then_with(|| ord.compare(a.node, b.node)));
    let mut out: Vec<(i64, SignatureWord)> = Vec::new();
    for (r, l) in letters {
        match out.last_mut() {
            Some((last, w)) if *last == r => w.letters.push(l),
            _ => out.push((r, SignatureWord { letters: vec![l] })),
        }
    }
    out
}

/// All `(i, f_i(mp))` with `f_i(mp)` defined, ascending in `i`.
pub fn successors(mp: &Multipartition, ord: &NodeOrder) -> Vec<(i64, Multipartition)> {
    signature_words(mp, ord)
        .into_iter()
        .filter_map(|(i, w)| good_in_word(&w).0.map(|n| (i, mp.with_node_added(n))))
        .collect()
}

/// All `(i, e_i(mp))` with `e_i(mp)` defined, ascending in `i`.
pub fn predecessors(mp: &Multipartition, ord: &NodeOrder) -> Vec<(i64, Multipartition)> {
    signature_words(mp, ord)
        .into_iter()
        .filter_map(|(i, w)| good_in_word(&w).1.map(|n| (i, mp.with_node_removed(n))))
        .collect()
}

/// An edge `src --i--> dst`; indices are global over the flattened layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub residue: i64,
    pub dst: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub with_edges: bool,
    pub layer_cap: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            with_edges: true,
            layer_cap: DEFAULT_LAYER_CAP,
        }
    }
}

impl EnumerateOptions {
    pub fn vertices_only() -> Self {
        EnumerateOptions {
            with_edges: false,
            ..Default::default()
        }
    }
}

/// The highest-weight crystal truncated at rank `n_max`, layered by rank.
/// Each layer is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub order: NodeOrder,
    pub layers: Vec<Vec<Multipartition>>,
    pub edges: Option<Vec<Edge>>,
}

impl CrystalGraph {
    pub fn layer(&self, n: usize) -> &[Multipartition] {
        self.layers.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn n_max(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Global index of the first vertex of layer `n`.
    pub fn layer_offset(&self, n: usize) -> usize {
        self.layers[..n].iter().map(Vec::len).sum()
    }

    /// Global index of `mp`, if it is a vertex.
    pub fn index_of(&self, mp: &Multipartition) -> Option<usize> {
        let n = mp.rank();
        let layer = self.layers.get(n)?;
        layer.binary_search(mp).ok().map(|k| self.layer_offset(n) + k)
    }

    pub fn contains(&self, mp: &Multipartition) -> bool {
        self.index_of(mp).is_some()
    }

    pub fn vertex(&self, index: usize) -> &Multipartition {
        let mut k = index;
        for layer in &self.layers {
            if k < layer.len() {
                return &layer[k];
            }
            k -= layer.len();
        }
        panic!("vertex index {index} out of range");
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Multipartition> {
        self.layers.iter().flatten()
    }

    /// Edges as `(source, residue, target)` triples of multipartitions.
    pub fn labelled_edges(&self) -> Vec<(Multipartition, i64, Multipartition)> {
        let flat: Vec<&Multipartition> = self.vertices().collect();
        self.edges
            .iter()
            .flatten()
            .map(|e| (flat[e.src].clone(), e.residue, flat[e.dst].clone()))
            .collect()
    }
}

/// Breadth-first closure of the empty multipartition under every `f_i`,
/// up to rank `n_max`.
pub fn enumerate(ord: &NodeOrder, n_max: usize, opts: EnumerateOptions) -> Result<CrystalGraph> {
    let l = ord.level();
    let mut layers: Vec<Vec<Multipartition>> = vec![vec![Multipartition::empty(l)]];
    let mut edges: Vec<Edge> = Vec::new();
    let mut offset = 0usize;
    for k in 0..n_max {
        let frontier = &layers[k];
        let succ: Vec<Vec<(i64, Multipartition)>> = frontier.par_iter().map(|mp| successors(mp, ord)).collect();
        let next: Vec<Multipartition> = succ
            .iter()
            .flatten()
            .map(|(_, m)| m.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if next.len() > opts.layer_cap {
            return Err(Error::LayerCapExceeded {
                layer: k + 1,
                size: next.len(),
                cap: opts.layer_cap,
            });
        }
        let next_offset = offset + frontier.len();
        if opts.with_edges {
            for (src, out) in succ.iter().enumerate() {
                for (i, m) in out {
                    let dst = next.binary_search(m).expect("successor present in next layer");
                    edges.push(Edge {
                        src: offset + src,
                        residue: *i,
                        dst: next_offset + dst,
                    });
                }
            }
        }
        offset = next_offset;
        layers.push(next);
    }
    Ok(CrystalGraph {
        order: ord.clone(),
        layers,
        edges: opts.with_edges.then_some(edges),
    })
}

/// A residue sequence `i_1..i_n` with `f_{i_n}...f_{i_1}(∅) = mp`.
///
/// Built by repeatedly applying `e_i` for the smallest residue `i` at which
/// it is defined, then reversing.
pub fn highest_weight_path(mp: &Multipartition, ord: &NodeOrder) -> Result<Vec<i64>> {
    check_level(mp, ord.charge())?;
    let mut cur = mp.clone();
    let mut seq = Vec::with_capacity(mp.rank());
    while !cur.is_empty() {
        let step = signature_words(&cur, ord)
            .into_iter()
            .find_map(|(i, w)| good_in_word(&w).1.map(|n| (i, n)));
        match step {
            Some((i, node)) => {
                seq.push(i);
                cur = cur.with_node_removed(node);
            }
            None => return Err(Error::NotInCrystal(mp.to_string())),
        }
    }
    seq.reverse();
    Ok(seq)
}

/// Applies `f_{i_1}`, then `f_{i_2}`, ... starting from the empty multipartition.
pub fn follow_path(residues: &[i64], ord: &NodeOrder) -> Result<Multipartition> {
    let mut cur = Multipartition::empty(ord.level());
    for (step, &i) in residues.iter().enumerate() {
        cur = f_op(&cur, i, ord).ok_or(Error::DeadEnd { step })?;
    }
    Ok(cur)
}

/// Membership in the highest-weight crystal by `e_i` descent.
pub fn is_vertex(mp: &Multipartition, ord: &NodeOrder) -> bool {
    highest_weight_path(mp, ord).is_ok()
}
