//! Partitions, multipartitions, nodes, contents and residues.
//!
//! A node is a triple `(row, col, comp)` with 1-based row and column and a
//! 0-based component index. Its content under a multicharge `s` is
//! `col - row + s[comp]`; its residue is the content reduced modulo `e`, or
//! the content itself when `e` is infinite.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The quantum characteristic `e`: either a finite integer `>= 2` or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Finite(i64),
    Infinite,
}

impl Modulus {
    pub fn finite(e: i64) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidModulus(e));
        }
        Ok(Modulus::Finite(e))
    }

    /// Returns `e` when finite.
    pub fn value(self) -> Option<i64> {
        match self {
            Modulus::Finite(e) => Some(e),
            Modulus::Infinite => None,
        }
    }

    pub fn require_finite(self) -> Result<i64> {
        self.value().ok_or(Error::InfiniteModulus)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Modulus::Infinite)
    }

    /// Reduces an integer to its residue class representative.
    pub fn reduce(self, x: i64) -> i64 {
        match self {
            Modulus::Finite(e) => x.rem_euclid(e),
            Modulus::Infinite => x,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(e) => write!(f, "{e}"),
            Modulus::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Modulus::Infinite);
        }
        let e: i64 = t
            .parse()
            .map_err(|_| Error::MalformedInput(format!("invalid modulus {s:?}")))?;
        Modulus::finite(e)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ModulusRepr {
    Int(i64),
    Text(String),
}

impl Serialize for Modulus {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Modulus::Finite(e) => ModulusRepr::Int(*e),
            Modulus::Infinite => ModulusRepr::Text("inf".to_string()),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match ModulusRepr::deserialize(de)? {
            ModulusRepr::Int(e) => Modulus::finite(e).map_err(D::Error::custom),
            ModulusRepr::Text(t) if t == "inf" => Ok(Modulus::Infinite),
            ModulusRepr::Text(t) => Err(D::Error::custom(format!("invalid modulus {t:?}"))),
        }
    }
}

/// An integer multicharge `s = (s_0, ..., s_{l-1})` together with `e`.
///
/// The same type carries a residue class: [`Multicharge::residue_class`]
/// reduces every entry into `0..e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicharge {
    pub charges: Vec<i64>,
    pub e: Modulus,
}

impl Multicharge {
    pub fn new(charges: Vec<i64>, e: Modulus) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::MalformedInput("multicharge must have level >= 1".into()));
        }
        Ok(Multicharge { charges, e })
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    pub fn get(&self, c: usize) -> i64 {
        self.charges[c]
    }

    /// Every entry reduced into `0..e` (no-op when `e` is infinite).
    pub fn residue_class(&self) -> Multicharge {
        Multicharge {
            charges: self.charges.iter().map(|&x| self.e.reduce(x)).collect(),
            e: self.e,
        }
    }

    /// `(-s_0, ..., -s_{l-1})` reduced.
    pub fn negated_class(&self) -> Multicharge {
        Multicharge {
            charges: self.charges.iter().map(|&x| self.e.reduce(-x)).collect(),
            e: self.e,
        }
    }

    /// `(-s_{l-1}, ..., -s_0)` reduced: the class the Mullineux map lands in.
    pub fn twisted_class(&self) -> Multicharge {
        Multicharge {
            charges: self.charges.iter().rev().map(|&x| self.e.reduce(-x)).collect(),
            e: self.e,
        }
    }

    /// `(-s_{l-1}, ..., -s_0)` without reduction.
    pub fn twisted(&self) -> Multicharge {
        Multicharge {
            charges: self.charges.iter().rev().map(|&x| -x).collect(),
            e: self.e,
        }
    }

    pub fn same_class(&self, other: &Multicharge) -> bool {
        self.e == other.e && self.residue_class() == other.residue_class()
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.charges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ") mod {}", self.e)
    }
}

/// A weakly decreasing finite sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedInput(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::MalformedInput(format!("zero part inside {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `a` (1-based), zero beyond the length.
    pub fn part(&self, a: usize) -> usize {
        if a == 0 {
            return usize::MAX;
        }
        self.parts.get(a - 1).copied().unwrap_or(0)
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// True iff no positive part value occurs `e` or more times.
    pub fn is_e_regular(&self, e: Modulus) -> bool {
        let Some(e) = e.value() else {
            return true;
        };
        let e = e as usize;
        let mut run = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            if k > 0 && self.parts[k - 1] == p {
                run += 1;
            } else {
                run = 1;
            }
            if run >= e {
                return false;
            }
        }
        true
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition { parts }
    }

    /// Adds one to row `row` (1-based). The caller guarantees addability.
    pub(crate) fn with_cell_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            debug_assert_eq!(row, parts.len() + 1);
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition { parts }
    }

    /// Removes one from row `row`. The caller guarantees removability.
    pub(crate) fn with_cell_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// An ordered `l`-tuple of partitions, `l >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::MalformedInput("multipartition must have level >= 1".into()));
        }
        Ok(Multipartition { components })
    }

    pub fn empty(level: usize) -> Self {
        assert!(level >= 1, "level must be positive");
        Multipartition {
            components: vec![Partition::empty(); level],
        }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(parts: &[&[usize]]) -> Result<Self> {
        let comps = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c]
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp < self.level() && self.components[node.comp].contains_cell(node.row, node.col)
    }

    pub(crate) fn with_node_added(&self, node: Node) -> Multipartition {
        let mut components = self.components.clone();
        components[node.comp] = components[node.comp].with_cell_added(node.row);
        Multipartition { components }
    }

    pub(crate) fn with_node_removed(&self, node: Node) -> Multipartition {
        let mut components = self.components.clone();
        components[node.comp] = components[node.comp].with_cell_removed(node.row);
        Multipartition { components }
    }

    pub(crate) fn replace(&mut self, c: usize, p: Partition) {
        self.components[c] = p;
    }

    /// Every multipartition of level `l` and rank `n`.
    pub fn all_of_size(n: usize, l: usize) -> Vec<Multipartition> {
        fn rec(n: usize, left: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            if left == 1 {
                for p in Partition::all_of_size(n) {
                    cur.push(p);
                    out.push(Multipartition {
                        components: cur.clone(),
                    });
                    cur.pop();
                }
                return;
            }
            for k in 0..=n {
                for p in Partition::all_of_size(k) {
                    cur.push(p);
                    rec(n - k, left - 1, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, l, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<Partition>> for Multipartition {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        Multipartition::new(v)
    }
}

impl From<Multipartition> for Vec<Partition> {
    fn from(m: Multipartition) -> Self {
        m.components
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A cell `(row, col)` of component `comp`; rows and columns start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    pub fn content(self, s: &Multicharge) -> i64 {
        self.col as i64 - self.row as i64 + s.get(self.comp)
    }

    pub fn residue(self, s: &Multicharge) -> i64 {
        s.e.reduce(self.content(s))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

pub fn content(node: Node, s: &Multicharge) -> i64 {
    node.content(s)
}

pub fn residue(node: Node, s: &Multicharge) -> i64 {
    node.residue(s)
}

/// Addable and removable nodes of every component, each list sorted by
/// `(comp, row)`.
pub fn all_boundary_nodes(mp: &Multipartition) -> (Vec<Node>, Vec<Node>) {
    let mut addable = Vec::new();
    let mut removable = Vec::new();
    for (c, p) in mp.components().iter().enumerate() {
        let len = p.len();
        for row in 1..=len + 1 {
            let col = p.part(row) + 1;
            if row == 1 || p.part(row - 1) >= col {
                addable.push(Node::new(row, col, c));
            }
            if row <= len && p.part(row + 1) < p.part(row) {
                removable.push(Node::new(row, p.part(row), c));
            }
        }
    }
    addable.sort_by_key(|n| (n.comp, n.row));
    removable.sort_by_key(|n| (n.comp, n.row));
    (addable, removable)
}

/// Addable and removable `i`-nodes of `mp`, each sorted by `(comp, row)`.
pub fn boundary_nodes(mp: &Multipartition, s: &Multicharge, i: i64) -> (Vec<Node>, Vec<Node>) {
    let i = s.e.reduce(i);
    let (mut a, mut r) = all_boundary_nodes(mp);
    a.retain(|n| n.residue(s) == i);
    r.retain(|n| n.residue(s) == i);
    (a, r)
}

pub fn is_e_regular(p: &Partition, e: Modulus) -> bool {
    p.is_e_regular(e)
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub(crate) fn check_level(mp: &Multipartition, s: &Multicharge) -> Result<()> {
    if mp.level() != s.level() {
        return Err(Error::LevelMismatch {
            expected: s.level(),
            found: mp.level(),
        });
    }
    Ok(())
}
