//! Finite labelled graphs and the relative-range calculus.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Maximum number of vertices; vertex sets are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Characters with a fixed meaning in the text notation; letters may not use them.
const RESERVED: &[char] = &['e', '(', ')', '{', '}', '[', ']', ',', '*', '^', '∞', ';', '<', '>', '|'];

/// A set of vertices as a bit mask over vertex ids.
///
/// The order is lexicographic on the sorted list of member ids, so `∅` is the
/// smallest set and `{0} < {0,1} < {1}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_ids(ids: impl IntoIterator<Item = usize>) -> Self {
        VertexSet(ids.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    /// Relative complement `self \ other`.
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn ids(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..64).filter(move |v| mask >> v & 1 == 1)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ids().cmp(other.ids())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.ids().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: Letter,
}

/// A finite directed graph with a surjective edge labelling.
///
/// Vertices are interned in declaration order; letters in sorted name order.
#[derive(Debug, Clone)]
pub struct LabelledGraph {
    vertex_names: Vec<String>,
    letter_names: Vec<char>,
    edges: Vec<Edge>,
    /// `successors[a][v]` = targets of `a`-labelled edges leaving `v`.
    successors: Vec<Vec<VertexSet>>,
    sinks: VertexSet,
}

impl LabelledGraph {
    /// Builds a graph from vertex names and `(source, target, label)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        if vertices.len() > MAX_VERTICES {
            return Err(Error::input(format!(
                "{} vertices given, at most {MAX_VERTICES} are supported",
                vertices.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, name) in vertices.iter().enumerate() {
            let name = name.as_ref();
            validate_vertex_name(name)?;
            if index.insert(name.to_string(), i).is_some() {
                return Err(Error::input(format!("duplicate vertex `{name}`")));
            }
        }

        let mut labels = BTreeSet::new();
        for (k, (_, _, label)) in edges.iter().enumerate() {
            labels.insert(parse_letter_name(label.as_ref(), k)?);
        }
        if labels.len() > 256 {
            return Err(Error::input("at most 256 letters are supported"));
        }
        let letter_names: Vec<char> = labels.into_iter().collect();

        let lookup = |name: &str, k: usize, end: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::input(format!("unknown vertex `{name}` as {end} of edge #{k}")))
        };
        let mut parsed = Vec::with_capacity(edges.len());
        for (k, (src, dst, label)) in edges.iter().enumerate() {
            let source = lookup(src.as_ref(), k, "source")?;
            let target = lookup(dst.as_ref(), k, "target")?;
            let c = parse_letter_name(label.as_ref(), k)?;
            let id = letter_names.binary_search(&c).expect("label interned above");
            parsed.push(Edge {
                source,
                target,
                label: Letter(id as u8),
            });
        }

        Ok(Self::from_parts(
            vertices.iter().map(|s| s.as_ref().to_string()).collect(),
            letter_names,
            parsed,
        ))
    }

    fn from_parts(vertex_names: Vec<String>, letter_names: Vec<char>, edges: Vec<Edge>) -> Self {
        let n = vertex_names.len();
        let mut successors = vec![vec![VertexSet::EMPTY; n]; letter_names.len()];
        let mut has_out = VertexSet::EMPTY;
        for e in &edges {
            let s = &mut successors[e.label.index()][e.source];
            *s = s.union(VertexSet::singleton(e.target));
            has_out = has_out.union(VertexSet::singleton(e.source));
        }
        LabelledGraph {
            sinks: VertexSet::full(n).difference(has_out),
            vertex_names,
            letter_names,
            edges,
            successors,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn alphabet(&self) -> impl Iterator<Item = Letter> {
        (0..self.letter_names.len()).map(|i| Letter(i as u8))
    }

    pub fn letter_count(&self) -> usize {
        self.letter_names.len()
    }

    pub fn letter_name(&self, a: Letter) -> char {
        self.letter_names[a.index()]
    }

    pub fn letter(&self, name: char) -> Option<Letter> {
        self.letter_names.iter().position(|&c| c == name).map(|i| Letter(i as u8))
    }

    /// `E^0` as a vertex set.
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn sinks(&self) -> VertexSet {
        self.sinks
    }

    /// `r(A, a)`: targets of `a`-labelled edges with source in `A`.
    pub fn relative_range_letter(&self, set: VertexSet, a: Letter) -> VertexSet {
        let Some(succ) = self.successors.get(a.index()) else {
            return VertexSet::EMPTY;
        };
        set.ids()
            .take_while(|&v| v < succ.len())
            .fold(VertexSet::EMPTY, |acc, v| acc.union(succ[v]))
    }

    /// `r(A, α)`; `r(A, ε) = A`.
    pub fn relative_range(&self, set: VertexSet, word: &Word) -> VertexSet {
        word.iter().fold(set, |acc, a| {
            if acc.is_empty() {
                acc
            } else {
                self.relative_range_letter(acc, a)
            }
        })
    }

    /// `r(α) = r(E^0, α)`.
    pub fn range(&self, word: &Word) -> VertexSet {
        self.relative_range(self.all_vertices(), word)
    }

    /// `L(A E^1)`: letters labelling some edge with source in `A`.
    pub fn letters_from(&self, set: VertexSet) -> BTreeSet<Letter> {
        self.alphabet()
            .filter(|&a| !self.relative_range_letter(set, a).is_empty())
            .collect()
    }

    /// Whether `α` labels some path (ε always does).
    pub fn is_labelled_path(&self, word: &Word) -> bool {
        word.is_empty() || !self.range(word).is_empty()
    }

    /// All labelled paths of length at most `n`, including ε, in lexicographic order.
    pub fn labelled_paths_up_to(&self, n: usize) -> Vec<Word> {
        let mut out = BTreeSet::new();
        let mut frontier = vec![(Word::empty(), self.all_vertices())];
        out.insert(Word::empty());
        for _ in 0..n {
            let mut next = Vec::new();
            for (w, r) in &frontier {
                for a in self.alphabet() {
                    let r2 = self.relative_range_letter(*r, a);
                    if !r2.is_empty() {
                        let w2 = w.pushed(a);
                        out.insert(w2.clone());
                        next.push((w2, r2));
                    }
                }
            }
            frontier = next;
        }
        out.into_iter().collect()
    }

    /// Parses a word written as a string of letter names; `e` (or the empty
    /// string) is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "e" || text == "ε" {
            return Ok(Word::empty());
        }
        text.chars()
            .map(|c| self.letter(c).ok_or_else(|| Error::input(format!("unknown letter `{c}`"))))
            .collect()
    }

    pub fn render_word(&self, word: &Word) -> String {
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|a| self.letter_name(a)).collect()
        }
    }

    /// Parses `{v1,v2,...}` using vertex names.
    pub fn parse_vertex_set(&self, text: &str) -> Result<VertexSet> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::input(format!("expected a vertex set in braces, got `{text}`")))?;
        let mut set = VertexSet::EMPTY;
        for name in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let v = self
                .vertex_id(name)
                .ok_or_else(|| Error::input(format!("unknown vertex `{name}`")))?;
            set = set.union(VertexSet::singleton(v));
        }
        Ok(set)
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().try_fold(VertexSet::EMPTY, |acc, n| {
            let n = n.as_ref();
            self.vertex_id(n)
                .map(|v| acc.union(VertexSet::singleton(v)))
                .ok_or_else(|| Error::input(format!("unknown vertex `{n}`")))
        })
    }

    pub fn render_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.ids().map(|v| self.vertex_names[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Left-resolving: the labelling is injective on the edges entering each vertex.
    pub fn is_left_resolving(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert((e.target, e.label)))
    }

    pub fn validate(&self) -> GraphReport {
        GraphReport {
            vertices: self.vertex_count(),
            edges: self.edges.len(),
            alphabet: self.letter_names.clone(),
            sinks: self.sinks,
            left_resolving: self.is_left_resolving(),
            labelling_surjective: self
                .alphabet()
                .all(|a| self.edges.iter().any(|e| e.label == a)),
        }
    }
}

/// Structural facts about a labelled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphReport {
    pub vertices: usize,
    pub edges: usize,
    pub alphabet: Vec<char>,
    pub sinks: VertexSet,
    pub left_resolving: bool,
    pub labelling_surjective: bool,
}

fn validate_vertex_name(name: &str) -> Result<()> {
    if name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || "{}()[],;<>|".contains(c))
    {
        return Err(Error::input(format!(
            "invalid vertex name `{name}`: names must be non-empty without whitespace or brackets"
        )));
    }
    Ok(())
}

fn parse_letter_name(label: &str, edge: usize) -> Result<char> {
    let mut chars = label.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if !c.is_whitespace() && !RESERVED.contains(&c) => Ok(c),
        _ => Err(Error::input(format!(
            "invalid label `{label}` on edge #{edge}: labels are single characters other than whitespace and {}",
            RESERVED.iter().collect::<String>()
        ))),
    }
}

/// The three reference graphs used throughout the tests and examples.
pub mod fixtures {
    use super::LabelledGraph;

    /// One vertex with an `a`-labelled loop.
    pub fn g1() -> LabelledGraph {
        LabelledGraph::new(&["v"], &[("v", "v", "a")]).expect("valid fixture")
    }

    /// `v --a--> w`, with `w` a sink.
    pub fn g2() -> LabelledGraph {
        LabelledGraph::new(&["v", "w"], &[("v", "w", "a")]).expect("valid fixture")
    }

    /// `1 --a--> 2`, `1 --a--> 3`, `2 --b--> 3`; vertex 3 is a sink.
    pub fn g3() -> LabelledGraph {
        LabelledGraph::new(
            &["1", "2", "3"],
            &[("1", "2", "a"), ("1", "3", "a"), ("2", "3", "b")],
        )
        .expect("valid fixture")
    }
}
