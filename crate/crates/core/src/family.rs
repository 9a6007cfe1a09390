//! Accommodating families of vertex sets, their restrictions `B_α`, and atoms.
//!
//! Every restriction `B_α` is a finite Boolean algebra (for `α = ε`, a
//! generalized one). Ultrafilters of a finite Boolean algebra are exactly the
//! principal filters of its atoms, so atoms stand in for ultrafilters
//! throughout the crate.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{LabelledGraph, VertexSet};
use crate::word::Word;

/// Power-set families are only built for graphs with at most this many vertices.
pub const MAX_POWER_SET_VERTICES: usize = 16;

/// A family of vertex sets closed under finite intersections, unions,
/// relative complements and relative ranges, containing every `r(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccommodatingFamily {
    sets: Vec<VertexSet>,
    members: HashSet<VertexSet>,
}

/// Which family to attach to a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FamilyChoice {
    /// Least normal accommodating family.
    #[default]
    Minimal,
    /// All subsets of the vertex set.
    PowerSet,
}

impl AccommodatingFamily {
    /// The least family containing `∅` and every `r(a)`, closed under `∩`, `∪`,
    /// `\` and `A ↦ r(A, a)`.
    pub fn minimal(g: &LabelledGraph) -> Self {
        let seeds = g.alphabet().map(|a| g.relative_range_letter(g.all_vertices(), a));
        close(g, seeds)
    }

    pub fn power_set(g: &LabelledGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_POWER_SET_VERTICES {
            return Err(Error::input(format!(
                "power-set family requested for {n} vertices (limit {MAX_POWER_SET_VERTICES})"
            )));
        }
        let sets: Vec<VertexSet> = (0..1u64 << n).map(VertexSet::from_mask).collect();
        Ok(Self::from_closed(sets))
    }

    /// Accepts a user-supplied family after checking every closure condition.
    /// `∅` is added if missing.
    pub fn from_sets(g: &LabelledGraph, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut members: BTreeSet<VertexSet> = sets.into_iter().collect();
        members.insert(VertexSet::EMPTY);
        let all = g.all_vertices();
        for &s in &members {
            if !s.is_subset(all) {
                return Err(Error::Family(format!("set {} mentions unknown vertices", g.render_set(s))));
            }
        }
        for a in g.alphabet() {
            let ra = g.relative_range_letter(all, a);
            if !members.contains(&ra) {
                return Err(Error::Family(format!(
                    "family must contain r({}) = {}",
                    g.letter_name(a),
                    g.render_set(ra)
                )));
            }
        }
        for &x in &members {
            for a in g.alphabet() {
                let r = g.relative_range_letter(x, a);
                if !members.contains(&r) {
                    return Err(Error::Family(format!(
                        "family not closed under relative ranges: r({}, {}) = {} is missing",
                        g.render_set(x),
                        g.letter_name(a),
                        g.render_set(r)
                    )));
                }
            }
            for &y in &members {
                for (op, z) in [
                    ("∩", x.intersection(y)),
                    ("∪", x.union(y)),
                    ("\\", x.difference(y)),
                ] {
                    if !members.contains(&z) {
                        return Err(Error::Family(format!(
                            "family not closed: {} {op} {} = {} is missing",
                            g.render_set(x),
                            g.render_set(y),
                            g.render_set(z)
                        )));
                    }
                }
            }
        }
        Ok(Self::from_closed(members))
    }

    fn from_closed(sets: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        sets.sort();
        let members = sets.iter().copied().collect();
        AccommodatingFamily { sets, members }
    }

    /// Members in ascending order (`∅` first).
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.members.contains(&set)
    }

    /// Members contained in `bound`.
    pub fn within(&self, bound: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied().filter(move |s| s.is_subset(bound))
    }

    /// The first triple `(A, B, a)` with `r(A∩B, a) ≠ r(A, a) ∩ r(B, a)`, if any.
    ///
    /// Single letters suffice: the family is closed under relative ranges and
    /// `r(·, αa) = r(r(·, α), a)`.
    pub fn weakly_left_resolving_violation(
        &self,
        g: &LabelledGraph,
    ) -> Option<(VertexSet, VertexSet, crate::word::Letter)> {
        for (i, &x) in self.sets.iter().enumerate() {
            for &y in &self.sets[i + 1..] {
                for a in g.alphabet() {
                    let lhs = g.relative_range_letter(x.intersection(y), a);
                    let rhs = g
                        .relative_range_letter(x, a)
                        .intersection(g.relative_range_letter(y, a));
                    if lhs != rhs {
                        return Some((x, y, a));
                    }
                }
            }
        }
        None
    }

    pub fn is_weakly_left_resolving(&self, g: &LabelledGraph) -> bool {
        self.weakly_left_resolving_violation(g).is_none()
    }
}

fn close(g: &LabelledGraph, seeds: impl IntoIterator<Item = VertexSet>) -> AccommodatingFamily {
    let mut members: HashSet<VertexSet> = HashSet::new();
    let mut order: Vec<VertexSet> = Vec::new();
    let mut queue: Vec<VertexSet> = Vec::new();
    let push = |s: VertexSet, members: &mut HashSet<VertexSet>, order: &mut Vec<VertexSet>, queue: &mut Vec<VertexSet>| {
        if members.insert(s) {
            order.push(s);
            queue.push(s);
        }
    };
    push(VertexSet::EMPTY, &mut members, &mut order, &mut queue);
    for s in seeds {
        push(s, &mut members, &mut order, &mut queue);
    }
    while let Some(x) = queue.pop() {
        let mut fresh = Vec::new();
        for a in g.alphabet() {
            fresh.push(g.relative_range_letter(x, a));
        }
        for &y in &order {
            fresh.push(x.intersection(y));
            fresh.push(x.union(y));
            fresh.push(x.difference(y));
            fresh.push(y.difference(x));
        }
        for s in fresh {
            push(s, &mut members, &mut order, &mut queue);
        }
    }
    AccommodatingFamily::from_closed(order)
}

/// `B_α = B ∩ P(r(α))` for a fixed context word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedAlgebra {
    pub context: Word,
    /// `r(α)`, or `E^0` for `α = ε`.
    pub range: VertexSet,
    pub carrier: Vec<VertexSet>,
}

impl RestrictedAlgebra {
    /// `r(α) = ∅`: the carrier is `{∅}`.
    pub fn is_degenerate(&self) -> bool {
        self.range.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.carrier.binary_search(&set).is_ok()
    }

    /// Minimal nonempty members of the carrier contained in `set`.
    ///
    /// These are pairwise disjoint with union `set`; the ultrafilters of the
    /// carrier are the principal filters they generate.
    pub fn atoms_below(&self, set: VertexSet) -> Result<Vec<VertexSet>> {
        if !self.contains(set) {
            return Err(Error::input(format!(
                "set {set} is not in the restricted algebra"
            )));
        }
        let below: Vec<VertexSet> = self
            .carrier
            .iter()
            .copied()
            .filter(|c| !c.is_empty() && c.is_subset(set))
            .collect();
        Ok(below
            .iter()
            .copied()
            .filter(|&c| !below.iter().any(|&d| d != c && d.is_subset(c)))
            .collect())
    }
}

/// A weakly left-resolving normal labelled space: a graph with its family.
#[derive(Debug, Clone)]
pub struct LabelledSpace {
    graph: LabelledGraph,
    family: AccommodatingFamily,
    /// Atoms of the whole family `B`, in ascending order.
    atoms: Vec<VertexSet>,
}

impl LabelledSpace {
    /// Pairs a graph with a family; fails if the result is not weakly left-resolving.
    pub fn new(graph: LabelledGraph, family: AccommodatingFamily) -> Result<Self> {
        if let Some((x, y, a)) = family.weakly_left_resolving_violation(&graph) {
            return Err(Error::NotWeaklyLeftResolving(format!(
                "r({} ∩ {}, {}) ≠ r({}, {}) ∩ r({}, {})",
                graph.render_set(x),
                graph.render_set(y),
                graph.letter_name(a),
                graph.render_set(x),
                graph.letter_name(a),
                graph.render_set(y),
                graph.letter_name(a)
            )));
        }
        let atoms = global_atoms(&graph, &family);
        Ok(LabelledSpace { graph, family, atoms })
    }

    pub fn with_choice(graph: LabelledGraph, choice: FamilyChoice) -> Result<Self> {
        let family = match choice {
            FamilyChoice::Minimal => AccommodatingFamily::minimal(&graph),
            FamilyChoice::PowerSet => AccommodatingFamily::power_set(&graph)?,
        };
        Self::new(graph, family)
    }

    pub fn minimal(graph: LabelledGraph) -> Result<Self> {
        Self::with_choice(graph, FamilyChoice::Minimal)
    }

    pub fn graph(&self) -> &LabelledGraph {
        &self.graph
    }

    pub fn family(&self) -> &AccommodatingFamily {
        &self.family
    }

    /// `r(α)`, with `r(ε) = E^0`.
    pub fn range(&self, word: &Word) -> VertexSet {
        self.graph.range(word)
    }

    pub fn relative_range(&self, set: VertexSet, word: &Word) -> VertexSet {
        self.graph.relative_range(set, word)
    }

    /// `A ∈ B_α`.
    pub fn in_restriction(&self, set: VertexSet, word: &Word) -> bool {
        self.family.contains(set) && set.is_subset(self.range(word))
    }

    pub fn restrict(&self, word: &Word) -> RestrictedAlgebra {
        let range = self.range(word);
        RestrictedAlgebra {
            context: word.clone(),
            range,
            carrier: self.family.within(range).collect(),
        }
    }

    /// Atoms of `B ∩ P(bound)` for `bound ∈ B ∪ {E^0}`.
    ///
    /// An atom of the whole family lying inside a member stays an atom there,
    /// and every atom of the smaller algebra arises this way.
    pub fn atoms_within(&self, bound: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.atoms.iter().copied().filter(move |a| a.is_subset(bound))
    }

    /// Atoms of `B_α`.
    pub fn atoms_of(&self, word: &Word) -> Vec<VertexSet> {
        self.atoms_within(self.range(word)).collect()
    }

    pub fn is_atom_of(&self, set: VertexSet, word: &Word) -> bool {
        self.atoms.binary_search(&set).is_ok() && set.is_subset(self.range(word))
    }

    /// Atoms of the whole family, ascending.
    pub fn atoms(&self) -> &[VertexSet] {
        &self.atoms
    }

    /// `∩{A ∈ B ∩ P(bound) | r(A, tail) ⊇ target}`, or `None` when no member
    /// qualifies. The intersection qualifies itself because relative ranges
    /// distribute over intersections.
    pub fn pullback_within(&self, bound: VertexSet, tail: &Word, target: VertexSet) -> Option<VertexSet> {
        self.family
            .within(bound)
            .filter(|&a| target.is_subset(self.graph.relative_range(a, tail)))
            .reduce(VertexSet::intersection)
    }

    /// [`pullback_within`](Self::pullback_within) over `B_context`.
    pub fn pullback(&self, context: &Word, tail: &Word, target: VertexSet) -> Option<VertexSet> {
        self.pullback_within(self.range(context), tail, target)
    }
}

/// For each covered vertex, the intersection of all members containing it.
fn global_atoms(g: &LabelledGraph, family: &AccommodatingFamily) -> Vec<VertexSet> {
    let mut atoms = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let smallest = family
            .sets()
            .iter()
            .filter(|s| s.contains(v))
            .fold(None, |acc: Option<VertexSet>, &s| Some(acc.map_or(s, |m| m.intersection(s))));
        if let Some(m) = smallest {
            atoms.insert(m);
        }
    }
    atoms.into_iter().collect()
}
