//! The inverse semigroup `S` of a labelled space: triples `(α, A, β)` and zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::LabelledSpace;
use crate::graph::VertexSet;
use crate::word::Word;

/// A nonzero element `(α, A, β)` with `∅ ≠ A ∈ B_α ∩ B_β`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    left: Word,
    set: VertexSet,
    right: Word,
}

impl Triple {
    pub fn new(space: &LabelledSpace, left: Word, set: VertexSet, right: Word) -> Result<Self> {
        let g = space.graph();
        if set.is_empty() {
            return Err(Error::input("the set of a semigroup triple must be nonempty"));
        }
        if !space.family().contains(set) {
            return Err(Error::input(format!(
                "{} is not a member of the accommodating family",
                g.render_set(set)
            )));
        }
        for w in [&left, &right] {
            if !set.is_subset(space.range(w)) {
                return Err(Error::input(format!(
                    "{} is not contained in r({})",
                    g.render_set(set),
                    g.render_word(w)
                )));
            }
        }
        Ok(Triple { left, set, right })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn raw(left: Word, set: VertexSet, right: Word) -> Self {
        Triple { left, set, right }
    }

    pub fn left(&self) -> &Word {
        &self.left
    }

    pub fn set(&self) -> VertexSet {
        self.set
    }

    pub fn right(&self) -> &Word {
        &self.right
    }

    /// `|α| − |β|`.
    pub fn degree(&self) -> i64 {
        self.left.len() as i64 - self.right.len() as i64
    }

    pub fn star(&self) -> Triple {
        Triple::raw(self.right.clone(), self.set, self.left.clone())
    }

    pub fn is_idempotent(&self) -> bool {
        self.left == self.right
    }

    /// `s*s = (β, A, β)`.
    pub fn source_idempotent(&self) -> Triple {
        Triple::raw(self.right.clone(), self.set, self.right.clone())
    }

    /// `ss* = (α, A, α)`.
    pub fn range_idempotent(&self) -> Triple {
        Triple::raw(self.left.clone(), self.set, self.left.clone())
    }

    pub fn render(&self, space: &LabelledSpace) -> String {
        let g = space.graph();
        format!(
            "({},{},{})",
            g.render_word(&self.left),
            g.render_set(self.set),
            g.render_word(&self.right)
        )
    }

    /// Parses `(word,{v1,v2},word)`, with `e` for the empty word.
    pub fn parse(space: &LabelledSpace, text: &str) -> Result<Self> {
        let g = space.graph();
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::input(format!("expected `(word,{{...}},word)`, got `{text}`")))?;
        let open = inner.find('{');
        let close = inner.rfind('}');
        let (open, close) = match (open, close) {
            (Some(o), Some(c)) if o < c => (o, c),
            _ => return Err(Error::input(format!("missing vertex set in `{text}`"))),
        };
        let left = inner[..open]
            .trim()
            .strip_suffix(',')
            .ok_or_else(|| Error::input(format!("missing comma before vertex set in `{text}`")))?;
        let right = inner[close + 1..]
            .trim()
            .strip_prefix(',')
            .ok_or_else(|| Error::input(format!("missing comma after vertex set in `{text}`")))?;
        let set = g.parse_vertex_set(&inner[open..=close])?;
        Triple::new(space, g.parse_word(left.trim())?, set, g.parse_word(right.trim())?)
    }
}

/// An element of `S`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemigroupElement {
    Zero,
    Triple(Triple),
}

impl From<Triple> for SemigroupElement {
    fn from(t: Triple) -> Self {
        SemigroupElement::Triple(t)
    }
}

impl SemigroupElement {
    pub fn triple(space: &LabelledSpace, left: Word, set: VertexSet, right: Word) -> Result<Self> {
        Triple::new(space, left, set, right).map(SemigroupElement::Triple)
    }

    pub fn as_triple(&self) -> Option<&Triple> {
        match self {
            SemigroupElement::Zero => None,
            SemigroupElement::Triple(t) => Some(t),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SemigroupElement::Zero)
    }

    pub fn star(&self) -> Self {
        match self {
            SemigroupElement::Zero => SemigroupElement::Zero,
            SemigroupElement::Triple(t) => SemigroupElement::Triple(t.star()),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.as_triple().is_none_or(Triple::is_idempotent)
    }

    pub fn render(&self, space: &LabelledSpace) -> String {
        match self {
            SemigroupElement::Zero => "0".to_string(),
            SemigroupElement::Triple(t) => t.render(space),
        }
    }

    /// `0` or a triple.
    pub fn parse(space: &LabelledSpace, text: &str) -> Result<Self> {
        if text.trim() == "0" {
            Ok(SemigroupElement::Zero)
        } else {
            Triple::parse(space, text).map(SemigroupElement::Triple)
        }
    }
}

/// Product of two triples:
/// `(α,A,β)(γ,B,δ)` is `(αγ′, r(A,γ′)∩B, δ)` if `γ = βγ′`,
/// `(α, A∩r(B,β′), δβ′)` if `β = γβ′`, and `0` otherwise or when the set is empty.
pub fn multiply_triples(space: &LabelledSpace, s: &Triple, t: &Triple) -> SemigroupElement {
    let (alpha, a, beta) = (&s.left, s.set, &s.right);
    let (gamma, b, delta) = (&t.left, t.set, &t.right);
    let (left, set, right) = if let Some(gp) = gamma.strip_prefix(beta) {
        (alpha.concat(&gp), space.relative_range(a, &gp).intersection(b), delta.clone())
    } else if let Some(bp) = beta.strip_prefix(gamma) {
        (alpha.clone(), a.intersection(space.relative_range(b, &bp)), delta.concat(&bp))
    } else {
        return SemigroupElement::Zero;
    };
    if set.is_empty() {
        SemigroupElement::Zero
    } else {
        SemigroupElement::Triple(Triple::raw(left, set, right))
    }
}

pub fn multiply(space: &LabelledSpace, s: &SemigroupElement, t: &SemigroupElement) -> SemigroupElement {
    match (s, t) {
        (SemigroupElement::Triple(s), SemigroupElement::Triple(t)) => multiply_triples(space, s, t),
        _ => SemigroupElement::Zero,
    }
}

/// The natural order on idempotents: `(α,A,α) ≤ (β,B,β)` iff `α = βα′` and `A ⊆ r(B, α′)`.
pub fn natural_leq(p: &SemigroupElement, q: &SemigroupElement, space: &LabelledSpace) -> Result<bool> {
    if !p.is_idempotent() || !q.is_idempotent() {
        return Err(Error::input("natural order is only defined here for idempotents"));
    }
    Ok(match (p, q) {
        (SemigroupElement::Zero, _) => true,
        (_, SemigroupElement::Zero) => false,
        (SemigroupElement::Triple(p), SemigroupElement::Triple(q)) => match p.left.strip_prefix(&q.left) {
            Some(rest) => p.set.is_subset(space.relative_range(q.set, &rest)),
            None => false,
        },
    })
}

/// Every valid triple with `|α|, |β| ≤ n`, sorted.
pub fn enumerate_triples(space: &LabelledSpace, n: usize) -> Vec<Triple> {
    let words = space.graph().labelled_paths_up_to(n);
    let mut out = Vec::new();
    for alpha in &words {
        for beta in &words {
            let bound = space.range(alpha).intersection(space.range(beta));
            for set in space.family().within(bound).filter(|s| !s.is_empty()) {
                out.push(Triple::raw(alpha.clone(), set, beta.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Idempotent triples `(α, A, α)` with `|α| ≤ n`, sorted.
pub fn enumerate_idempotents(space: &LabelledSpace, n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for alpha in space.graph().labelled_paths_up_to(n) {
        for set in space.family().within(space.range(&alpha)).filter(|s| !s.is_empty()) {
            out.push(Triple::raw(alpha.clone(), set, alpha.clone()));
        }
    }
    out.sort();
    out
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{},{:?})", self.left.letters(), self.set, self.right.letters())
    }
}
