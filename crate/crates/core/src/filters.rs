//! Complete families, tight filters and their enumeration.
//!
//! A filter in `E(S)` is a word together with a complete family `{F_n}`.
//! Every filter of a finite Boolean algebra is principal, so each `F_n` is
//! stored as its minimum; `None` stands for the empty `F_0` allowed at level 0.
//! Tight filters have ultrafilter levels, i.e. atom minima, and are determined
//! by their top atom (finite type) or by the atoms at levels `n ≥ 1`
//! (infinite type).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::LabelledSpace;
use crate::graph::VertexSet;
use crate::semigroup::Triple;
use crate::word::{Lasso, Letter, Word};

/// Minimum of a level filter; `None` is the empty filter.
pub type Level = Option<VertexSet>;

/// A word with the minima `X_0, …, X_{|word|}` of a complete family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteFamily {
    pub word: Word,
    pub minima: Vec<Level>,
}

impl CompleteFamily {
    /// `X_n = ∩{A ∈ B_{α_{1,n}} | r(A, α_{n+1}) ⊇ X_{n+1}}` and
    /// `r(X_n, α_{n+1}) ⊇ X_{n+1}` for every `n < |α|`.
    pub fn is_complete(&self, space: &LabelledSpace) -> bool {
        let w = &self.word;
        if self.minima.len() != w.len() + 1 {
            return false;
        }
        (0..w.len()).all(|n| {
            let tail = w.subword(n + 1, n + 1);
            match self.minima[n + 1] {
                None => self.minima[n].is_none(),
                Some(next) => {
                    let expected = space.pullback(&w.prefix(n), &tail, next);
                    expected == self.minima[n]
                        && expected.is_none_or(|x| next.is_subset(space.relative_range(x, &tail)))
                }
            }
        })
    }
}

/// The complete family generated downward from `X_{|word|} = top`.
pub fn complete_from_atom(space: &LabelledSpace, word: &Word, top: VertexSet) -> Result<CompleteFamily> {
    if top.is_empty() || !space.in_restriction(top, word) {
        return Err(Error::input(format!(
            "{} is not a nonempty member of B_{}",
            space.graph().render_set(top),
            space.graph().render_word(word)
        )));
    }
    let mut minima = vec![None; word.len() + 1];
    minima[word.len()] = Some(top);
    for n in (0..word.len()).rev() {
        minima[n] = minima[n + 1]
            .and_then(|next| space.pullback(&word.prefix(n), &word.subword(n + 1, n + 1), next));
    }
    Ok(CompleteFamily { word: word.clone(), minima })
}

/// A tight filter in `E(S)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TightFilter {
    /// A finite word and the atom of `B_word` at its top level.
    Finite { word: Word, atom: VertexSet },
    /// `(letter_n, atom_n)` for `n ≥ 1`; level 0 is implied.
    Infinite { path: Lasso<(Letter, VertexSet)> },
}

impl TightFilter {
    /// Validated finite-type filter.
    pub fn finite(space: &LabelledSpace, word: Word, atom: VertexSet) -> Result<Self> {
        if !space.is_atom_of(atom, &word) {
            return Err(Error::domain(format!(
                "{} is not an atom of B_{}",
                space.graph().render_set(atom),
                space.graph().render_word(&word)
            )));
        }
        if !finite_top_is_tight(space, &word, atom) {
            return Err(Error::domain(format!(
                "{}[{}] is not tight: no sink condition at the top level",
                space.graph().render_word(&word),
                space.graph().render_set(atom)
            )));
        }
        Ok(TightFilter::Finite { word, atom })
    }

    /// Validated infinite-type filter `prefix · cycle^∞`.
    pub fn infinite(
        space: &LabelledSpace,
        prefix: Vec<(Letter, VertexSet)>,
        cycle: Vec<(Letter, VertexSet)>,
    ) -> Result<Self> {
        let path = Lasso::new(prefix, cycle).ok_or_else(|| Error::input("empty cycle"))?;
        check_infinite(space, &path)?;
        Ok(TightFilter::Infinite { path })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TightFilter::Finite { .. })
    }

    /// `|α|`, or `None` for an infinite word.
    pub fn word_len(&self) -> Option<usize> {
        match self {
            TightFilter::Finite { word, .. } => Some(word.len()),
            TightFilter::Infinite { .. } => None,
        }
    }

    /// Whether the word has at least `n` letters.
    pub fn has_len_at_least(&self, n: usize) -> bool {
        self.word_len().is_none_or(|l| l >= n)
    }

    /// Letter at 0-based position `i`.
    pub fn letter(&self, i: usize) -> Option<Letter> {
        match self {
            TightFilter::Finite { word, .. } => word.letters().get(i).copied(),
            TightFilter::Infinite { path } => Some(path.at(i).0),
        }
    }

    /// The first `n` letters, if the word is that long.
    pub fn prefix_word(&self, n: usize) -> Option<Word> {
        if !self.has_len_at_least(n) {
            return None;
        }
        Some((0..n).map(|i| self.letter(i).expect("length checked")).collect())
    }

    /// Whether `w` is a beginning of the word.
    pub fn has_beginning(&self, w: &Word) -> bool {
        self.has_len_at_least(w.len()) && w.iter().enumerate().all(|(i, a)| self.letter(i) == Some(a))
    }

    /// The finite word, if any.
    pub fn finite_word(&self) -> Option<&Word> {
        match self {
            TightFilter::Finite { word, .. } => Some(word),
            TightFilter::Infinite { .. } => None,
        }
    }

    /// Minimum of `ξ_n`; `Err` if `n` exceeds the word length.
    pub fn level(&self, space: &LabelledSpace, n: usize) -> Result<Level> {
        match self {
            TightFilter::Finite { word, atom } => {
                if n > word.len() {
                    return Err(Error::domain(format!("level {n} beyond word length {}", word.len())));
                }
                let mut x = Some(*atom);
                for k in (n..word.len()).rev() {
                    x = x.and_then(|next| space.pullback(&word.prefix(k), &word.subword(k + 1, k + 1), next));
                }
                Ok(x)
            }
            TightFilter::Infinite { path } => {
                if n >= 1 {
                    Ok(Some(path.at(n - 1).1))
                } else {
                    let (a, c) = *path.at(0);
                    Ok(space.pullback(&Word::empty(), &Word::single(a), c))
                }
            }
        }
    }

    /// The complete family up to level `n` (all levels for finite words).
    pub fn levels(&self, space: &LabelledSpace, n: usize) -> Vec<Level> {
        let top = self.word_len().map_or(n, |l| l.min(n));
        (0..=top).map(|k| self.level(space, k).expect("within range")).collect()
    }

    pub fn render(&self, space: &LabelledSpace) -> String {
        let g = space.graph();
        match self {
            TightFilter::Finite { word, atom } => format!("{}[{}]", g.render_word(word), g.render_set(*atom)),
            TightFilter::Infinite { path } => {
                let mut out = String::new();
                for (a, _) in path.prefix() {
                    out.push(g.letter_name(*a));
                }
                out.push('(');
                for (a, _) in path.cycle() {
                    out.push(g.letter_name(*a));
                }
                out.push_str(")^∞[");
                let atoms: Vec<String> =
                    path.prefix().iter().chain(path.cycle().iter()).map(|(_, c)| g.render_set(*c)).collect();
                let _ = write!(out, "{}]", atoms.join(","));
                out
            }
        }
    }

    /// Parses `word[{..}]` or `prefix(cycle)^∞[{..},{..},…]` (`^w` and `^inf` also accepted).
    pub fn parse(space: &LabelledSpace, text: &str) -> Result<Self> {
        let g = space.graph();
        let text = text.trim();
        let open = text
            .find('[')
            .ok_or_else(|| Error::input(format!("expected `word[{{atom}}]`, got `{text}`")))?;
        let body = text[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| Error::input(format!("missing closing `]` in `{text}`")))?;
        let head = &text[..open];
        let sets = split_sets(body)?
            .into_iter()
            .map(|s| g.parse_vertex_set(s))
            .collect::<Result<Vec<_>>>()?;
        let Some(cycle_open) = head.find('(') else {
            let [atom] = sets[..] else {
                return Err(Error::input(format!("finite filter `{text}` needs exactly one atom")));
            };
            return TightFilter::finite(space, g.parse_word(head.trim())?, atom);
        };
        let rest = &head[cycle_open + 1..];
        let close = rest
            .find(')')
            .ok_or_else(|| Error::input(format!("missing `)` in `{text}`")))?;
        let marker = rest[close + 1..].trim();
        if !matches!(marker, "^∞" | "^w" | "^inf") {
            return Err(Error::input(format!("expected `^∞` after the cycle in `{text}`")));
        }
        let prefix = g.parse_word(head[..cycle_open].trim())?;
        let cycle = g.parse_word(rest[..close].trim())?;
        if cycle.is_empty() {
            return Err(Error::input(format!("empty cycle in `{text}`")));
        }
        if sets.len() != prefix.len() + cycle.len() {
            return Err(Error::input(format!(
                "`{text}` lists {} atoms for {} letters",
                sets.len(),
                prefix.len() + cycle.len()
            )));
        }
        let pairs: Vec<(Letter, VertexSet)> = prefix.iter().chain(cycle.iter()).zip(sets).collect();
        let (p, c) = pairs.split_at(prefix.len());
        TightFilter::infinite(space, p.to_vec(), c.to_vec())
    }
}

fn split_sets(body: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let close = rest
            .find('}')
            .ok_or_else(|| Error::input(format!("unterminated vertex set in `{body}`")))?;
        out.push(rest[..=close].trim());
        rest = rest[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    if out.is_empty() {
        return Err(Error::input("missing atoms"));
    }
    Ok(out)
}

/// Condition (ii) of the tightness theorem at the top level: for every `A`
/// in the ultrafilter `↑atom` of `B_word`, either `L(AE^1)` is infinite or some
/// `B ∈ B_word` satisfies `∅ ≠ B ⊆ A ∩ E^0_sink`.
pub fn finite_top_is_tight(space: &LabelledSpace, word: &Word, atom: VertexSet) -> bool {
    let g = space.graph();
    let range = space.range(word);
    let sinks = g.sinks();
    space.family().within(range).filter(|a| atom.is_subset(*a)).all(|a| {
        // the alphabet is finite, so (a) never holds
        let infinitely_many_letters = false;
        let sink_member = space
            .family()
            .within(range)
            .any(|b| !b.is_empty() && b.is_subset(a.intersection(sinks)));
        infinitely_many_letters || sink_member
    })
}

/// Checks that every level `n ≥ 1` is an atom of `B_{α_{1,n}}` and that
/// `C_n = f(C_{n+1})`. The pair (range of `α_{1,n}`, position in the
/// presentation) is eventually periodic, so the check stops at the first repeat.
fn check_infinite(space: &LabelledSpace, path: &Lasso<(Letter, VertexSet)>) -> Result<()> {
    let g = space.graph();
    let mut seen = BTreeSet::new();
    let mut range = g.all_vertices();
    let mut n = 1;
    loop {
        let (a, c) = *path.at(n - 1);
        range = g.relative_range_letter(range, a);
        if !seen.insert((range, path.fold_index(n - 1))) {
            return Ok(());
        }
        if space.atoms().binary_search(&c).is_err() || !c.is_subset(range) {
            return Err(Error::domain(format!(
                "level {n}: {} is not an atom of the restricted algebra",
                g.render_set(c)
            )));
        }
        let (b, next) = *path.at(n);
        if space.pullback_within(range, &Word::single(b), next) != Some(c) {
            return Err(Error::domain(format!(
                "level {n}: {} is not the minimum pulled back from level {}",
                g.render_set(c),
                n + 1
            )));
        }
        n += 1;
    }
}

/// All tight filters with finite word of length `≤ n`, and all infinite-type
/// filters whose lasso presentation has at most `n` positions. Sorted.
pub fn enumerate_tight(space: &LabelledSpace, n: usize) -> Vec<TightFilter> {
    let g = space.graph();
    let mut out = BTreeSet::new();
    for word in g.labelled_paths_up_to(n) {
        for atom in space.atoms_of(&word) {
            if finite_top_is_tight(space, &word, atom) {
                out.insert(TightFilter::Finite { word: word.clone(), atom });
            }
        }
    }
    // states are (letter, atom); an a-step from C to D needs D ⊆ r(C, a)
    let states: Vec<(Letter, VertexSet)> = g
        .alphabet()
        .flat_map(|a| space.atoms().iter().map(move |&c| (a, c)))
        .collect();
    let step = |from: VertexSet, to: (Letter, VertexSet)| to.1.is_subset(g.relative_range_letter(from, to.0));
    let mut stack: Vec<Vec<(Letter, VertexSet)>> = states
        .iter()
        .filter(|&&s| step(g.all_vertices(), s))
        .map(|&s| vec![s])
        .collect();
    while let Some(seq) = stack.pop() {
        let last = *seq.last().expect("nonempty");
        for p in 0..seq.len() {
            let first_of_cycle = seq[p];
            if step(last.1, first_of_cycle) {
                let path = Lasso::new(seq[..p].to_vec(), seq[p..].to_vec()).expect("nonempty cycle");
                if check_infinite(space, &path).is_ok() {
                    out.insert(TightFilter::Infinite { path });
                }
            }
        }
        if seq.len() < n {
            for &s in &states {
                if step(last.1, s) {
                    let mut next = seq.clone();
                    next.push(s);
                    stack.push(next);
                }
            }
        }
    }
    out.into_iter().collect()
}

fn require_idempotent(e: &Triple) -> Result<()> {
    if e.is_idempotent() {
        Ok(())
    } else {
        Err(Error::input("expected an idempotent (β,A,β)"))
    }
}

/// `(β, A, β) ∈ ξ` iff `β` begins the word of `ξ` and `A ∈ ξ_{|β|}`.
pub fn contains(space: &LabelledSpace, xi: &TightFilter, e: &Triple) -> Result<bool> {
    require_idempotent(e)?;
    let beta = e.left();
    if !xi.has_beginning(beta) {
        return Ok(false);
    }
    Ok(matches!(xi.level(space, beta.len())?, Some(x) if x.is_subset(e.set())))
}

/// Membership in the basic open set `V_{e:e_1,…,e_n}`.
pub fn in_basic_open(space: &LabelledSpace, xi: &TightFilter, e: &Triple, negatives: &[Triple]) -> Result<bool> {
    for f in negatives {
        require_idempotent(f)?;
    }
    if !contains(space, xi, e)? {
        return Ok(false);
    }
    for f in negatives {
        if contains(space, xi, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}
