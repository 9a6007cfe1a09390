//! Cutting and gluing: `f`, `g`, `h` on ultrafilters and `G`, `H`, `σ` on tight filters.

use crate::error::{Error, Result};
use crate::family::LabelledSpace;
use crate::filters::TightFilter;
use crate::graph::VertexSet;
use crate::word::{Lasso, Letter, Word};

/// An ultrafilter `↑atom` of `B_context`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UltrafilterRef<'w> {
    pub context: &'w Word,
    pub atom: VertexSet,
}

/// An owned ultrafilter, returned by the surgery maps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ultrafilter {
    pub context: Word,
    pub atom: VertexSet,
}

impl Ultrafilter {
    pub fn new(space: &LabelledSpace, context: Word, atom: VertexSet) -> Result<Self> {
        if !space.is_atom_of(atom, &context) {
            return Err(Error::domain(format!(
                "{} is not an atom of B_{}",
                space.graph().render_set(atom),
                space.graph().render_word(&context)
            )));
        }
        Ok(Ultrafilter { context, atom })
    }

    pub fn as_ref(&self) -> UltrafilterRef<'_> {
        UltrafilterRef { context: &self.context, atom: self.atom }
    }

    /// Whether `set ∈ ↑atom`, for `set ∈ B_context`.
    pub fn contains(&self, set: VertexSet) -> bool {
        self.atom.is_subset(set)
    }
}

/// `f_{α[β]}(F) = {A ∈ B_α | r(A, β) ∈ F}` where `F` lives over `αβ` and
/// `|α| = split`. `Ok(None)` is the empty filter, possible only for `α = ε`.
pub fn f_cut_end(space: &LabelledSpace, f: UltrafilterRef<'_>, split: usize) -> Result<Option<Ultrafilter>> {
    if split > f.context.len() {
        return Err(Error::domain(format!("split {split} beyond word length {}", f.context.len())));
    }
    let alpha = f.context.prefix(split);
    let beta = f.context.suffix_from(split);
    match space.pullback(&alpha, &beta, f.atom) {
        Some(atom) => Ok(Some(Ultrafilter { context: alpha, atom })),
        None if alpha.is_empty() => Ok(None),
        None => Err(Error::domain("cutting the end produced an empty filter over a nonempty word")),
    }
}

/// `g_{(α)β}(F) = {C ∩ r(αβ) | C ∈ F}` for `F ∈ X_β` with `r(αβ) ∈ F`.
pub fn g_glue(space: &LabelledSpace, alpha: &Word, f: UltrafilterRef<'_>) -> Result<Ultrafilter> {
    let glued = alpha.concat(f.context);
    let r = space.range(&glued);
    if !f.atom.is_subset(r) {
        return Err(Error::domain(format!(
            "r({}) is not in the ultrafilter generated by {}",
            space.graph().render_word(&glued),
            space.graph().render_set(f.atom)
        )));
    }
    let atom = space
        .family()
        .within(space.range(f.context))
        .filter(|c| f.atom.is_subset(*c))
        .map(|c| c.intersection(r))
        .reduce(VertexSet::intersection)
        .expect("the ultrafilter contains its atom");
    Ok(Ultrafilter { context: glued, atom })
}

/// `h_{[α]β}(F) = ↑F` inside `B_β`, for `F` over `αβ`.
pub fn h_cut(space: &LabelledSpace, alpha: &Word, f: UltrafilterRef<'_>) -> Result<Ultrafilter> {
    let beta = f.context.strip_prefix(alpha).ok_or_else(|| {
        Error::domain(format!(
            "{} does not begin {}",
            space.graph().render_word(alpha),
            space.graph().render_word(f.context)
        ))
    })?;
    let atom = space
        .family()
        .within(space.range(&beta))
        .filter(|c| f.atom.is_subset(*c))
        .reduce(VertexSet::intersection)
        .ok_or_else(|| Error::domain("no member of the cut algebra lies above the filter"))?;
    Ok(Ultrafilter { context: beta, atom })
}

/// `H_{[α]β}`: removes `α` from the front of the word; levels are `η_n = h_{[α]β_{1,n}}(ξ_{n+|α|})`.
pub fn cut_filter(space: &LabelledSpace, alpha: &Word, xi: &TightFilter) -> Result<TightFilter> {
    if alpha.is_empty() {
        return Ok(xi.clone());
    }
    if !xi.has_beginning(alpha) {
        return Err(Error::domain(format!(
            "{} is not a beginning of the word of {}",
            space.graph().render_word(alpha),
            xi.render(space)
        )));
    }
    let k = alpha.len();
    match xi {
        TightFilter::Finite { word, atom } => {
            let top = h_cut(space, alpha, UltrafilterRef { context: word, atom: *atom })?;
            TightFilter::finite(space, top.context, top.atom)
        }
        TightFilter::Infinite { path } => {
            let shifted = path.drop_front(k);
            let levels = |items: &[(Letter, VertexSet)], offset: usize| -> Result<Vec<(Letter, VertexSet)>> {
                items
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, _))| {
                        let n = offset + i + 1;
                        let over = xi.prefix_word(n + k).expect("infinite word");
                        let at = xi.level(space, n + k)?.expect("levels above 0 are atoms");
                        Ok((a, h_cut(space, alpha, UltrafilterRef { context: &over, atom: at })?.atom))
                    })
                    .collect()
            };
            let prefix = levels(shifted.prefix(), 0)?;
            let cycle = levels(shifted.cycle(), shifted.prefix().len())?;
            TightFilter::infinite(space, prefix, cycle)
        }
    }
}

/// `G_{(α)β}`: glues `α` in front of the word of `ξ ∈ T_{(α)β}`, i.e. `r(α) ∈ ξ_0`.
pub fn glue_filter(space: &LabelledSpace, alpha: &Word, xi: &TightFilter) -> Result<TightFilter> {
    if alpha.is_empty() {
        return Ok(xi.clone());
    }
    let g = space.graph();
    let r_alpha = space.range(alpha);
    match xi.level(space, 0)? {
        Some(x0) if x0.is_subset(r_alpha) => {}
        _ => {
            return Err(Error::domain(format!(
                "{} is not in the domain of gluing {}",
                xi.render(space),
                g.render_word(alpha)
            )))
        }
    }
    match xi {
        TightFilter::Finite { word, .. } => {
            // η_{|α|+|β|} = g_{(α)β}(ξ_{|β|}); lower levels follow by completeness
            let top_level = xi.level(space, word.len())?.expect("top level is an atom");
            let top = g_glue(space, alpha, UltrafilterRef { context: word, atom: top_level })?;
            TightFilter::finite(space, top.context, top.atom)
        }
        TightFilter::Infinite { path } => {
            let glue_at = |items: &[(Letter, VertexSet)], offset: usize| -> Result<Vec<(Letter, VertexSet)>> {
                items
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, c))| {
                        let over = xi.prefix_word(offset + i + 1).expect("infinite word");
                        Ok((a, g_glue(space, alpha, UltrafilterRef { context: &over, atom: c })?.atom))
                    })
                    .collect()
            };
            let tail_prefix = glue_at(path.prefix(), 0)?;
            let tail_cycle = glue_at(path.cycle(), path.prefix().len())?;
            let tail = Lasso::new(tail_prefix, tail_cycle).expect("nonempty cycle");
            // η_i = f_{α_{1,i}[α_{i+1,|α|}β_1]}(η_{|α|+1}) for 1 ≤ i ≤ |α|
            let first = *tail.at(0);
            let over_first = alpha.pushed(first.0);
            let mut head = Vec::with_capacity(alpha.len());
            for i in 1..=alpha.len() {
                let cut = f_cut_end(space, UltrafilterRef { context: &over_first, atom: first.1 }, i)?
                    .ok_or_else(|| Error::domain("gluing produced an empty level"))?;
                head.push((alpha.letters()[i - 1], cut.atom));
            }
            let glued = tail.prepend(&head);
            TightFilter::infinite(space, glued.prefix().to_vec(), glued.cycle().to_vec())
        }
    }
}

/// The shift `σ(ξ^{aγ}) = H_{[a]γ}(ξ)`.
pub fn sigma(space: &LabelledSpace, xi: &TightFilter) -> Result<TightFilter> {
    let a = xi
        .letter(0)
        .ok_or_else(|| Error::domain("the shift is undefined on filters with empty word"))?;
    cut_filter(space, &Word::single(a), xi)
}

/// `σ^k`.
pub fn sigma_pow(space: &LabelledSpace, xi: &TightFilter, k: usize) -> Result<TightFilter> {
    let mut x = xi.clone();
    for _ in 0..k {
        x = sigma(space, &x)?;
    }
    Ok(x)
}
