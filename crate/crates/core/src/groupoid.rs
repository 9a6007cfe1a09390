//! The groupoid `Γ`, the action `θ`, germs and `Φ`, and cylinder sets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::family::LabelledSpace;
use crate::filters::{contains, in_basic_open, TightFilter};
use crate::semigroup::{multiply_triples, SemigroupElement, Triple};
use crate::surgery::{cut_filter, glue_filter, sigma_pow};
use crate::word::Word;

/// `(η, m, ξ) ∈ Γ` with a witness `(α, β)`: `η = η^{αγ}`, `ξ = ξ^{βγ}`,
/// `m = |α| − |β|` and `H_{[α]γ}(η) = H_{[β]γ}(ξ)`.
///
/// Equality, ordering and hashing ignore the witness.
#[derive(Debug, Clone)]
pub struct GroupoidElement {
    eta: TightFilter,
    m: i64,
    xi: TightFilter,
    witness: (Word, Word),
}

impl PartialEq for GroupoidElement {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for GroupoidElement {}

impl PartialOrd for GroupoidElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupoidElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl Hash for GroupoidElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks the defining condition for one witness.
pub fn is_witness(space: &LabelledSpace, eta: &TightFilter, xi: &TightFilter, alpha: &Word, beta: &Word) -> bool {
    match (cut_filter(space, alpha, eta), cut_filter(space, beta, xi)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// The witness with the shortest `α`, if `(η, m, ξ) ∈ Γ`.
pub fn find_witness(space: &LabelledSpace, eta: &TightFilter, m: i64, xi: &TightFilter) -> Option<(Word, Word)> {
    let start = m.max(0) as usize;
    let end = match (eta, xi) {
        (TightFilter::Finite { word: a, .. }, TightFilter::Finite { word: b, .. }) => {
            if a.len() as i64 - b.len() as i64 != m {
                return None;
            }
            a.len()
        }
        (TightFilter::Infinite { path: p }, TightFilter::Infinite { path: q }) => {
            // past both prefixes the comparison is periodic with period lcm of the cycles
            let (lp, lq) = (p.cycle().len(), q.cycle().len());
            start + p.prefix().len().max(q.prefix().len()) + m.unsigned_abs() as usize + lp / gcd(lp, lq) * lq
        }
        _ => return None,
    };
    (start..=end).find_map(|k| {
        let alpha = eta.prefix_word(k)?;
        let beta = xi.prefix_word((k as i64 - m) as usize)?;
        is_witness(space, eta, xi, &alpha, &beta).then_some((alpha, beta))
    })
}

impl GroupoidElement {
    /// `(η, m, ξ)` if it lies in `Γ`, with the canonical witness.
    pub fn new(space: &LabelledSpace, eta: TightFilter, m: i64, xi: TightFilter) -> Result<Self> {
        let witness = find_witness(space, &eta, m, &xi).ok_or_else(|| {
            Error::domain(format!("({}, {m}, {}) is not in the groupoid", eta.render(space), xi.render(space)))
        })?;
        Ok(GroupoidElement { eta, m, xi, witness })
    }

    /// Builds the element from an explicit witness, checking it.
    pub fn with_witness(space: &LabelledSpace, eta: TightFilter, xi: TightFilter, alpha: Word, beta: Word) -> Result<Self> {
        if !is_witness(space, &eta, &xi, &alpha, &beta) {
            return Err(Error::domain(format!(
                "({}, {}) does not witness ({}, {})",
                space.graph().render_word(&alpha),
                space.graph().render_word(&beta),
                eta.render(space),
                xi.render(space)
            )));
        }
        let m = alpha.len() as i64 - beta.len() as i64;
        Ok(GroupoidElement { eta, m, xi, witness: (alpha, beta) })
    }

    pub fn unit(xi: TightFilter) -> Self {
        GroupoidElement { eta: xi.clone(), m: 0, xi, witness: (Word::empty(), Word::empty()) }
    }

    fn key(&self) -> (&TightFilter, i64, &TightFilter) {
        (&self.eta, self.m, &self.xi)
    }

    pub fn eta(&self) -> &TightFilter {
        &self.eta
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn xi(&self) -> &TightFilter {
        &self.xi
    }

    pub fn witness(&self) -> (&Word, &Word) {
        (&self.witness.0, &self.witness.1)
    }

    pub fn is_unit(&self) -> bool {
        self.m == 0 && self.eta == self.xi
    }

    pub fn inverse(&self) -> Self {
        GroupoidElement {
            eta: self.xi.clone(),
            m: -self.m,
            xi: self.eta.clone(),
            witness: (self.witness.1.clone(), self.witness.0.clone()),
        }
    }

    /// The same element with the shortest witness.
    pub fn canonical(&self, space: &LabelledSpace) -> Self {
        let witness = find_witness(space, &self.eta, self.m, &self.xi).expect("element of the groupoid");
        GroupoidElement { witness, ..self.clone() }
    }

    pub fn render(&self, space: &LabelledSpace) -> String {
        format!("({},{},{})", self.eta.render(space), self.m, self.xi.render(space))
    }

    /// Parses `(filter,m,filter)`.
    pub fn parse(space: &LabelledSpace, text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::input(format!("expected `(filter,m,filter)`, got `{text}`")))?;
        let parts = split_top_level(inner);
        let [eta, m, xi] = parts[..] else {
            return Err(Error::input(format!("expected three components in `{text}`")));
        };
        let m: i64 = m
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("`{}` is not an integer", m.trim())))?;
        GroupoidElement::new(space, TightFilter::parse(space, eta)?, m, TightFilter::parse(space, xi)?)
    }
}

/// Splits on commas outside any bracket pair.
pub(crate) fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// `(η, m, ξ)(ξ, n, ρ) = (η, m + n, ρ)`, with the witness rebuilt by aligning tails.
pub fn compose(space: &LabelledSpace, x: &GroupoidElement, y: &GroupoidElement) -> Result<GroupoidElement> {
    if x.xi != y.eta {
        return Err(Error::domain(format!(
            "{} and {} are not composable",
            x.render(space),
            y.render(space)
        )));
    }
    let (alpha, beta) = &x.witness;
    let (beta2, delta) = &y.witness;
    let zeta = &x.xi;
    let (left, right) = if beta.len() <= beta2.len() {
        let extra = zeta.prefix_word(beta2.len()).expect("witness fits").suffix_from(beta.len());
        (alpha.concat(&extra), delta.clone())
    } else {
        let extra = zeta.prefix_word(beta.len()).expect("witness fits").suffix_from(beta2.len());
        (alpha.clone(), delta.concat(&extra))
    };
    GroupoidElement::with_witness(space, x.eta.clone(), y.xi.clone(), left, right)
}

/// `θ_t(ξ) = G_{(β)}(H_{[γ]}(ξ))` for `t = (β, A, γ)` and `(γ, A, γ) ∈ ξ`.
pub fn theta(space: &LabelledSpace, t: &Triple, xi: &TightFilter) -> Result<TightFilter> {
    if !contains(space, xi, &t.source_idempotent())? {
        return Err(Error::domain(format!(
            "{} is not in the domain of {}",
            xi.render(space),
            t.render(space)
        )));
    }
    glue_filter(space, t.left(), &cut_filter(space, t.right(), xi)?)
}

/// A pair `(s, ξ)` with `s*s ∈ ξ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Germ {
    s: Triple,
    xi: TightFilter,
}

impl Germ {
    pub fn new(space: &LabelledSpace, s: Triple, xi: TightFilter) -> Result<Self> {
        if !contains(space, &xi, &s.source_idempotent())? {
            return Err(Error::domain(format!(
                "{} does not contain {}",
                xi.render(space),
                s.source_idempotent().render(space)
            )));
        }
        Ok(Germ { s, xi })
    }

    pub fn s(&self) -> &Triple {
        &self.s
    }

    pub fn xi(&self) -> &TightFilter {
        &self.xi
    }
}

/// `[s, ξ] = [t, ξ]`: with `s = (μ,A,ν)` and `t = (β,B,γ)`, the right words
/// are comparable; if `γ = νγ′` the germs agree iff `β = μγ′`, and symmetrically.
pub fn germ_equivalent(g1: &Germ, g2: &Germ) -> bool {
    if g1.xi != g2.xi {
        return false;
    }
    let (mu, nu) = (g1.s.left(), g1.s.right());
    let (beta, gamma) = (g2.s.left(), g2.s.right());
    if let Some(rest) = gamma.strip_prefix(nu) {
        *beta == mu.concat(&rest)
    } else if let Some(rest) = nu.strip_prefix(gamma) {
        *mu == beta.concat(&rest)
    } else {
        false
    }
}

/// The defining relation: some idempotent `e ∈ ξ` with `se = te`. Only
/// idempotents `(δ, C, δ)` with `|δ| ≤ bound` are searched.
pub fn germ_equivalent_by_definition(space: &LabelledSpace, g1: &Germ, g2: &Germ, bound: usize) -> bool {
    if g1.xi != g2.xi {
        return false;
    }
    let xi = &g1.xi;
    (0..=bound).filter_map(|n| xi.prefix_word(n)).any(|delta| {
        space
            .family()
            .within(space.range(&delta))
            .filter(|c| !c.is_empty())
            .map(|c| Triple::raw(delta.clone(), c, delta.clone()))
            .filter(|e| contains(space, xi, e).unwrap_or(false))
            .any(|e| {
                let se = multiply_triples(space, &g1.s, &e);
                !se.is_zero() && se == multiply_triples(space, &g2.s, &e)
            })
    })
}

/// `[s, θ_t(ξ)] · [t, ξ] = [st, ξ]`; `None` unless `g1.ξ = θ_t(g2.ξ)`.
pub fn germ_product(space: &LabelledSpace, g1: &Germ, g2: &Germ) -> Result<Option<Germ>> {
    if theta(space, &g2.s, &g2.xi)? != g1.xi {
        return Ok(None);
    }
    match multiply_triples(space, &g1.s, &g2.s) {
        SemigroupElement::Triple(st) => Germ::new(space, st, g2.xi.clone()).map(Some),
        SemigroupElement::Zero => Err(Error::domain("product of composable germs vanished")),
    }
}

/// `Φ[t, ξ] = (θ_t(ξ), |β| − |γ|, ξ)` for `t = (β, A, γ)`.
pub fn phi(space: &LabelledSpace, g: &Germ) -> Result<GroupoidElement> {
    let eta = theta(space, &g.s, &g.xi)?;
    GroupoidElement::with_witness(space, eta, g.xi.clone(), g.s.left().clone(), g.s.right().clone())
}

/// A germ mapped to `x` by `Φ`, built from a witness `(α, β)` as
/// `t = (α, r(α) ∩ r(β), β)`.
pub fn phi_preimage(space: &LabelledSpace, x: &GroupoidElement) -> Result<Germ> {
    let (mut alpha, mut beta) = (x.witness.0.clone(), x.witness.1.clone());
    let set = if alpha.is_empty() && beta.is_empty() {
        match x.xi.letter(0) {
            // r(ε) = E^0 need not be a member; extend the witness by one letter
            Some(a) => {
                alpha.push(a);
                beta.push(a);
                space.range(&alpha)
            }
            None => x.xi.level(space, 0)?.expect("finite filter with empty word has an atom"),
        }
    } else {
        space.range(&alpha).intersection(space.range(&beta))
    };
    let t = Triple::new(space, alpha, set, beta)?;
    Germ::new(space, t, x.xi.clone())
}

/// `Z_{s,e:e_1,…,e_n}`; the base `e` defaults to `s*s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cylinder {
    pub triple: Triple,
    pub base: Option<Triple>,
    pub negatives: Vec<Triple>,
}

impl Cylinder {
    pub fn new(triple: Triple) -> Self {
        Cylinder { triple, base: None, negatives: Vec::new() }
    }

    pub fn with_negatives(triple: Triple, negatives: Vec<Triple>) -> Self {
        Cylinder { triple, base: None, negatives }
    }

    pub fn base(&self) -> Triple {
        self.base.clone().unwrap_or_else(|| self.triple.source_idempotent())
    }
}

/// `x ∈ Z`: `x = (η^{μγ}, |μ| − |ν|, ξ^{νγ})` with `ξ ∈ V_{e:e_1,…}` and `H_{[μ]γ}(η) = H_{[ν]γ}(ξ)`.
pub fn cylinder_member(space: &LabelledSpace, z: &Cylinder, x: &GroupoidElement) -> bool {
    let s = &z.triple;
    x.m == s.degree()
        && in_basic_open(space, &x.xi, &z.base(), &z.negatives).unwrap_or(false)
        && is_witness(space, &x.eta, &x.xi, s.left(), s.right())
}

/// `Z_{(α,A,β)} ∩ Z_{(μ,B,ν)}` as a single cylinder triple, or `None` if empty.
pub fn intersect_cylinders(space: &LabelledSpace, z1: &Triple, z2: &Triple) -> Option<Triple> {
    let (alpha, a, beta) = (z1.left(), z1.set(), z1.right());
    let (mu, b, nu) = (z2.left(), z2.set(), z2.right());
    if let (Some(d1), Some(d2)) = (mu.strip_prefix(alpha), nu.strip_prefix(beta)) {
        if d1 == d2 {
            let set = space.relative_range(a, &d1).intersection(b);
            return (!set.is_empty()).then(|| Triple::raw(mu.clone(), set, nu.clone()));
        }
    }
    if let (Some(d1), Some(d2)) = (alpha.strip_prefix(mu), beta.strip_prefix(nu)) {
        if d1 == d2 {
            let set = a.intersection(space.relative_range(b, &d1));
            return (!set.is_empty()).then(|| Triple::raw(alpha.clone(), set, beta.clone()));
        }
    }
    None
}

/// Replaces a list of cylinders by pairwise-disjoint ones with the same union,
/// each contained in an input cylinder with the same words. When two overlap,
/// the one with longer words shrinks to `B \ r(A, δ)`; on equal words the later
/// one shrinks. Empty cylinders are dropped.
pub fn disjointify(space: &LabelledSpace, zs: &[Triple]) -> Vec<Triple> {
    let mut out: Vec<Triple> = Vec::new();
    for z in zs {
        let mut current = Some(z.clone());
        let mut kept = Vec::with_capacity(out.len());
        for d in out {
            let Some(c) = &current else {
                kept.push(d);
                continue;
            };
            if intersect_cylinders(space, c, &d).is_none() {
                kept.push(d);
                continue;
            }
            let delta_new = d.left().strip_prefix(c.left()).filter(|x| !x.is_empty());
            match delta_new {
                // d has the longer words: shrink d
                Some(delta) => {
                    let set = d.set().difference(space.relative_range(c.set(), &delta));
                    if !set.is_empty() {
                        kept.push(Triple::raw(d.left().clone(), set, d.right().clone()));
                    }
                }
                // c is at least as long: shrink c
                None => {
                    let delta = c.left().strip_prefix(d.left()).expect("overlapping cylinders are nested");
                    let set = c.set().difference(space.relative_range(d.set(), &delta));
                    current = (!set.is_empty()).then(|| Triple::raw(c.left().clone(), set, c.right().clone()));
                    kept.push(d);
                }
            }
        }
        out = kept;
        out.extend(current);
    }
    out
}

/// Renault–Deaconu form of membership: `σ^m(η) = σ^n(ξ)`.
pub fn shift_equivalent(space: &LabelledSpace, eta: &TightFilter, m: usize, xi: &TightFilter, n: usize) -> bool {
    if !eta.has_len_at_least(m) || !xi.has_len_at_least(n) {
        return false;
    }
    match (sigma_pow(space, eta, m), sigma_pow(space, xi, n)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// `V(X, Y, m, n)` membership, with `X = V_{x}` and `Y = V_{y}` basic open sets.
pub fn fiber_product_member(
    space: &LabelledSpace,
    x_open: (&Triple, &[Triple]),
    y_open: (&Triple, &[Triple]),
    m: usize,
    n: usize,
    g: &GroupoidElement,
) -> bool {
    g.m == m as i64 - n as i64
        && in_basic_open(space, &g.eta, x_open.0, x_open.1).unwrap_or(false)
        && in_basic_open(space, &g.xi, y_open.0, y_open.1).unwrap_or(false)
        && shift_equivalent(space, &g.eta, m, &g.xi, n)
}

/// All `(η, m, ξ)` with `ξ` among `filters` and a witness of lengths `≤ n`. Sorted.
pub fn enumerate_elements(space: &LabelledSpace, filters: &[TightFilter], n: usize) -> Vec<GroupoidElement> {
    let words = space.graph().labelled_paths_up_to(n);
    let mut out = BTreeSet::new();
    for xi in filters {
        for k in 0..=n {
            let Some(beta) = xi.prefix_word(k) else { break };
            let Ok(tail) = cut_filter(space, &beta, xi) else { continue };
            for alpha in &words {
                if let Ok(eta) = glue_filter(space, alpha, &tail) {
                    let m = alpha.len() as i64 - beta.len() as i64;
                    out.insert(GroupoidElement { eta, m, xi: xi.clone(), witness: (alpha.clone(), beta.clone()) });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// All germs `(t, ξ)` with `t` among `triples` and `ξ` among `filters`.
pub fn enumerate_germs(space: &LabelledSpace, triples: &[Triple], filters: &[TightFilter]) -> Vec<Germ> {
    let mut out = Vec::new();
    for t in triples {
        let e = t.source_idempotent();
        for xi in filters {
            if contains(space, xi, &e).unwrap_or(false) {
                out.push(Germ { s: t.clone(), xi: xi.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::enumerate_tight;
    use crate::graph::fixtures::*;
    use crate::graph::LabelledGraph;
    use crate::semigroup::enumerate_triples;

    fn space(g: LabelledGraph) -> LabelledSpace {
        LabelledSpace::minimal(g).unwrap()
    }

    fn tf(s: &LabelledSpace, text: &str) -> TightFilter {
        TightFilter::parse(s, text).unwrap()
    }

    fn tr(s: &LabelledSpace, text: &str) -> Triple {
        Triple::parse(s, text).unwrap()
    }

    fn ge(s: &LabelledSpace, text: &str) -> GroupoidElement {
        GroupoidElement::parse(s, text).unwrap()
    }

    #[test]
    fn compose_examples() {
        let s = space(g1());
        let x = ge(&s, "((a)^∞[{v}],1,(a)^∞[{v}])");
        assert_eq!(compose(&s, &x, &x).unwrap(), ge(&s, "((a)^∞[{v}],2,(a)^∞[{v}])"));

        let s = space(g3());
        let x = ge(&s, "(a[{3}],1,e[{3}])");
        assert_eq!(x.witness(), (&s.graph().parse_word("a").unwrap(), &Word::empty()));
        let u = GroupoidElement::unit(tf(&s, "e[{3}]"));
        assert_eq!(compose(&s, &x, &u).unwrap(), x);
        assert_eq!(compose(&s, &u, &u).unwrap(), u);
        assert!(compose(&s, &u, &x).is_err());
        assert!(compose(&s, &x, &x.inverse()).unwrap().is_unit());
        assert!(GroupoidElement::parse(&s, "(a[{3}],0,e[{3}])").is_err());
        assert!(GroupoidElement::parse(&s, "(a[{3}],0,b[{3}])").is_ok());
        assert!(GroupoidElement::parse(&s, "(a[{3}],1,ab[{3}])").is_err());
    }

    #[test]
    fn theta_and_phi_examples() {
        let s = space(g3());
        let xi = tf(&s, "a[{3}]");
        assert_eq!(theta(&s, &tr(&s, "(e,{3},a)"), &xi).unwrap(), tf(&s, "e[{3}]"));
        assert_eq!(theta(&s, &tr(&s, "(a,{3},b)"), &tf(&s, "b[{3}]")).unwrap(), tf(&s, "a[{3}]"));
        assert_eq!(theta(&s, &tr(&s, "(a,{2,3},a)"), &xi).unwrap(), xi);
        let g = Germ::new(&s, tr(&s, "(e,{3},a)"), xi.clone()).unwrap();
        assert_eq!(phi(&s, &g).unwrap(), ge(&s, "(e[{3}],-1,a[{3}])"));
        let unit = Germ::new(&s, tr(&s, "(a,{3},a)"), xi.clone()).unwrap();
        assert!(phi(&s, &unit).unwrap().is_unit());

        let s = space(g1());
        let inf = tf(&s, "(a)^∞[{v}]");
        let g = Germ::new(&s, tr(&s, "(a,{v},e)"), inf.clone()).unwrap();
        assert_eq!(phi(&s, &g).unwrap(), ge(&s, "((a)^∞[{v}],1,(a)^∞[{v}])"));
    }

    #[test]
    fn germ_equivalence_examples() {
        let s = space(g3());
        let xi = tf(&s, "ab[{3}]");
        let g1 = Germ::new(&s, tr(&s, "(e,{2},a)"), xi.clone()).unwrap();
        let g2 = Germ::new(&s, tr(&s, "(b,{3},ab)"), xi.clone()).unwrap();
        assert!(germ_equivalent(&g1, &g1));
        assert!(germ_equivalent(&g1, &g2));
        assert!(germ_equivalent_by_definition(&s, &g1, &g2, 3));
        // level 1 of ab[{3}] is {2}, so (e,{3},a) does not act on it
        assert!(Germ::new(&s, tr(&s, "(e,{3},a)"), xi).is_err());

        let xi = tf(&s, "a[{3}]");
        let g1 = Germ::new(&s, tr(&s, "(e,{3},a)"), xi.clone()).unwrap();
        let g2 = Germ::new(&s, tr(&s, "(a,{3},a)"), xi).unwrap();
        assert!(!germ_equivalent(&g1, &g2));
        assert!(!germ_equivalent_by_definition(&s, &g1, &g2, 3));
    }

    #[test]
    fn cylinder_examples() {
        let s = space(g3());
        let z = Cylinder::new(tr(&s, "(b,{3},e)"));
        assert!(cylinder_member(&s, &z, &ge(&s, "(b[{3}],1,e[{3}])")));
        assert!(!cylinder_member(&s, &z, &ge(&s, "(ab[{3}],1,b[{3}])")));
        let unit = Cylinder::new(tr(&s, "(e,{2,3},e)"));
        assert!(cylinder_member(&s, &unit, &GroupoidElement::unit(tf(&s, "e[{3}]"))));
        assert!(cylinder_member(&s, &unit, &GroupoidElement::unit(tf(&s, "b[{3}]"))));
        assert!(!cylinder_member(&s, &unit, &GroupoidElement::unit(tf(&s, "a[{3}]"))));

        let a = tr(&s, "(a,{2,3},a)");
        let ab = tr(&s, "(ab,{3},ab)");
        assert_eq!(intersect_cylinders(&s, &a, &a), Some(a.clone()));
        assert_eq!(intersect_cylinders(&s, &a, &ab), Some(ab.clone()));
        assert_eq!(intersect_cylinders(&s, &tr(&s, "(a,{2},a)"), &tr(&s, "(b,{3},b)")), None);
        assert_eq!(disjointify(&s, &[a.clone(), ab.clone()]), vec![a.clone()]);
        assert_eq!(disjointify(&s, &[ab.clone(), a.clone()]), vec![a.clone()]);
        assert_eq!(disjointify(&s, std::slice::from_ref(&a)), vec![a]);
    }

    fn graphs() -> Vec<LabelledGraph> {
        vec![
            g1(),
            g2(),
            g3(),
            LabelledGraph::new(&["x", "y"], &[("x", "x", "a"), ("x", "y", "b"), ("y", "x", "c")]).unwrap(),
        ]
    }

    #[test]
    fn phi_is_an_isomorphism_on_fragments() {
        for g in graphs() {
            let s = space(g);
            let filters = enumerate_tight(&s, 3);
            let triples = enumerate_triples(&s, 2);
            let germs = enumerate_germs(&s, &triples, &filters);
            let images: Vec<GroupoidElement> = germs.iter().map(|g| phi(&s, g).unwrap()).collect();
            for (i, g1) in germs.iter().enumerate() {
                for (j, g2) in germs.iter().enumerate().filter(|(_, g2)| g2.xi == g1.xi) {
                    let eq = germ_equivalent(g1, g2);
                    assert_eq!(eq, germ_equivalent_by_definition(&s, g1, g2, 3));
                    assert_eq!(eq, images[i] == images[j]);
                }
                // θ_t(ξ)(e) = ξ(t* e t)
                let t = &g1.s;
                let eta = theta(&s, t, &g1.xi).unwrap();
                for e in crate::semigroup::enumerate_idempotents(&s, 3) {
                    let conj = match multiply_triples(&s, &t.star(), &e) {
                        SemigroupElement::Triple(te) => multiply_triples(&s, &te, t),
                        SemigroupElement::Zero => SemigroupElement::Zero,
                    };
                    let rhs = conj.as_triple().is_some_and(|c| contains(&s, &g1.xi, c).unwrap());
                    assert_eq!(contains(&s, &eta, &e).unwrap(), rhs);
                }
            }
            for g2 in &germs {
                let target = theta(&s, &g2.s, &g2.xi).unwrap();
                for g1 in germs.iter().filter(|g| g.xi == target) {
                    let prod = germ_product(&s, g1, g2).unwrap().unwrap();
                    assert_eq!(
                        phi(&s, &prod).unwrap(),
                        compose(&s, &phi(&s, g1).unwrap(), &phi(&s, g2).unwrap()).unwrap()
                    );
                }
            }
            for x in enumerate_elements(&s, &filters, 2) {
                let pre = phi_preimage(&s, &x).unwrap();
                assert_eq!(phi(&s, &pre).unwrap(), x);
            }
        }
    }

    #[test]
    fn composition_ignores_witness_choice() {
        for g in graphs() {
            let s = space(g);
            let filters = enumerate_tight(&s, 2);
            let elems = enumerate_elements(&s, &filters, 2);
            for x in &elems {
                for y in elems.iter().filter(|y| y.eta == x.xi) {
                    let canon = compose(&s, &x.canonical(&s), &y.canonical(&s)).unwrap();
                    assert_eq!(compose(&s, x, y).unwrap(), canon);
                    let mut longer = x.clone();
                    // every longer witness along the common tail works as well
                    for k in 1..=2 {
                        let (a, b) = (&x.witness.0, &x.witness.1);
                        if let (Some(a2), Some(b2)) = (x.eta.prefix_word(a.len() + k), x.xi.prefix_word(b.len() + k)) {
                            if is_witness(&s, &x.eta, &x.xi, &a2, &b2) {
                                longer.witness = (a2, b2);
                                assert_eq!(compose(&s, &longer, y).unwrap(), canon);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn renault_deaconu_agrees_with_definition() {
        for g in graphs() {
            let s = space(g);
            let filters = enumerate_tight(&s, 3);
            for eta in &filters {
                for xi in &filters {
                    for m in 0..=3usize {
                        for n in 0..=3usize {
                            let k = m as i64 - n as i64;
                            if shift_equivalent(&s, eta, m, xi, n) {
                                assert!(find_witness(&s, eta, k, xi).is_some());
                            }
                        }
                    }
                    for k in -3..=3i64 {
                        if let Some((a, b)) = find_witness(&s, eta, k, xi) {
                            assert!(shift_equivalent(&s, eta, a.len(), xi, b.len()));
                        }
                    }
                }
            }
        }
    }
}
