//! Finite rational combinations of cylinder indicators `χ_{Z_(α,A,β)}` with
//! convolution, involution, an exact normal form, and the defining relations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::LabelledSpace;
use crate::filters::{enumerate_tight, finite_top_is_tight, TightFilter};
use crate::graph::VertexSet;
use crate::groupoid::{cylinder_member, enumerate_elements, find_witness, Cylinder, GroupoidElement};
use crate::semigroup::{enumerate_triples, multiply_triples, SemigroupElement, Triple};
use crate::surgery::{cut_filter, glue_filter};
use crate::word::{Letter, Word};

/// `Σ c_t χ_{Z_t}` over nonzero triples with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Triple, BigRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(t: Triple) -> Self {
        Self::from_terms([(t, BigRational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Triple, BigRational)>) -> Self {
        let mut x = Self::zero();
        for (t, c) in terms {
            x.add_term(t, c);
        }
        x
    }

    fn add_term(&mut self, t: Triple, c: BigRational) {
        let entry = self.terms.entry(t).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> &BTreeMap<Triple, BigRational> {
        &self.terms
    }

    /// No terms at all (not the same as denoting the zero function before normalisation).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for (t, c) in &other.terms {
            x.add_term(t.clone(), c.clone());
        }
        x
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Rationals are self-conjugate, so only the triples are starred.
    pub fn star(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(t, c)| (t.star(), c.clone())))
    }

    /// Bilinear extension of `χ_{Z_s} χ_{Z_t} = χ_{Z_{st}}`.
    pub fn multiply(&self, space: &LabelledSpace, other: &Self) -> Self {
        let mut out = Self::zero();
        for (s, c) in &self.terms {
            for (t, d) in &other.terms {
                if let SemigroupElement::Triple(st) = multiply_triples(space, s, t) {
                    out.add_term(st, c * d);
                }
            }
        }
        out
    }

    pub fn render(&self, space: &LabelledSpace) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let body = t.render(space);
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let magnitude = c.abs();
            if magnitude.is_one() {
                out.push_str(&body);
            } else {
                let _ = write!(out, "{magnitude}*{body}");
            }
        }
        out
    }
}

/// `P_A = χ_{Z_(ε,A,ε)}`; `P_∅ = 0`.
pub fn p(space: &LabelledSpace, set: VertexSet) -> Result<AlgebraElement> {
    if set.is_empty() {
        return Ok(AlgebraElement::zero());
    }
    Ok(AlgebraElement::basis(Triple::new(space, Word::empty(), set, Word::empty())?))
}

/// `S_a = χ_{Z_(a,r(a),ε)}`.
pub fn s(space: &LabelledSpace, a: Letter) -> AlgebraElement {
    let w = Word::single(a);
    AlgebraElement::basis(Triple::new(space, w.clone(), space.range(&w), Word::empty()).expect("r(a) is a member"))
}

pub fn s_star(space: &LabelledSpace, a: Letter) -> AlgebraElement {
    s(space, a).star()
}

/// `S_α = S_{α_1} ⋯ S_{α_n}`; `None` for the empty word.
pub fn s_word(space: &LabelledSpace, word: &Word) -> Option<AlgebraElement> {
    word.iter().map(|a| s(space, a)).reduce(|x, y| x.multiply(space, &y))
}

/// `S_α P_A S_β*`, omitting `S_ε`.
pub fn spanning_product(space: &LabelledSpace, t: &Triple) -> Result<AlgebraElement> {
    let mut x = p(space, t.set())?;
    if let Some(sa) = s_word(space, t.left()) {
        x = sa.multiply(space, &x);
    }
    if let Some(sb) = s_word(space, t.right()) {
        x = x.multiply(space, &sb.star());
    }
    Ok(x)
}

/// Parses a product of generators such as `S{b} P{3} S{b}*`.
pub fn parse_generators(space: &LabelledSpace, text: &str) -> Result<AlgebraElement> {
    let g = space.graph();
    let mut rest = text.trim();
    let mut factors = Vec::new();
    while !rest.is_empty() {
        let kind = rest.chars().next().expect("nonempty");
        let close = rest
            .find('}')
            .ok_or_else(|| Error::input(format!("unterminated generator in `{text}`")))?;
        let body = rest[1..=close].trim();
        if !body.starts_with('{') {
            return Err(Error::input(format!("expected `P{{..}}` or `S{{..}}` in `{text}`")));
        }
        rest = &rest[close + 1..];
        let starred = rest.starts_with('*');
        if starred {
            rest = &rest[1..];
        }
        rest = rest.trim_start();
        let factor = match kind {
            'P' if !starred => p(space, g.parse_vertex_set(body)?)?,
            'P' => p(space, g.parse_vertex_set(body)?)?.star(),
            'S' => {
                let inner = body[1..body.len() - 1].trim();
                let mut chars = inner.chars();
                let (Some(ch), None) = (chars.next(), chars.next()) else {
                    return Err(Error::input(format!("`S{{{inner}}}` needs a single letter")));
                };
                let a = g
                    .letter(ch)
                    .ok_or_else(|| Error::input(format!("unknown letter `{ch}`")))?;
                if starred {
                    s_star(space, a)
                } else {
                    s(space, a)
                }
            }
            other => return Err(Error::input(format!("unknown generator `{other}` in `{text}`"))),
        };
        factors.push(factor);
    }
    factors
        .into_iter()
        .reduce(|x, y| x.multiply(space, &y))
        .ok_or_else(|| Error::input("empty generator expression"))
}

/// Value of `x` at a point of `Γ`.
pub fn evaluate(space: &LabelledSpace, x: &AlgebraElement, pt: &GroupoidElement) -> BigRational {
    x.terms
        .iter()
        .filter(|(t, _)| cylinder_member(space, &Cylinder::new((*t).clone()), pt))
        .map(|(_, c)| c.clone())
        .fold(BigRational::zero(), |a, b| a + b)
}

/// One step of the partition of `Z_(α,A,β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    /// `(α, C, β)` for atoms `C ⊆ A` of `B_β` passing the sink condition; each
    /// is the single point `((α,C), |α|−|β|, (β,C))` of finite type.
    pub leaves: Vec<Triple>,
    /// `(αa, r(A,a), βa)` for every letter `a` leaving `A`.
    pub children: Vec<Triple>,
}

pub fn expand_one_step(space: &LabelledSpace, t: &Triple) -> Expansion {
    let (alpha, a_set, beta) = (t.left(), t.set(), t.right());
    let leaves = space
        .atoms_within(a_set)
        .filter(|&c| finite_top_is_tight(space, beta, c))
        .map(|c| Triple::raw(alpha.clone(), c, beta.clone()))
        .collect();
    let children = space
        .graph()
        .letters_from(a_set)
        .into_iter()
        .map(|a| (a, space.graph().relative_range_letter(a_set, a)))
        .filter(|(_, r)| !r.is_empty())
        .map(|(a, r)| Triple::raw(alpha.pushed(a), r, beta.pushed(a)))
        .collect();
    Expansion { leaves, children }
}

/// The point named by a leaf `(α, C, β)`.
pub fn leaf_point(space: &LabelledSpace, leaf: &Triple) -> Result<GroupoidElement> {
    let eta = TightFilter::finite(space, leaf.left().clone(), leaf.set())?;
    let xi = TightFilter::finite(space, leaf.right().clone(), leaf.set())?;
    GroupoidElement::with_witness(space, eta, xi, leaf.left().clone(), leaf.right().clone())
}

/// `x` as a combination of pairwise disjoint nonempty cylinders: finite-type
/// leaves with `|β| < depth`, and atom cells `(α, C, β)` with `|β| = depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub depth: usize,
    pub leaves: BTreeMap<Triple, BigRational>,
    pub cells: BTreeMap<Triple, BigRational>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.leaves.values().chain(self.cells.values()).all(Zero::is_zero)
    }

    /// Nonzero entries of leaves and cells together.
    pub fn support(&self) -> Vec<(Triple, BigRational)> {
        self.leaves
            .iter()
            .chain(&self.cells)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (t.clone(), c.clone()))
            .collect()
    }
}

/// Expands every term until all right words have length `depth` (at least the
/// longest right word present), then splits each cell over the atoms below it.
pub fn normal_form(space: &LabelledSpace, x: &AlgebraElement, depth: usize) -> NormalForm {
    let depth = x.terms.keys().map(|t| t.right().len()).max().unwrap_or(0).max(depth);
    let mut leaves: BTreeMap<Triple, BigRational> = BTreeMap::new();
    let mut cells: BTreeMap<Triple, BigRational> = BTreeMap::new();
    let mut work: Vec<(Triple, BigRational)> = x.terms.iter().map(|(t, c)| (t.clone(), c.clone())).collect();
    while let Some((t, c)) = work.pop() {
        if t.right().len() == depth {
            for atom in space.atoms_within(t.set()) {
                *cells
                    .entry(Triple::raw(t.left().clone(), atom, t.right().clone()))
                    .or_insert_with(BigRational::zero) += &c;
            }
            continue;
        }
        let step = expand_one_step(space, &t);
        for leaf in step.leaves {
            *leaves.entry(leaf).or_insert_with(BigRational::zero) += &c;
        }
        work.extend(step.children.into_iter().map(|child| (child, c.clone())));
    }
    leaves.retain(|_, c| !c.is_zero());
    cells.retain(|_, c| !c.is_zero());
    NormalForm { depth, leaves, cells }
}

/// Exact equality of the functions denoted by `x` and `y`.
pub fn equals(space: &LabelledSpace, x: &AlgebraElement, y: &AlgebraElement) -> bool {
    normal_form(space, &x.sub(y), 0).is_zero()
}

/// `(x * y)(η, n, ξ) = Σ_{(η,m,ζ) ∈ Γ} x(η, m, ζ) y(ζ, n − m, ξ)`, summing over
/// the pairs `(m, ζ)` read off the terms of `x`.
pub fn convolve_pointwise(space: &LabelledSpace, x: &AlgebraElement, y: &AlgebraElement, pt: &GroupoidElement) -> BigRational {
    let eta = pt.eta();
    let mut candidates: BTreeSet<(i64, TightFilter)> = BTreeSet::new();
    for t in x.terms.keys() {
        if let Ok(cut) = cut_filter(space, t.left(), eta) {
            if let Ok(zeta) = glue_filter(space, t.right(), &cut) {
                candidates.insert((t.degree(), zeta));
            }
        }
    }
    let mut total = BigRational::zero();
    for (m, zeta) in candidates {
        let Some((a, b)) = find_witness(space, eta, m, &zeta) else { continue };
        let left = GroupoidElement::with_witness(space, eta.clone(), zeta.clone(), a, b).expect("witness found");
        let Ok(right) = GroupoidElement::new(space, zeta, pt.m() - m, pt.xi().clone()) else { continue };
        total += evaluate(space, x, &left) * evaluate(space, y, &right);
    }
    total
}

/// Outcome of checking the four families of relations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Instances checked and failures, per relation family (i)–(iv).
    pub checked: [usize; 4],
    pub failures: [Vec<String>; 4],
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.iter().all(Vec::is_empty)
    }

    pub fn summary(&self) -> String {
        let names = ["i", "ii", "iii", "iv"];
        let parts: Vec<String> = names
            .iter()
            .zip(&self.failures)
            .map(|(n, f)| format!("{n} {}", if f.is_empty() { "OK" } else { "FAIL" }))
            .collect();
        format!("relations: {}", parts.join(", "))
    }
}

/// Checks (i) `P_{A∩B} = P_A P_B`, `P_{A∪B} = P_A + P_B − P_{A∩B}`, `P_∅ = 0`;
/// (ii) `P_A S_a = S_a P_{r(A,a)}`; (iii) `S_a* S_a = P_{r(a)}`, `S_b* S_a = 0`
/// for `b ≠ a`; (iv) `P_A = Σ_{a ∈ L(AE^1)} S_a P_{r(A,a)} S_a*` whenever
/// `0 < |L(AE^1)| < ∞` and no nonempty member lies in `A ∩ E^0_sink`.
pub fn check_relations(space: &LabelledSpace) -> RelationReport {
    let g = space.graph();
    let mut report = RelationReport::default();
    let sets = space.family().sets();
    let pp = |a: VertexSet| p(space, a).expect("family member");
    let mut record = |idx: usize, ok: bool, what: String| {
        report.checked[idx] += 1;
        if !ok {
            report.failures[idx].push(what);
        }
    };

    record(0, equals(space, &pp(VertexSet::EMPTY), &AlgebraElement::zero()), "P_{} = 0".into());
    for &a in sets {
        for &b in sets {
            let (ra, rb) = (g.render_set(a), g.render_set(b));
            let meet = pp(a.intersection(b));
            record(0, equals(space, &meet, &pp(a).multiply(space, &pp(b))), format!("P_{ra} P_{rb}"));
            let join = pp(a).add(&pp(b)).sub(&meet);
            record(0, equals(space, &pp(a.union(b)), &join), format!("P_{ra}∪{rb}"));
        }
    }
    for &a in sets {
        for l in g.alphabet() {
            let lhs = pp(a).multiply(space, &s(space, l));
            let rhs = s(space, l).multiply(space, &pp(g.relative_range_letter(a, l)));
            record(1, equals(space, &lhs, &rhs), format!("P_{} S_{}", g.render_set(a), g.letter_name(l)));
        }
    }
    for a in g.alphabet() {
        for b in g.alphabet() {
            let lhs = s_star(space, b).multiply(space, &s(space, a));
            let rhs = if a == b { pp(space.range(&Word::single(a))) } else { AlgebraElement::zero() };
            record(2, equals(space, &lhs, &rhs), format!("S_{}* S_{}", g.letter_name(b), g.letter_name(a)));
        }
    }
    let sinks = g.sinks();
    for &a in sets {
        let letters = g.letters_from(a);
        // the alphabet is finite, so the upper bound always holds
        let finitely_many = true;
        let sink_member = sets.iter().any(|b| !b.is_empty() && b.is_subset(a.intersection(sinks)));
        if letters.is_empty() || !finitely_many || sink_member {
            continue;
        }
        let sum = letters.iter().fold(AlgebraElement::zero(), |acc, &l| {
            let term = s(space, l)
                .multiply(space, &pp(g.relative_range_letter(a, l)))
                .multiply(space, &s_star(space, l));
            acc.add(&term)
        });
        record(3, equals(space, &pp(a), &sum), format!("P_{} expansion", g.render_set(a)));
    }
    report
}

/// Tally of seeded `multiply` versus `convolve_pointwise` comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TrialReport {
    pub trials: usize,
    pub discrepancies: usize,
}

/// A random combination of one to three cylinders with words of length at most
/// `n` and small nonzero rational coefficients.
pub fn random_element<R: Rng>(space: &LabelledSpace, rng: &mut R, n: usize) -> AlgebraElement {
    let triples = enumerate_triples(space, n);
    let k = rng.gen_range(1..=3);
    AlgebraElement::from_terms((0..k).filter_map(|_| {
        let t = triples.choose(rng)?.clone();
        let num = *[-3i64, -2, -1, 1, 2, 3].choose(rng)?;
        let den = rng.gen_range(1i64..=2);
        Some((t, BigRational::new(num.into(), den.into())))
    }))
}

/// Compares `(x y)(pt)` with the convolution sum at `trials` random triples
/// `(x, y, pt)`; points range over the fragment of `Γ` seen at depth `n`.
pub fn convolution_trials(space: &LabelledSpace, seed: u64, trials: usize, n: usize) -> TrialReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let filters = enumerate_tight(space, n + 1);
    let points = enumerate_elements(space, &filters, n);
    let mut report = TrialReport::default();
    if points.is_empty() {
        return report;
    }
    for _ in 0..trials {
        let x = random_element(space, &mut rng, n.min(2));
        let y = random_element(space, &mut rng, n.min(2));
        let pt = points.choose(&mut rng).expect("nonempty");
        report.trials += 1;
        if evaluate(space, &x.multiply(space, &y), pt) != convolve_pointwise(space, &x, &y, pt) {
            report.discrepancies += 1;
        }
    }
    report
}
