//! Acceptance criteria 1–7 on the three reference graphs and 25 seeded random
//! weakly left-resolving graphs. Prints one PASS/FAIL line per criterion.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use labelled_space::algebra::{
    check_relations, convolve_pointwise, equals, evaluate, parse_generators, spanning_product, AlgebraElement,
};
use labelled_space::filters::{contains, enumerate_tight, TightFilter};
use labelled_space::graph::fixtures::{g1, g2, g3};
use labelled_space::groupoid::{
    compose, cylinder_member, disjointify, enumerate_elements, enumerate_germs, find_witness, fiber_product_member,
    germ_equivalent, germ_equivalent_by_definition, germ_product, intersect_cylinders, phi, phi_preimage, Cylinder,
    GroupoidElement,
};
use labelled_space::semigroup::{enumerate_triples, multiply, natural_leq, SemigroupElement, Triple};
use labelled_space::surgery::{cut_filter, f_cut_end, g_glue, glue_filter, h_cut, sigma, Ultrafilter};
use labelled_space::{LabelledGraph, LabelledSpace, VertexSet, Word};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_GRAPHS: usize = 25;
const SEED: u64 = 0x5eed;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Log + 'a>);

struct Case {
    name: String,
    space: LabelledSpace,
    /// Triples with words of length ≤ 2.
    triples: Vec<Triple>,
    /// Tight filters at bounds 3 and 4.
    filters: Vec<TightFilter>,
    filters_next: Vec<TightFilter>,
    /// Groupoid elements over `filters` with witnesses of length ≤ 2.
    points: Vec<GroupoidElement>,
}

impl Case {
    fn new(name: impl Into<String>, g: LabelledGraph) -> Case {
        let space = LabelledSpace::minimal(g).expect("weakly left-resolving");
        let filters = enumerate_tight(&space, 3);
        Case {
            name: name.into(),
            triples: enumerate_triples(&space, 2),
            filters_next: enumerate_tight(&space, 4),
            points: enumerate_elements(&space, &filters, 2),
            filters,
            space,
        }
    }

    fn idempotents(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter().filter(|t| t.is_idempotent())
    }
}

/// Failure log for one criterion; keeps the first few messages.
#[derive(Default)]
struct Log {
    failures: usize,
    checks: usize,
    first: Vec<String>,
}

impl Log {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.len() < 5 {
                self.first.push(what());
            }
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng) -> Option<LabelledGraph> {
    let n = rng.gen_range(2..=5);
    let k = rng.gen_range(1..=3u8);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = BTreeSet::new();
    for s in 0..n {
        for l in 0..k {
            let label = ((b'a' + l) as char).to_string();
            if rng.gen_bool(0.45) {
                edges.insert((names[s].clone(), names[rng.gen_range(0..n)].clone(), label.clone()));
            }
            if rng.gen_bool(0.15) {
                edges.insert((names[s].clone(), names[rng.gen_range(0..n)].clone(), label));
            }
        }
    }
    if edges.is_empty() {
        return None;
    }
    let edges: Vec<(String, String, String)> = edges.into_iter().collect();
    let g = LabelledGraph::new(&names, &edges).ok()?;
    LabelledSpace::minimal(g.clone()).ok().map(|_| g)
}

fn cases() -> Vec<Case> {
    let mut out = vec![Case::new("G1", g1()), Case::new("G2", g2()), Case::new("G3", g3())];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    while out.len() < 3 + RANDOM_GRAPHS {
        if let Some(g) = random_graph(&mut rng) {
            let name = format!("random#{}", out.len() - 3);
            out.push(Case::new(name, g));
        }
    }
    out
}

/// `(α,A,α) ≤ (β,B,β)` iff `α = βα′` and `A ⊆ r(B, α′)`.
fn idempotent_leq_oracle(space: &LabelledSpace, p: &Triple, q: &Triple) -> bool {
    match p.left().strip_prefix(q.left()) {
        Some(rest) => p.set().is_subset(space.relative_range(q.set(), &rest)),
        None => false,
    }
}

fn criterion_1(cases: &[Case]) -> Log {
    let mut log = Log::default();
    for c in cases {
        let s = &c.space;
        let elems: Vec<SemigroupElement> = std::iter::once(SemigroupElement::Zero)
            .chain(c.triples.iter().cloned().map(SemigroupElement::Triple))
            .collect();
        let products: Vec<Vec<SemigroupElement>> =
            elems.iter().map(|x| elems.iter().map(|y| multiply(s, x, y)).collect()).collect();
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                let xy = &products[i][j];
                for (k, z) in elems.iter().enumerate() {
                    let ok = multiply(s, xy, z) == multiply(s, x, &products[j][k]);
                    log.check(ok, || format!("{}: associativity fails at {x:?} {y:?} {z:?}", c.name));
                }
                log.check(xy.star() == multiply(s, &y.star(), &x.star()), || format!("{}: (xy)* at {x:?} {y:?}", c.name));
            }
            let xsx = multiply(s, &multiply(s, x, &x.star()), x);
            log.check(xsx == *x, || format!("{}: s s* s ≠ s for {x:?}", c.name));
        }
        let ids: Vec<SemigroupElement> = c.idempotents().cloned().map(SemigroupElement::Triple).collect();
        for e in &ids {
            for f in &ids {
                let ef = multiply(s, e, f);
                log.check(ef == multiply(s, f, e), || format!("{}: idempotents do not commute", c.name));
                let leq = natural_leq(e, f, s).expect("idempotents");
                let (et, ft) = (e.as_triple().unwrap(), f.as_triple().unwrap());
                log.check(leq == (ef == *e), || format!("{}: order criterion at {et:?} {ft:?}", c.name));
                log.check(leq == idempotent_leq_oracle(s, et, ft), || format!("{}: order oracle at {et:?} {ft:?}", c.name));
            }
        }
        // E*-unitary: a nonzero idempotent below s forces s to be idempotent
        for t in &c.triples {
            let st = SemigroupElement::Triple(t.clone());
            for e in &ids {
                if multiply(s, &st, e) == *e {
                    log.check(t.is_idempotent(), || format!("{}: {t:?} lies above an idempotent", c.name));
                }
            }
        }
    }
    log
}

/// Brute-force level `n` of a tight filter: the least `A ∈ B_{α_{1,n}}` with
/// `(α_{1,n}, A, α_{1,n}) ∈ ξ`, and the whole member set.
fn level_oracle(space: &LabelledSpace, xi: &TightFilter, n: usize) -> (Option<VertexSet>, BTreeSet<VertexSet>) {
    let w = xi.prefix_word(n).expect("long enough");
    let bound = if w.is_empty() { space.graph().all_vertices() } else { space.range(&w) };
    let members: BTreeSet<VertexSet> = space
        .family()
        .sets()
        .iter()
        .copied()
        .filter(|a| !a.is_empty() && a.is_subset(bound))
        .filter(|&a| contains(space, xi, &Triple::new(space, w.clone(), a, w.clone()).unwrap()).unwrap())
        .collect();
    (members.iter().copied().reduce(VertexSet::intersection), members)
}

fn criterion_2(cases: &[Case]) -> Log {
    let mut log = Log::default();
    let counts = [("G1", 1usize, false), ("G2", 2, true), ("G3", 4, true)];
    for (c, (name, expected, finite)) in cases.iter().zip(counts) {
        let found = enumerate_tight(&c.space, 2);
        log.check(c.name == name && found.len() == expected, || format!("{name}: {} tight filters at depth 2", found.len()));
        log.check(found.iter().all(|x| x.is_finite() == finite), || format!("{name}: wrong filter types"));
    }
    for c in cases {
        let s = &c.space;
        let ids: Vec<&Triple> = c.idempotents().collect();
        for xi in &c.filters {
            let inside: Vec<&Triple> = ids.iter().copied().filter(|e| contains(s, xi, e).unwrap()).collect();
            let inside_set: BTreeSet<&Triple> = inside.iter().copied().collect();
            log.check(!inside.is_empty(), || format!("{}: {xi:?} contains no idempotent", c.name));
            for e in &inside {
                for f in &ids {
                    if idempotent_leq_oracle(s, e, f) {
                        log.check(inside_set.contains(f), || format!("{}: {xi:?} not upward closed", c.name));
                    }
                }
                for f in &inside {
                    let ok = match multiply(s, &SemigroupElement::Triple((*e).clone()), &SemigroupElement::Triple((*f).clone())) {
                        SemigroupElement::Triple(ef) => contains(s, xi, &ef).unwrap(),
                        SemigroupElement::Zero => false,
                    };
                    log.check(ok, || format!("{}: {xi:?} not closed under meets", c.name));
                }
            }
            // levels are ultrafilters linked by relative ranges
            let top = xi.word_len().unwrap_or(4).min(4);
            let mut previous: Option<BTreeSet<VertexSet>> = None;
            for n in 0..=top {
                let (least, members) = level_oracle(s, xi, n);
                let level = xi.level(s, n).unwrap();
                log.check(level == least, || format!("{}: level {n} of {xi:?}", c.name));
                let w = xi.prefix_word(n).unwrap();
                if let Some(atom) = least {
                    log.check(n == 0 || s.is_atom_of(atom, &w), || format!("{}: level {n} of {xi:?} not an atom", c.name));
                } else {
                    log.check(n == 0, || format!("{}: empty level {n} of {xi:?}", c.name));
                }
                if let Some(prev) = &previous {
                    let a = Word::single(xi.letter(n - 1).unwrap());
                    let below = xi.prefix_word(n - 1).unwrap();
                    let bound = if below.is_empty() { s.graph().all_vertices() } else { s.range(&below) };
                    for &set in s.family().sets().iter().filter(|x| !x.is_empty() && x.is_subset(bound)) {
                        let r = s.relative_range(set, &a);
                        log.check(prev.contains(&set) == members.contains(&r), || {
                            format!("{}: propagation at level {n} of {xi:?}", c.name)
                        });
                    }
                }
                previous = Some(members);
            }
        }
    }
    log
}

fn criterion_3(cases: &[Case]) -> Log {
    let mut log = Log::default();
    for c in cases {
        let s = &c.space;
        let words = s.graph().labelled_paths_up_to(3);
        for xi in &c.filters {
            for k in 0..=3 {
                let Some(alpha) = xi.prefix_word(k) else { break };
                let cut = cut_filter(s, &alpha, xi).unwrap();
                log.check(glue_filter(s, &alpha, &cut).as_ref() == Ok(xi), || format!("{}: G∘H at {xi:?}", c.name));
                for j in 0..=k {
                    let (a1, a2) = (alpha.prefix(j), alpha.suffix_from(j));
                    let two = cut_filter(s, &a1, xi).and_then(|y| cut_filter(s, &a2, &y));
                    log.check(two.as_ref() == Ok(&cut), || format!("{}: H composition at {xi:?}", c.name));
                }
            }
        }
        for zeta in &c.filters {
            for alpha in &words {
                let glued = glue_filter(s, alpha, zeta);
                if let Ok(x) = &glued {
                    log.check(cut_filter(s, alpha, x).as_ref() == Ok(zeta), || format!("{}: H∘G at {zeta:?}", c.name));
                }
                for j in 0..=alpha.len() {
                    let (a1, a2) = (alpha.prefix(j), alpha.suffix_from(j));
                    let two = glue_filter(s, &a2, zeta).and_then(|y| glue_filter(s, &a1, &y));
                    log.check(two.ok() == glued.clone().ok(), || format!("{}: G composition at {zeta:?}", c.name));
                }
            }
        }
        // ultrafilter lemmas over every word of length ≤ 3
        for w in &words {
            let rw = s.range(w);
            for atom in s.atoms_of(w) {
                let f = Ultrafilter::new(s, w.clone(), atom).unwrap();
                if let Some(a) = w.first() {
                    let a = Word::single(a);
                    let h = h_cut(s, &a, f.as_ref()).unwrap();
                    for set in s.family().within(rw) {
                        log.check(f.contains(set) == h.contains(set), || format!("{}: h lemma over {w:?}", c.name));
                    }
                }
                for letter in s.graph().alphabet() {
                    let a = Word::single(letter);
                    if let Ok(glued) = g_glue(s, &a, f.as_ref()) {
                        let r = s.range(&a.concat(w));
                        let bound = if w.is_empty() { s.graph().all_vertices() } else { rw };
                        for set in s.family().within(bound) {
                            let ok = f.contains(set) == glued.contains(set.intersection(r));
                            log.check(ok, || format!("{}: g lemma over {w:?}", c.name));
                        }
                    }
                }
                for j in 0..=w.len() {
                    let direct = f_cut_end(s, f.as_ref(), j).unwrap();
                    // literal: the least A ∈ B_α with r(A, β) ∈ F
                    let (alpha, beta) = (w.prefix(j), w.suffix_from(j));
                    let bound = if alpha.is_empty() { s.graph().all_vertices() } else { s.range(&alpha) };
                    let literal = s
                        .family()
                        .within(bound)
                        .filter(|x| f.contains(s.relative_range(*x, &beta)))
                        .reduce(VertexSet::intersection)
                        .filter(|x| !x.is_empty());
                    log.check(direct.as_ref().map(|u| u.atom) == literal, || format!("{}: f literal over {w:?}", c.name));
                    for i in 0..=j {
                        let via = f_cut_end(s, f.as_ref(), j)
                            .unwrap()
                            .map(|mid| f_cut_end(s, mid.as_ref(), i).unwrap());
                        let once = f_cut_end(s, f.as_ref(), i).unwrap();
                        let ok = match via {
                            Some(v) => v == once,
                            None => i == 0 && once.is_none(),
                        };
                        log.check(ok, || format!("{}: f composition over {w:?} at {i},{j}", c.name));
                    }
                }
            }
        }
        // σ restricted to words beginning with a is a bijection onto the domain of G_(a)
        let within: BTreeSet<&TightFilter> = c.filters.iter().collect();
        let next: BTreeSet<&TightFilter> = c.filters_next.iter().collect();
        for letter in s.graph().alphabet() {
            let a = Word::single(letter);
            let mut images = BTreeMap::new();
            for xi in c.filters_next.iter().filter(|x| x.letter(0) == Some(letter)) {
                let y = sigma(s, xi).unwrap();
                log.check(glue_filter(s, &a, &y).as_ref() == Ok(xi), || format!("{}: σ not invertible at {xi:?}", c.name));
                if within.contains(&y) {
                    let prior = images.insert(y, xi);
                    log.check(prior.is_none(), || format!("{}: σ_a not injective", c.name));
                }
            }
            for zeta in &c.filters {
                if let Ok(x) = glue_filter(s, &a, zeta) {
                    log.check(next.contains(&x), || format!("{}: G_(a) leaves the enumeration", c.name));
                    log.check(images.get(zeta) == Some(&&x), || format!("{}: σ_a misses {zeta:?}", c.name));
                }
            }
        }
    }
    log
}

fn criterion_4(cases: &[Case]) -> Log {
    let mut log = Log::default();
    for c in cases {
        let s = &c.space;
        let germs = enumerate_germs(s, &c.triples, &c.filters);
        let images: Vec<GroupoidElement> = germs.iter().map(|g| phi(s, g).unwrap()).collect();
        let mut by_xi: BTreeMap<&TightFilter, Vec<usize>> = BTreeMap::new();
        for (i, g) in germs.iter().enumerate() {
            by_xi.entry(g.xi()).or_default().push(i);
        }
        for idx in by_xi.values() {
            for &i in idx {
                for &j in idx {
                    let eq = germ_equivalent(&germs[i], &germs[j]);
                    log.check(eq == (images[i] == images[j]), || {
                        format!("{}: Φ not well defined or not injective at {:?} {:?}", c.name, germs[i], germs[j])
                    });
                    if i < j {
                        let def = germ_equivalent_by_definition(s, &germs[i], &germs[j], 3);
                        log.check(eq == def, || format!("{}: germ equivalence vs definition", c.name));
                    }
                }
            }
        }
        for x in &c.points {
            let ok = phi_preimage(s, x).and_then(|g| phi(s, &g)).map(|y| y == *x).unwrap_or(false);
            log.check(ok, || format!("{}: no preimage for {x:?}", c.name));
        }
        for (j, g2) in germs.iter().enumerate() {
            let Some(partners) = by_xi.get(images[j].eta()) else { continue };
            for &i in partners {
                let product = germ_product(s, &germs[i], g2);
                let ok = match product {
                    Ok(Some(p)) => {
                        let lhs = phi(s, &p).unwrap();
                        compose(s, &images[i], &images[j]).map(|r| r == lhs).unwrap_or(false)
                    }
                    _ => false,
                };
                log.check(ok, || format!("{}: Φ not multiplicative at {:?} {:?}", c.name, germs[i], g2));
            }
        }
        // Γ membership against σ^k η = σ^l ξ
        const K: usize = 16;
        let shifts: Vec<Vec<Option<TightFilter>>> = c
            .filters
            .iter()
            .map(|xi| {
                let mut out = vec![Some(xi.clone())];
                for _ in 0..K {
                    let next = out.last().unwrap().as_ref().and_then(|y| sigma(s, y).ok());
                    out.push(next);
                }
                out
            })
            .collect();
        for (p, eta) in c.filters.iter().enumerate() {
            for (q, xi) in c.filters.iter().enumerate() {
                for m in -3i64..=3 {
                    let oracle = (0..=K).any(|k| {
                        let l = k as i64 - m;
                        (0..=K as i64).contains(&l)
                            && shifts[p][k].is_some()
                            && shifts[p][k] == shifts[q][l as usize]
                    });
                    let found = find_witness(s, eta, m, xi);
                    log.check(found.is_some() == oracle, || format!("{}: Γ membership of ({eta:?},{m},{xi:?})", c.name));
                }
            }
        }
        for x in &c.points {
            let (alpha, beta) = x.witness();
            let top = |w: &Word| {
                let r = if w.is_empty() { s.graph().all_vertices() } else { s.range(w) };
                s.family().contains(r).then(|| Triple::new(s, w.clone(), r, w.clone()).unwrap())
            };
            if let (Some(ex), Some(ey)) = (top(alpha), top(beta)) {
                let ok = fiber_product_member(s, (&ex, &[]), (&ey, &[]), alpha.len(), beta.len(), x);
                log.check(ok, || format!("{}: fiber product misses {x:?}", c.name));
            }
        }
    }
    log
}

type Bits = Vec<u64>;

fn membership(s: &LabelledSpace, points: &[GroupoidElement], t: &Triple) -> Bits {
    let mut bits = vec![0u64; points.len().div_ceil(64)];
    let z = Cylinder::new(t.clone());
    for (i, p) in points.iter().enumerate() {
        if cylinder_member(s, &z, p) {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

fn and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn or(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn is_empty(a: &Bits) -> bool {
    a.iter().all(|&x| x == 0)
}

fn criterion_5(cases: &[Case]) -> Log {
    let mut log = Log::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for c in cases {
        let s = &c.space;
        let mut memo: HashMap<Triple, Bits> = c.triples.iter().map(|t| (t.clone(), membership(s, &c.points, t))).collect();
        let mut bits = |t: &Triple| -> Bits { memo.entry(t.clone()).or_insert_with(|| membership(s, &c.points, t)).clone() };
        let check_disjoint = |log: &mut Log, zs: &[Triple], bits: &mut dyn FnMut(&Triple) -> Bits| {
            let out = disjointify(s, zs);
            let out_bits: Vec<Bits> = out.iter().map(&mut *bits).collect();
            for i in 0..out_bits.len() {
                for j in i + 1..out_bits.len() {
                    log.check(is_empty(&and(&out_bits[i], &out_bits[j])), || format!("{}: disjointify overlaps on {zs:?}", c.name));
                }
            }
            let zero = vec![0u64; c.points.len().div_ceil(64)];
            let before = zs.iter().map(&mut *bits).fold(zero.clone(), |a, b| or(&a, &b));
            let after = out_bits.iter().fold(zero, |a, b| or(&a, b));
            log.check(before == after, || format!("{}: disjointify changes the union of {zs:?}", c.name));
        };
        for t1 in &c.triples {
            for t2 in &c.triples {
                let both = and(&bits(t1), &bits(t2));
                match intersect_cylinders(s, t1, t2) {
                    Some(t) => log.check(bits(&t) == both, || format!("{}: Z{t1:?} ∩ Z{t2:?}", c.name)),
                    None => log.check(is_empty(&both), || format!("{}: Z{t1:?} ∩ Z{t2:?} is not empty", c.name)),
                }
                check_disjoint(&mut log, &[t1.clone(), t2.clone()], &mut bits);
            }
        }
        for _ in 0..200 {
            let k = rng.gen_range(3..=4);
            let zs: Vec<Triple> = (0..k).map(|_| c.triples.choose(&mut rng).unwrap().clone()).collect();
            check_disjoint(&mut log, &zs, &mut bits);
        }
    }
    log
}

fn random_element(c: &Case, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let k = rng.gen_range(1..=3);
    AlgebraElement::from_terms((0..k).map(|_| {
        let t = c.triples.choose(rng).unwrap().clone();
        let num: i64 = *[-2, -1, 1, 2, 3].choose(rng).unwrap();
        (t, BigRational::new(num.into(), rng.gen_range(1i64..=3).into()))
    }))
}

fn criterion_6(cases: &[Case]) -> Log {
    let mut log = Log::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for c in cases {
        let s = &c.space;
        let report = check_relations(s);
        log.check(report.all_pass(), || format!("{}: {}: {:?}", c.name, report.summary(), report.failures));
        for t in &c.triples {
            let x = spanning_product(s, t).unwrap();
            let basis = AlgebraElement::basis(t.clone());
            log.check(x == basis && equals(s, &x, &basis), || format!("{}: S_α P_A S_β* ≠ χ_Z for {t:?}", c.name));
        }
        let mut trials = 0;
        while trials < 100 && !c.points.is_empty() {
            let (x, y) = (random_element(c, &mut rng), random_element(c, &mut rng));
            let pt = c.points.choose(&mut rng).unwrap();
            trials += 1;
            let lhs = evaluate(s, &x.multiply(s, &y), pt);
            log.check(lhs == convolve_pointwise(s, &x, &y, pt), || format!("{}: product vs convolution", c.name));
        }
        log.check(trials >= 100, || format!("{}: no points to sample", c.name));
        if c.name == "G3" {
            let lhs = parse_generators(s, "P{2}").unwrap();
            let rhs = parse_generators(s, "S{b} P{3} S{b}*").unwrap();
            log.check(equals(s, &lhs, &rhs), || "G3: P_{2} ≠ S_b P_{3} S_b*".into());
        }
    }
    log
}

fn lspace(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lspace"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn criterion_7() -> Log {
    let mut log = Log::default();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/golden");
    for g in ["g1", "g2", "g3"] {
        for cmd in ["tight", "family", "algebra-check"] {
            let expected = std::fs::read_to_string(golden.join(format!("{g}.{cmd}.txt"))).unwrap_or_default();
            let path = format!("fixtures/{g}.json");
            let (a, b) = (lspace(&[cmd, &path]), lspace(&[cmd, &path]));
            log.check(a == b && a.0 == 0 && a.1 == expected, || format!("{cmd} on {g} differs from golden"));
        }
    }
    for bad in ["fixtures/malformed.json", "fixtures/bad_vertex.json", "fixtures/open_family.json", "fixtures/absent.json"] {
        let (code, out, err) = lspace(&["validate", bad]);
        log.check(code == 2 && out.is_empty() && err.contains("error"), || format!("{bad}: exit {code}"));
    }
    log
}

fn main() {
    // `cargo test` passes harness flags such as `--list`; there is one fixed suite
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let start = Instant::now();
    let cases = cases();
    println!("acceptance: {} graphs prepared in {:.2?}", cases.len(), start.elapsed());
    let criteria: [Criterion<'_>; 7] = [
        ("semigroup laws", Box::new(|| criterion_1(&cases))),
        ("filter correspondence", Box::new(|| criterion_2(&cases))),
        ("surgery", Box::new(|| criterion_3(&cases))),
        ("groupoid isomorphism", Box::new(|| criterion_4(&cases))),
        ("cylinder calculus", Box::new(|| criterion_5(&cases))),
        ("algebra", Box::new(|| criterion_6(&cases))),
        ("cli", Box::new(criterion_7)),
    ];
    let mut failed = false;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let log = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run)).unwrap_or_else(|_| Log {
            failures: 1,
            checks: 1,
            first: vec!["panicked".into()],
        });
        let verdict = if log.failures == 0 { "PASS" } else { "FAIL" };
        failed |= log.failures > 0;
        println!(
            "criterion {} ({name}): {verdict} [{} checks, {} failures, {:.2?}]",
            k + 1,
            log.checks,
            log.failures,
            t.elapsed()
        );
        for f in &log.first {
            println!("    {f}");
        }
    }
    println!("acceptance: total {:.2?}", start.elapsed());
    if failed {
        std::process::exit(1);
    }
}
