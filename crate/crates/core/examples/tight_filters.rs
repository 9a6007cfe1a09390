//! The tight spectrum: finite-type filters `word[atom]` and eventually periodic
//! infinite-type filters, with their levels and membership.
//!
//! cargo run --example tight_filters

use labelled_space::filters::{contains, enumerate_tight};
use labelled_space::graph::fixtures::{g1, g3};
use labelled_space::{LabelledGraph, LabelledSpace, Result, TightFilter, Triple};

fn show(name: &str, space: &LabelledSpace, depth: usize) {
    let filters = enumerate_tight(space, depth);
    println!("{name}: {} tight filters up to depth {depth}", filters.len());
    for xi in &filters {
        let levels: Vec<String> = xi
            .levels(space, 3)
            .into_iter()
            .map(|l| l.map_or("-".to_string(), |s| space.graph().render_set(s)))
            .collect();
        println!("  {:<24} levels {}", xi.render(space), levels.join(" "));
    }
}

fn main() -> Result<()> {
    show("G1", &LabelledSpace::minimal(g1())?, 2);
    let g3 = LabelledSpace::minimal(g3())?;
    show("G3", &g3, 2);

    // x loops on a, and x <-> y alternate b then c
    let two_cycle = LabelledGraph::new(&["x", "y"], &[("x", "x", "a"), ("x", "y", "b"), ("y", "x", "c")])?;
    show("two cycles", &LabelledSpace::minimal(two_cycle)?, 2);

    let xi = TightFilter::parse(&g3, "ab[{3}]")?;
    for e in ["(a,{2},a)", "(a,{3},a)", "(e,{2,3},e)", "(b,{3},b)"] {
        println!("{e} in ab[{{3}}]: {}", contains(&g3, &xi, &Triple::parse(&g3, e)?)?);
    }
    Ok(())
}
