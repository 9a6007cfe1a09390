//! Relative ranges, the minimal accommodating family and its atoms.
//!
//! cargo run --example labelled_space

use labelled_space::{LabelledGraph, LabelledSpace, Result};

fn main() -> Result<()> {
    // 1 --a--> 2, 1 --a--> 3, 2 --b--> 3
    let g = LabelledGraph::new(&["1", "2", "3"], &[("1", "2", "a"), ("1", "3", "a"), ("2", "3", "b")])?;
    let report = g.validate();
    println!("sinks {}  left-resolving {}", g.render_set(report.sinks), report.left_resolving);

    for w in ["a", "b", "ab"] {
        let word = g.parse_word(w)?;
        let one = g.vertex_set(&["1"])?;
        println!("r({w}) = {}   r({{1}}, {w}) = {}", g.render_set(g.range(&word)), g.render_set(g.relative_range(one, &word)));
    }

    let space = LabelledSpace::minimal(g)?;
    let g = space.graph();
    let members: Vec<String> = space.family().sets().iter().map(|&s| g.render_set(s)).collect();
    println!("minimal family: {}", members.join(" "));

    for w in ["e", "a", "ab"] {
        let word = g.parse_word(w)?;
        let atoms: Vec<String> = space.atoms_of(&word).into_iter().map(|s| g.render_set(s)).collect();
        println!("atoms of B_{w}: {}", atoms.join(" "));
    }

    // two a-edges into z break weak left-resolvability
    let bad = LabelledGraph::new(&["x", "y", "z"], &[("x", "z", "a"), ("y", "z", "a"), ("x", "x", "b"), ("y", "y", "c")])?;
    match LabelledSpace::minimal(bad) {
        Ok(_) => println!("unexpectedly weakly left-resolving"),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
