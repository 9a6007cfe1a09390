//! Exact rational combinations of cylinder indicators: products, the defining
//! relations and equality through normal forms.
//!
//! cargo run --example steinberg_algebra

use labelled_space::algebra::{check_relations, convolution_trials, equals, normal_form, parse_generators};
use labelled_space::graph::fixtures::g3;
use labelled_space::{LabelledSpace, Result};

fn main() -> Result<()> {
    let space = LabelledSpace::minimal(g3())?;
    let x = |s: &str| parse_generators(&space, s);

    for expr in ["S{a} S{b}", "S{b} P{3} S{b}*", "S{a}* S{a}", "S{b}* S{a}", "P{3} S{b}"] {
        println!("{expr:<18} = {}", x(expr)?.render(&space));
    }

    let lhs = x("P{2}")?;
    let rhs = x("S{b} P{3} S{b}*")?;
    println!("P{{2}} == S{{b}} P{{3}} S{{b}}*: {}", equals(&space, &lhs, &rhs));

    let mixed = x("P{2,3}")?.add(&x("S{a} S{b}")?).sub(&rhs);
    let nf = normal_form(&space, &mixed, 0);
    println!("normal form of {} at depth {}:", mixed.render(&space), nf.depth);
    for (t, c) in nf.support() {
        println!("  {c} * {}", t.render(&space));
    }

    let report = check_relations(&space);
    println!("{} ({:?} instances)", report.summary(), report.checked);
    let trials = convolution_trials(&space, 1, 200, 2);
    println!("product vs convolution: {} trials, {} discrepancies", trials.trials, trials.discrepancies);
    Ok(())
}
