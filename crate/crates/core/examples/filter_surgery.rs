//! Cutting words off and gluing words onto tight filters, and the shift.
//!
//! cargo run --example filter_surgery

use labelled_space::graph::fixtures::{g1, g3};
use labelled_space::surgery::{cut_filter, f_cut_end, glue_filter, sigma, sigma_pow, Ultrafilter};
use labelled_space::{LabelledSpace, Result, TightFilter};

fn main() -> Result<()> {
    let space = LabelledSpace::minimal(g3())?;
    let g = space.graph();

    // f pulls the ultrafilter {3} over ab back to {2} over a
    let top = Ultrafilter::new(&space, g.parse_word("ab")?, g.vertex_set(&["3"])?)?;
    let pulled = f_cut_end(&space, top.as_ref(), 1)?.expect("nonempty context");
    println!("f_(a[b]) of {{3}} = {}", g.render_set(pulled.atom));

    let xi = TightFilter::parse(&space, "ab[{3}]")?;
    for w in ["e", "a", "ab"] {
        let alpha = g.parse_word(w)?;
        let cut = cut_filter(&space, &alpha, &xi)?;
        let glued = glue_filter(&space, &alpha, &cut)?;
        println!("H_[{w}] {} = {:<8} G_({w}) back = {}", xi.render(&space), cut.render(&space), glued.render(&space));
    }
    match glue_filter(&space, &g.parse_word("b")?, &TightFilter::parse(&space, "b[{3}]")?) {
        Ok(x) => println!("glued: {}", x.render(&space)),
        Err(e) => println!("b cannot be glued onto b[{{3}}]: {e}"),
    }
    println!("sigma {} = {}", xi.render(&space), sigma(&space, &xi)?.render(&space));
    println!("sigma^2 {} = {}", xi.render(&space), sigma_pow(&space, &xi, 2)?.render(&space));

    let loop_space = LabelledSpace::minimal(g1())?;
    let a_inf = TightFilter::parse(&loop_space, "(a)^∞[{v}]")?;
    println!("sigma {} = {}", a_inf.render(&loop_space), sigma(&loop_space, &a_inf)?.render(&loop_space));
    Ok(())
}
