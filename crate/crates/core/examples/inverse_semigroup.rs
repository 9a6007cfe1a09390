//! Products, involution and the natural order on triples `(α, A, β)`.
//!
//! cargo run --example inverse_semigroup

use labelled_space::graph::fixtures::g3;
use labelled_space::semigroup::{enumerate_idempotents, multiply, natural_leq};
use labelled_space::{LabelledSpace, Result, SemigroupElement};

fn main() -> Result<()> {
    let space = LabelledSpace::minimal(g3())?;
    let parse = |t: &str| SemigroupElement::parse(&space, t);

    for (s, t) in [("(a,{2},e)", "(b,{3},e)"), ("(e,{3},e)", "(b,{3},e)"), ("(e,{2,3},a)", "(a,{3},b)")] {
        let p = multiply(&space, &parse(s)?, &parse(t)?);
        println!("{s} * {t} = {}", p.render(&space));
    }

    let s = parse("(ab,{3},e)")?;
    let back = multiply(&space, &multiply(&space, &s, &s.star()), &s);
    println!("s = {}  s* = {}  s s* s = {}", s.render(&space), s.star().render(&space), back.render(&space));

    let ids = enumerate_idempotents(&space, 1);
    println!("idempotents with words of length <= 1, and the order among them:");
    for p in &ids {
        let above: Vec<String> = ids
            .iter()
            .filter(|q| *q != p)
            .filter(|q| {
                let (p, q) = (SemigroupElement::Triple((*p).clone()), SemigroupElement::Triple((*q).clone()));
                natural_leq(&p, &q, &space).unwrap_or(false)
            })
            .map(|q| q.render(&space))
            .collect();
        println!("  {} <= {}", p.render(&space), if above.is_empty() { "-".into() } else { above.join(", ") });
    }
    Ok(())
}
