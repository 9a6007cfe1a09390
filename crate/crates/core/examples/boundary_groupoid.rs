//! The groupoid of triples `(η, m, ξ)`, germs and the isomorphism `Φ`, and
//! cylinder sets `Z_(α,A,β)`.
//!
//! cargo run --example boundary_groupoid

use labelled_space::filters::enumerate_tight;
use labelled_space::graph::fixtures::g3;
use labelled_space::groupoid::{
    compose, cylinder_member, disjointify, enumerate_elements, germ_equivalent, intersect_cylinders, phi, Cylinder,
    Germ,
};
use labelled_space::{GroupoidElement, LabelledSpace, Result, TightFilter, Triple};

fn main() -> Result<()> {
    let space = LabelledSpace::minimal(g3())?;
    let t = |s: &str| Triple::parse(&space, s);
    let f = |s: &str| TightFilter::parse(&space, s);

    let filters = enumerate_tight(&space, 2);
    let points = enumerate_elements(&space, &filters, 2);
    println!("{} groupoid elements over {} filters:", points.len(), filters.len());
    for x in &points {
        println!("  {}", x.render(&space));
    }

    let x = GroupoidElement::parse(&space, "(e[{3}],-1,a[{3}])")?;
    let y = x.inverse();
    println!("{} . {} = {}", x.render(&space), y.render(&space), compose(&space, &x, &y)?.render(&space));

    let germ = Germ::new(&space, t("(e,{3},a)")?, f("a[{3}]")?)?;
    println!("phi[(e,{{3}},a), a[{{3}}]] = {}", phi(&space, &germ)?.render(&space));
    let g1 = Germ::new(&space, t("(e,{2},a)")?, f("ab[{3}]")?)?;
    let g2 = Germ::new(&space, t("(b,{3},ab)")?, f("ab[{3}]")?)?;
    println!("[(e,{{2}},a), ab[{{3}}]] ~ [(b,{{3}},ab), ab[{{3}}]]: {}", germ_equivalent(&g1, &g2));

    let (z1, z2) = (t("(e,{2,3},e)")?, t("(a,{3},a)")?);
    match intersect_cylinders(&space, &z1, &z2) {
        Some(z) => println!("Z{} ∩ Z{} = Z{}", z1.render(&space), z2.render(&space), z.render(&space)),
        None => println!("disjoint"),
    }
    let parts = disjointify(&space, &[z1.clone(), z2]);
    let rendered: Vec<String> = parts.iter().map(|z| z.render(&space)).collect();
    println!("disjoint pieces: {}", rendered.join(" "));
    let inside = points.iter().filter(|p| cylinder_member(&space, &Cylinder::new(z1.clone()), p)).count();
    println!("{inside} of the enumerated points lie in Z{}", z1.render(&space));
    Ok(())
}
