//! Higher preprojective algebra of the 3-vertex example: new arrows, new
//! relations, and the superpotential whose derivatives recover them.

use prepro::presentations::three_vertex_example;
use prepro::{build_preprojective, derivation_quotient, preprojective_superpotential};

fn main() -> prepro::Result<()> {
    let p = three_vertex_example();
    let pp = build_preprojective(&p, 2)?;
    let q = pp.presentation.quiver();
    for (generator, a) in &pp.new_arrows {
        let arrow = q.arrow(*a);
        let (s, t) = (&q.vertices()[arrow.source].label, &q.vertices()[arrow.target].label);
        println!("{}: {s} -> {t} for {}", arrow.label, q.format_vector(generator));
    }
    for r in &pp.new_relations {
        println!("  {}", q.format_vector(r));
    }

    let w = preprojective_superpotential(&pp)?;
    println!("superpotential: {} terms", w.term_count());
    let dq = derivation_quotient(&w)?;
    println!("derivatives recover the relations: {}", dq.relation_blocks() == pp.presentation.relation_blocks());
    Ok(())
}
