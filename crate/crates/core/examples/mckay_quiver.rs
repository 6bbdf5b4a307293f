//! McKay quiver of 1/5(1,1,3) with its skew superpotential and AIR grading.

use prepro::{air_grading, mckay_presentation, skew_superpotential, CyclicGroupSpec};

fn main() -> prepro::Result<()> {
    let spec: CyclicGroupSpec = "5:1,1,3".parse()?;
    let p = mckay_presentation(&spec);
    let q = p.quiver();
    println!("{spec}: {} vertices, {} arrows, {} relations", q.vertex_count(), q.arrow_count(), p.relation_count());

    let w = skew_superpotential(&spec)?;
    println!("superpotential has {} terms", w.term_count());

    let g = air_grading(&spec);
    let ones: Vec<&str> = g.arrows_of_degree(1).into_iter().map(|a| q.arrow(a).label.as_str()).collect();
    println!("AIR degree 1: {}", ones.join(" "));
    Ok(())
}
