//! Tensor product of two McKay presentations, shuffled superpotential, and
//! Gorenstein parameters of lifted gradings.

use prepro::{
    air_grading, gorenstein_parameter, lift_grading_sum, mckay_presentation, shuffle_product, skew_superpotential,
    tensor_presentation, CyclicGroupSpec, WeightGrading,
};

fn main() -> prepro::Result<()> {
    let spec: CyclicGroupSpec = "3:1,2".parse()?;
    let p = mckay_presentation(&spec);
    let (t, map) = tensor_presentation(&p, &p);
    let q = t.quiver();
    println!("product: {} vertices, {} arrows, {} relations", q.vertex_count(), q.arrow_count(), t.relation_count());

    let w = skew_superpotential(&spec)?;
    let s = shuffle_product(&w, &w, &map)?;
    println!("shuffle: degree {}, {} terms", s.degree(), s.term_count());

    let air = air_grading(&spec);
    let both = lift_grading_sum(&air, &air, &map);
    let one = lift_grading_sum(&air, &WeightGrading::zero(air.len()), &map);
    println!("AIR + AIR: parameter {:?}", gorenstein_parameter(&t, &s, &both));
    println!("AIR + 0:   parameter {:?}", gorenstein_parameter(&t, &s, &one));
    Ok(())
}
