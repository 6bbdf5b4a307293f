//! Koszul space dimensions, the top form, and the Hilbert-series probe.

use prepro::presentations::commutative_polynomial;
use prepro::{koszul_dims, koszulity_probe, mckay_presentation, top_form, TopForm};

fn main() -> prepro::Result<()> {
    let p = commutative_polynomial(3);
    println!("k[x,y,z]: dim K_l = {:?}", koszul_dims(&p, 4).dims());
    if let TopForm::Generator(w) = top_form(&p, 3) {
        println!("top form: {}", p.quiver().format_vector(w.form()));
    }

    let p = mckay_presentation(&"3:1,2".parse()?);
    let table = koszul_dims(&p, 3);
    for row in &table.rows {
        println!("l = {}: dim {}", row.l, row.dim);
    }
    println!("probe: {}", koszulity_probe(&p, 8));
    Ok(())
}
