//! Exhaustive {0,1} grading search on 1/3(1,2,1,2), where every candidate
//! has an infinite degree-0 part.

use prepro::grading::Finiteness;
use prepro::{grading_search, mckay_presentation, skew_superpotential, SearchOptions};

fn main() -> prepro::Result<()> {
    let spec = "3:1,2,1,2".parse()?;
    let p = mckay_presentation(&spec);
    let w = skew_superpotential(&spec)?;
    let report = grading_search(&p, &w, &SearchOptions::default())?;
    let q = p.quiver();
    for v in &report.valid {
        let ones: Vec<&str> = v.grading.arrows_of_degree(1).into_iter().map(|a| q.arrow(a).label.as_str()).collect();
        let note = match &v.verdict.degree0_finiteness {
            Some(Finiteness::Infinite { witness, .. }) => format!("cycle {}", q.format_path(witness)),
            Some(f) => format!("{f:?}"),
            None => String::new(),
        };
        println!("degree 1 on {}: {note}", ones.join(" "));
    }
    println!("{}", report.summary);
    Ok(())
}
