//! JSON document and Graphviz output for a graded McKay quiver.

use prepro::io::{dot_export, presentation_document, Document};
use prepro::{air_grading, mckay_presentation, skew_superpotential, CyclicGroupSpec};

fn main() -> prepro::Result<()> {
    let spec: CyclicGroupSpec = "5:1,1,3".parse()?;
    let p = mckay_presentation(&spec);
    let w = skew_superpotential(&spec)?;
    let g = air_grading(&spec);

    let json = presentation_document(&p, Some(&w), Some(&g)).to_json();
    let back = Document::from_json(&json)?;
    assert_eq!(back.to_json(), json);
    println!("{} bytes of JSON", json.len());

    print!("{}", dot_export(p.quiver(), Some(&g)));
    Ok(())
}
