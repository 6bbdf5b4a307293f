//! Classification of small cyclic groups in SL(3).

use prepro::classify_group;
use prepro::mckay::specs_in_range;

fn main() {
    for spec in specs_in_range(7, 3) {
        let c = classify_group(&spec);
        let embeds = c.embeds.map_or("?".to_string(), |b| b.to_string());
        println!("{spec:<10} air={:<5} embeds={embeds:<5} {}", c.air, c.verdict);
    }
}
