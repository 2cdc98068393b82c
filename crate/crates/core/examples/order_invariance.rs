// Reordering attributes changes a radar chart's area but not an origami
// plot's.
//
//     cargo run --example order_invariance

use std::error::Error;

use origami::{polygon_area_closed_form, radar_polygon_area};

pub struct Comparison {
    pub radar: [f64; 2],
    pub origami: [f64; 2],
}

pub fn run_example() -> Result<Comparison, Box<dyn Error>> {
    let adjacent = [1.0, 1.0, 0.0, 0.0];
    let alternating = [1.0, 0.0, 1.0, 0.0];
    Ok(Comparison {
        radar: [
            radar_polygon_area(&adjacent)?,
            radar_polygon_area(&alternating)?,
        ],
        origami: [
            polygon_area_closed_form(&adjacent, 0.5)?,
            polygon_area_closed_form(&alternating, 0.5)?,
        ],
    })
}

fn main() -> Result<(), Box<dyn Error>> {
    let c = run_example()?;
    println!("ordering        radar   origami");
    println!("(1, 1, 0, 0)  {:>7.4}  {:>8.4}", c.radar[0], c.origami[0]);
    println!("(1, 0, 1, 0)  {:>7.4}  {:>8.4}", c.radar[1], c.origami[1]);
    Ok(())
}
