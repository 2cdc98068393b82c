// Raw and normalized areas for every treatment, written as CSV.
//
//     cargo run --example area_report

use std::error::Error;

use origami::{area_calculation, default_aux, embedded_example, write_area_report, AreaReport};

pub fn run_example() -> Result<AreaReport, Box<dyn Error>> {
    let ds = embedded_example();
    Ok(area_calculation(&ds, default_aux(&ds)?)?)
}

fn main() -> Result<(), Box<dyn Error>> {
    let report = run_example()?;
    print!("{}", write_area_report(&report));
    let best = report
        .entries
        .iter()
        .max_by(|a, b| a.normalized_area.total_cmp(&b.normalized_area))
        .expect("non-empty");
    eprintln!(
        "largest area: {} ({:.3})",
        best.object, best.normalized_area
    );
    Ok(())
}
