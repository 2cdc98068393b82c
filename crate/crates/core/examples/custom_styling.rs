// Reading a CSV on a 0..10 scale and restyling the chart: labels around
// the rim, hatched fill, dotted grid and an explicit auxiliary radius.
//
//     cargo run --example custom_styling [out_dir]

use std::error::Error;
use std::path::{Path, PathBuf};

use origami::render::{AxisType, LineType, OptionsPatch};
use origami::{read_dataset, render_pairwise, AuxiliaryConfig, RenderOptions};

const RATINGS: &str = "\
hospital,safety,access,cost,outcomes,experience,staffing
North,8,6,4,9,7,5
South,5,9,7,6,8,0
";

pub fn run_example(out_dir: &Path) -> Result<PathBuf, Box<dyn Error>> {
    let ds = read_dataset(RATINGS, 10.0)?;
    // South has a 0 cell, so the auxiliary radius has to be chosen by hand
    let aux = AuxiliaryConfig::for_dataset(1.5, &ds)?;

    let base = RenderOptions {
        axis_type: AxisType::Both,
        grid_line_type: LineType::Dotted,
        hatch_density: Some(12.0),
        hatch_angle: 30.0,
        ..Default::default()
    };
    // the same overrides the CLI and the HTTP service accept
    let patch: OptionsPatch = serde_json::from_str(
        r#"{"seg": 5, "title": "Hospital ratings", "pcol2": "rgb(0.1,0.2,0.7,1)"}"#,
    )?;
    let opts = patch.apply(&base)?;

    let svg = render_pairwise(&ds, "North", "South", aux, &opts)?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("hospital-ratings.svg");
    std::fs::write(&path, svg)?;
    Ok(path)
}

fn main() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "origami-out".into());
    println!("wrote {}", run_example(Path::new(&dir))?.display());
    Ok(())
}
