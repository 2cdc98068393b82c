// Weighted profile: neonatal outcome weighted highest. The weighted
// polygon keeps that attribute's radius and shrinks every other one.
//
//     cargo run --example weighted_plot [out_dir]

use std::error::Error;
use std::path::{Path, PathBuf};

use origami::geometry::row_areas;
use origami::{
    apply_weights, default_aux, embedded_example, render_weighted, standardize_weights,
    RenderOptions,
};

pub struct WeightedOutput {
    pub path: PathBuf,
    pub unweighted_area: f64,
    pub weighted_area: f64,
}

pub fn run_example(out_dir: &Path) -> Result<WeightedOutput, Box<dyn Error>> {
    let ds = embedded_example();
    let aux = default_aux(&ds)?;
    let object = "High-dose oral misoprostol";
    let wv = standardize_weights(&[0.15, 0.25, 0.3, 0.2, 0.1], ds.n_attributes())?;

    let values = ds.row(object)?;
    let weighted = apply_weights(values, &wv)?;
    let (_, unweighted_area) = row_areas(values, aux, ds.scale_max())?;
    let (_, weighted_area) = row_areas(&weighted, aux, ds.scale_max())?;

    let svg = render_weighted(&ds, object, &wv, aux, &RenderOptions::default())?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("weighted-high-dose-oral.svg");
    std::fs::write(&path, svg)?;
    Ok(WeightedOutput {
        path,
        unweighted_area,
        weighted_area,
    })
}

fn main() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "origami-out".into());
    let out = run_example(Path::new(&dir))?;
    println!("wrote {}", out.path.display());
    println!(
        "normalized area: unweighted {:.3}, weighted {:.3}",
        out.unweighted_area, out.weighted_area
    );
    Ok(())
}
