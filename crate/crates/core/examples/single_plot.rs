// Origami plot of one treatment from the bundled SUCRA dataset.
//
//     cargo run --example single_plot [out_dir]

use std::error::Error;
use std::path::{Path, PathBuf};

use origami::{default_aux, embedded_example, render_single, RenderOptions};

pub fn run_example(out_dir: &Path) -> Result<PathBuf, Box<dyn Error>> {
    let ds = embedded_example();
    // min of the table is 0.16, so the auxiliary points sit at 0.08
    let aux = default_aux(&ds)?;
    let svg = render_single(&ds, "Intracervical PGE2", aux, &RenderOptions::default())?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("intracervical-pge2.svg");
    std::fs::write(&path, svg)?;
    Ok(path)
}

fn main() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "origami-out".into());
    let path = run_example(Path::new(&dir))?;
    println!("wrote {}", path.display());
    Ok(())
}
