// Oral against vaginal high-dose misoprostol on shared axes.
//
//     cargo run --example pairwise_plot [out_dir]

use std::error::Error;
use std::path::{Path, PathBuf};

use origami::{default_aux, embedded_example, render_pairwise, RenderOptions};

pub fn run_example(out_dir: &Path) -> Result<PathBuf, Box<dyn Error>> {
    let ds = embedded_example();
    let aux = default_aux(&ds)?;
    let svg = render_pairwise(
        &ds,
        "High-dose oral misoprostol",
        "High-dose vaginal misoprostol",
        aux,
        &RenderOptions::default(),
    )?;
    std::fs::create_dir_all(out_dir)?;
    let path = out_dir.join("pairwise-high-dose.svg");
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
