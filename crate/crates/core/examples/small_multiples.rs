// One chart per treatment, all sharing the same auxiliary radius so the
// areas are comparable across panels.
//
//     cargo run --example small_multiples [out_dir]

use std::error::Error;
use std::path::{Path, PathBuf};

use origami::cli::slug;
use origami::{default_aux, embedded_example, render_single, RenderOptions};

pub fn run_example(out_dir: &Path) -> Result<Vec<PathBuf>, Box<dyn Error>> {
    let ds = embedded_example();
    let aux = default_aux(&ds)?;
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for name in ds.object_names() {
        let opts = RenderOptions {
            title: name.clone(),
            width: 400,
            height: 400,
            ..Default::default()
        };
        let path = out_dir.join(format!("{}.svg", slug(name)));
        std::fs::write(&path, render_single(&ds, name, aux, &opts)?)?;
        written.push(path);
    }
    Ok(written)
}

fn main() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "origami-out".into());
    for p in run_example(Path::new(&dir))? {
        println!("wrote {}", p.display());
    }
    Ok(())
}
