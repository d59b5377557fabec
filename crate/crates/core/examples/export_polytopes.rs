//! Regenerates the packaged polytope datasets from coordinates.
//!
//! Usage: `cargo run -p dcosets --example export_polytopes [OUT_DIR]`

use std::path::PathBuf;

use dcosets::permgroup::{construct_polytope, POLYTOPES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"));
    std::fs::create_dir_all(&out)?;
    for (name, _, _) in POLYTOPES {
        let ds = construct_polytope(name)?;
        ds.clone().into_group()?;
        let path = out.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string(&ds)? + "\n")?;
        println!(
            "{}: {} generators on {} points",
            path.display(),
            ds.generators.len(),
            ds.degree
        );
    }
    Ok(())
}
