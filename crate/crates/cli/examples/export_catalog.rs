//! Writes every catalog structure as a structure file under `catalog/`.

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog"));
    std::fs::create_dir_all(&dir)?;
    for (name, doc) in mlat_cli::catalog_docs() {
        std::fs::write(dir.join(format!("{name}.json")), doc.to_text())?;
    }
    Ok(())
}
