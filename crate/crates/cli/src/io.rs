use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use sset_core::format::{map_header, parse_complex, parse_map, write_complex, write_map};
use sset_core::{MonoInclusion, SimplicialMap, SimplicialSet};

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_complex(path: &Path) -> Result<Arc<SimplicialSet>> {
    let text = read(path)?;
    let x = parse_complex(&text).with_context(|| format!("{}", path.display()))?;
    Ok(Arc::new(x))
}

/// A map together with the files of its source and target.
pub struct LoadedMap {
    pub map: SimplicialMap,
    pub source_file: PathBuf,
    pub target_file: PathBuf,
}

/// Header paths are resolved against the directory of the map file.
pub fn load_map(path: &Path) -> Result<LoadedMap> {
    let text = read(path)?;
    let (s, t) = map_header(&text).with_context(|| format!("{}", path.display()))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let source_file = dir.join(s);
    let target_file = dir.join(t);
    let source = load_complex(&source_file)?;
    let target = if source_file == target_file { source.clone() } else { load_complex(&target_file)? };
    let map = parse_map(&text, source, target).with_context(|| format!("{}", path.display()))?;
    Ok(LoadedMap { map, source_file, target_file })
}

pub fn load_inclusion(path: &Path) -> Result<(MonoInclusion, LoadedMap)> {
    let loaded = load_map(path)?;
    let inc = MonoInclusion::new(loaded.map.clone()).with_context(|| format!("{}", path.display()))?;
    Ok((inc, loaded))
}

pub fn is_map_file(text: &str) -> bool {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).is_some_and(|l| l.starts_with("map "))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

/// Writes `x` to `dir/name` and returns the file name.
pub fn write_complex_to(dir: &Path, name: &str, x: &SimplicialSet) -> Result<String> {
    write(&dir.join(name), &write_complex(x))?;
    Ok(name.to_owned())
}

pub fn write_map_to(dir: &Path, name: &str, f: &SimplicialMap, source: &str, target: &str) -> Result<()> {
    write(&dir.join(name), &write_map(f, source, target))
}

pub fn vertex(x: &SimplicialSet, name: &str) -> Result<sset_core::CellId> {
    match x.cell_by_name(name) {
        Some(c) if c.dim == 0 => Ok(c),
        Some(_) => bail!("`{name}` is not a vertex"),
        None => bail!("unknown cell `{name}`"),
    }
}
