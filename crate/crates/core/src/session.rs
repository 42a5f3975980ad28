//! Hands out the expensive shared objects: character tables, decomposition
//! matrices and their spin companions. Everything is computed at most once
//! per session, kept behind an `Arc`, and optionally mirrored to a cache
//! directory as JSON.
//!
//! Cache files carry a `version` field holding the SHA-256 of the producing
//! module's version string. A file whose version does not match, or that
//! fails to parse, is treated as absent and silently rebuilt. Writes go
//! through a temporary file in the same directory followed by a rename, so a
//! crash never leaves a half-written cache behind. The JSON itself is
//! canonical: objects are keyed by the text form of partitions and emitted
//! in matrix order, so saving the same object twice gives identical bytes.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::characters::CharTable;
use crate::modrep::{decomposition_matrix, ChopError, DecompositionMatrix};
use crate::partition::{partitions, strict_partitions, Partition};
use crate::spin::{epsilon_label, spin_decomposition_matrix, SpinDecompositionMatrix};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error(transparent)]
    Chop(#[from] ChopError),
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub struct Session {
    seed: u64,
    cache_dir: Option<PathBuf>,
    tables: Mutex<HashMap<usize, Arc<CharTable>>>,
    decomps: Mutex<HashMap<usize, Arc<DecompositionMatrix>>>,
    spins: Mutex<HashMap<usize, Arc<SpinDecompositionMatrix>>>,
}

impl Session {
    pub fn new(seed: u64) -> Self {
        Session {
            seed,
            cache_dir: None,
            tables: Mutex::new(HashMap::new()),
            decomps: Mutex::new(HashMap::new()),
            spins: Mutex::new(HashMap::new()),
        }
    }

    /// Like [`Session::new`], but backed by a disk cache. The directory is
    /// created if it does not exist.
    pub fn with_cache_dir(seed: u64, dir: impl Into<PathBuf>) -> Result<Self, SessionError> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        let mut s = Session::new(seed);
        s.cache_dir = Some(dir);
        Ok(s)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn character_table(&self, n: usize) -> Result<Arc<CharTable>, SessionError> {
        if let Some(t) = self.tables.lock().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let path = self.cache_path("chartab", n);
        let table = match load(&path).and_then(|v| table_from_value(&v, n)) {
            Some(t) => t,
            None => {
                let t = CharTable::new(n);
                self.store(&path, table_to_value(&t))?;
                t
            }
        };
        let mut map = self.tables.lock().unwrap();
        Ok(map.entry(n).or_insert_with(|| Arc::new(table)).clone())
    }

    pub fn decomposition(&self, n: usize) -> Result<Arc<DecompositionMatrix>, SessionError> {
        if let Some(d) = self.decomps.lock().unwrap().get(&n) {
            return Ok(d.clone());
        }
        let path = self.cache_path("decomp2", n);
        let matrix = match load(&path).and_then(|v| decomp_from_value(&v, n)) {
            Some(d) => d,
            None => {
                let d = decomposition_matrix(n, self.seed)?;
                self.store(&path, decomp_to_value(&d))?;
                d
            }
        };
        let mut map = self.decomps.lock().unwrap();
        Ok(map.entry(n).or_insert_with(|| Arc::new(matrix)).clone())
    }

    pub fn spin_decomposition(
        &self,
        n: usize,
    ) -> Result<Arc<SpinDecompositionMatrix>, SessionError> {
        if let Some(s) = self.spins.lock().unwrap().get(&n) {
            return Ok(s.clone());
        }
        let path = self.cache_path("spindecomp2", n);
        let matrix = match load(&path).and_then(|v| spin_from_value(&v, n)) {
            Some(s) => s,
            None => {
                let table = self.character_table(n)?;
                let d = self.decomposition(n)?;
                let s = spin_decomposition_matrix(&table, &d);
                self.store(&path, spin_to_value(&s, &d))?;
                s
            }
        };
        let mut map = self.spins.lock().unwrap();
        Ok(map.entry(n).or_insert_with(|| Arc::new(matrix)).clone())
    }

    /// The canonical cache form of the decomposition matrix, byte-identical
    /// to what `decomposition` writes to disk.
    pub fn decomposition_value(&self, n: usize) -> Result<Value, SessionError> {
        let d = self.decomposition(n)?;
        Ok(decomp_to_value(d.as_ref()))
    }

    /// The canonical cache form of the spin decomposition matrix.
    pub fn spin_decomposition_value(&self, n: usize) -> Result<Value, SessionError> {
        let d = self.decomposition(n)?;
        let s = self.spin_decomposition(n)?;
        Ok(spin_to_value(s.as_ref(), d.as_ref()))
    }

    fn cache_path(&self, kind: &str, n: usize) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("{kind}_n{n}.json")))
    }

    fn store(&self, path: &Option<PathBuf>, value: Value) -> Result<(), SessionError> {
        let Some(path) = path else { return Ok(()) };
        let dir = path.parent().expect("cache path inside the cache directory");
        let mut file = tempfile::NamedTempFile::new_in(dir)?;
        file.write_all(value.to_string().as_bytes())?;
        file.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}

/// SHA-256 of the version string of the module a cache file came from,
/// hex-encoded. Bumping the crate version invalidates every cache.
fn version_hash(module: &str) -> String {
    let tag = format!("{module} {}", env!("CARGO_PKG_VERSION"));
    let digest = Sha256::digest(tag.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn load(path: &Option<PathBuf>) -> Option<Value> {
    let text = fs::read_to_string(path.as_ref()?).ok()?;
    serde_json::from_str(&text).ok()
}

fn header_ok(v: &Value, module: &str, n: usize) -> Option<()> {
    (v.get("version")?.as_str()? == version_hash(module)).then_some(())?;
    (v.get("n")?.as_u64()? == n as u64).then_some(())
}

fn table_to_value(t: &CharTable) -> Value {
    let classes: Vec<String> = t.classes().iter().map(|c| c.to_string()).collect();
    let mut specht = Map::new();
    for la in t.classes() {
        specht.insert(la.to_string(), json!(t.row(la)));
    }
    json!({
        "version": version_hash("characters"),
        "n": t.n(),
        "classes": classes,
        "specht": specht,
    })
}

fn table_from_value(v: &Value, n: usize) -> Option<CharTable> {
    header_ok(v, "characters", n)?;
    let classes: Vec<Partition> = v
        .get("classes")?
        .as_array()?
        .iter()
        .map(|c| Partition::from_str(c.as_str()?).ok())
        .collect::<Option<_>>()?;
    if classes != partitions(n) {
        return None;
    }
    let specht = v.get("specht")?.as_object()?;
    let values: Vec<Vec<i64>> = classes
        .iter()
        .map(|la| -> Option<Vec<i64>> {
            let row = specht.get(&la.to_string())?.as_array()?;
            if row.len() != classes.len() {
                return None;
            }
            row.iter().map(|x| x.as_i64()).collect()
        })
        .collect::<Option<_>>()?;
    Some(CharTable::from_parts(n, classes, values))
}

fn multiplicity_map(rows: impl Iterator<Item = (Partition, Vec<(Partition, u64)>)>) -> Map<String, Value> {
    let mut out = Map::new();
    for (la, row) in rows {
        let mut inner = Map::new();
        for (mu, c) in row {
            inner.insert(mu.to_string(), json!(c));
        }
        out.insert(la.to_string(), Value::Object(inner));
    }
    out
}

fn read_multiplicity_row(v: &Value) -> Option<Vec<(Partition, u64)>> {
    v.as_object()?
        .iter()
        .map(|(k, c)| Some((Partition::from_str(k).ok()?, c.as_u64()?)))
        .collect()
}

fn decomp_to_value(d: &DecompositionMatrix) -> Value {
    let rows = multiplicity_map(
        d.rows()
            .map(|(la, row)| (la.clone(), row.iter().map(|(m, &c)| (m.clone(), c)).collect())),
    );
    let mut dims = Map::new();
    for mu in d.labels() {
        dims.insert(mu.to_string(), json!(d.irreducible_dim(mu).unwrap()));
    }
    json!({
        "version": version_hash("modrep"),
        "n": d.n(),
        "rows": rows,
        "dims": dims,
    })
}

fn decomp_from_value(v: &Value, n: usize) -> Option<DecompositionMatrix> {
    header_ok(v, "modrep", n)?;
    let mut rows = std::collections::BTreeMap::new();
    for (k, row) in v.get("rows")?.as_object()? {
        let la = Partition::from_str(k).ok()?;
        rows.insert(la, read_multiplicity_row(row)?.into_iter().collect());
    }
    let mut dims = std::collections::BTreeMap::new();
    for (k, dim) in v.get("dims")?.as_object()? {
        dims.insert(Partition::from_str(k).ok()?, dim.as_u64()?);
    }
    let all: Vec<Partition> = rows.keys().cloned().collect();
    let labels: Vec<Partition> = dims.keys().cloned().collect();
    (all == partitions(n) && labels == strict_partitions(n)).then_some(())?;
    Some(DecompositionMatrix { n, rows, dims })
}

fn spin_to_value(s: &SpinDecompositionMatrix, d: &DecompositionMatrix) -> Value {
    let rows = multiplicity_map(
        s.rows()
            .map(|(la, row)| (la.clone(), row.iter().map(|(m, &c)| (m.clone(), c)).collect())),
    );
    let mut dims = Map::new();
    for mu in d.labels() {
        dims.insert(mu.to_string(), json!(d.irreducible_dim(mu).unwrap()));
    }
    let mut epsilon = Map::new();
    for (la, _) in s.rows() {
        epsilon.insert(la.to_string(), json!(epsilon_label(la)));
    }
    json!({
        "version": version_hash("spin"),
        "n": s.n(),
        "rows": rows,
        "dims": dims,
        "epsilon": epsilon,
    })
}

fn spin_from_value(v: &Value, n: usize) -> Option<SpinDecompositionMatrix> {
    header_ok(v, "spin", n)?;
    let mut rows = std::collections::BTreeMap::new();
    for (k, row) in v.get("rows")?.as_object()? {
        let la = Partition::from_str(k).ok()?;
        rows.insert(la, read_multiplicity_row(row)?.into_iter().collect());
    }
    let labels: Vec<Partition> = rows.keys().cloned().collect();
    (labels == strict_partitions(n)).then_some(())?;
    Some(SpinDecompositionMatrix { n, rows })
}
