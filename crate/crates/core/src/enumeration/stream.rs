use crate::error::{Error, Result};
use crate::graph::{parse_graph6_lines, Graph, Graph6};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

/// Sidecar metadata for a graph6 stream file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamManifest {
    pub params: BTreeMap<String, String>,
    pub count: usize,
    /// Hex SHA-256 of the stream file's bytes.
    pub sha256: String,
}

pub fn manifest_path(stream: &Path) -> PathBuf {
    let mut name = stream.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

/// Writes one graph6 line per graph and the manifest next to it.
pub fn write_stream(path: &Path, graphs: &[Graph], params: BTreeMap<String, String>) -> Result<StreamManifest> {
    let mut body = String::new();
    for g in graphs {
        body.push_str(&g.to_graph6());
        body.push('\n');
    }
    fs::write(path, &body)?;
    let manifest = StreamManifest {
        params,
        count: graphs.len(),
        sha256: hex::encode(Sha256::digest(body.as_bytes())),
    };
    let json = serde_json::to_string_pretty(&manifest).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(manifest_path(path), json + "\n")?;
    Ok(manifest)
}

/// Reads a stream back, rejecting it when the checksum or count disagrees
/// with the manifest.
pub fn read_stream(path: &Path) -> Result<(Vec<Graph>, StreamManifest)> {
    let body = fs::read(path)?;
    let manifest: StreamManifest = serde_json::from_slice(&fs::read(manifest_path(path))?)
        .map_err(|e| Error::Io(format!("bad manifest: {e}")))?;
    let digest = hex::encode(Sha256::digest(&body));
    if digest != manifest.sha256 {
        return Err(Error::Io(format!("checksum mismatch: manifest {}, file {digest}", manifest.sha256)));
    }
    let text = String::from_utf8(body).map_err(|e| Error::Io(e.to_string()))?;
    let graphs = parse_graph6_lines(&text)?;
    if graphs.len() != manifest.count {
        return Err(Error::Io(format!("manifest lists {} graphs, file has {}", manifest.count, graphs.len())));
    }
    Ok((graphs, manifest))
}
