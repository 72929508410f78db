//! Per-run manifest: which subcommand ran, the fully resolved flags, a
//! SHA-256 of every input file, and the seed when one was in play. Mixing
//! up map files is the main operator hazard when comparing snapshots, so
//! every run leaves this audit trail next to its artifacts.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use asmap_core::Error;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct Manifest {
    tool: &'static str,
    version: &'static str,
    subcommand: &'static str,
    flags: BTreeMap<String, String>,
    inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    generated_at_unix: u64,
}

/// Writes `<subcommand>_manifest.json` into `out_dir` and returns its path.
pub fn write(
    out_dir: &Path,
    subcommand: &'static str,
    flags: BTreeMap<String, String>,
    inputs: &[&Path],
    seed: Option<u64>,
) -> Result<PathBuf, Error> {
    let inputs = inputs
        .iter()
        .map(|p| {
            Ok(InputDigest {
                path: p.display().to_string(),
                sha256: hex(&Sha256::digest(fs::read(p)?)),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let manifest = Manifest {
        tool: "asmap",
        version: env!("CARGO_PKG_VERSION"),
        subcommand,
        flags,
        inputs,
        seed,
        generated_at_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .expect("clock after 1970")
            .as_secs(),
    };
    let path = out_dir.join(format!("{}_manifest.json", subcommand));
    let body = serde_json::to_string_pretty(&manifest).expect("manifest is plain data");
    fs::write(&path, body + "\n")?;
    Ok(path)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{:02x}", b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_records_checksum_and_flags() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("g.edges");
        fs::write(&input, "1 2\n").unwrap();
        let flags = BTreeMap::from([("fmax".to_string(), "0.1".to_string())]);
        let path = write(dir.path(), "attack", flags, &[&input], Some(7)).unwrap();
        let text = fs::read_to_string(path).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["tool"], "asmap");
        assert_eq!(v["subcommand"], "attack");
        assert_eq!(v["flags"]["fmax"], "0.1");
        assert_eq!(v["seed"], 7);
        // sha256 of "1 2\n"
        assert_eq!(
            v["inputs"][0]["sha256"],
            "f251ddc12234e0da8d3b778bd0f7463fb477f16f47757f5617dc8b4ff4d4f14a"
        );
    }

    #[test]
    fn seed_is_omitted_when_absent() {
        let dir = tempfile::tempdir().unwrap();
        let path = write(dir.path(), "summary", BTreeMap::new(), &[], None).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
        assert!(v.get("seed").is_none());
    }
}
