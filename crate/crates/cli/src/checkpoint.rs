//! Search checkpoints: a small binary container holding the serialized
//! search state and the set of seen value keys.
//!
//! Layout: 8-byte magic, u32 version, u32 header length, the state as JSON,
//! zero padding to an 8-byte boundary, u64 key count, then the keys as
//! little-endian `[u64; 4]` records in sorted order.

use anyhow::{bail, Context, Result};
use constrec_core::search::SearchState;
use std::fs;
use std::io::Write;
use std::path::Path;

pub const MAGIC: [u8; 8] = *b"CONSTREC";
pub const VERSION: u32 = 1;

fn padding(header_len: usize) -> usize {
    let offset = MAGIC.len() + 8 + header_len;
    (8 - offset % 8) % 8
}

/// Writes the checkpoint atomically (temp file, then rename).
pub fn save(path: &Path, state: &SearchState, keys: &[[u64; 4]]) -> Result<()> {
    let header = serde_json::to_vec(state).context("serializing search state")?;
    let mut buf = Vec::with_capacity(24 + header.len() + 32 * keys.len());
    buf.extend_from_slice(&MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    buf.extend_from_slice(&(header.len() as u32).to_le_bytes());
    buf.extend_from_slice(&header);
    buf.extend_from_slice(&[0u8; 8][..padding(header.len())]);
    buf.extend_from_slice(&(keys.len() as u64).to_le_bytes());
    for key in keys {
        for word in key {
            buf.extend_from_slice(&word.to_le_bytes());
        }
    }
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)
            .with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(&buf)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

/// Reads a checkpoint back, validating the container structure.
pub fn load(path: &Path) -> Result<(SearchState, Vec<[u64; 4]>)> {
    let data = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    if data.len() < 16 || data[..8] != MAGIC {
        bail!("{} is not a checkpoint file", path.display());
    }
    let version = u32::from_le_bytes(data[8..12].try_into().unwrap());
    if version != VERSION {
        bail!("checkpoint version {version} is not supported (expected {VERSION})");
    }
    let header_len = u32::from_le_bytes(data[12..16].try_into().unwrap()) as usize;
    let header_end = 16usize
        .checked_add(header_len)
        .filter(|&e| e <= data.len())
        .ok_or_else(|| anyhow::anyhow!("checkpoint header is truncated"))?;
    let state: SearchState =
        serde_json::from_slice(&data[16..header_end]).context("parsing checkpoint header")?;
    let keys_at = header_end + padding(header_len);
    if keys_at + 8 > data.len() {
        bail!("checkpoint key section is missing");
    }
    let count = u64::from_le_bytes(data[keys_at..keys_at + 8].try_into().unwrap()) as usize;
    let body = &data[keys_at + 8..];
    if body.len() != count * 32 {
        bail!(
            "checkpoint key section holds {} bytes, expected {}",
            body.len(),
            count * 32
        );
    }
    let mut keys = Vec::with_capacity(count);
    for rec in body.chunks_exact(32) {
        let mut key = [0u64; 4];
        for (i, word) in rec.chunks_exact(8).enumerate() {
            key[i] = u64::from_le_bytes(word.try_into().unwrap());
        }
        keys.push(key);
    }
    Ok((state, keys))
}
