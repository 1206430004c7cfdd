//! Versioned, checksummed on-disk cache of Kazhdan–Lusztig tables.
//!
//! File layout, all integers little-endian: the 8-byte magic, a `u32` format
//! version, a `u32`-length-prefixed key, then records each framed as a `u32`
//! payload length, the payload, and its SHA-256 digest. A file with a bad
//! header is ignored; a record with a bad digest is dropped and recomputed.

use std::fs;
use std::io::{self, Cursor, Read, Write};
use std::path::{Path, PathBuf};

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use hecke_core::hecke_im::QPoly;
use hecke_core::root_data::Weight;
use hecke_core::weyl_affine::ExtAffineElt;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const MAGIC: &[u8; 8] = b"HCLCACHE";
pub const FORMAT_VERSION: u32 = 1;
/// Overrides the cache directory when `--cache-dir` is not given.
pub const CACHE_DIR_ENV: &str = "HECKE_CELL_LAB_CACHE";

const DIGEST_LEN: usize = 32;

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CacheStats {
    pub enabled: bool,
    pub file_hits: usize,
    pub file_misses: usize,
    pub rejected_files: usize,
    pub loaded_records: usize,
    pub corrupt_records: usize,
    pub stored_records: usize,
}

impl CacheStats {
    pub fn merge(&mut self, o: &CacheStats) {
        self.enabled |= o.enabled;
        self.file_hits += o.file_hits;
        self.file_misses += o.file_misses;
        self.rejected_files += o.rejected_files;
        self.loaded_records += o.loaded_records;
        self.corrupt_records += o.corrupt_records;
        self.stored_records += o.stored_records;
    }
}

/// The explicit directory if given, else the environment override.
pub fn resolve_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Decoded {
    pub records: Vec<Vec<u8>>,
    pub corrupt: usize,
    /// Header mismatch: wrong magic, version or key.
    pub rejected: bool,
}

pub fn encode(key: &str, records: &[Vec<u8>]) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.write_u32::<LittleEndian>(FORMAT_VERSION).unwrap();
    out.write_u32::<LittleEndian>(key.len() as u32).unwrap();
    out.extend_from_slice(key.as_bytes());
    for r in records {
        out.write_u32::<LittleEndian>(r.len() as u32).unwrap();
        out.extend_from_slice(r);
        out.extend_from_slice(&Sha256::digest(r));
    }
    out
}

pub fn decode(key: &str, bytes: &[u8]) -> Decoded {
    let rejected = Decoded { rejected: true, ..Decoded::default() };
    let mut cur = Cursor::new(bytes);
    let mut magic = [0u8; 8];
    if cur.read_exact(&mut magic).is_err() || &magic != MAGIC {
        return rejected;
    }
    if cur.read_u32::<LittleEndian>().ok() != Some(FORMAT_VERSION) {
        return rejected;
    }
    let Ok(klen) = cur.read_u32::<LittleEndian>() else { return rejected };
    let mut k = vec![0u8; klen as usize];
    if cur.read_exact(&mut k).is_err() || k != key.as_bytes() {
        return rejected;
    }
    let mut out = Decoded::default();
    loop {
        let Ok(len) = cur.read_u32::<LittleEndian>() else { break };
        let mut payload = vec![0u8; len as usize];
        let mut digest = [0u8; DIGEST_LEN];
        if cur.read_exact(&mut payload).is_err() || cur.read_exact(&mut digest).is_err() {
            // A truncated tail cannot be reframed.
            out.corrupt += 1;
            break;
        }
        if Sha256::digest(&payload).as_slice() == digest {
            out.records.push(payload);
        } else {
            out.corrupt += 1;
        }
    }
    out
}

/// `None` when the file does not exist.
pub fn load(path: &Path, key: &str) -> io::Result<Option<Decoded>> {
    match fs::read(path) {
        Ok(bytes) => Ok(Some(decode(key, &bytes))),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e),
    }
}

/// Writes through a temporary file and renames it into place.
pub fn store(path: &Path, key: &str, records: &[Vec<u8>]) -> io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&encode(key, records))?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)
}

fn write_elt(out: &mut Vec<u8>, u: &ExtAffineElt, rank: usize) {
    for i in 0..rank {
        out.write_i32::<LittleEndian>(u.x.get(i)).unwrap();
    }
    out.write_u32::<LittleEndian>(u.w as u32).unwrap();
}

fn read_elt(cur: &mut Cursor<&[u8]>, rank: usize) -> io::Result<ExtAffineElt> {
    let coords = (0..rank).map(|_| cur.read_i32::<LittleEndian>()).collect::<io::Result<Vec<_>>>()?;
    let w = cur.read_u32::<LittleEndian>()? as usize;
    Ok(ExtAffineElt { x: Weight::new(&coords), w })
}

pub type KlEntry = ((ExtAffineElt, ExtAffineElt), QPoly);

pub fn encode_kl_entry(e: &KlEntry, rank: usize) -> Vec<u8> {
    let ((y, w), p) = e;
    let mut out = Vec::new();
    write_elt(&mut out, y, rank);
    write_elt(&mut out, w, rank);
    out.write_u32::<LittleEndian>(p.len() as u32).unwrap();
    for c in p {
        out.write_i64::<LittleEndian>(*c).unwrap();
    }
    out
}

pub fn decode_kl_entry(bytes: &[u8], rank: usize, order: usize) -> Option<KlEntry> {
    let mut cur = Cursor::new(bytes);
    let y = read_elt(&mut cur, rank).ok()?;
    let w = read_elt(&mut cur, rank).ok()?;
    if y.w >= order || w.w >= order {
        return None;
    }
    let n = cur.read_u32::<LittleEndian>().ok()?;
    let p = (0..n).map(|_| cur.read_i64::<LittleEndian>()).collect::<io::Result<Vec<_>>>().ok()?;
    (cur.position() as usize == bytes.len()).then_some(((y, w), p))
}
