//! FPS1 fingerprint cache.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! "FPS1" | diameter u32 | invariant kind u8 | chirality u8 | count u32
//! count × ( n u32 | n × raw id u32, ascending )
//! ```
//!
//! Only identifiers are stored. Occurrence metadata and parent links are not,
//! so a cache is enough for applying a pooler but not for fitting a filter
//! model.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::ecfp::{EcfpParams, IdentifierSet, SubstructureId};
use crate::error::{Error, Result};
use crate::invariants::InvariantKind;

const MAGIC: &[u8; 4] = b"FPS1";

pub fn write_cache<W: Write>(mut w: W, params: &EcfpParams, sets: &[IdentifierSet]) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&params.diameter.to_le_bytes())?;
    w.write_all(&[params.invariants.code(), params.chirality as u8])?;
    w.write_all(&len_u32(sets.len())?.to_le_bytes())?;
    for set in sets {
        let mut raw: Vec<u32> = set.ids().map(SubstructureId::raw).collect();
        raw.sort_unstable();
        w.write_all(&len_u32(raw.len())?.to_le_bytes())?;
        for r in raw {
            w.write_all(&r.to_le_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn read_cache<R: Read>(mut r: R) -> Result<(EcfpParams, Vec<IdentifierSet>)> {
    let mut magic = [0u8; 4];
    read_exact(&mut r, &mut magic)?;
    if &magic != MAGIC {
        return Err(Error::Cache("bad magic, not an FPS1 file".into()));
    }
    let diameter = read_u32(&mut r)?;
    let mut flags = [0u8; 2];
    read_exact(&mut r, &mut flags)?;
    let invariants = InvariantKind::from_code(flags[0])
        .ok_or_else(|| Error::Cache(format!("unknown invariant kind code {}", flags[0])))?;
    let chirality = match flags[1] {
        0 => false,
        1 => true,
        other => return Err(Error::Cache(format!("bad chirality flag {other}"))),
    };
    if diameter % 2 != 0 {
        return Err(Error::Cache(format!("odd diameter {diameter}")));
    }
    let count = read_u32(&mut r)?;
    let mut sets = Vec::with_capacity(count.min(1 << 20) as usize);
    for _ in 0..count {
        let n = read_u32(&mut r)?;
        let mut ids = Vec::with_capacity(n.min(1 << 16) as usize);
        let mut prev: Option<u32> = None;
        for _ in 0..n {
            let raw = read_u32(&mut r)?;
            if prev.is_some_and(|p| p >= raw) {
                return Err(Error::Cache("identifiers not strictly ascending".into()));
            }
            prev = Some(raw);
            ids.push(SubstructureId::from_raw(raw));
        }
        sets.push(IdentifierSet::from_ids(ids));
    }
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(Error::Cache("trailing bytes after last record".into()));
    }
    Ok((EcfpParams::new(diameter, invariants, chirality), sets))
}

pub fn save_cache(path: &Path, params: &EcfpParams, sets: &[IdentifierSet]) -> Result<()> {
    write_cache(BufWriter::new(File::create(path)?), params, sets)
}

pub fn load_cache(path: &Path) -> Result<(EcfpParams, Vec<IdentifierSet>)> {
    read_cache(BufReader::new(File::open(path)?))
}

fn len_u32(n: usize) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Cache(format!("length {n} does not fit in 32 bits")))
}

fn read_exact<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<()> {
    r.read_exact(buf).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => Error::Cache("truncated file".into()),
        _ => Error::Io(e),
    })
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    read_exact(r, &mut b)?;
    Ok(u32::from_le_bytes(b))
}
