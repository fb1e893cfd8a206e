//! Binary STL.

use std::io::{self, Read, Write};

use cbo_core::hull::Mesh;

const HEADER: &[u8] = b"cbo-hull";

/// Writes `mesh` as little-endian binary STL.
pub fn write_binary<W: Write>(mut w: W, mesh: &Mesh) -> io::Result<()> {
    let mut header = [0u8; 80];
    header[..HEADER.len()].copy_from_slice(HEADER);
    w.write_all(&header)?;
    let count = u32::try_from(mesh.triangles.len())
        .map_err(|_| io::Error::new(io::ErrorKind::InvalidInput, "too many triangles for STL"))?;
    w.write_all(&count.to_le_bytes())?;
    for t in 0..mesh.triangles.len() {
        let mut rec = [0u8; 50];
        let n = mesh.facet_normal(t);
        let f = mesh.facet(t);
        let values = n.iter().chain(f.iter().flatten());
        for (slot, v) in rec.chunks_exact_mut(4).zip(values) {
            slot.copy_from_slice(&(*v as f32).to_le_bytes());
        }
        w.write_all(&rec)?;
    }
    w.flush()
}

/// One facet as read back from a file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Facet {
    pub normal: [f32; 3],
    pub vertices: [[f32; 3]; 3],
}

/// Reads a binary STL, checking that the byte length matches the count.
pub fn read_binary<R: Read>(mut r: R) -> io::Result<Vec<Facet>> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    let bad = |m: &str| io::Error::new(io::ErrorKind::InvalidData, m.to_string());
    if bytes.len() < 84 {
        return Err(bad("shorter than the STL header"));
    }
    let count = u32::from_le_bytes(bytes[80..84].try_into().unwrap()) as usize;
    if bytes.len() != 84 + 50 * count {
        return Err(bad("length does not match the facet count"));
    }
    let f = |b: &[u8]| f32::from_le_bytes(b.try_into().unwrap());
    Ok(bytes[84..]
        .chunks_exact(50)
        .map(|rec| {
            let v = |k: usize| [f(&rec[4 * k..4 * k + 4]), f(&rec[4 * k + 4..4 * k + 8]), f(&rec[4 * k + 8..4 * k + 12])];
            Facet { normal: v(0), vertices: [v(3), v(6), v(9)] }
        })
        .collect())
}
