//! Line-delimited catalog of biperiodic existence reports.
//!
//! One JSON object per (r, T) cell, keys sorted, cells in ascending (r, T)
//! order. Output depends only on the field and the ranges.

use std::io::Write;
use std::ops::RangeInclusive;

use serde_json::Value;

use crate::biperiod::exists_with_witness;
use crate::error::Result;
use crate::gf::FieldSpec;

pub fn catalog_records(
    field: &FieldSpec,
    rs: RangeInclusive<u32>,
    ts: RangeInclusive<u64>,
) -> Result<Vec<Value>> {
    let mut out = Vec::new();
    for r in rs {
        for t in ts.clone() {
            out.push(exists_with_witness(field, r, t)?.to_json());
        }
    }
    Ok(out)
}

/// Writes the catalog and returns the number of records.
pub fn write_catalog<W: Write>(
    field: &FieldSpec,
    rs: RangeInclusive<u32>,
    ts: RangeInclusive<u64>,
    mut out: W,
) -> std::io::Result<usize> {
    let records = catalog_records(field, rs, ts).map_err(std::io::Error::other)?;
    for rec in &records {
        serde_json::to_writer(&mut out, rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(records.len())
}
