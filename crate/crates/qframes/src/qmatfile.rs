//! The `.qmat` file format: a JSON container for quaternionic matrices.
//!
//! A file holds one matrix in row-major order, each entry spelled out as
//! its four real coordinates `[w, x, y, z]` of `w + xi + yj + zk`. The
//! `field_tag` declares the smallest classical field containing every
//! entry (`"R"`, `"C"`, or `"H"`); [`save`] derives it from the data, and
//! [`load`] rejects files whose entries step outside the declared field.
//! Coordinates are serialized in shortest-roundtrip decimal form, so a
//! save/load cycle reproduces every `f64` bit for bit.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlinalg::QMatrix;
use crate::quat::Quat;

/// Current container version written by [`save`].
pub const QMAT_VERSION: u32 = 1;

/// The serialized form of a `.qmat` file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QMatFile {
    /// Container version; readers reject versions they do not know.
    pub version: u32,
    /// `"R"`, `"C"`, or `"H"`: every entry must lie in the tagged field.
    pub field_tag: String,
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, each as `[w, x, y, z]`.
    pub entries: Vec<[f64; 4]>,
}

/// The smallest field tag whose field contains every entry, judging
/// support by exact zeroes of the stored coordinates.
fn minimal_tag(entries: &[Quat]) -> &'static str {
    let mut complex = false;
    for q in entries {
        if q.y != 0.0 || q.z != 0.0 {
            return "H";
        }
        if q.x != 0.0 {
            complex = true;
        }
    }
    if complex {
        "C"
    } else {
        "R"
    }
}

/// How many of the four coordinates the tagged field allows to be nonzero.
fn tag_width(tag: &str) -> Result<usize> {
    match tag {
        "R" => Ok(1),
        "C" => Ok(2),
        "H" => Ok(4),
        other => Err(Error::Format(format!(
            "unknown field_tag {other:?}; expected \"R\", \"C\", or \"H\""
        ))),
    }
}

impl QMatFile {
    /// Captures a matrix, deriving the minimal field tag from its entries.
    pub fn from_matrix(m: &QMatrix) -> QMatFile {
        QMatFile {
            version: QMAT_VERSION,
            field_tag: minimal_tag(m.entries()).to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|q| q.coords()).collect(),
        }
    }

    /// Validates the container and rebuilds the matrix.
    ///
    /// Rejected with [`Error::Format`]: unknown versions, an entry count
    /// that disagrees with `rows * cols`, non-finite coordinates, an
    /// unknown `field_tag`, and entries with support outside the tagged
    /// field (for example a nonzero `j` coordinate under `"R"` or `"C"`).
    pub fn to_matrix(&self) -> Result<QMatrix> {
        if self.version != QMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported version {} (this reader knows version {QMAT_VERSION})",
                self.version
            )));
        }
        let expected = self.rows.checked_mul(self.cols).ok_or_else(|| {
            Error::Format(format!("shape {}x{} overflows", self.rows, self.cols))
        })?;
        if self.entries.len() != expected {
            return Err(Error::Format(format!(
                "shape mismatch: {}x{} needs {} entries, file has {}",
                self.rows,
                self.cols,
                expected,
                self.entries.len()
            )));
        }
        let width = tag_width(&self.field_tag)?;
        let mut data = Vec::with_capacity(expected);
        for (index, coords) in self.entries.iter().enumerate() {
            if coords.iter().any(|c| !c.is_finite()) {
                return Err(Error::Format(format!(
                    "entry {index} has a non-finite coordinate: {coords:?}"
                )));
            }
            if coords[width..].iter().any(|&c| c != 0.0) {
                return Err(Error::Format(format!(
                    "entry {index} ({coords:?}) lies outside the declared field {:?}",
                    self.field_tag
                )));
            }
            data.push(Quat::from_coords(*coords));
        }
        Ok(QMatrix::new(self.rows, self.cols, data))
    }
}

/// Writes the matrix to `path` as a `.qmat` JSON file, deriving the field
/// tag from the entries. The write is lossless: every coordinate is
/// printed in shortest form that parses back to the identical `f64`.
pub fn save(path: impl AsRef<Path>, m: &QMatrix) -> Result<()> {
    let file = QMatFile::from_matrix(m);
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Reads and validates a `.qmat` file. JSON syntax problems surface as
/// [`Error::Json`], I/O problems as [`Error::Io`], and container
/// violations (shape, version, field tag) as [`Error::Format`].
pub fn load(path: impl AsRef<Path>) -> Result<QMatrix> {
    let text = std::fs::read_to_string(path)?;
    let file: QMatFile = serde_json::from_str(&text)?;
    file.to_matrix()
}
