use super::render::BasinGrid;

use std::io::{self, Write};

/// RGB color of each label: 0 black, then deep blue, blue, yellow, deep
/// yellow for the sorted roots.
pub fn palette(label: u8) -> [u8; 3] {
    match label {
        1 => [0, 0, 139],
        2 => [0, 0, 255],
        3 => [255, 255, 0],
        4 => [139, 139, 0],
        _ => [0, 0, 0],
    }
}

/// Binary PPM (P6, maxval 255) bytes for `g`.
pub fn to_ppm(g: &BasinGrid) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", g.width(), g.height()).into_bytes();
    out.reserve(3 * g.labels.len());
    for &l in &g.labels {
        out.extend_from_slice(&palette(l));
    }
    out
}

pub fn write_ppm(g: &BasinGrid, mut w: impl Write) -> io::Result<()> {
    w.write_all(&to_ppm(g))?;
    w.flush()
}
