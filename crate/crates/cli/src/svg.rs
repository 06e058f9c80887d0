//! Dependency-free SVG output: Dyck paths, labelled lattices and rank-3
//! orbit walks.

use std::fmt::Write;

use rpl_core::words::DyckPath;
use rpl_core::{InvariantSet, WeylPoint};

const CELL: i64 = 40;
const MARGIN: i64 = 20;
const BLUE: &str = "#1f4fd1";
const RED: &str = "#d12a1f";

fn header(out: &mut String, w: i64, h: i64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
}

/// Drops vertices in the middle of a straight run.
fn corners(pts: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in pts {
        if let [.., a, b] = out[..] {
            if (a.0 == b.0 && b.0 == p.0) || (a.1 == b.1 && b.1 == p.1) {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// An `n`-wide, `m`-tall grid with its diagonal and the path; column
/// heights are written under the columns.
pub fn dyck(path: &DyckPath) -> String {
    let (m, n) = (path.m() as i64, path.n() as i64);
    let px = |x: i64| MARGIN + x * CELL;
    let py = |y: i64| MARGIN + (m - y) * CELL;
    let mut out = String::new();
    header(
        &mut out,
        2 * MARGIN + n * CELL,
        2 * MARGIN + m * CELL + CELL / 2,
    );
    for x in 0..=n {
        writeln!(
            out,
            r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#bbb"/>"##,
            px(x),
            py(m),
            py(0)
        )
        .unwrap();
    }
    for y in 0..=m {
        writeln!(
            out,
            r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#bbb"/>"##,
            py(y),
            px(0),
            px(n)
        )
        .unwrap();
    }
    writeln!(
        out,
        r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888" stroke-dasharray="4 3"/>"##,
        px(0),
        py(m),
        px(n),
        py(0)
    )
    .unwrap();
    let pts: Vec<String> = corners(&path.vertices())
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x as i64), py(y as i64)))
        .collect();
    writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{BLUE}" stroke-width="4"/>"#,
        pts.join(" ")
    )
    .unwrap();
    for (x, h) in path.column_heights().iter().enumerate() {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="16" text-anchor="middle">{h}</text>"#,
            px(x as i64) + CELL / 2,
            py(0) + CELL / 2 + 4
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Boxes labelled `l(x, y) = −n·x − m·y` (plus a constant that centres the
/// interesting labels), members of the set shaded, the boundary path drawn,
/// `n`-generators in blue and `m`-cogenerators in red.
pub fn lattice(set: &InvariantSet, m: usize, n: usize) -> Result<String, rpl_core::Error> {
    let gens = set.generators(n)?;
    let cogens = set.cogenerators(m)?;
    let (mi, ni) = (m as i64, n as i64);
    let (cols, rows) = (2 * mi + 3, 2 * ni + 1);
    let mid = (set.minimum() + set.conductor()) / 2;
    let c = mid + ni * (cols / 2) + mi * (rows / 2);
    let label = |x: i64, y: i64| c - ni * x - mi * y;
    let px = |x: i64| MARGIN + x * CELL;
    let py = |y: i64| MARGIN + (rows - y) * CELL;

    let mut out = String::new();
    header(&mut out, 2 * MARGIN + cols * CELL, 2 * MARGIN + rows * CELL);
    for y in 0..rows {
        for x in 0..cols {
            let l = label(x, y);
            let fill = if set.contains(l) { "#e6e6e6" } else { "white" };
            writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#bbb"/>"##,
                px(x),
                py(y + 1)
            )
            .unwrap();
            let colour = if gens.contains(&l) {
                BLUE
            } else if cogens.contains(&l) {
                RED
            } else {
                "black"
            };
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="14" text-anchor="middle" fill="{colour}">{l}</text>"#,
                px(x) + CELL / 2,
                py(y + 1) + CELL / 2 + 5
            )
            .unwrap();
        }
    }
    // boundary: edges between a member box and a non-member neighbour
    for y in 0..rows {
        for x in 0..cols {
            if !set.contains(label(x, y)) {
                continue;
            }
            if x + 1 < cols && !set.contains(label(x + 1, y)) {
                writeln!(
                    out,
                    r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="{BLUE}" stroke-width="4"/>"#,
                    px(x + 1),
                    py(y),
                    py(y + 1)
                )
                .unwrap();
            }
            if y + 1 < rows && !set.contains(label(x, y + 1)) {
                writeln!(
                    out,
                    r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="{BLUE}" stroke-width="4"/>"#,
                    py(y + 1),
                    px(x),
                    px(x + 1)
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn project(p: &WeylPoint) -> (f64, f64) {
    let c: Vec<f64> = p
        .coords()
        .iter()
        .map(|r| *r.numer() as f64 / *r.denom() as f64)
        .collect();
    (
        (c[2] - c[0]) / 2f64.sqrt(),
        (2.0 * c[1] - c[0] - c[2]) / 6f64.sqrt(),
    )
}

/// A walk through `V^3` in the plane `x_0 + x_1 + x_2 = 0`, over the walls
/// `x_i − x_j = k·m` that meet the picture.
pub fn orbit(points: &[WeylPoint], m: usize) -> String {
    assert_eq!(m, 3, "orbit rendering is rank 3 only");
    let scale = CELL as f64 / 2.0;
    let proj: Vec<(f64, f64)> = points.iter().map(project).collect();
    let pad = m as f64;
    let xmin = proj.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - pad;
    let xmax = proj.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + pad;
    let ymin = proj.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - pad;
    let ymax = proj.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + pad;
    let w = ((xmax - xmin) * scale).ceil() as i64 + 2 * MARGIN;
    let h = ((ymax - ymin) * scale).ceil() as i64 + 2 * MARGIN;
    let sx = |x: f64| MARGIN as f64 + (x - xmin) * scale;
    let sy = |y: f64| MARGIN as f64 + (ymax - y) * scale;

    let mut out = String::new();
    header(&mut out, w, h);
    // walls a·X + b·Y = k·m for x_2 − x_0, x_1 − x_0, x_2 − x_1
    let (r2, r6) = (2f64.sqrt(), 6f64.sqrt());
    let families = [(r2, 0.0), (1.0 / r2, 3.0 / r6), (1.0 / r2, -3.0 / r6)];
    for (a, b) in families {
        let corners = [(xmin, ymin), (xmin, ymax), (xmax, ymin), (xmax, ymax)];
        let vals: Vec<f64> = corners.iter().map(|&(x, y)| a * x + b * y).collect();
        let lo = (vals.iter().copied().fold(f64::INFINITY, f64::min) / m as f64).ceil() as i64;
        let hi = (vals.iter().copied().fold(f64::NEG_INFINITY, f64::max) / m as f64).floor() as i64;
        for k in lo..=hi {
            let t = (k * m as i64) as f64;
            let seg = if b.abs() < 1e-12 {
                ((t / a, ymin), (t / a, ymax))
            } else {
                ((xmin, (t - a * xmin) / b), (xmax, (t - a * xmax) / b))
            };
            writeln!(
                out,
                r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#bbb"/>"##,
                sx(seg.0 .0),
                sy(seg.0 .1),
                sx(seg.1 .0),
                sy(seg.1 .1)
            )
            .unwrap();
        }
    }
    if proj.len() > 1 {
        let pts: Vec<String> = proj
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{BLUE}" stroke-width="2"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }
    for (i, &(x, y)) in proj.iter().enumerate() {
        let colour = if i + 1 == proj.len() { RED } else { BLUE };
        writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{colour}"/>"#,
            sx(x),
            sy(y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rpl_core::ParkingWord;

    #[test]
    fn dyck_path_shape() {
        let p = DyckPath::from_word(ParkingWord::parse("322222000", 6).unwrap()).unwrap();
        let svg = dyck(&p);
        // (9,0) (6,0) (6,2) (1,2) (1,3) (0,3) (0,6) in pixels
        assert!(
            svg.contains(r#"points="380,260 260,260 260,180 60,180 60,140 20,140 20,20""#),
            "{svg}"
        );
        assert_eq!(svg, dyck(&p));
    }

    #[test]
    fn lattice_colours() {
        let s = InvariantSet::new(0, vec![1, 2]).unwrap();
        let svg = lattice(&s, 4, 5).unwrap();
        for g in [0, 3, 4, 6, 7] {
            assert!(svg.contains(&format!(r#"fill="{BLUE}">{g}</text>"#)), "{g}");
        }
        for c in [-4, -1, 1, 2] {
            assert!(svg.contains(&format!(r#"fill="{RED}">{c}</text>"#)), "{c}");
        }
        assert!(!svg.contains(&format!(r#"fill="{BLUE}">5</text>"#)));
    }

    #[test]
    fn single_point_orbit() {
        let x = rpl_core::weyl::fundamental_centroid(3);
        let svg = orbit(&[x], 3);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<polyline"));
    }
}
