//! ASCII and SVG drawings. SVG output uses a fixed 1000 × 1000 viewport
//! with inline styles.

use std::fmt::Write as _;
use std::io::Write;

use coloured_dyck::paths::{DyckStep, SchroederStep, TStep};
use coloured_dyck::{
    ColouredDyckPath, Dissection, DyckPath, Error, NcTree, NonCrossingPartition, SchroederPath,
    TPath,
};

use crate::{CliError, CliResult, Context, Format, Outcome};

/// A step as `(dx, dy)`.
type Step = (i64, i64);

enum Drawable {
    Path(Vec<Step>),
    Coloured(ColouredDyckPath),
    Tree(NcTree),
    Partition(NonCrossingPartition),
    Dissection(Dissection),
}

fn dyck_steps(p: &DyckPath) -> Vec<Step> {
    p.steps()
        .iter()
        .map(|s| match s {
            DyckStep::U => (1, 1),
            DyckStep::D => (1, -1),
        })
        .collect()
}

fn schroeder_steps(p: &SchroederPath) -> Vec<Step> {
    p.steps()
        .iter()
        .map(|s| match s {
            SchroederStep::U => (1, 1),
            SchroederStep::D => (1, -1),
            SchroederStep::L => (2, 0),
        })
        .collect()
}

fn t_steps(p: &TPath) -> Vec<Step> {
    p.steps()
        .iter()
        .map(|s| match s {
            TStep::H => (1, 2),
            TStep::G => (2, 1),
            TStep::D => (1, -1),
        })
        .collect()
}

fn parse_input(input: &str) -> CliResult<Drawable> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(if value.get("edges").is_some() {
            Drawable::Tree(NcTree::from_json(trimmed)?)
        } else if value.get("blocks").is_some() {
            Drawable::Partition(NonCrossingPartition::from_json(trimmed)?)
        } else if value.get("diagonals").is_some() {
            Drawable::Dissection(Dissection::from_json(trimmed)?)
        } else {
            return Err(Error::Parse("unrecognised JSON structure".into()).into());
        });
    }
    if trimmed.contains(';') {
        return Ok(Drawable::Coloured(ColouredDyckPath::parse(trimmed)?));
    }
    Ok(Drawable::Path(if trimmed.contains(['H', 'G']) {
        t_steps(&TPath::parse(trimmed)?)
    } else if trimmed.contains('L') {
        schroeder_steps(&SchroederPath::parse(trimmed)?)
    } else {
        dyck_steps(&DyckPath::parse(trimmed)?)
    }))
}

pub fn run(input: &str, ctx: &Context, out: &mut dyn Write) -> CliResult<Outcome> {
    let drawable = parse_input(input)?;
    let text = match ctx.format {
        None | Some(Format::Ascii) | Some(Format::Text) => ascii(&drawable),
        Some(Format::Svg) => svg(&drawable),
        Some(f) => {
            return Err(CliError::Usage(format!(
                "render takes ascii or svg, not {f:?}"
            )));
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------- ascii

/// Height profile: `/` and `\` for unit steps, `_` for flat cells.
fn ascii_profile(steps: &[Step]) -> String {
    let width: i64 = steps.iter().map(|s| s.0).sum();
    let mut height = 0;
    let mut top = 1;
    for s in steps {
        height += s.1;
        top = top.max(height);
    }
    let mut grid = vec![vec![' '; width.max(0) as usize]; top as usize];
    let (mut x, mut y) = (0usize, 0i64);
    for &(dx, dy) in steps {
        match (dx, dy) {
            (1, 1) => grid[y as usize][x] = '/',
            (1, -1) => grid[(y - 1) as usize][x] = '\\',
            (2, 0) => {
                let row = (y - 1).max(0) as usize;
                grid[row][x] = '_';
                grid[row][x + 1] = '_';
            }
            (1, 2) => {
                grid[y as usize][x] = '/';
                grid[(y + 1) as usize][x] = '/';
            }
            (2, 1) => {
                grid[y as usize][x] = '_';
                grid[y as usize][x + 1] = '/';
            }
            _ => unreachable!("no such step"),
        }
        x += dx as usize;
        y += dy;
    }
    let mut text = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        text.push_str(line.trim_end());
        text.push('\n');
    }
    text
}

fn alpha_label(index: usize) -> String {
    if index == 0 {
        "α".into()
    } else {
        (index - 1).to_string()
    }
}

fn ascii(drawable: &Drawable) -> String {
    match drawable {
        Drawable::Path(steps) => ascii_profile(steps),
        Drawable::Coloured(p) => {
            let mut text = ascii_profile(&dyck_steps(p.base()));
            for (i, (a, c)) in p.base().ascents().iter().zip(p.colours()).enumerate() {
                let _ = writeln!(
                    text,
                    "ascent {} (step {}, length {}): {c}",
                    i + 1,
                    a.start,
                    a.length
                );
                for line in ascii_profile(&schroeder_steps(c)).lines() {
                    let _ = writeln!(text, "    {line}");
                }
            }
            text
        }
        Drawable::Tree(t) => {
            let edges: Vec<String> = t.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
            format!(
                "tree on {} points\nedges: {}\n",
                t.vertices(),
                edges.join(" ")
            )
        }
        Drawable::Partition(p) => {
            let blocks: Vec<String> = p
                .blocks()
                .iter()
                .map(|b| {
                    let items: Vec<String> = b.iter().map(ToString::to_string).collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            format!(
                "partition of {} points\nblocks: {}\n",
                p.points(),
                blocks.join(" ")
            )
        }
        Drawable::Dissection(d) => {
            let diagonals: Vec<String> = d
                .diagonals()
                .iter()
                .map(|&(a, b)| format!("{}-{}", alpha_label(a), alpha_label(b)))
                .collect();
            let cells: Vec<String> = d
                .cells()
                .iter()
                .map(|c| {
                    let items: Vec<String> = c.iter().map(|&v| alpha_label(v)).collect();
                    format!("[{}]", items.join(","))
                })
                .collect();
            format!(
                "{}-gon α,0..{}\ndiagonals: {}\ncells: {}\n",
                d.vertex_count(),
                d.k(),
                diagonals.join(" "),
                cells.join(" ")
            )
        }
    }
}

// ---------------------------------------------------------------- svg

const HEADER: &str = r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" width="1000" height="1000">
<rect x="0" y="0" width="1000" height="1000" style="fill:white"/>
"#;

fn polyline(points: &[(f64, f64)], style: &str) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|(x, y)| format!("{x:.1},{y:.1}"))
        .collect();
    format!(
        "<polyline points=\"{}\" style=\"{style}\"/>\n",
        coords.join(" ")
    )
}

fn walk(start: (f64, f64), steps: &[Step]) -> Vec<(f64, f64)> {
    let mut points = vec![start];
    let (mut x, mut y) = start;
    for &(dx, dy) in steps {
        x += dx as f64;
        y += dy as f64;
        points.push((x, y));
    }
    points
}

/// Maps lattice coordinates into the viewport, baseline centred.
struct Frame {
    scale: f64,
    base: f64,
}

impl Frame {
    fn new(width: f64, height: f64) -> Self {
        let scale = 900.0 / width.max(height).max(1.0);
        Frame {
            scale,
            base: 500.0 + height * scale / 2.0,
        }
    }

    fn map(&self, points: &[(f64, f64)]) -> Vec<(f64, f64)> {
        points
            .iter()
            .map(|(x, y)| (50.0 + x * self.scale, self.base - y * self.scale))
            .collect()
    }
}

fn path_svg(steps: &[Step], body: &mut String) -> Frame {
    let points = walk((0.0, 0.0), steps);
    let width = points.last().map_or(0.0, |p| p.0);
    let height = points.iter().map(|p| p.1).fold(0.0, f64::max);
    let frame = Frame::new(width, height);
    body.push_str(&polyline(
        &frame.map(&[(0.0, 0.0), (width, 0.0)]),
        "fill:none;stroke:#999999;stroke-width:2",
    ));
    body.push_str(&polyline(
        &frame.map(&points),
        "fill:none;stroke:black;stroke-width:4",
    ));
    frame
}

/// Point `p` of `count`, clockwise from the top.
fn circle_point(p: usize, count: usize) -> (f64, f64) {
    circle_point_at(p, count, 400.0)
}

fn circle_points(labels: &[String], body: &mut String) {
    for (p, label) in labels.iter().enumerate() {
        let (x, y) = circle_point(p, labels.len());
        let (lx, ly) = circle_point_at(p, labels.len(), 440.0);
        let _ = writeln!(
            body,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"8\" style=\"fill:black\"/>"
        );
        let _ = writeln!(
            body,
            "<text x=\"{lx:.1}\" y=\"{ly:.1}\" style=\"font-family:sans-serif;font-size:28px;text-anchor:middle;dominant-baseline:middle\">{label}</text>"
        );
    }
}

fn circle_point_at(p: usize, count: usize, radius: f64) -> (f64, f64) {
    let angle = 2.0 * std::f64::consts::PI * p as f64 / count.max(1) as f64;
    (500.0 + radius * angle.sin(), 500.0 - radius * angle.cos())
}

fn chord(a: usize, b: usize, count: usize, style: &str) -> String {
    polyline(&[circle_point(a, count), circle_point(b, count)], style)
}

fn svg(drawable: &Drawable) -> String {
    let mut body = String::new();
    match drawable {
        Drawable::Path(steps) => {
            path_svg(steps, &mut body);
        }
        Drawable::Coloured(p) => {
            let frame = path_svg(&dyck_steps(p.base()), &mut body);
            let heights = p.base().heights();
            for (a, c) in p.base().ascents().iter().zip(p.colours()) {
                let (x0, y0) = (a.start as f64, heights[a.start] as f64);
                // colour coordinates (u, v) rotate onto the ascent diagonal
                let rotated: Vec<(f64, f64)> = walk((0.0, 0.0), &schroeder_steps(c))
                    .into_iter()
                    .map(|(u, v)| (x0 + (u - v) / 2.0, y0 + (u + v) / 2.0))
                    .collect();
                body.push_str(&polyline(
                    &frame.map(&rotated),
                    "fill:none;stroke:#c0392b;stroke-width:3",
                ));
            }
        }
        Drawable::Tree(t) => {
            let n = t.vertices();
            for &(a, b) in t.edges() {
                body.push_str(&chord(a - 1, b - 1, n, "stroke:black;stroke-width:4"));
            }
            let labels: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            circle_points(&labels, &mut body);
        }
        Drawable::Partition(p) => {
            let n = p.points();
            for block in p.blocks() {
                let mut corners: Vec<(f64, f64)> =
                    block.iter().map(|&v| circle_point(v - 1, n)).collect();
                if block.len() > 2 {
                    corners.push(corners[0]);
                }
                body.push_str(&polyline(
                    &corners,
                    "fill:#d6eaf8;stroke:#1f618d;stroke-width:4",
                ));
            }
            let labels: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            circle_points(&labels, &mut body);
        }
        Drawable::Dissection(d) => {
            let n = d.vertex_count();
            let mut outline: Vec<(f64, f64)> = (0..n).map(|v| circle_point(v, n)).collect();
            outline.push(outline[0]);
            body.push_str(&polyline(&outline, "fill:none;stroke:black;stroke-width:4"));
            for &(a, b) in d.diagonals() {
                body.push_str(&chord(a, b, n, "stroke:#1f618d;stroke-width:3"));
            }
            let labels: Vec<String> = (0..n).map(alpha_label).collect();
            circle_points(&labels, &mut body);
        }
    }
    format!("{HEADER}{body}</svg>\n")
}
