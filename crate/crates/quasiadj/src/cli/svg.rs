//! SVG plot of the two-branch face arrangement inside the unit square.
//!
//! The only floating-point arithmetic in the crate lives here: geometry is
//! computed in exact rationals and converted to `f64` purely to place
//! pixels.

use num_traits::ToPrimitive;

use crate::algebra::Rat;
use crate::walls::{Face, WallCandidate};

const SIZE: f64 = 1000.0;
const LO: f64 = 60.0;
const HI: f64 = 940.0;
const SPAN: f64 = HI - LO;

fn px(x: f64) -> f64 {
    LO + SPAN * x
}

fn py(y: f64) -> f64 {
    HI - SPAN * y
}

fn fmt(v: f64) -> String {
    format!("{v:.1}")
}

fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

fn depth_color(depth: u64) -> &'static str {
    const PALETTE: [&str; 4] = ["#c0392b", "#8e44ad", "#2471a3", "#1e8449"];
    PALETTE[((depth.max(1) - 1) % 4) as usize]
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Clips the line `m1*x + m2*y = n` to the unit square; returns the two
/// extreme points of the intersection segment, if it is a segment.
fn clip_wall(coeffs: &[i64], level: i64) -> Option<((Rat, Rat), (Rat, Rat))> {
    let (m1, m2) = (coeffs[0], coeffs[1]);
    let n = rat(level);
    let zero = rat(0);
    let one = rat(1);
    let mut points: Vec<(Rat, Rat)> = Vec::new();
    // Intersections with the four sides; branch multiplicities are
    // positive, so both divisions are safe.
    let mut push = |x: Rat, y: Rat| {
        if x >= zero && x <= one && y >= zero && y <= one {
            let p = (x, y);
            if !points.contains(&p) {
                points.push(p);
            }
        }
    };
    push(zero.clone(), n.clone() / rat(m2));
    push(one.clone(), (n.clone() - rat(m1)) / rat(m2));
    push(n.clone() / rat(m1), zero.clone());
    push((n - rat(m2)) / rat(m1), one.clone());
    if points.len() < 2 {
        return None;
    }
    points.sort();
    Some((points[0].clone(), points[points.len() - 1].clone()))
}

pub(super) fn render(faces: &[Face], candidates: &[WallCandidate]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {s} {s}\" \
         width=\"{s}\" height=\"{s}\">\n",
        s = SIZE
    ));
    out.push_str("<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n");

    // Light candidate walls, clipped to the unit square.
    for wall in candidates {
        if let Some(((x1, y1), (x2, y2))) = clip_wall(&wall.coeffs, wall.level) {
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" \
                 stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
                fmt(px(to_f64(&x1))),
                fmt(py(to_f64(&y1))),
                fmt(px(to_f64(&x2))),
                fmt(py(to_f64(&y2)))
            ));
        }
    }

    // Unit-square frame and axis labels.
    out.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" \
         fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n",
        fmt(LO),
        fmt(LO),
        fmt(SPAN),
        fmt(SPAN)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"20\" text-anchor=\"middle\">0</text>\n",
        fmt(LO),
        fmt(HI + 30.0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"20\" text-anchor=\"middle\">1</text>\n",
        fmt(HI),
        fmt(HI + 30.0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"20\" text-anchor=\"end\">1</text>\n",
        fmt(LO - 10.0),
        fmt(LO + 6.0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"20\" text-anchor=\"middle\">x1</text>\n",
        fmt((LO + HI) / 2.0),
        fmt(HI + 40.0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"20\" text-anchor=\"end\">x2</text>\n",
        fmt(LO - 10.0),
        fmt((LO + HI) / 2.0)
    ));

    // Heavy face records with endpoint markers and depth labels. A closed
    // endpoint is a filled dot, an open endpoint a white-filled one.
    for face in faces {
        let color = depth_color(face.depth);
        let (sx, sy) = (to_f64(&face.start[0]), to_f64(&face.start[1]));
        let (ex, ey) = (to_f64(&face.end[0]), to_f64(&face.end[1]));
        if face.start == face.end {
            out.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"{color}\"/>\n",
                fmt(px(sx)),
                fmt(py(sy))
            ));
        } else {
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" \
                 stroke=\"{color}\" stroke-width=\"4\"/>\n",
                fmt(px(sx)),
                fmt(py(sy)),
                fmt(px(ex)),
                fmt(py(ey))
            ));
            for (x, y, closed) in [(sx, sy, face.start_closed), (ex, ey, face.end_closed)] {
                let fill = if closed { color } else { "white" };
                out.push_str(&format!(
                    "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"{fill}\" \
                     stroke=\"{color}\" stroke-width=\"2\"/>\n",
                    fmt(px(x)),
                    fmt(py(y))
                ));
            }
        }
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"18\" fill=\"{color}\">d={}</text>\n",
            fmt(px((sx + ex) / 2.0) + 8.0),
            fmt(py((sy + ey) / 2.0) - 8.0),
            face.depth
        ));
    }

    out.push_str("</svg>\n");
    out
}
