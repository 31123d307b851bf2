//! Extended (unsorted) majorization and extended Lorenz curves.
//!
//! Sequences are compared through their prefix sums in the order given; no
//! sorting is applied.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

fn check_lengths(x: &[u64], y: &[u64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::Empty);
    }
    Ok(())
}

fn prefix_sums(x: &[u64]) -> impl Iterator<Item = u64> + '_ {
    x.iter().scan(0u64, |acc, &v| {
        *acc += v;
        Some(*acc)
    })
}

/// First 1-based prefix length `i` where `Σ_{j<=i} x_j < Σ_{j<=i} y_j`.
pub fn first_prefix_violation(x: &[u64], y: &[u64]) -> Result<Option<usize>> {
    check_lengths(x, y)?;
    Ok(prefix_sums(x)
        .zip(prefix_sums(y))
        .position(|(sx, sy)| sx < sy)
        .map(|i| i + 1))
}

/// `x ⊵ y`: every prefix sum of `x` is at least that of `y`, and the totals
/// are equal.
pub fn extended_majorizes(x: &[u64], y: &[u64]) -> Result<bool> {
    check_lengths(x, y)?;
    let totals_equal = x.iter().sum::<u64>() == y.iter().sum::<u64>();
    Ok(totals_equal && first_prefix_violation(x, y)?.is_none())
}

/// How two equal-length sequences relate under extended majorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Comparison {
    /// Each majorizes the other (their prefix sums coincide).
    Both,
    LeftMajorizes {
        /// Prefix where right fails to dominate left.
        right_fails_at: usize,
    },
    RightMajorizes {
        left_fails_at: usize,
    },
    Incomparable {
        left_fails_at: Option<usize>,
        right_fails_at: Option<usize>,
        totals_equal: bool,
    },
}

pub fn compare(x: &[u64], y: &[u64]) -> Result<Comparison> {
    let left_fails_at = first_prefix_violation(x, y)?;
    let right_fails_at = first_prefix_violation(y, x)?;
    let totals_equal = x.iter().sum::<u64>() == y.iter().sum::<u64>();
    Ok(match (totals_equal, left_fails_at, right_fails_at) {
        (true, None, None) => Comparison::Both,
        (true, None, Some(r)) => Comparison::LeftMajorizes { right_fails_at: r },
        (true, Some(l), None) => Comparison::RightMajorizes { left_fails_at: l },
        _ => Comparison::Incomparable {
            left_fails_at,
            right_fails_at,
            totals_equal,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurvePoint {
    pub x: Rational,
    pub y: Rational,
}

/// Breakpoints `(i/(N-1), s_i/TOT)` for `i = 0..N-1` of the piecewise-linear
/// extended Lorenz curve, with `s_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LorenzCurve {
    points: Vec<CurvePoint>,
}

impl LorenzCurve {
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Trapezoidal area under the curve.
    pub fn area(&self) -> Rational {
        self.points
            .windows(2)
            .map(|w| (w[1].x - w[0].x) * (w[0].y + w[1].y) * Rational::new(1, 2))
            .sum()
    }

    /// `x,y` header then one breakpoint per line, nine decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for p in &self.points {
            let _ = writeln!(out, "{},{}", p.x.to_decimal(9), p.y.to_decimal(9));
        }
        out
    }
}

pub fn lorenz_points(x: &[u64]) -> Result<LorenzCurve> {
    if x.is_empty() {
        return Err(Error::Empty);
    }
    let total: u64 = x.iter().sum();
    if total == 0 {
        return Err(Error::ZeroTotal);
    }
    let steps = x.len() as i128;
    let tot = total as i128;
    let points = std::iter::once(0u64)
        .chain(prefix_sums(x))
        .enumerate()
        .map(|(i, s)| CurvePoint {
            x: Rational::new(i as i128, steps),
            y: Rational::new(s as i128, tot),
        })
        .collect();
    Ok(LorenzCurve { points })
}

/// True iff the extended Lorenz curve of `x` lies on or above that of `y`
/// at every breakpoint. Requires equal lengths and totals.
pub fn curve_dominates(x: &[u64], y: &[u64]) -> Result<bool> {
    check_lengths(x, y)?;
    let (tx, ty) = (x.iter().sum::<u64>(), y.iter().sum::<u64>());
    if tx != ty {
        return Err(Error::TotalsDiffer {
            left: tx,
            right: ty,
        });
    }
    let cx = lorenz_points(x)?;
    let cy = lorenz_points(y)?;
    Ok(cx.points.iter().zip(&cy.points).all(|(a, b)| a.y >= b.y))
}

/// `2·area − 1` under the extended Lorenz curve. Negative when the curve
/// runs below the diagonal.
pub fn gini_geometric(x: &[u64]) -> Result<Rational> {
    let curve = lorenz_points(x)?;
    Ok(Rational::integer(2) * curve.area() - Rational::ONE)
}

/// A labelled curve for [`render_svg`].
pub struct NamedCurve<'a> {
    pub label: &'a str,
    pub curve: &'a LorenzCurve,
}

const SVG_SIZE: f64 = 600.0;
const SVG_MARGIN: f64 = 40.0;
const SVG_COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Polylines of each curve plus the diagonal in a 600×600 viewport.
pub fn render_svg(curves: &[NamedCurve<'_>]) -> String {
    let span = SVG_SIZE - 2.0 * SVG_MARGIN;
    let map = |p: &CurvePoint| {
        (
            SVG_MARGIN + p.x.to_f64() * span,
            SVG_SIZE - SVG_MARGIN - p.y.to_f64() * span,
        )
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600">"#
    );
    let _ = writeln!(out, r#"  <rect width="600" height="600" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"  <line x1="{m}" y1="{b}" x2="{b}" y2="{m}" stroke="#999" stroke-dasharray="4 4"/>"##,
        m = SVG_MARGIN,
        b = SVG_SIZE - SVG_MARGIN
    );
    for (i, named) in curves.iter().enumerate() {
        let pts: Vec<String> = named
            .curve
            .points
            .iter()
            .map(|p| {
                let (sx, sy) = map(p);
                format!("{sx:.3},{sy:.3}")
            })
            .collect();
        let color = SVG_COLORS[i % SVG_COLORS.len()];
        let _ = writeln!(
            out,
            r#"  <polyline fill="none" stroke="{color}" stroke-width="2" points="{}"><title>{}</title></polyline>"#,
            pts.join(" "),
            named.label
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" fill="{color}" font-size="14">{}</text>"#,
            SVG_MARGIN + 10.0,
            SVG_MARGIN + 16.0 * (i as f64 + 1.0),
            named.label
        );
    }
    out.push_str("</svg>\n");
    out
}
