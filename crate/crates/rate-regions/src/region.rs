use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

/// A pair of information rates in bits/dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatePoint {
    pub r12: f64,
    pub r21: f64,
}

impl RatePoint {
    pub fn new(r12: f64, r21: f64) -> Self {
        debug_assert!(r12 >= 0.0 && r21 >= 0.0);
        Self { r12, r21 }
    }

    /// Componentwise dominance within a tolerance.
    pub fn dominates(&self, other: &RatePoint, tol: f64) -> bool {
        self.r12 >= other.r12 - tol && self.r21 >= other.r21 - tol
    }
}

/// Tag identifying which bound or scheme a region came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Outer,
    Df,
    Hf,
    ShannonInner,
    Pnc,
    AdderOuter,
    Regime,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scheme::Outer => "outer",
            Scheme::Df => "df",
            Scheme::Hf => "hf",
            Scheme::ShannonInner => "shannon-inner",
            Scheme::Pnc => "pnc",
            Scheme::AdderOuter => "adder-outer",
            Scheme::Regime => "regime",
        };
        f.write_str(s)
    }
}

/// The dominant boundary of an achievable (or outer-bound) rate set:
/// a Pareto staircase sorted by `r12` ascending with `r21` non-increasing,
/// closed under time-sharing (upper concave envelope).
#[derive(Debug, Clone, PartialEq)]
pub struct RateRegion {
    scheme: Scheme,
    points: Vec<RatePoint>,
    param_json: String,
}

impl RateRegion {
    /// Build a region from an arbitrary bag of achievable points.
    pub fn from_points(scheme: Scheme, points: Vec<RatePoint>, param_json: String) -> Self {
        let pruned = pareto_prune(points);
        let points = concave_envelope(pruned);
        Self {
            scheme,
            points,
            param_json,
        }
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn points(&self) -> &[RatePoint] {
        &self.points
    }

    pub fn param_json(&self) -> &str {
        &self.param_json
    }

    /// Largest achievable `r21` at a given `r12`, interpolating linearly
    /// along the frontier (valid because the region is closed under
    /// time-sharing). `None` if `r12` exceeds the frontier.
    pub fn boundary_r21(&self, r12: f64) -> Option<f64> {
        let pts = &self.points;
        if pts.is_empty() {
            return None;
        }
        if r12 <= pts[0].r12 {
            return Some(pts[0].r21);
        }
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if r12 <= b.r12 {
                if (b.r12 - a.r12).abs() < f64::EPSILON {
                    return Some(a.r21.max(b.r21));
                }
                let t = (r12 - a.r12) / (b.r12 - a.r12);
                return Some(a.r21 + t * (b.r21 - a.r21));
            }
        }
        None
    }

    /// Whether the region (down-closure of the frontier) contains `q`
    /// within `tol`.
    pub fn dominates(&self, q: &RatePoint, tol: f64) -> bool {
        match self.boundary_r21(q.r12 - tol) {
            Some(bound) => q.r21 <= bound + tol,
            None => false,
        }
    }

    /// Write as CSV with header `r12,r21,scheme,param_json`, rows in
    /// ascending `r12` order.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        // the JSON field is quoted RFC 4180 style since it contains commas
        let quoted = format!("\"{}\"", self.param_json.replace('"', "\"\""));
        writeln!(out, "r12,r21,scheme,param_json")?;
        for p in &self.points {
            writeln!(out, "{},{},{},{}", p.r12, p.r21, self.scheme, quoted)?;
        }
        Ok(())
    }
}

/// Keep only non-dominated points; result sorted by `r12` ascending,
/// `r21` strictly decreasing.
pub(crate) fn pareto_prune(mut points: Vec<RatePoint>) -> Vec<RatePoint> {
    points.retain(|p| p.r12.is_finite() && p.r21.is_finite());
    points.sort_by(|a, b| {
        b.r12
            .partial_cmp(&a.r12)
            .unwrap()
            .then(b.r21.partial_cmp(&a.r21).unwrap())
    });
    let mut kept: Vec<RatePoint> = Vec::new();
    let mut best_r21 = f64::NEG_INFINITY;
    for p in points {
        if p.r21 > best_r21 {
            kept.push(p);
            best_r21 = p.r21;
        }
    }
    kept.reverse();
    kept
}

/// Upper concave envelope of a Pareto staircase (time-sharing closure).
/// Input and output are sorted by `r12` ascending.
pub(crate) fn concave_envelope(points: Vec<RatePoint>) -> Vec<RatePoint> {
    if points.len() <= 2 {
        return points;
    }
    let mut hull: Vec<RatePoint> = Vec::with_capacity(points.len());
    for p in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // drop b if it lies on or below segment a-p
            let cross = (b.r12 - a.r12) * (p.r21 - a.r21) - (b.r21 - a.r21) * (p.r12 - a.r12);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}
