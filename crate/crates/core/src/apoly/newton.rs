use serde::Serialize;

/// Convex hull of the exponent support, vertices counter-clockwise starting
/// from the smallest `(m, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
}

impl NewtonPolygon {
    /// Hull edges as vertex pairs. A segment hull has one edge; a point has none.
    pub fn edges(&self) -> Vec<((u32, u32), (u32, u32))> {
        let v = &self.vertices;
        match v.len() {
            0 | 1 => vec![],
            2 => vec![(v[0], v[1])],
            n => (0..n).map(|i| (v[i], v[(i + 1) % n])).collect(),
        }
    }

    /// An edge whose endpoints share the `m` coordinate.
    pub fn vertical_edges(&self) -> Vec<((u32, u32), (u32, u32))> {
        self.edges().into_iter().filter(|(a, b)| a.0 == b.0).collect()
    }

    pub fn has_vertical_edge(&self) -> bool {
        !self.vertical_edges().is_empty()
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain, dropping collinear boundary points.
pub fn newton_polygon(support: &[(u32, u32)]) -> NewtonPolygon {
    let mut pts: Vec<(i64, i64)> = support.iter().map(|&(m, l)| (m as i64, l as i64)).collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return NewtonPolygon {
            vertices: pts.iter().map(|&(m, l)| (m as u32, l as u32)).collect(),
        };
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all points collinear: the chain degenerates to the two endpoints
    NewtonPolygon {
        vertices: lower.into_iter().map(|(m, l)| (m as u32, l as u32)).collect(),
    }
}
