//! Gromov products, δ-hyperbolicity at a basepoint and hyperbolic
//! orthogonality inside a ball.

use num_rational::Rational64;

use super::{GraphBall, VertexSet};
use crate::{Error, Result};

/// `2⟨x, y⟩_a = d(x, a) + d(y, a) - d(x, y)` from certified distances.
fn doubled_product(ball: &GraphBall, x: usize, y: usize, a: usize) -> Result<i64> {
    let dxa = ball.distance(x, a)? as i64;
    let dya = ball.distance(y, a)? as i64;
    let dxy = ball.distance(x, y)? as i64;
    Ok(dxa + dya - dxy)
}

/// `⟨x, y⟩_a = ½(d(x, a) + d(y, a) - d(x, y))`.
pub fn gromov_product(ball: &GraphBall, x: usize, y: usize, a: usize) -> Result<Rational64> {
    Ok(Rational64::new(doubled_product(ball, x, y, a)?, 2))
}

/// Least `δ` for which every certified triple of the ball satisfies
/// `⟨x, y⟩_a >= min{⟨x, z⟩_a, ⟨z, y⟩_a} - δ/4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaEstimate {
    pub delta: Rational64,
    /// Triple `(x, y, z)` attaining the maximum deficiency, if positive.
    pub witness: Option<(usize, usize, usize)>,
    /// Vertices taking part (those with certified distances to all others).
    pub vertices_used: usize,
    pub vertices_skipped: usize,
}

pub fn delta_estimate(ball: &GraphBall, a: usize) -> Result<DeltaEstimate> {
    let n = ball.len();
    if n < 3 {
        return Err(Error::pre(format!(
            "a δ estimate needs at least 3 vertices, the ball has {n}"
        )));
    }
    let mut used = Vec::new();
    for x in 0..n {
        if (0..n).all(|y| ball.distance(x, y).is_ok()) {
            used.push(x);
        }
    }
    let m = used.len();
    let mut g = vec![0i32; m * m];
    for (i, &x) in used.iter().enumerate() {
        for (j, &y) in used.iter().enumerate() {
            g[i * m + j] = doubled_product(ball, x, y, a)? as i32;
        }
    }
    // deficiency min(g_xz, g_zy) - g_xy, all in doubled units
    let mut best = 0i32;
    let mut witness = None;
    for i in 0..m {
        let row_x = &g[i * m..(i + 1) * m];
        for k in 0..m {
            let gxz = row_x[k];
            let row_z = &g[k * m..(k + 1) * m];
            let local = (i..m)
                .map(|j| gxz.min(row_z[j]) - row_x[j])
                .enumerate()
                .max_by_key(|&(_, d)| d);
            if let Some((off, d)) = local {
                if d > best {
                    best = d;
                    witness = Some((used[i], used[i + off], used[k]));
                }
            }
        }
    }
    // δ = 4 · (best / 2)
    Ok(DeltaEstimate {
        delta: Rational64::from_integer(2 * best as i64),
        witness,
        vertices_used: m,
        vertices_skipped: n - m,
    })
}

/// Threshold answer for `sup_{a ∈ A, c ∈ C} ⟨a, c⟩_p < r` inside the ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicVerdict {
    pub orthogonal_at_r: bool,
    pub sup: Rational64,
    pub attained_at: Option<(usize, usize)>,
    /// `A` or `C` is empty.
    pub degenerate: bool,
}

pub fn hyperbolic_orth(
    ball: &GraphBall,
    a: &VertexSet,
    c: &VertexSet,
    p: usize,
    r: Rational64,
) -> Result<HyperbolicVerdict> {
    ball.check_vertices(a)?;
    ball.check_vertices(c)?;
    if a.is_empty() || c.is_empty() {
        return Ok(HyperbolicVerdict {
            orthogonal_at_r: r > Rational64::from_integer(0),
            sup: Rational64::from_integer(0),
            attained_at: None,
            degenerate: true,
        });
    }
    let mut sup = i64::MIN;
    let mut attained_at = None;
    for x in a.iter() {
        for y in c.iter() {
            let g = doubled_product(ball, x, y, p)?;
            if g > sup {
                sup = g;
                attained_at = Some((x, y));
            }
        }
    }
    let sup = Rational64::new(sup, 2);
    Ok(HyperbolicVerdict {
        orthogonal_at_r: sup < r,
        sup,
        attained_at,
        degenerate: false,
    })
}
