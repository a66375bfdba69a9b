//! The fundamental polygon realizing the base surface, with the
//! trivialization data used by velocity lifts.
//!
//! Closed case: a convex lattice 4g-gon with the standard edge pairing
//! `a1 b1 a1^-1 b1^-1 ...`. Edge directions are chosen with integer
//! Pythagorean norms, so the direction rotation across each glued edge pair
//! is an exact rational rotation. The jump arcs of those rotations are folded
//! into the turning counter; with that convention the per-edge integer
//! tangent corrections calibrate to zero (checked by the calibration tests),
//! and the vertex of the polygon carries all curvature, which pins the
//! spherized-tangent relation `prod [a_i,b_i] = f^(2-2g)`.
//!
//! Open case: the plane with one vertical cut ray descending from each
//! puncture at `x = k`; crossing the ray below the puncture rightward spells
//! the positive generator, and the flat trivialization needs no corrections.

use super::geom::{rat, Dir, Pt, Rat, Rot};
use crate::error::{Error, Result};
use crate::group::context::{BundleSpec, SurfaceKind};
use crate::group::word::Letter;
use num::{Signed, Zero};

/// A paired polygon edge (closed case).
#[derive(Debug, Clone)]
pub struct EdgeInfo {
    /// Gate letter spelled when exiting through this edge.
    pub letter: Letter,
    /// Index of the identified edge.
    pub pair: usize,
    /// Direction rotation applied to a velocity crossing outward here.
    pub rot: Rot,
}

#[derive(Debug, Clone)]
enum Model {
    /// Convex 4g-gon, vertices in ccw order.
    Closed { vertices: Vec<Pt>, edges: Vec<EdgeInfo> },
    /// Cut rays at x = 1..=rank, y < 0.
    Open { rank: usize },
}

/// Geometric chart model of the base surface.
#[derive(Debug, Clone)]
pub struct PolygonModel {
    spec: BundleSpec,
    model: Model,
    /// Per-generator integer tangent corrections added at gate crossings.
    /// With jump-arc counting these calibrate to zero; the field is kept as
    /// the trivialization datum and validated by the calibration suite.
    corrections: Vec<i64>,
}

impl PolygonModel {
    pub fn new(spec: BundleSpec) -> Self {
        let n_letters = spec.surface.alphabet_size();
        let corrections = vec![0i64; n_letters];
        match spec.surface.kind() {
            SurfaceKind::Open => {
                PolygonModel { spec, model: Model::Open { rank: n_letters }, corrections }
            }
            _ => {
                let g = spec.surface.genus as i64;
                // Edge vectors (1 - j^2, 2j) for j = 0..2g, then their
                // negatives: squared norms (1 + j^2)^2 are perfect squares,
                // the directions strictly increase in angle, and the polygon
                // closes because opposite edges cancel.
                let mut vectors: Vec<Dir> = Vec::new();
                for j in 0..(2 * g) {
                    vectors.push(Dir::of(1 - j * j, 2 * j));
                }
                for j in 0..(2 * g) {
                    vectors.push(vectors[j as usize].neg());
                }
                let mut vertices = vec![Pt::of(0, 0)];
                for v in &vectors[..vectors.len() - 1] {
                    let last = vertices.last().unwrap();
                    vertices.push(Pt::new(&last.x + &v.x, &last.y + &v.y));
                }
                let mut edges = Vec::with_capacity(vectors.len());
                for e in 0..vectors.len() {
                    let block = e / 4;
                    let r = e % 4;
                    let gen = 2 * block + (r % 2);
                    let pair = if r < 2 { e + 2 } else { e - 2 };
                    edges.push(EdgeInfo {
                        letter: Letter::new(gen, r >= 2),
                        pair,
                        rot: Rot::identity(),
                    });
                }
                for e in 0..edges.len() {
                    let to = vectors[edges[e].pair].neg();
                    let rot = Rot::between(&vectors[e], &to)
                        .expect("edge norms are perfect squares");
                    assert!(rot.is_proper(), "paired edges must not be parallel");
                    edges[e].rot = rot;
                }
                PolygonModel { spec, model: Model::Closed { vertices, edges }, corrections }
            }
        }
    }

    pub fn spec(&self) -> &BundleSpec {
        &self.spec
    }

    pub fn correction(&self, letter: Letter) -> i64 {
        let c = self.corrections[letter.gen as usize];
        if letter.inv {
            -c
        } else {
            c
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self.model, Model::Closed { .. })
    }

    /// Number of cut rays (open case).
    pub fn rank(&self) -> usize {
        match &self.model {
            Model::Open { rank } => *rank,
            Model::Closed { edges, .. } => edges.len() / 2,
        }
    }

    pub fn vertices(&self) -> &[Pt] {
        match &self.model {
            Model::Closed { vertices, .. } => vertices,
            Model::Open { .. } => &[],
        }
    }

    fn edges(&self) -> &[EdgeInfo] {
        match &self.model {
            Model::Closed { edges, .. } => edges,
            Model::Open { .. } => &[],
        }
    }

    /// Edge endpoint pair (directed, ccw).
    pub fn edge_points(&self, e: usize) -> (Pt, Pt) {
        let vs = self.vertices();
        (vs[e].clone(), vs[(e + 1) % vs.len()].clone())
    }

    /// The directed edge through which a positively (resp. negatively)
    /// signed gate letter exits.
    pub fn exit_edge(&self, letter: Letter) -> Result<usize> {
        for (e, info) in self.edges().iter().enumerate() {
            if info.letter == letter {
                return Ok(e);
            }
        }
        Err(Error::Context(format!("no polygon edge carries letter index {}", letter.gen)))
    }

    pub fn edge_info(&self, e: usize) -> &EdgeInfo {
        &self.edges()[e]
    }

    /// Point at parameter t of directed edge e.
    pub fn edge_point_at(&self, e: usize, t: &Rat) -> Pt {
        let (a, b) = self.edge_points(e);
        a.lerp(&b, t)
    }

    /// Chart point identified with parameter t of edge e: parameter 1 - t of
    /// the paired edge.
    pub fn glued_point(&self, e: usize, t: &Rat) -> (usize, Rat, Pt) {
        let pair = self.edges()[e].pair;
        let t2 = rat(1) - t;
        let p = self.edge_point_at(pair, &t2);
        (pair, t2, p)
    }

    /// Strictly inside the polygon (closed) or off every cut ray and
    /// puncture (open).
    pub fn point_ok(&self, p: &Pt) -> bool {
        match &self.model {
            Model::Closed { vertices, .. } => {
                let n = vertices.len();
                for k in 0..n {
                    let a = &vertices[k];
                    let b = &vertices[(k + 1) % n];
                    if a.to(b).cross(&a.to(p)) <= Rat::zero() {
                        return false;
                    }
                }
                true
            }
            Model::Open { rank } => {
                for k in 1..=*rank {
                    let on_line = p.x == rat(k as i64);
                    if on_line && !p.y.is_positive() {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// Cut rays crossed by an open-case segment, ordered by parameter along
    /// the segment. Errors on contact with a puncture or a segment running
    /// along a ray.
    pub fn ray_crossings(&self, a: &Pt, b: &Pt) -> Result<Vec<(Rat, Letter)>> {
        let rank = match &self.model {
            Model::Open { rank } => *rank,
            Model::Closed { .. } => return Ok(Vec::new()),
        };
        let mut out = Vec::new();
        let dx = &b.x - &a.x;
        for k in 1..=rank {
            let xk = rat(k as i64);
            if dx.is_zero() {
                if a.x == xk {
                    return Err(Error::Genericity(format!(
                        "segment runs along the cut ray at x = {k}"
                    )));
                }
                continue;
            }
            let t = (&xk - &a.x) / dx.clone();
            if t <= Rat::zero() || t >= rat(1) {
                continue;
            }
            let y = &a.y + t.clone() * (&b.y - &a.y);
            if y.is_zero() {
                return Err(Error::Genericity(format!(
                    "segment passes through the puncture at ({k}, 0)"
                )));
            }
            if y.is_negative() {
                // Rightward crossing spells the positive generator.
                let letter = Letter::new(k - 1, dx.is_negative());
                out.push((t, letter));
            }
        }
        out.sort_by(|p, q| p.0.cmp(&q.0));
        Ok(out)
    }
}
