//! Geometric input: a PL framed knot over the fundamental polygon, with
//! rational coordinates and fiber angles, and its text file format.
//!
//! ```text
//! # comments and blank lines are ignored
//! surface 2 0
//! euler -2
//! sample -2 5 1/4
//! gate a1 1/3          # closed case: exit wall a1 at edge parameter 1/3
//! sample -3 6 1/4
//! ...
//! ```
//!
//! Samples are cyclic; a `gate` line attaches to the segment from the sample
//! before it to the sample after it. Open surfaces declare no gates: cut-ray
//! crossings are read off the geometry. The framing is implicit, projecting
//! to the right of the knot diagram.

use super::geom::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};
use crate::group::context::{BundleSpec, SurfaceSpec};
use crate::group::word::Letter;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone)]
pub struct Sample {
    pub x: Rat,
    pub y: Rat,
    pub theta: Rat,
    /// Source line for diagnostics (0 when built programmatically).
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct GateDecl {
    /// The gate sits on the segment leaving this sample index.
    pub after_sample: usize,
    pub letter: Letter,
    /// Edge parameter of the exit point, strictly inside (0, 1).
    pub t: Rat,
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct FramedKnotPL {
    pub spec: BundleSpec,
    pub samples: Vec<Sample>,
    pub gates: Vec<GateDecl>,
}

impl FramedKnotPL {
    pub fn new(spec: BundleSpec) -> Self {
        FramedKnotPL { spec, samples: Vec::new(), gates: Vec::new() }
    }

    pub fn push_sample(&mut self, x: Rat, y: Rat, theta: Rat) {
        self.samples.push(Sample { x, y, theta, line: 0 });
    }

    pub fn push_gate(&mut self, letter: Letter, t: Rat) {
        let after = self.samples.len().saturating_sub(1);
        self.gates.push(GateDecl { after_sample: after, letter, t, line: 0 });
    }

    pub fn gate_after(&self, sample: usize) -> Option<&GateDecl> {
        self.gates.iter().find(|g| g.after_sample == sample)
    }

    /// Structural validation independent of the polygon geometry.
    pub fn basic_validate(&self) -> Result<()> {
        if self.samples.len() < 3 {
            return Err(Error::Genericity("a knot needs at least 3 samples".into()));
        }
        for (i, s) in self.samples.iter().enumerate() {
            if s.theta.is_negative() || s.theta >= Rat::one() {
                return Err(Error::Genericity(format!(
                    "sample {} (line {}): fiber angle must lie in [0, 1)",
                    i, s.line
                )));
            }
        }
        let mut seen = vec![false; self.samples.len()];
        for g in &self.gates {
            if g.after_sample >= self.samples.len() {
                return Err(Error::Genericity(format!(
                    "gate (line {}) attached past the last sample",
                    g.line
                )));
            }
            if seen[g.after_sample] {
                return Err(Error::Genericity(format!(
                    "two gates on the segment after sample {}; add an intermediate sample",
                    g.after_sample
                )));
            }
            seen[g.after_sample] = true;
            if !self.spec.surface.is_closed() {
                return Err(Error::Genericity(
                    "gate declarations are only for closed surfaces; cut crossings are implicit"
                        .into(),
                ));
            }
            if g.t <= Rat::zero() || g.t >= Rat::one() {
                return Err(Error::Genericity(format!(
                    "gate (line {}): edge parameter must be strictly inside (0, 1)",
                    g.line
                )));
            }
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut surface: Option<SurfaceSpec> = None;
        let mut euler: Option<i64> = None;
        let mut samples: Vec<Sample> = Vec::new();
        let mut gates: Vec<GateDecl> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let mut parts = l.split_whitespace();
            let key = parts.next().unwrap();
            let rest: Vec<&str> = parts.collect();
            match key {
                "surface" => {
                    if rest.len() != 2 {
                        return Err(Error::parse(line, 1, "surface takes genus and punctures"));
                    }
                    let g = rest[0]
                        .parse()
                        .map_err(|_| Error::parse(line, 9, "bad genus"))?;
                    let p = rest[1]
                        .parse()
                        .map_err(|_| Error::parse(line, 11, "bad puncture count"))?;
                    surface = Some(SurfaceSpec::new(g, p).map_err(|e| {
                        Error::parse(line, 1, e.to_string())
                    })?);
                }
                "euler" => {
                    if rest.len() != 1 {
                        return Err(Error::parse(line, 1, "euler takes one integer"));
                    }
                    euler =
                        Some(rest[0].parse().map_err(|_| Error::parse(line, 7, "bad euler"))?);
                }
                "sample" => {
                    if rest.len() != 3 {
                        return Err(Error::parse(line, 1, "sample takes x y theta"));
                    }
                    let x = parse_rat(rest[0])
                        .ok_or_else(|| Error::parse(line, 8, "bad rational x"))?;
                    let y = parse_rat(rest[1])
                        .ok_or_else(|| Error::parse(line, 8, "bad rational y"))?;
                    let theta = parse_rat(rest[2])
                        .ok_or_else(|| Error::parse(line, 8, "bad rational theta"))?;
                    samples.push(Sample { x, y, theta, line });
                }
                "gate" => {
                    if rest.len() != 2 {
                        return Err(Error::parse(line, 1, "gate takes a letter and a parameter"));
                    }
                    let s = surface
                        .ok_or_else(|| Error::parse(line, 1, "gate before surface header"))?;
                    let letter = parse_letter(rest[0], &s)
                        .ok_or_else(|| Error::parse(line, 6, "bad gate letter"))?;
                    let t = parse_rat(rest[1])
                        .ok_or_else(|| Error::parse(line, 6, "bad gate parameter"))?;
                    if samples.is_empty() {
                        return Err(Error::parse(line, 1, "gate before any sample"));
                    }
                    gates.push(GateDecl { after_sample: samples.len() - 1, letter, t, line });
                }
                other => {
                    return Err(Error::parse(line, 1, format!("unknown directive `{other}`")));
                }
            }
        }
        let surface = surface.ok_or_else(|| Error::parse(1, 1, "missing surface header"))?;
        let euler = euler.unwrap_or(0);
        let spec = BundleSpec::new(surface, euler).map_err(|e| Error::parse(1, 1, e.to_string()))?;
        let knot = FramedKnotPL { spec, samples, gates };
        knot.basic_validate()?;
        Ok(knot)
    }
}

pub(crate) fn parse_letter(tok: &str, surface: &SurfaceSpec) -> Option<Letter> {
    let (name, inv) = match tok.strip_suffix("^-1") {
        Some(n) => (n, true),
        None => (tok, false),
    };
    surface.parse_gen(name).map(|g| Letter::new(g, inv))
}

pub(crate) fn letter_name(l: Letter, surface: &SurfaceSpec) -> String {
    let base = surface.gen_name(l.gen as usize);
    if l.inv {
        format!("{base}^-1")
    } else {
        base
    }
}

impl fmt::Display for FramedKnotPL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "surface {} {}", self.spec.surface.genus, self.spec.surface.punctures)?;
        writeln!(f, "euler {}", self.spec.euler)?;
        for (i, s) in self.samples.iter().enumerate() {
            writeln!(f, "sample {} {} {}", fmt_rat(&s.x), fmt_rat(&s.y), fmt_rat(&s.theta))?;
            if let Some(g) = self.gate_after(i) {
                writeln!(
                    f,
                    "gate {} {}",
                    letter_name(g.letter, &self.spec.surface),
                    fmt_rat(&g.t)
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let text = "# a loop\nsurface 2 0\neuler -2\nsample 0 1 1/4\ngate a1 1/3\nsample -1 2 1/4\nsample -2 1 3/8\n";
        let k = FramedKnotPL::parse(text).unwrap();
        assert_eq!(k.samples.len(), 3);
        assert_eq!(k.gates.len(), 1);
        let printed = k.to_string();
        let back = FramedKnotPL::parse(&printed).unwrap();
        assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn parse_errors_carry_position() {
        let text = "surface 2 0\neuler -2\nsample bogus 1 1/4\nsample 0 1 1/4\nsample 1 1 1/4\n";
        match FramedKnotPL::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn open_surface_rejects_gates() {
        let text = "surface 0 2\nsample 0 1 0\ngate c1 1/2\nsample 1 1 0\nsample 1 2 0\n";
        assert!(FramedKnotPL::parse(text).is_err());
    }

    #[test]
    fn theta_range_checked() {
        let text = "surface 0 2\nsample 0 1 1\nsample 1 1 0\nsample 1 2 0\n";
        assert!(FramedKnotPL::parse(text).is_err());
    }
}
