//! Compiled combinatorial diagram: the cyclic event sequence of a knot
//! traversal (crossing visits, polygon-edge gates, fiber-cut crossings),
//! per-crossing sign and height data, and per-arc turning counters.

use super::knot::{letter_name, parse_letter};
use crate::error::{Error, Result};
use crate::group::conj::{word_conj_canon, ConjClass};
use crate::group::context::{BundleSpec, SurfaceSpec};
use crate::group::elem::BundleElement;
use crate::group::word::{Letter, Word};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    Left,
    Right,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Left => Role::Right,
            Role::Right => Role::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    /// One of the two visits of a projection double point. The role tells
    /// whether this branch is the left branch (its projected velocity,
    /// followed by the other branch's, is a positive frame).
    Crossing { id: u32, role: Role },
    /// Wall crossing spelling a generator of `pi_1(F)`.
    Gate { letter: Letter },
    /// Crossing of the fiber cut angle, counted toward the fiber exponent.
    FiberCut { sign: i8 },
}

/// Per-crossing data: sign of the projection frame of the fiber-upper branch
/// over the lower, and the height bit (true iff the right branch's fiber
/// angle lies below the left branch's, measured from the cut angle 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossInfo {
    pub sign: i8,
    pub h: bool,
}

impl CrossInfo {
    pub fn from_h(h: bool) -> Self {
        CrossInfo { sign: if h { 1 } else { -1 }, h }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCode {
    pub spec: BundleSpec,
    pub events: Vec<Event>,
    /// Turning counter of the arc following each event; a single entry holds
    /// the whole turning when there are no events.
    pub post_turn: Vec<i64>,
    pub crossings: BTreeMap<u32, CrossInfo>,
}

impl DiagramCode {
    pub fn empty(spec: BundleSpec, turning: i64) -> Self {
        DiagramCode { spec, events: Vec::new(), post_turn: vec![turning], crossings: BTreeMap::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let expected = self.events.len().max(1);
        if self.post_turn.len() != expected {
            return Err(Error::InvalidCode(format!(
                "{} events but {} turning entries",
                self.events.len(),
                self.post_turn.len()
            )));
        }
        let mut visits: BTreeMap<u32, Vec<Role>> = BTreeMap::new();
        for ev in &self.events {
            match ev {
                Event::Crossing { id, role } => visits.entry(*id).or_default().push(*role),
                Event::Gate { letter } => {
                    if (letter.gen as usize) >= self.spec.surface.alphabet_size() {
                        return Err(Error::InvalidCode("gate letter outside alphabet".into()));
                    }
                }
                Event::FiberCut { sign } => {
                    if *sign != 1 && *sign != -1 {
                        return Err(Error::InvalidCode("fiber cut sign must be +-1".into()));
                    }
                }
            }
        }
        for (id, roles) in &visits {
            if roles.len() != 2 || roles[0] == roles[1] {
                return Err(Error::InvalidCode(format!(
                    "crossing {id} must appear exactly twice with one left and one right visit"
                )));
            }
            if !self.crossings.contains_key(id) {
                return Err(Error::InvalidCode(format!("crossing {id} missing from table")));
            }
        }
        for id in self.crossings.keys() {
            if !visits.contains_key(id) {
                return Err(Error::InvalidCode(format!(
                    "crossing table entry {id} has no visits"
                )));
            }
        }
        Ok(())
    }

    pub fn total_turning(&self) -> i64 {
        self.post_turn.iter().sum()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.values().map(|c| c.sign as i64).sum()
    }

    /// Signature invariant under all implemented moves: writhe plus turning,
    /// mod 2. Distinguishes the two framed components over an unframed one
    /// as far as the implemented signatures see.
    pub fn parity_signature(&self) -> u8 {
        (self.writhe() + self.total_turning()).rem_euclid(2) as u8
    }

    /// The word spelled by the gate letters from the serialization start.
    pub fn gate_word(&self) -> Word {
        Word::reduce(self.events.iter().filter_map(|e| match e {
            Event::Gate { letter } => Some(*letter),
            _ => None,
        }))
    }

    pub fn fiber_exponent(&self) -> i64 {
        self.events
            .iter()
            .map(|e| match e {
                Event::FiberCut { sign } => *sign as i64,
                _ => 0,
            })
            .sum()
    }

    /// The element of `pi_1(M)` traced by the knot, from the serialization
    /// start; well defined up to conjugacy.
    pub fn knot_class(&self) -> BundleElement {
        BundleElement::from_word(self.spec, self.gate_word(), self.fiber_exponent())
            .expect("gate letters validated")
    }

    /// Conjugacy class of the knot: the component datum in `pi_1(M)`.
    pub fn knot_conj_class(&self) -> ConjClass {
        ConjClass::of(&self.knot_class())
    }

    /// Canonical conjugacy representative of the projection class in
    /// `pi_1(F)`: the component datum of the free loop on the base.
    pub fn base_class_word(&self) -> Word {
        let base = BundleSpec { surface: self.spec.surface, euler: 0 };
        word_conj_canon(&self.knot_class().project(), &base).rep
    }

    /// Positions of the two visits of a crossing in the event list.
    pub fn visit_positions(&self, id: u32) -> Result<(usize, usize)> {
        let mut found = Vec::new();
        for (i, e) in self.events.iter().enumerate() {
            if matches!(e, Event::Crossing { id: c, .. } if *c == id) {
                found.push(i);
            }
        }
        match found.as_slice() {
            [p, q] => Ok((*p, *q)),
            _ => Err(Error::UnknownCrossing(id)),
        }
    }

    pub fn role_at(&self, pos: usize) -> Role {
        match self.events[pos] {
            Event::Crossing { role, .. } => role,
            _ => panic!("position {pos} is not a crossing visit"),
        }
    }

    pub fn next_crossing_id(&self) -> u32 {
        self.crossings.keys().next_back().map_or(0, |k| k + 1)
    }

    /// Loop data between two visit positions (exclusive): gate word and
    /// fiber-cut sum of the arc from `from` to `to` in cyclic order.
    pub fn arc_data(&self, from: usize, to: usize) -> (Word, i64) {
        let n = self.events.len();
        let mut letters = Vec::new();
        let mut cuts = 0i64;
        let mut i = (from + 1) % n;
        while i != to {
            match &self.events[i] {
                Event::Gate { letter } => letters.push(*letter),
                Event::FiberCut { sign } => cuts += *sign as i64,
                Event::Crossing { .. } => {}
            }
            i = (i + 1) % n;
        }
        (Word::reduce(letters), cuts)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("diagramcode\n");
        out.push_str(&format!(
            "surface {} {}\n",
            self.spec.surface.genus, self.spec.surface.punctures
        ));
        out.push_str(&format!("euler {}\n", self.spec.euler));
        if self.events.is_empty() {
            out.push_str(&format!("turn0 {}\n", self.post_turn[0]));
        }
        for (i, e) in self.events.iter().enumerate() {
            match e {
                Event::Crossing { id, role } => {
                    let r = if *role == Role::Left { "L" } else { "R" };
                    out.push_str(&format!("ev x {id} {r} {}\n", self.post_turn[i]));
                }
                Event::Gate { letter } => {
                    out.push_str(&format!(
                        "ev g {} {}\n",
                        letter_name(*letter, &self.spec.surface),
                        self.post_turn[i]
                    ));
                }
                Event::FiberCut { sign } => {
                    let s = if *sign > 0 { "+" } else { "-" };
                    out.push_str(&format!("ev c {s} {}\n", self.post_turn[i]));
                }
            }
        }
        for (id, info) in &self.crossings {
            out.push_str(&format!(
                "cross {id} {} {}\n",
                info.sign,
                if info.h { 1 } else { 0 }
            ));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, first) = lines
            .next()
            .ok_or_else(|| Error::parse(1, 1, "empty code"))?;
        if first.trim() != "diagramcode" {
            return Err(Error::parse(1, 1, "missing diagramcode header"));
        }
        let mut surface: Option<SurfaceSpec> = None;
        let mut euler = 0i64;
        let mut events = Vec::new();
        let mut post_turn = Vec::new();
        let mut turn0: Option<i64> = None;
        let mut crossings = BTreeMap::new();
        for (idx, raw) in lines {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                ["surface", g, p] => {
                    let g = g.parse().map_err(|_| Error::parse(line, 1, "bad genus"))?;
                    let p = p.parse().map_err(|_| Error::parse(line, 1, "bad punctures"))?;
                    surface =
                        Some(SurfaceSpec::new(g, p).map_err(|e| Error::parse(line, 1, e.to_string()))?);
                }
                ["euler", e] => {
                    euler = e.parse().map_err(|_| Error::parse(line, 1, "bad euler"))?;
                }
                ["turn0", t] => {
                    turn0 = Some(t.parse().map_err(|_| Error::parse(line, 1, "bad turning"))?);
                }
                ["ev", "x", id, role, turn] => {
                    let id = id.parse().map_err(|_| Error::parse(line, 1, "bad id"))?;
                    let role = match *role {
                        "L" => Role::Left,
                        "R" => Role::Right,
                        _ => return Err(Error::parse(line, 1, "role must be L or R")),
                    };
                    events.push(Event::Crossing { id, role });
                    post_turn
                        .push(turn.parse().map_err(|_| Error::parse(line, 1, "bad turning"))?);
                }
                ["ev", "g", letter, turn] => {
                    let s = surface.ok_or_else(|| Error::parse(line, 1, "event before surface"))?;
                    let letter = parse_letter(letter, &s)
                        .ok_or_else(|| Error::parse(line, 1, "bad gate letter"))?;
                    events.push(Event::Gate { letter });
                    post_turn
                        .push(turn.parse().map_err(|_| Error::parse(line, 1, "bad turning"))?);
                }
                ["ev", "c", sign, turn] => {
                    let sign = match *sign {
                        "+" => 1i8,
                        "-" => -1i8,
                        _ => return Err(Error::parse(line, 1, "cut sign must be + or -")),
                    };
                    events.push(Event::FiberCut { sign });
                    post_turn
                        .push(turn.parse().map_err(|_| Error::parse(line, 1, "bad turning"))?);
                }
                ["cross", id, sign, h] => {
                    let id = id.parse().map_err(|_| Error::parse(line, 1, "bad id"))?;
                    let sign: i8 =
                        sign.parse().map_err(|_| Error::parse(line, 1, "bad sign"))?;
                    let h = match *h {
                        "0" => false,
                        "1" => true,
                        _ => return Err(Error::parse(line, 1, "h must be 0 or 1")),
                    };
                    crossings.insert(id, CrossInfo { sign, h });
                }
                _ => return Err(Error::parse(line, 1, "unrecognized code line")),
            }
        }
        let surface = surface.ok_or_else(|| Error::parse(1, 1, "missing surface"))?;
        let spec = BundleSpec::new(surface, euler).map_err(|e| Error::parse(1, 1, e.to_string()))?;
        if events.is_empty() {
            post_turn.push(turn0.unwrap_or(0));
        }
        let code = DiagramCode { spec, events, post_turn, crossings };
        code.validate()?;
        Ok(code)
    }
}

impl fmt::Display for DiagramCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}
