//! Semi-walks, patterns and net length.
//!
//! A semi-walk traverses arcs either along or against their direction; its
//! pattern is the resulting forward/backward symbol sequence. Patterns are
//! the language of no-certificates: a walk following the pattern of `Q_l`
//! witnesses `Q_l -> G`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Digraph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("single-vertex walk has an empty pattern")]
    EmptyPattern,
    #[error("walk step {index}: no arc {from}->{to} ({dir}) in host")]
    MissingArc { index: usize, from: u32, to: u32, dir: Direction },
    #[error("walk length {vertices} does not match {directions} directions + 1")]
    LengthMismatch { vertices: usize, directions: usize },
    #[error("vertex {0} out of range for host of order {1}")]
    VertexOutOfRange(u32, usize),
    #[error("traversal does not cover each host arc exactly once (arc {0}->{1} covered {2} times)")]
    NotExactCover(u32, u32, usize),
    #[error("pattern symbol {0:?} is not 'F' or 'B'")]
    BadSymbol(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => write!(f, "F"),
            Direction::Backward => write!(f, "B"),
        }
    }
}

/// A forward/backward symbol sequence describing a semi-walk shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pattern(pub Vec<Direction>);

impl Pattern {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Direction] {
        &self.0
    }

    /// Forward arcs minus backward arcs.
    pub fn net(&self) -> i64 {
        self.0
            .iter()
            .map(|d| match d {
                Direction::Forward => 1,
                Direction::Backward => -1,
            })
            .sum()
    }

    /// Pattern read back to front with every symbol flipped, i.e. the
    /// pattern of the same walk traversed in reverse.
    pub fn reversed(&self) -> Pattern {
        Pattern(self.0.iter().rev().map(|d| d.flip()).collect())
    }

    pub fn parse(s: &str) -> Result<Pattern, WalkError> {
        s.chars()
            .map(|c| match c {
                'F' | 'f' => Ok(Direction::Forward),
                'B' | 'b' => Ok(Direction::Backward),
                other => Err(WalkError::BadSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Pattern)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A vertex sequence together with the direction in which each step
/// traverses its arc. Vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiWalk {
    pub vertices: Vec<u32>,
    pub directions: Vec<Direction>,
}

impl SemiWalk {
    pub fn new(vertices: Vec<u32>, directions: Vec<Direction>) -> Result<Self, WalkError> {
        if vertices.is_empty() || vertices.len() != directions.len() + 1 {
            return Err(WalkError::LengthMismatch {
                vertices: vertices.len(),
                directions: directions.len(),
            });
        }
        Ok(SemiWalk { vertices, directions })
    }

    pub fn len_arcs(&self) -> usize {
        self.directions.len()
    }

    /// Checks every step against the host's arc set.
    pub fn validate(&self, host: &Digraph) -> Result<(), WalkError> {
        if self.vertices.len() != self.directions.len() + 1 {
            return Err(WalkError::LengthMismatch {
                vertices: self.vertices.len(),
                directions: self.directions.len(),
            });
        }
        for &v in &self.vertices {
            if v as usize >= host.order() {
                return Err(WalkError::VertexOutOfRange(v, host.order()));
            }
        }
        for (i, &dir) in self.directions.iter().enumerate() {
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            let (u, v) = match dir {
                Direction::Forward => (a, b),
                Direction::Backward => (b, a),
            };
            if !host.has_arc(u, v) {
                return Err(WalkError::MissingArc { index: i, from: u, to: v, dir });
            }
        }
        Ok(())
    }
}

/// The direction sequence of a walk.
pub fn pattern_of(walk: &SemiWalk) -> Result<Pattern, WalkError> {
    if walk.directions.is_empty() {
        return Err(WalkError::EmptyPattern);
    }
    Ok(Pattern(walk.directions.clone()))
}

/// Net length of a traversal that covers each arc of the host exactly once
/// (a path or cycle traversal): forward arcs minus backward arcs.
pub fn net_length(host: &Digraph, traversal: &SemiWalk) -> Result<i64, WalkError> {
    traversal.validate(host)?;
    let mut covered = std::collections::BTreeMap::new();
    for (i, &dir) in traversal.directions.iter().enumerate() {
        let (a, b) = (traversal.vertices[i], traversal.vertices[i + 1]);
        let arc = match dir {
            Direction::Forward => (a, b),
            Direction::Backward => (b, a),
        };
        *covered.entry(arc).or_insert(0usize) += 1;
    }
    for &(u, v) in host.arcs() {
        let n = covered.get(&(u, v)).copied().unwrap_or(0);
        if n != 1 {
            return Err(WalkError::NotExactCover(u, v, n));
        }
    }
    if covered.len() != host.arc_count() {
        // covered arcs not in the host are impossible after validate()
        let (&(u, v), &n) = covered.iter().next().expect("nonempty");
        return Err(WalkError::NotExactCover(u, v, n));
    }
    Ok(Pattern(traversal.directions.clone()).net())
}

/// Finds a semi-walk of `g` whose pattern equals `p`, if one exists.
///
/// Layered reachability over `|p|` steps: layer `i+1` holds every vertex
/// reachable from layer `i` by following arcs forward or backward per the
/// symbol, with one predecessor recorded per vertex (smallest id wins).
/// Runs in `O(|p| * |arcs|)`.
pub fn find_pattern_walk(g: &Digraph, p: &Pattern) -> Option<SemiWalk> {
    if p.is_empty() {
        return None;
    }
    let n = g.order();
    // layers[i][v] = Some(pred) if v reachable at step i (pred meaningless at i=0)
    let mut layers: Vec<Vec<Option<u32>>> = Vec::with_capacity(p.len() + 1);
    layers.push((0..n).map(|_| Some(u32::MAX)).collect());
    for &sym in p.symbols() {
        let prev = layers.last().expect("at least one layer");
        let mut next: Vec<Option<u32>> = vec![None; n];
        let mut any = false;
        for v in 0..n as u32 {
            if prev[v as usize].is_none() {
                continue;
            }
            let succ = match sym {
                Direction::Forward => g.out_neighbors(v),
                Direction::Backward => g.in_neighbors(v),
            };
            for &w in succ {
                if next[w as usize].is_none() {
                    next[w as usize] = Some(v);
                    any = true;
                }
            }
        }
        if !any {
            return None;
        }
        layers.push(next);
    }
    let last = layers.last().expect("layers nonempty");
    let end = (0..n as u32).find(|&v| last[v as usize].is_some())?;
    let mut rev = vec![end];
    for i in (1..layers.len()).rev() {
        let pred = layers[i][*rev.last().expect("nonempty") as usize].expect("reachable chain");
        rev.push(pred);
    }
    rev.reverse();
    Some(SemiWalk { vertices: rev, directions: p.0.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_ac_cycle, make_directed_path, make_q_path, q_path_pattern};

    fn dirs(s: &str) -> Vec<Direction> {
        Pattern::parse(s).unwrap().0
    }

    #[test]
    fn pattern_of_directed_three_path() {
        let walk = SemiWalk::new(vec![0, 1, 2], dirs("FF")).unwrap();
        assert_eq!(pattern_of(&walk).unwrap(), Pattern::parse("FF").unwrap());
    }

    #[test]
    fn pattern_of_q6_walk() {
        // q0->q1->q2<-q3->q4->q5 along Q_6
        let q6 = make_q_path(6).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 2, 3, 4, 5], dirs("FFBFF")).unwrap();
        walk.validate(&q6).unwrap();
        assert_eq!(pattern_of(&walk).unwrap(), Pattern::parse("FFBFF").unwrap());
    }

    #[test]
    fn pattern_of_back_and_forth() {
        let g = Digraph::new(2, [(0, 1)]).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 0], dirs("FB")).unwrap();
        walk.validate(&g).unwrap();
        assert_eq!(pattern_of(&walk).unwrap(), Pattern::parse("FB").unwrap());
    }

    #[test]
    fn single_vertex_walk_has_no_pattern() {
        let walk = SemiWalk { vertices: vec![0], directions: vec![] };
        assert_eq!(pattern_of(&walk), Err(WalkError::EmptyPattern));
    }

    #[test]
    fn net_length_directed_path() {
        let p4 = make_directed_path(4).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 2, 3], dirs("FFF")).unwrap();
        assert_eq!(net_length(&p4, &walk).unwrap(), 3);
    }

    #[test]
    fn net_length_q6_is_three() {
        let q6 = make_q_path(6).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 2, 3, 4, 5], dirs("FFBFF")).unwrap();
        assert_eq!(net_length(&q6, &walk).unwrap(), 3);
    }

    #[test]
    fn net_length_even_ac_cycle_is_zero() {
        let ac6 = make_ac_cycle(6).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 2, 3, 4, 5, 0], dirs("FBFBFB")).unwrap();
        assert_eq!(net_length(&ac6, &walk).unwrap(), 0);
    }

    #[test]
    fn net_length_rejects_partial_traversal() {
        let p4 = make_directed_path(4).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 2], dirs("FF")).unwrap();
        assert!(matches!(
            net_length(&p4, &walk),
            Err(WalkError::NotExactCover(2, 3, 0))
        ));
    }

    #[test]
    fn pattern_walk_in_directed_triangle() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let walk = find_pattern_walk(&c3, &Pattern::parse("FFBFF").unwrap()).unwrap();
        walk.validate(&c3).unwrap();
        assert_eq!(walk.directions, dirs("FFBFF"));
    }

    #[test]
    fn pattern_walk_absent_on_single_arc() {
        let g = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(find_pattern_walk(&g, &Pattern::parse("FF").unwrap()).is_none());
    }

    #[test]
    fn q6_pattern_absent_in_ac5() {
        let ac5 = make_ac_cycle(5).unwrap();
        assert!(find_pattern_walk(&ac5, &q_path_pattern(6).unwrap()).is_none());
    }

    #[test]
    fn walk_validation_names_missing_arc() {
        let g = Digraph::new(3, [(0, 1)]).unwrap();
        let walk = SemiWalk::new(vec![0, 1, 2], dirs("FF")).unwrap();
        assert_eq!(
            walk.validate(&g),
            Err(WalkError::MissingArc { index: 1, from: 1, to: 2, dir: Direction::Forward })
        );
    }
}
