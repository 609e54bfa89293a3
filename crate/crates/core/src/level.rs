//! Levels, height, balance and level spread.
//!
//! A digraph is balanced when every cycle of its underlying graph has net
//! length zero; connected balanced digraphs carry a level assignment with
//! `level(v) = level(u) + 1` across each arc `(u,v)`, normalized so the
//! minimum level is zero.

use thiserror::Error;

use crate::graph::Digraph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LevelError {
    #[error("digraph is not connected")]
    Disconnected,
    #[error("digraph is not balanced (cycle with nonzero net length)")]
    Unbalanced,
    #[error("input is not an oriented path")]
    NotAPath,
}

/// Normalized levels of a connected balanced digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelAssignment {
    levels: Vec<usize>,
    height: usize,
}

impl LevelAssignment {
    pub fn level(&self, v: u32) -> usize {
        self.levels[v as usize]
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn height(&self) -> usize {
        self.height
    }
}

fn raw_levels(g: &Digraph, start: u32, level: &mut [Option<i64>]) -> bool {
    level[start as usize] = Some(0);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let lv = level[v as usize].expect("visited");
        for &w in g.out_neighbors(v) {
            match level[w as usize] {
                None => {
                    level[w as usize] = Some(lv + 1);
                    stack.push(w);
                }
                Some(lw) if lw != lv + 1 => return false,
                _ => {}
            }
        }
        for &u in g.in_neighbors(v) {
            match level[u as usize] {
                None => {
                    level[u as usize] = Some(lv - 1);
                    stack.push(u);
                }
                Some(lu) if lu != lv - 1 => return false,
                _ => {}
            }
        }
    }
    true
}

/// True iff every cycle of the underlying graph has net length zero,
/// equivalently each component admits a consistent level assignment.
pub fn is_balanced(g: &Digraph) -> bool {
    let mut level = vec![None; g.order()];
    for s in 0..g.order() as u32 {
        if level[s as usize].is_none() && !raw_levels(g, s, &mut level) {
            return false;
        }
    }
    true
}

/// Level assignment of a connected balanced digraph, min level zero.
pub fn levels(g: &Digraph) -> Result<LevelAssignment, LevelError> {
    if g.order() == 0 || !g.is_weakly_connected() {
        return Err(LevelError::Disconnected);
    }
    let mut level = vec![None; g.order()];
    if !raw_levels(g, 0, &mut level) {
        return Err(LevelError::Unbalanced);
    }
    let raw: Vec<i64> = level.into_iter().map(|l| l.expect("connected")).collect();
    let min = *raw.iter().min().expect("nonempty");
    let shifted: Vec<usize> = raw.iter().map(|&l| (l - min) as usize).collect();
    let height = *shifted.iter().max().expect("nonempty");
    Ok(LevelAssignment { levels: shifted, height })
}

/// Checks the oriented-path shape: connected, |arcs| = order-1, underlying
/// degrees at most 2, and returns the traversal order from one endpoint.
pub(crate) fn path_traversal(g: &Digraph) -> Result<Vec<u32>, LevelError> {
    if g.order() == 0 {
        return Err(LevelError::NotAPath);
    }
    if g.order() == 1 {
        return if g.arc_count() == 0 { Ok(vec![0]) } else { Err(LevelError::NotAPath) };
    }
    if g.arc_count() != g.order() - 1 || !g.is_weakly_connected() {
        return Err(LevelError::NotAPath);
    }
    let mut ends = Vec::new();
    for v in 0..g.order() as u32 {
        let nb = g.neighbors(v);
        // parallel/antiparallel arcs between a pair collapse in neighbors()
        if nb.len() != g.degree(v) {
            return Err(LevelError::NotAPath);
        }
        match nb.len() {
            1 => ends.push(v),
            2 => {}
            _ => return Err(LevelError::NotAPath),
        }
    }
    if ends.len() != 2 {
        return Err(LevelError::NotAPath);
    }
    let start = ends[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while order.len() < g.order() {
        order.push(cur);
        let nb = g.neighbors(cur);
        let next = nb.iter().copied().find(|&w| w != prev);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    if order.len() != g.order() {
        return Err(LevelError::NotAPath);
    }
    Ok(order)
}

/// Max minus min of cumulative levels along an oriented path: the smallest
/// `k - 1` such that the path maps into the directed path on `k` vertices.
pub fn level_spread(path: &Digraph) -> Result<usize, LevelError> {
    let order = path_traversal(path)?;
    let mut lv: i64 = 0;
    let (mut min, mut max) = (0i64, 0i64);
    for w in order.windows(2) {
        if path.has_arc(w[0], w[1]) {
            lv += 1;
        } else {
            lv -= 1;
        }
        min = min.min(lv);
        max = max.max(lv);
    }
    Ok((max - min) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_ac_cycle, make_directed_path, make_q_path};
    use crate::graph::Digraph;

    #[test]
    fn directed_triangle_is_unbalanced() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_balanced(&c3));
    }

    #[test]
    fn ac5_is_balanced() {
        assert!(is_balanced(&make_ac_cycle(5).unwrap()));
    }

    #[test]
    fn oriented_trees_are_balanced() {
        let t = Digraph::new(5, [(0, 1), (2, 1), (2, 3), (4, 3)]).unwrap();
        assert!(is_balanced(&t));
    }

    #[test]
    fn q6_levels_and_height() {
        let la = levels(&make_q_path(6).unwrap()).unwrap();
        assert_eq!(la.levels(), &[0, 1, 2, 1, 2, 3]);
        assert_eq!(la.height(), 3);
    }

    #[test]
    fn directed_path_levels() {
        let la = levels(&make_directed_path(4).unwrap()).unwrap();
        assert_eq!(la.levels(), &[0, 1, 2, 3]);
        assert_eq!(la.height(), 3);
    }

    #[test]
    fn single_arc_levels() {
        let la = levels(&make_directed_path(2).unwrap()).unwrap();
        assert_eq!(la.levels(), &[0, 1]);
        assert_eq!(la.height(), 1);
    }

    #[test]
    fn levels_reject_disconnected_and_unbalanced() {
        let two = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(levels(&two).unwrap_err(), LevelError::Disconnected);
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(levels(&c3).unwrap_err(), LevelError::Unbalanced);
    }

    #[test]
    fn level_spread_of_q_paths() {
        assert_eq!(level_spread(&make_q_path(5).unwrap()).unwrap(), 2);
        assert_eq!(level_spread(&make_q_path(6).unwrap()).unwrap(), 3);
        assert_eq!(level_spread(&make_directed_path(7).unwrap()).unwrap(), 6);
    }

    #[test]
    fn level_spread_rejects_non_paths() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(level_spread(&c3).unwrap_err(), LevelError::NotAPath);
    }
}
