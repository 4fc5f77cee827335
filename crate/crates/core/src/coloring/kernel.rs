//! Backtracking 3-edge-colouring search.
//!
//! Colours are elements of Z2 x Z2 encoded as 0..=3 with XOR as the group
//! operation. At a vertex of degree three with two coloured edges the third
//! colour is forced to their sum, which is the only propagation rule needed.

use super::{Color, EdgeColoring};
use crate::graph::{CubicMultipole, EdgeId, End};

/// A colouring instance: edges of a multipole, some of them removed or precoloured.
pub(crate) struct Instance<'a> {
    g: &'a CubicMultipole,
    /// Incident live edges per vertex (at most three).
    around: Vec<[usize; 3]>,
    around_len: Vec<u8>,
    /// Live edges in search order.
    order: Vec<EdgeId>,
    colors: Vec<u8>,
    trail: Vec<EdgeId>,
}

impl<'a> Instance<'a> {
    /// `removed[e]` drops edge `e` from the instance; removed edges end up with colour 0.
    pub(crate) fn new(g: &'a CubicMultipole, removed: Option<&[bool]>) -> Self {
        let n = g.vertex_count();
        let live = |e: EdgeId| removed.is_none_or(|r| !r[e]);
        let mut around = vec![[usize::MAX; 3]; n];
        let mut around_len = vec![0u8; n];
        for v in 0..n {
            for &(e, _) in g.incidences(v) {
                if live(e) {
                    let k = around_len[v] as usize;
                    around[v][k] = e;
                    around_len[v] += 1;
                }
            }
        }
        // Depth-first vertex order, edges listed as they are first met.
        let mut order = Vec::with_capacity(g.edge_count());
        let mut listed = vec![false; g.edge_count()];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let mut stack = vec![root];
            seen[root] = true;
            while let Some(v) = stack.pop() {
                for &e in &around[v][..around_len[v] as usize] {
                    if !listed[e] {
                        listed[e] = true;
                        order.push(e);
                    }
                }
                for &e in around[v][..around_len[v] as usize].iter().rev() {
                    for end in g.edges()[e].ends {
                        if let End::Vertex(w) = end {
                            if !seen[w] {
                                seen[w] = true;
                                stack.push(w);
                            }
                        }
                    }
                }
            }
        }
        order.extend((0..g.edge_count()).filter(|&e| !listed[e] && live(e)));
        Instance { g, around, around_len, order, colors: vec![0; g.edge_count()], trail: Vec::new() }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.colors[e] = 0;
        }
    }

    /// Colours `e` with `c` and propagates forced colours. Returns false on conflict.
    fn assign(&mut self, e: EdgeId, c: u8) -> bool {
        let mut queue = vec![(e, c)];
        while let Some((e, c)) = queue.pop() {
            match self.colors[e] {
                0 => {}
                x if x == c => continue,
                _ => return false,
            }
            self.colors[e] = c;
            self.trail.push(e);
            for end in self.g.edges()[e].ends {
                let End::Vertex(v) = end else { continue };
                let len = self.around_len[v] as usize;
                let mut free = usize::MAX;
                let mut free_count = 0;
                let mut sum = 0u8;
                for &f in &self.around[v][..len] {
                    if f == e {
                        continue;
                    }
                    match self.colors[f] {
                        0 => {
                            free = f;
                            free_count += 1;
                        }
                        x if x == c => return false,
                        x => sum ^= x,
                    }
                }
                if len == 3 && free_count == 1 {
                    queue.push((free, sum ^ c));
                }
            }
        }
        true
    }

    /// Precolours edge `e`; false on conflict.
    pub(crate) fn fix(&mut self, e: EdgeId, c: Color) -> bool {
        self.assign(e, c.0)
    }

    fn search(&mut self, pos: usize, limit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        let mut pos = pos;
        while pos < self.order.len() && self.colors[self.order[pos]] != 0 {
            pos += 1;
        }
        if pos == self.order.len() {
            return limit(&self.colors);
        }
        let e = self.order[pos];
        for c in 1..=3 {
            let mark = self.trail.len();
            if self.assign(e, c) && self.search(pos + 1, limit) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }

    /// First colouring in search order, if any.
    pub(crate) fn solve(&mut self) -> Option<EdgeColoring> {
        let mut found = None;
        let ok = self.search(0, &mut |c| {
            found = Some(c.to_vec());
            true
        });
        ok.then(|| EdgeColoring::from_raw(found.unwrap()))
    }

    /// Decision only, with the first vertex's colours fixed to break colour symmetry.
    pub(crate) fn decide(&mut self) -> bool {
        if self.trail.is_empty() {
            if let Some(v) = (0..self.around.len()).find(|&v| self.around_len[v] == 3) {
                let [a, b, _] = self.around[v];
                if !(self.assign(a, 1) && self.assign(b, 2)) {
                    return false;
                }
            }
        }
        self.search(0, &mut |_| true)
    }

    /// Visits every colouring; stop early by returning true from `visit`.
    #[cfg(test)]
    pub(crate) fn for_each(&mut self, visit: &mut dyn FnMut(&[u8]) -> bool) {
        self.search(0, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{k4, petersen};

    #[test]
    fn k4_colourings_count() {
        // K4 has exactly one 1-factorisation, so 3! colourings.
        let g = k4();
        let mut inst = Instance::new(&g, None);
        let mut count = 0;
        inst.for_each(&mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 6);
    }

    #[test]
    fn petersen_has_none() {
        let g = petersen();
        assert!(!Instance::new(&g, None).decide());
        assert!(Instance::new(&g, None).solve().is_none());
    }
}
