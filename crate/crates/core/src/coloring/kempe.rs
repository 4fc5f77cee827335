use super::{Color, ColoringError, EdgeColoring};
use crate::graph::{CubicMultipole, EdgeId, End};

fn check_pair(i: Color, j: Color) -> Result<(), ColoringError> {
    if i == j || i.is_zero() || j.is_zero() || i.0 > 3 || j.0 > 3 {
        return Err(ColoringError::BadColorPair(i.0, j.0));
    }
    Ok(())
}

/// Edges of the maximal i-j alternating walk through `start`, in walk order.
pub fn kempe_chain(m: &CubicMultipole, c: &EdgeColoring, start: EdgeId, i: Color, j: Color) -> Result<Vec<EdgeId>, ColoringError> {
    check_pair(i, j)?;
    if c.len() != m.edge_count() {
        return Err(ColoringError::ColoringMismatch);
    }
    m.edge(start)?;
    if c.get(start) != i && c.get(start) != j {
        return Err(ColoringError::StartNotOnChain(start));
    }
    // Follow the chain out of `start` through end `side`; true if it closed up.
    let follow = |side: usize, out: &mut Vec<EdgeId>| -> bool {
        let (mut cur, mut side) = (start, side);
        loop {
            let End::Vertex(v) = m.edges()[cur].ends[side] else { return false };
            let want = if c.get(cur) == i { j } else { i };
            let Some(&(next, next_side)) = m.incidences(v).iter().find(|&&(e, _)| e != cur && c.get(e) == want) else {
                return false;
            };
            if next == start {
                return true;
            }
            out.push(next);
            cur = next;
            side = 1 - next_side;
        }
    };
    let mut forward = Vec::new();
    if follow(1, &mut forward) {
        let mut chain = vec![start];
        chain.extend(forward);
        return Ok(chain);
    }
    let mut backward = Vec::new();
    follow(0, &mut backward);
    let mut chain: Vec<EdgeId> = backward.into_iter().rev().collect();
    chain.push(start);
    chain.extend(forward);
    Ok(chain)
}

/// Exchanges colours `i` and `j` along the Kempe chain through `start`.
pub fn kempe_switch(m: &CubicMultipole, c: &EdgeColoring, start: EdgeId, i: Color, j: Color) -> Result<EdgeColoring, ColoringError> {
    let chain = kempe_chain(m, c, start, i, j)?;
    let mut out = c.clone();
    for e in chain {
        out.set(e, if c.get(e) == i { j } else { i });
    }
    Ok(out)
}
