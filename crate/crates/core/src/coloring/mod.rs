//! 3-edge-colourability, boundary colourings of multipoles, 4-pole
//! classification, Kempe switches and minimum 4-edge-colourings.

mod boundary;
mod kempe;
pub(crate) mod kernel;
mod minimum;

pub use boundary::{boundary_colorings, classify_four_pole, BoundaryColoringSet, Couples, FourPoleType, OpenKind, PoleClassification};
pub use kempe::{kempe_chain, kempe_switch};
pub use minimum::{minimum_zero_class_coloring, MinimumColoring};

use std::fmt;
use std::ops::BitXor;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CubicMultipole, EdgeId, End, GraphError};

/// An element of Z2 x Z2: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Color(pub u8);

impl Color {
    pub const ZERO: Color = Color(0);
    pub const NONZERO: [Color; 3] = [Color(1), Color(2), Color(3)];

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl BitXor for Color {
    type Output = Color;
    fn bitxor(self, rhs: Color) -> Color {
        Color(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("multipole contains a loop")]
    LoopPresent,
    #[error("expected a 4-pole, found {0} semiedges")]
    NotAFourPole(usize),
    #[error("colours {0} and {1} do not form a pair of distinct non-zero colours")]
    BadColorPair(u8, u8),
    #[error("edge {0} is not on a Kempe chain of the given colours")]
    StartNotOnChain(EdgeId),
    #[error("colouring does not match the multipole")]
    ColoringMismatch,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Colour per edge, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    pub(crate) fn from_raw(raw: Vec<u8>) -> Self {
        EdgeColoring { colors: raw.into_iter().map(Color).collect() }
    }

    pub fn get(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.colors[e] = c;
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Adjacent edges (sharing a vertex) receive distinct colours.
    pub fn is_proper(&self, g: &CubicMultipole) -> bool {
        if self.colors.len() != g.edge_count() {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let around: Vec<Color> = g.incidences(v).iter().map(|&(e, _)| self.colors[e]).collect();
            let loops = g.incidences(v).windows(2).any(|w| w[0].0 == w[1].0);
            !loops && (0..around.len()).all(|i| (i + 1..around.len()).all(|j| around[i] != around[j]))
        })
    }

    /// A proper colouring using only 1, 2, 3.
    pub fn is_proper_three_coloring(&self, g: &CubicMultipole) -> bool {
        self.is_proper(g) && self.colors.iter().all(|c| !c.is_zero())
    }

    /// Colours on the semiedges, in slot order.
    pub fn boundary(&self, g: &CubicMultipole) -> Vec<Color> {
        g.semiedges().iter().map(|&(e, _)| self.colors[e]).collect()
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }
}

pub(crate) fn require_loopless(m: &CubicMultipole) -> Result<(), ColoringError> {
    if m.edges().iter().any(|e| e.is_loop()) {
        Err(ColoringError::LoopPresent)
    } else {
        Ok(())
    }
}

/// Decides 3-edge-colourability.
pub fn is_three_edge_colorable(m: &CubicMultipole) -> Result<bool, ColoringError> {
    require_loopless(m)?;
    Ok(kernel::Instance::new(m, None).decide())
}

/// The first 3-edge-colouring in the kernel's search order, if one exists.
pub fn three_edge_coloring(m: &CubicMultipole) -> Result<Option<EdgeColoring>, ColoringError> {
    require_loopless(m)?;
    Ok(kernel::Instance::new(m, None).solve())
}

/// Whether `m` minus the edges flagged in `removed` is 3-edge-colourable.
pub fn is_colorable_without(m: &CubicMultipole, removed: &[bool]) -> Result<bool, ColoringError> {
    require_loopless(m)?;
    Ok(kernel::Instance::new(m, Some(removed)).decide())
}

/// Like [`is_colorable_without`] but returns the colouring, removed edges coloured 0.
pub fn coloring_without(m: &CubicMultipole, removed: &[bool]) -> Result<Option<EdgeColoring>, ColoringError> {
    require_loopless(m)?;
    Ok(kernel::Instance::new(m, Some(removed)).solve())
}

/// Endpoints of an edge that are vertices.
pub(crate) fn edge_vertices(m: &CubicMultipole, e: EdgeId) -> impl Iterator<Item = usize> + '_ {
    m.edges()[e].ends.into_iter().filter_map(End::vertex)
}
