//! Cubic multipoles and snarks: junction calculus, 3-edge-colourability,
//! cyclic connectivity, oddness and resistance, canonical labelling, 4-join
//! composition, isomorph-free generation and conjecture checkers.

pub mod canonical;
pub mod coloring;
pub mod composer;
pub mod conjectures;
pub mod generator;
pub mod graph;
pub mod measures;
pub mod structure;
