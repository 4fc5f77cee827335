use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::kernel::Instance;
use super::{require_loopless, Color, ColoringError};
use crate::graph::CubicMultipole;

/// Colouring type of a 4-pole: the lexicographically least image of its
/// boundary tuple under colour permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FourPoleType {
    T1111,
    T1122,
    T1212,
    T1221,
}

impl FourPoleType {
    pub const ALL: [FourPoleType; 4] = [FourPoleType::T1111, FourPoleType::T1122, FourPoleType::T1212, FourPoleType::T1221];

    pub fn from_tuple(t: &[u8]) -> Option<Self> {
        match canonical_tuple(t).as_slice() {
            [1, 1, 1, 1] => Some(FourPoleType::T1111),
            [1, 1, 2, 2] => Some(FourPoleType::T1122),
            [1, 2, 1, 2] => Some(FourPoleType::T1212),
            [1, 2, 2, 1] => Some(FourPoleType::T1221),
            _ => None,
        }
    }

    /// The pairing of semiedges that carry equal colours, for the three
    /// non-monochromatic types.
    fn pairing(self) -> Option<Couples> {
        match self {
            FourPoleType::T1111 => None,
            FourPoleType::T1122 => Some(Couples([[0, 1], [2, 3]])),
            FourPoleType::T1212 => Some(Couples([[0, 2], [1, 3]])),
            FourPoleType::T1221 => Some(Couples([[0, 3], [1, 2]])),
        }
    }
}

impl fmt::Display for FourPoleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FourPoleType::T1111 => "1111",
            FourPoleType::T1122 => "1122",
            FourPoleType::T1212 => "1212",
            FourPoleType::T1221 => "1221",
        };
        f.write_str(s)
    }
}

/// Relabels colours in order of first appearance: the least permutation image.
pub(crate) fn canonical_tuple(t: &[u8]) -> Vec<u8> {
    let mut map = [0u8; 4];
    let mut next = 1;
    t.iter()
        .map(|&c| {
            if map[c as usize] == 0 {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect()
}

/// `Col(M)` under the multipole's semiedge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryColoringSet {
    pub tuples: BTreeSet<Vec<u8>>,
    /// Present only for 4-poles.
    pub types: Option<BTreeSet<FourPoleType>>,
}

impl BoundaryColoringSet {
    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// Restricted growth strings of length `k` over {1,2,3}.
fn canonical_tuples(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, used: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in 1..=(used + 1).min(3) {
            cur.push(c);
            rec(k, used.max(c), cur, out);
            cur.pop();
        }
    }
    rec(k, 0, &mut cur, &mut out);
    out
}

fn parity_ok(t: &[u8]) -> bool {
    let k = t.len();
    (1..=3u8).all(|c| t.iter().filter(|&&x| x == c).count() % 2 == k % 2)
}

const PERMUTATIONS: [[u8; 4]; 6] = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1]];

/// Exact colouring set of a k-pole (k >= 1).
///
/// Only one tuple per colour-permutation class is tested for extendability;
/// the class is then expanded. Tuples violating the parity lemma are skipped,
/// since no colouring produces them.
pub fn boundary_colorings(m: &CubicMultipole) -> Result<BoundaryColoringSet, ColoringError> {
    require_loopless(m)?;
    let k = m.semiedge_count();
    let mut tuples = BTreeSet::new();
    let mut types = BTreeSet::new();
    for t in canonical_tuples(k) {
        if !parity_ok(&t) || !extends(m, &t) {
            continue;
        }
        for p in PERMUTATIONS {
            tuples.insert(t.iter().map(|&c| p[c as usize]).collect::<Vec<u8>>());
        }
        if k == 4 {
            types.insert(FourPoleType::from_tuple(&t).expect("parity-valid 4-tuple"));
        }
    }
    Ok(BoundaryColoringSet { tuples, types: (k == 4).then_some(types) })
}

/// Whether the boundary tuple `t` extends to a colouring of `m`.
pub(crate) fn extends(m: &CubicMultipole, t: &[u8]) -> bool {
    let mut inst = Instance::new(m, None);
    for (slot, &(e, _)) in m.semiedges().iter().enumerate() {
        if !inst.fix(e, Color(t[slot])) {
            return false;
        }
    }
    inst.decide()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpenKind {
    Isochromatic,
    Heterochromatic,
}

/// Two disjoint pairs of semiedge slots, each pair and the pair list sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Couples(pub [[usize; 2]; 2]);

impl Couples {
    /// The three ways of splitting four slots into two pairs.
    pub const ALL: [Couples; 3] = [Couples([[0, 1], [2, 3]]), Couples([[0, 2], [1, 3]]), Couples([[0, 3], [1, 2]])];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PoleClassification {
    Uncolourable,
    ColourClosed,
    ColourOpen { kind: OpenKind, couples: Couples },
}

impl PoleClassification {
    pub fn is_colourable(&self) -> bool {
        !matches!(self, PoleClassification::Uncolourable)
    }
}

/// Classifies a 4-pole by the types of its colourings.
pub fn classify_four_pole(m: &CubicMultipole) -> Result<PoleClassification, ColoringError> {
    if m.semiedge_count() != 4 {
        return Err(ColoringError::NotAFourPole(m.semiedge_count()));
    }
    let set = boundary_colorings(m)?;
    let types = set.types.expect("4-pole");
    Ok(classify_types(&types))
}

pub(crate) fn classify_types(types: &BTreeSet<FourPoleType>) -> PoleClassification {
    assert!(types.len() != 1, "a colourable 4-pole has at least two colouring types");
    match types.len() {
        0 => PoleClassification::Uncolourable,
        2 if types.contains(&FourPoleType::T1111) => {
            // Couples are the pairs that are equal in both types.
            let other = types.iter().find(|t| **t != FourPoleType::T1111).unwrap();
            PoleClassification::ColourOpen { kind: OpenKind::Isochromatic, couples: other.pairing().unwrap() }
        }
        2 => {
            // Couples are the pairs that are distinct in both types: the pairing of the absent type.
            let absent = FourPoleType::ALL[1..].iter().find(|t| !types.contains(t)).unwrap();
            PoleClassification::ColourOpen { kind: OpenKind::Heterochromatic, couples: absent.pairing().unwrap() }
        }
        _ => PoleClassification::ColourClosed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{c4_pole, extract_four_pole, isolated_edge_pair, petersen, single_vertex_pole, FourPoleMode};
    use FourPoleType::*;

    #[test]
    fn c4_pole_types() {
        let set = boundary_colorings(&c4_pole()).unwrap();
        assert_eq!(set.types.unwrap(), BTreeSet::from([T1111, T1122, T1221]));
        assert_eq!(classify_four_pole(&c4_pole()).unwrap(), PoleClassification::ColourClosed);
    }

    #[test]
    fn isolated_pair_types() {
        let set = boundary_colorings(&isolated_edge_pair()).unwrap();
        assert_eq!(set.types.unwrap(), BTreeSet::from([T1111, T1122]));
        // 3 colours on the first edge, 3 on the second
        assert_eq!(set.tuples.len(), 9);
    }

    #[test]
    fn single_vertex_is_all_permutations() {
        let set = boundary_colorings(&single_vertex_pole()).unwrap();
        let expected: BTreeSet<Vec<u8>> =
            [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]].iter().map(|t| t.to_vec()).collect();
        assert_eq!(set.tuples, expected);
        assert!(set.types.is_none());
    }

    #[test]
    fn petersen_poles() {
        let p = petersen();
        let i = extract_four_pole(&p, FourPoleMode::AdjacentVertices(0, 1)).unwrap();
        assert_eq!(
            classify_four_pole(&i).unwrap(),
            PoleClassification::ColourOpen { kind: OpenKind::Isochromatic, couples: Couples([[0, 1], [2, 3]]) }
        );
        let h = extract_four_pole(&p, FourPoleMode::NonadjacentEdges(0, 2)).unwrap();
        assert_eq!(
            classify_four_pole(&h).unwrap(),
            PoleClassification::ColourOpen { kind: OpenKind::Heterochromatic, couples: Couples([[0, 1], [2, 3]]) }
        );
    }

    #[test]
    fn not_a_four_pole() {
        assert_eq!(classify_four_pole(&single_vertex_pole()).unwrap_err(), ColoringError::NotAFourPole(3));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical_tuple(&[3, 3, 1, 1]), vec![1, 1, 2, 2]);
        assert_eq!(canonical_tuples(4).len(), 14);
    }
}
