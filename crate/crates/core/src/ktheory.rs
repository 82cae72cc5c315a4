//! Reduced K-groups of spaces with torsion-free integral homology, read off
//! from Betti numbers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `Z^free_rank + (Z/2)^two_torsion_rank`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupDescriptor {
    pub free_rank: u64,
    pub two_torsion_rank: u64,
}

impl AbelianGroupDescriptor {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.two_torsion_rank == 0
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if self.two_torsion_rank > 0 {
            parts.push(format!("(Z/2)^{}", self.two_torsion_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Homotopy groups of BO, indexed by `q mod 8` (Bott periodicity).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottGroup {
    Zero,
    Z2,
    Z,
}

/// `pi_q(BO)` for `q >= 1`: Z/2, Z/2, 0, Z, 0, 0, 0, Z for `q = 1..8`, then periodic.
pub fn pi_bo(q: usize) -> BottGroup {
    assert!(q >= 1, "pi_0 is not part of the reduced theory");
    match q % 8 {
        1 | 2 => BottGroup::Z2,
        4 | 0 => BottGroup::Z,
        _ => BottGroup::Zero,
    }
}

/// Reduced KU^0: the even-degree integral cohomology above degree 0.
pub fn ku0(betti: &[u64]) -> AbelianGroupDescriptor {
    let free_rank = betti.iter().enumerate().filter(|&(q, _)| q > 0 && q % 2 == 0).map(|(_, b)| b).sum();
    AbelianGroupDescriptor { free_rank, two_torsion_rank: 0 }
}

/// Reduced KO^0 as `sum_{q > 0} Hom(H_q, pi_q BO)` with free H_q of rank `b_q`.
pub fn ko0(betti: &[u64]) -> AbelianGroupDescriptor {
    let mut g = AbelianGroupDescriptor::default();
    for (q, &b) in betti.iter().enumerate().skip(1) {
        match pi_bo(q) {
            BottGroup::Z2 => g.two_torsion_rank += b,
            BottGroup::Z => g.free_rank += b,
            BottGroup::Zero => {}
        }
    }
    g
}

/// Subgroup of KO^0 generated by representations: H^1(F2) + H^2(F2), which
/// have dimensions `b_1`, `b_2` when integral homology is torsion free.
pub fn ko0_rep(betti: &[u64]) -> AbelianGroupDescriptor {
    let b = |q: usize| betti.get(q).copied().unwrap_or(0);
    AbelianGroupDescriptor { free_rank: 0, two_torsion_rank: b(1) + b(2) }
}

/// Subgroup of KU^0 generated by unitary representations: always zero.
pub fn ku0_rep(_betti: &[u64]) -> AbelianGroupDescriptor {
    AbelianGroupDescriptor::default()
}

/// Which identification the numbers rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypothesis {
    /// Betti numbers of an arrangement complement (cohomology of a space).
    ArrangementComplement,
    /// Betti numbers of BGamma for a homologically toroidal group of finite
    /// cohomological dimension, e.g. a K(Gamma,1) arrangement such as P_n.
    ToroidalClassifyingSpace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTheoryReport {
    pub hypothesis: Hypothesis,
    pub ku0: AbelianGroupDescriptor,
    pub ko0: AbelianGroupDescriptor,
    pub ko0_rep: AbelianGroupDescriptor,
    pub ku0_rep: AbelianGroupDescriptor,
}

pub fn ktheory_report(betti: &[u64], hypothesis: Hypothesis) -> KTheoryReport {
    KTheoryReport {
        hypothesis,
        ku0: ku0(betti),
        ko0: ko0(betti),
        ko0_rep: ko0_rep(betti),
        ku0_rep: ku0_rep(betti),
    }
}
