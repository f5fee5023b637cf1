//! Real, quaternionic and complex irreducible representations of compact
//! semisimple groups, and eigenspaces of central involutions.
//!
//! An irreducible representation is self-conjugate exactly when it is
//! isomorphic to its dual, that is when its highest weight is fixed by
//! `lambda -> -w0(lambda)`. A finite direct sum is self-conjugate when
//! duality permutes its summands with multiplicities: complex summands then
//! pair off with their duals, and real or quaternionic summands carry their
//! own structure.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::reps::{IrrepLabel, RepMultiset};
use crate::roots::{LatticeVector, ProductType, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RealityType {
    /// Carries an invariant symmetric form.
    Real,
    /// Carries an invariant alternating form.
    Quaternionic,
    /// Not isomorphic to its dual.
    Complex,
}

impl RealityType {
    pub fn is_self_conjugate(self) -> bool {
        self != RealityType::Complex
    }
}

impl fmt::Display for RealityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealityType::Real => "real",
            RealityType::Quaternionic => "quaternionic",
            RealityType::Complex => "complex",
        })
    }
}

pub fn dual_weight(l: &IrrepLabel) -> IrrepLabel {
    l.dual()
}

/// Frobenius-Schur type. For a self-dual irreducible of a simple group the
/// central element `exp(2 pi i rho^vee)` acts by `(-1)^{<lambda, 2 rho^vee>}`,
/// which is `+1` on real and `-1` on quaternionic representations. On a
/// product the types multiply, with complex absorbing.
pub fn frobenius_schur(l: &IrrepLabel) -> RealityType {
    let mut sign = 1;
    for (&t, w) in l.algebra.factors().iter().zip(l.parts()) {
        let rs = RootSystem::get(t);
        if rs.dual_weight(&w) != w {
            return RealityType::Complex;
        }
        if rs.level2(&w).rem_euclid(2) == 1 {
            sign = -sign;
        }
    }
    if sign == 1 {
        RealityType::Real
    } else {
        RealityType::Quaternionic
    }
}

/// `true` when the representation is isomorphic to its dual.
pub fn self_conjugate(rep: &RepMultiset) -> bool {
    rep.dual() == *rep
}

/// `true` when `-1` lies in the Weyl group of every factor, so that every
/// representation is self-conjugate.
pub fn minus_one_in_weyl(t: &ProductType) -> bool {
    t.factors().iter().all(|&f| RootSystem::get(f).minus_one_in_weyl())
}

/// The element of order at most two in a torus acting on the root space of
/// `alpha` by `(-1)^{alpha(c)}`, for a coroot-lattice element `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterElement {
    pub c: LatticeVector,
}

impl CenterElement {
    pub fn new(c: LatticeVector) -> Self {
        CenterElement { c }
    }

    /// `alpha(c) mod 2` for a root given in simple-root coordinates.
    pub fn parity(&self, rs: &RootSystem, alpha: &LatticeVector) -> Result<u8> {
        Ok(rs.root_pairing(alpha, &self.c)?.rem_euclid(2) as u8)
    }

    /// Dimensions of the `+1` and `-1` eigenspaces on the adjoint
    /// representation.
    pub fn eigenspace_dims(&self, rs: &RootSystem) -> Result<(u64, u64)> {
        let mut minus = 0;
        for r in rs.roots() {
            minus += u64::from(self.parity(rs, &r)?);
        }
        let dim = rs.simple_type().dimension() as u64;
        Ok((dim - minus, minus))
    }
}

/// Bound `(dim + rank) / 2` on the `-1` eigenspace of an involution of the
/// adjoint representation.
pub fn involution_bound(rs: &RootSystem) -> u64 {
    (rs.simple_type().dimension() + rs.rank()) as u64 / 2
}
