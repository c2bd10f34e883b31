//! τ-labels of the primitive ideals attached to the minimal two-sided cell.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::subalg::{RootSet, RootSubsystem};
use crate::weyl;

/// A primitive ideal label `tau = Π \ {alpha}`, witnessed by `w_alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealLabel {
    /// The omitted simple root (1-based).
    pub node: usize,
    /// Sorted 1-based simple roots.
    pub tau: Vec<usize>,
    /// Reduced word of the witness, 1-based.
    pub witness: Vec<usize>,
}

/// Labels at the regular integral character: `tau_L(w_alpha)` for every
/// simple root.
pub fn regular_labels(rs: &RootSystem) -> Result<Vec<IdealLabel>> {
    let cell = weyl::min_cell(rs)?;
    Ok(cell
        .iter()
        .enumerate()
        .map(|(a, w)| IdealLabel {
            node: a + 1,
            tau: w.tau_l(rs).iter().map(|i| i + 1).collect(),
            witness: w.word_1based(),
        })
        .collect())
}

/// Simple roots (as 0-based nodes) of `Delta_lambda` that lie in `Π`.
fn singular_simple(rs: &RootSystem, lambda: &Weight) -> Vec<usize> {
    let mut set = RootSet::new(rs.num_roots());
    for a in rs.singular_set(lambda) {
        set.insert(a);
    }
    let sub = RootSubsystem::from_members(rs, set).expect("Delta_lambda is a root subsystem");
    sub.simple_basis()
        .iter()
        .copied()
        .filter(|&b| b < rs.rank())
        .collect()
}

/// Labels whose `tau` misses the simple system of `Delta_lambda`.
pub fn labels_at(rs: &RootSystem, lambda: &Weight) -> Result<Vec<IdealLabel>> {
    if lambda.rank() != rs.rank() {
        return Err(Error::WeightLength {
            expected: rs.rank(),
            got: lambda.rank(),
        });
    }
    if !lambda.is_integral() {
        return Err(Error::NonIntegralWeight);
    }
    if !rs.is_rho_dominant(lambda) {
        return Err(Error::NotRhoDominant);
    }
    let sing: Vec<usize> = singular_simple(rs, lambda).iter().map(|i| i + 1).collect();
    Ok(regular_labels(rs)?
        .into_iter()
        .filter(|l| l.tau.iter().all(|t| !sing.contains(t)))
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimidReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub dtype: crate::DynkinType,
    pub regular_labels: Vec<IdealLabel>,
    pub lambda: Option<Weight>,
    pub labels_at: Option<Vec<IdealLabel>>,
}

pub fn report(rs: &RootSystem, lambda: Option<&Weight>) -> Result<PrimidReport> {
    Ok(PrimidReport {
        schema: "lieblocks.primid/1",
        dtype: rs.dtype(),
        regular_labels: regular_labels(rs)?,
        lambda: lambda.cloned(),
        labels_at: lambda.map(|l| labels_at(rs, l)).transpose()?,
    })
}
