//! Mixed packing of odd st-joins and even st-paths via odd-loop
//! augmentation: add k−ℓ odd loops, pack the augmented graft, strip the
//! loops back out.

use super::{min_signature, min_tcut, packs, Tau};
use crate::error::{Error, Result};
use crate::graft::SignedGraft;
use crate::graph::{EdgeSet, Multigraph};
use crate::obstruction::{self, Scan, SearchBudget};

#[derive(Clone, Debug)]
pub struct MixedPacking {
    pub odd_joins: Vec<EdgeSet>,
    pub even_paths: Vec<EdgeSet>,
    /// k: minimum st-cut size
    pub cut_size: usize,
    /// ℓ: minimum signature size
    pub signature_size: usize,
}

pub fn mixed_packing(sg: &SignedGraft) -> Result<MixedPacking> {
    if sg.terminals().len() != 2 {
        return Err(Error::Precondition("mixed packing needs exactly two terminals".into()));
    }
    if !sg.is_eulerian() {
        return Err(Error::Precondition("mixed packing needs an Eulerian graft".into()));
    }
    match obstruction::obstruction_scan(sg, &SearchBudget::default())? {
        Scan::None => {}
        Scan::K5Tilde(_) => {
            return Err(Error::ObstructionFound("K5~ minor".into()));
        }
        Scan::F7(_) => {
            return Err(Error::ObstructionFound("F7 minor".into()));
        }
        Scan::Inconclusive => return Err(Error::ScanInconclusive),
    }
    let (k, _) = min_tcut(sg)?;
    let (ell, _) = min_signature(sg)?;
    if k < ell {
        return Err(Error::Precondition(format!(
            "minimum st-cut {k} is below minimum signature {ell}"
        )));
    }

    // augment with k−ℓ odd loops at the first terminal
    let s = sg.terminals().ids()[0];
    let m0 = sg.m();
    let extra = k - ell;
    let mut edges = sg.graph().edges().to_vec();
    let mut sigma = sg.sigma();
    for i in 0..extra {
        sigma.insert(m0 + i);
        edges.push((s, s));
    }
    let aug = SignedGraft::new(
        Multigraph::new(sg.n(), edges)?,
        sigma,
        sg.terminals(),
    )?;
    debug_assert!(aug.is_eulerian());

    let result = packs(&aug)?;
    let Tau::Finite(t) = result.tau else {
        return Err(Error::Internal("augmented graft lost its odd joins".into()));
    };
    if !result.packs || t != k {
        return Err(Error::Internal(format!(
            "augmented graft must pack at k={k}, got tau={t} nu={}",
            result.nu
        )));
    }

    let loops = EdgeSet::from_ids(m0..m0 + extra);
    let mut odd_joins = Vec::new();
    let mut even_paths = Vec::new();
    for member in result.packing {
        let used = member.inter(loops);
        match used.len() {
            0 => odd_joins.push(member),
            1 => {
                let stripped = member.minus(loops);
                if !sg.is_simple_st_path(stripped) || sg.is_odd(stripped) {
                    return Err(Error::Internal(
                        "stripped member is not an even st-path".into(),
                    ));
                }
                even_paths.push(stripped);
            }
            _ => {
                return Err(Error::Internal(
                    "a minimal member uses two added loops".into(),
                ))
            }
        }
    }
    if even_paths.len() != extra || odd_joins.len() != ell {
        return Err(Error::Internal(format!(
            "expected {ell} odd joins and {extra} even paths, got {} and {}",
            odd_joins.len(),
            even_paths.len()
        )));
    }
    for j in &odd_joins {
        if !sg.is_odd_tjoin(*j) {
            return Err(Error::Internal("member is not an odd st-join".into()));
        }
    }
    Ok(MixedPacking { odd_joins, even_paths, cut_size: k, signature_size: ell })
}
