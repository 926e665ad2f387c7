//! Wire formats. The instance schema {"n", "edges", "sigma", "terminals"}
//! is the ground truth shared by every tool; consumers add fields.

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graft::SignedGraft;
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use crate::reduce::PlaneEmbedding;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub sigma: Vec<usize>,
    #[serde(default)]
    pub terminals: Vec<usize>,
}

impl InstanceJson {
    pub fn from_graft(sg: &SignedGraft) -> InstanceJson {
        InstanceJson {
            n: sg.n(),
            edges: sg.graph().edges().to_vec(),
            sigma: sg.sigma().ids(),
            terminals: sg.terminals().ids(),
        }
    }

    pub fn to_graft(&self) -> Result<SignedGraft> {
        let g = Multigraph::new(self.n, self.edges.clone())?;
        for &e in &self.sigma {
            if e >= g.m() {
                return Err(Error::UnknownEdge(e));
            }
        }
        for &v in &self.terminals {
            if v >= g.n() {
                return Err(Error::UnknownVertex(v));
            }
        }
        SignedGraft::new(
            g,
            EdgeSet::from_ids(self.sigma.iter().copied()),
            VertexSet::from_ids(self.terminals.iter().copied()),
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClutterJson {
    pub ground: usize,
    pub sets: Vec<Vec<usize>>,
}

impl ClutterJson {
    pub fn from_clutter(c: &Clutter) -> ClutterJson {
        ClutterJson {
            ground: c.ground(),
            sets: c.sets().iter().map(|s| s.ids()).collect(),
        }
    }

    pub fn to_clutter(&self) -> Result<Clutter> {
        Clutter::new(
            self.ground,
            self.sets
                .iter()
                .map(|s| EdgeSet::from_ids(s.iter().copied()))
                .collect(),
        )
    }
}

/// Plane instance: the shared instance schema plus face walks (edge-id
/// sequences covering each edge exactly twice).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlaneJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<Vec<usize>>,
    #[serde(default)]
    pub sigma: Vec<usize>,
    #[serde(default)]
    pub terminals: Vec<usize>,
    /// Identification endpoints for the cut-cover reduction.
    #[serde(default)]
    pub s: Option<usize>,
    #[serde(default)]
    pub t: Option<usize>,
}

impl PlaneJson {
    pub fn to_embedding(&self) -> Result<PlaneEmbedding> {
        let g = Multigraph::new(self.n, self.edges.clone())?;
        PlaneEmbedding::new(g, self.faces.clone())
    }
}
