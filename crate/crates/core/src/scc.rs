//! Strongly connected components of a (pseudo) parity game.
//!
//! Iterative Tarjan. Components come out in reverse topological order of
//! the condensation, so every condensation edge goes from a higher to a
//! lower component index and component 0 is always final.

use alloc::vec;
use alloc::vec::Vec;

use crate::game::{Subgame, VertexId};
use crate::set::VertexSet;

const UNSEEN: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct SccDecomposition {
    universe: usize,
    members: Vec<VertexId>,
    start: Vec<u32>,
    component_of: Vec<u32>,
    edges: Vec<(u32, u32)>,
    is_final: Vec<bool>,
    nontrivial: Vec<bool>,
}

impl SccDecomposition {
    pub fn len(&self) -> usize {
        self.start.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Members of component `i`, in discovery order.
    pub fn component(&self, i: usize) -> &[VertexId] {
        &self.members[self.start[i] as usize..self.start[i + 1] as usize]
    }

    pub fn component_set(&self, i: usize) -> VertexSet {
        VertexSet::from_iter_in(self.universe, self.component(i).iter().copied())
    }

    pub fn components(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        (0..self.len()).map(|i| self.component(i))
    }

    /// Index of the component containing `v`, if `v` was live.
    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        match self.component_of[v.index()] {
            UNSEEN => None,
            c => Some(c as usize),
        }
    }

    /// Distinct condensation edges `(from, to)`; always `from > to`.
    pub fn condensation_edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// No edge leaves the component.
    pub fn is_final(&self, i: usize) -> bool {
        self.is_final[i]
    }

    /// The component contains a cycle (more than one vertex, or a self-loop).
    pub fn is_nontrivial(&self, i: usize) -> bool {
        self.nontrivial[i]
    }

    pub fn final_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_final[i])
    }

    /// Components with no outgoing condensation edge.
    pub fn final_sccs(&self) -> Vec<VertexSet> {
        self.final_indices().map(|i| self.component_set(i)).collect()
    }
}

pub fn scc_decompose(game: &Subgame<'_>) -> SccDecomposition {
    let parent = game.game();
    let n = parent.vertex_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = VertexSet::empty(n);
    let mut component_of = vec![UNSEEN; n];
    let mut stack: Vec<VertexId> = Vec::new();
    // (vertex, position in its parent successor list)
    let mut frames: Vec<(VertexId, usize)> = Vec::new();
    let mut members = Vec::with_capacity(game.len());
    let mut start = vec![0u32];
    let mut counter = 0u32;

    for root in game.vertices() {
        if index[root.index()] != UNSEEN {
            continue;
        }
        index[root.index()] = counter;
        low[root.index()] = counter;
        counter += 1;
        stack.push(root);
        on_stack.insert(root);
        frames.push((root, 0));

        while let Some(&(v, resume)) = frames.last() {
            let succ = parent.successors(v);
            let mut pos = resume;
            let mut child = None;
            while pos < succ.len() {
                let w = succ[pos];
                pos += 1;
                if !game.contains(w) {
                    continue;
                }
                if index[w.index()] == UNSEEN {
                    child = Some(w);
                    break;
                } else if on_stack.contains(w) {
                    low[v.index()] = low[v.index()].min(index[w.index()]);
                }
            }
            if let Some(frame) = frames.last_mut() {
                frame.1 = pos;
            }
            if let Some(w) = child {
                index[w.index()] = counter;
                low[w.index()] = counter;
                counter += 1;
                stack.push(w);
                on_stack.insert(w);
                frames.push((w, 0));
                continue;
            }
            frames.pop();
            if low[v.index()] == index[v.index()] {
                let c = (start.len() - 1) as u32;
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack.remove(w);
                    component_of[w.index()] = c;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                start.push(members.len() as u32);
            }
            if let Some(&(u, _)) = frames.last() {
                low[u.index()] = low[u.index()].min(low[v.index()]);
            }
        }
    }

    let count = start.len() - 1;
    let mut edges = Vec::new();
    let mut nontrivial = vec![false; count];
    for v in game.vertices() {
        let cv = component_of[v.index()];
        for w in game.successors(v) {
            let cw = component_of[w.index()];
            if cv != cw {
                edges.push((cv, cw));
            } else {
                nontrivial[cv as usize] = true;
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut is_final = vec![true; count];
    for &(from, _) in &edges {
        is_final[from as usize] = false;
    }

    SccDecomposition {
        universe: n,
        members,
        start,
        component_of,
        edges,
        is_final,
        nontrivial,
    }
}
