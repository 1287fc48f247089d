//! Export of the neighbour relation on `P1(Z_d)` as a graph.

use std::fmt::Write;

use serde::Serialize;

use crate::projline::{is_distant, ProjectiveLine};
use crate::ring::Modulus;
use crate::symplectic::Vector2;

/// Vertices are points (by canonical generator, in ascending order); an edge
/// joins two distinct neighbouring points. Edges are `(i, j)` with `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighbourGraph {
    #[serde(skip)]
    d: u64,
    vertices: Vec<Vector2>,
    edges: Vec<(usize, usize)>,
}

impl NeighbourGraph {
    pub fn vertices(&self) -> &[Vector2] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph neighbours_Z{} {{", self.d).unwrap();
        for (i, g) in self.vertices.iter().enumerate() {
            writeln!(out, "  {i} [label=\"Z{}{}\"];", self.d, g).unwrap();
        }
        for (i, j) in &self.edges {
            writeln!(out, "  {i} -- {j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub fn neighbour_graph(m: &Modulus) -> NeighbourGraph {
    let line = ProjectiveLine::new(m);
    neighbour_graph_of(&line)
}

pub fn neighbour_graph_of(line: &ProjectiveLine) -> NeighbourGraph {
    let m = line.modulus();
    let pts = line.points();
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if !is_distant(&pts[i], &pts[j], m) {
                edges.push((i, j));
            }
        }
    }
    NeighbourGraph {
        d: m.d(),
        vertices: pts.iter().map(|p| p.generator()).collect(),
        edges,
    }
}
