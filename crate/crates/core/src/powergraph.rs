//! The power graph of Z_m x Z_n.
//!
//! Vertices are indexed row-major (`a * n + b`). Two distinct elements are
//! adjacent when one is a multiple of the other; equivalently, when the cyclic
//! subgroups they generate are comparable under inclusion. Both constructions
//! are provided so they can be checked against each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{all_cyclic_subgroups, subgroup_contains, CyclicSubgroup, GroupSpec};
use crate::matrix::IntMatrix;

/// Symmetric 0/1 adjacency matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    size: usize,
    bits: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn empty(size: usize) -> Self {
        Self {
            size,
            bits: vec![false; size * size],
        }
    }

    /// Simple graph from an edge list; loops are ignored.
    pub fn from_edges(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = Self::empty(size);
        for &(u, v) in edges {
            if u >= size || v >= size {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) out of range for {size} vertices"
                )));
            }
            adj.connect(u, v);
        }
        Ok(adj)
    }

    fn connect(&mut self, u: usize, v: usize) {
        if u != v {
            self.bits[u * self.size + v] = true;
            self.bits[v * self.size + u] = true;
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.size + v]
    }

    pub fn row(&self, u: usize) -> &[bool] {
        &self.bits[u * self.size..(u + 1) * self.size]
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u)
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().filter(|&&b| b).count()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.size {
            for v in (u + 1)..self.size {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count() / 2
    }

    pub fn is_well_formed(&self) -> bool {
        (0..self.size).all(|u| {
            !self.adjacent(u, u) && (0..u).all(|v| self.adjacent(u, v) == self.adjacent(v, u))
        })
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.size);
        for u in 0..self.size {
            for v in self.neighbours(u) {
                m.set(u, v, 1);
            }
        }
        m
    }

    /// One `u v` pair per line, `u < v`.
    pub fn edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// JSON export; vertex `i` is the element at row-major index `i` of `spec`.
    pub fn to_json(&self, spec: &GroupSpec) -> AdjacencyJson {
        AdjacencyJson {
            m: spec.m(),
            n: spec.n(),
            vertices: spec.elements().map(|g| [g.a, g.b]).collect(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyJson {
    pub m: u64,
    pub n: u64,
    pub vertices: Vec<[u64; 2]>,
    pub edges: Vec<[usize; 2]>,
}

/// Generator classes of all cyclic subgroups, in subgroup order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoPartition {
    classes: Vec<Vec<usize>>,
    class_orders: Vec<u64>,
    class_of: Vec<usize>,
}

impl RhoPartition {
    fn from_subgroups(spec: &GroupSpec, subgroups: &[CyclicSubgroup]) -> Self {
        let mut class_of = vec![usize::MAX; spec.order() as usize];
        let mut classes = Vec::with_capacity(subgroups.len());
        for (i, s) in subgroups.iter().enumerate() {
            let mut class: Vec<usize> = s.generators().iter().map(|&g| spec.index_of(g)).collect();
            class.sort_unstable();
            for &v in &class {
                class_of[v] = i;
            }
            classes.push(class);
        }
        Self {
            classes,
            class_orders: subgroups.iter().map(|s| s.order()).collect(),
            class_of,
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_orders(&self) -> &[u64] {
        &self.class_orders
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.class_of[vertex]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Inclusion relation between the cyclic subgroups, over class indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionGraph {
    size: usize,
    bits: Vec<bool>,
}

impl InclusionGraph {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.size + j]
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&j| self.adjacent(i, j))
    }
}

/// Everything derived from one group, built once.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    spec: GroupSpec,
    subgroups: Vec<CyclicSubgroup>,
    partition: RhoPartition,
    inclusion: InclusionGraph,
    adjacency: AdjacencyMatrix,
}

impl PowerGraph {
    pub fn build(spec: GroupSpec) -> Self {
        let subgroups = all_cyclic_subgroups(&spec);
        let partition = RhoPartition::from_subgroups(&spec, &subgroups);
        let inclusion = inclusion_from_subgroups(&subgroups);
        let adjacency = generalized_join(&spec, &partition, &inclusion);
        Self {
            spec,
            subgroups,
            partition,
            inclusion,
            adjacency,
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn subgroups(&self) -> &[CyclicSubgroup] {
        &self.subgroups
    }

    pub fn partition(&self) -> &RhoPartition {
        &self.partition
    }

    pub fn inclusion(&self) -> &InclusionGraph {
        &self.inclusion
    }

    pub fn adjacency(&self) -> &AdjacencyMatrix {
        &self.adjacency
    }
}

fn inclusion_from_subgroups(subgroups: &[CyclicSubgroup]) -> InclusionGraph {
    let size = subgroups.len();
    let mut bits = vec![false; size * size];
    for i in 0..size {
        for j in 0..i {
            let related = subgroup_contains(&subgroups[i], &subgroups[j])
                || subgroup_contains(&subgroups[j], &subgroups[i]);
            bits[i * size + j] = related;
            bits[j * size + i] = related;
        }
    }
    InclusionGraph { size, bits }
}

/// Replaces every vertex `i` of `h` by a complete graph on class `i` and joins
/// classes `i`, `j` completely whenever `i ~ j` in `h`.
pub fn generalized_join(
    spec: &GroupSpec,
    partition: &RhoPartition,
    h: &InclusionGraph,
) -> AdjacencyMatrix {
    let mut adj = AdjacencyMatrix::empty(spec.order() as usize);
    for (i, class) in partition.classes().iter().enumerate() {
        for (x, &u) in class.iter().enumerate() {
            for &v in &class[x + 1..] {
                adj.connect(u, v);
            }
        }
        for j in h.neighbours(i).filter(|&j| j > i) {
            for &u in class {
                for &v in &partition.classes()[j] {
                    adj.connect(u, v);
                }
            }
        }
    }
    adj
}

/// Adjacency through subgroup containment.
pub fn build_adjacency(spec: &GroupSpec) -> AdjacencyMatrix {
    PowerGraph::build(*spec).adjacency
}

/// Adjacency straight from the definition: `u ~ v` iff `u = k v` or `v = k u`.
pub fn build_adjacency_by_powers(spec: &GroupSpec) -> AdjacencyMatrix {
    let mut adj = AdjacencyMatrix::empty(spec.order() as usize);
    for g in spec.elements() {
        let u = spec.index_of(g);
        let ord = crate::group::element_order(g, spec);
        for k in 0..ord {
            adj.connect(u, spec.index_of(spec.multiple(g, k)));
        }
    }
    adj
}

pub fn rho_classes(spec: &GroupSpec) -> RhoPartition {
    RhoPartition::from_subgroups(spec, &all_cyclic_subgroups(spec))
}

pub fn inclusion_graph(spec: &GroupSpec) -> InclusionGraph {
    inclusion_from_subgroups(&all_cyclic_subgroups(spec))
}

/// Each class induces a complete subgraph.
pub fn classes_are_cliques(adj: &AdjacencyMatrix, partition: &RhoPartition) -> bool {
    partition.classes().iter().all(|c| {
        c.iter()
            .enumerate()
            .all(|(x, &u)| c[x + 1..].iter().all(|&v| adj.adjacent(u, v)))
    })
}

/// Between two distinct classes either every pair is adjacent or none is.
pub fn blocks_are_homogeneous(adj: &AdjacencyMatrix, partition: &RhoPartition) -> bool {
    let classes = partition.classes();
    for i in 0..classes.len() {
        for j in (i + 1)..classes.len() {
            let first = adj.adjacent(classes[i][0], classes[j][0]);
            let uniform = classes[i]
                .iter()
                .all(|&u| classes[j].iter().all(|&v| adj.adjacent(u, v) == first));
            if !uniform {
                return false;
            }
        }
    }
    true
}

pub fn checked_build(spec: &GroupSpec, cap: u64) -> Result<PowerGraph> {
    spec.check_cap(cap)?;
    Ok(PowerGraph::build(*spec))
}
