//! Equitable partitions and their quotient matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::powergraph::{AdjacencyMatrix, RhoPartition};

/// Quotient matrix of an equitable partition: entry `(i, j)` is the number of
/// neighbours a vertex of class `i` has in class `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    matrix: IntMatrix,
    orders: Vec<u64>,
    class_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.matrix.get(i, j)
    }

    /// Subgroup order behind each class.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.matrix.row(i).iter().sum()
    }

    pub fn to_json(&self) -> QuotientJson {
        QuotientJson {
            size: self.size(),
            orders: self.orders.clone(),
            entries: self.matrix.rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientJson {
    pub size: usize,
    pub orders: Vec<u64>,
    pub entries: Vec<Vec<i64>>,
}

fn check_partition(classes: &[Vec<usize>], size: usize) -> Result<()> {
    let mut seen = vec![false; size];
    for (i, c) in classes.iter().enumerate() {
        if c.is_empty() {
            return Err(Error::NotAPartition(format!("class {i} is empty")));
        }
        for &v in c {
            if v >= size {
                return Err(Error::NotAPartition(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            seen[v] = true;
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(Error::NotAPartition(format!("vertex {v} is not covered"))),
        None => Ok(()),
    }
}

/// Neighbour counts from every vertex into every class, checked for
/// agreement inside each class. Returns the common counts.
fn class_counts(classes: &[Vec<usize>], adj: &AdjacencyMatrix) -> Result<IntMatrix> {
    check_partition(classes, adj.size())?;
    let mut class_of = vec![0usize; adj.size()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let l = classes.len();
    let mut q = IntMatrix::zeros(l);
    let mut counts = vec![0usize; l];
    for (i, c) in classes.iter().enumerate() {
        for (k, &u) in c.iter().enumerate() {
            counts.iter_mut().for_each(|x| *x = 0);
            for v in adj.neighbours(u) {
                counts[class_of[v]] += 1;
            }
            if k == 0 {
                for (j, &x) in counts.iter().enumerate() {
                    q.set(i, j, x as i64);
                }
            } else if let Some(j) = (0..l).find(|&j| q.get(i, j) != counts[j] as i64) {
                return Err(Error::NotEquitable {
                    class: i,
                    target: j,
                    first: q.get(i, j) as usize,
                    second: counts[j],
                });
            }
        }
    }
    Ok(q)
}

/// Whether every vertex of class `i` has the same number of neighbours in
/// class `j`, for all ordered pairs of classes.
pub fn verify_equitable(classes: &[Vec<usize>], adj: &AdjacencyMatrix) -> Result<bool> {
    match class_counts(classes, adj) {
        Ok(_) => Ok(true),
        Err(Error::NotEquitable { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Quotient matrix of the generator-class partition, validated against every
/// vertex of every class.
pub fn quotient_matrix(partition: &RhoPartition, adj: &AdjacencyMatrix) -> Result<QuotientMatrix> {
    let matrix = class_counts(partition.classes(), adj)?;
    Ok(QuotientMatrix {
        matrix,
        orders: partition.class_orders().to_vec(),
        class_sizes: partition.class_sizes(),
    })
}

/// Quotient matrix of an arbitrary user partition.
pub fn quotient_of(classes: &[Vec<usize>], adj: &AdjacencyMatrix) -> Result<IntMatrix> {
    class_counts(classes, adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::numtheory::phi;
    use crate::powergraph::PowerGraph;

    fn graph(m: u64, n: u64) -> PowerGraph {
        PowerGraph::build(GroupSpec::new(m, n).unwrap())
    }

    #[test]
    fn complete_graph_single_class() {
        // Z_1 x Z_p is K_p
        let g = graph(1, 5);
        let q = quotient_of(&[vec![0, 1, 2, 3, 4]], g.adjacency()).unwrap();
        assert_eq!(q.rows(), vec![vec![4]]);
    }

    #[test]
    fn star_quotient() {
        let g = graph(2, 2);
        let q = quotient_matrix(g.partition(), g.adjacency()).unwrap();
        assert_eq!(
            q.matrix().rows(),
            vec![
                vec![0, 1, 1, 1],
                vec![1, 0, 0, 0],
                vec![1, 0, 0, 0],
                vec![1, 0, 0, 0]
            ]
        );
    }

    #[test]
    fn z3_z6_quotient_structure() {
        let g = graph(3, 6);
        let q = quotient_matrix(g.partition(), g.adjacency()).unwrap();
        assert_eq!(q.size(), 10);
        let mut diag: Vec<i64> = (0..10).map(|i| q.get(i, i)).collect();
        diag.sort_unstable();
        assert_eq!(diag, vec![0, 0, 1, 1, 1, 1, 1, 1, 1, 1]);
        // the identity class is joined to everything
        let id = q.orders().iter().position(|&o| o == 1).unwrap();
        for j in 0..10 {
            if j != id {
                assert_eq!(q.get(j, id), 1);
                assert_eq!(q.get(id, j), q.class_sizes()[j] as i64);
            }
        }
    }

    #[test]
    fn path_graphs() {
        // u - v - w
        let adj = AdjacencyMatrix::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(verify_equitable(&[vec![0, 2], vec![1]], &adj).unwrap());
        assert!(!verify_equitable(&[vec![0, 1], vec![2]], &adj).unwrap());
        assert!(verify_equitable(&[vec![0, 1]], &adj).is_err());
        assert!(verify_equitable(&[vec![0, 1], vec![1, 2]], &adj).is_err());
    }

    #[test]
    fn quotient_invariants() {
        for m in 1..=100u64 {
            for n in 1..=(100 / m) {
                let g = graph(m, n);
                assert!(verify_equitable(g.partition().classes(), g.adjacency()).unwrap());
                let q = quotient_matrix(g.partition(), g.adjacency()).unwrap();
                for i in 0..q.size() {
                    assert_eq!(q.get(i, i), phi(q.orders()[i]) as i64 - 1);
                    for j in 0..q.size() {
                        if i != j {
                            let e = q.get(i, j);
                            assert!(e == 0 || e == phi(q.orders()[j]) as i64);
                        }
                    }
                    let rep = g.partition().classes()[i][0];
                    assert_eq!(q.row_sum(i), g.adjacency().degree(rep) as i64);
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let g = graph(2, 2);
        let q = quotient_matrix(g.partition(), g.adjacency()).unwrap();
        let j = serde_json::to_value(q.to_json()).unwrap();
        assert_eq!(j["size"], 4);
        assert_eq!(j["orders"], serde_json::json!([1, 2, 2, 2]));
        assert_eq!(j["entries"][0], serde_json::json!([0, 1, 1, 1]));
    }
}
