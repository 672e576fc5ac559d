use super::poly::IntMatrix;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquitablePartition {
    pub parts: Vec<u64>,
    /// `quotient[i][j]` is the number of neighbours in part `j` of any vertex of part `i`.
    pub quotient: IntMatrix,
}

/// Checks that `parts` is an equitable partition of `V(g)` and returns its
/// quotient matrix.
pub fn verify_equitable(g: &Graph, parts: &[u64]) -> Result<EquitablePartition> {
    let mut covered = 0u64;
    for (i, &p) in parts.iter().enumerate() {
        if p == 0 {
            return Err(Error::NotAPartition(format!("part {i} is empty")));
        }
        if p & !g.vertex_mask() != 0 {
            return Err(Error::NotAPartition(format!("part {i} has vertices outside the graph")));
        }
        if covered & p != 0 {
            return Err(Error::NotAPartition(format!("part {i} overlaps an earlier part")));
        }
        covered |= p;
    }
    if covered != g.vertex_mask() {
        return Err(Error::NotAPartition("parts do not cover every vertex".into()));
    }

    let k = parts.len();
    let mut quotient = IntMatrix::zeros(k);
    for (i, &part) in parts.iter().enumerate() {
        let rep = part.trailing_zeros() as usize;
        let counts: Vec<usize> = parts
            .iter()
            .map(|&q| (g.neighbors(rep) & q).count_ones() as usize)
            .collect();
        for u in bits(part).skip(1) {
            for (j, &q) in parts.iter().enumerate() {
                let c = (g.neighbors(u) & q).count_ones() as usize;
                if c != counts[j] {
                    return Err(Error::NotEquitable {
                        part: i,
                        u: rep,
                        w: u,
                        target: j,
                        count_u: counts[j],
                        count_w: c,
                    });
                }
            }
        }
        for (j, &c) in counts.iter().enumerate() {
            quotient.set(i, j, c as i64);
        }
    }
    Ok(EquitablePartition {
        parts: parts.to_vec(),
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_quotient() {
        let g = Graph::complete_bipartite(2, 5).unwrap();
        let ep = verify_equitable(&g, &[0b11, 0b1111100]).unwrap();
        assert_eq!(ep.quotient.rows(), vec![vec![0, 5], vec![2, 0]]);
    }

    #[test]
    fn four_cycle_single_vertex_split_is_not_equitable() {
        let g = Graph::cycle(4).unwrap();
        match verify_equitable(&g, &[0b1, 0b1110]) {
            Err(Error::NotEquitable { part: 1, target, .. }) => assert_eq!(target, 0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_non_partitions() {
        let g = Graph::cycle(4).unwrap();
        assert!(matches!(verify_equitable(&g, &[0b11, 0b0110]), Err(Error::NotAPartition(_))));
        assert!(matches!(verify_equitable(&g, &[0b11]), Err(Error::NotAPartition(_))));
        assert!(matches!(verify_equitable(&g, &[0b1111, 0]), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn trivial_partition_of_regular_graph() {
        let g = Graph::complete(5).unwrap();
        let ep = verify_equitable(&g, &[0b11111]).unwrap();
        assert_eq!(ep.quotient.rows(), vec![vec![4]]);
    }
}
