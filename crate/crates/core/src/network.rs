//! Small dense tensor-network contractor, used whenever the unit tensor is
//! not the diagonal one and the collapsed kernels do not apply.

use crate::perm::PermutationTuple;

#[derive(Debug, Clone)]
struct Node {
    labels: Vec<usize>,
    data: Vec<f64>,
}

/// Contracts `nodes` (all index ranges equal to `dim`) and returns the result
/// indexed by `open` in the given order. Every label not in `open` must occur
/// in exactly two nodes.
fn contract(nodes: Vec<Node>, open: &[usize], dim: usize) -> Vec<f64> {
    let mut nodes = nodes;
    while nodes.len() > 1 {
        let mut best: Option<(usize, usize, usize, bool)> = None;
        for a in 0..nodes.len() {
            for b in a + 1..nodes.len() {
                let shared = nodes[a]
                    .labels
                    .iter()
                    .filter(|l| nodes[b].labels.contains(l))
                    .count();
                let cost = nodes[a].labels.len() + nodes[b].labels.len() - shared;
                let key = (cost, shared > 0);
                let better = match best {
                    None => true,
                    Some((c, _, _, s)) => (key.1 && !s) || (key.1 == s && key.0 < c),
                };
                if better {
                    best = Some((cost, a, b, key.1));
                }
            }
        }
        let (_, a, b, _) = best.expect("at least two nodes");
        let y = nodes.remove(b);
        let x = nodes.remove(a);
        nodes.push(pair(&x, &y, dim));
    }
    let last = nodes.pop().unwrap_or(Node {
        labels: vec![],
        data: vec![1.0],
    });
    permute_to(&last, open, dim)
}

fn pair(x: &Node, y: &Node, dim: usize) -> Node {
    let shared: Vec<usize> = x
        .labels
        .iter()
        .copied()
        .filter(|l| y.labels.contains(l))
        .collect();
    let out: Vec<usize> = x
        .labels
        .iter()
        .chain(&y.labels)
        .copied()
        .filter(|l| !shared.contains(l))
        .collect();
    // Loop variables: the output labels followed by the shared ones.
    let vars: Vec<usize> = out.iter().chain(&shared).copied().collect();
    let coef = |labels: &[usize]| -> Vec<usize> {
        let st = crate::tensor::strides(labels.len(), dim);
        vars.iter()
            .map(|v| labels.iter().position(|l| l == v).map_or(0, |p| st[p]))
            .collect()
    };
    let cx = coef(&x.labels);
    let cy = coef(&y.labels);
    let out_len = dim.pow(out.len() as u32);
    let inner = dim.pow(shared.len() as u32);
    let mut data = vec![0.0; out_len];
    let mut vals = vec![0usize; vars.len()];
    for slot in data.iter_mut() {
        let mut acc = 0.0;
        for _ in 0..inner {
            let ox: usize = vals.iter().zip(&cx).map(|(v, c)| v * c).sum();
            let oy: usize = vals.iter().zip(&cy).map(|(v, c)| v * c).sum();
            acc += x.data[ox] * y.data[oy];
            crate::tensor::increment(&mut vals, dim);
        }
        *slot = acc;
    }
    Node { labels: out, data }
}

fn permute_to(node: &Node, open: &[usize], dim: usize) -> Vec<f64> {
    debug_assert_eq!(node.labels.len(), open.len());
    let st = crate::tensor::strides(node.labels.len(), dim);
    let coef: Vec<usize> = open
        .iter()
        .map(|l| st[node.labels.iter().position(|x| x == l).expect("open label")])
        .collect();
    let mut vals = vec![0usize; open.len()];
    let mut out = vec![0.0; node.data.len()];
    for slot in out.iter_mut() {
        let off: usize = vals.iter().zip(&coef).map(|(v, c)| v * c).sum();
        *slot = node.data[off];
        crate::tensor::increment(&mut vals, dim);
    }
    out
}

/// Which factor to leave out of the network.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Hole {
    None,
    A(usize),
    Delta(usize),
}

/// Evaluates one tuple term for an arbitrary `Delta`. With a hole, returns the
/// derivative with respect to that factor, indexed by its slots.
pub(crate) fn tuple_network(
    a: &[f64],
    delta: &[f64],
    rank: usize,
    dim: usize,
    tuple: &PermutationTuple,
    hole: Hole,
) -> Vec<f64> {
    let n = tuple.order();
    let label = |i: usize, k: usize| i * rank + k;
    let mut nodes = Vec::with_capacity(2 * n);
    let mut open = Vec::new();
    for i in 0..n {
        let labels: Vec<usize> = (0..rank).map(|k| label(i, k)).collect();
        if hole == Hole::A(i) {
            open = labels;
        } else {
            nodes.push(Node {
                labels,
                data: a.to_vec(),
            });
        }
    }
    for j in 0..n {
        // Slot k of Delta factor j meets slot k of the A factor mapped onto j.
        let labels: Vec<usize> = (0..rank)
            .map(|k| {
                let i = (0..n).find(|&i| tuple.image(k, i) == j).expect("bijection");
                label(i, k)
            })
            .collect();
        if hole == Hole::Delta(j) {
            open = labels;
        } else {
            nodes.push(Node {
                labels,
                data: delta.to_vec(),
            });
        }
    }
    contract(nodes, &open, dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_product_via_network() {
        // C_ik = A_ij B_jk
        let a = Node {
            labels: vec![0, 1],
            data: vec![1., 2., 3., 4.],
        };
        let b = Node {
            labels: vec![1, 2],
            data: vec![5., 6., 7., 8.],
        };
        assert_eq!(
            contract(vec![a.clone(), b.clone()], &[0, 2], 2),
            vec![19., 22., 43., 50.]
        );
        assert_eq!(contract(vec![a, b], &[2, 0], 2), vec![19., 43., 22., 50.]);
    }

    #[test]
    fn disconnected_pieces_multiply() {
        let a = Node {
            labels: vec![0, 1],
            data: vec![1., 2., 3., 4.],
        };
        let b = Node {
            labels: vec![0, 1],
            data: vec![1., 0., 0., 1.],
        };
        let c = Node {
            labels: vec![2, 3],
            data: vec![1., 1., 1., 1.],
        };
        let d = Node {
            labels: vec![2, 3],
            data: vec![2., 0., 0., 2.],
        };
        // trace(A) * (sum of 2I) = 5 * 4
        assert_eq!(contract(vec![a, c, b, d], &[], 2), vec![20.0]);
    }
}
