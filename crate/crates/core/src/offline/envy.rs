use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::valuation::{Allocation, ValuationProfile};

/// Directed envy relation of an allocation: `i -> j` iff `v_i(A_i) < v_i(A_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvyGraph {
    adj: Vec<Vec<bool>>,
}

impl EnvyGraph {
    pub fn build(alloc: &Allocation, profile: &ValuationProfile) -> Self {
        Self::from_rows(alloc.bundles(), profile.vectors())
    }

    pub fn from_rows<R: AsRef<[Rational]>>(bundles: &[Vec<usize>], rows: &[R]) -> Self {
        let n = bundles.len();
        let mut adj = vec![vec![false; n]; n];
        for (i, row) in rows.iter().enumerate().take(n) {
            let f = row.as_ref();
            let worth: Vec<Rational> = bundles
                .iter()
                .map(|b| b.iter().map(|&g| &f[g]).sum())
                .collect();
            for j in 0..n {
                adj[i][j] = i != j && worth[i] < worth[j];
            }
        }
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().flatten().filter(|&&e| e).count()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        (0..self.n()).filter(|&i| self.adj[i][j]).count()
    }

    /// Agents nobody envies, ascending.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.in_degree(j) == 0).collect()
    }

    /// First cycle met by an iterative DFS started from agents in ascending id order,
    /// returned as `[i_1, ..., i_k]` with `i_m -> i_{m+1}` and `i_k -> i_1`.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            state[root] = 1;
            while let Some(top) = stack.last_mut() {
                let (u, w) = *top;
                if w == n {
                    state[u] = 2;
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                if !self.adj[u][w] {
                    continue;
                }
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let start = stack.iter().position(|&(x, _)| x == w).expect("on stack");
                        return Some(stack[start..].iter().map(|&(x, _)| x).collect());
                    }
                    _ => {}
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }
}

/// Rotates bundles along envy cycles until the envy graph is acyclic.
pub fn eliminate_envy_cycles(alloc: &Allocation, profile: &ValuationProfile) -> Allocation {
    let mut bundles = alloc.bundles().to_vec();
    loop {
        let graph = EnvyGraph::from_rows(&bundles, profile.vectors());
        let Some(cycle) = graph.find_cycle() else {
            break;
        };
        let taken: Vec<Vec<usize>> = cycle
            .iter()
            .enumerate()
            .map(|(m, _)| bundles[cycle[(m + 1) % cycle.len()]].clone())
            .collect();
        for (m, &i) in cycle.iter().enumerate() {
            bundles[i] = taken[m].clone();
        }
    }
    Allocation::from_bundles(bundles, alloc.horizon()).expect("rotation keeps the partition")
}

/// Lowest-id agent nobody envies. Fails when the envy graph has a cycle.
pub fn unenvied_agent(alloc: &Allocation, profile: &ValuationProfile) -> Result<usize> {
    let graph = EnvyGraph::build(alloc, profile);
    if let Some(cycle) = graph.find_cycle() {
        return Err(Error::EnvyCycle(cycle[0]));
    }
    Ok(graph.sources()[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn profile(rows: &[&[(i64, i64)]]) -> ValuationProfile {
        ValuationProfile::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| rat(a, b)).collect())
                .collect(),
            false,
        )
        .unwrap()
    }

    #[test]
    fn two_cycle_swapped() {
        let p = profile(&[&[(1, 4), (3, 4)], &[(3, 4), (1, 4)]]);
        let a = Allocation::from_bundles(vec![vec![0], vec![1]], 2).unwrap();
        assert_eq!(EnvyGraph::build(&a, &p).find_cycle(), Some(vec![0, 1]));
        assert!(unenvied_agent(&a, &p).is_err());
        let b = eliminate_envy_cycles(&a, &p);
        assert_eq!(b.bundles(), &[vec![1], vec![0]]);
        assert_eq!(unenvied_agent(&b, &p).unwrap(), 0);
    }

    #[test]
    fn envious_agent_is_the_source() {
        let p = profile(&[&[(1, 2), (1, 2)], &[(3, 4), (1, 4)]]);
        let a = Allocation::from_bundles(vec![vec![0], vec![1]], 2).unwrap();
        let g = EnvyGraph::build(&a, &p);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.edge_count(), 1);
        assert_eq!(unenvied_agent(&a, &p).unwrap(), 1);
    }
}
