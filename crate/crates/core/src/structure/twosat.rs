//! A small 2-SAT solver (Kosaraju on the implication graph).

#[derive(Clone)]
pub struct TwoSat {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl TwoSat {
    pub fn new(n: usize) -> Self {
        TwoSat { n, adj: vec![Vec::new(); 2 * n] }
    }

    fn lit(var: usize, value: bool) -> usize {
        2 * var + usize::from(!value)
    }

    /// Adds the clause `(x_a == va) or (x_b == vb)`.
    pub fn either(&mut self, a: usize, va: bool, b: usize, vb: bool) {
        self.adj[Self::lit(a, !va)].push(Self::lit(b, vb));
        self.adj[Self::lit(b, !vb)].push(Self::lit(a, va));
    }

    pub fn force(&mut self, a: usize, va: bool) {
        self.either(a, va, a, va);
    }

    pub fn solve(&self) -> Option<Vec<bool>> {
        let m = 2 * self.n;
        let mut order = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        for s in 0..m {
            if seen[s] {
                continue;
            }
            // Iterative post-order DFS.
            let mut stack = vec![(s, 0usize)];
            seen[s] = true;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                if *i < self.adj[v].len() {
                    let w = self.adj[v][*i];
                    *i += 1;
                    if !seen[w] {
                        seen[w] = true;
                        stack.push((w, 0));
                    }
                } else {
                    order.push(v);
                    stack.pop();
                }
            }
        }
        let mut radj = vec![Vec::new(); m];
        for (v, out) in self.adj.iter().enumerate() {
            for &w in out {
                radj[w].push(v);
            }
        }
        let mut comp = vec![usize::MAX; m];
        let mut next = 0;
        for &s in order.iter().rev() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = next;
            while let Some(v) = stack.pop() {
                for &w in &radj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        (0..self.n)
            .map(|x| {
                let (t, f) = (comp[Self::lit(x, true)], comp[Self::lit(x, false)]);
                (t != f).then_some(t > f)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        let mut s = TwoSat::new(2);
        s.either(0, true, 1, true);
        s.either(0, false, 1, false);
        s.force(0, true);
        assert_eq!(s.solve(), Some(vec![true, false]));
        s.force(1, true);
        assert_eq!(s.solve(), None);
    }

    #[test]
    fn exhaustive_agreement() {
        // Every 3-variable instance built from a fixed clause pool.
        let pool: Vec<(usize, bool, usize, bool)> = (0..3)
            .flat_map(|a| (0..3).flat_map(move |b| [(a, true, b, false), (a, false, b, false), (a, true, b, true)]))
            .collect();
        for mask in 0u32..(1 << 12) {
            let mut s = TwoSat::new(3);
            let clauses: Vec<_> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i % 27) & 1 == 1 && *i < 12)
                .map(|(_, c)| *c)
                .collect();
            for &(a, va, b, vb) in &clauses {
                s.either(a, va, b, vb);
            }
            let brute = (0..8u32)
                .find(|&x| clauses.iter().all(|&(a, va, b, vb)| (x >> a & 1 == 1) == va || (x >> b & 1 == 1) == vb));
            match s.solve() {
                Some(assign) => {
                    assert!(clauses.iter().all(|&(a, va, b, vb)| assign[a] == va || assign[b] == vb));
                }
                None => assert!(brute.is_none()),
            }
        }
    }
}
