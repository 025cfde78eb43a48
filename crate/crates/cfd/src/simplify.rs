//! Cancellation of entries with a pure idempotent coefficient.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::Element;
use crate::module::TypeDModule;

struct Graph {
    outgoing: Vec<BTreeMap<usize, Element>>,
    incoming: Vec<BTreeMap<usize, Element>>,
    alive: Vec<bool>,
}

impl Graph {
    fn new(module: &TypeDModule) -> Self {
        let n = module.len();
        let mut graph =
            Graph { outgoing: vec![BTreeMap::new(); n], incoming: vec![BTreeMap::new(); n], alive: vec![true; n] };
        for (&(from, to), &c) in &module.delta {
            graph.add(from, to, c);
        }
        graph
    }

    fn add(&mut self, from: usize, to: usize, c: Element) {
        if c.is_zero() {
            return;
        }
        let slot = self.outgoing[from].entry(to).or_default();
        *slot += c;
        if slot.is_zero() {
            self.outgoing[from].remove(&to);
            self.incoming[to].remove(&from);
        } else {
            self.incoming[to].insert(from, *slot);
        }
    }

    fn is_cancellable(&self, module: &TypeDModule, from: usize, to: usize, c: Element) -> bool {
        from != to && c == module.generators[from].idempotent.basis().into()
    }

    fn candidates(&self, module: &TypeDModule) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (from, edges) in self.outgoing.iter().enumerate() {
            for (&to, &c) in edges {
                if self.is_cancellable(module, from, to, c) {
                    out.push((from, to));
                }
            }
        }
        out
    }

    fn first_candidate(&self, module: &TypeDModule) -> Option<(usize, usize)> {
        self.outgoing.iter().enumerate().find_map(|(from, edges)| {
            edges.iter().find(|(&to, &c)| self.is_cancellable(module, from, to, c)).map(|(&to, _)| (from, to))
        })
    }

    /// Cancels `x → y`: every `w → y` and `x → z` give `w → z` with the product.
    fn cancel(&mut self, x: usize, y: usize) {
        let into_y: Vec<(usize, Element)> =
            self.incoming[y].iter().filter(|(&w, _)| w != x && w != y).map(|(&w, &a)| (w, a)).collect();
        let from_x: Vec<(usize, Element)> =
            self.outgoing[x].iter().filter(|(&z, _)| z != x && z != y).map(|(&z, &b)| (z, b)).collect();
        for &v in &[x, y] {
            for (to, _) in std::mem::take(&mut self.outgoing[v]) {
                self.incoming[to].remove(&v);
            }
            for (from, _) in std::mem::take(&mut self.incoming[v]) {
                self.outgoing[from].remove(&v);
            }
            self.alive[v] = false;
        }
        for &(w, a) in &into_y {
            for &(z, b) in &from_x {
                self.add(w, z, a * b);
            }
        }
    }

    fn into_module(self, module: &TypeDModule) -> TypeDModule {
        let mut index = vec![usize::MAX; module.len()];
        let mut generators = Vec::new();
        for (n, g) in module.generators.iter().enumerate() {
            if self.alive[n] {
                index[n] = generators.len();
                generators.push(g.clone());
            }
        }
        let mut out = TypeDModule::new(generators);
        for (from, edges) in self.outgoing.iter().enumerate() {
            for (&to, &c) in edges {
                out.add_entry(index[from], index[to], c);
            }
        }
        out
    }
}

/// Cancels idempotent entries in order of `(from, to)` until none remain.
pub fn simplify(module: &TypeDModule) -> TypeDModule {
    let mut graph = Graph::new(module);
    while let Some((x, y)) = graph.first_candidate(module) {
        graph.cancel(x, y);
    }
    graph.into_module(module)
}

/// Cancels idempotent entries in a random order.
pub fn simplify_with<R: Rng + ?Sized>(module: &TypeDModule, rng: &mut R) -> TypeDModule {
    let mut graph = Graph::new(module);
    loop {
        let candidates = graph.candidates(module);
        let Some(&(x, y)) = candidates.choose(rng) else { break };
        graph.cancel(x, y);
    }
    graph.into_module(module)
}
