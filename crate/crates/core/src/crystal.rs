//! Generic crystal engine: signature rule, closure into an explicit graph,
//! raising paths, decompositions and (twisted) isomorphism search.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::cartan::{ClassicalType, Weight};
use crate::tableaux::{self, Letter, SpinWord, Tableau};

pub const NONE: u32 = u32::MAX;
pub const DEFAULT_VERTEX_BOUND: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    E,
    F,
}

/// Outcome of the signature rule on a tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: u32,
    pub phi: u32,
    pub e_pos: Option<usize>,
    pub f_pos: Option<usize>,
}

impl Signature {
    pub fn reduced(&self) -> String {
        let mut s = String::new();
        for _ in 0..self.eps {
            s.push('-');
        }
        for _ in 0..self.phi {
            s.push('+');
        }
        s
    }
}

/// Each factor contributes `-^ε +^φ`; adjacent `+-` pairs cancel. e acts on
/// the rightmost surviving `-`, f on the leftmost surviving `+`.
pub fn tensor_signature(factors: &[(u32, u32)]) -> Signature {
    let mut open_plus: Vec<usize> = Vec::new();
    let mut minus_count = 0u32;
    let mut last_minus = None;
    for (k, &(eps, phi)) in factors.iter().enumerate() {
        for _ in 0..eps {
            if open_plus.pop().is_none() {
                minus_count += 1;
                last_minus = Some(k);
            }
        }
        for _ in 0..phi {
            open_plus.push(k);
        }
    }
    Signature {
        eps: minus_count,
        phi: open_plus.len() as u32,
        e_pos: last_minus,
        f_pos: open_plus.first().copied(),
    }
}

/// The realizations a vertex can carry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Tableau(Tableau),
    Word(Vec<Letter>),
    Spin(Vec<SpinWord>),
    /// A vertex of an ambient graph.
    Ambient(u32),
}

/// Operator rules used by `generate_closure`.
pub trait Rules {
    fn step(&self, x: &Element, color: u8, dir: Direction) -> Option<Element>;
    fn label(&self, x: &Element) -> String;
}

/// Classical operators on tableaux, letter words and spin tensors.
#[derive(Clone, Copy, Debug)]
pub struct ClassicalRules {
    pub t: ClassicalType,
    pub n: usize,
}

impl ClassicalRules {
    pub fn eps_phi(&self, x: &Element, i: usize) -> (u32, u32) {
        match x {
            Element::Tableau(tab) => tableaux::tableau_eps_phi(self.t, self.n, i, tab),
            Element::Word(w) => {
                let fs: Vec<_> = w
                    .iter()
                    .map(|&a| {
                        (
                            tableaux::letter_eps(self.t, self.n, i, a),
                            tableaux::letter_phi(self.t, self.n, i, a),
                        )
                    })
                    .collect();
                let s = tensor_signature(&fs);
                (s.eps, s.phi)
            }
            Element::Spin(ws) => {
                let s = tensor_signature(&spin_factors(self.t, self.n, i, ws));
                (s.eps, s.phi)
            }
            Element::Ambient(_) => (0, 0),
        }
    }
}

fn spin_factors(t: ClassicalType, n: usize, i: usize, ws: &[SpinWord]) -> Vec<(u32, u32)> {
    ws.iter()
        .map(|&w| {
            (
                tableaux::spin_e(t, n, i, w).is_some() as u32,
                tableaux::spin_f(t, n, i, w).is_some() as u32,
            )
        })
        .collect()
}

impl Rules for ClassicalRules {
    fn step(&self, x: &Element, color: u8, dir: Direction) -> Option<Element> {
        let (t, n, i) = (self.t, self.n, color as usize);
        if i == 0 || i > crate::cartan::rank(t, n) {
            return None;
        }
        match x {
            Element::Tableau(tab) => tableaux::tableau_step(t, n, i, tab, dir).map(Element::Tableau),
            Element::Word(w) => {
                let fs: Vec<_> = w
                    .iter()
                    .map(|&a| (tableaux::letter_eps(t, n, i, a), tableaux::letter_phi(t, n, i, a)))
                    .collect();
                let s = tensor_signature(&fs);
                let mut out = w.clone();
                match dir {
                    Direction::E => {
                        let k = s.e_pos?;
                        out[k] = tableaux::letter_e(t, n, i, w[k])?;
                    }
                    Direction::F => {
                        let k = s.f_pos?;
                        out[k] = tableaux::letter_f(t, n, i, w[k])?;
                    }
                }
                Some(Element::Word(out))
            }
            Element::Spin(ws) => {
                let s = tensor_signature(&spin_factors(t, n, i, ws));
                let mut out = ws.clone();
                match dir {
                    Direction::E => {
                        let k = s.e_pos?;
                        out[k] = tableaux::spin_e(t, n, i, ws[k])?;
                    }
                    Direction::F => {
                        let k = s.f_pos?;
                        out[k] = tableaux::spin_f(t, n, i, ws[k])?;
                    }
                }
                Some(Element::Spin(out))
            }
            Element::Ambient(_) => None,
        }
    }

    fn label(&self, x: &Element) -> String {
        element_label(x, self.n, None)
    }
}

/// Canonical text of an element; ambient vertices use the ambient label.
pub fn element_label(x: &Element, n: usize, ambient: Option<&CrystalGraph>) -> String {
    match x {
        Element::Tableau(t) => t.label(n),
        Element::Word(w) => {
            w.iter().map(|a| alloc::format!("{}", a.0)).collect::<Vec<_>>().join(",")
        }
        Element::Spin(ws) => ws.iter().map(|w| w.signs(n)).collect::<Vec<_>>().join("|"),
        Element::Ambient(v) => match ambient {
            Some(g) => g.label(*v).into(),
            None => alloc::format!("@{v}"),
        },
    }
}

/// Stepped operators on an ambient graph: color c acts as the listed
/// ambient colors in order, each repeated its multiplicity.
#[derive(Clone, Debug)]
pub struct SteppedRules {
    pub ambient: Arc<CrystalGraph>,
    pub steps: Vec<Vec<(u8, u32)>>,
}

impl SteppedRules {
    pub fn apply(&self, v: u32, color: u8, dir: Direction) -> Option<u32> {
        let seq = self.steps.get(color as usize)?;
        if seq.is_empty() {
            return None;
        }
        let mut cur = v;
        let run = |c: u8, m: u32, cur: &mut u32| -> Option<()> {
            for _ in 0..m {
                *cur = match dir {
                    Direction::F => self.ambient.f(*cur, c)?,
                    Direction::E => self.ambient.e(*cur, c)?,
                };
            }
            Some(())
        };
        match dir {
            Direction::F => {
                for &(c, m) in seq {
                    run(c, m, &mut cur)?;
                }
            }
            Direction::E => {
                for &(c, m) in seq.iter().rev() {
                    run(c, m, &mut cur)?;
                }
            }
        }
        Some(cur)
    }
}

impl Rules for SteppedRules {
    fn step(&self, x: &Element, color: u8, dir: Direction) -> Option<Element> {
        match x {
            Element::Ambient(v) => self.apply(*v, color, dir).map(Element::Ambient),
            _ => None,
        }
    }

    fn label(&self, x: &Element) -> String {
        element_label(x, 0, Some(&self.ambient))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexBound(usize),
    NotInjective { color: u8, vertex: u32 },
    BadEdge,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexBound(b) => write!(f, "closure exceeded {b} vertices"),
            GraphError::NotInjective { color, vertex } => {
                write!(f, "color {color} arrows not injective at vertex {vertex}")
            }
            GraphError::BadEdge => f.write_str("edge endpoint out of range"),
        }
    }
}

/// A finite crystal graph with colored arrows `v -> f_i(v)`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    colors: Vec<u8>,
    width: usize,
    elements: Vec<Element>,
    labels: Vec<String>,
    weights: Vec<Weight>,
    fwd: Vec<u32>,
    bwd: Vec<u32>,
    index: HashMap<Element, u32>,
}

impl CrystalGraph {
    /// Graph from explicit data; `edges` are (src, color, dst).
    pub fn from_parts(
        colors: Vec<u8>,
        elements: Vec<Element>,
        labels: Vec<String>,
        weights: Vec<Weight>,
        edges: &[(u32, u8, u32)],
    ) -> Result<Self, GraphError> {
        let width = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let nv = labels.len();
        let mut g = CrystalGraph {
            colors,
            width,
            index: HashMap::new(),
            elements,
            labels,
            weights,
            fwd: vec![NONE; nv * width],
            bwd: vec![NONE; nv * width],
        };
        for (k, x) in g.elements.iter().enumerate() {
            g.index.insert(x.clone(), k as u32);
        }
        for &(a, c, b) in edges {
            if a as usize >= nv || b as usize >= nv || c as usize >= width {
                return Err(GraphError::BadEdge);
            }
            g.set_edge(a, c, b)?;
        }
        Ok(g)
    }

    fn set_edge(&mut self, a: u32, c: u8, b: u32) -> Result<(), GraphError> {
        let ka = a as usize * self.width + c as usize;
        let kb = b as usize * self.width + c as usize;
        if self.fwd[ka] != NONE && self.fwd[ka] != b {
            return Err(GraphError::NotInjective { color: c, vertex: a });
        }
        if self.bwd[kb] != NONE && self.bwd[kb] != a {
            return Err(GraphError::NotInjective { color: c, vertex: b });
        }
        self.fwd[ka] = b;
        self.bwd[kb] = a;
        Ok(())
    }

    /// Adds (or replaces) all arrows of one color from a table `v -> f(v)`.
    pub fn set_color(&mut self, color: u8, f: &[Option<u32>]) -> Result<(), GraphError> {
        if color as usize >= self.width {
            let new_width = color as usize + 1;
            let nv = self.len();
            let mut fwd = vec![NONE; nv * new_width];
            let mut bwd = vec![NONE; nv * new_width];
            for v in 0..nv {
                for c in 0..self.width {
                    fwd[v * new_width + c] = self.fwd[v * self.width + c];
                    bwd[v * new_width + c] = self.bwd[v * self.width + c];
                }
            }
            self.fwd = fwd;
            self.bwd = bwd;
            self.width = new_width;
        }
        for v in 0..self.len() {
            self.fwd[v * self.width + color as usize] = NONE;
            self.bwd[v * self.width + color as usize] = NONE;
        }
        for (v, t) in f.iter().enumerate() {
            if let Some(w) = t {
                if *w as usize >= self.len() {
                    return Err(GraphError::BadEdge);
                }
                self.set_edge(v as u32, color, *w)?;
            }
        }
        if !self.colors.contains(&color) {
            self.colors.push(color);
            self.colors.sort_unstable();
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn element(&self, v: u32) -> &Element {
        &self.elements[v as usize]
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn weight(&self, v: u32) -> &Weight {
        &self.weights[v as usize]
    }

    pub fn find(&self, x: &Element) -> Option<u32> {
        self.index.get(x).copied()
    }

    pub fn find_label(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|k| k as u32)
    }

    pub fn f(&self, v: u32, c: u8) -> Option<u32> {
        if c as usize >= self.width {
            return None;
        }
        let w = self.fwd[v as usize * self.width + c as usize];
        (w != NONE).then_some(w)
    }

    pub fn e(&self, v: u32, c: u8) -> Option<u32> {
        if c as usize >= self.width {
            return None;
        }
        let w = self.bwd[v as usize * self.width + c as usize];
        (w != NONE).then_some(w)
    }

    pub fn step(&self, v: u32, c: u8, dir: Direction) -> Option<u32> {
        match dir {
            Direction::E => self.e(v, c),
            Direction::F => self.f(v, c),
        }
    }

    pub fn eps(&self, mut v: u32, c: u8) -> u32 {
        let mut k = 0;
        while let Some(w) = self.e(v, c) {
            v = w;
            k += 1;
        }
        k
    }

    pub fn phi(&self, mut v: u32, c: u8) -> u32 {
        let mut k = 0;
        while let Some(w) = self.f(v, c) {
            v = w;
            k += 1;
        }
        k
    }

    /// Applies f_{c_1} f_{c_2} … f_{c_k}, i.e. the last color first.
    pub fn f_string(&self, mut v: u32, colors: &[u8]) -> Option<u32> {
        for &c in colors.iter().rev() {
            v = self.f(v, c)?;
        }
        Some(v)
    }

    pub fn is_highest(&self, v: u32, colors: &[u8]) -> bool {
        colors.iter().all(|&c| self.e(v, c).is_none())
    }

    pub fn is_lowest(&self, v: u32, colors: &[u8]) -> bool {
        colors.iter().all(|&c| self.f(v, c).is_none())
    }

    /// All arrows as (src, color, dst), sorted.
    pub fn edges(&self) -> Vec<(u32, u8, u32)> {
        let mut out = Vec::new();
        for v in 0..self.len() as u32 {
            for &c in &self.colors {
                if let Some(w) = self.f(v, c) {
                    out.push((v, c, w));
                }
            }
        }
        out
    }

    /// Deletes one arrow; used by fault-injection tests.
    pub fn remove_edge(&mut self, a: u32, c: u8) {
        if let Some(b) = self.f(a, c) {
            self.fwd[a as usize * self.width + c as usize] = NONE;
            self.bwd[b as usize * self.width + c as usize] = NONE;
        }
    }

    /// Points the arrow out of `a` at `b` instead; the old target keeps a
    /// dangling back-pointer so the damage is visible to local checks.
    pub fn redirect_edge(&mut self, a: u32, c: u8, b: u32) {
        self.fwd[a as usize * self.width + c as usize] = b;
    }

    pub fn set_weight(&mut self, v: u32, w: Weight) {
        self.weights[v as usize] = w;
    }

    /// Same graph with every color relabeled by `tau` (indexed by color).
    pub fn relabeled(&self, tau: &[u8]) -> CrystalGraph {
        let edges: Vec<_> = self.edges().into_iter().map(|(a, c, b)| (a, tau[c as usize], b)).collect();
        let colors = self.colors.iter().map(|&c| tau[c as usize]).collect::<Vec<_>>();
        let mut colors_sorted = colors;
        colors_sorted.sort_unstable();
        CrystalGraph::from_parts(
            colors_sorted,
            self.elements.clone(),
            self.labels.clone(),
            self.weights.clone(),
            &edges,
        )
        .expect("relabeling keeps the graph valid")
    }
}

/// BFS closure of the seeds. Seeds are ordered by label and vertices are
/// numbered in discovery order; each vertex tries colors ascending, f then e.
/// `roots[c]` is the weight lost along a c-arrow.
pub fn generate_closure(
    rules: &dyn Rules,
    seeds: Vec<(Element, Weight)>,
    colors: &[u8],
    roots: &[Weight],
    bound: usize,
) -> Result<CrystalGraph, GraphError> {
    let mut seeds: Vec<(String, Element, Weight)> =
        seeds.into_iter().map(|(x, w)| (rules.label(&x), x, w)).collect();
    seeds.sort_by(|a, b| a.0.cmp(&b.0));
    let mut index: HashMap<Element, u32> = HashMap::new();
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();
    let mut colors = colors.to_vec();
    colors.sort_unstable();
    let mut add = |x: Element,
                   label: String,
                   w: Weight,
                   elements: &mut Vec<Element>,
                   labels: &mut Vec<String>,
                   weights: &mut Vec<Weight>,
                   queue: &mut VecDeque<u32>|
     -> Result<u32, GraphError> {
        if let Some(&k) = index.get(&x) {
            return Ok(k);
        }
        let k = elements.len() as u32;
        if k as usize >= bound {
            return Err(GraphError::VertexBound(bound));
        }
        index.insert(x.clone(), k);
        elements.push(x);
        labels.push(label);
        weights.push(w);
        queue.push_back(k);
        Ok(k)
    };
    for (label, x, w) in seeds {
        add(x, label, w, &mut elements, &mut labels, &mut weights, &mut queue)?;
        while let Some(v) = queue.pop_front() {
            for &c in &colors {
                for dir in [Direction::F, Direction::E] {
                    let x = elements[v as usize].clone();
                    if let Some(y) = rules.step(&x, c, dir) {
                        let wt = match dir {
                            Direction::F => weights[v as usize].sub(&roots[c as usize]),
                            Direction::E => weights[v as usize].add(&roots[c as usize]),
                        };
                        let label = rules.label(&y);
                        let k = add(y, label, wt, &mut elements, &mut labels, &mut weights, &mut queue)?;
                        match dir {
                            Direction::F => edges.push((v, c, k)),
                            Direction::E => edges.push((k, c, v)),
                        }
                    }
                }
            }
        }
    }
    CrystalGraph::from_parts(colors, elements, labels, weights, &edges)
}

/// Raises with the smallest applicable color until J-highest. Returns the
/// highest vertex and the colors used in order, so that
/// `v = g.f_string(h, &path)`.
pub fn raise_to_highest(g: &CrystalGraph, mut v: u32, colors: &[u8]) -> (u32, Vec<u8>) {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    let mut path = Vec::new();
    'outer: loop {
        for &c in &sorted {
            if let Some(w) = g.e(v, c) {
                v = w;
                path.push(c);
                continue 'outer;
            }
        }
        return (v, path);
    }
}

/// Component index per vertex for arrows with colors in J; components are
/// numbered by smallest vertex.
pub fn components(g: &CrystalGraph, colors: &[u8]) -> Vec<u32> {
    let mut comp = vec![NONE; g.len()];
    let mut next = 0u32;
    let mut stack = Vec::new();
    for start in 0..g.len() as u32 {
        if comp[start as usize] != NONE {
            continue;
        }
        comp[start as usize] = next;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &c in colors {
                for w in [g.f(v, c), g.e(v, c)].into_iter().flatten() {
                    if comp[w as usize] == NONE {
                        comp[w as usize] = next;
                        stack.push(w);
                    }
                }
            }
        }
        next += 1;
    }
    comp
}

/// J-highest vertices.
pub fn highest_vertices(g: &CrystalGraph, colors: &[u8]) -> Vec<u32> {
    (0..g.len() as u32).filter(|&v| g.is_highest(v, colors)).collect()
}

/// Labels (φ_c for c in `order`) of all J-highest vertices, J = `order`,
/// sorted in decreasing order.
pub fn decomposition(g: &CrystalGraph, order: &[u8]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = highest_vertices(g, order)
        .into_iter()
        .map(|v| order.iter().map(|&c| g.phi(v, c)).collect())
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn profile(g: &CrystalGraph, v: u32, colors: &[u8]) -> Vec<(u32, u32)> {
    colors.iter().map(|&c| (g.eps(v, c), g.phi(v, c))).collect()
}

/// A bijection `m` with `m(f_c v) = f_{τ(c)} m(v)` for all colors c of g1,
/// or `None`. `tau` is indexed by g1's colors.
pub fn crystal_isomorphism(g1: &CrystalGraph, g2: &CrystalGraph, tau: &[u8]) -> Option<Vec<u32>> {
    if g1.len() != g2.len() {
        return None;
    }
    let c1: Vec<u8> = g1.colors().to_vec();
    let c2: Vec<u8> = c1.iter().map(|&c| tau[c as usize]).collect();
    let prof2: Vec<Vec<(u32, u32)>> = (0..g2.len() as u32).map(|v| profile(g2, v, &c2)).collect();
    let mut by_profile: HashMap<&Vec<(u32, u32)>, Vec<u32>> = HashMap::new();
    for (v, p) in prof2.iter().enumerate() {
        by_profile.entry(p).or_default().push(v as u32);
    }
    let comp = components(g1, &c1);
    let mut map = vec![NONE; g1.len()];
    let mut used = vec![false; g2.len()];
    let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
    for k in 0..ncomp {
        let members: Vec<u32> = (0..g1.len() as u32).filter(|&v| comp[v as usize] == k).collect();
        // Start from the member whose profile is rarest on the other side.
        let start = *members.iter().min_by_key(|&&v| {
            by_profile.get(&profile(g1, v, &c1)).map_or(0, |l| l.len())
        })?;
        let candidates = by_profile.get(&profile(g1, start, &c1))?.clone();
        let mut found = false;
        for cand in candidates {
            if used[cand as usize] {
                continue;
            }
            if let Some(assigned) = propagate(g1, g2, &c1, tau, start, cand, &map, &used) {
                if assigned.len() != members.len() {
                    continue;
                }
                for (a, b) in assigned {
                    map[a as usize] = b;
                    used[b as usize] = true;
                }
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    Some(map)
}

#[allow(clippy::too_many_arguments)]
fn propagate(
    g1: &CrystalGraph,
    g2: &CrystalGraph,
    colors: &[u8],
    tau: &[u8],
    start: u32,
    cand: u32,
    map: &[u32],
    used: &[bool],
) -> Option<Vec<(u32, u32)>> {
    let mut local: HashMap<u32, u32> = HashMap::new();
    let mut taken: HashMap<u32, u32> = HashMap::new();
    local.insert(start, cand);
    taken.insert(cand, start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let w = local[&v];
        for &c in colors {
            let d = tau[c as usize];
            for dir in [Direction::F, Direction::E] {
                let a = g1.step(v, c, dir);
                let b = g2.step(w, d, dir);
                match (a, b) {
                    (None, None) => {}
                    (Some(a), Some(b)) => {
                        if let Some(&prev) = local.get(&a) {
                            if prev != b {
                                return None;
                            }
                            continue;
                        }
                        if used[b as usize] || taken.contains_key(&b) || map[a as usize] != NONE {
                            return None;
                        }
                        local.insert(a, b);
                        taken.insert(b, a);
                        queue.push_back(a);
                    }
                    _ => return None,
                }
            }
        }
    }
    let mut out: Vec<(u32, u32)> = local.into_iter().collect();
    out.sort_unstable();
    Some(out)
}

/// σ with σ(f_c b) = f_{τ(c)} σ(b), where `tau` is indexed by color.
pub fn twisted_automorphism(g: &CrystalGraph, tau: &[u8]) -> Option<Vec<u32>> {
    crystal_isomorphism(g, g, tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{classical_simple_roots, Shape};
    use crate::tableaux::highest_tableau;

    fn roots_for(t: ClassicalType, n: usize) -> Vec<Weight> {
        let mut r = vec![Weight::zero(n)];
        r.extend(classical_simple_roots(t, n).unwrap());
        r
    }

    fn classical(t: ClassicalType, n: usize, cols: Vec<usize>) -> CrystalGraph {
        let shape = Shape::from_columns(cols);
        let tab = highest_tableau(t, n, &shape).unwrap();
        let w = tab.weight(t, n);
        let colors: Vec<u8> = (1..=crate::cartan::rank(t, n) as u8).collect();
        generate_closure(
            &ClassicalRules { t, n },
            vec![(Element::Tableau(tab), w)],
            &colors,
            &roots_for(t, n),
            DEFAULT_VERTEX_BOUND,
        )
        .unwrap()
    }

    #[test]
    fn signature_example() {
        let s = tensor_signature(&[(1, 2), (1, 1), (2, 1)]);
        assert_eq!(s.reduced(), "-+");
        assert_eq!((s.e_pos, s.f_pos), (Some(0), Some(2)));
        let s = tensor_signature(&[(0, 1), (0, 1)]);
        assert_eq!(s.reduced(), "++");
        assert_eq!(s.f_pos, Some(0));
        let s = tensor_signature(&[(1, 1)]);
        assert_eq!((s.e_pos, s.f_pos), (Some(0), Some(0)));
    }

    #[test]
    fn letter_chains() {
        let g = classical(ClassicalType::C, 2, vec![1]);
        assert_eq!(g.len(), 4);
        let g = classical(ClassicalType::B, 2, vec![1]);
        assert_eq!(g.len(), 5);
        let colors: Vec<u8> = g.edges().iter().map(|e| e.1).collect();
        assert_eq!(colors.iter().filter(|&&c| c == 2).count(), 2);
    }

    #[test]
    fn empty_color_set_gives_seed() {
        let shape = Shape::from_columns(vec![1]);
        let tab = highest_tableau(ClassicalType::C, 2, &shape).unwrap();
        let g = generate_closure(
            &ClassicalRules { t: ClassicalType::C, n: 2 },
            vec![(Element::Tableau(tab), Weight::zero(2))],
            &[],
            &[],
            10,
        )
        .unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn bound_is_enforced() {
        let shape = Shape::from_columns(vec![1, 1]);
        let tab = highest_tableau(ClassicalType::C, 3, &shape).unwrap();
        let r = generate_closure(
            &ClassicalRules { t: ClassicalType::C, n: 3 },
            vec![(Element::Tableau(tab), Weight::zero(3))],
            &[1, 2, 3],
            &roots_for(ClassicalType::C, 3),
            5,
        );
        assert_eq!(r.unwrap_err(), GraphError::VertexBound(5));
    }

    #[test]
    fn raising_path_round_trip() {
        let g = classical(ClassicalType::C, 3, vec![2, 1]);
        for v in 0..g.len() as u32 {
            let (h, path) = raise_to_highest(&g, v, &[1, 2, 3]);
            assert_eq!(h, 0);
            assert_eq!(g.f_string(h, &path), Some(v));
        }
    }

    #[test]
    fn isomorphisms() {
        let g = classical(ClassicalType::C, 2, vec![1, 1]);
        let id = crystal_isomorphism(&g, &g, &[0, 1, 2]).unwrap();
        assert!(id.iter().enumerate().all(|(k, &v)| k as u32 == v));
        let g = classical(ClassicalType::C, 2, vec![1]);
        assert!(twisted_automorphism(&g, &[0, 2, 1]).is_none());
    }

    #[test]
    fn decomposition_of_tensor_square() {
        let t = ClassicalType::C;
        let w = Element::Word(vec![Letter(1), Letter(1)]);
        let g = generate_closure(
            &ClassicalRules { t, n: 2 },
            vec![(w, Weight(vec![4, 0]))],
            &[1, 2],
            &roots_for(t, 2),
            100,
        )
        .unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(decomposition(&g, &[1, 2]), vec![vec![2, 0]]);
    }
}
