//! Construction of B^{r,s} as a crystal graph with colors {0..n}, one route
//! per family.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::cartan::{
    affine_roots, kr_classical_decomposition, AffineSpec, CartanError, ClassicalType, Family,
    Shape, Weight,
};
use crate::crystal::{
    generate_closure, raise_to_highest, ClassicalRules, CrystalGraph, Element, GraphError,
    SteppedRules, DEFAULT_VERTEX_BOUND,
};
use crate::pm::{involution_s, sigma_spin_d, triple_f0, PmError, PmLookup, SignTriple};
use crate::tableaux::{highest_tableau, Letter, SpinWord, Tableau, TableauError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    Cartan(CartanError),
    Tableau(TableauError),
    Graph(GraphError),
    Pm(PmError),
    Inconsistent(&'static str),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Cartan(e) => write!(f, "{e}"),
            BuildError::Tableau(e) => write!(f, "{e}"),
            BuildError::Graph(e) => write!(f, "{e}"),
            BuildError::Pm(e) => write!(f, "{e}"),
            BuildError::Inconsistent(m) => write!(f, "construction failed: {m}"),
        }
    }
}

impl From<CartanError> for BuildError {
    fn from(e: CartanError) -> Self {
        BuildError::Cartan(e)
    }
}
impl From<TableauError> for BuildError {
    fn from(e: TableauError) -> Self {
        BuildError::Tableau(e)
    }
}
impl From<GraphError> for BuildError {
    fn from(e: GraphError) -> Self {
        BuildError::Graph(e)
    }
}
impl From<PmError> for BuildError {
    fn from(e: PmError) -> Self {
        BuildError::Pm(e)
    }
}

/// How a build sits inside its ambient crystal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// Kashiwara similarity: color i acts as ambient f_i^{m_i}.
    Similarity,
    /// σ-fixed points of A_{2n+1}^{(2)}: f_0 = f̂_0 f̂_1, f_i = f̂_{i+1}.
    Virtual,
}

#[derive(Clone, Debug)]
pub struct Ambient {
    pub build: Arc<KrBuild>,
    pub kind: Embedding,
    /// Ambient colors (with multiplicities) each color acts as.
    pub steps: Vec<Vec<(u8, u32)>>,
    /// Vertex -> ambient vertex.
    pub image: Vec<u32>,
}

impl Ambient {
    /// The multiplier m_i of a similarity embedding.
    pub fn multipliers(&self) -> Vec<u32> {
        self.steps.iter().map(|s| s.iter().map(|&(_, m)| m).sum()).collect()
    }
}

#[derive(Clone, Debug)]
pub enum Sigma {
    /// An involution of the build itself (DBA families).
    Involution(Vec<u32>),
    /// D_n^{(1)} spin nodes: σ maps onto the partner crystal B^{r',s}.
    Cross { partner: Arc<CrystalGraph>, partner_r: usize, to: Vec<u32>, from: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct KrBuild {
    pub spec: AffineSpec,
    pub graph: Arc<CrystalGraph>,
    pub ambient: Option<Ambient>,
    pub sigma: Option<Sigma>,
    /// Promotion table (type A only).
    pub promotion: Option<Vec<u32>>,
}

impl KrBuild {
    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// σ(b) for DBA builds (within the build) and the spin pair (into the partner).
    pub fn sigma_of(&self, v: u32) -> Option<u32> {
        match &self.sigma {
            Some(Sigma::Involution(t)) => t.get(v as usize).copied(),
            Some(Sigma::Cross { to, .. }) => to.get(v as usize).copied(),
            None => None,
        }
    }
}

/// Memoized builder; nested constructions reuse their ambient builds.
#[derive(Default)]
pub struct Builder {
    memo: HashMap<AffineSpec, Arc<KrBuild>>,
    virtual_memo: HashMap<AffineSpec, Arc<KrBuild>>,
    pub bound: Option<usize>,
}

impl Builder {
    pub fn new() -> Self {
        Builder::default()
    }

    fn bound(&self) -> usize {
        self.bound.unwrap_or(DEFAULT_VERTEX_BOUND)
    }

    pub fn build(&mut self, spec: AffineSpec) -> Result<Arc<KrBuild>, BuildError> {
        if let Some(b) = self.memo.get(&spec) {
            return Ok(b.clone());
        }
        let (n, r) = (spec.n, spec.r);
        let b = match spec.family {
            Family::A1 => self.build_type_a(spec)?,
            Family::D1 if r + 1 >= n => {
                let (a, b) = self.build_spin_pair(n, spec.s)?;
                let (a, b) = (Arc::new(a), Arc::new(b));
                self.memo.insert(a.spec, a.clone());
                self.memo.insert(b.spec, b.clone());
                return Ok(if r == n { a } else { b });
            }
            Family::B1 if r == n => self.build_b_spin(spec)?,
            Family::B1 | Family::D1 | Family::A2Odd => self.build_dba(spec)?,
            Family::C1 | Family::D2 if r == n => self.build_exceptional_cd(spec)?,
            Family::C1 => return self.virtual_c(spec),
            Family::A2Even | Family::D2 => self.build_doubled(spec)?,
        };
        let b = Arc::new(b);
        self.memo.insert(spec, b.clone());
        Ok(b)
    }

    fn build_type_a(&mut self, spec: AffineSpec) -> Result<KrBuild, BuildError> {
        let g = classical_graph(&spec, self.bound())?;
        let mut pr = Vec::with_capacity(g.len());
        for v in 0..g.len() as u32 {
            let Element::Tableau(t) = g.element(v) else {
                return Err(BuildError::Inconsistent("type A elements are tableaux"));
            };
            let p = promotion(t, spec.n)?;
            pr.push(g.find(&Element::Tableau(p)).ok_or(BuildError::Inconsistent("promotion leaves B^{r,s}"))?);
        }
        let mut inv = vec![u32::MAX; pr.len()];
        for (v, &w) in pr.iter().enumerate() {
            if inv[w as usize] != u32::MAX {
                return Err(BuildError::Inconsistent("promotion is not a bijection"));
            }
            inv[w as usize] = v as u32;
        }
        let f0: Vec<Option<u32>> =
            (0..g.len()).map(|v| g.f(pr[v], 1).map(|w| inv[w as usize])).collect();
        let mut g = g;
        g.set_color(0, &f0)?;
        Ok(KrBuild { spec, graph: Arc::new(g), ambient: None, sigma: None, promotion: Some(pr) })
    }

    fn build_dba(&mut self, spec: AffineSpec) -> Result<KrBuild, BuildError> {
        let t = spec.classical_type();
        let g = classical_graph(&spec, self.bound())?;
        let look = PmLookup::build(&g, t, spec.n)?;
        let branch: Vec<u8> = (2..=spec.n as u8).collect();
        let mut sigma = Vec::with_capacity(g.len());
        for v in 0..g.len() as u32 {
            let (h, path) = raise_to_highest(&g, v, &branch);
            let q = involution_s(look.diagram(h)?, spec.r, spec.s)?;
            let w = g
                .f_string(look.vertex(&q)?, &path)
                .ok_or(BuildError::Inconsistent("σ fails to lower along the raising path"))?;
            sigma.push(w);
        }
        let f0: Vec<Option<u32>> = (0..g.len())
            .map(|v| g.f(sigma[v], 1).map(|w| sigma[w as usize]))
            .collect();
        let mut g = g;
        g.set_color(0, &f0)?;
        Ok(KrBuild {
            spec,
            graph: Arc::new(g),
            ambient: None,
            sigma: Some(Sigma::Involution(sigma)),
            promotion: None,
        })
    }

    fn build_exceptional_cd(&mut self, spec: AffineSpec) -> Result<KrBuild, BuildError> {
        let t = spec.classical_type();
        let g = classical_graph(&spec, self.bound())?;
        let look = PmLookup::build(&g, t, spec.n)?;
        let branch: Vec<u8> = (2..=spec.n as u8).collect();
        let mut f0 = Vec::with_capacity(g.len());
        for v in 0..g.len() as u32 {
            let (h, path) = raise_to_highest(&g, v, &branch);
            let triple = SignTriple::from_diagram(spec.family, look.diagram(h)?)?;
            let target = match triple_f0(spec.family, spec.s, triple) {
                None => None,
                Some(t2) => {
                    let h2 = look.vertex(&t2.to_diagram(spec.family, spec.n)?)?;
                    Some(
                        g.f_string(h2, &path)
                            .ok_or(BuildError::Inconsistent("f_0 fails to lower along the raising path"))?,
                    )
                }
            };
            f0.push(target);
        }
        let mut g = g;
        g.set_color(0, &f0)?;
        Ok(KrBuild { spec, graph: Arc::new(g), ambient: None, sigma: None, promotion: None })
    }

    fn build_b_spin(&mut self, spec: AffineSpec) -> Result<KrBuild, BuildError> {
        let n = spec.n;
        let amb = self.build(AffineSpec::new(Family::A2Odd, n, n, spec.s)?)?;
        let classical: Vec<u8> = (1..=n as u8).collect();
        let seeds: Vec<u32> = (0..amb.len() as u32)
            .filter(|&v| {
                let g = &amb.graph;
                if !g.is_highest(v, &classical) {
                    return false;
                }
                // C_n labels 2k_c at c ≡ n (mod 2), c < n, and k_n at n, with
                // 2Σk_c + k_n = s once a free k_0 is allowed for even n.
                let mut cols = g.phi(v, n as u8) as usize;
                for c in 1..n as u8 {
                    let a = g.phi(v, c) as usize;
                    if !a.is_multiple_of(2) || (a > 0 && !(n - c as usize).is_multiple_of(2)) {
                        return false;
                    }
                    cols += a;
                }
                if n.is_multiple_of(2) { cols <= spec.s && (spec.s - cols).is_multiple_of(2) } else { cols == spec.s }
            })
            .collect();
        let mut steps: Vec<Vec<(u8, u32)>> = (0..n as u8).map(|c| vec![(c, 2)]).collect();
        steps.push(vec![(n as u8, 1)]);
        self.stepped(spec, amb, Embedding::Similarity, steps, seeds, halved_weight)
    }

    /// The σ-fixed virtual crystal of type C_n^{(1)}, for every r including n.
    /// For r < n this is the KR crystal itself.
    pub fn virtual_c(&mut self, spec: AffineSpec) -> Result<Arc<KrBuild>, BuildError> {
        if spec.family != Family::C1 {
            return Err(BuildError::Inconsistent("virtual crystals are of type C_n^{(1)}"));
        }
        if let Some(b) = self.virtual_memo.get(&spec) {
            return Ok(b.clone());
        }
        let b = Arc::new(self.build_virtual_c(spec)?);
        self.virtual_memo.insert(spec, b.clone());
        if spec.r < spec.n {
            self.memo.insert(spec, b.clone());
        }
        Ok(b)
    }

    fn build_virtual_c(&mut self, spec: AffineSpec) -> Result<KrBuild, BuildError> {
        let n = spec.n;
        let amb = self.build(AffineSpec::new(Family::A2Odd, n + 1, spec.r, spec.s)?)?;
        let branch: Vec<u8> = (2..=n as u8 + 1).collect();
        let seeds: Vec<u32> = (0..amb.len() as u32)
            .filter(|&v| amb.sigma_of(v) == Some(v) && amb.graph.is_highest(v, &branch))
            .collect();
        let mut steps = vec![vec![(1u8, 1u32), (0, 1)]];
        steps.extend((1..=n as u8).map(|c| vec![(c + 1, 1)]));
        let b = self.stepped(spec, amb.clone(), Embedding::Virtual, steps, seeds, |w: &Weight| {
            Some(Weight(w.0[1..].to_vec()))
        })?;
        let image = &b.ambient.as_ref().expect("stepped build").image;
        if image.iter().any(|&v| amb.sigma_of(v) != Some(v)) {
            return Err(BuildError::Inconsistent("virtual closure leaves the σ-fixed points"));
        }
        Ok(b)
    }

    fn build_doubled(&mut self, spec: AffineSpec) -> Result<KrBuild, BuildError> {
        let n = spec.n;
        let amb = self.virtual_c(AffineSpec::new(Family::C1, n, spec.r, 2 * spec.s)?)?;
        let classical: Vec<u8> = (1..=n as u8).collect();
        let seeds: Vec<u32> = (0..amb.len() as u32)
            .filter(|&v| {
                amb.graph.is_highest(v, &classical)
                    && classical.iter().all(|&c| amb.graph.phi(v, c) % 2 == 0)
            })
            .collect();
        let mn = if spec.family == Family::D2 { 1 } else { 2 };
        let mut steps = vec![vec![(0u8, 1u32)]];
        steps.extend((1..n as u8).map(|c| vec![(c, 2)]));
        steps.push(vec![(n as u8, mn)]);
        self.stepped(spec, amb, Embedding::Similarity, steps, seeds, halved_weight)
    }

    fn stepped(
        &mut self,
        spec: AffineSpec,
        amb: Arc<KrBuild>,
        kind: Embedding,
        steps: Vec<Vec<(u8, u32)>>,
        seeds: Vec<u32>,
        weight: impl Fn(&Weight) -> Option<Weight>,
    ) -> Result<KrBuild, BuildError> {
        let rules = SteppedRules { ambient: amb.graph.clone(), steps: steps.clone() };
        let roots = affine_roots(&spec);
        let mut seed_elems = Vec::new();
        for v in seeds {
            let w = weight(amb.graph.weight(v)).ok_or(BuildError::Inconsistent("odd ambient weight"))?;
            seed_elems.push((Element::Ambient(v), w));
        }
        let mut g = generate_closure(&rules, seed_elems, &spec.colors(), &roots, self.bound())?;
        let mut image = Vec::with_capacity(g.len());
        for v in 0..g.len() as u32 {
            let Element::Ambient(a) = *g.element(v) else {
                return Err(BuildError::Inconsistent("stepped vertices are ambient vertices"));
            };
            let w = weight(amb.graph.weight(a)).ok_or(BuildError::Inconsistent("odd ambient weight"))?;
            g.set_weight(v, w);
            image.push(a);
        }
        Ok(KrBuild {
            spec,
            graph: Arc::new(g),
            ambient: Some(Ambient { build: amb, kind, steps, image }),
            sigma: None,
            promotion: None,
        })
    }

    /// B^{n,s} and B^{n-1,s} of D_n^{(1)}, with σ between them.
    fn build_spin_pair(&mut self, n: usize, s: usize) -> Result<(KrBuild, KrBuild), BuildError> {
        let specs = [AffineSpec::new(Family::D1, n, n, s)?, AffineSpec::new(Family::D1, n, n - 1, s)?];
        let mut graphs = Vec::new();
        let mut looks = Vec::new();
        for spec in &specs {
            let g = classical_graph(spec, self.bound())?;
            looks.push(PmLookup::build(&g, ClassicalType::D, n)?);
            graphs.push(g);
        }
        let branch: Vec<u8> = (2..=n as u8).collect();
        let mut maps = Vec::new();
        for (a, b) in [(0usize, 1usize), (1, 0)] {
            let mut m = Vec::with_capacity(graphs[a].len());
            for v in 0..graphs[a].len() as u32 {
                let (h, path) = raise_to_highest(&graphs[a], v, &branch);
                let q = sigma_spin_d(looks[a].diagram(h)?);
                let w = graphs[b]
                    .f_string(looks[b].vertex(&q)?, &path)
                    .ok_or(BuildError::Inconsistent("σ fails to lower along the raising path"))?;
                m.push(w);
            }
            maps.push(m);
        }
        for (a, b) in [(0usize, 1usize), (1, 0)] {
            let f0: Vec<Option<u32>> = (0..graphs[a].len())
                .map(|v| graphs[b].f(maps[a][v], 1).map(|w| maps[b][w as usize]))
                .collect();
            graphs[a].set_color(0, &f0)?;
        }
        let g1 = Arc::new(graphs.pop().expect("two graphs"));
        let g0 = Arc::new(graphs.pop().expect("two graphs"));
        let (m1, m0) = (maps.pop().expect("two maps"), maps.pop().expect("two maps"));
        let a = KrBuild {
            spec: specs[0],
            graph: g0.clone(),
            ambient: None,
            sigma: Some(Sigma::Cross { partner: g1.clone(), partner_r: n - 1, to: m0.clone(), from: m1.clone() }),
            promotion: None,
        };
        let b = KrBuild {
            spec: specs[1],
            graph: g1,
            ambient: None,
            sigma: Some(Sigma::Cross { partner: g0, partner_r: n, to: m1, from: m0 }),
            promotion: None,
        };
        Ok((a, b))
    }
}

fn halved_weight(w: &Weight) -> Option<Weight> {
    w.halve()
}

/// Classical part of B^{r,s}: the union of B(Λ) over the decomposition,
/// colors {1..n}, weights computed from the elements.
pub fn classical_graph(spec: &AffineSpec, bound: usize) -> Result<CrystalGraph, BuildError> {
    let t = spec.classical_type();
    let n = spec.n;
    let rules = ClassicalRules { t, n };
    let mut seeds = Vec::new();
    if spec.family == Family::D1 && spec.r + 1 >= n {
        let w = if spec.r == n {
            SpinWord::highest(n)
        } else {
            SpinWord(SpinWord::highest(n).0 & !(1 << (n - 1)))
        };
        let x = Element::Spin(vec![w; spec.s]);
        seeds.push((x.clone(), element_weight(t, n, &x)));
    } else {
        for labels in kr_classical_decomposition(spec) {
            let shape = if t == ClassicalType::A {
                // Type A labels read as column multiplicities.
                let mut cols = Vec::new();
                for (i, &k) in labels.iter().enumerate().rev() {
                    cols.extend(core::iter::repeat_n(i + 1, k as usize));
                }
                Shape::from_columns(cols)
            } else {
                Shape::from_labels(t, n, &labels).ok_or(BuildError::Inconsistent("no shape for weight"))?
            };
            let x = Element::Tableau(highest_tableau(t, n, &shape)?);
            seeds.push((x.clone(), element_weight(t, n, &x)));
        }
    }
    let colors = spec.classical_colors();
    let g = generate_closure(&rules, seeds, &colors, &affine_roots(spec), bound)?;
    let mut g = g;
    for v in 0..g.len() as u32 {
        let w = element_weight(t, n, g.element(v));
        g.set_weight(v, w);
    }
    Ok(g)
}

/// Weight read off a tableau, letter word or spin tensor.
pub fn element_weight(t: ClassicalType, n: usize, x: &Element) -> Weight {
    match x {
        Element::Tableau(tab) => tab.weight(t, n),
        Element::Word(w) => w.iter().fold(Weight::zero(n), |acc, a| acc.add(&a.weight(n))),
        Element::Spin(ws) => ws.iter().fold(Weight::zero(n), |acc, w| acc.add(&w.weight(n))),
        Element::Ambient(_) => Weight::zero(n),
    }
}

/// Schützenberger promotion on a rectangular tableau over 1..n: drop the
/// letters n, slide the rest to the top-right corner, add one, fill with 1.
pub fn promotion(t: &Tableau, n: usize) -> Result<Tableau, BuildError> {
    let s = t.columns.len();
    let r = t.columns.first().map_or(0, |c| c.len());
    if t.spin.is_some() || t.columns.iter().any(|c| c.len() != r) {
        return Err(BuildError::Inconsistent("promotion needs a rectangle"));
    }
    // grid[i][j]: row i from the bottom, column j; 0 = settled hole, -1 = pending hole.
    let mut grid: Vec<Vec<i32>> =
        (0..r).map(|i| (0..s).map(|j| t.columns[j][i].0 as i32).collect()).collect();
    for row in grid.iter_mut() {
        for x in row.iter_mut() {
            if *x == n as i32 {
                *x = -1;
            }
        }
    }
    loop {
        let mut hole = None;
        'find: for (i, row) in grid.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == -1 {
                    hole = Some((i, j));
                    break 'find;
                }
            }
        }
        let Some((mut i, mut j)) = hole else { break };
        loop {
            let below = if i > 0 { grid[i - 1][j] } else { 0 };
            let left = if j > 0 { grid[i][j - 1] } else { 0 };
            if below <= 0 && left <= 0 {
                grid[i][j] = 0;
                break;
            }
            if below >= left {
                grid[i][j] = below;
                i -= 1;
            } else {
                grid[i][j] = left;
                j -= 1;
            }
        }
    }
    let columns = (0..s)
        .map(|j| (0..r).map(|i| Letter::plain(grid[i][j] as usize + 1)).collect())
        .collect();
    Ok(Tableau { columns, spin: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> Tableau {
        Tableau::parse(s).unwrap()
    }

    #[test]
    fn promotion_single_box() {
        assert_eq!(promotion(&tab("1"), 3).unwrap(), tab("2"));
        assert_eq!(promotion(&tab("3"), 3).unwrap(), tab("1"));
    }

    #[test]
    fn promotion_order_n() {
        let mut t = tab("1,3|2,4");
        for _ in 0..4 {
            t = promotion(&t, 4).unwrap();
        }
        assert_eq!(t, tab("1,3|2,4"));
    }

    #[test]
    fn e0_type_a() {
        let mut b = Builder::new();
        let k = b.build(AffineSpec::new(Family::A1, 3, 1, 1).unwrap()).unwrap();
        let one = k.graph.find_label("1").unwrap();
        assert_eq!(k.graph.label(k.graph.e(one, 0).unwrap()), "3");
    }

    #[test]
    fn small_sizes() {
        let mut b = Builder::new();
        let size = |b: &mut Builder, f, n, r, s| b.build(AffineSpec::new(f, n, r, s).unwrap()).unwrap().len();
        assert_eq!(size(&mut b, Family::C1, 2, 1, 1), 4);
        assert_eq!(size(&mut b, Family::C1, 2, 1, 2), 11);
        assert_eq!(size(&mut b, Family::A2Even, 2, 1, 1), 5);
        assert_eq!(size(&mut b, Family::D2, 2, 1, 1), 6);
        assert_eq!(size(&mut b, Family::D1, 4, 4, 1), 8);
    }
}
